#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitrace/chaincx.hpp"

namespace orbitrace {

/// Equivariant cell S^1/H x D^n. isotropy is |H|, with 0 meaning H = S^1.
struct S1Cell {
  int dim = 0;
  std::int64_t isotropy = 1;
  Word word;
};

class S1CWComplex {
 public:
  S1CWComplex(OraclePtr oracle, Word gamma0, std::vector<S1Cell> cells);

  const OraclePtr& oracle() const { return oracle_; }
  const Word& gamma0() const { return gamma0_; }
  const std::vector<S1Cell>& cells() const { return cells_; }
  int max_dim() const;
  bool has_fixed_point() const;
  /// Euler characteristic of the orbit space: sum (-1)^n #cells_n.
  std::int64_t orbit_euler_characteristic() const;

 private:
  OraclePtr oracle_;
  Word gamma0_;
  std::vector<S1Cell> cells_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const S1CWComplex& x);

/// sum_n (-1)^(n+1) sum_j sum_{i=1}^{|H_j|} g tensor g^(-1-i)
Chain1 chi_s1(const S1CWComplex& x);

/// One two-degree complex per skeleton level with its rotation homotopy.
std::vector<ChainLevel> to_chain_data(const S1CWComplex& x);

/// 0 with a fixed point, else -chi(X/S^1) {gamma0}. Throws ConsistencyError
/// if this disagrees with epsilon_star(chi_s1(x)).
AbelianElement chi1_closed_form(const S1CWComplex& x);

/// sum_n (-1)^n sum_j {g_{j,n}}; throws FixedPointPresent.
AbelianElement pd_euler(const S1CWComplex& x);

struct SeifertData;

/// Cell inventory of a Seifert fibered space over a fixed CW structure of the base.
S1CWComplex from_seifert(const SeifertData& d);

}  // namespace orbitrace
