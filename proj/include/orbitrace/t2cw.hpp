#pragma once

#include <cstdint>
#include <vector>

#include "orbitrace/chaincx.hpp"
#include "orbitrace/s1cw.hpp"

namespace orbitrace {

/// Equivariant cell T^2/H x D^n with finite H. g1, g2 are the images of the
/// standard torus generators; (a, b) is the circle direction on this cell.
struct T2Cell {
  int dim = 0;
  Word g1;
  Word g2;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

class T2CWComplex {
 public:
  T2CWComplex(OraclePtr oracle, std::vector<T2Cell> cells);

  const OraclePtr& oracle() const { return oracle_; }
  const std::vector<T2Cell>& cells() const { return cells_; }
  int max_dim() const;

 private:
  OraclePtr oracle_;
  std::vector<T2Cell> cells_;
};

/// Checks that g1, g2 commute and every cell gives the same central g1^a g2^b.
ValidationReport validate(const T2CWComplex& x);

/// Coefficients of the torus homotopy rows for the cellular
/// approximation of the (a, b) rotation, before sign folding:
/// D0(E0) = E1_1 * d0_e11 + E1_2 * d0_e12, D1(E1_1) = E2 * d1_e11, D1(E1_2) = E2 * d1_e12.
struct TorusRows {
  GroupRingElement d0_e11;
  GroupRingElement d0_e12;
  GroupRingElement d1_e11;
  GroupRingElement d1_e12;
};

TorusRows torus_rows(const OraclePtr& oracle, std::int64_t a, std::int64_t b);

/// Standard torus complex (E0, E1_1, E1_2, E2) over FreeAbelian(2) with the
/// (a, b) homotopy, eta = x1^a x2^b.
ChainLevel torus_matrices(const OraclePtr& oracle, std::int64_t a, std::int64_t b);

/// One three-degree complex per skeleton level.
std::vector<ChainLevel> t2_chain_data(const T2CWComplex& x);

/// Whether the trace chain of a level is the zero chain.
bool level_trace_vanishes(const ChainLevel& level);

/// Whether every level trace is the zero chain.
bool verify_vanishing(const T2CWComplex& x);

}  // namespace orbitrace
