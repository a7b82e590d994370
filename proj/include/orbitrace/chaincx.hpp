#pragma once

#include <cstddef>
#include <vector>

#include "orbitrace/hochschild.hpp"

namespace orbitrace {

/// Free right module chain complex with preferred basis, concentrated in
/// degrees [min_degree, min_degree + ranks.size()).
class BasedComplex {
 public:
  /// boundaries[i] maps degree min_degree+i+1 to min_degree+i and has shape
  /// ranks[i] x ranks[i+1]. Throws DimensionMismatch or InvalidInput if
  /// shapes disagree or a composite of boundaries is nonzero.
  BasedComplex(OraclePtr oracle, int min_degree, std::vector<std::size_t> ranks,
               std::vector<GroupRingMatrix> boundaries);

  const OraclePtr& oracle() const { return oracle_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const;
  /// Index of the first degree-k basis element in the aggregate basis.
  std::size_t offset(int k) const;
  std::size_t total_rank() const { return total_; }
  /// Boundary from degree k to degree k-1.
  const GroupRingMatrix& boundary(int k) const;

  /// Aggregate boundary over all basis elements.
  GroupRingMatrix total_boundary() const;
  /// Aggregate grading: (-1)^k on degree k.
  GroupRingMatrix grading() const;
  /// Degree of each aggregate basis element.
  std::vector<int> degrees() const;

 private:
  OraclePtr oracle_;
  int min_degree_;
  std::vector<std::size_t> ranks_;
  std::vector<GroupRingMatrix> boundaries_;
  std::size_t total_ = 0;
};

/// Chain homotopy D_k: degree k -> k+1 from the identity to right
/// multiplication by eta^-1.
class Homotopy {
 public:
  /// maps[i] goes from degree min_degree+i to min_degree+i+1.
  Homotopy(std::vector<GroupRingMatrix> maps, Word eta);

  static Homotopy zero(const BasedComplex& c, const Word& eta = Word());

  const std::vector<GroupRingMatrix>& maps() const { return maps_; }
  const Word& eta() const { return eta_; }
  /// Aggregate matrix with (-1)^(k+1) D_k in the block of degree k.
  GroupRingMatrix folded(const BasedComplex& c) const;

 private:
  std::vector<GroupRingMatrix> maps_;
  Word eta_;
};

struct ChainLevel {
  BasedComplex complex;
  Homotopy homotopy;
};

/// Whether folded(D) * d - d * folded(D) = grading * (1 - eta^-1).
bool verify_homotopy(const BasedComplex& c, const Homotopy& h);

/// T1(total boundary tensor folded homotopy); requires verify_homotopy.
Chain1 x1_trace(const BasedComplex& c, const Homotopy& h);
/// Sum of per-level traces; every level must share the same eta.
Chain1 x1_filtered(const std::vector<ChainLevel>& levels);

struct Rebased {
  BasedComplex complex;
  Homotopy homotopy;
  /// (1 - gamma) T1(U tensor U^-1) with U^-1 folded like the homotopy;
  /// x1_trace(old) - x1_trace(new) is homologous to this chain.
  Chain1 correction;
};

/// Change of basis e_i -> e_i u_i for a diagonal matrix U of signed words.
Rebased rebase(const BasedComplex& c, const Homotopy& h, const GroupRingMatrix& U);

/// Homotopy for eta1*eta2: D = D1 + D2 * eta1^-1.
Homotopy concat_homotopies(const BasedComplex& c, const Homotopy& h1, const Homotopy& h2);

struct TorsionRep {
  GroupRingMatrix V;     // odd degrees -> even degrees
  GroupRingMatrix Vinv;  // even degrees -> odd degrees
};

/// Matrix representative of the torsion of an acyclic complex from a chain
/// contraction given per degree like Homotopy::maps. Throws NotAContraction.
TorsionRep torsion_rep(const BasedComplex& c, const std::vector<GroupRingMatrix>& delta);

}  // namespace orbitrace
