#include "orbitrace/chaincx.hpp"

#include "orbitrace/errors.hpp"

namespace orbitrace {

BasedComplex::BasedComplex(OraclePtr oracle, int min_degree, std::vector<std::size_t> ranks,
                           std::vector<GroupRingMatrix> boundaries)
    : oracle_(std::move(oracle)), min_degree_(min_degree), ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries))
{
  if (ranks_.empty())
    throw InvalidInput("complex needs at least one degree");
  if (boundaries_.size() + 1 != ranks_.size())
    throw DimensionMismatch("expected one boundary matrix per adjacent degree pair");
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    const auto& d = boundaries_[i];
    if (d.oracle() != oracle_)
      throw OracleMismatch("boundary over a different oracle");
    if (d.rows() != ranks_[i] || d.cols() != ranks_[i + 1])
      throw DimensionMismatch("boundary matrix shape does not match ranks");
    if (i > 0 && !(boundaries_[i - 1] * d).is_zero())
      throw InvalidInput("boundary composite is nonzero");
  }
  for (auto r : ranks_)
    total_ += r;
}

std::size_t BasedComplex::rank(int k) const
{
  if (k < min_degree_ || k > max_degree())
    return 0;
  return ranks_[static_cast<std::size_t>(k - min_degree_)];
}

std::size_t BasedComplex::offset(int k) const
{
  std::size_t off = 0;
  for (int j = min_degree_; j < k && j <= max_degree(); ++j)
    off += rank(j);
  return off;
}

const GroupRingMatrix& BasedComplex::boundary(int k) const
{
  if (k <= min_degree_ || k > max_degree())
    throw DimensionMismatch("no boundary out of degree " + std::to_string(k));
  return boundaries_[static_cast<std::size_t>(k - min_degree_ - 1)];
}

GroupRingMatrix BasedComplex::total_boundary() const
{
  GroupRingMatrix out(oracle_, total_, total_);
  for (int k = min_degree_ + 1; k <= max_degree(); ++k)
    out.set_block(offset(k - 1), offset(k), boundary(k));
  return out;
}

GroupRingMatrix BasedComplex::grading() const
{
  GroupRingMatrix out(oracle_, total_, total_);
  for (int k = min_degree_; k <= max_degree(); ++k)
    for (std::size_t i = 0; i < rank(k); ++i)
      out(offset(k) + i, offset(k) + i) =
          GroupRingElement::monomial(oracle_, Word(), k % 2 == 0 ? 1 : -1);
  return out;
}

std::vector<int> BasedComplex::degrees() const
{
  std::vector<int> out;
  for (int k = min_degree_; k <= max_degree(); ++k)
    out.insert(out.end(), rank(k), k);
  return out;
}

Homotopy::Homotopy(std::vector<GroupRingMatrix> maps, Word eta)
    : maps_(std::move(maps)), eta_(std::move(eta))
{
}

Homotopy Homotopy::zero(const BasedComplex& c, const Word& eta)
{
  std::vector<GroupRingMatrix> maps;
  for (int k = c.min_degree(); k < c.max_degree(); ++k)
    maps.emplace_back(c.oracle(), c.rank(k + 1), c.rank(k));
  return Homotopy(std::move(maps), eta);
}

GroupRingMatrix Homotopy::folded(const BasedComplex& c) const
{
  if (maps_.size() + 1 != static_cast<std::size_t>(c.max_degree() - c.min_degree() + 1))
    throw DimensionMismatch("homotopy has the wrong number of maps");
  GroupRingMatrix out(c.oracle(), c.total_rank(), c.total_rank());
  for (int k = c.min_degree(); k < c.max_degree(); ++k) {
    const auto& D = maps_[static_cast<std::size_t>(k - c.min_degree())];
    if (D.rows() != c.rank(k + 1) || D.cols() != c.rank(k))
      throw DimensionMismatch("homotopy map shape does not match ranks");
    out.set_block(c.offset(k + 1), c.offset(k), Integer((k + 1) % 2 == 0 ? 1 : -1) * D);
  }
  return out;
}

bool verify_homotopy(const BasedComplex& c, const Homotopy& h)
{
  const auto d = c.total_boundary();
  const auto D = h.folded(c);
  const auto lhs = D * d - d * D;
  const auto factor = GroupRingElement::one(c.oracle()) -
                      GroupRingElement::monomial(c.oracle(), h.eta().inverse());
  return lhs == c.grading().times_right(factor);
}

Chain1 x1_trace(const BasedComplex& c, const Homotopy& h)
{
  if (!verify_homotopy(c, h))
    throw InvalidInput("homotopy relation fails");
  return trace_T1(c.total_boundary(), h.folded(c));
}

Chain1 x1_filtered(const std::vector<ChainLevel>& levels)
{
  if (levels.empty())
    throw InvalidInput("no filtration levels");
  const auto& oracle = levels.front().complex.oracle();
  const Word eta = oracle->normalize(levels.front().homotopy.eta());
  Chain1 out(oracle);
  for (const auto& lvl : levels) {
    if (!(oracle->normalize(lvl.homotopy.eta()) == eta))
      throw InvalidInput("filtration levels carry different translation elements");
    out += x1_trace(lvl.complex, lvl.homotopy);
  }
  return out;
}

namespace {

/// Inverse of a diagonal matrix of signed words; throws InvalidInput otherwise.
GroupRingMatrix diagonal_inverse(const GroupRingMatrix& U)
{
  if (U.rows() != U.cols())
    throw InvalidInput("change of basis matrix must be square");
  GroupRingMatrix out(U.oracle(), U.rows(), U.cols());
  for (std::size_t i = 0; i < U.rows(); ++i)
    for (std::size_t j = 0; j < U.cols(); ++j) {
      const auto& e = U(i, j);
      if (i != j) {
        if (!e.is_zero())
          throw InvalidInput("change of basis matrix must be diagonal");
        continue;
      }
      if (e.terms().size() != 1 || abs(e.terms().begin()->second) != 1)
        throw InvalidInput("diagonal entries must be signed group elements");
      const auto& [w, s] = *e.terms().begin();
      out(i, i) = GroupRingElement::monomial(U.oracle(), w.inverse(), s);
    }
  return out;
}

}  // namespace

Rebased rebase(const BasedComplex& c, const Homotopy& h, const GroupRingMatrix& U)
{
  if (U.rows() != c.total_rank())
    throw DimensionMismatch("change of basis matrix size differs from the complex");
  const auto Uinv = diagonal_inverse(U);
  auto blk = [&](const GroupRingMatrix& M, int k) {
    return M.block(c.offset(k), c.offset(k), c.rank(k), c.rank(k));
  };

  std::vector<std::size_t> ranks;
  for (int k = c.min_degree(); k <= c.max_degree(); ++k)
    ranks.push_back(c.rank(k));
  std::vector<GroupRingMatrix> bds;
  for (int k = c.min_degree() + 1; k <= c.max_degree(); ++k)
    bds.push_back(blk(Uinv, k - 1) * c.boundary(k) * blk(U, k));
  std::vector<GroupRingMatrix> maps;
  for (int k = c.min_degree(); k < c.max_degree(); ++k)
    maps.push_back(blk(Uinv, k + 1) * h.maps()[static_cast<std::size_t>(k - c.min_degree())] *
                   blk(U, k));

  // U^-1 carries the (-1)^(k+1) degree signs of the folded homotopy.
  const Chain1 t = trace_chain(U, Integer(-1) * c.grading() * Uinv);
  Chain1 correction = t - central_action(h.eta(), t);
  return {BasedComplex(c.oracle(), c.min_degree(), std::move(ranks), std::move(bds)),
          Homotopy(std::move(maps), h.eta()), std::move(correction)};
}

Homotopy concat_homotopies(const BasedComplex& c, const Homotopy& h1, const Homotopy& h2)
{
  const auto& G = *c.oracle();
  if (!G.is_central(h1.eta()) || !G.is_central(h2.eta()))
    throw NotCentral("translation elements must be central");
  if (h1.maps().size() != h2.maps().size())
    throw DimensionMismatch("homotopies over different complexes");
  const auto shift = GroupRingElement::monomial(c.oracle(), h1.eta().inverse());
  std::vector<GroupRingMatrix> maps;
  for (std::size_t i = 0; i < h1.maps().size(); ++i)
    maps.push_back(h1.maps()[i] + h2.maps()[i].times_right(shift));
  Homotopy out(std::move(maps), G.normalize(h1.eta() * h2.eta()));
  if (!verify_homotopy(c, out))
    throw ConsistencyError("concatenated homotopy fails the homotopy relation");
  return out;
}

TorsionRep torsion_rep(const BasedComplex& c, const std::vector<GroupRingMatrix>& delta)
{
  const auto d = c.total_boundary();
  GroupRingMatrix del(c.oracle(), c.total_rank(), c.total_rank());
  if (delta.size() + 1 != static_cast<std::size_t>(c.max_degree() - c.min_degree() + 1))
    throw DimensionMismatch("contraction has the wrong number of maps");
  for (int k = c.min_degree(); k < c.max_degree(); ++k)
    del.set_block(c.offset(k + 1), c.offset(k), delta[static_cast<std::size_t>(k - c.min_degree())]);
  const auto I = GroupRingMatrix::identity(c.oracle(), c.total_rank());
  if (!(del * d + d * del == I))
    throw NotAContraction("delta d + d delta is not the identity");

  const auto dp = del * d * del;
  if (!(dp * dp).is_zero() || !((d + dp) * (d + dp) == I))
    throw ConsistencyError("modified contraction fails its identities");

  std::vector<std::size_t> even, odd;
  const auto deg = c.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i)
    (deg[i] % 2 == 0 ? even : odd).push_back(i);
  const auto M = d + dp;
  TorsionRep out{M.select(even, odd), M.select(odd, even)};
  if (!(out.V * out.Vinv == GroupRingMatrix::identity(c.oracle(), even.size())) ||
      !(out.Vinv * out.V == GroupRingMatrix::identity(c.oracle(), odd.size())))
    throw ConsistencyError("torsion representative is not invertible");
  return out;
}

}  // namespace orbitrace
