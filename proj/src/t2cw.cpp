#include "orbitrace/t2cw.hpp"

#include <algorithm>

#include "orbitrace/errors.hpp"

namespace orbitrace {

T2CWComplex::T2CWComplex(OraclePtr oracle, std::vector<T2Cell> cells)
    : oracle_(std::move(oracle)), cells_(std::move(cells))
{
  if (!oracle_)
    throw InvalidInput("complex without oracle");
  std::stable_sort(cells_.begin(), cells_.end(),
                   [](const T2Cell& a, const T2Cell& b) { return a.dim < b.dim; });
}

int T2CWComplex::max_dim() const
{
  int m = -1;
  for (const auto& c : cells_)
    m = std::max(m, c.dim);
  return m;
}

namespace {

Word cell_eta(const T2Cell& c) { return c.g1.pow(c.a) * c.g2.pow(c.b); }

}  // namespace

ValidationReport validate(const T2CWComplex& x)
{
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const auto& G = *x.oracle();
  std::optional<Word> eta;
  for (std::size_t j = 0; j < x.cells().size(); ++j) {
    const auto& c = x.cells()[j];
    const std::string tag = "cell " + std::to_string(j) + " (dim " + std::to_string(c.dim) + ")";
    if (c.dim < 0)
      fail(tag + ": negative dimension");
    try {
      if (!G.equal(c.g1 * c.g2, c.g2 * c.g1))
        fail(tag + ": g1 and g2 do not commute");
      const Word e = G.normalize(cell_eta(c));
      if (!G.is_central(e))
        fail(tag + ": g1^a g2^b is not central");
      if (!eta)
        eta = e;
      else if (!(*eta == e))
        fail(tag + ": g1^a g2^b differs from the other cells");
    } catch (const Error& e) {
      fail(tag + ": " + e.what());
    }
  }
  return rep;
}

TorusRows torus_rows(const OraclePtr& oracle, std::int64_t a, std::int64_t b)
{
  const Word x1 = Word::generator(0), x2 = Word::generator(1);
  const auto r1 = x_bracket(oracle, x1.inverse(), a).times_word(x2.pow(-b));
  const auto r2 = x_bracket(oracle, x2.inverse(), b);
  return {r1, r2, -r2, r1};
}

namespace {

ChainLevel build_level(const OraclePtr& oracle, int n, const std::vector<const T2Cell*>& cells,
                       const Word& eta)
{
  const std::size_t m = cells.size();
  GroupRingMatrix d1(oracle, m, 2 * m), d2(oracle, 2 * m, m);
  GroupRingMatrix D0(oracle, 2 * m, m), D1(oracle, m, 2 * m);
  const Integer sn = n % 2 == 0 ? 1 : -1;
  const Integer s = -sn;  // (-1)^(n+1) carries the raw rows into the folded convention
  const auto one = GroupRingElement::one(oracle);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& c = *cells[j];
    const auto g1inv = GroupRingElement::monomial(oracle, c.g1.inverse());
    const auto g2inv = GroupRingElement::monomial(oracle, c.g2.inverse());
    d1(j, 2 * j) = sn * (g1inv - one);
    d1(j, 2 * j + 1) = sn * (g2inv - one);
    d2(2 * j, j) = sn * (one - g2inv);
    d2(2 * j + 1, j) = -sn * (one - g1inv);
    const auto r1 = x_bracket(oracle, c.g1.inverse(), c.a).times_word(c.g2.pow(-c.b));
    const auto r2 = x_bracket(oracle, c.g2.inverse(), c.b);
    D0(2 * j, j) = s * r1;
    D0(2 * j + 1, j) = s * r2;
    D1(j, 2 * j) = -s * r2;
    D1(j, 2 * j + 1) = s * r1;
  }
  BasedComplex cx(oracle, n, {m, 2 * m, m}, {d1, d2});
  Homotopy h({D0, D1}, eta);
  if (!verify_homotopy(cx, h))
    throw ConsistencyError("T2 level " + std::to_string(n) + " fails the homotopy relation");
  return {std::move(cx), std::move(h)};
}

}  // namespace

ChainLevel torus_matrices(const OraclePtr& oracle, std::int64_t a, std::int64_t b)
{
  if (oracle->kind() != GroupOracle::Kind::FreeAbelian || oracle->generator_count() != 2)
    throw InvalidInput("torus matrices need the FreeAbelian(2) oracle");
  const T2Cell cell{0, Word::generator(0), Word::generator(1), a, b};
  return build_level(oracle, 0, {&cell}, oracle->normalize(cell_eta(cell)));
}

std::vector<ChainLevel> t2_chain_data(const T2CWComplex& x)
{
  const auto rep = validate(x);
  if (!rep.ok)
    throw InvalidInput("invalid T2-CW complex: " + rep.violations.front());
  std::vector<ChainLevel> levels;
  if (x.cells().empty())
    return levels;
  const Word eta = x.oracle()->normalize(cell_eta(x.cells().front()));
  for (int n = 0; n <= x.max_dim(); ++n) {
    std::vector<const T2Cell*> cells;
    for (const auto& c : x.cells())
      if (c.dim == n)
        cells.push_back(&c);
    if (!cells.empty())
      levels.push_back(build_level(x.oracle(), n, cells, eta));
  }
  return levels;
}

bool level_trace_vanishes(const ChainLevel& level)
{
  return trace_chain(level.complex.total_boundary(), level.homotopy.folded(level.complex))
      .is_zero();
}

bool verify_vanishing(const T2CWComplex& x)
{
  const auto levels = t2_chain_data(x);
  return std::all_of(levels.begin(), levels.end(), level_trace_vanishes);
}

}  // namespace orbitrace
