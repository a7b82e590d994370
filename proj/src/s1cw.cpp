#include "orbitrace/s1cw.hpp"

#include <algorithm>

#include "orbitrace/errors.hpp"
#include "orbitrace/seifert_data.hpp"

namespace orbitrace {

S1CWComplex::S1CWComplex(OraclePtr oracle, Word gamma0, std::vector<S1Cell> cells)
    : oracle_(std::move(oracle)), gamma0_(std::move(gamma0)), cells_(std::move(cells))
{
  if (!oracle_)
    throw InvalidInput("complex without oracle");
  std::stable_sort(cells_.begin(), cells_.end(),
                   [](const S1Cell& a, const S1Cell& b) { return a.dim < b.dim; });
}

int S1CWComplex::max_dim() const
{
  int m = -1;
  for (const auto& c : cells_)
    m = std::max(m, c.dim);
  return m;
}

bool S1CWComplex::has_fixed_point() const
{
  return std::any_of(cells_.begin(), cells_.end(), [](const S1Cell& c) { return c.isotropy == 0; });
}

std::int64_t S1CWComplex::orbit_euler_characteristic() const
{
  std::int64_t chi = 0;
  for (const auto& c : cells_)
    chi += c.dim % 2 == 0 ? 1 : -1;
  return chi;
}

ValidationReport validate(const S1CWComplex& x)
{
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const auto& G = *x.oracle();
  try {
    G.normalize(x.gamma0());
  } catch (const Error& e) {
    fail(std::string("gamma0: ") + e.what());
    return rep;
  }
  if (!G.is_central(x.gamma0()))
    fail("gamma0 " + G.format(x.gamma0()) + " is not central");
  if (x.has_fixed_point() && !G.normalize(x.gamma0()).empty())
    fail("a fixed cell is present but gamma0 is not the identity");
  for (std::size_t j = 0; j < x.cells().size(); ++j) {
    const auto& c = x.cells()[j];
    const std::string tag = "cell " + std::to_string(j) + " (dim " + std::to_string(c.dim) + ")";
    if (c.dim < 0)
      fail(tag + ": negative dimension");
    if (c.isotropy < 0) {
      fail(tag + ": negative isotropy order");
      continue;
    }
    try {
      if (c.isotropy == 0) {
        if (!G.normalize(c.word).empty())
          fail(tag + ": fixed cell must carry the identity word");
      } else if (!G.equal(c.word.pow(c.isotropy), x.gamma0())) {
        fail(tag + ": word^" + std::to_string(c.isotropy) + " differs from gamma0");
      }
    } catch (const Error& e) {
      fail(tag + ": " + e.what());
    }
  }
  return rep;
}

namespace {

void require_valid(const S1CWComplex& x)
{
  const auto rep = validate(x);
  if (!rep.ok)
    throw InvalidInput("invalid S1-CW complex: " + rep.violations.front());
}

}  // namespace

Chain1 chi_s1(const S1CWComplex& x)
{
  require_valid(x);
  Chain1 out(x.oracle());
  for (const auto& c : x.cells()) {
    const Integer sign = c.dim % 2 == 0 ? -1 : 1;
    for (std::int64_t i = 1; i <= c.isotropy; ++i)
      out.add(c.word, c.word.pow(-1 - i), sign);
  }
  return out;
}

std::vector<ChainLevel> to_chain_data(const S1CWComplex& x)
{
  require_valid(x);
  const auto& oracle = x.oracle();
  std::vector<ChainLevel> levels;
  for (int n = 0; n <= x.max_dim(); ++n) {
    std::vector<const S1Cell*> cells;
    for (const auto& c : x.cells())
      if (c.dim == n)
        cells.push_back(&c);
    if (cells.empty())
      continue;
    std::vector<std::size_t> d_index(cells.size(), 0);
    std::size_t nd = 0;
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[j]->isotropy > 0)
        d_index[j] = nd++;

    GroupRingMatrix bd(oracle, cells.size(), nd);
    GroupRingMatrix D(oracle, nd, cells.size());
    const Integer sign_n = n % 2 == 0 ? 1 : -1;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto& c = *cells[j];
      if (c.isotropy == 0)
        continue;
      const auto ginv = GroupRingElement::monomial(oracle, c.word.inverse());
      bd(j, d_index[j]) = sign_n * (ginv - GroupRingElement::one(oracle));
      D(d_index[j], j) = -sign_n * x_bracket(oracle, c.word.inverse(), c.isotropy);
    }
    BasedComplex cx(oracle, n, {cells.size(), nd}, {bd});
    Homotopy h({D}, x.gamma0());
    if (!verify_homotopy(cx, h))
      throw ConsistencyError("level " + std::to_string(n) + " fails the homotopy relation");
    levels.push_back({std::move(cx), std::move(h)});
  }
  return levels;
}

AbelianElement chi1_closed_form(const S1CWComplex& x)
{
  const auto& G = *x.oracle();
  AbelianElement value = x.has_fixed_point()
                             ? AbelianElement::zero(G.h1())
                             : Integer(-x.orbit_euler_characteristic()) * G.abelianize(x.gamma0());
  if (!(value == epsilon_star(chi_s1(x))))
    throw ConsistencyError("closed form disagrees with epsilon_star of the S1-Euler cycle");
  return value;
}

AbelianElement pd_euler(const S1CWComplex& x)
{
  if (x.has_fixed_point())
    throw FixedPointPresent("Euler class formula needs a fixed-point-free action");
  const auto& G = *x.oracle();
  AbelianElement out = AbelianElement::zero(G.h1());
  for (const auto& c : x.cells())
    out += Integer(c.dim % 2 == 0 ? 1 : -1) * G.abelianize(c.word);
  return out;
}

S1CWComplex from_seifert(const SeifertData& d)
{
  auto oracle = GroupOracle::seifert(d);
  const Word g0 = oracle->gamma0();
  std::vector<S1Cell> cells;
  cells.push_back({0, 1, g0});
  for (int j = 1; j <= static_cast<int>(d.r()); ++j)
    cells.push_back({0, oracle->fiber_order(j), oracle->fiber(j)});
  const std::int64_t edges = 2 * d.genus + d.r() + (d.is_closed() ? 0 : d.boundary);
  for (std::int64_t e = 0; e < edges; ++e)
    cells.push_back({1, 1, g0});
  cells.push_back({2, 1, g0});
  return S1CWComplex(oracle, g0, std::move(cells));
}

}  // namespace orbitrace
