#include "doctest.h"
#include "orbitrace/errors.hpp"
#include "orbitrace/hochschild.hpp"
#include "orbitrace/seifert_data.hpp"
#include "support.hpp"

using namespace orbitrace;
using testsupport::Gen;
using testsupport::gen;

namespace {

OraclePtr Z1() { return GroupOracle::free_abelian(1); }
OraclePtr trefoil() { return GroupOracle::seifert(SeifertData::bounded(0, 1, {2, 3})); }

GroupRingElement mono(const OraclePtr& G, const Word& w, Integer c = 1)
{
  return GroupRingElement::monomial(G, w, c);
}

Word x(std::int64_t e = 1) { return Word::generator(0, e); }

GroupRingMatrix m11(const GroupRingElement& e)
{
  GroupRingMatrix m(e.oracle(), 1, 1);
  m(0, 0) = e;
  return m;
}

// Solves for v with c - v * (x tensor x^(n-1)) in the rational span of
// boundaries d(x^i tensor x^j tensor x^k), i + j + k = n, |i|, |j| <= 4.
std::optional<Rational> brute_force_component(const Chain1& c, std::int64_t n)
{
  std::vector<std::pair<std::int64_t, std::int64_t>> basis;  // (u, v) exponents with u + v = n
  for (std::int64_t u = -8; u <= 8; ++u)
    basis.push_back({u, n - u});
  auto idx = [&](std::int64_t u) { return static_cast<std::size_t>(u + 8); };
  std::vector<std::vector<Rational>> cols;
  for (std::int64_t i = -4; i <= 4; ++i)
    for (std::int64_t j = -4; j <= 4; ++j) {
      Chain2 c2(c.oracle());
      c2.add(x(i), x(j), x(n - i - j), 1);
      const Chain1 b = boundary(c2);
      std::vector<Rational> col(basis.size());
      bool in_range = true;
      for (const auto& [uv, k] : b.terms()) {
        const std::int64_t u = uv.first.empty() ? 0 : uv.first.letters()[0].exp;
        if (u < -8 || u > 8) {
          in_range = false;
          break;
        }
        col[idx(u)] += Rational(k);
      }
      if (in_range)
        cols.push_back(col);
    }
  std::vector<Rational> target(basis.size()), probe(basis.size());
  for (const auto& [uv, k] : c.terms())
    target[idx(uv.first.empty() ? 0 : uv.first.letters()[0].exp)] += Rational(k);
  probe[idx(1)] = 1;
  cols.push_back(probe);
  // Gaussian elimination on [cols | target]; the probe column is last.
  const std::size_t rows = basis.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < ncols; ++k)
      M[r][k] = cols[k][r];
    M[r][ncols] = target[r];
  }
  std::size_t pr = 0;
  std::optional<std::size_t> probe_row;
  for (std::size_t k = 0; k < ncols && pr < rows; ++k) {
    std::size_t p = pr;
    while (p < rows && M[p][k] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(M[p], M[pr]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != pr && M[r][k] != 0) {
        const Rational f = M[r][k] / M[pr][k];
        for (std::size_t q = 0; q <= ncols; ++q)
          M[r][q] -= f * M[pr][q];
      }
    if (k == ncols - 1)
      probe_row = pr;
    ++pr;
  }
  for (std::size_t r = pr; r < rows; ++r)
    if (M[r][ncols] != 0)
      return std::nullopt;
  if (!probe_row)
    return Rational(0);
  return M[*probe_row][ncols] / M[*probe_row][ncols - 1];
}

}  // namespace

TEST_CASE("group ring arithmetic")
{
  auto G = Z1();
  const auto g = mono(G, x());
  const auto one = GroupRingElement::one(G);
  CHECK((g - one) * (g + one) == mono(G, x(2)) - one);
  CHECK(((one + g) * GroupRingElement::zero(G)).is_zero());
  auto T = trefoil();
  const auto g1 = mono(T, gen(*T, "g1"));
  CHECK(g1 * g1 == mono(T, gen(*T, "gamma0")));
}

TEST_CASE("augmentation and abelianization")
{
  auto G = Z1();
  const auto one = GroupRingElement::one(G);
  CHECK(augment(mono(G, x(-1)) - one) == 0);
  CHECK(augment(one + mono(G, x(-1)) + mono(G, x(-2))) == 3);
  CHECK(augment(GroupRingElement::zero(G)) == 0);
  const auto a = abelianize_A(Integer(3) * mono(G, x()) - mono(G, x(2)));
  CHECK(a.free_part()[0] == 1);
  auto T = trefoil();
  const auto g0 = mono(T, gen(*T, "gamma0"));
  CHECK(abelianize_A(g0 - g0).is_zero());
  auto P = GroupOracle::seifert(SeifertData::closed(0, 1, {{2, 1}, {3, 1}, {5, 1}}));
  CHECK(abelianize_A(mono(P, gen(*P, "g2"))).is_zero());
}

TEST_CASE("x bracket")
{
  auto G = Z1();
  const auto one = GroupRingElement::one(G);
  CHECK(x_bracket(G, x(), 3) == one + mono(G, x()) + mono(G, x(2)));
  CHECK(x_bracket(G, x(), 0).is_zero());
  CHECK(x_bracket(G, x(), -2) == -mono(G, x(-1)) - mono(G, x(-2)));
}

TEST_CASE("trace products")
{
  auto G = GroupOracle::free_abelian(2);
  const Word a = Word::generator(0), b = Word::generator(1);
  CHECK(mat_trace_product(m11(mono(G, a)), m11(mono(G, a.inverse()))) ==
        GroupRingElement::one(G));
  const auto A = GroupRingMatrix::diagonal({mono(G, a), mono(G, b)});
  const auto B = GroupRingMatrix::diagonal({mono(G, a.inverse()), mono(G, b.inverse())});
  CHECK(mat_trace_product(A, B) == Integer(2) * GroupRingElement::one(G));
  auto T = trefoil();
  const auto g1 = m11(mono(T, gen(*T, "g1"))), g2 = m11(mono(T, gen(*T, "g2")));
  CHECK(mat_trace_product(g1, g2) == mono(T, gen(*T, "g1") * gen(*T, "g2")));
  CHECK_FALSE(mat_trace_product(g2, g1) == mat_trace_product(g1, g2));
}

TEST_CASE("hochschild boundaries")
{
  auto G = Z1();
  Chain1 c(G);
  c.add(x(), x(2), 1);
  CHECK(boundary(c).is_zero());
  Chain2 c2(G);
  c2.add(x(), x(), Word(), 1);
  Chain1 expected(G);
  expected.add(x(), x(), 2);
  expected.add(x(2), Word(), -1);
  CHECK(boundary(c2) == expected);
  auto T = trefoil();
  Chain1 t(T);
  t.add(gen(*T, "g1"), gen(*T, "g2"), 1);
  const auto d = boundary(t);
  CHECK(d == mono(T, gen(*T, "g2") * gen(*T, "g1")) - mono(T, gen(*T, "g1") * gen(*T, "g2")));
  CHECK_FALSE(d.is_zero());
}

TEST_CASE("traces and the Dennis trace")
{
  auto G = GroupOracle::free_abelian(2);
  const Word a = Word::generator(0), b = Word::generator(1);
  Chain1 e(G);
  e.add(a, a.inverse(), 1);
  CHECK(trace_T1(m11(mono(G, a)), m11(mono(G, a.inverse()))) == e);
  e.add(b, b.inverse(), 1);
  const auto A = GroupRingMatrix::diagonal({mono(G, a), mono(G, b)});
  const auto B = GroupRingMatrix::diagonal({mono(G, a.inverse()), mono(G, b.inverse())});
  CHECK(trace_T1(A, B) == e);
  auto T = trefoil();
  CHECK_THROWS_AS(trace_T1(m11(mono(T, gen(*T, "g1"))), m11(mono(T, gen(*T, "g2")))), NotACycle);

  Chain1 g_g(G);
  g_g.add(a, a.inverse(), 1);
  CHECK(dennis_trace(m11(mono(G, a)), m11(mono(G, a.inverse()))) == g_g);
  const auto minus = m11(-GroupRingElement::one(G));
  const auto dm = dennis_trace(minus, minus);
  CHECK(reduce_class(dm).is_zero());
  GroupRingMatrix E = GroupRingMatrix::identity(G, 2), Einv = GroupRingMatrix::identity(G, 2);
  E(0, 1) = mono(G, a);
  Einv(0, 1) = -mono(G, a);
  const auto de = dennis_trace(E, Einv);
  Chain1 two(G);
  two.add(Word(), Word(), 2);
  CHECK(de == two);
  CHECK(reduce_class(de).is_zero());
  CHECK_THROWS_AS(dennis_trace(E, E), NotInverse);
}

TEST_CASE("central action")
{
  auto T = trefoil();
  const Word g0 = T->gamma0(), g1 = gen(*T, "g1"), g2 = gen(*T, "g2");
  Chain1 c(T);
  c.add(g1, g2, 1);
  Chain1 e(T);
  e.add(g1, g2 * g0.inverse(), 1);
  CHECK(central_action(g0, c) == e);
  CHECK(central_action(Word(), c) == c);
  CHECK(central_action(g0, central_action(g0, c)) == central_action(g0.pow(2), c));
  CHECK_THROWS_AS(central_action(g1, c), NotCentral);
}

TEST_CASE("canonical decomposition")
{
  auto T = trefoil();
  const Word g0 = T->gamma0(), g1 = gen(*T, "g1");
  Chain1 c(T);
  c.add(g1, g1.inverse() * g0.inverse(), 1);
  const auto parts = canonical_decompose(c);
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == ClassId(CentralClass{-1}));
  Chain1 d = c;
  d.add(g1, g1.pow(-2), 1);
  CHECK(canonical_decompose(d).size() == 2);
}

TEST_CASE("reduce_class examples")
{
  auto G = Z1();
  Chain1 c(G);
  c.add(x(), x(), 3);
  c.add(x(2), Word(), 1);
  const auto r = reduce_class(c);
  const auto* v = r.find(AbelianValueClass{{2}});
  REQUIRE(v != nullptr);
  CHECK(v->value.free_part()[0] == 5);
  const auto bf = brute_force_component(c, 2);
  REQUIRE(bf.has_value());
  CHECK(*bf == 5);

  Chain1 m(G);
  m.add(x(), x(-2), -1);
  const auto rm = reduce_class(m);
  const auto* vm = rm.find(AbelianValueClass{{-1}});
  REQUIRE(vm != nullptr);
  CHECK(vm->value.free_part()[0] == -1);

  Chain1 triv(G);
  triv.add(Word(), x(), 1);
  CHECK(reduce_class(triv).is_zero());

  auto T = trefoil();
  Chain1 nc(T);
  nc.add(gen(*T, "g1"), gen(*T, "g2"), 1);
  CHECK_THROWS_AS(reduce_class(nc), NotACycle);
}

TEST_CASE("abelian reduction matches the lattice-span oracle")
{
  auto G = Z1();
  Gen rnd(41);
  for (int it = 0; it < 40; ++it) {
    const std::int64_t n = rnd.range(-3, 3);
    Chain1 c(G);
    for (int t = 0; t < 4; ++t) {
      const std::int64_t u = rnd.range(-4, 4);
      c.add(x(u), x(n - u), rnd.range(-3, 3));
    }
    const auto bf = brute_force_component(c, n);
    REQUIRE(bf.has_value());
    const auto r = reduce_class(c);
    const auto* v = r.find(AbelianValueClass{{n}});
    const Rational got = v ? Rational(v->value.free_part()[0]) : Rational(0);
    CHECK(got == *bf);
  }
}

TEST_CASE("epsilon star")
{
  auto G = Z1();
  Chain1 m(G);
  m.add(x(), x(-2), -1);
  CHECK(epsilon_star(m).free_part()[0] == -1);
  Gen rnd(3);
  auto T = trefoil();
  for (int it = 0; it < 100; ++it) {
    Chain2 c2(T);
    c2.add(rnd.word(3, 3), rnd.word(3, 3), rnd.word(3, 3), rnd.range(-3, 3));
    CHECK(epsilon_star(boundary(c2)).is_zero());
    CHECK(reduce_class(boundary(c2)).is_zero());
  }
}

TEST_CASE("prime and doubleprime split")
{
  auto T = trefoil();
  const Word g0 = T->gamma0(), g1 = gen(*T, "g1");
  Chain1 c(T);
  c.add(g0, g0.pow(-2), 1);
  c.add(g1, g1.pow(-2), -1);
  const auto r = reduce_class(c);
  const auto [p, q] = split_components(r);
  CHECK(p.components().size() == 1);
  CHECK(q.components().size() == 1);
  CHECK(p.components().begin()->first == ClassId(CentralClass{-1}));
  const auto [p0, q0] = split_components(r, {});
  CHECK(p0.is_zero());
  CHECK(q0 == r);

  auto G = GroupOracle::free_abelian(2);
  Chain1 a(G);
  a.add(Word::generator(0), Word::generator(1), 2);
  const auto ra = reduce_class(a);
  CHECK(split_components(ra).first == ra);
}
