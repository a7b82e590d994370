#include "doctest.h"
#include "orbitrace/errors.hpp"
#include "orbitrace/s1cw.hpp"
#include "orbitrace/seifert.hpp"
#include "support.hpp"

using namespace orbitrace;
using testsupport::Gen;

namespace {

SeifertData poincare() { return SeifertData::closed(0, 1, {{2, 1}, {3, 1}, {5, 1}}); }

}  // namespace

TEST_CASE("admissibility")
{
  CHECK(admissible(SeifertData::closed(0, 1, {{2, 1}, {3, 1}, {5, 1}})));
  CHECK_FALSE(admissible(SeifertData::closed(0, 1, {{2, 1}, {3, 1}})));
  CHECK(admissible(SeifertData::bounded(0, 1, {2, 3})));
  CHECK_FALSE(admissible(SeifertData::bounded(0, 1, {2})));
  CHECK_THROWS_AS(components_closed_form(SeifertData::closed(0, 1, {{2, 1}})), NotAdmissible);
}

TEST_CASE("Tietze conversion")
{
  CHECK(tietze_convert(5, 2) == std::pair<std::int64_t, std::int64_t>{-1, 3});
  CHECK(tietze_convert(2, 1) == std::pair<std::int64_t, std::int64_t>{0, 1});
  CHECK(tietze_convert(3, 2) == std::pair<std::int64_t, std::int64_t>{-1, 2});
  CHECK_THROWS_AS(tietze_convert(4, 2), InvalidInput);
  for (std::int64_t mu = 2; mu < 12; ++mu)
    for (std::int64_t nu = 1; nu < mu; ++nu) {
      if (std::gcd(mu, nu) != 1)
        continue;
      const auto [alpha, beta] = tietze_convert(mu, nu);
      CHECK(alpha * mu + beta * nu == 1);
      CHECK(beta > 0);
      CHECK(beta < mu);
    }
}

TEST_CASE("presentations")
{
  const auto p = presentation(poincare());
  CHECK(p.generators.size() == 4);
  const auto b = presentation(SeifertData::bounded(0, 1, {2, 3}));
  CHECK(b.generators == std::vector<std::string>{"gamma0", "g1", "g2"});
  const auto t = presentation(SeifertData::closed(1, 0, {}));
  CHECK(t.generators == std::vector<std::string>{"gamma0", "a1", "b1"});
}

TEST_CASE("first homology")
{
  CHECK(h1(poincare()).group->trivial());
  const auto t = h1(SeifertData::closed(1, 0, {}));
  CHECK(*t.group == FgAbelianGroup(3, {}));
  const auto& f = t.gamma0.free_part();
  Integer g = 0;
  for (const auto& c : f)
    g = gcd(g, c);
  CHECK(g == 1);
  const auto b = h1(SeifertData::bounded(0, 1, {2, 3}));
  CHECK(*b.group == FgAbelianGroup(1, {}));
  CHECK(abs(b.gamma0.free_part()[0]) == 6);
  CHECK(b.gamma0 == Integer(2) * b.fibers[0]);
  CHECK(b.gamma0 == Integer(3) * b.fibers[1]);
}

TEST_CASE("Euler numbers and orbifold characteristics")
{
  CHECK(euler_number(poincare()) == Rational(-1, 30));
  CHECK(euler_number(SeifertData::closed(2, 7, {})) == 7);
  CHECK(euler_number(SeifertData::closed(1, 1, {{2, 1}, {2, 1}})) == 0);
  CHECK(orbifold_chi(poincare()) == Rational(1, 30));
  CHECK(orbifold_chi(SeifertData::closed(2, 0, {})) == -2);
  CHECK(orbifold_chi(SeifertData::bounded(0, 1, {2, 3})) == Rational(-1, 6));
}

TEST_CASE("closed form components")
{
  const auto d = SeifertData::closed(1, 0, {{2, 1}, {3, 1}});
  const auto c = components_closed_form(d);
  const auto& G = *c.oracle();
  const auto* central = c.find(CentralClass{-1});
  REQUIRE(central != nullptr);
  const auto expect = Integer(2) * G.abelianize(G.gamma0()) - G.abelianize(G.fiber(1)) -
                      G.abelianize(G.fiber(2));
  CHECK(central->value == expect);
  CHECK(c.components().size() == 4);
  for (const auto& [id, v] : c.components())
    if (std::holds_alternative<ExceptionalClass>(id)) {
      CHECK(v.value.free_part().size() == 1);
      CHECK(v.value.free_part()[0] == -1);
      const int j = std::get<ExceptionalClass>(id).fiber;
      CHECK(v.image == -G.abelianize(G.fiber(j)));
    }

  const auto s2 = components_closed_form(SeifertData::closed(2, 0, {}));
  REQUIRE(s2.components().size() == 1);
  const auto& H = *s2.oracle();
  CHECK(s2.find(CentralClass{-1})->value == Integer(2) * H.abelianize(H.gamma0()));
}

TEST_CASE("Poincare dual of the Euler class")
{
  const auto d = SeifertData::closed(1, 0, {{2, 1}, {3, 1}});
  auto G = GroupOracle::seifert(d);
  const auto pd = pd_euler_seifert(d);
  CHECK(pd == Integer(-2) * G->abelianize(G->gamma0()) + G->abelianize(G->fiber(1)) +
                  G->abelianize(G->fiber(2)));
  CHECK(pd == pd_euler(from_seifert(d)));
  const auto r0 = SeifertData::closed(2, 3, {});
  auto H = GroupOracle::seifert(r0);
  CHECK(pd_euler_seifert(r0) == Integer(-2) * H->abelianize(H->gamma0()));
}

TEST_CASE("order of gamma0")
{
  CHECK_FALSE(gamma0_order(SeifertData::bounded(0, 1, {2, 3})).order.has_value());
  CHECK_FALSE(gamma0_order(SeifertData::bounded(1, 2, {3})).order.has_value());
  const auto z = gamma0_order(SeifertData::closed(1, 1, {{2, 1}, {2, 1}}));
  CHECK_FALSE(z.order.has_value());
  CHECK(z.criterion_agrees);
  const auto p = gamma0_order(poincare());
  REQUIRE(p.order.has_value());
  CHECK(*p.order == 1);
  CHECK(p.criterion_agrees);
  CHECK(gamma0_order(SeifertData::closed(0, 2, {})).order == Integer(2));
}

TEST_CASE("Dennis trace obstruction")
{
  CHECK(dt_obstruction(SeifertData::closed(1, 1, {{2, 1}, {2, 1}})));
  CHECK_FALSE(dt_obstruction(SeifertData::closed(2, 0, {})));
  CHECK_FALSE(dt_obstruction(poincare()));
}

TEST_CASE("rational projection")
{
  const auto d = SeifertData::bounded(0, 1, {2, 3});
  const auto H = h1(d);
  const auto g0 = rational_image(H.gamma0);
  const auto pd = rational_image(pd_euler_seifert(d));
  REQUIRE(g0.size() == 1);
  CHECK(pd[0] == orbifold_chi(d) * g0[0]);
  const auto x = from_seifert(d);
  const auto prime = split_components(reduce_class(chi_s1(x))).first;
  CHECK(rational_image(prime.total_image())[0] == Rational(1, 6) * g0[0]);
}

TEST_CASE("derivation normalization")
{
  auto grp = std::make_shared<const FgAbelianGroup>(2, std::vector<Integer>{});
  const AbelianElement a(grp, {3, -1}, {});
  const auto zero = AbelianElement::zero(grp);

  auto n = normalize_derivation({{2, a}});
  CHECK(n.normalized == a);
  CHECK(n.witness_sum.at(1) == a);
  CHECK(n.witness_sum.at(2) == a);
  CHECK(reconstruct_derivation(n) == std::map<std::int64_t, AbelianElement>{{2, a}});

  n = normalize_derivation({{0, a}});
  CHECK(n.normalized == a);
  for (const auto& [k, v] : n.witness_sum)
    CHECK(v.is_zero());

  n = normalize_derivation({{1, a}, {-1, -a}});
  CHECK(n.normalized.is_zero());
  CHECK(n.witness_sum.at(1) == a);
  CHECK(n.witness_sum.at(0) == a);
  const auto back = reconstruct_derivation(n);
  CHECK(back.at(1) == a);
  CHECK(back.at(-1) == -a);
}
