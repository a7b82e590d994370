#include "doctest.h"
#include "orbitrace/chaincx.hpp"
#include "orbitrace/errors.hpp"
#include "orbitrace/s1cw.hpp"
#include "support.hpp"

using namespace orbitrace;
using testsupport::Gen;

namespace {

GroupRingElement mono(const OraclePtr& G, const Word& w, Integer c = 1)
{
  return GroupRingElement::monomial(G, w, c);
}

GroupRingMatrix m11(const GroupRingElement& e)
{
  GroupRingMatrix m(e.oracle(), 1, 1);
  m(0, 0) = e;
  return m;
}

S1CWComplex circle()
{
  auto G = GroupOracle::free_abelian(1);
  return S1CWComplex(G, Word::generator(0), {{0, 1, Word::generator(0)}});
}

S1CWComplex torus()
{
  auto G = GroupOracle::free_abelian(2);
  const Word x = Word::generator(0);
  return S1CWComplex(G, x, {{0, 1, x}, {1, 1, x}});
}

}  // namespace

TEST_CASE("circle level data")
{
  const auto levels = to_chain_data(circle());
  REQUIRE(levels.size() == 1);
  const auto& G = levels[0].complex.oracle();
  const Word g = Word::generator(0);
  CHECK(levels[0].complex.boundary(1) == m11(mono(G, g.inverse()) - GroupRingElement::one(G)));
  CHECK(levels[0].homotopy.maps()[0] == m11(-GroupRingElement::one(G)));
  CHECK(verify_homotopy(levels[0].complex, levels[0].homotopy));

  const auto zero = Homotopy::zero(levels[0].complex);
  CHECK(verify_homotopy(levels[0].complex, zero));
  CHECK(x1_trace(levels[0].complex, zero).is_zero());

  auto maps = levels[0].homotopy.maps();
  maps[0](0, 0) += GroupRingElement::one(G);
  const Homotopy bad(maps, levels[0].homotopy.eta());
  CHECK_FALSE(verify_homotopy(levels[0].complex, bad));
  CHECK_THROWS_AS(x1_trace(levels[0].complex, bad), InvalidInput);
}

TEST_CASE("circle trace reduces to minus the orbit class")
{
  const auto levels = to_chain_data(circle());
  const auto& G = levels[0].complex.oracle();
  const Word g = Word::generator(0);
  const Chain1 t = x1_trace(levels[0].complex, levels[0].homotopy);
  Chain1 e(G);
  e.add(g.inverse(), Word(), 1);
  e.add(Word(), Word(), -1);
  CHECK(t == e);
  const auto r = reduce_class(t);
  REQUIRE(r.components().size() == 1);
  const auto* v = r.find(AbelianValueClass{{-1}});
  REQUIRE(v != nullptr);
  CHECK(v->value.free_part()[0] == -1);
  CHECK(x1_filtered(levels) == t);
  CHECK(r == reduce_class(chi_s1(circle())));
}

TEST_CASE("interval product keeps the reduced class")
{
  const auto levels = to_chain_data(circle());
  const auto& G = levels[0].complex.oracle();
  const auto one = GroupRingElement::one(G);
  const auto p = mono(G, Word::generator(0, -1)) - one;
  // Degrees 0..2: (e v0, e v1), (d v0, d v1, e i), (d i).
  GroupRingMatrix d1(G, 2, 3), d2(G, 3, 1);
  d1(0, 0) = p;
  d1(1, 1) = p;
  d1(0, 2) = -one;
  d1(1, 2) = one;
  d2(0, 0) = one;
  d2(1, 0) = -one;
  d2(2, 0) = p;
  const BasedComplex cx(G, 0, {2, 3, 1}, {d1, d2});
  int verified = 0;
  for (int eps : {1, -1}) {
    GroupRingMatrix D0(G, 3, 2), D1(G, 1, 3);
    D0(0, 0) = -one;
    D0(1, 1) = -one;
    D1(0, 2) = Integer(eps) * one;
    const Homotopy h({D0, D1}, Word::generator(0));
    if (!verify_homotopy(cx, h))
      continue;
    ++verified;
    CHECK(reduce_class(x1_trace(cx, h)) ==
          reduce_class(x1_trace(levels[0].complex, levels[0].homotopy)));
  }
  CHECK(verified == 1);
}

TEST_CASE("torus filtered trace vanishes")
{
  const auto levels = to_chain_data(torus());
  CHECK(levels.size() == 2);
  CHECK(reduce_class(x1_filtered(levels)).is_zero());
}

TEST_CASE("rebase")
{
  const auto levels = to_chain_data(circle());
  const auto& c = levels[0].complex;
  const auto& h = levels[0].homotopy;
  const auto& G = c.oracle();
  const auto id = rebase(c, h, GroupRingMatrix::identity(G, 2));
  CHECK(reduce_class(id.correction).is_zero());
  CHECK(id.complex.boundary(1) == c.boundary(1));

  const Word g = Word::generator(0);
  const auto U = GroupRingMatrix::diagonal({mono(G, g), GroupRingElement::one(G)});
  const auto rb = rebase(c, h, U);
  CHECK(verify_homotopy(rb.complex, rb.homotopy));
  const Chain1 diff = x1_trace(c, h) - x1_trace(rb.complex, rb.homotopy);
  CHECK(reduce_class(diff) == reduce_class(rb.correction));
  CHECK(split_components(reduce_class(rb.correction)).second.is_zero());
  CHECK_THROWS_AS(rebase(c, h, GroupRingMatrix::identity(G, 3)), DimensionMismatch);
}

TEST_CASE("concatenated homotopies")
{
  const auto levels = to_chain_data(circle());
  const auto& c = levels[0].complex;
  const auto& h = levels[0].homotopy;
  const auto same = concat_homotopies(c, h, Homotopy::zero(c));
  CHECK(same.eta() == h.eta());
  CHECK(x1_trace(c, same) == x1_trace(c, h));

  const auto twice = concat_homotopies(c, h, h);
  CHECK(verify_homotopy(c, twice));
  const Chain1 t = x1_trace(c, h);
  CHECK(reduce_class(x1_trace(c, twice)) == reduce_class(t + central_action(h.eta(), t)));
}

TEST_CASE("torsion representatives")
{
  auto G = GroupOracle::free_abelian(1);
  const auto one = GroupRingElement::one(G);
  const BasedComplex cone(G, 0, {1, 1}, {m11(one)});
  const auto t = torsion_rep(cone, {m11(one)});
  CHECK(t.V == m11(one));
  CHECK(t.Vinv == m11(one));
  CHECK(reduce_class(dennis_trace(t.V, t.Vinv)).is_zero());

  const Word g = Word::generator(0);
  const BasedComplex mult(G, 0, {1, 1}, {m11(mono(G, g))});
  const auto tg = torsion_rep(mult, {m11(mono(G, g.inverse()))});
  CHECK(tg.V == m11(mono(G, g)));
  CHECK(tg.Vinv == m11(mono(G, g.inverse())));
  Chain1 e(G);
  e.add(g, g.inverse(), 1);
  CHECK(dennis_trace(tg.V, tg.Vinv) == e);

  const auto I2 = GroupRingMatrix::identity(G, 2);
  const BasedComplex cone2(G, 0, {2, 2}, {I2});
  const auto t2 = torsion_rep(cone2, {I2});
  CHECK(t2.V == I2);
  CHECK(reduce_class(dennis_trace(t2.V, t2.Vinv)).is_zero());

  CHECK_THROWS_AS(torsion_rep(mult, {m11(one)}), NotAContraction);
}

TEST_CASE("based complex rejects a nonzero composite")
{
  auto G = GroupOracle::free_abelian(1);
  const auto one = GroupRingElement::one(G);
  CHECK_THROWS(BasedComplex(G, 0, {1, 1, 1}, {m11(one), m11(one)}));
  CHECK_THROWS_AS(BasedComplex(G, 0, {1, 2}, {m11(one)}), DimensionMismatch);
}
