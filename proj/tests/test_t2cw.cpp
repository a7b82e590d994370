#include "doctest.h"
#include "orbitrace/errors.hpp"
#include "orbitrace/s1cw.hpp"
#include "orbitrace/t2cw.hpp"
#include "support.hpp"

using namespace orbitrace;
using testsupport::Gen;

namespace {

const Word x1 = Word::generator(0);
const Word x2 = Word::generator(1);

GroupRingElement mono(const OraclePtr& G, const Word& w, Integer c = 1)
{
  return GroupRingElement::monomial(G, w, c);
}

}  // namespace

TEST_CASE("torus rows for unit twists")
{
  auto G = GroupOracle::free_abelian(2);
  const auto one = GroupRingElement::one(G);
  auto r = torus_rows(G, 1, 0);
  CHECK(r.d0_e11 == one);
  CHECK(r.d0_e12.is_zero());
  CHECK(r.d1_e11.is_zero());
  CHECK(r.d1_e12 == one);
  r = torus_rows(G, 0, 1);
  CHECK(r.d0_e11.is_zero());
  CHECK(r.d0_e12 == one);
  CHECK(r.d1_e11 == -one);
  CHECK(r.d1_e12.is_zero());
  r = torus_rows(G, 0, 0);
  CHECK(r.d0_e11.is_zero());
  CHECK(r.d0_e12.is_zero());
  CHECK(r.d1_e11.is_zero());
  CHECK(r.d1_e12.is_zero());
  r = torus_rows(G, 2, -1);
  CHECK(r.d0_e11 == (one + mono(G, x1.inverse())) * mono(G, x2));
  CHECK(r.d0_e12 == -mono(G, x2));
}

TEST_CASE("torus homotopies satisfy the relation and have vanishing traces")
{
  auto G = GroupOracle::free_abelian(2);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const auto l = torus_matrices(G, a, b);
      CHECK(verify_homotopy(l.complex, l.homotopy));
      CHECK(l.homotopy.eta() == G->normalize(x1.pow(a) * x2.pow(b)));
      CHECK(level_trace_vanishes(l));
    }
  CHECK(torus_matrices(G, 0, 0).homotopy.maps()[0].is_zero());
  CHECK_THROWS(torus_matrices(GroupOracle::free_abelian(1), 1, 0));
}

TEST_CASE("single torus cell matches the standard torus")
{
  auto G = GroupOracle::free_abelian(2);
  const T2CWComplex t(G, {{0, x1, x2, 1, 0}});
  CHECK(validate(t).ok);
  const auto levels = t2_chain_data(t);
  REQUIRE(levels.size() == 1);
  const auto ref = torus_matrices(G, 1, 0);
  CHECK(levels[0].complex.boundary(1) == ref.complex.boundary(1));
  CHECK(levels[0].complex.boundary(2) == ref.complex.boundary(2));
  CHECK(levels[0].homotopy.maps()[0] == ref.homotopy.maps()[0]);
  CHECK(levels[0].homotopy.maps()[1] == ref.homotopy.maps()[1]);
}

TEST_CASE("zero twist gives zero homotopies")
{
  auto G = GroupOracle::free_abelian(2);
  const T2CWComplex t(G, {{0, x1, x2, 0, 0}, {1, x1, x2, 0, 0}});
  for (const auto& l : t2_chain_data(t))
    for (const auto& m : l.homotopy.maps())
      CHECK(m.is_zero());
}

TEST_CASE("validation rejects inconsistent twists")
{
  auto G = GroupOracle::free_abelian(2);
  CHECK_FALSE(validate(T2CWComplex(G, {{0, x1, x2, 1, 0}, {1, x1, x2, 0, 1}})).ok);
  auto T = GroupOracle::seifert(SeifertData::bounded(0, 1, {2, 3}));
  CHECK_FALSE(validate(T2CWComplex(T, {{0, T->fiber(1), T->fiber(2), 1, 0}})).ok);
}

TEST_CASE("random torus complexes")
{
  Gen rnd(99);
  auto G = GroupOracle::free_abelian(2);
  for (int it = 0; it < 30; ++it) {
    std::int64_t a = 0, b = 0;
    while (std::gcd(a, b) != 1) {
      a = rnd.range(-3, 3);
      b = rnd.range(-3, 3);
    }
    // Unimodular (g1, g2) with g1^a g2^b = x1.
    const auto [p, q] = [&] {
      for (std::int64_t p = -6; p <= 6; ++p)
        for (std::int64_t q = -6; q <= 6; ++q)
          if (a * q - b * p == 1)
            return std::pair{p, q};
      return std::pair<std::int64_t, std::int64_t>{0, 0};
    }();
    const Word g1 = G->normalize(x1.pow(q) * x2.pow(-b));
    const Word g2 = G->normalize(x1.pow(-p) * x2.pow(a));
    std::vector<T2Cell> cells;
    const auto n = rnd.range(1, 4);
    for (std::int64_t k = 0; k < n; ++k)
      cells.push_back({static_cast<int>(rnd.range(0, 2)), g1, g2, a, b});
    const T2CWComplex t(G, cells);
    REQUIRE(validate(t).ok);
    for (const auto& l : t2_chain_data(t))
      CHECK(verify_homotopy(l.complex, l.homotopy));
    CHECK(verify_vanishing(t));
  }
}

TEST_CASE("a circle level does not vanish")
{
  auto G = GroupOracle::free_abelian(1);
  const S1CWComplex c(G, x1, {{0, 1, x1}});
  CHECK_FALSE(level_trace_vanishes(to_chain_data(c)[0]));
}
