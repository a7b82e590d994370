#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbitrace/groupring.hpp"
#include "orbitrace/oracle.hpp"
#include "orbitrace/word.hpp"

namespace testsupport {

using namespace orbitrace;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi)
  {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return range(0, 1) == 1; }

  Word word(int generators, int max_len, int max_exp = 2)
  {
    std::vector<Letter> ls;
    if (generators == 0)
      return Word();
    const auto len = range(0, max_len);
    for (std::int64_t i = 0; i < len; ++i) {
      std::int64_t e = range(1, max_exp);
      if (coin())
        e = -e;
      ls.push_back({static_cast<int>(range(0, generators - 1)), e});
    }
    return Word(ls);
  }

  GroupRingElement element(const OraclePtr& G, int max_terms, int max_len)
  {
    GroupRingElement r(G);
    const auto n = range(0, max_terms);
    for (std::int64_t i = 0; i < n; ++i)
      r.add(word(G->generator_count(), max_len), range(-3, 3));
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

inline Word gen(const GroupOracle& G, const std::string& name, std::int64_t e = 1)
{
  return Word::generator(G.generator_id(name), e);
}

}  // namespace testsupport
