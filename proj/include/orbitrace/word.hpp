#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace orbitrace {

/// A generator raised to a nonzero power.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;

  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in generator ids.
///
/// Construction merges adjacent letters with the same generator and drops
/// zero exponents, so two words that differ by free reduction compare equal.
/// Group-specific normal forms are produced by GroupOracle::normalize.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word generator(int gen, std::int64_t exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(std::int64_t n) const;

  /// Text form such as "g1^2*a1^-1"; names are indexed by generator id.
  std::string to_string(const std::vector<std::string>& names) const;

  auto operator<=>(const Word&) const = default;

 private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

}  // namespace orbitrace
