#include "orbitrace/word.hpp"

namespace orbitrace {

Word::Word(const std::vector<Letter>& letters)
{
  for (const auto& l : letters)
    push(l);
}

Word Word::generator(int gen, std::int64_t exp)
{
  Word w;
  w.push({gen, exp});
  return w;
}

void Word::push(Letter l)
{
  if (l.exp == 0)
    return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0)
      letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word Word::operator*(const Word& other) const
{
  Word out = *this;
  for (const auto& l : other.letters_)
    out.push(l);
  return out;
}

Word Word::inverse() const
{
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push({it->gen, -it->exp});
  return out;
}

Word Word::pow(std::int64_t n) const
{
  Word base = n >= 0 ? *this : inverse();
  Word out;
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i)
    out = out * base;
  return out;
}

std::string Word::to_string(const std::vector<std::string>& names) const
{
  if (letters_.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0)
      s += "*";
    const auto& l = letters_[i];
    s += (l.gen >= 0 && static_cast<std::size_t>(l.gen) < names.size())
             ? names[static_cast<std::size_t>(l.gen)]
             : "x" + std::to_string(l.gen);
    if (l.exp != 1)
      s += "^" + std::to_string(l.exp);
  }
  return s;
}

}  // namespace orbitrace
