#include "orbitrace/seifert_data.hpp"

#include <numeric>
#include <string>

#include "orbitrace/errors.hpp"

namespace orbitrace {

SeifertData SeifertData::closed(std::int64_t genus, std::int64_t b, std::vector<Fiber> fibers)
{
  SeifertData d;
  d.variant = Variant::Closed;
  d.genus = genus;
  d.b = b;
  d.fibers = std::move(fibers);
  d.validate();
  return d;
}

SeifertData SeifertData::bounded(std::int64_t genus, std::int64_t boundary,
                                 const std::vector<std::int64_t>& mus)
{
  SeifertData d;
  d.variant = Variant::Bounded;
  d.genus = genus;
  d.boundary = boundary;
  for (auto mu : mus)
    d.fibers.push_back({mu, 0});
  d.validate();
  return d;
}

std::int64_t SeifertData::chi_surface() const
{
  return is_closed() ? 2 - 2 * genus : 2 - 2 * genus - boundary;
}

void SeifertData::validate() const
{
  if (genus < 0)
    throw InvalidInput("genus must be non-negative");
  if (!is_closed() && boundary < 1)
    throw InvalidInput("bounded data needs at least one boundary component");
  for (std::size_t j = 0; j < fibers.size(); ++j) {
    const auto& f = fibers[j];
    const std::string tag = "fiber " + std::to_string(j + 1);
    if (f.mu < 2)
      throw InvalidInput(tag + ": mu must be at least 2");
    if (is_closed()) {
      if (f.beta <= 0 || f.beta >= f.mu)
        throw InvalidInput(tag + ": beta must satisfy 0 < beta < mu");
      if (std::gcd(f.mu, f.beta) != 1)
        throw InvalidInput(tag + ": mu and beta must be coprime");
    }
  }
}

}  // namespace orbitrace
