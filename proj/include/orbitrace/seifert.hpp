#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "orbitrace/hochschild.hpp"
#include "orbitrace/seifert_data.hpp"

namespace orbitrace {

/// False for S^2 with at most two exceptional fibers and D^2 with one.
bool admissible(const SeifertData& d);

/// alpha * mu + beta * nu = 1 with 0 < beta < mu; throws InvalidInput if gcd != 1.
std::pair<std::int64_t, std::int64_t> tietze_convert(std::int64_t mu, std::int64_t nu);

Presentation presentation(const SeifertData& d);

struct H1Data {
  std::shared_ptr<const FgAbelianGroup> group;
  AbelianElement gamma0;
  std::vector<AbelianElement> fibers;
};

H1Data h1(const SeifertData& d);

/// b - sum beta_j / mu_j; closed data only.
Rational euler_number(const SeifertData& d);

/// chi(base) + sum (1/mu_j - 1)
Rational orbifold_chi(const SeifertData& d);

/// Per-class values of the S1-Euler characteristic from the closed formula,
/// over the oracle of the given data. Throws NotAdmissible.
ComponentClass components_closed_form(const SeifertData& d, const OraclePtr& oracle);
ComponentClass components_closed_form(const SeifertData& d);

/// (chi(base) - r){gamma0} + sum {g_j}. Throws NotAdmissible.
AbelianElement pd_euler_seifert(const SeifertData& d);

struct Gamma0Order {
  /// nullopt means infinite.
  std::optional<Integer> order;
  /// Whether the computed order agrees with the boundary / zero-Euler-number criterion.
  bool criterion_agrees = false;
};

Gamma0Order gamma0_order(const SeifertData& d);

/// True when r > 0 and {gamma0} has infinite order in H1.
bool dt_obstruction(const SeifertData& d);

/// Rational image in H1 tensor Q, as the free coordinates of the element.
std::vector<Rational> rational_image(const AbelianElement& a);

struct NormalizedDerivation {
  AbelianElement normalized;
  /// Component k of sum u_i.
  std::map<std::int64_t, AbelianElement> witness_sum;
  /// Per-index witnesses u_i, each a map k -> value.
  std::map<std::int64_t, std::map<std::int64_t, AbelianElement>> witnesses;
};

/// Moves every component of a derivation value to k = 0; the difference is
/// (1 - gamma) applied to the witness sum, where gamma shifts k to k - 1.
/// Throws ConsistencyError if the reconstruction check fails.
NormalizedDerivation normalize_derivation(const std::map<std::int64_t, AbelianElement>& values);

/// Delta' + (1 - gamma) * sum u_i, componentwise.
std::map<std::int64_t, AbelianElement> reconstruct_derivation(const NormalizedDerivation& n);

}  // namespace orbitrace
