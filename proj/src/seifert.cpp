#include "orbitrace/seifert.hpp"

#include <numeric>

#include "orbitrace/errors.hpp"

namespace orbitrace {

bool admissible(const SeifertData& d)
{
  d.validate();
  if (d.is_closed())
    return !(d.genus == 0 && d.r() <= 2);
  return !(d.genus == 0 && d.boundary == 1 && d.r() == 1);
}

std::pair<std::int64_t, std::int64_t> tietze_convert(std::int64_t mu, std::int64_t nu)
{
  if (!(0 < nu && nu < mu))
    throw InvalidInput("tietze_convert needs 0 < nu < mu");
  if (std::gcd(mu, nu) != 1)
    throw InvalidInput("tietze_convert needs gcd(mu, nu) = 1");
  // extended Euclid for nu^-1 mod mu
  std::int64_t r0 = mu, r1 = nu, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  const std::int64_t beta = floor_mod(t0, mu);
  const std::int64_t alpha = (1 - beta * nu) / mu;
  if (alpha * mu + beta * nu != 1 || beta <= 0 || beta >= mu)
    throw ConsistencyError("tietze_convert self-check failed");
  return {alpha, beta};
}

Presentation presentation(const SeifertData& d) { return GroupOracle::seifert(d)->presentation(); }

H1Data h1(const SeifertData& d)
{
  const auto oracle = GroupOracle::seifert(d);
  H1Data out{oracle->h1(), oracle->abelianize(oracle->gamma0()), {}};
  for (int j = 1; j <= static_cast<int>(d.r()); ++j)
    out.fibers.push_back(oracle->abelianize(oracle->fiber(j)));
  return out;
}

Rational euler_number(const SeifertData& d)
{
  d.validate();
  if (!d.is_closed())
    throw InvalidInput("Euler number is defined for closed data only");
  Rational e = d.b;
  for (const auto& f : d.fibers)
    e -= Rational(f.beta, f.mu);
  return e;
}

Rational orbifold_chi(const SeifertData& d)
{
  d.validate();
  Rational chi = d.chi_surface();
  for (const auto& f : d.fibers)
    chi += Rational(1, f.mu) - 1;
  return chi;
}

ComponentClass components_closed_form(const SeifertData& d, const OraclePtr& oracle)
{
  if (!admissible(d))
    throw NotAdmissible("Seifert data is not admissible");
  if (!oracle->seifert_data() || !(*oracle->seifert_data() == d))
    throw OracleMismatch("oracle does not belong to the Seifert data");
  const auto& G = *oracle;
  const Word g0 = G.gamma0();
  ComponentClass out(oracle);

  AbelianElement central = Integer(d.r() - d.chi_surface()) * G.abelianize(g0);
  for (int j = 1; j <= static_cast<int>(d.r()); ++j)
    central = central - G.abelianize(G.fiber(j));
  out.add(CentralClass{-1}, {central, central, {}});

  for (int j = 1; j <= static_cast<int>(d.r()); ++j) {
    const auto mu = G.fiber_order(j);
    const ClassId probe = ExceptionalClass{j, 1, -1};
    const AbelianElement value(G.centralizer_group(probe), {Integer(-1)}, {});
    const AbelianElement image = -G.abelianize(G.fiber(j));
    for (std::int64_t i = 1; i < mu; ++i)
      out.add(ExceptionalClass{j, mu - i, -1}, {value, image, {{G.fiber(j), Integer(-1)}}});
  }
  return out;
}

ComponentClass components_closed_form(const SeifertData& d)
{
  return components_closed_form(d, GroupOracle::seifert(d));
}

AbelianElement pd_euler_seifert(const SeifertData& d)
{
  if (!admissible(d))
    throw NotAdmissible("Seifert data is not admissible");
  const auto oracle = GroupOracle::seifert(d);
  AbelianElement out = Integer(d.chi_surface() - d.r()) * oracle->abelianize(oracle->gamma0());
  for (int j = 1; j <= static_cast<int>(d.r()); ++j)
    out += oracle->abelianize(oracle->fiber(j));
  return out;
}

Gamma0Order gamma0_order(const SeifertData& d)
{
  const auto oracle = GroupOracle::seifert(d);
  Gamma0Order out;
  out.order = oracle->abelianize(oracle->gamma0()).order();
  const bool criterion_infinite = !d.is_closed() || euler_number(d) == 0;
  out.criterion_agrees = criterion_infinite == !out.order.has_value();
  return out;
}

bool dt_obstruction(const SeifertData& d)
{
  return d.r() > 0 && !gamma0_order(d).order.has_value();
}

std::vector<Rational> rational_image(const AbelianElement& a)
{
  std::vector<Rational> out;
  for (const auto& x : a.free_part())
    out.emplace_back(x);
  return out;
}

NormalizedDerivation normalize_derivation(const std::map<std::int64_t, AbelianElement>& values)
{
  if (values.empty())
    throw InvalidInput("derivation value needs a coefficient group; pass at least one entry");
  const auto group = values.begin()->second.group_ptr();
  NormalizedDerivation out{AbelianElement::zero(group), {}, {}};
  auto put = [&](std::map<std::int64_t, AbelianElement>& m, std::int64_t k, const AbelianElement& v) {
    auto [it, inserted] = m.try_emplace(k, v);
    if (!inserted)
      it->second += v;
  };
  for (const auto& [i, a] : values) {
    out.normalized += a;
    if (i == 0 || a.is_zero())
      continue;
    auto& u = out.witnesses[i];
    if (i > 0)
      for (std::int64_t k = 1; k <= i; ++k)
        put(u, k, a);
    else
      for (std::int64_t k = i + 1; k <= 0; ++k)
        put(u, k, -a);
    for (const auto& [k, v] : u)
      put(out.witness_sum, k, v);
  }

  auto rebuilt = reconstruct_derivation(out);
  for (std::int64_t k : [&] {
         std::vector<std::int64_t> ks;
         for (const auto& [k, v] : values)
           ks.push_back(k);
         for (const auto& [k, v] : rebuilt)
           ks.push_back(k);
         return ks;
       }()) {
    const auto zero = AbelianElement::zero(group);
    const auto it1 = values.find(k);
    const auto it2 = rebuilt.find(k);
    const auto& lhs = it1 == values.end() ? zero : it1->second;
    const auto& rhs = it2 == rebuilt.end() ? zero : it2->second;
    if (!(lhs == rhs))
      throw ConsistencyError("derivation normalization does not reconstruct its input");
  }
  return out;
}

std::map<std::int64_t, AbelianElement> reconstruct_derivation(const NormalizedDerivation& n)
{
  std::map<std::int64_t, AbelianElement> out;
  auto put = [&](std::int64_t k, const AbelianElement& v) {
    auto [it, inserted] = out.try_emplace(k, v);
    if (!inserted)
      it->second += v;
  };
  put(0, n.normalized);
  // (1 - gamma) u: u at k minus u moved to k - 1
  for (const auto& [k, v] : n.witness_sum) {
    put(k, v);
    put(k - 1, -v);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace orbitrace
