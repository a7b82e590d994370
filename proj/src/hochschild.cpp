#include "orbitrace/hochschild.hpp"

#include "orbitrace/errors.hpp"

namespace orbitrace {

Chain1::Chain1(OraclePtr oracle) : oracle_(std::move(oracle))
{
  if (!oracle_)
    throw InvalidInput("chain without oracle");
}

Chain1 Chain1::tensor(const GroupRingElement& a, const GroupRingElement& b)
{
  if (a.oracle() != b.oracle())
    throw OracleMismatch("tensor of elements over different oracles");
  Chain1 out(a.oracle());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms())
      out.add(u, v, x * y);
  return out;
}

void Chain1::add(const Word& u, const Word& v, const Integer& c)
{
  if (c == 0)
    return;
  auto key = std::make_pair(oracle_->normalize(u), oracle_->normalize(v));
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void Chain1::check(const Chain1& other) const
{
  if (!oracle_->same_group(*other.oracle_))
    throw OracleMismatch("chains over different oracles");
}

Chain1& Chain1::operator+=(const Chain1& other)
{
  check(other);
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

Chain1 Chain1::operator+(const Chain1& other) const
{
  Chain1 out = *this;
  out += other;
  return out;
}

Chain1 Chain1::operator-(const Chain1& other) const { return *this + (-other); }

Chain1 Chain1::operator-() const { return Integer(-1) * *this; }

Chain1 operator*(const Integer& k, const Chain1& c)
{
  Chain1 out(c.oracle_);
  if (k == 0)
    return out;
  for (const auto& [key, n] : c.terms_)
    out.terms_.emplace(key, k * n);
  return out;
}

bool Chain1::operator==(const Chain1& other) const
{
  return oracle_ == other.oracle_ && terms_ == other.terms_;
}

std::string Chain1::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string s;
  const auto& names = oracle_->generator_names();
  for (const auto& [k, c] : terms_) {
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (a != 1)
      s += a.str() + "*";
    s += "(" + k.first.to_string(names) + " # " + k.second.to_string(names) + ")";
  }
  return s;
}

Chain2::Chain2(OraclePtr oracle) : oracle_(std::move(oracle)) {}

void Chain2::add(const Word& s1, const Word& s2, const Word& m, const Integer& c)
{
  if (c == 0)
    return;
  auto key = std::make_tuple(oracle_->normalize(s1), oracle_->normalize(s2), oracle_->normalize(m));
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

GroupRingElement boundary(const Chain1& c)
{
  GroupRingElement out(c.oracle());
  for (const auto& [k, n] : c.terms()) {
    out.add(k.second * k.first, n);
    out.add(k.first * k.second, -n);
  }
  return out;
}

Chain1 boundary(const Chain2& c)
{
  Chain1 out(c.oracle());
  for (const auto& [k, n] : c.terms()) {
    const auto& [s1, s2, m] = k;
    out.add(s2, m * s1, n);
    out.add(s1 * s2, m, -n);
    out.add(s1, s2 * m, n);
  }
  return out;
}

Chain1 trace_chain(const GroupRingMatrix& A, const GroupRingMatrix& B)
{
  if (A.oracle() != B.oracle())
    throw OracleMismatch("matrices over different oracles");
  if (A.rows() != B.cols() || A.cols() != B.rows())
    throw DimensionMismatch("trace needs p x q and q x p matrices");
  Chain1 out(A.oracle());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero() && !B(j, i).is_zero())
        out += Chain1::tensor(A(i, j), B(j, i));
  return out;
}

Chain1 trace_T1(const GroupRingMatrix& A, const GroupRingMatrix& B)
{
  if (!(mat_trace_product(A, B) == mat_trace_product(B, A)))
    throw NotACycle("trace(AB) differs from trace(BA)");
  return trace_chain(A, B);
}

Chain1 dennis_trace(const GroupRingMatrix& U, const GroupRingMatrix& Uinv)
{
  if (U.rows() != U.cols() || Uinv.rows() != U.rows() || Uinv.cols() != U.cols())
    throw DimensionMismatch("Dennis trace needs square matrices of equal size");
  const auto I = GroupRingMatrix::identity(U.oracle(), U.rows());
  if (!(U * Uinv == I) || !(Uinv * U == I))
    throw NotInverse("matrices are not mutually inverse");
  return trace_T1(U, Uinv);
}

Chain1 central_action(const Word& omega, const Chain1& c)
{
  if (!c.oracle()->is_central(omega))
    throw NotCentral("word " + c.oracle()->format(omega) + " is not central");
  const Word inv = omega.inverse();
  Chain1 out(c.oracle());
  for (const auto& [k, n] : c.terms())
    out.add(k.first, k.second * inv, n);
  return out;
}

std::map<ClassId, Chain1> canonical_decompose(const Chain1& c)
{
  std::map<ClassId, Chain1> parts;
  for (const auto& [k, n] : c.terms()) {
    const ClassId id = c.oracle()->class_id(k.first * k.second);
    parts.try_emplace(id, c.oracle()).first->second.add(k.first, k.second, n);
  }
  return parts;
}

ComponentClass::ComponentClass(OraclePtr oracle) : oracle_(std::move(oracle)) {}

const ComponentValue* ComponentClass::find(const ClassId& id) const
{
  auto it = components_.find(id);
  return it == components_.end() ? nullptr : &it->second;
}

void ComponentClass::add(const ClassId& id, const ComponentValue& v)
{
  auto [it, inserted] = components_.try_emplace(id, v);
  if (!inserted) {
    it->second.value += v.value;
    it->second.image += v.image;
    it->second.entries.insert(it->second.entries.end(), v.entries.begin(), v.entries.end());
  }
  if (it->second.value.is_zero())
    components_.erase(it);
}

ComponentClass ComponentClass::operator+(const ComponentClass& other) const
{
  if (!oracle_->same_group(*other.oracle_))
    throw OracleMismatch("component classes over different oracles");
  ComponentClass out = *this;
  for (const auto& [id, v] : other.components_)
    out.add(id, v);
  return out;
}

ComponentClass ComponentClass::operator-() const
{
  ComponentClass out(oracle_);
  for (const auto& [id, v] : components_) {
    ComponentValue n{-v.value, -v.image, {}};
    for (const auto& [z, c] : v.entries)
      n.entries.emplace_back(z, -c);
    out.components_.emplace(id, std::move(n));
  }
  return out;
}

AbelianElement ComponentClass::total_image() const
{
  AbelianElement out = AbelianElement::zero(oracle_->h1());
  for (const auto& [id, v] : components_)
    out += v.image;
  return out;
}

bool ComponentClass::operator==(const ComponentClass& other) const
{
  if (!oracle_->same_group(*other.oracle_) || components_.size() != other.components_.size())
    return false;
  for (const auto& [id, v] : components_) {
    const auto* w = other.find(id);
    if (!w || !(w->value == v.value))
      return false;
  }
  return true;
}

std::string ComponentClass::to_string() const
{
  if (components_.empty())
    return "0";
  std::string s;
  for (const auto& [id, v] : components_) {
    if (!s.empty())
      s += "; ";
    s += oracle_->class_label(id) + " [" + oracle_->class_key(id) + "]: " + v.value.to_string();
  }
  return s;
}

ComponentClass reduce_class(const Chain1& c)
{
  if (!boundary(c).is_zero())
    throw NotACycle("chain is not a cycle: boundary " + boundary(c).to_string());
  const auto& G = *c.oracle();
  ComponentClass out(c.oracle());
  for (const auto& [k, n] : c.terms()) {
    const auto& [u, v] = k;
    const Conjugacy cx = G.conjugacy(u * v);
    const Conjugacy cy = G.conjugacy(v * u);
    if (cx.id != cy.id)
      throw IrreducibleTerm("markers of term " + G.format(u) + " # " + G.format(v) +
                            " were not identified as conjugate");
    const Word z = G.normalize(cx.conjugator * u * cy.conjugator.inverse());
    ComponentValue val{n * G.centralizer_value(cx, z), n * G.abelianize(z), {{z, n}}};
    out.add(cx.id, val);
  }
  return out;
}

AbelianElement epsilon_star(const Chain1& c)
{
  if (!boundary(c).is_zero())
    throw NotACycle("epsilon_star of a non-cycle");
  AbelianElement out = AbelianElement::zero(c.oracle()->h1());
  for (const auto& [k, n] : c.terms())
    out += n * c.oracle()->abelianize(k.first);
  return out;
}

bool is_central_class(const GroupOracle& oracle, const ClassId& id)
{
  if (std::holds_alternative<CentralClass>(id) || std::holds_alternative<AbelianValueClass>(id))
    return true;
  return oracle.is_abelian();
}

std::pair<ComponentClass, ComponentClass> split_components(const ComponentClass& c,
                                                           const std::set<ClassId>& gottlieb)
{
  ComponentClass prime(c.oracle()), doubleprime(c.oracle());
  for (const auto& [id, v] : c.components())
    (gottlieb.count(id) ? prime : doubleprime).add(id, v);
  return {prime, doubleprime};
}

std::pair<ComponentClass, ComponentClass> split_components(const ComponentClass& c)
{
  std::set<ClassId> gottlieb;
  for (const auto& [id, v] : c.components())
    if (is_central_class(*c.oracle(), id))
      gottlieb.insert(id);
  return split_components(c, gottlieb);
}

}  // namespace orbitrace
