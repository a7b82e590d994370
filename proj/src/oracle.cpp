#include "orbitrace/oracle.hpp"

#include <algorithm>

#include "orbitrace/errors.hpp"

namespace orbitrace {

namespace {

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace

std::shared_ptr<const GroupOracle> GroupOracle::free_abelian(int rank)
{
  if (rank < 0)
    throw InvalidInput("free abelian rank must be non-negative");
  auto o = std::shared_ptr<GroupOracle>(new GroupOracle());
  o->kind_ = Kind::FreeAbelian;
  for (int i = 0; i < rank; ++i)
    o->names_.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      o->presentation_.relations.push_back(commutator(Word::generator(i), Word::generator(j)));
  o->finish();
  return o;
}

std::shared_ptr<const GroupOracle> GroupOracle::finite_cyclic(std::int64_t order)
{
  if (order < 1)
    throw InvalidInput("cyclic order must be positive");
  auto o = std::shared_ptr<GroupOracle>(new GroupOracle());
  o->kind_ = Kind::FiniteCyclic;
  o->order_ = order;
  o->names_ = {"x"};
  o->presentation_.relations.push_back(Word::generator(0, order));
  o->finish();
  return o;
}

std::shared_ptr<const GroupOracle> GroupOracle::seifert(const SeifertData& data)
{
  data.validate();
  auto o = std::shared_ptr<GroupOracle>(new GroupOracle());
  o->kind_ = data.is_closed() ? Kind::SeifertClosed : Kind::SeifertBounded;
  o->seifert_ = data;
  const auto sigma = data.genus;
  const auto r = data.r();
  o->names_.push_back("gamma0");
  for (std::int64_t i = 1; i <= sigma; ++i)
    o->names_.push_back("a" + std::to_string(i));
  for (std::int64_t i = 1; i <= sigma; ++i)
    o->names_.push_back("b" + std::to_string(i));
  for (std::int64_t j = 1; j <= r; ++j) {
    o->fiber_gen_.push_back(static_cast<int>(o->names_.size()));
    o->names_.push_back("g" + std::to_string(j));
  }
  if (!data.is_closed())
    for (std::int64_t i = 1; i < data.boundary; ++i)
      o->names_.push_back("d" + std::to_string(i));

  o->factor_mu_.assign(o->names_.size(), 0);
  for (std::int64_t j = 0; j < r; ++j)
    o->factor_mu_[static_cast<std::size_t>(o->fiber_gen_[static_cast<std::size_t>(j)])] =
        data.fibers[static_cast<std::size_t>(j)].mu;

  const Word g0 = Word::generator(0);
  auto& rel = o->presentation_.relations;
  for (int gen = 1; gen < o->generator_count(); ++gen)
    rel.push_back(commutator(g0, Word::generator(gen)));
  for (std::int64_t j = 0; j < r; ++j)
    rel.push_back(Word::generator(o->fiber_gen_[static_cast<std::size_t>(j)],
                                  data.fibers[static_cast<std::size_t>(j)].mu) *
                  g0.inverse());
  if (data.is_closed()) {
    Word w;
    for (std::int64_t i = 0; i < sigma; ++i)
      w = w * commutator(Word::generator(static_cast<int>(1 + i)),
                         Word::generator(static_cast<int>(1 + sigma + i)));
    for (std::int64_t j = 0; j < r; ++j)
      w = w * Word::generator(o->fiber_gen_[static_cast<std::size_t>(j)],
                              -data.fibers[static_cast<std::size_t>(j)].beta);
    w = w * Word::generator(0, data.b);
    rel.push_back(w);
    o->abelian_ = false;
  } else {
    o->abelian_ = o->generator_count() <= 2;
  }
  o->finish();
  o->exact_ = !o->abelianize(g0).order().has_value();
  return o;
}

void GroupOracle::finish()
{
  presentation_.generators = names_;
  std::vector<std::vector<Integer>> rows;
  for (const auto& rel : presentation_.relations) {
    std::vector<Integer> row(names_.size(), Integer(0));
    for (const auto& l : rel.letters())
      row[static_cast<std::size_t>(l.gen)] += l.exp;
    rows.push_back(std::move(row));
  }
  abelianization_ = std::make_shared<const AbelianPresentation>(names_.size(), rows);
  z1_ = std::make_shared<const FgAbelianGroup>(1, std::vector<Integer>{});
  z2_ = std::make_shared<const FgAbelianGroup>(2, std::vector<Integer>{});
}

int GroupOracle::generator_id(const std::string& name) const
{
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::string GroupOracle::describe() const
{
  switch (kind_) {
    case Kind::FreeAbelian:
      return "FreeAbelian(" + std::to_string(names_.size()) + ")";
    case Kind::FiniteCyclic:
      return "FiniteCyclic(" + std::to_string(order_) + ")";
    case Kind::SeifertClosed:
      return "SeifertClosed";
    case Kind::SeifertBounded:
      return "SeifertBounded";
  }
  return "";
}

bool GroupOracle::same_group(const GroupOracle& other) const
{
  return this == &other || (kind_ == other.kind_ && names_ == other.names_ &&
                            order_ == other.order_ && seifert_ == other.seifert_);
}

void GroupOracle::check_gens(const Word& w) const
{
  for (const auto& l : w.letters())
    if (l.gen < 0 || l.gen >= generator_count())
      throw UnknownGenerator("generator id " + std::to_string(l.gen) + " not valid for " +
                             describe());
}

GroupOracle::Syllables GroupOracle::seifert_syllables(const Word& w) const
{
  Syllables s;
  for (const auto& l : w.letters()) {
    if (l.gen == 0) {
      s.k += l.exp;
      continue;
    }
    if (!s.syl.empty() && s.syl.back().gen == l.gen)
      s.syl.back().exp += l.exp;
    else
      s.syl.push_back(l);
    auto& top = s.syl.back();
    const std::int64_t mu = factor_order(top.gen);
    if (mu > 0) {
      s.k += floor_div(top.exp, mu);
      top.exp = floor_mod(top.exp, mu);
    }
    if (top.exp == 0)
      s.syl.pop_back();
  }
  return s;
}

Word GroupOracle::from_syllables(const Syllables& s) const
{
  std::vector<Letter> letters;
  if (s.k != 0)
    letters.push_back({0, s.k});
  letters.insert(letters.end(), s.syl.begin(), s.syl.end());
  return Word(letters);
}

Word GroupOracle::normalize(const Word& w) const
{
  check_gens(w);
  switch (kind_) {
    case Kind::FreeAbelian:
    case Kind::FiniteCyclic: {
      std::vector<std::int64_t> e(names_.size(), 0);
      for (const auto& l : w.letters())
        e[static_cast<std::size_t>(l.gen)] += l.exp;
      std::vector<Letter> letters;
      for (std::size_t g = 0; g < e.size(); ++g) {
        const auto x = kind_ == Kind::FiniteCyclic ? floor_mod(e[g], order_) : e[g];
        if (x != 0)
          letters.push_back({static_cast<int>(g), x});
      }
      return Word(letters);
    }
    case Kind::SeifertClosed:
    case Kind::SeifertBounded:
      return from_syllables(seifert_syllables(w));
  }
  return w;
}

bool GroupOracle::recognized(const Word& w) const
{
  if (kind_ != Kind::SeifertClosed)
    return true;
  const auto s = seifert_syllables(w);
  return s.syl.empty() || (s.syl.size() == 1 && factor_order(s.syl[0].gen) > 0);
}

bool GroupOracle::is_central(const Word& w) const
{
  if (abelian_)
    return true;
  return seifert_syllables(w).syl.empty();
}

Conjugacy GroupOracle::conjugacy(const Word& w) const
{
  const Word x = normalize(w);
  if (!is_seifert()) {
    std::vector<std::int64_t> v(names_.size(), 0);
    for (const auto& l : x.letters())
      v[static_cast<std::size_t>(l.gen)] = l.exp;
    return {AbelianValueClass{v}, x, Word()};
  }
  if (kind_ == Kind::SeifertClosed && !recognized(x))
    throw UnrecognizedWord("word " + x.to_string(names_) +
                           " lies outside the recognized sublanguage");

  Word rep = x;
  Word conj;
  Syllables s = seifert_syllables(rep);
  while (s.syl.size() >= 2 && s.syl.front().gen == s.syl.back().gen) {
    const Word last = Word::generator(s.syl.back().gen, s.syl.back().exp);
    rep = normalize(last * rep * last.inverse());
    conj = last * conj;
    s = seifert_syllables(rep);
  }
  if (s.syl.empty())
    return {CentralClass{s.k}, rep, conj};
  if (s.syl.size() == 1) {
    const auto& l = s.syl[0];
    if (factor_order(l.gen) > 0) {
      const auto it = std::find(fiber_gen_.begin(), fiber_gen_.end(), l.gen);
      const int j = static_cast<int>(it - fiber_gen_.begin()) + 1;
      return {ExceptionalClass{j, l.exp, s.k}, rep, conj};
    }
    return {OpaqueClass{rep}, rep, conj};
  }

  // least rotation of the cyclic syllable sequence
  const std::size_t L = s.syl.size();
  std::size_t best = 0;
  auto rotated = [&](std::size_t t) {
    std::vector<Letter> v(s.syl.begin() + static_cast<std::ptrdiff_t>(t), s.syl.end());
    v.insert(v.end(), s.syl.begin(), s.syl.begin() + static_cast<std::ptrdiff_t>(t));
    return v;
  };
  for (std::size_t t = 1; t < L; ++t)
    if (rotated(t) < rotated(best))
      best = t;
  if (best != 0) {
    const Word prefix(std::vector<Letter>(s.syl.begin(),
                                          s.syl.begin() + static_cast<std::ptrdiff_t>(best)));
    const Word c = prefix.inverse();
    rep = normalize(c * rep * c.inverse());
    conj = c * conj;
    if (seifert_syllables(rep).syl != rotated(best))
      throw ConsistencyError("rotation of cyclic normal form failed");
  }
  return {OpaqueClass{rep}, rep, conj};
}

ClassId GroupOracle::class_id(const Word& w) const { return conjugacy(w).id; }

std::string GroupOracle::class_key(const ClassId& id) const
{
  return std::visit(
      [&](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CentralClass>)
          return Word::generator(0, c.k).to_string(names_);
        else if constexpr (std::is_same_v<T, ExceptionalClass>)
          return (Word::generator(0, c.k) * Word::generator(fiber_gen(c.fiber), c.i))
              .to_string(names_);
        else if constexpr (std::is_same_v<T, AbelianValueClass>) {
          std::vector<Letter> l;
          for (std::size_t g = 0; g < c.value.size(); ++g)
            l.push_back({static_cast<int>(g), c.value[g]});
          return Word(l).to_string(names_);
        } else
          return c.word.to_string(names_);
      },
      id);
}

std::string GroupOracle::class_label(const ClassId& id) const
{
  if (const auto* e = std::get_if<ExceptionalClass>(&id)) {
    const auto n = -(e->k * fiber_order(e->fiber) + e->i);
    return "C(" + Word::generator(fiber_gen(e->fiber), n).to_string(names_) + ")";
  }
  if (const auto* c = std::get_if<CentralClass>(&id))
    return "C(" + Word::generator(0, -c->k).to_string(names_) + ")";
  if (const auto* a = std::get_if<AbelianValueClass>(&id)) {
    std::vector<Letter> l;
    for (std::size_t g = 0; g < a->value.size(); ++g)
      l.push_back({static_cast<int>(g), -a->value[g]});
    return "C(" + format(Word(l)) + ")";
  }
  const auto& o = std::get<OpaqueClass>(id);
  return "C(" + format(o.word.inverse()) + ")";
}

std::shared_ptr<const FgAbelianGroup> GroupOracle::centralizer_group(const ClassId& id) const
{
  if (std::holds_alternative<ExceptionalClass>(id))
    return z1_;
  if (std::holds_alternative<OpaqueClass>(id))
    return z2_;
  return h1();
}

AbelianElement GroupOracle::centralizer_value(const Conjugacy& c, const Word& z) const
{
  const Word zn = normalize(z);
  if (std::holds_alternative<CentralClass>(c.id) || std::holds_alternative<AbelianValueClass>(c.id))
    return abelianize(zn);

  const Syllables zs = seifert_syllables(zn);
  auto fail = [&]() -> AbelianElement {
    throw IrreducibleTerm("element " + zn.to_string(names_) +
                          " not recognized in the centralizer of " +
                          c.representative.to_string(names_));
  };

  if (const auto* e = std::get_if<ExceptionalClass>(&c.id)) {
    const int gen = fiber_gen(e->fiber);
    if (zs.syl.size() > 1 || (zs.syl.size() == 1 && zs.syl[0].gen != gen))
      return fail();
    const Integer n = Integer(zs.k) * fiber_order(e->fiber) + (zs.syl.empty() ? 0 : zs.syl[0].exp);
    return AbelianElement(z1_, {n}, {});
  }

  // opaque: centralizer is generated by gamma0 and the root of the representative
  const Syllables rs = seifert_syllables(c.representative);
  std::vector<Letter> root;
  if (rs.syl.size() == 1) {
    root = {{rs.syl[0].gen, 1}};
  } else {
    const std::size_t L = rs.syl.size();
    for (std::size_t p = 1; p <= L; ++p) {
      if (L % p != 0)
        continue;
      bool periodic = true;
      for (std::size_t i = p; i < L && periodic; ++i)
        periodic = rs.syl[i] == rs.syl[i - p];
      if (periodic) {
        root.assign(rs.syl.begin(), rs.syl.begin() + static_cast<std::ptrdiff_t>(p));
        break;
      }
    }
  }
  std::vector<Letter> root_bar;
  std::int64_t finite_count = 0;
  for (auto it = root.rbegin(); it != root.rend(); ++it) {
    const std::int64_t mu = factor_order(it->gen);
    if (mu > 0) {
      ++finite_count;
      root_bar.push_back({it->gen, mu - it->exp});
    } else {
      root_bar.push_back({it->gen, -it->exp});
    }
  }
  auto power_of = [&](const std::vector<Letter>& r) -> std::int64_t {
    const std::size_t p = r.size();
    if (zs.syl.size() % p != 0)
      return -1;
    for (std::size_t i = 0; i < zs.syl.size(); ++i)
      if (!(zs.syl[i] == r[i % p]))
        return -1;
    return static_cast<std::int64_t>(zs.syl.size() / p);
  };
  if (zs.syl.empty())
    return AbelianElement(z2_, {Integer(zs.k), Integer(0)}, {});
  if (const auto n = power_of(root); n > 0)
    return AbelianElement(z2_, {Integer(zs.k), Integer(n)}, {});
  if (const auto n = power_of(root_bar); n > 0)
    return AbelianElement(z2_, {Integer(zs.k) + Integer(finite_count) * n, Integer(-n)}, {});
  return fail();
}

AbelianElement GroupOracle::abelianize(const Word& w) const
{
  check_gens(w);
  std::vector<Integer> e(names_.size(), Integer(0));
  for (const auto& l : w.letters())
    e[static_cast<std::size_t>(l.gen)] += l.exp;
  return abelianization_->evaluate(e);
}

Word GroupOracle::gamma0() const
{
  if (!is_seifert())
    throw InvalidInput("gamma0 requested from a non-Seifert oracle");
  return Word::generator(0);
}

int GroupOracle::fiber_gen(int j) const
{
  if (j < 1 || j > static_cast<int>(fiber_gen_.size()))
    throw InvalidInput("fiber index " + std::to_string(j) + " out of range");
  return fiber_gen_[static_cast<std::size_t>(j - 1)];
}

Word GroupOracle::fiber(int j) const { return Word::generator(fiber_gen(j)); }

std::int64_t GroupOracle::fiber_order(int j) const { return factor_order(fiber_gen(j)); }

}  // namespace orbitrace
