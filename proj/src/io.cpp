#include "orbitrace/io.hpp"

#include <limits>

#include "orbitrace/errors.hpp"

namespace orbitrace::io {

namespace {

const json& field(const json& j, const char* key)
{
  if (!j.is_object())
    throw SchemaError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t int_field(const json& j, const char* key)
{
  const auto& v = field(j, key);
  if (!v.is_number_integer())
    throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t as_int(const json& v, const std::string& what)
{
  if (!v.is_number_integer())
    throw SchemaError(what + " must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

json to_json(const Integer& n)
{
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

Integer integer_from_json(const json& j)
{
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("expected an integer");
}

json to_json(const Rational& q)
{
  return {{"num", to_json(Integer(numerator(q)))}, {"den", to_json(Integer(denominator(q)))}};
}

Rational rational_from_json(const json& j)
{
  const Integer num = integer_from_json(field(j, "num"));
  const Integer den = integer_from_json(field(j, "den"));
  if (den <= 0)
    throw SchemaError("rational denominator must be positive");
  return Rational(num, den);
}

json to_json(const FgAbelianGroup& g)
{
  json t = json::array();
  for (const auto& d : g.torsion())
    t.push_back(to_json(d));
  return {{"rank", g.free_rank()}, {"torsion", t}};
}

json to_json(const AbelianElement& a)
{
  json f = json::array(), t = json::array();
  for (const auto& x : a.free_part())
    f.push_back(to_json(x));
  for (const auto& x : a.torsion_part())
    t.push_back(to_json(x));
  return {{"free", f}, {"torsion", t}, {"group", to_json(a.group())}};
}

OraclePtr oracle_from_json(const json& j)
{
  const auto& kind = field(j, "kind");
  if (!kind.is_string())
    throw SchemaError("oracle kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "free_abelian")
    return GroupOracle::free_abelian(static_cast<int>(int_field(j, "rank")));
  if (k == "finite_cyclic")
    return GroupOracle::finite_cyclic(int_field(j, "order"));
  if (k == "seifert")
    return GroupOracle::seifert(seifert_from_json(j));
  throw SchemaError("unknown oracle kind '" + k + "'");
}

json oracle_to_json(const GroupOracle& oracle)
{
  switch (oracle.kind()) {
    case GroupOracle::Kind::FreeAbelian:
      return {{"kind", "free_abelian"}, {"rank", oracle.generator_count()}};
    case GroupOracle::Kind::FiniteCyclic:
      return {{"kind", "finite_cyclic"}, {"order", oracle.cyclic_order()}};
    default: {
      json out = seifert_to_json(*oracle.seifert_data());
      out["kind"] = "seifert";
      return out;
    }
  }
}

Word word_from_json(const json& j, const GroupOracle& oracle)
{
  if (!j.is_array())
    throw SchemaError("word must be an array of [generator, exponent] pairs");
  std::vector<Letter> letters;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw SchemaError("word letter must be a [generator, exponent] pair");
    int gen = -1;
    if (p[0].is_string()) {
      gen = oracle.generator_id(p[0].get<std::string>());
      if (gen < 0)
        throw UnknownGenerator("unknown generator '" + p[0].get<std::string>() + "'");
    } else {
      gen = static_cast<int>(as_int(p[0], "generator id"));
      if (gen < 0 || gen >= oracle.generator_count())
        throw UnknownGenerator("generator id " + std::to_string(gen) + " out of range");
    }
    letters.push_back({gen, as_int(p[1], "exponent")});
  }
  return Word(letters);
}

json word_to_json(const Word& w, const GroupOracle& oracle)
{
  json out = json::array();
  for (const auto& l : w.letters())
    out.push_back({oracle.generator_names()[static_cast<std::size_t>(l.gen)], l.exp});
  return out;
}

SeifertData seifert_from_json(const json& j)
{
  if (!j.is_object())
    throw SchemaError("Seifert data must be an object");
  const bool closed = j.contains("closed");
  const bool bounded = j.contains("bounded");
  if (closed == bounded)
    throw SchemaError("Seifert data needs exactly one of 'closed' or 'bounded'");
  if (closed) {
    const auto& c = j["closed"];
    std::vector<Fiber> fibers;
    const auto& fs = field(c, "fibers");
    if (!fs.is_array())
      throw SchemaError("fibers must be an array");
    for (const auto& f : fs) {
      if (!f.is_array() || f.size() != 2)
        throw SchemaError("closed fiber must be [mu, beta]");
      fibers.push_back({as_int(f[0], "mu"), as_int(f[1], "beta")});
    }
    return SeifertData::closed(int_field(c, "genus"), int_field(c, "b"), std::move(fibers));
  }
  const auto& c = j["bounded"];
  std::vector<std::int64_t> mus;
  const auto& fs = field(c, "fibers");
  if (!fs.is_array())
    throw SchemaError("fibers must be an array");
  for (const auto& f : fs)
    mus.push_back(as_int(f, "mu"));
  return SeifertData::bounded(int_field(c, "genus"), int_field(c, "boundary"), mus);
}

json seifert_to_json(const SeifertData& d)
{
  json fibers = json::array();
  if (d.is_closed()) {
    for (const auto& f : d.fibers)
      fibers.push_back({f.mu, f.beta});
    return {{"closed", {{"genus", d.genus}, {"b", d.b}, {"fibers", fibers}}}};
  }
  for (const auto& f : d.fibers)
    fibers.push_back(f.mu);
  return {{"bounded", {{"genus", d.genus}, {"boundary", d.boundary}, {"fibers", fibers}}}};
}

S1CWComplex s1cw_from_json(const json& j)
{
  auto oracle = oracle_from_json(field(j, "oracle"));
  const Word g0 = word_from_json(field(j, "gamma0"), *oracle);
  const auto& cs = field(j, "cells");
  if (!cs.is_array())
    throw SchemaError("cells must be an array");
  std::vector<S1Cell> cells;
  for (const auto& c : cs)
    cells.push_back({static_cast<int>(int_field(c, "dim")), int_field(c, "isotropy"),
                     word_from_json(field(c, "word"), *oracle)});
  return S1CWComplex(std::move(oracle), g0, std::move(cells));
}

json s1cw_to_json(const S1CWComplex& x)
{
  json cells = json::array();
  for (const auto& c : x.cells())
    cells.push_back({{"dim", c.dim}, {"isotropy", c.isotropy}, {"word", word_to_json(c.word, *x.oracle())}});
  return {{"oracle", oracle_to_json(*x.oracle())},
          {"gamma0", word_to_json(x.gamma0(), *x.oracle())},
          {"cells", cells}};
}

T2CWComplex t2cw_from_json(const json& j)
{
  auto oracle = oracle_from_json(field(j, "oracle"));
  const auto& cs = field(j, "cells");
  if (!cs.is_array())
    throw SchemaError("cells must be an array");
  std::vector<T2Cell> cells;
  for (const auto& c : cs) {
    const auto& tw = field(c, "twist");
    if (!tw.is_array() || tw.size() != 2)
      throw SchemaError("twist must be [a, b]");
    cells.push_back({static_cast<int>(int_field(c, "dim")), word_from_json(field(c, "g1"), *oracle),
                     word_from_json(field(c, "g2"), *oracle), as_int(tw[0], "twist a"),
                     as_int(tw[1], "twist b")});
  }
  return T2CWComplex(std::move(oracle), std::move(cells));
}

json t2cw_to_json(const T2CWComplex& x)
{
  json cells = json::array();
  for (const auto& c : x.cells())
    cells.push_back({{"dim", c.dim},
                     {"g1", word_to_json(c.g1, *x.oracle())},
                     {"g2", word_to_json(c.g2, *x.oracle())},
                     {"twist", {c.a, c.b}}});
  return {{"oracle", oracle_to_json(*x.oracle())}, {"cells", cells}};
}

json class_to_json(const ClassId& id)
{
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CentralClass>)
          return {{"type", "central"}, {"k", c.k}};
        else if constexpr (std::is_same_v<T, ExceptionalClass>)
          return {{"type", "exceptional"}, {"fiber", c.fiber}, {"i", c.i}, {"k", c.k}};
        else if constexpr (std::is_same_v<T, AbelianValueClass>)
          return {{"type", "abelian"}, {"value", c.value}};
        else {
          json w = json::array();
          for (const auto& l : c.word.letters())
            w.push_back({l.gen, l.exp});
          return {{"type", "opaque"}, {"word", w}};
        }
      },
      id);
}

json to_json(const ComponentClass& c)
{
  json out = json::array();
  for (const auto& [id, v] : c.components())
    out.push_back({{"class", class_to_json(id)},
                   {"key", c.oracle()->class_key(id)},
                   {"label", c.oracle()->class_label(id)},
                   {"value", to_json(v.value)},
                   {"image", to_json(v.image)}});
  return out;
}

json to_json(const Chain1& c)
{
  json out = json::array();
  for (const auto& [k, n] : c.terms())
    out.push_back({{"u", word_to_json(k.first, *c.oracle())},
                   {"v", word_to_json(k.second, *c.oracle())},
                   {"coeff", to_json(n)}});
  return out;
}

}  // namespace orbitrace::io
