#include "orbitrace/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orbitrace/errors.hpp"
#include "orbitrace/seifert.hpp"

namespace orbitrace::report {

namespace {

json tag(json value, const char* pipeline)
{
  return {{"value", std::move(value)}, {"pipeline", pipeline}};
}

json rational_vector(const std::vector<Rational>& v)
{
  json out = json::array();
  for (const auto& q : v)
    out.push_back(io::to_json(q));
  return out;
}

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& k)
{
  std::vector<Rational> out;
  for (const auto& q : v)
    out.push_back(q * k);
  return out;
}

/// Adds integer deltas to identity coefficients of homotopy entries.
void apply_patches(std::vector<ChainLevel>& levels, const json& patches)
{
  if (!patches.is_array())
    throw SchemaError("homotopy_patch must be an array");
  for (const auto& p : patches) {
    if (!p.is_object() || !p.contains("level") || !p.contains("row") || !p.contains("col") ||
        !p.contains("delta"))
      throw SchemaError("homotopy_patch entries need level, row, col and delta");
    const auto lvl = p["level"].get<std::size_t>();
    const auto row = p["row"].get<std::size_t>();
    const auto col = p["col"].get<std::size_t>();
    const auto delta = io::integer_from_json(p["delta"]);
    if (lvl >= levels.size())
      throw SchemaError("homotopy_patch level out of range");
    auto maps = levels[lvl].homotopy.maps();
    if (maps.empty() || row >= maps[0].rows() || col >= maps[0].cols())
      throw SchemaError("homotopy_patch entry out of range");
    maps[0](row, col) += GroupRingElement::monomial(maps[0].oracle(), Word(), delta);
    levels[lvl].homotopy = Homotopy(std::move(maps), levels[lvl].homotopy.eta());
  }
}

struct S1Section {
  json out;
  bool agreement = true;
  ComponentClass geometric;
};

S1Section s1_section(const S1CWComplex& x, const json* patches)
{
  const auto& G = *x.oracle();
  const auto val = validate(x);
  if (!val.ok)
    throw InvalidInput("invalid S1-CW complex: " + val.violations.front());

  S1Section sec{json::object(), true, ComponentClass(x.oracle())};
  json& out = sec.out;

  const Chain1 chi = chi_s1(x);
  const bool chi_cycle = boundary(chi).is_zero();
  sec.geometric = reduce_class(chi);
  out["chi_s1"] = tag(io::to_json(chi), "geometric");

  auto levels = to_chain_data(x);
  if (patches)
    apply_patches(levels, *patches);
  bool relation = true, level_cycles = true;
  json lv = json::array();
  Chain1 filtered(x.oracle());
  for (const auto& l : levels) {
    const bool rel = verify_homotopy(l.complex, l.homotopy);
    const auto d = l.complex.total_boundary();
    const auto D = l.homotopy.folded(l.complex);
    const bool cyc = mat_trace_product(d, D) == mat_trace_product(D, d);
    relation = relation && rel;
    level_cycles = level_cycles && cyc;
    const Chain1 t = trace_chain(d, D);
    filtered += t;
    lv.push_back({{"degree", l.complex.min_degree()},
                  {"homotopy_relation", rel},
                  {"trace_cycle", cyc},
                  {"trace", io::to_json(t)}});
  }
  out["levels"] = tag(lv, "trace");

  json components = {{"geometric", tag(io::to_json(sec.geometric), "geometric")}};
  bool equal = false;
  if (boundary(filtered).is_zero()) {
    const auto fc = reduce_class(filtered);
    equal = fc == sec.geometric;
    components["trace"] = tag(io::to_json(fc), "trace");
  } else {
    components["trace"] = tag(nullptr, "trace");
  }
  out["components"] = components;

  const auto [prime, doubleprime] = split_components(sec.geometric);
  out["split"] = {{"prime", tag(io::to_json(prime), "geometric")},
                  {"doubleprime", tag(io::to_json(doubleprime), "geometric")}};

  const auto eps = epsilon_star(chi);
  const auto chi1 = chi1_closed_form(x);
  out["epsilon_star"] = tag(io::to_json(eps), "geometric");
  out["chi1"] = tag(io::to_json(chi1), "closed_form");
  out["orbit_euler_characteristic"] = tag(x.orbit_euler_characteristic(), "cells");
  if (!x.has_fixed_point())
    out["pd_euler"] = tag(io::to_json(pd_euler(x)), "cells");
  out["h1"] = tag(io::to_json(*G.h1()), "snf");

  const bool eps_ok = eps == chi1 && eps == sec.geometric.total_image();
  out["checks"] = {{"chi_s1_cycle", chi_cycle},
                   {"homotopy_relation", relation},
                   {"trace_cycle", level_cycles},
                   {"pipelines_agree", equal},
                   {"epsilon_star", eps_ok}};
  sec.agreement = chi_cycle && relation && level_cycles && equal && eps_ok;
  return sec;
}

json flags_json(const GroupOracle& G)
{
  return {{"exact", G.exact()}, {"formal", !G.exact()}};
}

Outcome run_s1cw(const json& input)
{
  const auto x = io::s1cw_from_json(input);
  const json* patches = input.contains("homotopy_patch") ? &input["homotopy_patch"] : nullptr;
  auto sec = s1_section(x, patches);
  json rep = {{"kind", "s1cw"}, {"input", io::s1cw_to_json(x)}, {"flags", flags_json(*x.oracle())}};
  if (patches)
    rep["input"]["homotopy_patch"] = *patches;
  rep.update(sec.out);
  rep["agreement"] = sec.agreement;
  return {rep, sec.agreement};
}

Outcome run_t2cw(const json& input)
{
  const auto x = io::t2cw_from_json(input);
  const auto levels = t2_chain_data(x);
  bool vanishing = true, relation = true;
  json lv = json::array();
  for (const auto& l : levels) {
    const bool rel = verify_homotopy(l.complex, l.homotopy);
    const bool van = level_trace_vanishes(l);
    relation = relation && rel;
    vanishing = vanishing && van;
    lv.push_back({{"degree", l.complex.min_degree()}, {"homotopy_relation", rel}, {"zero_chain", van}});
  }
  json rep = {{"kind", "t2cw"},
              {"input", io::t2cw_to_json(x)},
              {"levels", tag(lv, "trace")},
              {"vanishing", tag(vanishing, "trace")},
              {"checks", {{"homotopy_relation", relation}, {"vanishing", vanishing}}}};
  const bool ok = vanishing && relation;
  rep["agreement"] = ok;
  return {rep, ok};
}

Outcome run_seifert(const json& input)
{
  const auto d = io::seifert_from_json(input);
  const auto x = from_seifert(d);
  const auto& G = *x.oracle();
  const bool adm = admissible(d);

  json rep = {{"kind", "seifert"}, {"input", io::seifert_to_json(d)}};
  json flags = flags_json(G);
  flags["admissible"] = adm;
  rep["flags"] = flags;

  const auto h = h1(d);
  json fibers = json::array();
  for (const auto& f : h.fibers)
    fibers.push_back(io::to_json(f));
  rep["h1"] = {{"group", tag(io::to_json(*h.group), "snf")},
               {"gamma0", tag(io::to_json(h.gamma0), "snf")},
               {"fibers", tag(fibers, "snf")}};
  rep["chi_surface"] = tag(d.chi_surface(), "formula");
  if (d.is_closed())
    rep["euler_number"] = tag(io::to_json(euler_number(d)), "formula");
  const Rational chiv = orbifold_chi(d);
  rep["orbifold_chi"] = tag(io::to_json(chiv), "formula");
  const auto go = gamma0_order(d);
  rep["gamma0_order"] = {{"order", tag(go.order ? io::to_json(*go.order) : json("infinite"), "snf")},
                         {"criterion_agrees", go.criterion_agrees}};
  rep["dt_obstruction"] = tag(dt_obstruction(d), "snf");

  auto sec = s1_section(x, nullptr);
  rep["s1cw"] = sec.out;
  json checks = sec.out["checks"];
  checks["gamma0_criterion"] = go.criterion_agrees;

  if (adm) {
    const auto cf = components_closed_form(d, x.oracle());
    rep["components_closed_form"] = tag(io::to_json(cf), "closed_form");
    checks["closed_form_agrees"] = cf == sec.geometric;

    const auto pd = pd_euler_seifert(d);
    rep["pd_euler"] = tag(io::to_json(pd), "closed_form");
    const auto prime = split_components(sec.geometric).first;
    checks["pd_cells_agree"] = pd == pd_euler(x);
    checks["pd_plus_prime_image_zero"] = (pd + prime.total_image()).is_zero();

    if (G.exact()) {
      const auto g0q = rational_image(h.gamma0);
      const auto prime_q = rational_image(prime.total_image());
      const auto pd_q = rational_image(pd);
      rep["rational"] = {{"pd_euler", tag(rational_vector(pd_q), "closed_form")},
                         {"prime_image", tag(rational_vector(prime_q), "geometric")},
                         {"chi_v_gamma0", tag(rational_vector(scaled(g0q, chiv)), "formula")}};
      checks["prime_rational"] = prime_q == scaled(g0q, -chiv);
      checks["pd_rational"] = pd_q == scaled(g0q, chiv);
    }
  }
  rep["checks"] = checks;
  bool ok = true;
  for (const auto& [k, v] : checks.items())
    ok = ok && v.get<bool>();
  rep["agreement"] = ok;
  return {rep, ok};
}

void render(std::ostringstream& os, const json& j, int indent)
{
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.contains("value") && j.contains("pipeline") && j.size() == 2) {
      os << "[" << j["pipeline"].get<std::string>() << "] ";
      render(os, j["value"], indent);
      return;
    }
    os << "\n";
    for (const auto& [k, v] : j.items()) {
      os << pad << k << ": ";
      render(os, v, indent + 2);
    }
    return;
  }
  if (j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("label")) {
    os << "\n";
    for (const auto& c : j)
      os << pad << "- " << c["label"].get<std::string>() << " " << c["value"].dump() << "\n";
    return;
  }
  os << j.dump() << "\n";
}

}  // namespace

Kind parse_kind(const std::string& name)
{
  if (name == "seifert")
    return Kind::Seifert;
  if (name == "s1cw")
    return Kind::S1CW;
  if (name == "t2cw")
    return Kind::T2CW;
  throw SchemaError("unknown report kind '" + name + "'");
}

std::string kind_name(Kind kind)
{
  switch (kind) {
    case Kind::Seifert:
      return "seifert";
    case Kind::S1CW:
      return "s1cw";
    case Kind::T2CW:
      return "t2cw";
  }
  return "";
}

Kind detect_kind(const json& input)
{
  if (!input.is_object())
    throw SchemaError("input must be a JSON object");
  if (input.contains("kind") && input["kind"].is_string())
    return parse_kind(input["kind"].get<std::string>());
  if (input.contains("closed") || input.contains("bounded"))
    return Kind::Seifert;
  if (input.contains("cells") && input["cells"].is_array() && !input["cells"].empty() &&
      input["cells"][0].is_object() && input["cells"][0].contains("twist"))
    return Kind::T2CW;
  return Kind::S1CW;
}

Outcome run(Kind kind, const json& input)
{
  if (!input.is_object())
    throw SchemaError("input must be a JSON object");
  try {
    switch (kind) {
      case Kind::Seifert:
        return run_seifert(input);
      case Kind::S1CW:
        return run_s1cw(input);
      case Kind::T2CW:
        return run_t2cw(input);
    }
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("unknown report kind");
}

CrosscheckResult crosscheck(const std::filesystem::path& dir)
{
  if (!std::filesystem::is_directory(dir))
    throw SchemaError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());

  CrosscheckResult res;
  json entries = json::array();
  for (const auto& f : files) {
    json entry = {{"file", f.filename().string()}};
    try {
      std::ifstream in(f);
      json input;
      try {
        input = json::parse(in);
      } catch (const json::exception& e) {
        throw SchemaError(e.what());
      }
      const Kind kind = detect_kind(input);
      entry["kind"] = kind_name(kind);
      const auto out = run(kind, input);
      entry["agreement"] = out.agreement;
      entry["checks"] = out.report["checks"];
      (out.agreement ? res.passed : res.failed)++;
    } catch (const SchemaError& e) {
      entry["error"] = std::string("schema: ") + e.what();
      res.errors++;
    } catch (const Error& e) {
      entry["error"] = std::string("computation: ") + e.what();
      res.errors++;
    }
    entries.push_back(entry);
  }
  res.summary = {{"total", files.size()},
                 {"passed", res.passed},
                 {"failed", res.failed},
                 {"errors", res.errors},
                 {"entries", entries}};
  return res;
}

std::string render_text(const json& report)
{
  std::ostringstream os;
  for (const auto& [k, v] : report.items()) {
    os << k << ": ";
    render(os, v, 2);
  }
  return os.str();
}

}  // namespace orbitrace::report
