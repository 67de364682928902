#include "equidouble/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "equidouble/catalogue.hpp"
#include "equidouble/doubles.hpp"
#include "equidouble/errors.hpp"
#include "equidouble/modular_cat.hpp"
#include "equidouble/orbifold.hpp"
#include "equidouble/parallel.hpp"

namespace equidouble::cli {

namespace {

using json = nlohmann::ordered_json;

bool is_file(const std::string& ref) {
  std::error_code ec;
  return !ref.empty() && std::filesystem::is_regular_file(ref, ec);
}

bool listed(const std::vector<std::string>& names, const std::string& ref) {
  return std::find(names.begin(), names.end(), ref) != names.end();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

template <class T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(where + ": field '" + std::string(key) + "' has the wrong type");
  }
}

GroupPtr group_from_json(const json& j, const std::string& where) {
  auto table = field<std::vector<std::vector<int>>>(j, "table", where);
  if (j.contains("order") && field<int>(j, "order", where) != static_cast<int>(table.size())) {
    throw UsageError(where + ": order does not match the table");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels", where);
  std::string name = j.contains("name") ? field<std::string>(j, "name", where) : where;
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(labels), std::move(name));
}

GroupPtr load_group(const std::string& ref) {
  if (is_file(ref)) return group_from_json(read_json_file(ref), ref);
  return catalogue::group(ref);
}

// {"group": <name or group object>, "kernel": [...], "section": [...], "name": "..."}
ExtensionPtr load_extension(const std::string& ref) {
  if (!is_file(ref)) return std::make_shared<const GroupExtension>(catalogue::extension(ref));
  json j = read_json_file(ref);
  if (!j.contains("group")) throw UsageError(ref + ": missing field 'group'");
  GroupPtr h = j["group"].is_string() ? catalogue::group(j["group"].get<std::string>()) : group_from_json(j["group"], ref);
  auto kernel = field<std::vector<int>>(j, "kernel", ref);
  std::vector<int> section;
  if (j.contains("section")) section = field<std::vector<int>>(j, "section", ref);
  std::string name = j.contains("name") ? field<std::string>(j, "name", ref) : ref;
  return std::make_shared<const GroupExtension>(h, std::move(kernel), std::move(section), std::move(name));
}

Presentation load_presentation(const std::string& ref, int genus) {
  if (!is_file(ref)) return catalogue::presentation(ref, genus);
  json j = read_json_file(ref);
  Presentation p;
  p.generators = field<int>(j, "generators", ref);
  p.relations = field<std::vector<std::vector<int>>>(j, "relations", ref);
  validate(p);
  return p;
}

json encode(const Rational& q) { return to_string(q); }

json encode(const Cyclotomic& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

json encode(const AxiomReport& r) {
  json out = json::array();
  for (const auto& a : r) out.push_back(json{{"axiom", a.axiom}, {"status", to_string(a.status)}, {"witness", a.witness}});
  return out;
}

AxiomResult single(const std::string& name, bool ok) {
  AxiomResult a;
  a.axiom = name;
  a.status = ok ? AxiomStatus::pass : AxiomStatus::fail;
  return a;
}

json group_summary(const FiniteGroup& g) { return json{{"name", g.name()}, {"order", g.order()}}; }

json extension_summary(const GroupExtension& e) {
  return json{{"name", e.name()}, {"G", group_summary(*e.G())}, {"H", group_summary(*e.H())}, {"J", group_summary(*e.J())},
              {"section", e.section()}};
}

void require_dim(std::uint64_t dim, const RunConfig& c) {
  if (dim > c.budget_dim) {
    throw ResourceError("algebra dimension " + std::to_string(dim) + " exceeds --budget-dim " + std::to_string(c.budget_dim));
  }
}

CheckOptions options(const RunConfig& c) {
  CheckOptions o;
  o.sampled = c.sampled;
  return o;
}

json grading_summary(const JHopfDecoration& dec) {
  std::vector<std::size_t> dims(dec.J->order(), 0);
  for (int d : dec.grading) ++dims[d];
  json out = json::array();
  for (int j = 0; j < dec.J->order(); ++j) out.push_back(json{{"degree", j}, {"dim", dims[j]}});
  return out;
}

std::vector<int> monodromies(const RunConfig& c, const FiniteGroup& j) {
  if (c.monodromy >= 0) {
    if (c.monodromy >= j.order()) throw UsageError("--monodromy outside J");
    return {c.monodromy};
  }
  std::vector<int> all(j.order());
  for (int i = 0; i < j.order(); ++i) all[i] = i;
  return all;
}

// Outcome of a command: the report body and whether every check passed.
struct Outcome {
  json body;
  bool ok = true;
};

void add_report(Outcome& o, const char* key, const AxiomReport& r) {
  o.body[key] = encode(r);
  o.ok = o.ok && all_pass(r);
}

Outcome cmd_catalogue(const RunConfig&) {
  Outcome o;
  o.body["anchor"] = "identifiers";
  json groups = json::array();
  for (auto& n : catalogue::group_names()) groups.push_back(group_summary(*catalogue::group(n)));
  o.body["groups"] = groups;
  json exts = json::array();
  for (auto& n : catalogue::extension_names()) exts.push_back(extension_summary(catalogue::extension(n)));
  o.body["extensions"] = exts;
  o.body["presentations"] = catalogue::presentation_names();
  o.body["nerves"] = catalogue::nerve_names();
  o.body["weak_actions"] = catalogue::weak_action_names();
  return o;
}

Outcome cmd_dw(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "Z(M) = |Hom(pi_1(M), G)| / |G|";
  auto p = load_presentation(c.presentation, c.genus);
  auto g = load_group(c.group);
  o.body["presentation"] = json{{"name", c.presentation}, {"generators", p.generators}, {"relations", p.relations}};
  o.body["group"] = group_summary(*g);
  const auto homs = count_homs(p, *g, c.budget_homs);
  const Rational z = dw_invariant(p, *g, c.budget_homs);
  const Rational card = groupoid_cardinality(hom_groupoid(p, g, c.budget_homs));
  o.body["homs"] = homs;
  o.body["invariant"] = encode(z);
  o.body["groupoid_cardinality"] = encode(card);
  if (c.presentation == "Sigma_g") {
    o.body["genus"] = c.genus;
    o.body["surface_state_dim"] = surface_state_dim(c.genus, g, c.budget_homs);
  }
  o.ok = z == card;
  return o;
}

Outcome cmd_double(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "D(H) = K(H) # K[H], R = sum (delta_g # 1) (x) (delta_h # g)";
  auto h = load_group(c.group);
  o.body["group"] = group_summary(*h);
  require_dim(static_cast<std::uint64_t>(h->order()) * h->order(), c);
  auto d = drinfeld_double(*h);
  o.body["dim"] = d.hopf.dim();
  o.body["grading"] = grading_summary(trivial_decoration(d.hopf));
  add_report(o, "hopf", check_hopf_axioms(d.hopf, options(c)));
  add_report(o, "ribbon", check_ribbon_axioms(d.hopf, d.ribbon, options(c)));
  return o;
}

Outcome cmd_jdouble(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "D^J(G) = span{delta_h # g : h in H, g in G} in D(H)";
  auto e = load_extension(c.extension);
  o.body["extension"] = extension_summary(*e);
  require_dim(static_cast<std::uint64_t>(e->H()->order()) * e->G()->order(), c);
  auto jd = equivariant_double(*e);
  o.body["dim"] = jd.hopf.dim();
  o.body["grading"] = grading_summary(jd.decoration);
  add_report(o, "hopf", check_hopf_axioms(jd.hopf, options(c)));
  add_report(o, "jhopf", check_jhopf_axioms(jd.hopf, jd.decoration, options(c)));
  add_report(o, "restriction", AxiomReport{single("restriction_of_double", restriction_check(*e))});
  return o;
}

Outcome cmd_orbifold(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "(a # i)(b # j) = a phi_i(b) c_ij # ij";
  auto e = load_extension(c.extension);
  o.body["extension"] = extension_summary(*e);
  require_dim(static_cast<std::uint64_t>(e->H()->order()) * e->H()->order(), c);
  auto jd = equivariant_double(*e);
  auto orb = orbifold_algebra(jd.hopf, jd.decoration);
  auto rib = orbifold_ribbon(jd.hopf, jd.decoration, jd.ribbon, orb);
  o.body["dim"] = orb.dim();
  add_report(o, "hopf", check_hopf_axioms(orb, options(c)));
  add_report(o, "ribbon", check_ribbon_axioms(orb, rib, options(c)));
  add_report(o, "exactness", check_exactness(jd.hopf, jd.decoration, orb));
  if (c.check_psi) {
    o.body["psi_anchor"] = "Psi(delta_h # g # j) = delta_h # g s(j)";
    add_report(o, "psi", psi_check(*e));
  }
  auto split = search_splitting(jd.hopf, jd.decoration, kernel_grouplikes(*e), c.budget_homs);
  o.body["splitting_diagnostic"] = json{{"outcome", to_string(split.outcome)}, {"tried", split.tried}, {"choice", split.choice}};
  return o;
}

int s_matrix_bound(const RunConfig& c, const FiniteGroup& h) {
  require_dim(static_cast<std::uint64_t>(h.order()) * h.order(), c);
  return h.order();
}

Outcome cmd_smatrix(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "s_XY = tr(c_YX c_XY)";
  auto h = load_group(c.group);
  o.body["group"] = group_summary(*h);
  const int bound = s_matrix_bound(c, *h);
  auto s = s_matrix(h, bound);
  auto chars = s_matrix_from_characters(h, bound);
  const Cyclotomic d = det(s.entries);
  o.body["labels"] = s.labels;
  o.body["group_order"] = s.group_order;
  json rows = json::array();
  for (std::size_t r = 0; r < s.entries.rows(); ++r) {
    json row = json::array();
    for (std::size_t col = 0; col < s.entries.cols(); ++col) row.push_back(encode(s.entries(r, col)));
    rows.push_back(row);
  }
  o.body["entries"] = rows;
  o.body["determinant"] = encode(d);
  const bool agree = s.entries == chars.entries;
  const bool symmetric = s.entries == s.entries.transposed();
  AxiomReport checks{single("invertible", !d.is_zero()), single("symmetric", symmetric),
                     single("character_formula_agrees", agree)};
  add_report(o, "checks", checks);
  // CSV rendering needs the raw strings
  json csv = json::array();
  for (std::size_t r = 0; r < s.entries.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t col = 0; col < s.entries.cols(); ++col) row.push_back(s.entries(r, col).to_string());
    csv.push_back(row);
  }
  o.body["__csv"] = csv;
  return o;
}

ExtensionPtr extension_or_group(const RunConfig& c) {
  if (!c.extension.empty()) return load_extension(c.extension);
  return std::make_shared<const GroupExtension>(catalogue::trivial_extension(load_group(c.group)));
}

Outcome cmd_simples(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "Irr(H//G) = {(orbit, irreducible rep of the stabilizer)}";
  auto e = extension_or_group(c);
  o.body["extension"] = extension_summary(*e);
  auto s = simples_of_double(e);
  json list = json::array();
  long total = 0;
  for (const auto& m : s) {
    auto deg = m.degree();
    list.push_back(json{{"label", m.label}, {"degree", deg ? *deg : -1}, {"dim", m.dim()}});
    total += static_cast<long>(m.dim() * m.dim());
  }
  o.body["count"] = s.size();
  o.body["simples"] = list;
  o.body["sum_of_squared_dims"] = total;
  const long expected = static_cast<long>(e->H()->order()) * e->G()->order();
  add_report(o, "checks", AxiomReport{single("sum_of_squares_is_dim", total == expected)});
  return o;
}

json encode(const DiagramReport& rep) {
  std::vector<std::string> names;
  for (const auto& r : rep.results) {
    if (!listed(names, r.diagram)) names.push_back(r.diagram);
  }
  json out = json::array();
  for (const auto& n : names) {
    auto [count, bad] = rep.tally(n);
    json entry{{"diagram", n}, {"status", bad == 0 ? "pass" : "fail"}, {"instances", count}, {"failures", bad}};
    if (const auto* f = rep.first_failure(n)) entry["witness"] = f->tuple;
    out.push_back(entry);
  }
  return out;
}

json encode(const ModularityVerdict& v) {
  return json{{"psi_isomorphism", v.psi_isomorphism}, {"s_invertible", v.s_invertible},
              {"s_determinant", encode(v.s_determinant)}, {"simples", v.simples},
              {"orbifold_modular", v.orbifold_modular}, {"j_modular", v.j_modular_claim}};
}

bool verdict_ok(const ModularityVerdict& v) { return v.psi_isomorphism && v.s_invertible && v.j_modular_claim; }

Outcome cmd_verify_category(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "c_{U,V(x)W} = (1 (x) c_{U,W})(c_{U,V} (x) 1), theta_{U(x)V} = c c (theta_U (x) theta_V)";
  auto e = load_extension(c.extension);
  o.body["extension"] = extension_summary(*e);
  require_dim(static_cast<std::uint64_t>(e->H()->order()) * e->H()->order(), c);
  auto rep = check_equivariant_diagrams(*e, simples_of_double(e));
  o.body["diagrams"] = encode(rep);
  auto v = modularity_verdict(*e, e->H()->order());
  o.body["modularity"] = encode(v);
  o.ok = rep.all_pass() && verdict_ok(v);
  return o;
}

Outcome cmd_verify_all(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "D^J(G)^J = D(H) via Psi(delta_h # g # j) = delta_h # g s(j)";
  auto e = load_extension(c.extension);
  o.body["extension"] = extension_summary(*e);
  require_dim(static_cast<std::uint64_t>(e->H()->order()) * e->H()->order(), c);
  auto jd = equivariant_double(*e);
  const CheckOptions opt = options(c);

  // independent checks run concurrently; each writes only its own slot
  struct Slot {
    const char* key;
    std::function<std::pair<json, bool>()> run;
    json value;
    bool ok = true;
  };
  auto report = [](const AxiomReport& r) { return std::make_pair(encode(r), all_pass(r)); };
  std::vector<Slot> slots;
  slots.push_back({"hopf", [&] { return report(check_hopf_axioms(jd.hopf, opt)); }, {}, true});
  slots.push_back({"jhopf", [&] { return report(check_jhopf_axioms(jd.hopf, jd.decoration, opt)); }, {}, true});
  slots.push_back({"restriction",
                   [&] { return report(AxiomReport{single("restriction_of_double", restriction_check(*e))}); }, {}, true});
  slots.push_back({"psi", [&] { return report(psi_check(*e)); }, {}, true});
  slots.push_back({"diagrams",
                   [&] {
                     auto rep = check_equivariant_diagrams(*e, simples_of_double(e));
                     return std::make_pair(encode(rep), rep.all_pass());
                   },
                   {}, true});
  slots.push_back({"modularity",
                   [&] {
                     auto v = modularity_verdict(*e, e->H()->order());
                     return std::make_pair(encode(v), verdict_ok(v));
                   },
                   {}, true});
  parallel_for(slots.size(), [&](std::size_t i) {
    auto [value, ok] = slots[i].run();
    slots[i].value = std::move(value);
    slots[i].ok = ok;
  });
  for (auto& s : slots) {
    o.body[s.key] = std::move(s.value);
    o.ok = o.ok && s.ok;
  }
  return o;
}

std::vector<int> g_to_h(const GroupExtension& e) {
  std::vector<int> out(e.G()->order());
  for (int g = 0; g < e.G()->order(); ++g) out[g] = e.to_H(g);
  return out;
}

json orbit_summary(const ActionGroupoid& gamma) {
  std::vector<int> stab;
  for (const auto& orb : orbits(gamma)) stab.push_back(static_cast<int>(orb.stabilizer.size()));
  std::sort(stab.begin(), stab.end());
  return json{{"points", gamma.points()}, {"orbits", stab.size()}, {"stabilizer_orders", stab},
              {"cardinality", encode(groupoid_cardinality(gamma))}};
}

Outcome cmd_sectors(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "A_G(S^1, j) = H_j // G";
  auto e = load_extension(c.extension);
  o.body["extension"] = extension_summary(*e);
  const auto circle = circle_presentation();
  json list = json::array();
  for (int j : monodromies(c, *e->J())) {
    auto tb = twisted_bundle_groupoid(circle, *e, make_twist_hom(circle, *e->J(), {j}), c.budget_homs);
    auto direct = conjugation_groupoid(e->H(), e->coset(j), e->G(), g_to_h(*e));
    json bundles = orbit_summary(tb.groupoid);
    json coset = orbit_summary(direct);
    const bool match = bundles["orbits"] == coset["orbits"] && bundles["stabilizer_orders"] == coset["stabilizer_orders"];
    list.push_back(json{{"monodromy", j}, {"twisted_bundles", bundles}, {"coset_groupoid", coset},
                        {"status", match ? "pass" : "fail"}});
    o.ok = o.ok && match;
  }
  o.body["sectors"] = list;
  return o;
}

Outcome cmd_cech(const RunConfig& c) {
  Outcome o;
  o.body["anchor"] = "g_ab rho_{j_ab}(g_bc) c_{j_ab, j_bc} = g_ac";
  ExtensionPtr e;
  std::unique_ptr<WeakAction> wa;
  if (!c.extension.empty()) {
    e = load_extension(c.extension);
    o.body["extension"] = extension_summary(*e);
    wa = std::make_unique<WeakAction>(extension_to_weak_action(*e));
  } else {
    o.body["weak_action"] = c.weak_action;
    wa = std::make_unique<WeakAction>(catalogue::weak_action(c.weak_action));
  }
  o.body["nerve"] = c.nerve;
  std::vector<int> js = c.nerve == "point" ? std::vector<int>{0} : monodromies(c, *wa->J());
  json list = json::array();
  for (int j : js) {
    auto nerve = catalogue::nerve(c.nerve, j);
    validate(nerve, *wa->J());
    auto res = twisted_cech_h1(nerve, *wa, c.budget_homs);
    json entry{{"monodromy", j}, {"cocycles", res.cocycles}, {"classes", res.count}, {"representatives", res.classes}};
    if (e && c.nerve == "circle3") {
      auto direct = conjugation_groupoid(e->H(), e->coset(j), e->G(), g_to_h(*e));
      const auto expected = orbits(direct).size();
      entry["twisted_sector_orbits"] = expected;
      entry["status"] = expected == res.count ? "pass" : "fail";
      o.ok = o.ok && expected == res.count;
    }
    list.push_back(entry);
  }
  o.body["h1"] = list;
  return o;
}

using Command = Outcome (*)(const RunConfig&);

const std::vector<std::pair<std::string, Command>>& commands() {
  static const std::vector<std::pair<std::string, Command>> table{
      {"dw", cmd_dw},           {"double", cmd_double},
      {"jdouble", cmd_jdouble}, {"orbifold", cmd_orbifold},
      {"smatrix", cmd_smatrix}, {"simples", cmd_simples},
      {"verify-category", cmd_verify_category}, {"verify-all", cmd_verify_all},
      {"cech", cmd_cech},       {"sectors", cmd_sectors},
      {"catalogue", cmd_catalogue}};
  return table;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void render_text(const json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_primitive()) {
        os << pad << it.key() << ": " << scalar(it.value()) << "\n";
      } else if (flat(it.value())) {
        os << pad << it.key() << ":";
        for (const auto& x : it.value()) os << " " << scalar(x);
        os << "\n";
      } else {
        os << pad << it.key() << ":\n";
        render_text(it.value(), os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_primitive() || flat(x)) {
        os << pad << "-";
        if (x.is_primitive()) {
          os << " " << scalar(x);
        } else {
          for (const auto& y : x) os << " " << scalar(y);
        }
        os << "\n";
      } else {
        os << pad << "-\n";
        render_text(x, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

std::string render(const RunConfig& c, json body) {
  std::ostringstream os;
  if (c.format == "csv") {
    const auto& labels = body["labels"];
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << csv_cell(labels[i].get<std::string>());
    os << "\n";
    for (const auto& row : body["__csv"]) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i].get<std::string>());
      os << "\n";
    }
    return os.str();
  }
  body.erase("__csv");
  if (c.format == "text") {
    render_text(body, os, 0);
    return os.str();
  }
  return body.dump(2) + "\n";
}

void check_ref(const std::string& ref, const std::vector<std::string>& names, const char* what) {
  if (!is_file(ref) && !listed(names, ref)) throw UsageError(std::string("unknown ") + what + " '" + ref + "'");
}

}  // namespace

std::vector<std::string> subcommands() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : commands()) out.push_back(name);
  return out;
}

namespace {

std::unique_ptr<CLI::App> make_app(RunConfig& c) {
  auto app = std::make_unique<CLI::App>("Exact computations with equivariant Drinfeld doubles", "equidouble");
  app->require_subcommand(1);
  for (const auto& name : subcommands()) {
    auto* sub = app->add_subcommand(name);
    sub->add_option("--group", c.group, "catalogue group or JSON file");
    sub->add_option("--extension", c.extension, "catalogue extension or JSON file");
    sub->add_option("--presentation", c.presentation, "catalogue presentation or JSON file");
    sub->add_option("--nerve", c.nerve, "cover nerve: circle3 or point");
    sub->add_option("--weak-action", c.weak_action, "catalogue weak action");
    sub->add_option("--genus", c.genus, "genus for Sigma_g")->check(CLI::NonNegativeNumber);
    sub->add_option("--monodromy", c.monodromy, "J-element; all of J when omitted")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-homs", c.budget_homs, "cap on enumerated candidates")->check(CLI::PositiveNumber);
    sub->add_option("--budget-dim", c.budget_dim, "cap on algebra dimension")->check(CLI::PositiveNumber);
    sub->add_flag("--sampled", c.sampled, "check axioms on a seeded sample of basis tuples");
    sub->add_flag("--check-psi", c.check_psi, "include the Psi isomorphism checks");
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "write the report here");
  }
  return app;
}

void parse_into(CLI::App& app, RunConfig& c, const std::vector<std::string>& args) {
  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  app.parse(rest);
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
}

void validate_config(const RunConfig& c) {
  const auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(c.command + " needs " + flag);
  };
  if (c.command == "dw") {
    need(c.presentation, "--presentation");
    need(c.group, "--group");
  } else if (c.command == "double" || c.command == "smatrix") {
    need(c.group, "--group");
  } else if (c.command == "simples") {
    if (c.group.empty() && c.extension.empty()) throw UsageError("simples needs --extension or --group");
  } else if (c.command == "cech") {
    if (c.extension.empty() == c.weak_action.empty()) throw UsageError("cech needs exactly one of --extension, --weak-action");
  } else if (c.command != "catalogue") {
    need(c.extension, "--extension");
  }
  if (!c.group.empty()) check_ref(c.group, catalogue::group_names(), "group");
  if (!c.extension.empty()) check_ref(c.extension, catalogue::extension_names(), "extension");
  if (!c.presentation.empty()) check_ref(c.presentation, catalogue::presentation_names(), "presentation");
  if (!c.weak_action.empty() && !listed(catalogue::weak_action_names(), c.weak_action)) {
    throw UsageError("unknown weak action '" + c.weak_action + "'");
  }
  if (!listed(catalogue::nerve_names(), c.nerve)) throw UsageError("unknown nerve '" + c.nerve + "'");
  if (c.format == "csv" && c.command != "smatrix") throw UsageError("--format csv is only available for smatrix");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  auto app = make_app(c);
  try {
    parse_into(*app, c, args);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  validate_config(c);
  return c;
}

RunResult run(const RunConfig& config) {
  RunResult r;
  Command fn = nullptr;
  for (const auto& [name, f] : commands()) {
    if (name == config.command) fn = f;
  }
  if (!fn) {
    r.exit_code = kExitUsage;
    r.error = "unknown command '" + config.command + "'";
    return r;
  }
  try {
    Outcome o = fn(config);
    json body;
    body["schema"] = 1;
    body["command"] = config.command;
    body["status"] = o.ok ? "pass" : "fail";
    body.update(o.body);
    r.report = render(config, std::move(body));
    r.exit_code = o.ok ? kExitOk : kExitCheckFailed;
  } catch (const UsageError& e) {
    r.exit_code = kExitUsage;
    r.error = e.what();
  } catch (const ConstructionError& e) {
    r.exit_code = kExitUsage;
    r.error = e.what();
  } catch (const ResourceError& e) {
    r.exit_code = kExitResource;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.exit_code = kExitCheckFailed;
    r.error = e.what();
  }
  if (!config.out.empty() && !r.report.empty()) {
    std::ofstream out(config.out, std::ios::binary);
    out << r.report;
    if (!out) {
      r.exit_code = kExitUsage;
      r.error = "cannot write '" + config.out + "'";
    }
  }
  return r;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  auto app = make_app(c);
  try {
    parse_into(*app, c, args);
    validate_config(c);
  } catch (const CLI::ParseError& e) {
    const int code = app->exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  RunResult r = run(c);
  if (c.out.empty()) out << r.report;
  if (!r.error.empty()) err << "error: " << r.error << "\n";
  return r.exit_code;
}

}  // namespace equidouble::cli
