// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "equidouble/catalogue.hpp"
#include "equidouble/cli.hpp"
#include "equidouble/doubles.hpp"
#include "equidouble/dw.hpp"
#include "equidouble/groupoids.hpp"
#include "equidouble/modular_cat.hpp"
#include "equidouble/orbifold.hpp"

using namespace equidouble;

namespace {

// collects failure messages of one criterion
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string first_bad(const AxiomReport& r) {
  const auto* f = first_failure(r);
  return f ? f->axiom : std::string("?");
}

int s3_simple_count = -1;  // filled by criterion 4, reused by criterion 7

void schreier_round_trip(Check& c) {
  int extensions = 0;
  for (const auto& name : catalogue::extension_names()) {
    auto ext = catalogue::extension(name);
    if (ext.H()->order() > 24) continue;
    ++extensions;
    auto wa = extension_to_weak_action(ext);
    auto back = weak_action_to_extension(wa);
    c.expect(find_group_isomorphism(*ext.H(), *back.H()).has_value(), name + ": H not recovered");
    c.expect(back.G()->order() == ext.G()->order() && back.J()->order() == ext.J()->order(), name + ": G or J changed");
    c.expect(weak_actions_isomorphic(wa, extension_to_weak_action(back)).has_value(), name + ": weak action not recovered");
  }
  c.expect(extensions >= 6, "fewer than 6 catalogue extensions");
  for (const auto& name : catalogue::weak_action_names()) {
    auto wa = catalogue::weak_action(name);
    auto ext = weak_action_to_extension(wa);
    c.expect(weak_actions_isomorphic(wa, extension_to_weak_action(ext)).has_value(), name + ": not recovered");
  }
}

HopfData corrupted(const HopfData& h, const std::function<void(HopfStructure&)>& edit) {
  HopfStructure s = h.structure();
  edit(s);
  return HopfData(std::move(s));
}

void hopf_suites(Check& c) {
  for (auto name : {"Z2", "Z4", "S3", "D4", "Q8"}) {
    auto d = drinfeld_double(*catalogue::group(name));
    auto hopf = check_hopf_axioms(d.hopf);
    auto rib = check_ribbon_axioms(d.hopf, d.ribbon);
    c.expect(all_pass(hopf), std::string("D(") + name + ") hopf: " + first_bad(hopf));
    c.expect(all_pass(rib), std::string("D(") + name + ") ribbon: " + first_bad(rib));
  }
  for (auto name : {"A3-S3", "Z2-Z4", "Z4-D4"}) {
    auto jd = equivariant_double(catalogue::extension(name));
    auto hopf = check_hopf_axioms(jd.hopf);
    auto jh = check_jhopf_axioms(jd.hopf, jd.decoration);
    c.expect(all_pass(hopf), std::string(name) + " hopf: " + first_bad(hopf));
    c.expect(all_pass(jh), std::string(name) + " jhopf: " + first_bad(jh));
  }

  // single-entry corruptions
  auto d = drinfeld_double(*catalogue::group("S3"));
  const Index dim = static_cast<Index>(d.hopf.dim());
  std::vector<std::pair<std::string, HopfData>> bad;
  bad.emplace_back("product", corrupted(d.hopf, [&](HopfStructure& s) { add_term(s.mult[7 * dim + 9], 3, Cyclotomic(1)); }));
  bad.emplace_back("unit", corrupted(d.hopf, [&](HopfStructure& s) { add_term(s.unit, 1, Cyclotomic(1)); }));
  bad.emplace_back("coproduct", corrupted(d.hopf, [&](HopfStructure& s) { add_term(s.comult[11], 0, 0, Cyclotomic(1)); }));
  bad.emplace_back("counit", corrupted(d.hopf, [&](HopfStructure& s) { s.counit[5] += Cyclotomic(1); }));
  bad.emplace_back("antipode", corrupted(d.hopf, [&](HopfStructure& s) { s.antipode[13] = scale(s.antipode[13], Cyclotomic(2)); }));
  for (const auto& [what, h] : bad) c.expect(!all_pass(check_hopf_axioms(h)), "corrupted " + what + " not detected");

  RibbonDecoration r = d.ribbon;
  r.R.erase(r.R.begin());
  c.expect(!all_pass(check_ribbon_axioms(d.hopf, r)), "corrupted R-matrix not detected");
  RibbonDecoration t = d.ribbon;
  add_term(t.theta, 0, Cyclotomic(1));
  c.expect(!all_pass(check_ribbon_axioms(d.hopf, t)), "corrupted twist not detected");

  auto jd = equivariant_double(catalogue::extension("Z2-Z4"));
  JHopfDecoration phi = jd.decoration;
  phi.phi[1][2] = scale(phi.phi[1][2], Cyclotomic(-1));
  c.expect(!all_pass(check_jhopf_axioms(jd.hopf, phi)), "corrupted phi not detected");
  JHopfDecoration coh = jd.decoration;
  coh.c[3] = scale(coh.c[3], Cyclotomic(2));
  c.expect(!all_pass(check_jhopf_axioms(jd.hopf, coh)), "corrupted coherence element not detected");
  JHopfDecoration grading = jd.decoration;
  grading.grading[0] = 1;
  c.expect(!all_pass(check_jhopf_axioms(jd.hopf, grading)), "corrupted grading not detected");
}

void psi_isomorphism(Check& c) {
  const std::vector<std::string> parts{"bijective", "product", "coproduct", "rmatrix", "twist"};
  for (auto name : {"A3-S3", "Z2-Z4"}) {
    auto r = psi_check(catalogue::extension(name));
    c.expect(r.size() == parts.size(), std::string(name) + ": wrong number of sub-checks");
    for (std::size_t i = 0; i < std::min(r.size(), parts.size()); ++i) {
      c.expect(r[i].axiom == parts[i], std::string(name) + ": unexpected sub-check " + r[i].axiom);
      c.expect(r[i].status == AxiomStatus::pass, std::string(name) + ": " + r[i].axiom + " fails");
    }
  }
}

void modularity(Check& c) {
  for (auto name : {"S3", "Z2", "Z4"}) {
    auto g = catalogue::group(name);
    auto s = s_matrix(g);
    auto chars = s_matrix_from_characters(g);
    const Cyclotomic d = det(s.entries);
    c.expect(!d.is_zero(), std::string("S(") + name + ") is singular");
    c.expect(s.entries == chars.entries, std::string("S(") + name + "): trace and character formulas disagree");
    if (std::string(name) == "S3") {
      c.expect(s.entries.rows() == 8 && s.entries.cols() == 8, "S(S3) is not 8x8");
      s3_simple_count = static_cast<int>(s.entries.rows());
    }
  }
  auto v = modularity_verdict(catalogue::extension("A3-S3"));
  c.expect(v.psi_isomorphism, "A3-S3: psi is not an isomorphism");
  c.expect(v.j_modular_claim, "A3-S3: not J-modular");
}

void category_diagrams(Check& c) {
  auto e = std::make_shared<const GroupExtension>(catalogue::extension("A3-S3"));
  auto simples = simples_of_double(e);
  auto rep = check_equivariant_diagrams(*e, simples);
  for (auto d : {"hexagon_left", "hexagon_right", "action_braiding", "twist_braiding", "twist_duality", "twist_action"}) {
    auto [count, bad] = rep.tally(d);
    c.expect(count > 0, std::string(d) + " not checked");
    c.expect(bad == 0, std::string(d) + ": " + std::to_string(bad) + " of " + std::to_string(count) + " fail");
  }
  c.expect(rep.all_pass(), "some diagram fails");
  auto jd = equivariant_double(*e);
  for (const auto& v : simples) {
    for (const auto& w : simples) {
      c.expect(braid(v, w) == flip_after_action(v, w, jd.ribbon.R), "braid differs from the R-matrix action on " + v.label + ", " + w.label);
    }
  }
}

ActionGroupoid by_permutations(const GroupPtr& g, int points, const std::function<int(int, int)>& act) {
  std::vector<std::vector<int>> a(g->order(), std::vector<int>(points));
  for (int x = 0; x < g->order(); ++x) {
    for (int m = 0; m < points; ++m) a[x][m] = act(x, m);
  }
  return ActionGroupoid(points, g, std::move(a));
}

std::vector<std::pair<std::string, ActionGroupoid>> sample_groupoids() {
  std::vector<std::pair<std::string, ActionGroupoid>> out;
  auto s3 = catalogue::group("S3");
  auto z4 = catalogue::group("Z4");
  auto z6 = catalogue::group("Z6");
  auto d4 = catalogue::group("D4");
  for (auto n : {"Z2", "S3", "Q8"}) out.emplace_back(std::string("pt//") + n, point_groupoid(catalogue::group(n)));
  for (auto n : {"S3", "Z4", "D4", "Q8", "A4", "Z2xZ2"}) {
    out.emplace_back(std::string(n) + "//" + n, conjugation_groupoid(catalogue::group(n)));
  }
  out.emplace_back("Z4 left-multiplied by Z4", by_permutations(z4, 4, [&](int x, int m) { return z4->mul(x, m); }));
  out.emplace_back("6//Z6 by doubling", by_permutations(z6, 6, [&](int x, int m) { return z6->mul(z6->mul(x, x), m); }));
  out.emplace_back("D4 on itself by left multiplication", by_permutations(d4, 8, [&](int x, int m) { return d4->mul(x, m); }));
  auto ext = catalogue::extension("A3-S3");
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  out.emplace_back("S3//A3", conjugation_groupoid(ext.H(), all, ext.G(), ext.incl().images()));
  out.emplace_back("H_1//A3", conjugation_groupoid(ext.H(), ext.coset(1), ext.G(), ext.incl().images()));
  return out;
}

void character_theory(Check& c) {
  int count = 0;
  for (const auto& [name, gamma] : sample_groupoids()) {
    const auto& G = *gamma.group();
    if (gamma.points() > 12 || G.order() > 12) continue;
    ++count;
    auto simples = simple_objects(gamma);
    std::vector<ClassFunction> chars;
    long burnside = 0;
    for (const auto& rep : simples) {
      chars.push_back(character(gamma, rep));
      burnside += static_cast<long>(rep.total_dim()) * rep.total_dim();
    }
    c.expect(burnside == static_cast<long>(gamma.points()) * G.order(), name + ": sum of squares");
    auto inert = inertia_groupoid(gamma);
    c.expect(simples.size() == orbits(inert.groupoid).size(), name + ": simple count");
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        c.expect(pairing(gamma, chars[i], chars[j]) == Cyclotomic(i == j ? 1 : 0), name + ": first orthogonality");
      }
    }
    for (const auto& [m, g] : inert.objects) {
      for (const auto& [n, h] : inert.objects) {
        Cyclotomic lhs;
        for (const auto& ch : chars) lhs += ch.values[m][g] * ch.values[n][G.inv(h)];
        int rhs = 0;
        for (int z = 0; z < G.order(); ++z) rhs += gamma.act(z, m) == n && G.conj(z, g) == h;
        c.expect(lhs == Cyclotomic(rhs), name + ": second orthogonality");
      }
    }
    auto reg = character(gamma, regular_rep(gamma));
    for (int m = 0; m < gamma.points(); ++m) {
      for (int g = 0; g < G.order(); ++g) {
        c.expect(reg.values[m][g] == Cyclotomic(g == 0 ? G.order() : 0), name + ": regular character");
      }
    }
  }
  c.expect(count >= 10, "fewer than 10 groupoids");
}

void dw_invariants(Check& c) {
  for (const auto& name : catalogue::group_names()) {
    auto g = catalogue::group(name);
    c.expect(dw_invariant(sphere_presentation(), *g) == make_rational(1, g->order()), name + ": Z(S^3)");
    c.expect(dw_invariant(s2xs1_presentation(), *g) == Rational(1), name + ": Z(S^2 x S^1)");
    c.expect(surface_state_dim(0, g) == 1, name + ": genus 0 state space");
  }
  if (s3_simple_count < 0) s3_simple_count = static_cast<int>(simples_of_double(catalogue::group("S3")).size());
  const auto torus = surface_state_dim(1, catalogue::group("S3"));
  c.expect(torus == static_cast<std::uint64_t>(s3_simple_count) && torus == 8,
           "genus 1 state space of S3 is " + std::to_string(torus));
}

void twisted_sectors(Check& c) {
  const auto circle = circle_presentation();
  for (auto name : {"A3-S3", "Z2-Z4"}) {
    auto ext = catalogue::extension(name);
    auto wa = extension_to_weak_action(ext);
    for (int j = 0; j < ext.J()->order(); ++j) {
      const std::string where = std::string(name) + " j=" + std::to_string(j);
      auto tb = twisted_bundle_groupoid(circle, ext, make_twist_hom(circle, *ext.J(), {j}));
      auto direct = conjugation_groupoid(ext.H(), ext.coset(j), ext.G(), ext.incl().images());
      auto stabilizers = [](const ActionGroupoid& gamma) {
        std::vector<std::size_t> out;
        for (const auto& o : orbits(gamma)) out.push_back(o.stabilizer.size());
        std::sort(out.begin(), out.end());
        return out;
      };
      auto a = stabilizers(tb.groupoid);
      auto b = stabilizers(direct);
      c.expect(a == b, where + ": twisted bundles differ from H_j//G");
      auto h1 = twisted_cech_h1(circle_nerve(j), wa);
      c.expect(h1.count == b.size(), where + ": Cech classes " + std::to_string(h1.count) + " vs " + std::to_string(b.size()));
    }
  }
}

std::string verify_all(const std::string& ext) {
  cli::RunConfig config;
  config.command = "verify-all";
  config.extension = ext;
  auto r = cli::run(config);
  return std::to_string(r.exit_code) + "\n" + r.report;
}

void determinism(Check& c) {
  for (auto name : {"A3-S3", "Z2-Z4"}) {
    auto first = verify_all(name);
    auto second = verify_all(name);
    setenv("EQUIDOUBLE_THREADS", "1", 1);
    auto serial = verify_all(name);
    unsetenv("EQUIDOUBLE_THREADS");
    c.expect(first.rfind("0\n", 0) == 0, std::string(name) + ": verify-all did not pass");
    c.expect(first == second, std::string(name) + ": repeated runs differ");
    c.expect(first == serial, std::string(name) + ": single-threaded run differs");
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Schreier round trip", 5, schreier_round_trip},
      {2, "Hopf and J-Hopf axiom suites with negative controls", 60, hopf_suites},
      {3, "Psi is an isomorphism of ribbon algebras", 30, psi_isomorphism},
      {4, "S-matrices and modularity verdict", 60, modularity},
      {5, "equivariant category diagrams on D^J(A3<S3)", 120, category_diagrams},
      {6, "character theory of action groupoids", 30, character_theory},
      {7, "Dijkgraaf-Witten invariants", 10, dw_invariants},
      {8, "twisted sectors and Cech classes", 10, twisted_sectors},
      {9, "verify-all is byte-identical across runs", 120, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.limit_seconds) {
      std::ostringstream os;
      os << "took " << seconds << " s, limit " << cr.limit_seconds << " s";
      check.failures.push_back(os.str());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %d: %s  %s  (%.2f s / %.0f s)", cr.id, ok ? "PASS" : "FAIL", cr.title, seconds, cr.limit_seconds);
    if (!ok) std::printf("  first failure: %s (%zu total)", check.failures.front().c_str(), check.failures.size());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
