#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "equicat/corpus.hpp"
#include "equicat/crossed.hpp"
#include "equicat/fincat.hpp"
#include "equicat/group.hpp"
#include "equicat/models.hpp"
#include "equicat/nerve.hpp"
#include "equicat/skew.hpp"

using namespace equicat;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "equicat-report/1";

struct GLSpec {
  int n = 0, p = 0, k = 0;
};

// GL{n}F{q} with q = p^k
bool parse_gl_spec(const std::string& s, GLSpec& out) {
  if (s.rfind("GL", 0) != 0) return false;
  auto fpos = s.find('F', 2);
  if (fpos == std::string::npos) return false;
  try {
    out.n = std::stoi(s.substr(2, fpos - 2));
    int q = std::stoi(s.substr(fpos + 1));
    for (int p = 2; p <= q; ++p) {
      int k = 0, qq = q;
      while (qq % p == 0) {
        qq /= p;
        ++k;
      }
      if (qq == 1 && k >= 1) {
        out.p = p;
        out.k = k;
        return true;
      }
      if (q % p == 0) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

int finish(const json& report, bool as_json, bool pass) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

void emit_check(json& checks, const std::string& name, const VerifyReport& r, bool& all_pass,
                bool as_json) {
  json c;
  c["name"] = name;
  c["pass"] = r.pass;
  if (!r.detail.empty()) c["detail"] = r.detail;
  c["stats"] = r.stats;
  checks.push_back(c);
  all_pass = all_pass && r.pass;
  if (!as_json) {
    std::cout << (r.pass ? "pass  " : "FAIL  ") << name;
    if (!r.pass) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
  }
}

int cmd_h1(const std::string& g_spec, const std::string& pi_spec, const std::string& action_spec,
           bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "h1";

  GroupPtr g, pi;
  GroupAction action;
  GLSpec gls;
  if (parse_gl_spec(pi_spec, gls)) {
    auto K = galois_field(gls.p, gls.k);
    auto glr = gl(gls.n, K);
    g = K.group;
    auto named = make_named(g_spec);
    if (named->order != g->order || !isomorphic(*named, *g))
      throw std::invalid_argument("with Pi = " + pi_spec + " the group G must be the Galois group C" +
                                  std::to_string(gls.k));
    pi = glr.group;
    if (!action_spec.empty() && action_spec != "frobenius")
      throw std::invalid_argument("GL targets take the frobenius action");
    action = glr.entry_action;
  } else {
    g = make_named(g_spec);
    pi = make_named(pi_spec);
    action = action_by_name(g, pi, action_spec);
  }

  auto table = h1(g, pi, action, full_subgroup(g));
  report["h1"] = table.to_json();

  bool pass = true;
  if (!as_json) {
    std::cout << "H1(" << g_spec << "; " << pi_spec << ", action=" <<
        (action_spec.empty() ? "trivial" : action_spec) << ")\n";
    std::cout << "crossed homs: " << table.all.size() << ", classes: " << table.classes.size()
              << "\n";
    for (size_t i = 0; i < table.classes.size(); ++i) {
      std::cout << "  class " << i << ": size " << table.classes[i].members.size()
                << ", aut order " << table.classes[i].aut.order()
                << (static_cast<int>(i) == table.basepoint_class ? "  (basepoint)" : "") << "\n";
    }
  }
  // fixed-point decomposition rows per subgroup
  json rows = json::array();
  if (!as_json) std::cout << "fixed-point decompositions:\n";
  for (auto& H : subgroups(g)) {
    json row;
    row["subgroup"] = H.members;
    try {
      auto fd = fixed_decomposition(g, pi, action, H);
      auto check = verify_fixed_decomposition(g, pi, action, H);
      pass = pass && check.pass;
      row["components"] = fd.canonical_objects.size();
      json auts = json::array();
      for (auto& vg : fd.vertex_groups) auts.push_back(vg.size());
      row["aut_orders"] = auts;
      row["matches_h1"] = check.pass;
      if (!as_json) {
        std::cout << "  |H|=" << H.order() << ": components " << fd.canonical_objects.size()
                  << ", aut orders";
        for (auto& vg : fd.vertex_groups) std::cout << " " << vg.size();
        std::cout << (check.pass ? "" : "  MISMATCH") << "\n";
      }
    } catch (const std::exception& e) {
      row["skipped"] = e.what();
      if (!as_json) std::cout << "  |H|=" << H.order() << ": skipped (" << e.what() << ")\n";
    }
    rows.push_back(row);
  }
  report["decompositions"] = rows;
  report["pass"] = pass;
  return finish(report, as_json, pass);
}

int cmd_verify(const std::string& selector, int max_gamma, const std::string& g_spec, int q,
               bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "verify " + selector;
  json checks = json::array();
  bool pass = true;

  auto tag = [](const CorpusInstance& inst) {
    return inst.g_name + "/" + inst.pi_name + "/action" + std::to_string(inst.action_index);
  };

  if (selector == "finlem1") {
    for (auto& inst : corpus_pairs(max_gamma))
      emit_check(checks, tag(inst), verify_h1_lambda_bijection(inst.g, inst.pi, inst.action),
                 pass, as_json);
  } else if (selector == "finlem2") {
    for (auto& inst : corpus_pairs(max_gamma)) {
      auto gamma = semidirect(inst.pi, inst.g, inst.action);
      VerifyReport agg;
      long homs = 0;
      for (auto& H : subgroups(inst.g))
        for (auto& alpha : enumerate_crossed(H, inst.pi, inst.action)) {
          ++homs;
          auto r = verify_crossed_centralizer(alpha, gamma);
          if (!r.pass) agg.fail(r.detail);
        }
      agg.stats["crossed_homs"] = homs;
      emit_check(checks, tag(inst), agg, pass, as_json);
    }
  } else if (selector == "fffxxx") {
    for (auto& inst : corpus_pairs(max_gamma)) {
      if (std::pow(static_cast<double>(inst.pi->order), inst.g->order) > 1e6) continue;
      VerifyReport agg;
      for (auto& H : subgroups(inst.g)) {
        auto r = verify_fixed_decomposition(inst.g, inst.pi, inst.action, H);
        if (!r.pass) agg.fail(r.detail);
      }
      emit_check(checks, tag(inst), agg, pass, as_json);
    }
  } else if (selector == "notformal") {
    for (const char* pn : {"C1", "C2", "C3", "C4", "D2", "C5", "C6", "S3"})
      for (int x = 1; x <= 3; ++x)
        emit_check(checks, std::string("X") + std::to_string(x) + "/" + pn,
                   verify_classifying_diagram(x, make_named(pn)), pass, as_json);
  } else if (selector == "fixed-nerve") {
    for (const char* gn : {"C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"}) {
      auto g = make_named(gn);
      auto act = conjugation_one_object(g);
      for (auto& H : subgroups(g))
        emit_check(checks, std::string("conj-") + gn + "-H" + std::to_string(H.order()),
                   verify_fixed_nerve(act, H, q), pass, as_json);
    }
    for (auto [gn, pn] :
         {std::pair{"C2", "C2"}, {"C2", "C3"}, {"C3", "C2"}, {"C2", "C4"}, {"C2", "D2"}}) {
      auto g = make_named(gn);
      auto pi = make_named(pn);
      for (auto& action : automorphism_actions(g, pi)) {
        auto fc = functor_category(chaotic(g->order), one_object(pi));
        CatGAction act_b;
        act_b.group = g;
        act_b.cat = one_object(pi);
        act_b.on_obj.assign(g->order, {0});
        act_b.on_mor = action.act;
        auto conj = conjugation_action(fc, chaotic_action(regular_gset(g)), act_b);
        for (auto& H : subgroups(g))
          emit_check(checks,
                     std::string("hom-") + gn + "-" + pn + "-H" + std::to_string(H.order()),
                     verify_fixed_nerve(conj, H, q), pass, as_json);
      }
    }
  } else if (selector == "orbit-nerve") {
    std::vector<std::string> gs = g_spec.empty()
                                      ? std::vector<std::string>{"C4", "S3", "D4", "A4", "A5"}
                                      : std::vector<std::string>{g_spec};
    for (auto& gn : gs) {
      auto g = make_named(gn);
      auto rep = compare_orbit_nerve(conjugation_one_object(g), q);
      json c;
      c["name"] = "conj-" + gn;
      c["report"] = rep.to_json();
      checks.push_back(c);
      if (!as_json) {
        std::cout << "conj-" << gn << ": quotient descended="
                  << (rep.quotient_descended ? "yes" : "no") << "\n";
        for (int lv = 0; lv <= q; ++lv)
          std::cout << "  q=" << lv << ": |N_q(C/G)| = " << rep.nerve_of_quotient[lv]
                    << "  |(N_q C)/G| = " << rep.quotient_of_nerve[lv]
                    << (rep.equal[lv] ? "  equal" : "  inequality flagged") << "\n";
      }
    }
  } else if (selector == "crossr") {
    emit_check(checks, "F4-C2-rank1", verify_module_correspondence(2, 2, 1), pass, as_json);
    emit_check(checks, "F4-C2-rank2", verify_module_correspondence(2, 2, 2), pass, as_json);
  } else if (selector == "silly") {
    std::vector<std::string> gs =
        g_spec.empty() ? std::vector<std::string>{"C1", "C2", "C3", "C4", "C6", "S3", "D4", "Q8"}
                       : std::vector<std::string>{g_spec};
    for (auto& gn : gs)
      emit_check(checks, "translation-iso-" + gn, verify_translation_iso(make_named(gn)), pass,
                 as_json);
    for (auto [gn, pn] : {std::pair{"C2", "C2"}, {"C2", "C3"}, {"C3", "C2"}, {"C2", "C4"}}) {
      auto g = make_named(gn);
      auto pi = make_named(pn);
      for (auto& action : automorphism_actions(g, pi))
        emit_check(checks, std::string("gamma-") + gn + "-" + pn,
                   verify_gamma_action(gamma_action(g, pi, action)), pass, as_json);
    }
  } else if (selector == "cat1") {
    for (const char* gn : {"C1", "C2", "C3", "C4", "C6", "S3", "D4"}) {
      auto g = make_named(gn);
      emit_check(checks, std::string("bar-point-") + gn, verify_bar_iso(point_gset(g), q), pass,
                 as_json);
      emit_check(checks, std::string("bar-regular-") + gn, verify_bar_iso(regular_gset(g), q),
                 pass, as_json);
      emit_check(checks, std::string("bar-conj-") + gn, verify_bar_iso(conjugation_gset(g), q),
                 pass, as_json);
    }
  } else {
    throw CLI::ValidationError("unknown verify selector: " + selector);
  }
  report["checks"] = checks;
  report["pass"] = pass;
  if (!as_json) std::cout << (pass ? "all checks passed" : "FAILURES PRESENT") << "\n";
  return finish(report, as_json, pass);
}

int cmd_model_sigma(const std::string& g_spec, int n, int copies, bool check_fixed, bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "model-sigma";
  auto g = make_named(g_spec);
  if (copies <= 0) copies = std::max(n, 1);
  auto u = build_universe(g, copies);
  auto m = sigma_model(g, n, u);
  report["universe_size"] = u.size;
  report["objects"] = m.objects.size();
  json checks = json::array();
  bool pass = true;
  emit_check(checks, "action", verify_sigma_action(m), pass, as_json);
  emit_check(checks, "freeness", verify_sigma_freeness(m), pass, as_json);
  if (check_fixed) emit_check(checks, "fixed-objects", verify_sigma_fixed_objects(m), pass, as_json);
  if (n <= 2) {
    int c = 1;
    while (c * build_universe(g, 1).size < n) ++c;
    auto mo = sigma_model(g, n, build_universe(g, c));
    emit_check(checks, "orbit-description", verify_sigma_orbit_description(mo), pass, as_json);
  }
  report["checks"] = checks;
  report["pass"] = pass;
  return finish(report, as_json, pass);
}

int cmd_model_gl(int p, int k, int n, int copies, bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "model-gl";
  auto r = galois_field(p, k);
  auto u = build_universe(r.group, copies);
  auto m = gl_model(n, r, u);
  report["universe_size"] = u.size;
  report["objects"] = m.objects.size();
  json checks = json::array();
  bool pass = true;
  emit_check(checks, "action", verify_gl_action(m), pass, as_json);
  emit_check(checks, "freeness", verify_gl_freeness(m), pass, as_json);
  emit_check(checks, "gl-semidirect", verify_gl_semidirect_action(m.glr), pass, as_json);
  emit_check(checks, "fixed-objects", verify_gl_fixed_objects(m), pass, as_json);
  emit_check(checks, "orbit-description", verify_gl_orbit_description(m), pass, as_json);
  report["checks"] = checks;
  report["pass"] = pass;
  return finish(report, as_json, pass);
}

int cmd_hilbert90(int p, int k, int n, bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "hilbert90";
  auto rep = hilbert90(p, k, n);
  report["result"] = rep.to_json();
  report["pass"] = rep.pass;
  if (!as_json) {
    std::cout << "H1(C" << k << "; GL(" << n << ", F" << static_cast<int>(std::pow(p, k))
              << ")): crossed homs " << rep.crossed_count << ", classes " << rep.class_count
              << ", |Aut(eps)| " << rep.aut_order << ", |GL(" << n << ", F" << p << ")| "
              << rep.gl_base_order << "\n"
              << (rep.pass ? "pass" : "FAIL: " + rep.detail) << "\n";
  }
  return finish(report, as_json, rep.pass);
}

int cmd_nerve(const std::string& path, int q, bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "nerve";
  std::ifstream in(path);
  if (!in.good()) throw CLI::ValidationError("cannot open category file: " + path);
  auto cat = make_fincat(FinCat::from_text(in));
  auto nd = nerve(cat, q);
  report["levels"] = nd.s.level_size;
  if (q >= 1) report["pi0"] = pi0(nd.s);
  report["simplicial_set"] = nd.s.to_json();
  report["pass"] = true;
  if (!as_json) {
    std::cout << "nerve of " << path << " up to level " << q << "\n";
    for (int lv = 0; lv <= q; ++lv) std::cout << "  N_" << lv << ": " << nd.s.level_size[lv] << "\n";
    if (q >= 1) std::cout << "  pi0: " << pi0(nd.s) << "\n";
  }
  return finish(report, as_json, true);
}

int cmd_notformal(int x, const std::string& pi_spec, bool as_json) {
  json report;
  report["schema"] = kSchema;
  report["command"] = "notformal";
  auto r = verify_classifying_diagram(x, make_named(pi_spec));
  report["pass"] = r.pass;
  report["stats"] = r.stats;
  if (!r.detail.empty()) report["detail"] = r.detail;
  if (!as_json) {
    std::cout << "classifying diagram, |X| = " << x << ", Pi = " << pi_spec << ": "
              << (r.pass ? "pass" : "FAIL (" + r.detail + ")") << "\n";
  }
  return finish(report, as_json, r.pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite models of equivariant classifying categories"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report instead of tables");

  std::string g_spec = "C2", pi_spec = "C3", action_spec, cat_path, selector;
  int q = 3, n = 1, copies = 0, p = 2, k = 2, max_gamma = default_gamma_bound();
  int x_size = 2;
  bool check_fixed = true;

  auto* h1c = app.add_subcommand("h1", "crossed-hom classes and fixed-point decompositions");
  h1c->add_option("--G", g_spec, "acting group")->required();
  h1c->add_option("--Pi", pi_spec, "coefficient group (or GL{n}F{q})")->required();
  h1c->add_option("--action", action_spec, "trivial | inversion | auto:<i> | frobenius");

  std::string verify_g;
  auto* ver = app.add_subcommand("verify", "run a verification across the corpus");
  ver->add_option("selector", selector,
                  "finlem1 | finlem2 | fffxxx | notformal | fixed-nerve | orbit-nerve | "
                  "crossr | silly | cat1")
      ->required();
  ver->add_option("--max-gamma", max_gamma, "bound on |Pi| * |G|");
  ver->add_option("--G", verify_g, "restrict to one group");
  ver->add_option("--q", q, "truncation level");

  auto* ms = app.add_subcommand("model-sigma", "symmetric-group classifying model");
  ms->add_option("--G", g_spec, "group")->required();
  ms->add_option("--n", n, "letters")->required();
  ms->add_option("--copies", copies, "orbit copies in the universe (default n)");
  ms->add_flag("--check-fixed,!--no-check-fixed", check_fixed, "verify fixed objects");

  auto* mg = app.add_subcommand("model-gl", "general-linear classifying model");
  mg->add_option("--p", p, "characteristic")->required();
  mg->add_option("--k", k, "field degree")->required();
  mg->add_option("--n", n, "rank")->required();
  mg->add_option("--copies", copies, "orbit copies (default 1)");

  auto* h90 = app.add_subcommand("hilbert90", "triviality of H1 for Galois GL coefficients");
  h90->add_option("--p", p, "characteristic")->required();
  h90->add_option("--k", k, "field degree")->required();
  h90->add_option("--n", n, "rank")->required();

  auto* nv = app.add_subcommand("nerve", "truncated nerve of a category file");
  nv->add_option("--cat", cat_path, "category in text format")->required();
  nv->add_option("--q", q, "truncation level");

  auto* nf = app.add_subcommand("notformal", "classifying diagram comparison");
  nf->add_option("--X", x_size, "object set size")->required();
  nf->add_option("--Pi", pi_spec, "group")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (h1c->parsed()) return cmd_h1(g_spec, pi_spec, action_spec, as_json);
    if (ver->parsed()) return cmd_verify(selector, max_gamma, verify_g, q, as_json);
    if (ms->parsed()) return cmd_model_sigma(g_spec, n, copies, check_fixed, as_json);
    if (mg->parsed()) return cmd_model_gl(p, k, n, copies == 0 ? 1 : copies, as_json);
    if (h90->parsed()) return cmd_hilbert90(p, k, n, as_json);
    if (nv->parsed()) return cmd_nerve(cat_path, q, as_json);
    if (nf->parsed()) return cmd_notformal(x_size, pi_spec, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
