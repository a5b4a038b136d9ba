// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Bounds and tolerances are pinned here; everything is exact.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "equicat/corpus.hpp"
#include "equicat/crossed.hpp"
#include "equicat/fincat.hpp"
#include "equicat/models.hpp"
#include "equicat/nerve.hpp"
#include "equicat/skew.hpp"

using namespace equicat;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s  criterion %2d  %-38s (%.1fs)%s\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), seconds, detail.empty() ? "" : ("  " + detail).c_str());
  if (!pass) ++failures;
}

template <typename F>
void run(int criterion, const std::string& name, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    detail = body();
    pass = detail.empty();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(criterion, name, pass, detail, secs);
}

// groups of order <= 6 from the named corpus
std::vector<std::string> small_group_names(int max_order) {
  std::vector<std::string> out;
  for (auto& n : corpus_group_names())
    if (make_named(n)->order <= max_order) out.push_back(n);
  return out;
}

long burnside_pairs(const FiniteGroup& g) {
  long total = 0;
  for (int x = 0; x < g.order; ++x) {
    long cent = 0;
    for (int a = 0; a < g.order; ++a)
      if (g.mul(x, a) == g.mul(a, x)) ++cent;
    total += cent * cent;
  }
  return total / g.order;
}

}  // namespace

int main() {
  const int gamma_bound = 48;

  run(1, "H1 <-> subgroup classes (finlem1)", [&] {
    for (auto& inst : corpus_pairs(gamma_bound)) {
      auto r = verify_h1_lambda_bijection(inst.g, inst.pi, inst.action);
      if (!r.pass)
        return inst.g_name + "/" + inst.pi_name + "/action" +
               std::to_string(inst.action_index) + ": " + r.detail;
    }
    return std::string();
  });

  run(2, "crossed centralizer = Pi ^ N(Lambda)", [&] {
    for (auto& inst : corpus_pairs(gamma_bound)) {
      auto gamma = semidirect(inst.pi, inst.g, inst.action);
      for (auto& H : subgroups(inst.g))
        for (auto& alpha : enumerate_crossed(H, inst.pi, inst.action)) {
          auto r = verify_crossed_centralizer(alpha, gamma);
          if (!r.pass) return inst.g_name + "/" + inst.pi_name + ": " + r.detail;
        }
    }
    return std::string();
  });

  run(3, "fixed-point decomposition (fffxxx)", [&] {
    for (auto& inst : corpus_pairs(gamma_bound)) {
      if (std::pow(static_cast<double>(inst.pi->order), inst.g->order) > 1e6) continue;
      for (auto& H : subgroups(inst.g)) {
        auto r = verify_fixed_decomposition(inst.g, inst.pi, inst.action, H);
        if (!r.pass)
          return inst.g_name + "/" + inst.pi_name + "/action" +
                 std::to_string(inst.action_index) + ": " + r.detail;
      }
    }
    return std::string();
  });

  run(4, "classifying diagram iso (notformal)", [&] {
    for (auto& pn : small_group_names(6))
      for (int x = 1; x <= 3; ++x) {
        auto r = verify_classifying_diagram(x, make_named(pn));
        if (!r.pass) return "X=" + std::to_string(x) + " Pi=" + pn + ": " + r.detail;
      }
    return std::string();
  });

  run(5, "Hilbert 90 for (2,2,1), (2,2,2), (3,2,1)", [&] {
    struct Case {
      int p, k, n, expected_aut;
    };
    for (auto c : {Case{2, 2, 1, 1}, Case{2, 2, 2, 6}, Case{3, 2, 1, 2}}) {
      auto rep = hilbert90(c.p, c.k, c.n);
      if (!rep.pass || rep.class_count != 1 || rep.aut_order != c.expected_aut)
        return "(" + std::to_string(c.p) + "," + std::to_string(c.k) + "," +
               std::to_string(c.n) + "): " + (rep.detail.empty() ? "wrong counts" : rep.detail);
    }
    return std::string();
  });

  run(6, "nerve/orbit inequality counts", [&] {
    auto s3 = make_named("S3");
    auto rep = compare_orbit_nerve(conjugation_one_object(s3), 2);
    if (rep.nerve_of_quotient[2] != 4) return std::string("|N2(S3/S3)| != 4");
    if (rep.quotient_of_nerve[2] != 11) return std::string("|(N2 S3)/S3| != 11");
    if (rep.equal[2]) return std::string("inequality not flagged");
    if (rep.quotient_of_nerve[2] != burnside_pairs(*s3))
      return std::string("S3 count disagrees with the Burnside oracle");
    auto a5 = make_named("A5");
    auto rep5 = compare_orbit_nerve(conjugation_one_object(a5), 2);
    if (rep5.quotient_of_nerve[2] < 60) return std::string("|(N2 A5)/A5| < 60");
    if (rep5.quotient_of_nerve[2] != 77) return std::string("|(N2 A5)/A5| != 77");
    if (rep5.quotient_of_nerve[2] != burnside_pairs(*a5))
      return std::string("A5 count disagrees with the Burnside oracle");
    return std::string();
  });

  run(7, "nerve commutes with fixed points, q <= 3", [&] {
    for (const char* gn : {"C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"}) {
      auto g = make_named(gn);
      auto act = conjugation_one_object(g);
      for (auto& H : subgroups(g)) {
        auto r = verify_fixed_nerve(act, H, 3);
        if (!r.pass) return std::string("conj ") + gn + ": " + r.detail;
      }
    }
    for (auto [gn, pn] :
         {std::pair{"C2", "C2"}, {"C2", "C3"}, {"C3", "C2"}, {"C2", "C4"}, {"C2", "D2"},
          {"C3", "C3"}}) {
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
        for (auto& H : subgroups(g)) {
          auto r = verify_fixed_nerve(conj, H, 3);
          if (!r.pass) return std::string("hom ") + gn + "/" + pn + ": " + r.detail;
        }
      }
    }
    // chaotic G-set actions
    for (const char* gn : {"C2", "C3", "S3"}) {
      auto g = make_named(gn);
      for (auto& y : {regular_gset(g), conjugation_gset(g), point_gset(g)})
        for (auto& H : subgroups(g)) {
          auto r = verify_fixed_nerve(chaotic_action(y), H, 3);
          if (!r.pass) return std::string("chaotic ") + gn + ": " + r.detail;
        }
    }
    return std::string();
  });

  run(8, "module structures <-> crossed homs (CrossR)", [&] {
    for (auto [p, k, n] : {std::tuple{2, 2, 1}, {2, 2, 2}}) {
      auto r = verify_module_correspondence(p, k, n);
      if (!r.pass) return "rank " + std::to_string(n) + ": " + r.detail;
    }
    return std::string();
  });

  run(9, "classifying models: freeness, fixed objects, orbits", [&] {
    for (auto& gn : small_group_names(6)) {
      auto g = make_named(gn);
      for (int n = 1; n <= 3; ++n) {
        auto m = sigma_model(g, n, build_universe(g, n));
        auto ra = verify_sigma_action(m);
        if (!ra.pass) return gn + " n=" + std::to_string(n) + ": " + ra.detail;
        auto rf = verify_sigma_freeness(m);
        if (!rf.pass) return gn + " n=" + std::to_string(n) + ": " + rf.detail;
        auto rx = verify_sigma_fixed_objects(m);
        if (!rx.pass) return gn + " n=" + std::to_string(n) + ": " + rx.detail;
        if (n <= 2) {
          int c = 1;
          while (c * build_universe(g, 1).size < n) ++c;
          auto ro = verify_sigma_orbit_description(sigma_model(g, n, build_universe(g, c)));
          if (!ro.pass) return gn + " n=" + std::to_string(n) + " orbit: " + ro.detail;
        }
      }
    }
    auto f4 = galois_field(2, 2);
    auto m = gl_model(1, f4, build_universe(f4.group, 1));
    for (const auto& r :
         {verify_gl_action(m), verify_gl_freeness(m), verify_gl_fixed_objects(m),
          verify_gl_orbit_description(m), verify_gl_semidirect_action(m.glr)})
      if (!r.pass) return "gl model: " + r.detail;
    return std::string();
  });

  run(10, "chaotic laws and simplicial contraction", [&] {
    // functor categories into chaotic targets are chaotic
    for (auto [an, bn] : {std::pair{"C2", 3}, {"C3", 2}, {"S3", 2}}) {
      auto fc = functor_category(translation(regular_gset(make_named(an))), chaotic(bn));
      if (!fc.cat->is_chaotic()) return std::string("functor category not chaotic");
      auto fc2 = functor_category(one_object(make_named(an)), chaotic(bn));
      if (!fc2.cat->is_chaotic()) return std::string("functor category not chaotic");
    }
    // fixed categories of chaotic categories: chaotic or empty
    for (const char* gn : {"C2", "C3", "C4", "S3"}) {
      auto g = make_named(gn);
      for (auto& y : {regular_gset(g), conjugation_gset(g), point_gset(g)}) {
        auto act = chaotic_action(y);
        for (auto& H : subgroups(g)) {
          auto fx = fixed_category(act, H);
          if (fx.cat->n_obj > 0 && !fx.cat->is_chaotic())
            return std::string("fixed category neither chaotic nor empty");
        }
      }
    }
    // extra-degeneracy identities for |X| <= 3, q <= 3
    for (int x = 1; x <= 3; ++x) {
      auto r = verify_chaotic_contraction(x, 3);
      if (!r.pass) return "contraction |X|=" + std::to_string(x) + ": " + r.detail;
    }
    return std::string();
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
