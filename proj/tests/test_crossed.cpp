#include <doctest.h>

#include <set>

#include "equicat/crossed.hpp"
#include "oracles.hpp"

using namespace equicat;

namespace {

// Small (G, Pi, action) corpus for exhaustive checks.
std::vector<std::pair<GroupPtr, GroupPtr>> small_pairs() {
  return {
      {make_named("C2"), make_named("C3")}, {make_named("C2"), make_named("C2")},
      {make_named("C2"), make_named("C4")}, {make_named("C3"), make_named("C3")},
      {make_named("C4"), make_named("C3")}, {make_named("D2"), make_named("C3")},
      {make_named("S3"), make_named("C2")}, {make_named("C2"), make_named("S3")},
  };
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle") {
  for (auto& [g, pi] : small_pairs()) {
    for (auto& action : automorphism_actions(g, pi)) {
      for (auto& H : subgroups(g)) {
        double space = std::pow(static_cast<double>(pi->order), H.order());
        if (space > 20000) continue;
        auto fast = enumerate_crossed(H, pi, action);
        auto brute = oracles::brute_crossed(H, *pi, action);
        REQUIRE(fast.size() == brute.size());
        for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].val == brute[i]);
      }
    }
  }
}

TEST_CASE("trivial action enumeration coincides with Hom(H, Pi)") {
  for (auto& [g, pi] : small_pairs()) {
    auto homs = all_homomorphisms(g, pi);
    auto crossed = enumerate_crossed(full_subgroup(g), pi, trivial_action(g, pi));
    REQUIRE(homs.size() == crossed.size());
    for (size_t i = 0; i < homs.size(); ++i) CHECK(homs[i].map == crossed[i].val);
  }
}

TEST_CASE("C2 on C3 by inversion: three crossed homs, epsilon present") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto homs = enumerate_crossed(full_subgroup(c2), c3, inversion_action(c2, c3));
  REQUIRE(homs.size() == 3);
  CHECK(homs[0].val[1] == 0);  // epsilon first in canonical order
  CHECK(homs[1].val[1] == 1);
  CHECK(homs[2].val[1] == 2);
}

TEST_CASE("iso witnesses") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto inv = inversion_action(c2, c3);
  auto homs = enumerate_crossed(full_subgroup(c2), c3, inv);

  SUBCASE("epsilon to epsilon: witnesses are the fixed points Pi^G") {
    auto w = iso_witnesses(homs[0], homs[0]);
    CHECK(w == std::vector<int>{0});
    auto triv = trivial_action(c2, c3);
    auto eps = enumerate_crossed(full_subgroup(c2), c3, triv)[0];
    CHECK(iso_witnesses(eps, eps).size() == 3);  // all of Pi
  }

  SUBCASE("alpha(g)=1 to beta(g)=0 has exactly one witness") {
    auto w = iso_witnesses(homs[1], homs[0]);
    CHECK(w.size() == 1);
  }

  SUBCASE("mismatched contexts throw") {
    auto triv = trivial_action(c2, c3);
    auto other = enumerate_crossed(full_subgroup(c2), c3, triv)[0];
    CHECK_THROWS_AS(iso_witnesses(homs[0], other), std::invalid_argument);
  }
}

TEST_CASE("witnesses form an equivalence relation with composition") {
  for (auto& [g, pi] : small_pairs()) {
    for (auto& action : automorphism_actions(g, pi)) {
      auto homs = enumerate_crossed(full_subgroup(g), pi, action);
      if (homs.size() > 12) continue;
      for (auto& a : homs) {
        auto self = iso_witnesses(a, a);
        CHECK(std::find(self.begin(), self.end(), pi->identity) != self.end());
      }
      for (auto& a : homs)
        for (auto& b : homs) {
          auto wab = iso_witnesses(a, b);
          for (int s : wab) {
            auto wba = iso_witnesses(b, a);
            CHECK(std::find(wba.begin(), wba.end(), pi->inv[s]) != wba.end());
          }
          for (auto& c : homs) {
            auto wbc = iso_witnesses(b, c);
            auto wac = iso_witnesses(a, c);
            std::set<int> acset(wac.begin(), wac.end());
            for (int s : wab)
              for (int t : wbc) CHECK(acset.count(pi->mul(t, s)) == 1);
          }
        }
    }
  }
}

TEST_CASE("h1 tables") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("trivial Pi: one class with trivial aut") {
    auto c1 = make_named("C1");
    auto t = h1(c2, c1, trivial_action(c2, c1), full_subgroup(c2));
    CHECK(t.classes.size() == 1);
    CHECK(t.classes[0].aut.order() == 1);
    CHECK(t.basepoint_class == 0);
  }

  SUBCASE("C2 on C3 by inversion: |H1| = 1, Aut(eps) trivial") {
    auto t = h1(c2, c3, inversion_action(c2, c3), full_subgroup(c2));
    CHECK(t.all.size() == 3);
    CHECK(t.classes.size() == 1);
    CHECK(t.classes[0].aut.order() == 1);
    auto j = t.to_json();
    CHECK(j["class_count"] == 1);
    CHECK(j["classes"][0]["basepoint"] == true);
  }

  SUBCASE("class sizes sum to the total count") {
    for (auto& [g, pi] : small_pairs())
      for (auto& action : automorphism_actions(g, pi)) {
        auto t = h1(g, pi, action, full_subgroup(g));
        size_t total = 0;
        for (auto& c : t.classes) total += c.members.size();
        CHECK(total == t.all.size());
        CHECK(t.basepoint_class >= 0);
      }
  }
}

TEST_CASE("centralizers") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto inv = inversion_action(c2, c3);
  auto homs = enumerate_crossed(full_subgroup(c2), c3, inv);

  // alpha = eps: Pi^G
  CHECK(centralizer(homs[0]).members == std::vector<int>{0});
  // alpha(g) = 1: trivial
  CHECK(centralizer(homs[1]).order() == 1);

  // trivial action: ordinary centralizer of the image
  auto s3 = make_named("S3");
  auto triv = trivial_action(c2, s3);
  for (auto& a : enumerate_crossed(full_subgroup(c2), s3, triv)) {
    auto cz = centralizer(a);
    std::vector<int> expect;
    for (int s = 0; s < s3->order; ++s) {
      bool commutes = true;
      for (int g : a.source.members)
        if (s3->mul(s, a.val[g]) != s3->mul(a.val[g], s)) commutes = false;
      if (commutes) expect.push_back(s);
    }
    CHECK(cz.members == expect);
  }
}

TEST_CASE("lambda dictionary") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto inv = inversion_action(c2, c3);
  auto sd = semidirect(c3, c2, inv);
  auto homs = enumerate_crossed(full_subgroup(c2), c3, inv);

  SUBCASE("epsilon maps to the included copy of G") {
    auto lam = lambda_of(homs[0], sd);
    std::vector<int> expect = {sd.incl_g(0), sd.incl_g(1)};
    std::sort(expect.begin(), expect.end());
    CHECK(lam.members == expect);
  }

  SUBCASE("nontrivial hom gives an order-2 reflection subgroup") {
    auto lam = lambda_of(homs[1], sd);
    CHECK(lam.order() == 2);
    CHECK(lam.members[0] == sd.gamma->identity);
    CHECK(sd.g_of(lam.members[1]) == 1);
    CHECK(sd.sigma_of(lam.members[1]) == 1);
  }

  SUBCASE("roundtrip both ways") {
    for (auto& a : homs) {
      auto lam = lambda_of(a, sd);
      CHECK(crossed_from_lambda(lam, sd).val == a.val);
    }
    for (auto& H : subgroups(c2)) {
      for (auto& a : enumerate_crossed(H, c3, inv)) {
        auto lam = lambda_of(a, sd);
        auto back = crossed_from_lambda(lam, sd);
        CHECK(back.source.members == a.source.members);
        CHECK(back.val == a.val);
      }
    }
  }

  SUBCASE("Lambda = Pi errors") {
    Subgroup pi_sub;
    pi_sub.parent = sd.gamma;
    for (int s = 0; s < 3; ++s) pi_sub.members.push_back(sd.incl_pi(s));
    std::sort(pi_sub.members.begin(), pi_sub.members.end());
    CHECK_THROWS_AS(crossed_from_lambda(pi_sub, sd), std::invalid_argument);
  }

  SUBCASE("trivial H gives the trivial subgroup") {
    auto eps = enumerate_crossed(trivial_subgroup(c2), c3, inv)[0];
    CHECK(lambda_of(eps, sd).order() == 1);
  }
}

TEST_CASE("bar and unbar") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto inv = inversion_action(c2, c3);
  auto homs = enumerate_crossed(full_subgroup(c2), c3, inv);

  CHECK(bar(homs[0]).val == homs[0].val);          // eps -> eps
  CHECK(bar(homs[1]).val[1] == 2);                 // g.alpha(g) = -1 = 2

  SUBCASE("trivial action: bar is pointwise inverse") {
    auto s3 = make_named("S3");
    auto triv = trivial_action(c2, s3);
    for (auto& a : enumerate_crossed(full_subgroup(c2), s3, triv)) {
      auto b = bar(a);
      for (int g : a.source.members) CHECK(b.val[g] == s3->inv[a.val[g]]);
    }
  }

  SUBCASE("bijection preserving witness sets") {
    for (auto& [g, pi] : small_pairs()) {
      for (auto& action : automorphism_actions(g, pi)) {
        auto homsx = enumerate_crossed(full_subgroup(g), pi, action);
        auto antis = enumerate_anticrossed(full_subgroup(g), pi, action);
        REQUIRE(homsx.size() == antis.size());
        std::set<std::vector<int>> anti_vals;
        for (auto& a : antis) anti_vals.insert(a.val);
        for (auto& a : homsx) {
          auto b = bar(a);
          CHECK(anti_vals.count(b.val) == 1);
          CHECK(unbar(b).val == a.val);
        }
        if (homsx.size() <= 8) {
          for (auto& a : homsx)
            for (auto& b : homsx)
              CHECK(iso_witnesses(a, b) == anti_witnesses(bar(a), bar(b)));
        }
      }
    }
  }
}

TEST_CASE("subgroup correspondence verification") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("trivial Pi: both sides one") {
    auto c1 = make_named("C1");
    auto r = verify_h1_lambda_bijection(c2, c1, trivial_action(c2, c1));
    CHECK(r.pass);
    CHECK(r.stats["h1_classes"] == 1);
    CHECK(r.stats["lambda_classes"] == 1);
  }

  SUBCASE("C2 on C3 by inversion: both sides one, three subgroups") {
    auto r = verify_h1_lambda_bijection(c2, c3, inversion_action(c2, c3));
    CHECK(r.pass);
    CHECK(r.stats["lambda_subgroups"] == 3);
    CHECK(r.stats["h1_classes"] == 1);
  }

  SUBCASE("trivial action on C2: both sides |Hom(C2,C2)| = 2") {
    auto r = verify_h1_lambda_bijection(c2, c2, trivial_action(c2, c2));
    CHECK(r.pass);
    CHECK(r.stats["h1_classes"] == 2);
    CHECK(r.stats["lambda_classes"] == 2);
  }

  SUBCASE("small corpus") {
    for (auto& [g, pi] : small_pairs())
      for (auto& action : automorphism_actions(g, pi)) {
        auto r = verify_h1_lambda_bijection(g, pi, action);
        CAPTURE(g->name);
        CAPTURE(pi->name);
        CHECK(r.pass);
      }
  }
}

TEST_CASE("centralizer-normalizer verification") {
  for (auto& [g, pi] : small_pairs()) {
    for (auto& action : automorphism_actions(g, pi)) {
      auto sd = semidirect(pi, g, action);
      for (auto& H : subgroups(g))
        for (auto& a : enumerate_crossed(H, pi, action)) {
          auto r = verify_crossed_centralizer(a, sd);
          CAPTURE(g->name);
          CAPTURE(pi->name);
          CHECK(r.pass);
        }
    }
  }
}

TEST_CASE("fixed maps") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto inv = inversion_action(c2, c3);
  auto homs = enumerate_crossed(full_subgroup(c2), c3, inv);

  SUBCASE("epsilon gives the constant identity map") {
    auto f = fixed_map(homs[0], coset_transversal(homs[0].source));
    CHECK(f == std::vector<int>{0, 0});
  }

  SUBCASE("alpha(g) = 1 gives f = (0, 2)") {
    auto f = fixed_map(homs[1], coset_transversal(homs[1].source));
    CHECK(f == std::vector<int>{0, 2});
  }

  SUBCASE("trivial H: constant identity for any transversal") {
    auto eps = enumerate_crossed(trivial_subgroup(c2), c3, inv)[0];
    std::vector<int> reps = {0, 1};
    auto f = fixed_map(eps, reps);
    CHECK(f == std::vector<int>{0, 0});
  }

  SUBCASE("bad transversal throws") {
    CHECK_THROWS_AS(fixed_map(homs[0], std::vector<int>{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fixed_map(homs[0], std::vector<int>{}), std::invalid_argument);
  }

  SUBCASE("equivariance identity holds across the corpus") {
    for (auto& [g, pi] : small_pairs())
      for (auto& action : automorphism_actions(g, pi))
        for (auto& H : subgroups(g))
          for (auto& a : enumerate_crossed(H, pi, action)) {
            auto reps = coset_transversal(H);
            auto f = fixed_map(a, reps);  // throws internally on failure
            for (int r : reps) CHECK(f[r] == pi->identity);
          }
  }
}
