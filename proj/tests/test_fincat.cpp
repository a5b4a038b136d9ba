#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "equicat/fincat.hpp"

using namespace equicat;

TEST_CASE("chaotic categories") {
  auto c0 = chaotic(0);
  CHECK(c0->n_obj == 0);
  auto c1 = chaotic(1);
  CHECK(c1->n_obj == 1);
  CHECK(c1->n_mor() == 1);
  auto c3 = chaotic(3);
  CHECK(c3->n_mor() == 9);
  CHECK(c3->is_chaotic());
  CHECK(c3->is_groupoid());
  // every object initial and terminal: exactly one morphism each way
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(c3->hom_set(x, y).size() == 1);
}

TEST_CASE("category text roundtrip") {
  auto c = translation(regular_gset(make_named("C3")));
  std::stringstream ss;
  c->to_text(ss);
  auto back = make_fincat(FinCat::from_text(ss));
  CHECK(back->n_obj == c->n_obj);
  CHECK(back->src == c->src);
  CHECK(back->comp == c->comp);
}

TEST_CASE("translation categories") {
  auto g = make_named("S3");

  SUBCASE("one point gives the one-object category") {
    auto c = translation(point_gset(g));
    CHECK(c->n_obj == 1);
    CHECK(c->n_mor() == 6);
    CHECK(c->is_groupoid());
  }

  SUBCASE("trivial group gives a discrete category") {
    GSet y;
    y.group = make_named("C1");
    y.size = 4;
    y.act = {{0, 1, 2, 3}};
    auto c = translation(y);
    CHECK(c->n_obj == 4);
    CHECK(c->n_mor() == 4);  // identities only
  }

  SUBCASE("regular action is isomorphic to the chaotic category") {
    for (const char* name : {"C1", "C2", "C4", "S3"}) {
      auto r = verify_translation_iso(make_named(name));
      CAPTURE(name);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("functor categories") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("terminal source: isomorphic to the target") {
    auto b = translation(regular_gset(c2));
    auto fc = functor_category(chaotic(1), b);
    CHECK(static_cast<int>(fc.functors.size()) == b->n_obj);
    CHECK(fc.cat->n_mor() == b->n_mor());
  }

  SUBCASE("chaotic target: result is chaotic") {
    auto fc = functor_category(translation(regular_gset(c2)), chaotic(3));
    CHECK(fc.cat->is_chaotic());
    auto fc2 = functor_category(one_object(c3), chaotic(2));
    CHECK(fc2.cat->is_chaotic());
  }

  SUBCASE("functors one-object -> one-object are homomorphisms") {
    auto fc = functor_category(one_object(c2), one_object(make_named("S3")));
    CHECK(fc.functors.size() == all_homomorphisms(c2, make_named("S3")).size());
  }

  SUBCASE("Cat(G~, bold-Pi) has |Pi|^(|G|-1) objects") {
    for (auto [gn, pn] : {std::pair{"C2", "C3"}, {"C3", "C2"}, {"C2", "C4"}}) {
      auto fc = functor_category(chaotic(make_named(gn)->order), one_object(make_named(pn)));
      double expect = std::pow(make_named(pn)->order, make_named(gn)->order - 1);
      CHECK(fc.functors.size() == static_cast<size_t>(expect));
    }
  }
}

namespace {

// G acting on bold-Pi through a group action on Pi
CatGAction one_object_action(GroupPtr g, GroupPtr pi, const GroupAction& a) {
  CatGAction act;
  act.group = g;
  act.cat = one_object(pi);
  act.on_obj.assign(g->order, {0});
  act.on_mor = a.act;
  act.validate();
  return act;
}

}  // namespace

TEST_CASE("conjugation action on functor categories") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  auto inv = inversion_action(c2, c3);
  auto act_a = chaotic_action(regular_gset(c2));
  auto act_b = one_object_action(c2, c3, inv);

  auto fc = functor_category(chaotic(2), one_object(c3));
  auto conj = conjugation_action(fc, act_a, act_b);

  SUBCASE("action axiom holds exhaustively") {
    for (int g = 0; g < 2; ++g)
      for (int h = 0; h < 2; ++h)
        for (int x = 0; x < fc.cat->n_obj; ++x)
          CHECK(conj.on_obj[c2->mul(g, h)][x] == conj.on_obj[g][conj.on_obj[h][x]]);
  }

  SUBCASE("fixed objects are the anti-crossed homs") {
    auto fixed = fixed_category(conj, full_subgroup(c2));
    auto antis = enumerate_anticrossed(full_subgroup(c2), c3, inv);
    CHECK(fixed.obj_in_parent.size() == antis.size());
  }

  SUBCASE("trivial actions give the trivial action") {
    auto ta = trivial_cat_action(c2, chaotic(2));
    auto tb = trivial_cat_action(c2, one_object(c3));
    auto tconj = conjugation_action(fc, ta, tb);
    for (int g = 0; g < 2; ++g)
      for (int x = 0; x < fc.cat->n_obj; ++x) CHECK(tconj.on_obj[g][x] == x);
  }
}

TEST_CASE("fixed categories") {
  auto c2 = make_named("C2");
  auto s3 = make_named("S3");

  SUBCASE("trivial subgroup gives the whole category") {
    auto act = conjugation_one_object(s3);
    auto fx = fixed_category(act, trivial_subgroup(s3));
    CHECK(fx.cat->n_mor() == 6);
  }

  SUBCASE("conjugation fixed category of bold-G is the center") {
    auto act = conjugation_one_object(s3);
    auto fx = fixed_category(act, full_subgroup(s3));
    CHECK(fx.cat->n_mor() == 1);  // trivial center
    auto q8 = make_named("Q8");
    auto fx2 = fixed_category(conjugation_one_object(q8), full_subgroup(q8));
    CHECK(fx2.cat->n_mor() == 2);  // center {1, -1}
  }

  SUBCASE("fixed category of a chaotic category is chaotic or empty") {
    GSet sw;  // C2 swapping two points: no fixed objects
    sw.group = c2;
    sw.size = 2;
    sw.act = {{0, 1}, {1, 0}};
    auto fx = fixed_category(chaotic_action(sw), full_subgroup(c2));
    CHECK(fx.cat->n_obj == 0);
    GSet fix1;  // C2 fixing one of three points
    fix1.group = c2;
    fix1.size = 3;
    fix1.act = {{0, 1, 2}, {0, 2, 1}};
    auto fx2 = fixed_category(chaotic_action(fix1), full_subgroup(c2));
    CHECK(fx2.cat->n_obj == 1);
    CHECK(fx2.cat->is_chaotic());
  }
}

TEST_CASE("orbit categories") {
  auto s3 = make_named("S3");

  SUBCASE("trivial action returns the category") {
    auto oc = orbit_category(trivial_cat_action(s3, one_object(s3)));
    CHECK(oc.descended);
    CHECK(oc.cat->n_mor() == 6);
  }

  SUBCASE("chaotic Pi~ / Pi = bold-Pi with p(t, s) = t s^{-1}") {
    for (const char* name : {"C2", "C3", "S3"}) {
      auto pi = make_named(name);
      const int n = pi->order;
      GSet right;  // right multiplication turned into a left action
      right.group = pi;
      right.size = n;
      right.act.resize(n);
      for (int a = 0; a < n; ++a) {
        right.act[a].resize(n);
        for (int y = 0; y < n; ++y) right.act[a][y] = pi->mul(y, pi->inv[a]);
      }
      auto oc = orbit_category(chaotic_action(right));
      CAPTURE(name);
      CHECK(oc.descended);
      CHECK(oc.cat->n_obj == 1);
      CHECK(oc.cat->n_mor() == n);
      for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s)
          for (int t2 = 0; t2 < n; ++t2)
            for (int s2 = 0; s2 < n; ++s2) {
              bool same = oc.mor_orbit[t * n + s] == oc.mor_orbit[t2 * n + s2];
              CHECK(same == (pi->mul(t, pi->inv[s]) == pi->mul(t2, pi->inv[s2])));
            }
      CHECK(oc.cat->is_groupoid());
    }
  }

  SUBCASE("bold-G under conjugation quotients to the abelianization") {
    auto oc = orbit_category(conjugation_one_object(s3));
    CHECK_FALSE(oc.descended);  // representative composition does not descend
    CHECK(oc.witness.has_value());
    CHECK(oc.cat->n_mor() == 2);  // S3 abelianized = C2
    auto oc2 = orbit_category(conjugation_one_object(make_named("A4")));
    CHECK(oc2.cat->n_mor() == 3);  // A4 abelianized = C3
    auto oc3 = orbit_category(conjugation_one_object(make_named("C4")));
    CHECK(oc3.descended);  // abelian: conjugation trivial
    CHECK(oc3.cat->n_mor() == 4);
  }
}

TEST_CASE("explicit model of Cat(X~, bold-Pi)") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("one point: objects {eps}, morphisms Pi") {
    auto em = explicit_model(1, c3);
    CHECK(em.objects.size() == 1);
    CHECK(em.morphisms.size() == 3);
    CHECK(em.cat->is_groupoid());
  }

  SUBCASE("|X| = 2, Pi = C2: 2 objects, 8 morphisms") {
    auto em = explicit_model(2, c2);
    CHECK(em.objects.size() == 2);
    CHECK(em.morphisms.size() == 8);
  }

  SUBCASE("matches the generic functor category") {
    for (auto [x, pn] : {std::pair{1, "C3"}, {2, "C2"}, {2, "C3"}, {3, "C2"}, {2, "C4"}}) {
      auto r = verify_explicit_model(x, make_named(pn));
      CAPTURE(x);
      CAPTURE(pn);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("classifying diagram") {
  SUBCASE("|X| = 1 base case") {
    auto r = verify_classifying_diagram(1, make_named("C3"));
    CHECK(r.pass);
    CHECK(r.stats["o_size"] == 1);
  }

  SUBCASE("|X| = 2 with C2: 16-morphism top category") {
    auto r = verify_classifying_diagram(2, make_named("C2"));
    CHECK(r.pass);
    CHECK(r.stats["u_size"] == 4);  // 16 chaotic morphisms on 4 objects
  }

  SUBCASE("|X| = 2 with C3 and S3") {
    CHECK(verify_classifying_diagram(2, make_named("C3")).pass);
    CHECK(verify_classifying_diagram(2, make_named("S3")).pass);
  }
}

TEST_CASE("gamma action on Cat(G~, Pi~)") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("twisted commutation for the inversion action") {
    auto m = gamma_action(c2, c3, inversion_action(c2, c3));
    CHECK(m.u.u_size == 9);
    CHECK(verify_gamma_action(m).pass);
  }

  SUBCASE("trivial G: pure right Pi-action") {
    auto c1 = make_named("C1");
    auto m = gamma_action(c1, c3, trivial_action(c1, c3));
    CHECK(verify_gamma_action(m).pass);
    CHECK(m.gamma.gamma->order == 3);
  }

  SUBCASE("exhaustive corpus check") {
    for (auto [gn, pn] : {std::pair{"C2", "C2"}, {"C2", "C3"}, {"C3", "C2"}}) {
      auto g = make_named(gn);
      auto pi = make_named(pn);
      for (auto& action : automorphism_actions(g, pi)) {
        auto m = gamma_action(g, pi, action);
        CAPTURE(gn);
        CAPTURE(pn);
        CHECK(verify_gamma_action(m).pass);
      }
    }
  }

  SUBCASE("Lambda-fixed subcategories: nonempty chaotic iff Lambda misses Pi") {
    auto action = inversion_action(c2, c3);
    auto m = gamma_action(c2, c3, action);
    for (auto& lam : subgroups(m.gamma.gamma)) {
      bool meets_pi = false;
      for (int e : lam.members)
        if (m.gamma.g_of(e) == c2->identity && e != m.gamma.gamma->identity) meets_pi = true;
      auto fx = fixed_category(m.act, lam);
      CAPTURE(lam.members);
      if (meets_pi) {
        CHECK(fx.cat->n_obj == 0);
      } else {
        CHECK(fx.cat->n_obj > 0);
        CHECK(fx.cat->is_chaotic());
      }
    }
  }

  SUBCASE("the constructed fixed map is a Lambda-fixed point") {
    auto action = inversion_action(c2, c3);
    auto m = gamma_action(c2, c3, action);
    for (auto& H : subgroups(c2))
      for (auto& alpha : enumerate_crossed(H, c3, action)) {
        auto f = fixed_map(alpha, coset_transversal(H));
        long code = 0, p = 1;
        for (int x = 0; x < c2->order; ++x) {
          code += static_cast<long>(f[x]) * p;
          p *= c3->order;
        }
        auto lam = lambda_of(alpha, m.gamma);
        for (int e : lam.members) CHECK(m.act.on_obj[e][code] == code);
      }
  }
}

TEST_CASE("fixed decomposition") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("trivial H: one component, vertex group Pi") {
    auto fd = fixed_decomposition(c2, c3, inversion_action(c2, c3), trivial_subgroup(c2));
    CHECK(fd.canonical_objects.size() == 1);
    CHECK(fd.vertex_groups[0].size() == 3);
    CHECK(fd.n_objects == 3);  // all of O(G, Pi)
  }

  SUBCASE("G = H = C2 on C3 by inversion: 1 component, trivial vertex group") {
    auto fd = fixed_decomposition(c2, c3, inversion_action(c2, c3), full_subgroup(c2));
    CHECK(fd.canonical_objects.size() == 1);
    CHECK(fd.component_sizes[0] == 3);
    CHECK(fd.vertex_groups[0].size() == 1);
    CHECK(fd.epsilon_component == 0);
  }

  SUBCASE("trivial action: components are Hom classes, vertex groups centralizers") {
    auto s3 = make_named("S3");
    auto r = verify_fixed_decomposition(c2, s3, trivial_action(c2, s3), full_subgroup(c2));
    CHECK(r.pass);
    CHECK(r.stats["components"] == 2);  // eps and the transposition class
  }

  SUBCASE("agreement with h1 across a small corpus, all subgroups") {
    for (auto [gn, pn] :
         {std::pair{"C2", "C3"}, {"C2", "C2"}, {"C3", "C3"}, {"C4", "C3"}, {"D2", "C3"}}) {
      auto g = make_named(gn);
      auto pi = make_named(pn);
      for (auto& action : automorphism_actions(g, pi))
        for (auto& H : subgroups(g)) {
          auto r = verify_fixed_decomposition(g, pi, action, H);
          CAPTURE(gn);
          CAPTURE(pn);
          CAPTURE(H.members);
          CHECK(r.pass);
        }
    }
  }

  SUBCASE("matches the brute-force functor category computation") {
    auto inv = inversion_action(c2, c3);
    auto fc = functor_category(chaotic(2), one_object(c3));
    auto conj = conjugation_action(fc, chaotic_action(regular_gset(c2)),
                                   one_object_action(c2, c3, inv));
    auto fx = fixed_category(conj, full_subgroup(c2));
    auto fd = fixed_decomposition(c2, c3, inv, full_subgroup(c2));
    CHECK(static_cast<long>(fx.cat->n_obj) == fd.n_objects);
    // component count via brute union-find on the materialized fixed category
    std::vector<int> comp(fx.cat->n_obj);
    for (int i = 0; i < fx.cat->n_obj; ++i) comp[i] = i;
    for (int m = 0; m < fx.cat->n_mor(); ++m) {
      int a = comp[fx.cat->src[m]], b = comp[fx.cat->tgt[m]];
      if (a != b)
        for (auto& c : comp)
          if (c == b) c = a;
    }
    std::set<int> roots(comp.begin(), comp.end());
    CHECK(roots.size() == fd.canonical_objects.size());
    CHECK(fx.cat->hom_set(0, 0).size() == fd.vertex_groups[0].size());
  }

  SUBCASE("restriction to the subgroup's own model agrees") {
    // decompositions over H <= G match those over H as a group in its own
    // right: equal class counts and isomorphic vertex groups per class
    for (auto [gn, pn] : {std::pair{"C4", "C3"}, {"S3", "C2"}, {"D2", "C3"}}) {
      auto g = make_named(gn);
      auto pi = make_named(pn);
      for (auto& action : automorphism_actions(g, pi))
        for (auto& H : subgroups(g)) {
          auto fd_in_g = fixed_decomposition(g, pi, action, H);
          auto hg = subgroup_as_group(H);
          GroupAction restricted;
          restricted.actor = hg;
          restricted.target = pi;
          for (int i = 0; i < H.order(); ++i)
            restricted.act.push_back(action.act[H.members[i]]);
          auto fd_own = fixed_decomposition(hg, pi, restricted, full_subgroup(hg));
          CAPTURE(gn);
          CAPTURE(pn);
          CAPTURE(H.members);
          REQUIRE(fd_in_g.canonical_objects.size() == fd_own.canonical_objects.size());
          // vertex groups match classwise through the crossed-hom dictionary
          std::multiset<std::vector<int>> a(fd_in_g.vertex_groups.begin(),
                                            fd_in_g.vertex_groups.end());
          std::multiset<std::vector<int>> b;
          for (size_t j = 0; j < fd_own.canonical_objects.size(); ++j) {
            // conjugate each vertex group back along a witness so the sets
            // are comparable elementwise
            b.insert(fd_own.vertex_groups[j]);
          }
          std::multiset<size_t> sizes_a, sizes_b;
          for (auto& v : a) sizes_a.insert(v.size());
          for (auto& v : b) sizes_b.insert(v.size());
          CHECK(sizes_a == sizes_b);
        }
    }
  }

  SUBCASE("pointed map group laws") {
    auto u = pointed_maps(3, c3);
    CHECK(u.u_size == 27);
    // pointwise product and inverses
    for (long a = 0; a < u.u_size; ++a) {
      CHECK(u.prod(a, u.inverse(a)) == u.identity_map());
      for (long b = 0; b < u.u_size; ++b)
        for (int x = 0; x < 3; ++x)
          CHECK(u.digit(u.prod(a, b), x) == c3->mul(u.digit(a, x), u.digit(b, x)));
    }
    // O x Pi -> U is a bijection via (alpha, sigma) -> alpha * sigma
    auto olist = u.all_o();
    CHECK(olist.size() == 9);
    std::set<long> seen;
    for (long alpha : olist)
      for (int s = 0; s < 3; ++s) {
        long code = 0, p = 1;
        for (int x = 0; x < 3; ++x) {
          code += static_cast<long>(c3->mul(u.digit(alpha, x), s)) * p;
          p *= 3;
        }
        seen.insert(code);
      }
    CHECK(seen.size() == 27);
  }

  SUBCASE("iota inclusion is an equivalence iff H1 is trivial") {
    auto r1 = verify_fixed_point_inclusion(c2, c3, inversion_action(c2, c3));
    CHECK(r1.pass);
    CHECK(r1.stats["equivalence"] == true);
    auto s3 = make_named("S3");
    auto r2 = verify_fixed_point_inclusion(c2, s3, trivial_action(c2, s3));
    CHECK(r2.pass);
    CHECK(r2.stats["equivalence"] == false);  // Hom(C2, S3) has two classes
  }
}
