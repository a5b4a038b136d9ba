#include <doctest.h>

#include "equicat/nerve.hpp"
#include "oracles.hpp"

using namespace equicat;

TEST_CASE("nerve level counts") {
  SUBCASE("one-object category: N_q has |G|^q simplices") {
    auto nd = nerve(one_object(make_named("S3")), 3);
    CHECK(nd.s.level_size == std::vector<long>{1, 6, 36, 216});
  }

  SUBCASE("chaotic category: N_q = X^(q+1)") {
    auto nd = nerve(chaotic(3), 3);
    CHECK(nd.s.level_size == std::vector<long>{3, 9, 27, 81});
  }

  SUBCASE("terminal category: one simplex per level") {
    auto nd = nerve(chaotic(1), 3);
    CHECK(nd.s.level_size == std::vector<long>{1, 1, 1, 1});
  }

  SUBCASE("simplicial identities validated on varied inputs") {
    nerve(translation(conjugation_gset(make_named("S3"))), 3).s.validate();
    nerve(one_object(make_named("Q8")), 3).s.validate();
    nerve(translation(regular_gset(make_named("D4"))), 2).s.validate();
  }
}

TEST_CASE("nerve preserves products") {
  auto a = one_object(make_named("C2"));
  auto b = chaotic(2);
  auto nab = nerve(product_category(a, b), 3);
  auto na = nerve(a, 3);
  auto nb = nerve(b, 3);
  for (int q = 0; q <= 3; ++q) {
    CHECK(nab.s.level_size[q] == na.s.level_size[q] * nb.s.level_size[q]);
    // componentwise split commutes with faces
    if (q >= 1) {
      for (long si = 0; si < nab.s.level_size[q]; ++si) {
        std::vector<int> sa, sb;
        for (int v : nab.strings[q][si]) {
          sa.push_back(v / b->n_mor());
          sb.push_back(v % b->n_mor());
        }
        int ia = na.string_index(q, sa), ib = nb.string_index(q, sb);
        for (int i = 0; i <= q; ++i) {
          long fs = nab.s.face[q][i][si];
          std::vector<int> fa, fb;
          for (int v : nab.strings[q - 1][fs]) {
            fa.push_back(q == 1 ? v / b->n_obj : v / b->n_mor());
            fb.push_back(q == 1 ? v % b->n_obj : v % b->n_mor());
          }
          CHECK(na.string_index(q - 1, fa) == na.s.face[q][i][ia]);
          CHECK(nb.string_index(q - 1, fb) == nb.s.face[q][i][ib]);
        }
      }
    }
  }
}

TEST_CASE("bar construction") {
  SUBCASE("one point: levels |G|^q") {
    auto bd = bar_construction(point_gset(make_named("S3")), 3);
    CHECK(bd.s.level_size == std::vector<long>{1, 6, 36, 216});
  }

  SUBCASE("q_max = 0: just Y") {
    auto bd = bar_construction(regular_gset(make_named("C4")), 0);
    CHECK(bd.s.level_size == std::vector<long>{4});
  }

  SUBCASE("levelwise isomorphism with the translation nerve") {
    CHECK(verify_bar_iso(point_gset(make_named("S3")), 3).pass);
    CHECK(verify_bar_iso(regular_gset(make_named("C4")), 3).pass);
    CHECK(verify_bar_iso(regular_gset(make_named("S3")), 2).pass);
    CHECK(verify_bar_iso(conjugation_gset(make_named("D4")), 2).pass);
    GSet cosets;  // C4 on C4/C2
    auto c4 = make_named("C4");
    cosets.group = c4;
    cosets.size = 2;
    cosets.act = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};
    CHECK(verify_bar_iso(cosets, 3).pass);
  }
}

TEST_CASE("fixed points commute with the nerve") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("trivial subgroup: identity comparison") {
    auto act = conjugation_one_object(make_named("S3"));
    auto r = verify_fixed_nerve(act, trivial_subgroup(make_named("S3")), 3);
    CHECK(r.pass);
  }

  SUBCASE("bold-G under conjugation: fixed nerve is the nerve of the center") {
    auto q8 = make_named("Q8");
    auto r = verify_fixed_nerve(conjugation_one_object(q8), full_subgroup(q8), 3);
    CHECK(r.pass);
    CHECK(r.stats["fixed"] == nlohmann::json({1, 2, 4, 8}));  // center C2
  }

  SUBCASE("materialized Cat_G(G~, bold-Pi) for C2 on C3 by inversion") {
    auto inv = inversion_action(c2, c3);
    auto fc = functor_category(chaotic(2), one_object(c3));
    CatGAction act_b;
    act_b.group = c2;
    act_b.cat = one_object(c3);
    act_b.on_obj.assign(2, {0});
    act_b.on_mor = inv.act;
    act_b.validate();
    auto conj = conjugation_action(fc, chaotic_action(regular_gset(c2)), act_b);
    for (auto& H : subgroups(c2)) {
      auto r = verify_fixed_nerve(conj, H, 3);
      CAPTURE(H.members);
      CHECK(r.pass);
    }
  }

  SUBCASE("chaotic categories with swapped points") {
    GSet y;
    y.group = c2;
    y.size = 4;
    y.act = {{0, 1, 2, 3}, {1, 0, 3, 2}};
    auto r = verify_fixed_nerve(chaotic_action(y), full_subgroup(c2), 3);
    CHECK(r.pass);
    CHECK(r.stats["fixed"] == nlohmann::json({0, 0, 0, 0}));
  }
}

TEST_CASE("orbit comparison of nerves") {
  SUBCASE("S3 under conjugation at q = 2: 4 versus 11") {
    auto s3 = make_named("S3");
    auto rep = compare_orbit_nerve(conjugation_one_object(s3), 2);
    CHECK_FALSE(rep.quotient_descended);
    CHECK(rep.nerve_of_quotient == std::vector<long>{1, 2, 4});
    CHECK(rep.quotient_of_nerve == std::vector<long>{1, 3, 11});
    CHECK(rep.equal == std::vector<bool>{true, false, false});
    CHECK(rep.quotient_of_nerve[2] == oracles::burnside_conjugation_tuples(*s3, 2));
  }

  SUBCASE("A5 under conjugation at q = 2: at least 60 orbit simplices") {
    auto a5 = make_named("A5");
    auto rep = compare_orbit_nerve(conjugation_one_object(a5), 2);
    CHECK(rep.quotient_of_nerve[2] == 77);
    CHECK(rep.quotient_of_nerve[2] >= 60);
    CHECK(rep.quotient_of_nerve[2] == oracles::burnside_conjugation_tuples(*a5, 2));
    CHECK(rep.nerve_of_quotient == std::vector<long>{1, 1, 1});  // A5 is perfect
  }

  SUBCASE("trivial action: equality at all levels") {
    auto d4 = make_named("D4");
    auto rep = compare_orbit_nerve(trivial_cat_action(d4, one_object(d4)), 3);
    CHECK(rep.quotient_descended);
    for (bool e : rep.equal) CHECK(e);
  }
}

TEST_CASE("chaotic nerve contraction") {
  for (int x = 1; x <= 3; ++x) {
    auto r = verify_chaotic_contraction(x, 3);
    CAPTURE(x);
    CHECK(r.pass);
  }
  CHECK(verify_chaotic_contraction(2, 4).pass);
}

TEST_CASE("pi0") {
  SUBCASE("nerve of a groupoid counts components") {
    CHECK(pi0(nerve(chaotic(3), 1).s) == 1);
    CHECK(pi0(nerve(one_object(make_named("S3")), 1).s) == 1);
  }

  SUBCASE("discrete category on n objects") {
    GSet y;
    y.group = make_named("C1");
    y.size = 5;
    y.act = {{0, 1, 2, 3, 4}};
    CHECK(pi0(nerve(translation(y), 1).s) == 5);
  }

  SUBCASE("fixed category components match H1") {
    auto c2 = make_named("C2");
    auto c3 = make_named("C3");
    auto inv = inversion_action(c2, c3);
    auto fc = functor_category(chaotic(2), one_object(c3));
    CatGAction act_b;
    act_b.group = c2;
    act_b.cat = one_object(c3);
    act_b.on_obj.assign(2, {0});
    act_b.on_mor = inv.act;
    act_b.validate();
    auto conj = conjugation_action(fc, chaotic_action(regular_gset(c2)), act_b);
    auto fx = fixed_category(conj, full_subgroup(c2));
    auto table = h1(c2, c3, inv, full_subgroup(c2));
    CHECK(pi0(nerve(fx.cat, 1).s) == static_cast<int>(table.classes.size()));

    auto s3 = make_named("S3");
    auto triv = trivial_action(c2, s3);
    auto fc2 = functor_category(chaotic(2), one_object(s3));
    auto conj2 = conjugation_action(fc2, chaotic_action(regular_gset(c2)),
                                    trivial_cat_action(c2, one_object(s3)));
    auto fx2 = fixed_category(conj2, full_subgroup(c2));
    auto table2 = h1(c2, s3, triv, full_subgroup(c2));
    CHECK(pi0(nerve(fx2.cat, 1).s) == static_cast<int>(table2.classes.size()));
  }
}
