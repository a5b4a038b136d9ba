#include <doctest.h>

#include <fstream>
#include <sstream>

#include "equicat/group.hpp"
#include "oracles.hpp"

using namespace equicat;

TEST_CASE("named groups") {
  auto c1 = make_named("C1");
  CHECK(c1->order == 1);

  auto s3 = make_named("S3");
  CHECK(s3->order == 6);
  CHECK(conjugacy_classes(*s3).size() == 3);

  auto a5 = make_named("A5");
  CHECK(a5->order == 60);

  auto q8 = make_named("Q8");
  CHECK(q8->order == 8);
  CHECK(q8->element_order(2) == 4);  // i

  auto d4 = make_named("D4");
  CHECK(d4->order == 8);
  CHECK_FALSE(d4->is_abelian());

  CHECK_THROWS_AS(make_named("X5"), std::invalid_argument);
  CHECK_THROWS_AS(make_named("nonsense"), std::invalid_argument);
}

TEST_CASE("group table file roundtrip") {
  auto s3 = make_named("S3");
  std::stringstream ss;
  save_group_table(*s3, ss);
  auto back = load_group_table(ss, "S3copy");
  CHECK(same_group(*s3, *back));
  CHECK(back->labels == s3->labels);

  std::stringstream bad("order 2\n0 1\n1 1\n");
  CHECK_THROWS(load_group_table(bad));

  // make_named falls back to table files
  {
    std::ofstream out("test_group_table.txt");
    save_group_table(*make_named("Q8"), out);
  }
  auto q8 = make_named("test_group_table.txt");
  CHECK(q8->order == 8);
  CHECK(same_group(*q8, *make_named("Q8")));
  std::remove("test_group_table.txt");
}

TEST_CASE("validate rejects broken tables") {
  // constant table: no identity
  CHECK_THROWS(make_group({0, 0, 0, 0}));
}

TEST_CASE("semidirect products") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("C3 x| C2 by inversion is S3") {
    auto sd = semidirect(c3, c2, inversion_action(c2, c3));
    CHECK(sd.gamma->order == 6);
    CHECK(isomorphic(*sd.gamma, *make_named("S3")));
    CHECK_FALSE(sd.gamma->is_abelian());
  }

  SUBCASE("trivial action gives the direct product") {
    auto sd = semidirect(c3, c2, trivial_action(c2, c3));
    CHECK(isomorphic(*sd.gamma, *make_named("C6")));
    auto sd2 = semidirect(make_named("S3"), c2, trivial_action(c2, make_named("S3")));
    CHECK(sd2.gamma->order == 12);
    auto sd3 = semidirect(make_named("C4"), c3, trivial_action(c3, make_named("C4")));
    CHECK(isomorphic(*sd3.gamma, *make_named("C12")));
  }

  SUBCASE("C2 x| C2 trivial is the Klein four group") {
    auto sd = semidirect(c2, c2, trivial_action(c2, c2));
    CHECK(sd.gamma->order == 4);
    for (int x = 0; x < 4; ++x) CHECK(sd.gamma->element_order(x) <= 2);
    CHECK(isomorphic(*sd.gamma, *make_named("D2")));
  }

  SUBCASE("trivial action is the direct product, against an inline oracle") {
    for (auto [pn, gn] : {std::pair{"C3", "C4"}, {"S3", "C2"}, {"C4", "S3"}, {"Q8", "C3"}}) {
      auto pi = make_named(pn);
      auto g = make_named(gn);
      auto sd = semidirect(pi, g, trivial_action(g, pi));
      // independent direct-product table on pairs (s, a)
      const int np = pi->order, ng = g->order, n = np * ng;
      std::vector<int> table(static_cast<size_t>(n) * n);
      for (int s = 0; s < np; ++s)
        for (int a = 0; a < ng; ++a)
          for (int t = 0; t < np; ++t)
            for (int b = 0; b < ng; ++b)
              table[static_cast<size_t>(s * ng + a) * n + (t * ng + b)] =
                  pi->mul(s, t) * ng + g->mul(a, b);
      auto direct = make_group(std::move(table));
      CAPTURE(pn);
      CAPTURE(gn);
      CHECK(isomorphic(*sd.gamma, *direct));
    }
  }

  SUBCASE("projection splits and has kernel Pi") {
    for (auto& action : automorphism_actions(c2, c3)) {
      auto sd = semidirect(c3, c2, action);
      for (int a = 0; a < c2->order; ++a) CHECK(sd.proj(sd.incl_g(a)) == a);
      int kernel = 0;
      for (int e = 0; e < sd.gamma->order; ++e)
        if (sd.proj(e) == c2->identity) ++kernel;
      CHECK(kernel == c3->order);
      for (int s = 0; s < c3->order; ++s) CHECK(sd.proj(sd.incl_pi(s)) == c2->identity);
    }
  }
}

TEST_CASE("subgroup enumeration") {
  CHECK(subgroups(make_named("C1")).size() == 1);
  CHECK(subgroups(make_named("S3")).size() == 6);
  CHECK(subgroups(make_named("C6")).size() == 4);

  // against the independent generator-set oracle, |g| <= 24
  for (const char* name : {"C8", "C12", "D4", "D6", "Q8", "A4", "S4", "C2", "D2"}) {
    auto g = make_named(name);
    CAPTURE(name);
    CHECK(static_cast<int>(subgroups(g).size()) == oracles::subgroup_count_oracle(g));
  }

  CHECK_THROWS(subgroups(make_named("A5"), 30));  // bound exceeded

  // every reported subgroup really is one, and ordering is canonical
  auto subs = subgroups(make_named("S4"));
  for (size_t i = 0; i < subs.size(); ++i) {
    CHECK(subs[i].is_subgroup());
    if (i > 0) {
      bool ordered = subs[i - 1].members.size() < subs[i].members.size() ||
                     (subs[i - 1].members.size() == subs[i].members.size() &&
                      subs[i - 1].members < subs[i].members);
      CHECK(ordered);
    }
  }
}

TEST_CASE("normalizer") {
  auto s3 = make_named("S3");
  auto subs = subgroups(s3);
  for (auto& s : subs) {
    auto n = normalizer(*s3, s);
    CHECK(n.is_subgroup());
    if (s.order() == 1 || s.order() == 3 || s.order() == 6) {
      CHECK(n.order() == 6);  // trivial, C3, S3 all normal
    }
    if (s.order() == 2) CHECK(n.members == s.members);
  }
}

TEST_CASE("pi conjugacy classes of subgroups") {
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");

  SUBCASE("order-2 subgroups of S3 = C3 x| C2 form one Pi-class") {
    auto sd = semidirect(c3, c2, inversion_action(c2, c3));
    std::vector<Subgroup> cands;
    for (auto& s : subgroups(sd.gamma))
      if (s.order() == 2) cands.push_back(s);
    CHECK(cands.size() == 3);
    auto classes = pi_conjugacy_classes(sd, cands);
    CHECK(classes.size() == 1);
    CHECK(classes[0].size() == 3);
  }

  SUBCASE("trivial Pi: classes are the candidates") {
    auto sd = semidirect(make_named("C1"), make_named("S3"),
                         trivial_action(make_named("S3"), make_named("C1")));
    auto cands = subgroups(sd.gamma);
    auto classes = pi_conjugacy_classes(sd, cands);
    CHECK(classes.size() == cands.size());
  }
}

TEST_CASE("automorphism actions") {
  auto c1 = make_named("C1");
  auto c2 = make_named("C2");
  auto c3 = make_named("C3");
  CHECK(automorphism_actions(c2, c1).size() == 1);
  CHECK(automorphism_actions(c2, c3).size() == 2);  // trivial + inversion
  CHECK(automorphism_actions(c3, c2).size() == 1);
  for (auto& a : automorphism_actions(make_named("S3"), make_named("C4")))
    a.validate();
  // Aut(S3) = S3 itself (inner); homs C2 -> Aut(S3): identity + 3 reflections + ...
  auto acts = automorphism_actions(c2, make_named("S3"));
  CHECK(acts.size() == 4);  // trivial + three conjugation involutions
}

TEST_CASE("automorphism group materialization") {
  std::vector<std::vector<int>> perms;
  auto aut = automorphism_group(make_named("C5"), &perms);
  CHECK(aut->order == 4);  // Aut(C5) = C4
  CHECK(isomorphic(*aut, *make_named("C4")));
  auto autk = automorphism_group(make_named("D2"));
  CHECK(autk->order == 6);  // Aut(Klein) = S3
}

TEST_CASE("isomorphism search is bounded but correct on small orders") {
  CHECK(isomorphic(*make_named("D3"), *make_named("S3")));
  CHECK_FALSE(isomorphic(*make_named("C6"), *make_named("S3")));
  CHECK_FALSE(isomorphic(*make_named("Q8"), *make_named("D4")));
  CHECK_FALSE(isomorphic(*make_named("C4"), *make_named("D2")));
}

TEST_CASE("closure and generating sequences") {
  auto s4 = make_named("S4");
  auto gens = generating_sequence(*s4);
  CHECK(gens.size() <= 2);
  CHECK(closure(s4, gens).order() == 24);
  CHECK(closure(s4, {}).members == std::vector<int>{s4->identity});
}
