#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "equicat/group.hpp"

namespace equicat {

/// alpha: H -> Pi with alpha(gh) = alpha(g) (g.alpha(h)), where H is a
/// subgroup of the actor and the action is the actor's action on Pi.
struct CrossedHom {
  Subgroup source;     // H, parent = G
  GroupPtr target;     // Pi
  GroupAction action;  // G acting on Pi
  std::vector<int> val;  // indexed by G element; -1 off H

  int operator()(int h) const { return val[h]; }
  void validate() const;
};

/// alpha(gh) = (g.alpha(h)) alpha(g).
struct CrossedAntiHom {
  Subgroup source;
  GroupPtr target;
  GroupAction action;
  std::vector<int> val;

  int operator()(int h) const { return val[h]; }
  void validate() const;
};

bool same_context(const CrossedHom& a, const CrossedHom& b);
bool same_context(const CrossedAntiHom& a, const CrossedAntiHom& b);

// All crossed homomorphisms H -> Pi, ordered lexicographically by value
// vector. Enumeration extends values generator-by-generator, pruning on
// inconsistency of the induced closure.
std::vector<CrossedHom> enumerate_crossed(const Subgroup& H, GroupPtr pi,
                                          const GroupAction& action);
std::vector<CrossedAntiHom> enumerate_anticrossed(const Subgroup& H, GroupPtr pi,
                                                  const GroupAction& action);

// All sigma in Pi with beta(g)(g.sigma) = sigma alpha(g) for g in H.
std::vector<int> iso_witnesses(const CrossedHom& alpha, const CrossedHom& beta);
// All sigma in Pi with beta(g) sigma = (g.sigma) alpha(g) for g in H.
std::vector<int> anti_witnesses(const CrossedAntiHom& alpha, const CrossedAntiHom& beta);

// Pi^alpha = witnesses alpha -> alpha, as a subgroup of Pi.
Subgroup centralizer(const CrossedHom& alpha);
Subgroup anti_centralizer(const CrossedAntiHom& alpha);

struct H1Class {
  int rep = 0;                   // index into H1Table::all
  std::vector<int> members;      // indices into H1Table::all
  Subgroup aut;                  // Pi^alpha of the representative
};

/// The pointed set H^1(H; Pi) with explicit class members, so the subgroup
/// correspondence can be checked elementwise rather than by counts.
struct H1Table {
  Subgroup source;
  GroupPtr pi;
  GroupAction action;
  std::vector<CrossedHom> all;      // canonical order
  std::vector<H1Class> classes;     // ordered by least member
  int basepoint_class = -1;         // class of the trivial hom

  nlohmann::json to_json() const;
};

H1Table h1(GroupPtr g, GroupPtr pi, const GroupAction& action, const Subgroup& H);

// Lambda_alpha = {(alpha(h), h) | h in H} as a subgroup of gamma.
Subgroup lambda_of(const CrossedHom& alpha, const SemidirectProduct& gamma);
// Inverse: requires Lambda to meet Pi trivially.
CrossedHom crossed_from_lambda(const Subgroup& lambda, const SemidirectProduct& gamma);

// bar(alpha)(g) = g.alpha(g^{-1}); a bijection crossed <-> anti-crossed that
// preserves witness sets.
CrossedAntiHom bar(const CrossedHom& alpha);
CrossedHom unbar(const CrossedAntiHom& alpha);

struct VerifyReport {
  bool pass = true;
  std::string detail;  // first failure, empty when pass
  nlohmann::json stats = nlohmann::json::object();

  void fail(const std::string& msg) {
    if (pass) detail = msg;
    pass = false;
  }
  nlohmann::json to_json() const;
};

// |H^1(G;Pi)| equals the number of Pi-conjugacy classes of subgroups
// Lambda <= Gamma with Lambda meeting Pi trivially and projecting onto G,
// with alpha -> Lambda_alpha realizing the bijection elementwise
// (sigma-conjugation of Lambda_alpha is Lambda_beta iff sigma is a witness
// alpha -> beta).
VerifyReport verify_h1_lambda_bijection(GroupPtr g, GroupPtr pi, const GroupAction& action);

// Pi^alpha = Pi intersect N_Gamma(Lambda_alpha), elementwise.
VerifyReport verify_crossed_centralizer(const CrossedHom& alpha, const SemidirectProduct& gamma);

// Right coset transversal of H in its parent (cosets Hg), lexicographically
// least element per coset, sorted.
std::vector<int> coset_transversal(const Subgroup& H);

// f: G -> Pi with f(k g_i) = alpha(k)^{-1}; satisfies
// h.f(h^{-1}g) = f(g) alpha(h) for all h in H, g in G, and f = e on reps.
std::vector<int> fixed_map(const CrossedHom& alpha, const std::vector<int>& reps);

}  // namespace equicat
