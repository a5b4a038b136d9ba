#pragma once

#include <json.hpp>

#include <vector>

#include "equicat/fincat.hpp"

namespace equicat {

/// Levels 0..q_max with face and degeneracy index maps. face[q][i] maps
/// level q to level q-1 (1 <= q, 0 <= i <= q); degen[q][i] maps level q to
/// level q+1 (q < q_max, 0 <= i <= q).
struct TruncSimplicialSet {
  int q_max = 0;
  std::vector<long> level_size;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;

  void validate() const;  // all simplicial identities among defined levels
  nlohmann::json to_json() const;
};

/// Nerve of a category: level q holds the composable strings [f1, ..., fq]
/// with src(f_i) = tgt(f_{i+1}); level 0 the objects. Faces drop an outer
/// morphism or compose an adjacent pair; level-1 faces are d0 = src,
/// d1 = tgt; degeneracies insert identities.
struct NerveData {
  FinCatPtr cat;
  TruncSimplicialSet s;
  std::vector<std::vector<std::vector<int>>> strings;  // per level, sorted

  int string_index(int q, const std::vector<int>& key) const;
};

NerveData nerve(FinCatPtr c, int q_max, long level_bound = 2000000);

struct SimplicialGAction {
  GroupPtr group;
  std::vector<std::vector<std::vector<int>>> act;  // per level, per element

  void validate(const TruncSimplicialSet& s) const;  // commutes with faces/degens
};

SimplicialGAction nerve_action(const NerveData& nd, const CatGAction& act);

/// Two-sided bar construction B_q = G^q x Y, with the levelwise bijection to
/// the nerve of the translation category checked against every structure map.
struct BarData {
  GSet y;
  TruncSimplicialSet s;
  std::vector<std::vector<std::vector<int>>> tuples;  // (g1..gq, y) per level
};

BarData bar_construction(const GSet& y, int q_max);
VerifyReport verify_bar_iso(const GSet& y, int q_max);

// N(C^H) and the H-fixed simplices of NC agree levelwise, compatibly with
// all faces and degeneracies.
VerifyReport verify_fixed_nerve(const CatGAction& act, const Subgroup& h, int q_max);

/// Per-level counts |N_q(C/G)| versus |(N_q C)/G|.
struct OrbitCompareReport {
  bool quotient_descended = true;
  std::vector<long> nerve_of_quotient;  // |N_q(C/G)|
  std::vector<long> quotient_of_nerve;  // |(N_q C)/G|
  std::vector<bool> equal;

  nlohmann::json to_json() const;
};

OrbitCompareReport compare_orbit_nerve(const CatGAction& act, int q_max);

// Extra-degeneracy contraction of the nerve of a chaotic category with
// basepoint 0: h appends the basepoint, and the identities
//   d_{q+1} h = id,  d_i h = h d_i,  s_i h = h s_i,  h h = s_{q+1} h,
//   d_0^{q+1} h = basepoint
// hold exhaustively up to q_max.
VerifyReport verify_chaotic_contraction(int x_size, int q_max);

// Coequalizer of d0, d1: S1 => S0, as a partition count.
int pi0(const TruncSimplicialSet& s);

// Product category, for the product-preservation property of the nerve.
FinCatPtr product_category(FinCatPtr a, FinCatPtr b);

}  // namespace equicat
