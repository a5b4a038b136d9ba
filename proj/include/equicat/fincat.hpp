#pragma once

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equicat/crossed.hpp"
#include "equicat/group.hpp"

namespace equicat {

/// A finite category: objects and morphisms by index, with a dense partial
/// composition table. comp[f][g] is f after g, defined when src(f) = tgt(g).
struct FinCat {
  int n_obj = 0;
  std::vector<int> src, tgt;  // per morphism
  std::vector<int> idm;       // per object
  std::vector<int> comp;      // n_mor x n_mor, -1 where undefined

  int n_mor() const { return static_cast<int>(src.size()); }
  int compose(int f, int g) const { return comp[static_cast<size_t>(f) * src.size() + g]; }
  void validate() const;  // unit laws, associativity, src/tgt consistency
  bool is_chaotic() const;
  bool is_groupoid() const;
  std::vector<int> hom_set(int from, int to) const;

  // Text format: object count, morphism count, per-morphism "src tgt",
  // identity list, composition triples "f g fg".
  static FinCat from_text(std::istream& in);
  void to_text(std::ostream& out) const;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

FinCatPtr make_fincat(FinCat c);  // validates

// Chaotic category on n objects: morphism y*n + x is the unique x -> y.
FinCatPtr chaotic(int n);

struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<std::vector<int>> act;  // per group element, permutation of points

  int apply(int g, int y) const { return act[g][y]; }
  void validate() const;
};

GSet regular_gset(GroupPtr g);            // G acting on itself by left translation
GSet point_gset(GroupPtr g);              // one fixed point
GSet conjugation_gset(GroupPtr g);        // G on itself by conjugation

// Translation category <G,Y>: objects Y, morphism g*|Y| + y : y -> g y,
// composition (h, g y) after (g, y) = (hg, y).
FinCatPtr translation(const GSet& y);

// One-object category of a group; morphisms are the elements.
FinCatPtr one_object(GroupPtr g);

struct CatGAction {
  GroupPtr group;
  FinCatPtr cat;
  std::vector<std::vector<int>> on_obj, on_mor;

  void validate() const;  // each g a functor, g -> functor a homomorphism
};

CatGAction trivial_cat_action(GroupPtr g, FinCatPtr c);
CatGAction chaotic_action(const GSet& y);            // diagonal on morphism pairs
CatGAction conjugation_one_object(GroupPtr g);       // G on bold-G by conjugation

struct Functor {
  FinCatPtr dom, cod;
  std::vector<int> ob, mor;

  void validate() const;
};

// The isomorphism from the translation category <G,G> to the chaotic
// category on G, (h, g) -> (hg, g); inverse (h, g) -> (h g^{-1}, g).
Functor translation_to_chaotic(GroupPtr g);
// Exhaustive checks: functor, iso, stated inverse, right-G equivariance.
VerifyReport verify_translation_iso(GroupPtr g);

// All functors a -> b, canonically ordered. Throws if the search would
// exceed `bound` functors or candidate assignments.
std::vector<Functor> all_functors(FinCatPtr a, FinCatPtr b, long bound = 200000);

/// Materialized functor category: objects are functors, morphisms natural
/// transformations (stored by component vectors).
struct FunctorCat {
  FinCatPtr cat;
  FinCatPtr a, b;
  std::vector<Functor> functors;                 // per object
  std::vector<std::vector<int>> components;      // per morphism: per a-object
  int functor_index(const Functor& f) const;
};

FunctorCat functor_category(FinCatPtr a, FinCatPtr b, long bound = 200000);

// Conjugation action (gF)(x) = g F(g^{-1} x) on a materialized functor
// category, from actions on both ends.
CatGAction conjugation_action(const FunctorCat& fc, const CatGAction& act_a,
                              const CatGAction& act_b);

/// Full subcategory of H-fixed objects and H-fixed morphisms.
struct FixedCat {
  FinCatPtr cat;
  std::vector<int> obj_in_parent, mor_in_parent;
};

FixedCat fixed_category(const CatGAction& act, const Subgroup& h);

/// Quotient by a group action. Composition is the congruence closure of the
/// orbit relation; `descended` records whether representative composition
/// was already well defined (witness holds an offending quadruple if not).
struct OrbitCat {
  FinCatPtr cat;
  bool descended = true;
  std::optional<std::array<int, 4>> witness;  // f, g, f', g' with unequal composites
  std::vector<int> obj_orbit, mor_orbit;      // parent index -> quotient index
};

OrbitCat orbit_category(const CatGAction& act);

/// The group U(X, Pi) of maps X -> Pi under pointwise product, with the
/// basepoint subgroup O(X, Pi) = { a : a(x0) = e }. Elements are mixed-radix
/// encodings (digit x = the Pi-index of a(x)), so nothing is materialized.
struct PointedMapGroup {
  GroupPtr pi;
  int x_size = 0;
  int x0 = 0;
  long u_size = 0;  // |Pi|^{x_size}

  int digit(long u, int x) const;
  long with_digit(long u, int x, int value) const;
  long identity_map() const;
  long prod(long a, long b) const;      // pointwise product
  long inverse(long a) const;
  int sigma0(long u) const { return digit(u, x0); }
  long normalize(long u) const;         // u * u(x0)^{-1}, lands in O
  bool in_o(long u) const { return sigma0(u) == pi->identity; }
  std::vector<long> all_o() const;      // ascending
  std::vector<long> all_u() const;      // ascending
};

PointedMapGroup pointed_maps(int x_size, GroupPtr pi, long bound = 4000000);

/// Explicit model of the functor category Cat(X~, bold-Pi): objects O(X,Pi),
/// morphisms U(X,Pi) x O(X,Pi), I(a) = (a, a), S(m, a) = a, T(m, a) =
/// normalize(m), C((m2, b), (m1, a)) = (m2 * m1(x0), a).
struct ExplicitModel {
  PointedMapGroup u;
  std::vector<long> objects;                    // O, ascending
  std::vector<std::pair<long, long>> morphisms; // (m, a), lexicographic
  FinCatPtr cat;                                // materialized when small

  int object_index(long alpha) const;
  int morphism_index(long m, long alpha) const;
};

ExplicitModel explicit_model(int x_size, GroupPtr pi, long bound = 100000);

// Exhaustive isomorphism between the explicit model and the generically
// enumerated functor category Cat(chaotic(x), bold-Pi).
VerifyReport verify_explicit_model(int x_size, GroupPtr pi);

// The commuting square of categories over U(X, Pi): the translation category
// of U on itself maps isomorphically to the chaotic category on U, and both
// quotients by the right Pi-action identify with the explicit model; xi is an
// isomorphism of categories. All maps checked elementwise.
VerifyReport verify_classifying_diagram(int x_size, GroupPtr pi);

/// The chaotic category on U(G, Pi) carrying the semidirect-product action
/// (sigma, g) u = (g . u) sigma^{-1}, where (g . u)(x) = g . u(g^{-1} x).
struct GammaActionModel {
  SemidirectProduct gamma;
  PointedMapGroup u;
  FinCatPtr cat;                 // chaotic on |U| objects (object i = all_u()[i])
  std::vector<long> object_codes;
  CatGAction act;                // action of gamma.gamma
};

GammaActionModel gamma_action(GroupPtr g, GroupPtr pi, const GroupAction& action,
                              long bound = 4096);

// Checks the twisted commutation g(F sigma) = (gF)(g . sigma) directly on
// the object set, plus validity of the packaged action.
VerifyReport verify_gamma_action(const GammaActionModel& m);

/// H-fixed part of Cat_G(G~, bold-Pi), kept structured: objects are the maps
/// alpha: G -> Pi with alpha(e) = e fixed by the conjugation H-action,
/// components computed from an explicit generating family of fixed natural
/// transformations, vertex groups by direct scan.
struct FixedDecomposition {
  Subgroup h;
  GroupPtr pi;
  GroupAction action;
  long n_objects = 0;
  std::vector<long> canonical_objects;          // least object per component
  std::vector<CrossedAntiHom> restrictions;     // its restriction to H
  std::vector<std::vector<int>> vertex_groups;  // sigma-sets, subgroups of Pi
  std::vector<long> component_sizes;
  int epsilon_component = -1;                   // component of the trivial map

  nlohmann::json to_json() const;
};

FixedDecomposition fixed_decomposition(GroupPtr g, GroupPtr pi, const GroupAction& action,
                                       const Subgroup& h, long bound = 2000000);

// Components biject with H^1(H; Pi) and vertex groups are conjugates of the
// matched class representative's centralizer. Exact, elementwise.
VerifyReport verify_fixed_decomposition(GroupPtr g, GroupPtr pi, const GroupAction& action,
                                        const Subgroup& h);

// iota^G: bold-(Pi^G) -> Cat_G(G~, bold-Pi)^G is an equivalence iff H^1 is
// trivial; checked in both directions.
VerifyReport verify_fixed_point_inclusion(GroupPtr g, GroupPtr pi, const GroupAction& action);

}  // namespace equicat
