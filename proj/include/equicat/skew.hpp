#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "equicat/crossed.hpp"
#include "equicat/fincat.hpp"
#include "equicat/group.hpp"

namespace equicat {

struct FiniteRing {
  int size = 0;
  std::vector<int> add, mul;  // row-major size x size
  int zero = 0, one = 0;
  std::vector<int> neg;
  std::vector<std::string> labels;
  std::string name;
  // field data when constructed as F_{p^k}
  int char_p = 0, deg = 0;
  std::vector<int> modulus;  // coefficients of the irreducible polynomial

  int plus(int a, int b) const { return add[a * size + b]; }
  int times(int a, int b) const { return mul[a * size + b]; }
  bool is_unit(int a) const;
  void validate() const;  // ring axioms, exhaustively
};

using RingPtr = std::shared_ptr<const FiniteRing>;

RingPtr make_ring(FiniteRing r);

/// A finite ring with a group acting by ring automorphisms; twist(g, r) = r^g.
struct GRing {
  RingPtr ring;
  GroupPtr group;
  std::vector<std::vector<int>> act;

  int twist(int g, int r) const { return act[g][r]; }
  void validate() const;
  std::vector<int> fixed_subring() const;  // R^G
};

// F_{p^k} with the Frobenius generator of the Galois group C_k acting; the
// modulus is the lexicographically least monic irreducible of degree k.
GRing galois_field(int p, int k);

// Restrict the acting group to a subgroup, materialized in its own right.
GRing restrict_gring(const GRing& r, const Subgroup& h);

using RMatrix = std::vector<int>;  // n x n entries over the ring, row-major

RMatrix mat_identity(const FiniteRing& r, int n);
RMatrix mat_mul(const FiniteRing& r, int n, const RMatrix& a, const RMatrix& b);
RMatrix mat_twist(const GRing& r, int g, const RMatrix& a);
int mat_det(const FiniteRing& r, int n, const RMatrix& a);
std::vector<int> mat_apply(const FiniteRing& r, int n, const RMatrix& a,
                           const std::vector<int>& v);

/// GL(n, R) materialized as a finite group, with the entrywise G-action.
struct MatrixGroupGL {
  int n = 0;
  GRing base;
  GroupPtr group;
  std::vector<RMatrix> mats;  // per group element, sorted by entry vector
  GroupAction entry_action;

  int index_of(const RMatrix& m) const;
};

MatrixGroupGL gl(int n, const GRing& r, long bound = 10000);

// The Gamma = GL x| G action on the set GL(n,R) by (tau, g) x = (g x) tau^{-1}.
VerifyReport verify_gl_semidirect_action(const MatrixGroupGL& m);

/// Skew group ring R_G[G]: coefficient vectors indexed by G, product by
/// (r g)(s h) = r s^g gh. Materialized as a FiniteRing when small enough for
/// the exhaustive axiom check; otherwise axioms are verified on the pure
/// elements r g (which span).
struct SkewGroupRing {
  GRing base;
  RingPtr materialized;  // null when |R|^|G| exceeds the bound

  long element_count() const;
  std::vector<int> multiply(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> sum(const std::vector<int>& a, const std::vector<int>& b) const;
  long encode(const std::vector<int>& coeffs) const;
  std::vector<int> decode(long code) const;
};

SkewGroupRing skew_group_ring(const GRing& r, long materialize_bound = 256);

// g r = r^g g, subring embeddings, and (sampled when not materialized)
// associativity and distributivity on pure elements.
VerifyReport verify_skew_ring(const SkewGroupRing& s);

/// R-free module of the given rank with a semilinear G-action,
/// g (sum r_i e_i) = sum r_i^g (g e_i); mats[g] column i holds g e_i.
struct SkewModule {
  GRing base;
  int rank = 0;
  std::vector<RMatrix> mats;

  std::vector<int> apply(int g, const std::vector<int>& v) const;
  void validate(long exhaustive_bound = 100000) const;
};

SkewModule module_from_crossed(const MatrixGroupGL& glr, const CrossedHom& rho);
CrossedHom crossed_from_module(const MatrixGroupGL& glr, const SkewModule& m);

// All skew module structures on R^rank, by direct scan over matrix
// assignments satisfying the module axioms. Independent of the crossed-hom
// enumeration path.
std::vector<SkewModule> enumerate_skew_structures(const MatrixGroupGL& glr, long bound = 2000000);

// Module isomorphisms M -> N among the materialized GL elements.
std::vector<int> module_isomorphisms(const MatrixGroupGL& glr, const SkewModule& m,
                                     const SkewModule& n);

// Permutation skew module R[A] with g(sum r_a a) = sum r_a^g (g a).
SkewModule perm_skew(const GSet& a, const GRing& r);

struct Hilbert90Report {
  bool pass = true;
  std::string detail;
  int crossed_count = 0;
  int class_count = 0;
  int aut_order = 0;
  int gl_fixed_order = 0;
  int gl_base_order = 0;  // |GL(n, F_p)| computed independently

  nlohmann::json to_json() const;
};

// H^1(C_k; GL(n, F_{p^k})) under the entrywise Frobenius action is trivial,
// with Aut(eps) = GL(n, F_p).
Hilbert90Report hilbert90(int p, int k, int n);

// Module structures on R^n biject with crossed homs into GL(n, R): the two
// independent enumerations agree, both roundtrips are the identity, module
// isomorphisms equal crossed witnesses, and the class partitions match.
VerifyReport verify_module_correspondence(int p, int k, int n);

struct EmbedResult {
  bool found = false;
  GSet gset;                 // the G-set A
  std::vector<int> matrix;   // |A| x rank, row a holds the a-coordinates
  int min_gset_size = 0;     // size at which the embedding was found
};

// Search for a monomorphism of skew modules M -> R[A] over G-sets A of size
// at most search_bound (disjoint unions of orbits, in size order). Not-found
// is a value, not an error.
EmbedResult embed_in_permutation(const SkewModule& m, int search_bound);

}  // namespace equicat
