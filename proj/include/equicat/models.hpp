#pragma once

#include <json.hpp>

#include <vector>

#include "equicat/crossed.hpp"
#include "equicat/fincat.hpp"
#include "equicat/group.hpp"
#include "equicat/skew.hpp"

namespace equicat {

/// A finite stand-in for an ambient G-set with enough room: `copies` copies
/// of each orbit G/H, one H per subgroup conjugacy class.
struct FiniteUniverse {
  GroupPtr group;
  int copies = 0;
  int size = 0;
  std::vector<std::vector<int>> act;
  std::vector<Subgroup> class_reps;            // one per conjugacy class
  std::vector<int> point_class, point_copy;    // per point
  std::vector<int> block_start;                // start of each (class, copy) block

  GSet as_gset() const;
  int block_of(int point) const;
};

FiniteUniverse build_universe(GroupPtr g, int copies, int bound = 4096);

/// Objects (A, alpha): an n-element subset of the universe together with an
/// ordering, stored as the injective tuple (alpha(0), ..., alpha(n-1)).
/// Sigma_n acts on the right by precomposition, G on the left by translation.
struct SigmaModel {
  FiniteUniverse universe;
  int n = 0;
  GroupPtr sigma;                              // Sigma_n
  std::vector<std::vector<int>> sigma_perms;   // per element, perm of 0..n-1
  SemidirectProduct gamma;                     // Sigma_n x| G, trivial action
  std::vector<std::vector<int>> objects;       // sorted injective tuples
  std::vector<std::vector<int>> sigma_act, g_act;  // on object indices

  int object_index(const std::vector<int>& tuple) const;
  int gamma_act(int gamma_elt, int obj) const;  // (sigma, g)(A, alpha)
};

SigmaModel sigma_model(GroupPtr g, int n, const FiniteUniverse& u, long bound = 300000);

// right/left action axioms, their commutation, and the packaged
// semidirect-product action law, exhaustively
VerifyReport verify_sigma_action(const SigmaModel& m);
// trivial Sigma_n stabilizers on every object
VerifyReport verify_sigma_freeness(const SigmaModel& m);

struct FixedObjectResult {
  bool ok = false;
  std::vector<int> tuple;     // the fixed object
  int required_copies = 0;    // copies the construction needed
  std::string detail;
};

// The induced-G-set construction of a Lambda-fixed object for
// Lambda = {(rho(h), h)}, rho a homomorphism H -> Sigma_n; verified
// elementwise against the model action.
FixedObjectResult lambda_fixed_injection(const SigmaModel& m, const Subgroup& lambda);

// Every admissible Lambda <= Sigma_n x G gets a fixed object, both by the
// construction and by independent exhaustive search.
VerifyReport verify_sigma_fixed_objects(const SigmaModel& m);

// The orbit description: objects the n-subsets, morphisms the bijections,
// G by translation and conjugation; isomorphic to the Sigma_n-quotient of
// the chaotic model via [(B, beta), (A, alpha)] -> beta o alpha^{-1}.
VerifyReport verify_sigma_orbit_description(const SigmaModel& m);

/// Objects are R-linear monomorphisms R^n -> R[U], stored as n column
/// vectors over the universe; GL(n, R) acts on the right by precomposition,
/// G on the left entrywise-and-translation.
struct GLModel {
  FiniteUniverse universe;
  int n = 0;
  GRing base;
  MatrixGroupGL glr;
  SemidirectProduct gamma;  // GL(n, R) x| G
  std::vector<std::vector<int>> objects;  // column-major: col i at [i*|U|, (i+1)*|U|)

  int object_index(const std::vector<int>& obj) const;
  std::vector<int> act_g(int g, const std::vector<int>& obj) const;
  std::vector<int> act_tau(int tau, const std::vector<int>& obj) const;
  int gamma_act(int gamma_elt, int obj) const;
};

GLModel gl_model(int n, const GRing& r, const FiniteUniverse& u, long bound = 1000000);

VerifyReport verify_gl_action(const GLModel& m);
VerifyReport verify_gl_freeness(const GLModel& m);

// Lambda-fixed object for Lambda = Lambda_rho, rho: H -> GL(n, R) crossed:
// the module of rho embeds in a permutation module over an H-set, which is
// induced up to G and placed inside the universe.
FixedObjectResult gl_lambda_fixed(const GLModel& m, const Subgroup& lambda, int embed_bound = 8);

VerifyReport verify_gl_fixed_objects(const GLModel& m, int embed_bound = 8);

// Orbit description: objects the rank-n free submodules of R[U], morphisms
// the R-isomorphisms, isomorphic to the GL-quotient of the chaotic model.
VerifyReport verify_gl_orbit_description(const GLModel& m);

}  // namespace equicat
