#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace equicat {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by an explicit Cayley table on elements 0..order-1.
/// Everything downstream is elementwise, so the table representation wins on
/// simplicity; orders stay tiny (default enumeration bound 120).
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // row-major: table[a*order + b] = a*b
  int identity = 0;
  std::vector<int> inv;
  std::vector<std::string> labels;  // display names, one per element
  std::string name;

  int mul(int a, int b) const { return table[a * order + b]; }
  int mul(int a, int b, int c) const { return mul(mul(a, b), c); }
  int conj(int a, int b) const { return mul(mul(a, b), inv[a]); }  // a b a^-1
  int element_order(int a) const;
  bool is_abelian() const;

  // Throws std::runtime_error if the table fails the group axioms
  // (associativity, two-sided identity, two-sided inverses).
  void validate() const;
};

// Builds and fully validates a group from a Cayley table.
GroupPtr make_group(std::vector<int> table, std::vector<std::string> labels = {},
                    std::string name = "");

// Accepts C{n}, S{n} (n<=6), D{n} (order 2n), A{n} (n<=5), Q8, or a path to a
// group table file.
GroupPtr make_named(const std::string& spec);

// Table file format: first line "order n", then n lines of n whitespace
// separated 0-based indices, then an optional line "labels l0 l1 ...".
GroupPtr load_group_table(std::istream& in, const std::string& name = "");
GroupPtr load_group_table_file(const std::string& path);
void save_group_table(const FiniteGroup& g, std::ostream& out);

bool same_group(const FiniteGroup& a, const FiniteGroup& b);

struct GroupHom {
  GroupPtr dom, cod;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  void validate() const;
};

/// An action of `actor` on the group `target` by automorphisms:
/// act[g] is the permutation s -> g.s, and g -> act[g] is a homomorphism.
struct GroupAction {
  GroupPtr actor;
  GroupPtr target;
  std::vector<std::vector<int>> act;
  std::string name;  // optional selector tag ("trivial", "inversion", ...)

  int apply(int g, int s) const { return act[g][s]; }
  void validate() const;
};

GroupAction trivial_action(GroupPtr actor, GroupPtr target);
// Defined for cyclic actors of even order acting on an abelian target: odd
// powers of the generator invert.
GroupAction inversion_action(GroupPtr actor, GroupPtr target);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted element indices

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
  bool is_subgroup() const;  // closure/identity/inverse check
  void validate() const;
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup closure(GroupPtr g, const std::vector<int>& generators);

// The subgroup as a group in its own right; element i is s.members[i].
GroupPtr subgroup_as_group(const Subgroup& s);

int default_gamma_bound();  // 48 unless EQUICAT_MAX_GAMMA overrides

// Complete subgroup list, ordered by (order, lexicographic member list).
std::vector<Subgroup> subgroups(GroupPtr g, int bound = 120);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Smallest generating sequence found greedily: each element enlarges the
// closure of its predecessors.
std::vector<int> generating_sequence(const FiniteGroup& g);

/// Gamma = Pi x| G on pair indices (sigma, g) -> sigma*|G| + g, with product
/// (sigma,g)(tau,h) = (sigma (g.tau), gh).
struct SemidirectProduct {
  GroupPtr pi, g;
  GroupAction action;
  GroupPtr gamma;
  GroupHom proj;     // gamma -> g
  GroupHom incl_pi;  // pi -> gamma
  GroupHom incl_g;   // g -> gamma

  int pair(int sigma, int gi) const { return sigma * g->order + gi; }
  int sigma_of(int e) const { return e / g->order; }
  int g_of(int e) const { return e % g->order; }
};

SemidirectProduct semidirect(GroupPtr pi, GroupPtr g, const GroupAction& action);

// Partition of candidate subgroups of gamma.gamma under conjugation by
// incl_pi(Pi) only. Classes are lists of candidate indices, each sorted, and
// ordered by least member.
std::vector<std::vector<int>> pi_conjugacy_classes(const SemidirectProduct& gamma,
                                                   const std::vector<Subgroup>& candidates);

std::vector<std::vector<int>> all_automorphisms(const FiniteGroup& g);
// Materializes Aut(g); perms_out (optional) receives the automorphism
// permutation for each element of the returned group, in element order.
GroupPtr automorphism_group(GroupPtr g, std::vector<std::vector<int>>* perms_out = nullptr);

std::vector<GroupHom> all_homomorphisms(GroupPtr dom, GroupPtr cod);

// All homomorphisms G -> Aut(Pi) as actions, deduplicated, canonically ordered
// (lexicographic on the flattened permutation arrays).
std::vector<GroupAction> automorphism_actions(GroupPtr g, GroupPtr pi);

// Bounded backtracking on generator images; intended for small orders.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace equicat
