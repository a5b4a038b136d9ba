#include "equicat/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equicat {

namespace {

std::string describe(const FiniteGroup& g, int a) {
  if (a >= 0 && a < static_cast<int>(g.labels.size())) return g.labels[a];
  return std::to_string(a);
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  // (f after g)(x) = f(g(x))
  std::vector<int> h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

GroupPtr group_from_perms(std::vector<std::vector<int>> perms, std::string name,
                          bool label_words) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(perms.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(compose_perm(perms[a], perms[b]));
      if (it == index.end()) throw std::runtime_error("permutation set not closed");
      table[static_cast<size_t>(a) * n + b] = it->second;
    }
  std::vector<std::string> labels;
  if (label_words) {
    labels.reserve(n);
    for (auto& p : perms) {
      std::string w;
      for (int v : p) w += static_cast<char>('0' + v);
      labels.push_back(w);
    }
  }
  return make_group(std::move(table), std::move(labels), std::move(name));
}

GroupPtr cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic order must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = std::to_string(a);
  return make_group(std::move(table), std::move(labels), "C" + std::to_string(n));
}

GroupPtr symmetric(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("S{n} supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p = identity_perm(n);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(perms), "S" + std::to_string(n), true);
}

bool perm_is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

GroupPtr alternating(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("A{n} supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p = identity_perm(n);
  do {
    if (perm_is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_perms(std::move(perms), "A" + std::to_string(n), true);
}

GroupPtr dihedral(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("D{n} supported for 1 <= n <= 64");
  // Elements 0..n-1 are rotations x -> x+a, elements n..2n-1 reflections
  // x -> b-x; composition is composition of functions on Z/n.
  const int m = 2 * n;
  auto idx = [n](bool refl, int k) { return (refl ? n : 0) + ((k % n + n) % n); };
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool ra = a >= n, rb = b >= n;
      int ka = a % n, kb = b % n;
      int out;
      if (!ra && !rb) out = idx(false, ka + kb);
      else if (!ra && rb) out = idx(true, ka + kb);
      else if (ra && !rb) out = idx(true, ka - kb);
      else out = idx(false, ka - kb);
      table[static_cast<size_t>(a) * m + b] = out;
    }
  std::vector<std::string> labels(m);
  for (int k = 0; k < n; ++k) {
    labels[k] = "r" + std::to_string(k);
    labels[n + k] = "sr" + std::to_string(k);
  }
  return make_group(std::move(table), std::move(labels), "D" + std::to_string(n));
}

GroupPtr quaternion8() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  auto axis_of = [](int e) { return e / 2; };
  auto sign_of = [](int e) { return e % 2 == 0 ? 1 : -1; };
  // unit axis product: axes 0=1, 1=i, 2=j, 3=k
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int aa = axis_of(a), ab = axis_of(b);
      int s = sign_of(a) * sign_of(b) * sg[aa][ab];
      table[static_cast<size_t>(a) * 8 + b] = enc(ax[aa][ab], s);
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return make_group(std::move(table), std::move(labels), "Q8");
}

}  // namespace

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::validate() const {
  if (order <= 0) throw std::runtime_error("group order must be positive");
  if (static_cast<int>(table.size()) != order * order)
    throw std::runtime_error("Cayley table size mismatch");
  for (int v : table)
    if (v < 0 || v >= order) throw std::runtime_error("Cayley table entry out of range");
  if (identity < 0 || identity >= order || static_cast<int>(inv.size()) != order)
    throw std::runtime_error("identity/inverse data malformed");
  for (int a = 0; a < order; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a)
      throw std::runtime_error("identity fails at element " + describe(*this, a));
    if (mul(a, inv[a]) != identity || mul(inv[a], a) != identity)
      throw std::runtime_error("inverse fails at element " + describe(*this, a));
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < order; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw std::runtime_error("associativity fails at (" + describe(*this, a) + "," +
                                   describe(*this, b) + "," + describe(*this, c) + ")");
    }
}

GroupPtr make_group(std::vector<int> table, std::vector<std::string> labels, std::string name) {
  auto g = std::make_shared<FiniteGroup>();
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(table.size()))));
  if (static_cast<size_t>(n) * n != table.size())
    throw std::runtime_error("Cayley table is not square");
  g->order = n;
  g->table = std::move(table);
  g->labels = std::move(labels);
  g->name = std::move(name);
  // locate identity
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) != b || g->mul(b, a) != b) { ok = false; break; }
    if (ok) e = a;
  }
  if (e < 0) throw std::runtime_error("no identity element");
  g->identity = e;
  g->inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == e && g->mul(b, a) == e) { g->inv[a] = b; break; }
  g->validate();
  return g;
}

GroupPtr make_named(const std::string& spec) {
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (spec == "Q8") return quaternion8();
  if (spec.size() >= 2 && all_digits(spec.substr(1))) {
    int n = std::atoi(spec.c_str() + 1);
    switch (spec[0]) {
      case 'C': return cyclic(n);
      case 'S': return symmetric(n);
      case 'D': return dihedral(n);
      case 'A': return alternating(n);
      default: break;
    }
  }
  std::ifstream in(spec);
  if (in.good()) return load_group_table(in, spec);
  throw std::invalid_argument("unknown group spec: " + spec);
}

GroupPtr load_group_table(std::istream& in, const std::string& name) {
  std::string word;
  if (!(in >> word) || word != "order") throw std::runtime_error("group table: expected 'order n'");
  int n = 0;
  if (!(in >> n) || n <= 0) throw std::runtime_error("group table: bad order");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (auto& v : table)
    if (!(in >> v)) throw std::runtime_error("group table: truncated table");
  std::vector<std::string> labels;
  if (in >> word) {
    if (word != "labels") throw std::runtime_error("group table: unexpected trailing data");
    labels.resize(n);
    for (auto& l : labels)
      if (!(in >> l)) throw std::runtime_error("group table: truncated labels");
  }
  return make_group(std::move(table), std::move(labels), name);
}

GroupPtr load_group_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open group table file: " + path);
  return load_group_table(in, path);
}

void save_group_table(const FiniteGroup& g, std::ostream& out) {
  out << "order " << g.order << "\n";
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  if (!g.labels.empty()) {
    out << "labels";
    for (auto& l : g.labels) out << " " << l;
    out << "\n";
  }
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order == b.order && a.table == b.table;
}

void GroupHom::validate() const {
  if (!dom || !cod) throw std::runtime_error("hom missing groups");
  if (static_cast<int>(map.size()) != dom->order) throw std::runtime_error("hom map size mismatch");
  if (map[dom->identity] != cod->identity) throw std::runtime_error("hom does not preserve identity");
  for (int a = 0; a < dom->order; ++a)
    for (int b = 0; b < dom->order; ++b)
      if (map[dom->mul(a, b)] != cod->mul(map[a], map[b]))
        throw std::runtime_error("hom fails multiplicativity");
}

void GroupAction::validate() const {
  if (!actor || !target) throw std::runtime_error("action missing groups");
  if (static_cast<int>(act.size()) != actor->order)
    throw std::runtime_error("action size mismatch");
  const int m = target->order;
  for (int g = 0; g < actor->order; ++g) {
    if (static_cast<int>(act[g].size()) != m) throw std::runtime_error("action permutation size mismatch");
    std::vector<char> seen(m, 0);
    for (int s = 0; s < m; ++s) {
      int v = act[g][s];
      if (v < 0 || v >= m || seen[v]) throw std::runtime_error("action is not a permutation");
      seen[v] = 1;
    }
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        if (act[g][target->mul(s, t)] != target->mul(act[g][s], act[g][t]))
          throw std::runtime_error("action by element " + std::to_string(g) + " is not an automorphism");
  }
  for (int s = 0; s < m; ++s)
    if (act[actor->identity][s] != s) throw std::runtime_error("identity must act trivially");
  for (int g = 0; g < actor->order; ++g)
    for (int h = 0; h < actor->order; ++h)
      for (int s = 0; s < m; ++s)
        if (act[actor->mul(g, h)][s] != act[g][act[h][s]])
          throw std::runtime_error("g -> act[g] is not a homomorphism");
}

GroupAction trivial_action(GroupPtr actor, GroupPtr target) {
  GroupAction a;
  a.actor = std::move(actor);
  a.target = std::move(target);
  a.act.assign(a.actor->order, identity_perm(a.target->order));
  a.name = "trivial";
  return a;
}

GroupAction inversion_action(GroupPtr actor, GroupPtr target) {
  if (!target->is_abelian())
    throw std::invalid_argument("inversion action needs an abelian target");
  // actor must be cyclic with even order, elements indexed as generator powers
  if (actor->order % 2 != 0)
    throw std::invalid_argument("inversion action needs an even-order cyclic actor");
  GroupAction a;
  a.actor = actor;
  a.target = target;
  a.act.resize(actor->order);
  std::vector<int> invp(target->order);
  for (int s = 0; s < target->order; ++s) invp[s] = target->inv[s];
  for (int k = 0; k < actor->order; ++k)
    a.act[k] = (k % 2 == 0) ? identity_perm(target->order) : invp;
  a.name = "inversion";
  a.validate();  // also rejects non-cyclic element indexing
  return a;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool Subgroup::is_subgroup() const {
  if (!parent) return false;
  if (!contains(parent->identity)) return false;
  for (int a : members) {
    if (!contains(parent->inv[a])) return false;
    for (int b : members)
      if (!contains(parent->mul(a, b))) return false;
  }
  return true;
}

void Subgroup::validate() const {
  if (!is_subgroup()) throw std::runtime_error("not a subgroup");
}

Subgroup trivial_subgroup(GroupPtr g) {
  int e = g->identity;
  return Subgroup{std::move(g), {e}};
}

Subgroup full_subgroup(GroupPtr g) {
  Subgroup s;
  s.members.resize(g->order);
  std::iota(s.members.begin(), s.members.end(), 0);
  s.parent = std::move(g);
  return s;
}

Subgroup closure(GroupPtr g, const std::vector<int>& generators) {
  std::vector<char> in(g->order, 0);
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  add(g->identity);
  for (int x : generators) add(x);
  for (size_t i = 0; i < work.size(); ++i) {
    add(g->inv[work[i]]);
    for (size_t j = 0; j <= i; ++j) {
      add(g->mul(work[i], work[j]));
      add(g->mul(work[j], work[i]));
    }
  }
  Subgroup s;
  s.parent = std::move(g);
  for (int x = 0; x < s.parent->order; ++x)
    if (in[x]) s.members.push_back(x);
  return s;
}

GroupPtr subgroup_as_group(const Subgroup& s) {
  s.validate();
  const FiniteGroup& G = *s.parent;
  const int n = s.order();
  std::vector<int> pos(G.order, -1);
  for (int i = 0; i < n; ++i) pos[s.members[i]] = i;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = pos[G.mul(s.members[i], s.members[j])];
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i)
    labels[i] = s.members[i] < static_cast<int>(G.labels.size()) ? G.labels[s.members[i]]
                                                                 : std::to_string(s.members[i]);
  return make_group(std::move(table), std::move(labels),
                    (G.name.empty() ? "G" : G.name) + "-sub" + std::to_string(n));
}

int default_gamma_bound() {
  if (const char* env = std::getenv("EQUICAT_MAX_GAMMA")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 48;
}

std::vector<Subgroup> subgroups(GroupPtr g, int bound) {
  if (g->order > bound)
    throw std::runtime_error("subgroup enumeration bound exceeded: order " +
                             std::to_string(g->order) + " > " + std::to_string(bound));
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  std::vector<int> triv = {g->identity};
  found.insert(triv);
  work.push_back(triv);
  for (size_t i = 0; i < work.size(); ++i) {
    const std::vector<int> current = work[i];
    for (int x = 0; x < g->order; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<int> gens = current;
      gens.push_back(x);
      auto cl = closure(g, gens);
      if (found.insert(cl.members).second) work.push_back(cl.members);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  Subgroup n;
  n.parent = s.parent;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int a : s.members)
      if (!s.contains(g.conj(x, a))) { ok = false; break; }
    if (ok) n.members.push_back(x);
  }
  return n;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order, 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < g.order; ++a) {
    if (seen[a]) continue;
    std::set<int> cls;
    for (int x = 0; x < g.order; ++x) cls.insert(g.conj(x, a));
    std::vector<int> v(cls.begin(), cls.end());
    for (int y : v) seen[y] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  auto self = std::make_shared<FiniteGroup>(g);
  std::vector<char> have(g.order, 0);
  have[g.identity] = 1;
  int covered = 1;
  while (covered < g.order) {
    int best = -1, best_gain = 0;
    for (int x = 0; x < g.order; ++x) {
      if (have[x]) continue;
      std::vector<int> trial = gens;
      trial.push_back(x);
      int size = closure(self, trial).order();
      if (size - covered > best_gain) {
        best_gain = size - covered;
        best = x;
      }
    }
    gens.push_back(best);
    auto cl = closure(self, gens);
    std::fill(have.begin(), have.end(), 0);
    for (int m : cl.members) have[m] = 1;
    covered = cl.order();
  }
  return gens;
}

SemidirectProduct semidirect(GroupPtr pi, GroupPtr g, const GroupAction& action) {
  action.validate();
  if (!same_group(*action.actor, *g) || !same_group(*action.target, *pi))
    throw std::invalid_argument("semidirect: action does not match the given groups");
  const int np = pi->order, ng = g->order, n = np * ng;
  std::vector<int> table(static_cast<size_t>(n) * n);
  auto pair = [ng](int s, int gi) { return s * ng + gi; };
  for (int s = 0; s < np; ++s)
    for (int a = 0; a < ng; ++a)
      for (int t = 0; t < np; ++t)
        for (int b = 0; b < ng; ++b)
          table[static_cast<size_t>(pair(s, a)) * n + pair(t, b)] =
              pair(pi->mul(s, action.apply(a, t)), g->mul(a, b));
  std::vector<std::string> labels(n);
  for (int s = 0; s < np; ++s)
    for (int a = 0; a < ng; ++a) {
      std::string sp = s < static_cast<int>(pi->labels.size()) ? pi->labels[s] : std::to_string(s);
      std::string ga = a < static_cast<int>(g->labels.size()) ? g->labels[a] : std::to_string(a);
      labels[pair(s, a)] = "(" + sp + "," + ga + ")";
    }
  std::string nm = (pi->name.empty() ? "Pi" : pi->name) + "x|" + (g->name.empty() ? "G" : g->name);

  SemidirectProduct out;
  out.pi = pi;
  out.g = g;
  out.action = action;
  out.gamma = make_group(std::move(table), std::move(labels), nm);

  out.proj.dom = out.gamma;
  out.proj.cod = g;
  out.proj.map.resize(n);
  for (int e = 0; e < n; ++e) out.proj.map[e] = e % ng;
  out.proj.validate();

  out.incl_pi.dom = pi;
  out.incl_pi.cod = out.gamma;
  out.incl_pi.map.resize(np);
  for (int s = 0; s < np; ++s) out.incl_pi.map[s] = pair(s, g->identity);
  out.incl_pi.validate();

  out.incl_g.dom = g;
  out.incl_g.cod = out.gamma;
  out.incl_g.map.resize(ng);
  for (int a = 0; a < ng; ++a) out.incl_g.map[a] = pair(pi->identity, a);
  out.incl_g.validate();
  return out;
}

std::vector<std::vector<int>> pi_conjugacy_classes(const SemidirectProduct& gamma,
                                                   const std::vector<Subgroup>& candidates) {
  const FiniteGroup& G = *gamma.gamma;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (!candidates[i].parent || !same_group(*candidates[i].parent, G))
      throw std::invalid_argument("candidate is not a subgroup of gamma");
    candidates[i].validate();
    index[candidates[i].members] = static_cast<int>(i);
  }
  std::vector<int> cls(candidates.size(), -1);
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::set<int> members = {static_cast<int>(i)};
    std::vector<int> work = {static_cast<int>(i)};
    cls[i] = id;
    for (size_t w = 0; w < work.size(); ++w) {
      const auto& sub = candidates[work[w]];
      for (int s = 0; s < gamma.pi->order; ++s) {
        int x = gamma.incl_pi(s);
        std::vector<int> conj;
        conj.reserve(sub.members.size());
        for (int m : sub.members) conj.push_back(G.conj(x, m));
        std::sort(conj.begin(), conj.end());
        auto it = index.find(conj);
        if (it == index.end())
          throw std::runtime_error("candidate set not closed under Pi-conjugation");
        if (cls[it->second] < 0) {
          cls[it->second] = id;
          members.insert(it->second);
          work.push_back(it->second);
        }
      }
    }
    classes.emplace_back(members.begin(), members.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return classes;
}

namespace {

// Backtracking enumeration of maps defined on a generating sequence that
// extend to homomorphisms; shared by hom/automorphism/isomorphism search.
struct HomSearch {
  const FiniteGroup& dom;
  const FiniteGroup& cod;
  bool require_bijective = false;
  bool stop_at_first = false;
  std::vector<std::vector<int>> results;  // full maps dom -> cod

  // partial[x] in {-1, cod element}; defined set is always a subgroup.
  bool extend(std::vector<int>& partial, std::vector<int>& defined, int gen, int image) {
    // close under multiplication; returns false on conflict
    if (partial[gen] != -1) return partial[gen] == image;
    const size_t start = defined.size();
    partial[gen] = image;
    defined.push_back(gen);
    for (size_t n = start; n < defined.size(); ++n) {
      const int a = defined[n];
      for (size_t j = 0; j < defined.size(); ++j) {
        const int b = defined[j];
        const int pick[2][2] = {{a, b}, {b, a}};
        for (auto& xy : pick) {
          int prod = dom.mul(xy[0], xy[1]);
          int img = cod.mul(partial[xy[0]], partial[xy[1]]);
          if (partial[prod] == -1) {
            partial[prod] = img;
            defined.push_back(prod);
          } else if (partial[prod] != img) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(const std::vector<int>& partial, const std::vector<int>& defined) {
    if (static_cast<int>(defined.size()) == dom.order) {
      if (require_bijective) {
        std::vector<char> hit(cod.order, 0);
        for (int v : partial)
          if (hit[v]++) return;
      }
      results.push_back(partial);
      return;
    }
    // next undefined element (smallest index): deterministic output order
    int gen = -1;
    std::vector<char> have(dom.order, 0);
    for (int d : defined) have[d] = 1;
    for (int x = 0; x < dom.order; ++x)
      if (!have[x]) { gen = x; break; }
    const int gen_order = dom.element_order(gen);
    for (int image = 0; image < cod.order; ++image) {
      if (gen_order % cod.element_order(image) != 0) continue;
      if (require_bijective && cod.element_order(image) != gen_order) continue;
      std::vector<int> p = partial;
      std::vector<int> d = defined;
      if (extend(p, d, gen, image)) {
        if (require_bijective) {
          std::set<int> imgs;
          bool dup = false;
          for (int dd : d)
            if (!imgs.insert(p[dd]).second) { dup = true; break; }
          if (dup) continue;
        }
        search(p, d);
        if (stop_at_first && !results.empty()) return;
      }
    }
  }

  void run() {
    std::vector<int> partial(dom.order, -1);
    partial[dom.identity] = cod.identity;
    std::vector<int> defined = {dom.identity};
    search(partial, defined);
  }
};

}  // namespace

std::vector<std::vector<int>> all_automorphisms(const FiniteGroup& g) {
  HomSearch hs{g, g};
  hs.require_bijective = true;
  hs.run();
  std::sort(hs.results.begin(), hs.results.end());
  return hs.results;
}

GroupPtr automorphism_group(GroupPtr g, std::vector<std::vector<int>>* perms_out) {
  auto perms = all_automorphisms(*g);
  auto grp = group_from_perms(perms, "Aut(" + (g->name.empty() ? "G" : g->name) + ")", false);
  if (perms_out) {
    // group_from_perms sorts; perms is already sorted the same way
    *perms_out = std::move(perms);
  }
  return grp;
}

std::vector<GroupHom> all_homomorphisms(GroupPtr dom, GroupPtr cod) {
  HomSearch hs{*dom, *cod};
  hs.run();
  std::sort(hs.results.begin(), hs.results.end());
  std::vector<GroupHom> out;
  out.reserve(hs.results.size());
  for (auto& m : hs.results) {
    GroupHom h{dom, cod, std::move(m)};
    h.validate();
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<GroupAction> automorphism_actions(GroupPtr g, GroupPtr pi) {
  std::vector<std::vector<int>> perms;
  GroupPtr aut = automorphism_group(pi, &perms);
  std::vector<GroupAction> out;
  std::set<std::vector<std::vector<int>>> seen;
  for (const GroupHom& h : all_homomorphisms(g, aut)) {
    GroupAction a;
    a.actor = g;
    a.target = pi;
    a.act.resize(g->order);
    for (int x = 0; x < g->order; ++x) a.act[x] = perms[h(x)];
    if (!seen.insert(a.act).second) continue;
    a.validate();
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(),
            [](const GroupAction& a, const GroupAction& b) { return a.act < b.act; });
  for (size_t i = 0; i < out.size(); ++i) {
    bool trivial = true;
    for (auto& p : out[i].act)
      for (size_t s = 0; s < p.size(); ++s)
        if (p[s] != static_cast<int>(s)) { trivial = false; break; }
    out[i].name = trivial ? "trivial" : ("auto:" + std::to_string(i));
  }
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order != b.order) return std::nullopt;
  // cheap invariant: element order profile
  std::map<int, int> pa, pb;
  for (int x = 0; x < a.order; ++x) ++pa[a.element_order(x)];
  for (int x = 0; x < b.order; ++x) ++pb[b.element_order(x)];
  if (pa != pb) return std::nullopt;
  HomSearch hs{a, b};
  hs.require_bijective = true;
  hs.stop_at_first = true;
  hs.run();
  if (hs.results.empty()) return std::nullopt;
  return hs.results.front();
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace equicat
