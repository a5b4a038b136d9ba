#include "equicat/models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace equicat {

GSet FiniteUniverse::as_gset() const {
  GSet s;
  s.group = group;
  s.size = size;
  s.act = act;
  return s;
}

int FiniteUniverse::block_of(int point) const {
  return point_class[point] * copies + point_copy[point];
}

FiniteUniverse build_universe(GroupPtr g, int copies, int bound) {
  if (copies < 1) throw std::invalid_argument("universe needs at least one copy");
  FiniteUniverse u;
  u.group = g;
  u.copies = copies;
  const FiniteGroup& G = *g;

  // subgroup conjugacy class representatives, in subgroup enumeration order
  std::set<std::vector<int>> covered;
  for (const auto& s : subgroups(g)) {
    if (covered.count(s.members)) continue;
    for (int x = 0; x < G.order; ++x) {
      std::vector<int> conj;
      for (int a : s.members) conj.push_back(G.conj(x, a));
      std::sort(conj.begin(), conj.end());
      covered.insert(conj);
    }
    u.class_reps.push_back(s);
  }

  u.size = 0;
  for (size_t c = 0; c < u.class_reps.size(); ++c) {
    const auto& h = u.class_reps[c];
    const int orbit = G.order / h.order();
    for (int k = 0; k < copies; ++k) {
      u.block_start.push_back(u.size);
      for (int i = 0; i < orbit; ++i) {
        u.point_class.push_back(static_cast<int>(c));
        u.point_copy.push_back(k);
      }
      u.size += orbit;
    }
  }
  u.block_start.push_back(u.size);
  if (u.size > bound) throw std::runtime_error("universe bound exceeded");

  // left coset structure per class: coset_of[x] = index of the coset xH
  std::vector<std::vector<int>> coset_of(u.class_reps.size());
  for (size_t c = 0; c < u.class_reps.size(); ++c) {
    const auto& h = u.class_reps[c];
    coset_of[c].assign(G.order, -1);
    int next = 0;
    for (int x = 0; x < G.order; ++x) {
      if (coset_of[c][x] >= 0) continue;
      for (int hh : h.members) coset_of[c][G.mul(x, hh)] = next;
      ++next;
    }
  }
  // points of a block are its cosets in discovery order; reps per coset
  std::vector<std::vector<int>> coset_rep(u.class_reps.size());
  for (size_t c = 0; c < u.class_reps.size(); ++c) {
    const int orbit = G.order / u.class_reps[c].order();
    coset_rep[c].assign(orbit, -1);
    for (int x = G.order - 1; x >= 0; --x) coset_rep[c][coset_of[c][x]] = x;
  }
  u.act.assign(G.order, std::vector<int>(u.size));
  for (int a = 0; a < G.order; ++a)
    for (int p = 0; p < u.size; ++p) {
      int c = u.point_class[p];
      int base = u.block_start[u.block_of(p)];
      int rep = coset_rep[c][p - base];
      u.act[a][p] = base + coset_of[c][G.mul(a, rep)];
    }
  u.as_gset().validate();
  return u;
}

namespace {

std::vector<std::vector<int>> perms_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

int SigmaModel::object_index(const std::vector<int>& tuple) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), tuple);
  if (it == objects.end() || *it != tuple) throw std::runtime_error("sigma model: object not found");
  return static_cast<int>(it - objects.begin());
}

int SigmaModel::gamma_act(int gamma_elt, int obj) const {
  int s = gamma.sigma_of(gamma_elt);
  int a = gamma.g_of(gamma_elt);
  return g_act[a][sigma_act[gamma.pi->inv[s]][obj]];
}

SigmaModel sigma_model(GroupPtr g, int n, const FiniteUniverse& u, long bound) {
  if (n < 0) throw std::invalid_argument("sigma model: n must be nonnegative");
  SigmaModel m;
  m.universe = u;
  m.n = n;
  if (n == 0) {
    m.sigma = make_named("C1");
    m.sigma_perms = {{}};
  } else {
    m.sigma = make_named("S" + std::to_string(n));
    m.sigma_perms = perms_of(n);  // sorted; matches the group element order
  }
  m.gamma = semidirect(m.sigma, g, trivial_action(g, m.sigma));

  // injective tuples in lexicographic order
  std::vector<int> tuple;
  std::vector<char> used(u.size, 0);
  std::function<void(int)> gen = [&](int depth) {
    if (depth == n) {
      m.objects.push_back(tuple);
      if (static_cast<long>(m.objects.size()) > bound)
        throw std::runtime_error("sigma model: object bound exceeded");
      return;
    }
    for (int p = 0; p < u.size; ++p) {
      if (used[p]) continue;
      used[p] = 1;
      tuple.push_back(p);
      gen(depth + 1);
      tuple.pop_back();
      used[p] = 0;
    }
  };
  gen(0);
  if (m.objects.empty()) throw std::runtime_error("sigma model: universe too small for n");

  m.sigma_act.assign(m.sigma->order, std::vector<int>(m.objects.size()));
  for (int s = 0; s < m.sigma->order; ++s)
    for (size_t o = 0; o < m.objects.size(); ++o) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = m.objects[o][m.sigma_perms[s][i]];
      m.sigma_act[s][o] = m.object_index(img);
    }
  m.g_act.assign(g->order, std::vector<int>(m.objects.size()));
  for (int a = 0; a < g->order; ++a)
    for (size_t o = 0; o < m.objects.size(); ++o) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = u.act[a][m.objects[o][i]];
      m.g_act[a][o] = m.object_index(img);
    }
  return m;
}

VerifyReport verify_sigma_action(const SigmaModel& m) {
  VerifyReport r;
  const FiniteGroup& S = *m.sigma;
  const FiniteGroup& G = *m.universe.group;
  const long no = static_cast<long>(m.objects.size());
  // right action: (alpha sigma) tau = alpha (sigma tau)
  for (int s = 0; s < S.order && r.pass; ++s)
    for (int t = 0; t < S.order && r.pass; ++t)
      for (long o = 0; o < no; ++o)
        if (m.sigma_act[t][m.sigma_act[s][o]] != m.sigma_act[S.mul(s, t)][o]) {
          r.fail("sigma model: right action axiom fails");
          break;
        }
  // left action
  for (int a = 0; a < G.order && r.pass; ++a)
    for (int b = 0; b < G.order && r.pass; ++b)
      for (long o = 0; o < no; ++o)
        if (m.g_act[a][m.g_act[b][o]] != m.g_act[G.mul(a, b)][o]) {
          r.fail("sigma model: left action axiom fails");
          break;
        }
  // commutation (the G-action on Sigma_n is trivial)
  for (int a = 0; a < G.order && r.pass; ++a)
    for (int s = 0; s < S.order && r.pass; ++s)
      for (long o = 0; o < no; ++o)
        if (m.g_act[a][m.sigma_act[s][o]] != m.sigma_act[s][m.g_act[a][o]]) {
          r.fail("sigma model: actions do not commute");
          break;
        }
  // packaged semidirect action law
  const long gpairs = static_cast<long>(m.gamma.gamma->order) * m.gamma.gamma->order;
  if (gpairs * no <= 20000000L) {
    for (int e1 = 0; e1 < m.gamma.gamma->order && r.pass; ++e1)
      for (int e2 = 0; e2 < m.gamma.gamma->order && r.pass; ++e2)
        for (long o = 0; o < no; ++o)
          if (m.gamma_act(m.gamma.gamma->mul(e1, e2), static_cast<int>(o)) !=
              m.gamma_act(e1, m.gamma_act(e2, static_cast<int>(o)))) {
            r.fail("sigma model: packaged action law fails");
            break;
          }
    r.stats["packaged_check"] = "full";
  } else {
    r.stats["packaged_check"] = "factorwise";
  }
  r.stats["objects"] = no;
  return r;
}

VerifyReport verify_sigma_freeness(const SigmaModel& m) {
  VerifyReport r;
  for (int s = 0; s < m.sigma->order; ++s) {
    if (s == m.sigma->identity) continue;
    for (size_t o = 0; o < m.objects.size(); ++o)
      if (m.sigma_act[s][o] == static_cast<int>(o)) {
        r.fail("sigma model: nontrivial stabilizer");
        return r;
      }
  }
  r.stats["objects"] = m.objects.size();
  return r;
}

namespace {

struct InducedGSet {
  // points (coset index, fiber element), flattened j * fiber + i
  int cosets = 0, fiber = 0;
  std::vector<int> reps;                 // left coset transversal of H
  std::vector<std::vector<int>> act;     // per G element
};

// G x_H F for an H-action on the fiber F given through act_h (indexed by
// parent elements of H)
InducedGSet induce(const Subgroup& h, int fiber,
                   const std::function<int(int, int)>& act_h) {
  const FiniteGroup& G = *h.parent;
  InducedGSet out;
  out.fiber = fiber;
  std::vector<int> coset_of(G.order, -1);
  for (int x = 0; x < G.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(out.reps.size());
    out.reps.push_back(x);
    for (int hh : h.members) coset_of[G.mul(x, hh)] = id;
  }
  out.cosets = static_cast<int>(out.reps.size());
  out.act.assign(G.order, std::vector<int>(out.cosets * fiber));
  for (int g = 0; g < G.order; ++g)
    for (int j = 0; j < out.cosets; ++j) {
      int x = G.mul(g, out.reps[j]);
      int j2 = coset_of[x];
      int hh = G.mul(G.inv[out.reps[j2]], x);  // x = rep_{j2} h
      for (int i = 0; i < fiber; ++i) out.act[g][j * fiber + i] = j2 * fiber + act_h(hh, i);
    }
  return out;
}

// equivariant placement of the orbits of an induced G-set into fresh
// universe blocks; returns point images or reports the copies required
struct Placement {
  bool ok = false;
  std::vector<int> image;  // induced point -> universe point
  int required_copies = 0;
  std::string detail;
};

Placement place_in_universe(const FiniteUniverse& u, const InducedGSet& ind) {
  Placement out;
  const FiniteGroup& G = *u.group;
  const int npts = ind.cosets * ind.fiber;
  out.image.assign(npts, -1);
  std::vector<int> used(u.class_reps.size(), 0);

  std::vector<char> seen(npts, 0);
  for (int b = 0; b < npts; ++b) {
    if (seen[b]) continue;
    // orbit of b and its stabilizer
    std::vector<int> orbit;
    for (int g = 0; g < G.order; ++g) {
      int p = ind.act[g][b];
      if (!seen[p]) {
        seen[p] = 1;
        orbit.push_back(p);
      }
    }
    Subgroup stab;
    stab.parent = u.group;
    for (int g = 0; g < G.order; ++g)
      if (ind.act[g][b] == b) stab.members.push_back(g);
    // find the conjugacy class of the stabilizer
    int cls = -1;
    for (size_t c = 0; c < u.class_reps.size() && cls < 0; ++c) {
      for (int x = 0; x < G.order; ++x) {
        std::vector<int> conj;
        for (int a : u.class_reps[c].members) conj.push_back(G.conj(x, a));
        std::sort(conj.begin(), conj.end());
        if (conj == stab.members) {
          cls = static_cast<int>(c);
          break;
        }
      }
    }
    if (cls < 0) {
      out.detail = "stabilizer matches no class";
      return out;
    }
    int copy = used[cls]++;
    out.required_copies = std::max(out.required_copies, used[cls]);
    if (copy >= u.copies) continue;  // keep counting requirements
    // q0: the block point with stabilizer exactly stab; the block realizes
    // G/H0 and stab is conjugate to H0, so the scan always succeeds
    int base = u.block_start[cls * u.copies + copy];
    int block_end = u.block_start[cls * u.copies + copy + 1];
    int q0 = -1;
    for (int p = base; p < block_end && q0 < 0; ++p) {
      std::vector<int> pstab;
      for (int g = 0; g < G.order; ++g)
        if (u.act[g][p] == p) pstab.push_back(g);
      if (pstab == stab.members) q0 = p;
    }
    if (q0 < 0) {
      out.detail = "no matching point in universe block";
      return out;
    }
    for (int g = 0; g < G.order; ++g) out.image[ind.act[g][b]] = u.act[g][q0];
  }
  if (out.required_copies > u.copies) {
    out.detail = "universe too small";
    return out;
  }
  for (int p = 0; p < npts; ++p)
    if (out.image[p] < 0) {
      out.detail = "placement incomplete";
      return out;
    }
  // injective and equivariant by construction; check anyway
  std::set<int> distinct(out.image.begin(), out.image.end());
  if (static_cast<int>(distinct.size()) != npts) {
    out.detail = "placement not injective";
    return out;
  }
  for (int g = 0; g < G.order; ++g)
    for (int p = 0; p < npts; ++p)
      if (out.image[ind.act[g][p]] != u.act[g][out.image[p]]) {
        out.detail = "placement not equivariant";
        return out;
      }
  out.ok = true;
  return out;
}

}  // namespace

FixedObjectResult lambda_fixed_injection(const SigmaModel& m, const Subgroup& lambda) {
  FixedObjectResult res;
  auto rho = crossed_from_lambda(lambda, m.gamma);  // rho: H -> Sigma_n
  const Subgroup& h = rho.source;
  auto ind = induce(h, m.n, [&](int hh, int i) { return m.sigma_perms[rho.val[hh]][i]; });
  auto placed = place_in_universe(m.universe, ind);
  res.required_copies = placed.required_copies;
  if (!placed.ok) {
    res.detail = placed.detail;
    return res;
  }
  // alpha(i) = image of (coset of e, i)
  int ecoset = -1;
  for (size_t j = 0; j < ind.reps.size(); ++j)
    if (h.contains(ind.reps[j])) ecoset = static_cast<int>(j);
  res.tuple.resize(m.n);
  for (int i = 0; i < m.n; ++i) res.tuple[i] = placed.image[ecoset * m.n + i];
  int idx = m.object_index(res.tuple);
  for (int hh : h.members) {
    int e = m.gamma.pair(rho.val[hh], hh);
    if (m.gamma_act(e, idx) != idx) {
      res.detail = "constructed object is not fixed";
      return res;
    }
  }
  res.ok = true;
  return res;
}

VerifyReport verify_sigma_fixed_objects(const SigmaModel& m) {
  VerifyReport r;
  int checked = 0, max_copies = 0;
  for (auto& lam : subgroups(m.gamma.gamma, std::max(default_gamma_bound(), m.gamma.gamma->order))) {
    bool meets_sigma = false;
    for (int e : lam.members)
      if (m.gamma.g_of(e) == m.universe.group->identity && e != m.gamma.gamma->identity)
        meets_sigma = true;
    if (meets_sigma) continue;
    ++checked;
    auto res = lambda_fixed_injection(m, lam);
    max_copies = std::max(max_copies, res.required_copies);
    if (!res.ok) {
      r.fail("no fixed object constructed for a Lambda (" + res.detail + ")");
      r.stats["required_copies"] = res.required_copies;
      return r;
    }
    // independent existence check by exhaustive search
    bool found = false;
    for (size_t o = 0; o < m.objects.size() && !found; ++o) {
      bool fixed = true;
      for (int e : lam.members)
        if (m.gamma_act(e, static_cast<int>(o)) != static_cast<int>(o)) {
          fixed = false;
          break;
        }
      found = fixed;
    }
    if (!found) {
      r.fail("search found no fixed object despite the construction");
      return r;
    }
  }
  r.stats["lambdas"] = checked;
  r.stats["max_required_copies"] = max_copies;
  return r;
}

VerifyReport verify_sigma_orbit_description(const SigmaModel& m) {
  VerifyReport r;
  const int n = m.n;
  const long no = static_cast<long>(m.objects.size());
  const FiniteGroup& G = *m.universe.group;
  const FiniteGroup& S = *m.sigma;

  // object orbits are exactly the underlying subsets
  std::map<std::vector<int>, std::vector<int>> by_set;
  for (long o = 0; o < no; ++o) {
    auto sorted = m.objects[o];
    std::sort(sorted.begin(), sorted.end());
    by_set[sorted].push_back(static_cast<int>(o));
  }
  for (auto& [set, members] : by_set) {
    if (static_cast<int>(members.size()) != S.order) {
      r.fail("orbit description: subset fiber is not a full Sigma-orbit");
      return r;
    }
    std::set<int> orbit;
    for (int s = 0; s < S.order; ++s) orbit.insert(m.sigma_act[s][members[0]]);
    if (orbit != std::set<int>(members.begin(), members.end())) {
      r.fail("orbit description: Sigma-orbit differs from the subset fiber");
      return r;
    }
  }
  r.stats["subsets"] = by_set.size();

  // morphism orbits correspond to bijections beta o alpha^{-1} between
  // subsets; the pair (tgt, src) maps to (A, B, w) with
  // w[position of alpha(i) in A] = position of beta(i) in B
  std::vector<std::vector<int>> sets;  // sorted subsets by id
  std::map<std::vector<int>, int> set_id;
  for (auto& [set, members] : by_set) {
    set_id[set] = static_cast<int>(sets.size());
    sets.push_back(set);
  }
  std::vector<int> obj_set(no);  // object -> set id
  std::vector<std::vector<int>> obj_pos(no);
  for (long o = 0; o < no; ++o) {
    auto sorted = m.objects[o];
    std::sort(sorted.begin(), sorted.end());
    obj_set[o] = set_id.at(sorted);
    obj_pos[o].resize(n);
    for (int i = 0; i < n; ++i)
      obj_pos[o][i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), m.objects[o][i]) - sorted.begin());
  }
  auto pair_invariant = [&](int tgt, int src) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[obj_pos[src][i]] = obj_pos[tgt][i];
    return std::make_tuple(obj_set[src], obj_set[tgt], w);
  };
  std::map<std::tuple<int, int, std::vector<int>>, int> inv_id;
  std::vector<int> pair_inv(no * no);
  for (long tgt = 0; tgt < no; ++tgt)
    for (long src = 0; src < no; ++src) {
      auto w = pair_invariant(static_cast<int>(tgt), static_cast<int>(src));
      auto [it, fresh] = inv_id.emplace(w, static_cast<int>(inv_id.size()));
      pair_inv[tgt * no + src] = it->second;
      (void)fresh;
    }
  // invariance under the diagonal action
  for (long tgt = 0; tgt < no && r.pass; ++tgt)
    for (long src = 0; src < no && r.pass; ++src)
      for (int s = 0; s < S.order; ++s)
        if (pair_inv[static_cast<long>(m.sigma_act[s][tgt]) * no + m.sigma_act[s][src]] !=
            pair_inv[tgt * no + src]) {
          r.fail("orbit description: morphism invariant not Sigma-invariant");
          break;
        }
  const long subsets = static_cast<long>(by_set.size());
  long expected = subsets * subsets;
  for (int i = 2; i <= n; ++i) expected *= i;  // n! bijections per subset pair
  if (static_cast<long>(inv_id.size()) != expected)
    r.fail("orbit description: morphism orbit count mismatch");
  r.stats["morphism_orbits"] = inv_id.size();

  // composition: the invariant of the chaotic composite is the composite of
  // the invariants
  std::vector<std::tuple<int, int, std::vector<int>>> inv_list(inv_id.size());
  for (auto& [k, v] : inv_id) inv_list[v] = k;
  for (long c = 0; c < no && r.pass; ++c)
    for (long b = 0; b < no && r.pass; ++b) {
      const auto& [sb2, sc2, w2] = inv_list[pair_inv[c * no + b]];
      for (long a = 0; a < no; ++a) {
        const auto& [sa1, sb1, w1] = inv_list[pair_inv[b * no + a]];
        const auto& [sa3, sc3, w12] = inv_list[pair_inv[c * no + a]];
        bool ok = sa1 == sa3 && sc2 == sc3 && sb1 == sb2;
        for (int i = 0; i < n && ok; ++i) ok = (w2[w1[i]] == w12[i]);
        if (!ok) {
          r.fail("orbit description: composition not preserved");
          break;
        }
      }
    }

  // G-equivariance: g w, defined by (g w)(g a) = g w(a)
  for (long tgt = 0; tgt < no && r.pass; ++tgt)
    for (long src = 0; src < no && r.pass; ++src)
      for (int g = 0; g < G.order; ++g) {
        const auto& [sa_id, sb_id, w] = inv_list[pair_inv[tgt * no + src]];
        const auto& [ga_id, gb_id, gw] =
            inv_list[pair_inv[static_cast<long>(m.g_act[g][tgt]) * no + m.g_act[g][src]]];
        const auto& sa = sets[sa_id];
        const auto& sb = sets[sb_id];
        const auto& ga = sets[ga_id];
        const auto& gb = sets[gb_id];
        for (int pa = 0; pa < n; ++pa) {
          int ga_pt = m.universe.act[g][sa[pa]];
          int gpa = static_cast<int>(std::lower_bound(ga.begin(), ga.end(), ga_pt) - ga.begin());
          int gb_pt = m.universe.act[g][sb[w[pa]]];
          int gpb = static_cast<int>(std::lower_bound(gb.begin(), gb.end(), gb_pt) - gb.begin());
          if (gw[gpa] != gpb) {
            r.fail("orbit description: G-equivariance fails");
            break;
          }
        }
      }
  return r;
}

int GLModel::object_index(const std::vector<int>& obj) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), obj);
  if (it == objects.end() || *it != obj) throw std::runtime_error("gl model: object not found");
  return static_cast<int>(it - objects.begin());
}

std::vector<int> GLModel::act_g(int g, const std::vector<int>& obj) const {
  const int nu = universe.size;
  std::vector<int> out(obj.size());
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < nu; ++a)
      out[i * nu + universe.act[g][a]] = base.twist(g, obj[i * nu + a]);
  return out;
}

std::vector<int> GLModel::act_tau(int tau, const std::vector<int>& obj) const {
  const FiniteRing& R = *base.ring;
  const int nu = universe.size;
  const RMatrix& t = glr.mats[tau];
  std::vector<int> out(obj.size(), R.zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int coeff = t[j * n + i];  // alpha(tau e_i) = sum_j tau_{ji} alpha(e_j)
      if (coeff == R.zero) continue;
      for (int a = 0; a < nu; ++a)
        out[i * nu + a] = R.plus(out[i * nu + a], R.times(coeff, obj[j * nu + a]));
    }
  return out;
}

int GLModel::gamma_act(int gamma_elt, int obj) const {
  int tau = gamma.sigma_of(gamma_elt);
  int g = gamma.g_of(gamma_elt);
  return object_index(act_tau(glr.group->inv[tau], act_g(g, objects[obj])));
}

GLModel gl_model(int n, const GRing& r, const FiniteUniverse& u, long bound) {
  if (!same_group(*r.group, *u.group))
    throw std::invalid_argument("gl model: ring and universe groups differ");
  GLModel m;
  m.universe = u;
  m.n = n;
  m.base = r;
  m.glr = gl(n, r);
  m.gamma = semidirect(m.glr.group, r.group, m.glr.entry_action);

  const FiniteRing& R = *r.ring;
  const int nu = u.size;
  long cells = 1;
  for (int i = 0; i < n * nu; ++i) {
    cells *= R.size;
    if (cells > bound) throw std::runtime_error("gl model: object space too large");
  }
  // columns must be R-linearly independent
  long coeffs = 1;
  for (int i = 0; i < n; ++i) coeffs *= R.size;
  for (long code = 0; code < cells; ++code) {
    std::vector<int> obj(static_cast<size_t>(n) * nu);
    long c = code;
    for (size_t i = 0; i < obj.size(); ++i) {
      obj[i] = static_cast<int>(c % R.size);
      c /= R.size;
    }
    bool mono = true;
    for (long v = 1; v < coeffs && mono; ++v) {
      long vv = v;
      std::vector<int> coeff(n);
      for (int i = 0; i < n; ++i) {
        coeff[i] = static_cast<int>(vv % R.size);
        vv /= R.size;
      }
      bool zero = true;
      for (int a = 0; a < nu && zero; ++a) {
        int s = R.zero;
        for (int i = 0; i < n; ++i) s = R.plus(s, R.times(coeff[i], obj[i * nu + a]));
        zero = (s == R.zero);
      }
      if (zero) mono = false;
    }
    if (mono) m.objects.push_back(std::move(obj));
  }
  std::sort(m.objects.begin(), m.objects.end());
  if (m.objects.empty()) throw std::runtime_error("gl model: no monomorphisms");
  return m;
}

VerifyReport verify_gl_action(const GLModel& m) {
  VerifyReport r;
  const FiniteGroup& G = *m.base.group;
  const FiniteGroup& GL = *m.glr.group;
  const long no = static_cast<long>(m.objects.size());
  for (int t1 = 0; t1 < GL.order && r.pass; ++t1)
    for (int t2 = 0; t2 < GL.order && r.pass; ++t2)
      for (long o = 0; o < no; ++o)
        if (m.act_tau(GL.mul(t1, t2), m.objects[o]) !=
            m.act_tau(t1, m.act_tau(t2, m.objects[o]))) {
          r.fail("gl model: right action axiom fails");
          break;
        }
  for (int a = 0; a < G.order && r.pass; ++a)
    for (int b = 0; b < G.order && r.pass; ++b)
      for (long o = 0; o < no; ++o)
        if (m.act_g(G.mul(a, b), m.objects[o]) != m.act_g(a, m.act_g(b, m.objects[o]))) {
          r.fail("gl model: left action axiom fails");
          break;
        }
  // twisted commutation g(alpha tau) = (g alpha)(g . tau)
  for (int g = 0; g < G.order && r.pass; ++g)
    for (int tau = 0; tau < GL.order && r.pass; ++tau)
      for (long o = 0; o < no; ++o) {
        auto lhs = m.act_g(g, m.act_tau(tau, m.objects[o]));
        auto rhs = m.act_tau(m.glr.entry_action.act[g][tau], m.act_g(g, m.objects[o]));
        if (lhs != rhs) {
          r.fail("gl model: twisted commutation fails");
          break;
        }
      }
  r.stats["objects"] = no;
  return r;
}

VerifyReport verify_gl_freeness(const GLModel& m) {
  VerifyReport r;
  const FiniteGroup& GL = *m.glr.group;
  for (int tau = 0; tau < GL.order; ++tau) {
    if (tau == GL.identity) continue;
    for (auto& obj : m.objects)
      if (m.act_tau(tau, obj) == obj) {
        r.fail("gl model: nontrivial stabilizer");
        return r;
      }
  }
  r.stats["objects"] = m.objects.size();
  return r;
}

FixedObjectResult gl_lambda_fixed(const GLModel& m, const Subgroup& lambda, int embed_bound) {
  FixedObjectResult res;
  auto rho = crossed_from_lambda(lambda, m.gamma);  // rho: H -> GL(n, R)
  const Subgroup& h = rho.source;
  auto mod = module_from_crossed(m.glr, rho);  // over the restricted H-group
  auto emb = embed_in_permutation(mod, embed_bound);
  if (!emb.found) {
    res.detail = "no permutation embedding within the bound";
    return res;
  }
  // induce the H-set up to G; the H-action uses restricted element indices
  std::vector<int> pos(h.parent->order, -1);
  for (int i = 0; i < h.order(); ++i) pos[h.members[i]] = i;
  auto ind = induce(h, emb.gset.size,
                    [&](int hh, int a) { return emb.gset.act[pos[hh]][a]; });
  auto placed = place_in_universe(m.universe, ind);
  res.required_copies = placed.required_copies;
  if (!placed.ok) {
    res.detail = placed.detail;
    return res;
  }
  int ecoset = -1;
  for (size_t j = 0; j < ind.reps.size(); ++j)
    if (h.contains(ind.reps[j])) ecoset = static_cast<int>(j);

  const FiniteRing& R = *m.base.ring;
  const int nu = m.universe.size;
  std::vector<int> obj(static_cast<size_t>(m.n) * nu, R.zero);
  for (int a = 0; a < emb.gset.size; ++a) {
    int pt = placed.image[ecoset * emb.gset.size + a];
    for (int i = 0; i < m.n; ++i) obj[i * nu + pt] = emb.matrix[a * m.n + i];
  }
  int idx;
  try {
    idx = m.object_index(obj);
  } catch (const std::exception&) {
    res.detail = "constructed map is not a monomorphism";
    return res;
  }
  res.tuple = obj;
  for (int hh : h.members) {
    int e = m.gamma.pair(rho.val[hh], hh);
    if (m.gamma_act(e, idx) != idx) {
      res.detail = "constructed object is not fixed";
      return res;
    }
  }
  res.ok = true;
  return res;
}

VerifyReport verify_gl_fixed_objects(const GLModel& m, int embed_bound) {
  VerifyReport r;
  int checked = 0;
  for (auto& lam : subgroups(m.gamma.gamma, std::max(default_gamma_bound(), m.gamma.gamma->order))) {
    bool meets_gl = false;
    for (int e : lam.members)
      if (m.gamma.g_of(e) == m.base.group->identity && e != m.gamma.gamma->identity)
        meets_gl = true;
    if (meets_gl) continue;
    ++checked;
    auto res = gl_lambda_fixed(m, lam, embed_bound);
    if (!res.ok) {
      r.fail("no fixed object constructed for a Lambda (" + res.detail + ")");
      return r;
    }
    bool found = false;
    for (size_t o = 0; o < m.objects.size() && !found; ++o) {
      bool fixed = true;
      for (int e : lam.members)
        if (m.gamma_act(e, static_cast<int>(o)) != static_cast<int>(o)) {
          fixed = false;
          break;
        }
      found = fixed;
    }
    if (!found) {
      r.fail("search found no fixed object despite the construction");
      return r;
    }
  }
  r.stats["lambdas"] = checked;
  return r;
}

VerifyReport verify_gl_orbit_description(const GLModel& m) {
  VerifyReport r;
  const FiniteRing& R = *m.base.ring;
  const FiniteGroup& G = *m.base.group;
  const FiniteGroup& GL = *m.glr.group;
  const int nu = m.universe.size;
  const long no = static_cast<long>(m.objects.size());

  // span of an object: all R-combinations of the columns, as sorted codes
  long coeffs = 1;
  for (int i = 0; i < m.n; ++i) coeffs *= R.size;
  auto vec_code = [&](const std::vector<int>& v) {
    long code = 0, p = 1;
    for (int a = 0; a < nu; ++a) {
      code += v[a] * p;
      p *= R.size;
    }
    return code;
  };
  auto combination = [&](const std::vector<int>& obj, long cidx) {
    std::vector<int> v(nu, R.zero);
    long c = cidx;
    for (int i = 0; i < m.n; ++i) {
      int coeff = static_cast<int>(c % R.size);
      c /= R.size;
      for (int a = 0; a < nu; ++a) v[a] = R.plus(v[a], R.times(coeff, obj[i * nu + a]));
    }
    return v;
  };
  auto span_of = [&](const std::vector<int>& obj) {
    std::vector<long> span;
    for (long cidx = 0; cidx < coeffs; ++cidx) span.push_back(vec_code(combination(obj, cidx)));
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
  };

  std::map<std::vector<long>, std::vector<int>> by_span;
  for (long o = 0; o < no; ++o) by_span[span_of(m.objects[o])].push_back(static_cast<int>(o));
  for (auto& [span, members] : by_span) {
    if (static_cast<int>(members.size()) != GL.order) {
      r.fail("gl orbit: span fiber is not a full GL-orbit");
      return r;
    }
    std::set<int> orbit;
    for (int t = 0; t < GL.order; ++t) orbit.insert(m.object_index(m.act_tau(t, m.objects[members[0]])));
    if (orbit != std::set<int>(members.begin(), members.end())) {
      r.fail("gl orbit: GL-orbit differs from the span fiber");
      return r;
    }
  }
  r.stats["submodules"] = by_span.size();

  // the pair (beta, alpha) induces the span map sum r_i alpha(e_i) ->
  // sum r_i beta(e_i); invariant under the diagonal GL-action
  auto pair_map = [&](int tgt, int src) {
    std::vector<std::pair<long, long>> w;
    for (long cidx = 0; cidx < coeffs; ++cidx)
      w.emplace_back(vec_code(combination(m.objects[src], cidx)),
                     vec_code(combination(m.objects[tgt], cidx)));
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
  };
  std::set<std::vector<std::pair<long, long>>> images;
  for (long tgt = 0; tgt < no && r.pass; ++tgt)
    for (long src = 0; src < no; ++src) {
      auto w = pair_map(static_cast<int>(tgt), static_cast<int>(src));
      images.insert(w);
      for (int t = 0; t < GL.order; ++t) {
        int t_tgt = m.object_index(m.act_tau(t, m.objects[tgt]));
        int t_src = m.object_index(m.act_tau(t, m.objects[src]));
        if (pair_map(t_tgt, t_src) != w) {
          r.fail("gl orbit: morphism invariant not GL-invariant");
          break;
        }
      }
    }
  if (static_cast<long>(images.size()) !=
      static_cast<long>(by_span.size()) * static_cast<long>(by_span.size()) * GL.order)
    r.fail("gl orbit: morphism orbit count mismatch");
  r.stats["morphism_orbits"] = images.size();

  // each image is an R-linear bijection on spans
  for (auto& w : images) {
    std::map<long, long> f(w.begin(), w.end());
    if (f.size() != w.size()) {
      r.fail("gl orbit: span map not single-valued");
      break;
    }
  }

  // composition and G-equivariance
  for (long c = 0; c < no && r.pass; ++c)
    for (long b = 0; b < no && r.pass; ++b)
      for (long a = 0; a < no; ++a) {
        auto w1 = pair_map(static_cast<int>(b), static_cast<int>(a));
        auto w2 = pair_map(static_cast<int>(c), static_cast<int>(b));
        auto w12 = pair_map(static_cast<int>(c), static_cast<int>(a));
        std::map<long, long> f1(w1.begin(), w1.end()), f2(w2.begin(), w2.end());
        for (auto& [x, y] : w12)
          if (f2.at(f1.at(x)) != y) {
            r.fail("gl orbit: composition not preserved");
            break;
          }
        if (!r.pass) break;
      }
  for (long tgt = 0; tgt < no && r.pass; ++tgt)
    for (long src = 0; src < no && r.pass; ++src)
      for (int g = 0; g < G.order; ++g) {
        auto w = pair_map(static_cast<int>(tgt), static_cast<int>(src));
        int gt = m.object_index(m.act_g(g, m.objects[tgt]));
        int gs = m.object_index(m.act_g(g, m.objects[src]));
        auto gw = pair_map(gt, gs);
        std::map<long, long> f(w.begin(), w.end()), gf(gw.begin(), gw.end());
        // (g w)(g x) = g w(x) where g acts on R[U] semilinearly
        auto g_vec = [&](long code) {
          std::vector<int> v(nu);
          long cc = code;
          for (int a = 0; a < nu; ++a) {
            v[a] = static_cast<int>(cc % R.size);
            cc /= R.size;
          }
          std::vector<int> out(nu);
          for (int a = 0; a < nu; ++a) out[m.universe.act[g][a]] = m.base.twist(g, v[a]);
          return vec_code(out);
        };
        for (auto& [x, y] : w)
          if (gf.at(g_vec(x)) != g_vec(y)) {
            r.fail("gl orbit: G-equivariance fails");
            break;
          }
        if (!r.pass) break;
      }
  return r;
}

}  // namespace equicat
