#include "equicat/crossed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace equicat {

namespace {

void check_context(const Subgroup& H, const GroupPtr& pi, const GroupAction& action) {
  if (!H.parent || !pi) throw std::invalid_argument("crossed hom: missing groups");
  H.validate();
  if (!same_group(*action.actor, *H.parent) || !same_group(*action.target, *pi))
    throw std::invalid_argument("crossed hom: action does not match context");
}

bool same_ctx(const Subgroup& ha, const GroupPtr& pa, const GroupAction& aa,
              const Subgroup& hb, const GroupPtr& pb, const GroupAction& ab) {
  return same_group(*ha.parent, *hb.parent) && ha.members == hb.members &&
         same_group(*pa, *pb) && aa.act == ab.act;
}

// Shared enumeration for crossed and anti-crossed maps. The defined set is
// always the subgroup generated by the elements assigned so far; assigning a
// value to one more element closes the partial map under products, pruning
// on conflict.
struct CrossedSearch {
  const Subgroup& H;
  const FiniteGroup& pi;
  const GroupAction& action;
  bool anti = false;
  std::vector<std::vector<int>> results;

  int twisted(int a, int va, int vb) const {
    // value at a*b given values at a and b
    return anti ? pi.mul(action.apply(a, vb), va) : pi.mul(va, action.apply(a, vb));
  }

  bool extend(std::vector<int>& val, std::vector<int>& defined, int elt, int image) {
    if (val[elt] != -1) return val[elt] == image;
    const size_t start = defined.size();
    val[elt] = image;
    defined.push_back(elt);
    const FiniteGroup& G = *H.parent;
    for (size_t n = start; n < defined.size(); ++n) {
      const int a = defined[n];
      for (size_t j = 0; j < defined.size(); ++j) {
        const int b = defined[j];
        const int pick[2][2] = {{a, b}, {b, a}};
        for (auto& xy : pick) {
          int prod = G.mul(xy[0], xy[1]);
          int img = twisted(xy[0], val[xy[0]], val[xy[1]]);
          if (val[prod] == -1) {
            val[prod] = img;
            defined.push_back(prod);
          } else if (val[prod] != img) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(const std::vector<int>& val, const std::vector<int>& defined) {
    if (defined.size() == H.members.size()) {
      results.push_back(val);
      return;
    }
    int next = -1;
    for (int h : H.members)
      if (val[h] == -1) { next = h; break; }
    for (int image = 0; image < pi.order; ++image) {
      std::vector<int> v = val;
      std::vector<int> d = defined;
      if (extend(v, d, next, image)) search(v, d);
    }
  }

  void run() {
    std::vector<int> val(H.parent->order, -1);
    val[H.parent->identity] = pi.identity;
    search(val, {H.parent->identity});
    std::sort(results.begin(), results.end());
  }
};

}  // namespace

void CrossedHom::validate() const {
  check_context(source, target, action);
  const FiniteGroup& G = *source.parent;
  const FiniteGroup& P = *target;
  for (int g : source.members)
    if (val[g] < 0 || val[g] >= P.order)
      throw std::runtime_error("crossed hom value out of range");
  for (int g : source.members)
    for (int h : source.members)
      if (val[G.mul(g, h)] != P.mul(val[g], action.apply(g, val[h])))
        throw std::runtime_error("crossed hom relation fails");
  if (val[G.identity] != P.identity) throw std::runtime_error("crossed hom at identity");
  for (int g : source.members)
    if (P.inv[val[g]] != action.apply(g, val[G.inv[g]]))
      throw std::runtime_error("crossed hom inverse identity fails");
}

void CrossedAntiHom::validate() const {
  check_context(source, target, action);
  const FiniteGroup& G = *source.parent;
  const FiniteGroup& P = *target;
  for (int g : source.members)
    if (val[g] < 0 || val[g] >= P.order)
      throw std::runtime_error("anti-crossed hom value out of range");
  for (int g : source.members)
    for (int h : source.members)
      if (val[G.mul(g, h)] != P.mul(action.apply(g, val[h]), val[g]))
        throw std::runtime_error("anti-crossed hom relation fails");
}

bool same_context(const CrossedHom& a, const CrossedHom& b) {
  return same_ctx(a.source, a.target, a.action, b.source, b.target, b.action);
}

bool same_context(const CrossedAntiHom& a, const CrossedAntiHom& b) {
  return same_ctx(a.source, a.target, a.action, b.source, b.target, b.action);
}

std::vector<CrossedHom> enumerate_crossed(const Subgroup& H, GroupPtr pi,
                                          const GroupAction& action) {
  check_context(H, pi, action);
  CrossedSearch cs{H, *pi, action};
  cs.run();
  std::vector<CrossedHom> out;
  out.reserve(cs.results.size());
  for (auto& v : cs.results) {
    CrossedHom c{H, pi, action, std::move(v)};
    c.validate();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CrossedAntiHom> enumerate_anticrossed(const Subgroup& H, GroupPtr pi,
                                                  const GroupAction& action) {
  check_context(H, pi, action);
  CrossedSearch cs{H, *pi, action};
  cs.anti = true;
  cs.run();
  std::vector<CrossedAntiHom> out;
  out.reserve(cs.results.size());
  for (auto& v : cs.results) {
    CrossedAntiHom c{H, pi, action, std::move(v)};
    c.validate();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> iso_witnesses(const CrossedHom& alpha, const CrossedHom& beta) {
  if (!same_context(alpha, beta))
    throw std::invalid_argument("iso_witnesses: mismatched contexts");
  const FiniteGroup& P = *alpha.target;
  std::vector<int> out;
  for (int s = 0; s < P.order; ++s) {
    bool ok = true;
    for (int g : alpha.source.members)
      if (P.mul(beta.val[g], alpha.action.apply(g, s)) != P.mul(s, alpha.val[g])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<int> anti_witnesses(const CrossedAntiHom& alpha, const CrossedAntiHom& beta) {
  if (!same_context(alpha, beta))
    throw std::invalid_argument("anti_witnesses: mismatched contexts");
  const FiniteGroup& P = *alpha.target;
  std::vector<int> out;
  for (int s = 0; s < P.order; ++s) {
    bool ok = true;
    for (int g : alpha.source.members)
      if (P.mul(beta.val[g], s) != P.mul(alpha.action.apply(g, s), alpha.val[g])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

Subgroup centralizer(const CrossedHom& alpha) {
  Subgroup s{alpha.target, iso_witnesses(alpha, alpha)};
  s.validate();
  return s;
}

Subgroup anti_centralizer(const CrossedAntiHom& alpha) {
  Subgroup s{alpha.target, anti_witnesses(alpha, alpha)};
  s.validate();
  return s;
}

H1Table h1(GroupPtr g, GroupPtr pi, const GroupAction& action, const Subgroup& H) {
  if (!same_group(*H.parent, *g)) throw std::invalid_argument("h1: H is not a subgroup of G");
  H1Table t;
  t.source = H;
  t.pi = pi;
  t.action = action;
  t.all = enumerate_crossed(H, pi, action);
  const int n = static_cast<int>(t.all.size());
  std::vector<int> cls(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    H1Class c;
    c.rep = i;
    cls[i] = static_cast<int>(t.classes.size());
    c.members.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (cls[j] >= 0) continue;
      if (!iso_witnesses(t.all[i], t.all[j]).empty()) {
        cls[j] = cls[i];
        c.members.push_back(j);
      }
    }
    c.aut = centralizer(t.all[i]);
    t.classes.push_back(std::move(c));
  }
  // basepoint: the class of the trivial hom
  std::vector<int> eps(H.parent->order, -1);
  for (int h : H.members) eps[h] = pi->identity;
  for (int i = 0; i < n; ++i)
    if (t.all[i].val == eps) {
      t.basepoint_class = cls[i];
      break;
    }
  if (t.basepoint_class < 0) throw std::runtime_error("h1: trivial hom missing");
  return t;
}

nlohmann::json H1Table::to_json() const {
  nlohmann::json j;
  j["group"] = source.parent->name;
  j["subgroup"] = source.members;
  j["pi"] = pi->name;
  j["action"] = action.name;
  j["crossed_hom_count"] = all.size();
  j["class_count"] = classes.size();
  nlohmann::json cl = nlohmann::json::array();
  for (size_t i = 0; i < classes.size(); ++i) {
    nlohmann::json c;
    std::vector<int> rep_values;
    for (int h : source.members) rep_values.push_back(all[classes[i].rep].val[h]);
    c["representative"] = rep_values;
    c["size"] = classes[i].members.size();
    c["aut_order"] = classes[i].aut.order();
    c["basepoint"] = (static_cast<int>(i) == basepoint_class);
    cl.push_back(std::move(c));
  }
  j["classes"] = std::move(cl);
  return j;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  if (!detail.empty()) j["detail"] = detail;
  j["stats"] = stats;
  return j;
}

Subgroup lambda_of(const CrossedHom& alpha, const SemidirectProduct& gamma) {
  if (!same_group(*alpha.source.parent, *gamma.g) || !same_group(*alpha.target, *gamma.pi) ||
      alpha.action.act != gamma.action.act)
    throw std::invalid_argument("lambda_of: crossed hom context does not match gamma");
  Subgroup s;
  s.parent = gamma.gamma;
  for (int h : alpha.source.members) s.members.push_back(gamma.pair(alpha.val[h], h));
  std::sort(s.members.begin(), s.members.end());
  s.validate();
  return s;
}

CrossedHom crossed_from_lambda(const Subgroup& lambda, const SemidirectProduct& gamma) {
  if (!same_group(*lambda.parent, *gamma.gamma))
    throw std::invalid_argument("crossed_from_lambda: not a subgroup of gamma");
  lambda.validate();
  CrossedHom c;
  c.target = gamma.pi;
  c.action = gamma.action;
  c.source.parent = gamma.g;
  c.val.assign(gamma.g->order, -1);
  for (int m : lambda.members) {
    int h = gamma.g_of(m), s = gamma.sigma_of(m);
    if (h == gamma.g->identity && s != gamma.pi->identity)
      throw std::invalid_argument("crossed_from_lambda: Lambda meets Pi nontrivially");
    if (c.val[h] != -1)
      throw std::invalid_argument("crossed_from_lambda: Lambda meets Pi nontrivially");
    c.val[h] = s;
    c.source.members.push_back(h);
  }
  std::sort(c.source.members.begin(), c.source.members.end());
  c.validate();
  return c;
}

CrossedAntiHom bar(const CrossedHom& alpha) {
  CrossedAntiHom b;
  b.source = alpha.source;
  b.target = alpha.target;
  b.action = alpha.action;
  b.val.assign(alpha.val.size(), -1);
  const FiniteGroup& G = *alpha.source.parent;
  for (int g : alpha.source.members) b.val[g] = alpha.action.apply(g, alpha.val[G.inv[g]]);
  b.validate();
  return b;
}

CrossedHom unbar(const CrossedAntiHom& alpha) {
  CrossedHom b;
  b.source = alpha.source;
  b.target = alpha.target;
  b.action = alpha.action;
  b.val.assign(alpha.val.size(), -1);
  const FiniteGroup& G = *alpha.source.parent;
  for (int g : alpha.source.members) b.val[g] = alpha.action.apply(g, alpha.val[G.inv[g]]);
  b.validate();
  return b;
}

VerifyReport verify_h1_lambda_bijection(GroupPtr g, GroupPtr pi, const GroupAction& action) {
  VerifyReport r;
  auto gamma = semidirect(pi, g, action);
  auto table = h1(g, pi, action, full_subgroup(g));

  // Subgroup side: Lambda <= Gamma with Lambda ^ Pi = e and proj(Lambda) = G.
  std::vector<Subgroup> lambdas;
  for (auto& s : subgroups(gamma.gamma, std::max(default_gamma_bound(), gamma.gamma->order))) {
    bool meets_pi_trivially = true;
    std::set<int> proj_image;
    for (int m : s.members) {
      int h = gamma.g_of(m);
      proj_image.insert(h);
      if (h == g->identity && m != gamma.gamma->identity) meets_pi_trivially = false;
    }
    if (meets_pi_trivially && static_cast<int>(proj_image.size()) == g->order)
      lambdas.push_back(s);
  }
  auto lambda_classes = pi_conjugacy_classes(gamma, lambdas);

  r.stats["h1_classes"] = table.classes.size();
  r.stats["lambda_subgroups"] = lambdas.size();
  r.stats["lambda_classes"] = lambda_classes.size();

  if (table.all.size() != lambdas.size())
    r.fail("crossed hom count != admissible subgroup count");
  if (table.classes.size() != lambda_classes.size())
    r.fail("H1 class count != Pi-conjugacy class count");

  // Elementwise: alpha -> Lambda_alpha is a bijection hom <-> subgroup, and
  // sigma-conjugation matches witnesses.
  std::map<std::vector<int>, int> lambda_index;
  for (size_t i = 0; i < lambdas.size(); ++i)
    lambda_index[lambdas[i].members] = static_cast<int>(i);
  const FiniteGroup& GA = *gamma.gamma;
  std::vector<int> of_hom(table.all.size(), -1);
  for (size_t i = 0; i < table.all.size(); ++i) {
    auto li = lambda_index.find(lambda_of(table.all[i], gamma).members);
    if (li == lambda_index.end()) {
      r.fail("Lambda_alpha not found among admissible subgroups");
      return r;
    }
    of_hom[i] = li->second;
    // roundtrip
    if (crossed_from_lambda(lambdas[li->second], gamma).val != table.all[i].val)
      r.fail("crossed_from_lambda does not invert lambda_of");
  }
  for (size_t i = 0; i < table.all.size() && r.pass; ++i) {
    for (size_t j = 0; j < table.all.size() && r.pass; ++j) {
      auto wit = iso_witnesses(table.all[i], table.all[j]);
      std::set<int> wset(wit.begin(), wit.end());
      for (int s = 0; s < pi->order; ++s) {
        std::vector<int> conj;
        int x = gamma.incl_pi(s);
        for (int m : lambdas[of_hom[i]].members) conj.push_back(GA.conj(x, m));
        std::sort(conj.begin(), conj.end());
        bool maps = (conj == lambdas[of_hom[j]].members);
        if (maps != (wset.count(s) > 0)) {
          r.fail("sigma-conjugation of Lambda_alpha disagrees with witness relation");
          break;
        }
      }
    }
  }
  return r;
}

VerifyReport verify_crossed_centralizer(const CrossedHom& alpha, const SemidirectProduct& gamma) {
  VerifyReport r;
  auto lam = lambda_of(alpha, gamma);
  auto nrm = normalizer(*gamma.gamma, lam);
  std::vector<int> lhs;  // incl_pi(Pi^alpha)
  for (int s : centralizer(alpha).members) lhs.push_back(gamma.incl_pi(s));
  std::sort(lhs.begin(), lhs.end());
  std::vector<int> rhs;  // incl_pi(Pi) ^ N_Gamma(Lambda_alpha)
  for (int s = 0; s < gamma.pi->order; ++s) {
    int x = gamma.incl_pi(s);
    if (nrm.contains(x)) rhs.push_back(x);
  }
  std::sort(rhs.begin(), rhs.end());
  r.stats["centralizer_order"] = lhs.size();
  r.stats["intersection_order"] = rhs.size();
  if (lhs != rhs) r.fail("Pi^alpha != Pi ^ N_Gamma(Lambda_alpha)");
  return r;
}

std::vector<int> coset_transversal(const Subgroup& H) {
  const FiniteGroup& G = *H.parent;
  std::vector<char> covered(G.order, 0);
  std::vector<int> reps;
  for (int x = 0; x < G.order; ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int h : H.members) covered[G.mul(h, x)] = 1;  // coset H x
  }
  return reps;
}

std::vector<int> fixed_map(const CrossedHom& alpha, const std::vector<int>& reps) {
  const FiniteGroup& G = *alpha.source.parent;
  const FiniteGroup& P = *alpha.target;
  const Subgroup& H = alpha.source;
  // reps must hit each right coset Hg exactly once
  std::vector<int> coset_rep(G.order, -1);
  for (int r : reps)
    for (int h : H.members) {
      int x = G.mul(h, r);
      if (coset_rep[x] != -1) throw std::invalid_argument("fixed_map: reps not a transversal");
      coset_rep[x] = r;
    }
  for (int x = 0; x < G.order; ++x)
    if (coset_rep[x] == -1) throw std::invalid_argument("fixed_map: reps not a transversal");

  std::vector<int> f(G.order);
  for (int x = 0; x < G.order; ++x) {
    int r = coset_rep[x];
    int k = G.mul(x, G.inv[r]);  // x = k r with k in H
    f[x] = P.inv[alpha.val[k]];
  }
  for (int h : H.members)
    for (int x = 0; x < G.order; ++x)
      if (alpha.action.apply(h, f[G.mul(G.inv[h], x)]) != P.mul(f[x], alpha.val[h]))
        throw std::runtime_error("fixed_map: equivariance identity fails");
  return f;
}

}  // namespace equicat
