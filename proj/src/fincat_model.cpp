#include "equicat/fincat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace equicat {

int PointedMapGroup::digit(long u, int x) const {
  long p = 1;
  for (int i = 0; i < x; ++i) p *= pi->order;
  return static_cast<int>((u / p) % pi->order);
}

long PointedMapGroup::with_digit(long u, int x, int value) const {
  long p = 1;
  for (int i = 0; i < x; ++i) p *= pi->order;
  long old = (u / p) % pi->order;
  return u + (value - old) * p;
}

long PointedMapGroup::identity_map() const {
  long u = 0, p = 1;
  for (int x = 0; x < x_size; ++x) {
    u += static_cast<long>(pi->identity) * p;
    p *= pi->order;
  }
  return u;
}

long PointedMapGroup::prod(long a, long b) const {
  long out = 0, p = 1;
  for (int x = 0; x < x_size; ++x) {
    out += static_cast<long>(pi->mul(static_cast<int>((a / p) % pi->order),
                                     static_cast<int>((b / p) % pi->order))) *
           p;
    p *= pi->order;
  }
  return out;
}

long PointedMapGroup::inverse(long a) const {
  long out = 0, p = 1;
  for (int x = 0; x < x_size; ++x) {
    out += static_cast<long>(pi->inv[(a / p) % pi->order]) * p;
    p *= pi->order;
  }
  return out;
}

long PointedMapGroup::normalize(long u) const {
  int s = pi->inv[sigma0(u)];
  long out = 0, p = 1;
  for (int x = 0; x < x_size; ++x) {
    out += static_cast<long>(pi->mul(static_cast<int>((u / p) % pi->order), s)) * p;
    p *= pi->order;
  }
  return out;
}

std::vector<long> PointedMapGroup::all_o() const {
  std::vector<long> out;
  out.reserve(u_size / pi->order);
  for (long u = 0; u < u_size; ++u)
    if (in_o(u)) out.push_back(u);
  return out;
}

std::vector<long> PointedMapGroup::all_u() const {
  std::vector<long> out(u_size);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

PointedMapGroup pointed_maps(int x_size, GroupPtr pi, long bound) {
  PointedMapGroup u;
  u.pi = std::move(pi);
  u.x_size = x_size;
  u.x0 = 0;
  long size = 1;
  for (int x = 0; x < x_size; ++x) {
    size *= u.pi->order;
    if (size > bound) throw std::runtime_error("map group bound exceeded");
  }
  u.u_size = size;
  return u;
}

int ExplicitModel::object_index(long alpha) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), alpha);
  if (it == objects.end() || *it != alpha)
    throw std::runtime_error("explicit model: object not found");
  return static_cast<int>(it - objects.begin());
}

int ExplicitModel::morphism_index(long m, long alpha) const {
  auto key = std::make_pair(m, alpha);
  auto it = std::lower_bound(morphisms.begin(), morphisms.end(), key);
  if (it == morphisms.end() || *it != key)
    throw std::runtime_error("explicit model: morphism not found");
  return static_cast<int>(it - morphisms.begin());
}

ExplicitModel explicit_model(int x_size, GroupPtr pi, long bound) {
  ExplicitModel em;
  em.u = pointed_maps(x_size, pi, bound);
  em.objects = em.u.all_o();
  const long n_obj = static_cast<long>(em.objects.size());
  const long n_mor = em.u.u_size * n_obj;
  if (n_mor > bound) throw std::runtime_error("explicit model bound exceeded");
  em.morphisms.reserve(n_mor);
  for (long m = 0; m < em.u.u_size; ++m)
    for (long a : em.objects) em.morphisms.emplace_back(m, a);
  std::sort(em.morphisms.begin(), em.morphisms.end());

  if (n_mor <= 3000) {
    FinCat c;
    c.n_obj = static_cast<int>(n_obj);
    c.src.resize(n_mor);
    c.tgt.resize(n_mor);
    for (long i = 0; i < n_mor; ++i) {
      c.src[i] = em.object_index(em.morphisms[i].second);
      c.tgt[i] = em.object_index(em.u.normalize(em.morphisms[i].first));
    }
    c.idm.resize(n_obj);
    for (long i = 0; i < n_obj; ++i) c.idm[i] = em.morphism_index(em.objects[i], em.objects[i]);
    c.comp.assign(static_cast<size_t>(n_mor) * n_mor, -1);
    for (long f = 0; f < n_mor; ++f)
      for (long g = 0; g < n_mor; ++g) {
        auto [m2, b] = em.morphisms[f];
        auto [m1, a] = em.morphisms[g];
        if (b != em.u.normalize(m1)) continue;
        // C((m2, b), (m1, a)) = (m2 * m1(x0), a)
        int s1 = em.u.sigma0(m1);
        long cm = 0, p = 1;
        for (int x = 0; x < em.u.x_size; ++x) {
          cm += static_cast<long>(pi->mul(em.u.digit(m2, x), s1)) * p;
          p *= pi->order;
        }
        c.comp[static_cast<size_t>(f) * n_mor + g] = em.morphism_index(cm, a);
      }
    em.cat = make_fincat(std::move(c));
  }
  return em;
}

VerifyReport verify_explicit_model(int x_size, GroupPtr pi) {
  VerifyReport r;
  auto em = explicit_model(x_size, pi);
  if (!em.cat) {
    r.fail("explicit model too large to materialize for comparison");
    return r;
  }
  auto fc = functor_category(chaotic(x_size), one_object(pi));
  const int n = x_size;

  // object bijection: functor F <-> alpha with alpha(y) = F(y, x0)
  r.stats["object_count"] = em.objects.size();
  double expect = std::pow(static_cast<double>(pi->order), std::max(0, x_size - 1));
  if (static_cast<double>(em.objects.size()) != expect)
    r.fail("object count is not |Pi|^(|X|-1)");
  if (fc.functors.size() != em.objects.size()) {
    r.fail("object counts differ");
    return r;
  }
  std::vector<int> obj_map(fc.functors.size());  // functor index -> model object index
  std::vector<char> hit(em.objects.size(), 0);
  for (size_t i = 0; i < fc.functors.size(); ++i) {
    long alpha = 0, p = 1;
    for (int y = 0; y < n; ++y) {
      alpha += static_cast<long>(fc.functors[i].mor[y * n + em.u.x0]) * p;
      p *= pi->order;
    }
    obj_map[i] = em.object_index(alpha);
    if (hit[obj_map[i]]) r.fail("object map not injective");
    hit[obj_map[i]] = 1;
  }

  // morphism bijection: (F_a, F_b, eta) <-> (m, a) with m(x) = eta_x a(x)
  if (fc.cat->n_mor() != static_cast<int>(em.morphisms.size())) {
    r.fail("morphism counts differ");
    return r;
  }
  std::vector<int> mor_map(fc.cat->n_mor());
  std::vector<char> mhit(em.morphisms.size(), 0);
  for (int m = 0; m < fc.cat->n_mor(); ++m) {
    long a = em.objects[obj_map[fc.cat->src[m]]];
    long mm = 0, p = 1;
    for (int x = 0; x < n; ++x) {
      mm += static_cast<long>(pi->mul(fc.components[m][x], em.u.digit(a, x))) * p;
      p *= pi->order;
    }
    mor_map[m] = em.morphism_index(mm, a);
    if (mhit[mor_map[m]]) r.fail("morphism map not injective");
    mhit[mor_map[m]] = 1;
    // endpoints
    if (em.cat->src[mor_map[m]] != obj_map[fc.cat->src[m]] ||
        em.cat->tgt[mor_map[m]] != obj_map[fc.cat->tgt[m]])
      r.fail("morphism map breaks endpoints");
  }
  // identities and composition
  for (int i = 0; i < fc.cat->n_obj; ++i)
    if (mor_map[fc.cat->idm[i]] != em.cat->idm[obj_map[i]]) r.fail("identities differ");
  for (int f = 0; f < fc.cat->n_mor(); ++f)
    for (int g = 0; g < fc.cat->n_mor(); ++g) {
      int c = fc.cat->compose(f, g);
      if (c >= 0 && mor_map[c] != em.cat->compose(mor_map[f], mor_map[g]))
        r.fail("composition differs");
    }
  r.stats["morphism_count"] = em.morphisms.size();
  return r;
}

VerifyReport verify_classifying_diagram(int x_size, GroupPtr pi) {
  VerifyReport r;
  auto u = pointed_maps(x_size, pi, 2000);
  const long U = u.u_size;
  const int P = pi->order;

  // dense tables over map codes
  std::vector<int> ptab(static_cast<size_t>(U) * U);
  std::vector<long> itab(U), ntab(U);
  std::vector<int> s0tab(U);
  for (long a = 0; a < U; ++a) {
    itab[a] = u.inverse(a);
    ntab[a] = u.normalize(a);
    s0tab[a] = u.sigma0(a);
    for (long b = 0; b < U; ++b) ptab[static_cast<size_t>(a) * U + b] = static_cast<int>(u.prod(a, b));
  }
  auto mul = [&](long a, long b) { return static_cast<long>(ptab[static_cast<size_t>(a) * U + b]); };
  std::vector<long> consts(P);  // constant maps
  for (int s = 0; s < P; ++s) {
    long c = 0, p = 1;
    for (int x = 0; x < x_size; ++x) {
      c += static_cast<long>(s) * p;
      p *= P;
    }
    consts[s] = c;
  }
  const long e = u.identity_map();

  r.stats["u_size"] = U;
  r.stats["o_size"] = U / P;

  // (1) mu: translation category of U on itself -> chaotic on U;
  // morphism (h, a) -> pair (h a, a), inverse pair (b, a) -> (b a^{-1}, a).
  for (long h = 0; h < U; ++h)
    for (long a = 0; a < U; ++a) {
      long b = mul(h, a);
      if (mul(b, itab[a]) != h) {
        r.fail("mu: inverse fails");
        break;
      }
    }
  if (mul(e, e) != e) r.fail("mu: identity");
  // functoriality of mu over all composable pairs
  for (long h2 = 0; h2 < U && r.pass; ++h2)
    for (long h1 = 0; h1 < U; ++h1) {
      long h21 = mul(h2, h1);
      bool ok = true;
      for (long a = 0; a < U; ++a) {
        // translation composite (h2, h1 a) o (h1, a) = (h2 h1, a);
        // chaotic composite (h2 h1 a, h1 a) o (h1 a, a) = (h2 h1 a, a)
        if (mul(h21, a) != mul(h2, mul(h1, a))) { ok = false; break; }
      }
      if (!ok) {
        r.fail("mu: does not respect composition");
        break;
      }
    }

  // (2) q(mu(h, a)) depends only on (h, normalize(a)):
  // q sends pair (v, w) to model morphism (v * w(x0)^{-1}, normalize(w))
  auto q_mor_m = [&](long v, long w) { return mul(v, consts[pi->inv[s0tab[w]]]); };
  for (long h = 0; h < U && r.pass; ++h)
    for (long a = 0; a < U; ++a) {
      long v = mul(h, a);
      if (q_mor_m(v, a) != mul(h, ntab[a]) || ntab[a] != ntab[ntab[a]]) {
        r.fail("q o mu does not factor through the orbit map");
        break;
      }
    }

  // (3) xi o nu: <U, O> -> model, (h, alpha) -> (h * alpha, alpha);
  // bijectivity and functoriality
  {
    std::vector<char> seen(static_cast<size_t>(U) * (U / P), 0);
    std::vector<long> olist = u.all_o();
    std::unordered_map<long, int> opos;
    for (size_t i = 0; i < olist.size(); ++i) opos[olist[i]] = static_cast<int>(i);
    for (long h = 0; h < U && r.pass; ++h)
      for (long alpha : olist) {
        long m = mul(h, alpha);
        size_t key = static_cast<size_t>(m) * (U / P) + opos[alpha];
        if (seen[key]) {
          r.fail("xi o nu not injective");
          break;
        }
        seen[key] = 1;
      }
    bool all = r.pass;
    for (char c : seen)
      if (!c) all = false;
    if (!all) r.fail("xi o nu not surjective onto the model morphisms");

    // identities: (e, alpha) -> (alpha, alpha) = I(alpha)
    for (long alpha : olist)
      if (mul(e, alpha) != alpha) r.fail("xi o nu breaks identities");

    // composition: <U,O> composite (h2, h1 . alpha) o (h1, alpha) = (h2 h1, alpha)
    // vs model C((h2 a2, a2), (h1 a1, a1)) = (h2 a2 * sigma0(h1 a1), a1)
    for (long h2 = 0; h2 < U && r.pass; ++h2)
      for (long h1 = 0; h1 < U && r.pass; ++h1)
        for (long a1 : olist) {
          long m1 = mul(h1, a1);
          long a2 = ntab[m1];
          long m2 = mul(h2, a2);
          long lhs = mul(m2, consts[s0tab[m1]]);
          long rhs = mul(mul(h2, h1), a1);
          if (lhs != rhs) {
            r.fail("xi o nu breaks composition");
            break;
          }
        }
  }

  // (4) fibers of q are exactly the right Pi-orbits
  for (long v = 0; v < U && r.pass; ++v)
    for (int s = 0; s < P; ++s) {
      if (ntab[mul(v, consts[s])] != ntab[v]) {
        r.fail("orbit map not Pi-invariant");
        break;
      }
    }
  {
    std::set<long> norms;
    for (long v = 0; v < U; ++v) norms.insert(ntab[v]);
    if (static_cast<long>(norms.size()) != U / P) r.fail("object fibers are not Pi-orbits");
    // morphism fibers: q(v s, w s) == q(v, w), and image count = |U|^2/|Pi|
    std::set<std::pair<long, long>> images;
    for (long v = 0; v < U; ++v)
      for (long w = 0; w < U; ++w) {
        images.insert({q_mor_m(v, w), ntab[w]});
        for (int s = 0; s < P; ++s) {
          long vs = mul(v, consts[s]), ws = mul(w, consts[s]);
          if (q_mor_m(vs, ws) != q_mor_m(v, w) || ntab[ws] != ntab[w]) {
            r.fail("morphism fibers are not Pi-orbits");
            break;
          }
        }
      }
    if (static_cast<long>(images.size()) != U * U / P)
      r.fail("morphism image count wrong");
  }

  // (5) model category axioms, uniform in the object coordinate:
  // associativity (m3 * s(m2)) * s(m1) = m3 * s(m2 * s(m1)) and units
  for (long m3 = 0; m3 < U && r.pass; ++m3)
    for (long m2 = 0; m2 < U && r.pass; ++m2)
      for (long m1 = 0; m1 < U; ++m1) {
        long lhs = mul(mul(m3, consts[s0tab[m2]]), consts[s0tab[m1]]);
        long rhs = mul(m3, consts[s0tab[mul(m2, consts[s0tab[m1]])]]);
        if (lhs != rhs) {
          r.fail("model composition not associative");
          break;
        }
      }
  for (long m = 0; m < U; ++m) {
    // left unit: C((b, b), (m, a)) = (b sigma0(m), a) must equal (m, a)
    long b = ntab[m];
    if (mul(b, consts[s0tab[m]]) != m) r.fail("model left unit fails");
    // right unit: C((m, b), (a, a)) = (m sigma0(a), a) = (m, a) since a in O
    if (mul(m, consts[pi->identity]) != m) r.fail("model right unit fails");
  }
  double expect_obj = std::pow(static_cast<double>(P), std::max(0, x_size - 1));
  if (static_cast<double>(U / P) != expect_obj) r.fail("object count not |Pi|^(|X|-1)");
  return r;
}

GammaActionModel gamma_action(GroupPtr g, GroupPtr pi, const GroupAction& action, long bound) {
  action.validate();
  if (!same_group(*action.actor, *g) || !same_group(*action.target, *pi))
    throw std::invalid_argument("gamma action: mismatched action");
  GammaActionModel m;
  m.gamma = semidirect(pi, g, action);
  m.u = pointed_maps(g->order, pi, bound);
  if (m.u.u_size > bound) throw std::runtime_error("gamma action: bound exceeded");
  const long U = m.u.u_size;
  m.object_codes = m.u.all_u();
  m.cat = chaotic(static_cast<int>(U));

  m.act.group = m.gamma.gamma;
  m.act.cat = m.cat;
  const int n = static_cast<int>(U);
  m.act.on_obj.resize(m.gamma.gamma->order);
  m.act.on_mor.resize(m.gamma.gamma->order);
  for (int e = 0; e < m.gamma.gamma->order; ++e) {
    int sigma = m.gamma.sigma_of(e);
    int a = m.gamma.g_of(e);
    auto& po = m.act.on_obj[e];
    po.resize(U);
    for (long code = 0; code < U; ++code) {
      // ((sigma, a) u)(x) = (a . u(a^{-1} x)) sigma^{-1}
      long out = 0, p = 1;
      for (int x = 0; x < g->order; ++x) {
        int d = m.u.digit(code, g->mul(g->inv[a], x));
        out += static_cast<long>(pi->mul(action.apply(a, d), pi->inv[sigma])) * p;
        p *= pi->order;
      }
      po[code] = static_cast<int>(out);
    }
    auto& pm = m.act.on_mor[e];
    pm.resize(static_cast<size_t>(n) * n);
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s)
        pm[static_cast<size_t>(t) * n + s] = po[t] * n + po[s];
  }
  m.act.validate();
  return m;
}

VerifyReport verify_gamma_action(const GammaActionModel& m) {
  VerifyReport r;
  const GroupPtr& g = m.gamma.g;
  const GroupPtr& pi = m.gamma.pi;
  // twisted commutation on the object set: a (u sigma) = (a u)(a . sigma)
  for (int a = 0; a < g->order && r.pass; ++a)
    for (int sigma = 0; sigma < pi->order && r.pass; ++sigma)
      for (long code = 0; code < m.u.u_size; ++code) {
        int left_elt = m.gamma.pair(pi->identity, a);
        int right_elt = m.gamma.pair(pi->inv[sigma], g->identity);  // u sigma = (sigma^{-1},e) u
        long us = m.act.on_obj[right_elt][code];
        long lhs = m.act.on_obj[left_elt][us];
        long au = m.act.on_obj[left_elt][code];
        int asigma = m.gamma.action.apply(a, sigma);
        long rhs = m.act.on_obj[m.gamma.pair(pi->inv[asigma], g->identity)][au];
        if (lhs != rhs) {
          r.fail("twisted commutation fails");
          break;
        }
      }
  r.stats["u_size"] = m.u.u_size;
  return r;
}

namespace {

struct CosetData {
  std::vector<int> reps;    // x_0 = e first
  std::vector<int> cos_of;  // G element -> coset position
  std::vector<int> h_of;    // G element -> h with x = h * rep
};

CosetData coset_data(const Subgroup& h) {
  const FiniteGroup& G = *h.parent;
  CosetData cd;
  auto reps = coset_transversal(h);
  // force the identity as the representative of H itself
  for (auto& rp : reps)
    if (h.contains(rp)) rp = G.identity;
  std::sort(reps.begin(), reps.end());
  auto it = std::find(reps.begin(), reps.end(), G.identity);
  std::rotate(reps.begin(), it, it + 1);
  cd.reps = reps;
  cd.cos_of.assign(G.order, -1);
  cd.h_of.assign(G.order, -1);
  for (size_t j = 0; j < reps.size(); ++j)
    for (int hh : h.members) {
      int x = G.mul(hh, reps[j]);
      cd.cos_of[x] = static_cast<int>(j);
      cd.h_of[x] = hh;
    }
  return cd;
}

}  // namespace

FixedDecomposition fixed_decomposition(GroupPtr g, GroupPtr pi, const GroupAction& action,
                                       const Subgroup& h, long bound) {
  if (!same_group(*h.parent, *g))
    throw std::invalid_argument("fixed decomposition: H not a subgroup of G");
  action.validate();
  FixedDecomposition fd;
  fd.h = h;
  fd.pi = pi;
  fd.action = action;
  const FiniteGroup& G = *g;
  const FiniteGroup& P = *pi;
  auto u = pointed_maps(G.order, pi, bound * static_cast<long>(P.order));

  auto cd = coset_data(h);
  const int t = static_cast<int>(cd.reps.size());

  // objects: alpha(h x_j) = (h . v_j) abar(h) for an anti-crossed abar on H
  // and free values v_j (v_0 = e)
  auto antis = enumerate_anticrossed(h, pi, action);
  long free_count = 1;
  for (int j = 1; j < t; ++j) {
    free_count *= P.order;
    if (free_count * static_cast<long>(antis.size()) > bound)
      throw std::runtime_error("fixed decomposition: bound exceeded");
  }

  std::vector<long> codes;
  codes.reserve(antis.size() * free_count);
  std::vector<long> pow(G.order + 1);
  pow[0] = 1;
  for (int x = 0; x < G.order; ++x) pow[x + 1] = pow[x] * P.order;
  for (const auto& abar : antis) {
    for (long free = 0; free < free_count; ++free) {
      std::vector<int> v(t, P.identity);
      long f = free;
      for (int j = 1; j < t; ++j) {
        v[j] = static_cast<int>(f % P.order);
        f /= P.order;
      }
      long code = 0;
      for (int x = 0; x < G.order; ++x) {
        int j = cd.cos_of[x], hh = cd.h_of[x];
        code += pow[x] * P.mul(action.apply(hh, v[j]), abar.val[hh]);
      }
      codes.push_back(code);
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  if (codes.size() != antis.size() * static_cast<size_t>(free_count))
    throw std::runtime_error("fixed decomposition: parameterization not injective");
  fd.n_objects = static_cast<long>(codes.size());

  // each object must be a genuine fixed point of the conjugation H-action
  auto digit = [&](long code, int x) { return static_cast<int>((code / pow[x]) % P.order); };
  for (long code : codes) {
    if (digit(code, G.identity) != P.identity)
      throw std::runtime_error("fixed decomposition: object not based");
    for (int hh : h.members) {
      int ai = P.inv[digit(code, G.inv[hh])];
      for (int x = 0; x < G.order; ++x) {
        int lhs = P.mul(action.apply(hh, digit(code, G.mul(G.inv[hh], x))), action.apply(hh, ai));
        if (lhs != digit(code, x))
          throw std::runtime_error("fixed decomposition: object not H-fixed");
      }
    }
  }

  std::unordered_map<long, int> index;
  index.reserve(codes.size() * 2);
  for (size_t i = 0; i < codes.size(); ++i) index[codes[i]] = static_cast<int>(i);

  // connect by the generating fixed transformations: eta determined by its
  // values on coset representatives, eta(h x_j) = h . eta(x_j); the target of
  // (eta, alpha) is beta(x) = eta(x) alpha(x) eta(e)^{-1}
  std::vector<int> parent(codes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };
  auto apply_eta = [&](long code, const std::vector<int>& base) {
    int sig_inv = P.inv[base[0]];
    long out = 0;
    for (int x = 0; x < G.order; ++x) {
      int eta_x = action.apply(cd.h_of[x], base[cd.cos_of[x]]);
      out += pow[x] * P.mul(P.mul(eta_x, digit(code, x)), sig_inv);
    }
    return out;
  };
  for (size_t i = 0; i < codes.size(); ++i) {
    std::vector<int> base(t, P.identity);
    for (int s = 0; s < P.order; ++s) {  // sigma-translation edges
      base[0] = s;
      long target = apply_eta(codes[i], base);
      auto it = index.find(target);
      if (it == index.end())
        throw std::runtime_error("fixed decomposition: edge leaves the object set");
      unite(static_cast<int>(i), it->second);
    }
    base[0] = P.identity;
    for (int j = 1; j < t; ++j) {  // single-coset adjustment edges
      for (int s = 0; s < P.order; ++s) {
        base[j] = s;
        long target = apply_eta(codes[i], base);
        auto it = index.find(target);
        if (it == index.end())
          throw std::runtime_error("fixed decomposition: edge leaves the object set");
        unite(static_cast<int>(i), it->second);
      }
      base[j] = P.identity;
    }
  }

  std::map<int, long> comp_size;
  std::map<int, long> comp_min;
  for (size_t i = 0; i < codes.size(); ++i) {
    int rootv = find(static_cast<int>(i));
    comp_size[rootv]++;
    auto it = comp_min.find(rootv);
    if (it == comp_min.end() || codes[i] < it->second) comp_min[rootv] = codes[i];
  }
  long eps_code = u.identity_map();
  fd.epsilon_component = -1;
  int ci = 0;
  for (auto& [rootv, mn] : comp_min) {
    fd.canonical_objects.push_back(mn);
    fd.component_sizes.push_back(comp_size[rootv]);
    if (find(index.at(eps_code)) == rootv) fd.epsilon_component = ci;
    ++ci;
  }

  // restriction to H of each canonical object, and vertex group by scan:
  // sigma such that x -> alpha(x) sigma alpha(x)^{-1} is H-equivariant
  for (long code : fd.canonical_objects) {
    CrossedAntiHom abar;
    abar.source = h;
    abar.target = pi;
    abar.action = action;
    abar.val.assign(G.order, -1);
    for (int hh : h.members) abar.val[hh] = digit(code, hh);
    abar.validate();
    fd.restrictions.push_back(std::move(abar));

    std::vector<int> vg;
    for (int s = 0; s < P.order; ++s) {
      bool ok = true;
      for (int hh : h.members) {
        for (int x = 0; x < G.order && ok; ++x) {
          int eta_x = P.mul(P.mul(digit(code, x), s), P.inv[digit(code, x)]);
          int xhx = G.mul(hh, x);
          int eta_hx = P.mul(P.mul(digit(code, xhx), s), P.inv[digit(code, xhx)]);
          if (eta_hx != action.apply(hh, eta_x)) ok = false;
        }
        if (!ok) break;
      }
      if (ok) vg.push_back(s);
    }
    fd.vertex_groups.push_back(std::move(vg));
  }
  return fd;
}

nlohmann::json FixedDecomposition::to_json() const {
  nlohmann::json j;
  j["subgroup"] = h.members;
  j["object_count"] = n_objects;
  j["component_count"] = canonical_objects.size();
  nlohmann::json comps = nlohmann::json::array();
  for (size_t i = 0; i < canonical_objects.size(); ++i) {
    nlohmann::json c;
    std::vector<int> restr;
    for (int hh : h.members) restr.push_back(restrictions[i].val[hh]);
    c["restriction"] = restr;
    c["size"] = component_sizes[i];
    c["vertex_group_order"] = vertex_groups[i].size();
    c["epsilon"] = (static_cast<int>(i) == epsilon_component);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j;
}

VerifyReport verify_fixed_decomposition(GroupPtr g, GroupPtr pi, const GroupAction& action,
                                        const Subgroup& h) {
  VerifyReport r;
  auto fd = fixed_decomposition(g, pi, action, h);
  auto table = h1(g, pi, action, h);
  r.stats["components"] = fd.canonical_objects.size();
  r.stats["h1_classes"] = table.classes.size();
  r.stats["objects"] = fd.n_objects;
  if (fd.canonical_objects.size() != table.classes.size()) {
    r.fail("component count != H1 class count");
    return r;
  }
  std::vector<char> matched(table.classes.size(), 0);
  for (size_t j = 0; j < fd.canonical_objects.size(); ++j) {
    CrossedHom rho = unbar(fd.restrictions[j]);
    // locate rho among the enumerated crossed homs, then its class
    int hom_idx = -1;
    for (size_t i = 0; i < table.all.size(); ++i)
      if (table.all[i].val == rho.val) {
        hom_idx = static_cast<int>(i);
        break;
      }
    if (hom_idx < 0) {
      r.fail("component restriction is not a crossed hom of the table");
      return r;
    }
    int cls = -1;
    for (size_t c = 0; c < table.classes.size(); ++c)
      for (int m : table.classes[c].members)
        if (m == hom_idx) cls = static_cast<int>(c);
    if (cls < 0 || matched[cls]) {
      r.fail("components do not biject with H1 classes");
      return r;
    }
    matched[cls] = 1;
    // vertex group = sigma0 Aut(rep) sigma0^{-1} for a witness sigma0: rep -> rho
    auto wits = iso_witnesses(table.all[table.classes[cls].rep], rho);
    if (wits.empty()) {
      r.fail("no witness from class representative to component restriction");
      return r;
    }
    int s0 = wits.front();
    std::vector<int> conj;
    for (int a : table.classes[cls].aut.members) conj.push_back(pi->mul(pi->mul(s0, a), pi->inv[s0]));
    std::sort(conj.begin(), conj.end());
    if (conj != fd.vertex_groups[j]) {
      r.fail("vertex group is not the conjugated centralizer");
      return r;
    }
  }
  return r;
}

VerifyReport verify_fixed_point_inclusion(GroupPtr g, GroupPtr pi, const GroupAction& action) {
  VerifyReport r;
  auto full = full_subgroup(g);
  auto fd = fixed_decomposition(g, pi, action, full);
  auto table = h1(g, pi, action, full);
  // Pi^G
  std::vector<int> fixed;
  for (int s = 0; s < pi->order; ++s) {
    bool ok = true;
    for (int a = 0; a < g->order; ++a)
      if (action.apply(a, s) != s) { ok = false; break; }
    if (ok) fixed.push_back(s);
  }
  if (fd.epsilon_component < 0) {
    r.fail("no component contains the trivial map");
    return r;
  }
  // the inclusion is always fully faithful onto the basepoint vertex group
  if (fd.vertex_groups[fd.epsilon_component] != fixed)
    r.fail("vertex group at the basepoint is not Pi^G");
  bool equivalence = fd.canonical_objects.size() == 1;
  bool h1_trivial = table.classes.size() == 1;
  if (equivalence != h1_trivial)
    r.fail("inclusion equivalence does not match H1 triviality");
  r.stats["h1_classes"] = table.classes.size();
  r.stats["components"] = fd.canonical_objects.size();
  r.stats["equivalence"] = equivalence;
  return r;
}

}  // namespace equicat
