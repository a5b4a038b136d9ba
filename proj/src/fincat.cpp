#include "equicat/fincat.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace equicat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least index as root
    parent[b] = a;
    return true;
  }
};

constexpr long kMaxDenseMorphisms = 5000;

}  // namespace

void FinCat::validate() const {
  const int nm = n_mor();
  if (static_cast<int>(tgt.size()) != nm || static_cast<int>(idm.size()) != n_obj)
    throw std::runtime_error("category: structure size mismatch");
  if (static_cast<long>(comp.size()) != static_cast<long>(nm) * nm)
    throw std::runtime_error("category: composition table size mismatch");
  for (int m = 0; m < nm; ++m)
    if (src[m] < 0 || src[m] >= n_obj || tgt[m] < 0 || tgt[m] >= n_obj)
      throw std::runtime_error("category: morphism endpoints out of range");
  for (int x = 0; x < n_obj; ++x) {
    int i = idm[x];
    if (i < 0 || i >= nm || src[i] != x || tgt[i] != x)
      throw std::runtime_error("category: bad identity");
  }
  // composition defined exactly on composable pairs, with matching endpoints
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int c = compose(f, g);
      if ((src[f] == tgt[g]) != (c >= 0))
        throw std::runtime_error("category: composition domain mismatch");
      if (c >= 0 && (src[c] != src[g] || tgt[c] != tgt[f]))
        throw std::runtime_error("category: composite endpoints wrong");
    }
  for (int f = 0; f < nm; ++f) {
    if (compose(f, idm[src[f]]) != f || compose(idm[tgt[f]], f) != f)
      throw std::runtime_error("category: unit law fails");
  }
  // associativity over all composable triples
  std::vector<std::vector<int>> by_tgt(n_obj);
  for (int m = 0; m < nm; ++m) by_tgt[tgt[m]].push_back(m);
  for (int f = 0; f < nm; ++f)
    for (int g : by_tgt[src[f]]) {
      int fg = compose(f, g);
      for (int h : by_tgt[src[g]])
        if (compose(fg, h) != compose(f, compose(g, h)))
          throw std::runtime_error("category: associativity fails");
    }
}

bool FinCat::is_chaotic() const {
  if (static_cast<long>(n_mor()) != static_cast<long>(n_obj) * n_obj) return false;
  std::vector<char> seen(static_cast<size_t>(n_obj) * n_obj, 0);
  for (int m = 0; m < n_mor(); ++m) {
    size_t key = static_cast<size_t>(tgt[m]) * n_obj + src[m];
    if (seen[key]) return false;
    seen[key] = 1;
  }
  return true;
}

bool FinCat::is_groupoid() const {
  for (int m = 0; m < n_mor(); ++m) {
    bool invertible = false;
    for (int w = 0; w < n_mor() && !invertible; ++w)
      if (src[w] == tgt[m] && tgt[w] == src[m] && compose(w, m) == idm[src[m]] &&
          compose(m, w) == idm[tgt[m]])
        invertible = true;
    if (!invertible) return false;
  }
  return true;
}

std::vector<int> FinCat::hom_set(int from, int to) const {
  std::vector<int> out;
  for (int m = 0; m < n_mor(); ++m)
    if (src[m] == from && tgt[m] == to) out.push_back(m);
  return out;
}

FinCat FinCat::from_text(std::istream& in) {
  FinCat c;
  int nm = 0;
  if (!(in >> c.n_obj >> nm)) throw std::runtime_error("category file: header");
  c.src.resize(nm);
  c.tgt.resize(nm);
  for (int m = 0; m < nm; ++m)
    if (!(in >> c.src[m] >> c.tgt[m])) throw std::runtime_error("category file: morphisms");
  c.idm.resize(c.n_obj);
  for (int x = 0; x < c.n_obj; ++x)
    if (!(in >> c.idm[x])) throw std::runtime_error("category file: identities");
  c.comp.assign(static_cast<size_t>(nm) * nm, -1);
  int triples = 0;
  if (!(in >> triples)) throw std::runtime_error("category file: composition count");
  for (int i = 0; i < triples; ++i) {
    int f, g, fg;
    if (!(in >> f >> g >> fg)) throw std::runtime_error("category file: composition");
    c.comp[static_cast<size_t>(f) * nm + g] = fg;
  }
  return c;
}

void FinCat::to_text(std::ostream& out) const {
  out << n_obj << " " << n_mor() << "\n";
  for (int m = 0; m < n_mor(); ++m) out << src[m] << " " << tgt[m] << "\n";
  for (int x = 0; x < n_obj; ++x) out << (x ? " " : "") << idm[x];
  out << "\n";
  long triples = 0;
  for (int v : comp)
    if (v >= 0) ++triples;
  out << triples << "\n";
  for (int f = 0; f < n_mor(); ++f)
    for (int g = 0; g < n_mor(); ++g)
      if (compose(f, g) >= 0) out << f << " " << g << " " << compose(f, g) << "\n";
}

FinCatPtr make_fincat(FinCat c) {
  if (c.n_mor() > kMaxDenseMorphisms)
    throw std::runtime_error("category too large to materialize: " + std::to_string(c.n_mor()) +
                             " morphisms");
  c.validate();
  return std::make_shared<const FinCat>(std::move(c));
}

FinCatPtr chaotic(int n) {
  FinCat c;
  c.n_obj = n;
  c.src.resize(static_cast<size_t>(n) * n);
  c.tgt.resize(static_cast<size_t>(n) * n);
  c.idm.resize(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      c.src[static_cast<size_t>(y) * n + x] = x;
      c.tgt[static_cast<size_t>(y) * n + x] = y;
    }
  for (int x = 0; x < n; ++x) c.idm[x] = x * n + x;
  const long nm = static_cast<long>(n) * n;
  c.comp.assign(nm * nm, -1);
  for (int z = 0; z < n; ++z)
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        c.comp[(static_cast<size_t>(z) * n + y) * nm + (static_cast<size_t>(y) * n + x)] =
            z * n + x;
  return make_fincat(std::move(c));
}

void GSet::validate() const {
  if (!group) throw std::runtime_error("G-set: missing group");
  if (static_cast<int>(act.size()) != group->order) throw std::runtime_error("G-set: size");
  for (int g = 0; g < group->order; ++g) {
    std::vector<char> seen(size, 0);
    if (static_cast<int>(act[g].size()) != size) throw std::runtime_error("G-set: perm size");
    for (int y = 0; y < size; ++y) {
      int v = act[g][y];
      if (v < 0 || v >= size || seen[v]) throw std::runtime_error("G-set: not a permutation");
      seen[v] = 1;
    }
  }
  for (int y = 0; y < size; ++y)
    if (act[group->identity][y] != y) throw std::runtime_error("G-set: identity acts");
  for (int g = 0; g < group->order; ++g)
    for (int h = 0; h < group->order; ++h)
      for (int y = 0; y < size; ++y)
        if (act[group->mul(g, h)][y] != act[g][act[h][y]])
          throw std::runtime_error("G-set: not an action");
}

GSet regular_gset(GroupPtr g) {
  GSet s;
  s.size = g->order;
  s.act.resize(g->order);
  for (int a = 0; a < g->order; ++a) {
    s.act[a].resize(g->order);
    for (int y = 0; y < g->order; ++y) s.act[a][y] = g->mul(a, y);
  }
  s.group = std::move(g);
  return s;
}

GSet point_gset(GroupPtr g) {
  GSet s;
  s.size = 1;
  s.act.assign(g->order, {0});
  s.group = std::move(g);
  return s;
}

GSet conjugation_gset(GroupPtr g) {
  GSet s;
  s.size = g->order;
  s.act.resize(g->order);
  for (int a = 0; a < g->order; ++a) {
    s.act[a].resize(g->order);
    for (int y = 0; y < g->order; ++y) s.act[a][y] = g->conj(a, y);
  }
  s.group = std::move(g);
  return s;
}

FinCatPtr translation(const GSet& y) {
  y.validate();
  const FiniteGroup& G = *y.group;
  FinCat c;
  c.n_obj = y.size;
  const int nm = G.order * y.size;
  c.src.resize(nm);
  c.tgt.resize(nm);
  auto enc = [&](int g, int pt) { return g * y.size + pt; };
  for (int g = 0; g < G.order; ++g)
    for (int pt = 0; pt < y.size; ++pt) {
      c.src[enc(g, pt)] = pt;
      c.tgt[enc(g, pt)] = y.apply(g, pt);
    }
  c.idm.resize(y.size);
  for (int pt = 0; pt < y.size; ++pt) c.idm[pt] = enc(G.identity, pt);
  c.comp.assign(static_cast<size_t>(nm) * nm, -1);
  for (int g = 0; g < G.order; ++g)
    for (int pt = 0; pt < y.size; ++pt)
      for (int h = 0; h < G.order; ++h)
        c.comp[static_cast<size_t>(enc(h, y.apply(g, pt))) * nm + enc(g, pt)] =
            enc(G.mul(h, g), pt);
  return make_fincat(std::move(c));
}

FinCatPtr one_object(GroupPtr g) {
  FinCat c;
  c.n_obj = 1;
  const int nm = g->order;
  c.src.assign(nm, 0);
  c.tgt.assign(nm, 0);
  c.idm = {g->identity};
  c.comp.resize(static_cast<size_t>(nm) * nm);
  for (int a = 0; a < nm; ++a)
    for (int b = 0; b < nm; ++b) c.comp[static_cast<size_t>(a) * nm + b] = g->mul(a, b);
  return make_fincat(std::move(c));
}

void CatGAction::validate() const {
  if (!group || !cat) throw std::runtime_error("category action: missing data");
  const FiniteGroup& G = *group;
  const FinCat& C = *cat;
  if (static_cast<int>(on_obj.size()) != G.order || static_cast<int>(on_mor.size()) != G.order)
    throw std::runtime_error("category action: size mismatch");
  for (int g = 0; g < G.order; ++g) {
    const auto& po = on_obj[g];
    const auto& pm = on_mor[g];
    if (static_cast<int>(po.size()) != C.n_obj || static_cast<int>(pm.size()) != C.n_mor())
      throw std::runtime_error("category action: permutation sizes");
    std::vector<char> so(C.n_obj, 0), sm(C.n_mor(), 0);
    for (int x : po) {
      if (x < 0 || x >= C.n_obj || so[x]) throw std::runtime_error("category action: objects");
      so[x] = 1;
    }
    for (int m : pm) {
      if (m < 0 || m >= C.n_mor() || sm[m]) throw std::runtime_error("category action: morphisms");
      sm[m] = 1;
    }
    for (int m = 0; m < C.n_mor(); ++m)
      if (C.src[pm[m]] != po[C.src[m]] || C.tgt[pm[m]] != po[C.tgt[m]])
        throw std::runtime_error("category action: endpoints not preserved");
    for (int x = 0; x < C.n_obj; ++x)
      if (pm[C.idm[x]] != C.idm[po[x]])
        throw std::runtime_error("category action: identities not preserved");
    for (int f = 0; f < C.n_mor(); ++f)
      for (int h = 0; h < C.n_mor(); ++h) {
        int c = C.compose(f, h);
        if (c >= 0 && pm[c] != C.compose(pm[f], pm[h]))
          throw std::runtime_error("category action: composition not preserved");
      }
  }
  for (int x = 0; x < C.n_obj; ++x)
    if (on_obj[G.identity][x] != x) throw std::runtime_error("category action: identity");
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < G.order; ++h) {
      int gh = G.mul(g, h);
      for (int x = 0; x < C.n_obj; ++x)
        if (on_obj[gh][x] != on_obj[g][on_obj[h][x]])
          throw std::runtime_error("category action: object homomorphism");
      for (int m = 0; m < C.n_mor(); ++m)
        if (on_mor[gh][m] != on_mor[g][on_mor[h][m]])
          throw std::runtime_error("category action: morphism homomorphism");
    }
}

CatGAction trivial_cat_action(GroupPtr g, FinCatPtr c) {
  CatGAction a;
  a.group = std::move(g);
  a.cat = std::move(c);
  std::vector<int> io(a.cat->n_obj), im(a.cat->n_mor());
  std::iota(io.begin(), io.end(), 0);
  std::iota(im.begin(), im.end(), 0);
  a.on_obj.assign(a.group->order, io);
  a.on_mor.assign(a.group->order, im);
  return a;
}

CatGAction chaotic_action(const GSet& y) {
  CatGAction a;
  a.group = y.group;
  a.cat = chaotic(y.size);
  a.on_obj = y.act;
  a.on_mor.resize(y.group->order);
  for (int g = 0; g < y.group->order; ++g) {
    a.on_mor[g].resize(static_cast<size_t>(y.size) * y.size);
    for (int t = 0; t < y.size; ++t)
      for (int s = 0; s < y.size; ++s)
        a.on_mor[g][static_cast<size_t>(t) * y.size + s] =
            y.apply(g, t) * y.size + y.apply(g, s);
  }
  a.validate();
  return a;
}

CatGAction conjugation_one_object(GroupPtr g) {
  CatGAction a;
  a.cat = one_object(g);
  a.on_obj.assign(g->order, {0});
  a.on_mor.resize(g->order);
  for (int x = 0; x < g->order; ++x) {
    a.on_mor[x].resize(g->order);
    for (int m = 0; m < g->order; ++m) a.on_mor[x][m] = g->conj(x, m);
  }
  a.group = std::move(g);
  a.validate();
  return a;
}

void Functor::validate() const {
  const FinCat& A = *dom;
  const FinCat& B = *cod;
  if (static_cast<int>(ob.size()) != A.n_obj || static_cast<int>(mor.size()) != A.n_mor())
    throw std::runtime_error("functor: size mismatch");
  for (int m = 0; m < A.n_mor(); ++m)
    if (B.src[mor[m]] != ob[A.src[m]] || B.tgt[mor[m]] != ob[A.tgt[m]])
      throw std::runtime_error("functor: endpoints");
  for (int x = 0; x < A.n_obj; ++x)
    if (mor[A.idm[x]] != B.idm[ob[x]]) throw std::runtime_error("functor: identities");
  for (int f = 0; f < A.n_mor(); ++f)
    for (int g = 0; g < A.n_mor(); ++g) {
      int c = A.compose(f, g);
      if (c >= 0 && mor[c] != B.compose(mor[f], mor[g]))
        throw std::runtime_error("functor: composition");
    }
}

Functor translation_to_chaotic(GroupPtr g) {
  Functor f;
  f.dom = translation(regular_gset(g));
  f.cod = chaotic(g->order);
  const int n = g->order;
  f.ob.resize(n);
  std::iota(f.ob.begin(), f.ob.end(), 0);
  f.mor.resize(static_cast<size_t>(n) * n);
  for (int h = 0; h < n; ++h)
    for (int y = 0; y < n; ++y) f.mor[h * n + y] = g->mul(h, y) * n + y;
  f.validate();
  return f;
}

VerifyReport verify_translation_iso(GroupPtr g) {
  VerifyReport r;
  const int n = g->order;
  auto f = translation_to_chaotic(g);

  // bijection on morphisms, with the stated inverse (h, g) -> (h g^{-1}, g)
  std::vector<char> hit(static_cast<size_t>(n) * n, 0);
  for (size_t m = 0; m < f.mor.size(); ++m) {
    if (hit[f.mor[m]]) r.fail("translation iso: not injective");
    hit[f.mor[m]] = 1;
  }
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      int back = g->mul(b, g->inv[a]) * n + a;
      if (f.mor[back] != b * n + a) r.fail("translation iso: stated inverse fails");
    }

  // right G-equivariance: objects y -> ya; translation morphisms
  // (h, y) a = (h, ya); chaotic pairs diagonally.
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < n; ++h)
      for (int y = 0; y < n; ++y) {
        int lhs = f.mor[h * n + g->mul(y, a)];
        int img = f.mor[h * n + y];
        int rhs = g->mul(img / n, a) * n + g->mul(img % n, a);
        if (lhs != rhs) r.fail("translation iso: right equivariance fails");
      }
  r.stats["order"] = n;
  return r;
}

namespace {

struct FunctorSchedule {
  struct Step {
    int mor;
    bool free;
    int p = -1, q = -1;  // for derived: mor = comp(p, q)
  };
  std::vector<Step> steps;  // non-identity morphisms only
};

FunctorSchedule make_schedule(const FinCat& a) {
  FunctorSchedule s;
  std::vector<char> scheduled(a.n_mor(), 0);
  std::vector<int> assigned;
  for (int x = 0; x < a.n_obj; ++x)
    if (!scheduled[a.idm[x]]) {
      scheduled[a.idm[x]] = 1;
      assigned.push_back(a.idm[x]);
    }
  int remaining = a.n_mor() - static_cast<int>(assigned.size());
  while (remaining > 0) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t i = 0; i < assigned.size(); ++i)
        for (size_t j = 0; j < assigned.size(); ++j) {
          int c = a.compose(assigned[i], assigned[j]);
          if (c >= 0 && !scheduled[c]) {
            scheduled[c] = 1;
            s.steps.push_back({c, false, assigned[i], assigned[j]});
            assigned.push_back(c);
            --remaining;
            progress = true;
          }
        }
    }
    if (remaining == 0) break;
    for (int m = 0; m < a.n_mor(); ++m)
      if (!scheduled[m]) {
        scheduled[m] = 1;
        s.steps.push_back({m, true});
        assigned.push_back(m);
        --remaining;
        break;
      }
  }
  return s;
}

}  // namespace

std::vector<Functor> all_functors(FinCatPtr a, FinCatPtr b, long bound) {
  const FinCat& A = *a;
  const FinCat& B = *b;
  std::vector<Functor> out;
  if (A.n_obj == 0) {
    Functor f;
    f.dom = a;
    f.cod = b;
    out.push_back(std::move(f));
    return out;
  }
  if (B.n_obj == 0) return out;
  double obj_space = std::pow(static_cast<double>(B.n_obj), A.n_obj);
  if (obj_space > static_cast<double>(bound))
    throw std::runtime_error("functor enumeration bound exceeded");
  auto schedule = make_schedule(A);

  // hom sets of B, indexed by (src, tgt)
  std::vector<std::vector<std::vector<int>>> hom(B.n_obj,
                                                 std::vector<std::vector<int>>(B.n_obj));
  for (int m = 0; m < B.n_mor(); ++m) hom[B.src[m]][B.tgt[m]].push_back(m);

  std::vector<int> ob(A.n_obj, 0);
  std::vector<int> mor(A.n_mor(), -1);

  auto emit = [&](const std::vector<int>& morv) {
    // the schedule only forces one decomposition; re-check everything
    for (int f = 0; f < A.n_mor(); ++f)
      for (int g = 0; g < A.n_mor(); ++g) {
        int c = A.compose(f, g);
        if (c >= 0 && morv[c] != B.compose(morv[f], morv[g])) return;
      }
    Functor fun;
    fun.dom = a;
    fun.cod = b;
    fun.ob = ob;
    fun.mor = morv;
    out.push_back(std::move(fun));
    if (static_cast<long>(out.size()) > bound)
      throw std::runtime_error("functor enumeration bound exceeded");
  };

  auto assign = [&](auto&& self, size_t step_idx) -> void {
    if (step_idx == schedule.steps.size()) {
      emit(mor);
      return;
    }
    const auto& st = schedule.steps[step_idx];
    if (!st.free) {
      int img = B.compose(mor[st.p], mor[st.q]);
      if (img < 0 || B.src[img] != ob[A.src[st.mor]] || B.tgt[img] != ob[A.tgt[st.mor]]) return;
      mor[st.mor] = img;
      self(self, step_idx + 1);
      mor[st.mor] = -1;
      return;
    }
    for (int cand : hom[ob[A.src[st.mor]]][ob[A.tgt[st.mor]]]) {
      mor[st.mor] = cand;
      self(self, step_idx + 1);
    }
    mor[st.mor] = -1;
  };

  // object maps in lexicographic order
  while (true) {
    for (int x = 0; x < A.n_obj; ++x) mor[A.idm[x]] = B.idm[ob[x]];
    assign(assign, 0);
    int d = A.n_obj - 1;
    while (d >= 0 && ob[d] == B.n_obj - 1) ob[d--] = 0;
    if (d < 0) break;
    ++ob[d];
  }
  std::sort(out.begin(), out.end(), [](const Functor& x, const Functor& y) {
    if (x.ob != y.ob) return x.ob < y.ob;
    return x.mor < y.mor;
  });
  for (auto& f : out) f.validate();
  return out;
}

int FunctorCat::functor_index(const Functor& f) const {
  auto cmp = [](const Functor& x, const Functor& y) {
    if (x.ob != y.ob) return x.ob < y.ob;
    return x.mor < y.mor;
  };
  auto it = std::lower_bound(functors.begin(), functors.end(), f, cmp);
  if (it == functors.end() || it->ob != f.ob || it->mor != f.mor)
    throw std::runtime_error("functor not found in functor category");
  return static_cast<int>(it - functors.begin());
}

FunctorCat functor_category(FinCatPtr a, FinCatPtr b, long bound) {
  FunctorCat fc;
  fc.a = a;
  fc.b = b;
  fc.functors = all_functors(a, b, bound);
  const FinCat& A = *a;
  const FinCat& B = *b;
  const int nf = static_cast<int>(fc.functors.size());

  FinCat c;
  c.n_obj = nf;
  std::vector<std::tuple<int, int, std::vector<int>>> mors;  // (src, tgt, components)
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j) {
      const Functor& F = fc.functors[i];
      const Functor& G = fc.functors[j];
      std::vector<int> comps(A.n_obj, -1);
      auto natural_upto = [&](int upto) {
        for (int m = 0; m < A.n_mor(); ++m) {
          int x = A.src[m], y = A.tgt[m];
          if (x <= upto && y <= upto &&
              B.compose(comps[y], F.mor[m]) != B.compose(G.mor[m], comps[x]))
            return false;
        }
        return true;
      };
      auto rec = [&](auto&& self, int x) -> void {
        if (x == A.n_obj) {
          mors.emplace_back(i, j, comps);
          return;
        }
        for (int cand : B.hom_set(F.ob[x], G.ob[x])) {
          comps[x] = cand;
          if (natural_upto(x)) self(self, x + 1);
        }
        comps[x] = -1;
      };
      rec(rec, 0);
    }
  std::sort(mors.begin(), mors.end());
  const int nm = static_cast<int>(mors.size());
  if (nm > kMaxDenseMorphisms)
    throw std::runtime_error("functor category too large to materialize");
  c.src.resize(nm);
  c.tgt.resize(nm);
  fc.components.resize(nm);
  std::map<std::tuple<int, int, std::vector<int>>, int> index;
  for (int m = 0; m < nm; ++m) {
    c.src[m] = std::get<0>(mors[m]);
    c.tgt[m] = std::get<1>(mors[m]);
    fc.components[m] = std::get<2>(mors[m]);
    index[mors[m]] = m;
  }
  c.idm.resize(nf);
  for (int i = 0; i < nf; ++i) {
    std::vector<int> comps(A.n_obj);
    for (int x = 0; x < A.n_obj; ++x) comps[x] = B.idm[fc.functors[i].ob[x]];
    c.idm[i] = index.at({i, i, comps});
  }
  c.comp.assign(static_cast<size_t>(nm) * nm, -1);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.src[f] != c.tgt[g]) continue;
      std::vector<int> comps(A.n_obj);
      for (int x = 0; x < A.n_obj; ++x)
        comps[x] = B.compose(fc.components[f][x], fc.components[g][x]);
      c.comp[static_cast<size_t>(f) * nm + g] = index.at({c.src[g], c.tgt[f], comps});
    }
  fc.cat = make_fincat(std::move(c));
  return fc;
}

CatGAction conjugation_action(const FunctorCat& fc, const CatGAction& act_a,
                              const CatGAction& act_b) {
  if (!same_group(*act_a.group, *act_b.group))
    throw std::invalid_argument("conjugation action: different groups");
  act_a.validate();
  act_b.validate();
  const FiniteGroup& G = *act_a.group;
  const FinCat& A = *fc.a;
  CatGAction out;
  out.group = act_a.group;
  out.cat = fc.cat;
  out.on_obj.resize(G.order);
  out.on_mor.resize(G.order);
  for (int g = 0; g < G.order; ++g) {
    const int gi = G.inv[g];
    out.on_obj[g].resize(fc.functors.size());
    for (size_t i = 0; i < fc.functors.size(); ++i) {
      const Functor& F = fc.functors[i];
      Functor gf;
      gf.dom = fc.a;
      gf.cod = fc.b;
      gf.ob.resize(A.n_obj);
      gf.mor.resize(A.n_mor());
      for (int x = 0; x < A.n_obj; ++x) gf.ob[x] = act_b.on_obj[g][F.ob[act_a.on_obj[gi][x]]];
      for (int m = 0; m < A.n_mor(); ++m) gf.mor[m] = act_b.on_mor[g][F.mor[act_a.on_mor[gi][m]]];
      out.on_obj[g][i] = fc.functor_index(gf);
    }
    out.on_mor[g].resize(fc.components.size());
    for (size_t m = 0; m < fc.components.size(); ++m) {
      std::vector<int> comps(A.n_obj);
      for (int x = 0; x < A.n_obj; ++x)
        comps[x] = act_b.on_mor[g][fc.components[m][act_a.on_obj[gi][x]]];
      int si = out.on_obj[g][fc.cat->src[m]];
      int ti = out.on_obj[g][fc.cat->tgt[m]];
      int found = -1;
      for (int w = 0; w < fc.cat->n_mor(); ++w)
        if (fc.cat->src[w] == si && fc.cat->tgt[w] == ti && fc.components[w] == comps) {
          found = w;
          break;
        }
      if (found < 0) throw std::runtime_error("conjugation action: transformed morphism missing");
      out.on_mor[g][m] = found;
    }
  }
  out.validate();
  return out;
}

FixedCat fixed_category(const CatGAction& act, const Subgroup& h) {
  if (!same_group(*h.parent, *act.group))
    throw std::invalid_argument("fixed category: H is not a subgroup of the acting group");
  const FinCat& C = *act.cat;
  FixedCat out;
  std::vector<int> obj_new(C.n_obj, -1), mor_new(C.n_mor(), -1);
  for (int x = 0; x < C.n_obj; ++x) {
    bool fixed = true;
    for (int g : h.members)
      if (act.on_obj[g][x] != x) { fixed = false; break; }
    if (fixed) {
      obj_new[x] = static_cast<int>(out.obj_in_parent.size());
      out.obj_in_parent.push_back(x);
    }
  }
  for (int m = 0; m < C.n_mor(); ++m) {
    bool fixed = true;
    for (int g : h.members)
      if (act.on_mor[g][m] != m) { fixed = false; break; }
    if (fixed) {
      mor_new[m] = static_cast<int>(out.mor_in_parent.size());
      out.mor_in_parent.push_back(m);
    }
  }
  FinCat c;
  c.n_obj = static_cast<int>(out.obj_in_parent.size());
  const int nm = static_cast<int>(out.mor_in_parent.size());
  c.src.resize(nm);
  c.tgt.resize(nm);
  for (int m = 0; m < nm; ++m) {
    c.src[m] = obj_new[C.src[out.mor_in_parent[m]]];
    c.tgt[m] = obj_new[C.tgt[out.mor_in_parent[m]]];
  }
  c.idm.resize(c.n_obj);
  for (int x = 0; x < c.n_obj; ++x) c.idm[x] = mor_new[C.idm[out.obj_in_parent[x]]];
  c.comp.assign(static_cast<size_t>(nm) * nm, -1);
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int cc = C.compose(out.mor_in_parent[f], out.mor_in_parent[g]);
      if (cc >= 0) c.comp[static_cast<size_t>(f) * nm + g] = mor_new[cc];
    }
  out.cat = make_fincat(std::move(c));
  return out;
}

OrbitCat orbit_category(const CatGAction& act) {
  const FinCat& C = *act.cat;
  const FiniteGroup& G = *act.group;
  OrbitCat out;

  UnionFind uo(C.n_obj), um(C.n_mor());
  for (int g = 0; g < G.order; ++g) {
    for (int x = 0; x < C.n_obj; ++x) uo.unite(x, act.on_obj[g][x]);
    for (int m = 0; m < C.n_mor(); ++m) um.unite(m, act.on_mor[g][m]);
  }

  // congruence closure: merge morphism classes until composition is
  // well defined on classes
  bool first_sweep = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, std::vector<int>> classes;
    for (int m = 0; m < C.n_mor(); ++m) classes[um.find(m)].push_back(m);
    for (auto& [rf, fs] : classes) {
      for (auto& [rg, gs] : classes) {
        if (uo.find(C.src[rf]) != uo.find(C.tgt[rg])) continue;
        int first_root = -1;
        int wf = -1, wg = -1;
        for (int f : fs)
          for (int g : gs) {
            if (C.src[f] != C.tgt[g]) continue;
            int root = um.find(C.compose(f, g));
            if (first_root < 0) {
              first_root = root;
              wf = f;
              wg = g;
            } else if (root != first_root) {
              if (first_sweep && !out.witness) {
                out.descended = false;
                out.witness = std::array<int, 4>{wf, wg, f, g};
              }
              um.unite(root, first_root);
              first_root = um.find(first_root);
              changed = true;
            }
          }
      }
    }
    first_sweep = false;
  }

  std::map<int, int> obj_id, mor_id;
  out.obj_orbit.resize(C.n_obj);
  for (int x = 0; x < C.n_obj; ++x) obj_id[uo.find(x)] = 0;
  {
    int next = 0;
    for (auto& [r, v] : obj_id) v = next++;
  }
  for (int x = 0; x < C.n_obj; ++x) out.obj_orbit[x] = obj_id[uo.find(x)];
  out.mor_orbit.resize(C.n_mor());
  for (int m = 0; m < C.n_mor(); ++m) mor_id[um.find(m)] = 0;
  {
    int next = 0;
    for (auto& [r, v] : mor_id) v = next++;
  }
  for (int m = 0; m < C.n_mor(); ++m) out.mor_orbit[m] = mor_id[um.find(m)];

  FinCat q;
  q.n_obj = static_cast<int>(obj_id.size());
  const int nm = static_cast<int>(mor_id.size());
  q.src.assign(nm, -1);
  q.tgt.assign(nm, -1);
  for (int m = 0; m < C.n_mor(); ++m) {
    int qm = out.mor_orbit[m];
    int s = out.obj_orbit[C.src[m]];
    int t = out.obj_orbit[C.tgt[m]];
    if (q.src[qm] < 0) {
      q.src[qm] = s;
      q.tgt[qm] = t;
    } else if (q.src[qm] != s || q.tgt[qm] != t) {
      throw std::runtime_error("orbit category: inconsistent endpoints after closure");
    }
  }
  q.idm.assign(q.n_obj, -1);
  for (int x = 0; x < C.n_obj; ++x) {
    int qx = out.obj_orbit[x];
    int qi = out.mor_orbit[C.idm[x]];
    if (q.idm[qx] < 0) q.idm[qx] = qi;
    else if (q.idm[qx] != qi)
      throw std::runtime_error("orbit category: identities do not descend");
  }
  q.comp.assign(static_cast<size_t>(nm) * nm, -1);
  for (int f = 0; f < C.n_mor(); ++f)
    for (int g = 0; g < C.n_mor(); ++g) {
      int c = C.compose(f, g);
      if (c < 0) continue;
      q.comp[static_cast<size_t>(out.mor_orbit[f]) * nm + out.mor_orbit[g]] = out.mor_orbit[c];
    }
  // quotient-composable pairs with no directly composable representative
  // pair get one by translating a representative
  for (int qf = 0; qf < nm; ++qf)
    for (int qg = 0; qg < nm; ++qg) {
      if (q.src[qf] != q.tgt[qg]) continue;
      if (q.comp[static_cast<size_t>(qf) * nm + qg] >= 0) continue;
      bool done = false;
      for (int f = 0; f < C.n_mor() && !done; ++f) {
        if (out.mor_orbit[f] != qf) continue;
        for (int g = 0; g < C.n_mor() && !done; ++g) {
          if (out.mor_orbit[g] != qg || C.src[f] != C.tgt[g]) continue;
          q.comp[static_cast<size_t>(qf) * nm + qg] = out.mor_orbit[C.compose(f, g)];
          done = true;
        }
      }
      if (!done) throw std::runtime_error("orbit category: no composable representatives");
    }
  out.cat = make_fincat(std::move(q));
  return out;
}

}  // namespace equicat
