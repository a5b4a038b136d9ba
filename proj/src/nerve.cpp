#include "equicat/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace equicat {

void TruncSimplicialSet::validate() const {
  if (static_cast<int>(level_size.size()) != q_max + 1)
    throw std::runtime_error("simplicial set: level count");
  auto check_map = [&](const std::vector<int>& m, long from, long to, const char* what) {
    if (static_cast<long>(m.size()) != from) throw std::runtime_error(std::string(what) + ": size");
    for (int v : m)
      if (v < 0 || v >= to) throw std::runtime_error(std::string(what) + ": range");
  };
  for (int q = 1; q <= q_max; ++q) {
    if (static_cast<int>(face[q].size()) != q + 1)
      throw std::runtime_error("simplicial set: face arity");
    for (int i = 0; i <= q; ++i) check_map(face[q][i], level_size[q], level_size[q - 1], "face");
  }
  for (int q = 0; q < q_max; ++q) {
    if (static_cast<int>(degen[q].size()) != q + 1)
      throw std::runtime_error("simplicial set: degeneracy arity");
    for (int i = 0; i <= q; ++i)
      check_map(degen[q][i], level_size[q], level_size[q + 1], "degeneracy");
  }

  // d_i d_j = d_{j-1} d_i for i < j
  for (int q = 2; q <= q_max; ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        for (long s = 0; s < level_size[q]; ++s)
          if (face[q - 1][i][face[q][j][s]] != face[q - 1][j - 1][face[q][i][s]])
            throw std::runtime_error("simplicial identity d_i d_j fails");
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int q = 0; q + 1 < q_max; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= j; ++i)
        for (long s = 0; s < level_size[q]; ++s)
          if (degen[q + 1][j + 1][degen[q][i][s]] != degen[q + 1][i][degen[q][j][s]])
            throw std::runtime_error("simplicial identity s_i s_j fails");
  // d_i s_j relations
  for (int q = 0; q < q_max; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= q + 1; ++i)
        for (long s = 0; s < level_size[q]; ++s) {
          int v = face[q + 1][i][degen[q][j][s]];
          if (i == j || i == j + 1) {
            if (v != s) throw std::runtime_error("simplicial identity d_i s_i fails");
          } else if (i < j) {
            if (q == 0 || v != degen[q - 1][j - 1][face[q][i][s]])
              throw std::runtime_error("simplicial identity d_i s_j (i<j) fails");
          } else {  // i > j + 1
            if (q == 0 || v != degen[q - 1][j][face[q][i - 1][s]])
              throw std::runtime_error("simplicial identity d_i s_j (i>j+1) fails");
          }
        }
}

nlohmann::json TruncSimplicialSet::to_json() const {
  nlohmann::json j;
  j["q_max"] = q_max;
  j["levels"] = level_size;
  nlohmann::json fs = nlohmann::json::array();
  for (int q = 1; q <= q_max; ++q) fs.push_back(face[q]);
  j["faces"] = std::move(fs);
  nlohmann::json ds = nlohmann::json::array();
  for (int q = 0; q < q_max; ++q) ds.push_back(degen[q]);
  j["degeneracies"] = std::move(ds);
  return j;
}

int NerveData::string_index(int q, const std::vector<int>& key) const {
  auto& lvl = strings[q];
  auto it = std::lower_bound(lvl.begin(), lvl.end(), key);
  if (it == lvl.end() || *it != key) throw std::runtime_error("nerve: string not found");
  return static_cast<int>(it - lvl.begin());
}

NerveData nerve(FinCatPtr c, int q_max, long level_bound) {
  NerveData nd;
  nd.cat = c;
  const FinCat& C = *c;
  nd.s.q_max = q_max;
  nd.s.level_size.resize(q_max + 1);
  nd.s.face.resize(q_max + 1);
  nd.s.degen.resize(std::max(q_max, 0));
  nd.strings.resize(q_max + 1);

  // level 0: objects; level q: composable strings in lexicographic order
  nd.strings[0].reserve(C.n_obj);
  for (int x = 0; x < C.n_obj; ++x) nd.strings[0].push_back({x});
  for (int q = 1; q <= q_max; ++q) {
    auto& prev = nd.strings[q - 1];
    auto& cur = nd.strings[q];
    if (q == 1) {
      for (int m = 0; m < C.n_mor(); ++m) cur.push_back({m});
    } else {
      for (const auto& s : prev)
        for (int m = 0; m < C.n_mor(); ++m)
          if (C.tgt[m] == C.src[s.back()]) {
            auto ext = s;
            ext.push_back(m);
            cur.push_back(std::move(ext));
          }
    }
    if (static_cast<long>(cur.size()) > level_bound)
      throw std::runtime_error("nerve: level bound exceeded");
  }
  for (int q = 0; q <= q_max; ++q) nd.s.level_size[q] = static_cast<long>(nd.strings[q].size());

  for (int q = 1; q <= q_max; ++q) {
    nd.s.face[q].assign(q + 1, std::vector<int>(nd.strings[q].size()));
    for (size_t si = 0; si < nd.strings[q].size(); ++si) {
      const auto& s = nd.strings[q][si];
      for (int i = 0; i <= q; ++i) {
        std::vector<int> out;
        if (q == 1) {
          out = {i == 0 ? C.src[s[0]] : C.tgt[s[0]]};
        } else if (i == 0) {
          out.assign(s.begin() + 1, s.end());
        } else if (i == q) {
          out.assign(s.begin(), s.end() - 1);
        } else {
          out.assign(s.begin(), s.end());
          out[i - 1] = C.compose(s[i - 1], s[i]);
          out.erase(out.begin() + i);
        }
        nd.s.face[q][i][si] = nd.string_index(q - 1, out);
      }
    }
  }
  for (int q = 0; q < q_max; ++q) {
    nd.s.degen[q].assign(q + 1, std::vector<int>(nd.strings[q].size()));
    for (size_t si = 0; si < nd.strings[q].size(); ++si) {
      const auto& s = nd.strings[q][si];
      for (int i = 0; i <= q; ++i) {
        std::vector<int> out;
        if (q == 0) {
          out = {C.idm[s[0]]};
        } else {
          out.assign(s.begin(), s.end());
          // identity inserted after f_i, at T(f_1) for i = 0 else S(f_i)
          int obj = (i == 0) ? C.tgt[s[0]] : C.src[s[i - 1]];
          out.insert(out.begin() + i, C.idm[obj]);
        }
        nd.s.degen[q][i][si] = nd.string_index(q + 1, out);
      }
    }
  }
  nd.s.validate();
  return nd;
}

void SimplicialGAction::validate(const TruncSimplicialSet& s) const {
  if (!group) throw std::runtime_error("simplicial action: missing group");
  const FiniteGroup& G = *group;
  if (static_cast<int>(act.size()) != s.q_max + 1)
    throw std::runtime_error("simplicial action: level count");
  for (int q = 0; q <= s.q_max; ++q) {
    if (static_cast<int>(act[q].size()) != G.order)
      throw std::runtime_error("simplicial action: group size");
    for (int g = 0; g < G.order; ++g) {
      std::vector<char> seen(s.level_size[q], 0);
      for (int v : act[q][g]) {
        if (v < 0 || v >= s.level_size[q] || seen[v])
          throw std::runtime_error("simplicial action: not a permutation");
        seen[v] = 1;
      }
    }
    for (long x = 0; x < s.level_size[q]; ++x) {
      if (act[q][G.identity][x] != x) throw std::runtime_error("simplicial action: identity");
      for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
          if (act[q][G.mul(g, h)][x] != act[q][g][act[q][h][x]])
            throw std::runtime_error("simplicial action: homomorphism");
    }
  }
  for (int q = 1; q <= s.q_max; ++q)
    for (int g = 0; g < G.order; ++g)
      for (int i = 0; i <= q; ++i)
        for (long x = 0; x < s.level_size[q]; ++x)
          if (s.face[q][i][act[q][g][x]] != act[q - 1][g][s.face[q][i][x]])
            throw std::runtime_error("simplicial action: faces not equivariant");
  for (int q = 0; q < s.q_max; ++q)
    for (int g = 0; g < G.order; ++g)
      for (int i = 0; i <= q; ++i)
        for (long x = 0; x < s.level_size[q]; ++x)
          if (s.degen[q][i][act[q][g][x]] != act[q + 1][g][s.degen[q][i][x]])
            throw std::runtime_error("simplicial action: degeneracies not equivariant");
}

SimplicialGAction nerve_action(const NerveData& nd, const CatGAction& act) {
  SimplicialGAction sa;
  sa.group = act.group;
  const FiniteGroup& G = *act.group;
  sa.act.resize(nd.s.q_max + 1);
  for (int q = 0; q <= nd.s.q_max; ++q) {
    sa.act[q].assign(G.order, std::vector<int>(nd.strings[q].size()));
    for (int g = 0; g < G.order; ++g)
      for (size_t si = 0; si < nd.strings[q].size(); ++si) {
        std::vector<int> img;
        img.reserve(nd.strings[q][si].size());
        for (int v : nd.strings[q][si])
          img.push_back(q == 0 ? act.on_obj[g][v] : act.on_mor[g][v]);
        sa.act[q][g][si] = nd.string_index(q, img);
      }
  }
  sa.validate(nd.s);
  return sa;
}

BarData bar_construction(const GSet& y, int q_max) {
  y.validate();
  BarData bd;
  bd.y = y;
  const FiniteGroup& G = *y.group;
  bd.s.q_max = q_max;
  bd.s.level_size.resize(q_max + 1);
  bd.s.face.resize(q_max + 1);
  bd.s.degen.resize(std::max(q_max, 0));
  bd.tuples.resize(q_max + 1);

  for (int q = 0; q <= q_max; ++q) {
    // tuples (g1, ..., gq, y) in lexicographic order
    std::vector<int> t(q + 1, 0);
    while (true) {
      bd.tuples[q].push_back(t);
      int d = q;
      while (d >= 0 && t[d] == (d == q ? y.size : G.order) - 1) t[d--] = 0;
      if (d < 0) break;
      ++t[d];
    }
    bd.s.level_size[q] = static_cast<long>(bd.tuples[q].size());
  }
  auto index = [&](int q, const std::vector<int>& t) {
    auto& lvl = bd.tuples[q];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), t);
    if (it == lvl.end() || *it != t) throw std::runtime_error("bar: tuple not found");
    return static_cast<int>(it - lvl.begin());
  };

  for (int q = 1; q <= q_max; ++q) {
    bd.s.face[q].assign(q + 1, std::vector<int>(bd.s.level_size[q]));
    for (size_t ti = 0; ti < bd.tuples[q].size(); ++ti) {
      const auto& t = bd.tuples[q][ti];
      for (int i = 0; i <= q; ++i) {
        std::vector<int> out;
        if (i == 0) {
          out.assign(t.begin() + 1, t.end());
        } else if (i == q) {
          out.assign(t.begin(), t.end() - 2);
          out.push_back(y.apply(t[q - 1], t[q]));  // last group letter acts
        } else {
          out.assign(t.begin(), t.end());
          out[i - 1] = G.mul(t[i - 1], t[i]);
          out.erase(out.begin() + i);
        }
        bd.s.face[q][i][ti] = index(q - 1, out);
      }
    }
  }
  for (int q = 0; q < q_max; ++q) {
    bd.s.degen[q].assign(q + 1, std::vector<int>(bd.s.level_size[q]));
    for (size_t ti = 0; ti < bd.tuples[q].size(); ++ti) {
      const auto& t = bd.tuples[q][ti];
      for (int i = 0; i <= q; ++i) {
        std::vector<int> out(t.begin(), t.end());
        out.insert(out.begin() + i, G.identity);
        bd.s.degen[q][i][ti] = index(q + 1, out);
      }
    }
  }
  bd.s.validate();
  return bd;
}

VerifyReport verify_bar_iso(const GSet& y, int q_max) {
  VerifyReport r;
  auto bd = bar_construction(y, q_max);
  auto nd = nerve(translation(y), q_max);
  for (int q = 0; q <= q_max; ++q) {
    if (bd.s.level_size[q] != nd.s.level_size[q]) {
      r.fail("bar: level size mismatch");
      return r;
    }
  }
  // the string with f_i = (g_i, g_{i+1} ... g_q y) corresponds to [g1..gq]y
  std::vector<std::vector<int>> phi(q_max + 1);
  for (int q = 0; q <= q_max; ++q) {
    phi[q].resize(nd.s.level_size[q]);
    for (long si = 0; si < nd.s.level_size[q]; ++si) {
      const auto& s = nd.strings[q][si];
      std::vector<int> t;
      if (q == 0) {
        t = {s[0]};
      } else {
        for (int i = 0; i < q; ++i) t.push_back(s[i] / y.size);  // group letters
        t.push_back(s[q - 1] % y.size);                          // base point of f_q
      }
      auto& lvl = bd.tuples[q];
      auto it = std::lower_bound(lvl.begin(), lvl.end(), t);
      if (it == lvl.end() || *it != t) {
        r.fail("bar: image tuple missing");
        return r;
      }
      phi[q][si] = static_cast<int>(it - lvl.begin());
    }
    std::vector<char> hit(bd.s.level_size[q], 0);
    for (int v : phi[q]) {
      if (hit[v]) r.fail("bar: comparison not injective");
      hit[v] = 1;
    }
  }
  for (int q = 1; q <= q_max && r.pass; ++q)
    for (int i = 0; i <= q; ++i)
      for (long si = 0; si < nd.s.level_size[q]; ++si)
        if (bd.s.face[q][i][phi[q][si]] != phi[q - 1][nd.s.face[q][i][si]]) {
          r.fail("bar: faces do not commute");
          break;
        }
  for (int q = 0; q < q_max && r.pass; ++q)
    for (int i = 0; i <= q; ++i)
      for (long si = 0; si < nd.s.level_size[q]; ++si)
        if (bd.s.degen[q][i][phi[q][si]] != phi[q + 1][nd.s.degen[q][i][si]]) {
          r.fail("bar: degeneracies do not commute");
          break;
        }
  for (int q = 0; q <= q_max; ++q) r.stats["levels"].push_back(bd.s.level_size[q]);
  return r;
}

VerifyReport verify_fixed_nerve(const CatGAction& act, const Subgroup& h, int q_max) {
  VerifyReport r;
  auto nd = nerve(act.cat, q_max);
  auto sa = nerve_action(nd, act);
  auto fx = fixed_category(act, h);
  auto ndf = nerve(fx.cat, q_max);

  for (int q = 0; q <= q_max; ++q) {
    std::vector<int> fixed;
    for (long si = 0; si < nd.s.level_size[q]; ++si) {
      bool ok = true;
      for (int g : h.members)
        if (sa.act[q][g][si] != si) { ok = false; break; }
      if (ok) fixed.push_back(static_cast<int>(si));
    }
    r.stats["fixed"].push_back(fixed.size());
    if (static_cast<long>(fixed.size()) != ndf.s.level_size[q]) {
      r.fail("fixed nerve: level sizes differ at q=" + std::to_string(q));
      return r;
    }
  }
  // the canonical map N(C^H) -> NC lands bijectively on the fixed part and
  // commutes with every face and degeneracy
  std::vector<std::vector<int>> emb(q_max + 1);
  for (int q = 0; q <= q_max; ++q) {
    emb[q].resize(ndf.s.level_size[q]);
    for (long si = 0; si < ndf.s.level_size[q]; ++si) {
      std::vector<int> parent;
      for (int v : ndf.strings[q][si])
        parent.push_back(q == 0 ? fx.obj_in_parent[v] : fx.mor_in_parent[v]);
      emb[q][si] = nd.string_index(q, parent);
      for (int g : h.members)
        if (sa.act[q][g][emb[q][si]] != emb[q][si]) r.fail("fixed nerve: image not fixed");
    }
    std::set<int> img(emb[q].begin(), emb[q].end());
    if (img.size() != emb[q].size()) r.fail("fixed nerve: embedding not injective");
  }
  for (int q = 1; q <= q_max && r.pass; ++q)
    for (int i = 0; i <= q; ++i)
      for (long si = 0; si < ndf.s.level_size[q]; ++si)
        if (nd.s.face[q][i][emb[q][si]] != emb[q - 1][ndf.s.face[q][i][si]])
          r.fail("fixed nerve: faces do not commute");
  for (int q = 0; q < q_max && r.pass; ++q)
    for (int i = 0; i <= q; ++i)
      for (long si = 0; si < ndf.s.level_size[q]; ++si)
        if (nd.s.degen[q][i][emb[q][si]] != emb[q + 1][ndf.s.degen[q][i][si]])
          r.fail("fixed nerve: degeneracies do not commute");
  return r;
}

OrbitCompareReport compare_orbit_nerve(const CatGAction& act, int q_max) {
  OrbitCompareReport rep;
  auto oc = orbit_category(act);
  rep.quotient_descended = oc.descended;
  auto ndq = nerve(oc.cat, q_max);
  auto nd = nerve(act.cat, q_max);
  auto sa = nerve_action(nd, act);
  const FiniteGroup& G = *act.group;
  for (int q = 0; q <= q_max; ++q) {
    rep.nerve_of_quotient.push_back(ndq.s.level_size[q]);
    std::vector<int> root(nd.s.level_size[q]);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (int g = 0; g < G.order; ++g)
      for (long si = 0; si < nd.s.level_size[q]; ++si) {
        int a = find(static_cast<int>(si)), b = find(sa.act[q][g][si]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    std::set<int> orbits;
    for (long si = 0; si < nd.s.level_size[q]; ++si) orbits.insert(find(static_cast<int>(si)));
    rep.quotient_of_nerve.push_back(static_cast<long>(orbits.size()));
    rep.equal.push_back(rep.nerve_of_quotient[q] == rep.quotient_of_nerve[q]);
  }
  return rep;
}

nlohmann::json OrbitCompareReport::to_json() const {
  nlohmann::json j;
  j["quotient_descended"] = quotient_descended;
  j["nerve_of_quotient"] = nerve_of_quotient;
  j["quotient_of_nerve"] = quotient_of_nerve;
  std::vector<int> eq(equal.begin(), equal.end());
  j["equal"] = eq;
  return j;
}

VerifyReport verify_chaotic_contraction(int x_size, int q_max) {
  VerifyReport r;
  if (x_size < 1) {
    r.fail("contraction needs a nonempty set");
    return r;
  }
  const int base = 0;  // basepoint
  auto nd = nerve(chaotic(x_size), q_max + 1);
  const auto& s = nd.s;

  // tuple (x0..xq) of a string [f1..fq], f_i = (x_{i-1}, x_i)
  auto tuple_of = [&](int q, long si) {
    const auto& str = nd.strings[q][si];
    std::vector<int> t;
    if (q == 0) return std::vector<int>{str[0]};
    t.push_back(str[0] / x_size);
    for (int i = 0; i < q; ++i) t.push_back(str[i] % x_size);
    return t;
  };
  auto index_of_tuple = [&](int q, const std::vector<int>& t) {
    std::vector<int> str;
    if (q == 0) {
      str = {t[0]};
    } else {
      for (int i = 0; i < q; ++i) str.push_back(t[i] * x_size + t[i + 1]);
    }
    return nd.string_index(q, str);
  };

  // h_q appends the basepoint
  std::vector<std::vector<int>> h(q_max + 1);
  for (int q = 0; q <= q_max; ++q) {
    h[q].resize(s.level_size[q]);
    for (long si = 0; si < s.level_size[q]; ++si) {
      auto t = tuple_of(q, si);
      t.push_back(base);
      h[q][si] = index_of_tuple(q + 1, t);
    }
  }

  for (int q = 0; q <= q_max && r.pass; ++q)
    for (long si = 0; si < s.level_size[q]; ++si) {
      if (s.face[q + 1][q + 1][h[q][si]] != si) r.fail("contraction: d_{q+1} h != id");
      // iterated front face lands on the basepoint
      int cur = h[q][si];
      for (int k = q + 1; k >= 1; --k) cur = s.face[k][0][cur];
      if (tuple_of(0, cur)[0] != base) r.fail("contraction: front faces miss basepoint");
    }
  for (int q = 1; q <= q_max && r.pass; ++q)
    for (int i = 0; i <= q; ++i)
      for (long si = 0; si < s.level_size[q]; ++si)
        if (s.face[q + 1][i][h[q][si]] != h[q - 1][s.face[q][i][si]])
          r.fail("contraction: d_i h != h d_i");
  for (int q = 0; q + 1 <= q_max && r.pass; ++q)
    for (int i = 0; i <= q; ++i)
      for (long si = 0; si < s.level_size[q]; ++si)
        if (s.degen[q + 1][i][h[q][si]] != h[q + 1][s.degen[q][i][si]])
          r.fail("contraction: s_i h != h s_i");
  for (int q = 0; q + 1 <= q_max && r.pass; ++q)
    for (long si = 0; si < s.level_size[q]; ++si)
      if (h[q + 1][h[q][si]] != s.degen[q + 1][q + 1][h[q][si]])
        r.fail("contraction: h h != s_{q+1} h");

  if (pi0(s) != 1) r.fail("contraction: nerve not connected");
  r.stats["levels"] = s.level_size;
  return r;
}

int pi0(const TruncSimplicialSet& s) {
  if (s.q_max < 1) throw std::invalid_argument("pi0 needs q_max >= 1");
  std::vector<int> root(s.level_size[0]);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (long e = 0; e < s.level_size[1]; ++e) {
    int a = find(s.face[1][0][e]), b = find(s.face[1][1][e]);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::set<int> roots;
  for (long x = 0; x < s.level_size[0]; ++x) roots.insert(find(static_cast<int>(x)));
  return static_cast<int>(roots.size());
}

FinCatPtr product_category(FinCatPtr a, FinCatPtr b) {
  const FinCat& A = *a;
  const FinCat& B = *b;
  FinCat c;
  c.n_obj = A.n_obj * B.n_obj;
  const int nm = A.n_mor() * B.n_mor();
  auto obj = [&](int x, int y) { return x * B.n_obj + y; };
  auto mor = [&](int f, int g) { return f * B.n_mor() + g; };
  c.src.resize(nm);
  c.tgt.resize(nm);
  for (int f = 0; f < A.n_mor(); ++f)
    for (int g = 0; g < B.n_mor(); ++g) {
      c.src[mor(f, g)] = obj(A.src[f], B.src[g]);
      c.tgt[mor(f, g)] = obj(A.tgt[f], B.tgt[g]);
    }
  c.idm.resize(c.n_obj);
  for (int x = 0; x < A.n_obj; ++x)
    for (int y = 0; y < B.n_obj; ++y) c.idm[obj(x, y)] = mor(A.idm[x], B.idm[y]);
  c.comp.assign(static_cast<size_t>(nm) * nm, -1);
  for (int f = 0; f < A.n_mor(); ++f)
    for (int g = 0; g < B.n_mor(); ++g)
      for (int f2 = 0; f2 < A.n_mor(); ++f2)
        for (int g2 = 0; g2 < B.n_mor(); ++g2) {
          int cf = A.compose(f, f2), cg = B.compose(g, g2);
          if (cf >= 0 && cg >= 0)
            c.comp[static_cast<size_t>(mor(f, g)) * nm + mor(f2, g2)] = mor(cf, cg);
        }
  return make_fincat(std::move(c));
}

}  // namespace equicat
