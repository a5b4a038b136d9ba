#include "equicat/skew.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace equicat {

bool FiniteRing::is_unit(int a) const {
  for (int b = 0; b < size; ++b)
    if (times(a, b) == one && times(b, a) == one) return true;
  return false;
}

void FiniteRing::validate() const {
  if (size <= 0) throw std::runtime_error("ring: empty");
  if (static_cast<int>(add.size()) != size * size || static_cast<int>(mul.size()) != size * size)
    throw std::runtime_error("ring: table sizes");
  for (int v : add)
    if (v < 0 || v >= size) throw std::runtime_error("ring: add range");
  for (int v : mul)
    if (v < 0 || v >= size) throw std::runtime_error("ring: mul range");
  for (int a = 0; a < size; ++a) {
    if (plus(zero, a) != a || plus(a, zero) != a) throw std::runtime_error("ring: zero");
    if (times(one, a) != a || times(a, one) != a) throw std::runtime_error("ring: one");
    if (plus(a, neg[a]) != zero) throw std::runtime_error("ring: negation");
    for (int b = 0; b < size; ++b) {
      if (plus(a, b) != plus(b, a)) throw std::runtime_error("ring: addition not commutative");
      for (int c = 0; c < size; ++c) {
        if (plus(plus(a, b), c) != plus(a, plus(b, c)))
          throw std::runtime_error("ring: addition not associative");
        if (times(times(a, b), c) != times(a, times(b, c)))
          throw std::runtime_error("ring: multiplication not associative");
        if (times(a, plus(b, c)) != plus(times(a, b), times(a, c)))
          throw std::runtime_error("ring: left distributivity");
        if (times(plus(a, b), c) != plus(times(a, c), times(b, c)))
          throw std::runtime_error("ring: right distributivity");
      }
    }
  }
}

RingPtr make_ring(FiniteRing r) {
  r.validate();
  return std::make_shared<const FiniteRing>(std::move(r));
}

void GRing::validate() const {
  if (!ring || !group) throw std::runtime_error("G-ring: missing data");
  if (static_cast<int>(act.size()) != group->order) throw std::runtime_error("G-ring: size");
  const FiniteRing& R = *ring;
  for (int g = 0; g < group->order; ++g) {
    std::vector<char> seen(R.size, 0);
    for (int r : act[g]) {
      if (r < 0 || r >= R.size || seen[r]) throw std::runtime_error("G-ring: not a permutation");
      seen[r] = 1;
    }
    if (act[g][R.zero] != R.zero || act[g][R.one] != R.one)
      throw std::runtime_error("G-ring: units not preserved");
    for (int a = 0; a < R.size; ++a)
      for (int b = 0; b < R.size; ++b) {
        if (act[g][R.plus(a, b)] != R.plus(act[g][a], act[g][b]))
          throw std::runtime_error("G-ring: addition not preserved");
        if (act[g][R.times(a, b)] != R.times(act[g][a], act[g][b]))
          throw std::runtime_error("G-ring: multiplication not preserved");
      }
  }
  for (int r = 0; r < R.size; ++r)
    if (act[group->identity][r] != r) throw std::runtime_error("G-ring: identity acts");
  for (int g = 0; g < group->order; ++g)
    for (int h = 0; h < group->order; ++h)
      for (int r = 0; r < R.size; ++r)
        if (act[group->mul(g, h)][r] != act[g][act[h][r]])
          throw std::runtime_error("G-ring: r^{gh} != (r^h)^g");
}

std::vector<int> GRing::fixed_subring() const {
  std::vector<int> out;
  for (int r = 0; r < ring->size; ++r) {
    bool fixed = true;
    for (int g = 0; g < group->order; ++g)
      if (act[g][r] != r) { fixed = false; break; }
    if (fixed) out.push_back(r);
  }
  return out;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// polynomials over F_p, little-endian coefficient vectors
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  // m monic of degree k
  const int k = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= k; --d) {
    int c = a[d] % p;
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) {
      int idx = d - k + i;
      a[idx] = ((a[idx] - c * m[i]) % p + p * p) % p;
    }
  }
  a.resize(k);
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

bool poly_divides(const std::vector<int>& d, std::vector<int> a, int p) {
  // d monic; reduce a modulo d and test zero
  auto r = poly_mod(std::move(a), d, p);
  for (int c : r)
    if (c % p != 0) return false;
  return true;
}

std::vector<int> decode_poly(int code, int p, int len) {
  std::vector<int> out(len);
  for (int i = 0; i < len; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

bool poly_irreducible(const std::vector<int>& m, int p) {
  const int k = static_cast<int>(m.size()) - 1;
  for (int deg = 1; 2 * deg <= k; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      auto d = decode_poly(low, p, deg + 1);
      d[deg] = 1;  // monic
      if (poly_divides(d, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

GRing galois_field(int p, int k) {
  if (!is_prime(p) || k < 1) throw std::invalid_argument("galois_field: need prime p, k >= 1");
  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw std::invalid_argument("galois_field: p^k must be at most 256");
  }
  // lexicographically least monic irreducible modulus x^k + ...
  std::vector<int> modulus;
  for (int low = 0; low < q; ++low) {
    auto m = decode_poly(low, p, k + 1);
    m[k] = 1;
    if (k == 1 || poly_irreducible(m, p)) {
      modulus = m;
      break;
    }
  }
  if (modulus.empty()) throw std::runtime_error("galois_field: no irreducible polynomial");

  FiniteRing R;
  R.size = static_cast<int>(q);
  R.char_p = p;
  R.deg = k;
  R.modulus = modulus;
  R.zero = 0;
  R.one = 1;
  R.add.resize(q * q);
  R.mul.resize(q * q);
  R.neg.resize(q);
  for (int a = 0; a < q; ++a) {
    auto pa = decode_poly(a, p, k);
    int na = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
      na += ((p - pa[i]) % p) * pw;
      pw *= p;
    }
    R.neg[a] = na;
    for (int b = 0; b < q; ++b) {
      auto pb = decode_poly(b, p, k);
      int s = 0;
      pw = 1;
      for (int i = 0; i < k; ++i) {
        s += ((pa[i] + pb[i]) % p) * pw;
        pw *= p;
      }
      R.add[a * q + b] = s;
      auto prod = poly_mod(poly_mul(pa, pb, p), modulus, p);
      int mcode = 0;
      pw = 1;
      for (int i = 0; i < k; ++i) {
        mcode += prod[i] * pw;
        pw *= p;
      }
      R.mul[a * q + b] = mcode;
    }
  }
  R.labels.resize(q);
  for (int a = 0; a < q; ++a) {
    auto pa = decode_poly(a, p, k);
    std::string s;
    for (int i = k - 1; i >= 0; --i) {
      if (pa[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || pa[i] > 1) s += std::to_string(pa[i]);
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    R.labels[a] = s.empty() ? "0" : s;
  }
  R.name = "F" + std::to_string(q);

  GRing out;
  out.ring = make_ring(std::move(R));
  out.group = make_named("C" + std::to_string(k));
  out.act.resize(k);
  // Frobenius x -> x^p generates the Galois group
  std::vector<int> frob(q);
  for (int a = 0; a < q; ++a) {
    int x = a;
    for (int i = 1; i < p; ++i) x = out.ring->times(x, a);
    frob[a] = x;
  }
  std::vector<int> cur(q);
  std::iota(cur.begin(), cur.end(), 0);
  for (int j = 0; j < k; ++j) {
    out.act[j] = cur;
    for (int a = 0; a < q; ++a) cur[a] = frob[cur[a]];
  }
  out.validate();
  return out;
}

GRing restrict_gring(const GRing& r, const Subgroup& h) {
  if (!same_group(*h.parent, *r.group))
    throw std::invalid_argument("restrict_gring: H is not a subgroup of the acting group");
  GRing out;
  out.ring = r.ring;
  out.group = subgroup_as_group(h);
  out.act.resize(h.order());
  for (int i = 0; i < h.order(); ++i) out.act[i] = r.act[h.members[i]];
  out.validate();
  return out;
}

RMatrix mat_identity(const FiniteRing& r, int n) {
  RMatrix m(static_cast<size_t>(n) * n, r.zero);
  for (int i = 0; i < n; ++i) m[i * n + i] = r.one;
  return m;
}

RMatrix mat_mul(const FiniteRing& r, int n, const RMatrix& a, const RMatrix& b) {
  RMatrix out(static_cast<size_t>(n) * n, r.zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = r.zero;
      for (int k = 0; k < n; ++k) s = r.plus(s, r.times(a[i * n + k], b[k * n + j]));
      out[i * n + j] = s;
    }
  return out;
}

RMatrix mat_twist(const GRing& r, int g, const RMatrix& a) {
  RMatrix out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = r.twist(g, a[i]);
  return out;
}

int mat_det(const FiniteRing& r, int n, const RMatrix& a) {
  // permutation expansion; n stays tiny
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int det = r.zero;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    int term = r.one;
    for (int i = 0; i < n; ++i) term = r.times(term, a[i * n + perm[i]]);
    if (inversions % 2) term = r.neg[term];
    det = r.plus(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<int> mat_apply(const FiniteRing& r, int n, const RMatrix& a,
                           const std::vector<int>& v) {
  std::vector<int> out(n, r.zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] = r.plus(out[i], r.times(a[i * n + j], v[j]));
  return out;
}

int MatrixGroupGL::index_of(const RMatrix& m) const {
  auto it = std::lower_bound(mats.begin(), mats.end(), m);
  if (it == mats.end() || *it != m) throw std::runtime_error("matrix not in GL");
  return static_cast<int>(it - mats.begin());
}

MatrixGroupGL gl(int n, const GRing& r, long bound) {
  r.validate();
  const FiniteRing& R = *r.ring;
  MatrixGroupGL out;
  out.n = n;
  out.base = r;

  long cells = 1;
  for (int i = 0; i < n * n; ++i) {
    cells *= R.size;
    if (cells > 50000000L) throw std::runtime_error("gl: matrix space too large");
  }
  std::vector<char> unit(R.size, 0);
  for (int a = 0; a < R.size; ++a) unit[a] = R.is_unit(a) ? 1 : 0;

  for (long code = 0; code < cells; ++code) {
    RMatrix m(static_cast<size_t>(n) * n);
    long c = code;
    for (int i = 0; i < n * n; ++i) {
      m[i] = static_cast<int>(c % R.size);
      c /= R.size;
    }
    if (unit[mat_det(R, n, m)]) {
      out.mats.push_back(std::move(m));
      if (static_cast<long>(out.mats.size()) > bound)
        throw std::runtime_error("gl: group order bound exceeded");
    }
  }
  std::sort(out.mats.begin(), out.mats.end());

  std::map<RMatrix, int> index;
  for (size_t i = 0; i < out.mats.size(); ++i) index[out.mats[i]] = static_cast<int>(i);
  const int order = static_cast<int>(out.mats.size());
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      table[static_cast<size_t>(a) * order + b] =
          index.at(mat_mul(R, n, out.mats[a], out.mats[b]));
  std::vector<std::string> labels(order);
  for (int a = 0; a < order; ++a) {
    std::string s = "[";
    for (size_t i = 0; i < out.mats[a].size(); ++i)
      s += (i ? "," : "") + std::to_string(out.mats[a][i]);
    labels[a] = s + "]";
  }
  out.group =
      make_group(std::move(table), std::move(labels),
                 "GL" + std::to_string(n) + "(" + (R.name.empty() ? "R" : R.name) + ")");

  out.entry_action.actor = r.group;
  out.entry_action.target = out.group;
  out.entry_action.name = "entrywise";
  out.entry_action.act.resize(r.group->order);
  for (int g = 0; g < r.group->order; ++g) {
    out.entry_action.act[g].resize(order);
    for (int a = 0; a < order; ++a)
      out.entry_action.act[g][a] = index.at(mat_twist(r, g, out.mats[a]));
  }
  out.entry_action.validate();
  return out;
}

VerifyReport verify_gl_semidirect_action(const MatrixGroupGL& m) {
  VerifyReport r;
  auto gamma = semidirect(m.group, m.base.group, m.entry_action);
  const FiniteRing& R = *m.base.ring;
  // (tau, g) x = (g x) tau^{-1} is a left Gamma-action on the set GL(n, R)
  const int order = m.group->order;
  std::vector<std::vector<int>> act(gamma.gamma->order, std::vector<int>(order));
  for (int e = 0; e < gamma.gamma->order; ++e) {
    int tau = gamma.sigma_of(e), g = gamma.g_of(e);
    for (int x = 0; x < order; ++x)
      act[e][x] = m.group->mul(m.entry_action.act[g][x], m.group->inv[tau]);
  }
  for (int e1 = 0; e1 < gamma.gamma->order && r.pass; ++e1)
    for (int e2 = 0; e2 < gamma.gamma->order && r.pass; ++e2)
      for (int x = 0; x < order; ++x)
        if (act[gamma.gamma->mul(e1, e2)][x] != act[e1][act[e2][x]]) {
          r.fail("gl semidirect action axiom fails");
          break;
        }
  // twisted commutation g(x tau) = (g x)(g tau)
  for (int g = 0; g < m.base.group->order && r.pass; ++g)
    for (int x = 0; x < order && r.pass; ++x)
      for (int tau = 0; tau < order; ++tau) {
        RMatrix lhs = mat_twist(m.base, g, mat_mul(R, m.n, m.mats[x], m.mats[tau]));
        RMatrix rhs = mat_mul(R, m.n, mat_twist(m.base, g, m.mats[x]),
                              mat_twist(m.base, g, m.mats[tau]));
        if (lhs != rhs) {
          r.fail("gl twisted commutation fails");
          break;
        }
      }
  r.stats["gl_order"] = order;
  return r;
}

long SkewGroupRing::element_count() const {
  long c = 1;
  for (int g = 0; g < base.group->order; ++g) c *= base.ring->size;
  return c;
}

std::vector<int> SkewGroupRing::multiply(const std::vector<int>& a,
                                         const std::vector<int>& b) const {
  const FiniteRing& R = *base.ring;
  const FiniteGroup& G = *base.group;
  std::vector<int> out(G.order, R.zero);
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < G.order; ++h) {
      // (r g)(s h) = r s^g gh
      int coeff = R.times(a[g], base.twist(g, b[h]));
      int at = G.mul(g, h);
      out[at] = R.plus(out[at], coeff);
    }
  return out;
}

std::vector<int> SkewGroupRing::sum(const std::vector<int>& a, const std::vector<int>& b) const {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = base.ring->plus(a[i], b[i]);
  return out;
}

long SkewGroupRing::encode(const std::vector<int>& coeffs) const {
  long code = 0, p = 1;
  for (int g = 0; g < base.group->order; ++g) {
    code += coeffs[g] * p;
    p *= base.ring->size;
  }
  return code;
}

std::vector<int> SkewGroupRing::decode(long code) const {
  std::vector<int> out(base.group->order);
  for (int g = 0; g < base.group->order; ++g) {
    out[g] = static_cast<int>(code % base.ring->size);
    code /= base.ring->size;
  }
  return out;
}

SkewGroupRing skew_group_ring(const GRing& r, long materialize_bound) {
  r.validate();
  SkewGroupRing out;
  out.base = r;
  if (out.element_count() <= materialize_bound) {
    const long m = out.element_count();
    FiniteRing ring;
    ring.size = static_cast<int>(m);
    ring.add.resize(m * m);
    ring.mul.resize(m * m);
    ring.neg.resize(m);
    for (long a = 0; a < m; ++a) {
      auto ca = out.decode(a);
      std::vector<int> na(ca.size());
      for (size_t i = 0; i < ca.size(); ++i) na[i] = r.ring->neg[ca[i]];
      ring.neg[a] = static_cast<int>(out.encode(na));
      for (long b = 0; b < m; ++b) {
        auto cb = out.decode(b);
        ring.add[a * m + b] = static_cast<int>(out.encode(out.sum(ca, cb)));
        ring.mul[a * m + b] = static_cast<int>(out.encode(out.multiply(ca, cb)));
      }
    }
    std::vector<int> zero(r.group->order, r.ring->zero);
    ring.zero = static_cast<int>(out.encode(zero));
    std::vector<int> one = zero;
    one[r.group->identity] = r.ring->one;
    ring.one = static_cast<int>(out.encode(one));
    ring.name = (r.ring->name.empty() ? "R" : r.ring->name) + "[" +
                (r.group->name.empty() ? "G" : r.group->name) + "]";
    out.materialized = make_ring(std::move(ring));  // exhaustive axiom check
  }
  return out;
}

VerifyReport verify_skew_ring(const SkewGroupRing& s) {
  VerifyReport r;
  const FiniteRing& R = *s.base.ring;
  const FiniteGroup& G = *s.base.group;
  auto pure = [&](int coeff, int g) {
    std::vector<int> v(G.order, R.zero);
    v[g] = coeff;
    return v;
  };
  // g r = r^g g
  for (int g = 0; g < G.order && r.pass; ++g)
    for (int a = 0; a < R.size; ++a) {
      auto lhs = s.multiply(pure(R.one, g), pure(a, G.identity));
      auto rhs = s.multiply(pure(s.base.twist(g, a), G.identity), pure(R.one, g));
      if (lhs != rhs) {
        r.fail("skew ring: g r != r^g g");
        break;
      }
    }
  // R and k[G] embed multiplicatively
  for (int a = 0; a < R.size && r.pass; ++a)
    for (int b = 0; b < R.size; ++b) {
      auto prod = s.multiply(pure(a, G.identity), pure(b, G.identity));
      if (prod != pure(R.times(a, b), G.identity)) {
        r.fail("skew ring: R does not embed");
        break;
      }
    }
  for (int g = 0; g < G.order && r.pass; ++g)
    for (int h = 0; h < G.order; ++h) {
      auto prod = s.multiply(pure(R.one, g), pure(R.one, h));
      if (prod != pure(R.one, G.mul(g, h))) {
        r.fail("skew ring: k[G] does not embed");
        break;
      }
    }
  if (s.materialized) {
    r.stats["materialized"] = true;  // make_ring already ran the full axiom check
    r.stats["size"] = s.materialized->size;
  } else {
    // associativity and distributivity sampled on the spanning pure elements
    for (int a = 0; a < R.size && r.pass; ++a)
      for (int g = 0; g < G.order && r.pass; ++g)
        for (int b = 0; b < R.size && r.pass; ++b)
          for (int h = 0; h < G.order && r.pass; ++h)
            for (int c = 0; c < R.size; ++c)
              for (int k = 0; k < G.order; ++k) {
                auto x = pure(a, g), y = pure(b, h), z = pure(c, k);
                if (s.multiply(s.multiply(x, y), z) != s.multiply(x, s.multiply(y, z))) {
                  r.fail("skew ring: associativity fails on pure elements");
                  break;
                }
                if (s.multiply(x, s.sum(y, z)) != s.sum(s.multiply(x, y), s.multiply(x, z))) {
                  r.fail("skew ring: distributivity fails on pure elements");
                  break;
                }
              }
    r.stats["materialized"] = false;
  }
  return r;
}

std::vector<int> SkewModule::apply(int g, const std::vector<int>& v) const {
  const FiniteRing& R = *base.ring;
  std::vector<int> tw(v.size());
  for (size_t i = 0; i < v.size(); ++i) tw[i] = base.twist(g, v[i]);
  return mat_apply(R, rank, mats[g], tw);
}

void SkewModule::validate(long exhaustive_bound) const {
  base.validate();
  const FiniteRing& R = *base.ring;
  const FiniteGroup& G = *base.group;
  if (static_cast<int>(mats.size()) != G.order) throw std::runtime_error("skew module: size");
  if (mats[G.identity] != mat_identity(R, rank))
    throw std::runtime_error("skew module: identity must act as the identity");
  for (int g = 0; g < G.order; ++g)
    if (!R.is_unit(mat_det(R, rank, mats[g])))
      throw std::runtime_error("skew module: action matrix not invertible");
  // (gh) e_i = g (h e_i) on the basis
  for (int g = 0; g < G.order; ++g)
    for (int h = 0; h < G.order; ++h) {
      RMatrix lhs = mats[G.mul(g, h)];
      RMatrix rhs = mat_mul(R, rank, mats[g], mat_twist(base, g, mats[h]));
      if (lhs != rhs) throw std::runtime_error("skew module: action axiom fails");
    }
  // semilinearity g(r m) = r^g (g m), exhaustively when the module is small
  long points = 1;
  for (int i = 0; i < rank; ++i) {
    points *= R.size;
    if (points > exhaustive_bound) return;
  }
  std::vector<int> v(rank);
  for (long code = 0; code < points; ++code) {
    long c = code;
    for (int i = 0; i < rank; ++i) {
      v[i] = static_cast<int>(c % R.size);
      c /= R.size;
    }
    for (int g = 0; g < G.order; ++g) {
      auto gv = apply(g, v);
      for (int s = 0; s < R.size; ++s) {
        std::vector<int> sv(rank);
        for (int i = 0; i < rank; ++i) sv[i] = R.times(s, v[i]);
        auto lhs = apply(g, sv);
        std::vector<int> rhs(rank);
        for (int i = 0; i < rank; ++i) rhs[i] = R.times(base.twist(g, s), gv[i]);
        if (lhs != rhs) throw std::runtime_error("skew module: semilinearity fails");
      }
      // additivity
      for (long code2 = 0; code2 < points; code2 += std::max(1L, points / 16)) {
        std::vector<int> w(rank);
        long c2 = code2;
        for (int i = 0; i < rank; ++i) {
          w[i] = static_cast<int>(c2 % R.size);
          c2 /= R.size;
        }
        std::vector<int> vw(rank);
        for (int i = 0; i < rank; ++i) vw[i] = R.plus(v[i], w[i]);
        auto lhs = apply(g, vw);
        auto gw = apply(g, w);
        for (int i = 0; i < rank; ++i)
          if (lhs[i] != R.plus(gv[i], gw[i]))
            throw std::runtime_error("skew module: additivity fails");
      }
    }
  }
}

SkewModule module_from_crossed(const MatrixGroupGL& glr, const CrossedHom& rho) {
  rho.validate();
  if (!same_group(*rho.target, *glr.group) || rho.action.act != glr.entry_action.act)
    throw std::invalid_argument("module_from_crossed: wrong GL context");
  SkewModule m;
  m.rank = glr.n;
  if (rho.source.order() == rho.source.parent->order && same_group(*rho.source.parent, *glr.base.group)) {
    m.base = glr.base;
    m.mats.resize(glr.base.group->order);
    for (int g = 0; g < glr.base.group->order; ++g) m.mats[g] = glr.mats[rho.val[g]];
  } else {
    m.base = restrict_gring(glr.base, rho.source);
    m.mats.resize(rho.source.order());
    for (int i = 0; i < rho.source.order(); ++i)
      m.mats[i] = glr.mats[rho.val[rho.source.members[i]]];
  }
  m.validate();
  return m;
}

CrossedHom crossed_from_module(const MatrixGroupGL& glr, const SkewModule& m) {
  if (m.rank != glr.n) throw std::invalid_argument("crossed_from_module: rank mismatch");
  if (!same_group(*m.base.group, *glr.base.group))
    throw std::invalid_argument("crossed_from_module: group mismatch");
  CrossedHom rho;
  rho.source = full_subgroup(m.base.group);
  rho.target = glr.group;
  rho.action = glr.entry_action;
  rho.val.resize(m.base.group->order);
  for (int g = 0; g < m.base.group->order; ++g) rho.val[g] = glr.index_of(m.mats[g]);
  rho.validate();  // the action axiom is exactly the crossed relation
  return rho;
}

std::vector<SkewModule> enumerate_skew_structures(const MatrixGroupGL& glr, long bound) {
  const GroupPtr& g = glr.base.group;
  const FiniteRing& R = *glr.base.ring;
  const int order = g->order;
  std::vector<int> nonid;
  for (int x = 0; x < order; ++x)
    if (x != g->identity) nonid.push_back(x);
  double space = std::pow(static_cast<double>(glr.group->order), nonid.size());
  if (space > static_cast<double>(bound))
    throw std::runtime_error("enumerate_skew_structures: bound exceeded");

  std::vector<SkewModule> out;
  std::vector<int> choice(nonid.size(), 0);
  while (true) {
    std::vector<RMatrix> mats(order);
    mats[g->identity] = mat_identity(R, glr.n);
    for (size_t i = 0; i < nonid.size(); ++i) mats[nonid[i]] = glr.mats[choice[i]];
    bool ok = true;
    for (int a = 0; a < order && ok; ++a)
      for (int b = 0; b < order && ok; ++b)
        if (mats[g->mul(a, b)] != mat_mul(R, glr.n, mats[a], mat_twist(glr.base, a, mats[b])))
          ok = false;
    if (ok) {
      SkewModule m;
      m.base = glr.base;
      m.rank = glr.n;
      m.mats = std::move(mats);
      m.validate();
      out.push_back(std::move(m));
    }
    int d = static_cast<int>(choice.size()) - 1;
    while (d >= 0 && choice[d] == glr.group->order - 1) choice[d--] = 0;
    if (d < 0) break;
    ++choice[d];
  }
  return out;
}

std::vector<int> module_isomorphisms(const MatrixGroupGL& glr, const SkewModule& m,
                                     const SkewModule& n) {
  const FiniteRing& R = *glr.base.ring;
  std::vector<int> out;
  for (int phi = 0; phi < glr.group->order; ++phi) {
    bool ok = true;
    for (int g = 0; g < glr.base.group->order && ok; ++g) {
      // phi(g . v) = g . phi(v): rho_n(g) (g . Phi) = Phi rho_m(g)
      RMatrix lhs = mat_mul(R, glr.n, n.mats[g], mat_twist(glr.base, g, glr.mats[phi]));
      RMatrix rhs = mat_mul(R, glr.n, glr.mats[phi], m.mats[g]);
      if (lhs != rhs) ok = false;
    }
    if (ok) out.push_back(phi);
  }
  return out;
}

SkewModule perm_skew(const GSet& a, const GRing& r) {
  a.validate();
  if (!same_group(*a.group, *r.group))
    throw std::invalid_argument("perm_skew: G-set and G-ring have different groups");
  SkewModule m;
  m.base = r;
  m.rank = a.size;
  m.mats.resize(r.group->order);
  const FiniteRing& R = *r.ring;
  for (int g = 0; g < r.group->order; ++g) {
    RMatrix p(static_cast<size_t>(a.size) * a.size, R.zero);
    for (int x = 0; x < a.size; ++x) p[a.apply(g, x) * a.size + x] = R.one;
    m.mats[g] = std::move(p);
  }
  m.validate();
  return m;
}

nlohmann::json Hilbert90Report::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  if (!detail.empty()) j["detail"] = detail;
  j["crossed_hom_count"] = crossed_count;
  j["class_count"] = class_count;
  j["aut_order"] = aut_order;
  j["gl_fixed_order"] = gl_fixed_order;
  j["gl_base_order"] = gl_base_order;
  return j;
}

Hilbert90Report hilbert90(int p, int k, int n) {
  Hilbert90Report rep;
  auto K = galois_field(p, k);
  auto GLK = gl(n, K);
  auto table = h1(K.group, GLK.group, GLK.entry_action, full_subgroup(K.group));
  rep.crossed_count = static_cast<int>(table.all.size());
  rep.class_count = static_cast<int>(table.classes.size());
  rep.aut_order = table.classes[table.basepoint_class].aut.order();
  if (rep.class_count != 1) {
    rep.pass = false;
    rep.detail = "H1 is not trivial";
  }
  // GL(n, K)^G = GL(n, k), with the base order computed independently
  int fixed = 0;
  for (int a = 0; a < GLK.group->order; ++a) {
    bool ok = true;
    for (int g = 0; g < K.group->order; ++g)
      if (GLK.entry_action.act[g][a] != a) { ok = false; break; }
    if (ok) ++fixed;
  }
  rep.gl_fixed_order = fixed;
  rep.gl_base_order = gl(n, galois_field(p, 1)).group->order;
  if (rep.aut_order != rep.gl_base_order || rep.gl_fixed_order != rep.gl_base_order) {
    rep.pass = false;
    if (rep.detail.empty()) rep.detail = "Aut(eps) is not GL(n, F_p)";
  }
  return rep;
}

VerifyReport verify_module_correspondence(int p, int k, int n) {
  VerifyReport r;
  auto K = galois_field(p, k);
  auto glr = gl(n, K);
  auto structures = enumerate_skew_structures(glr);
  auto homs = enumerate_crossed(full_subgroup(K.group), glr.group, glr.entry_action);
  r.stats["structures"] = structures.size();
  r.stats["crossed_homs"] = homs.size();
  if (structures.size() != homs.size()) {
    r.fail("module structure count != crossed hom count");
    return r;
  }
  // roundtrips both ways, elementwise
  std::set<std::vector<int>> hom_vals;
  for (auto& h : homs) hom_vals.insert(h.val);
  for (auto& m : structures) {
    auto rho = crossed_from_module(glr, m);
    if (!hom_vals.count(rho.val)) {
      r.fail("module maps to a crossed hom outside the enumeration");
      return r;
    }
    if (module_from_crossed(glr, rho).mats != m.mats) {
      r.fail("module roundtrip is not the identity");
      return r;
    }
  }
  for (auto& h : homs)
    if (crossed_from_module(glr, module_from_crossed(glr, h)).val != h.val) {
      r.fail("crossed hom roundtrip is not the identity");
      return r;
    }
  // isomorphisms correspond exactly
  for (auto& a : structures)
    for (auto& b : structures) {
      auto pa = crossed_from_module(glr, a);
      auto pb = crossed_from_module(glr, b);
      if (module_isomorphisms(glr, a, b) != iso_witnesses(pa, pb)) {
        r.fail("module isomorphisms differ from crossed witnesses");
        return r;
      }
    }
  // class partitions match
  auto table = h1(K.group, glr.group, glr.entry_action, full_subgroup(K.group));
  int module_classes = 0;
  std::vector<char> seen(structures.size(), 0);
  for (size_t i = 0; i < structures.size(); ++i) {
    if (seen[i]) continue;
    ++module_classes;
    for (size_t j = i; j < structures.size(); ++j)
      if (!seen[j] && !module_isomorphisms(glr, structures[i], structures[j]).empty()) seen[j] = 1;
  }
  r.stats["classes"] = module_classes;
  if (module_classes != static_cast<int>(table.classes.size()))
    r.fail("module class count != H1 class count");
  return r;
}

namespace {

// disjoint unions of coset G-sets, one block per chosen subgroup class rep
GSet union_gset(GroupPtr g, const std::vector<Subgroup>& blocks) {
  GSet out;
  out.group = g;
  out.size = 0;
  std::vector<int> offsets;
  std::vector<std::vector<std::vector<int>>> blocks_act;
  for (const auto& h : blocks) {
    // left cosets xH as points
    const FiniteGroup& G = *g;
    std::vector<int> coset_of(G.order, -1);
    std::vector<int> reps;
    for (int x = 0; x < G.order; ++x) {
      if (coset_of[x] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int hh : h.members) coset_of[G.mul(x, hh)] = id;
    }
    std::vector<std::vector<int>> act(G.order, std::vector<int>(reps.size()));
    for (int a = 0; a < G.order; ++a)
      for (size_t c = 0; c < reps.size(); ++c) act[a][c] = coset_of[G.mul(a, reps[c])];
    offsets.push_back(out.size);
    blocks_act.push_back(std::move(act));
    out.size += static_cast<int>(reps.size());
  }
  out.act.assign(g->order, std::vector<int>(out.size));
  for (int a = 0; a < g->order; ++a)
    for (size_t b = 0; b < blocks_act.size(); ++b)
      for (size_t c = 0; c < blocks_act[b][a].size(); ++c)
        out.act[a][offsets[b] + c] = offsets[b] + blocks_act[b][a][c];
  out.validate();
  return out;
}

}  // namespace

EmbedResult embed_in_permutation(const SkewModule& m, int search_bound) {
  EmbedResult res;
  const GRing& r = m.base;
  const FiniteRing& R = *r.ring;
  const FiniteGroup& G = *r.group;

  // subgroup conjugacy class representatives, for the orbit types G/H
  auto subs = subgroups(r.group);
  std::vector<Subgroup> reps;
  std::set<std::vector<int>> seen;
  for (const auto& s : subs) {
    if (seen.count(s.members)) continue;
    for (int x = 0; x < G.order; ++x) {
      std::vector<int> conj;
      for (int a : s.members) conj.push_back(G.conj(x, a));
      std::sort(conj.begin(), conj.end());
      seen.insert(conj);
    }
    reps.push_back(s);
  }
  std::vector<int> orbit_sizes;
  for (const auto& s : reps) orbit_sizes.push_back(G.order / s.order());

  // enumerate multisets of orbit types in total-size order
  std::vector<std::vector<int>> multisets;  // counts per type
  std::function<void(int, int, std::vector<int>&)> rec = [&](int type, int left,
                                                             std::vector<int>& counts) {
    if (type == static_cast<int>(reps.size())) {
      bool any = false;
      for (int c : counts) any = any || c > 0;
      if (any) multisets.push_back(counts);
      return;
    }
    for (int c = 0; c * orbit_sizes[type] <= left; ++c) {
      counts[type] = c;
      rec(type + 1, left - c * orbit_sizes[type], counts);
    }
    counts[type] = 0;
  };
  std::vector<int> counts(reps.size(), 0);
  rec(0, search_bound, counts);
  std::sort(multisets.begin(), multisets.end(), [&](const auto& a, const auto& b) {
    long sa = 0, sb = 0;
    for (size_t i = 0; i < a.size(); ++i) sa += static_cast<long>(a[i]) * orbit_sizes[i];
    for (size_t i = 0; i < b.size(); ++i) sb += static_cast<long>(b[i]) * orbit_sizes[i];
    if (sa != sb) return sa < sb;
    return a < b;
  });

  for (const auto& ms : multisets) {
    std::vector<Subgroup> blocks;
    for (size_t i = 0; i < ms.size(); ++i)
      for (int c = 0; c < ms[i]; ++c) blocks.push_back(reps[i]);
    GSet aset = union_gset(r.group, blocks);
    auto target = perm_skew(aset, r);

    // search a semilinear monomorphism by backtracking over basis images
    const int na = aset.size;
    std::vector<std::vector<int>> cols(m.rank);  // image of e_i in R[A]
    auto equivariant_upto = [&](int upto) {
      // phi(g e_i) = g phi(e_i) for columns decided so far
      for (int g = 0; g < G.order; ++g)
        for (int i = 0; i <= upto; ++i) {
          // g . phi(e_i)
          std::vector<int> lhs(na, R.zero);
          for (int a = 0; a < na; ++a)
            lhs[aset.apply(g, a)] = r.twist(g, cols[i][a]);
          // phi(g e_i) = sum_j rho(g)[j][i] phi(e_j): needs all columns, so
          // only check when every column referenced is decided
          std::vector<int> rhs(na, R.zero);
          bool complete = true;
          for (int j = 0; j < m.rank; ++j) {
            int coeff = m.mats[g][j * m.rank + i];
            if (coeff == R.zero) continue;
            if (j > upto) { complete = false; break; }
            for (int a = 0; a < na; ++a)
              rhs[a] = R.plus(rhs[a], R.times(coeff, cols[j][a]));
          }
          if (complete && lhs != rhs) return false;
        }
      return true;
    };
    auto injective = [&]() {
      // no nonzero kernel vector, brute force over R^rank
      long points = 1;
      for (int i = 0; i < m.rank; ++i) points *= R.size;
      std::vector<int> v(m.rank);
      for (long code = 1; code < points; ++code) {
        long c = code;
        for (int i = 0; i < m.rank; ++i) {
          v[i] = static_cast<int>(c % R.size);
          c /= R.size;
        }
        std::vector<int> img(na, R.zero);
        for (int i = 0; i < m.rank; ++i)
          for (int a = 0; a < na; ++a) img[a] = R.plus(img[a], R.times(v[i], cols[i][a]));
        bool zero = true;
        for (int a = 0; a < na; ++a) zero = zero && img[a] == R.zero;
        if (zero) return false;
      }
      return true;
    };
    long col_space = 1;
    bool too_big = false;
    for (int a = 0; a < na; ++a) {
      col_space *= R.size;
      if (col_space > 2000000L) { too_big = true; break; }
    }
    if (too_big) continue;

    std::function<bool(int)> assign = [&](int i) -> bool {
      if (i == m.rank) return injective();
      cols[i].assign(na, R.zero);
      for (long code = 0; code < col_space; ++code) {
        long c = code;
        for (int a = 0; a < na; ++a) {
          cols[i][a] = static_cast<int>(c % R.size);
          c /= R.size;
        }
        if (equivariant_upto(i) && assign(i + 1)) return true;
      }
      return false;
    };
    if (assign(0)) {
      res.found = true;
      res.gset = aset;
      res.min_gset_size = na;
      res.matrix.assign(static_cast<size_t>(na) * m.rank, R.zero);
      for (int i = 0; i < m.rank; ++i)
        for (int a = 0; a < na; ++a) res.matrix[a * m.rank + i] = cols[i][a];
      return res;
    }
  }
  return res;
}

}  // namespace equicat
