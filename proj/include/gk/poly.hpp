#pragma once
// Dense univariate polynomials over a field, plus the factorization pieces
// needed for splitting commutative semisimple algebras: squarefree parts,
// distinct-degree / equal-degree splitting over F_p, rational root hunting
// over Q. Coefficients are stored low degree first.
#include <algorithm>
#include <random>
#include <vector>

#include "gk/field.hpp"

namespace gk {

template <class F>
struct Poly {
  F k;
  std::vector<typename F::elem> c;  // c[i] coeff of x^i; normalized (no top zeros)

  explicit Poly(F k_) : k(k_) {}
  Poly(F k_, std::vector<typename F::elem> c_) : k(k_), c(std::move(c_)) { normalize(); }

  void normalize() {
    while (!c.empty() && k.is_zero(c.back())) c.pop_back();
  }
  int deg() const { return (int)c.size() - 1; }  // deg(0) = -1
  bool is_zero_poly() const { return c.empty(); }
  typename F::elem lead() const { return c.back(); }
};

template <class F>
Poly<F> poly_const(F k, typename F::elem v) {
  return Poly<F>(k, {v});
}

template <class F>
Poly<F> poly_x(F k) {
  return Poly<F>(k, {k.zero(), k.one()});
}

template <class F>
bool poly_eq(const Poly<F>& a, const Poly<F>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!a.k.eq(a.c[i], b.c[i])) return false;
  return true;
}

template <class F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(a.k);
  r.c.resize(std::max(a.c.size(), b.c.size()), a.k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = a.k.add(r.c[i], b.c[i]);
  r.normalize();
  return r;
}

template <class F>
Poly<F> poly_sub(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(a.k);
  r.c.resize(std::max(a.c.size(), b.c.size()), a.k.zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = a.k.sub(r.c[i], b.c[i]);
  r.normalize();
  return r;
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(a.k);
  if (a.is_zero_poly() || b.is_zero_poly()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, a.k.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = a.k.add(r.c[i + j], a.k.mul(a.c[i], b.c[j]));
  r.normalize();
  return r;
}

template <class F>
Poly<F> poly_scale(const typename F::elem& s, const Poly<F>& a) {
  Poly<F> r(a.k);
  r.c.resize(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.k.mul(s, a.c[i]);
  r.normalize();
  return r;
}

template <class F>
Poly<F> poly_monic(const Poly<F>& a) {
  if (a.is_zero_poly()) return a;
  return poly_scale(a.k.inv(a.lead()), a);
}

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero_poly()) throw std::domain_error("poly division by zero");
  Poly<F> q(a.k), r = a;
  if (a.deg() < b.deg()) return {q, r};
  q.c.assign(a.deg() - b.deg() + 1, a.k.zero());
  auto linv = a.k.inv(b.lead());
  while (!r.is_zero_poly() && r.deg() >= b.deg()) {
    int shift = r.deg() - b.deg();
    auto coef = a.k.mul(r.lead(), linv);
    q.c[shift] = a.k.add(q.c[shift], coef);
    for (int i = 0; i <= b.deg(); ++i)
      r.c[i + shift] = a.k.sub(r.c[i + shift], a.k.mul(coef, b.c[i]));
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) { return poly_divmod(a, b).second; }

template <class F>
Poly<F> poly_div(const Poly<F>& a, const Poly<F>& b) { return poly_divmod(a, b).first; }

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero_poly()) {
    auto r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.is_zero_poly() ? a : poly_monic(a);
}

// extended gcd: returns (g, u, v) with u a + v b = g (g monic or zero)
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(Poly<F> a, Poly<F> b) {
  Poly<F> u0 = poly_const(a.k, a.k.one()), v0(a.k);
  Poly<F> u1(a.k), v1 = poly_const(a.k, a.k.one());
  while (!b.is_zero_poly()) {
    auto [q, r] = poly_divmod(a, b);
    a = b; b = r;
    auto u2 = poly_sub(u0, poly_mul(q, u1));
    auto v2 = poly_sub(v0, poly_mul(q, v1));
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (!a.is_zero_poly()) {
    auto linv = a.k.inv(a.lead());
    auto s = poly_const(a.k, linv);
    return {poly_scale(linv, a), poly_mul(s, u0), poly_mul(s, v0)};
  }
  return {a, u0, v0};
}

template <class F>
typename F::elem poly_eval(const Poly<F>& a, const typename F::elem& x) {
  auto r = a.k.zero();
  for (int i = a.deg(); i >= 0; --i) r = a.k.add(a.k.mul(r, x), a.c[i]);
  return r;
}

template <class F>
Poly<F> poly_derivative(const Poly<F>& a) {
  Poly<F> r(a.k);
  if (a.deg() < 1) return r;
  r.c.resize(a.deg());
  for (int i = 1; i <= a.deg(); ++i) r.c[i - 1] = a.k.mul(a.k.from_int(i), a.c[i]);
  r.normalize();
  return r;
}

// x^e mod f, by square and multiply (e given as bigint for x^(p^d) uses).
template <class F>
Poly<F> poly_xpow_mod(bigint e, const Poly<F>& f) {
  Poly<F> base = poly_mod(poly_x(f.k), f);
  Poly<F> acc = poly_mod(poly_const(f.k, f.k.one()), f);
  while (e > 0) {
    if ((e & 1) != 0) acc = poly_mod(poly_mul(acc, base), f);
    base = poly_mod(poly_mul(base, base), f);
    e >>= 1;
  }
  return acc;
}

template <class F>
Poly<F> poly_pow_mod(Poly<F> base, bigint e, const Poly<F>& f) {
  base = poly_mod(base, f);
  Poly<F> acc = poly_mod(poly_const(f.k, f.k.one()), f);
  while (e > 0) {
    if ((e & 1) != 0) acc = poly_mod(poly_mul(acc, base), f);
    base = poly_mod(poly_mul(base, base), f);
    e >>= 1;
  }
  return acc;
}

// --- factor-structure helpers over F_p ---

// all roots in F_p of a squarefree polynomial (its linear-factor part)
inline std::vector<std::int64_t> fp_roots(Poly<Fp> f) {
  const Fp k = f.k;
  std::vector<std::int64_t> roots;
  if (f.deg() < 1) return roots;
  // linear-factor part: gcd(f, x^p - x)
  auto xp = poly_xpow_mod<Fp>(bigint(k.p), f);
  auto lin = poly_gcd(poly_sub(xp, poly_x(k)), f);
  if (poly_eval(lin, k.zero()) == 0) {
    roots.push_back(0);
    lin = poly_div(lin, Poly<Fp>(k, {k.zero(), k.one()}));
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);  // fixed seed: deterministic output
  // split the product of distinct linear factors
  std::vector<Poly<Fp>> stack = {lin};
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    if (g.deg() <= 0) continue;
    if (g.deg() == 1) {
      // x + c -> root -c (monic after gcd)
      roots.push_back(k.sub(k.zero(), poly_eval(g, k.zero())));
      continue;
    }
    if (k.p == 2) {
      // roots are among {0,1}; 0 was handled
      if (poly_eval(g, k.one()) == 0) roots.push_back(1);
      continue;
    }
    // Cantor-Zassenhaus for odd p, degree-1 factors
    std::uniform_int_distribution<std::int64_t> d(0, k.p - 1);
    for (;;) {
      auto a = d(rng);
      Poly<Fp> shifted(k, {a, k.one()});  // x + a
      auto h = poly_pow_mod(shifted, (bigint(k.p) - 1) / 2, g);
      h = poly_sub(h, poly_const(k, k.one()));
      auto gc = poly_gcd(h, g);
      if (gc.deg() > 0 && gc.deg() < g.deg()) {
        stack.push_back(gc);
        stack.push_back(poly_div(g, gc));
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// rational roots of a polynomial over Q (monic up to scaling)
inline std::vector<bigrat> qq_roots(const Poly<QQ>& f) {
  std::vector<bigrat> roots;
  if (f.deg() < 1) return roots;
  // clear denominators
  bigint l = 1;
  for (auto& c : f.c) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  std::vector<bigint> z(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i)
    z[i] = boost::multiprecision::numerator(bigrat(f.c[i] * l));
  // strip x^k
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(bigrat(0));
  if (low >= z.size() - 1) return roots;
  bigint a0 = boost::multiprecision::abs(z[low]);
  bigint an = boost::multiprecision::abs(z.back());
  auto divisors = [](bigint n) {
    std::vector<bigint> ds;
    if (n == 0) return ds;
    // trial division; fine at desk scale, capped for safety
    std::vector<std::pair<bigint, int>> fac;
    bigint m = n;
    for (bigint d = 2; d * d <= m && d < 2000000; ++d)
      if (m % d == 0) {
        int e = 0;
        while (m % d == 0) { m /= d; ++e; }
        fac.push_back({d, e});
      }
    if (m > 1) fac.push_back({m, 1});
    ds.push_back(1);
    for (auto& [p, e] : fac) {
      size_t old = ds.size();
      bigint pw = 1;
      for (int i = 1; i <= e; ++i) {
        pw *= p;
        for (size_t j = 0; j < old; ++j) ds.push_back(ds[j] * pw);
      }
      if (ds.size() > 4096) break;  // cap: enough for fixture scale
    }
    return ds;
  };
  auto us = divisors(a0), vs = divisors(an);
  for (auto& u : us)
    for (auto& v : vs)
      for (int sgn : {1, -1}) {
        bigrat cand(sgn * u, v);
        if (poly_eval(f, cand) == 0) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Coprime factor groups of f: pairwise coprime g_i, each a power of a single
// irreducible (or, over Q, one possibly composite rootless remainder), with
// product f. Used for CRT idempotent splitting; two or more groups = a split.
template <class F>
std::vector<Poly<F>> coprime_factor_groups(const Poly<F>& f);

inline std::vector<Poly<Fp>> coprime_groups_from_roots(Poly<Fp> f,
                                                       const std::vector<std::int64_t>& roots) {
  const Fp k = f.k;
  std::vector<Poly<Fp>> groups;
  for (auto r : roots) {
    Poly<Fp> lin(k, {k.neg(r), k.one()});
    Poly<Fp> grp = poly_const(k, k.one());
    for (;;) {
      auto [q, rem] = poly_divmod(f, lin);
      if (!rem.is_zero_poly()) break;
      f = q;
      grp = poly_mul(grp, lin);
    }
    if (grp.deg() > 0) groups.push_back(grp);
  }
  if (f.deg() > 0) groups.push_back(poly_monic(f));  // rootless remainder
  return groups;
}

// Over F_p: all irreducible factors found (rootless remainder is further split
// by distinct-degree + Cantor-Zassenhaus so even non-linear splits are usable).
inline std::vector<Poly<Fp>> fp_irreducible_factors(Poly<Fp> f) {
  const Fp k = f.k;
  std::vector<Poly<Fp>> irr;
  std::mt19937_64 rng(0x51ed2701);
  // squarefree-ish reduction: peel distinct factors via gcd with x^(p^d)-x
  std::vector<Poly<Fp>> stack = {poly_monic(f)};
  while (!stack.empty()) {
    auto g = stack.back();
    stack.pop_back();
    if (g.deg() <= 0) continue;
    if (g.deg() == 1) { irr.push_back(g); continue; }
    // remove repeated content: g / gcd(g, g')
    auto gp = poly_derivative(g);
    if (gp.is_zero_poly()) {
      // g = h(x^p); in F_p[x], h(x^p) = h(x)^p: recurse on h(x)
      Poly<Fp> h(k);
      h.c.resize(g.deg() / (int)k.p + 1, k.zero());
      for (int i = 0; i * (int)k.p <= g.deg(); ++i) h.c[i] = g.c[i * (size_t)k.p];
      h.normalize();
      stack.push_back(h);
      continue;
    }
    auto sq = poly_gcd(g, gp);
    if (sq.deg() > 0) {
      stack.push_back(poly_div(g, sq));
      stack.push_back(sq);
      continue;
    }
    // g squarefree: distinct-degree splitting
    bool split_found = false;
    auto h = poly_xpow_mod<Fp>(bigint(k.p), g);  // x^p mod g
    auto hp = h;
    for (int d = 1; d <= g.deg() && !split_found; ++d) {
      auto gd = poly_gcd(poly_sub(hp, poly_x(k)), g);
      if (gd.deg() == g.deg()) {
        // all factors have degree d: equal-degree splitting
        if (d == g.deg()) { irr.push_back(g); split_found = true; break; }
        std::uniform_int_distribution<std::int64_t> dist(0, k.p - 1);
        for (;;) {
          Poly<Fp> r(k);
          r.c.resize(2 * d, k.zero());
          for (auto& cc : r.c) cc = dist(rng);
          r.normalize();
          if (r.deg() < 1) continue;
          Poly<Fp> t(k);
          if (k.p == 2) {
            // trace map: r + r^2 + r^4 + ... + r^(2^(d-1))
            t = poly_mod(r, g);
            auto cur = t;
            for (int i = 1; i < d; ++i) {
              cur = poly_mod(poly_mul(cur, cur), g);
              t = poly_add(t, cur);
            }
          } else {
            bigint e = (boost::multiprecision::pow(bigint(k.p), d) - 1) / 2;
            t = poly_sub(poly_pow_mod(r, e, g), poly_const(k, k.one()));
          }
          auto gc = poly_gcd(t, g);
          if (gc.deg() > 0 && gc.deg() < g.deg()) {
            stack.push_back(gc);
            stack.push_back(poly_div(g, gc));
            break;
          }
        }
        split_found = true;
      } else if (gd.deg() > 0) {
        stack.push_back(gd);
        stack.push_back(poly_div(g, gd));
        split_found = true;
      }
      if (!split_found) hp = poly_pow_mod(hp, bigint(k.p), g);
    }
  }
  return irr;
}

template <>
inline std::vector<Poly<Fp>> coprime_factor_groups<Fp>(const Poly<Fp>& f) {
  auto irr = fp_irreducible_factors(f);
  // group f's full multiplicity per irreducible
  std::vector<Poly<Fp>> groups;
  Poly<Fp> rest = poly_monic(f);
  for (auto& q : irr) {
    Poly<Fp> grp = poly_const(f.k, f.k.one());
    for (;;) {
      auto [quo, rem] = poly_divmod(rest, q);
      if (!rem.is_zero_poly()) break;
      rest = quo;
      grp = poly_mul(grp, q);
    }
    if (grp.deg() > 0) groups.push_back(grp);
  }
  return groups;
}

template <>
inline std::vector<Poly<QQ>> coprime_factor_groups<QQ>(const Poly<QQ>& f) {
  auto roots = qq_roots(f);
  QQ k;
  std::vector<Poly<QQ>> groups;
  Poly<QQ> rest = poly_monic(f);
  for (auto& r : roots) {
    Poly<QQ> lin(k, {k.neg(r), k.one()});
    Poly<QQ> grp = poly_const(k, k.one());
    for (;;) {
      auto [quo, rem] = poly_divmod(rest, lin);
      if (!rem.is_zero_poly()) break;
      rest = quo;
      grp = poly_mul(grp, lin);
    }
    if (grp.deg() > 0) groups.push_back(grp);
  }
  if (rest.deg() > 0) groups.push_back(rest);  // rootless remainder, kept whole
  return groups;
}

}  // namespace gk
