#pragma once
// Jacobson radical of the degree-0 part, semisimple block decomposition,
// primitive idempotents and their lifts. The radical uses the trace-form
// kernel in characteristic 0 and the Friedl-Ronyai semilinear refinement
// (divided traces of p-power maps on integer lifts) in characteristic p.
#include <stdexcept>

#include "gk/algebra.hpp"
#include "gk/poly.hpp"

namespace gk {

struct NonSplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::vector<bigint>> lift_mat(const Mat<Fp>& m) {
  std::vector<std::vector<bigint>> z(m.n_rows, std::vector<bigint>(m.n_cols));
  for (int i = 0; i < m.n_rows; ++i)
    for (int j = 0; j < m.n_cols; ++j) z[i][j] = m.at(i, j);
  return z;
}

inline std::vector<std::vector<bigint>> zmul(const std::vector<std::vector<bigint>>& a,
                                             const std::vector<std::vector<bigint>>& b) {
  int n = (int)a.size(), m = (int)b[0].size(), l = (int)b.size();
  std::vector<std::vector<bigint>> r(n, std::vector<bigint>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < l; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

inline std::vector<std::vector<bigint>> zpow(std::vector<std::vector<bigint>> a, std::int64_t e) {
  int n = (int)a.size();
  std::vector<std::vector<bigint>> r(n, std::vector<bigint>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  while (e > 0) {
    if (e & 1) r = zmul(r, a);
    a = zmul(a, a);
    e >>= 1;
  }
  return r;
}

inline bigint ztrace(const std::vector<std::vector<bigint>>& a) {
  bigint t = 0;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

}  // namespace detail

// Radical of an algebra concentrated in degree 0. Returns a basis matrix
// (columns, in the algebra's own coordinates).
inline Mat<QQ> radical_deg0(const Algebra<QQ>& a) {
  int n = a.dim();
  QQ k;
  // trace form of the regular representation: x in rad iff tr(L_{x b_j}) = 0 for all j
  Mat<QQ> g(k, n, n);
  for (int i = 0; i < n; ++i) {
    auto li = left_mult_mat(a, basis_vec(a, i));
    for (int j = 0; j < n; ++j) {
      auto prod = mul(li, left_mult_mat(a, basis_vec(a, j)));
      auto t = k.zero();
      for (int s = 0; s < n; ++s) t = k.add(t, prod.at(s, s));
      g.at(j, i) = t;  // row per y = b_j, column per x = b_i
    }
  }
  return col_basis(kernel_basis(g));
}

inline Mat<Fp> radical_deg0(const Algebra<Fp>& a) {
  const Fp k = a.k;
  int n = a.dim();
  // current candidate subspace, as columns (starts as everything)
  Mat<Fp> basis = identity(k, n);
  std::int64_t q = 1;
  for (int step = 0; q <= n; ++step, q *= k.p) {
    int m = basis.n_cols;
    if (m == 0) break;
    // integer lifts of the regular-representation matrices of the basis
    std::vector<std::vector<std::vector<bigint>>> lifts(m);
    for (int s = 0; s < m; ++s)
      lifts[s] = detail::lift_mat(left_mult_mat(a, col_vec(basis, s)));
    Mat<Fp> g(k, m, m);
    bigint qq = q, pq = bigint(k.p) * q;
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        auto prod = detail::zmul(lifts[s], lifts[t]);
        bigint tr = detail::ztrace(detail::zpow(prod, q));
        if (tr % qq != 0)
          throw std::logic_error("radical: divided trace not integral (internal)");
        bigint divided = (tr / qq) % pq;  // only the mod-p residue matters
        g.at(t, s) = k.from_int((std::int64_t)(divided % k.p));
      }
    auto ker = kernel_basis(g);
    basis = col_basis(mul(basis, ker));
  }
  return basis;
}

// Element minimal polynomial inside a unital (sub)algebra: the monic f of
// least degree with f(z) = 0, computed from the linear dependence of the
// powers unit, z, z^2, ... (coordinates taken in the containing algebra).
template <class F>
Poly<F> element_minpoly(const Algebra<F>& a, const Vec<F>& unit, const Vec<F>& z) {
  const F& k = a.k;
  std::vector<Vec<F>> powers = {unit};
  for (;;) {
    Mat<F> sp = from_cols(k, a.dim(), powers);
    auto next = alg_mul(a, powers.back(), z);
    auto coords = solve(sp, next);
    if (coords) {
      // z^m = sum c_i z^i  ->  f = x^m - sum c_i x^i
      Poly<F> f(k);
      f.c.assign(powers.size() + 1, k.zero());
      f.c[powers.size()] = k.one();
      for (size_t i = 0; i < powers.size(); ++i) f.c[i] = k.neg((*coords)[i]);
      return f;
    }
    powers.push_back(next);
    if ((int)powers.size() > a.dim() + 1)
      throw std::logic_error("element_minpoly: no dependence found (internal)");
  }
}

template <class F>
Vec<F> poly_eval_elem(const Algebra<F>& a, const Poly<F>& f, const Vec<F>& unit,
                      const Vec<F>& z) {
  const F& k = a.k;
  Vec<F> r(a.dim(), k.zero());
  for (int i = f.deg(); i >= 0; --i) {
    r = alg_mul(a, r, z);
    for (int t = 0; t < a.dim(); ++t)
      r[t] = k.add(r[t], k.mul(f.c[i], unit[t]));
  }
  return r;
}

namespace detail {

// Split idempotent e inside algebra s using element z of the corner eSe:
// returns CRT idempotents (>= 2 of them) or empty when the minpoly of z has a
// single coprime factor group.
template <class F>
std::vector<Vec<F>> crt_split(const Algebra<F>& s, const Vec<F>& e, const Vec<F>& z) {
  auto f = element_minpoly(s, e, z);
  auto groups = coprime_factor_groups<F>(f);
  if (groups.size() < 2) return {};
  std::vector<Vec<F>> idems;
  for (auto& g : groups) {
    Poly<F> h = poly_div(f, g);
    auto [gc, u, v] = poly_xgcd(h, g);
    if (gc.deg() != 0) throw std::logic_error("crt_split: factors not coprime");
    // e_i = (u*h)(z), with constants along e
    auto uh = poly_mul(u, h);
    uh = poly_mod(uh, f);
    idems.push_back(poly_eval_elem(s, uh, e, z));
  }
  return idems;
}

template <class F>
bool vec_eq(const F& k, const Vec<F>& a, const Vec<F>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!k.eq(a[i], b[i])) return false;
  return true;
}

template <class F>
bool vec_is_zero(const F& k, const Vec<F>& a) {
  for (auto& x : a)
    if (!k.is_zero(x)) return false;
  return true;
}

// subspace e * S * e as columns
template <class F>
Mat<F> corner_span(const Algebra<F>& s, const Vec<F>& e) {
  auto pe = mul(left_mult_mat(s, e), right_mult_mat(s, e));
  return col_basis(pe);
}

// Decompose idempotent e of the semisimple algebra s into orthogonal
// primitive idempotents; throws NonSplitError when a corner refuses to split.
template <class F>
void split_to_primitive(const Algebra<F>& s, const Vec<F>& e, std::vector<Vec<F>>& out,
                        std::mt19937_64& rng) {
  const F& k = s.k;
  auto corner = corner_span(s, e);
  if (corner.n_cols <= 1) {
    out.push_back(e);
    return;
  }
  // candidate elements of the corner
  std::vector<Vec<F>> cands;
  for (int j = 0; j < corner.n_cols; ++j) cands.push_back(col_vec(corner, j));
  int nb = (int)cands.size();
  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j) {
      Vec<F> su(s.dim());
      for (int t = 0; t < s.dim(); ++t) su[t] = k.add(cands[i][t], cands[j][t]);
      cands.push_back(su);
      cands.push_back(alg_mul(s, cands[i], cands[j]));
    }
  std::uniform_int_distribution<int> d(0, 6);
  for (int t = 0; t < 300; ++t) {
    Vec<F> r(s.dim(), k.zero());
    for (int j = 0; j < corner.n_cols; ++j) {
      auto c = k.from_int(d(rng));
      for (int i = 0; i < s.dim(); ++i)
        r[i] = k.add(r[i], k.mul(c, corner.at(i, j)));
    }
    cands.push_back(r);
  }
  for (auto& z : cands) {
    if (vec_is_zero(k, z)) continue;
    auto parts = crt_split(s, e, z);
    if (parts.size() >= 2) {
      for (auto& p : parts) split_to_primitive(s, p, out, rng);
      return;
    }
  }
  throw NonSplitError(
      "non-split input: a simple block is not a full matrix algebra over the ground field "
      "(corner of dimension " + std::to_string(corner.n_cols) + " refuses to split)");
}

}  // namespace detail

template <class F>
struct IdempotentData {
  std::vector<Vec<F>> prim;   // complete orthogonal primitive set, ambient A coords
  std::vector<int> block;     // simple-block id per idempotent
  std::vector<int> block_rep; // one representative idempotent index per block
  int num_blocks = 0;
};

// Primitive idempotents of A (living in A_0), via the semisimple quotient of
// the degree-0 part plus Newton lifting along the nilpotent radical.
template <class F>
IdempotentData<F> primitive_idempotents(const Algebra<F>& a) {
  const F& k = a.k;
  auto a0 = degree_zero_part(a);
  auto rad = radical_deg0(a0.alg);
  auto sq = algebra_quotient(a0.alg, rad, "ss");
  const Algebra<F>& s = sq.alg;
  std::mt19937_64 rng(0xc0ffee123);

  // center of s
  int n = s.dim();
  std::vector<Mat<F>> rows;
  Mat<F> stacked(k, 0, n);
  for (int i = 0; i < n; ++i) {
    auto d = sub(left_mult_mat(s, basis_vec(s, i)), right_mult_mat(s, basis_vec(s, i)));
    stacked = stacked.n_rows == 0 ? d : vstack(stacked, d);
  }
  Mat<F> center = n > 0 ? col_basis(kernel_basis(stacked)) : Mat<F>(k, 0, 0);

  // split the unit into central primitive idempotents using central elements
  std::vector<Vec<F>> central = {s.unit};
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ci = 0; ci < central.size() && !changed; ++ci) {
      for (int j = 0; j < center.n_cols && !changed; ++j) {
        auto z = alg_mul(s, central[ci], col_vec(center, j));
        auto parts = detail::crt_split(s, central[ci], z);
        if (parts.size() >= 2) {
          central.erase(central.begin() + ci);
          for (auto& p : parts) central.push_back(p);
          changed = true;
        }
      }
    }
  }

  // each central idempotent heads one simple block; split it to primitives
  IdempotentData<F> out;
  std::vector<Vec<F>> prim_s;
  for (size_t b = 0; b < central.size(); ++b) {
    std::vector<Vec<F>> prims;
    detail::split_to_primitive(s, central[b], prims, rng);
    // split consistency: block dimension must be (#prims)^2
    auto blk = detail::corner_span(s, central[b]);
    if ((int)(prims.size() * prims.size()) != blk.n_cols)
      throw NonSplitError("non-split input: block dimension " + std::to_string(blk.n_cols) +
                          " is not the square of its idempotent count");
    out.block_rep.push_back((int)prim_s.size());
    for (auto& p : prims) {
      out.block.push_back((int)b);
      prim_s.push_back(p);
    }
  }
  out.num_blocks = (int)central.size();

  // lift from s to a0 along the nilpotent radical, then embed into A
  auto lift_one = [&](const Vec<F>& target, const Vec<F>& u) -> Vec<F> {
    // work inside the corner u * a0 * u
    auto x = mat_vec(sq.sect, target);
    auto y = alg_mul(a0.alg, alg_mul(a0.alg, u, x), u);
    for (int it = 0; it < 64; ++it) {
      auto y2 = alg_mul(a0.alg, y, y);
      Vec<F> err(a0.alg.dim());
      for (int t = 0; t < a0.alg.dim(); ++t) err[t] = k.sub(y2[t], y[t]);
      if (detail::vec_is_zero(k, err)) return y;
      // t = (2y-1)^2 = 1 + 4(y^2-y), unipotent; inv by geometric series
      Vec<F> srad(a0.alg.dim());
      auto four = k.from_int(4);
      for (int t = 0; t < a0.alg.dim(); ++t) srad[t] = k.mul(four, err[t]);
      Vec<F> tinv = a0.alg.unit, pw = srad;
      auto sign = k.neg(k.one());
      for (int j = 0; j < a0.alg.dim() + 2 && !detail::vec_is_zero(k, pw); ++j) {
        for (int t = 0; t < a0.alg.dim(); ++t)
          tinv[t] = k.add(tinv[t], k.mul(sign, pw[t]));
        pw = alg_mul(a0.alg, pw, srad);
        sign = k.neg(sign);
      }
      Vec<F> two_y_minus_1(a0.alg.dim());
      auto two = k.from_int(2);
      for (int t = 0; t < a0.alg.dim(); ++t)
        two_y_minus_1[t] = k.sub(k.mul(two, y[t]), a0.alg.unit[t]);
      auto inv21 = alg_mul(a0.alg, two_y_minus_1, tinv);
      auto delta = alg_mul(a0.alg, err, inv21);
      for (int t = 0; t < a0.alg.dim(); ++t) y[t] = k.sub(y[t], delta[t]);
    }
    throw std::logic_error("idempotent lift did not converge (internal)");
  };

  std::vector<Vec<F>> lifted;
  Vec<F> u = a0.alg.unit;
  for (size_t i = 0; i < prim_s.size(); ++i) {
    Vec<F> f(a0.alg.dim(), k.zero());
    if (i + 1 == prim_s.size()) {
      f = u;  // forced by completeness
      auto img = mat_vec(sq.proj, f);
      if (!detail::vec_eq(k, img, prim_s[i]))
        throw std::logic_error("idempotent lift: last residue mismatch (internal)");
    } else {
      f = lift_one(prim_s[i], u);
    }
    lifted.push_back(f);
    for (int t = 0; t < a0.alg.dim(); ++t) u[t] = k.sub(u[t], f[t]);
  }

  for (auto& f : lifted) out.prim.push_back(mat_vec(a0.emb, f));
  return out;
}

// graded radical rad(A_0) (+) J, as a spanning matrix in A coordinates
template <class F>
Mat<F> graded_radical(const Algebra<F>& a) {
  auto a0 = degree_zero_part(a);
  auto rad = radical_deg0(a0.alg);
  Mat<F> rad_in_a = mul(a0.emb, rad);
  return span_sum(rad_in_a, ideal_J(a));
}

}  // namespace gk
