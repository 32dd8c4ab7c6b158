#pragma once
// Tensor powers of the degree-one part over the degree-zero part, the space of
// quadratic relations, a quadraticity test for the multiplication kernel, and
// the complex built from intersections of shifted relation spaces together
// with its exactness and projectivity checks.
#include <map>

#include "gk/gmod.hpp"

namespace gk {

// multiplication A_e (x) A_f -> A_{e+f} in degree-basis coordinates; column
// index i * dim(A_f) + j holds the coordinates of b_{ix_e[i]} * b_{ix_f[j]}
template <class F>
Mat<F> piece_mult(const Algebra<F>& a, int e, int f) {
  const F& k = a.k;
  auto ie = a.degree_indices(e), jf = a.degree_indices(f), tg = a.degree_indices(e + f);
  Mat<F> m(k, (int)tg.size(), (int)(ie.size() * jf.size()));
  for (size_t i = 0; i < ie.size(); ++i)
    for (size_t j = 0; j < jf.size(); ++j) {
      const Vec<F>& prod = a.mul_table[ie[i]][jf[j]];
      for (size_t t = 0; t < tg.size(); ++t)
        m.at((int)t, (int)(i * jf.size() + j)) = prod[tg[t]];
    }
  return m;
}

// T_n = A_1^{(x)k n} with word-indexed basis, B_n = A_1^{(x)A_0 n} presented by
// the surjection Pi[n] : T_n -> B_n, plus the two-sided A_0-actions, the
// multiplication maps mu[n] : B_n -> A_n and the quadratic relation space
template <class F>
struct TensorData {
  AlgebraPtr<F> alg;
  int N = 0;                              // powers 1..N are present
  int m = 0, n0 = 0;                      // dim A_1, dim A_0
  std::vector<Mat<F>> Pi;                 // Pi[n]: bdim(n) x m^n (Pi[0] unused)
  std::vector<Mat<F>> sect;               // right inverse of Pi[n]
  std::vector<std::vector<Mat<F>>> lact;  // lact[n][u]: left action of u-th A_0 basis elt
  std::vector<std::vector<Mat<F>>> ract;  // right action on the last factor
  std::vector<Mat<F>> mu;                 // mu[n]: dim(A_n) x bdim(n)
  Mat<F> rel2;                            // basis of ker mu[2] inside B_2
  Mat<F> rel2_t;                          // its preimage in T_2: ker(mu[2] Pi[2])

  TensorData(F k) : rel2(k, 0, 0), rel2_t(k, 0, 0) {}
  int bdim(int n) const { return Pi[n].n_rows; }
  int tdim(int n) const { return Pi[n].n_cols; }
};

template <class F>
TensorData<F> tensor_data(AlgebraPtr<F> alg, int N) {
  const Algebra<F>& a = *alg;
  const F& k = a.k;
  TensorData<F> td(k);
  td.alg = alg;
  td.N = N;
  auto ix0 = a.degree_indices(0);
  auto ix1 = a.degree_indices(1);
  td.m = (int)ix1.size();
  td.n0 = (int)ix0.size();

  // actions of each degree-0 basis element on A_1 itself
  std::vector<Mat<F>> l1, r1;
  for (int u = 0; u < td.n0; ++u) {
    Mat<F> lm(k, td.m, td.m), rm(k, td.m, td.m);
    for (int j = 0; j < td.m; ++j) {
      const Vec<F>& lp = a.mul_table[ix0[u]][ix1[j]];
      const Vec<F>& rp = a.mul_table[ix1[j]][ix0[u]];
      for (int t = 0; t < td.m; ++t) {
        lm.at(t, j) = lp[ix1[t]];
        rm.at(t, j) = rp[ix1[t]];
      }
    }
    l1.push_back(std::move(lm));
    r1.push_back(std::move(rm));
  }

  td.Pi.push_back(Mat<F>(k, 0, 0));  // index 0 placeholder
  td.sect.push_back(Mat<F>(k, 0, 0));
  td.mu.push_back(Mat<F>(k, 0, 0));
  td.lact.push_back({});
  td.ract.push_back({});
  td.Pi.push_back(identity(k, td.m));
  td.sect.push_back(identity(k, td.m));
  td.mu.push_back(identity(k, td.m));  // A_1 coords are the degree-1 basis
  td.lact.push_back(l1);
  td.ract.push_back(r1);

  for (int n = 2; n <= N; ++n) {
    int bprev = td.bdim(n - 1);
    // relations (xi.u) (x) y  -  xi (x) (u.y) inside B_{n-1} (x)k A_1
    std::vector<Vec<F>> rels;
    for (int e = 0; e < bprev; ++e)
      for (int u = 0; u < td.n0; ++u)
        for (int j = 0; j < td.m; ++j) {
          Vec<F> v((size_t)bprev * td.m, k.zero());
          for (int r = 0; r < bprev; ++r)
            v[(size_t)r * td.m + j] = k.add(v[(size_t)r * td.m + j], td.ract[n - 1][u].at(r, e));
          for (int t = 0; t < td.m; ++t)
            v[(size_t)e * td.m + t] = k.sub(v[(size_t)e * td.m + t], l1[u].at(t, j));
          rels.push_back(std::move(v));
        }
    auto qm = quotient_map(col_basis(from_cols(k, bprev * td.m, rels)), bprev * td.m);
    td.Pi.push_back(mul(qm.proj, kron(td.Pi[n - 1], identity(k, td.m))));
    td.sect.push_back(mul(kron(td.sect[n - 1], identity(k, td.m)), qm.sect));
    std::vector<Mat<F>> ln, rn;
    for (int u = 0; u < td.n0; ++u) {
      ln.push_back(mul(qm.proj, mul(kron(td.lact[n - 1][u], identity(k, td.m)), qm.sect)));
      rn.push_back(mul(qm.proj, mul(kron(identity(k, bprev), r1[u]), qm.sect)));
    }
    td.lact.push_back(std::move(ln));
    td.ract.push_back(std::move(rn));
    // mu[n] = (A_{n-1} x A_1 -> A_n) o (mu[n-1] (x) id) on representatives
    auto mul_step = piece_mult(a, n - 1, 1);
    td.mu.push_back(mul(mul_step, mul(kron(td.mu[n - 1], identity(k, td.m)), qm.sect)));
    // well-definedness of mu on the quotient: compare against the word products
    auto lhs = mul(td.mu[n], td.Pi[n]);
    auto rhs = mul(mul_step, kron(mul(td.mu[n - 1], td.Pi[n - 1]), identity(k, td.m)));
    if (!eq(lhs, rhs)) throw std::logic_error("tensor_data: multiplication map ill-defined");
  }
  if (N >= 2) {
    td.rel2 = kernel_basis(td.mu[2]);
    td.rel2_t = kernel_basis(mul(td.mu[2], td.Pi[2]));
  }
  return td;
}

// the image in B_n of A_1^{(x)(i-1)} (x) R (x) A_1^{(x)(n-i-1)}, 1 <= i <= n-1
template <class F>
Mat<F> relation_block(const TensorData<F>& td, int n, int i) {
  const F& k = td.alg->k;
  int mleft = 1, mright = 1;
  for (int t = 0; t < i - 1; ++t) mleft *= td.m;
  for (int t = 0; t < n - i - 1; ++t) mright *= td.m;
  auto t = kron(identity(k, mleft), kron(td.rel2_t, identity(k, mright)));
  return col_basis(mul(td.Pi[n], t));
}

struct QuadraticVerdict {
  bool ok = true;
  int first_fail = -1;
  std::string reason;
};

// the multiplication kernel is generated by quadratic relations, up to power N
template <class F>
QuadraticVerdict is_quadratic(const TensorData<F>& td) {
  QuadraticVerdict v;
  const Algebra<F>& a = *td.alg;
  for (int n = 2; n <= td.N; ++n) {
    if (rank(td.mu[n]) != (int)a.degree_indices(n).size()) {
      v.ok = false;
      v.first_fail = n;
      v.reason = "multiplication onto degree " + std::to_string(n) + " is not surjective";
      return v;
    }
    if (n == 2) continue;
    auto ker = kernel_basis(td.mu[n]);
    Mat<F> s(a.k, td.bdim(n), 0);
    for (int i = 1; i <= n - 1; ++i) s = span_sum(s, relation_block(td, n, i));
    if (!same_span(ker, s)) {
      v.ok = false;
      v.first_fail = n;
      v.reason = "kernel in tensor degree " + std::to_string(n) +
                 " is not spanned by shifted quadratic relations";
      return v;
    }
  }
  return v;
}

// the n-th term of the complex before inducing up: the intersection of all
// position-shifted copies of the relation space, as a subspace of B_n (n >= 2)
template <class F>
Mat<F> complex_term(const TensorData<F>& td, int n) {
  Mat<F> cur = relation_block(td, n, 1);
  for (int i = 2; i <= n - 1; ++i) cur = span_intersect(cur, relation_block(td, n, i));
  return cur;
}

// ---------------------------------------------------------------------------
// induced modules A (x)A_0 V for a left A_0-module V placed in one degree

template <class F>
struct Induced {
  Module<F> mod;             // window [g, g + max_deg]
  std::vector<Mat<F>> proj;  // per component t: A_{t} (x)k V -> component
  std::vector<Mat<F>> sect;  // a right inverse of proj
};

// vact[u] is the action on V of the u-th degree-0 basis element of the algebra
template <class F>
Induced<F> induced_module(AlgebraPtr<F> alg, int vdim, const std::vector<Mat<F>>& vact, int g) {
  const Algebra<F>& a = *alg;
  const F& k = a.k;
  int md = a.max_deg();
  auto ix0 = a.degree_indices(0);
  std::vector<QuotientMap<F>> qms;
  std::vector<int> dims;
  for (int e = 0; e <= md; ++e) {
    auto ie = a.degree_indices(e);
    int ae = (int)ie.size();
    int w = ae * vdim;
    std::vector<Vec<F>> rels;
    for (int i = 0; i < ae; ++i)
      for (size_t u = 0; u < ix0.size(); ++u)
        for (int j = 0; j < vdim; ++j) {
          // (a_i u) (x) v_j  -  a_i (x) (u v_j)
          Vec<F> v((size_t)w, k.zero());
          const Vec<F>& au = a.mul_table[ie[i]][ix0[u]];
          for (int r = 0; r < ae; ++r)
            v[(size_t)r * vdim + j] = k.add(v[(size_t)r * vdim + j], au[ie[r]]);
          for (int t = 0; t < vdim; ++t)
            v[(size_t)i * vdim + t] = k.sub(v[(size_t)i * vdim + t], vact[u].at(t, j));
          rels.push_back(std::move(v));
        }
    auto qm = quotient_map(col_basis(from_cols(k, w, rels)), w);
    dims.push_back(qm.dim);
    qms.push_back(std::move(qm));
  }
  Induced<F> ind{zero_module(alg, g, dims), {}, {}};
  for (int e = 0; e <= md; ++e) {
    ind.proj.push_back(qms[e].proj);
    ind.sect.push_back(qms[e].sect);
  }
  // action of basis element b on component e: descend (left-mult (x) id_V)
  for (int b = 0; b < a.dim(); ++b) {
    int db = a.deg[b];
    for (int e = 0; e + db <= md && e <= md; ++e) {
      auto ie = a.degree_indices(e);
      auto it = a.degree_indices(e + db);
      Mat<F> lb(k, (int)it.size(), (int)ie.size());
      for (size_t i = 0; i < ie.size(); ++i) {
        const Vec<F>& prod = a.mul_table[b][ie[i]];
        for (size_t t = 0; t < it.size(); ++t) lb.at((int)t, (int)i) = prod[it[t]];
      }
      ind.mod.act[b][e] =
          mul(ind.proj[e + db], mul(kron(lb, identity(k, vdim)), ind.sect[e]));
    }
  }
  return ind;
}

// ---------------------------------------------------------------------------
// the complex itself

template <class F>
struct TensorComplex {
  AlgebraPtr<F> alg;
  int N = 0;
  std::vector<Module<F>> terms;            // terms[0] = regular module, terms[n] induced
  std::vector<Induced<F>> ind;             // ind[n] for n >= 1 (index 0 unused)
  std::vector<Mat<F>> pbasis;              // basis of the degree-n space inside B_n
  std::vector<std::vector<Mat<F>>> d;      // d[n] aligned to terms[n] components (n >= 1)
  std::vector<Mat<F>> eps;                 // terms[0] -> A_0 per component
};

template <class F>
TensorComplex<F> tensor_complex(const TensorData<F>& td) {
  AlgebraPtr<F> alg = td.alg;
  const Algebra<F>& a = *alg;
  const F& k = a.k;
  int N = td.N;
  auto ix0 = a.degree_indices(0);
  int md = a.max_deg();
  TensorComplex<F> tc{alg, N, {}, {}, {}, {}, {}};

  // degree-n subspaces of B_n and their left A_0-actions
  tc.pbasis.push_back(Mat<F>(k, 0, 0));  // n = 0 placeholder
  tc.pbasis.push_back(identity(k, td.m));
  for (int n = 2; n <= N; ++n) tc.pbasis.push_back(complex_term(td, n));

  tc.terms.push_back(regular_module(alg));
  tc.ind.push_back(Induced<F>{zero_module(alg, 0, {}), {}, {}});
  for (int n = 1; n <= N; ++n) {
    const Mat<F>& p = tc.pbasis[n];
    std::vector<Mat<F>> vact;
    for (size_t u = 0; u < ix0.size(); ++u) {
      auto img = mul(td.lact[n][(int)u], p);
      auto coords = solve_mat(p, img);
      if (!coords)
        throw std::logic_error("tensor_complex: term not stable under the degree-0 action");
      vact.push_back(std::move(*coords));
    }
    tc.ind.push_back(induced_module(alg, p.n_cols, vact, n));
    tc.terms.push_back(tc.ind[n].mod);
  }

  // augmentation to A_0 = A/J: identity in degree 0, zero elsewhere
  {
    int n0 = (int)ix0.size();
    for (int e = 0; e <= md; ++e)
      tc.eps.push_back(e == 0 ? identity(k, n0)
                              : Mat<F>(k, 0, (int)a.degree_indices(e).size()));
  }

  // differentials
  tc.d.push_back({});  // index 0 unused
  for (int n = 1; n <= N; ++n) {
    const Mat<F>& p = tc.pbasis[n];
    int pd = p.n_cols;
    // generator images: 1 (x) p_c  ->  sum_j y_j (x) q_{c,j} with q in the
    // (n-1)-st term; gen[c] has length m * pdim(n-1)
    int pprev = n >= 2 ? tc.pbasis[n - 1].n_cols : 0;
    std::vector<Vec<F>> gen;
    if (n == 1) {
      // the first differential sends 1 (x) y_j to y_j in the regular module
      for (int c = 0; c < pd; ++c) gen.push_back(col_vec(p, c));  // p = I_m
    } else {
      // preimage in T_{n-1} of the span of the previous term
      auto qprev = quotient_map(tc.pbasis[n - 1], td.bdim(n - 1));
      auto pre = kernel_basis(mul(qprev.proj, td.Pi[n - 1]));
      auto lift_basis = mul(td.Pi[n], kron(identity(k, td.m), pre));
      for (int c = 0; c < pd; ++c) {
        auto x = solve(lift_basis, col_vec(p, c));
        if (!x) throw std::logic_error("tensor_complex: term escapes A_1 (x) previous term");
        Vec<F> g((size_t)td.m * pprev, k.zero());
        for (int j = 0; j < td.m; ++j) {
          Vec<F> xj(pre.n_cols, k.zero());
          for (int w = 0; w < pre.n_cols; ++w) xj[w] = (*x)[(size_t)j * pre.n_cols + w];
          auto q = mat_vec(td.Pi[n - 1], mat_vec(pre, xj));
          auto qc = solve(tc.pbasis[n - 1], q);
          if (!qc) throw std::logic_error("tensor_complex: lifted factor outside previous term");
          for (int w = 0; w < pprev; ++w) g[(size_t)j * pprev + w] = (*qc)[w];
        }
        gen.push_back(std::move(g));
      }
    }
    // extend A-linearly to every component: a_i (x) p_c -> sum_j (a_i y_j) (x) q_{c,j}
    std::vector<Mat<F>> dn;
    const Module<F>& src = tc.terms[n];
    for (int t = 0; t < src.n_comp(); ++t) {
      int e = t;  // A-part degree of component t (window starts at n)
      int deg = n + e;
      auto ie = a.degree_indices(e);
      int ae = (int)ie.size();
      int tgt_rows = tc.terms[n - 1].dim_at(deg);
      Mat<F> dm(k, tgt_rows, src.dims[t]);
      if (tgt_rows > 0 && src.dims[t] > 0) {
        auto mul_step = piece_mult(a, e, 1);  // A_e (x) A_1 -> A_{e+1}
        int anext = mul_step.n_rows;
        int prev_v = n == 1 ? 1 : pprev;     // V-dim of the previous induced term
        // raw map on A_e (x) P_n before descending
        Mat<F> raw(k, n == 1 ? anext : anext * prev_v, ae * pd);
        for (int i = 0; i < ae; ++i)
          for (int c = 0; c < pd; ++c) {
            if (n == 1) {
              // target component of the regular module: coords of a_i * y_j
              for (int j = 0; j < td.m; ++j) {
                auto coef = gen[c][j];
                if (k.is_zero(coef)) continue;
                for (int r = 0; r < anext; ++r)
                  raw.at(r, i * pd + c) =
                      k.add(raw.at(r, i * pd + c),
                            k.mul(coef, mul_step.at(r, i * td.m + j)));
              }
            } else {
              for (int j = 0; j < td.m; ++j)
                for (int w = 0; w < pprev; ++w) {
                  auto coef = gen[c][(size_t)j * pprev + w];
                  if (k.is_zero(coef)) continue;
                  for (int r = 0; r < anext; ++r)
                    raw.at(r * pprev + w, i * pd + c) =
                        k.add(raw.at(r * pprev + w, i * pd + c),
                              k.mul(coef, mul_step.at(r, i * td.m + j)));
                }
            }
          }
        Mat<F> down = n == 1 ? raw : mul(tc.ind[n - 1].proj[e + 1], raw);
        dm = mul(down, tc.ind[n].sect[e]);
      }
      dn.push_back(std::move(dm));
    }
    tc.d.push_back(std::move(dn));
  }
  return tc;
}

struct ComplexReport {
  bool d2_zero = true;
  bool exact = true;                // homology vanishes at checked positions/degrees
  bool terms_projective = true;     // each degree-n space projective over A_0
  bool is_resolution() const { return d2_zero && exact && terms_projective; }
  std::vector<std::tuple<int, int, int>> homology;  // (position, degree, dim) when nonzero
};

// checks the complex at positions 0..bound-1 in internal degrees <= bound
template <class F>
ComplexReport complex_check(const TensorData<F>& td, const TensorComplex<F>& tc, int bound) {
  ComplexReport rep;
  const Algebra<F>& a = *tc.alg;
  const F& k = a.k;
  int N = std::min(bound, tc.N);

  // d o d = 0 (and eps o d^1 = 0) on every component in range
  for (int n = 2; n <= N; ++n) {
    const Module<F>& src = tc.terms[n];
    for (int t = 0; t < src.n_comp(); ++t) {
      int deg = src.lo + t;
      const Module<F>& mid = tc.terms[n - 1];
      if (deg < mid.lo || deg > mid.hi()) continue;
      auto c = mul(tc.d[n - 1][mid.idx(deg)], tc.d[n][t]);
      if (!is_zero(c)) rep.d2_zero = false;
    }
  }
  {
    const Module<F>& src = tc.terms[1];
    for (int t = 0; t < src.n_comp(); ++t) {
      int deg = src.lo + t;
      if (deg > tc.terms[0].hi()) continue;
      auto c = mul(tc.eps[deg], tc.d[1][t]);
      if (!is_zero(c)) rep.d2_zero = false;
    }
  }

  // homology per position and internal degree
  auto comp_mat = [&](int n, int deg) -> Mat<F> {
    // differential out of terms[n] at internal degree deg (eps for n = 0)
    if (n == 0) {
      if (deg < 0 || deg > tc.terms[0].hi()) return Mat<F>(k, 0, 0);
      return tc.eps[deg];
    }
    const Module<F>& src = tc.terms[n];
    if (deg < src.lo || deg > src.hi())
      return Mat<F>(k, tc.terms[n - 1].dim_at(deg), 0);
    return tc.d[n][src.idx(deg)];
  };
  for (int n = 0; n + 1 <= N; ++n)
    for (int deg = 0; deg <= bound; ++deg) {
      int dim_here = tc.terms[n].dim_at(deg);
      if (dim_here == 0) continue;
      auto d_out = comp_mat(n, deg);
      auto d_in = comp_mat(n + 1, deg);
      int h = dim_here - rank(d_out) - rank(d_in);
      if (h < 0) { rep.d2_zero = false; h = 0; }
      if (h > 0) {
        rep.exact = false;
        rep.homology.push_back({n, deg, h});
      }
    }

  // projectivity over A_0 of the degree-n spaces (terms as A_0-modules)
  auto a0s = degree_zero_part(a);
  auto a0p = std::make_shared<const Algebra<F>>(a0s.alg);
  auto ix0 = a.degree_indices(0);
  for (int n = 1; n <= N; ++n) {
    const Mat<F>& p = tc.pbasis[n];
    if (p.n_cols == 0) continue;
    Module<F> v = zero_module(a0p, 0, {p.n_cols});
    for (int u = 0; u < a0p->dim(); ++u) {
      // express the u-th subalgebra basis vector over the degree-0 basis of a
      auto full = col_vec(a0s.emb, u);
      Mat<F> act(k, td.bdim(n), td.bdim(n));
      for (size_t w = 0; w < ix0.size(); ++w) {
        if (k.is_zero(full[ix0[w]])) continue;
        act = add(act, scalar_mul(full[ix0[w]], td.lact[n][(int)w]));
      }
      auto coords = solve_mat(p, mul(act, p));
      if (!coords) throw std::logic_error("complex_check: term not stable (internal)");
      v.act[u][0] = *coords;
    }
    if (!is_projective(v)) rep.terms_projective = false;
  }
  return rep;
}

}  // namespace gk
