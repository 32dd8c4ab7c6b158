#pragma once
// Graded modules over a graded algebra: components on a degree window with one
// action matrix per algebra basis element. Provides shifts, sums, sub/quotient
// constructions, tops, minimal projective covers, syzygies, hom spaces,
// isomorphism testing, trace submodules and self-injectivity of the
// degree-zero part.
#include <random>

#include "gk/radical.hpp"

namespace gk {

template <class F>
struct Module {
  AlgebraPtr<F> alg;
  int lo = 0;                            // degree of component 0
  std::vector<int> dims;                 // dims[t] = dim of degree lo+t
  std::vector<std::vector<Mat<F>>> act;  // act[b][t] : M_{lo+t} -> M_{lo+t+deg b}

  int n_comp() const { return (int)dims.size(); }
  int hi() const { return lo + n_comp() - 1; }
  int idx(int d) const { return d - lo; }
  int dim_at(int d) const { return (d < lo || d > hi()) ? 0 : dims[idx(d)]; }
  int total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
};

// allocate zero action matrices of the correct shapes
template <class F>
void alloc_actions(Module<F>& m) {
  const Algebra<F>& a = *m.alg;
  m.act.assign(a.dim(), {});
  for (int b = 0; b < a.dim(); ++b) {
    m.act[b].reserve(m.n_comp());
    for (int t = 0; t < m.n_comp(); ++t)
      m.act[b].push_back(Mat<F>(a.k, m.dim_at(m.lo + t + a.deg[b]), m.dims[t]));
  }
}

template <class F>
Module<F> zero_module(AlgebraPtr<F> alg, int lo, std::vector<int> dims) {
  Module<F> m;
  m.alg = std::move(alg);
  m.lo = lo;
  m.dims = std::move(dims);
  alloc_actions(m);
  return m;
}

// matrix of a homogeneous algebra element x (degree xdeg) acting M_d -> M_{d+xdeg}
template <class F>
Mat<F> act_elem_mat(const Module<F>& m, const Vec<F>& x, int xdeg, int d) {
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  Mat<F> r(k, m.dim_at(d + xdeg), m.dim_at(d));
  if (d < m.lo || d > m.hi()) return r;
  int t = m.idx(d);
  for (int i = 0; i < a.dim(); ++i) {
    if (k.is_zero(x[i])) continue;
    if (a.deg[i] != xdeg)
      throw std::invalid_argument("act_elem_mat: element not homogeneous of the stated degree");
    const Mat<F>& ai = m.act[i][t];
    for (int r_ = 0; r_ < r.n_rows; ++r_)
      for (int c = 0; c < r.n_cols; ++c)
        r.at(r_, c) = k.add(r.at(r_, c), k.mul(x[i], ai.at(r_, c)));
  }
  return r;
}

struct ModuleReport {
  bool shapes = true, unital = true, compatible = true;
  std::vector<std::string> failures;
  bool valid() const { return shapes && unital && compatible; }
};

template <class F>
ModuleReport validate_module(const Module<F>& m) {
  ModuleReport rep;
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  for (int b = 0; b < a.dim() && rep.shapes; ++b)
    for (int t = 0; t < m.n_comp(); ++t) {
      const Mat<F>& x = m.act[b][t];
      if (x.n_cols != m.dims[t] || x.n_rows != m.dim_at(m.lo + t + a.deg[b])) {
        rep.shapes = false;
        rep.failures.push_back("action matrix shape mismatch at basis " + a.names[b]);
        break;
      }
    }
  if (!rep.shapes) return rep;
  // unit acts as identity on every component
  for (int t = 0; t < m.n_comp() && rep.unital; ++t) {
    auto u = act_elem_mat(m, a.unit, 0, m.lo + t);
    if (!eq(u, identity(k, m.dims[t]))) {
      rep.unital = false;
      rep.failures.push_back("unit does not act as identity in degree " + std::to_string(m.lo + t));
    }
  }
  // products: act(b_i b_j) = act(b_i) act(b_j) on every component
  for (int i = 0; i < a.dim() && rep.compatible; ++i)
    for (int j = 0; j < a.dim() && rep.compatible; ++j)
      for (int t = 0; t < m.n_comp(); ++t) {
        int d = m.lo + t;
        auto lhs = act_elem_mat(m, a.mul_table[i][j], a.deg[i] + a.deg[j], d);
        int dj = d + a.deg[j];
        Mat<F> rhs(k, m.dim_at(dj + a.deg[i]), m.dims[t]);
        if (dj >= m.lo && dj <= m.hi()) rhs = mul(m.act[i][m.idx(dj)], m.act[j][t]);
        if (!eq(lhs, rhs)) {
          rep.compatible = false;
          rep.failures.push_back("action incompatible with product (" + a.names[i] + "," +
                                 a.names[j] + ") in degree " + std::to_string(d));
          break;
        }
      }
  return rep;
}

// component basis of the regular module = algebra basis elements of that degree
template <class F>
Vec<F> comp_to_alg(const Algebra<F>& a, int d, const Vec<F>& v) {
  auto ix = a.degree_indices(d);
  Vec<F> r(a.dim(), a.k.zero());
  for (size_t j = 0; j < ix.size(); ++j) r[ix[j]] = v[j];
  return r;
}

template <class F>
Vec<F> alg_to_comp(const Algebra<F>& a, int d, const Vec<F>& v) {
  auto ix = a.degree_indices(d);
  Vec<F> r(ix.size(), a.k.zero());
  for (size_t j = 0; j < ix.size(); ++j) r[j] = v[ix[j]];
  return r;
}

template <class F>
Module<F> regular_module(AlgebraPtr<F> alg) {
  const Algebra<F>& a = *alg;
  Module<F> m = zero_module(alg, 0, a.dims_by_degree());
  for (int b = 0; b < a.dim(); ++b)
    for (int t = 0; t < m.n_comp(); ++t) {
      auto src = a.degree_indices(t);
      for (size_t c = 0; c < src.size(); ++c) {
        auto col = alg_to_comp(a, t + a.deg[b], a.mul_table[b][src[c]]);
        for (size_t r = 0; r < col.size(); ++r) m.act[b][t].at((int)r, (int)c) = col[r];
      }
    }
  return m;
}

template <class F>
Module<F> shift(Module<F> m, int s) {
  m.lo += s;
  return m;
}

template <class F>
Module<F> direct_sum(const Module<F>& x, const Module<F>& y) {
  const Algebra<F>& a = *x.alg;
  int lo = std::min(x.lo, y.lo);
  int hi = std::max(x.hi(), y.hi());
  if (x.n_comp() == 0) { lo = y.lo; hi = y.hi(); }
  if (y.n_comp() == 0) { lo = x.lo; hi = x.hi(); }
  if (x.n_comp() == 0 && y.n_comp() == 0) return zero_module(x.alg, 0, {});
  std::vector<int> dims;
  for (int d = lo; d <= hi; ++d) dims.push_back(x.dim_at(d) + y.dim_at(d));
  Module<F> m = zero_module(x.alg, lo, dims);
  for (int b = 0; b < a.dim(); ++b)
    for (int d = lo; d <= hi; ++d) {
      int t = m.idx(d), e = d + a.deg[b];
      if (e > hi) continue;
      Mat<F>& dst = m.act[b][t];
      if (d >= x.lo && d <= x.hi() && e >= x.lo && e <= x.hi()) {
        const Mat<F>& xa = x.act[b][x.idx(d)];
        for (int r = 0; r < xa.n_rows; ++r)
          for (int c = 0; c < xa.n_cols; ++c) dst.at(r, c) = xa.at(r, c);
      }
      if (d >= y.lo && d <= y.hi() && e >= y.lo && e <= y.hi()) {
        const Mat<F>& ya = y.act[b][y.idx(d)];
        for (int r = 0; r < ya.n_rows; ++r)
          for (int c = 0; c < ya.n_cols; ++c)
            dst.at(x.dim_at(e) + r, x.dim_at(d) + c) = ya.at(r, c);
      }
    }
  return m;
}

// drop zero components at both ends of the window
template <class F>
Module<F> trim(const Module<F>& m) {
  int first = 0, last = m.n_comp() - 1;
  while (first <= last && m.dims[first] == 0) ++first;
  while (last >= first && m.dims[last] == 0) --last;
  if (first > last) return zero_module(m.alg, 0, {});
  Module<F> r;
  r.alg = m.alg;
  r.lo = m.lo + first;
  r.dims.assign(m.dims.begin() + first, m.dims.begin() + last + 1);
  alloc_actions(r);
  const Algebra<F>& a = *m.alg;
  for (int b = 0; b < a.dim(); ++b)
    for (int t = 0; t < r.n_comp(); ++t) {
      int e = r.lo + t + a.deg[b];
      if (e >= r.lo && e <= r.hi()) r.act[b][t] = m.act[b][m.idx(r.lo + t)];
    }
  return r;
}

// ---------------------------------------------------------------------------
// submodules and quotients from per-degree spanning matrices (aligned to the
// ambient window)

template <class F>
struct SubModule {
  Module<F> mod;            // same window as the ambient module
  std::vector<Mat<F>> emb;  // emb[t] : sub component -> ambient component
};

template <class F>
struct QuotModule {
  Module<F> mod;  // same window as the ambient module
  std::vector<Mat<F>> proj, sect;
};

template <class F>
SubModule<F> submodule(const Module<F>& m, const std::vector<Mat<F>>& spans) {
  const Algebra<F>& a = *m.alg;
  SubModule<F> s;
  s.mod.alg = m.alg;
  s.mod.lo = m.lo;
  for (int t = 0; t < m.n_comp(); ++t) {
    s.emb.push_back(col_basis(spans[t]));
    s.mod.dims.push_back(s.emb.back().n_cols);
  }
  alloc_actions(s.mod);
  for (int b = 0; b < a.dim(); ++b)
    for (int t = 0; t < m.n_comp(); ++t) {
      int e = m.lo + t + a.deg[b];
      if (e < m.lo || e > m.hi()) {
        if (s.mod.dims[t] > 0 && !is_zero(mul(m.act[b][t], s.emb[t])))
          throw std::invalid_argument("submodule: span escapes the ambient window");
        continue;
      }
      auto img = mul(m.act[b][t], s.emb[t]);
      auto sol = solve_mat(s.emb[m.idx(e)], img);
      if (!sol) throw std::invalid_argument("submodule: spans not stable under the action");
      s.mod.act[b][t] = *sol;
    }
  return s;
}

template <class F>
QuotModule<F> quotient_module(const Module<F>& m, const std::vector<Mat<F>>& spans) {
  const Algebra<F>& a = *m.alg;
  QuotModule<F> q;
  q.mod.alg = m.alg;
  q.mod.lo = m.lo;
  std::vector<QuotientMap<F>> qs;
  for (int t = 0; t < m.n_comp(); ++t) {
    qs.push_back(quotient_map(spans[t], m.dims[t]));
    q.mod.dims.push_back(qs.back().dim);
    q.proj.push_back(qs.back().proj);
    q.sect.push_back(qs.back().sect);
  }
  alloc_actions(q.mod);
  for (int b = 0; b < a.dim(); ++b)
    for (int t = 0; t < m.n_comp(); ++t) {
      int e = m.lo + t + a.deg[b];
      if (e < m.lo || e > m.hi()) continue;
      // well-definedness: action must send the killed span into the killed span
      if (!span_contains_all(spans[m.idx(e)], col_basis(mul(m.act[b][t], spans[t]))))
        throw std::invalid_argument("quotient_module: spans not stable under the action");
      q.mod.act[b][t] = mul(q.proj[m.idx(e)], mul(m.act[b][t], q.sect[t]));
    }
  return q;
}

// ---------------------------------------------------------------------------
// radical layers

// spans (per component) of J*S for given spans S, J = positive-degree part
template <class F>
std::vector<Mat<F>> apply_positive_part(const Module<F>& m, const std::vector<Mat<F>>& spans) {
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  std::vector<std::vector<Vec<F>>> cols(m.n_comp());
  for (int b = 0; b < a.dim(); ++b) {
    if (a.deg[b] == 0) continue;
    for (int t = 0; t < m.n_comp(); ++t) {
      int e = m.lo + t + a.deg[b];
      if (e < m.lo || e > m.hi()) continue;
      auto img = mul(m.act[b][t], spans[t]);
      for (int j = 0; j < img.n_cols; ++j) cols[m.idx(e)].push_back(col_vec(img, j));
    }
  }
  std::vector<Mat<F>> out;
  for (int t = 0; t < m.n_comp(); ++t)
    out.push_back(col_basis(from_cols(k, m.dims[t], cols[t])));
  return out;
}

// close per-degree spans under the algebra action (smallest submodule containing them)
template <class F>
std::vector<Mat<F>> closure_spans(const Module<F>& m, std::vector<Mat<F>> spans) {
  const Algebra<F>& a = *m.alg;
  for (int t = 0; t < m.n_comp(); ++t) spans[t] = col_basis(spans[t]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < a.dim(); ++b)
      for (int t = 0; t < m.n_comp(); ++t) {
        int e = m.lo + t + a.deg[b];
        if (e < m.lo || e > m.hi() || spans[t].n_cols == 0) continue;
        auto img = col_basis(mul(m.act[b][t], spans[t]));
        if (!span_contains_all(spans[m.idx(e)], img)) {
          spans[m.idx(e)] = span_sum(spans[m.idx(e)], img);
          changed = true;
        }
      }
  }
  return spans;
}

template <class F>
std::vector<Mat<F>> full_spans(const Module<F>& m) {
  std::vector<Mat<F>> s;
  for (int t = 0; t < m.n_comp(); ++t) s.push_back(identity(m.alg->k, m.dims[t]));
  return s;
}

// J^l M as an embedded submodule
template <class F>
SubModule<F> radical_filtration_piece(const Module<F>& m, int l) {
  auto spans = full_spans(m);
  for (int i = 0; i < l; ++i) spans = apply_positive_part(m, spans);
  return submodule(m, spans);
}

// spans of (rad(A_0) + J) * M, the kernel of the semisimple top
template <class F>
std::vector<Mat<F>> graded_radical_spans(const Module<F>& m) {
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  auto spans = apply_positive_part(m, full_spans(m));
  auto a0 = degree_zero_part(a);
  auto rad = radical_deg0(a0.alg);
  for (int j = 0; j < rad.n_cols; ++j) {
    auto r = mat_vec(a0.emb, col_vec(rad, j));
    for (int t = 0; t < m.n_comp(); ++t) {
      auto img = act_elem_mat(m, r, 0, m.lo + t);
      spans[t] = span_sum(spans[t], col_basis(img));
    }
  }
  (void)k;
  return spans;
}

template <class F>
QuotModule<F> top(const Module<F>& m) {
  return quotient_module(m, graded_radical_spans(m));
}

// ---------------------------------------------------------------------------
// projectives, covers, syzygies

// the module A e [s] for an idempotent e, as a submodule of the regular module
template <class F>
Module<F> projective_on(AlgebraPtr<F> alg, const Vec<F>& e, int s) {
  const Algebra<F>& a = *alg;
  if (!detail::vec_eq(a.k, alg_mul(a, e, e), e))
    throw std::invalid_argument("projective_on: element is not idempotent");
  auto reg = regular_module(alg);
  std::vector<Mat<F>> spans;
  for (int t = 0; t < reg.n_comp(); ++t) {
    std::vector<Vec<F>> cols;
    for (int i : a.degree_indices(t)) cols.push_back(alg_to_comp(a, t, alg_mul(a, basis_vec(a, i), e)));
    spans.push_back(col_basis(from_cols(a.k, reg.dims[t], cols)));
  }
  return shift(trim(submodule(reg, spans).mod), s);
}

template <class F>
struct Cover {
  Module<F> proj;                             // the covering projective P
  std::vector<std::pair<int, int>> summands;  // (primitive idempotent index, degree)
  std::vector<Mat<F>> epi;                    // epi[t] : P component t -> M at same degree
  SubModule<F> ker;                           // syzygy, embedded in P
};

template <class F>
Cover<F> projective_cover(const Module<F>& m) {
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  auto idem = primitive_idempotents(a);
  auto t = top(m);

  // collect summands: per degree and block, multiplicity = dim e·T_d for a
  // representative primitive idempotent e of the block, with a generator of M
  // lifted from each top basis vector
  struct Summand {
    Module<F> p;             // A e, unshifted
    int prim_index, degree;
    Vec<F> gen;              // generator image in M at `degree` (component coords)
  };
  std::vector<Summand> sums;
  for (int ti = 0; ti < m.n_comp(); ++ti) {
    int d = m.lo + ti;
    for (int b = 0; b < idem.num_blocks; ++b) {
      int pi = idem.block_rep[b];
      const Vec<F>& e = idem.prim[pi];
      auto et = act_elem_mat(t.mod, e, 0, d);
      auto img = col_basis(et);
      for (int j = 0; j < img.n_cols; ++j) {
        auto w = col_vec(img, j);
        auto u = mat_vec(t.sect[ti], w);
        auto v = mat_vec(act_elem_mat(m, e, 0, d), u);
        sums.push_back(Summand{projective_on(m.alg, e, 0), pi, d, v});
      }
    }
  }

  Cover<F> c;
  if (sums.empty()) {
    c.proj = zero_module(m.alg, m.lo, std::vector<int>(m.n_comp(), 0));
    for (int ti = 0; ti < m.n_comp(); ++ti) c.epi.push_back(Mat<F>(k, m.dims[ti], 0));
    if (!m.is_zero()) throw std::logic_error("projective_cover: empty top of a nonzero module");
    c.ker = submodule(c.proj, full_spans(c.proj));
    return c;
  }

  // window of P
  int lo = m.lo, hi = m.hi();
  for (auto& s : sums) {
    lo = std::min(lo, s.degree);
    hi = std::max(hi, s.degree + s.p.hi());
  }
  // assemble P as a direct sum (explicitly, to keep column bookkeeping simple)
  std::vector<int> pdims(hi - lo + 1, 0);
  for (auto& s : sums)
    for (int d = lo; d <= hi; ++d) pdims[d - lo] += s.p.dim_at(d - s.degree);
  Module<F> p = zero_module(m.alg, lo, pdims);
  // column offsets: offsets[si][t] = first column of summand si in component t
  std::vector<std::vector<int>> offsets(sums.size(), std::vector<int>(p.n_comp(), 0));
  for (int tt = 0; tt < p.n_comp(); ++tt) {
    int off = 0;
    for (size_t si = 0; si < sums.size(); ++si) {
      offsets[si][tt] = off;
      off += sums[si].p.dim_at(lo + tt - sums[si].degree);
    }
  }
  for (int b = 0; b < a.dim(); ++b)
    for (int tt = 0; tt < p.n_comp(); ++tt) {
      int e = lo + tt + a.deg[b];
      if (e > hi) continue;
      for (size_t si = 0; si < sums.size(); ++si) {
        int sd = lo + tt - sums[si].degree;
        if (sd < sums[si].p.lo || sd > sums[si].p.hi()) continue;
        int se = sd + a.deg[b];
        if (se < sums[si].p.lo || se > sums[si].p.hi()) continue;
        const Mat<F>& blk = sums[si].p.act[b][sums[si].p.idx(sd)];
        for (int r = 0; r < blk.n_rows; ++r)
          for (int cc = 0; cc < blk.n_cols; ++cc)
            p.act[b][tt].at(offsets[si][p.idx(e)] + r, offsets[si][tt] + cc) = blk.at(r, cc);
      }
    }

  // epi: on summand si, component of degree d0+j spanned by elements x e with
  // deg x = j maps x e -> x * gen
  c.epi.assign(p.n_comp(), Mat<F>(k, 0, 0));
  for (int tt = 0; tt < p.n_comp(); ++tt) c.epi[tt] = Mat<F>(k, m.dim_at(lo + tt), pdims[tt]);
  for (size_t si = 0; si < sums.size(); ++si) {
    const Summand& s = sums[si];
    // basis of A e at each degree, in algebra coordinates (rebuild the spans)
    for (int j = s.p.lo; j <= s.p.hi(); ++j) {
      int d = s.degree + j;
      if (d < lo || d > hi) continue;
      // recover the embedded basis of (A e)_j in algebra coordinates
      std::vector<Vec<F>> cols;
      for (int i : a.degree_indices(j))
        cols.push_back(alg_mul(a, basis_vec(a, i), idem.prim[s.prim_index]));
      auto full = from_cols(k, a.dim(), cols);
      auto bas = col_basis(full);
      if (bas.n_cols != s.p.dim_at(j))
        throw std::logic_error("projective_cover: summand basis mismatch (internal)");
      for (int cidx = 0; cidx < bas.n_cols; ++cidx) {
        auto x = col_vec(bas, cidx);
        // x * gen, where gen lives in M at s.degree
        auto xm = act_elem_mat(m, x, j, s.degree);
        Vec<F> img = xm.n_rows > 0 ? mat_vec(xm, s.gen) : Vec<F>();
        for (int r = 0; r < (int)img.size(); ++r)
          c.epi[p.idx(d)].at(r, offsets[si][p.idx(d)] + cidx) = img[r];
      }
    }
  }

  // caution: projective_on trims; its component coordinates are the col_basis
  // of the same spans we rebuilt above, so the bases agree column-for-column.

  // surjectivity
  for (int tt = 0; tt < p.n_comp(); ++tt)
    if (rank(c.epi[tt]) != m.dim_at(lo + tt))
      throw std::logic_error("projective_cover: epimorphism not surjective (internal)");
  for (int d = m.lo; d <= m.hi(); ++d)
    if ((d < lo || d > hi) && m.dim_at(d) != 0)
      throw std::logic_error("projective_cover: cover misses a degree (internal)");

  // kernel as an embedded submodule, and minimality
  std::vector<Mat<F>> kspans;
  for (int tt = 0; tt < p.n_comp(); ++tt) kspans.push_back(kernel_basis(c.epi[tt]));
  c.ker = submodule(p, kspans);
  auto rad_p = graded_radical_spans(p);
  for (int tt = 0; tt < p.n_comp(); ++tt)
    if (!span_contains_all(rad_p[tt], c.ker.emb[tt]))
      throw std::logic_error("projective_cover: kernel not superfluous (internal)");

  for (auto& s : sums) c.summands.push_back({s.prim_index, s.degree});
  c.proj = std::move(p);
  return c;
}

template <class F>
Module<F> syzygy(const Module<F>& m, int i) {
  Module<F> cur = trim(m);
  for (int s = 0; s < i; ++s) {
    if (cur.is_zero()) return cur;
    cur = trim(projective_cover(cur).ker.mod);
  }
  return cur;
}

template <class F>
bool is_projective(const Module<F>& m) {
  if (m.is_zero()) return true;
  return projective_cover(trim(m)).ker.mod.is_zero();
}

template <class F>
bool is_generated_in_degree(const Module<F>& m, int s) {
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  if (m.is_zero()) return true;
  for (int d = m.lo; d < s; ++d)
    if (m.dim_at(d) != 0) return false;
  for (int d = std::max(s + 1, m.lo); d <= m.hi(); ++d) {
    if (m.dims[m.idx(d)] == 0) continue;
    std::vector<Vec<F>> cols;
    for (int b = 0; b < a.dim(); ++b) {
      if (a.deg[b] != d - s) continue;
      if (s < m.lo || s > m.hi()) continue;
      const Mat<F>& img = m.act[b][m.idx(s)];
      for (int j = 0; j < img.n_cols; ++j) cols.push_back(col_vec(img, j));
    }
    if (rank(from_cols(k, m.dims[m.idx(d)], cols)) != m.dims[m.idx(d)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// homs and isomorphism

template <class F>
struct Hom {
  int s = 0;                 // maps M_d -> N_{d+s}
  std::vector<Mat<F>> mats;  // aligned to the source window
};

// the linear system whose kernel is the space of graded homs M -> N of shift s;
// unknowns are the entries of the per-degree matrices f_t : M_{m.lo+t} -> N_{m.lo+t+s}
template <class F>
struct HomSystem {
  int s = 0;
  int nvar = 0;
  std::vector<int> off;  // variable offset per source component
  Mat<F> sys;
  explicit HomSystem(F k) : sys(k, 0, 0) {}
  int var(int t, int r, int c, const std::vector<int>& src_dims) const {
    return off[t] + r * src_dims[t] + c;
  }
};

template <class F>
HomSystem<F> hom_system(const Module<F>& m, const Module<F>& n, int s) {
  const Algebra<F>& a = *m.alg;
  const F& k = a.k;
  HomSystem<F> hs(k);
  hs.s = s;
  hs.off.assign(m.n_comp() + 1, 0);
  for (int t = 0; t < m.n_comp(); ++t)
    hs.off[t + 1] = hs.off[t] + n.dim_at(m.lo + t + s) * m.dims[t];
  hs.nvar = hs.off[m.n_comp()];
  const std::vector<int>& off = hs.off;
  int nvar = hs.nvar;
  auto var = [&](int t, int r, int c) { return off[t] + r * m.dims[t] + c; };

  std::vector<Vec<F>> eqs;  // rows of the coefficient matrix
  for (int b = 0; b < a.dim(); ++b) {
    int db = a.deg[b];
    for (int t = 0; t < m.n_comp(); ++t) {
      int d = m.lo + t;
      int rows = n.dim_at(d + db + s), cols = m.dims[t];
      if (rows == 0 || cols == 0) continue;
      const Mat<F>& am = m.act[b][t];  // M_d -> M_{d+db}
      Mat<F> an = act_elem_mat(n, basis_vec(a, b), db, d + s);  // N_{d+s} -> N_{d+s+db}
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          Vec<F> eq(nvar, k.zero());
          // [f_{t+db} * am](r,c)
          int t2 = t + db;
          if (t2 >= 0 && t2 < m.n_comp() && n.dim_at(d + db + s) > 0)
            for (int kk = 0; kk < m.dim_at(d + db); ++kk)
              if (!k.is_zero(am.at(kk, c)))
                eq[var(t2, r, kk)] = k.add(eq[var(t2, r, kk)], am.at(kk, c));
          // -[an * f_t](r,c)
          if (n.dim_at(d + s) > 0)
            for (int kk = 0; kk < n.dim_at(d + s); ++kk)
              if (!k.is_zero(an.at(r, kk)))
                eq[var(t, kk, c)] = k.sub(eq[var(t, kk, c)], an.at(r, kk));
          bool nonzero = false;
          for (auto& x : eq)
            if (!k.is_zero(x)) { nonzero = true; break; }
          if (nonzero) eqs.push_back(std::move(eq));
        }
    }
  }
  hs.sys = Mat<F>(k, (int)eqs.size(), nvar);
  for (size_t r = 0; r < eqs.size(); ++r)
    for (int c = 0; c < nvar; ++c) hs.sys.at((int)r, c) = eqs[r][c];
  return hs;
}

// unpack a flat variable vector of the hom system into per-degree matrices
template <class F>
Hom<F> hom_from_flat(const Module<F>& m, const Module<F>& n, int s, const Vec<F>& flat) {
  Hom<F> h;
  h.s = s;
  int pos = 0;
  for (int t = 0; t < m.n_comp(); ++t) {
    Mat<F> f(m.alg->k, n.dim_at(m.lo + t + s), m.dims[t]);
    for (int r = 0; r < f.n_rows; ++r)
      for (int c = 0; c < f.n_cols; ++c) f.at(r, c) = flat[pos++];
    h.mats.push_back(std::move(f));
  }
  return h;
}

template <class F>
Vec<F> hom_to_flat(const Hom<F>& h) {
  Vec<F> flat;
  for (auto& f : h.mats)
    for (int r = 0; r < f.n_rows; ++r)
      for (int c = 0; c < f.n_cols; ++c) flat.push_back(f.at(r, c));
  return flat;
}

template <class F>
std::vector<Hom<F>> hom_graded(const Module<F>& m, const Module<F>& n, int s) {
  const F& k = m.alg->k;
  auto hs = hom_system(m, n, s);
  auto ker = hs.nvar > 0 ? kernel_basis(hs.sys) : Mat<F>(k, 0, 0);
  std::vector<Hom<F>> out;
  for (int j = 0; j < ker.n_cols; ++j) out.push_back(hom_from_flat(m, n, s, col_vec(ker, j)));
  return out;
}

// h2 ∘ h1 : X -> Z where h1 : X -> Y (aligned to x) and h2 : Y -> Z (aligned to y)
template <class F>
Hom<F> hom_compose(const Module<F>& x, const Module<F>& y, const Module<F>& z,
                   const Hom<F>& h1, const Hom<F>& h2) {
  const F& k = x.alg->k;
  Hom<F> h;
  h.s = h1.s + h2.s;
  for (int t = 0; t < x.n_comp(); ++t) {
    int dmid = x.lo + t + h1.s;
    if (dmid >= y.lo && dmid <= y.hi())
      h.mats.push_back(mul(h2.mats[y.idx(dmid)], h1.mats[t]));
    else
      h.mats.push_back(Mat<F>(k, z.dim_at(x.lo + t + h1.s + h2.s), x.dims[t]));
  }
  return h;
}

enum class Tri { yes, no, unknown };

namespace detail {

template <class F>
bool hom_combo_invertible(const Module<F>& m, const std::vector<Hom<F>>& homs,
                          const Vec<F>& coeffs) {
  const F& k = m.alg->k;
  for (int t = 0; t < m.n_comp(); ++t) {
    Mat<F> f(k, homs[0].mats[t].n_rows, homs[0].mats[t].n_cols);
    for (size_t j = 0; j < homs.size(); ++j)
      for (int r = 0; r < f.n_rows; ++r)
        for (int c = 0; c < f.n_cols; ++c)
          f.at(r, c) = k.add(f.at(r, c), k.mul(coeffs[j], homs[j].mats[t].at(r, c)));
    if (f.n_rows != f.n_cols) return false;
    if (f.n_rows > 0 && !is_invertible(f)) return false;
  }
  return true;
}

}  // namespace detail

template <class F>
Tri is_isomorphic(const Module<F>& m_in, const Module<F>& n_in, std::uint64_t seed = 7) {
  auto m = trim(m_in), n = trim(n_in);
  if (m.is_zero() && n.is_zero()) return Tri::yes;
  if (m.lo != n.lo || m.dims != n.dims) return Tri::no;
  auto homs = hom_graded(m, n, 0);
  if (homs.empty()) return Tri::no;
  const F& k = m.alg->k;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 12);
  for (int it = 0; it < 64; ++it) {
    Vec<F> coeffs(homs.size());
    for (auto& c : coeffs) c = k.from_int(d(rng));
    if (detail::hom_combo_invertible(m, homs, coeffs)) return Tri::yes;
  }
  if constexpr (std::is_same_v<F, Fp>) {
    double total = 1;
    for (size_t j = 0; j < homs.size(); ++j) total *= (double)k.p;
    if (total <= (double)(1 << 20)) {
      std::vector<std::int64_t> counter(homs.size(), 0);
      for (;;) {
        Vec<F> coeffs(homs.size());
        for (size_t j = 0; j < homs.size(); ++j) coeffs[j] = counter[j];
        if (detail::hom_combo_invertible(m, homs, coeffs)) return Tri::yes;
        size_t i = 0;
        while (i < homs.size() && ++counter[i] == k.p) counter[i++] = 0;
        if (i == homs.size()) return Tri::no;
      }
    }
  }
  return Tri::unknown;
}

// sum of images of all graded homs p -> m (all shifts), as an embedded submodule
template <class F>
SubModule<F> trace_submodule(const Module<F>& p_in, const Module<F>& m) {
  auto p = trim(p_in);
  const F& k = m.alg->k;
  std::vector<std::vector<Vec<F>>> cols(m.n_comp());
  if (!p.is_zero())
    for (int s = m.lo - p.hi(); s <= m.hi() - p.lo; ++s)
      for (auto& h : hom_graded(p, m, s))
        for (int t = 0; t < p.n_comp(); ++t) {
          int d = p.lo + t + s;
          if (d < m.lo || d > m.hi()) continue;
          for (int j = 0; j < h.mats[t].n_cols; ++j)
            cols[m.idx(d)].push_back(col_vec(h.mats[t], j));
        }
  std::vector<Mat<F>> spans;
  for (int t = 0; t < m.n_comp(); ++t)
    spans.push_back(col_basis(from_cols(k, m.dims[t], cols[t])));
  return submodule(m, spans);
}

// ---------------------------------------------------------------------------
// restriction to the degree-zero part, and self-injectivity

// each component M_d as a module over the degree-zero part (concentrated in 0)
template <class F>
std::vector<Module<F>> restrict_to_A0(const Module<F>& m) {
  const Algebra<F>& a = *m.alg;
  auto a0 = degree_zero_part(a);
  auto a0p = std::make_shared<const Algebra<F>>(a0.alg);
  std::vector<Module<F>> out;
  for (int t = 0; t < m.n_comp(); ++t) {
    Module<F> c = zero_module(a0p, 0, {m.dims[t]});
    for (int i = 0; i < a0.alg.dim(); ++i)
      c.act[i][0] = act_elem_mat(m, mat_vec(a0.emb, basis_vec(a0.alg, i)), 0, m.lo + t);
    out.push_back(std::move(c));
  }
  return out;
}

template <class F>
std::vector<bool> is_projective_over_A0(const Module<F>& m) {
  std::vector<bool> out;
  for (auto& c : restrict_to_A0(m)) out.push_back(is_projective(c));
  return out;
}

struct SelfInjectivity {
  bool verdict = false;
  std::string witness;  // on failure: description of a non-projective dual summand
};

// A degree-zero algebra is self-injective iff the dual of the regular module,
// with its left action (a.f)(x) = f(xa), is projective.
template <class F>
SelfInjectivity is_self_injective(const Algebra<F>& a0) {
  if (a0.max_deg() != 0)
    throw std::invalid_argument("is_self_injective: algebra not concentrated in degree 0");
  auto ap = std::make_shared<const Algebra<F>>(a0);
  Module<F> dual = zero_module(ap, 0, {a0.dim()});
  for (int i = 0; i < a0.dim(); ++i)
    dual.act[i][0] = transpose(right_mult_mat(a0, basis_vec(a0, i)));
  auto c = projective_cover(dual);
  SelfInjectivity s;
  s.verdict = c.ker.mod.is_zero();
  if (!s.verdict)
    s.witness = "dual of the regular module needs a cover with kernel of dimension " +
                std::to_string(c.ker.mod.total_dim());
  return s;
}

}  // namespace gk
