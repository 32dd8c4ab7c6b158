#pragma once
#include <cassert>
#include <optional>
#include <vector>

#include "gk/field.hpp"

namespace gk {

// Dense matrix over a field F. Vectors are columns throughout; the
// Kronecker product uses the row-major index convention (i1*n2+i2).
template <class F>
struct Mat {
  F k;
  int n_rows = 0, n_cols = 0;
  std::vector<typename F::elem> a;

  Mat(F k_, int r, int c) : k(k_), n_rows(r), n_cols(c), a(size_t(r) * c, k_.zero()) {}

  typename F::elem& at(int i, int j) { return a[size_t(i) * n_cols + j]; }
  const typename F::elem& at(int i, int j) const { return a[size_t(i) * n_cols + j]; }
};

template <class F>
using Vec = std::vector<typename F::elem>;

template <class F>
Mat<F> identity(F k, int n) {
  Mat<F> m(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
  return m;
}

template <class F>
Mat<F> zeros(F k, int r, int c) { return Mat<F>(k, r, c); }

template <class F>
bool is_zero(const Mat<F>& m) {
  for (auto& x : m.a)
    if (!m.k.is_zero(x)) return false;
  return true;
}

template <class F>
bool eq(const Mat<F>& x, const Mat<F>& y) {
  if (x.n_rows != y.n_rows || x.n_cols != y.n_cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!x.k.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> t(m.k, m.n_cols, m.n_rows);
  for (int i = 0; i < m.n_rows; ++i)
    for (int j = 0; j < m.n_cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <class F>
Mat<F> add(const Mat<F>& x, const Mat<F>& y) {
  assert(x.n_rows == y.n_rows && x.n_cols == y.n_cols);
  Mat<F> r(x.k, x.n_rows, x.n_cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.k.add(x.a[i], y.a[i]);
  return r;
}

template <class F>
Mat<F> sub(const Mat<F>& x, const Mat<F>& y) {
  assert(x.n_rows == y.n_rows && x.n_cols == y.n_cols);
  Mat<F> r(x.k, x.n_rows, x.n_cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.k.sub(x.a[i], y.a[i]);
  return r;
}

template <class F>
Mat<F> scalar_mul(const typename F::elem& c, const Mat<F>& x) {
  Mat<F> r(x.k, x.n_rows, x.n_cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.k.mul(c, x.a[i]);
  return r;
}

template <class F>
Mat<F> mul(const Mat<F>& x, const Mat<F>& y) {
  assert(x.n_cols == y.n_rows);
  Mat<F> r(x.k, x.n_rows, y.n_cols);
  for (int i = 0; i < x.n_rows; ++i)
    for (int l = 0; l < x.n_cols; ++l) {
      const auto& xl = x.at(i, l);
      if (x.k.is_zero(xl)) continue;
      for (int j = 0; j < y.n_cols; ++j)
        r.at(i, j) = x.k.add(r.at(i, j), x.k.mul(xl, y.at(l, j)));
    }
  return r;
}

template <class F>
Vec<F> mat_vec(const Mat<F>& m, const Vec<F>& v) {
  assert((int)v.size() == m.n_cols);
  Vec<F> r(m.n_rows, m.k.zero());
  for (int i = 0; i < m.n_rows; ++i)
    for (int j = 0; j < m.n_cols; ++j)
      if (!m.k.is_zero(m.at(i, j))) r[i] = m.k.add(r[i], m.k.mul(m.at(i, j), v[j]));
  return r;
}

template <class F>
Mat<F> hstack(const Mat<F>& x, const Mat<F>& y) {
  assert(x.n_rows == y.n_rows);
  Mat<F> r(x.k, x.n_rows, x.n_cols + y.n_cols);
  for (int i = 0; i < x.n_rows; ++i) {
    for (int j = 0; j < x.n_cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.n_cols; ++j) r.at(i, x.n_cols + j) = y.at(i, j);
  }
  return r;
}

template <class F>
Mat<F> vstack(const Mat<F>& x, const Mat<F>& y) {
  assert(x.n_cols == y.n_cols);
  Mat<F> r(x.k, x.n_rows + y.n_rows, x.n_cols);
  for (int i = 0; i < x.n_rows; ++i)
    for (int j = 0; j < x.n_cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.n_rows; ++i)
    for (int j = 0; j < x.n_cols; ++j) r.at(x.n_rows + i, j) = y.at(i, j);
  return r;
}

// Kronecker product, row-major convention: (x (x) y)[(i1,i2),(j1,j2)] with
// row index i1*y.rows+i2 and column index j1*y.cols+j2.
template <class F>
Mat<F> kron(const Mat<F>& x, const Mat<F>& y) {
  Mat<F> r(x.k, x.n_rows * y.n_rows, x.n_cols * y.n_cols);
  for (int i1 = 0; i1 < x.n_rows; ++i1)
    for (int j1 = 0; j1 < x.n_cols; ++j1) {
      const auto& c = x.at(i1, j1);
      if (x.k.is_zero(c)) continue;
      for (int i2 = 0; i2 < y.n_rows; ++i2)
        for (int j2 = 0; j2 < y.n_cols; ++j2)
          r.at(i1 * y.n_rows + i2, j1 * y.n_cols + j2) = x.k.mul(c, y.at(i2, j2));
    }
  return r;
}

template <class F>
struct Rref {
  Mat<F> r;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

template <class F>
Rref<F> rref(Mat<F> m) {
  const F& k = m.k;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.n_cols && row < m.n_rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.n_rows; ++i)
      if (!k.is_zero(m.at(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.n_cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    auto invp = k.inv(m.at(row, col));
    for (int j = col; j < m.n_cols; ++j) m.at(row, j) = k.mul(invp, m.at(row, j));
    for (int i = 0; i < m.n_rows; ++i) {
      if (i == row || k.is_zero(m.at(i, col))) continue;
      auto c = m.at(i, col);
      for (int j = col; j < m.n_cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return Rref<F>{std::move(m), std::move(pivots), row};
}

template <class F>
int rank(const Mat<F>& m) { return rref(m).rank; }

// Basis of the right null space, returned as columns.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  const F& k = m.k;
  auto e = rref(m);
  std::vector<char> is_piv(m.n_cols, 0);
  for (int c : e.pivots) is_piv[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.n_cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat<F> ker(k, m.n_cols, (int)free_cols.size());
  for (int fi = 0; fi < (int)free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    ker.at(fc, fi) = k.one();
    for (int r = 0; r < e.rank; ++r)
      ker.at(e.pivots[r], fi) = k.neg(e.r.at(r, fc));
  }
  return ker;
}

// Solve m x = b; returns nullopt if inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Mat<F>& m, const Vec<F>& b) {
  if ((int)b.size() != m.n_rows) throw std::invalid_argument("solve: dimension mismatch");
  const F& k = m.k;
  Mat<F> aug(k, m.n_rows, m.n_cols + 1);
  for (int i = 0; i < m.n_rows; ++i) {
    for (int j = 0; j < m.n_cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.n_cols) = b[i];
  }
  auto e = rref(std::move(aug));
  for (int r = 0; r < e.rank; ++r)
    if (e.pivots[r] == m.n_cols) return std::nullopt;
  Vec<F> x(m.n_cols, k.zero());
  for (int r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.r.at(r, m.n_cols);
  return x;
}

// Columnwise solve m X = B; nullopt if any column is inconsistent.
template <class F>
std::optional<Mat<F>> solve_mat(const Mat<F>& m, const Mat<F>& b) {
  assert(m.n_rows == b.n_rows);
  Mat<F> x(m.k, m.n_cols, b.n_cols);
  for (int j = 0; j < b.n_cols; ++j) {
    Vec<F> col(b.n_rows);
    for (int i = 0; i < b.n_rows; ++i) col[i] = b.at(i, j);
    auto s = solve(m, col);
    if (!s) return std::nullopt;
    for (int i = 0; i < m.n_cols; ++i) x.at(i, j) = (*s)[i];
  }
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.n_rows != m.n_cols) return std::nullopt;
  auto s = solve_mat(m, identity(m.k, m.n_rows));
  return s;
}

template <class F>
bool is_invertible(const Mat<F>& m) {
  return m.n_rows == m.n_cols && rank(m) == m.n_rows;
}

template <class F>
Mat<F> col(const Mat<F>& m, int j) {
  Mat<F> c(m.k, m.n_rows, 1);
  for (int i = 0; i < m.n_rows; ++i) c.at(i, 0) = m.at(i, j);
  return c;
}

template <class F>
Vec<F> col_vec(const Mat<F>& m, int j) {
  Vec<F> c(m.n_rows);
  for (int i = 0; i < m.n_rows; ++i) c[i] = m.at(i, j);
  return c;
}

template <class F>
Mat<F> from_cols(F k, int n_rows, const std::vector<Vec<F>>& cols) {
  Mat<F> m(k, n_rows, (int)cols.size());
  for (int j = 0; j < (int)cols.size(); ++j) {
    assert((int)cols[j].size() == n_rows);
    for (int i = 0; i < n_rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

// A maximal independent subset of the columns of m, kept in original form.
template <class F>
Mat<F> col_basis(const Mat<F>& m) {
  auto e = rref(m);
  Mat<F> b(m.k, m.n_rows, e.rank);
  for (int r = 0; r < e.rank; ++r)
    for (int i = 0; i < m.n_rows; ++i) b.at(i, r) = m.at(i, e.pivots[r]);
  return b;
}

// Canonical form of the column span: RREF of the transpose. Two matrices
// span the same column space iff their canonical forms are equal.
template <class F>
Mat<F> canonical_span(const Mat<F>& m) {
  auto e = rref(transpose(m));
  Mat<F> c(m.k, e.rank, m.n_rows);
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < m.n_rows; ++j) c.at(i, j) = e.r.at(i, j);
  return c;
}

template <class F>
bool same_span(const Mat<F>& x, const Mat<F>& y) {
  return eq(canonical_span(x), canonical_span(y));
}

template <class F>
bool span_contains(const Mat<F>& s, const Vec<F>& v) {
  return solve(s, v).has_value();
}

// spans(columns of s) contains spans(columns of t)?
template <class F>
bool span_contains_all(const Mat<F>& s, const Mat<F>& t) {
  return solve_mat(s, t).has_value();
}

template <class F>
Mat<F> span_sum(const Mat<F>& x, const Mat<F>& y) {
  return col_basis(hstack(x, y));
}

// Basis of colspace(x) ∩ colspace(y).
template <class F>
Mat<F> span_intersect(const Mat<F>& x, const Mat<F>& y) {
  if (x.n_cols == 0 || y.n_cols == 0) return Mat<F>(x.k, x.n_rows, 0);
  Mat<F> neg_y = scalar_mul(x.k.neg(x.k.one()), y);
  auto ker = kernel_basis(hstack(x, neg_y));  // x a + y(-b)... x a = y b
  Mat<F> coeff(x.k, x.n_cols, ker.n_cols);
  for (int i = 0; i < x.n_cols; ++i)
    for (int j = 0; j < ker.n_cols; ++j) coeff.at(i, j) = ker.at(i, j);
  return col_basis(mul(x, coeff));
}

// Quotient of k^n by the column span of s: proj is q x n, sect is n x q
// with proj*sect = I_q and proj vanishing on the span.
template <class F>
struct QuotientMap {
  Mat<F> proj;
  Mat<F> sect;
  int dim = 0;
};

template <class F>
QuotientMap<F> quotient_map(const Mat<F>& s, int n) {
  const F& k = s.k;
  assert(s.n_rows == n);
  auto e = rref(transpose(s));  // rows span the subspace
  std::vector<char> is_piv(n, 0);
  for (int c : e.pivots) is_piv[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  int q = (int)free_cols.size();
  QuotientMap<F> qm{Mat<F>(k, q, n), Mat<F>(k, n, q), q};
  for (int j = 0; j < q; ++j) {
    int fc = free_cols[j];
    qm.proj.at(j, fc) = k.add(qm.proj.at(j, fc), k.one());
    for (int r = 0; r < e.rank; ++r)
      qm.proj.at(j, e.pivots[r]) = k.sub(qm.proj.at(j, e.pivots[r]), e.r.at(r, fc));
    qm.sect.at(fc, j) = k.one();
  }
  return qm;
}

// A left inverse of a full-column-rank matrix m (valid on colspace(m)).
template <class F>
Mat<F> left_inverse(const Mat<F>& m) {
  const F& k = m.k;
  auto e = rref(m);
  assert(e.rank == m.n_cols && "left_inverse needs full column rank");
  // pivot rows of m: rows where, after elimination, each column has its pivot.
  // Find m restricted to a row subset that is invertible: use rref of m^T pivots.
  auto et = rref(transpose(m));
  // et.pivots are row indices of m forming an invertible square submatrix.
  Mat<F> sq(k, m.n_cols, m.n_cols);
  for (int i = 0; i < m.n_cols; ++i)
    for (int j = 0; j < m.n_cols; ++j) sq.at(i, j) = m.at(et.pivots[i], j);
  auto sq_inv = inverse(sq);
  assert(sq_inv);
  Mat<F> li(k, m.n_cols, m.n_rows);
  for (int i = 0; i < m.n_cols; ++i)
    for (int j = 0; j < m.n_cols; ++j) li.at(i, et.pivots[j]) = sq_inv->at(i, j);
  return li;
}

// Cohomology at V of  U --d_in--> V --d_out--> W  (requires d_out d_in = 0).
// reps: columns are class representatives in V; to_coords: maps any cocycle
// in V to its class coordinates (only meaningful on ker d_out).
template <class F>
struct Cohomology {
  int dim = 0;
  Mat<F> reps;
  Mat<F> to_coords;
};

template <class F>
Cohomology<F> cohomology(const Mat<F>& d_in, const Mat<F>& d_out) {
  const F& k = d_in.k;
  int v = d_in.n_rows;
  assert(d_out.n_cols == v);
  Mat<F> ker = kernel_basis(d_out);  // v x c
  auto im_coords = solve_mat(ker, d_in);
  assert(im_coords && "image not contained in kernel: d_out*d_in != 0");
  auto qm = quotient_map(col_basis(*im_coords), ker.n_cols);
  Mat<F> to_coords = ker.n_cols > 0 ? mul(qm.proj, left_inverse(ker)) : Mat<F>(k, 0, v);
  return Cohomology<F>{qm.dim, mul(ker, qm.sect), std::move(to_coords)};
}

}  // namespace gk
