#pragma once
// Finite-dimensional non-negatively graded algebras given by structure
// constants on a named basis. Everything downstream (modules, resolutions,
// Ext algebras) works over this type.
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gk/matrix.hpp"

namespace gk {

template <class F>
struct Algebra {
  F k;
  std::vector<std::string> names;
  std::vector<int> deg;                         // degree per basis element
  std::vector<std::vector<Vec<F>>> mul_table;   // mul_table[i][j] = b_i * b_j
  Vec<F> unit;

  explicit Algebra(F k_) : k(k_) {}
  int dim() const { return (int)names.size(); }
  int max_deg() const {
    int m = 0;
    for (int d : deg) m = std::max(m, d);
    return m;
  }
  std::vector<int> degree_indices(int d) const {
    std::vector<int> ix;
    for (int i = 0; i < dim(); ++i)
      if (deg[i] == d) ix.push_back(i);
    return ix;
  }
  std::vector<int> dims_by_degree() const {
    std::vector<int> v(max_deg() + 1, 0);
    for (int d : deg) ++v[d];
    return v;
  }
};

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

template <class F>
Vec<F> alg_mul(const Algebra<F>& a, const Vec<F>& x, const Vec<F>& y) {
  Vec<F> r(a.dim(), a.k.zero());
  for (int i = 0; i < a.dim(); ++i) {
    if (a.k.is_zero(x[i])) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (a.k.is_zero(y[j])) continue;
      auto c = a.k.mul(x[i], y[j]);
      const Vec<F>& prod = a.mul_table[i][j];
      for (int t = 0; t < a.dim(); ++t)
        if (!a.k.is_zero(prod[t])) r[t] = a.k.add(r[t], a.k.mul(c, prod[t]));
    }
  }
  return r;
}

// matrix of v -> x * v
template <class F>
Mat<F> left_mult_mat(const Algebra<F>& a, const Vec<F>& x) {
  Mat<F> m(a.k, a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    for (int i = 0; i < a.dim(); ++i) {
      if (a.k.is_zero(x[i])) continue;
      const Vec<F>& prod = a.mul_table[i][j];
      for (int t = 0; t < a.dim(); ++t)
        if (!a.k.is_zero(prod[t])) m.at(t, j) = a.k.add(m.at(t, j), a.k.mul(x[i], prod[t]));
    }
  }
  return m;
}

// matrix of v -> v * x
template <class F>
Mat<F> right_mult_mat(const Algebra<F>& a, const Vec<F>& x) {
  Mat<F> m(a.k, a.dim(), a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    for (int i = 0; i < a.dim(); ++i) {
      if (a.k.is_zero(x[i])) continue;
      const Vec<F>& prod = a.mul_table[j][i];
      for (int t = 0; t < a.dim(); ++t)
        if (!a.k.is_zero(prod[t])) m.at(t, j) = a.k.add(m.at(t, j), a.k.mul(x[i], prod[t]));
    }
  }
  return m;
}

template <class F>
Vec<F> basis_vec(const Algebra<F>& a, int i) {
  Vec<F> v(a.dim(), a.k.zero());
  v[i] = a.k.one();
  return v;
}

struct ValidationReport {
  bool degree_additive = true;
  bool associative = true;
  bool unital = true;
  bool degreewise_generated = true;
  std::vector<std::string> failures;
  bool valid() const { return degree_additive && associative && unital; }
  bool valid_strict() const { return valid() && degreewise_generated; }
};

template <class F>
ValidationReport validate(const Algebra<F>& a) {
  ValidationReport rep;
  int n = a.dim();
  const F& k = a.k;
  // degree additivity
  for (int i = 0; i < n && rep.degree_additive; ++i)
    for (int j = 0; j < n && rep.degree_additive; ++j)
      for (int t = 0; t < n; ++t)
        if (!k.is_zero(a.mul_table[i][j][t]) && a.deg[t] != a.deg[i] + a.deg[j]) {
          rep.degree_additive = false;
          rep.failures.push_back("degree additivity fails at (" + a.names[i] + "," +
                                 a.names[j] + ") -> " + a.names[t]);
          break;
        }
  // associativity on basis triples
  for (int i = 0; i < n && rep.associative; ++i)
    for (int j = 0; j < n && rep.associative; ++j) {
      const Vec<F>& ij = a.mul_table[i][j];
      for (int t = 0; t < n; ++t) {
        // (b_i b_j) b_t vs b_i (b_j b_t)
        Vec<F> lhs(n, k.zero());
        for (int s = 0; s < n; ++s)
          if (!k.is_zero(ij[s]))
            for (int u = 0; u < n; ++u)
              lhs[u] = k.add(lhs[u], k.mul(ij[s], a.mul_table[s][t][u]));
        const Vec<F>& jt = a.mul_table[j][t];
        Vec<F> rhs(n, k.zero());
        for (int s = 0; s < n; ++s)
          if (!k.is_zero(jt[s]))
            for (int u = 0; u < n; ++u)
              rhs[u] = k.add(rhs[u], k.mul(jt[s], a.mul_table[i][s][u]));
        bool same = true;
        for (int u = 0; u < n; ++u)
          if (!k.eq(lhs[u], rhs[u])) { same = false; break; }
        if (!same) {
          rep.associative = false;
          rep.failures.push_back("associativity fails at (" + a.names[i] + "," +
                                 a.names[j] + "," + a.names[t] + ")");
          break;
        }
      }
    }
  // unit
  for (int i = 0; i < n && rep.unital; ++i) {
    auto l = alg_mul(a, a.unit, basis_vec(a, i));
    auto r = alg_mul(a, basis_vec(a, i), a.unit);
    for (int t = 0; t < n; ++t) {
      auto want = (t == i) ? k.one() : k.zero();
      if (!k.eq(l[t], want) || !k.eq(r[t], want)) {
        rep.unital = false;
        rep.failures.push_back("unit fails on " + a.names[i]);
        break;
      }
    }
  }
  // degreewise generation: A_i * A_j spans A_{i+j}
  int md = a.max_deg();
  auto dims = a.dims_by_degree();
  for (int i = 0; i <= md && rep.degreewise_generated; ++i)
    for (int j = 0; i + j <= md; ++j) {
      if (dims[i + j] == 0) continue;
      auto bi = a.degree_indices(i), bj = a.degree_indices(j);
      std::vector<Vec<F>> prods;
      for (int x : bi)
        for (int y : bj) prods.push_back(a.mul_table[x][y]);
      Mat<F> span = from_cols(k, n, prods);
      if (rank(span) != dims[i + j]) {
        rep.degreewise_generated = false;
        rep.failures.push_back("A_" + std::to_string(i) + " * A_" + std::to_string(j) +
                               " does not span A_" + std::to_string(i + j));
        break;
      }
    }
  return rep;
}

template <class F>
Algebra<F> opposite(const Algebra<F>& a) {
  Algebra<F> o(a.k);
  o.names = a.names;
  o.deg = a.deg;
  o.unit = a.unit;
  o.mul_table.assign(a.dim(), std::vector<Vec<F>>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) o.mul_table[i][j] = a.mul_table[j][i];
  return o;
}

// Subalgebra/corner/quotient construction: given homogeneous spanning vectors
// (in ambient coordinates) of a subspace closed under multiplication and
// containing the wanted unit, build an Algebra on a chosen basis of it.
template <class F>
struct SubAlgebra {
  Algebra<F> alg;
  Mat<F> emb;  // ambient_dim x dim, columns are the chosen basis vectors
};

template <class F>
SubAlgebra<F> algebra_from_subspace(const Algebra<F>& ambient, const Mat<F>& span_vecs,
                                    const Vec<F>& unit, const std::string& tag) {
  const F& k = ambient.k;
  // split by degree and take a basis in each degree
  std::vector<Vec<F>> basis;
  std::vector<int> degs;
  auto sp = col_basis(span_vecs);
  for (int d = 0; d <= ambient.max_deg(); ++d) {
    // intersect span with degree-d coordinate subspace
    std::vector<int> ix = ambient.degree_indices(d);
    if (ix.empty()) continue;
    Mat<F> coord(k, ambient.dim(), (int)ix.size());
    for (int j = 0; j < (int)ix.size(); ++j) coord.at(ix[j], j) = k.one();
    auto inter = span_intersect(sp, coord);
    for (int j = 0; j < inter.n_cols; ++j) {
      basis.push_back(col_vec(inter, j));
      degs.push_back(d);
    }
  }
  if ((int)basis.size() != sp.n_cols)
    throw std::runtime_error(tag + ": subspace is not homogeneous");
  Mat<F> emb = from_cols(k, ambient.dim(), basis);
  auto linv = emb.n_cols > 0 ? left_inverse(emb) : Mat<F>(k, 0, ambient.dim());
  Algebra<F> alg(k);
  for (size_t i = 0; i < basis.size(); ++i) {
    alg.names.push_back(tag + "_" + std::to_string(i));
    alg.deg.push_back(degs[i]);
  }
  int m = (int)basis.size();
  alg.mul_table.assign(m, std::vector<Vec<F>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto prod = alg_mul(ambient, basis[i], basis[j]);
      if (!span_contains(emb, prod))
        throw std::runtime_error(tag + ": subspace not closed under multiplication");
      alg.mul_table[i][j] = mat_vec(linv, prod);
    }
  if (!span_contains(emb, unit)) throw std::runtime_error(tag + ": unit not in subspace");
  alg.unit = mat_vec(linv, unit);
  return SubAlgebra<F>{std::move(alg), std::move(emb)};
}

// The degree-0 part as an algebra in its own right, with the embedding.
template <class F>
SubAlgebra<F> degree_zero_part(const Algebra<F>& a) {
  auto ix = a.degree_indices(0);
  Mat<F> sp(a.k, a.dim(), (int)ix.size());
  for (int j = 0; j < (int)ix.size(); ++j) sp.at(ix[j], j) = a.k.one();
  return algebra_from_subspace(a, sp, a.unit, "a0");
}

// Quotient of an algebra by a two-sided ideal (given as a spanning matrix).
template <class F>
struct QuotientAlgebra {
  Algebra<F> alg;
  Mat<F> proj;  // dim_quot x ambient_dim
  Mat<F> sect;  // ambient_dim x dim_quot
};

template <class F>
QuotientAlgebra<F> algebra_quotient(const Algebra<F>& a, const Mat<F>& ideal,
                                    const std::string& tag) {
  const F& k = a.k;
  auto qm = quotient_map(ideal, a.dim());
  Algebra<F> alg(k);
  int m = qm.dim;
  for (int i = 0; i < m; ++i) {
    alg.names.push_back(tag + "_" + std::to_string(i));
    // degree of section representative: require homogeneous ideal so classes
    // inherit a degree; compute as degree of the section vector
    auto v = col_vec(qm.sect, i);
    int d = -1;
    for (int t = 0; t < a.dim(); ++t)
      if (!k.is_zero(v[t])) {
        if (d >= 0 && d != a.deg[t]) throw std::runtime_error(tag + ": quotient class not homogeneous");
        d = a.deg[t];
      }
    alg.deg.push_back(d < 0 ? 0 : d);
  }
  alg.mul_table.assign(m, std::vector<Vec<F>>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto prod = alg_mul(a, col_vec(qm.sect, i), col_vec(qm.sect, j));
      alg.mul_table[i][j] = mat_vec(qm.proj, prod);
    }
  alg.unit = mat_vec(qm.proj, a.unit);
  return QuotientAlgebra<F>{std::move(alg), std::move(qm.proj), std::move(qm.sect)};
}

// J = (+)_{i>=1} A_i as a spanning matrix (in ambient coordinates).
template <class F>
Mat<F> ideal_J(const Algebra<F>& a) {
  std::vector<Vec<F>> cols;
  for (int i = 0; i < a.dim(); ++i)
    if (a.deg[i] > 0) cols.push_back(basis_vec(a, i));
  return from_cols(a.k, a.dim(), cols);
}

// Verify a subspace is a left/right ideal / nilpotent; the SubspaceIdeal record.
template <class F>
struct SubspaceIdeal {
  Mat<F> basis;
  bool left_ideal = false, right_ideal = false, nilpotent = false;
};

template <class F>
SubspaceIdeal<F> make_ideal(const Algebra<F>& a, Mat<F> basis) {
  SubspaceIdeal<F> s{col_basis(basis), false, false, false};
  bool l = true, r = true;
  for (int i = 0; i < a.dim() && (l || r); ++i)
    for (int j = 0; j < s.basis.n_cols; ++j) {
      auto v = col_vec(s.basis, j);
      if (l && !span_contains(s.basis, alg_mul(a, basis_vec(a, i), v))) l = false;
      if (r && !span_contains(s.basis, alg_mul(a, v, basis_vec(a, i)))) r = false;
    }
  s.left_ideal = l;
  s.right_ideal = r;
  // nilpotency: iterate span of products until stable or zero
  Mat<F> cur = s.basis;
  for (int it = 0; it <= a.dim() + 1 && cur.n_cols > 0; ++it) {
    std::vector<Vec<F>> prods;
    for (int i = 0; i < s.basis.n_cols; ++i)
      for (int j = 0; j < cur.n_cols; ++j)
        prods.push_back(alg_mul(a, col_vec(s.basis, i), col_vec(cur, j)));
    Mat<F> nxt = col_basis(from_cols(a.k, a.dim(), prods));
    if (nxt.n_cols == 0) { s.nilpotent = true; break; }
    if (same_span(nxt, cur)) break;  // stabilized nonzero: not nilpotent
    cur = nxt;
  }
  if (s.basis.n_cols == 0) s.nilpotent = true;
  return s;
}

}  // namespace gk
