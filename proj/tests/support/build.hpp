#pragma once
// Small constructors for algebras used across the test suites.
#include <map>
#include <string>
#include <vector>

#include "gk/algebra.hpp"

namespace build {

template <class F>
gk::Algebra<F> make_algebra(F k, std::vector<std::string> names, std::vector<int> deg,
                            const std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>& prods,
                            const std::vector<int>& unit_indices) {
  gk::Algebra<F> a(k);
  a.names = std::move(names);
  a.deg = std::move(deg);
  int n = a.dim();
  a.mul_table.assign(n, std::vector<gk::Vec<F>>(n, gk::Vec<F>(n, k.zero())));
  for (auto& [ij, terms] : prods)
    for (auto& [t, c] : terms)
      a.mul_table[ij.first][ij.second][t] = k.add(a.mul_table[ij.first][ij.second][t], k.from_int(c));
  a.unit.assign(n, k.zero());
  for (int i : unit_indices) a.unit[i] = k.add(a.unit[i], k.one());
  return a;
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

// group algebra in degree 0 from a multiplication table (t[i][j] = index of g_i g_j,
// index 0 = identity)
template <class F>
gk::Algebra<F> group_algebra(F k, const std::vector<std::vector<int>>& t,
                             const std::string& prefix = "g") {
  int n = (int)t.size();
  gk::Algebra<F> a(k);
  for (int i = 0; i < n; ++i) a.names.push_back(prefix + std::to_string(i));
  a.deg.assign(n, 0);
  a.mul_table.assign(n, std::vector<gk::Vec<F>>(n, gk::Vec<F>(n, k.zero())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.mul_table[i][j][t[i][j]] = k.one();
  a.unit.assign(n, k.zero());
  a.unit[0] = k.one();
  return a;
}

template <class F>
gk::Algebra<F> direct_product(const gk::Algebra<F>& x, const gk::Algebra<F>& y) {
  const F& k = x.k;
  gk::Algebra<F> a(k);
  int nx = x.dim(), ny = y.dim(), n = nx + ny;
  for (auto& s : x.names) a.names.push_back("l." + s);
  for (auto& s : y.names) a.names.push_back("r." + s);
  a.deg = x.deg;
  a.deg.insert(a.deg.end(), y.deg.begin(), y.deg.end());
  a.mul_table.assign(n, std::vector<gk::Vec<F>>(n, gk::Vec<F>(n, k.zero())));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nx; ++j)
      for (int t = 0; t < nx; ++t) a.mul_table[i][j][t] = x.mul_table[i][j][t];
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < ny; ++j)
      for (int t = 0; t < ny; ++t) a.mul_table[nx + i][nx + j][nx + t] = y.mul_table[i][j][t];
  a.unit.assign(n, k.zero());
  for (int i = 0; i < nx; ++i) a.unit[i] = x.unit[i];
  for (int i = 0; i < ny; ++i) a.unit[nx + i] = y.unit[i];
  return a;
}

// full matrix algebra M_d over k, basis e_{ij} (row-major), degree 0
template <class F>
gk::Algebra<F> matrix_algebra(F k, int d) {
  gk::Algebra<F> a(k);
  int n = d * d;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      a.names.push_back("e" + std::to_string(i) + std::to_string(j));
  a.deg.assign(n, 0);
  a.mul_table.assign(n, std::vector<gk::Vec<F>>(n, gk::Vec<F>(n, k.zero())));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
          if (j == s) a.mul_table[i * d + j][s * d + t][i * d + t] = k.one();
  a.unit.assign(n, k.zero());
  for (int i = 0; i < d; ++i) a.unit[i * d + i] = k.one();
  return a;
}

// path algebra of the quiver x --arrow--> y, arrow in the given degree;
// basis {1x, 1y, arrow}
template <class F>
gk::Algebra<F> arrow_algebra(F k, int arrow_degree) {
  using T = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  T prods;
  prods[{0, 0}] = {{0, 1}};          // 1x 1x
  prods[{1, 1}] = {{1, 1}};          // 1y 1y
  prods[{2, 0}] = {{2, 1}};          // a 1x = a   (a: x -> y)
  prods[{1, 2}] = {{2, 1}};          // 1y a = a
  return make_algebra(k, {"ex", "ey", "a"}, {0, 0, arrow_degree}, prods, {0, 1});
}

// category algebra of x --a--> y --b--> z with Aut(y) = {1,g} acting trivially
// on a and b (g a = a, b g = b); basis 1x,1y,g,1z,a,b,ba; degrees 0,0,0,0,1,1,2
template <class F>
gk::Algebra<F> xyz_algebra(F k) {
  using T = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  T prods;
  prods[{0, 0}] = {{0, 1}};                          // 1x 1x
  prods[{1, 1}] = {{1, 1}}; prods[{1, 2}] = {{2, 1}};
  prods[{2, 1}] = {{2, 1}}; prods[{2, 2}] = {{1, 1}};  // C_2 at y
  prods[{3, 3}] = {{3, 1}};                          // 1z
  prods[{4, 0}] = {{4, 1}};                          // a 1x
  prods[{1, 4}] = {{4, 1}}; prods[{2, 4}] = {{4, 1}};  // 1y a = g a = a
  prods[{5, 1}] = {{5, 1}}; prods[{5, 2}] = {{5, 1}};  // b 1y = b g = b
  prods[{3, 5}] = {{5, 1}};                          // 1z b
  prods[{5, 4}] = {{6, 1}};                          // b a = ba
  prods[{6, 0}] = {{6, 1}}; prods[{3, 6}] = {{6, 1}};  // ba 1x, 1z ba
  return make_algebra(k, {"ex", "ey", "g", "ez", "a", "b", "ba"},
                      {0, 0, 0, 0, 1, 1, 2}, prods, {0, 1, 3});
}

// dim-4 algebra: objects x (Aut = C_2) and y (trivial), one arrow al: x -> y
// with al∘g = al; basis 1x, g, 1y, al; degreewise dims (3,1)
template <class F>
gk::Algebra<F> aut_arrow_algebra(F k) {
  using T = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  T prods;
  prods[{0, 0}] = {{0, 1}}; prods[{0, 1}] = {{1, 1}};
  prods[{1, 0}] = {{1, 1}}; prods[{1, 1}] = {{0, 1}};
  prods[{2, 2}] = {{2, 1}};
  prods[{3, 0}] = {{3, 1}}; prods[{3, 1}] = {{3, 1}};  // al 1x = al g = al
  prods[{2, 3}] = {{3, 1}};                            // 1y al = al
  return make_algebra(k, {"ex", "g", "ey", "al"}, {0, 0, 0, 1}, prods, {0, 2});
}

// the dim-5 algebra with two C_2 blocks in degree 0 and one arrow with trivial
// two-sided automorphism action; degreewise dims (4,1)
template <class F>
gk::Algebra<F> two_group_arrow_algebra(F k) {
  using T = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  T prods;
  prods[{0, 0}] = {{0, 1}}; prods[{0, 1}] = {{1, 1}};
  prods[{1, 0}] = {{1, 1}}; prods[{1, 1}] = {{0, 1}};
  prods[{2, 2}] = {{2, 1}}; prods[{2, 3}] = {{3, 1}};
  prods[{3, 2}] = {{3, 1}}; prods[{3, 3}] = {{2, 1}};
  prods[{4, 0}] = {{4, 1}}; prods[{4, 1}] = {{4, 1}};
  prods[{2, 4}] = {{4, 1}}; prods[{3, 4}] = {{4, 1}};
  return make_algebra(k, {"ex", "g", "ey", "h", "al"}, {0, 0, 0, 0, 1}, prods, {0, 2});
}

}  // namespace build
