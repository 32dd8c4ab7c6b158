#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/koszul.hpp"
#include "gk/quadratic.hpp"
#include "support/build.hpp"

using namespace gk;

namespace {

template <class F>
AlgebraPtr<F> ptr(Algebra<F> a) {
  return std::make_shared<const Algebra<F>>(std::move(a));
}

// k[x]/(x^e) with x in degree 1
template <class F>
Algebra<F> truncated_poly(F k, int e) {
  using T = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  T prods;
  std::vector<std::string> names;
  std::vector<int> deg;
  for (int i = 0; i < e; ++i) {
    names.push_back(i == 0 ? "1" : "x" + std::to_string(i));
    deg.push_back(i);
    for (int j = 0; i + j < e; ++j) prods[{i, j}] = {{i + j, 1}};
  }
  return build::make_algebra(k, names, deg, prods, {0});
}

// run the whole pipeline and compare the resolution verdict against the
// syzygy-based Koszulness check
template <class F>
void check_equivalence(AlgebraPtr<F> alg, int n, bool expect_koszul) {
  auto td = tensor_data(alg, n);
  auto tc = tensor_complex(td);
  auto rep = complex_check(td, tc, n);
  CHECK(rep.d2_zero);
  bool koszul = is_koszul_module(a0_module(alg), n).ok;
  CHECK(koszul == expect_koszul);
  CHECK(rep.is_resolution() == koszul);
  for (int i = 1; i <= n; ++i) CHECK(validate_module(tc.terms[i]).valid());
}

}  // namespace

TEST_CASE("tensor powers over the degree-zero part collapse correctly") {
  Fp f2(2);
  // three-object algebra: the only surviving length-2 word is b (x) a
  auto b = ptr(build::xyz_algebra(f2));
  auto td = tensor_data(b, 4);
  CHECK(td.m == 2);
  CHECK(td.bdim(2) == 1);
  CHECK(td.bdim(3) == 0);
  CHECK(td.rel2.n_cols == 0);  // multiplication B_2 -> A_2 is injective

  // hereditary arrow: a (x) a dies already in B_2
  auto h = ptr(build::arrow_algebra(f2, 1));
  auto th = tensor_data(h, 3);
  CHECK(th.bdim(2) == 0);

  // dual numbers: B_n is one-dimensional in every degree, relations start at 2
  auto d = ptr(truncated_poly(f2, 2));
  auto tdd = tensor_data(d, 4);
  for (int n = 2; n <= 4; ++n) CHECK(tdd.bdim(n) == 1);
  CHECK(tdd.rel2.n_cols == 1);
}

TEST_CASE("quadraticity verdicts") {
  Fp f2(2);
  CHECK(is_quadratic(tensor_data(ptr(build::xyz_algebra(f2)), 4)).ok);
  CHECK(is_quadratic(tensor_data(ptr(build::arrow_algebra(f2, 1)), 4)).ok);
  CHECK(is_quadratic(tensor_data(ptr(build::two_group_arrow_algebra(f2)), 4)).ok);
  CHECK(is_quadratic(tensor_data(ptr(build::aut_arrow_algebra(f2)), 4)).ok);
  CHECK(is_quadratic(tensor_data(ptr(truncated_poly(f2, 2)), 4)).ok);

  // k[x]/(x^3) has a cubic relation that no quadratic one generates
  auto v = is_quadratic(tensor_data(ptr(truncated_poly(f2, 3)), 4));
  CHECK(!v.ok);
  CHECK(v.first_fail == 3);
}

TEST_CASE("inducing a module up from the degree-zero part recovers the algebra") {
  Fp f2(2);
  auto b = ptr(build::xyz_algebra(f2));
  const Algebra<Fp>& a = *b;
  auto ix0 = a.degree_indices(0);
  int n0 = (int)ix0.size();
  std::vector<Mat<Fp>> vact;
  for (int u = 0; u < n0; ++u) {
    Mat<Fp> m(f2, n0, n0);
    for (int j = 0; j < n0; ++j) {
      const Vec<Fp>& prod = a.mul_table[ix0[u]][ix0[j]];
      for (int t = 0; t < n0; ++t) m.at(t, j) = prod[ix0[t]];
    }
    vact.push_back(std::move(m));
  }
  auto ind = induced_module(b, n0, vact, 0);
  CHECK(validate_module(ind.mod).valid());
  CHECK(ind.mod.dims == regular_module(b).dims);
  CHECK(is_isomorphic(ind.mod, regular_module(b)) == Tri::yes);
}

TEST_CASE("complex terms, differentials, and the resolution criterion") {
  Fp f2(2);
  Fp f3(3);

  // Koszul fixtures: the complex is an exact resolution by projectives
  check_equivalence(ptr(build::arrow_algebra(f2, 1)), 4, true);
  check_equivalence(ptr(build::aut_arrow_algebra(f2)), 4, true);
  check_equivalence(ptr(truncated_poly(f2, 2)), 4, true);
  check_equivalence(ptr(build::xyz_algebra(f3)), 4, true);

  // quadratic but not Koszul: exact yet with a non-projective term
  {
    auto alg = ptr(build::xyz_algebra(f2));
    auto td = tensor_data(alg, 4);
    auto tc = tensor_complex(td);
    auto rep = complex_check(td, tc, 4);
    CHECK(rep.d2_zero);
    CHECK(rep.exact);
    CHECK(!rep.terms_projective);
    CHECK(!rep.is_resolution());
    CHECK(!is_koszul_module(a0_module(alg), 4).ok);
  }
  check_equivalence(ptr(build::two_group_arrow_algebra(f2)), 4, false);

  // not quadratic: the complex misses the cubic relation and is not exact
  {
    auto alg = ptr(truncated_poly(f2, 3));
    auto td = tensor_data(alg, 4);
    auto tc = tensor_complex(td);
    auto rep = complex_check(td, tc, 4);
    CHECK(rep.d2_zero);
    CHECK(!rep.exact);
  }
}

TEST_CASE("the dual-numbers complex has the classical shape") {
  Fp f2(2);
  auto alg = ptr(truncated_poly(f2, 2));
  auto td = tensor_data(alg, 4);
  auto tc = tensor_complex(td);
  for (int n = 1; n <= 4; ++n) {
    CHECK(tc.pbasis[n].n_cols == 1);
    CHECK(tc.terms[n].lo == n);
    CHECK(tc.terms[n].dims == std::vector<int>{1, 1});
  }
}
