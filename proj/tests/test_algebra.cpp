#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gk/radical.hpp"
#include "support/build.hpp"

using namespace gk;

// Brute-force radical oracle for COMMUTATIVE algebras over small F_p: the
// radical is exactly the set of nilpotent elements, found by enumeration.
static Mat<Fp> brute_radical_commutative(const Algebra<Fp>& a) {
  const Fp k = a.k;
  int n = a.dim();
  std::vector<Vec<Fp>> nilpotents;
  std::vector<int> counter(n, 0);
  auto total = 1.0;
  for (int i = 0; i < n; ++i) total *= (double)k.p;
  REQUIRE(total <= 20000.0);
  for (;;) {
    Vec<Fp> x(n);
    for (int i = 0; i < n; ++i) x[i] = counter[i];
    Vec<Fp> pw = x;
    bool nil = false;
    for (int m = 0; m <= n + 1; ++m) {
      bool zero = true;
      for (auto& c : pw)
        if (c != 0) { zero = false; break; }
      if (zero) { nil = true; break; }
      pw = alg_mul(a, pw, x);
    }
    if (nil) nilpotents.push_back(x);
    int i = 0;
    while (i < n && ++counter[i] == k.p) counter[i++] = 0;
    if (i == n) break;
  }
  return col_basis(from_cols(k, n, nilpotents));
}

TEST_CASE("validate accepts group algebras and rejects broken gradings") {
  Fp f2(2);
  auto c2 = build::group_algebra(f2, build::cyclic_table(2));
  auto rep = validate(c2);
  CHECK(rep.valid_strict());

  // break degree additivity: declare g to have degree 1
  auto bad = c2;
  bad.deg[1] = 1;
  auto rep2 = validate(bad);
  CHECK(!rep2.degree_additive);
  CHECK(!rep2.failures.empty());
}

TEST_CASE("radical of F_2[C_2] is spanned by 1+g") {
  Fp f2(2);
  auto c2 = build::group_algebra(f2, build::cyclic_table(2));
  auto rad = radical_deg0(c2);
  REQUIRE(rad.n_cols == 1);
  CHECK(rad.at(0, 0) == rad.at(1, 0));
  CHECK(rad.at(0, 0) == 1);
  CHECK(same_span(rad, brute_radical_commutative(c2)));
}

TEST_CASE("radical: k x k is semisimple; product case F_2[C_2] x F_2") {
  Fp f2(2);
  auto kk = build::direct_product(build::group_algebra(f2, build::cyclic_table(1)),
                                  build::group_algebra(f2, build::cyclic_table(1)));
  CHECK(radical_deg0(kk).n_cols == 0);

  auto a0 = build::direct_product(build::group_algebra(f2, build::cyclic_table(2)),
                                  build::group_algebra(f2, build::cyclic_table(1)));
  auto rad = radical_deg0(a0);
  REQUIRE(rad.n_cols == 1);
  // spanned by 1_x + g, supported on the first block
  CHECK(rad.at(0, 0) == rad.at(1, 0));
  CHECK(rad.at(2, 0) == 0);
  CHECK(same_span(rad, brute_radical_commutative(a0)));
}

TEST_CASE("radical oracle agreement on more commutative examples") {
  for (std::int64_t p : {2, 3}) {
    Fp f(p);
    auto c2 = build::group_algebra(f, build::cyclic_table(2));
    auto c3 = build::group_algebra(f, build::cyclic_table(3));
    auto c4 = build::group_algebra(f, build::cyclic_table(4));
    for (auto* a : {&c2, &c3, &c4})
      CHECK(same_span(radical_deg0(*a), brute_radical_commutative(*a)));
    auto prod = build::direct_product(c2, c2);
    CHECK(same_span(radical_deg0(prod), brute_radical_commutative(prod)));
  }
}

TEST_CASE("radical over Q: group algebras are semisimple (Maschke)") {
  QQ q;
  auto c2 = build::group_algebra(q, build::cyclic_table(2));
  CHECK(radical_deg0(c2).n_cols == 0);
  auto c3 = build::group_algebra(q, build::cyclic_table(3));
  CHECK(radical_deg0(c3).n_cols == 0);
}

TEST_CASE("radical over Q: nilpotent part of a non-semisimple example") {
  // k[x]/(x^2): basis {1, t}, t^2 = 0 (degree 0)
  QQ q;
  using T = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;
  T prods;
  prods[{0, 0}] = {{0, 1}};
  prods[{0, 1}] = {{1, 1}};
  prods[{1, 0}] = {{1, 1}};
  auto a = build::make_algebra(q, {"one", "t"}, {0, 0}, prods, {0});
  auto rad = radical_deg0(a);
  REQUIRE(rad.n_cols == 1);
  CHECK(rad.at(0, 0) == 0);
  CHECK(rad.at(1, 0) != 0);
}

TEST_CASE("primitive idempotents: k x k, F_2[C_2], and a two-block degree-0 part") {
  Fp f2(2);
  auto kk = build::direct_product(build::group_algebra(f2, build::cyclic_table(1)),
                                  build::group_algebra(f2, build::cyclic_table(1)));
  auto idem = primitive_idempotents(kk);
  REQUIRE(idem.prim.size() == 2);
  CHECK(idem.num_blocks == 2);

  auto c2 = build::group_algebra(f2, build::cyclic_table(2));
  auto idem2 = primitive_idempotents(c2);
  REQUIRE(idem2.prim.size() == 1);  // local algebra
  CHECK(idem2.prim[0][0] == 1);
  CHECK(idem2.prim[0][1] == 0);

  auto a0 = build::direct_product(c2, build::group_algebra(f2, build::cyclic_table(1)));
  auto idem3 = primitive_idempotents(a0);
  REQUIRE(idem3.prim.size() == 2);
  CHECK(idem3.num_blocks == 2);
  // sum of idempotents = unit, orthogonal
  Vec<Fp> s(a0.dim(), 0);
  for (auto& e : idem3.prim)
    for (int t = 0; t < a0.dim(); ++t) s[t] = f2.add(s[t], e[t]);
  CHECK(s == a0.unit);
  auto prod = alg_mul(a0, idem3.prim[0], idem3.prim[1]);
  for (auto& c : prod) CHECK(c == 0);
}

TEST_CASE("primitive idempotents of Q[C_2] (char 0 splitting)") {
  QQ q;
  auto c2 = build::group_algebra(q, build::cyclic_table(2));
  auto idem = primitive_idempotents(c2);
  REQUIRE(idem.prim.size() == 2);
  for (auto& e : idem.prim) {
    auto sq = alg_mul(c2, e, e);
    CHECK(sq == e);
    // (1 +- g)/2
    CHECK(boost::multiprecision::abs(e[0]) == bigrat(1, 2));
  }
}

TEST_CASE("matrix algebra splits into d primitive idempotents in one block") {
  for (std::int64_t p : {2, 3}) {
    Fp f(p);
    auto m2 = build::matrix_algebra(f, 2);
    auto idem = primitive_idempotents(m2);
    CHECK(idem.num_blocks == 1);
    REQUIRE(idem.prim.size() == 2);
    for (auto& e : idem.prim) CHECK(alg_mul(m2, e, e) == e);
    auto p01 = alg_mul(m2, idem.prim[0], idem.prim[1]);
    for (auto& c : p01) CHECK(c == 0);
  }
}

TEST_CASE("non-split inputs abort with a diagnostic") {
  Fp f2(2);
  auto c3 = build::group_algebra(f2, build::cyclic_table(3));  // F_2 x F_4
  CHECK_THROWS_AS(primitive_idempotents(c3), NonSplitError);
  QQ q;
  auto qc3 = build::group_algebra(q, build::cyclic_table(3));  // Q x Q(w)
  CHECK_THROWS_AS(primitive_idempotents(qc3), NonSplitError);
}

TEST_CASE("F_3[C_3] is local: radical dim 2, a single idempotent") {
  Fp f3(3);
  auto c3 = build::group_algebra(f3, build::cyclic_table(3));
  CHECK(radical_deg0(c3).n_cols == 2);
  auto idem = primitive_idempotents(c3);
  CHECK(idem.prim.size() == 1);
}

TEST_CASE("opposite: involution, commutative fixed, grading preserved") {
  Fp f2(2);
  auto c2 = build::group_algebra(f2, build::cyclic_table(2));
  auto op = opposite(c2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(op.mul_table[i][j] == c2.mul_table[i][j]);

  auto arrow = build::arrow_algebra(f2, 1);
  auto once = opposite(arrow);
  auto twice = opposite(once);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(twice.mul_table[i][j] == arrow.mul_table[i][j]);
  CHECK(once.deg == arrow.deg);
  CHECK(validate(once).valid());
}

TEST_CASE("ideal J and graded radical") {
  Fp f2(2);
  auto arrow = build::arrow_algebra(f2, 1);
  auto j = ideal_J(arrow);
  REQUIRE(j.n_cols == 1);
  auto flags = make_ideal(arrow, j);
  CHECK(flags.left_ideal);
  CHECK(flags.right_ideal);
  CHECK(flags.nilpotent);

  // A concentrated in degree 0 and semisimple: graded radical zero
  auto kk = build::direct_product(build::group_algebra(f2, build::cyclic_table(1)),
                                  build::group_algebra(f2, build::cyclic_table(1)));
  CHECK(graded_radical(kk).n_cols == 0);

  // graded radical quotient is semisimple and the radical is nilpotent
  auto gr = graded_radical(arrow);
  auto gflags = make_ideal(arrow, gr);
  CHECK(gflags.left_ideal);
  CHECK(gflags.right_ideal);
  CHECK(gflags.nilpotent);
}

TEST_CASE("graded radical of a two-group-plus-arrow algebra has dim 3") {
  // two C_2 blocks in degree 0 plus one degree-1 element a with trivial action:
  // g a = a = a h, pieces rad(A_0) (dim 2) + A_1 (dim 1)
  Fp f2(2);
  auto a = build::two_group_arrow_algebra(f2);
  REQUIRE(validate(a).valid_strict());
  auto gr = graded_radical(a);
  CHECK(gr.n_cols == 3);
  auto dims = a.dims_by_degree();
  CHECK(dims == std::vector<int>{4, 1});
}

TEST_CASE("algebra_from_subspace round-trips the degree-zero part") {
  Fp f2(2);
  auto arrow = build::arrow_algebra(f2, 1);
  auto a0 = degree_zero_part(arrow);
  CHECK(a0.alg.dim() == 2);
  CHECK(validate(a0.alg).valid());
  CHECK(radical_deg0(a0.alg).n_cols == 0);
}
