#pragma once
// Independent oracle for Ext dimensions: resolves by free covers (one summand
// A[d] per chosen generator, no idempotent or minimal-cover machinery), then
// computes the cochain complex hom(F^*, A_0) directly from generator data.
// Internal degrees are tracked; returns dim ext^i at internal degree j.
#include <map>
#include <vector>

#include "gk/gmod.hpp"

namespace oracle {

using namespace gk;

// left multiplication of the degree-0 part on itself (in A_0 coordinates)
template <class F>
std::vector<Mat<F>> a0_left_mults(const Algebra<F>& a) {
  auto a0 = degree_zero_part(a);
  std::vector<Mat<F>> ms;
  for (int i = 0; i < a0.alg.dim(); ++i) ms.push_back(left_mult_mat(a0.alg, basis_vec(a0.alg, i)));
  return ms;
}

template <class F>
struct FreeStep {
  std::vector<int> gen_deg;              // degree of each generator
  Module<F> f;                           // the free module ⊕ A[gen_deg]
  // images of generators in the previous object (module M for step 0, F^{i-1}
  // for later steps), as component-coordinate vectors at the generator degree
  std::vector<Vec<F>> gen_image;
};

// offsets of generator blocks inside a component of the free module
template <class F>
int free_block_offset(const Algebra<F>& a, const std::vector<int>& gen_deg, int upto, int d) {
  int off = 0;
  auto dims = a.dims_by_degree();
  for (int g = 0; g < upto; ++g) {
    int dd = d - gen_deg[g];
    if (dd >= 0 && dd < (int)dims.size()) off += dims[dd];
  }
  return off;
}

template <class F>
Module<F> free_module_on(AlgebraPtr<F> alg, const std::vector<int>& gen_deg) {
  Module<F> f = zero_module(alg, 0, {});
  bool first = true;
  for (int d : gen_deg) {
    auto s = shift(regular_module(alg), d);
    f = first ? s : direct_sum(f, s);
    first = false;
  }
  return f;
}

// the map F -> target (a module) sending generator g to gen_image[g]
template <class F>
std::vector<Mat<F>> free_map(const Module<F>& f, const std::vector<int>& gen_deg,
                             const std::vector<Vec<F>>& gen_image, const Module<F>& target) {
  const Algebra<F>& a = *f.alg;
  const F& k = a.k;
  std::vector<Mat<F>> out;
  for (int t = 0; t < f.n_comp(); ++t) {
    int d = f.lo + t;
    Mat<F> m(k, target.dim_at(d), f.dims[t]);
    for (size_t g = 0; g < gen_deg.size(); ++g) {
      int xd = d - gen_deg[g];
      auto ix = a.degree_indices(xd);
      int off = free_block_offset(a, gen_deg, (int)g, d);
      for (size_t c = 0; c < ix.size(); ++c) {
        auto xm = act_elem_mat(target, basis_vec(a, ix[c]), xd, gen_deg[g]);
        if (xm.n_rows == 0) continue;
        auto img = mat_vec(xm, gen_image[g]);
        for (int r = 0; r < (int)img.size(); ++r) m.at(r, off + (int)c) = img[r];
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

// greedy generating set of the per-degree kernel subspaces of a map out of f
template <class F>
std::pair<std::vector<int>, std::vector<Vec<F>>> kernel_generators(
    const Module<F>& f, const std::vector<Mat<F>>& map_mats) {
  const F& k = f.alg->k;
  std::vector<Mat<F>> kspans;
  for (int t = 0; t < f.n_comp(); ++t) kspans.push_back(kernel_basis(map_mats[t]));
  std::vector<int> gd;
  std::vector<Vec<F>> gv;
  std::vector<Mat<F>> have;
  for (int t = 0; t < f.n_comp(); ++t) have.push_back(Mat<F>(k, f.dims[t], 0));
  for (int t = 0; t < f.n_comp(); ++t) {
    for (int j = 0; j < kspans[t].n_cols; ++j) {
      auto v = col_vec(kspans[t], j);
      if (span_contains(have[t], v)) continue;
      gd.push_back(f.lo + t);
      gv.push_back(v);
      std::vector<Mat<F>> seed;
      for (int u = 0; u < f.n_comp(); ++u)
        seed.push_back(u == t ? from_cols(k, f.dims[u], {v}) : Mat<F>(k, f.dims[u], 0));
      auto cl = closure_spans(f, seed);
      for (int u = 0; u < f.n_comp(); ++u) have[u] = span_sum(have[u], cl[u]);
    }
  }
  return {gd, gv};
}

// dim ext^i(M, A_0) at each internal degree j, for i = 0..n
template <class F>
std::vector<std::map<int, int>> ext_dims(const Module<F>& m_in, int n) {
  auto m = trim(m_in);
  AlgebraPtr<F> alg = m.alg;
  const Algebra<F>& a = *alg;
  const F& k = a.k;
  int n0 = (int)a.degree_indices(0).size();
  auto lm = a0_left_mults(a);
  auto a0 = degree_zero_part(a);

  // build the free resolution F^0 -> F^1 -> ... -> F^{n+1}
  std::vector<FreeStep<F>> steps;
  {
    FreeStep<F> s0{{}, zero_module(alg, 0, {}), {}};
    for (int t = 0; t < m.n_comp(); ++t)
      for (int c = 0; c < m.dims[t]; ++c) {
        s0.gen_deg.push_back(m.lo + t);
        Vec<F> v(m.dims[t], k.zero());
        v[c] = k.one();
        s0.gen_image.push_back(v);
      }
    s0.f = free_module_on(alg, s0.gen_deg);
    steps.push_back(std::move(s0));
  }
  for (int i = 1; i <= n + 1; ++i) {
    const FreeStep<F>& prev = steps.back();
    const Module<F>& tgt = (i == 1) ? m : steps[steps.size() - 2].f;
    auto mats = free_map(prev.f, prev.gen_deg, prev.gen_image, tgt);
    auto [gd, gv] = kernel_generators(prev.f, mats);
    FreeStep<F> s{gd, free_module_on(alg, gd), gv};
    steps.push_back(std::move(s));
  }

  // cochain spaces: C^i_j = ⊕_{generators of F^i at degree j} A_0
  // differential (δf)(gen') = Σ over degree-0 coordinates of d(gen') acting on f
  auto delta = [&](int i, int j) -> Mat<F> {
    // C^i_j -> C^{i+1}_j; generator data of F^{i+1} gives the coordinates
    const FreeStep<F>& up = steps[i + 1];
    const FreeStep<F>& lo = steps[i];
    std::vector<int> lo_at, up_at;
    for (size_t g = 0; g < lo.gen_deg.size(); ++g)
      if (lo.gen_deg[g] == j) lo_at.push_back((int)g);
    for (size_t g = 0; g < up.gen_deg.size(); ++g)
      if (up.gen_deg[g] == j) up_at.push_back((int)g);
    Mat<F> D(k, (int)up_at.size() * n0, (int)lo_at.size() * n0);
    for (size_t ug = 0; ug < up_at.size(); ++ug) {
      // d(gen') lives in F^i at degree j; pick out coefficients of blocks
      // (g, x) with deg x = 0 (only those act nonzero on A_0)
      const Vec<F>& dv = up.gen_image[up_at[ug]];
      for (size_t lg = 0; lg < lo_at.size(); ++lg) {
        int g = lo_at[lg];
        int off = free_block_offset(a, lo.gen_deg, g, j);
        auto ix0 = a.degree_indices(0);
        // block contribution: Σ_x c_x · (left mult by x on A_0)
        Mat<F> blk(k, n0, n0);
        for (size_t c = 0; c < ix0.size(); ++c) {
          auto coef = dv[off + (int)c];
          if (k.is_zero(coef)) continue;
          // x is the c-th degree-0 basis element; its A_0 coordinates
          auto xc = solve(a0.emb, basis_vec(a, ix0[c]));
          if (!xc) throw std::logic_error("oracle: degree-0 element outside A_0 span");
          Mat<F> lx(k, n0, n0);
          for (size_t w = 0; w < xc->size(); ++w) {
            if (k.is_zero((*xc)[w])) continue;
            for (int r = 0; r < n0; ++r)
              for (int cc = 0; cc < n0; ++cc)
                lx.at(r, cc) = k.add(lx.at(r, cc), k.mul((*xc)[w], lm[w].at(r, cc)));
          }
          for (int r = 0; r < n0; ++r)
            for (int cc = 0; cc < n0; ++cc)
              blk.at(r, cc) = k.add(blk.at(r, cc), k.mul(coef, lx.at(r, cc)));
        }
        for (int r = 0; r < n0; ++r)
          for (int cc = 0; cc < n0; ++cc) D.at((int)ug * n0 + r, (int)lg * n0 + cc) = blk.at(r, cc);
      }
    }
    return D;
  };

  std::vector<std::map<int, int>> out(n + 1);
  // internal degrees present anywhere
  std::vector<int> alljs;
  for (int i = 0; i <= n + 1; ++i)
    for (int d : steps[i].gen_deg) alljs.push_back(d);
  std::sort(alljs.begin(), alljs.end());
  alljs.erase(std::unique(alljs.begin(), alljs.end()), alljs.end());
  for (int i = 0; i <= n; ++i)
    for (int j : alljs) {
      int cnt = 0;
      for (int d : steps[i].gen_deg)
        if (d == j) ++cnt;
      int cdim = cnt * n0;
      if (cdim == 0) continue;
      auto dout = delta(i, j);
      int kd = cdim - rank(dout);
      int rin = 0;
      if (i > 0) rin = rank(delta(i - 1, j));
      int e = kd - rin;
      if (e > 0) out[i][j] = e;
    }
  return out;
}

}  // namespace oracle
