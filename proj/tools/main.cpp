// gkoszul: command-line frontend for the graded algebra toolkit.
//
// Reads a JSON description of a finite EI category or a graded algebra,
// runs the requested checks, and emits a machine-readable (JSON, stable
// key order) or human-readable (text) report.
//
// Exit codes: 0 all requested verdicts true; 1 some verdict false;
// 2 input error; 3 internal inconsistency (an equivalence cross-check
// between independently computed results failed — a bug signal).
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gk/eicat.hpp"
#include "gk/quadratic.hpp"
#include "gk/strat.hpp"

using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// input document

struct ProductEntry {
  std::string left, right;
  std::vector<std::pair<std::string, long long>> terms;
};

struct ModuleSpec {
  std::string name;
  std::string type;                // a0 | regular | projective | radical_of_projective | table
  std::string object;              // for projective kinds over an EI category
  std::vector<std::string> idem;   // for projective kinds over a graded algebra
  int shift = 0;
  // explicit table
  int lo = 0;
  std::vector<int> dims;
  json act;  // { basis name : [ per-component matrices ] }
};

struct InputDoc {
  std::string kind;  // ei_category | graded_algebra
  long long characteristic = 0;
  // ei_category
  gk::EICat ei;
  // graded_algebra
  std::vector<std::string> basis;
  std::vector<int> degrees;
  std::vector<std::string> unit;
  std::vector<ProductEntry> products;
  // shared options
  std::vector<std::pair<std::string, std::vector<std::string>>> poset;  // object partition
  std::vector<ModuleSpec> modules;
  int max_degree = 4;
  std::vector<std::string> checks;  // optional restriction for `report`
};

template <class T>
T get_field(const json& j, const std::string& key) {
  if (!j.contains(key)) throw InputError("missing key \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError("key \"" + key + "\" has the wrong type");
  }
}

InputDoc parse_document(const json& j) {
  InputDoc doc;
  doc.kind = get_field<std::string>(j, "kind");
  if (doc.kind != "ei_category" && doc.kind != "graded_algebra")
    throw InputError("kind must be \"ei_category\" or \"graded_algebra\"");
  doc.characteristic = get_field<long long>(j, "characteristic");
  if (doc.characteristic != 0 && !is_prime_ll(doc.characteristic))
    throw InputError("characteristic " + std::to_string(doc.characteristic) +
                     " is neither 0 nor prime");

  if (doc.kind == "ei_category") {
    auto objs = get_field<std::vector<std::string>>(j, "objects");
    std::map<std::string, int> obj_ix;
    for (int i = 0; i < (int)objs.size(); ++i)
      if (!obj_ix.emplace(objs[i], i).second)
        throw InputError("duplicate object \"" + objs[i] + "\"");
    doc.ei.n_obj = (int)objs.size();
    doc.ei.obj_names = objs;
    doc.ei.id_of.assign(doc.ei.n_obj, -1);
    std::map<std::string, int> mor_ix;
    if (!j.contains("morphisms")) throw InputError("missing key \"morphisms\"");
    for (auto& m : j.at("morphisms")) {
      gk::EIMorph mo;
      mo.name = get_field<std::string>(m, "name");
      auto src = get_field<std::string>(m, "src");
      auto tgt = get_field<std::string>(m, "tgt");
      if (!obj_ix.count(src)) throw InputError("morphism \"" + mo.name + "\": unknown src \"" + src + "\"");
      if (!obj_ix.count(tgt)) throw InputError("morphism \"" + mo.name + "\": unknown tgt \"" + tgt + "\"");
      mo.src = obj_ix[src];
      mo.tgt = obj_ix[tgt];
      int ix = (int)doc.ei.mor.size();
      if (!mor_ix.emplace(mo.name, ix).second)
        throw InputError("duplicate morphism \"" + mo.name + "\"");
      doc.ei.mor.push_back(mo);
      if (m.value("identity", false)) {
        if (doc.ei.id_of[mo.src] >= 0)
          throw InputError("object \"" + src + "\" has two identities");
        if (mo.src != mo.tgt)
          throw InputError("identity \"" + mo.name + "\" is not an endomorphism");
        doc.ei.id_of[mo.src] = ix;
      }
    }
    for (int x = 0; x < doc.ei.n_obj; ++x)
      if (doc.ei.id_of[x] < 0)
        throw InputError("object \"" + objs[x] + "\" has no identity morphism");
    int n = doc.ei.n_mor();
    doc.ei.comp.assign(n, std::vector<int>(n, -1));
    for (int f = 0; f < n; ++f) {
      doc.ei.comp[f][doc.ei.id_of[doc.ei.mor[f].src]] = f;
      doc.ei.comp[doc.ei.id_of[doc.ei.mor[f].tgt]][f] = f;
    }
    for (auto& t : j.value("composition", json::array())) {
      auto tri = t.get<std::vector<std::string>>();
      if (tri.size() != 3) throw InputError("composition entries must be triples [g, f, g*f]");
      for (auto& nm : tri)
        if (!mor_ix.count(nm))
          throw InputError("composition references unknown morphism \"" + nm + "\"");
      doc.ei.comp[mor_ix[tri[0]]][mor_ix[tri[1]]] = mor_ix[tri[2]];
    }
  } else {
    doc.basis = get_field<std::vector<std::string>>(j, "basis");
    doc.degrees = get_field<std::vector<int>>(j, "degrees");
    if (doc.basis.size() != doc.degrees.size())
      throw InputError("\"basis\" and \"degrees\" have different lengths");
    std::map<std::string, int> ix;
    for (int i = 0; i < (int)doc.basis.size(); ++i)
      if (!ix.emplace(doc.basis[i], i).second)
        throw InputError("duplicate basis element \"" + doc.basis[i] + "\"");
    auto need = [&](const std::string& nm, const std::string& where) {
      if (!ix.count(nm)) throw InputError(where + " references unknown basis element \"" + nm + "\"");
    };
    doc.unit = get_field<std::vector<std::string>>(j, "unit");
    for (auto& u : doc.unit) need(u, "\"unit\"");
    for (auto& p : j.value("products", json::array())) {
      ProductEntry pe;
      pe.left = get_field<std::string>(p, "left");
      pe.right = get_field<std::string>(p, "right");
      need(pe.left, "\"products\"");
      need(pe.right, "\"products\"");
      for (auto& t : get_field<json>(p, "terms")) {
        auto nm = t.at(0).get<std::string>();
        need(nm, "\"products\" term");
        pe.terms.push_back({nm, t.at(1).get<long long>()});
      }
      doc.products.push_back(std::move(pe));
    }
    for (auto& po : j.value("poset", json::array())) {
      auto nm = po.at(0).get<std::string>();
      auto elems = po.at(1).get<std::vector<std::string>>();
      for (auto& e : elems) need(e, "\"poset\"");
      doc.poset.push_back({nm, elems});
    }
  }

  for (auto& m : j.value("modules", json::array())) {
    ModuleSpec ms;
    ms.name = get_field<std::string>(m, "name");
    ms.type = get_field<std::string>(m, "type");
    ms.object = m.value("object", std::string());
    ms.idem = m.value("idempotent", std::vector<std::string>());
    ms.shift = m.value("shift", 0);
    ms.lo = m.value("lo", 0);
    ms.dims = m.value("dims", std::vector<int>());
    ms.act = m.value("action", json::object());
    static const std::set<std::string> kinds = {"a0",
                                               "regular",
                                               "projective",
                                               "radical_of_projective",
                                               "positive_part_of_projective",
                                               "table"};
    if (!kinds.count(ms.type))
      throw InputError("module \"" + ms.name + "\": unknown type \"" + ms.type + "\"");
    doc.modules.push_back(std::move(ms));
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    doc.max_degree = o.value("max_degree", doc.max_degree);
    doc.checks = o.value("checks", std::vector<std::string>());
  }
  return doc;
}

// ---------------------------------------------------------------------------
// building algebras and modules over a concrete field

template <class F>
gk::AlgebraPtr<F> build_algebra(const InputDoc& doc, F k) {
  if (doc.kind == "ei_category") return gk::category_algebra_ptr(doc.ei, k);
  gk::Algebra<F> a(k);
  a.names = doc.basis;
  a.deg = doc.degrees;
  int n = a.dim();
  a.mul_table.assign(n, std::vector<gk::Vec<F>>(n, gk::Vec<F>(n, k.zero())));
  std::map<std::string, int> ix;
  for (int i = 0; i < n; ++i) ix[a.names[i]] = i;
  for (auto& p : doc.products)
    for (auto& [nm, c] : p.terms)
      a.mul_table[ix[p.left]][ix[p.right]][ix[nm]] =
          k.add(a.mul_table[ix[p.left]][ix[p.right]][ix[nm]], k.from_int(c));
  a.unit.assign(n, k.zero());
  for (auto& u : doc.unit) a.unit[ix[u]] = k.one();
  return std::make_shared<const gk::Algebra<F>>(std::move(a));
}

// the object partition used by the stratification checks: identity morphisms
// for a category, the declared poset groups for a raw algebra
template <class F>
std::vector<std::pair<std::string, gk::Vec<F>>> object_partition(const InputDoc& doc,
                                                                 const gk::Algebra<F>& a) {
  std::vector<std::pair<std::string, gk::Vec<F>>> part;
  if (doc.kind == "ei_category") {
    for (int x = 0; x < doc.ei.n_obj; ++x) {
      gk::Vec<F> e(a.dim(), a.k.zero());
      e[doc.ei.id_of[x]] = a.k.one();
      part.push_back({doc.ei.obj_names[x], e});
    }
    return part;
  }
  std::map<std::string, int> ix;
  for (int i = 0; i < a.dim(); ++i) ix[a.names[i]] = i;
  for (auto& [nm, elems] : doc.poset) {
    gk::Vec<F> e(a.dim(), a.k.zero());
    for (auto& b : elems) e[ix.at(b)] = a.k.one();
    part.push_back({nm, e});
  }
  return part;
}

template <class F>
gk::Vec<F> idempotent_of(const InputDoc& doc, const gk::AlgebraPtr<F>& alg,
                         const ModuleSpec& ms) {
  const gk::Algebra<F>& a = *alg;
  gk::Vec<F> e(a.dim(), a.k.zero());
  if (!ms.object.empty()) {
    if (doc.kind != "ei_category")
      throw InputError("module \"" + ms.name + "\": \"object\" requires an ei_category input");
    for (int x = 0; x < doc.ei.n_obj; ++x)
      if (doc.ei.obj_names[x] == ms.object) {
        e[doc.ei.id_of[x]] = a.k.one();
        return e;
      }
    throw InputError("module \"" + ms.name + "\": unknown object \"" + ms.object + "\"");
  }
  std::map<std::string, int> ix;
  for (int i = 0; i < a.dim(); ++i) ix[a.names[i]] = i;
  for (auto& b : ms.idem) {
    if (!ix.count(b))
      throw InputError("module \"" + ms.name + "\": unknown basis element \"" + b + "\"");
    e[ix[b]] = a.k.one();
  }
  return e;
}

template <class F>
gk::Module<F> build_module(const InputDoc& doc, const gk::AlgebraPtr<F>& alg,
                           const ModuleSpec& ms) {
  if (ms.type == "a0") return gk::a0_module(alg);
  if (ms.type == "regular") return gk::regular_module(alg);
  if (ms.type == "projective")
    return gk::projective_on(alg, idempotent_of(doc, alg, ms), ms.shift);
  if (ms.type == "radical_of_projective") {
    auto p = gk::projective_on(alg, idempotent_of(doc, alg, ms), 0);
    auto rad = gk::submodule(p, gk::graded_radical_spans(p)).mod;
    return gk::shift(gk::trim(rad), ms.shift);
  }
  if (ms.type == "positive_part_of_projective") {
    auto p = gk::projective_on(alg, idempotent_of(doc, alg, ms), 0);
    std::vector<gk::Mat<F>> spans;
    for (int t = 0; t < p.n_comp(); ++t)
      spans.push_back(p.lo + t >= 1 ? gk::identity(alg->k, p.dims[t])
                                    : gk::Mat<F>(alg->k, p.dims[t], 0));
    auto pos = gk::submodule(p, spans).mod;
    return gk::shift(gk::trim(pos), ms.shift);
  }
  // explicit action table
  const gk::Algebra<F>& a = *alg;
  gk::Module<F> m = gk::zero_module(alg, ms.lo, ms.dims);
  std::map<std::string, int> ix;
  for (int i = 0; i < a.dim(); ++i) ix[a.names[i]] = i;
  for (auto& [nm, mats] : ms.act.items()) {
    if (!ix.count(nm))
      throw InputError("module \"" + ms.name + "\": unknown basis element \"" + nm + "\"");
    int bi = ix[nm];
    int t = 0;
    for (auto& mat : mats) {
      if (t >= m.n_comp()) throw InputError("module \"" + ms.name + "\": too many action blocks");
      gk::Mat<F>& dst = m.act[bi][t];
      int r = 0;
      for (auto& row : mat) {
        int c = 0;
        for (auto& v : row) {
          if (r >= dst.n_rows || c >= dst.n_cols)
            throw InputError("module \"" + ms.name + "\": action block shape mismatch");
          dst.at(r, c) = a.k.from_int(v.template get<long long>());
          ++c;
        }
        ++r;
      }
      ++t;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// report assembly

struct RunState {
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, bool>> cross_checks;
  void verdict(const std::string& name, bool v) { verdicts.push_back({name, v}); }
  void cross(const std::string& name, bool ok) { cross_checks.push_back({name, ok}); }
};

json graded_dims(int lo, const std::vector<int>& dims) {
  return json{{"lo", lo}, {"dims", dims}};
}

template <class F>
json module_dims(const gk::Module<F>& m) {
  auto t = gk::trim(m);
  return graded_dims(t.lo, t.dims);
}

json koszul_json(const gk::KoszulVerdict& v, int n) {
  json o{{"verdict", v.ok}, {"bound", n}};
  if (!v.ok) {
    o["first_fail"] = v.first_fail;
    o["reason"] = v.reason;
  }
  return o;
}

template <class F>
struct Session {
  const InputDoc& doc;
  F k;
  int n;
  gk::AlgebraPtr<F> alg;  // null if the input does not define a graded algebra
  std::string alg_error;

  Session(const InputDoc& d, F field, int bound) : doc(d), k(field), n(bound) {
    if (d.kind == "ei_category") {
      auto g = gk::is_gradable(d.ei);
      if (!g.gradable) {
        alg_error = "category is not gradable by path length";
        return;
      }
    }
    alg = build_algebra(doc, k);
  }

  std::vector<std::pair<std::string, gk::Module<F>>> modules_with_a0() const {
    std::vector<std::pair<std::string, gk::Module<F>>> out;
    out.push_back({"a0", gk::a0_module(alg)});
    for (auto& ms : doc.modules) out.push_back({ms.name, build_module(doc, alg, ms)});
    return out;
  }
};

template <class F>
void check_validate(Session<F>& s, RunState& st, json& rep) {
  json o;
  bool ok = true;
  if (s.doc.kind == "ei_category") {
    auto er = gk::validate_ei(s.doc.ei);
    o["category"] = {{"valid", er.valid()},     {"tables_ok", er.tables_ok},
                     {"associative", er.associative}, {"identities", er.identities},
                     {"ei", er.ei},             {"skeletal", er.skeletal},
                     {"connected", er.connected}};
    if (!er.failures.empty()) o["category"]["failures"] = er.failures;
    ok = ok && er.valid();
  }
  if (s.alg) {
    auto ar = gk::validate(*s.alg);
    o["algebra"] = {{"valid", ar.valid()},
                    {"degree_additive", ar.degree_additive},
                    {"associative", ar.associative},
                    {"unital", ar.unital},
                    {"generated_in_degrees_0_1", ar.degreewise_generated}};
    if (!ar.failures.empty()) o["algebra"]["failures"] = ar.failures;
    o["dims_by_degree"] = s.alg->dims_by_degree();
    ok = ok && ar.valid();
    json mods = json::object();
    for (auto& ms : s.doc.modules) {
      auto m = build_module(s.doc, s.alg, ms);
      auto mr = gk::validate_module(m);
      mods[ms.name] = {{"valid", mr.valid()}, {"dims", module_dims(m)}};
      ok = ok && mr.valid();
    }
    if (!mods.empty()) o["modules"] = mods;
  } else {
    o["algebra"] = {{"skipped", s.alg_error}};
    ok = ok && s.doc.kind == "ei_category";
  }
  o["verdict"] = ok;
  st.verdict("validate", ok);
  rep["validate"] = o;
}

template <class F>
void check_resolve(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  for (auto& [name, m] : s.modules_with_a0()) {
    auto r = gk::minimal_resolution(m, s.n);
    json steps = json::array();
    for (int i = 0; i < (int)r.p.size(); ++i) {
      json step{{"projective_dims", module_dims(r.p[i])},
                {"generator_degrees", r.gen_degrees[i]},
                {"syzygy_dims", module_dims(r.omega[i + 1])}};
      steps.push_back(step);
    }
    o[name] = {{"module_dims", module_dims(m)}, {"steps", steps}};
  }
  o["verdict"] = true;
  st.verdict("resolve", true);
  rep["resolve"] = o;
}

template <class F>
void check_ext(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  for (auto& [name, m] : s.modules_with_a0()) {
    auto ed = gk::ext_data(gk::trim(m), s.n);
    std::vector<int> dims;
    for (auto& lv : ed.lv) dims.push_back(lv.dim());
    auto diag = gk::diagonal_ext_check(ed, s.n);
    json off = json::array();
    for (auto& [i, jdeg] : diag.off_diagonal) off.push_back(json::array({i, jdeg}));
    o[name] = {{"ext_dims", dims}, {"diagonal", diag.diagonal}, {"off_diagonal", off}};
  }
  o["verdict"] = true;
  st.verdict("ext", true);
  rep["ext"] = o;
}

template <class F>
void check_koszul(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  bool all = true;
  for (auto& [name, m] : s.modules_with_a0()) {
    auto v = gk::is_koszul_module(m, s.n);
    o[name] = koszul_json(v, s.n);
    all = all && v.ok;
    st.verdict("koszul." + name, v.ok);
  }
  o["verdict"] = all;
  rep["koszul"] = o;
}

template <class F>
void check_quasi_koszul(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  auto ya = gk::yoneda_algebra(s.alg, s.n);
  auto qa = gk::is_quasi_koszul_algebra(ya, s.n);
  o["algebra"] = {{"verdict", qa.ok}, {"bound", s.n}};
  if (!qa.ok) o["algebra"]["first_fail"] = qa.first_fail;
  st.verdict("quasi_koszul", qa.ok);
  std::vector<int> gdims;
  for (int i = 0; i <= s.n && i < (int)ya.ext.lv.size(); ++i)
    gdims.push_back(ya.ext.lv[i].dim());
  o["yoneda_dims"] = gdims;
  json mods = json::object();
  for (auto& [name, m] : s.modules_with_a0()) {
    auto eq = gk::theorem_2_17_check(ya, m, s.n);
    mods[name] = {{"koszul", eq.koszul},
                  {"quasi_koszul", eq.quasi_koszul},
                  {"syzygy_tops_projective", eq.syzygy_tops_projective},
                  {"consistent", eq.consistent},
                  {"bound", s.n}};
    st.cross("koszul_equivalence." + name, eq.consistent);
  }
  o["modules"] = mods;
  o["verdict"] = qa.ok;
  rep["quasi_koszul"] = o;
}

template <class F>
void check_quadratic(Session<F>& s, RunState& st, json& rep) {
  auto td = gk::tensor_data(s.alg, s.n);
  auto v = gk::is_quadratic(td);
  json o{{"verdict", v.ok}, {"bound", s.n}};
  if (!v.ok) {
    o["first_fail"] = v.first_fail;
    o["reason"] = v.reason;
  }
  st.verdict("quadratic", v.ok);
  rep["quadratic"] = o;
}

template <class F>
void check_koszul_complex(Session<F>& s, RunState& st, json& rep) {
  auto td = gk::tensor_data(s.alg, s.n);
  auto quad = gk::is_quadratic(td);
  json o{{"bound", s.n}, {"quadratic", quad.ok}};
  if (!quad.ok) {
    o["verdict"] = false;
    o["reason"] = "algebra is not quadratic; the complex is not defined";
    st.verdict("koszul_complex", false);
    rep["koszul_complex"] = o;
    return;
  }
  auto tc = gk::tensor_complex(td);
  auto cr = gk::complex_check(td, tc, s.n);
  o["d2_zero"] = cr.d2_zero;
  o["exact"] = cr.exact;
  o["terms_projective"] = cr.terms_projective;
  json hom = json::array();
  for (auto& [pos, deg, dim] : cr.homology) hom.push_back(json::array({pos, deg, dim}));
  o["nonzero_homology"] = hom;
  bool koszul = gk::is_koszul_module(gk::a0_module(s.alg), s.n).ok;
  o["matches_koszul_verdict"] = cr.is_resolution() == koszul;
  st.cross("koszul_complex_vs_resolution", cr.is_resolution() == koszul);
  o["verdict"] = cr.is_resolution();
  st.verdict("koszul_complex", cr.is_resolution());
  rep["koszul_complex"] = o;
}

template <class F>
void check_duality(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  bool all = true;
  for (auto& [name, m] : s.modules_with_a0()) {
    auto d = gk::duality_check(s.alg, m, s.n);
    json e{{"applicable", d.applicable}, {"bound", s.n}};
    if (!d.applicable) {
      e["reason"] = d.reason;
      e["verdict"] = false;
      all = false;
    } else {
      e["dual_is_koszul"] = d.dual_is_koszul;
      e["dims_match"] = d.dims_match;
      e["original_dims"] = d.original_dims;
      e["recovered_dims"] = d.recovered_dims;
      e["verdict"] = d.dual_is_koszul && d.dims_match;
      all = all && d.dual_is_koszul && d.dims_match;
      st.cross("duality_dims." + name, d.dims_match);
    }
    o[name] = e;
  }
  o["verdict"] = all;
  st.verdict("duality", all);
  rep["duality"] = o;
}

template <class F>
void check_ei(Session<F>& s, RunState& st, json& rep) {
  const gk::EICat& e = s.doc.ei;
  json o;
  auto fr = gk::is_free_ufp(e);
  o["free"] = fr.free;
  if (!fr.free && fr.witness >= 0) o["freeness_witness"] = e.mor[fr.witness].name;
  st.verdict("ei.free", fr.free);
  auto gr = gk::is_gradable(e);
  o["gradable"] = gr.gradable;
  st.verdict("ei.gradable", gr.gradable);
  auto cover = gk::free_ei_cover(e);
  o["free_cover_morphisms"] = (int)cover.cover.mor.size();
  auto sc = gk::stratification_check(e, s.k.characteristic());
  json so{{"verdict", sc.stratified}};
  if (!sc.stratified && sc.witness >= 0) {
    so["witness"] = e.mor[sc.witness].name;
    so["witness_stabilizer_order"] = sc.witness_order;
  }
  o["stratified"] = so;
  st.verdict("ei.stratified", sc.stratified);
  auto rr = gk::regularity_report(e, s.k.characteristic());
  o["regular"] = {{"verdict", rr.all_regular},
                  {"left", rr.left_regular},
                  {"right", rr.right_regular}};
  st.verdict("ei.regular", rr.all_regular);
  if (s.alg) {
    auto e2 = gk::ext2_vanishing_check(e, s.k, s.n);
    o["ext2_vanishing"] = {{"free", e2.free},
                           {"ext_dims", e2.ext_dims},
                           {"ext2_vanishes", e2.ext2_vanishes},
                           {"consistent", e2.consistent()},
                           {"bound", s.n}};
    st.cross("ei.ext2_vanishing", e2.consistent());
    auto sy = gk::prop_6_11_report(e, s.k, s.n);
    o["syzygy_equivalence"] = {{"free", sy.free},
                               {"ext_vanish_above_one", sy.ext_vanish_above_one},
                               {"syzygies_gen_degree_one", sy.syzygies_gen_degree_one},
                               {"quasi_koszul", sy.quasi_koszul},
                               {"consistent", sy.consistent()},
                               {"bound", s.n}};
    st.cross("ei.syzygy_equivalence", sy.consistent());
    auto fk = gk::theorem_6_8_report(e, s.k, s.n);
    json fo{{"free", fk.free},
            {"pd_le_1", fk.pd_le_1},
            {"koszul", fk.koszul},
            {"stratified", fk.stratified},
            {"consistent", fk.consistent()},
            {"bound", s.n}};
    fo["pd_finite"] = fk.pd_finite == gk::Tri::yes    ? "yes"
                      : fk.pd_finite == gk::Tri::no   ? "no"
                                                      : "unknown";
    o["free_koszul_equivalence"] = fo;
    st.cross("ei.free_koszul_equivalence", fk.consistent());
  }
  o["verdict"] = fr.free && gr.gradable;
  rep["ei"] = o;
}

template <class F>
std::optional<gk::DirectedStructure<F>> directed_of(Session<F>& s, json& o) {
  auto part = object_partition(s.doc, *s.alg);
  if (part.empty()) {
    o["error"] = "no object partition: provide a \"poset\" section";
    return std::nullopt;
  }
  auto dd = gk::detect_directed(s.alg, part);
  o["directed"] = dd.has_value();
  if (dd) {
    o["block_condition"] = dd->block_condition;
    std::vector<std::string> topo;
    for (int x : dd->topo) topo.push_back(dd->poset.obj_names[x]);
    o["topological_order"] = topo;
  }
  return dd;
}

template <class F>
void check_stratify(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  auto dd = directed_of(s, o);
  bool ok = false;
  if (!dd) {
    o["verdict"] = false;
  } else {
    auto sr = gk::is_standardly_stratified_directed(*dd);
    ok = sr.stratified;
    json sj{{"verdict", sr.stratified},
            {"a_projective_over_a0", sr.a_projective_over_a0},
            {"a0_self_injective", sr.a0_self_injective},
            {"consistent", sr.consistent}};
    if (!sr.stratified)
      sj["witness"] = {{"from", dd->poset.obj_names[sr.witness_x]},
                       {"to", dd->poset.obj_names[sr.witness_y]},
                       {"degree", sr.witness_deg}};
    o["stratified"] = sj;
    st.cross("stratified_vs_projective_over_a0", sr.consistent);
    try {
      auto sm = gk::standard_modules(*dd);
      json stds = json::object();
      for (int l = 0; l < (int)sm.mods.size(); ++l)
        stds["delta_" + std::to_string(l) + "_" +
             dd->poset.obj_names[sm.mods[l].obj]] = module_dims(sm.mods[l].delta);
      o["standard_modules"] = stds;
      o["a0_is_sum_of_standards"] = sm.matches_a0_summands;
      json certs = json::object();
      for (int l = 0; l < dd->poset.n_prim(); ++l) {
        if (dd->poset.block_rep[dd->poset.block_of[l]] != l) continue;
        auto p = gk::projective_on(s.alg, dd->poset.prim[l], 0);
        auto c = gk::delta_filtration(p, dd->poset, sm);
        json cj{{"filtered", c.has_value()}};
        if (c) {
          json layers = json::array();
          for (auto& lay : c->layers)
            layers.push_back({{"standard", lay.lambda},
                              {"object", dd->poset.obj_names[dd->poset.obj_of[lay.lambda]]},
                              {"degree", lay.degree},
                              {"dim", lay.dim}});
          cj["layers"] = layers;
        }
        certs["projective_" + std::to_string(l)] = cj;
      }
      o["filtrations"] = certs;
    } catch (const std::invalid_argument& ex) {
      o["standard_modules"] = {{"error", ex.what()}};
    }
    if (s.doc.kind == "ei_category" && dd->block_condition) {
      bool stab = gk::stratification_check(s.doc.ei, s.k.characteristic()).stratified;
      o["stabilizer_criterion"] = stab;
      st.cross("stratified_vs_stabilizer_criterion", stab == sr.stratified);
    }
  }
  o["verdict"] = ok;
  st.verdict("stratify", ok);
  rep["stratify"] = o;
}

template <class F>
void check_dual_stratify(Session<F>& s, RunState& st, json& rep) {
  json o{{"bound", s.n}};
  auto dd = directed_of(s, o);
  bool ok = false;
  if (dd) {
    auto r = gk::theorem_7_1_check(*dd, s.n);
    json h{{"block_condition", r.block_condition},
           {"stratified", r.stratified},
           {"standards_in_degree_0", r.standards_deg0},
           {"a0_is_sum_of_standards", r.a0_iso_delta},
           {"a0_self_injective", r.a0_self_injective},
           {"koszul", r.koszul},
           {"ok", r.hypotheses_ok}};
    if (!r.hypotheses_ok) h["witness"] = r.hypothesis_witness;
    o["hypotheses"] = h;
    if (r.hypotheses_ok) {
      o["degree_zero_identified"] = r.idem_identified;
      o["ext_algebra_directed"] = r.gamma_directed;
      o["order_preserved"] = r.order_preserved;
      o["ext_algebra_stratified"] = r.gamma_stratified;
      o["projectives_filtered"] = r.proj_filtered;
      ok = r.gamma_stratified;
      st.cross("dual_stratification", r.gamma_stratified);
      auto c = gk::corollary_7_6_check(*dd, s.n);
      o["quasi_hereditary"] = {{"algebra", c.a_quasi_hereditary},
                               {"ext_algebra", c.gamma_quasi_hereditary},
                               {"endomorphism_dims", c.end_dims_a},
                               {"consistent", c.consistent}};
      st.cross("quasi_hereditary_transfer", c.consistent);
    }
  }
  o["verdict"] = ok;
  st.verdict("dual_stratify", ok);
  rep["dual_stratify"] = o;
}

// ---------------------------------------------------------------------------

const std::vector<std::string> kAllChecks = {
    "validate", "resolve", "ext", "koszul", "quasi_koszul", "quadratic",
    "koszul_complex", "duality", "ei", "stratify", "dual_stratify"};

template <class F>
int run_checks(const InputDoc& doc, F k, int n, const std::set<std::string>& checks,
               json& rep, RunState& st) {
  Session<F> s(doc, k, n);
  rep["input"] = {{"kind", doc.kind},
                  {"characteristic", s.k.characteristic()},
                  {"max_degree", n}};
  auto wants = [&](const std::string& c) { return checks.count(c) > 0; };
  bool needs_algebra = false;
  for (auto& c : checks)
    if (c != "ei" && c != "validate") needs_algebra = true;
  if (!s.alg && needs_algebra)
    rep["skipped"] = {{"reason", s.alg_error}};

  if (wants("validate")) check_validate(s, st, rep);
  if (s.doc.kind == "ei_category" && wants("ei")) check_ei(s, st, rep);
  if (s.alg) {
    if (wants("resolve")) check_resolve(s, st, rep);
    if (wants("ext")) check_ext(s, st, rep);
    if (wants("koszul")) check_koszul(s, st, rep);
    if (wants("quasi_koszul")) check_quasi_koszul(s, st, rep);
    if (wants("quadratic")) check_quadratic(s, st, rep);
    if (wants("koszul_complex")) check_koszul_complex(s, st, rep);
    if (wants("duality")) check_duality(s, st, rep);
    if (wants("stratify")) check_stratify(s, st, rep);
    if (wants("dual_stratify")) check_dual_stratify(s, st, rep);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// emission

void emit_text(const json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  for (auto& [key, val] : j.items()) {
    if (val.is_object()) {
      os << pad << key << ":\n";
      emit_text(val, os, indent + 2);
    } else if (key == "verdict" && val.is_boolean() && j.contains("bound")) {
      os << pad << "verdict: " << (val.get<bool>() ? "true" : "false")
         << " (up to degree " << j.at("bound").get<int>() << ")\n";
    } else {
      os << pad << key << ": " << val.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for graded algebras and finite EI categories"};
  app.require_subcommand(1);

  std::string input_path;
  long long field_override = -1;
  int max_degree_override = -1;
  std::string format = "json";
  long long seed = 7;  // reserved for the isomorphism search; output is seed-independent

  app.add_option("--field", field_override, "field characteristic (0 for the rationals)")
      ->envname("GKOSZUL_FIELD");
  app.add_option("--max-degree", max_degree_override, "truncation bound for all checks")
      ->envname("GKOSZUL_MAX_DEGREE");
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for randomized isomorphism tests");

  std::map<std::string, std::set<std::string>> subchecks = {
      {"validate", {"validate"}},
      {"resolve", {"validate", "resolve"}},
      {"ext", {"validate", "ext"}},
      {"koszul", {"validate", "koszul"}},
      {"quasi-koszul", {"validate", "quasi_koszul"}},
      {"quadratic", {"validate", "quadratic"}},
      {"koszul-complex", {"validate", "koszul_complex"}},
      {"duality", {"validate", "duality"}},
      {"ei", {"validate", "ei"}},
      {"stratify", {"validate", "stratify"}},
      {"dual-stratify", {"validate", "dual_stratify"}},
      {"report", {}},
  };
  std::map<std::string, CLI::App*> subs;
  for (auto& [name, cs] : subchecks) {
    auto* sub = app.add_subcommand(name, name == "report" ? "run every applicable check"
                                                          : "run the " + name + " check");
    sub->add_option("input", input_path, "input document (JSON)")->required();
    sub->fallthrough();
    subs[name] = sub;
  }

  CLI11_PARSE(app, argc, argv);
  std::string chosen = app.get_subcommands().front()->get_name();

  json input_json;
  InputDoc doc;
  try {
    std::ifstream in(input_path);
    if (!in) throw InputError("cannot open \"" + input_path + "\"");
    try {
      in >> input_json;
    } catch (const json::exception& e) {
      throw InputError(std::string("JSON parse failure: ") + e.what());
    }
    doc = parse_document(input_json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  long long p = field_override >= 0 ? field_override : doc.characteristic;
  if (p != 0 && !is_prime_ll(p)) {
    std::cerr << "input error: characteristic " << p << " is neither 0 nor prime\n";
    return 2;
  }
  int n = max_degree_override >= 0 ? max_degree_override : doc.max_degree;

  std::set<std::string> checks = subchecks[chosen];
  if (chosen == "report") {
    if (!doc.checks.empty())
      checks = std::set<std::string>(doc.checks.begin(), doc.checks.end());
    else
      checks = std::set<std::string>(kAllChecks.begin(), kAllChecks.end());
  }
  for (auto& c : checks)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
      std::cerr << "input error: unknown check \"" << c << "\"\n";
      return 2;
    }

  json rep;
  RunState st;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (p == 0)
      run_checks(doc, gk::QQ{}, n, checks, rep, st);
    else
      run_checks(doc, gk::Fp((std::int64_t)p), n, checks, rep, st);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error while running checks: " << e.what() << "\n";
    return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  json verdicts = json::object();
  bool all_true = true;
  for (auto& [name, v] : st.verdicts) {
    verdicts[name] = v;
    all_true = all_true && v;
  }
  rep["verdicts"] = verdicts;
  json crosses = json::object();
  bool consistent = true;
  for (auto& [name, v] : st.cross_checks) {
    crosses[name] = v;
    consistent = consistent && v;
  }
  rep["cross_checks"] = crosses;
  rep["consistent"] = consistent;

  if (format == "json") {
    std::cout << rep.dump(2) << "\n";
  } else {
    emit_text(rep, std::cout, 0);
    std::cout << "elapsed_ms: " << ms << "\n";
  }

  if (!consistent) return 3;
  return all_true ? 0 : 1;
}
