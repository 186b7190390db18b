// Python bindings for the main operations: exact Z[q] arithmetic, label
// combinatorics, quantum shuffle products, graph construction/verification,
// emission, and the Hecke parameter classifier.
#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "dgg/emit.hpp"
#include "dgg/graph.hpp"
#include "dgg/hecke.hpp"
#include "dgg/products.hpp"

namespace py = pybind11;
using namespace dgg;

namespace {

GraphPair build_named(const std::string& instance, int height, int cap) {
  auto sk = make_skeleton(instance, cap);
  return build_graphs(*sk, height);
}

const GradedGraph& pick(const GraphPair& pair, const std::string& which) {
  if (which == "gamma") return pair.gamma;
  if (which == "gamma-prime") return pair.gamma_prime;
  throw std::invalid_argument("which must be 'gamma' or 'gamma-prime'");
}

py::dict classify_to_dict(const HeckeClass& c) {
  py::dict out;
  const char* family = nullptr;
  switch (c.family) {
    case HeckeFamily::GenericHecke: family = "H1-generic"; break;
    case HeckeFamily::SymmetricGroup: family = "H1-symmetric-group"; break;
    case HeckeFamily::RootOfUnity: family = "H2-root-of-unity"; break;
    case HeckeFamily::ZeroHecke: family = "H3-zero-hecke"; break;
    case HeckeFamily::NilCoxeter: family = "H4-nilcoxeter"; break;
  }
  out["family"] = family;
  if (c.order > 0) out["order"] = c.order;
  out["q"] = c.q_description;
  out["text"] = c.to_string();
  return out;
}

}  // namespace

PYBIND11_MODULE(_dgg, m) {
  m.doc() = "dual graded graphs from degree-1 Hopf structure constants";

  py::class_<QPoly>(m, "QPoly")
      .def(py::init<Int>(), py::arg("constant") = 0)
      .def(py::init([](const std::vector<Int>& coeffs) { return QPoly(coeffs); }),
           py::arg("coeffs"))
      .def_static("monomial", &QPoly::monomial, py::arg("c"), py::arg("e"))
      .def_static("q", &QPoly::q)
      .def_property_readonly("coeffs", &QPoly::coeffs)
      .def("degree", &QPoly::degree)
      .def("coeff", &QPoly::coeff, py::arg("e"))
      .def("eval_at_one", &QPoly::eval_at_one)
      .def("is_zero", &QPoly::is_zero)
      .def("nonneg", &QPoly::nonneg)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &QPoly::to_string)
      .def("__repr__", [](const QPoly& p) { return "QPoly(" + p.to_string() + ")"; });

  m.def("q_int", &q_int, py::arg("n"));
  m.def("q_factorial", &q_factorial, py::arg("n"));
  m.def("q_binomial", &q_binomial, py::arg("m"), py::arg("n"));

  // ---- label combinatorics, lists of ints in and out ----
  m.def("compositions_of", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& c : compositions_of(n)) out.push_back(c.parts);
    return out;
  }, py::arg("n"));
  m.def("partitions_of", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts);
    return out;
  }, py::arg("n"));
  m.def("permutations_of", [](int n, int cap) {
    std::vector<std::vector<int>> out;
    for (const auto& w : permutations_of(n, cap)) out.push_back(w.word);
    return out;
  }, py::arg("n"), py::arg("cap") = 8);
  m.def("descent_set", [](const std::vector<int>& w) {
    return descent_set(Permutation(w));
  }, py::arg("word"));
  m.def("composition_of_word", [](const std::vector<int>& w) {
    return composition_of_word(Permutation(w)).parts;
  }, py::arg("word"));
  m.def("canonical_rep", [](const std::vector<int>& parts) {
    return canonical_rep(Composition(parts)).word;
  }, py::arg("composition"));
  m.def("inversions", [](const std::vector<int>& w) {
    return inversions(Permutation(w));
  }, py::arg("word"));
  m.def("shuffles", [](const std::vector<int>& w, const std::vector<int>& v) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& s : shuffles(Permutation(w), Permutation(v)))
      out.emplace_back(s.word.word, s.theta);
    return out;
  }, py::arg("w"), py::arg("v"));

  // ---- products ----
  m.def("qsym_product", [](const std::vector<int>& I, const std::vector<int>& J) {
    std::vector<std::pair<std::vector<int>, QPoly>> out;
    for (const auto& [l, c] : qsym_q_product(Composition(I), Composition(J)))
      out.emplace_back(std::get<Composition>(l.value).parts, c);
    return out;
  }, py::arg("I"), py::arg("J"),
     "quantum shuffle expansion of F_I * F_J as (composition, coefficient) "
     "pairs in lexicographic order");
  m.def("divided_power_product", [](int a, int b) {
    auto lc = qdivided_power_product(ChainLevel(a), ChainLevel(b));
    const auto& [l, c] = *lc.begin();
    return std::make_pair(std::get<ChainLevel>(l.value).n, c);
  }, py::arg("a"), py::arg("b"));
  m.def("twisted_check", [](int maxdeg) {
    auto report = check_twisted_compatibility(maxdeg);
    py::dict out;
    out["ok"] = report.ok;
    out["text"] = report.to_string();
    return out;
  }, py::arg("maxdeg") = 6);

  // ---- graphs ----
  m.def("instances", [] { return skeleton_names(); });
  m.def("verify", [](const std::string& instance, int height, int cap) {
    auto sk = make_skeleton(instance, cap);
    auto pair = build_graphs(*sk, height + 1);
    auto duality = check_duality(pair.gamma, pair.gamma_prime, sk->quantized(), height);
    py::dict out;
    out["instance"] = instance;
    out["height"] = height;
    out["duality_ok"] = duality.verified;
    if (duality.verified) {
      out["r"] = duality.r_observed.to_string();
      bool fomin_ok = true;
      for (int n = 0; n <= height && fomin_ok; ++n)
        fomin_ok = fomin_check(pair.gamma, pair.gamma_prime, n, sk->quantized(),
                               duality.r_observed).ok;
      out["fomin_ok"] = fomin_ok;
    } else {
      out["counterexample"] = duality.counterexample->to_string();
    }
    return out;
  }, py::arg("instance"), py::arg("height"), py::arg("cap") = 8);
  m.def("path_counts", [](const std::string& instance, int height,
                          const std::string& which, int cap) {
    auto pair = build_named(instance, height, cap);
    const auto& g = pick(pair, which);
    auto f = path_count(g, height);
    std::vector<std::pair<std::string, QPoly>> out;
    for (int h = 0; h <= height; ++h)
      for (const auto& v : g.level(h)) out.emplace_back(v.to_string(), f.at(v));
    return out;
  }, py::arg("instance"), py::arg("height"), py::arg("which") = "gamma",
     py::arg("cap") = 8);
  m.def("graph_dot", [](const std::string& instance, int height,
                        const std::string& which, int cap) {
    return to_dot(pick(build_named(instance, height, cap), which));
  }, py::arg("instance"), py::arg("height"), py::arg("which") = "gamma",
     py::arg("cap") = 8);
  m.def("graph_json", [](const std::string& instance, int height,
                         const std::string& which, int cap) {
    return to_json(pick(build_named(instance, height, cap), which));
  }, py::arg("instance"), py::arg("height"), py::arg("which") = "gamma",
     py::arg("cap") = 8);
  m.def("dimension_check", [](const std::string& instance, int n,
                              const std::vector<std::pair<Int, Int>>& dims) {
    auto sk = make_skeleton(instance);
    auto report = dimension_check(*sk, n, dims);
    py::dict out;
    out["ok"] = report.ok;
    out["expected"] = report.expected;
    out["total"] = report.total;
    py::list table;
    for (const auto& [label, dim_p, dim_s] : report.table)
      table.append(py::make_tuple(label.to_string(), dim_p, dim_s));
    out["table"] = table;
    return out;
  }, py::arg("instance"), py::arg("n"),
     py::arg("dims") = std::vector<std::pair<Int, Int>>{{1, 1}});

  // ---- Hecke classifier ----
  m.def("classify_hecke", [](const std::string& a, const std::string& b) {
    return classify_to_dict(classify_hecke(Rational::parse(a), Rational::parse(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("classify_hecke", [](Int a, Int b) {
    return classify_to_dict(classify_hecke(Rational(a), Rational(b)));
  }, py::arg("a"), py::arg("b"));
  m.def("cyclotomic_order", [](const std::vector<std::string>& coeffs) {
    std::vector<Rational> parsed;
    for (const auto& c : coeffs) parsed.push_back(Rational::parse(c));
    auto order = cyclotomic_order(parsed);
    return order ? py::cast(*order) : py::none().cast<py::object>();
  }, py::arg("ascending_coeffs"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
