#include "dgg/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dgg {

GradedGraph::GradedGraph(std::string name, bool quantized,
                         std::vector<std::vector<Label>> levels)
    : name_(std::move(name)), quantized_(quantized), levels_(std::move(levels)) {
  if (levels_.empty() || levels_[0].size() != 1)
    throw std::invalid_argument("GradedGraph: need a single vertex at height 0");
  for (int h = 0; h < static_cast<int>(levels_.size()); ++h)
    for (int i = 0; i < static_cast<int>(levels_[h].size()); ++i)
      if (!index_.emplace(levels_[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)],
                          std::pair{h, i}).second)
        throw std::invalid_argument("GradedGraph: duplicate vertex label");
  out_.resize(levels_.size());
  for (std::size_t h = 0; h < levels_.size(); ++h)
    out_[h].resize(levels_[h].size());
}

const std::vector<Label>& GradedGraph::level(int h) const {
  if (h < 0 || h > max_height())
    throw std::out_of_range("GradedGraph: height out of range");
  return levels_[static_cast<std::size_t>(h)];
}

std::pair<int, int> GradedGraph::locate(const Label& v) const {
  auto it = index_.find(v);
  if (it == index_.end())
    throw std::out_of_range("GradedGraph: label not in graph: " + v.to_string());
  return it->second;
}

QPoly GradedGraph::mult(const Label& v, const Label& u) const {
  auto [hv, iv] = locate(v);
  auto [hu, iu] = locate(u);
  if (hu != hv + 1) return {};
  for (const auto& e : out_[static_cast<std::size_t>(hv)][static_cast<std::size_t>(iv)])
    if (e.to == iu) return e.mult;
  return {};
}

void GradedGraph::set_mult(const Label& v, const Label& u, const QPoly& m) {
  auto [hv, iv] = locate(v);
  auto [hu, iu] = locate(u);
  if (hu != hv + 1)
    throw std::invalid_argument("GradedGraph: edges must join consecutive heights");
  if (!m.nonneg())
    throw std::invalid_argument("GradedGraph: multiplicities must lie in N[q]");
  auto& edges = out_[static_cast<std::size_t>(hv)][static_cast<std::size_t>(iv)];
  const int target = iu;  // plain local: lambdas cannot capture structured bindings everywhere
  auto it = std::find_if(edges.begin(), edges.end(),
                         [target](const OutEdge& e) { return e.to == target; });
  if (m.is_zero()) {
    if (it != edges.end()) edges.erase(it);
    return;
  }
  if (it != edges.end()) {
    it->mult = m;
  } else {
    edges.push_back({iu, m});
    std::sort(edges.begin(), edges.end(),
              [](const OutEdge& a, const OutEdge& b) { return a.to < b.to; });
  }
}

const std::vector<GradedGraph::OutEdge>& GradedGraph::out_edges(int height,
                                                                int i) const {
  if (height < 0 || height > max_height())
    throw std::out_of_range("GradedGraph: height out of range");
  return out_[static_cast<std::size_t>(height)].at(static_cast<std::size_t>(i));
}

std::size_t GradedGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& lvl : out_)
    for (const auto& edges : lvl) n += edges.size();
  return n;
}

std::vector<std::tuple<int, int, int>> GradedGraph::edge_list() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int h = 0; h <= max_height(); ++h)
    for (int i = 0; i < static_cast<int>(levels_[static_cast<std::size_t>(h)].size()); ++i)
      for (const auto& e : out_[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)])
        out.emplace_back(h, i, e.to);
  return out;
}

GraphPair build_graphs(const HopfSkeleton& sk, int height) {
  if (height < 0) throw std::invalid_argument("build_graphs: negative height");
  std::vector<std::vector<Label>> levels;
  levels.reserve(static_cast<std::size_t>(height) + 1);
  for (int n = 0; n <= height; ++n) levels.push_back(sk.labels(n));

  GraphPair pair{GradedGraph(sk.name() + ":Gamma", sk.quantized(), levels),
                 GradedGraph(sk.name() + ":GammaPrime", sk.quantized(), levels)};

  for (int n = 0; n < height; ++n) {
    for (const auto& v : levels[static_cast<std::size_t>(n)]) {
      for (const auto& [u, c] : sk.up(v)) {
        if (!c.nonneg())
          throw std::invalid_argument("build_graphs: up coefficient outside N[q]");
        pair.gamma.set_mult(v, u, c);
      }
    }
  }
  for (int n = 1; n <= height; ++n) {
    for (const auto& u : levels[static_cast<std::size_t>(n)]) {
      for (const auto& [v, c] : sk.down(u)) {
        if (!c.nonneg())
          throw std::invalid_argument("build_graphs: down coefficient outside N[q]");
        pair.gamma_prime.set_mult(v, u, c);
      }
    }
  }
  return pair;
}

LinComb up_apply(const GradedGraph& g, const LinComb& x) {
  LinComb out;
  for (const auto& [v, c] : x) {
    auto [h, i] = g.locate(v);
    if (h >= g.max_height())
      throw std::out_of_range("up_apply: support at the top level has no headroom");
    for (const auto& e : g.out_edges(h, i))
      add_term(out, g.level(h + 1)[static_cast<std::size_t>(e.to)], c * e.mult);
  }
  return out;
}

LinComb down_apply(const GradedGraph& g, const LinComb& x) {
  LinComb out;
  for (const auto& [u, c] : x) {
    auto [h, iu] = g.locate(u);
    if (h == 0) continue;  // nothing below the root
    const auto& below = g.level(h - 1);
    for (int i = 0; i < static_cast<int>(below.size()); ++i)
      for (const auto& e : g.out_edges(h - 1, i))
        if (e.to == iu) add_term(out, below[static_cast<std::size_t>(i)], c * e.mult);
  }
  return out;
}

std::string DualityReport::to_string() const {
  std::ostringstream out;
  if (verified) {
    out << instance << ": duality OK, r = " << r_observed.to_string()
        << " (vertices of height <= " << height << ")";
  } else {
    out << instance << ": duality FAIL at vertex "
        << (counterexample ? counterexample->to_string() : "?")
        << ", defect = " << dgg::to_string(defect);
  }
  return out.str();
}

DualityReport check_duality(const GradedGraph& gamma, const GradedGraph& gamma_prime,
                            bool quantized, int height) {
  if (height + 1 > gamma.max_height() || height + 1 > gamma_prime.max_height())
    throw std::invalid_argument(
        "check_duality: need graphs built one level above the checked height");

  DualityReport report;
  report.instance = gamma.name();
  report.height = height;
  const QPoly c = quantized ? QPoly::q() : QPoly(1);

  QPoly r;
  bool have_r = false;
  for (int h = 0; h <= height; ++h) {
    for (const auto& v : gamma.level(h)) {
      LinComb x{{v, QPoly(1)}};
      LinComb defect =
          down_apply(gamma_prime, up_apply(gamma, x)) -
          c * up_apply(gamma, down_apply(gamma_prime, x));
      if (!have_r) {
        // height-0 vertex: defect must already be a multiple of v
        auto it = defect.find(v);
        r = it == defect.end() ? QPoly() : it->second;
        have_r = true;
      }
      LinComb residue = defect - LinComb{{v, r}};
      if (!residue.empty()) {
        report.verified = false;
        report.counterexample = v;
        report.defect = defect;
        return report;
      }
    }
  }
  report.verified = true;
  report.r_observed = r;
  return report;
}

std::map<Label, QPoly> path_count(const GradedGraph& g, int up_to_height) {
  if (up_to_height < 0 || up_to_height > g.max_height())
    throw std::invalid_argument("path_count: height out of range");
  std::map<Label, QPoly> f;
  std::vector<std::vector<QPoly>> by_level(static_cast<std::size_t>(up_to_height) + 1);
  by_level[0] = {QPoly(1)};
  f[g.level(0)[0]] = 1;
  for (int h = 0; h < up_to_height; ++h) {
    auto& next = by_level[static_cast<std::size_t>(h) + 1];
    next.assign(g.level(h + 1).size(), QPoly());
    for (int i = 0; i < static_cast<int>(g.level(h).size()); ++i)
      for (const auto& e : g.out_edges(h, i))
        next[static_cast<std::size_t>(e.to)] +=
            by_level[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] * e.mult;
    for (int j = 0; j < static_cast<int>(g.level(h + 1).size()); ++j)
      f[g.level(h + 1)[static_cast<std::size_t>(j)]] =
          next[static_cast<std::size_t>(j)];
  }
  return f;
}

std::string FominReport::to_string() const {
  std::ostringstream out;
  out << "n = " << level << ": sum f*f' = " << lhs.to_string()
      << (ok ? " == " : " != ") << rhs.to_string();
  return out.str();
}

FominReport fomin_check(const GradedGraph& gamma, const GradedGraph& gamma_prime,
                        int n, bool quantized, const QPoly& r) {
  if (n < 0 || n > gamma.max_height() || n > gamma_prime.max_height())
    throw std::invalid_argument("fomin_check: level out of range");
  auto f = path_count(gamma, n);
  auto fp = path_count(gamma_prime, n);
  FominReport report;
  report.level = n;
  for (const auto& v : gamma.level(n)) report.lhs += f.at(v) * fp.at(v);
  report.rhs = pow(r, n) * (quantized ? q_factorial(n) : QPoly(factorial(n)));
  report.ok = report.lhs == report.rhs;
  return report;
}

std::string DimensionReport::to_string() const {
  std::ostringstream out;
  out << "n = " << level << ": sum dimP*dimS = " << total
      << (ok ? " == " : " != ") << expected;
  return out.str();
}

DimensionReport dimension_check(const HopfSkeleton& sk, int n,
                                const std::vector<std::pair<Int, Int>>& dims) {
  if (sk.quantized())
    throw std::invalid_argument("dimension_check: unquantized skeletons only");
  Int r = 0;
  for (const auto& [a, b] : dims) {
    if (a <= 0 || b <= 0)
      throw std::invalid_argument("dimension_check: dims must be positive");
    r = checked_add(r, checked_mul(a, b));
  }
  if (r != sk.diff_coeff().eval_at_one())
    throw std::invalid_argument(
        "dimension_check: sum a_i b_i does not match the skeleton's r");

  auto pair = build_graphs(sk, n);
  auto f = path_count(pair.gamma, n);
  auto fp = path_count(pair.gamma_prime, n);

  DimensionReport report;
  report.level = n;
  Int rn = 1;
  for (int k = 0; k < n; ++k) rn = checked_mul(rn, r);
  report.expected = checked_mul(rn, factorial(n));
  for (const auto& v : pair.gamma.level(n)) {
    Int dim_p = f.at(v).eval_at_one();
    Int dim_s = fp.at(v).eval_at_one();
    report.table.emplace_back(v, dim_p, dim_s);
    report.total = checked_add(report.total, checked_mul(dim_p, dim_s));
  }
  report.ok = report.total == report.expected;
  return report;
}

}  // namespace dgg
