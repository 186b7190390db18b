/// Graded graphs materialized to a finite height, the up/down operators,
/// duality verification (plain and quantized), weighted path counting and
/// the path-count identities r^n n! / r^n [n]!.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgg/skeletons.hpp"

namespace dgg {

/// A leveled directed graph with edge multiplicities in N[q]. Exactly one
/// vertex at height 0; edges only between consecutive heights. Immutable
/// once built except through set_mult (used for fault injection in tests).
class GradedGraph {
 public:
  struct OutEdge {
    int to = 0;  // index within level h+1
    QPoly mult;
  };

  GradedGraph() = default;
  GradedGraph(std::string name, bool quantized, std::vector<std::vector<Label>> levels);

  const std::string& name() const { return name_; }
  bool quantized() const { return quantized_; }
  int max_height() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<std::vector<Label>>& levels() const { return levels_; }
  const std::vector<Label>& level(int h) const;

  /// (height, index) of a label; throws std::out_of_range when absent.
  std::pair<int, int> locate(const Label& v) const;
  bool contains(const Label& v) const { return index_.count(v) != 0; }

  /// Multiplicity m(v, u); zero when there is no edge.
  QPoly mult(const Label& v, const Label& u) const;

  /// Sets m(v, u). Requires h(u) = h(v) + 1 and a multiplicity in N[q];
  /// setting zero removes the edge.
  void set_mult(const Label& v, const Label& u, const QPoly& m);

  /// Out-edges of vertex i at the given height, ordered by target index.
  const std::vector<OutEdge>& out_edges(int height, int i) const;

  std::size_t edge_count() const;

  /// Every edge as (from height, from index, to index), in emission order.
  std::vector<std::tuple<int, int, int>> edge_list() const;

 private:
  std::string name_;
  bool quantized_ = false;
  std::vector<std::vector<Label>> levels_;
  std::map<Label, std::pair<int, int>> index_;
  // adjacency per level: out_[h][i] = edges from levels_[h][i] into level h+1
  std::vector<std::vector<std::vector<OutEdge>>> out_;
};

struct GraphPair {
  GradedGraph gamma;        // up edges from the skeleton's beta-multiplication
  GradedGraph gamma_prime;  // up edges transposed from the skeleton's down map
};

/// Materializes Gamma and Gamma' for the skeleton up to the given height.
/// Gamma's m(v,u) is the coefficient of u in up(v); Gamma''s m'(v,u) is the
/// coefficient of v in down(u). Both share the vertex set.
GraphPair build_graphs(const HopfSkeleton& sk, int height);

/// Linear extension of U(v) = sum_u m(v,u) u. The support must lie strictly
/// below max_height.
LinComb up_apply(const GradedGraph& g, const LinComb& x);

/// Linear extension of D(v) = sum_u m(u,v) u. Height-0 support maps to 0.
LinComb down_apply(const GradedGraph& g, const LinComb& x);

struct DualityReport {
  std::string instance;
  int height = 0;       // vertices of height <= this were checked
  bool verified = false;
  QPoly r_observed;     // meaningful when verified
  std::optional<Label> counterexample;
  LinComb defect;       // the failing vertex's defect expansion

  std::string to_string() const;
};

/// Verifies D_{Gamma'} U_Gamma - c U_Gamma D_{Gamma'} = r Id on every vertex
/// of height <= height, with c = q when quantized and 1 otherwise. r is
/// inferred from the height-0 vertex and required to be uniform. Requires
/// height + 1 <= max_height of both graphs (U needs one level of headroom).
DualityReport check_duality(const GradedGraph& gamma, const GradedGraph& gamma_prime,
                            bool quantized, int height);

/// Weighted path counts f(v): f(v0) = 1, f(u) = sum_v m(v,u) f(v), for all
/// vertices of height <= up_to_height.
std::map<Label, QPoly> path_count(const GradedGraph& g, int up_to_height);

struct FominReport {
  int level = 0;
  bool ok = false;
  QPoly lhs;  // sum over h(v)=n of f_Gamma(v) * f_Gamma'(v)
  QPoly rhs;  // r^n n!  or  r^n [n]! when quantized

  std::string to_string() const;
};

/// Exact comparison of sum_{h(v)=n} f_Gamma(v) f_Gamma'(v) against r^n n!
/// (or r^n [n]! when quantized).
FominReport fomin_check(const GradedGraph& gamma, const GradedGraph& gamma_prime,
                        int n, bool quantized, const QPoly& r = QPoly(1));

struct DimensionReport {
  int level = 0;
  bool ok = false;
  Int expected = 0;  // r^n n!
  Int total = 0;     // sum of dim P * dim S over the degree-n vertices
  // per-vertex rows (label, dim P = f_Gamma, dim S = f_Gamma') in
  // enumeration order
  std::vector<std::tuple<Label, Int, Int>> table;

  std::string to_string() const;
};

/// The dimension identity dim(A_n) = r^n n! read off the graphs: path counts
/// at q=1 interpreted as (dim P, dim S) per vertex. dims lists the degree-1
/// data (a_i, b_i) = (dim S_i, dim P_i); their pairing sum must equal the
/// skeleton's differential coefficient at q=1. Unquantized skeletons only.
DimensionReport dimension_check(const HopfSkeleton& sk, int n,
                                const std::vector<std::pair<Int, Int>>& dims);

}  // namespace dgg
