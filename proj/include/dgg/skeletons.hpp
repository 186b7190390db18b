/// Hopf skeletons: for each algebra family, the degree-1 structure constants
/// exposed as an up-expansion (multiplication by the distinguished degree-1
/// element beta) and a down-expansion (skewing by alpha), with coefficients
/// in N[q]. These are exactly the data the graded-graph construction
/// consumes.
///
/// Instances registered under the names accepted by the CLI:
///   "young", "nilcoxeter", "nilcoxeter-q", "zero-hecke", "zero-hecke-q", "mr"
#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dgg/comblab.hpp"
#include "dgg/qpoly.hpp"

namespace dgg {

/// A finitely supported Z[q]-linear combination of labels. No zero
/// coefficients are stored.
using LinComb = std::map<Label, QPoly>;

/// term += c * label, erasing the entry if the sum cancels to zero.
void add_term(LinComb& x, const Label& label, const QPoly& c);

LinComb operator+(const LinComb& a, const LinComb& b);
LinComb operator-(const LinComb& a, const LinComb& b);
LinComb operator*(const QPoly& c, const LinComb& x);

std::string to_string(const LinComb& x);

/// Skeletons are immutable after construction and their queries are pure, so
/// they can be shared freely across threads.
class HopfSkeleton {
 public:
  virtual ~HopfSkeleton() = default;

  virtual std::string name() const = 0;
  virtual bool quantized() const = 0;

  /// The differential coefficient r = <alpha, beta>.
  virtual QPoly diff_coeff() const { return 1; }

  /// The degree-n basis labels in the documented enumeration order. Degree 0
  /// always holds a single label.
  virtual std::vector<Label> labels(int degree) const = 0;

  /// beta * v expanded in the basis; homogeneous of degree deg(v) + 1, all
  /// coefficients in N[q].
  virtual LinComb up(const Label& v) const = 0;

  /// The alpha-skewing of v; homogeneous of degree deg(v) - 1, coefficients
  /// in N[q]. Empty at degree 0.
  virtual LinComb down(const Label& v) const = 0;
};

/// Young's lattice: partitions with box addition/removal, r = 1.
std::unique_ptr<HopfSkeleton> young_skeleton();

/// The chain pair: up(i) = (i+1)*(i+1) (or [i+1]_q when quantized),
/// down(i) = (i-1), r = 1.
std::unique_ptr<HopfSkeleton> nilcoxeter_skeleton(bool quantized);

/// Compositions: up by the BinWord edge rule (Figure-style q-power weights
/// when quantized), down by the lifted-binary-tree parent rule, r = 1.
std::unique_ptr<HopfSkeleton> zero_hecke_skeleton(bool quantized);

/// Permutations with the two shuffle products (Malvenuto-Reutenauer bi-tower):
/// up(s) = sum over the n+1 shuffles zeta of (1 x s) zeta^{-1}; down is the
/// transpose of tau -> sum over zeta of zeta (1 x tau). r = 1.
std::unique_ptr<HopfSkeleton> mr_skeleton(int permutation_cap = 8);

/// Factory over the six registered instance names above.
std::unique_ptr<HopfSkeleton> make_skeleton(std::string_view name,
                                            int permutation_cap = 8);

const std::vector<std::string>& skeleton_names();

}  // namespace dgg
