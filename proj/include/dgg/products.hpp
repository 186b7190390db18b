/// The two fully quantized products and the q-twisted compatibility check:
/// the quantum shuffle product on fundamental quasi-symmetric functions and
/// the q-divided-power product on the chain, together with their coproducts
/// and the verification that each coproduct is multiplicative for the
/// braided tensor product (a@b) .q (a'@b') = q^{deg(b) deg(a')} (aa' @ bb').
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgg/skeletons.hpp"

namespace dgg {

/// F_I * F_J = sum over shuffles u of q^{theta(u)} F_{C(u)}. Homogeneous of
/// degree |I| + |J|; coefficients in N[q].
LinComb qsym_q_product(const Composition& I, const Composition& J);

/// [S_a] * [S_b] = binom(a+b, a)_q [S_{a+b}] in the q-divided-power algebra.
LinComb qdivided_power_product(const ChainLevel& a, const ChainLevel& b);

/// The n+1 deconcatenation-style splits of F_I: one pair per cut point
/// k = 0..n, restricting the descent set to each side. Coefficient 1 each.
std::vector<std::pair<Composition, Composition>> fundamental_coproduct(
    const Composition& I);

/// Delta(x^c/[c]!) = sum_r x^r/[r]! (x) x^{c-r}/[c-r]!.
std::vector<std::pair<ChainLevel, ChainLevel>> divided_power_coproduct(
    const ChainLevel& c);

struct TwistedReport {
  bool ok = true;
  int max_degree = 0;
  // first counterexample, when not ok
  std::string family;
  std::string pair;
  std::string detail;

  std::string to_string() const;
};

/// Checks Delta(a) .q Delta(b) == Delta(a b) on all basis pairs of total
/// degree <= maxdeg, for QSym_q on fundamentals and for the q-divided-power
/// algebra. Failure is a report outcome, not an error.
TwistedReport check_twisted_compatibility(int maxdeg);

}  // namespace dgg
