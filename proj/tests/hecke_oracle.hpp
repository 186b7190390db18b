// Test-only brute-force oracle for the two-parameter Hecke classifier,
// independent of the closed form in the library: solve b z^2 - a z - 1 = 0
// symbolically (in Q, or in the quadratic field Q(sqrt(disc)) represented as
// x + y s with s^2 = disc), form q = b z^2, and test q^k = 1 exactly for
// k = 1..6. Both roots are classified and must agree.
#pragma once

#include <optional>
#include <stdexcept>

#include "dgg/hecke.hpp"

namespace dggtest {

using dgg::HeckeFamily;
using dgg::Int;
using dgg::Rational;

inline std::optional<Rational> oracle_rational_sqrt(const Rational& x) {
  if (x.num() < 0) return std::nullopt;
  auto isqrt = [](Int n) -> std::optional<Int> {
    Int r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? std::optional<Int>(r) : std::nullopt;
  };
  auto n = isqrt(x.num());
  auto d = isqrt(x.den());
  if (n && d) return Rational(*n, *d);
  return std::nullopt;
}

struct QuadExt {
  Rational x, y, d;  // x + y s with s^2 = d

  QuadExt mul(const QuadExt& o) const {
    return {x * o.x + y * o.y * d, x * o.y + y * o.x, d};
  }
  bool is_one() const { return x == Rational(1) && y.is_zero(); }
};

inline int oracle_unity_order(const Rational& q) {
  Rational p(1);
  for (int k = 1; k <= 6; ++k) {
    p = p * q;
    if (p == Rational(1)) return k;
  }
  return 0;
}

inline int oracle_unity_order(const QuadExt& q) {
  QuadExt p{Rational(1), Rational(0), q.d};
  for (int k = 1; k <= 6; ++k) {
    p = p.mul(q);
    if (p.is_one()) return k;
  }
  return 0;
}

struct OracleVerdict {
  HeckeFamily family = HeckeFamily::GenericHecke;
  int order = 0;
  friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

inline OracleVerdict oracle_verdict_from_order(int order) {
  if (order == 1) return {HeckeFamily::SymmetricGroup, 0};
  if (order > 1) return {HeckeFamily::RootOfUnity, order};
  return {HeckeFamily::GenericHecke, 0};
}

// classifies via both roots of the quadratic; throws if they disagree
inline OracleVerdict hecke_oracle(const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) return {HeckeFamily::NilCoxeter, 0};
  if (b.is_zero()) return {HeckeFamily::ZeroHecke, 0};  // a z = -1, q = b z^2 = 0

  const Rational disc = a * a + Rational(4) * b;
  std::optional<OracleVerdict> first;
  if (auto root = oracle_rational_sqrt(disc)) {
    for (int sign : {+1, -1}) {
      Rational z = (a + Rational(sign) * *root) / (Rational(2) * b);
      Rational q = b * z * z;
      auto v = oracle_verdict_from_order(oracle_unity_order(q));
      if (first && !(*first == v))
        throw std::logic_error("oracle: the two roots disagree");
      first = v;
    }
  } else {
    // q = b z^2 = (a^2 + disc + 2 a s) / (4 b)
    for (int sign : {+1, -1}) {
      QuadExt q{(a * a + disc) / (Rational(4) * b),
                Rational(2 * sign) * a / (Rational(4) * b), disc};
      auto v = oracle_verdict_from_order(oracle_unity_order(q));
      if (first && !(*first == v))
        throw std::logic_error("oracle: the two roots disagree");
      first = v;
    }
  }
  return *first;
}

}  // namespace dggtest
