/// Exact classification of the two-parameter Hecke algebras H_n(a,b) over
/// rational (a, b): eliminating z from a z = b z^2 - 1 and q = b z^2 shows q
/// satisfies b q^2 - (2b + a^2) q + b = 0, whose two roots are reciprocal, so
/// q is a degree <= 2 root of unity iff a^2 equals -4b, -3b, -2b or -b
/// (orders 2, 3, 4, 6 respectively).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgg/qpoly.hpp"

namespace dgg {

/// A reduced fraction with positive denominator; checked integer arithmetic.
class Rational {
 public:
  Rational() = default;
  Rational(Int n);  // NOLINT: integers convert implicitly
  Rational(Int num, Int den);

  static Rational parse(const std::string& text);  // "p/q" or "p"

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(checked_sub(0, num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

enum class HeckeFamily {
  GenericHecke,    // H1 at a generic value of q
  SymmetricGroup,  // q = 1 (the a = 0, b != 0 case)
  RootOfUnity,     // H2, q a primitive root of unity of order 2, 3, 4 or 6
  ZeroHecke,       // H3 (a != 0, b = 0)
  NilCoxeter,      // H4 (a = b = 0)
};

struct HeckeClass {
  HeckeFamily family = HeckeFamily::GenericHecke;
  int order = 0;              // the root-of-unity order, RootOfUnity only
  std::string q_description;  // exact value of q = b z^2 or its minimal polynomial

  std::string to_string() const;
};

/// Decides which family H_n(a,b) belongs to. Exact over Q; no tolerances.
HeckeClass classify_hecke(const Rational& a, const Rational& b);

/// If the given polynomial (ascending coefficients, degree 1 or 2) is a
/// rational multiple of the r-th cyclotomic polynomial for r in
/// {1, 2, 3, 4, 6}, returns r; otherwise nullopt. Throws on other degrees.
std::optional<int> cyclotomic_order(const std::vector<Rational>& ascending_coeffs);

}  // namespace dgg
