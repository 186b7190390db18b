/// Exact arithmetic in Z[q]: polynomials with checked 64-bit integer
/// coefficients, plus the q-integer / q-factorial / q-binomial helpers that
/// every edge multiplicity and path count in this library lives in.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgg {

using Int = std::int64_t;

// All coefficient arithmetic goes through these. Overflow throws instead of
// wrapping; every identity in this library is exact, so a silent truncation
// would invalidate a verification.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("dgg: integer overflow in Z[q] arithmetic");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("dgg: integer overflow in Z[q] arithmetic");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("dgg: integer overflow in Z[q] arithmetic");
  return r;
}

/// n! as a checked integer.
Int factorial(int n);

/// An element of Z[q] in canonical form: coefficients stored by ascending
/// exponent, highest stored coefficient nonzero (the zero polynomial has
/// empty storage). Values are immutable in spirit: all operations return new
/// polynomials, so sharing across threads is safe.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Int constant);  // NOLINT: implicit conversion from integers is wanted
  explicit QPoly(std::vector<Int> coeffs);

  /// c * q^e
  static QPoly monomial(Int c, int e);
  /// the variable q
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^e (0 beyond the stored support).
  Int coeff(int e) const;

  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Sum of coefficients, i.e. the specialization at q = 1.
  Int eval_at_one() const;

  bool nonneg() const;  // all coefficients >= 0

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  friend bool operator==(const QPoly& a, const QPoly& b) = default;
  friend auto operator<=>(const QPoly& a, const QPoly& b) = default;

  /// Multiply by q^k.
  QPoly times_q_power(int k) const;

  /// Canonical rendering, ascending powers: "1 + 2q + q^3"; zero is "0".
  /// This string is the wire format for multiplicities in DOT and JSON.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
QPoly q_int(int n);

/// [n]! = [n][n-1]...[1]; [0]! = 1.
QPoly q_factorial(int n);

/// Gaussian binomial [m choose n]_q, 0 when m < n. Computed by the Pascal
/// recurrence binom(m,n) = binom(m-1,n-1) + q^n binom(m-1,n), which stays in
/// N[q] without polynomial division.
QPoly q_binomial(int m, int n);

/// p^n by repeated multiplication; p^0 = 1.
QPoly pow(const QPoly& p, int n);

inline Int eval_at_one(const QPoly& p) { return p.eval_at_one(); }

}  // namespace dgg
