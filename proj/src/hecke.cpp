#include "dgg/hecke.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dgg {

Rational::Rational(Int n) : num_(n), den_(1) {}

Rational::Rational(Int num, Int den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  Int g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      Int n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return Rational(n);
    }
    Int n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    std::string den_part = text.substr(slash + 1);
    Int d = std::stoll(den_part, &used);
    if (used != den_part.size()) throw std::invalid_argument("");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("Rational: value out of range in \"" + text + "\"");
  }
}

// gcd-reduced cross terms so that intermediates never exceed the magnitude
// of the reduced result by more than a factor of the coprime parts
Rational operator+(const Rational& a, const Rational& b) {
  Int g = std::gcd(a.den_, b.den_);
  Int num = checked_add(checked_mul(a.num_, b.den_ / g),
                        checked_mul(b.num_, a.den_ / g));
  return Rational(num, checked_mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  Int g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                  checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return a * Rational(b.den_, b.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string HeckeClass::to_string() const {
  switch (family) {
    case HeckeFamily::NilCoxeter:
      return "H4: nilCoxeter";
    case HeckeFamily::ZeroHecke:
      return "H3: 0-Hecke";
    case HeckeFamily::RootOfUnity:
      return "H2: root of unity, order " + std::to_string(order) + " (" +
             q_description + ")";
    case HeckeFamily::SymmetricGroup:
      return "H1: symmetric group (q = 1)";
    case HeckeFamily::GenericHecke:
      return "H1: generic (" + q_description + ")";
  }
  return {};
}

namespace {

std::optional<Int> int_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  if (n == 0) return 0;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  if (r < 1) r = 1;
  while (r > 1 && r > n / r) --r;  // r*r > n, division form avoids overflow
  while (r + 1 <= n / (r + 1)) ++r;
  return r * r == n ? std::optional<Int>(r) : std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  auto n = int_sqrt(x.num());
  auto d = int_sqrt(x.den());
  if (n && d) return Rational(*n, *d);
  return std::nullopt;
}

}  // namespace

std::optional<int> cyclotomic_order(const std::vector<Rational>& coeffs) {
  if (coeffs.size() < 2 || coeffs.size() > 3 || coeffs.back().is_zero())
    throw std::invalid_argument("cyclotomic_order: degree must be 1 or 2");
  // degree <= 2 cyclotomics, ascending coefficients
  static const std::vector<std::pair<int, std::vector<Int>>> table = {
      {1, {-1, 1}}, {2, {1, 1}}, {3, {1, 1, 1}}, {4, {1, 0, 1}}, {6, {1, -1, 1}}};
  for (const auto& [order, cyc] : table) {
    if (cyc.size() != coeffs.size()) continue;
    const Rational scale = coeffs.back();  // cyclotomics are monic
    bool match = true;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (coeffs[i] != scale * Rational(cyc[i])) {
        match = false;
        break;
      }
    if (match) return order;
  }
  return std::nullopt;
}

HeckeClass classify_hecke(const Rational& a, const Rational& b) {
  HeckeClass out;
  if (a.is_zero() && b.is_zero()) {
    out.family = HeckeFamily::NilCoxeter;
    out.q_description = "T_i^2 = 0";
    return out;
  }
  if (b.is_zero()) {
    // a z = -1 determines z linearly; q = b z^2 = 0
    out.family = HeckeFamily::ZeroHecke;
    out.q_description = "q = 0";
    return out;
  }
  if (a.is_zero()) {
    // b z^2 = 1 forces q = b z^2 = 1
    out.family = HeckeFamily::SymmetricGroup;
    out.q_description = "q = 1";
    return out;
  }

  const Rational a2 = a * a;
  if (a2 == Rational(-4) * b) {
    out.family = HeckeFamily::RootOfUnity;
    out.order = 2;
    out.q_description = "q = -1";
    return out;
  }
  // the reciprocal-root quadratic b q^2 - (2b + a^2) q + b
  const std::vector<Rational> quad = {b, -(Rational(2) * b + a2), b};
  if (auto ord = cyclotomic_order(quad); ord && *ord >= 3) {
    out.family = HeckeFamily::RootOfUnity;
    out.order = *ord;
    out.q_description = *ord == 3   ? "q^2 + q + 1 = 0"
                        : *ord == 4 ? "q^2 + 1 = 0"
                                    : "q^2 - q + 1 = 0";
    return out;
  }

  out.family = HeckeFamily::GenericHecke;
  // rational q when the discriminant (2b + a^2)^2 - 4b^2 is a perfect square
  const Rational disc = quad[1] * quad[1] - Rational(4) * quad[0] * quad[2];
  if (auto root = rational_sqrt(disc)) {
    const Rational q1 = (-quad[1] + *root) / (Rational(2) * quad[2]);
    const Rational q2 = (-quad[1] - *root) / (Rational(2) * quad[2]);
    out.q_description = "q = " + q1.to_string() +
                        (q1 == q2 ? "" : " or q = " + q2.to_string());
    return out;
  }
  // integer-cleared rendering of the quadratic satisfied by q
  Int lcm = std::lcm(std::lcm(quad[0].den(), quad[1].den()), quad[2].den());
  Int c2 = quad[2].num() * (lcm / quad[2].den());
  Int c1 = quad[1].num() * (lcm / quad[1].den());
  Int c0 = quad[0].num() * (lcm / quad[0].den());
  if (c2 < 0) {
    c2 = -c2;
    c1 = -c1;
    c0 = -c0;
  }
  Int g = std::gcd(std::gcd(c2 < 0 ? -c2 : c2, c1 < 0 ? -c1 : c1),
                   c0 < 0 ? -c0 : c0);
  if (g > 1) {
    c2 /= g;
    c1 /= g;
    c0 /= g;
  }
  std::ostringstream desc;
  desc << "q satisfies ";
  if (c2 != 1) desc << c2;
  desc << "q^2";
  if (c1 != 0) desc << (c1 < 0 ? " - " : " + ") << (c1 < 0 ? -c1 : c1) << "q";
  if (c0 != 0) desc << (c0 < 0 ? " - " : " + ") << (c0 < 0 ? -c0 : c0);
  desc << " = 0";
  out.q_description = desc.str();
  return out;
}

}  // namespace dgg
