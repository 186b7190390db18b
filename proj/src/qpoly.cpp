#include "dgg/qpoly.hpp"

#include <sstream>

namespace dgg {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, k);
  return r;
}

QPoly::QPoly(Int constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Int c, int e) {
  if (e < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(e) + 1, 0);
    p.coeffs_.back() = c;
  }
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPoly::coeff(int e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(e)];
}

Int QPoly::eval_at_one() const {
  Int s = 0;
  for (Int c : coeffs_) s = checked_add(s, c);
  return s;
}

bool QPoly::nonneg() const {
  for (Int c : coeffs_)
    if (c < 0) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (Int& c : r.coeffs_) c = checked_sub(0, c);
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] =
          checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.trim();
  return r;
}

QPoly QPoly::times_q_power(int k) const {
  if (is_zero()) return *this;
  if (k < 0) throw std::invalid_argument("QPoly::times_q_power: negative shift");
  if (k == 0) return *this;
  QPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(k), 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    Int c = coeffs_[e];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int m = c < 0 ? checked_sub(0, c) : c;
    if (e == 0) {
      out << m;
    } else {
      if (m != 1) out << m;
      out << 'q';
      if (e > 1) out << '^' << e;
    }
  }
  return out.str();
}

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  QPoly p;
  if (n > 0) p = QPoly(std::vector<Int>(static_cast<std::size_t>(n), 1));
  return p;
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly r = 1;
  for (int k = 1; k <= n; ++k) r *= q_int(k);
  return r;
}

QPoly q_binomial(int m, int n) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("q_binomial: negative argument");
  if (m < n) return {};
  // one row of the q-Pascal triangle at a time
  std::vector<QPoly> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, n); j >= 1; --j) {
      // binom(i,j) = binom(i-1,j-1) + q^j binom(i-1,j)
      row[j] = row[j - 1] + row[j].times_q_power(j);
    }
  }
  return row[static_cast<std::size_t>(n)];
}

QPoly pow(const QPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("pow: negative exponent");
  QPoly r = 1;
  for (int k = 0; k < n; ++k) r *= p;
  return r;
}

}  // namespace dgg
