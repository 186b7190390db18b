#include "dgg/products.hpp"

#include <map>
#include <sstream>

namespace dgg {

LinComb qsym_q_product(const Composition& I, const Composition& J) {
  Permutation w, v;
  if (I.size() > 0) w = canonical_rep(I);
  if (J.size() > 0) v = canonical_rep(J);
  LinComb out;
  for (const auto& sh : shuffles(w, v))
    add_term(out, Label(composition_of_word(sh.word)), QPoly::monomial(1, sh.theta));
  return out;
}

LinComb qdivided_power_product(const ChainLevel& a, const ChainLevel& b) {
  LinComb out;
  add_term(out, Label(ChainLevel(a.n + b.n)), q_binomial(a.n + b.n, a.n));
  return out;
}

std::vector<std::pair<Composition, Composition>> fundamental_coproduct(
    const Composition& I) {
  const int n = I.size();
  const std::vector<int> des = descent_set(I);
  std::vector<std::pair<Composition, Composition>> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> left, right;
    for (int d : des) {
      if (d < k)
        left.push_back(d);
      else if (d > k)
        right.push_back(d - k);
      // a cut exactly at a descent splits cleanly: the descent vanishes
    }
    out.emplace_back(composition_from_descents(k, left),
                     composition_from_descents(n - k, right));
  }
  return out;
}

std::vector<std::pair<ChainLevel, ChainLevel>> divided_power_coproduct(
    const ChainLevel& c) {
  std::vector<std::pair<ChainLevel, ChainLevel>> out;
  for (int r = 0; r <= c.n; ++r)
    out.emplace_back(ChainLevel(r), ChainLevel(c.n - r));
  return out;
}

std::string TwistedReport::to_string() const {
  std::ostringstream out;
  if (ok) {
    out << "twisted compatibility OK for qsym-q and divided-power-q up to total degree "
        << max_degree;
  } else {
    out << "twisted compatibility FAIL [" << family << "] at " << pair << ": "
        << detail;
  }
  return out.str();
}

namespace {

// basis tensors with Z[q] coefficients
template <typename B>
using Tensor = std::map<std::pair<B, B>, QPoly>;

template <typename B>
void tensor_add(Tensor<B>& t, std::pair<B, B> key, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

bool check_qsym_pair(const Composition& I, const Composition& J,
                     TwistedReport& report) {
  // LHS: Delta(F_I) .q Delta(F_J), products of tensors with the braiding power
  Tensor<Composition> lhs;
  for (const auto& [i1, i2] : fundamental_coproduct(I)) {
    for (const auto& [j1, j2] : fundamental_coproduct(J)) {
      const int braid = i2.size() * j1.size();
      LinComb left = qsym_q_product(i1, j1);
      LinComb right = qsym_q_product(i2, j2);
      for (const auto& [la, ca] : left)
        for (const auto& [lb, cb] : right)
          tensor_add(lhs,
                     {std::get<Composition>(la.value), std::get<Composition>(lb.value)},
                     (ca * cb).times_q_power(braid));
    }
  }
  // RHS: Delta(F_I * F_J)
  Tensor<Composition> rhs;
  for (const auto& [l, c] : qsym_q_product(I, J))
    for (const auto& [k1, k2] : fundamental_coproduct(std::get<Composition>(l.value)))
      tensor_add(rhs, {k1, k2}, c);

  if (lhs == rhs) return true;
  report.ok = false;
  report.family = "qsym-q";
  report.pair = "I=" + I.to_string() + " J=" + J.to_string();
  report.detail = "Delta(F_I) .q Delta(F_J) != Delta(F_I * F_J)";
  return false;
}

bool check_divided_pair(int a, int b, TwistedReport& report) {
  Tensor<int> lhs;
  for (const auto& [i1, i2] : divided_power_coproduct(ChainLevel(a))) {
    for (const auto& [j1, j2] : divided_power_coproduct(ChainLevel(b))) {
      const int braid = i2.n * j1.n;
      QPoly c = (q_binomial(i1.n + j1.n, i1.n) * q_binomial(i2.n + j2.n, i2.n))
                    .times_q_power(braid);
      tensor_add(lhs, {i1.n + j1.n, i2.n + j2.n}, c);
    }
  }
  Tensor<int> rhs;
  const QPoly prod = q_binomial(a + b, a);
  for (const auto& [k1, k2] : divided_power_coproduct(ChainLevel(a + b)))
    tensor_add(rhs, {k1.n, k2.n}, prod);

  if (lhs == rhs) return true;
  report.ok = false;
  report.family = "divided-power-q";
  report.pair = "a=" + std::to_string(a) + " b=" + std::to_string(b);
  report.detail = "Delta(x^a/[a]!) .q Delta(x^b/[b]!) != Delta of the product";
  return false;
}

}  // namespace

TwistedReport check_twisted_compatibility(int maxdeg) {
  if (maxdeg < 0)
    throw std::invalid_argument("check_twisted_compatibility: negative degree");
  TwistedReport report;
  report.max_degree = maxdeg;
  for (int m = 0; m <= maxdeg; ++m) {
    for (int dI = 0; dI <= m; ++dI) {
      const int dJ = m - dI;
      for (const auto& I : compositions_of(dI))
        for (const auto& J : compositions_of(dJ))
          if (!check_qsym_pair(I, J, report)) return report;
      if (!check_divided_pair(dI, dJ, report)) return report;
    }
  }
  return report;
}

}  // namespace dgg
