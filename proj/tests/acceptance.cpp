// Acceptance suite: every identity the library claims, verified exactly at
// the working scale, one pass/fail line per criterion. Usage:
//   dgg_acceptance [golden-dir]
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "dgg/emit.hpp"
#include "dgg/graph.hpp"
#include "dgg/products.hpp"
#include "hecke_oracle.hpp"

using namespace dgg;

namespace {

std::string g_golden_dir = "tests/golden";

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

// 1. D U - U D = 1 Id for young (h 7), nilcoxeter (h 10), zero-hecke (h 6),
//    mr (h 5).
bool criterion_duality_unquantized(Check& c) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"young", 7}, {"nilcoxeter", 10}, {"zero-hecke", 6}, {"mr", 5}};
  for (const auto& [name, height] : cases) {
    auto sk = make_skeleton(name);
    auto pair = build_graphs(*sk, height + 1);
    auto report = check_duality(pair.gamma, pair.gamma_prime, false, height);
    c.require(report.verified && report.r_observed == QPoly(1),
              name + ": " + report.to_string());
  }
  return c.ok;
}

// 2. D U - q U D = 1 Id for nilcoxeter-q (h 10) and zero-hecke-q (h 6).
bool criterion_duality_quantized(Check& c) {
  const std::vector<std::pair<std::string, int>> cases = {{"nilcoxeter-q", 10},
                                                          {"zero-hecke-q", 6}};
  for (const auto& [name, height] : cases) {
    auto sk = make_skeleton(name);
    auto pair = build_graphs(*sk, height + 1);
    auto report = check_duality(pair.gamma, pair.gamma_prime, true, height);
    c.require(report.verified && report.r_observed == QPoly(1),
              name + ": " + report.to_string());
  }
  return c.ok;
}

// 3. sum_{h(v)=n} f f' = n! (young/nilcoxeter/zero-hecke n<=7, mr n<=5) and
//    [n]! (nilcoxeter-q/zero-hecke-q n<=7), with the spot values pinned.
bool criterion_fomin(Check& c) {
  const std::vector<std::tuple<std::string, int, bool>> cases = {
      {"young", 7, false},        {"nilcoxeter", 7, false},
      {"zero-hecke", 7, false},   {"mr", 5, false},
      {"nilcoxeter-q", 7, true},  {"zero-hecke-q", 7, true}};
  for (const auto& [name, max_n, quantized] : cases) {
    auto sk = make_skeleton(name);
    auto pair = build_graphs(*sk, max_n);
    for (int n = 0; n <= max_n; ++n) {
      auto report = fomin_check(pair.gamma, pair.gamma_prime, n, quantized);
      c.require(report.ok, name + " " + report.to_string());
    }
  }

  // zero-hecke at n = 3: per-vertex dims (1,2,2,1) . (1,1,1,1)
  {
    auto pair = build_graphs(*make_skeleton("zero-hecke"), 3);
    auto f = path_count(pair.gamma, 3);
    auto fp = path_count(pair.gamma_prime, 3);
    std::vector<Int> dim_p, dim_s;
    for (const auto& v : pair.gamma.level(3)) {
      dim_p.push_back(f.at(v).eval_at_one());
      dim_s.push_back(fp.at(v).eval_at_one());
    }
    c.require(dim_p == std::vector<Int>{1, 2, 2, 1},
              "zero-hecke n=3 dim P column is not (1,2,2,1)");
    c.require(dim_s == std::vector<Int>{1, 1, 1, 1},
              "zero-hecke n=3 dim S column is not (1,1,1,1)");
  }
  // young at n = 4: 24 = 1 + 9 + 4 + 9 + 1
  {
    auto pair = build_graphs(*make_skeleton("young"), 4);
    auto f = path_count(pair.gamma, 4);
    std::vector<Int> squares;
    Int total = 0;
    for (const auto& v : pair.gamma.level(4)) {
      Int x = f.at(v).eval_at_one();
      squares.push_back(x * x);
      total += x * x;
    }
    c.require(squares == std::vector<Int>{1, 9, 4, 9, 1},
              "young n=4 summands are not 1+9+4+9+1");
    c.require(total == 24, "young n=4 total is not 24");
  }
  return c.ok;
}

// 4. dim H_n(0) = n! and dim N_n = n! via sum dim P * dim S, with the
//    dim P column independently recomputed from S_n descent classes.
bool criterion_dimension(Check& c) {
  for (int n = 0; n <= 7; ++n) {
    auto zh = dimension_check(*make_skeleton("zero-hecke"), n, {{1, 1}});
    c.require(zh.ok, "zero-hecke " + zh.to_string());
    c.require(zh.total == factorial(n), "zero-hecke total != n!");

    // independent: count permutations by descent composition
    std::map<Composition, Int> class_size;
    for (const auto& w : permutations_of(n)) ++class_size[composition_of_word(w)];
    for (const auto& [label, dim_p, dim_s] : zh.table) {
      const auto& I = std::get<Composition>(label.value);
      c.require(dim_p == class_size[I],
                "dim P(" + I.to_string() + ") != descent class size");
      c.require(dim_s == 1, "dim S(" + I.to_string() + ") != 1");
    }

    auto nil = dimension_check(*make_skeleton("nilcoxeter"), n, {{1, 1}});
    c.require(nil.ok && nil.total == factorial(n), "nilcoxeter " + nil.to_string());
    c.require(nil.table.size() == 1 && std::get<2>(nil.table[0]) == 1,
              "nilcoxeter simple module dimension != 1");
  }
  return c.ok;
}

// 5. shuffles(132, 21) is exactly the printed ten words, and
//    sum_{w in S_n} q^{l(w)} = [n]! for n <= 7.
bool criterion_shuffles(Check& c) {
  auto got = shuffles(Permutation({1, 3, 2}), Permutation({2, 1}));
  c.require(got.size() == 10, "shuffle count != 10");
  std::set<std::vector<int>> got_words, expected = {
      {1, 3, 2, 5, 4}, {1, 3, 5, 2, 4}, {1, 5, 3, 2, 4}, {5, 1, 3, 2, 4},
      {1, 3, 5, 4, 2}, {1, 5, 3, 4, 2}, {5, 1, 3, 4, 2}, {1, 5, 4, 3, 2},
      {5, 1, 4, 3, 2}, {5, 4, 1, 3, 2}};
  for (const auto& s : got) got_words.insert(s.word.word);
  c.require(got_words == expected, "shuffle set differs from the printed words");

  for (int n = 0; n <= 7; ++n) {
    QPoly sum;
    for (const auto& w : permutations_of(n)) sum += QPoly::monomial(1, inversions(w));
    c.require(sum == q_factorial(n),
              "length generating function != [" + std::to_string(n) + "]!");
  }
  return c.ok;
}

// 6. DOT and JSON emission of zero-hecke-q Gamma at height 4 match the
//    golden files byte for byte.
bool criterion_golden(Check& c) {
  auto pair = build_graphs(*make_skeleton("zero-hecke-q"), 4);
  c.require(to_dot(pair.gamma) == slurp(g_golden_dir + "/zero_hecke_q_gamma_h4.dot"),
            "DOT emission differs from the golden file");
  c.require(to_json(pair.gamma) == slurp(g_golden_dir + "/zero_hecke_q_gamma_h4.json"),
            "JSON emission differs from the golden file");
  return c.ok;
}

// 7. the q-binomial convolution identity for 1 <= r <= n <= m <= 10, and
//    twisted compatibility for both instances to total degree 6.
bool criterion_qbinom_twisted(Check& c) {
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= m; ++n)
      for (int r = 1; r <= n; ++r) {
        QPoly rhs;
        for (int i = 0; i <= n; ++i) {
          QPoly term = q_binomial(r, i) * q_binomial(m - r, n - i);
          rhs += term.times_q_power((n - i) * (r - i));
        }
        c.require(rhs == q_binomial(m, n),
                  "convolution identity fails at m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
  auto report = check_twisted_compatibility(6);
  c.require(report.ok, report.to_string());
  return c.ok;
}

// 8. classifier == symbolic oracle on all rational (a,b) with numerators and
//    denominators in [-6,6], denominators nonzero; the named cases hit.
bool criterion_hecke(Check& c) {
  std::set<std::pair<Int, Int>> reduced;
  std::vector<Rational> values;
  for (Int num = -6; num <= 6; ++num)
    for (Int den = -6; den <= 6; ++den) {
      if (den == 0) continue;
      Rational v(num, den);
      if (reduced.insert({v.num(), v.den()}).second) values.push_back(v);
    }
  bool hit_h4 = false, hit_h3 = false;
  for (const auto& a : values)
    for (const auto& b : values) {
      auto closed = classify_hecke(a, b);
      auto expect = dggtest::hecke_oracle(a, b);
      if (closed.family != expect.family || closed.order != expect.order) {
        c.require(false, "mismatch at a=" + a.to_string() + " b=" + b.to_string());
        return c.ok;
      }
      hit_h4 |= closed.family == HeckeFamily::NilCoxeter;
      hit_h3 |= closed.family == HeckeFamily::ZeroHecke;
    }
  c.require(hit_h4, "the (0,0) -> H4 case was never hit");
  c.require(hit_h3, "the (a!=0,0) -> H3 case was never hit");
  return c.ok;
}

// 9. every single-edge mutation is caught by check_duality or fomin_check,
//    with a named witness; >= 50 random mutations per instance.
bool criterion_fault_injection(Check& c) {
  std::mt19937_64 rng(987654321);
  for (const auto& name : skeleton_names()) {
    auto sk = make_skeleton(name);
    const int height = name == "mr" ? 4 : 6;
    for (int trial = 0; trial < 50; ++trial) {
      auto pair = build_graphs(*sk, height);
      GradedGraph& g = rng() % 2 == 0 ? pair.gamma : pair.gamma_prime;
      auto edges = g.edge_list();
      const auto& [h, i, j] = edges[rng() % edges.size()];
      const Label from = g.level(h)[static_cast<std::size_t>(i)];
      const Label to = g.level(h + 1)[static_cast<std::size_t>(j)];
      switch (rng() % 3) {
        case 0: g.set_mult(from, to, g.mult(from, to) + QPoly(1)); break;
        case 1: g.set_mult(from, to, g.mult(from, to) + QPoly::q()); break;
        default: g.set_mult(from, to, QPoly()); break;
      }

      auto duality = check_duality(pair.gamma, pair.gamma_prime, sk->quantized(),
                                   height - 1);
      bool caught = false;
      std::string witness;
      if (!duality.verified && duality.counterexample) {
        caught = true;
        witness = duality.counterexample->to_string();
      } else {
        for (int n = 0; n <= height && !caught; ++n) {
          auto fomin = fomin_check(pair.gamma, pair.gamma_prime, n, sk->quantized());
          if (!fomin.ok) {
            caught = true;
            witness = "level " + std::to_string(fomin.level);
          }
        }
      }
      c.require(caught && !witness.empty(),
                name + ": mutated edge " + from.to_string() + " -> " +
                    to.to_string() + " slipped through");
      if (!c.ok) return false;
    }
  }
  return c.ok;
}

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;  // 0 = no stated budget
  std::function<bool(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_golden_dir = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "duality, unquantized: D U - U D = 1 Id (young h7, nilcoxeter h10, "
          "zero-hecke h6, mr h5)", 10.0, criterion_duality_unquantized},
      {2, "duality, quantized: D U - q U D = 1 Id (nilcoxeter-q h10, "
          "zero-hecke-q h6)", 10.0, criterion_duality_quantized},
      {3, "path-count identity: sum f f' = n! / [n]! with pinned spot values",
       30.0, criterion_fomin},
      {4, "dimension identity: dim = n! with descent-class cross-check (n <= 7)",
       0.0, criterion_dimension},
      {5, "shuffle ground truth: Shuf(132,21) and sum q^l(w) = [n]! (n <= 7)",
       0.0, criterion_shuffles},
      {6, "golden files: zero-hecke-q Gamma h4 DOT/JSON byte-exact", 0.0,
       criterion_golden},
      {7, "q-binomial convolution (m <= 10) and twisted compatibility (deg 6)",
       30.0, criterion_qbinom_twisted},
      {8, "Hecke classifier vs symbolic oracle on [-6,6] rationals", 5.0,
       criterion_hecke},
      {9, "fault injection: 50 random edge mutations per instance all caught",
       0.0, criterion_fault_injection},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = criterion.run(check);
    } catch (const std::exception& e) {
      ok = false;
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      ok = false;
      check.require(false, "runtime " + std::to_string(seconds) + "s over budget");
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << ". " << criterion.label
         << " (" << std::fixed << std::setprecision(2) << seconds << "s)";
    if (!ok) {
      if (!error.empty()) line << " error: " << error;
      if (!check.detail.str().empty()) line << " -- " << check.detail.str();
    }
    std::cout << line.str() << "\n";
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "acceptance: all criteria passed"
                       : "acceptance: FAILURES above")
            << "\n";
  return all_ok ? 0 : 1;
}
