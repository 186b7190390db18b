// Command-line front end: build and emit graded graphs, run the exact
// verification suites, expand quantum shuffle products, classify Hecke
// parameters. Exit codes: 0 success/verified, 1 verification counterexample,
// 2 usage or configuration error.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dgg/emit.hpp"
#include "dgg/graph.hpp"
#include "dgg/hecke.hpp"
#include "dgg/products.hpp"
#include "dgg/qpoly.hpp"
#include "dgg/skeletons.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

int default_height(const std::string& instance) {
  return instance == "mr" ? 5 : 6;
}

std::string resolve_instance(std::string instance, bool quantized) {
  if (!quantized) return instance;
  if (instance == "nilcoxeter" || instance == "zero-hecke") return instance + "-q";
  if (instance == "nilcoxeter-q" || instance == "zero-hecke-q") return instance;
  throw std::invalid_argument("instance '" + instance + "' has no quantized variant");
}

dgg::Composition parse_composition(std::string text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  dgg::Composition out;
  std::string part;
  auto flush = [&] {
    if (part.empty()) return;
    out.parts.push_back(std::stoi(part));
    part.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else if (c == ' ')
      continue;
    else if (c >= '0' && c <= '9')
      part.push_back(c);
    else
      throw std::invalid_argument("cannot parse composition: " + text);
  }
  flush();
  for (int p : out.parts)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  return out;
}

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << content;
}

std::string with_suffix(const std::string& path, const std::string& tag) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
    return path + "." + tag;
  return path.substr(0, dot) + "." + tag + path.substr(dot);
}

int cmd_graph(const std::string& instance, int height, int cap,
              const std::string& format, const std::string& which,
              const std::string& out_path) {
  auto sk = dgg::make_skeleton(instance, cap);
  auto pair = dgg::build_graphs(*sk, height);
  auto render = [&](const dgg::GradedGraph& g) {
    if (format == "dot") return dgg::to_dot(g);
    if (format == "json") return dgg::to_json(g);
    return dgg::to_text(g);
  };
  if (which == "gamma") {
    write_output(render(pair.gamma), out_path);
  } else if (which == "gamma-prime") {
    write_output(render(pair.gamma_prime), out_path);
  } else if (out_path.empty()) {
    std::cout << render(pair.gamma) << '\n' << render(pair.gamma_prime);
  } else {
    write_output(render(pair.gamma), with_suffix(out_path, "gamma"));
    write_output(render(pair.gamma_prime), with_suffix(out_path, "gamma-prime"));
  }
  return kExitVerified;
}

int cmd_verify(const std::string& instance, int height, int cap) {
  auto sk = dgg::make_skeleton(instance, cap);
  auto pair = dgg::build_graphs(*sk, height + 1);
  std::cout << "instance " << instance << " (height " << height << ")\n";

  auto duality = dgg::check_duality(pair.gamma, pair.gamma_prime, sk->quantized(), height);
  std::cout << (duality.verified ? "duality: OK r = " + duality.r_observed.to_string()
                                 : "duality: FAIL")
            << "\n";
  if (!duality.verified) {
    std::cout << "  counterexample vertex "
              << (duality.counterexample ? duality.counterexample->to_string() : "?")
              << " defect = " << dgg::to_string(duality.defect) << "\n";
    return kExitCounterexample;
  }

  for (int n = 0; n <= height; ++n) {
    auto fomin = dgg::fomin_check(pair.gamma, pair.gamma_prime, n, sk->quantized(),
                                  duality.r_observed);
    if (!fomin.ok) {
      std::cout << "fomin: FAIL at " << fomin.to_string() << "\n";
      return kExitCounterexample;
    }
  }
  std::cout << "fomin: OK " << (sk->quantized() ? "r^n [n]!" : "r^n n!")
            << " for n <= " << height << "\n";
  return kExitVerified;
}

int cmd_product(const std::string& i_text, const std::string& j_text,
                const std::string& format) {
  auto I = parse_composition(i_text);
  auto J = parse_composition(j_text);
  if (I.size() + J.size() > 10)
    throw std::invalid_argument("product: |I| + |J| must be at most 10");
  auto expansion = dgg::qsym_q_product(I, J);
  if (format == "json") {
    std::cout << "{\"I\": \"" << I.to_string() << "\", \"J\": \"" << J.to_string()
              << "\", \"terms\": [";
    bool first = true;
    for (const auto& [label, coeff] : expansion) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << "{\"label\": \"" << label.to_string() << "\", \"coeff\": \""
                << coeff.to_string() << "\"}";
    }
    std::cout << "]}\n";
    return kExitVerified;
  }
  if (expansion.empty()) {
    std::cout << "0\n";
    return kExitVerified;
  }
  bool first = true;
  for (const auto& [label, coeff] : expansion) {
    if (!first) std::cout << " + ";
    first = false;
    if (coeff.is_one()) {
    } else if (coeff == dgg::QPoly::monomial(coeff.coeff(coeff.degree()), coeff.degree()) &&
               coeff.coeff(coeff.degree()) > 0) {
      std::cout << coeff.to_string() << ' ';
    } else {
      std::cout << '(' << coeff.to_string() << ") ";
    }
    std::cout << 'F' << label.to_string();
  }
  std::cout << "\n";
  return kExitVerified;
}

int cmd_classify(const std::string& a_text, const std::string& b_text) {
  auto a = dgg::Rational::parse(a_text);
  auto b = dgg::Rational::parse(b_text);
  std::cout << dgg::classify_hecke(a, b).to_string() << "\n";
  return kExitVerified;
}

int cmd_qbinom_check(int max_m) {
  // binom(m,n)_q = sum_i q^{(n-i)(r-i)} binom(r,i)_q binom(m-r,n-i)_q
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= m; ++n)
      for (int r = 1; r <= n; ++r) {
        dgg::QPoly rhs;
        for (int i = 0; i <= n; ++i) {
          dgg::QPoly term = dgg::q_binomial(r, i) * dgg::q_binomial(m - r, n - i);
          rhs += term.times_q_power((n - i) * (r - i));  // exponent >= 0 off the zero terms
        }
        if (rhs != dgg::q_binomial(m, n)) {
          std::cout << "qbinom: FAIL at m=" << m << " n=" << n << " r=" << r << "\n";
          return kExitCounterexample;
        }
      }
  std::cout << "qbinom: OK for all 1 <= r <= n <= m <= " << max_m << "\n";
  return kExitVerified;
}

int cmd_twisted_check(int maxdeg) {
  auto report = dgg::check_twisted_compatibility(maxdeg);
  std::cout << report.to_string() << "\n";
  return report.ok ? kExitVerified : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual graded graphs from degree-1 Hopf structure constants"};
  app.require_subcommand(1);

  std::string instance, format = "dot", which = "both", out_path;
  std::string i_text, j_text, a_text, b_text;
  int height = -1, cap = 8, max_m = 10, maxdeg = 6;
  bool quantized = false;

  auto* graph = app.add_subcommand("graph", "emit Gamma / Gamma' (dot, json or text)");
  graph->add_option("instance", instance, "one of: young, nilcoxeter, nilcoxeter-q, "
                                          "zero-hecke, zero-hecke-q, mr")->required();
  graph->add_option("--height", height, "levels to materialize");
  graph->add_option("--format", format, "dot | json | text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  graph->add_option("--which", which, "gamma | gamma-prime | both")
      ->check(CLI::IsMember({"gamma", "gamma-prime", "both"}));
  graph->add_option("--out", out_path, "output path (stdout when omitted)");
  graph->add_option("--cap", cap, "permutation enumeration cap (default 8)");
  graph->add_flag("--quantized", quantized, "use the quantized variant");

  auto* verify = app.add_subcommand("verify", "check duality and the path-count identity");
  verify->add_option("instance", instance)->required();
  verify->add_option("--height", height, "check vertices up to this height");
  verify->add_option("--cap", cap, "permutation enumeration cap (default 8)");
  verify->add_flag("--quantized", quantized, "use the quantized variant");

  auto* product = app.add_subcommand("product", "quantum shuffle product F_I * F_J");
  product->add_option("I", i_text, "first composition, e.g. (2,1)")->required();
  product->add_option("J", j_text, "second composition")->required();
  product->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto* classify = app.add_subcommand("classify", "classify H_n(a,b) for rational a, b");
  classify->add_option("a", a_text, "rational, e.g. 3 or -3/4")->required();
  classify->add_option("b", b_text, "rational")->required();

  auto* qbinom = app.add_subcommand("qbinom-check", "q-binomial convolution identity sweep");
  qbinom->add_option("--max", max_m, "largest m (default 10)");

  auto* twisted = app.add_subcommand("twisted-check",
                                     "coproduct multiplicativity for the q-twisted tensor");
  twisted->add_option("--maxdeg", maxdeg, "largest total degree (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (graph->parsed()) {
      instance = resolve_instance(instance, quantized);
      if (height < 0) height = default_height(instance);
      return cmd_graph(instance, height, cap, format, which, out_path);
    }
    if (verify->parsed()) {
      instance = resolve_instance(instance, quantized);
      if (height < 0) height = default_height(instance);
      return cmd_verify(instance, height, cap);
    }
    if (product->parsed()) {
      if (format == "dot") format = "text";
      return cmd_product(i_text, j_text, format);
    }
    if (classify->parsed()) return cmd_classify(a_text, b_text);
    if (qbinom->parsed()) return cmd_qbinom_check(max_m);
    if (twisted->parsed()) return cmd_twisted_check(maxdeg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
