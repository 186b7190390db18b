#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dgg/emit.hpp"

using namespace dgg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("zero-hecke-q Gamma matches the DOT golden byte for byte") {
  auto pair = build_graphs(*zero_hecke_skeleton(true), 4);
  CHECK(to_dot(pair.gamma) ==
        slurp(std::string(DGG_GOLDEN_DIR) + "/zero_hecke_q_gamma_h4.dot"));
}

TEST_CASE("zero-hecke-q Gamma matches the JSON golden byte for byte") {
  auto pair = build_graphs(*zero_hecke_skeleton(true), 4);
  CHECK(to_json(pair.gamma) ==
        slurp(std::string(DGG_GOLDEN_DIR) + "/zero_hecke_q_gamma_h4.json"));
}

TEST_CASE("emitted JSON parses and keeps the documented key order") {
  auto pair = build_graphs(*zero_hecke_skeleton(true), 3);
  auto doc = nlohmann::ordered_json::parse(to_json(pair.gamma));
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "quantized", "levels", "edges"});
  CHECK(doc["name"] == "zero-hecke-q:Gamma");
  CHECK(doc["quantized"] == true);
  CHECK(doc["levels"].size() == 4);
  std::vector<std::string> edge_keys;
  for (const auto& [k, v] : doc["edges"][0].items()) edge_keys.push_back(k);
  CHECK(edge_keys == std::vector<std::string>{"from", "to", "mult"});
  // level-1 -> level-2 weights straight off the figure
  bool saw_q = false;
  for (const auto& e : doc["edges"])
    if (e["from"] == "(1)" && e["to"] == "(1,1)") {
      CHECK(e["mult"] == "q");
      saw_q = true;
    }
  CHECK(saw_q);
}

TEST_CASE("emission is deterministic") {
  for (const auto& name : skeleton_names()) {
    auto sk1 = make_skeleton(name);
    auto sk2 = make_skeleton(name);
    const int h = name == "mr" ? 3 : 4;
    auto a = build_graphs(*sk1, h);
    auto b = build_graphs(*sk2, h);
    CHECK(to_dot(a.gamma) == to_dot(b.gamma));
    CHECK(to_json(a.gamma) == to_json(b.gamma));
    CHECK(to_dot(a.gamma_prime) == to_dot(b.gamma_prime));
    CHECK(to_json(a.gamma_prime) == to_json(b.gamma_prime));
  }
}

TEST_CASE("height-0 graph") {
  auto pair = build_graphs(*young_skeleton(), 0);
  std::string dot = to_dot(pair.gamma);
  CHECK(dot.find("\"[]\"") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);
  auto doc = nlohmann::ordered_json::parse(to_json(pair.gamma));
  CHECK(doc["edges"].empty());
  CHECK(doc["levels"][0]["vertices"] == nlohmann::ordered_json::array({"[]"}));
}

TEST_CASE("text emission lists every edge") {
  auto pair = build_graphs(*nilcoxeter_skeleton(true), 3);
  std::string text = to_text(pair.gamma);
  CHECK(text.find("2 -> 3  [1 + q + q^2]") != std::string::npos);
}
