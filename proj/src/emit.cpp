#include "dgg/emit.hpp"

#include <sstream>

namespace dgg {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const GradedGraph& g) {
  std::ostringstream out;
  out << "digraph \"" << g.name() << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int h = 0; h <= g.max_height(); ++h) {
    out << "  { rank=same;";
    for (const auto& v : g.level(h)) out << " \"" << v.to_string() << "\";";
    out << " }\n";
  }
  for (int h = 0; h < g.max_height(); ++h) {
    const auto& lvl = g.level(h);
    const auto& next = g.level(h + 1);
    for (int i = 0; i < static_cast<int>(lvl.size()); ++i) {
      for (const auto& e : g.out_edges(h, i)) {
        out << "  \"" << lvl[static_cast<std::size_t>(i)].to_string() << "\" -> \""
            << next[static_cast<std::size_t>(e.to)].to_string() << '"';
        if (!e.mult.is_one()) out << " [label=\"" << e.mult.to_string() << "\"]";
        out << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const GradedGraph& g) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": \"" << json_escape(g.name()) << "\",\n";
  out << "  \"quantized\": " << (g.quantized() ? "true" : "false") << ",\n";
  out << "  \"levels\": [\n";
  for (int h = 0; h <= g.max_height(); ++h) {
    out << "    {\"height\": " << h << ", \"vertices\": [";
    const auto& lvl = g.level(h);
    for (std::size_t i = 0; i < lvl.size(); ++i) {
      if (i) out << ", ";
      out << '"' << json_escape(lvl[i].to_string()) << '"';
    }
    out << "]}" << (h < g.max_height() ? "," : "") << "\n";
  }
  out << "  ],\n";
  out << "  \"edges\": [\n";
  const auto edges = g.edge_list();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& [h, i, j] = edges[k];
    const Label& from = g.level(h)[static_cast<std::size_t>(i)];
    const Label& to = g.level(h + 1)[static_cast<std::size_t>(j)];
    out << "    {\"from\": \"" << json_escape(from.to_string()) << "\", \"to\": \""
        << json_escape(to.to_string()) << "\", \"mult\": \""
        << json_escape(g.mult(from, to).to_string()) << "\"}"
        << (k + 1 < edges.size() ? "," : "") << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const GradedGraph& g) {
  std::ostringstream out;
  out << g.name() << (g.quantized() ? " (quantized)" : "") << "\n";
  for (int h = 0; h <= g.max_height(); ++h) {
    out << "height " << h << ":";
    for (const auto& v : g.level(h)) out << ' ' << v.to_string();
    out << "\n";
  }
  for (int h = 0; h < g.max_height(); ++h) {
    const auto& lvl = g.level(h);
    const auto& next = g.level(h + 1);
    for (int i = 0; i < static_cast<int>(lvl.size()); ++i)
      for (const auto& e : g.out_edges(h, i))
        out << lvl[static_cast<std::size_t>(i)].to_string() << " -> "
            << next[static_cast<std::size_t>(e.to)].to_string() << "  ["
            << e.mult.to_string() << "]\n";
  }
  return out.str();
}

}  // namespace dgg
