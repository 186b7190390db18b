/// DOT and JSON emission for graded graphs. Both formats are deterministic
/// byte for byte: vertices appear in enumeration order grouped by height,
/// edges in (from-height, from-index, to-index) order, multiplicities as
/// canonical Z[q] strings.
#pragma once

#include <string>

#include "dgg/graph.hpp"

namespace dgg {

/// One digraph per graded graph; same-rank groups per height; edge labels
/// are canonical multiplicity strings, omitted for multiplicity 1.
std::string to_dot(const GradedGraph& g);

/// {"name", "quantized", "levels": [{"height", "vertices": [...]}, ...],
///  "edges": [{"from", "to", "mult"}, ...]} with exactly that key order.
std::string to_json(const GradedGraph& g);

/// A text listing (levels, then edges) for terminal use.
std::string to_text(const GradedGraph& g);

}  // namespace dgg
