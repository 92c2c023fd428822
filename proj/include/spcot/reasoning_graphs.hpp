#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spcot {

// One reasoning-graph shape. Nodes are hop slots 0..hop_count-1 in
// topological order; edge (u, v) means hop u's answer is mentioned in hop
// v's question. Shapes must be connected in-trees: every non-sink node has
// exactly one outgoing edge and the sink is the last slot.
struct ReasoningGraphSpec {
    std::string type_id;
    int hop_count = 2;
    std::vector<std::pair<int, int>> edges;
};

// The six registered shapes: linear chains of 2-4 hops plus three joining
// shapes over 3-4 hops.
const std::vector<ReasoningGraphSpec>& builtin_graphs();

// Raises ConfigError when a shape is not a connected in-tree with the sink
// in the last slot.
void check_graph_spec(const ReasoningGraphSpec& spec);

// Plain-text registry override: one shape per line,
//   <type_id> <hop_count> <u>-<v> [<u>-<v> ...]
// with 1-based hop slots. Blank lines and '#' comments are skipped.
std::vector<ReasoningGraphSpec> load_graphs(const std::string& path);

}  // namespace spcot
