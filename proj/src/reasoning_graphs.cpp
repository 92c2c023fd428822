#include "spcot/reasoning_graphs.hpp"

#include <fstream>
#include <sstream>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

const std::vector<ReasoningGraphSpec>& builtin_graphs() {
    static const std::vector<ReasoningGraphSpec> graphs = {
        {"linear_2", 2, {{0, 1}}},
        {"linear_3", 3, {{0, 1}, {1, 2}}},
        {"join_3", 3, {{0, 2}, {1, 2}}},
        {"linear_4", 4, {{0, 1}, {1, 2}, {2, 3}}},
        // Chain of two joined by an extra root at the sink.
        {"join_4_tail", 4, {{0, 1}, {1, 3}, {2, 3}}},
        // Two roots joining mid-chain, then one more hop to the sink.
        {"join_4_head", 4, {{0, 2}, {1, 2}, {2, 3}}},
    };
    return graphs;
}

void check_graph_spec(const ReasoningGraphSpec& spec) {
    if (spec.type_id.empty()) throw ConfigError("graph spec needs a type id");
    if (spec.hop_count < 2 || spec.hop_count > 4) {
        throw ConfigError("graph \"" + spec.type_id + "\": hop count must be 2-4");
    }
    std::vector<int> out_degree(static_cast<size_t>(spec.hop_count), 0);
    for (auto [u, v] : spec.edges) {
        if (u < 0 || v < 0 || u >= spec.hop_count || v >= spec.hop_count || u >= v) {
            throw ConfigError("graph \"" + spec.type_id + "\": edge " + std::to_string(u + 1) +
                              "-" + std::to_string(v + 1) + " is not topological");
        }
        ++out_degree[static_cast<size_t>(u)];
    }
    for (int i = 0; i < spec.hop_count - 1; ++i) {
        if (out_degree[static_cast<size_t>(i)] != 1) {
            throw ConfigError("graph \"" + spec.type_id + "\": hop " + std::to_string(i + 1) +
                              " must have exactly one successor");
        }
    }
    if (out_degree[static_cast<size_t>(spec.hop_count - 1)] != 0) {
        throw ConfigError("graph \"" + spec.type_id + "\": last hop must be the sink");
    }
}

std::vector<ReasoningGraphSpec> load_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open graph registry: " + path);
    std::vector<ReasoningGraphSpec> graphs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream fields(s);
        ReasoningGraphSpec spec;
        if (!(fields >> spec.type_id >> spec.hop_count)) {
            throw ConfigError("graph registry line " + std::to_string(lineno) + ": expected "
                              "\"<type_id> <hop_count> <u>-<v> ...\"");
        }
        std::string edge;
        while (fields >> edge) {
            auto dash = edge.find('-');
            if (dash == std::string::npos) {
                throw ConfigError("graph registry line " + std::to_string(lineno) +
                                  ": bad edge \"" + edge + "\"");
            }
            int u = 0;
            int v = 0;
            try {
                u = std::stoi(edge.substr(0, dash));
                v = std::stoi(edge.substr(dash + 1));
            } catch (const std::exception&) {
                throw ConfigError("graph registry line " + std::to_string(lineno) +
                                  ": bad edge \"" + edge + "\"");
            }
            spec.edges.emplace_back(u - 1, v - 1);
        }
        check_graph_spec(spec);
        graphs.push_back(std::move(spec));
    }
    if (graphs.empty()) throw ConfigError("graph registry has no entries: " + path);
    return graphs;
}

}  // namespace spcot
