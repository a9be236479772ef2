#pragma once

#include <string>

#include <json.hpp>

#include "kladder/decomp.hpp"
#include "kladder/graph.hpp"
#include "kladder/minors.hpp"
#include "kladder/nicepair.hpp"
#include "kladder/slide.hpp"

namespace kladder {

// JSON interchange. Readers throw ValidationError on malformed input;
// writers produce key-sorted objects so identical values serialize
// identically.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const TreeDecomposition& d);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const MinorModel& m);
MinorModel model_from_json(const nlohmann::json& j);

nlohmann::json good_pair_to_json(const GoodPair& gp);
GoodPair good_pair_from_json(const nlohmann::json& j);

nlohmann::json sliding_to_json(const SlidingSequence& s);
SlidingSequence sliding_from_json(const nlohmann::json& j);

nlohmann::json cert_to_json(const DismantleCert& c);
DismantleCert cert_from_json(const nlohmann::json& j);

// Plain text edge list: first line "n m", then m lines "u v"; vertices are
// 0..n-1.
Graph graph_from_edge_list(const std::string& text);
std::string graph_to_edge_list(const Graph& g);

// Write-only DOT rendering.
std::string graph_to_dot(const Graph& g);

// Reads a graph from a file path ("-" for stdin), auto-detecting JSON vs
// edge-list text.
Graph load_graph(const std::string& path);

}  // namespace kladder
