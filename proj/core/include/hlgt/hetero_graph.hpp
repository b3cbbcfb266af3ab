#pragma once

#include <array>
#include <string>
#include <vector>

#include "hlgt/problem.hpp"

namespace hlgt {

enum class NodeType : std::uint8_t {
    Entity = 0,
    Root = 1,
    Unit = 2,
    Rate = 3,
    Fraction = 4,
    Percentage = 5,
    OtherNumber = 6,
};
inline constexpr int kNumNodeTypes = 7;
const char* node_type_name(NodeType t);
bool is_number_type(NodeType t);

enum class EdgeType : std::uint8_t {
    Arg0 = 0,
    Arg1 = 1,
    ArgM = 2,
    Mod = 3,
    Bae = 4,  // source value >= target value
    Les = 5,  // source value <  target value
    Dt = 6,   // numbers of different subtypes
};
inline constexpr int kNumEdgeTypes = 7;
const char* edge_type_name(EdgeType t);

struct GraphNode {
    long token_index = 0;
    NodeType type = NodeType::Entity;
    long number_index = -1;  // index into Problem::numbers for number nodes

    bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
    long src = 0;  // node ids
    long dst = 0;
    EdgeType type = EdgeType::Mod;

    bool operator==(const GraphEdge&) const = default;
};

/// Typed directed graph over a problem's token positions. Nodes are held in
/// token order and edges sorted by (src, dst, type), so two builds of the same
/// problem compare equal structurally and serialize identically.
struct HeteroGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;

    bool operator==(const HeteroGraph&) const = default;

    long node_at_token(long token_index) const;  // -1 when the token has no node

    /// In-edges per node id, in edge order.
    std::vector<std::vector<long>> in_edge_lists() const;
};

struct GraphStats {
    std::array<long, kNumNodeTypes> node_counts{};
    std::array<long, kNumEdgeTypes> edge_counts{};

    long nodes_total() const;
    long edges_total() const;
};

/// Word lists used to recognize unit and rate words when the dataset does not
/// annotate them explicitly.
struct UnitLexicon {
    std::vector<std::string> unit_words;
    std::vector<std::string> rate_words;

    static const UnitLexicon& builtin();
    bool is_unit(const std::string& w) const;
    bool is_rate(const std::string& w) const;
};

std::vector<GraphNode> classify_nodes(const Problem& problem,
                                      const UnitLexicon& lexicon = UnitLexicon::builtin());

HeteroGraph build_hetero_graph(const Problem& problem,
                               const UnitLexicon& lexicon = UnitLexicon::builtin());

GraphStats graph_stats(const HeteroGraph& g);

std::string graph_to_dot(const HeteroGraph& g, const Problem& problem);
std::string graph_to_json(const HeteroGraph& g, const Problem& problem);

}  // namespace hlgt
