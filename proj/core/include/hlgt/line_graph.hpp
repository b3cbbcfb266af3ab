#pragma once

#include <string>
#include <vector>

#include "hlgt/hetero_graph.hpp"

namespace hlgt {

/// A directed connection between two origin edges (i->j) and (j->k), k != i.
/// `shared_node` is j, the origin node both edges touch.
struct LineEdge {
    long src = 0;  // line-node ids (== origin edge ids)
    long dst = 0;
    long shared_node = 0;

    bool operator==(const LineEdge&) const = default;
};

/// Edge-centered view of a HeteroGraph: each stored directed origin edge is one
/// line node; line edges follow the non-backtracking rule.
struct LineGraph {
    const HeteroGraph* origin = nullptr;
    std::vector<LineEdge> line_edges;
    std::vector<std::vector<long>> in_lists;  // per line node: incoming line-edge ids

    long node_count() const { return origin ? static_cast<long>(origin->edges.size()) : 0; }
    long edge_count() const { return static_cast<long>(line_edges.size()); }
};

/// 1 iff e2 continues e1 without immediately reversing: e1 = (i->j), e2 = (i'->j'),
/// entry is 1 when j == i' and j' != i.
int non_backtracking_entry(long e1_src, long e1_dst, long e2_src, long e2_dst);

LineGraph to_line_graph(const HeteroGraph& g);

std::string line_graph_to_json(const LineGraph& lg, const Problem& problem);

}  // namespace hlgt
