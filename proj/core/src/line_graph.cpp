#include "hlgt/line_graph.hpp"

#include <nlohmann/json.hpp>

namespace hlgt {

int non_backtracking_entry(long e1_src, long e1_dst, long e2_src, long e2_dst) {
    return (e1_dst == e2_src && e2_dst != e1_src) ? 1 : 0;
}

LineGraph to_line_graph(const HeteroGraph& g) {
    LineGraph lg;
    lg.origin = &g;
    long n_edges = static_cast<long>(g.edges.size());
    lg.in_lists.resize(static_cast<std::size_t>(n_edges));

    // bucket origin edges by source node so successors of (i->j) are the
    // out-edges of j
    std::vector<std::vector<long>> out_by_src(g.nodes.size());
    for (long e = 0; e < n_edges; ++e) {
        out_by_src[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].src)].push_back(e);
    }

    for (long a = 0; a < n_edges; ++a) {
        const GraphEdge& ea = g.edges[static_cast<std::size_t>(a)];
        for (long b : out_by_src[static_cast<std::size_t>(ea.dst)]) {
            const GraphEdge& eb = g.edges[static_cast<std::size_t>(b)];
            if (eb.dst == ea.src) continue;  // backtracking pair
            lg.line_edges.push_back({a, b, ea.dst});
        }
    }
    for (std::size_t i = 0; i < lg.line_edges.size(); ++i) {
        lg.in_lists[static_cast<std::size_t>(lg.line_edges[i].dst)].push_back(static_cast<long>(i));
    }
    return lg;
}

std::string line_graph_to_json(const LineGraph& lg, const Problem& problem) {
    nlohmann::json j;
    j["problem_id"] = problem.id;
    nlohmann::json nodes = nlohmann::json::array();
    const HeteroGraph& g = *lg.origin;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& edge = g.edges[e];
        nodes.push_back({{"id", e},
                         {"src", edge.src},
                         {"dst", edge.dst},
                         {"type", edge_type_name(edge.type)}});
    }
    j["line_nodes"] = nodes;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& le : lg.line_edges) {
        edges.push_back({{"src", le.src}, {"dst", le.dst}, {"shared_node", le.shared_node}});
    }
    j["line_edges"] = edges;
    return j.dump();
}

}  // namespace hlgt
