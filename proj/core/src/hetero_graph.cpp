#include "hlgt/hetero_graph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hlgt {

const char* node_type_name(NodeType t) {
    switch (t) {
        case NodeType::Entity: return "entity";
        case NodeType::Root: return "root";
        case NodeType::Unit: return "unit";
        case NodeType::Rate: return "rate";
        case NodeType::Fraction: return "fraction";
        case NodeType::Percentage: return "percentage";
        case NodeType::OtherNumber: return "number";
    }
    return "?";
}

bool is_number_type(NodeType t) {
    return t == NodeType::Fraction || t == NodeType::Percentage || t == NodeType::OtherNumber;
}

const char* edge_type_name(EdgeType t) {
    switch (t) {
        case EdgeType::Arg0: return "ARG-0";
        case EdgeType::Arg1: return "ARG-1";
        case EdgeType::ArgM: return "ARG-M";
        case EdgeType::Mod: return "MOD";
        case EdgeType::Bae: return "BAE";
        case EdgeType::Les: return "LES";
        case EdgeType::Dt: return "DT";
    }
    return "?";
}

long HeteroGraph::node_at_token(long token_index) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].token_index == token_index) return static_cast<long>(i);
    }
    return -1;
}

std::vector<std::vector<long>> HeteroGraph::in_edge_lists() const {
    std::vector<std::vector<long>> in(nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        in[static_cast<std::size_t>(edges[e].dst)].push_back(static_cast<long>(e));
    }
    return in;
}

long GraphStats::nodes_total() const {
    long t = 0;
    for (long c : node_counts) t += c;
    return t;
}

long GraphStats::edges_total() const {
    long t = 0;
    for (long c : edge_counts) t += c;
    return t;
}

const UnitLexicon& UnitLexicon::builtin() {
    static const UnitLexicon lex{
        {"tons", "kg", "grams", "bags", "liters", "meters", "crates", "yuan", "dollars", "hours",
         "days", "pages", "pieces", "apples", "books", "bottles", "trees", "cakes", "bricks",
         "toys", "pencils", "flowers", "shirts", "kilometers"},
        {"percent", "interest"}};
    return lex;
}

bool UnitLexicon::is_unit(const std::string& w) const {
    return std::find(unit_words.begin(), unit_words.end(), w) != unit_words.end();
}

bool UnitLexicon::is_rate(const std::string& w) const {
    return std::find(rate_words.begin(), rate_words.end(), w) != rate_words.end();
}

namespace {

NodeType subtype_node_type(NumberSubtype s) {
    switch (s) {
        case NumberSubtype::Fraction: return NodeType::Fraction;
        case NumberSubtype::Percentage: return NodeType::Percentage;
        case NumberSubtype::Other: return NodeType::OtherNumber;
    }
    return NodeType::OtherNumber;
}

struct Classification {
    std::vector<GraphNode> nodes;
    std::vector<std::pair<long, long>> unit_links;  // (unit token, number token)
};

// classification precedence for a token claimed by multiple rules:
// number > unit/rate > root > entity
Classification classify(const Problem& problem, const UnitLexicon& lexicon) {
    long n = static_cast<long>(problem.tokens.size());
    std::vector<int> kind(static_cast<std::size_t>(n), -1);  // -1 none, else NodeType
    std::vector<long> number_of(static_cast<std::size_t>(n), -1);

    auto claim = [&](long tok, NodeType type, int priority, std::vector<int>& best) {
        if (tok < 0 || tok >= n) return;
        if (best[static_cast<std::size_t>(tok)] < priority) {
            best[static_cast<std::size_t>(tok)] = priority;
            kind[static_cast<std::size_t>(tok)] = static_cast<int>(type);
        }
    };
    std::vector<int> best(static_cast<std::size_t>(n), -1);

    for (std::size_t i = 0; i < problem.numbers.size(); ++i) {
        const auto& num = problem.numbers[i];
        claim(num.token_index, subtype_node_type(num.subtype), 4, best);
        number_of[static_cast<std::size_t>(num.token_index)] = static_cast<long>(i);
    }

    Classification out;

    auto add_unit = [&](long unit_tok, long num_tok) {
        if (unit_tok < 0 || unit_tok >= n || best[static_cast<std::size_t>(unit_tok)] >= 3) return;
        NodeType t = lexicon.is_rate(problem.tokens[static_cast<std::size_t>(unit_tok)])
                         ? NodeType::Rate
                         : NodeType::Unit;
        claim(unit_tok, t, 3, best);
        out.unit_links.emplace_back(unit_tok, num_tok);
    };

    // explicit annotations override the adjacency heuristic
    std::vector<bool> annotated(problem.numbers.size(), false);
    for (const auto& u : problem.units) {
        annotated[static_cast<std::size_t>(u.num_index)] = true;
        add_unit(u.token_index, problem.numbers[static_cast<std::size_t>(u.num_index)].token_index);
    }
    for (std::size_t i = 0; i < problem.numbers.size(); ++i) {
        if (annotated[i]) continue;
        long tok = problem.numbers[i].token_index;
        long next = tok + 1;
        if (next < n) {
            const std::string& w = problem.tokens[static_cast<std::size_t>(next)];
            if (lexicon.is_unit(w) || lexicon.is_rate(w)) add_unit(next, tok);
        }
    }

    for (const auto& frame : problem.frames) {
        claim(frame.root_index, NodeType::Root, 2, best);
        for (const auto& arg : frame.args) {
            for (long t = arg.begin; t < arg.end; ++t) {
                if (problem.pos_tags[static_cast<std::size_t>(t)] == "NOUN") {
                    claim(t, NodeType::Entity, 1, best);
                }
            }
        }
    }

    for (long t = 0; t < n; ++t) {
        if (kind[static_cast<std::size_t>(t)] < 0) continue;
        out.nodes.push_back({t, static_cast<NodeType>(kind[static_cast<std::size_t>(t)]),
                             number_of[static_cast<std::size_t>(t)]});
    }
    return out;
}

EdgeType label_edge_type(SrlLabel l) {
    switch (l) {
        case SrlLabel::Arg0: return EdgeType::Arg0;
        case SrlLabel::Arg1: return EdgeType::Arg1;
        case SrlLabel::ArgM: return EdgeType::ArgM;
    }
    return EdgeType::ArgM;
}

}  // namespace

std::vector<GraphNode> classify_nodes(const Problem& problem, const UnitLexicon& lexicon) {
    return classify(problem, lexicon).nodes;
}

HeteroGraph build_hetero_graph(const Problem& problem, const UnitLexicon& lexicon) {
    Classification cls = classify(problem, lexicon);
    HeteroGraph g;
    g.nodes = cls.nodes;

    std::vector<long> node_at(problem.tokens.size(), -1);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        node_at[static_cast<std::size_t>(g.nodes[i].token_index)] = static_cast<long>(i);
    }
    auto type_of = [&](long node) { return g.nodes[static_cast<std::size_t>(node)].type; };

    std::vector<GraphEdge> edges;

    // (a) root <-> in-span nodes, typed by the SRL label; both orientations.
    // Entity nodes carry the role; spans without any entity fall back to their
    // number nodes so a purely numeric argument still connects to its predicate.
    for (const auto& frame : problem.frames) {
        long root = node_at[static_cast<std::size_t>(frame.root_index)];
        if (root < 0) continue;
        for (const auto& arg : frame.args) {
            EdgeType et = label_edge_type(arg.label);
            std::vector<long> targets;
            for (long t = arg.begin; t < arg.end; ++t) {
                long id = node_at[static_cast<std::size_t>(t)];
                if (id >= 0 && id != root && type_of(id) == NodeType::Entity) targets.push_back(id);
            }
            if (targets.empty()) {
                for (long t = arg.begin; t < arg.end; ++t) {
                    long id = node_at[static_cast<std::size_t>(t)];
                    if (id >= 0 && id != root && is_number_type(type_of(id))) targets.push_back(id);
                }
            }
            for (long id : targets) {
                edges.push_back({root, id, et});
                edges.push_back({id, root, et});
            }
        }
    }

    // (b) within a non-root phrase holding more than one node, non-contact
    // entities link to the contact node: the phrase's numerical node when
    // present, otherwise its last entity node.
    for (const auto& frame : problem.frames) {
        for (const auto& arg : frame.args) {
            std::vector<long> members;
            for (long t = arg.begin; t < arg.end; ++t) {
                long id = node_at[static_cast<std::size_t>(t)];
                if (id < 0) continue;
                NodeType ty = type_of(id);
                if (ty == NodeType::Entity || is_number_type(ty)) members.push_back(id);
            }
            if (members.size() < 2) continue;
            long contact = -1;
            for (long id : members) {
                if (is_number_type(type_of(id))) {
                    contact = id;
                    break;
                }
            }
            if (contact < 0) contact = members.back();
            for (long id : members) {
                if (id == contact || type_of(id) != NodeType::Entity) continue;
                edges.push_back({id, contact, EdgeType::Mod});
            }
        }
    }

    // (c) unit or rate word -> its number
    for (const auto& [unit_tok, num_tok] : cls.unit_links) {
        long u = node_at[static_cast<std::size_t>(unit_tok)];
        long q = node_at[static_cast<std::size_t>(num_tok)];
        if (u < 0 || q < 0) continue;
        if (type_of(u) != NodeType::Unit && type_of(u) != NodeType::Rate) continue;
        edges.push_back({u, q, EdgeType::Mod});
    }

    // (d) number pairs: same subtype compares (>= BAE, < LES), different
    // subtypes connect with DT in both directions
    std::vector<long> number_nodes;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (is_number_type(g.nodes[i].type)) number_nodes.push_back(static_cast<long>(i));
    }
    for (long a : number_nodes) {
        for (long b : number_nodes) {
            if (a == b) continue;
            const auto& na = g.nodes[static_cast<std::size_t>(a)];
            const auto& nb = g.nodes[static_cast<std::size_t>(b)];
            const auto& va = problem.numbers[static_cast<std::size_t>(na.number_index)];
            const auto& vb = problem.numbers[static_cast<std::size_t>(nb.number_index)];
            if (va.subtype == vb.subtype) {
                edges.push_back({a, b, va.value >= vb.value ? EdgeType::Bae : EdgeType::Les});
            } else {
                edges.push_back({a, b, EdgeType::Dt});
            }
        }
    }

    std::sort(edges.begin(), edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        if (x.src != y.src) return x.src < y.src;
        if (x.dst != y.dst) return x.dst < y.dst;
        return static_cast<int>(x.type) < static_cast<int>(y.type);
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    return g;
}

GraphStats graph_stats(const HeteroGraph& g) {
    GraphStats s;
    for (const auto& n : g.nodes) ++s.node_counts[static_cast<std::size_t>(n.type)];
    for (const auto& e : g.edges) ++s.edge_counts[static_cast<std::size_t>(e.type)];
    return s;
}

std::string graph_to_dot(const HeteroGraph& g, const Problem& problem) {
    std::ostringstream os;
    os << "digraph hetero {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        const std::string& word =
            n.number_index >= 0
                ? problem.numbers[static_cast<std::size_t>(n.number_index)].literal
                : problem.tokens[static_cast<std::size_t>(n.token_index)];
        os << "  n" << i << " [label=\"" << word << "\\n" << node_type_name(n.type) << "@"
           << n.token_index << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << edge_type_name(e.type)
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const HeteroGraph& g, const Problem& problem) {
    nlohmann::json j;
    j["problem_id"] = problem.id;
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        nlohmann::json jn;
        jn["id"] = i;
        jn["token_index"] = n.token_index;
        jn["token"] = n.number_index >= 0
                          ? problem.numbers[static_cast<std::size_t>(n.number_index)].literal
                          : problem.tokens[static_cast<std::size_t>(n.token_index)];
        jn["type"] = node_type_name(n.type);
        nodes.push_back(jn);
    }
    j["nodes"] = nodes;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"src", e.src}, {"dst", e.dst}, {"type", edge_type_name(e.type)}});
    }
    j["edges"] = edges;
    return j.dump();
}

}  // namespace hlgt
