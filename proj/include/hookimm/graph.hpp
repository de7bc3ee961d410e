#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hookimm {

// Vertex-set bitmasks are 64-bit; graph6 tops out at 62 anyway.
inline constexpr int kMaxVertices = 62;

// Simple undirected graph on vertices 0..n-1. Edges stored as sorted unique
// pairs (u, v) with u < v. Immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);
    static Graph from_graph6(std::string_view s);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::uint64_t adjacency_mask(int v) const;
    std::vector<int> neighbors(int v) const;

    Graph without_edge(int u, int v) const;   // invalid_argument if absent
    Graph without_vertex(int v) const;        // labels above v shift down

    std::string to_graph6() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

// Loop-free digraph; antiparallel arc pairs are allowed. Arcs stored as sorted
// unique ordered pairs (tail, head).
class Digraph {
public:
    Digraph() = default;

    static Digraph from_arcs(int n, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int out_degree(int v) const;
    bool has_arc(int tail, int head) const;
    std::uint64_t out_mask(int v) const;
    std::vector<int> out_neighbors(int v) const;
    bool has_digon() const;

    Digraph without_arc(int tail, int head) const;  // invalid_argument if absent

    bool operator==(const Digraph&) const = default;

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::uint64_t> out_;
};

// Edge-list text: header "n m" or "n m directed", then m lines "u v" with
// 1-based vertices; lines whose first non-blank character is '#' are comments.
std::variant<Graph, Digraph> parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Digraph& g);

bool is_bipartite(const Graph& g);

}  // namespace hookimm
