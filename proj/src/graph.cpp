#include "hookimm/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "hookimm/errors.hpp"

namespace hookimm {

namespace {

void check_vertex_count(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices)
        throw SizeLimitError("at most " + std::to_string(kMaxVertices) + " vertices supported");
}

std::string vname(int v) { return std::to_string(v + 1); }  // 1-based in messages

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    check_vertex_count(n);
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, 0);
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + vname(u));
        if (u > v) std::swap(u, v);
        if (g.adj_[u] >> v & 1)
            throw std::invalid_argument("duplicate edge " + vname(u) + " " + vname(v));
        g.adj_[u] |= std::uint64_t(1) << v;
        g.adj_[v] |= std::uint64_t(1) << u;
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && (adj_[u] >> v & 1);
}

std::uint64_t Graph::adjacency_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("no edge " + vname(u) + " " + vname(v));
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> es = edges_;
    es.erase(std::find(es.begin(), es.end(), std::make_pair(u, v)));
    return from_edges(n_, std::move(es));
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : edges_) {
        if (a == v || b == v) continue;
        es.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return from_edges(n_ - 1, std::move(es));
}

// graph6: byte n+63, then the upper triangle in column order (0,1),(0,2),
// (1,2),(0,3),... packed 6 bits per printable byte, high bit first.
Graph Graph::from_graph6(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    constexpr std::string_view kHeader = ">>graph6<<";
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    if (s.empty()) throw ParseError("empty graph6 string");
    if (s[0] == 126) throw SizeLimitError("graph6 with more than 62 vertices");
    int n = s[0] - 63;
    if (n < 0 || n > kMaxVertices) throw ParseError("bad graph6 size byte");
    const int nbits = n * (n - 1) / 2;
    const std::size_t need = 1 + (nbits + 5) / 6;
    if (s.size() != need) throw ParseError("graph6 string has wrong length");
    for (char c : s)
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if (byte >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
        }
    }
    return from_edges(n, std::move(edges));
}

std::string Graph::to_graph6() const {
    std::string out(1, static_cast<char>(n_ + 63));
    const int nbits = n_ * (n_ - 1) / 2;
    std::string data((nbits + 5) / 6, 0);
    int bit = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (adj_[i] >> j & 1) data[bit / 6] |= char(1 << (5 - bit % 6));
    for (char& c : data) c += 63;
    return out + data;
}

Digraph Digraph::from_arcs(int n, std::vector<std::pair<int, int>> arcs) {
    check_vertex_count(n);
    Digraph g;
    g.n_ = n;
    g.out_.assign(n, 0);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("loop at vertex " + vname(u));
        if (g.out_[u] >> v & 1)
            throw std::invalid_argument("duplicate arc " + vname(u) + " " + vname(v));
        g.out_[u] |= std::uint64_t(1) << v;
    }
    std::sort(arcs.begin(), arcs.end());
    g.arcs_ = std::move(arcs);
    return g;
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

int Digraph::out_degree(int v) const {
    check_vertex(v);
    return std::popcount(out_[v]);
}

bool Digraph::has_arc(int tail, int head) const {
    check_vertex(tail);
    check_vertex(head);
    return tail != head && (out_[tail] >> head & 1);
}

std::uint64_t Digraph::out_mask(int v) const {
    check_vertex(v);
    return out_[v];
}

std::vector<int> Digraph::out_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (std::uint64_t m = out_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

bool Digraph::has_digon() const {
    for (auto [u, v] : arcs_)
        if (u < v && (out_[v] >> u & 1)) return true;
    return false;
}

Digraph Digraph::without_arc(int tail, int head) const {
    if (!has_arc(tail, head))
        throw std::invalid_argument("no arc " + vname(tail) + " " + vname(head));
    std::vector<std::pair<int, int>> as = arcs_;
    as.erase(std::find(as.begin(), as.end(), std::make_pair(tail, head)));
    return from_arcs(n_, std::move(as));
}

std::variant<Graph, Digraph> parse_graph(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else if (c != '\r') {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    auto is_comment_or_blank = [](const std::string& line) {
        for (char c : line) {
            if (c == '#') return true;
            if (c != ' ' && c != '\t') return false;
        }
        return true;  // blank
    };

    std::size_t li = 0;
    auto next_line = [&]() -> const std::string* {
        while (li < lines.size() && is_comment_or_blank(lines[li])) ++li;
        return li < lines.size() ? &lines[li++] : nullptr;
    };

    const std::string* header = next_line();
    if (!header) throw ParseError("missing header line");
    std::istringstream hs(*header);
    long n = -1, m = -1;
    std::string mode, extra;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("malformed header: '" + *header + "'");
    if (hs >> mode) {
        if (mode != "directed") throw ParseError("malformed header: '" + *header + "'");
        if (hs >> extra) throw ParseError("malformed header: '" + *header + "'");
    }
    if (n > kMaxVertices)
        throw SizeLimitError("at most " + std::to_string(kMaxVertices) + " vertices supported");
    const bool directed = mode == "directed";

    std::vector<std::pair<int, int>> pairs;
    for (long i = 0; i < m; ++i) {
        const std::string* line = next_line();
        if (!line) throw ParseError("expected " + std::to_string(m) + " edge lines");
        std::istringstream es(*line);
        long u = 0, v = 0;
        std::string junk;
        if (!(es >> u >> v) || (es >> junk))
            throw ParseError("malformed edge line: '" + *line + "'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex out of range on line: '" + *line + "'");
        pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (next_line()) throw ParseError("unexpected trailing content");

    try {
        if (directed) return Digraph::from_arcs(static_cast<int>(n), std::move(pairs));
        return Graph::from_edges(static_cast<int>(n), std::move(pairs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
    for (auto [u, v] : g.edges())
        out += "\n" + std::to_string(u + 1) + " " + std::to_string(v + 1);
    return out;
}

std::string to_edge_list(const Digraph& g) {
    std::string out =
        std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + " directed";
    for (auto [u, v] : g.arcs())
        out += "\n" + std::to_string(u + 1) + " " + std::to_string(v + 1);
    return out;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (std::uint64_t m = g.adjacency_mask(v); m; m &= m - 1) {
                int u = std::countr_zero(m);
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace hookimm
