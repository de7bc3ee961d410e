#include "hookimm/cycles.hpp"

#include <bit>
#include <stdexcept>

namespace hookimm {

namespace {

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

}  // namespace

std::uint64_t CycleRecord::vertex_mask() const {
    std::uint64_t m = 0;
    for (int v : vertices) m |= bit(v);
    return m;
}

// Each undirected cycle through v has two traversal orientations; emitting
// only paths with path[1] < path.back() keeps one of them.
void visit_cycles_through_vertex(const Graph& g, int v, std::uint64_t allowed,
                                 const CycleVisitor& emit) {
    if (!(allowed >> v & 1)) return;
    (void)g.adjacency_mask(v);  // range check
    std::vector<int> path{v};
    std::uint64_t used = bit(v);
    std::function<void()> dfs = [&]() {
        const int tail = path.back();
        for (std::uint64_t m = g.adjacency_mask(tail) & allowed; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (u == v) {
                if (path.size() >= 3 && path[1] < tail) emit(path);
            } else if (!(used >> u & 1)) {
                path.push_back(u);
                used |= bit(u);
                dfs();
                path.pop_back();
                used &= ~bit(u);
            }
        }
    };
    dfs();
}

// Cycles through the edge uv = simple u->v paths of >= 2 edges avoiding uv,
// closed by uv itself; the fixed endpoints give each cycle exactly once.
void visit_cycles_through_edge(const Graph& g, int u, int v, std::uint64_t allowed,
                               const CycleVisitor& emit) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("no such edge");
    if (!(allowed >> u & 1) || !(allowed >> v & 1)) return;
    std::vector<int> path{u};
    std::uint64_t used = bit(u) | bit(v);
    std::function<void()> dfs = [&]() {
        const int tail = path.back();
        for (std::uint64_t m = g.adjacency_mask(tail) & allowed; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (w == v) {
                if (path.size() >= 2) {
                    path.push_back(v);
                    emit(path);
                    path.pop_back();
                }
            } else if (!(used >> w & 1)) {
                path.push_back(w);
                used |= bit(w);
                dfs();
                path.pop_back();
                used &= ~bit(w);
            }
        }
    };
    dfs();
}

void visit_dicycles_through_vertex(const Digraph& g, int v, std::uint64_t allowed,
                                   const CycleVisitor& emit) {
    if (!(allowed >> v & 1)) return;
    (void)g.out_mask(v);  // range check
    std::vector<int> path{v};
    std::uint64_t used = bit(v);
    std::function<void()> dfs = [&]() {
        const int tail = path.back();
        for (std::uint64_t m = g.out_mask(tail) & allowed; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (u == v) {
                if (path.size() >= 2) emit(path);
            } else if (!(used >> u & 1)) {
                path.push_back(u);
                used |= bit(u);
                dfs();
                path.pop_back();
                used &= ~bit(u);
            }
        }
    };
    dfs();
}

void visit_dicycles_through_arc(const Digraph& g, int tail, int head, std::uint64_t allowed,
                                const CycleVisitor& emit) {
    if (!g.has_arc(tail, head)) throw std::invalid_argument("no such arc");
    if (!(allowed >> tail & 1) || !(allowed >> head & 1)) return;
    std::vector<int> path{tail, head};
    std::uint64_t used = bit(tail) | bit(head);
    std::function<void()> dfs = [&]() {
        const int w = path.back();
        for (std::uint64_t m = g.out_mask(w) & allowed; m; m &= m - 1) {
            const int x = std::countr_zero(m);
            if (x == tail) {
                emit(path);
            } else if (!(used >> x & 1)) {
                path.push_back(x);
                used |= bit(x);
                dfs();
                path.pop_back();
                used &= ~bit(x);
            }
        }
    };
    dfs();
}

namespace {
template <typename Visit, typename... Args>
std::vector<CycleRecord> collect(Visit visit, const Args&... args) {
    std::vector<CycleRecord> out;
    visit(args..., [&](const std::vector<int>& c) { out.push_back(CycleRecord{c}); });
    return out;
}
}  // namespace

std::vector<CycleRecord> cycles_through_vertex(const Graph& g, int v) {
    return collect(visit_cycles_through_vertex, g, v, full_mask(g.vertex_count()));
}

std::vector<CycleRecord> cycles_through_edge(const Graph& g, int u, int v) {
    return collect(visit_cycles_through_edge, g, u, v, full_mask(g.vertex_count()));
}

std::vector<CycleRecord> dicycles_through_vertex(const Digraph& g, int v) {
    return collect(visit_dicycles_through_vertex, g, v, full_mask(g.vertex_count()));
}

std::vector<CycleRecord> dicycles_through_arc(const Digraph& g, int tail, int head) {
    return collect(visit_dicycles_through_arc, g, tail, head, full_mask(g.vertex_count()));
}

}  // namespace hookimm
