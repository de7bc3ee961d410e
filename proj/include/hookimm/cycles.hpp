#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hookimm/graph.hpp"

namespace hookimm {

// One simple cycle, listed exactly once, vertices in traversal order starting
// at the anchor vertex (or the anchor edge's first endpoint).
struct CycleRecord {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    std::uint64_t vertex_mask() const;
};

using CycleVisitor = std::function<void(const std::vector<int>&)>;

// Masked enumerators; `allowed` restricts the usable vertex set. Undirected
// cycles have length >= 3, directed ones length >= 2 (antiparallel arc pairs
// count).
void visit_cycles_through_vertex(const Graph& g, int v, std::uint64_t allowed,
                                 const CycleVisitor& emit);
void visit_cycles_through_edge(const Graph& g, int u, int v, std::uint64_t allowed,
                               const CycleVisitor& emit);
void visit_dicycles_through_vertex(const Digraph& g, int v, std::uint64_t allowed,
                                   const CycleVisitor& emit);
void visit_dicycles_through_arc(const Digraph& g, int tail, int head, std::uint64_t allowed,
                                const CycleVisitor& emit);

std::vector<CycleRecord> cycles_through_vertex(const Graph& g, int v);
std::vector<CycleRecord> cycles_through_edge(const Graph& g, int u, int v);
std::vector<CycleRecord> dicycles_through_vertex(const Digraph& g, int v);
std::vector<CycleRecord> dicycles_through_arc(const Digraph& g, int tail, int head);

}  // namespace hookimm
