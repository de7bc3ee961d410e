#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hookimm/graph.hpp"
#include "hookimm/matrix.hpp"
#include "hookimm/poly.hpp"
#include "hookimm/rational.hpp"

namespace hookimm {

// Memoized deletion-recursion engine for hook immanantal polynomials (phi) and
// hook immanants (dk) of beta*D + gamma*A over one fixed (di)graph. Subproblems
// are keyed by (removed vertex set, k). Removing vertices is a principal
// submatrix operation: diagonal entries keep the degrees of the original
// graph. One context is single-writer; build separate contexts to run
// evaluations concurrently over the same graph.
class EvalContext {
public:
    EvalContext(Graph g, MatrixParams p, bool memoize = true);
    EvalContext(Digraph g, MatrixParams p, bool memoize = true);

    int vertex_count() const { return n_; }
    bool directed() const { return std::holds_alternative<Digraph>(g_); }
    const MatrixParams& params() const { return params_; }
    const Graph& graph() const;
    const Digraph& digraph() const;

    // phi(removed, k) = the hook-k polynomial of the principal submatrix that
    // deletes `removed`; dk is its immanant counterpart, computed natively in
    // rationals. Both pick the smallest surviving vertex as pivot.
    Poly phi(std::uint64_t removed, int k);
    Rational dk(std::uint64_t removed, int k);

    // Same values computed by pivoting on a caller-chosen surviving vertex;
    // the frame itself is not memoized (subcalls are).
    Poly phi_with_pivot(std::uint64_t removed, int k, int pivot);
    Rational dk_with_pivot(std::uint64_t removed, int k, int pivot);

    // The bracket a deleted permutation cycle of `len` vertices contributes,
    // on the submatrix that additionally removes those vertices:
    //   phi: (-1)^len phi(removed_after, k-len) - phi(removed_after, k)
    //   dk:  dk(removed_after, k-len) - (-1)^len dk(removed_after, k)
    // When the cycle spans all survivors the matrix below is empty and the
    // bracket collapses to the lone whole-hook character term: (-1)^k for phi,
    // (-1)^(len-k) for dk.
    Poly phi_cycle_bracket(std::uint64_t removed_after, int len, int k, int survivors_before);
    Rational dk_cycle_bracket(std::uint64_t removed_after, int len, int k, int survivors_before);

    // Context for the same params over the graph with one edge/arc deleted
    // (degrees recomputed); cached per edge.
    EvalContext& child_without_edge(int u, int v);

    std::uint64_t full_mask() const { return full_; }

private:
    void init();
    Poly phi_at_pivot(std::uint64_t removed, int k, int pivot);
    Rational dk_at_pivot(std::uint64_t removed, int k, int pivot);

    std::variant<Graph, Digraph> g_;
    MatrixParams params_;
    bool memoize_;
    int n_ = 0;
    std::uint64_t full_ = 0;
    std::uint64_t stride_ = 0;
    std::vector<Rational> beta_deg_;
    std::vector<Rational> gamma_pow_;
    Rational gamma_sq_;
    std::unordered_map<std::uint64_t, Poly> phi_memo_;
    std::unordered_map<std::uint64_t, Rational> dk_memo_;
    std::map<std::pair<int, int>, std::unique_ptr<EvalContext>> children_;
};

// Wrappers over EvalContext taking removed sets of original vertex indices.
Poly phi_general(EvalContext& ctx, const std::vector<int>& removed, int k);
Rational dk_general(EvalContext& ctx, const std::vector<int>& removed, int k);

// The vertex-pivot identity evaluated at a chosen vertex; equals phi(0, k).
Poly phi_vertex(EvalContext& ctx, int v, int k);
Rational dk_vertex(EvalContext& ctx, int v, int k);

// The edge-deletion identity. For digraphs (u, v) is the arc tail -> head.
Poly phi_edge(EvalContext& ctx, int u, int v, int k);
Rational dk_edge(EvalContext& ctx, int u, int v, int k);

// Named parameter presets: laplacian, signless, adjacency, a_alpha.
MatrixParams resolve_preset(const std::string& preset, const std::optional<Rational>& alpha);
Poly preset_poly(const Graph& g, const std::string& preset, const std::optional<Rational>& alpha,
                 int k);
Poly preset_poly(const Digraph& g, const std::string& preset,
                 const std::optional<Rational>& alpha, int k);

}  // namespace hookimm
