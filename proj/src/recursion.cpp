#include "hookimm/recursion.hpp"

#include <bit>
#include <stdexcept>

#include "hookimm/cycles.hpp"
#include "hookimm/errors.hpp"

namespace hookimm {

namespace {

std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

constexpr int kMaxRecursionVertices = 32;  // 2^n memo keys

}  // namespace

EvalContext::EvalContext(Graph g, MatrixParams p, bool memoize)
    : g_(std::move(g)), params_(std::move(p)), memoize_(memoize) {
    init();
}

EvalContext::EvalContext(Digraph g, MatrixParams p, bool memoize)
    : g_(std::move(g)), params_(std::move(p)), memoize_(memoize) {
    init();
}

void EvalContext::init() {
    n_ = directed() ? std::get<Digraph>(g_).vertex_count() : std::get<Graph>(g_).vertex_count();
    if (n_ > kMaxRecursionVertices)
        throw SizeLimitError("recursion engine limited to " +
                             std::to_string(kMaxRecursionVertices) + " vertices");
    full_ = n_ == 0 ? 0 : (std::uint64_t(1) << n_) - 1;
    stride_ = static_cast<std::uint64_t>(n_) + 2;
    beta_deg_.resize(n_);
    for (int v = 0; v < n_; ++v) {
        const int d = directed() ? std::get<Digraph>(g_).out_degree(v)
                                 : std::get<Graph>(g_).degree(v);
        beta_deg_[v] = params_.beta * Rational(d);
    }
    gamma_pow_.resize(n_ + 1);
    gamma_pow_[0] = Rational(1);
    for (int i = 1; i <= n_; ++i) gamma_pow_[i] = gamma_pow_[i - 1] * params_.gamma;
    gamma_sq_ = params_.gamma * params_.gamma;
}

const Graph& EvalContext::graph() const {
    if (directed()) throw std::logic_error("context holds a digraph");
    return std::get<Graph>(g_);
}

const Digraph& EvalContext::digraph() const {
    if (!directed()) throw std::logic_error("context holds an undirected graph");
    return std::get<Digraph>(g_);
}

Poly EvalContext::phi(std::uint64_t removed, int k) {
    removed &= full_;
    const int m = n_ - std::popcount(removed);
    if (m == 0) return k == 0 ? Poly::constant(Rational(1)) : Poly();
    if (k < 1 || k > m) return Poly();
    const std::uint64_t key = removed * stride_ + static_cast<std::uint64_t>(k);
    if (memoize_) {
        auto it = phi_memo_.find(key);
        if (it != phi_memo_.end()) return it->second;
    }
    Poly r = phi_at_pivot(removed, k, std::countr_zero(full_ & ~removed));
    if (memoize_) phi_memo_.emplace(key, r);
    return r;
}

Poly EvalContext::phi_cycle_bracket(std::uint64_t removed_after, int len, int k,
                                    int survivors_before) {
    if (len == survivors_before)
        return Poly::constant(k % 2 == 0 ? Rational(1) : Rational(-1));
    Poly a = phi(removed_after, k - len);
    if (len % 2 != 0) a = -a;
    return a - phi(removed_after, k);
}

Rational EvalContext::dk_cycle_bracket(std::uint64_t removed_after, int len, int k,
                                       int survivors_before) {
    if (len == survivors_before) return (len - k) % 2 == 0 ? Rational(1) : Rational(-1);
    Rational a = dk(removed_after, k - len);
    Rational b = dk(removed_after, k);
    return len % 2 == 0 ? a - b : a + b;
}

Poly EvalContext::phi_at_pivot(std::uint64_t removed, int k, int v) {
    const std::uint64_t alive = full_ & ~removed;
    const int m = std::popcount(alive);
    const std::uint64_t below = removed | bit(v);

    Poly acc = Poly::linear(-beta_deg_[v], Rational(1)) * (phi(below, k - 1) + phi(below, k));
    if (!directed()) {
        const Graph& g = std::get<Graph>(g_);
        for (std::uint64_t nb = g.adjacency_mask(v) & alive; nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            acc += gamma_sq_ * phi_cycle_bracket(below | bit(u), 2, k, m);
        }
        visit_cycles_through_vertex(g, v, alive, [&](const std::vector<int>& cyc) {
            std::uint64_t cm = removed;
            for (int w : cyc) cm |= bit(w);
            const int len = static_cast<int>(cyc.size());
            Poly b = phi_cycle_bracket(cm, len, k, m);
            b *= gamma_pow_[len];
            b *= Rational(2);  // two traversal orientations per undirected cycle
            acc += b;
        });
    } else {
        const Digraph& g = std::get<Digraph>(g_);
        visit_dicycles_through_vertex(g, v, alive, [&](const std::vector<int>& cyc) {
            std::uint64_t cm = removed;
            for (int w : cyc) cm |= bit(w);
            const int len = static_cast<int>(cyc.size());
            Poly b = phi_cycle_bracket(cm, len, k, m);
            b *= gamma_pow_[len];
            acc += b;
        });
    }
    return acc;
}

Rational EvalContext::dk(std::uint64_t removed, int k) {
    removed &= full_;
    const int m = n_ - std::popcount(removed);
    if (m == 0) return k == 0 ? Rational(1) : Rational(0);
    if (k < 1 || k > m) return Rational(0);
    const std::uint64_t key = removed * stride_ + static_cast<std::uint64_t>(k);
    if (memoize_) {
        auto it = dk_memo_.find(key);
        if (it != dk_memo_.end()) return it->second;
    }
    Rational r = dk_at_pivot(removed, k, std::countr_zero(full_ & ~removed));
    if (memoize_) dk_memo_.emplace(key, r);
    return r;
}

Rational EvalContext::dk_at_pivot(std::uint64_t removed, int k, int v) {
    const std::uint64_t alive = full_ & ~removed;
    const int m = std::popcount(alive);
    const std::uint64_t below = removed | bit(v);

    Rational acc = beta_deg_[v] * (dk(below, k - 1) + dk(below, k));
    if (!directed()) {
        const Graph& g = std::get<Graph>(g_);
        for (std::uint64_t nb = g.adjacency_mask(v) & alive; nb; nb &= nb - 1) {
            const int u = std::countr_zero(nb);
            acc += gamma_sq_ * dk_cycle_bracket(below | bit(u), 2, k, m);
        }
        visit_cycles_through_vertex(g, v, alive, [&](const std::vector<int>& cyc) {
            std::uint64_t cm = removed;
            for (int w : cyc) cm |= bit(w);
            const int len = static_cast<int>(cyc.size());
            acc += Rational(2) * gamma_pow_[len] * dk_cycle_bracket(cm, len, k, m);
        });
    } else {
        const Digraph& g = std::get<Digraph>(g_);
        visit_dicycles_through_vertex(g, v, alive, [&](const std::vector<int>& cyc) {
            std::uint64_t cm = removed;
            for (int w : cyc) cm |= bit(w);
            const int len = static_cast<int>(cyc.size());
            acc += gamma_pow_[len] * dk_cycle_bracket(cm, len, k, m);
        });
    }
    return acc;
}

Poly EvalContext::phi_with_pivot(std::uint64_t removed, int k, int pivot) {
    removed &= full_;
    const int m = n_ - std::popcount(removed);
    if (pivot < 0 || pivot >= n_ || (removed >> pivot & 1))
        throw std::invalid_argument("pivot is not a surviving vertex");
    if (k < 1 || k > m) return Poly();
    return phi_at_pivot(removed, k, pivot);
}

Rational EvalContext::dk_with_pivot(std::uint64_t removed, int k, int pivot) {
    removed &= full_;
    const int m = n_ - std::popcount(removed);
    if (pivot < 0 || pivot >= n_ || (removed >> pivot & 1))
        throw std::invalid_argument("pivot is not a surviving vertex");
    if (k < 1 || k > m) return Rational(0);
    return dk_at_pivot(removed, k, pivot);
}

EvalContext& EvalContext::child_without_edge(int u, int v) {
    std::pair<int, int> key{u, v};
    if (!directed() && u > v) key = {v, u};
    auto it = children_.find(key);
    if (it == children_.end()) {
        std::unique_ptr<EvalContext> child;
        if (directed())
            child = std::make_unique<EvalContext>(digraph().without_arc(u, v), params_, memoize_);
        else
            child = std::make_unique<EvalContext>(graph().without_edge(u, v), params_, memoize_);
        it = children_.emplace(key, std::move(child)).first;
    }
    return *it->second;
}

namespace {
std::uint64_t mask_of(const std::vector<int>& vs, int n) {
    std::uint64_t m = 0;
    for (int v : vs) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        m |= bit(v);
    }
    return m;
}
}  // namespace

Poly phi_general(EvalContext& ctx, const std::vector<int>& removed, int k) {
    return ctx.phi(mask_of(removed, ctx.vertex_count()), k);
}

Rational dk_general(EvalContext& ctx, const std::vector<int>& removed, int k) {
    return ctx.dk(mask_of(removed, ctx.vertex_count()), k);
}

Poly phi_vertex(EvalContext& ctx, int v, int k) {
    if (v < 0 || v >= ctx.vertex_count()) throw std::invalid_argument("invalid vertex");
    if (k < 1 || k > ctx.vertex_count()) return Poly();
    return ctx.phi_with_pivot(0, k, v);
}

Rational dk_vertex(EvalContext& ctx, int v, int k) {
    if (v < 0 || v >= ctx.vertex_count()) throw std::invalid_argument("invalid vertex");
    if (k < 1 || k > ctx.vertex_count()) return Rational(0);
    return ctx.dk_with_pivot(0, k, v);
}

Poly phi_edge(EvalContext& ctx, int u, int v, int k) {
    const int n = ctx.vertex_count();
    const Rational& beta = ctx.params().beta;
    const Rational& gamma = ctx.params().gamma;

    if (ctx.directed()) {
        const Digraph& g = ctx.digraph();
        if (!g.has_arc(u, v)) throw std::invalid_argument("invalid arc");
        if (k < 1 || k > n) return Poly();
        EvalContext& sub = ctx.child_without_edge(u, v);
        // Only the tail's out-degree changes when an arc is deleted.
        Poly r = sub.phi(0, k);
        r -= beta * (sub.phi(bit(u), k) + sub.phi(bit(u), k - 1));
        visit_dicycles_through_arc(g, u, v, ctx.full_mask(), [&](const std::vector<int>& cyc) {
            const int len = static_cast<int>(cyc.size());
            std::uint64_t cm = 0;
            for (int w : cyc) cm |= bit(w);
            r += pow(gamma, len) * ctx.phi_cycle_bracket(cm, len, k, n);
        });
        return r;
    }

    const Graph& g = ctx.graph();
    if (!g.has_edge(u, v)) throw std::invalid_argument("invalid edge");
    if (k < 1 || k > n) return Poly();
    EvalContext& sub = ctx.child_without_edge(u, v);
    Poly r = sub.phi(0, k);
    r -= beta * (sub.phi(bit(v), k) + sub.phi(bit(v), k - 1));
    r -= beta * (sub.phi(bit(u), k) + sub.phi(bit(u), k - 1));

    const Rational b2 = beta * beta;
    const Rational g2 = gamma * gamma;
    if (n == 2) {
        // The two-endpoint submatrix is empty; of the quadratic bracket only
        // the whole-hook character terms survive.
        if (k == 1) r += Poly::constant(b2 - g2);
        if (k == 2) r += Poly::constant(b2 + g2);
    } else {
        const std::uint64_t uv = bit(u) | bit(v);
        r += (b2 - g2) * ctx.phi(uv, k);
        r += (Rational(2) * b2) * ctx.phi(uv, k - 1);
        r += (b2 + g2) * ctx.phi(uv, k - 2);
    }
    visit_cycles_through_edge(g, u, v, ctx.full_mask(), [&](const std::vector<int>& cyc) {
        const int len = static_cast<int>(cyc.size());
        std::uint64_t cm = 0;
        for (int w : cyc) cm |= bit(w);
        r += Rational(2) * pow(gamma, len) * ctx.phi_cycle_bracket(cm, len, k, n);
    });
    return r;
}

Rational dk_edge(EvalContext& ctx, int u, int v, int k) {
    const int n = ctx.vertex_count();
    const Rational& beta = ctx.params().beta;
    const Rational& gamma = ctx.params().gamma;

    if (ctx.directed()) {
        const Digraph& g = ctx.digraph();
        if (!g.has_arc(u, v)) throw std::invalid_argument("invalid arc");
        if (k < 1 || k > n) return Rational(0);
        EvalContext& sub = ctx.child_without_edge(u, v);
        Rational r = sub.dk(0, k);
        r += beta * (sub.dk(bit(u), k) + sub.dk(bit(u), k - 1));
        visit_dicycles_through_arc(g, u, v, ctx.full_mask(), [&](const std::vector<int>& cyc) {
            const int len = static_cast<int>(cyc.size());
            std::uint64_t cm = 0;
            for (int w : cyc) cm |= bit(w);
            r += pow(gamma, len) * ctx.dk_cycle_bracket(cm, len, k, n);
        });
        return r;
    }

    const Graph& g = ctx.graph();
    if (!g.has_edge(u, v)) throw std::invalid_argument("invalid edge");
    if (k < 1 || k > n) return Rational(0);
    EvalContext& sub = ctx.child_without_edge(u, v);
    Rational r = sub.dk(0, k);
    r += beta * (sub.dk(bit(v), k) + sub.dk(bit(v), k - 1));
    r += beta * (sub.dk(bit(u), k) + sub.dk(bit(u), k - 1));

    const Rational b2 = beta * beta;
    const Rational g2 = gamma * gamma;
    if (n == 2) {
        if (k == 1) r += b2 - g2;
        if (k == 2) r += b2 + g2;
    } else {
        const std::uint64_t uv = bit(u) | bit(v);
        r += (b2 - g2) * ctx.dk(uv, k);
        r += (Rational(2) * b2) * ctx.dk(uv, k - 1);
        r += (b2 + g2) * ctx.dk(uv, k - 2);
    }
    visit_cycles_through_edge(g, u, v, ctx.full_mask(), [&](const std::vector<int>& cyc) {
        const int len = static_cast<int>(cyc.size());
        std::uint64_t cm = 0;
        for (int w : cyc) cm |= bit(w);
        r += Rational(2) * pow(gamma, len) * ctx.dk_cycle_bracket(cm, len, k, n);
    });
    return r;
}

MatrixParams resolve_preset(const std::string& preset, const std::optional<Rational>& alpha) {
    if (preset == "a_alpha") {
        if (!alpha) throw std::invalid_argument("preset a_alpha needs an alpha value");
        return MatrixParams::alpha_matrix(*alpha);
    }
    if (alpha) throw std::invalid_argument("alpha only applies to the a_alpha preset");
    if (preset == "laplacian") return MatrixParams::laplacian();
    if (preset == "signless") return MatrixParams::signless_laplacian();
    if (preset == "adjacency") return MatrixParams::adjacency();
    throw std::invalid_argument("unknown preset '" + preset + "'");
}

namespace {
// With beta = 0 a principal submatrix coincides with the matrix of the
// vertex-deleted graph; spot-check single deletions.
void check_adjacency_deletion(const Graph& g, const MatrixParams& p) {
    const RationalMatrix full = build_matrix(g, p);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!principal_submatrix(full, {v}).same_entries(build_matrix(g.without_vertex(v), p)))
            throw std::logic_error("adjacency submatrix identity violated");
    }
}
}  // namespace

Poly preset_poly(const Graph& g, const std::string& preset, const std::optional<Rational>& alpha,
                 int k) {
    MatrixParams p = resolve_preset(preset, alpha);
    if (preset == "adjacency") check_adjacency_deletion(g, p);
    EvalContext ctx(g, p);
    return ctx.phi(0, k);
}

Poly preset_poly(const Digraph& g, const std::string& preset,
                 const std::optional<Rational>& alpha, int k) {
    EvalContext ctx(g, resolve_preset(preset, alpha));
    return ctx.phi(0, k);
}

}  // namespace hookimm
