#include <doctest.h>

#include "hookimm/cycles.hpp"
#include "hookimm/oracle.hpp"
#include "hookimm/recursion.hpp"
#include "hookimm/verify.hpp"

using namespace hookimm;

namespace {

Graph k(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph random_graph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("pinned polynomials") {
    // Single vertex: Phi_1 = x for any params.
    EvalContext single(Graph::from_edges(1, {}), {Rational(7, 3), Rational(-2)});
    CHECK(single.phi(0, 1) == Poly::variable());

    // L(K2): eigenvalues 0 and 2.
    EvalContext lk2(k(2), MatrixParams::laplacian());
    CHECK(lk2.phi(0, 1) == Poly::from_coeffs({Rational(0), Rational(-2), Rational(1)}));
    CHECK(phi_vertex(lk2, 0, 1) == lk2.phi(0, 1));
    CHECK(phi_vertex(lk2, 1, 1) == lk2.phi(0, 1));
    CHECK(phi_edge(lk2, 0, 1, 1) == lk2.phi(0, 1));

    // A(K3): characteristic polynomial x^3 - 3x - 2.
    EvalContext ak3(k(3), MatrixParams::adjacency());
    CHECK(ak3.phi(0, 1) ==
          Poly::from_coeffs({Rational(-2), Rational(-3), Rational(0), Rational(1)}));

    // Constant term of Phi_3(L(K3)) is (-1)^3 per(L(K3)) = -12.
    EvalContext lk3(k(3), MatrixParams::laplacian());
    CHECK(lk3.phi(0, 3).coeff(0) == Rational(-12));

    // a_alpha(1/2) on K2: rank-one matrix, Phi_1 = x^2 - x.
    CHECK(preset_poly(k(2), "a_alpha", Rational(1, 2), 1) ==
          Poly::from_coeffs({Rational(0), Rational(-1), Rational(1)}));

    // Out-of-range k.
    CHECK(lk3.phi(0, 0).is_zero());
    CHECK(lk3.phi(0, 4).is_zero());
    CHECK(phi_edge(lk3, 0, 1, 0).is_zero());
    CHECK(phi_vertex(lk3, 0, 0).is_zero());
}

TEST_CASE("phi on removed sets equals the oracle on principal submatrices") {
    Rng rng(404);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + rng.below(4);
        const Graph g = random_graph(rng, n);
        for (const auto& p : {MatrixParams::laplacian(), MatrixParams{Rational(2), Rational(5)}}) {
            EvalContext ctx(g, p);
            const RationalMatrix full = build_matrix(g, p);
            for (std::uint64_t removed = 0; removed < (std::uint64_t(1) << n); ++removed) {
                std::vector<int> removed_list;
                for (int v = 0; v < n; ++v)
                    if (removed >> v & 1) removed_list.push_back(v);
                const RationalMatrix sub = principal_submatrix(full, removed_list);
                const int m = sub.order();
                for (int kk = 0; kk <= m + 1; ++kk) {
                    CHECK(phi_general(ctx, removed_list, kk) == hook_poly_bruteforce(sub, kk));
                    const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
                    CHECK(dk_general(ctx, removed_list, kk) ==
                          sign * hook_poly_bruteforce(sub, kk).eval(Rational(0)));
                }
            }
        }
    }
}

TEST_CASE("undirected oracle equivalence, exhaustive n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (const auto& p : standard_params()) {
                const auto oracle = hook_polys_bruteforce_all(build_matrix(g, p));
                EvalContext ctx(g, p);
                for (int kk = 1; kk <= n; ++kk) {
                    REQUIRE(ctx.phi(0, kk) == oracle[kk]);
                    for (int v = 0; v < n; ++v) REQUIRE(phi_vertex(ctx, v, kk) == oracle[kk]);
                    for (auto [u, v] : g.edges())
                        REQUIRE(phi_edge(ctx, u, v, kk) == oracle[kk]);
                }
            }
        });
    }
}

TEST_CASE("digraph oracle equivalence, exhaustive n <= 3 plus digon samples") {
    for (int n = 1; n <= 3; ++n) {
        for_each_labeled_digraph(n, [&](const Digraph& g) {
            for (const auto& p : standard_params()) {
                const auto oracle = hook_polys_bruteforce_all(build_matrix(g, p));
                EvalContext ctx(g, p);
                for (int kk = 1; kk <= n; ++kk) {
                    REQUIRE(ctx.phi(0, kk) == oracle[kk]);
                    for (int v = 0; v < n; ++v) REQUIRE(phi_vertex(ctx, v, kk) == oracle[kk]);
                    for (auto [u, v] : g.arcs()) REQUIRE(phi_edge(ctx, u, v, kk) == oracle[kk]);
                }
            }
        });
    }

    // Digon-heavy 4-vertex digraph.
    const Digraph g = Digraph::from_arcs(
        4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {0, 2}});
    for (const auto& p : standard_params()) {
        const auto oracle = hook_polys_bruteforce_all(build_matrix(g, p));
        EvalContext ctx(g, p);
        for (int kk = 1; kk <= 4; ++kk) {
            REQUIRE(ctx.phi(0, kk) == oracle[kk]);
            for (auto [u, v] : g.arcs()) REQUIRE(phi_edge(ctx, u, v, kk) == oracle[kk]);
        }
    }
}

TEST_CASE("immanant recursions match the immanant oracle") {
    Rng rng(505);
    for (int t = 0; t < 15; ++t) {
        const int n = 2 + rng.below(4);
        const Graph g = random_graph(rng, n);
        for (const auto& p : standard_params()) {
            const auto imms = immanants_bruteforce_all(build_matrix(g, p));
            EvalContext ctx(g, p);
            for (int kk = 1; kk <= n; ++kk) {
                CHECK(ctx.dk(0, kk) == imms[kk]);
                for (int v = 0; v < n; ++v) CHECK(dk_vertex(ctx, v, kk) == imms[kk]);
                for (auto [u, v] : g.edges()) CHECK(dk_edge(ctx, u, v, kk) == imms[kk]);
            }
        }
    }
}

TEST_CASE("pivot independence") {
    Rng rng(606);
    for (int t = 0; t < 10; ++t) {
        const int n = 2 + rng.below(5);
        const Graph g = random_graph(rng, n);
        EvalContext ctx(g, {Rational(1, 3), Rational(2, 3)});
        for (int kk = 1; kk <= n; ++kk) {
            const Poly base = phi_vertex(ctx, 0, kk);
            for (int v = 1; v < n; ++v) CHECK(phi_vertex(ctx, v, kk) == base);
        }
    }
}

TEST_CASE("memoization soundness") {
    Rng rng(707);
    for (int t = 0; t < 6; ++t) {
        const int n = 3 + rng.below(3);
        const Graph g = random_graph(rng, n);
        const MatrixParams p{Rational(2), Rational(5)};
        EvalContext memo(g, p, true);
        EvalContext plain(g, p, false);
        for (int kk = 1; kk <= n; ++kk) {
            CHECK(memo.phi(0, kk) == plain.phi(0, kk));
            CHECK(memo.dk(0, kk) == plain.dk(0, kk));
        }
    }
}

TEST_CASE("tree corollaries drop the cycle sums") {
    const Graph p3 = path(3);
    EvalContext ctx(p3, MatrixParams::laplacian());
    const auto oracle = hook_polys_bruteforce_all(build_matrix(p3, MatrixParams::laplacian()));
    for (int v = 0; v < 3; ++v) CHECK(cycles_through_vertex(p3, v).empty());
    for (int kk = 1; kk <= 3; ++kk) CHECK(phi_vertex(ctx, 1, kk) == oracle[kk]);
}

TEST_CASE("presets") {
    // Bipartite: laplacian and signless polynomials coincide on P3.
    for (int kk = 1; kk <= 3; ++kk)
        CHECK(preset_poly(path(3), "laplacian", std::nullopt, kk) ==
              preset_poly(path(3), "signless", std::nullopt, kk));

    CHECK(preset_poly(k(2), "adjacency", std::nullopt, 1) ==
          Poly::from_coeffs({Rational(-1), Rational(0), Rational(1)}));

    CHECK_THROWS_AS(preset_poly(k(2), "a_alpha", Rational(3, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(preset_poly(k(2), "a_alpha", std::nullopt, 1), std::invalid_argument);
    CHECK_THROWS_AS(preset_poly(k(2), "laplacian", Rational(1, 2), 1), std::invalid_argument);
    CHECK_THROWS_AS(preset_poly(k(2), "frobnicate", std::nullopt, 1), std::invalid_argument);

    const Digraph tri = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(preset_poly(tri, "adjacency", std::nullopt, 1) ==
          Poly::from_coeffs({Rational(-1), Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("engine argument validation") {
    EvalContext ctx(k(3), MatrixParams::laplacian());
    CHECK_THROWS_AS(phi_vertex(ctx, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_edge(ctx, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(dk_edge(ctx, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_general(ctx, {9}, 1), std::invalid_argument);

    const Digraph one_arc = Digraph::from_arcs(2, {{0, 1}});
    EvalContext dctx(one_arc, MatrixParams::laplacian());
    CHECK_THROWS_AS(phi_edge(dctx, 1, 0, 1), std::invalid_argument);  // reversed arc absent
}
