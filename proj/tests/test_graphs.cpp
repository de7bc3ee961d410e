#include <doctest.h>

#include <variant>

#include "hookimm/errors.hpp"
#include "hookimm/graph.hpp"
#include "hookimm/matrix.hpp"
#include "hookimm/verify.hpp"

using namespace hookimm;

namespace {

Graph k(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("edge list parsing") {
    auto v = parse_graph("3 2\n1 2\n2 3\n");
    REQUIRE(std::holds_alternative<Graph>(v));
    const Graph& p3 = std::get<Graph>(v);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.degree(1) == 2);
    CHECK(is_bipartite(p3));

    auto d = parse_graph("# a digraph\n2 1 directed\n1 2\n");
    REQUIRE(std::holds_alternative<Digraph>(d));
    CHECK(std::get<Digraph>(d).has_arc(0, 1));
    CHECK(!std::get<Digraph>(d).has_arc(1, 0));

    CHECK(!is_bipartite(cycle(5)));
    CHECK(is_bipartite(cycle(6)));

    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1 weird\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 3\n"), ParseError);       // out of range
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n1 2\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n2 1\n"), ParseError);  // same edge reversed
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n"), ParseError);       // loop
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n"), ParseError);       // missing line
    CHECK_THROWS_AS(parse_graph("2 1\n1 2\n1 2\n"), ParseError);  // trailing content
    CHECK_THROWS_AS(parse_graph("63 0\n"), SizeLimitError);

    // Antiparallel arcs are legal in digraphs.
    auto digon = parse_graph("2 2 directed\n1 2\n2 1\n");
    CHECK(std::get<Digraph>(digon).has_digon());
}

TEST_CASE("graph6 codec") {
    Graph k3 = Graph::from_graph6("Bw");
    CHECK(k3 == k(3));
    CHECK(k(3).to_graph6() == "Bw");
    CHECK(Graph::from_graph6(">>graph6<<A_") == k(2));

    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + rng.below(8);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin()) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, std::move(edges));
        CHECK(Graph::from_graph6(g.to_graph6()) == g);
    }

    CHECK_THROWS_AS(Graph::from_graph6(""), ParseError);
    CHECK_THROWS_AS(Graph::from_graph6("Bw@"), ParseError);   // wrong length
    CHECK_THROWS_AS(Graph::from_graph6("B\x07"), ParseError); // byte out of range
    CHECK_THROWS_AS(Graph::from_graph6("\x7e\x7e"), SizeLimitError);
}

TEST_CASE("matrix construction") {
    const RationalMatrix lk2 = build_matrix(k(2), MatrixParams::laplacian());
    CHECK(lk2.at(0, 0) == Rational(1));
    CHECK(lk2.at(0, 1) == Rational(-1));
    CHECK(lk2.at(1, 0) == Rational(-1));
    CHECK(lk2.at(1, 1) == Rational(1));

    const RationalMatrix ak2 = build_matrix(k(2), MatrixParams::adjacency());
    CHECK(ak2.at(0, 0) == Rational(0));
    CHECK(ak2.at(0, 1) == Rational(1));

    const Digraph path = Digraph::from_arcs(2, {{0, 1}});
    const RationalMatrix q = build_matrix(path, MatrixParams::signless_laplacian());
    CHECK(q.at(0, 0) == Rational(1));
    CHECK(q.at(0, 1) == Rational(1));
    CHECK(q.at(1, 0) == Rational(0));
    CHECK(q.at(1, 1) == Rational(0));
}

TEST_CASE("laplacian row sums vanish") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + rng.below(7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin()) edges.emplace_back(u, v);
        const Graph g = Graph::from_edges(n, std::move(edges));
        const RationalMatrix lap = build_matrix(g, MatrixParams::laplacian());
        for (int i = 0; i < n; ++i) {
            Rational sum;
            for (int j = 0; j < n; ++j) sum += lap.at(i, j);
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("principal submatrix keeps original degrees") {
    const RationalMatrix lk2 = build_matrix(k(2), MatrixParams::laplacian());
    const RationalMatrix sub = principal_submatrix(lk2, {1});
    CHECK(sub.order() == 1);
    CHECK(sub.labels() == std::vector<int>{0});
    CHECK(sub.at(0, 0) == Rational(1));  // not the degree of the deleted-vertex graph

    CHECK(principal_submatrix(lk2, {}) == lk2);
    CHECK(principal_submatrix(lk2, {0, 1}).order() == 0);
    CHECK_THROWS_AS(principal_submatrix(lk2, {5}), std::invalid_argument);
    CHECK_THROWS_AS(principal_submatrix(sub, {1}), std::invalid_argument);

    // Removing S then T equals removing S union T.
    const RationalMatrix lk5 = build_matrix(k(5), MatrixParams::laplacian());
    CHECK(principal_submatrix(principal_submatrix(lk5, {1, 3}), {4}) ==
          principal_submatrix(lk5, {1, 3, 4}));
}

TEST_CASE("edge and vertex deletion") {
    Graph p3 = k(3).without_edge(0, 1);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(2) == 2);

    Graph two = Graph::from_edges(2, {{0, 1}}).without_edge(1, 0);
    CHECK(two.edge_count() == 0);
    CHECK_THROWS_AS(two.without_edge(0, 1), std::invalid_argument);

    Digraph digon = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
    Digraph one = digon.without_arc(0, 1);
    CHECK(one.arcs() == std::vector<std::pair<int, int>>{{1, 0}});
    CHECK_THROWS_AS(one.without_arc(0, 1), std::invalid_argument);

    Graph gone = k(3).without_vertex(1);
    CHECK(gone.vertex_count() == 2);
    CHECK(gone.has_edge(0, 1));  // former vertex 2 relabeled to 1
}

TEST_CASE("alpha preset domain") {
    CHECK(MatrixParams::alpha_matrix(Rational(1, 2)).gamma == Rational(1, 2));
    CHECK_THROWS_AS(MatrixParams::alpha_matrix(Rational(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(MatrixParams::alpha_matrix(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("tree generation by leaf growth") {
    CHECK(all_trees(1).size() == 1);
    CHECK(all_trees(2).size() == 1);
    CHECK(all_trees(3).size() == 1);
    CHECK(all_trees(4).size() == 2);
    CHECK(all_trees(5).size() == 3);
    CHECK(all_trees(6).size() == 6);
    CHECK(all_trees(7).size() == 11);
    CHECK(all_trees(8).size() == 23);
    for (const Graph& t : all_trees(6)) {
        CHECK(t.edge_count() == 5);
        CHECK(is_bipartite(t));
    }
}
