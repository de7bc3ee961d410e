#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hookimm/graph.hpp"
#include "hookimm/matrix.hpp"

namespace hookimm {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SuiteReport {
    std::string suite;
    long long checked = 0;
    long long failed = 0;
    std::string first_counterexample;
    std::string note;

    bool passed() const { return failed == 0; }
    void fail(const std::string& what) {
        ++failed;
        if (first_counterexample.empty()) first_counterexample = what;
    }
};

// The parameter set every equivalence suite runs over.
std::vector<MatrixParams> standard_params();

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);
void for_each_labeled_digraph(int n, const std::function<void(const Digraph&)>& fn);

// All pairwise non-isomorphic trees on n vertices, grown by leaf attachment
// and deduplicated by a canonical form rooted at the tree center.
std::vector<Graph> all_trees(int n);

// Seeded deterministic generator (raw mt19937_64 words, reduced by modulo).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t word() { return eng_(); }
    int below(int m) { return static_cast<int>(word() % static_cast<std::uint64_t>(m)); }
    bool coin() { return word() & 1; }
    Rational rational(int max_num = 9, int max_den = 4);

private:
    std::mt19937_64 eng_;
};

RationalMatrix random_matrix(Rng& rng, int order);
Digraph random_digraph(Rng& rng, int n);

// Suites. Each returns a filled report and never throws on a mere mismatch.
SuiteReport verify_oracle_graphs(int max_n);
SuiteReport verify_oracle_digraphs(int exhaustive_max_n, int random_count, std::uint64_t seed);
SuiteReport verify_characters(int max_n);
SuiteReport verify_row_linearity(int count, int order, std::uint64_t seed);
SuiteReport verify_crosschecks(int count, int max_order, std::uint64_t seed);
SuiteReport verify_bipartite(int max_n);
SuiteReport verify_trees(int max_n);
SuiteReport verify_alpha_coefficient();

}  // namespace hookimm
