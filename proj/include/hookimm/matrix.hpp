#pragma once

#include <vector>

#include "hookimm/graph.hpp"
#include "hookimm/rational.hpp"

namespace hookimm {

// The (beta, gamma) pair of the linear combination beta*D + gamma*A.
struct MatrixParams {
    Rational beta;
    Rational gamma;

    static MatrixParams laplacian() { return {Rational(1), Rational(-1)}; }
    static MatrixParams signless_laplacian() { return {Rational(1), Rational(1)}; }
    static MatrixParams adjacency() { return {Rational(0), Rational(1)}; }
    // (alpha, 1 - alpha); rejects alpha outside [0, 1].
    static MatrixParams alpha_matrix(const Rational& alpha);

    bool operator==(const MatrixParams&) const = default;
    std::string str() const { return "beta=" + beta.str() + " gamma=" + gamma.str(); }
};

// Dense square matrix of rationals whose rows/columns carry the original
// vertex indices they came from, so principal submatrices remember which
// vertices survived.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::vector<int> labels);  // zero matrix

    int order() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    bool operator==(const RationalMatrix&) const = default;
    bool same_entries(const RationalMatrix& o) const;  // ignores labels

private:
    std::vector<int> labels_;
    std::vector<Rational> e_;
};

RationalMatrix build_matrix(const Graph& g, const MatrixParams& p);
RationalMatrix build_matrix(const Digraph& g, const MatrixParams& p);

// Deletes the rows and columns of the given original vertex labels. Diagonal
// entries are untouched: degrees stay those of the graph the matrix was built
// from, which is not the same as rebuilding on the smaller graph.
RationalMatrix principal_submatrix(const RationalMatrix& m, const std::vector<int>& removed);

}  // namespace hookimm
