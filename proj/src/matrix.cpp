#include "hookimm/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookimm {

MatrixParams MatrixParams::alpha_matrix(const Rational& alpha) {
    if (alpha < Rational(0) || alpha > Rational(1))
        throw std::invalid_argument("alpha must lie in [0, 1], got " + alpha.str());
    return {alpha, Rational(1) - alpha};
}

RationalMatrix::RationalMatrix(std::vector<int> labels)
    : labels_(std::move(labels)), e_(labels_.size() * labels_.size()) {}

Rational& RationalMatrix::at(int i, int j) {
    return e_[static_cast<std::size_t>(i) * labels_.size() + j];
}

const Rational& RationalMatrix::at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * labels_.size() + j];
}

bool RationalMatrix::same_entries(const RationalMatrix& o) const {
    return order() == o.order() && e_ == o.e_;
}

namespace {
std::vector<int> iota_labels(int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    return labels;
}
}  // namespace

RationalMatrix build_matrix(const Graph& g, const MatrixParams& p) {
    const int n = g.vertex_count();
    RationalMatrix m(iota_labels(n));
    for (int i = 0; i < n; ++i) m.at(i, i) = p.beta * Rational(g.degree(i));
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = p.gamma;
        m.at(v, u) = p.gamma;
    }
    return m;
}

RationalMatrix build_matrix(const Digraph& g, const MatrixParams& p) {
    const int n = g.vertex_count();
    RationalMatrix m(iota_labels(n));
    for (int i = 0; i < n; ++i) m.at(i, i) = p.beta * Rational(g.out_degree(i));
    for (auto [u, v] : g.arcs()) m.at(u, v) = p.gamma;
    return m;
}

RationalMatrix principal_submatrix(const RationalMatrix& m, const std::vector<int>& removed) {
    const auto& labels = m.labels();
    std::vector<bool> drop(labels.size(), false);
    for (int r : removed) {
        auto it = std::find(labels.begin(), labels.end(), r);
        if (it == labels.end())
            throw std::invalid_argument("vertex " + std::to_string(r + 1) + " not present");
        drop[it - labels.begin()] = true;
    }
    std::vector<int> keep;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (!drop[i]) keep.push_back(static_cast<int>(i));

    std::vector<int> new_labels;
    new_labels.reserve(keep.size());
    for (int i : keep) new_labels.push_back(labels[i]);
    RationalMatrix out(std::move(new_labels));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = m.at(keep[i], keep[j]);
    return out;
}

}  // namespace hookimm
