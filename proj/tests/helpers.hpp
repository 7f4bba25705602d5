#pragma once

#include <vector>

#include "ucp/instance.hpp"
#include "ucp/partition.hpp"
#include "ucp/utilities.hpp"

// Small shared builders. Vertex and point numbering is 0-based everywhere.

namespace ucptest {

inline ucp::GraphInstance k3() {
    return ucp::make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
}

// Path 0-1-2.
inline ucp::GraphInstance path3() {
    return ucp::make_graph(3, {{0, 1}, {1, 2}});
}

// Cycle 0-1-2-3-0.
inline ucp::GraphInstance c4() {
    return ucp::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Triangle 0-1-2 plus the isolated vertex 3.
inline ucp::GraphInstance k3_plus_isolated() {
    return ucp::make_graph(4, {{0, 1}, {0, 2}, {1, 2}});
}

// Two disjoint edges 0-1 and 2-3.
inline ucp::GraphInstance two_edges() {
    return ucp::make_graph(4, {{0, 1}, {2, 3}});
}

// 1-D metric: d(i, j) = |x_i - x_j|.
inline ucp::MetricInstance line_metric(const std::vector<long long>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<ucp::Rational> d(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const long long diff = xs[i] > xs[j] ? xs[i] - xs[j] : xs[j] - xs[i];
            d[static_cast<std::size_t>(i) * n + j] = diff;
        }
    }
    return ucp::validate_metric(n, std::move(d));
}

// 1-D points.
inline ucp::EuclideanInstance line_points(const std::vector<long long>& xs) {
    std::vector<std::vector<ucp::Rational>> rows;
    rows.reserve(xs.size());
    for (long long x : xs) rows.push_back({ucp::Rational(x)});
    return ucp::make_euclidean(1, std::move(rows));
}

// Similarity s(i, j) = -|x_i - x_j| (so the diagonal is 0).
inline ucp::SimilarityMatrix neg_distance_similarity(
    const std::vector<long long>& xs) {
    const int n = static_cast<int>(xs.size());
    ucp::SimilarityMatrix s = ucp::SimilarityMatrix::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const long long diff = xs[i] > xs[j] ? xs[i] - xs[j] : xs[j] - xs[i];
            s.at(i, j) = -diff;
        }
    }
    return s;
}

inline ucp::Partition part(const std::vector<int>& labels) {
    return ucp::canonicalize(labels);
}

}  // namespace ucptest
