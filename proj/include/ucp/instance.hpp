#pragma once

#include <utility>
#include <vector>

#include "ucp/rational.hpp"

namespace ucp {

// Finite metric space on points 0..n-1. The distance matrix is stored
// row-major and is only constructed through validate_metric (or by code that
// guarantees the axioms by construction, like graph_metric), so axioms can be
// assumed downstream.
struct MetricInstance {
    int n = 0;
    std::vector<Rational> d;  // n*n, row-major

    const Rational& dist(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

// Checks symmetry, identity of indiscernibles, nonnegativity and the triangle
// inequality, in that order, scanning indices in increasing order, and throws
// AsymmetryError / ZeroDiagonalError / TriangleError naming the first
// offending points. Returns the validated instance on success.
MetricInstance validate_metric(int n, std::vector<Rational> d);

// Simple undirected graph on vertices 0..n-1. Edges are stored as sorted
// (u < v) pairs, deduplicated, in lexicographic order.
struct GraphInstance {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int m() const { return static_cast<int>(edges.size()); }
    // Adjacency matrix as a flat n*n vector of 0/1 (symmetric, zero diagonal).
    std::vector<char> adjacency() const;
};

// Normalizes an edge list (orients u < v, sorts, deduplicates). Throws
// ParseError on self-loops or endpoints outside 0..n-1.
GraphInstance make_graph(int n, std::vector<std::pair<int, int>> edges);

// The graph metric used by the hardness gadgets: d(i,i) = 0, d(i,j) = 1 on
// edges, 2 otherwise. Always a valid metric for any simple graph.
MetricInstance graph_metric(const GraphInstance& g);

// Epsilon-neighborhood graph of a metric: edge {i,j} iff d(i,j) <= eps
// (inclusive). eps < 0 gives the empty graph.
GraphInstance eps_graph(const MetricInstance& m, const Rational& eps);

// Points x_1..x_n in Q^p, stored as n rows of length p.
struct EuclideanInstance {
    int n = 0;
    int p = 0;
    std::vector<std::vector<Rational>> points;

    // Squared Euclidean distance between points i and j (exact).
    Rational dist2(int i, int j) const;
};

// Validates row lengths against p and n; throws DimensionMismatch.
EuclideanInstance make_euclidean(int p, std::vector<std::vector<Rational>> points);

}  // namespace ucp
