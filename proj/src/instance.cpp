#include "ucp/instance.hpp"

#include <algorithm>
#include <string>

namespace ucp {

MetricInstance validate_metric(int n, std::vector<Rational> d) {
    if (n < 1) throw ParseError("metric needs at least one point");
    if (d.size() != static_cast<std::size_t>(n) * n) {
        throw DimensionMismatch("distance matrix size " + std::to_string(d.size()) +
                                " does not match n=" + std::to_string(n));
    }
    MetricInstance m{n, std::move(d)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m.dist(i, j) != m.dist(j, i)) throw AsymmetryError(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (m.dist(i, i) != 0) throw ZeroDiagonalError(i, i);
        for (int j = 0; j < n; ++j) {
            if (i != j && m.dist(i, j) <= 0) throw ZeroDiagonalError(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int l = 0; l < n; ++l) {
                if (m.dist(i, l) > m.dist(i, j) + m.dist(j, l)) {
                    throw TriangleError(i, j, l);
                }
            }
        }
    }
    return m;
}

std::vector<char> GraphInstance::adjacency() const {
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return adj;
}

GraphInstance make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw ParseError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("edge endpoint out of range: (" + std::to_string(u) +
                             ", " + std::to_string(v) + ")");
        }
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return GraphInstance{n, std::move(edges)};
}

MetricInstance graph_metric(const GraphInstance& g) {
    MetricInstance m;
    m.n = g.n;
    m.d.assign(static_cast<std::size_t>(g.n) * g.n, Rational(2));
    for (int i = 0; i < g.n; ++i) m.d[static_cast<std::size_t>(i) * g.n + i] = 0;
    for (auto [u, v] : g.edges) {
        m.d[static_cast<std::size_t>(u) * g.n + v] = 1;
        m.d[static_cast<std::size_t>(v) * g.n + u] = 1;
    }
    return m;
}

GraphInstance eps_graph(const MetricInstance& m, const Rational& eps) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m.n; ++i) {
        for (int j = i + 1; j < m.n; ++j) {
            if (m.dist(i, j) <= eps) edges.emplace_back(i, j);
        }
    }
    return GraphInstance{m.n, std::move(edges)};
}

Rational EuclideanInstance::dist2(int i, int j) const {
    Rational acc = 0;
    for (int c = 0; c < p; ++c) {
        const Rational diff = points[i][c] - points[j][c];
        acc += diff * diff;
    }
    return acc;
}

EuclideanInstance make_euclidean(int p, std::vector<std::vector<Rational>> points) {
    if (points.empty()) throw ParseError("point set needs at least one point");
    if (p < 1) throw DimensionMismatch("dimension must be positive");
    for (const auto& row : points) {
        if (row.size() != static_cast<std::size_t>(p)) {
            throw DimensionMismatch("point has " + std::to_string(row.size()) +
                                    " coordinates, expected " + std::to_string(p));
        }
    }
    return EuclideanInstance{static_cast<int>(points.size()), p, std::move(points)};
}

}  // namespace ucp
