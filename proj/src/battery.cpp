#include "ucp/battery.hpp"

#include <algorithm>

#include "ucp/errors.hpp"
#include "ucp/solver.hpp"

namespace ucp {

GraphInstance random_er_graph(Rng& rng, int n) {
    const int tenths[] = {2, 5, 8};
    const int p = tenths[rng.below(3)];
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.chance_tenths(p)) edges.emplace_back(i, j);
        }
    }
    return make_graph(n, std::move(edges));
}

MetricInstance random_metric(Rng& rng, int n) {
    std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = rng.range(1, 4);
        }
    }
    // Shortest-path closure restores the triangle inequality.
    for (int via = 0; via < n; ++via) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][via] + d[via][j]);
            }
        }
    }
    std::vector<Rational> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            flat[static_cast<std::size_t>(i) * n + j] = d[i][j];
        }
    }
    return validate_metric(n, std::move(flat));
}

namespace {

// -1, 0, or +1 around an exact optimum; offsets >= 0 give YES instances, so
// a third of each battery lands on the NO side of the boundary.
Rational boundary_budget(Rng& rng, const Rational& optimum) {
    return optimum + Rational(rng.below(3) - 1);
}

EuclideanInstance random_points(Rng& rng, int nmax) {
    const int n = rng.range(2, std::min(nmax, 6));
    const int p = rng.range(1, 2);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(p));
    for (auto& row : rows) {
        for (auto& v : row) v = rng.range(-4, 4);
    }
    return make_euclidean(p, std::move(rows));
}

}  // namespace

SourceInstance random_source(const std::string& kind, Rng& rng, int nmax) {
    if (kind == "coloring") {
        const int n = rng.range(2, std::min(nmax, 8));
        GraphInstance g = random_er_graph(rng, n);
        const int kappa = rng.range(1, std::min(n, 4));
        return ColoringSource{std::move(g), kappa};
    }
    if (kind == "fdcs") {
        const int n = rng.range(2, std::min(nmax, 8));
        GraphInstance g = random_er_graph(rng, n);
        const int s = rng.range(1, n - 1);
        const long long tau = rng.range(0, s * (s - 1) / 2);
        return FdcsSource{std::move(g), s, tau};
    }
    if (kind == "bisection") {
        const int half = rng.range(1, std::min(nmax, 8) / 2);
        GraphInstance g = random_er_graph(rng, 2 * half);
        const long long budget = rng.range(0, static_cast<int>(g.m()));
        return BisectionSource{std::move(g), budget};
    }
    if (kind == "cliquecover") {
        const int n = rng.range(2, std::min(nmax, 8));
        GraphInstance g = random_er_graph(rng, n);
        const int k = rng.range(1, std::min(n, 4));
        return CliqueCoverSource{std::move(g), k};
    }
    if (kind == "kmeans-birch") {
        EuclideanInstance e = random_points(rng, nmax);
        const int k = rng.range(1, std::min(e.n, 3));
        const Rational budget = boundary_budget(rng, oracle_kmeans(e, k));
        return KmeansSource{std::move(e), k, budget};
    }
    if (kind == "ufl-ap") {
        const int nf = rng.range(1, 3);
        const int nd = rng.range(1, 3);
        std::vector<Rational> open_cost(nf);
        for (auto& f : open_cost) f = rng.range(0, 6);
        std::vector<std::vector<Rational>> service_cost(
            nd, std::vector<Rational>(nf));
        for (auto& row : service_cost) {
            for (auto& c : row) c = rng.range(0, 9);
        }
        UflInstance u = make_ufl(std::move(open_cost), std::move(service_cost));
        const Rational budget = boundary_budget(rng, oracle_ufl(u));
        return UflSource{std::move(u), budget};
    }
    if (kind == "l0-ssc") {
        const int rows = rng.range(1, 3);
        const int cols = rng.range(1, 3);
        RationalMatrix a = RationalMatrix::zero(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) a.at(r, c) = rng.range(-2, 2);
        }
        std::vector<Rational> b(rows);
        for (auto& v : b) v = rng.range(-2, 2);
        if (std::all_of(b.begin(), b.end(),
                        [](const Rational& v) { return v == 0; })) {
            b[rng.below(rows)] = 1;
        }
        const long long t = rng.range(0, cols);
        return L0Source{make_l0(std::move(a), std::move(b), t)};
    }
    if (kind == "kmedian") {
        const int n = rng.range(2, std::min(nmax, 7));
        MetricInstance m = random_metric(rng, n);
        const int k = rng.range(1, std::min(n, 3));
        const Rational budget = boundary_budget(rng, oracle_kmedian(m, k));
        return KmedianSource{std::move(m), k, budget};
    }
    throw ParseError("unknown reduction kind \"" + kind + "\"");
}

}  // namespace ucp
