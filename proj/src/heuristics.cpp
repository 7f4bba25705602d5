#include "ucp/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "ucp/errors.hpp"
#include "ucp/rng.hpp"

namespace ucp {

namespace {

Rational squared_distance(const std::vector<Rational>& a,
                          const std::vector<Rational>& b) {
    Rational out = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        const Rational diff = a[c] - b[c];
        out += diff * diff;
    }
    return out;
}

Rational kmeans_cost(const EuclideanInstance& e, const Partition& pi) {
    return -kmeans_utility(e, pi);
}

}  // namespace

HeuristicRun lloyd(const EuclideanInstance& e, int k, std::uint64_t seed) {
    if (k < 1 || k > e.n) {
        throw InvalidK("center count " + std::to_string(k) +
                       " out of range 1.." + std::to_string(e.n));
    }
    HeuristicRun run;
    run.method = "lloyd";
    run.seed = seed;

    Rng rng(seed);
    std::vector<std::vector<Rational>> centers;
    centers.reserve(k);
    for (int idx : rng.distinct(e.n, k)) centers.push_back(e.points[idx]);

    std::set<std::vector<int>> seen;
    std::vector<int> labels(e.n, 0);
    while (true) {
        // Assignment: nearest center, ties to the lowest center index.
        for (int i = 0; i < e.n; ++i) {
            int best = 0;
            Rational best_d = squared_distance(e.points[i], centers[0]);
            for (int c = 1; c < k; ++c) {
                Rational d = squared_distance(e.points[i], centers[c]);
                if (d < best_d) {
                    best_d = std::move(d);
                    best = c;
                }
            }
            labels[i] = best;
        }
        // Repair: hand each empty cluster the point currently farthest from
        // its own center (lowest index on ties), skipping blocks that would
        // empty in turn.
        std::vector<int> count(k, 0);
        for (int lab : labels) ++count[lab];
        for (int c = 0; c < k; ++c) {
            if (count[c] > 0) continue;
            int steal = -1;
            Rational steal_d = 0;
            for (int i = 0; i < e.n; ++i) {
                if (count[labels[i]] < 2) continue;
                Rational d = squared_distance(e.points[i], centers[labels[i]]);
                if (steal < 0 || d > steal_d) {
                    steal_d = std::move(d);
                    steal = i;
                }
            }
            --count[labels[steal]];
            labels[steal] = c;
            count[c] = 1;
            centers[c] = e.points[steal];
        }
        // Centroid update.
        std::vector<std::vector<Rational>> sums(
            k, std::vector<Rational>(e.p, Rational(0)));
        for (int i = 0; i < e.n; ++i) {
            for (int c = 0; c < e.p; ++c) sums[labels[i]][c] += e.points[i][c];
        }
        for (int c = 0; c < k; ++c) {
            for (auto& v : sums[c]) v /= count[c];
        }
        centers = std::move(sums);

        ++run.iterations;
        Partition pi = from_labels(labels, k);
        run.trajectory.push_back(kmeans_cost(e, pi));
        if (!seen.insert(pi.labels).second) {
            run.final_partition = std::move(pi);
            run.value = run.trajectory.back();
            return run;
        }
    }
}

namespace {

Rational max_linkage_distance(const MetricInstance& m,
                              const std::vector<int>& a,
                              const std::vector<int>& b) {
    Rational out = 0;
    for (int i : a) {
        for (int j : b) out = std::max(out, m.dist(i, j));
    }
    return out;
}

Rational max_block_diameter(const MetricInstance& m,
                            const std::vector<std::vector<int>>& clusters) {
    Rational out = 0;
    for (const auto& block : clusters) {
        for (std::size_t a = 0; a < block.size(); ++a) {
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                out = std::max(out, m.dist(block[a], block[b]));
            }
        }
    }
    return out;
}

}  // namespace

HeuristicRun greedy_complete_linkage(const MetricInstance& m, int k) {
    if (k < 1 || k > m.n) {
        throw InvalidK("block count " + std::to_string(k) +
                       " out of range 1.." + std::to_string(m.n));
    }
    HeuristicRun run;
    run.method = "linkage";

    std::vector<std::vector<int>> clusters;
    clusters.reserve(m.n);
    for (int i = 0; i < m.n; ++i) clusters.push_back({i});

    while (static_cast<int>(clusters.size()) > k) {
        int bi = -1, bj = -1;
        Rational best = 0;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                Rational d = max_linkage_distance(m, clusters[i], clusters[j]);
                if (bi < 0 || d < best) {
                    best = std::move(d);
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        }
        auto& dst = clusters[bi];
        auto& src = clusters[bj];
        dst.insert(dst.end(), src.begin(), src.end());
        std::sort(dst.begin(), dst.end());
        clusters.erase(clusters.begin() + bj);
        ++run.iterations;
        run.trajectory.push_back(max_block_diameter(m, clusters));
    }

    std::vector<int> labels(m.n, 0);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (int i : clusters[c]) labels[i] = static_cast<int>(c);
    }
    run.final_partition = from_labels(labels, k);
    run.value = max_block_diameter(m, clusters);
    return run;
}

namespace {

// Consistent assignment induced by an exemplar set: exemplars self-assign,
// everyone else takes their best exemplar (lowest index on ties). An empty
// set is repaired to the best self-similarity point first.
struct InducedAssignment {
    std::vector<int> labels;
    Rational value;
};

InducedAssignment induce_assignment(const SimilarityMatrix& s,
                                    std::vector<char> in_e) {
    const int n = s.n;
    if (std::count(in_e.begin(), in_e.end(), char(1)) == 0) {
        int best = 0;
        for (int i = 1; i < n; ++i) {
            if (s.at(i, i) > s.at(best, best)) best = i;
        }
        in_e[best] = 1;
    }
    InducedAssignment out;
    out.labels.assign(n, -1);
    out.value = 0;
    for (int i = 0; i < n; ++i) {
        if (in_e[i]) {
            out.labels[i] = i;
            out.value += s.at(i, i);
            continue;
        }
        int best = -1;
        for (int e = 0; e < n; ++e) {
            if (!in_e[e]) continue;
            if (best < 0 || s.at(i, e) > s.at(i, best)) best = e;
        }
        out.labels[i] = best;
        out.value += s.at(i, best);
    }
    return out;
}

}  // namespace

HeuristicRun ap_messages(const SimilarityMatrix& s, double damping,
                         int max_iters, int stable_window) {
    if (!(damping >= 0.0 && damping < 1.0)) {
        throw ParseError("damping must lie in [0, 1)");
    }
    if (max_iters < 1 || stable_window < 1) {
        throw ParseError("max_iters and stable_window must be positive");
    }
    HeuristicRun run;
    run.method = "ap";

    const int n = s.n;
    if (n == 1) {
        run.final_partition = canonicalize({0});
        run.value = s.at(0, 0);
        run.trajectory.push_back(run.value);
        return run;
    }

    std::vector<double> sd(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            sd[static_cast<std::size_t>(i) * n + j] = to_double(s.at(i, j));
        }
    }
    std::vector<double> r(sd.size(), 0.0), a(sd.size(), 0.0);
    auto at = [n](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    std::vector<char> prev_e;
    std::vector<char> in_e(n, 0);
    int stable = 0;
    bool settled = false;
    while (run.iterations < max_iters) {
        // Responsibilities.
        std::vector<double> rnew(sd.size());
        for (int i = 0; i < n; ++i) {
            double max1 = -1e300, max2 = -1e300;
            int arg1 = -1;
            for (int k = 0; k < n; ++k) {
                const double v = at(a, i, k) + sd[static_cast<std::size_t>(i) * n + k];
                if (v > max1) {
                    max2 = max1;
                    max1 = v;
                    arg1 = k;
                } else if (v > max2) {
                    max2 = v;
                }
            }
            for (int k = 0; k < n; ++k) {
                const double competing = (k == arg1) ? max2 : max1;
                rnew[static_cast<std::size_t>(i) * n + k] =
                    sd[static_cast<std::size_t>(i) * n + k] - competing;
            }
        }
        for (std::size_t z = 0; z < r.size(); ++z) {
            r[z] = damping * r[z] + (1.0 - damping) * rnew[z];
        }
        // Availabilities.
        std::vector<double> anew(sd.size());
        for (int k = 0; k < n; ++k) {
            double sum_pos = 0.0;
            for (int i = 0; i < n; ++i) {
                if (i != k) sum_pos += std::max(0.0, at(r, i, k));
            }
            for (int i = 0; i < n; ++i) {
                if (i == k) {
                    anew[static_cast<std::size_t>(i) * n + k] = sum_pos;
                } else {
                    anew[static_cast<std::size_t>(i) * n + k] = std::min(
                        0.0,
                        at(r, k, k) + sum_pos - std::max(0.0, at(r, i, k)));
                }
            }
        }
        for (std::size_t z = 0; z < a.size(); ++z) {
            a[z] = damping * a[z] + (1.0 - damping) * anew[z];
        }

        std::fill(in_e.begin(), in_e.end(), 0);
        for (int k = 0; k < n; ++k) {
            if (at(r, k, k) + at(a, k, k) > 0.0) in_e[k] = 1;
        }
        ++run.iterations;
        const InducedAssignment ind = induce_assignment(s, in_e);
        run.trajectory.push_back(ind.value);

        if (run.iterations > 1 && in_e == prev_e) {
            ++stable;
        } else {
            stable = 1;
        }
        prev_e = in_e;
        if (stable >= stable_window) {
            settled = true;
            break;
        }
    }
    run.non_convergence = !settled;

    const InducedAssignment final_ind = induce_assignment(s, in_e);
    run.final_partition = canonicalize(final_ind.labels);
    run.value = final_ind.value;
    return run;
}

namespace {

Rational exemplar_set_objective(const SimilarityMatrix& s,
                                const std::vector<char>& in_e) {
    Rational total = 0;
    for (int i = 0; i < s.n; ++i) {
        if (in_e[i]) {
            total += s.at(i, i);
            continue;
        }
        int best = -1;
        for (int e = 0; e < s.n; ++e) {
            if (!in_e[e]) continue;
            if (best < 0 || s.at(i, e) > s.at(i, best)) best = e;
        }
        total += s.at(i, best);
    }
    return total;
}

}  // namespace

HeuristicRun pam_swap(const SimilarityMatrix& s, int k, std::uint64_t seed) {
    if (k < 1 || k > s.n) {
        throw InvalidK("exemplar count " + std::to_string(k) +
                       " out of range 1.." + std::to_string(s.n));
    }
    HeuristicRun run;
    run.method = "pam";
    run.seed = seed;

    Rng rng(seed);
    std::vector<char> in_e(s.n, 0);
    for (int idx : rng.distinct(s.n, k)) in_e[idx] = 1;
    Rational g = exemplar_set_objective(s, in_e);
    run.trajectory.push_back(g);

    while (true) {
        // Best single swap, scanned in (out-going, in-coming) index order so
        // ties keep the earliest pair.
        int best_out = -1, best_in = -1;
        Rational best_g = g;
        for (int e = 0; e < s.n; ++e) {
            if (!in_e[e]) continue;
            for (int j = 0; j < s.n; ++j) {
                if (in_e[j]) continue;
                in_e[e] = 0;
                in_e[j] = 1;
                Rational cand = exemplar_set_objective(s, in_e);
                in_e[e] = 1;
                in_e[j] = 0;
                if (cand > best_g) {
                    best_g = std::move(cand);
                    best_out = e;
                    best_in = j;
                }
            }
        }
        if (best_out < 0) break;
        in_e[best_out] = 0;
        in_e[best_in] = 1;
        g = best_g;
        run.trajectory.push_back(g);
        ++run.iterations;
    }

    const InducedAssignment ind = induce_assignment(s, in_e);
    run.final_partition = canonicalize(ind.labels);
    run.value = g;
    return run;
}

namespace {

double kde_value(const std::vector<std::vector<double>>& pts, int p, double h,
                 const std::vector<double>& y) {
    double acc = 0.0;
    for (const auto& x : pts) {
        double d2 = 0.0;
        for (int c = 0; c < p; ++c) {
            const double diff = y[c] - x[c];
            d2 += diff * diff;
        }
        acc += std::exp(-d2 / (2.0 * h * h));
    }
    const double norm =
        static_cast<double>(pts.size()) *
        std::pow(2.0 * M_PI * h * h, static_cast<double>(p) / 2.0);
    return acc / norm;
}

}  // namespace

MeanShiftResult mean_shift(const EuclideanInstance& e, double h, double tol,
                           int max_iters) {
    if (!(h > 0.0)) throw ParseError("bandwidth must be positive");
    if (!(tol > 0.0) || max_iters < 1) {
        throw ParseError("tolerance and max_iters must be positive");
    }
    std::vector<std::vector<double>> pts(e.n, std::vector<double>(e.p));
    for (int i = 0; i < e.n; ++i) {
        for (int c = 0; c < e.p; ++c) pts[i][c] = to_double(e.points[i][c]);
    }

    MeanShiftResult out;
    out.kde_trajectories.resize(e.n);
    out.max_iters_exceeded.assign(e.n, 0);
    std::vector<std::vector<double>> finals(e.n);

    for (int i = 0; i < e.n; ++i) {
        std::vector<double> y = pts[i];
        out.kde_trajectories[i].push_back(kde_value(pts, e.p, h, y));
        bool converged = false;
        for (int it = 0; it < max_iters; ++it) {
            std::vector<double> num(e.p, 0.0);
            double den = 0.0;
            for (const auto& x : pts) {
                double d2 = 0.0;
                for (int c = 0; c < e.p; ++c) {
                    const double diff = y[c] - x[c];
                    d2 += diff * diff;
                }
                const double w = std::exp(-d2 / (2.0 * h * h));
                den += w;
                for (int c = 0; c < e.p; ++c) num[c] += w * x[c];
            }
            double step2 = 0.0;
            for (int c = 0; c < e.p; ++c) {
                num[c] /= den;
                const double diff = num[c] - y[c];
                step2 += diff * diff;
            }
            y = std::move(num);
            out.kde_trajectories[i].push_back(kde_value(pts, e.p, h, y));
            if (std::sqrt(step2) < tol) {
                converged = true;
                break;
            }
        }
        out.max_iters_exceeded[i] = converged ? 0 : 1;
        finals[i] = std::move(y);
    }

    // Merge final positions into modes: first representative within
    // 1e-3 * h wins.
    const double merge_radius = 1e-3 * h;
    std::vector<int> labels(e.n, -1);
    for (int i = 0; i < e.n; ++i) {
        for (std::size_t mo = 0; mo < out.modes.size(); ++mo) {
            double d2 = 0.0;
            for (int c = 0; c < e.p; ++c) {
                const double diff = finals[i][c] - out.modes[mo][c];
                d2 += diff * diff;
            }
            if (std::sqrt(d2) <= merge_radius) {
                labels[i] = static_cast<int>(mo);
                break;
            }
        }
        if (labels[i] < 0) {
            labels[i] = static_cast<int>(out.modes.size());
            out.modes.push_back(finals[i]);
        }
    }
    out.partition = canonicalize(labels);
    return out;
}

Rational min_linkage_cost(const MetricInstance& m, int k) {
    Rational best = 0;
    bool have = false;
    for_each_partition(m.n, k, [&](const Partition& pi) {
        Rational diam = 0;
        for (int i = 0; i < m.n; ++i) {
            for (int j = i + 1; j < m.n; ++j) {
                if (pi.labels[i] == pi.labels[j]) {
                    diam = std::max(diam, m.dist(i, j));
                }
            }
        }
        if (!have || diam < best) {
            best = std::move(diam);
            have = true;
        }
    });
    return best;
}

GapRow make_gap_row(std::string label, std::uint64_t seed,
                    const Rational& heuristic_value,
                    const Rational& exact_optimum, bool minimize) {
    GapRow row;
    row.label = std::move(label);
    row.seed = seed;
    row.heuristic_value = heuristic_value;
    row.exact_optimum = exact_optimum;
    row.abs_gap = minimize ? heuristic_value - exact_optimum
                           : exact_optimum - heuristic_value;
    row.optimal = (row.abs_gap == 0);
    if (exact_optimum != 0) {
        row.rel_gap = format_rational(row.abs_gap / abs(exact_optimum));
    } else {
        row.rel_gap = row.optimal ? "0" : "inf";
    }
    return row;
}

}  // namespace ucp
