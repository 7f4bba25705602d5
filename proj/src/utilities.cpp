#include "ucp/utilities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ucp {

CFTriple make_cf(long long n, std::vector<Rational> ls, Rational ss) {
    if (n < 1) throw ParseError("clustering feature needs a positive count");
    Rational ls2 = 0;
    for (const Rational& v : ls) ls2 += v * v;
    if (ss * n < ls2) {
        throw ParseError("clustering feature violates SS >= |LS|^2/N");
    }
    return CFTriple{n, std::move(ls), std::move(ss)};
}

CFTriple singleton_cf(const std::vector<Rational>& point) {
    Rational ss = 0;
    for (const Rational& v : point) ss += v * v;
    return CFTriple{1, point, ss};
}

SimilarityMatrix SimilarityMatrix::zero(int n) {
    SimilarityMatrix s;
    s.n = n;
    s.s.assign(static_cast<std::size_t>(n) * n, Rational(0));
    return s;
}

namespace {

void require_partition_size(const MetricInstance& m, const Partition& pi) {
    if (pi.n() != m.n) {
        throw DimensionMismatch("partition over " + std::to_string(pi.n()) +
                                " points, metric has " + std::to_string(m.n));
    }
}

Rational penalty(int n) { return Rational(-static_cast<long long>(n) * n); }

// Is the eps-graph induced on `block` connected? Singletons count as connected.
bool induced_connected(const MetricInstance& m, const Rational& eps,
                       const std::vector<int>& block) {
    const int sz = static_cast<int>(block.size());
    std::vector<char> seen(sz, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < sz; ++b) {
            if (!seen[b] && m.dist(block[a], block[b]) <= eps) {
                seen[b] = 1;
                ++reached;
                stack.push_back(b);
            }
        }
    }
    return reached == sz;
}

long long induced_edge_count(const MetricInstance& m, const Rational& eps,
                             const std::vector<int>& block) {
    long long edges = 0;
    for (std::size_t a = 0; a < block.size(); ++a) {
        for (std::size_t b = a + 1; b < block.size(); ++b) {
            if (m.dist(block[a], block[b]) <= eps) ++edges;
        }
    }
    return edges;
}

long long cut_count(const MetricInstance& m, const Rational& eps,
                    const Partition& pi) {
    long long cut = 0;
    for (int i = 0; i < m.n; ++i) {
        for (int j = i + 1; j < m.n; ++j) {
            if (pi.labels[i] != pi.labels[j] && m.dist(i, j) <= eps) ++cut;
        }
    }
    return cut;
}

}  // namespace

bool dense_block(const MetricInstance& m, const std::vector<int>& block,
                 const Rational& eps, int s, const Rational& delta) {
    if (static_cast<int>(block.size()) != s) return false;
    if (!induced_connected(m, eps, block)) return false;
    const long long edges = induced_edge_count(m, eps, block);
    // average degree 2|E|/|C| >= delta
    return Rational(2 * edges) >= delta * Rational(static_cast<long long>(block.size()));
}

Rational conflict_utility(const MetricInstance& m, const Partition& pi) {
    require_partition_size(m, pi);
    long long conflicts = 0;
    for (int i = 0; i < m.n; ++i) {
        for (int j = i + 1; j < m.n; ++j) {
            if (pi.labels[i] == pi.labels[j] && m.dist(i, j) == 1) ++conflicts;
        }
    }
    return Rational(-conflicts);
}

Rational medoid_utility(const MetricInstance& m, const Partition& pi) {
    require_partition_size(m, pi);
    Rational total = 0;
    for (const auto& block : pi.blocks()) {
        bool first = true;
        Rational best = 0;
        for (int c : block) {
            Rational cost = 0;
            for (int i : block) cost += m.dist(i, c);
            if (first || cost < best) {
                best = cost;
                first = false;
            }
        }
        total += best;
    }
    return -total;
}

Rational kmeans_utility(const EuclideanInstance& e, const Partition& pi) {
    if (pi.n() != e.n) {
        throw DimensionMismatch("partition over " + std::to_string(pi.n()) +
                                " points, instance has " + std::to_string(e.n));
    }
    Rational total = 0;
    for (const auto& block : pi.blocks()) {
        Rational sq = 0;
        std::vector<Rational> sum(e.p, Rational(0));
        for (int i : block) {
            for (int c = 0; c < e.p; ++c) {
                sq += e.points[i][c] * e.points[i][c];
                sum[c] += e.points[i][c];
            }
        }
        Rational sum2 = 0;
        for (const Rational& v : sum) sum2 += v * v;
        total += sq - sum2 / Rational(static_cast<long long>(block.size()));
    }
    return -total;
}

Rational density_utility(const MetricInstance& m, const Partition& pi,
                         const Rational& eps, int s, const Rational& delta) {
    require_partition_size(m, pi);
    if (pi.k != 2) throw WrongK("density utility needs exactly 2 blocks");
    const auto blocks = pi.blocks();
    Rational best = penalty(m.n);
    for (const auto& block : blocks) {
        if (dense_block(m, block, eps, s, delta)) {
            const Rational score(static_cast<long long>(block.size()));
            if (score > best) best = score;
        }
    }
    return best;
}

Rational multiscale_density_utility(const MetricInstance& m, const Partition& pi,
                                    const Rational& eps_max, int s, long long tau) {
    require_partition_size(m, pi);
    if (pi.k != 2) throw WrongK("density utility needs exactly 2 blocks");
    // Candidate scales: distinct distances <= eps_max (the diagonal always
    // contributes 0) plus eps_max itself.
    std::vector<Rational> scales{eps_max};
    for (int i = 0; i < m.n; ++i) {
        for (int j = i; j < m.n; ++j) {
            if (m.dist(i, j) <= eps_max) scales.push_back(m.dist(i, j));
        }
    }
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    const Rational delta = Rational(2 * tau) / Rational(s);
    Rational best = penalty(m.n);
    for (const Rational& eps : scales) {
        const Rational v = density_utility(m, pi, eps, s, delta);
        if (v > best) best = v;
    }
    return best;
}

Rational bisection_utility(const MetricInstance& m, const Partition& pi,
                           const Rational& eps) {
    require_partition_size(m, pi);
    if (pi.k != 2) throw WrongK("bisection utility needs exactly 2 blocks");
    const auto blocks = pi.blocks();
    if (blocks[0].size() != blocks[1].size()) return penalty(m.n);
    return Rational(-cut_count(m, eps, pi));
}

Rational normalized_cut(const MetricInstance& m, const Partition& pi,
                        const Rational& eps) {
    require_partition_size(m, pi);
    if (pi.k != 2) throw WrongK("normalized cut needs exactly 2 blocks");
    const long long cut = cut_count(m, eps, pi);
    Rational result = 0;
    for (const auto& block : pi.blocks()) {
        long long vol = 0;
        for (int i : block) {
            for (int j = 0; j < m.n; ++j) {
                if (j != i && m.dist(i, j) <= eps) ++vol;
            }
        }
        if (vol == 0) {
            throw ZeroVolumeError("block starting at point " +
                                  std::to_string(block.front()) +
                                  " has zero volume");
        }
        result += Rational(cut) / Rational(vol);
    }
    return result;
}

Rational birch_utility(const std::vector<CFTriple>& cfs, const Partition& pi) {
    if (pi.n() != static_cast<int>(cfs.size())) {
        throw DimensionMismatch("partition over " + std::to_string(pi.n()) +
                                " microclusters, given " + std::to_string(cfs.size()));
    }
    const int p = cfs.empty() ? 0 : cfs.front().p();
    for (const CFTriple& cf : cfs) {
        if (cf.p() != p) {
            throw DimensionMismatch("clustering features mix dimensions " +
                                    std::to_string(p) + " and " +
                                    std::to_string(cf.p()));
        }
    }
    Rational total = 0;
    for (const auto& block : pi.blocks()) {
        long long count = 0;
        Rational ss = 0;
        std::vector<Rational> ls(p, Rational(0));
        for (int r : block) {
            count += cfs[r].n;
            ss += cfs[r].ss;
            for (int c = 0; c < p; ++c) ls[c] += cfs[r].ls[c];
        }
        Rational ls2 = 0;
        for (const Rational& v : ls) ls2 += v * v;
        total += ss - ls2 / Rational(count);
    }
    return -total;
}

Rational diameter_utility(const MetricInstance& m, const Partition& pi,
                          const Rational& delta) {
    require_partition_size(m, pi);
    for (int i = 0; i < m.n; ++i) {
        for (int j = i + 1; j < m.n; ++j) {
            if (pi.labels[i] == pi.labels[j] && m.dist(i, j) > delta) {
                return penalty(m.n);
            }
        }
    }
    return 0;
}

Rational exemplar_utility(const SimilarityMatrix& s, const Partition& pi) {
    if (pi.n() != s.n) {
        throw DimensionMismatch("partition over " + std::to_string(pi.n()) +
                                " points, similarity has " + std::to_string(s.n));
    }
    Rational total = 0;
    for (const auto& block : pi.blocks()) {
        bool first = true;
        Rational best = 0;
        for (int e : block) {
            Rational sum = 0;
            for (int i : block) sum += s.at(i, e);
            if (first || sum > best) {
                best = sum;
                first = false;
            }
        }
        total += best;
    }
    return total;
}

Rational assignment_objective(const SimilarityMatrix& s, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != s.n) {
        throw DimensionMismatch("assignment over " + std::to_string(a.size()) +
                                " points, similarity has " + std::to_string(s.n));
    }
    for (int i = 0; i < s.n; ++i) {
        if (a[i] < 0 || a[i] >= s.n) {
            throw ConsistencyViolation("assignment of point " + std::to_string(i) +
                                       " is out of range");
        }
        if (a[a[i]] != a[i]) {
            throw ConsistencyViolation("point " + std::to_string(i) +
                                       " assigns to " + std::to_string(a[i]) +
                                       ", which is not self-assigned");
        }
    }
    Rational total = 0;
    for (int i = 0; i < s.n; ++i) total += s.at(i, a[i]);
    return total;
}

Partition assignment_partition(const std::vector<int>& a) {
    return canonicalize(a);
}

double verify_gmm_certificate(const EuclideanInstance& e, const Partition& pi,
                              const GmmCertificate& theta) {
    const std::size_t k = theta.weights.size();
    if (k == 0 || theta.means.size() != k) {
        throw InvalidTheta("certificate needs matching weights and means");
    }
    Rational wsum = 0;
    for (const Rational& w : theta.weights) {
        if (w < 0) throw InvalidTheta("negative component weight");
        wsum += w;
    }
    if (wsum != 1) throw InvalidTheta("component weights must sum to 1");
    if (theta.sigma <= 0) throw InvalidTheta("sigma must be positive");
    for (const auto& mu : theta.means) {
        if (static_cast<int>(mu.size()) != e.p) {
            throw InvalidTheta("mean dimension does not match the points");
        }
    }
    if (pi.n() != e.n) {
        throw PartitionMismatch("partition over " + std::to_string(pi.n()) +
                                " points, instance has " + std::to_string(e.n));
    }

    const double sigma2 = to_double(theta.sigma * theta.sigma);
    std::vector<int> induced(e.n, 0);
    double ll = 0.0;
    for (int i = 0; i < e.n; ++i) {
        int best_a = -1;
        double best = 0.0;
        double lse_max = -std::numeric_limits<double>::infinity();
        std::vector<double> scores;
        scores.reserve(k);
        for (std::size_t a = 0; a < k; ++a) {
            double score;
            if (theta.weights[a] == 0) {
                score = -std::numeric_limits<double>::infinity();
            } else {
                Rational d2 = 0;
                for (int c = 0; c < e.p; ++c) {
                    const Rational diff = e.points[i][c] - theta.means[a][c];
                    d2 += diff * diff;
                }
                score = std::log(to_double(theta.weights[a])) -
                        to_double(d2) / (2.0 * sigma2);
            }
            scores.push_back(score);
            lse_max = std::max(lse_max, score);
            // Strict improvement beyond the relative tolerance wins; ties keep
            // the lowest component index.
            if (best_a < 0 ||
                score > best + 1e-12 * std::max(1.0, std::abs(best))) {
                best_a = static_cast<int>(a);
                best = score;
            }
        }
        induced[i] = best_a;
        double acc = 0.0;
        for (double sc : scores) acc += std::exp(sc - lse_max);
        ll += lse_max + std::log(acc) -
              0.5 * e.p * std::log(2.0 * std::acos(-1.0) * sigma2);
    }
    if (canonicalize(induced) != pi) {
        throw PartitionMismatch("certificate induces a different partition");
    }
    return ll;
}

bool verify_ssc_certificate(const RationalMatrix& x, const Partition& pi,
                            const SscCertificate& cert, long long t) {
    const int n = x.cols;
    const RationalMatrix& z = cert.z;
    if (z.rows != n || z.cols != n) {
        throw DimensionMismatch("certificate is " + std::to_string(z.rows) + "x" +
                                std::to_string(z.cols) + ", expected " +
                                std::to_string(n) + "x" + std::to_string(n));
    }
    if (pi.n() != n) {
        throw DimensionMismatch("partition over " + std::to_string(pi.n()) +
                                " points, data has " + std::to_string(n) +
                                " columns");
    }
    long long nonzeros = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (z.at(i, j) == 0) continue;
            if (i == j) return false;
            if (pi.labels[i] != pi.labels[j]) return false;
            ++nonzeros;
        }
    }
    if (nonzeros > t) return false;
    // X == X * Z, column by column.
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < x.rows; ++r) {
            Rational acc = 0;
            for (int i = 0; i < n; ++i) acc += x.at(r, i) * z.at(i, j);
            if (acc != x.at(r, j)) return false;
        }
    }
    return true;
}

}  // namespace ucp
