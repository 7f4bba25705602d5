#include "ucp/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace ucp {

int enumeration_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("UCP_MAX_N")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 20) {
                return static_cast<int>(v);
            }
        }
        return 12;
    }();
    return cap;
}

namespace {

Rational big_penalty(int n) {
    // -n^3, the infeasibility convention for self-expression.
    const long long nn = n;
    return Rational(-nn * nn * nn);
}

// All size-r subsets of {0..m-1}, each passed as a sorted index vector.
// Returns true when the visitor stopped the scan early.
bool for_each_combination(int m, int r,
                          const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    if (r > m) return false;
    while (true) {
        if (visit(idx)) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Rational evaluate_utility(const UcpDecisionInstance& inst, const Partition& pi) {
    const UtilitySpec& u = inst.utility;
    switch (u.kind) {
        case UtilityKind::conflict:
        case UtilityKind::medoid:
        case UtilityKind::density:
        case UtilityKind::multiscale_density:
        case UtilityKind::bisection:
        case UtilityKind::diameter: {
            const auto* m = std::get_if<MetricInstance>(&inst.payload);
            if (!m) throw UnsupportedUtility("utility needs a metric payload");
            switch (u.kind) {
                case UtilityKind::conflict: return conflict_utility(*m, pi);
                case UtilityKind::medoid: return medoid_utility(*m, pi);
                case UtilityKind::density:
                    return density_utility(*m, pi, u.eps, u.s, u.delta);
                case UtilityKind::multiscale_density:
                    return multiscale_density_utility(*m, pi, u.eps_max, u.s, u.tau);
                case UtilityKind::bisection:
                    return bisection_utility(*m, pi, u.eps);
                default: return diameter_utility(*m, pi, u.diameter);
            }
        }
        case UtilityKind::kmeans: {
            const auto* e = std::get_if<EuclideanInstance>(&inst.payload);
            if (!e) throw UnsupportedUtility("utility needs a point payload");
            return kmeans_utility(*e, pi);
        }
        case UtilityKind::birch: {
            const auto* cfs = std::get_if<std::vector<CFTriple>>(&inst.payload);
            if (!cfs) throw UnsupportedUtility("utility needs microclusters");
            return birch_utility(*cfs, pi);
        }
        case UtilityKind::exemplar: {
            const auto* s = std::get_if<SimilarityMatrix>(&inst.payload);
            if (!s) throw UnsupportedUtility("utility needs similarities");
            return exemplar_utility(*s, pi);
        }
        case UtilityKind::subspace: {
            const auto* x = std::get_if<RationalMatrix>(&inst.payload);
            if (!x) throw UnsupportedUtility("utility needs a data matrix");
            const auto cost = ssc_partition_cost(*x, pi);
            if (!cost) return big_penalty(x->cols);
            return Rational(-*cost);
        }
    }
    throw UnsupportedUtility("unknown utility kind");
}

SolveResult solve_ucp(const UcpDecisionInstance& inst) {
    const int n = inst.n();
    if (n > enumeration_cap()) {
        throw InstanceTooLarge("instance has " + std::to_string(n) +
                               " points, enumeration cap is " +
                               std::to_string(enumeration_cap()));
    }
    int k_lo, k_hi;
    if (inst.k) {
        if (*inst.k < 1 || *inst.k > n) {
            throw InvalidK("block count " + std::to_string(*inst.k) +
                           " out of range 1.." + std::to_string(n));
        }
        k_lo = k_hi = *inst.k;
    } else {
        k_lo = 1;
        k_hi = n;
    }
    SolveResult best;
    bool have = false;
    for (int k = k_lo; k <= k_hi; ++k) {
        for_each_partition(n, k, [&](const Partition& pi) {
            ++best.evaluations;
            Rational value = evaluate_utility(inst, pi);
            if (!have || value > best.optimum ||
                (value == best.optimum && pi.labels < best.argmax.labels)) {
                best.optimum = std::move(value);
                best.argmax = pi;
                have = true;
            }
        });
    }
    return best;
}

Decision decide_ucp(const UcpDecisionInstance& inst) {
    Decision d;
    d.result = solve_ucp(inst);
    d.yes = d.result.optimum >= inst.threshold;
    if (d.yes) {
        d.witness = d.result.argmax;
        if (inst.utility.kind == UtilityKind::subspace) {
            const auto& x = std::get<RationalMatrix>(inst.payload);
            RationalMatrix z;
            if (ssc_partition_cost(x, d.witness, &z)) d.ssc_witness = std::move(z);
        }
    }
    return d;
}

std::optional<long long> ssc_partition_cost(const RationalMatrix& x,
                                            const Partition& pi,
                                            RationalMatrix* z_out) {
    const int n = x.cols;
    if (pi.n() != n) {
        throw DimensionMismatch("partition over " + std::to_string(pi.n()) +
                                " points, data has " + std::to_string(n) +
                                " columns");
    }
    if (z_out) *z_out = RationalMatrix::zero(n, n);
    long long total = 0;
    for (int j = 0; j < n; ++j) {
        std::vector<int> allowed;
        for (int i = 0; i < n; ++i) {
            if (i != j && pi.labels[i] == pi.labels[j]) allowed.push_back(i);
        }
        if (allowed.size() > 16) {
            throw InstanceTooLarge("self-expression search over " +
                                   std::to_string(allowed.size()) + " columns");
        }
        const std::vector<Rational> target = x.col(j);
        bool found = false;
        for (int r = 0; r <= static_cast<int>(allowed.size()) && !found; ++r) {
            for_each_combination(
                static_cast<int>(allowed.size()), r,
                [&](const std::vector<int>& pick) {
                    RationalMatrix sub = RationalMatrix::zero(x.rows, r);
                    for (int c = 0; c < r; ++c) {
                        for (int row = 0; row < x.rows; ++row) {
                            sub.at(row, c) = x.at(row, allowed[pick[c]]);
                        }
                    }
                    const auto sol = solve_linear(sub, target);
                    if (!sol) return false;
                    total += r;
                    if (z_out) {
                        for (int c = 0; c < r; ++c) {
                            z_out->at(allowed[pick[c]], j) = (*sol)[c];
                        }
                    }
                    found = true;
                    return true;
                });
        }
        if (!found) return std::nullopt;
    }
    return total;
}

// ---- source oracles ----

namespace {

void require_graph_cap(const GraphInstance& g) {
    if (g.n > 8) {
        throw InstanceTooLarge("graph oracle cap is 8 vertices, got " +
                               std::to_string(g.n));
    }
}

long long subset_cut(const std::vector<char>& adj, int n,
                     const std::vector<char>& in_side) {
    long long cut = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adj[static_cast<std::size_t>(i) * n + j] &&
                in_side[i] != in_side[j]) {
                ++cut;
            }
        }
    }
    return cut;
}

bool subset_connected(const std::vector<char>& adj, int n,
                      const std::vector<int>& subset) {
    const int sz = static_cast<int>(subset.size());
    if (sz == 0) return false;
    std::vector<char> seen(sz, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < sz; ++b) {
            if (!seen[b] &&
                adj[static_cast<std::size_t>(subset[a]) * n + subset[b]]) {
                seen[b] = 1;
                ++reached;
                stack.push_back(b);
            }
        }
    }
    return reached == sz;
}

long long subset_edges(const std::vector<char>& adj, int n,
                       const std::vector<int>& subset) {
    long long edges = 0;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
            if (adj[static_cast<std::size_t>(subset[a]) * n + subset[b]]) ++edges;
        }
    }
    return edges;
}

}  // namespace

bool oracle_coloring(const GraphInstance& g, int kappa,
                     std::vector<int>* colors_out) {
    require_graph_cap(g);
    if (kappa < 1) return false;
    const auto adj = g.adjacency();
    std::vector<int> colors(g.n, -1);
    // Backtracking; vertex i may only open color min(i, kappa-1) at most,
    // which removes color-permutation symmetry.
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        const int hi = std::min(v, kappa - 1);
        for (int c = 0; c <= hi; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (adj[static_cast<std::size_t>(u) * g.n + v] && colors[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                colors[v] = c;
                if (self(self, v + 1)) return true;
                colors[v] = -1;
            }
        }
        return false;
    };
    if (!rec(rec, 0)) return false;
    if (colors_out) *colors_out = colors;
    return true;
}

bool oracle_fdcs(const GraphInstance& g, int s, long long tau,
                 std::vector<int>* subset_out) {
    require_graph_cap(g);
    if (s < 1 || s > g.n) return false;
    const auto adj = g.adjacency();
    std::vector<int> found;
    const bool yes = for_each_combination(g.n, s, [&](const std::vector<int>& pick) {
        if (!subset_connected(adj, g.n, pick)) return false;
        if (subset_edges(adj, g.n, pick) < tau) return false;
        found = pick;
        return true;
    });
    if (yes && subset_out) *subset_out = found;
    return yes;
}

bool oracle_bisection(const GraphInstance& g, long long budget,
                      std::vector<int>* side_out) {
    require_graph_cap(g);
    if (g.n % 2 != 0) {
        throw OddN("bisection oracle needs an even vertex count");
    }
    const auto adj = g.adjacency();
    const int half = g.n / 2;
    std::vector<int> found;
    // Fix vertex 0 on the first side; the two sides are symmetric.
    const bool yes =
        for_each_combination(g.n - 1, half - 1, [&](const std::vector<int>& pick) {
            std::vector<char> in_side(g.n, 0);
            in_side[0] = 1;
            for (int v : pick) in_side[v + 1] = 1;
            if (subset_cut(adj, g.n, in_side) > budget) return false;
            found.clear();
            for (int v = 0; v < g.n; ++v) {
                if (in_side[v]) found.push_back(v);
            }
            return true;
        });
    if (yes && side_out) *side_out = found;
    return yes;
}

bool oracle_cliquecover(const GraphInstance& g, int k,
                        std::vector<std::vector<int>>* cliques_out) {
    require_graph_cap(g);
    // Covering by k cliques is coloring the complement with k colors.
    std::vector<std::pair<int, int>> comp_edges;
    const auto adj = g.adjacency();
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            if (!adj[static_cast<std::size_t>(i) * g.n + j]) {
                comp_edges.emplace_back(i, j);
            }
        }
    }
    std::vector<int> colors;
    if (!oracle_coloring(make_graph(g.n, std::move(comp_edges)), k, &colors)) {
        return false;
    }
    if (cliques_out) {
        cliques_out->clear();
        const int used = 1 + *std::max_element(colors.begin(), colors.end());
        cliques_out->resize(used);
        for (int v = 0; v < g.n; ++v) (*cliques_out)[colors[v]].push_back(v);
    }
    return true;
}

Rational oracle_kmeans(const EuclideanInstance& e, int k) {
    if (e.n > enumeration_cap()) {
        throw InstanceTooLarge("point set beyond the enumeration cap");
    }
    Rational best = 0;
    bool have = false;
    for_each_partition(e.n, k, [&](const Partition& pi) {
        Rational cost = 0;
        for (const auto& block : pi.blocks()) {
            // Block mean, then summed squared deviations, all rational.
            std::vector<Rational> mean(e.p, Rational(0));
            for (int i : block) {
                for (int c = 0; c < e.p; ++c) mean[c] += e.points[i][c];
            }
            const Rational size(static_cast<long long>(block.size()));
            for (auto& v : mean) v /= size;
            for (int i : block) {
                for (int c = 0; c < e.p; ++c) {
                    const Rational diff = e.points[i][c] - mean[c];
                    cost += diff * diff;
                }
            }
        }
        if (!have || cost < best) {
            best = std::move(cost);
            have = true;
        }
    });
    return best;
}

Rational oracle_ufl(const UflInstance& u, std::vector<int>* open_out,
                    std::vector<int>* assign_out) {
    const int nf = u.facilities();
    const int nd = u.clients();
    if (nf > 4 || nd > 4) {
        throw InstanceTooLarge("facility-location oracle cap is 4 facilities "
                               "and 4 clients");
    }
    Rational best = 0;
    bool have = false;
    std::vector<int> best_open, best_assign;
    for (unsigned mask = 1; mask < (1u << nf); ++mask) {
        Rational cost = 0;
        for (int j = 0; j < nf; ++j) {
            if (mask & (1u << j)) cost += u.open_cost[j];
        }
        std::vector<int> assign(nd, -1);
        for (int i = 0; i < nd; ++i) {
            int pick = -1;
            for (int j = 0; j < nf; ++j) {
                if (!(mask & (1u << j))) continue;
                if (pick < 0 || u.service_cost[i][j] < u.service_cost[i][pick]) {
                    pick = j;
                }
            }
            assign[i] = pick;
            cost += u.service_cost[i][pick];
        }
        if (!have || cost < best) {
            best = std::move(cost);
            have = true;
            best_open.clear();
            for (int j = 0; j < nf; ++j) {
                if (mask & (1u << j)) best_open.push_back(j);
            }
            best_assign = std::move(assign);
        }
    }
    if (open_out) *open_out = best_open;
    if (assign_out) *assign_out = best_assign;
    return best;
}

bool oracle_l0(const L0Instance& l, std::vector<Rational>* z_out) {
    if (l.a.cols > 3) {
        throw InstanceTooLarge("sparse-recovery oracle cap is 3 columns");
    }
    const int n = l.a.cols;
    const int tmax = static_cast<int>(std::min<long long>(l.t, n));
    for (int r = 0; r <= tmax; ++r) {
        const bool yes = for_each_combination(n, r, [&](const std::vector<int>& pick) {
            RationalMatrix sub = RationalMatrix::zero(l.a.rows, r);
            for (int c = 0; c < r; ++c) {
                for (int row = 0; row < l.a.rows; ++row) {
                    sub.at(row, c) = l.a.at(row, pick[c]);
                }
            }
            const auto sol = solve_linear(sub, l.b);
            if (!sol) return false;
            if (z_out) {
                z_out->assign(n, Rational(0));
                for (int c = 0; c < r; ++c) (*z_out)[pick[c]] = (*sol)[c];
            }
            return true;
        });
        if (yes) return true;
    }
    return false;
}

Rational oracle_kmedian(const MetricInstance& m, int k) {
    if (m.n > enumeration_cap()) {
        throw InstanceTooLarge("metric beyond the enumeration cap");
    }
    Rational best = 0;
    bool have = false;
    for_each_partition(m.n, k, [&](const Partition& pi) {
        Rational cost = 0;
        for (const auto& block : pi.blocks()) {
            bool first = true;
            Rational block_best = 0;
            for (int c : block) {
                Rational sum = 0;
                for (int i : block) sum += m.dist(i, c);
                if (first || sum < block_best) {
                    block_best = std::move(sum);
                    first = false;
                }
            }
            cost += block_best;
        }
        if (!have || cost < best) {
            best = std::move(cost);
            have = true;
        }
    });
    return best;
}

namespace {

// Value of the best consistent assignment with exemplar set E: exemplars
// self-assign, everyone else picks their best exemplar.
Rational exemplar_set_value(const SimilarityMatrix& s, const std::vector<int>& e,
                            const std::vector<char>& in_e) {
    Rational total = 0;
    for (int i = 0; i < s.n; ++i) {
        if (in_e[i]) {
            total += s.at(i, i);
            continue;
        }
        bool first = true;
        Rational best = 0;
        for (int ex : e) {
            if (first || s.at(i, ex) > best) {
                best = s.at(i, ex);
                first = false;
            }
        }
        total += best;
    }
    return total;
}

}  // namespace

Rational oracle_kmedoids(const SimilarityMatrix& s, int k) {
    if (s.n > enumeration_cap()) {
        throw InstanceTooLarge("similarity beyond the enumeration cap");
    }
    if (k < 1 || k > s.n) throw InvalidK("exemplar count out of range");
    Rational best = 0;
    bool have = false;
    for_each_combination(s.n, k, [&](const std::vector<int>& pick) {
        std::vector<char> in_e(s.n, 0);
        for (int v : pick) in_e[v] = 1;
        const Rational value = exemplar_set_value(s, pick, in_e);
        if (!have || value > best) {
            best = value;
            have = true;
        }
        return false;
    });
    return best;
}

Rational oracle_best_assignment(const SimilarityMatrix& s) {
    if (s.n > 20) {
        throw InstanceTooLarge("similarity beyond the subset-enumeration cap");
    }
    Rational best = 0;
    bool have = false;
    for (unsigned mask = 1; mask < (1u << s.n); ++mask) {
        std::vector<int> e;
        std::vector<char> in_e(s.n, 0);
        for (int v = 0; v < s.n; ++v) {
            if (mask & (1u << v)) {
                e.push_back(v);
                in_e[v] = 1;
            }
        }
        const Rational value = exemplar_set_value(s, e, in_e);
        if (!have || value > best) {
            best = value;
            have = true;
        }
    }
    return best;
}

// ---- certificate checking ----

namespace {

bool is_partition_of_all(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<char> seen(n, 0);
    for (const auto& block : blocks) {
        for (int v : block) {
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[v]) return false;
    }
    return true;
}

Rational direct_kmeans_cost(const EuclideanInstance& e, const Partition& pi) {
    Rational cost = 0;
    for (const auto& block : pi.blocks()) {
        std::vector<Rational> mean(e.p, Rational(0));
        for (int i : block) {
            for (int c = 0; c < e.p; ++c) mean[c] += e.points[i][c];
        }
        const Rational size(static_cast<long long>(block.size()));
        for (auto& v : mean) v /= size;
        for (int i : block) {
            for (int c = 0; c < e.p; ++c) {
                const Rational diff = e.points[i][c] - mean[c];
                cost += diff * diff;
            }
        }
    }
    return cost;
}

}  // namespace

bool check_certificate(const SourceInstance& src, const SourceCertificate& cert) {
    if (const auto* s = std::get_if<ColoringSource>(&src)) {
        const auto* c = std::get_if<ColoringCertificate>(&cert);
        if (!c || static_cast<int>(c->colors.size()) != s->g.n) return false;
        int used = 0;
        for (int col : c->colors) {
            if (col < 0) return false;
            used = std::max(used, col + 1);
        }
        if (used > s->kappa) return false;
        for (auto [u, v] : s->g.edges) {
            if (c->colors[u] == c->colors[v]) return false;
        }
        return true;
    }
    if (const auto* s = std::get_if<FdcsSource>(&src)) {
        const auto* c = std::get_if<FdcsCertificate>(&cert);
        if (!c || static_cast<int>(c->subset.size()) != s->s) return false;
        std::vector<int> sorted = c->subset;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return false;
        }
        if (sorted.front() < 0 || sorted.back() >= s->g.n) return false;
        const auto adj = s->g.adjacency();
        return subset_connected(adj, s->g.n, sorted) &&
               subset_edges(adj, s->g.n, sorted) >= s->tau;
    }
    if (const auto* s = std::get_if<BisectionSource>(&src)) {
        const auto* c = std::get_if<BisectionCertificate>(&cert);
        if (!c || static_cast<int>(c->side.size()) != s->g.n / 2) return false;
        std::vector<char> in_side(s->g.n, 0);
        for (int v : c->side) {
            if (v < 0 || v >= s->g.n || in_side[v]) return false;
            in_side[v] = 1;
        }
        return subset_cut(s->g.adjacency(), s->g.n, in_side) <= s->budget;
    }
    if (const auto* s = std::get_if<CliqueCoverSource>(&src)) {
        const auto* c = std::get_if<CliqueCoverCertificate>(&cert);
        if (!c || static_cast<int>(c->cliques.size()) > s->k) return false;
        if (!is_partition_of_all(c->cliques, s->g.n)) return false;
        const auto adj = s->g.adjacency();
        for (const auto& clique : c->cliques) {
            for (std::size_t a = 0; a < clique.size(); ++a) {
                for (std::size_t b = a + 1; b < clique.size(); ++b) {
                    if (!adj[static_cast<std::size_t>(clique[a]) * s->g.n +
                             clique[b]]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    if (const auto* s = std::get_if<KmeansSource>(&src)) {
        const auto* c = std::get_if<KmeansCertificate>(&cert);
        if (!c || c->partition.n() != s->e.n || c->partition.k != s->k) return false;
        return direct_kmeans_cost(s->e, c->partition) <= s->budget;
    }
    if (const auto* s = std::get_if<UflSource>(&src)) {
        const auto* c = std::get_if<UflCertificate>(&cert);
        if (!c || c->open.empty()) return false;
        const int nf = s->u.facilities();
        const int nd = s->u.clients();
        std::vector<char> open(nf, 0);
        Rational cost = 0;
        for (int j : c->open) {
            if (j < 0 || j >= nf || open[j]) return false;
            open[j] = 1;
            cost += s->u.open_cost[j];
        }
        if (static_cast<int>(c->assignment.size()) != nd) return false;
        for (int i = 0; i < nd; ++i) {
            const int j = c->assignment[i];
            if (j < 0 || j >= nf || !open[j]) return false;
            cost += s->u.service_cost[i][j];
        }
        return cost <= s->budget;
    }
    if (const auto* s = std::get_if<L0Source>(&src)) {
        const auto* c = std::get_if<L0Certificate>(&cert);
        if (!c || static_cast<int>(c->z.size()) != s->l.a.cols) return false;
        long long nonzeros = 0;
        for (const Rational& v : c->z) {
            if (v != 0) ++nonzeros;
        }
        if (nonzeros > s->l.t) return false;
        for (int r = 0; r < s->l.a.rows; ++r) {
            Rational acc = 0;
            for (int col = 0; col < s->l.a.cols; ++col) {
                acc += s->l.a.at(r, col) * c->z[col];
            }
            if (acc != s->l.b[r]) return false;
        }
        return true;
    }
    if (const auto* s = std::get_if<KmedianSource>(&src)) {
        const auto* c = std::get_if<KmedianCertificate>(&cert);
        if (!c || c->partition.n() != s->m.n || c->partition.k != s->k) return false;
        Rational cost = 0;
        for (const auto& block : c->partition.blocks()) {
            bool first = true;
            Rational best = 0;
            for (int center : block) {
                Rational sum = 0;
                for (int i : block) sum += s->m.dist(i, center);
                if (first || sum < best) {
                    best = std::move(sum);
                    first = false;
                }
            }
            cost += best;
        }
        return cost <= s->budget;
    }
    return false;
}

// ---- reduction verification ----

namespace {

std::string labels_string(const Partition& pi) {
    std::string out;
    for (std::size_t i = 0; i < pi.labels.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(pi.labels[i]);
    }
    return out;
}

struct SourceRun {
    std::string kind;
    std::string params;
    bool source_yes = false;
    ReductionOutput reduction;
};

SourceRun run_source(const SourceInstance& src) {
    SourceRun run;
    std::ostringstream params;
    if (const auto* s = std::get_if<ColoringSource>(&src)) {
        run.kind = "coloring";
        params << "n=" << s->g.n << ";m=" << s->g.m() << ";kappa=" << s->kappa;
        run.source_yes = oracle_coloring(s->g, s->kappa);
        run.reduction = reduce_coloring(s->g, s->kappa);
    } else if (const auto* s = std::get_if<FdcsSource>(&src)) {
        run.kind = "fdcs";
        params << "n=" << s->g.n << ";m=" << s->g.m() << ";s=" << s->s
               << ";tau=" << s->tau;
        run.source_yes = oracle_fdcs(s->g, s->s, s->tau);
        run.reduction = reduce_fdcs(s->g, s->s, s->tau);
    } else if (const auto* s = std::get_if<BisectionSource>(&src)) {
        run.kind = "bisection";
        params << "n=" << s->g.n << ";m=" << s->g.m() << ";B=" << s->budget;
        run.source_yes = oracle_bisection(s->g, s->budget);
        run.reduction = reduce_bisection(s->g, s->budget);
    } else if (const auto* s = std::get_if<CliqueCoverSource>(&src)) {
        run.kind = "cliquecover";
        params << "n=" << s->g.n << ";m=" << s->g.m() << ";k=" << s->k;
        run.source_yes = oracle_cliquecover(s->g, s->k);
        run.reduction = reduce_cliquecover(s->g, s->k);
    } else if (const auto* s = std::get_if<KmeansSource>(&src)) {
        run.kind = "kmeans-birch";
        params << "n=" << s->e.n << ";p=" << s->e.p << ";k=" << s->k
               << ";B=" << format_rational(s->budget);
        run.source_yes = oracle_kmeans(s->e, s->k) <= s->budget;
        run.reduction = reduce_kmeans_to_birch(s->e, s->k, s->budget);
    } else if (const auto* s = std::get_if<UflSource>(&src)) {
        run.kind = "ufl-ap";
        params << "nf=" << s->u.facilities() << ";nd=" << s->u.clients()
               << ";B=" << format_rational(s->budget);
        run.source_yes = oracle_ufl(s->u) <= s->budget;
        run.reduction = reduce_ufl_to_ap(s->u, s->budget);
    } else if (const auto* s = std::get_if<L0Source>(&src)) {
        run.kind = "l0-ssc";
        params << "rows=" << s->l.a.rows << ";cols=" << s->l.a.cols
               << ";t=" << s->l.t;
        run.source_yes = oracle_l0(s->l);
        run.reduction = reduce_l0_to_ssc(s->l);
    } else if (const auto* s = std::get_if<KmedianSource>(&src)) {
        run.kind = "kmedian";
        params << "n=" << s->m.n << ";k=" << s->k
               << ";B=" << format_rational(s->budget);
        run.source_yes = oracle_kmedian(s->m, s->k) <= s->budget;
        run.reduction = embed_kmedian(s->m, s->k, s->budget);
    } else {
        throw UcpError("unknown source instance");
    }
    run.params = params.str();
    return run;
}

}  // namespace

VerifyReport verify_reduction(const SourceInstance& src) {
    SourceRun run = run_source(src);
    VerifyReport rep;
    rep.kind = run.kind;
    rep.params = run.params;
    rep.source_yes = run.source_yes;
    const Decision d = decide_ucp(run.reduction.instance);
    rep.ucp_yes = d.yes;
    rep.agree = (rep.source_yes == rep.ucp_yes);
    if (d.yes) {
        rep.witness = labels_string(d.witness);
        const SourceCertificate cert = apply_back_map(
            run.reduction, d.witness,
            d.ssc_witness ? &*d.ssc_witness : nullptr);
        rep.certificate_ok = check_certificate(src, cert);
    }
    return rep;
}

}  // namespace ucp
