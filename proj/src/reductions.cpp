#include "ucp/reductions.hpp"

#include <algorithm>
#include <string>

namespace ucp {

UflInstance make_ufl(std::vector<Rational> open_cost,
                     std::vector<std::vector<Rational>> service_cost) {
    if (open_cost.empty()) throw ParseError("facility location needs facilities");
    if (service_cost.empty()) throw ParseError("facility location needs clients");
    for (const auto& row : service_cost) {
        if (row.size() != open_cost.size()) {
            throw DimensionMismatch("client has " + std::to_string(row.size()) +
                                    " service costs, expected " +
                                    std::to_string(open_cost.size()));
        }
    }
    return UflInstance{std::move(open_cost), std::move(service_cost)};
}

L0Instance make_l0(RationalMatrix a, std::vector<Rational> b, long long t) {
    if (a.rows < 1 || a.cols < 1) throw ParseError("system needs at least a 1x1 matrix");
    if (b.size() != static_cast<std::size_t>(a.rows)) {
        throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) +
                                " entries, matrix has " + std::to_string(a.rows) +
                                " rows");
    }
    if (t < 0) throw ParseError("sparsity budget must be nonnegative");
    return L0Instance{std::move(a), std::move(b), t};
}

namespace {

void require_k_range(int k, int n) {
    if (k < 1 || k > n) {
        throw InvalidK("block count " + std::to_string(k) + " out of range 1.." +
                       std::to_string(n));
    }
}

}  // namespace

ReductionOutput reduce_coloring(const GraphInstance& g, int kappa) {
    require_k_range(kappa, g.n);
    UcpDecisionInstance inst;
    inst.payload = graph_metric(g);
    inst.utility.kind = UtilityKind::conflict;
    inst.k = kappa;
    inst.threshold = 0;
    return ReductionOutput{std::move(inst), ColoringSource{g, kappa}, {}};
}

ReductionOutput reduce_fdcs(const GraphInstance& g, int s, long long tau) {
    if (s < 1 || s >= g.n) {
        throw DegenerateSize("subgraph size " + std::to_string(s) +
                             " out of range 1.." + std::to_string(g.n - 1));
    }
    UcpDecisionInstance inst;
    inst.payload = graph_metric(g);
    inst.utility.kind = UtilityKind::density;
    inst.utility.eps = 1;
    inst.utility.s = s;
    inst.utility.delta = Rational(2 * tau) / Rational(s);
    inst.k = 2;
    inst.threshold = s;
    return ReductionOutput{std::move(inst), FdcsSource{g, s, tau}, {}};
}

ReductionOutput reduce_bisection(const GraphInstance& g, long long budget) {
    if (g.n % 2 != 0) {
        throw OddN("bisection needs an even vertex count, got " +
                   std::to_string(g.n));
    }
    UcpDecisionInstance inst;
    inst.payload = graph_metric(g);
    inst.utility.kind = UtilityKind::bisection;
    inst.utility.eps = 1;
    inst.k = 2;
    inst.threshold = Rational(-budget);
    return ReductionOutput{std::move(inst), BisectionSource{g, budget}, {}};
}

ReductionOutput reduce_cliquecover(const GraphInstance& g, int k) {
    require_k_range(k, g.n);
    UcpDecisionInstance inst;
    inst.payload = graph_metric(g);
    inst.utility.kind = UtilityKind::diameter;
    inst.utility.diameter = 1;
    inst.k = k;
    inst.threshold = 0;
    return ReductionOutput{std::move(inst), CliqueCoverSource{g, k}, {}};
}

ReductionOutput reduce_kmeans_to_birch(const EuclideanInstance& e, int k,
                                       const Rational& budget) {
    require_k_range(k, e.n);
    std::vector<CFTriple> cfs;
    cfs.reserve(e.n);
    for (const auto& point : e.points) cfs.push_back(singleton_cf(point));
    UcpDecisionInstance inst;
    inst.payload = std::move(cfs);
    inst.utility.kind = UtilityKind::birch;
    inst.k = k;
    inst.threshold = -budget;
    return ReductionOutput{std::move(inst), KmeansSource{e, k, budget}, {}};
}

ReductionOutput reduce_ufl_to_ap(const UflInstance& u, const Rational& budget) {
    const int nf = u.facilities();
    const int nd = u.clients();
    const int n = nf + nd;
    Rational big_m = 1;
    for (const Rational& f : u.open_cost) big_m += abs(f);
    for (const auto& row : u.service_cost) {
        for (const Rational& c : row) big_m += abs(c);
    }
    // Facilities take points 0..nf-1, clients the rest. Facility diagonals
    // carry the opening costs; a client may only assign to a facility; a
    // facility that is not chosen as an exemplar parks with any open facility
    // at cost 0. Everything else is forbidden via -M.
    SimilarityMatrix s = SimilarityMatrix::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i < nf && j < nf) {
                s.at(i, j) = (i == j) ? -u.open_cost[i] : Rational(0);
            } else if (i >= nf && j < nf) {
                s.at(i, j) = -u.service_cost[i - nf][j];
            } else {
                s.at(i, j) = -big_m;
            }
        }
    }
    UcpDecisionInstance inst;
    inst.payload = std::move(s);
    inst.utility.kind = UtilityKind::exemplar;
    inst.k = std::nullopt;  // the exemplar count is what the problem decides
    inst.threshold = -budget;
    return ReductionOutput{std::move(inst), UflSource{u, budget}, {}};
}

ReductionOutput reduce_l0_to_ssc(const L0Instance& l) {
    bool b_zero = true;
    for (const Rational& v : l.b) {
        if (v != 0) {
            b_zero = false;
            break;
        }
    }
    if (b_zero) throw ZeroTarget("right-hand side is the zero vector");

    // Zero columns of A can never carry a nonzero coefficient in a minimal
    // solution, and they break the per-column accounting of the sparsity
    // bound, so drop them up front.
    std::vector<int> kept;
    for (int c = 0; c < l.a.cols; ++c) {
        bool zero = true;
        for (int r = 0; r < l.a.rows; ++r) {
            if (l.a.at(r, c) != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) kept.push_back(c);
    }
    const int np = static_cast<int>(kept.size());
    RationalMatrix x = RationalMatrix::zero(l.a.rows, 2 * np + 1);
    for (int idx = 0; idx < np; ++idx) {
        for (int r = 0; r < l.a.rows; ++r) {
            x.at(r, idx) = l.a.at(r, kept[idx]);
            x.at(r, np + idx) = l.a.at(r, kept[idx]);
        }
    }
    for (int r = 0; r < l.a.rows; ++r) x.at(r, 2 * np) = l.b[r];

    UcpDecisionInstance inst;
    inst.payload = std::move(x);
    inst.utility.kind = UtilityKind::subspace;
    inst.k = 1;
    if (np == 0) {
        // Every surviving column of A was zero, so the system is plainly
        // infeasible; a positive threshold can never be met.
        inst.threshold = 1;
    } else {
        // A sparsity budget beyond np is slack (a feasible system always
        // has a solution on at most np of the kept columns). Clamping keeps
        // the infeasibility penalty strictly below the threshold.
        const long long t_eff = std::min<long long>(l.t, np);
        inst.threshold = Rational(-(2 * np + t_eff));
    }
    return ReductionOutput{std::move(inst), L0Source{l}, std::move(kept)};
}

ReductionOutput embed_kmedian(const MetricInstance& m, int k,
                              const Rational& budget) {
    require_k_range(k, m.n);
    UcpDecisionInstance inst;
    inst.payload = m;
    inst.utility.kind = UtilityKind::medoid;
    inst.k = k;
    inst.threshold = -budget;
    return ReductionOutput{std::move(inst), KmedianSource{m, k, budget}, {}};
}

namespace {

// Best exemplar of a block under S (ties to the lowest point index).
int block_exemplar(const SimilarityMatrix& s, const std::vector<int>& block) {
    int best = -1;
    Rational best_sum = 0;
    for (int e : block) {
        Rational sum = 0;
        for (int i : block) sum += s.at(i, e);
        if (best < 0 || sum > best_sum) {
            best = e;
            best_sum = sum;
        }
    }
    return best;
}

UflCertificate ufl_back_map(const UflSource& src, const SimilarityMatrix& s,
                            const Partition& witness) {
    const int nf = src.u.facilities();
    const int nd = src.u.clients();
    UflCertificate cert;
    cert.assignment.assign(nd, -1);
    std::vector<char> opened(nf, 0);
    bool clean = true;
    for (const auto& block : witness.blocks()) {
        const int e = block_exemplar(s, block);
        if (e >= nf) {
            // A client ended up as an exemplar; only possible when the budget
            // dwarfs the big-M penalty. Handled by the fallback below.
            clean = false;
            break;
        }
        bool serves_client = false;
        for (int i : block) {
            if (i >= nf) {
                cert.assignment[i - nf] = e;
                serves_client = true;
            }
        }
        if (serves_client) opened[e] = 1;
    }
    if (clean) {
        for (int j = 0; j < nf; ++j) {
            if (opened[j]) cert.open.push_back(j);
        }
        return cert;
    }
    // Fallback: open everything, serve every client as cheaply as possible.
    // Reaching here means the threshold admits forbidden entries, so the
    // budget exceeds the total cost of this solution.
    cert.open.clear();
    for (int j = 0; j < nf; ++j) cert.open.push_back(j);
    for (int i = 0; i < nd; ++i) {
        int best = 0;
        for (int j = 1; j < nf; ++j) {
            if (src.u.service_cost[i][j] < src.u.service_cost[i][best]) best = j;
        }
        cert.assignment[i] = best;
    }
    return cert;
}

}  // namespace

SourceCertificate apply_back_map(const ReductionOutput& r, const Partition& witness,
                                 const RationalMatrix* ssc_witness) {
    if (const auto* src = std::get_if<ColoringSource>(&r.source)) {
        (void)src;
        return ColoringCertificate{witness.labels};
    }
    if (const auto* src = std::get_if<FdcsSource>(&r.source)) {
        const auto& m = std::get<MetricInstance>(r.instance.payload);
        for (const auto& block : witness.blocks()) {
            if (dense_block(m, block, r.instance.utility.eps, src->s,
                            r.instance.utility.delta)) {
                return FdcsCertificate{block};
            }
        }
        throw UcpError("witness has no qualifying dense block");
    }
    if (std::holds_alternative<BisectionSource>(r.source)) {
        return BisectionCertificate{witness.blocks().front()};
    }
    if (std::holds_alternative<CliqueCoverSource>(r.source)) {
        return CliqueCoverCertificate{witness.blocks()};
    }
    if (std::holds_alternative<KmeansSource>(r.source)) {
        return KmeansCertificate{witness};
    }
    if (const auto* src = std::get_if<UflSource>(&r.source)) {
        const auto& s = std::get<SimilarityMatrix>(r.instance.payload);
        return ufl_back_map(*src, s, witness);
    }
    if (const auto* src = std::get_if<L0Source>(&r.source)) {
        if (ssc_witness == nullptr) {
            throw UcpError("subspace back-map needs the certificate matrix");
        }
        const int np = static_cast<int>(r.kept_columns.size());
        const int last = 2 * np;  // column index of b in the emitted matrix
        std::vector<Rational> z(src->l.a.cols, Rational(0));
        for (int i = 0; i < np; ++i) {
            z[r.kept_columns[i]] =
                ssc_witness->at(i, last) + ssc_witness->at(np + i, last);
        }
        return L0Certificate{std::move(z)};
    }
    if (std::holds_alternative<KmedianSource>(r.source)) {
        return KmedianCertificate{witness};
    }
    throw UcpError("unknown reduction source");
}

}  // namespace ucp
