#pragma once

#include "ucp/decision.hpp"

namespace ucp {

// Uncapacitated facility location: opening cost per facility, service cost
// per (client, facility) pair.
struct UflInstance {
    std::vector<Rational> open_cost;                 // one per facility
    std::vector<std::vector<Rational>> service_cost; // [client][facility]

    int facilities() const { return static_cast<int>(open_cost.size()); }
    int clients() const { return static_cast<int>(service_cost.size()); }
};

UflInstance make_ufl(std::vector<Rational> open_cost,
                     std::vector<std::vector<Rational>> service_cost);

// Sparse linear feasibility: does A z = b admit a solution with at most t
// nonzero entries?
struct L0Instance {
    RationalMatrix a;
    std::vector<Rational> b;
    long long t = 0;
};

L0Instance make_l0(RationalMatrix a, std::vector<Rational> b, long long t);

// Source problems the reductions start from, with their decision parameters.
// A reduction's output carries its source so a witnessing partition can be
// translated back into a source certificate.
struct ColoringSource { GraphInstance g; int kappa; };
struct FdcsSource { GraphInstance g; int s; long long tau; };
struct BisectionSource { GraphInstance g; long long budget; };
struct CliqueCoverSource { GraphInstance g; int k; };
struct KmeansSource { EuclideanInstance e; int k; Rational budget; };
struct UflSource { UflInstance u; Rational budget; };
struct L0Source { L0Instance l; };
struct KmedianSource { MetricInstance m; int k; Rational budget; };

using SourceInstance =
    std::variant<ColoringSource, FdcsSource, BisectionSource, CliqueCoverSource,
                 KmeansSource, UflSource, L0Source, KmedianSource>;

struct ReductionOutput {
    UcpDecisionInstance instance;
    SourceInstance source;
    // For the subspace reduction: which columns of the original A survived
    // zero-column stripping (positions into the emitted matrix's first copy).
    std::vector<int> kept_columns;
};

// Source certificates produced by the back-maps.
struct ColoringCertificate { std::vector<int> colors; };
struct FdcsCertificate { std::vector<int> subset; };
struct BisectionCertificate { std::vector<int> side; };  // one side of the cut
struct CliqueCoverCertificate { std::vector<std::vector<int>> cliques; };
struct KmeansCertificate { Partition partition; };
struct UflCertificate {
    std::vector<int> open;        // opened facility indices
    std::vector<int> assignment;  // client -> opened facility
};
struct L0Certificate { std::vector<Rational> z; };
struct KmedianCertificate { Partition partition; };

using SourceCertificate =
    std::variant<ColoringCertificate, FdcsCertificate, BisectionCertificate,
                 CliqueCoverCertificate, KmeansCertificate, UflCertificate,
                 L0Certificate, KmedianCertificate>;

// ---- the reductions ----

// Graph kappa-colorability as conflict-utility maximization over the graph
// metric: k = kappa, threshold 0.
ReductionOutput reduce_coloring(const GraphInstance& g, int kappa);

// Fixed-density connected subgraph (size s, at least tau edges) as the
// density utility at scale 1 with degree threshold 2*tau/s, k = 2,
// threshold s. Throws DegenerateSize unless 1 <= s <= n-1 (the utility needs
// a nonempty second block; ask about s = n directly on the graph instead).
ReductionOutput reduce_fdcs(const GraphInstance& g, int s, long long tau);

// Minimum bisection with budget B as the balanced-cut utility at scale 1,
// threshold -B. Throws OddN for odd vertex counts.
ReductionOutput reduce_bisection(const GraphInstance& g, long long budget);

// Partition into k cliques as the diameter utility with max diameter 1,
// threshold 0.
ReductionOutput reduce_cliquecover(const GraphInstance& g, int k);

// Euclidean k-means decision (cost <= budget) as the microcluster utility
// over singleton clustering features, threshold -budget.
ReductionOutput reduce_kmeans_to_birch(const EuclideanInstance& e, int k,
                                       const Rational& budget);

// Facility location decision (cost <= budget) as exemplar assignment over
// F union D: s(j,j) = -open_cost(j) for facilities, s(client, facility) =
// -service_cost, 0 between distinct facilities (an unopened facility parks
// with an open one at no cost), and -M for every forbidden entry with
// M = 1 + sum |open| + sum |service|. Points 0..|F|-1 are the facilities.
// The block count is free; threshold -budget.
ReductionOutput reduce_ufl_to_ap(const UflInstance& u, const Rational& budget);

// Sparse recovery (A z = b, at most t nonzeros) as self-expressiveness of
// X' = [A A b] (zero columns of A stripped first, which changes no answer):
// does a zero-diagonal Z' with X' = X'Z' have at most 2n' + t nonzeros, where
// n' counts surviving columns. Throws ZeroTarget when b = 0.
ReductionOutput reduce_l0_to_ssc(const L0Instance& l);

// k-median decision (medoid cost <= budget) wrapped as medoid-utility
// maximization, threshold -budget. The map is the identity on instances.
ReductionOutput embed_kmedian(const MetricInstance& m, int k,
                              const Rational& budget);

// Translates a partition that achieves the instance's threshold back into a
// source certificate. The subspace reduction needs the certificate matrix the
// solver found rather than a partition; pass it as ssc_witness.
SourceCertificate apply_back_map(const ReductionOutput& r, const Partition& witness,
                                 const RationalMatrix* ssc_witness = nullptr);

}  // namespace ucp
