#pragma once

#include <cstdint>
#include <string>

#include "ucp/reductions.hpp"

namespace ucp {

struct SolveResult {
    Rational optimum;
    Partition argmax;  // lexicographically least among optimal partitions
    std::uint64_t evaluations = 0;
};

// Largest point count the brute-force solver accepts. Defaults to 12;
// the UCP_MAX_N environment variable overrides it (read once).
int enumeration_cap();

// Scores one partition under the instance's utility. Throws
// UnsupportedUtility when the utility does not fit the payload.
Rational evaluate_utility(const UcpDecisionInstance& inst, const Partition& pi);

// Exhaustive maximization over all partitions into inst.k blocks (every
// block count when k is free). Ties break to the lexicographically least
// canonical label vector, so the result does not depend on enumeration
// order. Throws InstanceTooLarge beyond the cap.
SolveResult solve_ucp(const UcpDecisionInstance& inst);

struct Decision {
    bool yes = false;
    Partition witness;                        // meaningful when yes
    std::optional<RationalMatrix> ssc_witness;  // subspace instances only
    SolveResult result;
};

// YES iff the optimum reaches the threshold; the witness is the solver's
// argmax partition.
Decision decide_ucp(const UcpDecisionInstance& inst);

// Minimal nonzero count over self-expressions of X (columns expressed by
// other columns of their own block, zero diagonal), or nullopt when some
// column has no such expression. Fills z_out with a witness achieving the
// minimum when provided. Columns are independent, so the minimum is the sum
// of per-column minima found by support enumeration with exact linear solves.
std::optional<long long> ssc_partition_cost(const RationalMatrix& x,
                                            const Partition& pi,
                                            RationalMatrix* z_out = nullptr);

// ---- independent source-problem oracles (exhaustive search) ----
// These deliberately avoid the partition enumerator and the utility
// evaluators, so reduction checks compare two different computations.

// Proper coloring with at most kappa colors, by backtracking.
bool oracle_coloring(const GraphInstance& g, int kappa,
                     std::vector<int>* colors_out = nullptr);

// Connected vertex set of size s inducing at least tau edges, by subset
// enumeration.
bool oracle_fdcs(const GraphInstance& g, int s, long long tau,
                 std::vector<int>* subset_out = nullptr);

// Balanced two-way split with cut at most budget, by half-set enumeration.
bool oracle_bisection(const GraphInstance& g, long long budget,
                      std::vector<int>* side_out = nullptr);

// Partition into at most k cliques (coloring of the complement graph).
bool oracle_cliquecover(const GraphInstance& g, int k,
                        std::vector<std::vector<int>>* cliques_out = nullptr);

// Exact minimal k-means cost, computed from per-block means directly.
Rational oracle_kmeans(const EuclideanInstance& e, int k);

// Exact minimal facility-location cost over nonempty open sets.
Rational oracle_ufl(const UflInstance& u, std::vector<int>* open_out = nullptr,
                    std::vector<int>* assign_out = nullptr);

// Does A z = b admit a solution with at most t nonzeros? Enumerates supports
// in increasing size and solves each restricted system exactly.
bool oracle_l0(const L0Instance& l, std::vector<Rational>* z_out = nullptr);

// Exact minimal k-median cost over k-partitions (direct block-medoid sums).
Rational oracle_kmedian(const MetricInstance& m, int k);

// Best consistent exemplar assignment with exactly k exemplars:
// max over |E| = k of sum_{e in E} s(e,e) + sum_{i not in E} max_e s(i,e).
Rational oracle_kmedoids(const SimilarityMatrix& s, int k);

// Same maximization over every nonempty exemplar set.
Rational oracle_best_assignment(const SimilarityMatrix& s);

// ---- certificate checking and reduction verification ----

// Does the certificate witness a YES for the source decision?
bool check_certificate(const SourceInstance& src, const SourceCertificate& cert);

struct VerifyReport {
    std::string kind;
    std::string params;
    bool source_yes = false;
    bool ucp_yes = false;
    bool agree = false;
    // On a UCP YES: the back-mapped certificate passed check_certificate.
    // True (vacuously) otherwise.
    bool certificate_ok = true;
    std::string witness;  // label vector of the UCP witness, empty on NO
};

// Runs the reduction named by the source, answers the source question with
// its oracle and the emitted instance with decide_ucp, compares, and on YES
// validates the back-mapped certificate.
VerifyReport verify_reduction(const SourceInstance& src);

}  // namespace ucp
