#pragma once

#include <vector>

#include "ucp/instance.hpp"
#include "ucp/linalg.hpp"
#include "ucp/partition.hpp"

namespace ucp {

// Microcluster summary (count, linear sum, squared sum). Enough to evaluate
// sum-of-squares costs of any grouping of microclusters without raw points.
struct CFTriple {
    long long n = 0;
    std::vector<Rational> ls;
    Rational ss;

    int p() const { return static_cast<int>(ls.size()); }
};

// Validates n >= 1 and ss >= |ls|^2 / n (the only vectors a real point set can
// produce); throws ParseError.
CFTriple make_cf(long long n, std::vector<Rational> ls, Rational ss);

// The triple of a single point.
CFTriple singleton_cf(const std::vector<Rational>& point);

// Explicit similarity matrix s(i, j); not required to be symmetric.
struct SimilarityMatrix {
    int n = 0;
    std::vector<Rational> s;  // n*n, row-major

    const Rational& at(int i, int j) const { return s[static_cast<std::size_t>(i) * n + j]; }
    Rational& at(int i, int j) { return s[static_cast<std::size_t>(i) * n + j]; }

    static SimilarityMatrix zero(int n);
};

// Spherical mixture certificate: component weights, means, common deviation.
struct GmmCertificate {
    std::vector<Rational> weights;
    std::vector<std::vector<Rational>> means;
    Rational sigma;
};

// Self-expression certificate for subspace clustering: column j of X is
// claimed to equal X * (column j of Z).
struct SscCertificate {
    RationalMatrix z;
};

// ---- partition utilities ----
// All scores are "larger is better"; infeasible partitions get the penalty
// -n^2 (or -n^3 for subspace infeasibility, see solver).

// Minus the number of intra-block pairs at distance exactly 1.
Rational conflict_utility(const MetricInstance& m, const Partition& pi);

// Minus the total of each block's best in-block medoid cost (sum of distances
// from the medoid to the block).
Rational medoid_utility(const MetricInstance& m, const Partition& pi);

// Minus the k-means cost: per block, sum |x_i|^2 - |sum x_i|^2 / |C|, which
// keeps everything rational.
Rational kmeans_utility(const EuclideanInstance& e, const Partition& pi);

// True when `block` qualifies as the candidate cluster at scale eps: it has
// size s, the eps-graph induced on it is connected, and its average degree
// 2|E|/|C| is at least delta.
bool dense_block(const MetricInstance& m, const std::vector<int>& block,
                 const Rational& eps, int s, const Rational& delta);

// Two-block utility for the dense-cluster decision. One block plays the
// candidate-cluster role: it scores |C| when |C| = s, the eps-graph induced on
// C is connected, and its average degree 2|E|/|C| >= delta. A set partition is
// unordered, so both blocks are tried in the candidate role and the better
// score is returned; -n^2 if neither qualifies. Throws WrongK unless the
// partition has exactly 2 blocks.
Rational density_utility(const MetricInstance& m, const Partition& pi,
                         const Rational& eps, int s, const Rational& delta);

// Best density_utility over all candidate scales: the distinct distances
// <= eps_max plus eps_max itself, with delta fixed to 2*tau/s.
Rational multiscale_density_utility(const MetricInstance& m, const Partition& pi,
                                    const Rational& eps_max, int s, long long tau);

// Minus the eps-graph cut between the two blocks when they have equal size,
// -n^2 otherwise (so odd n always scores -n^2). Throws WrongK.
Rational bisection_utility(const MetricInstance& m, const Partition& pi,
                           const Rational& eps);

// Diagnostic only: cut/vol(C1) + cut/vol(C2) in the eps-graph, exact.
// Throws WrongK, and ZeroVolumeError when a block has no incident edges.
Rational normalized_cut(const MetricInstance& m, const Partition& pi,
                        const Rational& eps);

// Minus the total sum-of-squares cost of grouping microclusters:
// per block, sum SS - |sum LS|^2 / sum N. Throws DimensionMismatch.
Rational birch_utility(const std::vector<CFTriple>& cfs, const Partition& pi);

// 0 when every block has diameter <= delta, else -n^2.
Rational diameter_utility(const MetricInstance& m, const Partition& pi,
                          const Rational& delta);

// Sum over blocks of the best exemplar's in-block similarity total:
// max over e in block of sum over i in block of s(i, e).
Rational exemplar_utility(const SimilarityMatrix& s, const Partition& pi);

// Objective of an exemplar assignment a: V -> V. Feasible assignments are
// consistent (a(i) = j implies a(j) = j); throws ConsistencyViolation naming
// the first offending pair. Returns sum of s(i, a(i)).
Rational assignment_objective(const SimilarityMatrix& s, const std::vector<int>& a);

// Partition induced by a consistent assignment (points sharing an exemplar
// share a block).
Partition assignment_partition(const std::vector<int>& a);

// Checks theta (weights on the simplex, positive sigma), computes the hard
// partition induced by posterior argmax (log-domain scores
// log pi_a - |x - mu_a|^2 / (2 sigma^2), relative tolerance 1e-12, ties to the
// lowest component index), and requires it to equal pi after canonicalization.
// Returns the log-likelihood in floating point (target accuracy 1e-9
// relative). Throws InvalidTheta or PartitionMismatch.
double verify_gmm_certificate(const EuclideanInstance& e, const Partition& pi,
                              const GmmCertificate& theta);

// True iff X == X*Z exactly, Z has zero diagonal, every nonzero Z(i,j) stays
// inside j's block of pi, and Z has at most t nonzero entries. X is p x n,
// Z is n x n; throws DimensionMismatch on shape violations.
bool verify_ssc_certificate(const RationalMatrix& x, const Partition& pi,
                            const SscCertificate& z, long long t);

}  // namespace ucp
