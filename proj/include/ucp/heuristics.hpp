#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucp/instance.hpp"
#include "ucp/partition.hpp"
#include "ucp/rational.hpp"
#include "ucp/utilities.hpp"

// The practical clustering algorithms. Each one runs deterministically from
// its inputs (plus an explicit seed where randomness is involved) and reports
// an exact final objective, so runs can be compared against the brute-force
// optimum without float noise.

namespace ucp {

struct HeuristicRun {
    std::string method;
    std::uint64_t seed = 0;
    int iterations = 0;
    Partition final_partition;
    // Exact objective of the final state. Cost-like methods (lloyd, linkage)
    // report a cost to minimize; exemplar methods (ap, pam) report a net
    // similarity to maximize.
    Rational value;
    // Objective after each iteration, same orientation as `value`.
    std::vector<Rational> trajectory;
    // Set when message passing hit max_iters before the exemplar set
    // stabilized. Never set by the other methods.
    bool non_convergence = false;
};

// Lloyd's alternation for k-means. Initial centers are k distinct data
// points drawn from the seed; each round assigns points to the nearest
// center (ties to the lowest center index), repairs empty clusters by
// stealing the point farthest from its current center, and recomputes
// centroids. Stops when the partition repeats. `value` and the trajectory
// are the clustering cost (sum of squared distances to block centroids).
HeuristicRun lloyd(const EuclideanInstance& e, int k, std::uint64_t seed);

// Greedy agglomeration under complete linkage: from singletons, repeatedly
// merge the pair of clusters with the smallest max-linkage distance
// (ties by lowest cluster positions) until k blocks remain. `value` and the
// trajectory are the running max block diameter.
HeuristicRun greedy_complete_linkage(const MetricInstance& m, int k);

// Damped responsibility/availability message passing. Stops once the
// exemplar set survives `stable_window` consecutive sweeps unchanged, or at
// max_iters with non_convergence set. The induced assignment (exemplars
// self-assign, everyone else takes their best exemplar) is evaluated
// exactly; the trajectory holds that value after each sweep.
HeuristicRun ap_messages(const SimilarityMatrix& s, double damping,
                         int max_iters, int stable_window);

// Best-improvement single-swap local search over exemplar sets of size k,
// seeded with k distinct random indices. `value` and trajectory follow the
// net-similarity objective being maximized.
HeuristicRun pam_swap(const SimilarityMatrix& s, int k, std::uint64_t seed);

struct MeanShiftResult {
    // One representative location per discovered mode.
    std::vector<std::vector<double>> modes;
    // Points grouped by the mode their trajectory reached.
    Partition partition;
    // Gaussian KDE value at every step of every point's ascent path.
    std::vector<std::vector<double>> kde_trajectories;
    // Per point: the trajectory hit max_iters before the step norm
    // dropped below tol.
    std::vector<char> max_iters_exceeded;
};

// Gaussian mean shift with bandwidth h: every data point ascends the KDE
// via the fixed-point update until the step norm falls below tol. Final
// positions within 1e-3*h of an earlier mode are merged into it.
MeanShiftResult mean_shift(const EuclideanInstance& e, double h, double tol,
                           int max_iters);

// Exact minimum of the complete-linkage cost (max block diameter) over all
// k-partitions, by enumeration. Reference point for linkage gaps.
Rational min_linkage_cost(const MetricInstance& m, int k);

struct GapRow {
    std::string label;
    std::uint64_t seed = 0;
    Rational heuristic_value;
    Rational exact_optimum;
    Rational abs_gap;
    // abs_gap / |exact|; "inf" when the exact optimum is 0 and the gap is
    // not.
    std::string rel_gap;
    bool optimal = false;
};

// Assembles one row of a gap table. `minimize` says which direction the
// objective runs; the absolute gap is oriented so that 0 means optimal and
// positive means the heuristic fell short.
GapRow make_gap_row(std::string label, std::uint64_t seed,
                    const Rational& heuristic_value,
                    const Rational& exact_optimum, bool minimize);

}  // namespace ucp
