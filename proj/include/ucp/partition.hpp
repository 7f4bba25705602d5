#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ucp/errors.hpp"

namespace ucp {

// A partition of {0, ..., n-1} stored as a label vector in restricted-growth
// form: labels[0] == 0 and each labels[i] <= 1 + max(labels[0..i-1]). Block b
// is the set of points with label b; blocks are indexed 0..k-1 in order of
// first appearance. Construct through canonicalize() or from_labels() so the
// invariant always holds.
struct Partition {
    std::vector<int> labels;
    int k = 0;

    int n() const { return static_cast<int>(labels.size()); }

    // Points of each block, in increasing order, blocks in label order.
    std::vector<std::vector<int>> blocks() const;

    bool operator==(const Partition&) const = default;

    // Lexicographic order on the label vectors (used for tie-breaks).
    bool operator<(const Partition& other) const { return labels < other.labels; }
};

// Relabels an arbitrary label vector into restricted-growth form (labels by
// order of first appearance). Gaps in the input label set are fine; the input
// expresses only which points share a block. Throws InvalidK on empty input.
Partition canonicalize(const std::vector<int>& labels);

// As canonicalize, but additionally requires the result to have exactly k
// blocks; throws WrongK otherwise.
Partition from_labels(const std::vector<int>& labels, int k);

// Calls visit(p) for every partition of {0..n-1} into exactly k nonempty
// blocks, in lexicographic order of the restricted-growth label vectors.
// Throws InvalidK unless 1 <= k <= n. The visited reference is reused;
// copy it if it must outlive the call.
void for_each_partition(int n, int k, const std::function<void(const Partition&)>& visit);

// Stirling number of the second kind S(n, k): how many partitions
// for_each_partition(n, k, ...) visits. Requires 0 <= k <= n <= 25 (the
// largest range that fits std::uint64_t for all k).
std::uint64_t stirling2(int n, int k);

// Bell number B(n) = sum over k of S(n, k), same range limit.
std::uint64_t bell(int n);

}  // namespace ucp
