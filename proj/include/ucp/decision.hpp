#pragma once

#include <optional>
#include <variant>

#include "ucp/utilities.hpp"

namespace ucp {

enum class UtilityKind {
    conflict,
    medoid,
    kmeans,
    density,
    multiscale_density,
    bisection,
    birch,
    diameter,
    exemplar,
    subspace,
};

const char* utility_kind_name(UtilityKind kind);
UtilityKind utility_kind_from_name(const std::string& name);

// Utility tag plus whichever parameters that tag uses; unused fields are
// ignored. kept flat so serialization stays simple.
struct UtilitySpec {
    UtilityKind kind = UtilityKind::conflict;
    Rational eps;       // density, bisection
    Rational eps_max;   // multiscale_density
    int s = 0;          // density, multiscale_density (target size)
    Rational delta;     // density (degree threshold)
    long long tau = 0;  // multiscale_density (edge target)
    Rational diameter;  // diameter (max within-block diameter)
};

// What the utility scores: a metric, points, microclusters, similarities, or
// a raw data matrix (columns are the points, for the subspace utility).
using Payload = std::variant<MetricInstance, EuclideanInstance,
                             std::vector<CFTriple>, SimilarityMatrix,
                             RationalMatrix>;

// A decision question: does some partition (into k blocks, or any number of
// blocks when k is empty) score at least `threshold`?
struct UcpDecisionInstance {
    Payload payload;
    UtilitySpec utility;
    std::optional<int> k;  // empty means the block count is free
    Rational threshold;

    // Number of points being partitioned.
    int n() const;
};

}  // namespace ucp
