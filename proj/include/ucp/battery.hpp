#pragma once

#include <string>

#include "ucp/instance.hpp"
#include "ucp/reductions.hpp"
#include "ucp/rng.hpp"

// Reproducible random source instances for the reduction batteries. The same
// (kind, seed, nmax) always yields the same sample sequence, so a battery
// run is a pure function of its command line.

namespace ucp {

// Erdos-Renyi graph on n vertices; the edge probability is drawn once per
// graph from {0.2, 0.5, 0.8}.
GraphInstance random_er_graph(Rng& rng, int n);

// Random integer metric: off-diagonal entries from {1..4}, then a
// shortest-path closure so the triangle inequality holds exactly.
MetricInstance random_metric(Rng& rng, int n);

// One random source instance of the given kind ("coloring", "fdcs",
// "bisection", "cliquecover", "kmeans-birch", "ufl-ap", "l0-ssc",
// "kmedian"). Budget-style kinds set their budget at the exact optimum
// plus an offset from {-1, 0, +1}, so every battery probes the decision
// boundary itself. nmax caps the point count where the kind supports it.
// Throws ParseError on an unknown kind.
SourceInstance random_source(const std::string& kind, Rng& rng, int nmax);

}  // namespace ucp
