#pragma once

#include <cstdint>
#include <vector>

#include "cbs/graph.hpp"

namespace cbs {

using Path = std::vector<Vertex>;

/// Vertex-disjoint paths covering every vertex exactly once.
using PathList = std::vector<Path>;

/// Neighborhood similarity of two adjacent vertices as an exact fraction
///   |(Adj(u) ∩ Adj(v)) ∪ {u,v}| / |Adj(u) ∪ Adj(v)|.
/// Equals 1 exactly when the closed neighborhoods coincide.
struct Similarity {
  std::int64_t shared = 0;
  std::int64_t total = 1;

  double value() const { return static_cast<double>(shared) / static_cast<double>(total); }

  friend bool operator<(const Similarity& a, const Similarity& b) {
    return a.shared * b.total < b.shared * a.total;
  }
  friend bool operator==(const Similarity& a, const Similarity& b) {
    return a.shared * b.total == b.shared * a.total;
  }
};

/// Unweighted similarity. Throws ContractError if u == v or {u,v} is not an edge.
Similarity jaccard(const Graph& graph, Vertex u, Vertex v);

/// Weighted similarity N(u,v) / D(u,v) with
///   N = 2 w_uv + sum over common neighbors x of min(w_ux, w_vx)
///   D = 2 w_uv + sum over common x of (w_ux + w_vx)/2
///             + sum over x adjacent to u only of w_ux
///             + sum over x adjacent to v only of w_vx
/// (u and v themselves excluded from the sums). Reduces to jaccard() at unit weights.
double weighted_jaccard(const Graph& graph, Vertex u, Vertex v);

/// Similarity-guided depth-first decomposition of the graph into paths.
///
/// Each path starts at the unvisited vertex of minimum degree (lowest index on
/// ties). Unvisited degree-1 neighbors of the current head are appended right
/// after it in ascending order; the walk then moves to the unvisited neighbor
/// of highest similarity with the head (lowest index on ties) and stops when no
/// unvisited neighbor is left. Degrees and neighborhoods are those of the full
/// graph. Weighted graphs use weighted_jaccard() compared without tolerance.
PathList find_paths(const Graph& graph);

}  // namespace cbs
