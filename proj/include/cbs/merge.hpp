#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cbs/graph.hpp"
#include "cbs/path_finder.hpp"

namespace cbs {

/// Which pair of groups an edge joins when a path P sits just before the pivot
/// vertex k, with O1 the placed vertices before k and O2 those after it.
enum class EdgeClass { PivotBefore, PivotAfter, PivotPath, PathBefore, PathAfter };

/// Change of one edge's cyclic distance when the insertion index advances by
/// one (k jumps back over P by p labels, every vertex of P moves forward by 1).
///
/// `delta` is the label gap at the current index, oriented per class:
///   PivotBefore (k, u in O1): label(k) - label(u)
///   PivotAfter  (k, u in O2): label(u) - label(k)
///   PivotPath   (k, u in P):  label(k) - label(u)
///   PathBefore  (u in P, v in O1): label(u) - label(v)
///   PathAfter   (u in P, v in O2): label(v) - label(u)
/// Case boundaries are compared as 2*delta against n (+/- 2p, 2, ...), so no
/// rounding is involved. Throws InternalError when delta is impossible for the
/// class (it cannot arise from a valid arrangement).
std::int64_t shift_delta(EdgeClass edge_class, std::int64_t delta, std::int64_t n,
                         std::int64_t p);

/// Counts edge evaluations made by the insertion engine.
struct MergeCounters {
  std::uint64_t edge_evaluations = 0;
  std::uint64_t candidates = 0;
};

/// One evaluated insertion: `path` (already oriented) placed before order[position].
struct Candidate {
  std::span<const Vertex> order;
  std::span<const Vertex> path;
  std::size_t position;
  bool reversed;
  double cbs;
};

using CandidateObserver = std::function<void(const Candidate&)>;

struct MergeOptions {
  /// Called for every position and orientation evaluated. Optional.
  CandidateObserver observer;
  /// Incremented in place when non-null.
  MergeCounters* counters = nullptr;
};

template <typename Cost>
struct BasicInsertionPlan {
  std::size_t position = 0;
  bool reversed = false;
  Cost cbs_after{};
};

/// A partially merged arrangement. Labels are positions in `order()`, read as
/// a cycle of size() labels: `cbs()` is the objective restricted to edges with
/// both endpoints placed, with distances modulo the current length. Once every
/// vertex is placed this is the ordinary objective.
///
/// Cost is std::int64_t for the unweighted objective (weights ignored) or
/// double for the weighted one.
template <typename Cost>
class BasicPartialOrder {
 public:
  /// Seeds the arrangement with `first`. Throws ContractError on an empty or
  /// repeating path or a vertex out of range.
  BasicPartialOrder(const Graph& graph, std::span<const Vertex> first);

  std::span<const Vertex> order() const noexcept { return order_; }
  std::size_t total_n() const noexcept { return index_.size(); }
  std::size_t size() const noexcept { return order_.size(); }
  Cost cbs() const noexcept { return cbs_; }

  bool contains(Vertex v) const { return index_[static_cast<std::size_t>(v)] >= 0; }
  /// Position of v in order(); -1 when not placed.
  std::int32_t index_of(Vertex v) const { return index_[static_cast<std::size_t>(v)]; }

  /// Inserts `path` (reversed if the plan says so) before order()[plan.position]
  /// and adopts plan.cbs_after as the new objective value.
  void insert(std::span<const Vertex> path, const BasicInsertionPlan<Cost>& plan);

 private:
  std::vector<Vertex> order_;
  std::vector<std::int32_t> index_;
  Cost cbs_{};
};

using PartialOrder = BasicPartialOrder<std::int64_t>;
using WeightedPartialOrder = BasicPartialOrder<double>;
using InsertionPlan = BasicInsertionPlan<std::int64_t>;
using WeightedInsertionPlan = BasicInsertionPlan<double>;

/// Best place to insert `path` into `partial`: all size() cyclically distinct
/// positions times both orientations, evaluated incrementally from one direct
/// evaluation at position 0. Each candidate is scored as a cycle of
/// size() + path.size() labels. Ties go to the lowest position, then to the
/// non-reversed orientation. Throws ContractError if `path` is empty or
/// overlaps the arrangement.
template <typename Cost>
BasicInsertionPlan<Cost> best_insertion(const BasicPartialOrder<Cost>& partial,
                                        std::span<const Vertex> path, const Graph& graph,
                                        const MergeOptions& options = {});

/// Greedy merge of a path partition into one labeling: start from the longest
/// path, then repeatedly insert the longest remaining one at its best place.
/// Length ties go to the path whose first vertex has the lowest index.
/// Uses the weighted objective when the graph carries weights.
/// Throws ContractError if `paths` is not a partition of the vertex set.
Labeling merge_paths(const PathList& paths, const Graph& graph, const MergeOptions& options = {});

/// find_paths followed by merge_paths.
Labeling label_graph(const Graph& graph, const MergeOptions& options = {});

}  // namespace cbs
