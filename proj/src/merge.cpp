#include "cbs/merge.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>

#include "cbs/errors.hpp"

namespace cbs {

namespace {

[[noreturn]] void impossible_gap(const char* edge_class, std::int64_t delta, std::int64_t n,
                                 std::int64_t p) {
  throw InternalError(std::string("impossible label gap for ") + edge_class +
                      ": delta=" + std::to_string(delta) + " n=" + std::to_string(n) +
                      " p=" + std::to_string(p));
}

template <typename Cost>
Cost weight_of(const Graph& graph, Vertex u, std::size_t j) {
  if constexpr (std::is_integral_v<Cost>) {
    return Cost{1};
  } else {
    return graph.weight_at(u, j);
  }
}

// Position of every vertex of `path` (or -1), validated against `partial`.
template <typename Cost>
std::vector<std::int32_t> index_path(const BasicPartialOrder<Cost>& partial,
                                     std::span<const Vertex> path) {
  const auto n = partial.total_n();
  if (path.empty()) throw ContractError("cannot insert an empty path");
  if (partial.size() + path.size() > n)
    throw ContractError("path does not fit into the remaining labels");
  std::vector<std::int32_t> at(n, -1);
  for (std::size_t t = 0; t < path.size(); ++t) {
    const Vertex v = path[t];
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw ContractError("path vertex out of range: " + std::to_string(v));
    if (partial.contains(v) || at[static_cast<std::size_t>(v)] >= 0)
      throw ContractError("path is not disjoint from the arrangement at vertex " +
                          std::to_string(v));
    at[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(t);
  }
  return at;
}

// Objective over edges with both ends placed, read on a cycle of `length` labels.
template <typename Cost>
Cost placed_cost(const BasicPartialOrder<Cost>& partial, const Graph& graph, std::int64_t length,
                 std::uint64_t* evaluations) {
  Cost total{};
  const auto order = partial.order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto nb = graph.neighbors(order[i]);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      const auto pos = partial.index_of(nb[j]);
      if (pos <= static_cast<std::int32_t>(i)) continue;
      total += weight_of<Cost>(graph, order[i], j) *
               static_cast<Cost>(cyclic_distance(static_cast<std::int64_t>(i), pos, length));
      if (evaluations) ++*evaluations;
    }
  }
  return total;
}

}  // namespace

std::int64_t shift_delta(EdgeClass edge_class, std::int64_t delta, std::int64_t n,
                         std::int64_t p) {
  if (p < 1 || n <= p) impossible_gap("any class", delta, n, p);
  const std::int64_t twice = 2 * delta;
  switch (edge_class) {
    case EdgeClass::PivotBefore:
      if (delta < p + 1 || delta > n - 1) impossible_gap("pivot/before", delta, n, p);
      if (twice <= n) return -p;
      if (twice >= n + 2 * p) return p;
      return twice - (n + p);
    case EdgeClass::PivotAfter:
      if (delta < 1 || delta > n - 1 - p) impossible_gap("pivot/after", delta, n, p);
      if (twice <= n - 2 * p) return p;
      if (twice >= n) return -p;
      return -twice + (n - p);
    case EdgeClass::PivotPath:
      if (delta < 1 || delta > p) impossible_gap("pivot/path", delta, n, p);
      if (twice > n) return -n + (p + 1);
      if (twice < 2 * (p + 1) - n) return n - (p + 1);
      return -twice + (p + 1);
    case EdgeClass::PathBefore:
      if (delta < 1 || delta > n - 2) impossible_gap("path/before", delta, n, p);
      if (twice <= n - 2) return 1;
      if (twice >= n) return -1;
      return 0;
    case EdgeClass::PathAfter:
      if (delta < 2 || delta > n - 1) impossible_gap("path/after", delta, n, p);
      if (twice <= n) return -1;
      if (twice >= n + 2) return 1;
      return 0;
  }
  impossible_gap("unknown class", delta, n, p);
}

template <typename Cost>
BasicPartialOrder<Cost>::BasicPartialOrder(const Graph& graph, std::span<const Vertex> first)
    : index_(graph.vertex_count(), -1) {
  if (first.empty()) throw ContractError("initial path must be nonempty");
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  order_.reserve(graph.vertex_count());
  for (Vertex v : first) {
    if (v < 0 || v >= n) throw ContractError("initial path vertex out of range");
    if (index_[static_cast<std::size_t>(v)] >= 0)
      throw ContractError("initial path repeats vertex " + std::to_string(v));
    index_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(order_.size());
    order_.push_back(v);
  }
  cbs_ = placed_cost(*this, graph, static_cast<std::int64_t>(order_.size()), nullptr);
}

template <typename Cost>
void BasicPartialOrder<Cost>::insert(std::span<const Vertex> path,
                                     const BasicInsertionPlan<Cost>& plan) {
  (void)index_path(*this, path);
  if (plan.position >= order_.size())
    throw ContractError("insertion position " + std::to_string(plan.position) +
                        " out of range");
  const auto at = order_.begin() + static_cast<std::ptrdiff_t>(plan.position);
  if (plan.reversed)
    order_.insert(at, path.rbegin(), path.rend());
  else
    order_.insert(at, path.begin(), path.end());
  for (std::size_t i = plan.position; i < order_.size(); ++i)
    index_[static_cast<std::size_t>(order_[i])] = static_cast<std::int32_t>(i);
  cbs_ = plan.cbs_after;
}

template <typename Cost>
BasicInsertionPlan<Cost> best_insertion(const BasicPartialOrder<Cost>& partial,
                                        std::span<const Vertex> path, const Graph& graph,
                                        const MergeOptions& options) {
  if (graph.vertex_count() != partial.total_n())
    throw ContractError("graph and arrangement disagree on the vertex count");
  const auto path_at = index_path(partial, path);

  const auto p = static_cast<std::int64_t>(path.size());
  const auto order = partial.order();
  const auto placed = order.size();
  // Candidates are scored as a cycle of the merged length.
  const auto n = static_cast<std::int64_t>(placed) + p;
  std::uint64_t evaluations = 0;
  const Cost placed_part = placed_cost(partial, graph, n, &evaluations);

  // Edges inside the path keep their length under translation and reversal.
  Cost internal{};
  struct Link {
    std::int64_t t;  // offset in the forward path
    std::int64_t j;  // index in order
    Cost w;
  };
  std::vector<Link> links;
  for (std::size_t t = 0; t < path.size(); ++t) {
    const Vertex u = path[t];
    const auto nb = graph.neighbors(u);
    for (std::size_t c = 0; c < nb.size(); ++c) {
      const auto x = static_cast<std::size_t>(nb[c]);
      if (path_at[x] > static_cast<std::int32_t>(t)) {
        internal += weight_of<Cost>(graph, u, c) *
                    static_cast<Cost>(cyclic_distance(static_cast<std::int64_t>(t), path_at[x], n));
        ++evaluations;
      } else if (partial.contains(nb[c])) {
        links.push_back({static_cast<std::int64_t>(t), partial.index_of(nb[c]),
                         weight_of<Cost>(graph, u, c)});
      }
    }
  }

  std::vector<Vertex> reversed_path;
  if (options.observer) reversed_path.assign(path.rbegin(), path.rend());

  BasicInsertionPlan<Cost> best;
  bool have_best = false;
  const auto consider = [&](std::size_t position, bool reversed, Cost cost) {
    if (options.observer) {
      options.observer(Candidate{order, reversed ? std::span<const Vertex>(reversed_path) : path,
                                 position, reversed, static_cast<double>(cost)});
    }
    const bool better =
        !have_best || cost < best.cbs_after ||
        (cost == best.cbs_after &&
         (position < best.position || (position == best.position && !reversed && best.reversed)));
    if (better) {
      best = {position, reversed, cost};
      have_best = true;
    }
  };

  for (const bool reversed : {false, true}) {
    const auto offset = [&](std::int64_t t) { return reversed ? p - 1 - t : t; };

    // Position 0: path at labels 0..p-1, order[j] at label j + p.
    Cost cost = placed_part + internal;
    for (const auto& link : links)
      cost += link.w * static_cast<Cost>(cyclic_distance(offset(link.t), link.j + p, n));
    evaluations += links.size();

    for (std::size_t i = 0; i < placed; ++i) {
      consider(i, reversed, cost);
      if (i + 1 == placed) break;

      // Advance to i + 1: pivot k = order[i] moves from label i + p to i.
      const auto ii = static_cast<std::int64_t>(i);
      const Vertex k = order[i];
      const auto nb = graph.neighbors(k);
      for (std::size_t c = 0; c < nb.size(); ++c) {
        const auto x = static_cast<std::size_t>(nb[c]);
        std::int64_t change;
        if (path_at[x] >= 0) {
          change = shift_delta(EdgeClass::PivotPath, p - offset(path_at[x]), n, p);
        } else if (const std::int64_t j = partial.index_of(nb[c]); j >= 0) {
          change = j < ii ? shift_delta(EdgeClass::PivotBefore, ii + p - j, n, p)
                          : shift_delta(EdgeClass::PivotAfter, j - ii, n, p);
        } else {
          continue;
        }
        cost += weight_of<Cost>(graph, k, c) * static_cast<Cost>(change);
        ++evaluations;
      }
      for (const auto& link : links) {
        if (link.j == ii) continue;  // the pivot/path edge, handled above
        const std::int64_t at = ii + offset(link.t);
        const std::int64_t change =
            link.j < ii ? shift_delta(EdgeClass::PathBefore, at - link.j, n, p)
                        : shift_delta(EdgeClass::PathAfter, link.j + p - at, n, p);
        cost += link.w * static_cast<Cost>(change);
        ++evaluations;
      }
    }
  }

  if (options.counters) {
    options.counters->edge_evaluations += evaluations;
    options.counters->candidates += 2 * placed;
  }
  return best;
}

template class BasicPartialOrder<std::int64_t>;
template class BasicPartialOrder<double>;
template BasicInsertionPlan<std::int64_t> best_insertion(const BasicPartialOrder<std::int64_t>&,
                                                         std::span<const Vertex>, const Graph&,
                                                         const MergeOptions&);
template BasicInsertionPlan<double> best_insertion(const BasicPartialOrder<double>&,
                                                   std::span<const Vertex>, const Graph&,
                                                   const MergeOptions&);

namespace {

template <typename Cost>
Labeling merge_sorted(const PathList& paths, std::span<const std::size_t> sequence,
                      const Graph& graph, const MergeOptions& options) {
  BasicPartialOrder<Cost> partial(graph, paths[sequence.front()]);
  for (std::size_t s = 1; s < sequence.size(); ++s) {
    const auto& path = paths[sequence[s]];
    const auto plan = best_insertion(partial, path, graph, options);
    partial.insert(path, plan);
  }
  return Labeling::from_order(partial.order());
}

}  // namespace

Labeling merge_paths(const PathList& paths, const Graph& graph, const MergeOptions& options) {
  const auto n = graph.vertex_count();
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& path : paths) {
    if (path.empty()) throw ContractError("path list contains an empty path");
    for (Vertex v : path) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
        throw ContractError("paths do not partition the vertex set (vertex " +
                            std::to_string(v) + ")");
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  if (covered != n) throw ContractError("paths do not cover every vertex");

  std::vector<std::size_t> sequence(paths.size());
  std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  std::sort(sequence.begin(), sequence.end(), [&](std::size_t a, std::size_t b) {
    if (paths[a].size() != paths[b].size()) return paths[a].size() > paths[b].size();
    return paths[a].front() < paths[b].front();
  });

  if (graph.is_weighted()) return merge_sorted<double>(paths, sequence, graph, options);
  return merge_sorted<std::int64_t>(paths, sequence, graph, options);
}

Labeling label_graph(const Graph& graph, const MergeOptions& options) {
  return merge_paths(find_paths(graph), graph, options);
}

}  // namespace cbs
