#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cbs {

using Vertex = std::int32_t;
using Label = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
};

struct WeightedEdge {
  Vertex u;
  Vertex v;
  double weight;
};

/// Simple undirected graph on vertices 0..n-1 in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. Weights are optional; an unweighted
/// graph behaves as if every edge had weight 1. Connectivity is not required.
class Graph {
 public:
  /// Single isolated vertex.
  Graph();

  /// Throws ContractError on n == 0, out-of-range endpoints, self-loops or
  /// duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// As from_edges; additionally every weight must be finite and > 0.
  static Graph from_weighted_edges(std::size_t n, std::span<const WeightedEdge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool is_weighted() const noexcept { return !weights_.empty(); }

  std::size_t degree(Vertex u) const {
    return offsets_[static_cast<std::size_t>(u) + 1] - offsets_[static_cast<std::size_t>(u)];
  }

  std::span<const Vertex> neighbors(Vertex u) const {
    const auto b = offsets_[static_cast<std::size_t>(u)];
    return {neighbors_.data() + b, degree(u)};
  }

  /// Weights parallel to neighbors(u); empty for unweighted graphs.
  std::span<const double> neighbor_weights(Vertex u) const {
    if (weights_.empty()) return {};
    const auto b = offsets_[static_cast<std::size_t>(u)];
    return {weights_.data() + b, degree(u)};
  }

  /// Weight of the j-th entry of neighbors(u).
  double weight_at(Vertex u, std::size_t j) const {
    return weights_.empty() ? 1.0 : weights_[offsets_[static_cast<std::size_t>(u)] + j];
  }

  bool adjacent(Vertex u, Vertex v) const;

  /// nullopt when u and v are not adjacent.
  std::optional<double> weight(Vertex u, Vertex v) const;

  /// Every edge once with u < v, sorted by (u, v). Weight 1 when unweighted.
  std::vector<WeightedEdge> edges() const;

  /// Sum of all edge weights (m for unweighted graphs).
  double total_weight() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<double> weights_;
};

/// Bijection vertex -> label in {0, ..., n-1}.
class Labeling {
 public:
  /// perm[v] is the label of vertex v. Throws ContractError if perm is not a
  /// permutation of 0..n-1 or is empty.
  explicit Labeling(std::vector<Label> perm);

  static Labeling identity(std::size_t n);

  /// perm[order[i]] = i.
  static Labeling from_order(std::span<const Vertex> order);

  std::size_t size() const noexcept { return perm_.size(); }
  Label operator[](Vertex v) const { return perm_[static_cast<std::size_t>(v)]; }
  std::span<const Label> perm() const noexcept { return perm_; }

  /// Inverse permutation: the vertex carrying each label.
  std::vector<Vertex> order() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> perm_;
};

/// Shortest-path distance between two labels on the host cycle of length n.
constexpr std::int64_t cyclic_distance(std::int64_t label_u, std::int64_t label_v,
                                       std::int64_t n) noexcept {
  const std::int64_t d = label_u > label_v ? label_u - label_v : label_v - label_u;
  return d < n - d ? d : n - d;
}

/// Weighted cyclic bandwidth sum; equals the unweighted sum when the graph has
/// no weights. Throws ContractError on a size mismatch.
double cyclic_bandwidth_sum(const Graph& graph, const Labeling& labeling);

/// Unweighted cyclic bandwidth sum in exact integer arithmetic (weights ignored).
std::int64_t cyclic_bandwidth_sum_unweighted(const Graph& graph, const Labeling& labeling);

/// perm'[v] = (perm[v] + r) mod n. Requires 0 <= r < n.
Labeling rotate_labels(const Labeling& labeling, std::int64_t r);

/// perm'[v] = n - 1 - perm[v].
Labeling reflect_labels(const Labeling& labeling);

/// Rename vertex u to id_perm[u]. Throws ContractError if id_perm is not a
/// bijection on 0..n-1.
Graph relabel_vertices(const Graph& graph, std::span<const Vertex> id_perm);

}  // namespace cbs
