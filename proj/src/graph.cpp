#include "cbs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cbs/errors.hpp"

namespace cbs {

namespace {

template <typename EdgeT>
void build(std::size_t n, std::span<const EdgeT> edges, bool weighted,
            std::vector<std::size_t>& offsets, std::vector<Vertex>& neighbors,
            std::vector<double>& weights) {
  if (n == 0) throw ContractError("graph must have at least one vertex");
  if (n > static_cast<std::size_t>(INT32_MAX)) throw ContractError("graph too large");

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n)
      throw ContractError("edge endpoint out of range: {" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + "}");
    if (e.u == e.v) throw ContractError("self-loop on vertex " + std::to_string(e.u));
    if constexpr (requires { e.weight; }) {
      if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        throw ContractError("edge weights must be finite and positive");
    }
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }

  offsets.assign(n + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets.begin() + 1);

  struct Entry {
    Vertex to;
    double w;
  };
  std::vector<Entry> entries(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : edges) {
    double w = 1.0;
    if constexpr (requires { e.weight; }) w = e.weight;
    entries[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, w};
    entries[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, w};
  }

  neighbors.resize(entries.size());
  if (weighted) weights.resize(entries.size());
  for (std::size_t u = 0; u < n; ++u) {
    auto first = entries.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
    auto last = entries.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]);
    std::sort(first, last, [](const Entry& a, const Entry& b) { return a.to < b.to; });
    auto dup = std::adjacent_find(first, last,
                                  [](const Entry& a, const Entry& b) { return a.to == b.to; });
    if (dup != last)
      throw ContractError("duplicate edge {" + std::to_string(u) + "," +
                          std::to_string(dup->to) + "}");
    for (auto it = first; it != last; ++it) {
      const auto k = static_cast<std::size_t>(it - entries.begin());
      neighbors[k] = it->to;
      if (weighted) weights[k] = it->w;
    }
  }
}

void check_size(const Graph& graph, const Labeling& labeling) {
  if (labeling.size() != graph.vertex_count())
    throw ContractError("labeling has " + std::to_string(labeling.size()) +
                        " entries, graph has " + std::to_string(graph.vertex_count()) +
                        " vertices");
}

}  // namespace

Graph::Graph() : offsets_{0, 0} {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  build(n, edges, false, g.offsets_, g.neighbors_, g.weights_);
  return g;
}

Graph Graph::from_weighted_edges(std::size_t n, std::span<const WeightedEdge> edges) {
  Graph g;
  build(n, edges, true, g.offsets_, g.neighbors_, g.weights_);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<double> Graph::weight(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return weight_at(u, static_cast<std::size_t>(it - nb.begin()));
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; static_cast<std::size_t>(u) < vertex_count(); ++u) {
    const auto nb = neighbors(u);
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (u < nb[j]) out.push_back({u, nb[j], weight_at(u, j)});
  }
  return out;
}

double Graph::total_weight() const {
  if (weights_.empty()) return static_cast<double>(edge_count());
  return std::accumulate(weights_.begin(), weights_.end(), 0.0) / 2.0;
}

bool Graph::is_connected() const {
  const auto n = vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

Labeling::Labeling(std::vector<Label> perm) : perm_(std::move(perm)) {
  if (perm_.empty()) throw ContractError("labeling must be nonempty");
  std::vector<char> used(perm_.size(), 0);
  for (Label l : perm_) {
    if (l < 0 || static_cast<std::size_t>(l) >= perm_.size() ||
        used[static_cast<std::size_t>(l)])
      throw ContractError("labeling is not a bijection onto 0..n-1");
    used[static_cast<std::size_t>(l)] = 1;
  }
}

Labeling Labeling::identity(std::size_t n) {
  std::vector<Label> perm(n);
  std::iota(perm.begin(), perm.end(), Label{0});
  return Labeling(std::move(perm));
}

Labeling Labeling::from_order(std::span<const Vertex> order) {
  std::vector<Label> perm(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= order.size())
      throw ContractError("order entry out of range");
    perm[static_cast<std::size_t>(v)] = static_cast<Label>(i);
  }
  return Labeling(std::move(perm));
}

std::vector<Vertex> Labeling::order() const {
  std::vector<Vertex> out(perm_.size());
  for (std::size_t v = 0; v < perm_.size(); ++v)
    out[static_cast<std::size_t>(perm_[v])] = static_cast<Vertex>(v);
  return out;
}

double cyclic_bandwidth_sum(const Graph& graph, const Labeling& labeling) {
  check_size(graph, labeling);
  if (!graph.is_weighted())
    return static_cast<double>(cyclic_bandwidth_sum_unweighted(graph, labeling));
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  double total = 0.0;
  for (const auto& e : graph.edges())
    total += e.weight * static_cast<double>(cyclic_distance(labeling[e.u], labeling[e.v], n));
  return total;
}

std::int64_t cyclic_bandwidth_sum_unweighted(const Graph& graph, const Labeling& labeling) {
  check_size(graph, labeling);
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  std::int64_t total = 0;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v : graph.neighbors(u))
      if (u < v) total += cyclic_distance(labeling[u], labeling[v], n);
  return total;
}

Labeling rotate_labels(const Labeling& labeling, std::int64_t r) {
  const auto n = static_cast<std::int64_t>(labeling.size());
  if (r < 0 || r >= n) throw ContractError("rotation must satisfy 0 <= r < n");
  std::vector<Label> perm(labeling.perm().begin(), labeling.perm().end());
  for (auto& l : perm) l = static_cast<Label>((l + r) % n);
  return Labeling(std::move(perm));
}

Labeling reflect_labels(const Labeling& labeling) {
  const auto n = static_cast<Label>(labeling.size());
  std::vector<Label> perm(labeling.perm().begin(), labeling.perm().end());
  for (auto& l : perm) l = n - 1 - l;
  return Labeling(std::move(perm));
}

Graph relabel_vertices(const Graph& graph, std::span<const Vertex> id_perm) {
  const auto n = graph.vertex_count();
  if (id_perm.size() != n) throw ContractError("id permutation has the wrong length");
  std::vector<char> used(n, 0);
  for (Vertex v : id_perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || used[static_cast<std::size_t>(v)])
      throw ContractError("id permutation is not a bijection");
    used[static_cast<std::size_t>(v)] = 1;
  }
  auto edges = graph.edges();
  for (auto& e : edges) {
    e.u = id_perm[static_cast<std::size_t>(e.u)];
    e.v = id_perm[static_cast<std::size_t>(e.v)];
  }
  if (graph.is_weighted()) return Graph::from_weighted_edges(n, edges);
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.push_back({e.u, e.v});
  return Graph::from_edges(n, plain);
}

}  // namespace cbs
