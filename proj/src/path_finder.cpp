#include "cbs/path_finder.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "cbs/errors.hpp"

namespace cbs {

namespace {

void require_edge(const Graph& graph, Vertex u, Vertex v) {
  if (u == v) throw ContractError("similarity of a vertex with itself is undefined");
  if (!graph.adjacent(u, v))
    throw ContractError("similarity requires adjacent vertices, got " + std::to_string(u) +
                        " and " + std::to_string(v));
}

}  // namespace

Similarity jaccard(const Graph& graph, Vertex u, Vertex v) {
  require_edge(graph, u, v);
  const auto a = graph.neighbors(u);
  const auto b = graph.neighbors(v);
  std::int64_t common = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  // v ∈ Adj(u) and u ∈ Adj(v), so both endpoints are already in the union.
  const auto union_size = static_cast<std::int64_t>(a.size() + b.size()) - common;
  return {common + 2, union_size};
}

double weighted_jaccard(const Graph& graph, Vertex u, Vertex v) {
  require_edge(graph, u, v);
  const auto a = graph.neighbors(u);
  const auto b = graph.neighbors(v);
  const double w_uv = *graph.weight(u, v);
  double shared = 2.0 * w_uv;
  double total = 2.0 * w_uv;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      if (a[i] != v) total += graph.weight_at(u, i);
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      if (b[j] != u) total += graph.weight_at(v, j);
      ++j;
    } else {
      const double wu = graph.weight_at(u, i);
      const double wv = graph.weight_at(v, j);
      shared += std::min(wu, wv);
      total += (wu + wv) / 2.0;
      ++i;
      ++j;
    }
  }
  return shared / total;
}

PathList find_paths(const Graph& graph) {
  const auto n = graph.vertex_count();
  std::vector<char> unvisited(n, 1);

  using Key = std::pair<std::size_t, Vertex>;
  std::vector<Key> keys;
  keys.reserve(n);
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) keys.emplace_back(graph.degree(u), u);
  std::priority_queue<Key, std::vector<Key>, std::greater<>> by_degree(std::greater<>{},
                                                                       std::move(keys));

  const bool weighted = graph.is_weighted();
  PathList paths;
  std::size_t remaining = n;
  std::vector<Vertex> candidates;

  while (remaining > 0) {
    while (!unvisited[static_cast<std::size_t>(by_degree.top().second)]) by_degree.pop();
    Vertex head = by_degree.top().second;
    by_degree.pop();
    unvisited[static_cast<std::size_t>(head)] = 0;
    --remaining;

    Path path;
    for (;;) {
      path.push_back(head);
      candidates.clear();
      for (Vertex v : graph.neighbors(head)) {
        if (!unvisited[static_cast<std::size_t>(v)]) continue;
        if (graph.degree(v) == 1) {
          path.push_back(v);
          unvisited[static_cast<std::size_t>(v)] = 0;
          --remaining;
        } else {
          candidates.push_back(v);
        }
      }
      if (candidates.empty()) break;

      Vertex next = candidates.front();
      if (weighted) {
        double best = weighted_jaccard(graph, head, next);
        for (std::size_t c = 1; c < candidates.size(); ++c) {
          const double s = weighted_jaccard(graph, head, candidates[c]);
          if (s > best) {
            best = s;
            next = candidates[c];
          }
        }
      } else {
        Similarity best = jaccard(graph, head, next);
        for (std::size_t c = 1; c < candidates.size(); ++c) {
          const Similarity s = jaccard(graph, head, candidates[c]);
          if (best < s) {
            best = s;
            next = candidates[c];
          }
        }
      }
      head = next;
      unvisited[static_cast<std::size_t>(head)] = 0;
      --remaining;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace cbs
