#include "cbs/reference.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "cbs/errors.hpp"

namespace cbs {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::int64_t floor_ceil_half(std::int64_t n) { return (n / 2) * ((n + 1) / 2); }

std::string_view factor_name(Factor f) {
  switch (f) {
    case Factor::Path: return "path";
    case Factor::Cycle: return "cycle";
    case Factor::Complete: return "complete";
  }
  return "?";
}

}  // namespace

std::int64_t optimum_path(std::int64_t n) {
  require(n >= 1, "path needs n >= 1");
  return n - 1;
}

std::int64_t optimum_cycle(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  return n;
}

std::int64_t optimum_wheel(std::int64_t n) {
  require(n >= 4, "wheel needs n >= 4 vertices");
  return n + n * n / 4;
}

std::int64_t optimum_power_cycle(std::int64_t n, std::int64_t k) {
  require(k >= 1, "power of a cycle needs k >= 1");
  require(n > 2 * k + 1, "power of a cycle needs n > 2k + 1");
  return n * k * (k + 1) / 2;
}

std::int64_t optimum_complete_bipartite(std::int64_t n1, std::int64_t n2) {
  require(n1 >= 1 && n2 >= 1, "complete bipartite graph needs n1, n2 >= 1");
  std::int64_t s = n1 * n2 * n2 + n1 * n1 * n2;
  if (n2 % 2 == 1) s += n1;
  if (n1 % 2 == 1) s += n2;
  return s / 4;
}

std::int64_t upper_bound_cartesian(Factor g, Factor h, std::int64_t m, std::int64_t n) {
  const auto pair = "bound for " + std::string(factor_name(g)) + " x " +
                    std::string(factor_name(h)) + " with m=" + std::to_string(m) +
                    " n=" + std::to_string(n);
  const auto min_size = [](Factor f) { return f == Factor::Cycle ? 3 : 1; };
  require(m >= min_size(g) && n >= min_size(h), pair + ": factor too small");

  using F = Factor;
  if (g == F::Path && h == F::Path) {
    require(m >= n, pair + " requires m >= n");
    return m * (n - 1) + n * n * (m - 1);
  }
  if (g == F::Cycle && h == F::Cycle) {
    require(m >= n, pair + " requires m >= n");
    return m * (n * n + 2 * n - 2);
  }
  if (g == F::Complete && h == F::Complete) {
    require(m >= n, pair + " requires m >= n");
    return m * n * (n * n + 3 * n * floor_ceil_half(m) - 1) / 6;
  }
  if (g == F::Path && h == F::Cycle) return n * (m * m + m - 1);
  if (g == F::Path && h == F::Complete) return m * m * n * floor_ceil_half(n) / 2 + n * (m - 1);
  if (g == F::Cycle && h == F::Complete)
    return n * (m * m * floor_ceil_half(n) + 4 * m - 4) / 2;
  throw DomainError(pair + ": no bound known for this ordered pair");
}

double relative_distance(double median, double ref) {
  require(ref > 0.0, "relative distance needs a positive reference");
  return (median - ref) / ref;
}

OracleResult brute_force_optimum(const Graph& graph) {
  const auto n = graph.vertex_count();
  if (n > kOracleMaxVertices)
    throw DomainError("oracle refuses graphs with more than " +
                      std::to_string(kOracleMaxVertices) + " vertices (got " +
                      std::to_string(n) + ")");
  const auto edges = graph.edges();
  const auto nn = static_cast<std::int64_t>(n);

  // order[label] = vertex; vertex 0 stays at label 0.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::vector<Label> label(n);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_order = order;
  do {
    if (n > 2 && order[1] > order[n - 1]) continue;  // mirror image of an earlier order
    for (std::size_t i = 0; i < n; ++i) label[static_cast<std::size_t>(order[i])] = static_cast<Label>(i);
    std::int64_t cost = 0;
    for (const auto& e : edges)
      cost += cyclic_distance(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)], nn);
    if (cost < best) {
      best = cost;
      best_order = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return {best, Labeling::from_order(best_order)};
}

std::string_view to_string(ReferenceKind kind) {
  return kind == ReferenceKind::ExactOptimum ? "exact_optimum" : "upper_bound";
}

std::optional<ReferenceValue> reference_for(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  const auto exact = [&](std::int64_t v) {
    return ReferenceValue{ReferenceKind::ExactOptimum, v, spec.format()};
  };
  if (f == "path") return exact(optimum_path(spec.integer("n")));
  if (f == "cycle") return exact(optimum_cycle(spec.integer("n")));
  if (f == "wheel") return exact(optimum_wheel(spec.integer("n")));
  if (f == "pgc") return exact(optimum_power_cycle(spec.integer("n"), spec.integer("k")));
  if (f == "cbg") return exact(optimum_complete_bipartite(spec.integer("n1"), spec.integer("n2")));
  if (f != "product") return std::nullopt;

  const auto parse_factor = [](std::string_view s) {
    if (s == "path") return Factor::Path;
    if (s == "cycle") return Factor::Cycle;
    if (s == "complete") return Factor::Complete;
    throw DomainError("product factors must be path, cycle or complete, got " + std::string(s));
  };
  auto g = parse_factor(spec.text("g"));
  auto h = parse_factor(spec.text("h"));
  auto m = spec.integer("m");
  auto n = spec.integer("n");
  // G x H and H x G are isomorphic; put the pair in the orientation the bounds use.
  if (static_cast<int>(g) > static_cast<int>(h) || (g == h && m < n)) {
    std::swap(g, h);
    std::swap(m, n);
  }
  return ReferenceValue{ReferenceKind::UpperBound, upper_bound_cartesian(g, h, m, n), spec.format()};
}

}  // namespace cbs
