#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbs/errors.hpp"
#include "cbs/generators.hpp"
#include "cbs/merge.hpp"
#include "cbs/random.hpp"
#include "cbs/reference.hpp"
#include "oracles.hpp"

using namespace cbs;

namespace {

std::int64_t dc(std::int64_t gap, std::int64_t n) { return cyclic_distance(0, ((gap % n) + n) % n, n); }

// Change of the edge length when the pivot jumps back over the path, measured
// directly from the labels before and after the move.
std::int64_t measured(EdgeClass c, std::int64_t delta, std::int64_t n, std::int64_t p) {
  switch (c) {
    case EdgeClass::PivotBefore: return dc(delta - p, n) - dc(delta, n);
    case EdgeClass::PivotAfter: return dc(delta + p, n) - dc(delta, n);
    case EdgeClass::PivotPath: return dc(p + 1 - delta, n) - dc(delta, n);
    case EdgeClass::PathBefore: return dc(delta + 1, n) - dc(delta, n);
    case EdgeClass::PathAfter: return dc(delta - 1, n) - dc(delta, n);
  }
  return 0;
}

std::pair<std::int64_t, std::int64_t> valid_range(EdgeClass c, std::int64_t n, std::int64_t p) {
  switch (c) {
    case EdgeClass::PivotBefore: return {p + 1, n - 1};
    case EdgeClass::PivotAfter: return {1, n - 1 - p};
    case EdgeClass::PivotPath: return {1, p};
    case EdgeClass::PathBefore: return {1, n - 2};
    case EdgeClass::PathAfter: return {2, n - 1};
  }
  return {0, -1};
}

Graph weighted_copy(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  auto edges = g.edges();
  for (auto& e : edges) e.weight = static_cast<double>(1 + rng.below(5));
  return Graph::from_weighted_edges(g.vertex_count(), edges);
}

// Replays merge_paths step by step against the from-scratch oracle.
template <typename Cost>
void check_against_oracle(const Graph& g) {
  auto paths = find_paths(g);
  std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
  });
  BasicPartialOrder<Cost> partial(g, paths.front());
  CHECK(static_cast<double>(partial.cbs()) ==
        oracle::partial_cbs(g, paths.front()));
  for (std::size_t s = 1; s < paths.size(); ++s) {
    const std::vector<Vertex> order(partial.order().begin(), partial.order().end());
    const auto expected = oracle::best_insertion(g, order, paths[s]);
    const auto plan = best_insertion(partial, paths[s], g);
    CHECK(plan.position == expected.position);
    CHECK(plan.reversed == expected.reversed);
    CHECK(static_cast<double>(plan.cbs_after) == expected.cost);
    partial.insert(paths[s], plan);
    CHECK(static_cast<double>(partial.cbs()) ==
          oracle::partial_cbs(g, {partial.order().begin(), partial.order().end()}));
  }
}

}  // namespace

TEST_CASE("shift delta examples") {
  CHECK(shift_delta(EdgeClass::PivotBefore, 3, 10, 2) == -2);
  CHECK(shift_delta(EdgeClass::PivotBefore, 8, 10, 2) == 2);
  CHECK(shift_delta(EdgeClass::PathAfter, 4, 10, 3) == -1);
}

TEST_CASE("shift delta matches measured label gaps") {
  const EdgeClass classes[] = {EdgeClass::PivotBefore, EdgeClass::PivotAfter, EdgeClass::PivotPath,
                               EdgeClass::PathBefore, EdgeClass::PathAfter};
  for (std::int64_t n = 3; n <= 24; ++n)
    for (std::int64_t p = 1; p < n; ++p)
      for (auto c : classes) {
        const auto [lo, hi] = valid_range(c, n, p);
        for (std::int64_t d = lo; d <= hi; ++d) {
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(d);
          CHECK(shift_delta(c, d, n, p) == measured(c, d, n, p));
        }
        CHECK_THROWS_AS(shift_delta(c, lo - 1, n, p), InternalError);
        CHECK_THROWS_AS(shift_delta(c, hi + 1, n, p), InternalError);
      }
  CHECK_THROWS_AS(shift_delta(EdgeClass::PathAfter, 2, 5, 5), InternalError);
}

TEST_CASE("insertion engine matches exhaustive rescoring") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(s);
    const auto n = static_cast<std::int64_t>(4 + rng.below(9));
    const auto g = erdos_renyi(n, 0.15 + 0.05 * static_cast<double>(s % 8), s);
    CAPTURE(s);
    check_against_oracle<std::int64_t>(g);
    check_against_oracle<double>(weighted_copy(g, s));
  }
  // Sparse graphs give many short paths and hence many insertions.
  for (std::uint64_t s = 0; s < 20; ++s) check_against_oracle<std::int64_t>(erdos_renyi(30, 0.05, s));
}

TEST_CASE("observer sees every candidate with its true cost") {
  const auto g = erdos_renyi(25, 0.08, 11);
  std::size_t seen = 0;
  MergeCounters counters;
  MergeOptions options;
  options.counters = &counters;
  options.observer = [&](const Candidate& c) {
    std::vector<Vertex> order(c.order.begin(), c.order.end());
    order.insert(order.begin() + static_cast<long>(c.position), c.path.begin(), c.path.end());
    CHECK(c.cbs == oracle::partial_cbs(g, order));
    ++seen;
  };
  label_graph(g, options);
  CHECK(seen > 0);
  CHECK(seen == counters.candidates);
}

TEST_CASE("two halves of a cycle merge into the optimum") {
  const auto g = make_cycle(6);
  const auto l = merge_paths({{0, 1, 2}, {3, 4, 5}}, g);
  CHECK(cyclic_bandwidth_sum_unweighted(g, l) == 6);
}

TEST_CASE("appending after the last element costs the same as position 0") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = erdos_renyi(12, 0.3, s);
    const std::vector<Vertex> order{0, 1, 2, 3, 4, 5, 6};
    const std::vector<Vertex> path{7, 8, 9};
    for (bool rev : {false, true})
      CHECK(oracle::partial_cbs(g, oracle::inserted(order, path, 0, rev)) ==
            oracle::partial_cbs(g, oracle::inserted(order, path, order.size(), rev)));
  }
}

TEST_CASE("K(4,12) reaches its optimum") {
  // One alternating path of 9 vertices, then 7 singletons of the larger side.
  const auto g = make_complete_bipartite(4, 12);
  CHECK(cyclic_bandwidth_sum_unweighted(g, label_graph(g)) == optimum_complete_bipartite(4, 12));
}

TEST_CASE("merge validates its input") {
  const auto g = make_path(4);
  CHECK_THROWS_AS(merge_paths({{0, 1}, {1, 2, 3}}, g), ContractError);
  CHECK_THROWS_AS(merge_paths({{0, 1}, {2}}, g), ContractError);
  CHECK_THROWS_AS(merge_paths({{0, 1, 2, 3}, {}}, g), ContractError);
  PartialOrder partial(g, std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(best_insertion(partial, std::vector<Vertex>{1, 2}, g), ContractError);
  CHECK_THROWS_AS(best_insertion(partial, std::vector<Vertex>{}, g), ContractError);
  CHECK_THROWS_AS(partial.insert(std::vector<Vertex>{2}, InsertionPlan{5, false, 0}), ContractError);
  CHECK_THROWS_AS(PartialOrder(g, std::vector<Vertex>{0, 0}), ContractError);
}

TEST_CASE("heuristic result is a bijection and never below the optimum") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto g = erdos_renyi(8, 0.4, s);
    const auto l = label_graph(g);
    std::vector<int> labels(l.perm().begin(), l.perm().end());
    std::sort(labels.begin(), labels.end());
    for (int i = 0; i < 8; ++i) CHECK(labels[static_cast<std::size_t>(i)] == i);
    CHECK(cyclic_bandwidth_sum(g, l) >= static_cast<double>(oracle::exhaustive_optimum(g)));
  }
}

TEST_CASE("weighted objective scales linearly") {
  const auto g = weighted_copy(erdos_renyi(30, 0.2, 4), 4);
  auto scaled = g.edges();
  for (auto& e : scaled) e.weight *= 3.0;
  const auto h = Graph::from_weighted_edges(g.vertex_count(), scaled);
  const auto lg = label_graph(g);
  CHECK(label_graph(h) == lg);
  CHECK(cyclic_bandwidth_sum(h, lg) == doctest::Approx(3.0 * cyclic_bandwidth_sum(g, lg)));
}

TEST_CASE("edge evaluations on cycles stay within 6 m n") {
  for (std::int64_t n : {16, 64, 128}) {
    MergeCounters counters;
    MergeOptions options;
    options.counters = &counters;
    const auto g = make_cycle(n);
    // Single-vertex paths force the most insertions.
    PathList singles;
    for (Vertex v = 0; v < n; ++v) singles.push_back({v});
    merge_paths(singles, g, options);
    CHECK(counters.edge_evaluations <= static_cast<std::uint64_t>(6 * n * n));
  }
}
