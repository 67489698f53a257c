#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbs/errors.hpp"
#include "cbs/generators.hpp"
#include "cbs/graph.hpp"
#include "cbs/random.hpp"
#include "oracles.hpp"

using namespace cbs;

TEST_CASE("cyclic distance") {
  CHECK(cyclic_distance(2, 9, 10) == 3);
  CHECK(cyclic_distance(9, 2, 10) == 3);
  CHECK(cyclic_distance(0, 5, 10) == 5);
  CHECK(cyclic_distance(4, 4, 10) == 0);
  CHECK(cyclic_distance(0, 1, 2) == 1);
}

TEST_CASE("construction validates input") {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(0, {}), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(2, loop), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(2, dup), ContractError);
  CHECK_THROWS_AS(Graph::from_edges(3, out), ContractError);
  const std::vector<WeightedEdge> bad{{0, 1, -1.0}};
  CHECK_THROWS_AS(Graph::from_weighted_edges(2, bad), ContractError);
}

TEST_CASE("adjacency queries") {
  const std::vector<WeightedEdge> edges{{2, 0, 1.5}, {0, 1, 2.0}};
  const auto g = Graph::from_weighted_edges(3, edges);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.is_weighted());
  CHECK(g.degree(0) == 2);
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(*g.weight(0, 2) == 1.5);
  CHECK_FALSE(g.weight(1, 2).has_value());
  CHECK(g.total_weight() == 3.5);
  CHECK(g.neighbors(0)[0] == 1);
  CHECK(g.is_connected());
  CHECK_FALSE(Graph::from_edges(3, {}).is_connected());
}

TEST_CASE("labeling must be a bijection") {
  CHECK_THROWS_AS(Labeling({0, 0, 1}), ContractError);
  CHECK_THROWS_AS(Labeling({0, 3, 1}), ContractError);
  CHECK_THROWS_AS(Labeling(std::vector<Label>{}), ContractError);
  const Labeling l({2, 0, 1});
  CHECK(l.order() == std::vector<Vertex>{1, 2, 0});
  CHECK(Labeling::from_order(l.order()) == l);
}

TEST_CASE("objective on small families") {
  CHECK(cyclic_bandwidth_sum_unweighted(make_cycle(4), Labeling::identity(4)) == 4);
  CHECK(cyclic_bandwidth_sum_unweighted(make_path(5), Labeling::identity(5)) == 4);
  // K4: four edges at distance 1, two at distance 2.
  CHECK(cyclic_bandwidth_sum_unweighted(make_complete(4), Labeling::identity(4)) == 8);
  CHECK_THROWS_AS(cyclic_bandwidth_sum(make_path(3), Labeling::identity(4)), ContractError);
}

TEST_CASE("objective agrees with the naive oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = erdos_renyi(15, 0.3, s);
    Rng rng(s);
    const auto perm = rng.permutation(15);
    const Labeling l(std::vector<Label>(perm.begin(), perm.end()));
    const std::vector<int> labels(perm.begin(), perm.end());
    CHECK(cyclic_bandwidth_sum(g, l) == oracle::cbs(g, labels));
    CHECK(static_cast<double>(cyclic_bandwidth_sum_unweighted(g, l)) == oracle::cbs(g, labels));
  }
}

TEST_CASE("rotation and reflection preserve the objective") {
  const auto g = erdos_renyi(12, 0.4, 3);
  Rng rng(9);
  const auto perm = rng.permutation(12);
  const Labeling l(std::vector<Label>(perm.begin(), perm.end()));
  const auto base = cyclic_bandwidth_sum_unweighted(g, l);
  for (std::int64_t r = 0; r < 12; ++r) {
    CHECK(cyclic_bandwidth_sum_unweighted(g, rotate_labels(l, r)) == base);
    CHECK(cyclic_bandwidth_sum_unweighted(g, reflect_labels(rotate_labels(l, r))) == base);
  }
  CHECK_THROWS_AS(rotate_labels(l, 12), ContractError);
}

TEST_CASE("vertex renaming keeps structure") {
  const auto g = make_path(4);
  const std::vector<Vertex> rename{3, 1, 0, 2};
  const auto h = relabel_vertices(g, rename);
  CHECK(h.adjacent(3, 1));
  CHECK(h.adjacent(1, 0));
  CHECK(h.adjacent(0, 2));
  CHECK(h.edge_count() == 3);
  const std::vector<Vertex> bad{0, 0, 1, 2};
  CHECK_THROWS_AS(relabel_vertices(g, bad), ContractError);
}
