#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cbs/errors.hpp"
#include "cbs/generators.hpp"

using namespace cbs;

TEST_CASE("deterministic families") {
  const auto pc = make_power_cycle(8, 2);
  CHECK(std::vector<Vertex>(pc.neighbors(0).begin(), pc.neighbors(0).end()) ==
        std::vector<Vertex>{1, 2, 6, 7});
  for (Vertex v = 0; v < 8; ++v) CHECK(pc.degree(v) == 4);

  const auto w = make_wheel(4);
  CHECK(w.vertex_count() == 5);
  CHECK(w.edge_count() == 8);
  CHECK(w.degree(4) == 4);

  const auto b = make_complete_bipartite(8, 2);
  CHECK(b.edge_count() == 16);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) CHECK_FALSE(b.adjacent(u, v));
  CHECK_FALSE(b.adjacent(8, 9));

  CHECK(make_complete(6).edge_count() == 15);
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_cycle(3).edge_count() == 3);
}

TEST_CASE("family minimums") {
  CHECK_THROWS_AS(make_path(0), DomainError);
  CHECK_THROWS_AS(make_cycle(2), DomainError);
  CHECK_THROWS_AS(make_wheel(2), DomainError);
  CHECK_THROWS_AS(make_power_cycle(5, 2), DomainError);
  CHECK_THROWS_AS(make_complete_bipartite(3, 0), DomainError);
  CHECK_THROWS_AS(erdos_renyi(10, 1.5, 1), DomainError);
  CHECK_THROWS_AS(barabasi_albert(2, 1), DomainError);
  CHECK_THROWS_AS(watts_strogatz(10, 3, 0.1, 1), DomainError);
  CHECK_THROWS_AS(watts_strogatz(4, 4, 0.1, 1), DomainError);
  CHECK_THROWS_AS(stochastic_block(10, 0, 0.5, 0.1, 1), DomainError);
}

TEST_CASE("cartesian products") {
  const auto grid = cartesian_product(make_path(2), make_path(2));
  CHECK(grid.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(grid.degree(v) == 2);
  CHECK(grid.is_connected());
  CHECK(cartesian_product(make_complete(2), make_complete(2)).edge_count() == 4);
  CHECK(cartesian_product(make_path(3), make_path(3)).edge_count() == 12);
  // (a, b) -> a * |V_H| + b
  const auto pc = cartesian_product(make_path(2), make_cycle(3));
  CHECK(pc.adjacent(0, 3));
  CHECK(pc.adjacent(3, 5));
  CHECK_FALSE(pc.adjacent(0, 4));
  const auto big = cartesian_product(make_cycle(5), make_complete(4));
  CHECK(big.edge_count() == 5 * 6 + 4 * 5);
}

TEST_CASE("Erdos-Renyi extremes and edge counts") {
  CHECK(erdos_renyi(100, 0.0, 1).edge_count() == 0);
  CHECK(erdos_renyi(100, 1.0, 1).edge_count() == 4950);
  const double sigma = std::sqrt(4950 * 0.3 * 0.7);
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto g = erdos_renyi(100, 0.3, s);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - 1485.0) <= 4 * sigma);
    CHECK(g.is_connected());
  }
}

TEST_CASE("random families are reproducible") {
  CHECK(erdos_renyi(50, 0.2, 7) == erdos_renyi(50, 0.2, 7));
  CHECK_FALSE(erdos_renyi(50, 0.2, 7) == erdos_renyi(50, 0.2, 8));
  CHECK(barabasi_albert(80, 3) == barabasi_albert(80, 3));
  CHECK(watts_strogatz(40, 4, 0.1, 3) == watts_strogatz(40, 4, 0.1, 3));
  CHECK(stochastic_block(40, 3, 0.9, 0.01, 3) == stochastic_block(40, 3, 0.9, 0.01, 3));
}

TEST_CASE("Barabasi-Albert growth") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = barabasi_albert(200, s);
    CHECK(g.edge_count() == 200);
    CHECK(g.is_connected());
  }
}

TEST_CASE("Watts-Strogatz keeps the lattice and adds about p n k / 2 edges") {
  CHECK(watts_strogatz(30, 4, 0.0, 1).edge_count() == 60);
  const auto g = watts_strogatz(30, 4, 0.0, 1);
  for (Vertex v = 0; v < 30; ++v) CHECK(g.degree(v) == 4);
  double added = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto h = watts_strogatz(100, 4, 0.2, s);
    for (Vertex v = 0; v < 100; ++v) {
      CHECK(h.adjacent(v, static_cast<Vertex>((v + 1) % 100)));
      CHECK(h.adjacent(v, static_cast<Vertex>((v + 2) % 100)));
    }
    added += static_cast<double>(h.edge_count()) - 200.0;
  }
  CHECK(added / 40.0 == doctest::Approx(40.0).epsilon(0.1));
}

TEST_CASE("stochastic block model separates communities") {
  const auto g = stochastic_block(200, 4, 0.9, 0.01, 5);
  // Without the assignment, compare densities through common neighbours: an
  // edge inside a community shares many neighbours, a cross edge almost none.
  std::size_t dense = 0;
  for (const auto& e : g.edges()) {
    std::size_t common = 0;
    for (Vertex x : g.neighbors(e.u)) common += g.adjacent(x, e.v) ? 1 : 0;
    if (common > 10) ++dense;
  }
  const double total = static_cast<double>(g.edge_count());
  // About 200^2/8 * 0.9 intra edges versus 200^2 * 3/8 * 0.01 inter edges.
  CHECK(total == doctest::Approx(4500.0 + 150.0).epsilon(0.15));
  CHECK(static_cast<double>(dense) / total > 0.9);
}

TEST_CASE("spec text round trip") {
  const auto spec = GeneratorSpec::parse("family=ws n=100 k=4 p=0.1 seed=7");
  CHECK(spec.family == "ws");
  CHECK(spec.integer("n") == 100);
  CHECK(spec.real("p") == 0.1);
  CHECK(spec.seed() == 7);
  CHECK(GeneratorSpec::parse(spec.format()) == spec);
  CHECK(GeneratorSpec::parse("family=er n=5 p=0.5").seed() == kDefaultSeed);
  CHECK(build(GeneratorSpec::parse("family=wheel n=6")).vertex_count() == 6);
  CHECK(build(GeneratorSpec::parse("family=product g=path h=complete m=5 n=5")).vertex_count() == 25);
  CHECK_THROWS_AS(GeneratorSpec::parse("family=cycle"), FormatError);
  CHECK_THROWS_AS(GeneratorSpec::parse("family=cycle n=5 k=2"), FormatError);
  CHECK_THROWS_AS(GeneratorSpec::parse("family=blob n=5"), FormatError);
  CHECK_THROWS_AS(GeneratorSpec::parse("n=5"), FormatError);
  CHECK_THROWS_AS(GeneratorSpec::parse("family=cycle n"), FormatError);
  CHECK_THROWS_AS(GeneratorSpec::parse("family=cycle n=abc").integer("n"), FormatError);
  CHECK_THROWS_AS(build(GeneratorSpec::parse("family=cycle n=2")), DomainError);
  CHECK_THROWS_AS(build(GeneratorSpec::parse("family=wheel n=3")), DomainError);
}
