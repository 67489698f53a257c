#include "cbs/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "cbs/errors.hpp"
#include "cbs/random.hpp"

namespace cbs {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_probability(double p, const char* name) {
  require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
}

Graph from(std::int64_t n, const std::vector<Edge>& edges) {
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

// Every pair u < v in lexicographic order, kept with probability `keep(u, v)`.
template <typename Keep>
std::vector<Edge> sample_pairs(std::int64_t n, Rng& rng, Keep keep) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (const double p = keep(u, v); p > 0.0 && rng.bernoulli(p)) edges.push_back({u, v});
  return edges;
}

}  // namespace

Graph make_path(std::int64_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return from(n, edges);
}

Graph make_cycle(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n)});
  return from(n, edges);
}

Graph make_wheel(std::int64_t cycle_n) {
  require(cycle_n >= 3, "wheel needs a rim of at least 3 vertices");
  std::vector<Edge> edges;
  const auto hub = static_cast<Vertex>(cycle_n);
  for (Vertex u = 0; u < cycle_n; ++u) {
    edges.push_back({u, static_cast<Vertex>((u + 1) % cycle_n)});
    edges.push_back({u, hub});
  }
  return from(cycle_n + 1, edges);
}

Graph make_power_cycle(std::int64_t n, std::int64_t k) {
  require(k >= 1, "power of a cycle needs k >= 1");
  require(n > 2 * k + 1, "power of a cycle needs n > 2k + 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (std::int64_t d = 1; d <= k; ++d) edges.push_back({u, static_cast<Vertex>((u + d) % n)});
  return from(n, edges);
}

Graph make_complete(std::int64_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return from(n, edges);
}

Graph make_complete_bipartite(std::int64_t n1, std::int64_t n2) {
  require(n1 >= 1 && n2 >= 1, "complete bipartite graph needs n1, n2 >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = 0; b < n2; ++b) edges.push_back({a, static_cast<Vertex>(n1 + b)});
  return from(n1 + n2, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto m = static_cast<Vertex>(g.vertex_count());
  const auto n = static_cast<Vertex>(h.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * h.edge_count() + static_cast<std::size_t>(n) * g.edge_count());
  for (Vertex a = 0; a < m; ++a)
    for (const auto& e : h.edges()) edges.push_back({a * n + e.u, a * n + e.v});
  for (Vertex b = 0; b < n; ++b)
    for (const auto& e : g.edges()) edges.push_back({e.u * n + b, e.v * n + b});
  return Graph::from_edges(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), edges);
}

Graph erdos_renyi(std::int64_t n, double p, std::uint64_t seed) {
  require(n >= 1, "Erdos-Renyi graph needs n >= 1");
  require_probability(p, "p");
  constexpr int kAttempts = 100;
  Graph g;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    g = from(n, sample_pairs(n, rng, [p](Vertex, Vertex) { return p; }));
    if (g.is_connected()) break;
  }
  return g;
}

Graph barabasi_albert(std::int64_t n, std::uint64_t seed) {
  require(n >= 3, "Barabasi-Albert graph needs n >= 3");
  Rng rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  // Each vertex appears once per incident edge, so a uniform pick is degree-proportional.
  std::vector<Vertex> endpoints{0, 1, 1, 2, 0, 2};
  for (Vertex v = 3; v < n; ++v) {
    const Vertex target = endpoints[static_cast<std::size_t>(rng.below(endpoints.size()))];
    edges.push_back({target, v});
    endpoints.push_back(target);
    endpoints.push_back(v);
  }
  return from(n, edges);
}

Graph watts_strogatz(std::int64_t n, std::int64_t k, double p, std::uint64_t seed) {
  require(k >= 2 && k % 2 == 0, "Watts-Strogatz degree k must be even and >= 2");
  require(k < n, "Watts-Strogatz needs k < n");
  require_probability(p, "p");
  const auto half = k / 2;
  const auto in_lattice = [&](Vertex u, Vertex v) {
    const auto d = cyclic_distance(u, v, n);
    return d <= half;
  };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (std::int64_t d = 1; d <= half; ++d) {
      const auto v = static_cast<Vertex>((u + d) % n);
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  std::sort(edges.begin(), edges.end(), [](Edge a, Edge b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](Edge a, Edge b) { return a.u == b.u && a.v == b.v; }),
              edges.end());

  const double lattice = static_cast<double>(edges.size());
  const double free_pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 - lattice;
  const double extra = free_pairs > 0.0 ? std::min(1.0, p * lattice / free_pairs) : 0.0;
  Rng rng(seed);
  const auto added =
      sample_pairs(n, rng, [&](Vertex u, Vertex v) { return in_lattice(u, v) ? 0.0 : extra; });
  edges.insert(edges.end(), added.begin(), added.end());
  return from(n, edges);
}

Graph stochastic_block(std::int64_t n, std::int64_t communities, double p_intra, double p_inter,
                       std::uint64_t seed) {
  require(n >= 1, "stochastic block model needs n >= 1");
  require(communities >= 1, "stochastic block model needs at least one community");
  require_probability(p_intra, "p_intra");
  require_probability(p_inter, "p_inter");
  Rng rng(seed);
  std::vector<std::uint64_t> block(static_cast<std::size_t>(n));
  for (auto& b : block) b = rng.below(static_cast<std::uint64_t>(communities));
  return from(n, sample_pairs(n, rng, [&](Vertex u, Vertex v) {
                return block[static_cast<std::size_t>(u)] == block[static_cast<std::size_t>(v)]
                           ? p_intra
                           : p_inter;
              }));
}

// ---------------------------------------------------------------------------

namespace {

struct FamilyKeys {
  std::string_view name;
  std::vector<std::string_view> required;
  std::vector<std::string_view> optional;
};

const std::vector<FamilyKeys>& families() {
  static const std::vector<FamilyKeys> table{
      {"path", {"n"}, {}},
      {"cycle", {"n"}, {}},
      {"wheel", {"n"}, {}},
      {"pgc", {"n", "k"}, {}},
      {"complete", {"n"}, {}},
      {"cbg", {"n1", "n2"}, {}},
      {"er", {"n", "p"}, {"seed"}},
      {"ba", {"n"}, {"seed"}},
      {"ws", {"n", "k", "p"}, {"seed"}},
      {"sbm", {"n", "c", "p_intra", "p_inter"}, {"seed"}},
      {"product", {"g", "h", "m", "n"}, {}},
  };
  return table;
}

[[noreturn]] void bad_spec(const std::string& what) { throw FormatError("spec", 0, what); }

Graph factor(std::string_view name, std::int64_t size) {
  if (name == "path") return make_path(size);
  if (name == "cycle") return make_cycle(size);
  if (name == "complete") return make_complete(size);
  throw DomainError("product factors must be path, cycle or complete, got " + std::string(name));
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  GeneratorSpec spec;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(" \t\r\n", pos);
    if (start == std::string_view::npos) break;
    const auto stop = std::min(text.find_first_of(" \t\r\n", start), text.size());
    const auto token = text.substr(start, stop - start);
    pos = stop;
    const auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == token.size())
      bad_spec("expected key=value, got '" + std::string(token) + "'");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "family") {
      if (!spec.family.empty()) bad_spec("family given twice");
      spec.family = value;
    } else if (!spec.values.emplace(std::string(key), std::string(value)).second) {
      bad_spec("key '" + std::string(key) + "' given twice");
    }
  }
  if (spec.family.empty()) bad_spec("missing family=");
  const auto& table = families();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const FamilyKeys& f) { return f.name == spec.family; });
  if (it == table.end()) bad_spec("unknown family '" + spec.family + "'");
  for (const auto& [key, value] : spec.values) {
    if (std::find(it->required.begin(), it->required.end(), key) == it->required.end() &&
        std::find(it->optional.begin(), it->optional.end(), key) == it->optional.end())
      bad_spec("family " + spec.family + " does not take key '" + key + "'");
  }
  for (const auto key : it->required)
    if (!spec.values.contains(key))
      bad_spec("family " + spec.family + " needs " + std::string(key) + "=");
  return spec;
}

std::string GeneratorSpec::format() const {
  std::string out = "family=" + family;
  for (const auto& [key, value] : values) out += " " + key + "=" + value;
  return out;
}

std::string_view GeneratorSpec::text(std::string_view key) const {
  const auto it = values.find(key);
  if (it == values.end()) bad_spec("missing " + std::string(key) + "=");
  return it->second;
}

std::int64_t GeneratorSpec::integer(std::string_view key) const {
  const auto s = text(key);
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    bad_spec(std::string(key) + " must be an integer, got '" + std::string(s) + "'");
  return v;
}

double GeneratorSpec::real(std::string_view key) const {
  const auto s = text(key);
  double v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(v))
    bad_spec(std::string(key) + " must be a number, got '" + std::string(s) + "'");
  return v;
}

std::uint64_t GeneratorSpec::seed() const {
  if (!values.contains("seed")) return kDefaultSeed;
  const auto s = text("seed");
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    bad_spec("seed must be a nonnegative integer, got '" + std::string(s) + "'");
  return v;
}

Graph build(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  if (f == "path") return make_path(spec.integer("n"));
  if (f == "cycle") return make_cycle(spec.integer("n"));
  if (f == "wheel") {
    const auto n = spec.integer("n");
    require(n >= 4, "wheel needs n >= 4 vertices (rim of 3 plus hub)");
    return make_wheel(n - 1);
  }
  if (f == "pgc") return make_power_cycle(spec.integer("n"), spec.integer("k"));
  if (f == "complete") return make_complete(spec.integer("n"));
  if (f == "cbg") return make_complete_bipartite(spec.integer("n1"), spec.integer("n2"));
  if (f == "er") return erdos_renyi(spec.integer("n"), spec.real("p"), spec.seed());
  if (f == "ba") return barabasi_albert(spec.integer("n"), spec.seed());
  if (f == "ws")
    return watts_strogatz(spec.integer("n"), spec.integer("k"), spec.real("p"), spec.seed());
  if (f == "sbm")
    return stochastic_block(spec.integer("n"), spec.integer("c"), spec.real("p_intra"),
                            spec.real("p_inter"), spec.seed());
  if (f == "product")
    return cartesian_product(factor(spec.text("g"), spec.integer("m")),
                             factor(spec.text("h"), spec.integer("n")));
  bad_spec("unknown family '" + f + "'");
}

}  // namespace cbs
