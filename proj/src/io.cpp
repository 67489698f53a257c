#include "cbs/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cbs/bench.hpp"
#include "cbs/errors.hpp"

namespace cbs {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (true) {
    const auto start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    const auto stop = std::min(line.find_first_of(" \t\r", start), line.size());
    tokens.push_back(line.substr(start, stop - start));
    pos = stop;
  }
  return tokens;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && end == s.data() + s.size();
}

std::string shortest(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ec == std::errc{} ? end : buf);
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), 0, "cannot open file");
  return in;
}

const std::string& id_of(const std::vector<std::string>& ids, Vertex v, std::string& scratch) {
  if (ids.empty()) return scratch = std::to_string(v);
  return ids[static_cast<std::size_t>(v)];
}

void check_ids(const std::vector<std::string>& ids, std::size_t n) {
  if (ids.empty()) return;
  if (ids.size() != n) throw ContractError("id list does not match the vertex count");
  for (const auto& id : ids)
    if (id.empty() || id.front() == '#' || id.find_first_of(" \t\r\n") != std::string::npos)
      throw ContractError("vertex id '" + id + "' cannot be written to an edge list");
}

}  // namespace

Graph read_matrix_market(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& what) -> void { throw FormatError(source, line_no, what); };

  if (!std::getline(in, line)) fail("empty input");
  ++line_no;
  const auto header = split(line);
  if (header.size() != 5 || lower(header[0]) != "%%matrixmarket")
    fail("expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
  if (lower(header[1]) != "matrix" || lower(header[2]) != "coordinate")
    fail("only coordinate matrices are supported");
  const auto field = lower(header[3]);
  const auto symmetry = lower(header[4]);
  if (field != "real" && field != "integer" && field != "pattern")
    fail("unsupported field '" + std::string(header[3]) + "'");
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric")
    fail("unsupported symmetry '" + std::string(header[4]) + "'");
  const bool pattern = field == "pattern";

  std::int64_t rows = -1, cols = -1, entries = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (tokens.size() != 3 || !parse_number(tokens[0], rows) || !parse_number(tokens[1], cols) ||
        !parse_number(tokens[2], entries) || rows < 0 || cols < 0 || entries < 0)
      fail("malformed size line");
    break;
  }
  if (rows < 0) fail("missing size line");
  if (rows != cols)
    fail("matrix is not square (" + std::to_string(rows) + " x " + std::to_string(cols) + ")");
  if (rows == 0) fail("matrix has dimension 0");

  std::vector<Edge> edges;
  std::int64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (seen == entries) fail("more entries than declared");
    ++seen;
    std::int64_t i = 0, j = 0;
    if (tokens.size() != (pattern ? 2u : 3u) || !parse_number(tokens[0], i) ||
        !parse_number(tokens[1], j))
      fail("malformed entry");
    if (i < 1 || i > rows || j < 1 || j > rows) fail("index out of range");
    bool nonzero = true;
    if (!pattern) {
      double value = 0;
      if (!parse_number(tokens[2], value)) fail("malformed value '" + std::string(tokens[2]) + "'");
      nonzero = value != 0.0;
    }
    if (!nonzero || i == j) continue;
    const auto a = static_cast<Vertex>(std::min(i, j) - 1);
    const auto b = static_cast<Vertex>(std::max(i, j) - 1);
    edges.push_back({a, b});
  }
  if (seen != entries)
    fail("expected " + std::to_string(entries) + " entries, found " + std::to_string(seen));

  std::sort(edges.begin(), edges.end(),
            [](Edge x, Edge y) { return x.u != y.u ? x.u < y.u : x.v < y.v; });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](Edge x, Edge y) { return x.u == y.u && x.v == y.v; }),
              edges.end());
  return Graph::from_edges(static_cast<std::size_t>(rows), edges);
}

Graph read_matrix_market(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_matrix_market(in, path.string());
}

LoadedGraph read_edge_list(std::istream& in, bool weighted, const std::string& source) {
  LoadedGraph out;
  std::unordered_map<std::string, Vertex> index;
  const auto vertex = [&](std::string_view id) {
    const auto [it, fresh] = index.try_emplace(std::string(id), static_cast<Vertex>(out.ids.size()));
    if (fresh) out.ids.emplace_back(id);
    return it->second;
  };
  std::map<std::pair<Vertex, Vertex>, double> edges;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fail = [&](const std::string& what) { throw FormatError(source, line_no, what); };
    auto text = std::string_view(line);
    text = text.substr(0, text.find('#'));
    const auto tokens = split(text);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      vertex(tokens[0]);
      continue;
    }
    if (tokens.size() > 3) fail("expected 'u v [w]'");
    double w = 1.0;
    if (weighted) {
      if (tokens.size() != 3) fail("missing weight");
      if (!parse_number(tokens[2], w) || !std::isfinite(w) || w <= 0.0)
        fail("weight must be a positive number, got '" + std::string(tokens[2]) + "'");
    }
    const Vertex u = vertex(tokens[0]);
    const Vertex v = vertex(tokens[1]);
    if (u == v) fail("self-loop on '" + std::string(tokens[0]) + "'");
    const auto key = std::minmax(u, v);
    const auto [it, fresh] = edges.try_emplace({key.first, key.second}, w);
    if (!fresh && it->second != w)
      fail("edge " + std::string(tokens[0]) + " " + std::string(tokens[1]) +
           " repeated with a different weight");
  }
  if (out.ids.empty()) throw FormatError(source, line_no, "no vertices");

  const auto n = out.ids.size();
  if (weighted) {
    std::vector<WeightedEdge> list;
    for (const auto& [e, w] : edges) list.push_back({e.first, e.second, w});
    out.graph = Graph::from_weighted_edges(n, list);
  } else {
    std::vector<Edge> list;
    for (const auto& [e, w] : edges) list.push_back({e.first, e.second});
    out.graph = Graph::from_edges(n, list);
  }
  return out;
}

LoadedGraph read_edge_list(const std::filesystem::path& path, bool weighted) {
  auto in = open_input(path);
  return read_edge_list(in, weighted, path.string());
}

void write_edge_list(std::ostream& out, const Graph& graph, const std::vector<std::string>& ids) {
  check_ids(ids, graph.vertex_count());
  std::string a, b;
  // Declaring every vertex first keeps indices stable on re-reading.
  out << "# n=" << graph.vertex_count() << " m=" << graph.edge_count() << '\n';
  for (Vertex v = 0; static_cast<std::size_t>(v) < graph.vertex_count(); ++v)
    out << id_of(ids, v, a) << '\n';
  for (const auto& e : graph.edges()) {
    out << id_of(ids, e.u, a) << ' ' << id_of(ids, e.v, b);
    if (graph.is_weighted()) out << ' ' << shortest(e.weight);
    out << '\n';
  }
}

void write_matrix_market(std::ostream& out, const Graph& graph) {
  const bool weighted = graph.is_weighted();
  out << "%%MatrixMarket matrix coordinate " << (weighted ? "real" : "pattern") << " symmetric\n";
  const auto n = graph.vertex_count();
  out << n << ' ' << n << ' ' << graph.edge_count() << '\n';
  for (const auto& e : graph.edges()) {
    out << e.v + 1 << ' ' << e.u + 1;
    if (weighted) out << ' ' << shortest(e.weight);
    out << '\n';
  }
}

void write_labeling(std::ostream& out, const Labeling& labeling, const std::vector<std::string>& ids) {
  check_ids(ids, labeling.size());
  std::string scratch;
  for (Vertex v = 0; static_cast<std::size_t>(v) < labeling.size(); ++v)
    out << id_of(ids, v, scratch) << ' ' << labeling[v] << '\n';
}

void write_dot(std::ostream& out, const Graph& graph, const Labeling& labeling,
               const std::vector<std::string>& ids) {
  const auto n = graph.vertex_count();
  if (labeling.size() != n) throw ContractError("labeling does not match the graph");
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + '"';
  };
  std::string scratch;
  const double radius = std::max(1.0, static_cast<double>(n) / 6.0);
  const double half = std::max<double>(1.0, static_cast<double>(n / 2));
  const double pi = std::acos(-1.0);
  double heaviest = 1.0;
  for (const auto& e : graph.edges()) heaviest = std::max(heaviest, e.weight);

  out << "graph cbs {\n  layout=neato;\n  node [shape=circle, style=filled, fontsize=10];\n";
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    const auto l = labeling[v];
    const double angle = 2.0 * pi * l / static_cast<double>(n);
    const auto d = cyclic_distance(l, 0, static_cast<std::int64_t>(n));
    const int gray = static_cast<int>(std::lround(200.0 * static_cast<double>(d) / half));
    char color[8];
    std::snprintf(color, sizeof color, "#%02x%02x%02x", gray, gray, gray);
    out << "  " << quote(id_of(ids, v, scratch)) << " [label=" << quote(std::to_string(l))
        << ", pos=\"" << fixed(radius * std::cos(angle), 3) << ',' << fixed(radius * std::sin(angle), 3)
        << "!\", fillcolor=\"" << color << "\", fontcolor=\"" << (gray < 110 ? "white" : "black")
        << "\"];\n";
  }
  std::string other;
  for (const auto& e : graph.edges()) {
    out << "  " << quote(id_of(ids, e.u, scratch)) << " -- " << quote(id_of(ids, e.v, other));
    if (graph.is_weighted()) out << " [penwidth=" << fixed(0.5 + 3.5 * e.weight / heaviest, 2) << ']';
    out << ";\n";
  }
  out << "}\n";
}

void write_csv_stats(std::ostream& out, const std::vector<RunStats>& rows) {
  const auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  };
  out << "instance,n,m,median_cbs,mad_cbs,min_cbs,ref,ref_kind,rd,mean_time_s\r\n";
  for (const auto& r : rows) {
    out << field(r.instance) << ',' << r.n << ',' << r.m << ',' << shortest(r.median_cbs) << ','
        << shortest(r.mad_cbs) << ',' << shortest(r.min_cbs) << ','
        << (r.ref ? std::to_string(r.ref->value) : "") << ','
        << (r.ref ? std::string(to_string(r.ref->kind)) : "") << ','
        << (r.rd ? fixed(*r.rd, 2) : "") << ',' << fixed(r.mean_time_s, 4) << "\r\n";
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string(), 0, "cannot open file for writing");
  out << contents;
  if (!out) throw FormatError(path.string(), 0, "write failed");
}

}  // namespace cbs
