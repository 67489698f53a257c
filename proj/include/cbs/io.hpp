#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cbs/graph.hpp"

namespace cbs {

struct RunStats;

/// Matrix Market coordinate file (real, integer or pattern; general,
/// symmetric or skew-symmetric) read as an unweighted graph: {i, j} is an
/// edge iff some stored entry at (i, j) or (j, i) with i != j is nonzero.
/// Throws FormatError with the offending line.
Graph read_matrix_market(std::istream& in, const std::string& source = "<stream>");
Graph read_matrix_market(const std::filesystem::path& path);

/// A graph whose vertices carry external string identifiers.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> ids;  // ids[v] is the name of vertex v
};

/// Whitespace-separated "u v [w]" lines; '#' starts a comment; a line with a
/// single token declares an isolated vertex. Vertex indices follow the order
/// of first appearance. Repeated edges must agree on the weight. Weights are
/// read (and required) only when `weighted` is set.
LoadedGraph read_edge_list(std::istream& in, bool weighted, const std::string& source = "<stream>");
LoadedGraph read_edge_list(const std::filesystem::path& path, bool weighted);

/// Inverse of read_edge_list: isolated vertices first as single tokens, then
/// one "u v [w]" line per edge. With no ids, vertex indices are used.
void write_edge_list(std::ostream& out, const Graph& graph,
                     const std::vector<std::string>& ids = {});

/// "%%MatrixMarket matrix coordinate pattern symmetric" (or real when weighted),
/// lower triangle only.
void write_matrix_market(std::ostream& out, const Graph& graph);

/// One "id label" line per vertex in index order.
void write_labeling(std::ostream& out, const Labeling& labeling,
                    const std::vector<std::string>& ids = {});

/// Vertices placed on a circle by label and shaded from black (label 0) to
/// light gray (label n/2) by cyclic distance; heavier edges get thicker pens.
void write_dot(std::ostream& out, const Graph& graph, const Labeling& labeling,
               const std::vector<std::string>& ids = {});

/// RFC 4180 table with columns
/// instance,n,m,median_cbs,mad_cbs,min_cbs,ref,ref_kind,rd,mean_time_s.
/// Missing ref / rd are written as empty fields.
void write_csv_stats(std::ostream& out, const std::vector<RunStats>& rows);

/// Opens `path` for writing or throws FormatError.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace cbs
