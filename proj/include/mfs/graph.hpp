#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mfs {

using VertexId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Simple graph in compressed sparse row form. The undirected view (adjacency,
// degree) is always present; directed graphs additionally keep sorted
// out-neighbor lists so arc membership is a binary search.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from raw pairs over [0, n). Self-loops and duplicates are
  // dropped here; callers wanting the counts should go through load_graph.
  static Graph from_edges(std::size_t n, bool directed,
                          std::span<const std::pair<VertexId, VertexId>> pairs);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  bool directed() const { return directed_; }

  // Edges of the undirected view; reciprocal arcs count once.
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  // Arcs for directed graphs, edges otherwise.
  std::size_t arc_count() const { return directed_ ? out_neighbors_.size() : edge_count(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  bool adjacent(VertexId u, VertexId v) const;
  // Arc u->v. On undirected graphs this is plain adjacency.
  bool has_arc(VertexId u, VertexId v) const;

  std::span<const VertexId> out_neighbors(VertexId v) const;

  // Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  // Arcs of a directed graph (or edges of an undirected one), sorted.
  std::vector<std::pair<VertexId, VertexId>> arcs() const;

 private:
  bool directed_ = false;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_neighbors_;
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t pairs = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t arc_count = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
  // Dense id -> original label.
  std::vector<std::string> labels;
};

// Parses a SNAP-style edge list: one whitespace-separated label pair per line,
// '#' starts a comment line. Labels are arbitrary tokens and are remapped to
// dense ids in order of first appearance. Self-loop endpoints still register
// their vertex.
LoadedGraph load_graph(std::istream& in, bool directed);
LoadedGraph load_graph(std::string_view text, bool directed);
LoadedGraph load_graph_file(const std::filesystem::path& path, bool directed);

// Edge-list text for g (arcs for directed graphs), using dense ids as labels.
std::string serialize_edge_list(const Graph& g);

// Adjacency bitmask of the subgraph induced on `vertices` (3 or 4 of them) in
// the given order. Bit layout is described in canon.hpp.
std::uint32_t induced_subgraph_code(const Graph& g, std::span<const VertexId> vertices);
// No validation; vertices must be 3 or 4 distinct in-range ids.
std::uint32_t induced_subgraph_code_unchecked(const Graph& g, std::span<const VertexId> vertices);

}  // namespace mfs
