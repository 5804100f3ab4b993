#include "mfs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace mfs {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

void build_csr(std::size_t n, std::vector<std::pair<VertexId, VertexId>>& pairs,
               std::vector<std::size_t>& offsets, std::vector<VertexId>& targets) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  offsets.assign(n + 1, 0);
  for (auto [u, v] : pairs) ++offsets[u + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(pairs.size());
  // Pairs are sorted, so each row comes out sorted.
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : pairs) targets[cursor[u]++] = v;
}

bool sorted_contains(std::span<const VertexId> row, VertexId v) {
  return std::binary_search(row.begin(), row.end(), v);
}

}  // namespace

Graph Graph::from_edges(std::size_t n, bool directed,
                        std::span<const std::pair<VertexId, VertexId>> pairs) {
  Graph g;
  g.directed_ = directed;
  std::vector<std::pair<VertexId, VertexId>> sym;
  std::vector<std::pair<VertexId, VertexId>> out;
  sym.reserve(pairs.size() * 2);
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) throw Error("vertex id out of range");
    if (u == v) continue;
    sym.emplace_back(u, v);
    sym.emplace_back(v, u);
    if (directed) out.emplace_back(u, v);
  }
  build_csr(n, sym, g.offsets_, g.neighbors_);
  if (directed) build_csr(n, out, g.out_offsets_, g.out_neighbors_);
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(VertexId u, VertexId v) const { return sorted_contains(neighbors(u), v); }

bool Graph::has_arc(VertexId u, VertexId v) const {
  if (!directed_) return adjacent(u, v);
  return sorted_contains(out_neighbors(u), v);
}

std::span<const VertexId> Graph::out_neighbors(VertexId v) const {
  if (!directed_) return neighbors(v);
  return {out_neighbors_.data() + out_offsets_[v], out_neighbors_.data() + out_offsets_[v + 1]};
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::arcs() const {
  if (!directed_) return edges();
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arc_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : out_neighbors(u)) out.emplace_back(u, v);
  }
  return out;
}

LoadedGraph load_graph(std::istream& in, bool directed) {
  LoadedGraph result;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(result.labels.size()));
    if (inserted) result.labels.push_back(label);
    return it->second;
  };

  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;  // blank
    if (a.front() == '#') continue;
    if (!(tokens >> b) || (tokens >> extra)) {
      throw ParseError(lineno, "expected exactly two vertex labels");
    }
    VertexId u = intern(a);
    VertexId v = intern(b);
    ++result.report.pairs;
    if (u == v) {
      ++result.report.self_loops_dropped;
      continue;
    }
    if (!directed && v < u) std::swap(u, v);
    pairs.emplace_back(u, v);
  }
  result.report.lines = lineno;
  if (result.report.pairs == 0) throw Error("edge list contains no vertex pairs");

  std::sort(pairs.begin(), pairs.end());
  auto last = std::unique(pairs.begin(), pairs.end());
  result.report.duplicates_dropped = static_cast<std::size_t>(pairs.end() - last);
  pairs.erase(last, pairs.end());

  result.graph = Graph::from_edges(result.labels.size(), directed, pairs);
  result.report.vertex_count = result.graph.vertex_count();
  result.report.edge_count = result.graph.edge_count();
  result.report.arc_count = result.graph.arc_count();
  return result;
}

LoadedGraph load_graph(std::string_view text, bool directed) {
  std::istringstream in{std::string(text)};
  return load_graph(in, directed);
}

LoadedGraph load_graph_file(const std::filesystem::path& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_graph(in, directed);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.vertex_count() << '\n';
  for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  // Isolated vertices survive a reload as dropped self-loops.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << v << ' ' << v << '\n';
  }
  return out.str();
}

std::uint32_t induced_subgraph_code(const Graph& g, std::span<const VertexId> vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k != 3 && k != 4) throw Error("induced subgraph code needs 3 or 4 vertices");
  for (int i = 0; i < k; ++i) {
    if (vertices[i] >= g.vertex_count()) throw Error("vertex id out of range");
    for (int j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) throw Error("repeated vertex in subgraph");
    }
  }
  return induced_subgraph_code_unchecked(g, vertices);
}

std::uint32_t induced_subgraph_code_unchecked(const Graph& g, std::span<const VertexId> vertices) {
  // Same layouts as pair_bit(), spelled out for the sampling hot path.
  static constexpr int kUndirected[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  static constexpr int kUndirected3[3][3] = {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}};
  static constexpr int kDirected4[4][4] = {
      {-1, 0, 1, 2}, {3, -1, 4, 5}, {6, 7, -1, 8}, {9, 10, 11, -1}};
  static constexpr int kDirected3[3][3] = {{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}};

  const std::size_t k = vertices.size();
  std::uint32_t code = 0;
  if (!g.directed()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (g.adjacent(vertices[i], vertices[j])) {
          code |= 1u << (k == 3 ? kUndirected3[i][j] : kUndirected[i][j]);
        }
      }
    }
    return code;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && g.has_arc(vertices[i], vertices[j])) {
        code |= 1u << (k == 3 ? kDirected3[i][j] : kDirected4[i][j]);
      }
    }
  }
  return code;
}

}  // namespace mfs
