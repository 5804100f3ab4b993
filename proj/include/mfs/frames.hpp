#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mfs/canon.hpp"
#include "mfs/graph.hpp"

namespace mfs {

using Rng = std::mt19937_64;

// Independent generator for (seed, experiment, worker). Streams for different
// triples are decorrelated through std::seed_seq.
Rng make_stream(std::uint64_t seed, std::uint64_t experiment, std::uint64_t worker);

// Spanning-tree shapes used as sampling units.
enum class FrameKind : std::uint8_t {
  Fork,     // path with 2 edges, 3 vertices
  Trident,  // star with 3 leaves, 4 vertices
  Chain,    // path with 3 edges, 4 vertices
};

inline constexpr std::array<FrameKind, 3> kAllFrameKinds{FrameKind::Fork, FrameKind::Trident,
                                                         FrameKind::Chain};

std::string_view to_string(FrameKind kind);
FrameKind frame_kind_from_string(std::string_view name);
constexpr int frame_vertex_count(FrameKind kind) { return kind == FrameKind::Fork ? 3 : 4; }

// Exact instance counts over the undirected view:
//   fork    = sum_i C(k_i, 2)
//   trident = sum_i C(k_i, 3)
//   chain   = sum_{(i,j) in E} (k_i - 1)(k_j - 1), closed (triangle) chains included
struct FrameTotals {
  std::uint64_t fork = 0;
  std::uint64_t trident = 0;
  std::uint64_t chain = 0;

  std::uint64_t of(FrameKind kind) const;
  friend bool operator==(const FrameTotals&, const FrameTotals&) = default;
};

FrameTotals frame_totals(const Graph& g);

struct FrameSample {
  FrameKind kind = FrameKind::Fork;
  // Fork: (leaf, center, leaf). Trident: (center, leaf, leaf, leaf).
  // Chain: (a, i, j, b) with middle edge (i, j), i < j; a == b when degenerate.
  std::array<VertexId, 4> vertices{};
  bool degenerate = false;

  // Distinct vertices of the sample: 3 for forks and degenerate chains.
  std::span<const VertexId> vertex_set() const {
    return {vertices.data(), (kind == FrameKind::Fork || degenerate) ? 3u : 4u};
  }
};

// Equiprobable sampler over all instances of one frame kind. Preprocessing is
// O(V + E); each draw is one binary search over cumulative integer weights
// plus O(log k) neighbor lookups. The sampler keeps a reference to the graph.
class FrameSampler {
 public:
  FrameSampler(const Graph& g, FrameKind kind);

  FrameKind kind() const { return kind_; }
  std::uint64_t total() const { return total_; }
  const Graph& graph() const { return *graph_; }

  // Throws mfs::Error when the graph has no instance of this frame.
  FrameSample draw(Rng& rng) const;

 private:
  const Graph* graph_;
  FrameKind kind_;
  std::uint64_t total_ = 0;
  // Centers (fork, trident) or middle edges (chain) with nonzero weight, and
  // the inclusive running sum of their weights.
  std::vector<std::pair<VertexId, VertexId>> units_;
  std::vector<std::uint64_t> cumulative_;
};

// One-shot convenience wrappers; they rebuild the sampler on every call.
FrameSample sample_fork(const Graph& g, Rng& rng);
FrameSample sample_trident(const Graph& g, Rng& rng);
FrameSample sample_chain(const Graph& g, Rng& rng);

// koef(m, F): number of F-instances inside one instance of motif class m,
// counted on the motif's undirected view. Zero means F cannot detect m.
// Fork applies to 3-vertex families, trident and chain to 4-vertex ones.
class KoefTable {
 public:
  static KoefTable build(Family f);

  Family family() const { return family_; }
  std::uint32_t koef(int class_id, FrameKind kind) const;
  bool covers(int class_id, FrameKind kind) const { return koef(class_id, kind) > 0; }
  // Frame kinds that detect motifs of this family, in experiment order.
  std::vector<FrameKind> frames() const;

 private:
  Family family_;
  std::vector<std::array<std::uint32_t, 3>> koef_;
};

const KoefTable& koef_table(Family f);

// Instances of `kind` in the undirected graph given by a 3- or 4-vertex code,
// by direct enumeration. For chains only non-degenerate paths count.
std::uint32_t count_frames_in_code(Family f, std::uint32_t code, FrameKind kind);

}  // namespace mfs
