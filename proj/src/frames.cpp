#include "mfs/frames.hpp"

#include <algorithm>
#include <string>

namespace mfs {

Rng make_stream(std::uint64_t seed, std::uint64_t experiment, std::uint64_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(experiment), static_cast<std::uint32_t>(worker),
                    0x6d6673u};
  return Rng(seq);
}

std::string_view to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::Fork:
      return "fork";
    case FrameKind::Trident:
      return "trident";
    case FrameKind::Chain:
      return "chain";
  }
  return "?";
}

FrameKind frame_kind_from_string(std::string_view name) {
  for (FrameKind k : kAllFrameKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error("unknown frame kind '" + std::string(name) + "'");
}

std::uint64_t FrameTotals::of(FrameKind kind) const {
  switch (kind) {
    case FrameKind::Fork:
      return fork;
    case FrameKind::Trident:
      return trident;
    case FrameKind::Chain:
      return chain;
  }
  return 0;
}

namespace {

std::uint64_t choose2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }
std::uint64_t choose3(std::uint64_t k) { return k < 3 ? 0 : k * (k - 1) / 2 * (k - 2) / 3; }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("frame count overflows 64 bits");
  return out;
}

std::uint64_t chain_weight(const Graph& g, VertexId i, VertexId j) {
  return static_cast<std::uint64_t>(g.degree(i) - 1) * (g.degree(j) - 1);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

// Uniform neighbor of v other than `excluded` (which must be a neighbor).
VertexId neighbor_except(const Graph& g, VertexId v, VertexId excluded, Rng& rng) {
  auto nb = g.neighbors(v);
  auto skip = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), excluded) - nb.begin());
  auto pick = static_cast<std::size_t>(uniform_below(rng, nb.size() - 1));
  if (pick >= skip) ++pick;
  return nb[pick];
}

}  // namespace

FrameTotals frame_totals(const Graph& g) {
  FrameTotals t;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    t.fork = checked_add(t.fork, choose2(g.degree(v)));
    t.trident = checked_add(t.trident, choose3(g.degree(v)));
    for (VertexId u : g.neighbors(v)) {
      if (v < u) t.chain = checked_add(t.chain, chain_weight(g, v, u));
    }
  }
  return t;
}

FrameSampler::FrameSampler(const Graph& g, FrameKind kind) : graph_(&g), kind_(kind) {
  auto push = [this](VertexId a, VertexId b, std::uint64_t w) {
    if (w == 0) return;
    total_ = checked_add(total_, w);
    units_.emplace_back(a, b);
    cumulative_.push_back(total_);
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    switch (kind) {
      case FrameKind::Fork:
        push(v, v, choose2(g.degree(v)));
        break;
      case FrameKind::Trident:
        push(v, v, choose3(g.degree(v)));
        break;
      case FrameKind::Chain:
        for (VertexId u : g.neighbors(v)) {
          if (v < u) push(v, u, chain_weight(g, v, u));
        }
        break;
    }
  }
}

FrameSample FrameSampler::draw(Rng& rng) const {
  if (total_ == 0) throw Error("no " + std::string(to_string(kind_)) + "s in graph");
  const std::uint64_t r = uniform_below(rng, total_);
  const auto unit = static_cast<std::size_t>(
      std::upper_bound(cumulative_.begin(), cumulative_.end(), r) - cumulative_.begin());
  const auto [i, j] = units_[unit];
  const Graph& g = *graph_;

  FrameSample s;
  s.kind = kind_;
  switch (kind_) {
    case FrameKind::Fork: {
      auto nb = g.neighbors(i);
      auto a = static_cast<std::size_t>(uniform_below(rng, nb.size()));
      auto b = static_cast<std::size_t>(uniform_below(rng, nb.size() - 1));
      if (b >= a) ++b;
      s.vertices = {nb[a], i, nb[b], 0};
      break;
    }
    case FrameKind::Trident: {
      auto nb = g.neighbors(i);
      auto a = static_cast<std::size_t>(uniform_below(rng, nb.size()));
      auto b = static_cast<std::size_t>(uniform_below(rng, nb.size() - 1));
      if (b >= a) ++b;
      auto c = static_cast<std::size_t>(uniform_below(rng, nb.size() - 2));
      if (c >= std::min(a, b)) ++c;
      if (c >= std::max(a, b)) ++c;
      s.vertices = {i, nb[a], nb[b], nb[c]};
      break;
    }
    case FrameKind::Chain: {
      VertexId a = neighbor_except(g, i, j, rng);
      VertexId b = neighbor_except(g, j, i, rng);
      s.vertices = {a, i, j, b};
      s.degenerate = a == b;
      break;
    }
  }
  return s;
}

FrameSample sample_fork(const Graph& g, Rng& rng) {
  return FrameSampler(g, FrameKind::Fork).draw(rng);
}
FrameSample sample_trident(const Graph& g, Rng& rng) {
  return FrameSampler(g, FrameKind::Trident).draw(rng);
}
FrameSample sample_chain(const Graph& g, Rng& rng) {
  return FrameSampler(g, FrameKind::Chain).draw(rng);
}

std::uint32_t count_frames_in_code(Family f, std::uint32_t code, FrameKind kind) {
  const int k = f.size;
  if (frame_vertex_count(kind) != k) return 0;
  const auto adj = undirected_adjacency(f, code);
  std::uint32_t count = 0;
  switch (kind) {
    case FrameKind::Fork:
      for (int c = 0; c < k; ++c)
        for (int a = 0; a < k; ++a)
          for (int b = a + 1; b < k; ++b)
            if (a != c && b != c && adj[c][a] && adj[c][b]) ++count;
      return count;
    case FrameKind::Trident:
      for (int c = 0; c < k; ++c) {
        int leaves = 0;
        for (int v = 0; v < k; ++v) leaves += adj[c][v] ? 1 : 0;
        if (leaves == 3) ++count;
      }
      return count;
    case FrameKind::Chain: {
      // Ordered Hamiltonian paths a-i-j-b; each undirected path appears twice.
      int order[4] = {0, 1, 2, 3};
      do {
        if (adj[order[0]][order[1]] && adj[order[1]][order[2]] && adj[order[2]][order[3]]) ++count;
      } while (std::next_permutation(order, order + 4));
      return count / 2;
    }
  }
  return 0;
}

KoefTable KoefTable::build(Family f) {
  KoefTable t;
  t.family_ = f;
  const auto& table = arrcode(f);
  for (const auto& m : table.classes()) {
    std::array<std::uint32_t, 3> row{};
    if (m.connected) {
      for (FrameKind kind : kAllFrameKinds) {
        row[static_cast<int>(kind)] = count_frames_in_code(f, m.canonical_code, kind);
      }
    }
    t.koef_.push_back(row);
  }
  return t;
}

std::uint32_t KoefTable::koef(int class_id, FrameKind kind) const {
  return koef_.at(static_cast<std::size_t>(class_id))[static_cast<int>(kind)];
}

std::vector<FrameKind> KoefTable::frames() const {
  if (family_.size == 3) return {FrameKind::Fork};
  return {FrameKind::Chain, FrameKind::Trident};
}

const KoefTable& koef_table(Family f) {
  static const std::array<KoefTable, 4> kTables{
      KoefTable::build(kAllFamilies[0]), KoefTable::build(kAllFamilies[1]),
      KoefTable::build(kAllFamilies[2]), KoefTable::build(kAllFamilies[3])};
  if (f.size != 3 && f.size != 4) throw Error("motif size must be 3 or 4");
  return kTables[(f.size - 3) * 2 + (f.directed ? 1 : 0)];
}

}  // namespace mfs
