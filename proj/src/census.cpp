#include "mfs/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <string>

#include <omp.h>

namespace mfs {

std::uint64_t ExactCensus::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

namespace {

// Connected vertex sets of size k containing `root` as their smallest vertex.
class RootEnumerator {
 public:
  RootEnumerator(const Graph& g, const ArrcodeTable& table, int k, std::vector<std::uint64_t>& counts)
      : g_(g), table_(table), k_(k), counts_(counts), sub_(static_cast<std::size_t>(k)),
        buffers_(static_cast<std::size_t>(k)) {}

  void run(VertexId root) {
    root_ = root;
    sub_.front() = root;
    std::vector<VertexId>& ext = frontier(0);
    ext.clear();
    for (VertexId u : g_.neighbors(root)) {
      if (u > root) ext.push_back(u);
    }
    extend(1, ext);
  }

 private:
  std::vector<VertexId>& frontier(int depth) { return buffers_[static_cast<std::size_t>(depth)]; }

  bool touches_sub(VertexId u, int depth) const {
    for (int i = 0; i < depth; ++i) {
      const VertexId s = sub_[static_cast<std::size_t>(i)];
      if (s == u || g_.adjacent(s, u)) return true;
    }
    return false;
  }

  void extend(int depth, std::vector<VertexId>& ext) {
    if (depth == k_) {
      std::span<const VertexId> vs(sub_.data(), static_cast<std::size_t>(k_));
      ++counts_[table_.classify_unchecked(induced_subgraph_code_unchecked(g_, vs))];
      return;
    }
    while (!ext.empty()) {
      const VertexId w = ext.back();
      ext.pop_back();
      sub_[static_cast<std::size_t>(depth)] = w;
      if (depth + 1 == k_) {
        extend(depth + 1, ext);
        continue;
      }
      std::vector<VertexId>& next = frontier(depth);
      next = ext;
      for (VertexId u : g_.neighbors(w)) {
        if (u > root_ && !touches_sub(u, depth)) next.push_back(u);
      }
      extend(depth + 1, next);
    }
  }

  const Graph& g_;
  const ArrcodeTable& table_;
  int k_;
  std::vector<std::uint64_t>& counts_;
  VertexId root_ = 0;
  std::vector<VertexId> sub_;
  std::vector<std::vector<VertexId>> buffers_;
};

ExactCensus make_census(int size, bool directed) {
  if (size != 3 && size != 4) throw Error("motif size must be 3 or 4");
  ExactCensus c;
  c.family = Family{size, directed};
  c.counts.assign(arrcode(c.family).class_count(), 0);
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ExactCensus exact_census_serial(const Graph& g, int size) {
  const auto start = std::chrono::steady_clock::now();
  ExactCensus c = make_census(size, g.directed());
  RootEnumerator e(g, arrcode(c.family), size, c.counts);
  for (VertexId v = 0; v < g.vertex_count(); ++v) e.run(v);
  c.elapsed_seconds = seconds_since(start);
  return c;
}

ExactCensus exact_census(const Graph& g, int size, int workers) {
  const auto start = std::chrono::steady_clock::now();
  ExactCensus c = make_census(size, g.directed());
  const ArrcodeTable& table = arrcode(c.family);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(g.vertex_count());

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> local(c.counts.size(), 0);
    RootEnumerator e(g, table, size, local);
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t v = 0; v < n; ++v) e.run(static_cast<VertexId>(v));
#pragma omp critical(mfs_census_merge)
    for (std::size_t i = 0; i < local.size(); ++i) c.counts[i] += local[i];
  }
  c.elapsed_seconds = seconds_since(start);
  return c;
}

FrameCount exact_frame_check(const Graph& g, FrameKind kind, std::uint64_t guard) {
  FrameCount out;
  auto bump = [&](bool degenerate) {
    if (++out.total > guard) {
      throw Error("more than " + std::to_string(guard) + " " + std::string(to_string(kind)) +
                  " instances; enumeration refused");
    }
    if (degenerate) ++out.degenerate;
  };
  const auto n = static_cast<VertexId>(g.vertex_count());
  switch (kind) {
    case FrameKind::Fork:
      // center c, leaves a < b
      for (VertexId c = 0; c < n; ++c)
        for (VertexId a : g.neighbors(c))
          for (VertexId b : g.neighbors(c))
            if (a < b) bump(false);
      break;
    case FrameKind::Trident:
      for (VertexId c = 0; c < n; ++c)
        for (VertexId a : g.neighbors(c))
          for (VertexId b : g.neighbors(c))
            for (VertexId d : g.neighbors(c))
              if (a < b && b < d) bump(false);
      break;
    case FrameKind::Chain:
      // walk a-i-j-b with i < j, a != j, b != i
      for (VertexId i = 0; i < n; ++i)
        for (VertexId j : g.neighbors(i)) {
          if (j < i) continue;
          for (VertexId a : g.neighbors(i)) {
            if (a == j) continue;
            for (VertexId b : g.neighbors(j)) {
              if (b != i) bump(a == b);
            }
          }
        }
      break;
  }
  return out;
}

}  // namespace mfs
