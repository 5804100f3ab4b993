#pragma once

#include <cstdint>
#include <vector>

#include "mfs/canon.hpp"
#include "mfs/frames.hpp"
#include "mfs/graph.hpp"

namespace mfs {

// Exact count of every motif class of one family.
struct ExactCensus {
  Family family;
  std::vector<std::uint64_t> counts;  // indexed by class id; disconnected classes stay 0
  double elapsed_seconds = 0.0;

  std::uint64_t count(int class_id) const { return counts.at(static_cast<std::size_t>(class_id)); }
  std::uint64_t total() const;
};

// Enumerates every connected vertex set of the given size exactly once by
// exclusive-neighborhood extension from a root (ESU without pruning) on the
// undirected view, classifying the induced subgraph of g (directed when g is).
ExactCensus exact_census_serial(const Graph& g, int size);

// Same enumeration partitioned by root vertex across OpenMP threads.
// workers <= 0 uses the OpenMP default.
ExactCensus exact_census(const Graph& g, int size, int workers = 0);

struct FrameCount {
  std::uint64_t total = 0;
  std::uint64_t degenerate = 0;  // closed chains; zero for other kinds
};

inline constexpr std::uint64_t kFrameCheckGuard = 10'000;

// Explicit enumeration of all frame instances. Throws once more than `guard`
// instances have been seen.
FrameCount exact_frame_check(const Graph& g, FrameKind kind,
                             std::uint64_t guard = kFrameCheckGuard);

}  // namespace mfs
