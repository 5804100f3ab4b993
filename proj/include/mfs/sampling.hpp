#pragma once

#include <cstdint>
#include <span>

#include "mfs/canon.hpp"
#include "mfs/estimator.hpp"
#include "mfs/frames.hpp"

namespace mfs {

// Sampling kernels: draw `count` frames and classify the induced subgraph on
// each frame's vertices into acc. Degenerate chains only advance N+.

// Serial reference kernel.
void sample_serial(const FrameSampler& sampler, const ArrcodeTable& table, std::uint64_t count,
                   Rng& rng, SampleAccumulator& acc);

// OpenMP kernel. Worker w draws its static share of `count` from streams[w],
// so results depend on the number of streams but not on thread scheduling.
// With a single stream this matches sample_serial exactly.
void sample_parallel(const FrameSampler& sampler, const ArrcodeTable& table, std::uint64_t count,
                     std::span<Rng> streams, SampleAccumulator& acc);

}  // namespace mfs
