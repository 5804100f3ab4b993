#include "mfs/sampling.hpp"

#include <vector>

#include <omp.h>

namespace mfs {

void sample_serial(const FrameSampler& sampler, const ArrcodeTable& table, std::uint64_t count,
                   Rng& rng, SampleAccumulator& acc) {
  const Graph& g = sampler.graph();
  for (std::uint64_t s = 0; s < count; ++s) {
    FrameSample frame = sampler.draw(rng);
    if (frame.degenerate) {
      acc.record_degenerate();
      continue;
    }
    acc.record(table.classify_unchecked(induced_subgraph_code_unchecked(g, frame.vertex_set())));
  }
}

void sample_parallel(const FrameSampler& sampler, const ArrcodeTable& table, std::uint64_t count,
                     std::span<Rng> streams, SampleAccumulator& acc) {
  const auto workers = static_cast<std::int64_t>(streams.size());
  if (workers <= 1) {
    if (workers == 1) sample_serial(sampler, table, count, streams[0], acc);
    return;
  }
  std::vector<SampleAccumulator> partial(static_cast<std::size_t>(workers),
                                         SampleAccumulator(acc.kind, acc.family));
  const std::uint64_t base = count / static_cast<std::uint64_t>(workers);
  const std::uint64_t extra = count % static_cast<std::uint64_t>(workers);

#pragma omp parallel for num_threads(static_cast<int>(workers)) schedule(static, 1)
  for (std::int64_t w = 0; w < workers; ++w) {
    const auto uw = static_cast<std::uint64_t>(w);
    sample_serial(sampler, table, base + (uw < extra ? 1 : 0), streams[uw], partial[uw]);
  }
  for (const auto& p : partial) acc.merge(p);
}

}  // namespace mfs
