#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfs/canon.hpp"
#include "mfs/frames.hpp"
#include "mfs/graph.hpp"

namespace mfs {

// Tallies of one sampling experiment: N+ draws of a single frame kind and the
// number of draws C_m that landed on each motif class.
struct SampleAccumulator {
  SampleAccumulator(FrameKind kind, Family family);

  FrameKind kind;
  Family family;
  std::uint64_t experiments = 0;  // N+, degenerate draws included
  std::uint64_t degenerate = 0;
  std::vector<std::uint64_t> detections;  // indexed by class id

  void record(int class_id) {
    ++experiments;
    ++detections[static_cast<std::size_t>(class_id)];
  }
  void record_degenerate() {
    ++experiments;
    ++degenerate;
  }
  std::uint64_t detected() const;

  // Component-wise sum; kind and family must match.
  SampleAccumulator& merge(const SampleAccumulator& other);
};

// One experiment's contribution to an estimate.
struct EstimateSource {
  FrameKind kind = FrameKind::Fork;
  std::uint64_t detections = 0;   // C
  std::uint64_t experiments = 0;  // N+
  std::uint64_t frame_total = 0;  // N_F
  std::uint32_t koef = 0;
  double n_hat = 0.0;
  double variance = 0.0;
};

struct MotifEstimate {
  int class_id = 0;
  double n_hat = 0.0;
  double variance = 0.0;
  std::optional<double> cv;      // sqrt(variance) / n_hat, only when n_hat > 0
  std::optional<double> lambda;  // weight on the second source of a mixed estimate
  std::vector<EstimateSource> sources;
};

// n = (C / N+) * N_F / koef, D(n) = N_F^2 / (koef^2 (N+)^2) * C * (1 - C / N+).
MotifEstimate single_estimate(const SampleAccumulator& acc, const FrameTotals& totals,
                              const KoefTable& koef, int class_id);

// Weight minimizing the squared coefficient of variation of
// (1 - lambda) * n_a + lambda * n_b for independent estimates:
//   lambda = n_b D_a / (n_a D_b + n_b D_a), clamped to [0, 1].
// A zero denominator yields 1/2. Throws when n_a and n_b are both zero.
double optimal_lambda(double n_a, double var_a, double n_b, double var_b);

// v^2(lambda) = ((1-lambda)^2 D_a + lambda^2 D_b) / ((1-lambda) n_a + lambda n_b)^2,
// +infinity where the mean vanishes.
double cv_squared(double lambda, double n_a, double var_a, double n_b, double var_b);

// Combines two single estimates of the same class from different frame kinds.
MotifEstimate mixed_estimate(const MotifEstimate& a, const MotifEstimate& b);

// Per connected class of acc's family: single estimate when one experiment
// covers the class, mixed when two do. Classes with no covering experiment
// that has drawn samples are omitted.
std::vector<MotifEstimate> estimate_all(const std::vector<SampleAccumulator>& experiments,
                                        const FrameTotals& totals);

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::uint64_t kDefaultBatch = 10'000;

struct SamplingOptions {
  int size = 4;
  std::uint64_t budget = 0;       // total draws over all experiments
  std::optional<double> target_cv;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::uint64_t batch_size = kDefaultBatch;
  double chain_share = 0.5;              // fraction of the 4-vertex budget given to chains
  std::uint64_t min_detections = 5;      // motifs below this never block the cv target
};

enum class StopReason { BudgetExhausted, TargetReached, EmptyBudget };
std::string_view to_string(StopReason reason);

struct SampledCensus {
  Family family;
  SamplingOptions options;
  FrameTotals totals;
  std::vector<SampleAccumulator> experiments;
  std::vector<MotifEstimate> estimates;
  std::size_t batches = 0;
  StopReason stop = StopReason::EmptyBudget;
  double elapsed_seconds = 0.0;

  std::uint64_t samples() const;
  const MotifEstimate* find(int class_id) const;
};

// True when every estimate backed by >= min_detections hits in some experiment
// has cv <= target.
bool target_met(const std::vector<MotifEstimate>& estimates, double target,
                std::uint64_t min_detections);

// Frame sampling census. 3-vertex motifs use forks; 4-vertex motifs use
// independent chain and trident experiments, split by chain_share. Sampling
// proceeds in batches and stops early once target_cv (if any) is met.
SampledCensus run_sampled_census(const Graph& g, const SamplingOptions& options);

}  // namespace mfs
