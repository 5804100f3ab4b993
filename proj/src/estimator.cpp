#include "mfs/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <utility>

#include "mfs/sampling.hpp"

namespace mfs {

SampleAccumulator::SampleAccumulator(FrameKind kind_, Family family_)
    : kind(kind_), family(family_), detections(arrcode(family_).class_count(), 0) {}

std::uint64_t SampleAccumulator::detected() const {
  std::uint64_t sum = 0;
  for (auto c : detections) sum += c;
  return sum;
}

SampleAccumulator& SampleAccumulator::merge(const SampleAccumulator& other) {
  if (other.kind != kind || !(other.family == family)) {
    throw Error("cannot merge accumulators of different experiments");
  }
  experiments += other.experiments;
  degenerate += other.degenerate;
  for (std::size_t i = 0; i < detections.size(); ++i) detections[i] += other.detections[i];
  return *this;
}

namespace {

std::optional<double> coefficient_of_variation(double n_hat, double variance) {
  if (!(n_hat > 0.0)) return std::nullopt;
  return std::sqrt(variance) / n_hat;
}

}  // namespace

MotifEstimate single_estimate(const SampleAccumulator& acc, const FrameTotals& totals,
                              const KoefTable& koef, int class_id) {
  const std::uint32_t k = koef.koef(class_id, acc.kind);
  if (k == 0) throw Error("frame cannot detect this motif");
  if (acc.experiments == 0) throw Error("experiment has no samples");

  EstimateSource src;
  src.kind = acc.kind;
  src.detections = acc.detections.at(static_cast<std::size_t>(class_id));
  src.experiments = acc.experiments;
  src.frame_total = totals.of(acc.kind);
  src.koef = k;

  const double c = static_cast<double>(src.detections);
  const double n_plus = static_cast<double>(src.experiments);
  const double scale = static_cast<double>(src.frame_total) / (static_cast<double>(k) * n_plus);
  const double q = c / n_plus;
  src.n_hat = c * scale;
  src.variance = scale * scale * c * (1.0 - q);

  MotifEstimate est;
  est.class_id = class_id;
  est.n_hat = src.n_hat;
  est.variance = src.variance;
  est.cv = coefficient_of_variation(est.n_hat, est.variance);
  est.sources.push_back(src);
  return est;
}

double optimal_lambda(double n_a, double var_a, double n_b, double var_b) {
  if (n_a < 0 || n_b < 0 || var_a < 0 || var_b < 0) {
    throw Error("estimates and variances must be nonnegative");
  }
  if (n_a == 0 && n_b == 0) throw Error("no information: both estimates are zero");
  const double denom = n_a * var_b + n_b * var_a;
  if (denom == 0) return 0.5;
  return std::clamp(n_b * var_a / denom, 0.0, 1.0);
}

double cv_squared(double lambda, double n_a, double var_a, double n_b, double var_b) {
  const double mean = (1 - lambda) * n_a + lambda * n_b;
  if (!(mean > 0)) return std::numeric_limits<double>::infinity();
  return ((1 - lambda) * (1 - lambda) * var_a + lambda * lambda * var_b) / (mean * mean);
}

MotifEstimate mixed_estimate(const MotifEstimate& a, const MotifEstimate& b) {
  if (a.class_id != b.class_id) throw Error("mixed estimate needs the same motif class");
  if (a.sources.size() != 1 || b.sources.size() != 1 || a.sources[0].kind == b.sources[0].kind) {
    throw Error("mixed estimate needs single estimates from two different frame kinds");
  }
  const double lambda = optimal_lambda(a.n_hat, a.variance, b.n_hat, b.variance);

  MotifEstimate out;
  out.class_id = a.class_id;
  out.lambda = lambda;
  out.n_hat = a.n_hat + lambda * (b.n_hat - a.n_hat);
  out.variance = (1 - lambda) * (1 - lambda) * a.variance + lambda * lambda * b.variance;
  out.cv = coefficient_of_variation(out.n_hat, out.variance);
  out.sources = {a.sources[0], b.sources[0]};
  return out;
}

std::vector<MotifEstimate> estimate_all(const std::vector<SampleAccumulator>& experiments,
                                        const FrameTotals& totals) {
  std::vector<MotifEstimate> out;
  if (experiments.empty()) return out;
  const Family f = experiments.front().family;
  const auto& koef = koef_table(f);
  for (int id : arrcode(f).connected_class_ids()) {
    std::vector<MotifEstimate> singles;
    for (const auto& acc : experiments) {
      if (koef.covers(id, acc.kind) && acc.experiments > 0) {
        singles.push_back(single_estimate(acc, totals, koef, id));
      }
    }
    if (singles.empty()) continue;
    if (singles.size() == 1) {
      out.push_back(std::move(singles.front()));
    } else if (singles[0].n_hat == 0 && singles[1].n_hat == 0) {
      MotifEstimate none;
      none.class_id = id;
      none.sources = {singles[0].sources[0], singles[1].sources[0]};
      out.push_back(std::move(none));
    } else {
      out.push_back(mixed_estimate(singles[0], singles[1]));
    }
  }
  return out;
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::BudgetExhausted:
      return "budget exhausted";
    case StopReason::TargetReached:
      return "target cv reached";
    case StopReason::EmptyBudget:
      return "empty budget";
  }
  return "?";
}

std::uint64_t SampledCensus::samples() const {
  std::uint64_t n = 0;
  for (const auto& e : experiments) n += e.experiments;
  return n;
}

const MotifEstimate* SampledCensus::find(int class_id) const {
  for (const auto& e : estimates) {
    if (e.class_id == class_id) return &e;
  }
  return nullptr;
}

bool target_met(const std::vector<MotifEstimate>& estimates, double target,
                std::uint64_t min_detections) {
  for (const auto& e : estimates) {
    std::uint64_t best = 0;
    for (const auto& s : e.sources) best = std::max(best, s.detections);
    if (best < min_detections) continue;
    if (!e.cv || *e.cv > target) return false;
  }
  return true;
}

SampledCensus run_sampled_census(const Graph& g, const SamplingOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.size != 3 && options.size != 4) throw Error("motif size must be 3 or 4");
  if (options.workers < 1) throw Error("workers must be at least 1");
  if (options.batch_size == 0) throw Error("batch size must be positive");
  if (!(options.chain_share >= 0.0 && options.chain_share <= 1.0)) {
    throw Error("chain share must lie in [0, 1]");
  }
  if (options.target_cv && !(*options.target_cv > 0.0)) throw Error("target cv must be positive");

  SampledCensus out;
  out.family = Family{options.size, g.directed()};
  out.options = options;
  out.totals = frame_totals(g);

  const auto& koef = koef_table(out.family);
  const auto& table = arrcode(out.family);
  const std::vector<FrameKind> kinds = koef.frames();
  for (FrameKind k : kinds) out.experiments.emplace_back(k, out.family);

  // Budget per experiment; a frame absent from the graph hands its share over.
  std::vector<std::uint64_t> remaining(kinds.size(), 0);
  if (kinds.size() == 1) {
    remaining[0] = options.budget;
  } else {
    remaining[0] = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(options.budget) * options.chain_share));
    remaining[0] = std::min(remaining[0], options.budget);
    remaining[1] = options.budget - remaining[0];
    if (out.totals.of(kinds[0]) == 0) remaining[1] += std::exchange(remaining[0], 0);
    if (out.totals.of(kinds[1]) == 0) remaining[0] += std::exchange(remaining[1], 0);
  }

  if (options.budget == 0) {
    out.stop = StopReason::EmptyBudget;
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }
  bool any_frames = false;
  for (FrameKind k : kinds) any_frames = any_frames || out.totals.of(k) > 0;
  if (!any_frames) {
    throw Error("graph has no " + std::to_string(options.size) + "-vertex frames to sample");
  }

  std::vector<FrameSampler> samplers;
  std::vector<std::vector<Rng>> streams(kinds.size());
  std::vector<std::uint64_t> per_batch(kinds.size());
  for (std::size_t e = 0; e < kinds.size(); ++e) {
    samplers.emplace_back(g, kinds[e]);
    for (int w = 0; w < options.workers; ++w) {
      streams[e].push_back(make_stream(options.seed, e, static_cast<std::uint64_t>(w)));
    }
    const double share = static_cast<double>(remaining[e]) / static_cast<double>(options.budget);
    per_batch[e] = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::llround(share * static_cast<double>(options.batch_size))));
  }

  while (true) {
    for (std::size_t e = 0; e < kinds.size(); ++e) {
      const std::uint64_t take = std::min(per_batch[e], remaining[e]);
      if (take == 0) continue;
      sample_parallel(samplers[e], table, take, streams[e], out.experiments[e]);
      remaining[e] -= take;
    }
    ++out.batches;
    const bool exhausted =
        std::all_of(remaining.begin(), remaining.end(), [](auto r) { return r == 0; });
    if (options.target_cv) {
      out.estimates = estimate_all(out.experiments, out.totals);
      if (target_met(out.estimates, *options.target_cv, options.min_detections)) {
        out.stop = StopReason::TargetReached;
        break;
      }
    }
    if (exhausted) {
      out.stop = StopReason::BudgetExhausted;
      break;
    }
  }
  if (!options.target_cv) out.estimates = estimate_all(out.experiments, out.totals);
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace mfs
