#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lshare/loadshare.hpp"

namespace lshare {

struct SimConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency. Results do not depend on it.

  void validate() const;
};

struct SurvivalEstimate {
  std::vector<double> grid;
  std::vector<double> estimate;
  std::vector<double> standard_error;  // sqrt(p(1-p)/n)
  std::uint64_t samples;
};

// Counter-based stream: replication r of seed s always yields the same draws,
// whichever thread runs it. SplitMix64 keyed by (seed, r).
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::uint64_t replication) noexcept;

  std::uint64_t next() noexcept;
  double uniform() noexcept;  // [0, 1), 53-bit resolution

private:
  std::uint64_t state_;
};

enum class Survivor { X, Y, None };

struct PairSample {
  double switch_time;  // first failure under shared load; +inf if neither can fail
  Survivor survivor;   // unit left carrying the full load
  double lifetime;
};

class PairSampler {
public:
  explicit PairSampler(const LoadSharePair& pair);
  PairSample operator()(RandomStream& rng) const;

private:
  LifetimeDistribution x_, y_;
  BoundModel bx_, by_;
};

PairSample sample_pair_lifetime(const LoadSharePair& pair, RandomStream& rng);

SurvivalEstimate estimate_survival(const LoadSharePair& pair, std::span<const double> grid, const SimConfig& config);

// Survival of the series / parallel system lifetime (min / max over units).
SurvivalEstimate estimate_survival(const SystemSpec& system, std::span<const double> grid, const SimConfig& config);

}  // namespace lshare
