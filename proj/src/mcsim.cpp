#include "lshare/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "lshare/error.hpp"

namespace lshare {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double scaled(double lifetime, double factor) { return factor > 0.0 ? lifetime / factor : kInf; }

template <class Draw>
SurvivalEstimate run(std::span<const double> grid, const SimConfig& config, const Draw& draw) {
  config.validate();
  const std::uint64_t n = config.samples;
  std::vector<double> lifetimes(n);

  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  std::vector<std::exception_ptr> errors(threads);
  const auto work = [&](unsigned w) {
    const std::uint64_t begin = n * w / threads;
    const std::uint64_t end = n * (w + 1) / threads;
    try {
      for (std::uint64_t r = begin; r < end; ++r) {
        RandomStream rng(config.seed, r);
        lifetimes[r] = draw(rng);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::sort(lifetimes.begin(), lifetimes.end());
  SurvivalEstimate est{std::vector<double>(grid.begin(), grid.end()), {}, {}, n};
  for (double t : grid) {
    const auto alive = lifetimes.end() - std::upper_bound(lifetimes.begin(), lifetimes.end(), t);
    const double p = static_cast<double>(alive) / static_cast<double>(n);
    est.estimate.push_back(p);
    est.standard_error.push_back(std::sqrt(p * (1.0 - p) / static_cast<double>(n)));
  }
  return est;
}

}  // namespace

void SimConfig::validate() const {
  if (samples < 1) throw Error(ErrorKind::Domain, "simulation needs at least one sample", "E_MC_SAMPLES");
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t replication) noexcept
    : state_(mix64(seed ^ mix64(replication + kGolden))) {}

std::uint64_t RandomStream::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

double RandomStream::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PairSampler::PairSampler(const LoadSharePair& pair)
    : x_(pair.x), y_(pair.y), bx_(pair.mx.bind(check_share(pair.alpha))), by_(pair.my.bind(1.0 - pair.alpha)) {}

PairSample PairSampler::operator()(RandomStream& rng) const {
  const double x = x_.quantile(rng.uniform());
  const double y = y_.quantile(rng.uniform());
  const double v = rng.uniform();
  const double xs = scaled(x, bx_.scale());
  const double ys = scaled(y, by_.scale());
  const double u = std::min(xs, ys);
  if (u == kInf) return {kInf, Survivor::None, kInf};
  if (ys <= xs) {
    const double age = bx_.age(u);
    return {u, Survivor::X, u + (x_.conditional_quantile(age, v) - age)};
  }
  const double age = by_.age(u);
  return {u, Survivor::Y, u + (y_.conditional_quantile(age, v) - age)};
}

PairSample sample_pair_lifetime(const LoadSharePair& pair, RandomStream& rng) { return PairSampler(pair)(rng); }

SurvivalEstimate estimate_survival(const LoadSharePair& pair, std::span<const double> grid, const SimConfig& config) {
  const PairSampler sampler(pair);
  return run(grid, config, [&](RandomStream& rng) { return sampler(rng).lifetime; });
}

SurvivalEstimate estimate_survival(const SystemSpec& system, std::span<const double> grid, const SimConfig& config) {
  const PairSampler sampler(system.pair());
  const bool series = system.structure == Structure::Series;
  return run(grid, config, [&](RandomStream& rng) {
    double life = sampler(rng).lifetime;
    for (std::size_t j = 0; j < system.components.size(); ++j) {
      if (j + 1 == system.allocation) continue;
      const double other = system.components[j].lifetime.quantile(rng.uniform());
      life = series ? std::min(life, other) : std::max(life, other);
    }
    return life;
  });
}

}  // namespace lshare
