#include "lshare/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lshare/error.hpp"

namespace lshare {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCdfTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double horner_derivative(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (std::size_t j = c.size(); j-- > 1;) acc = acc * t + static_cast<double>(j) * c[j];
  return acc;
}

[[noreturn]] void domain(const std::string& what, const std::string& code = {}) {
  throw Error(ErrorKind::Domain, what, code);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) domain(std::string(name) + " must be positive and finite", "E_DIST_PARAM");
}

void validate_segments(const std::vector<PolySegment>& segs) {
  if (segs.empty()) domain("piecewise CDF needs at least one segment", "E_CDF_SEGMENTS");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (!std::isfinite(s.from) || !std::isfinite(s.to) || !(s.from < s.to))
      domain("segment " + std::to_string(i) + " has an empty or non-finite interval", "E_CDF_SEGMENTS");
    if (s.coeffs.empty()) domain("segment " + std::to_string(i) + " has no coefficients", "E_CDF_SEGMENTS");
    if (i > 0 && std::abs(segs[i - 1].to - s.from) > 1e-12 * std::max(1.0, std::abs(s.from)))
      domain("segments " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not contiguous",
             "E_CDF_SEGMENTS");
  }
  if (segs.front().from < 0.0) domain("lifetime support must start at t >= 0", "E_CDF_SEGMENTS");

  if (std::abs(horner(segs.front().coeffs, segs.front().from)) > kCdfTolerance)
    domain("F must vanish at the lower end of the support", "E_CDF_RANGE");
  if (std::abs(horner(segs.back().coeffs, segs.back().to) - 1.0) > kCdfTolerance)
    domain("F must reach 1 at the upper end of the support", "E_CDF_RANGE");
  for (std::size_t i = 1; i < segs.size(); ++i) {
    const double left = horner(segs[i - 1].coeffs, segs[i - 1].to);
    const double right = horner(segs[i].coeffs, segs[i].from);
    if (std::abs(left - right) > kCdfTolerance)
      domain("F is discontinuous at t=" + std::to_string(segs[i].from), "E_CDF_DISCONTINUOUS");
  }
  // Nondecreasing: derivative sampled densely on every segment, endpoints included.
  constexpr int kSamples = 256;
  for (const auto& s : segs) {
    for (int j = 0; j <= kSamples; ++j) {
      const double t = s.from + (s.to - s.from) * j / kSamples;
      if (horner_derivative(s.coeffs, t) < -1e-12)
        domain("F decreases near t=" + std::to_string(t), "E_CDF_NONMONOTONE");
    }
  }
}

}  // namespace

LifetimeDistribution::LifetimeDistribution(Params params) : params_(std::move(params)) {
  std::visit(overloaded{
                 [&](const Exponential& e) {
                   require_positive(e.rate, "exponential rate");
                   lower_ = 0.0;
                   upper_ = kInf;
                 },
                 [&](const Weibull& w) {
                   require_positive(w.shape, "Weibull shape");
                   require_positive(w.scale, "Weibull scale");
                   lower_ = 0.0;
                   upper_ = kInf;
                 },
                 [&](const ShiftedPareto& p) {
                   require_positive(p.k, "Pareto k");
                   require_positive(p.sigma, "Pareto sigma");
                   lower_ = p.sigma / p.k;
                   upper_ = kInf;
                   breakpoints_ = {lower_};
                 },
                 [&](const PiecewisePolyCdf& pw) {
                   validate_segments(pw.segments);
                   lower_ = pw.segments.front().from;
                   upper_ = pw.segments.back().to;
                   for (const auto& s : pw.segments) breakpoints_.push_back(s.from);
                   breakpoints_.push_back(upper_);
                 },
             },
             params_);
}

bool LifetimeDistribution::is_breakpoint(double t) const noexcept {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), t);
}

const PolySegment* LifetimeDistribution::segment_at(double t) const noexcept {
  const auto* pw = std::get_if<PiecewisePolyCdf>(&params_);
  if (pw == nullptr || t < lower_ || t >= upper_) return nullptr;
  auto it = std::upper_bound(pw->segments.begin(), pw->segments.end(), t,
                             [](double v, const PolySegment& s) { return v < s.from; });
  return &*(it - 1);
}

double LifetimeDistribution::cdf(double t) const {
  if (!(t >= 0.0)) domain("lifetime functions need t >= 0, got " + std::to_string(t));
  return std::visit(overloaded{
                        [&](const Exponential& e) { return -std::expm1(-e.rate * t); },
                        [&](const Weibull& w) { return -std::expm1(-std::pow(t / w.scale, w.shape)); },
                        [&](const ShiftedPareto& p) {
                          return t <= lower_ ? 0.0 : 1.0 - std::pow(p.k * t / p.sigma, -1.0 / p.k);
                        },
                        [&](const PiecewisePolyCdf&) {
                          if (t <= lower_) return 0.0;
                          if (t >= upper_) return 1.0;
                          return std::clamp(horner(segment_at(t)->coeffs, t), 0.0, 1.0);
                        },
                    },
                    params_);
}

double LifetimeDistribution::survival(double t) const {
  if (!(t >= 0.0)) domain("lifetime functions need t >= 0, got " + std::to_string(t));
  return std::visit(overloaded{
                        [&](const Exponential& e) { return std::exp(-e.rate * t); },
                        [&](const Weibull& w) { return std::exp(-std::pow(t / w.scale, w.shape)); },
                        [&](const ShiftedPareto& p) {
                          return t <= lower_ ? 1.0 : std::pow(p.k * t / p.sigma, -1.0 / p.k);
                        },
                        [&](const PiecewisePolyCdf&) { return 1.0 - cdf(t); },
                    },
                    params_);
}

double LifetimeDistribution::log_survival(double t) const {
  if (!(t >= 0.0)) domain("lifetime functions need t >= 0, got " + std::to_string(t));
  return std::visit(overloaded{
                        [&](const Exponential& e) { return -e.rate * t; },
                        [&](const Weibull& w) { return -std::pow(t / w.scale, w.shape); },
                        [&](const ShiftedPareto& p) {
                          return t <= lower_ ? 0.0 : -std::log(p.k * t / p.sigma) / p.k;
                        },
                        [&](const PiecewisePolyCdf&) { return std::log1p(-cdf(t)); },
                    },
                    params_);
}

double LifetimeDistribution::pdf(double t) const noexcept {
  if (t < lower_ || t >= upper_) return 0.0;
  return std::visit(overloaded{
                        [&](const Exponential& e) { return e.rate * std::exp(-e.rate * t); },
                        [&](const Weibull& w) {
                          if (t == 0.0) {
                            if (w.shape < 1.0) return kInf;
                            return w.shape == 1.0 ? 1.0 / w.scale : 0.0;
                          }
                          const double z = t / w.scale;
                          return w.shape / w.scale * std::pow(z, w.shape - 1.0) *
                                 std::exp(-std::pow(z, w.shape));
                        },
                        [&](const ShiftedPareto& p) {
                          return std::pow(p.k * t / p.sigma, -1.0 / p.k - 1.0) / p.sigma;
                        },
                        [&](const PiecewisePolyCdf&) {
                          return std::max(0.0, horner_derivative(segment_at(t)->coeffs, t));
                        },
                    },
                    params_);
}

DensityValue LifetimeDistribution::density(double t, Side side) const {
  if (!(t >= 0.0)) domain("density needs t >= 0, got " + std::to_string(t));
  if (is_breakpoint(t)) {
    if (side == Side::None)
      domain("density at breakpoint t=" + std::to_string(t) + " needs a side", "E_BREAKPOINT");
    if (side == Side::Right) return {pdf(t), t >= upper_};
    // Left limit: the segment ending at t, or nothing below the support.
    if (t <= lower_) return {0.0, true};
    if (const auto* pw = std::get_if<PiecewisePolyCdf>(&params_)) {
      auto it = std::find_if(pw->segments.begin(), pw->segments.end(),
                             [t](const PolySegment& s) { return s.to == t; });
      return {std::max(0.0, horner_derivative(it->coeffs, t)), false};
    }
    return {pdf(t), false};
  }
  if (t < lower_ || t > upper_ || (t == upper_ && std::isfinite(upper_))) return {0.0, true};
  return {pdf(t), false};
}

double LifetimeDistribution::hazard(double t, Side side) const {
  const double s = survival(t);
  if (s <= 0.0) throw Error(ErrorKind::Support, "hazard undefined where survival is 0 (t=" + std::to_string(t) + ")");
  return density(t, side).value / s;
}

double LifetimeDistribution::reversed_hazard(double t, Side side) const {
  const double f = cdf(t);
  if (f <= 0.0)
    throw Error(ErrorKind::Support, "reversed hazard undefined where F is 0 (t=" + std::to_string(t) + ")");
  return density(t, side).value / f;
}

double LifetimeDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p < 1.0)) domain("quantile needs p in [0, 1), got " + std::to_string(p));
  if (p == 0.0) return lower_;
  return std::visit(overloaded{
                        [&](const Exponential& e) { return -std::log1p(-p) / e.rate; },
                        [&](const Weibull& w) { return w.scale * std::pow(-std::log1p(-p), 1.0 / w.shape); },
                        [&](const ShiftedPareto& pr) { return pr.sigma / pr.k * std::pow(1.0 - p, -pr.k); },
                        [&](const PiecewisePolyCdf& pw) {
                          auto seg = std::find_if(pw.segments.begin(), pw.segments.end(), [&](const PolySegment& s) {
                            return horner(s.coeffs, s.to) >= p;
                          });
                          if (seg == pw.segments.end()) return upper_;
                          double lo = seg->from;
                          double hi = seg->to;
                          // Invariant: F(lo) < p <= F(hi).
                          for (int it = 0; it < 200 && lo < hi; ++it) {
                            const double mid = 0.5 * (lo + hi);
                            if (mid <= lo || mid >= hi) break;
                            if (horner(seg->coeffs, mid) >= p)
                              hi = mid;
                            else
                              lo = mid;
                          }
                          return hi;
                        },
                    },
                    params_);
}

double LifetimeDistribution::conditional_quantile(double age, double v) const {
  if (!(v >= 0.0 && v < 1.0)) domain("conditional quantile needs v in [0, 1)");
  if (const auto* e = std::get_if<Exponential>(&params_)) return age - std::log1p(-v) / e->rate;
  const double s = survival(age);
  if (s <= 0.0)
    throw Error(ErrorKind::Singularity,
                "cannot condition on survival past age " + std::to_string(age) + " (survival is 0)");
  double p = cdf(age) + v * s;
  p = std::min(p, std::nextafter(1.0, 0.0));
  return std::max(age, quantile(p));
}

std::string LifetimeDistribution::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Exponential& e) { os << "Exponential(rate=" << e.rate << ")"; },
                 [&](const Weibull& w) { os << "Weibull(shape=" << w.shape << ", scale=" << w.scale << ")"; },
                 [&](const ShiftedPareto& p) { os << "ShiftedPareto(k=" << p.k << ", sigma=" << p.sigma << ")"; },
                 [&](const PiecewisePolyCdf& pw) {
                   os << "PiecewisePolyCdf(" << pw.segments.size() << " segments on [" << lower_ << ", " << upper_
                      << "])";
                 },
             },
             params_);
  return os.str();
}

LogShapeVerdict classify_log_survival(const LifetimeDistribution& d, std::span<const double> grid) {
  if (grid.size() < 3) domain("log-survival classification needs at least 3 grid points");
  std::vector<double> logs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1])) domain("classification grid must be strictly increasing");
    logs[i] = d.log_survival(grid[i]);
    if (!std::isfinite(logs[i]))
      throw Error(ErrorKind::Support, "survival is 0 at grid point t=" + std::to_string(grid[i]));
  }

  LogShapeVerdict v{LogShape::Both, std::nullopt, std::nullopt};
  double prev_slope = (logs[1] - logs[0]) / (grid[1] - grid[0]);
  for (std::size_t i = 2; i < grid.size(); ++i) {
    const double slope = (logs[i] - logs[i - 1]) / (grid[i] - grid[i - 1]);
    const double second = slope - prev_slope;
    if (second > kShapeTolerance && !v.concavity_violation) v.concavity_violation = {grid[i - 2], grid[i - 1], grid[i]};
    if (second < -kShapeTolerance && !v.convexity_violation) v.convexity_violation = {grid[i - 2], grid[i - 1], grid[i]};
    prev_slope = slope;
  }
  if (v.concavity_violation && v.convexity_violation)
    v.shape = LogShape::Neither;
  else if (v.concavity_violation)
    v.shape = LogShape::LogConvex;
  else if (v.convexity_violation)
    v.shape = LogShape::LogConcave;
  return v;
}

std::vector<double> interior_grid(const LifetimeDistribution& d, std::size_t points, double upper_quantile) {
  if (points < 3) domain("interior grid needs at least 3 points");
  const double lo = d.lower();
  double hi = std::isfinite(d.upper()) ? d.upper() : d.quantile(upper_quantile);
  // Stay strictly inside the support on both sides.
  const double pad = (hi - lo) / static_cast<double>(points + 1);
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + pad * static_cast<double>(i + 1);
  return grid;
}

const char* to_string(LogShape shape) noexcept {
  switch (shape) {
    case LogShape::LogConcave: return "log_concave";
    case LogShape::LogConvex: return "log_convex";
    case LogShape::Both: return "both";
    case LogShape::Neither: return "neither";
  }
  return "?";
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Support: return "support";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Config: return "config";
    case ErrorKind::Specification: return "specification";
    case ErrorKind::Reproduction: return "reproduction";
  }
  return "?";
}

}  // namespace lshare
