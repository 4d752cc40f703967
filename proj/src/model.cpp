#include "lshare/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lshare/error.hpp"

namespace lshare {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void domain(const std::string& what, const std::string& code = {}) {
  throw Error(ErrorKind::Domain, what, code);
}

}  // namespace

double check_share(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) domain("load share must lie in [0, 1], got " + std::to_string(alpha), "E_ALPHA_RANGE");
  return alpha;
}

LoadScale::LoadScale(Kind kind) : kind_(kind) {
  if (const auto* p = std::get_if<PowerScale>(&kind_); p && !(p->p > 0.0 && std::isfinite(p->p)))
    domain("power load scale needs p > 0", "E_SCALE_PARAM");
  if (const auto* c = std::get_if<ConstantScale>(&kind_); c && !(c->c >= 0.0 && c->c <= 1.0))
    domain("constant load scale must lie in [0, 1]", "E_SCALE_PARAM");
}

double LoadScale::operator()(double share) const {
  check_share(share);
  return std::visit(overloaded{
                        [&](IdentityScale) { return share; },
                        [&](PowerScale p) { return std::pow(share, p.p); },
                        [&](ConstantScale c) { return c.c; },
                    },
                    kind_);
}

VirtualAge::VirtualAge(Kind kind) : kind_(std::move(kind)) {
  if (const auto* l = std::get_if<LinearAge>(&kind_); l && !(l->c >= 0.0 && l->c <= 1.0))
    domain("linear virtual age factor must lie in [0, 1]", "E_AGE_EXCEEDS_TIME");
  if (const auto* pw = std::get_if<PiecewiseLinearAge>(&kind_)) {
    const auto& k = pw->knots;
    if (k.size() < 2) domain("piecewise-linear virtual age needs at least 2 knots", "E_AGE_KNOTS");
    if (k.front().first != 0.0 || k.front().second != 0.0)
      domain("piecewise-linear virtual age must start at (0, 0)", "E_AGE_KNOTS");
    for (std::size_t i = 0; i < k.size(); ++i) {
      const auto [u, w] = k[i];
      if (!std::isfinite(u) || !std::isfinite(w)) domain("virtual age knots must be finite", "E_AGE_KNOTS");
      if (w < 0.0 || w > u) domain("virtual age knot violates 0 <= w(u) <= u at u=" + std::to_string(u), "E_AGE_EXCEEDS_TIME");
      if (i > 0 && !(u > k[i - 1].first)) domain("virtual age knots must have increasing u", "E_AGE_KNOTS");
      if (i > 0 && w < k[i - 1].second) domain("virtual age must be nondecreasing", "E_AGE_NONMONOTONE");
    }
    const auto& a = k[k.size() - 2];
    const auto& b = k.back();
    if ((b.second - a.second) / (b.first - a.first) > 1.0)
      domain("last virtual age slope exceeds 1, so w(u) <= u fails eventually", "E_AGE_EXCEEDS_TIME");
  }
}

BoundModel::BoundModel(double scale, std::vector<Piece> pieces) : scale_(scale), pieces_(std::move(pieces)) {
  scaled_time_ = pieces_.size() == 1 && pieces_[0].w0 == 0.0 && pieces_[0].slope == scale_;
}

double BoundModel::age(double u) const noexcept {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), u, [](double v, const Piece& p) { return v < p.u0; });
  const Piece& p = it == pieces_.begin() ? pieces_.front() : *(it - 1);
  return p.w0 + p.slope * (u - p.u0);
}

std::vector<double> BoundModel::knots() const {
  std::vector<double> k;
  for (std::size_t i = 1; i < pieces_.size(); ++i) k.push_back(pieces_[i].u0);
  return k;
}

void BoundModel::solve(double offset, double direction, double level, double lo, double hi,
                       std::vector<double>& out) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    const double seg_lo = std::max(lo, p.u0);
    const double seg_hi = std::min(hi, i + 1 < pieces_.size() ? pieces_[i + 1].u0 : hi);
    if (!(seg_hi > seg_lo)) continue;
    // offset + direction*u + w0 + slope*(u - u0) == level
    const double a = direction + p.slope;
    if (a == 0.0) continue;
    const double u = (level - offset - p.w0 + p.slope * p.u0) / a;
    if (u > seg_lo && u < seg_hi) out.push_back(u);
  }
}

BoundModel ModelFunctionPair::bind(double share) const {
  const double g = load_scale(share);
  return std::visit(overloaded{
                        [&](CemAge) { return BoundModel(g, {{0.0, 0.0, g}}); },
                        [&](const LinearAge& l) { return BoundModel(g, {{0.0, 0.0, l.c}}); },
                        [&](const PiecewiseLinearAge& pw) {
                          std::vector<BoundModel::Piece> pieces;
                          for (std::size_t i = 0; i + 1 < pw.knots.size(); ++i) {
                            const auto [u0, w0] = pw.knots[i];
                            const auto [u1, w1] = pw.knots[i + 1];
                            pieces.push_back({u0, w0, (w1 - w0) / (u1 - u0)});
                          }
                          return BoundModel(g, std::move(pieces));
                        },
                    },
                    virtual_age.kind());
}

ModelFunctionPair cem_pair(LoadScale scale, double alpha) {
  check_share(alpha);
  return ModelFunctionPair{VirtualAge::cem(), scale};
}

SpareConditions check_spare_conditions(const VirtualAge& gamma, const LoadScale& h, double alpha,
                                       std::span<const double> grid) {
  check_share(alpha);
  const BoundModel b = ModelFunctionPair{gamma, h}.bind(1.0 - alpha);
  const double hf = b.scale();
  SpareConditions s{
      check_pointwise_le("0 <= gamma(u) <= u",
                         [&](double u) { return std::max(b.age(u) - u, -b.age(u)); },
                         [](double) { return 0.0; }, grid),
      check_nondecreasing("gamma(u) nondecreasing", [&](double u) { return b.age(u); }, grid),
      check_nondecreasing("u - gamma(u) nondecreasing", [&](double u) { return u - b.age(u); }, grid),
      check_nondecreasing("gamma(u) - h(1-alpha) u nondecreasing", [&](double u) { return b.age(u) - hf * u; }, grid),
  };
  return s;
}

ModelPairOrdering check_ordering_of_model_pairs(const ModelFunctionPair& m1, const ModelFunctionPair& m2, double alpha,
                                                std::span<const double> grid) {
  check_share(alpha);
  const BoundModel b1 = m1.bind(alpha);
  const BoundModel b2 = m2.bind(alpha);
  const double g1 = b1.scale();
  const double g2 = b2.scale();
  const double one[] = {0.0};
  auto w1 = [&](double u) { return b1.age(u); };
  auto w2 = [&](double u) { return b2.age(u); };
  auto g1u = [&](double u) { return g1 * u; };
  return ModelPairOrdering{
      check_pointwise_le("g1(alpha) <= g2(alpha)", [&](double) { return g1; }, [&](double) { return g2; }, one),
      check_pointwise_le("w1(u) <= w2(u)", w1, w2, grid),
      check_pointwise_le("g1(alpha) u <= w2(u)", g1u, w2, grid),
      check_pointwise_le("g1(alpha) u <= w1(u)", g1u, w1, grid),
      check_pointwise_le("w2(u) <= w1(u)", w2, w1, grid),
  };
}

ConditionVerdict check_scaled_time_age(std::string name, const ModelFunctionPair& m, double share,
                                       std::span<const double> grid) {
  const BoundModel b = m.bind(share);
  const double g = b.scale();
  // |w(u) - g u| <= 0 with the usual tolerance, as a single pointwise check.
  return check_pointwise_le(std::move(name), [&](double u) { return std::abs(b.age(u) - g * u); },
                            [](double) { return 0.0; }, grid);
}

}  // namespace lshare
