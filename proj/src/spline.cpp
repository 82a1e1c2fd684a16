#include "polycub/spline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polycub/errors.hpp"

namespace polycub {

namespace {
constexpr double kClamp = 1e-14;
constexpr int kMinIntervals = 5;
}  // namespace

RadialKnots::RadialKnots(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < kMinIntervals + 1) {
    throw ParameterError("radial knots need N1 >= 5 intervals, got " +
                         std::to_string(static_cast<int>(values_.size()) - 1));
  }
  if (values_.front() != 0.0) throw ParameterError("first radial knot must be 0");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i] > values_[i - 1])) {
      throw ParameterError("radial knots must be strictly increasing");
    }
  }
}

RadialKnots RadialKnots::uniform(double radius, int intervals) {
  if (!(radius > 0.0)) throw ParameterError("disc radius must be positive");
  if (intervals < kMinIntervals) {
    throw ParameterError("radial knots need N1 >= 5 intervals, got " + std::to_string(intervals));
  }
  std::vector<double> v(static_cast<std::size_t>(intervals) + 1);
  for (int j = 0; j <= intervals; ++j) v[static_cast<std::size_t>(j)] = radius / intervals * j;
  v.back() = radius;
  return RadialKnots(std::move(v));
}

double RadialKnots::mesh_width() const {
  double h = 0.0;
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) h = std::max(h, values_[i + 1] - values_[i]);
  return h;
}

CubicSpline::CubicSpline(std::vector<double> knots, std::span<const double> data,
                         double domain_lo, double domain_hi)
    : knots_(std::move(knots)), lo_(domain_lo), hi_(domain_hi) {
  const std::size_t np = knots_.size();
  if (np < 4) throw ParameterError("not-a-knot spline needs at least 4 knots");
  if (data.size() != np) {
    throw DimensionError("spline data has " + std::to_string(data.size()) + " values for " +
                         std::to_string(np) + " knots");
  }
  for (std::size_t i = 1; i < np; ++i) {
    if (!(knots_[i] > knots_[i - 1])) throw ParameterError("spline knots must be increasing");
  }
  if (!(lo_ <= knots_.front() && hi_ >= knots_.back())) {
    throw ParameterError("spline domain must contain the knots");
  }

  const std::size_t n = np - 1;  // intervals
  std::vector<double> h(n);
  std::vector<double> slope(n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i] = knots_[i + 1] - knots_[i];
    slope[i] = (data[i + 1] - data[i]) / h[i];
  }

  // Second derivatives M_1..M_{n-1}; M_0 and M_n are eliminated through the not-a-knot
  // conditions M_0 = ((h0 + h1) M_1 - h0 M_2) / h1 and its mirror image.
  const std::size_t u = n - 1;
  std::vector<double> sub(u, 0.0);
  std::vector<double> diag(u, 0.0);
  std::vector<double> sup(u, 0.0);
  std::vector<double> rhs(u, 0.0);
  for (std::size_t r = 0; r < u; ++r) {
    const std::size_t i = r + 1;
    sub[r] = h[i - 1];
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    sup[r] = h[i];
    rhs[r] = 6.0 * (slope[i] - slope[i - 1]);
  }
  {
    const double h0 = h[0];
    const double h1 = h[1];
    diag[0] += h0 * (h0 + h1) / h1;
    sup[0] -= h0 * h0 / h1;
    sub[0] = 0.0;
  }
  {
    const double ha = h[n - 1];
    const double hb = h[n - 2];
    diag[u - 1] += ha * (ha + hb) / hb;
    sub[u - 1] -= ha * ha / hb;
    sup[u - 1] = 0.0;
  }
  // Thomas algorithm.
  for (std::size_t r = 1; r < u; ++r) {
    const double w = sub[r] / diag[r - 1];
    diag[r] -= w * sup[r - 1];
    rhs[r] -= w * rhs[r - 1];
  }
  std::vector<double> m2(np, 0.0);
  m2[u] = rhs[u - 1] / diag[u - 1];
  for (std::size_t r = u - 1; r-- > 0;) {
    m2[r + 1] = (rhs[r] - sup[r] * m2[r + 2]) / diag[r];
  }
  m2[0] = ((h[0] + h[1]) * m2[1] - h[0] * m2[2]) / h[1];
  m2[n] = ((h[n - 1] + h[n - 2]) * m2[n - 1] - h[n - 1] * m2[n - 2]) / h[n - 2];
  for (double v : m2) {
    if (!std::isfinite(v)) throw NumericError("singular not-a-knot system");
  }

  a_.assign(data.begin(), data.end() - 1);
  b_.resize(n);
  c_.resize(n);
  d_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b_[i] = slope[i] - h[i] * (2.0 * m2[i] + m2[i + 1]) / 6.0;
    c_[i] = 0.5 * m2[i];
    d_[i] = (m2[i + 1] - m2[i]) / (6.0 * h[i]);
  }
}

std::size_t CubicSpline::locate(double r) const {
  const auto it = std::upper_bound(knots_.begin() + 1, knots_.end() - 1, r);
  return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

double CubicSpline::operator()(double r) const {
  const double span = hi_ - lo_;
  if (r < lo_ && r >= lo_ - kClamp * span) r = lo_;
  if (r > hi_ && r <= hi_ + kClamp * span) r = hi_;
  if (!(r >= lo_ && r <= hi_)) {
    throw DomainError("spline evaluated outside [" + std::to_string(lo_) + ", " +
                      std::to_string(hi_) + "]");
  }
  const std::size_t i = locate(r);
  const double dx = r - knots_[i];
  return a_[i] + dx * (b_[i] + dx * (c_[i] + dx * d_[i]));
}

double CubicSpline::piece_derivative(std::size_t i, double dx, int k) const {
  switch (k) {
    case 0: return a_[i] + dx * (b_[i] + dx * (c_[i] + dx * d_[i]));
    case 1: return b_[i] + dx * (2.0 * c_[i] + 3.0 * dx * d_[i]);
    case 2: return 2.0 * c_[i] + 6.0 * dx * d_[i];
    case 3: return 6.0 * d_[i];
    default: return 0.0;
  }
}

CubicSpline build_notaknot(const RadialKnots& knots, std::span<const double> data) {
  return CubicSpline(std::vector<double>(knots.values().begin(), knots.values().end()), data,
                     0.0, knots.radius());
}

double eval_spline(const CubicSpline& spline, double r) { return spline(r); }

CardinalBasis::CardinalBasis(std::vector<double> knots, double domain_lo, double domain_hi) {
  std::vector<double> delta(knots.size(), 0.0);
  splines_.reserve(knots.size());
  for (std::size_t m = 0; m < knots.size(); ++m) {
    delta[m] = 1.0;
    splines_.emplace_back(knots, delta, domain_lo, domain_hi);
    delta[m] = 0.0;
  }
}

CardinalBasis::CardinalBasis(const RadialKnots& knots)
    : CardinalBasis(std::vector<double>(knots.values().begin(), knots.values().end()), 0.0,
                    knots.radius()) {}

std::vector<double> CardinalBasis::eval_all(double r) const {
  std::vector<double> out;
  out.reserve(splines_.size());
  for (const auto& s : splines_) out.push_back(s(r));
  return out;
}

}  // namespace polycub
