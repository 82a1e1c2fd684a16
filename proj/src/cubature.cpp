#include "polycub/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polycub/errors.hpp"

namespace polycub {

namespace {

const double kSqrtTwoPi = std::sqrt(2.0 * kPi);

std::string describe(HarmonicIndex idx) {
  return "(" + std::to_string(idx.k) + "," + std::to_string(idx.ell) + ")";
}

void check_parameters(int n, int m, int k, const HybridOptions& options) {
  if (n < 1) throw ParameterError("N must be >= 1");
  if (k < 0) throw ParameterError("K must be >= 0");
  if (m < 3 || m % 2 == 0) {
    throw ParameterError("M must be odd and >= 3, got " + std::to_string(m));
  }
  if (options.reject_aliasing && k >= m) {
    throw ParameterError("K = " + std::to_string(k) + " aliases on an M = " + std::to_string(m) +
                         " angular grid");
  }
}

// One Gauss rule per nonzero term of degree <= K, in (k, ell) order.
std::vector<GaussRadialRule> build_rules(const WeightFourier& weight, int n, int k,
                                         GaussBackend backend) {
  std::vector<GaussRadialRule> rules;
  for (const auto& [idx, profile] : weight.terms()) {
    if (idx.k > k) continue;
    try {
      if (check_pseudo_definite(profile, weight.radius()) == 0) continue;
      rules.push_back(build_gauss_rule(idx, profile, weight.radius(), n, backend));
    } catch (const Error& e) {
      throw ParameterError("weight term " + describe(idx) + ": " + e.what());
    }
  }
  return rules;
}

// Spline knots for a policy: R_1..R_N1 or R_0..R_N1.
std::vector<double> spline_knots(std::span<const double> radii, CenterPolicy policy) {
  const std::size_t first = policy == CenterPolicy::kRingsOnly ? 1 : 0;
  return std::vector<double>(radii.begin() + static_cast<std::ptrdiff_t>(first), radii.end());
}

class Accumulator {
 public:
  explicit Accumulator(Summation mode) : mode_(mode) {}
  void add(double v) {
    if (mode_ == Summation::kNaive) {
      sum_ += v;
      return;
    }
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  Summation mode_;
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

std::string to_string(CenterPolicy policy) {
  return policy == CenterPolicy::kRingsOnly ? "rings" : "center";
}

CenterPolicy parse_center_policy(std::string_view text) {
  if (text == "rings") return CenterPolicy::kRingsOnly;
  if (text == "center") return CenterPolicy::kCenterKnot;
  throw DomainError("unknown center policy '" + std::string(text) + "'");
}

SampleGrid::SampleGrid(int rings, int angles) : rings_(rings), angles_(angles) {
  if (rings < 1 || angles < 1) throw DimensionError("sample grid must be nonempty");
  values_.assign(static_cast<std::size_t>(rings) * static_cast<std::size_t>(angles), 0.0);
}

std::size_t SampleGrid::index(int m, int s) const {
  if (m < 1 || m > rings_ || s < 1 || s > angles_) {
    throw DimensionError("sample cell (" + std::to_string(m) + "," + std::to_string(s) +
                         ") outside " + std::to_string(rings_) + "x" + std::to_string(angles_));
  }
  return static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(angles_) +
         static_cast<std::size_t>(s - 1);
}

SampleGrid sample_function(const CubatureRule& rule, const PlanarFunction& f) {
  SampleGrid grid(rule.rings(), rule.angle_count());
  for (int m = 1; m <= rule.rings(); ++m) {
    const double r = rule.radii[static_cast<std::size_t>(m)];
    for (int s = 1; s <= rule.angle_count(); ++s) {
      const double phi = rule.angles[static_cast<std::size_t>(s - 1)];
      grid.at(m, s) = f(r * std::cos(phi), r * std::sin(phi));
    }
  }
  grid.center = f(0.0, 0.0);
  return grid;
}

CubatureRule assemble_hybrid_rule(const WeightFourier& weight, int n, int m, int k,
                                  const RadialKnots& knots, const HybridOptions& options) {
  check_parameters(n, m, k, options);
  if (std::abs(knots.radius() - weight.radius()) > 1e-14 * weight.radius()) {
    throw ParameterError("outermost knot must equal the weight's disc radius");
  }
  const AngularGrid grid(m);

  CubatureRule rule;
  rule.weight_label = weight.label();
  rule.params = {n, m, k, knots.intervals(), weight.radius()};
  rule.center = options.center;
  rule.radii.assign(knots.values().begin(), knots.values().end());
  rule.angles.assign(grid.angles().begin(), grid.angles().end());
  rule.radial_rules = build_rules(weight, n, k, options.backend);

  const CardinalBasis basis(spline_knots(rule.radii, options.center), 0.0, knots.radius());
  const std::size_t offset = options.center == CenterPolicy::kRingsOnly ? 1 : 0;
  const std::size_t n1 = static_cast<std::size_t>(knots.intervals());
  const std::size_t ms = static_cast<std::size_t>(m);

  // coeff[h][b] = sum_j lambda_j t_j^{-k/2} S_b(sqrt(t_j)) for harmonic h, basis spline b.
  std::vector<std::vector<double>> coeff;
  std::vector<std::vector<double>> harmonic_at_angle;
  for (const auto& gr : rule.radial_rules) {
    std::vector<double> c(basis.size(), 0.0);
    const auto sw = gr.scaled_weights();
    for (std::size_t j = 0; j < gr.size(); ++j) {
      const auto s_vals = basis.eval_all(std::sqrt(gr.nodes[j]));
      for (std::size_t b = 0; b < basis.size(); ++b) c[b] += sw[j] * s_vals[b];
    }
    coeff.push_back(std::move(c));
    harmonic_at_angle.push_back(grid.harmonic_values(gr.idx));
  }

  const double scale = kPi / m;
  rule.weights.assign(n1 * ms, 0.0);
  for (std::size_t ring = 1; ring <= n1; ++ring) {
    const std::size_t b = ring - offset;
    for (std::size_t s = 0; s < ms; ++s) {
      double sum = 0.0;
      for (std::size_t h = 0; h < coeff.size(); ++h) sum += harmonic_at_angle[h][s] * coeff[h][b];
      rule.weights[(ring - 1) * ms + s] = scale * sum;
    }
  }
  if (options.center == CenterPolicy::kCenterKnot) {
    for (std::size_t h = 0; h < coeff.size(); ++h) {
      if (rule.radial_rules[h].idx.k == 0) rule.center_weight = 0.5 * kSqrtTwoPi * coeff[h][0];
    }
  }
  return rule;
}

double integrate_hybrid(const CubatureRule& rule, const SampleGrid& samples,
                        Summation summation) {
  if (samples.rings() != rule.rings() || samples.angles() != rule.angle_count()) {
    throw DimensionError("sample grid " + std::to_string(samples.rings()) + "x" +
                         std::to_string(samples.angles()) + " does not match rule " +
                         std::to_string(rule.rings()) + "x" + std::to_string(rule.angle_count()));
  }
  Accumulator acc(summation);
  for (int m = 1; m <= rule.rings(); ++m) {
    for (int s = 1; s <= rule.angle_count(); ++s) acc.add(samples.at(m, s) * rule.weight(m, s));
  }
  acc.add(rule.center_weight * samples.center);
  return acc.value();
}

double integrate_hybrid_staged(const CubatureRule& rule, const SampleGrid& samples) {
  if (samples.rings() != rule.rings() || samples.angles() != rule.angle_count()) {
    throw DimensionError("sample grid does not match rule");
  }
  const AngularGrid grid(rule.angle_count());
  const auto knots = spline_knots(rule.radii, rule.center);
  double total = 0.0;
  for (const auto& gr : rule.radial_rules) {
    std::vector<double> data;
    if (rule.center == CenterPolicy::kCenterKnot) {
      data.push_back(gr.idx.k == 0 ? kSqrtTwoPi * samples.center : 0.0);
    }
    for (int m = 1; m <= rule.rings(); ++m) data.push_back(dft_coefficient(samples.ring(m), grid, gr.idx));
    const CubicSpline spline(knots, data, 0.0, rule.radii.back());
    const auto sw = gr.scaled_weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < gr.size(); ++j) sum += sw[j] * spline(std::sqrt(gr.nodes[j]));
    total += 0.5 * sum;
  }
  return total;
}

double integrate_dpc(const WeightFourier& weight, const PlanarFunction& f, int n, int m, int k,
                     const HybridOptions& options) {
  check_parameters(n, m, k, options);
  const AngularGrid grid(m);
  const auto rules = build_rules(weight, n, k, options.backend);
  std::vector<double> ring(static_cast<std::size_t>(m));
  double total = 0.0;
  for (const auto& gr : rules) {
    const auto sw = gr.scaled_weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < gr.size(); ++j) {
      const double r = std::sqrt(gr.nodes[j]);
      for (int s = 0; s < m; ++s) {
        const double phi = grid.angles()[static_cast<std::size_t>(s)];
        ring[static_cast<std::size_t>(s)] = f(r * std::cos(phi), r * std::sin(phi));
      }
      sum += sw[j] * dft_coefficient(ring, grid, gr.idx);
    }
    total += 0.5 * sum;
  }
  return total;
}

double hybrid_error_bound(double weight_norm_value, double d4_bound, double h, double constant) {
  if (weight_norm_value < 0.0 || d4_bound < 0.0 || h < 0.0 || constant < 0.0) {
    throw ParameterError("error bound inputs must be nonnegative");
  }
  return std::sqrt(kPi) * constant * std::pow(h, 4) * d4_bound * weight_norm_value;
}

double hybrid_error_bound(const WeightFourier& weight, double d4_bound, double h, double constant,
                          std::optional<int> k_limit) {
  return hybrid_error_bound(weight_norm(weight, k_limit), d4_bound, h, constant);
}

double estimate_radial_d4(const PlanarFunction& f, double radius, int lines,
                          int points_per_line) {
  if (lines < 1 || points_per_line < 2) throw ParameterError("d4 scan needs a nonempty grid");
  const double step = radius / 50.0;
  const double lo = -radius + 2.0 * step;
  const double hi = radius - 2.0 * step;
  const double inv_h4 = 1.0 / std::pow(step, 4);
  double worst = 0.0;
  for (int l = 0; l < lines; ++l) {
    const double phi = kPi * l / lines;
    const double cx = std::cos(phi);
    const double cy = std::sin(phi);
    auto g = [&](double t) { return f(t * cx, t * cy); };
    for (int i = 0; i < points_per_line; ++i) {
      const double t = lo + (hi - lo) * i / (points_per_line - 1);
      const double d4 = (g(t - 2 * step) - 4 * g(t - step) + 6 * g(t) - 4 * g(t + step) +
                         g(t + 2 * step)) * inv_h4;
      worst = std::max(worst, std::abs(d4));
    }
  }
  return worst;
}

InequalityCheck remarkable_inequality_check(const WeightFourier& weight, int n, int m, int k,
                                            GaussBackend backend) {
  HybridOptions options;
  options.backend = backend;
  check_parameters(n, m, k, options);
  const AngularGrid grid(m);
  // Gauss weights normalized as in the radial exactness identity with the factor 1/2
  // (integration against r dr instead of d rho).
  double sum = 0.0;
  for (const auto& gr : build_rules(weight, n, k, backend)) {
    const auto y = grid.harmonic_values(gr.idx);
    for (double sw : gr.scaled_weights()) {
      for (double yv : y) sum += std::abs(0.5 * sw * yv);
    }
  }
  InequalityCheck out;
  out.lhs = kPi / m * sum;
  out.rhs = std::sqrt(kPi) * weight_norm(weight);
  out.slack = out.rhs - out.lhs;
  return out;
}

double efficiency(RuleKind kind, int n, int m, int k, int n1) {
  if (n < 1 || m < 1 || k < 0 || n1 < 1) throw ParameterError("efficiency needs positive parameters");
  const long long nn = n;
  const long long mm = m;
  const long long kk = k;
  if (kind == RuleKind::kDpc) {
    const long long num = 2 * nn * (2 * mm - 3 - 2 * kk);
    const long long den = 3 * (2 * kk - 1) * nn * mm;
    return static_cast<double>(num) / static_cast<double>(den);
  }
  const long long num = 4 * nn * (mm - 1 - kk);
  const long long den = 3LL * n1 * mm;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace polycub
