#include "polycub/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "polycub/errors.hpp"

namespace polycub {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Integer exponent of r in 2 r^{k+1} w(r), or -1 when the integrand is not polynomial
// on each panel (non-integer or negative power).
int polynomial_degree_in_r(HarmonicIndex idx, const RadialProfile& profile) {
  if (!profile.is_power()) return idx.k + 2;  // r^{k+1} times a linear piece
  const double e = idx.k + 1 + profile.as_power().gamma;
  if (e >= 0.0 && e == std::floor(e)) return static_cast<int>(e);
  return -1;
}

// Appends the Gauss-Legendre image of [a, b] scaled by the radial measure density.
void append_panel(double a, double b, std::span<const double> gl_x, std::span<const double> gl_w,
                  HarmonicIndex idx, const RadialProfile& profile, double inv_length,
                  DiscreteMeasure& out) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < gl_x.size(); ++i) {
    const double r = mid + half * gl_x[i];
    const double density = 2.0 * std::pow(r, idx.k + 1) * std::abs(profile(r));
    out.nodes.push_back(r * r * inv_length);
    out.weights.push_back(half * gl_w[i] * density);
  }
}

// Maps a recurrence of the measure on [0, 1] (variable x = rho / L) back to [0, L].
RecurrenceCoefficients rescale(RecurrenceCoefficients rec, double length) {
  for (double& a : rec.alpha) a *= length;
  for (std::size_t i = 1; i < rec.beta.size(); ++i) rec.beta[i] *= length * length;
  return rec;
}

double max_relative_change(const RecurrenceCoefficients& a, const RecurrenceCoefficients& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.alpha[i] - b.alpha[i]) / std::abs(b.alpha[i]));
    worst = std::max(worst, std::abs(a.beta[i] - b.beta[i]) / std::abs(b.beta[i]));
  }
  return worst;
}

}  // namespace

std::vector<double> GaussRadialRule::scaled_weights() const {
  std::vector<double> out(nodes.size());
  const double half_k = 0.5 * idx.k;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double mag = std::exp(std::log(std::abs(weights[j])) - half_k * std::log(nodes[j]));
    out[j] = weights[j] < 0.0 ? -mag : mag;
  }
  return out;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw ParameterError("Gauss-Legendre needs n >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4.0 * kEps * std::abs(x) + 1e-300) break;
    }
    // one more derivative evaluation at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

std::vector<double> radial_moments(HarmonicIndex idx, const RadialProfile& profile,
                                   double radius, int s_max) {
  validate(idx);
  std::vector<double> mu;
  mu.reserve(static_cast<std::size_t>(s_max + 1));
  if (profile.is_power()) {
    const auto& p = profile.as_power();
    for (int s = 0; s <= s_max; ++s) {
      const double e = s + 0.5 * (idx.k + p.gamma);
      if (!(e > -1.0)) {
        throw DivergenceError("radial moment " + std::to_string(s) + " diverges");
      }
      mu.push_back(p.c * std::pow(radius, 2.0 * e + 2.0) / (e + 1.0));
    }
    return mu;
  }
  // integral_0^R r^{2s+k} w(r) 2r dr, exact per linear piece of the table.
  const auto& t = profile.as_table();
  const std::size_t pieces = t.values.size() - 1;
  const double h = t.r_max / static_cast<double>(pieces);
  std::vector<double> gx;
  std::vector<double> gw;
  gauss_legendre(s_max + idx.k / 2 + 3, gx, gw);
  for (int s = 0; s <= s_max; ++s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pieces; ++i) {
      const double a = h * static_cast<double>(i);
      if (a >= radius) break;
      const double b = std::min(a + h, radius);
      const double mid = 0.5 * (a + b);
      const double half = 0.5 * (b - a);
      for (std::size_t q = 0; q < gx.size(); ++q) {
        const double r = mid + half * gx[q];
        sum += half * gw[q] * 2.0 * std::pow(r, 2 * s + idx.k + 1) * profile(r);
      }
    }
    mu.push_back(sum);
  }
  return mu;
}

RecurrenceCoefficients shifted_jacobi_recurrence(double exponent, double length, double mass,
                                                 int n) {
  if (!(exponent > -1.0)) throw DivergenceError("Jacobi exponent must exceed -1");
  if (n < 1) throw ParameterError("recurrence length must be >= 1");
  // Jacobi weight (1+x)^b on [-1, 1], mapped affinely onto [0, L].
  const double b = exponent;
  RecurrenceCoefficients rec;
  rec.alpha.resize(static_cast<std::size_t>(n));
  rec.beta.resize(static_cast<std::size_t>(n));
  rec.alpha[0] = 0.5 * length * (2.0 * b + 2.0) / (b + 2.0);
  rec.beta[0] = mass;
  for (int i = 1; i < n; ++i) {
    const double s = 2.0 * i + b;
    rec.alpha[static_cast<std::size_t>(i)] = 0.5 * length * (1.0 + b * b / (s * (s + 2.0)));
    double beta;
    if (i == 1) {
      beta = 4.0 * (1.0 + b) / ((2.0 + b) * (2.0 + b) * (3.0 + b));
    } else {
      beta = 4.0 * i * i * (i + b) * (i + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    rec.beta[static_cast<std::size_t>(i)] = 0.25 * length * length * beta;
  }
  return rec;
}

RecurrenceCoefficients stieltjes_recurrence(const DiscreteMeasure& measure, int n) {
  const std::size_t size = measure.nodes.size();
  if (n < 1) throw ParameterError("recurrence length must be >= 1");
  if (size < static_cast<std::size_t>(n) || measure.weights.size() != size) {
    throw DimensionError("discrete measure too small for the requested recurrence");
  }
  RecurrenceCoefficients rec;
  rec.alpha.resize(static_cast<std::size_t>(n));
  rec.beta.resize(static_cast<std::size_t>(n));
  const double mass = std::accumulate(measure.weights.begin(), measure.weights.end(), 0.0);
  if (!(mass > 0.0)) throw ParameterError("discrete measure has no mass");
  rec.beta[0] = mass;
  // Orthonormal polynomials evaluated at every support point.
  std::vector<double> prev(size, 0.0);
  std::vector<double> cur(size, 1.0 / std::sqrt(mass));
  for (int k = 0; k < n; ++k) {
    double a = 0.0;
    for (std::size_t i = 0; i < size; ++i) a += measure.weights[i] * measure.nodes[i] * cur[i] * cur[i];
    rec.alpha[static_cast<std::size_t>(k)] = a;
    if (k + 1 == n) break;
    const double sb = k == 0 ? 0.0 : std::sqrt(rec.beta[static_cast<std::size_t>(k)]);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      const double next = (measure.nodes[i] - a) * cur[i] - sb * prev[i];
      prev[i] = cur[i];
      cur[i] = next;
      norm2 += measure.weights[i] * next * next;
    }
    if (!(norm2 > 0.0)) throw NumericError("Stieltjes procedure lost orthogonality");
    rec.beta[static_cast<std::size_t>(k + 1)] = norm2;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : cur) v *= inv;
  }
  return rec;
}

DiscreteMeasure discretize_radial_measure(HarmonicIndex idx, const RadialProfile& profile,
                                          double radius, int panels, int points) {
  validate(idx);
  if (panels < 1 || points < 1) throw ParameterError("discretization needs panels, points >= 1");
  std::vector<double> gx;
  std::vector<double> gw;
  gauss_legendre(points, gx, gw);
  const double inv_length = 1.0 / (radius * radius);
  const double h = radius / panels;
  DiscreteMeasure out;
  int first = 0;
  if (polynomial_degree_in_r(idx, profile) < 0) {
    // Singular density r^e near the origin: grade the first panel geometrically so the
    // neglected piece [0, h sigma^L] carries less than 1e-17 of the panel mass.
    const double e = idx.k + 1 + profile.as_power().gamma;
    const double sigma = 0.15;
    const int levels = static_cast<int>(std::ceil(17.0 * std::log(10.0) / ((e + 1.0) * -std::log(sigma))));
    double lo = h * std::pow(sigma, levels);
    for (int l = levels; l >= 1; --l) {
      const double hi = lo / sigma;
      append_panel(lo, hi, gx, gw, idx, profile, inv_length, out);
      lo = hi;
    }
    first = 1;
  }
  for (int p = first; p < panels; ++p) {
    append_panel(h * p, p + 1 == panels ? radius : h * (p + 1), gx, gw, idx, profile,
                 inv_length, out);
  }
  return out;
}

RecurrenceCoefficients stieltjes_for_profile(HarmonicIndex idx, const RadialProfile& profile,
                                             double radius, int n) {
  // Points per panel: exact for 2 r^{k+1} w(r) p(r^2)^2 r^2 when that is a polynomial.
  const int degree = polynomial_degree_in_r(idx, profile);
  const int points = degree >= 0 ? (4 * n + 2 + degree) / 2 + 1 : 2 * n + 20;
  int panels = profile.is_power() ? 1
                                  : static_cast<int>(profile.as_table().values.size() - 1);
  const double length = radius * radius;
  auto coarse = stieltjes_recurrence(discretize_radial_measure(idx, profile, radius, panels, points), n);
  for (int round = 0; round < 12; ++round) {
    panels *= 2;
    auto fine = stieltjes_recurrence(discretize_radial_measure(idx, profile, radius, panels, points), n);
    const double change = max_relative_change(coarse, fine);
    coarse = std::move(fine);
    if (change < 1e-13) {
      auto rec = rescale(std::move(coarse), length);
      return rec;
    }
  }
  throw NumericError("Stieltjes discretization did not settle");
}

void golub_welsch(const RecurrenceCoefficients& rec, std::vector<double>& nodes,
                  std::vector<double>& weights) {
  const std::size_t n = rec.size();
  if (n == 0 || rec.beta.size() != n) throw DimensionError("malformed recurrence");
  std::vector<double> d(rec.alpha);
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::sqrt(rec.beta[i + 1]);
  // First components of the eigenvectors, updated by the same plane rotations.
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  // Implicit QL with Wilkinson-type shifts.
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw NumericError("tridiagonal eigen solve did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool deflated = false;
        for (std::size_t ii = m; ii-- > l;) {
          const double f = s * e[ii];
          const double b = c * e[ii];
          r = std::hypot(f, g);
          e[ii + 1] = r;
          if (r == 0.0) {
            d[ii + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[ii + 1] - p;
          r = (d[ii] - g) * s + 2.0 * c * b;
          p = s * r;
          d[ii + 1] = g + p;
          g = c * r - b;
          const double zf = z[ii + 1];
          z[ii + 1] = s * z[ii] + c * zf;
          z[ii] = c * z[ii] - s * zf;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  nodes.resize(n);
  weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = d[order[i]];
    weights[i] = rec.beta[0] * z[order[i]] * z[order[i]];
  }
}

GaussRadialRule build_gauss_rule(HarmonicIndex idx, const RadialProfile& profile, double radius,
                                 int n, GaussBackend backend) {
  validate(idx);
  if (n < 1) throw ParameterError("Gauss rule needs N >= 1");
  if (!(radius > 0.0)) throw ParameterError("disc radius must be positive");
  const int sign = check_pseudo_definite(profile, radius);
  if (sign == 0) throw ParameterError("radial profile is identically zero (empty measure)");

  if (backend == GaussBackend::kAuto) {
    backend = profile.is_power() ? GaussBackend::kJacobi : GaussBackend::kStieltjes;
  }
  const double length = radius * radius;
  RecurrenceCoefficients rec;
  if (backend == GaussBackend::kJacobi) {
    if (!profile.is_power()) throw ParameterError("Jacobi backend needs a power-law profile");
    const auto& p = profile.as_power();
    const double exponent = 0.5 * (idx.k + p.gamma);
    if (!(exponent > -1.0)) throw DivergenceError("radial measure is not integrable at 0");
    const double mass = std::abs(p.c) * std::pow(length, exponent + 1.0) / (exponent + 1.0);
    rec = shifted_jacobi_recurrence(exponent, length, mass, n);
  } else {
    rec = stieltjes_for_profile(idx, profile, radius, n);
  }

  GaussRadialRule rule;
  rule.idx = idx;
  rule.sign = sign;
  rule.support = length;
  golub_welsch(rec, rule.nodes, rule.weights);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    if (!(rule.nodes[j] > 0.0 && rule.nodes[j] < length)) {
      throw NumericError("Gauss node escaped the support interval");
    }
    rule.weights[j] *= sign;
  }
  return rule;
}

double chebyshev_bound_check(const GaussRadialRule& rule, const RadialProfile& profile,
                             double radius) {
  // The rule integrates against d rho, the bound is stated with respect to r dr = d rho / 2.
  double sum = 0.0;
  for (double v : rule.scaled_weights()) sum += std::abs(v);
  return profile_abs_integral(profile, radius) - 0.5 * sum;
}

}  // namespace polycub
