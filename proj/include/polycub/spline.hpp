#pragma once

#include <span>
#include <vector>

namespace polycub {

/// Ring radii 0 = R_0 < R_1 < ... < R_{N1} = R with N1 >= 5.
class RadialKnots {
 public:
  explicit RadialKnots(std::vector<double> values);
  /// R_j = (R / N1) j.
  static RadialKnots uniform(double radius, int intervals);

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  int intervals() const { return static_cast<int>(values_.size()) - 1; }
  double radius() const { return values_.back(); }
  /// h = max_i (R_{i+1} - R_i).
  double mesh_width() const;

 private:
  std::vector<double> values_;
};

/// C^2 piecewise cubic interpolant with not-a-knot end conditions.
/// Evaluation is allowed on [domain_lo, domain_hi], which may extend the knot range;
/// outside the knots the first or last cubic piece is continued.
class CubicSpline {
 public:
  /// Requires at least 4 strictly increasing knots and domain_lo <= knots.front(),
  /// domain_hi >= knots.back().
  CubicSpline(std::vector<double> knots, std::span<const double> data, double domain_lo,
              double domain_hi);

  double operator()(double r) const;
  /// k-th derivative (k <= 3) of the piece on knot interval i, at local offset dx.
  double piece_derivative(std::size_t i, double dx, int k) const;

  std::span<const double> knots() const { return knots_; }
  double domain_lo() const { return lo_; }
  double domain_hi() const { return hi_; }

 private:
  std::size_t locate(double r) const;

  std::vector<double> knots_;
  // y_i + b_i dx + c_i dx^2 + d_i dx^3 on [x_i, x_{i+1}]
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
  std::vector<double> d_;
  double lo_;
  double hi_;
};

/// Not-a-knot spline through data[j] at R_j, j = 0..N1, evaluable on [0, R].
CubicSpline build_notaknot(const RadialKnots& knots, std::span<const double> data);

/// Throws DomainError for r outside [0, R] (beyond a 1e-14 clamp).
double eval_spline(const CubicSpline& spline, double r);

/// Cardinal not-a-knot splines S_m with S_m(x_j) = delta_{mj}, so that
/// SPL[V](r) = sum_m S_m(r) V_m.
class CardinalBasis {
 public:
  CardinalBasis(std::vector<double> knots, double domain_lo, double domain_hi);
  explicit CardinalBasis(const RadialKnots& knots);

  std::size_t size() const { return splines_.size(); }
  const CubicSpline& operator[](std::size_t m) const { return splines_[m]; }
  /// Values S_0(r), ..., S_{n}(r).
  std::vector<double> eval_all(double r) const;

 private:
  std::vector<CubicSpline> splines_;
};

}  // namespace polycub
