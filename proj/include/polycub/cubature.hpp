#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycub/gauss.hpp"
#include "polycub/harmonics.hpp"
#include "polycub/spline.hpp"
#include "polycub/weight_model.hpp"

namespace polycub {

using PlanarFunction = std::function<double(double x, double y)>;

/// Constant C_0 of the not-a-knot interpolation error bound.
inline constexpr double kSplineErrorConstant = 5.0 / 384.0;

/// How the radial splines treat the origin.
enum class CenterPolicy {
  /// Splines use only the ring knots R_1..R_N1 and are continued down to r = 0.
  /// The center node is kept with weight zero.
  kRingsOnly,
  /// The origin is an extra knot carrying f_(0,1)(0) = sqrt(2 pi) f(0) and
  /// f_(k,ell)(0) = 0 for k >= 1.
  kCenterKnot,
};

std::string to_string(CenterPolicy policy);
CenterPolicy parse_center_policy(std::string_view text);

enum class Summation { kNaive, kCompensated };

struct HybridOptions {
  CenterPolicy center = CenterPolicy::kRingsOnly;
  /// Refuse K >= M, where harmonics above M - 1 alias on the angular grid.
  bool reject_aliasing = false;
  GaussBackend backend = GaussBackend::kAuto;
};

struct RuleParameters {
  int n = 0;   ///< Gauss points per harmonic
  int m = 0;   ///< angles per ring
  int k = 0;   ///< harmonic truncation
  int n1 = 0;  ///< rings
  double radius = 1.0;
};

/// Flattened hybrid rule: sum_{m,s} f(R_m e^{i phi_s}) w_{m,s} + center_weight f(0).
struct CubatureRule {
  std::string weight_label;
  RuleParameters params;
  CenterPolicy center = CenterPolicy::kRingsOnly;
  std::vector<double> radii;    ///< R_0 = 0, R_1, ..., R_N1
  std::vector<double> angles;   ///< phi_1..phi_M
  std::vector<double> weights;  ///< row-major, index (m-1) * M + (s-1)
  double center_weight = 0.0;
  std::vector<GaussRadialRule> radial_rules;  ///< per harmonic, for diagnostics

  int rings() const { return static_cast<int>(radii.size()) - 1; }
  int angle_count() const { return static_cast<int>(angles.size()); }
  double weight(int m, int s) const {
    return weights[static_cast<std::size_t>((m - 1) * angle_count() + (s - 1))];
  }
  /// N1 * M ring nodes plus the center node.
  std::size_t node_count() const { return weights.size() + 1; }
};

/// f sampled on the rule grid: value(m, s) = f(R_m e^{i phi_s}) plus f(0).
class SampleGrid {
 public:
  SampleGrid(int rings, int angles);

  int rings() const { return rings_; }
  int angles() const { return angles_; }
  double& at(int m, int s) { return values_[index(m, s)]; }
  double at(int m, int s) const { return values_[index(m, s)]; }
  std::span<const double> ring(int m) const {
    return std::span<const double>(values_).subspan(index(m, 1), static_cast<std::size_t>(angles_));
  }
  double center = 0.0;

 private:
  std::size_t index(int m, int s) const;

  int rings_;
  int angles_;
  std::vector<double> values_;
};

SampleGrid sample_function(const CubatureRule& rule, const PlanarFunction& f);

CubatureRule assemble_hybrid_rule(const WeightFourier& weight, int n, int m, int k,
                                  const RadialKnots& knots, const HybridOptions& options = {});

/// Weighted sum in ascending (m, s) order followed by the center term.
double integrate_hybrid(const CubatureRule& rule, const SampleGrid& samples,
                        Summation summation = Summation::kNaive);

/// Same quantity computed without the flattened weights: DFT on each ring, one spline
/// per harmonic, then the Gauss sums.
double integrate_hybrid_staged(const CubatureRule& rule, const SampleGrid& samples);

/// Spline-free Discrete Polyharmonic Cubature I_(N,M,K).
double integrate_dpc(const WeightFourier& weight, const PlanarFunction& f, int n, int m, int k,
                     const HybridOptions& options = {});

/// sqrt(pi) C h^4 d4 ||w||.
double hybrid_error_bound(double weight_norm_value, double d4_bound, double h,
                          double constant = kSplineErrorConstant);
/// Uses weight_norm(weight) or its partial sum over k <= k_limit.
double hybrid_error_bound(const WeightFourier& weight, double d4_bound, double h,
                          double constant = kSplineErrorConstant,
                          std::optional<int> k_limit = std::nullopt);

/// Estimate (not a bound) of max |d^4 f / dr^4| over the disc from five-point differences
/// along diameters.
double estimate_radial_d4(const PlanarFunction& f, double radius, int lines = 180,
                          int points_per_line = 201);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

/// Absolute coefficient sum of I_(N,M,K) against sqrt(pi) ||w||.
InequalityCheck remarkable_inequality_check(const WeightFourier& weight, int n, int m, int k,
                                            GaussBackend backend = GaussBackend::kAuto);

enum class RuleKind { kDpc, kHybrid };

/// Efficiency coefficient: DPC 2N(2M-3-2K) / (3(2K-1) N M); hybrid 4N(M-1-K) / (3 N1 M).
double efficiency(RuleKind kind, int n, int m, int k, int n1);

}  // namespace polycub
