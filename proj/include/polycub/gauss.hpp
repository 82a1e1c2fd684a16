#pragma once

#include <span>
#include <vector>

#include "polycub/harmonics.hpp"
#include "polycub/weight_model.hpp"

namespace polycub {

/// Monic three-term recurrence p_{n+1}(t) = (t - alpha_n) p_n(t) - beta_n p_{n-1}(t),
/// with beta[0] holding the total mass of the measure.
struct RecurrenceCoefficients {
  std::vector<double> alpha;
  std::vector<double> beta;

  std::size_t size() const { return alpha.size(); }
};

/// Point masses approximating a positive measure on the real line.
struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// N-point Gaussian rule for the measure rho^{k/2} w_(k,ell)(sqrt(rho)) d rho on [0, R^2].
/// Nodes are increasing; weights carry the sign of the radial profile.
struct GaussRadialRule {
  HarmonicIndex idx;
  std::vector<double> nodes;
  std::vector<double> weights;
  int sign = 1;
  double support = 1.0;  ///< right end R^2 of the support interval

  std::size_t size() const { return nodes.size(); }

  /// lambda_j * t_j^{-k/2}, evaluated in the log domain.
  std::vector<double> scaled_weights() const;
};

enum class GaussBackend {
  kAuto,       ///< analytic Jacobi recurrence for power laws, Stieltjes otherwise
  kJacobi,     ///< power-law profiles only
  kStieltjes,  ///< discretized measure, any profile
};

/// mu_s = integral_0^{R^2} rho^{s + k/2} w(sqrt(rho)) d rho for s = 0..s_max.
std::vector<double> radial_moments(HarmonicIndex idx, const RadialProfile& profile,
                                   double radius, int s_max);

/// Recurrence of the measure mass * (rho/L)^exponent d rho / norm on [0, L], where the
/// total mass is beta[0] = mass. exponent must exceed -1.
RecurrenceCoefficients shifted_jacobi_recurrence(double exponent, double length, double mass,
                                                 int n);

/// Discretized Stieltjes procedure; requires at least n support points.
RecurrenceCoefficients stieltjes_recurrence(const DiscreteMeasure& measure, int n);

/// Composite Gauss-Legendre discretization of |w| rho^{k/2} d rho on [0, R^2], carried out in
/// the variable r = sqrt(rho). `panels` uniform panels, each with `points` nodes.
DiscreteMeasure discretize_radial_measure(HarmonicIndex idx, const RadialProfile& profile,
                                          double radius, int panels, int points);

/// Stieltjes recurrence with the panel count doubled until the coefficients settle.
RecurrenceCoefficients stieltjes_for_profile(HarmonicIndex idx, const RadialProfile& profile,
                                             double radius, int n);

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix and the weights
/// beta_0 * (first eigenvector component)^2.
void golub_welsch(const RecurrenceCoefficients& rec, std::vector<double>& nodes,
                  std::vector<double>& weights);

GaussRadialRule build_gauss_rule(HarmonicIndex idx, const RadialProfile& profile, double radius,
                                 int n, GaussBackend backend = GaussBackend::kAuto);

/// integral_0^R |w| r dr  -  (1/2) sum_j |lambda_j| t_j^{-k/2}.
/// Nonnegative up to roundoff (Chebyshev extremal property of Gauss rules).
double chebyshev_bound_check(const GaussRadialRule& rule, const RadialProfile& profile,
                             double radius);

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
/// Independent of the recurrence machinery above; used for discretization and oracles.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace polycub
