#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polycub/harmonics.hpp"

namespace polycub {

/// Radial coefficient c * r^gamma on [0, R].
struct PowerLaw {
  double c = 0.0;
  double gamma = 0.0;
};

/// Radial coefficient sampled on the uniform mesh r_i = i * r_max / (n - 1),
/// interpolated linearly between samples (linear interpolation keeps the sign).
struct Tabulated {
  double r_max = 1.0;
  std::vector<double> values;
};

/// One radial Fourier coefficient w_(k,ell)(r) of a weight.
class RadialProfile {
 public:
  /// Requires gamma > -2 so that |c| r^gamma r is integrable at 0.
  static RadialProfile power(double c, double gamma);
  /// Requires at least two samples and r_max > 0.
  static RadialProfile table(std::vector<double> values, double r_max);

  bool is_power() const { return std::holds_alternative<PowerLaw>(repr_); }
  const PowerLaw& as_power() const { return std::get<PowerLaw>(repr_); }
  const Tabulated& as_table() const { return std::get<Tabulated>(repr_); }

  double operator()(double r) const;

  /// Same profile multiplied by factor.
  RadialProfile scaled(double factor) const;

 private:
  explicit RadialProfile(std::variant<PowerLaw, Tabulated> repr) : repr_(std::move(repr)) {}
  std::variant<PowerLaw, Tabulated> repr_;
};

/// +1 if the profile is >= 0 on [0, R], -1 if <= 0, 0 if identically zero.
/// Throws PseudoDefiniteError on a sign change.
int check_pseudo_definite(const RadialProfile& profile, double radius);

/// Integral of |w(r)| r over [0, R].
double profile_abs_integral(const RadialProfile& profile, double radius);

/// A weight on the disc of radius R given by its circular-harmonic radial coefficients.
class WeightFourier {
 public:
  using TermMap = std::map<HarmonicIndex, RadialProfile>;

  /// Validates R > 0, every index, pseudo-definiteness and integrability of every term.
  WeightFourier(double radius, TermMap terms, std::string label = "custom");

  double radius() const { return radius_; }
  const TermMap& terms() const { return terms_; }
  const std::string& label() const { return label_; }
  /// Largest degree k present, or -1 for an empty weight.
  int max_degree() const;

 private:
  double radius_;
  TermMap terms_;
  std::string label_;
};

enum class BuiltinWeight { kW1, kW2 };

/// "w1" / "w2"; anything else is a DomainError.
BuiltinWeight parse_builtin_weight(std::string_view id);
std::string to_string(BuiltinWeight id);

/// w1 = (1 + x)/|x| = sqrt(2 pi)/r Y_(0,1) + sqrt(pi) Y_(1,1).
/// w2 = |y|, truncated to harmonics of degree <= k_trunc (k_trunc even).
WeightFourier builtin_weight(BuiltinWeight id, double radius, int k_trunc);

/// Default harmonic truncation for a built-in weight: 1 for w1, 22 for w2.
int default_truncation(BuiltinWeight id);

/// sum over terms with k <= k_limit of  integral_0^R |w_(k,ell)(r)| r dr.
double weight_norm(const WeightFourier& weight, std::optional<int> k_limit = std::nullopt);

/// Norm of the untruncated built-in weight. For w2 this uses the
/// telescoping sum  sum_{k>=1} 1/(4k^2 - 1) = 1/2.
double builtin_weight_norm_limit(BuiltinWeight id, double radius);

/// Parses { "R": .., "terms": [ {"k","ell","kind":"power"|"table","c","gamma"|"values"} ] }.
WeightFourier weight_from_json(const std::string& text);
WeightFourier load_weight_file(const std::string& path);

}  // namespace polycub
