#pragma once

#include <compare>
#include <span>
#include <vector>

namespace polycub {

inline constexpr double kPi = 3.14159265358979323846;

/// Index (k, ell) of the orthonormal circular harmonic Y_(k,ell).
/// ell ranges over 1..a_k with a_0 = 1 and a_k = 2 for k >= 1.
struct HarmonicIndex {
  int k = 0;
  int ell = 1;

  friend constexpr auto operator<=>(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// Number of branches a_k at degree k.
constexpr int branch_count(int k) { return k == 0 ? 1 : 2; }

constexpr bool is_valid(HarmonicIndex idx) {
  return idx.k >= 0 && idx.ell >= 1 && idx.ell <= branch_count(idx.k);
}

/// Throws DomainError unless idx is a valid harmonic index.
void validate(HarmonicIndex idx);

/// All indices with k <= max_degree in lexicographic (k, ell) order.
std::vector<HarmonicIndex> harmonics_up_to(int max_degree);

/// Y_(0,1) = 1/sqrt(2 pi), Y_(k,1) = cos(k phi)/sqrt(pi), Y_(k,2) = sin(k phi)/sqrt(pi).
double eval_harmonic(HarmonicIndex idx, double phi);

/// Equispaced angles phi_s = 2 pi s / M for s = 1..M, with M odd and >= 3.
class AngularGrid {
 public:
  explicit AngularGrid(int m);

  int size() const { return m_; }
  /// Angle with 1-based index s.
  double angle(int s) const { return angles_.at(static_cast<std::size_t>(s - 1)); }
  /// Angles in s order; element i holds phi_{i+1}.
  std::span<const double> angles() const { return angles_; }

  /// Y_idx evaluated at every grid angle, in s order.
  std::vector<double> harmonic_values(HarmonicIndex idx) const;

 private:
  int m_;
  std::vector<double> angles_;
};

/// Discrete Fourier coefficient (2 pi / M) sum_s f(phi_s) Y_idx(phi_s).
/// samples[i] holds the value at phi_{i+1}.
double dft_coefficient(std::span<const double> samples, const AngularGrid& grid,
                       HarmonicIndex idx);

}  // namespace polycub
