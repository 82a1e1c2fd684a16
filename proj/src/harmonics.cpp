#include "polycub/harmonics.hpp"

#include <cmath>
#include <string>

#include "polycub/errors.hpp"

namespace polycub {

namespace {
const double kInvSqrtPi = 1.0 / std::sqrt(kPi);
const double kInvSqrtTwoPi = 1.0 / std::sqrt(2.0 * kPi);
}  // namespace

void validate(HarmonicIndex idx) {
  if (!is_valid(idx)) {
    throw DomainError("invalid harmonic index (k=" + std::to_string(idx.k) +
                      ", ell=" + std::to_string(idx.ell) + ")");
  }
}

std::vector<HarmonicIndex> harmonics_up_to(int max_degree) {
  std::vector<HarmonicIndex> out;
  for (int k = 0; k <= max_degree; ++k) {
    for (int ell = 1; ell <= branch_count(k); ++ell) out.push_back({k, ell});
  }
  return out;
}

double eval_harmonic(HarmonicIndex idx, double phi) {
  validate(idx);
  if (idx.k == 0) return kInvSqrtTwoPi;
  const double arg = static_cast<double>(idx.k) * phi;
  return (idx.ell == 1 ? std::cos(arg) : std::sin(arg)) * kInvSqrtPi;
}

AngularGrid::AngularGrid(int m) : m_(m) {
  if (m < 3 || m % 2 == 0) {
    throw ParameterError("angular grid size M must be odd and >= 3, got " + std::to_string(m));
  }
  angles_.resize(static_cast<std::size_t>(m));
  for (int s = 1; s <= m; ++s) {
    angles_[static_cast<std::size_t>(s - 1)] = 2.0 * kPi * s / m;
  }
}

std::vector<double> AngularGrid::harmonic_values(HarmonicIndex idx) const {
  std::vector<double> out;
  out.reserve(angles_.size());
  for (double phi : angles_) out.push_back(eval_harmonic(idx, phi));
  return out;
}

double dft_coefficient(std::span<const double> samples, const AngularGrid& grid,
                       HarmonicIndex idx) {
  validate(idx);
  if (samples.size() != static_cast<std::size_t>(grid.size())) {
    throw DimensionError("DFT expects " + std::to_string(grid.size()) + " samples, got " +
                         std::to_string(samples.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    sum += samples[i] * eval_harmonic(idx, grid.angles()[i]);
  }
  return 2.0 * kPi / grid.size() * sum;
}

}  // namespace polycub
