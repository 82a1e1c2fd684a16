#include "polycub/weight_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polycub/errors.hpp"

namespace polycub {

namespace {

std::string describe(HarmonicIndex idx) {
  return "(" + std::to_string(idx.k) + "," + std::to_string(idx.ell) + ")";
}

// Two-point Gauss-Legendre integrates |w(r)| r exactly on each linear piece.
double table_abs_integral(const Tabulated& t, double radius) {
  const std::size_t n = t.values.size();
  const double h = t.r_max / static_cast<double>(n - 1);
  const double g = 0.5 / std::sqrt(3.0);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = h * static_cast<double>(i);
    if (a >= radius) break;
    const double b = std::min(a + h, radius);
    const double mid = 0.5 * (a + b);
    const double half = b - a;
    for (double x : {mid - g * half, mid + g * half}) {
      const double u = (x - a) / h;
      const double v = t.values[i] * (1.0 - u) + t.values[i + 1] * u;
      sum += 0.5 * half * std::abs(v) * x;
    }
  }
  return sum;
}

}  // namespace

RadialProfile RadialProfile::power(double c, double gamma) {
  if (!(gamma > -2.0)) {
    throw DivergenceError("power-law exponent gamma must exceed -2, got " + std::to_string(gamma));
  }
  return RadialProfile(PowerLaw{c, gamma});
}

RadialProfile RadialProfile::table(std::vector<double> values, double r_max) {
  if (values.size() < 2) throw ParameterError("tabulated profile needs at least two samples");
  if (!(r_max > 0.0)) throw ParameterError("tabulated profile needs r_max > 0");
  return RadialProfile(Tabulated{r_max, std::move(values)});
}

double RadialProfile::operator()(double r) const {
  if (const auto* p = std::get_if<PowerLaw>(&repr_)) {
    if (p->gamma == 0.0) return p->c;
    return p->c * std::pow(r, p->gamma);
  }
  const auto& t = std::get<Tabulated>(repr_);
  const std::size_t n = t.values.size();
  const double h = t.r_max / static_cast<double>(n - 1);
  const double pos = std::clamp(r / h, 0.0, static_cast<double>(n - 1));
  const auto i = std::min(static_cast<std::size_t>(pos), n - 2);
  const double u = pos - static_cast<double>(i);
  return t.values[i] * (1.0 - u) + t.values[i + 1] * u;
}

RadialProfile RadialProfile::scaled(double factor) const {
  if (const auto* p = std::get_if<PowerLaw>(&repr_)) return power(p->c * factor, p->gamma);
  Tabulated t = std::get<Tabulated>(repr_);
  for (double& v : t.values) v *= factor;
  return RadialProfile(std::move(t));
}

int check_pseudo_definite(const RadialProfile& profile, double radius) {
  if (profile.is_power()) {
    const double c = profile.as_power().c;
    return c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
  }
  const auto& t = profile.as_table();
  const double h = t.r_max / static_cast<double>(t.values.size() - 1);
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    // Samples beyond R do not belong to the disc; the one straddling R still shapes [0,R].
    if (i > 0 && h * static_cast<double>(i - 1) >= radius) break;
    pos = pos || t.values[i] > 0.0;
    neg = neg || t.values[i] < 0.0;
  }
  if (pos && neg) throw PseudoDefiniteError("radial profile changes sign on [0, R]");
  return pos ? 1 : (neg ? -1 : 0);
}

double profile_abs_integral(const RadialProfile& profile, double radius) {
  if (profile.is_power()) {
    const auto& p = profile.as_power();
    if (!(p.gamma > -2.0)) throw DivergenceError("divergent norm integral");
    return std::abs(p.c) * std::pow(radius, p.gamma + 2.0) / (p.gamma + 2.0);
  }
  return table_abs_integral(profile.as_table(), radius);
}

WeightFourier::WeightFourier(double radius, TermMap terms, std::string label)
    : radius_(radius), terms_(std::move(terms)), label_(std::move(label)) {
  if (!(radius > 0.0)) throw ParameterError("disc radius must be positive");
  for (const auto& [idx, profile] : terms_) {
    validate(idx);
    try {
      check_pseudo_definite(profile, radius_);
    } catch (const PseudoDefiniteError& e) {
      throw PseudoDefiniteError("weight term " + describe(idx) + ": " + e.what());
    }
    if (!profile.is_power() && profile.as_table().r_max < radius_) {
      throw ParameterError("weight term " + describe(idx) + ": table does not cover [0, R]");
    }
    if (!std::isfinite(profile_abs_integral(profile, radius_))) {
      throw DivergenceError("weight term " + describe(idx) + " has an infinite norm");
    }
  }
}

int WeightFourier::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.k;
}

BuiltinWeight parse_builtin_weight(std::string_view id) {
  if (id == "w1") return BuiltinWeight::kW1;
  if (id == "w2") return BuiltinWeight::kW2;
  throw DomainError("unknown weight id '" + std::string(id) + "'");
}

std::string to_string(BuiltinWeight id) { return id == BuiltinWeight::kW1 ? "w1" : "w2"; }

int default_truncation(BuiltinWeight id) { return id == BuiltinWeight::kW1 ? 1 : 22; }

WeightFourier builtin_weight(BuiltinWeight id, double radius, int k_trunc) {
  WeightFourier::TermMap terms;
  if (id == BuiltinWeight::kW1) {
    if (k_trunc < 1) throw ParameterError("w1 needs K_trunc >= 1");
    terms.emplace(HarmonicIndex{0, 1}, RadialProfile::power(std::sqrt(2.0 * kPi), -1.0));
    terms.emplace(HarmonicIndex{1, 1}, RadialProfile::power(std::sqrt(kPi), 0.0));
    return WeightFourier(radius, std::move(terms), "w1");
  }
  if (k_trunc < 0 || k_trunc % 2 != 0) throw ParameterError("w2 needs an even K_trunc >= 0");
  const double sqrt_pi = std::sqrt(kPi);
  terms.emplace(HarmonicIndex{0, 1}, RadialProfile::power(2.0 * std::sqrt(2.0) / sqrt_pi, 1.0));
  for (int k = 1; 2 * k <= k_trunc; ++k) {
    const double c = -(4.0 / sqrt_pi) / (4.0 * k * k - 1.0);
    terms.emplace(HarmonicIndex{2 * k, 1}, RadialProfile::power(c, 1.0));
  }
  return WeightFourier(radius, std::move(terms), "w2");
}

double weight_norm(const WeightFourier& weight, std::optional<int> k_limit) {
  double sum = 0.0;
  for (const auto& [idx, profile] : weight.terms()) {
    if (k_limit && idx.k > *k_limit) continue;
    sum += profile_abs_integral(profile, weight.radius());
  }
  return sum;
}

double builtin_weight_norm_limit(BuiltinWeight id, double radius) {
  const double sqrt_pi = std::sqrt(kPi);
  if (id == BuiltinWeight::kW1) {
    return std::sqrt(2.0 * kPi) * radius + sqrt_pi * radius * radius / 2.0;
  }
  const double r3 = radius * radius * radius / 3.0;
  return r3 * (2.0 * std::sqrt(2.0) / sqrt_pi + (4.0 / sqrt_pi) * 0.5);
}

WeightFourier weight_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("weight file: ") + e.what());
  }
  try {
    const double radius = doc.at("R").get<double>();
    WeightFourier::TermMap terms;
    for (const auto& term : doc.at("terms")) {
      const HarmonicIndex idx{term.at("k").get<int>(), term.at("ell").get<int>()};
      validate(idx);
      const std::string kind = term.at("kind").get<std::string>();
      std::optional<RadialProfile> profile;
      if (kind == "power") {
        profile = RadialProfile::power(term.at("c").get<double>(), term.at("gamma").get<double>());
      } else if (kind == "table") {
        profile = RadialProfile::table(term.at("values").get<std::vector<double>>(), radius);
      } else {
        throw InputError("weight file: unknown term kind '" + kind + "'");
      }
      if (!terms.emplace(idx, *profile).second) {
        throw InputError("weight file: duplicate term " + describe(idx));
      }
    }
    std::string label = doc.value("label", std::string("custom"));
    return WeightFourier(radius, std::move(terms), std::move(label));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("weight file: ") + e.what());
  }
}

WeightFourier load_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open weight file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return weight_from_json(buf.str());
}

}  // namespace polycub
