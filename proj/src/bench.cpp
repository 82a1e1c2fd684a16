#include "polycub/bench.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "polycub/errors.hpp"
#include "polycub/rule_io.hpp"

namespace polycub {

namespace {

std::vector<TestFunction> make_test_functions() {
  std::vector<TestFunction> out;
  out.push_back({TestFunctionId::kF0, "f0",
                 [](double x, double y) { return 1.0 + std::pow(x, 4) + y * y * y; },
                 BuiltinWeight::kW1, 43.0 / 20.0 * kPi});
  out.push_back({TestFunctionId::kF1, "f1",
                 [](double x, double y) {
                   const double r2 = x * x + y * y;
                   // Both singular terms are O(r^2) at the origin.
                   if (r2 == 0.0) return 1.0;
                   return 1.0 + x * x * x / std::sqrt(r2) + std::pow(y, 7) / r2;
                 },
                 BuiltinWeight::kW1, 35.0 / 16.0 * kPi});
  out.push_back({TestFunctionId::kF2, "f2",
                 [](double x, double y) { return std::cos(10.0 * x + 20.0 * y); },
                 BuiltinWeight::kW1, 0.301310995335215});
  out.push_back({TestFunctionId::kF3, "f3",
                 [](double x, double /*y*/) { return 30.0 * std::pow(x, 12); },
                 BuiltinWeight::kW2, 8.0 / 13.0});
  out.push_back({TestFunctionId::kF4, "f4", [](double /*x*/, double y) { return std::abs(y); },
                 BuiltinWeight::kW2, kPi / 4.0});
  return out;
}

double builtin_weight_value(BuiltinWeight id, double r, double phi) {
  if (id == BuiltinWeight::kW1) return 1.0 / r + std::cos(phi);
  return std::abs(r * std::sin(phi));
}

}  // namespace

TestFunctionId parse_test_function(std::string_view id) {
  for (const auto& f : make_test_functions()) {
    if (f.name == id) return f.id;
  }
  throw DomainError("unknown test function '" + std::string(id) + "'");
}

const TestFunction& test_function(TestFunctionId id) {
  static const std::vector<TestFunction> functions = make_test_functions();
  return functions.at(static_cast<std::size_t>(id));
}

BenchmarkTable run_benchmark(const BenchmarkConfig& config) {
  const auto& fn = test_function(config.function);
  const BuiltinWeight weight_id = config.weight.value_or(fn.weight);
  if (weight_id != fn.weight && !config.use_oracle) {
    throw ParameterError("the reference of " + fn.name + " belongs to weight " +
                         to_string(fn.weight) + "; use the oracle for " + to_string(weight_id));
  }
  if (config.radius != 1.0) {
    throw ParameterError("reference values are for the unit disc only");
  }
  const int k = config.k >= 0 ? config.k : default_truncation(weight_id);
  // w2 only has even harmonics; truncating the series at k keeps everything a K = k rule uses.
  const int k_trunc = weight_id == BuiltinWeight::kW2 ? k - k % 2 : std::max(k, 1);
  const auto weight = builtin_weight(weight_id, config.radius, k_trunc);

  BenchmarkTable table;
  table.weight = to_string(weight_id);
  table.function = fn.name;
  table.k = k;
  table.reference = config.use_oracle ? polar_oracle(fn.eval, weight_id) : fn.reference;
  table.ns = config.ns;
  table.ms = config.ms;
  for (int n : config.ns) {
    const int n1 = config.n1 > 0 ? config.n1 : n;
    const auto knots = RadialKnots::uniform(config.radius, n1);
    for (int m : config.ms) {
      const auto rule = assemble_hybrid_rule(weight, n, m, k, knots, config.options);
      const double value = integrate_hybrid(rule, sample_function(rule, fn.eval));
      table.cells.push_back({n, m, n1, value, value - table.reference});
    }
  }
  return table;
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "md") return TableFormat::kMarkdown;
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  throw DomainError("unknown table format '" + std::string(text) + "'");
}

std::string format_table(const BenchmarkTable& table, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::kCsv) {
    out << "N,M,N1,value,error\n";
    for (const auto& c : table.cells) {
      out << c.n << ',' << c.m << ',' << c.n1 << ',' << format17(c.value) << ','
          << format17(c.error) << '\n';
    }
    return out.str();
  }
  if (format == TableFormat::kJson) {
    nlohmann::json doc;
    doc["weight"] = table.weight;
    doc["function"] = table.function;
    doc["K"] = table.k;
    doc["reference"] = table.reference;
    doc["cells"] = nlohmann::json::array();
    for (const auto& c : table.cells) {
      doc["cells"].push_back(
          {{"N", c.n}, {"M", c.m}, {"N1", c.n1}, {"value", c.value}, {"error", c.error}});
    }
    out << doc.dump(2) << '\n';
    return out.str();
  }

  auto emit = [&](const char* title, bool error) {
    out << "| " << title << " |";
    for (int m : table.ms) out << ' ' << m << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < table.ms.size(); ++i) out << "---|";
    out << '\n';
    for (std::size_t row = 0; row < table.ns.size(); ++row) {
      out << "| " << table.ns[row] << " |";
      for (std::size_t col = 0; col < table.ms.size(); ++col) {
        const auto& c = table.cell(row, col);
        out << ' ' << format17(error ? c.error : c.value) << " |";
      }
      out << '\n';
    }
  };
  out << "Hybrid cubature of " << table.function << " with weight " << table.weight
      << " (K = " << table.k << "), reference " << format17(table.reference) << "\n\n";
  emit("N \\ M", false);
  out << "\nError\n\n";
  emit("N \\ M", true);
  return out.str();
}

double polar_oracle(const PlanarFunction& f, BuiltinWeight weight, int points) {
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(points, x, w);
  // |y| has kinks at phi = 0 and pi, so each half turn gets its own rule.
  double total = 0.0;
  for (double offset : {0.0, kPi}) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double phi = offset + 0.5 * kPi * (x[i] + 1.0);
      double ring = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double r = 0.5 * (x[j] + 1.0);
        ring += w[j] * f(r * std::cos(phi), r * std::sin(phi)) * builtin_weight_value(weight, r, phi) * r;
      }
      total += w[i] * ring;
    }
  }
  return 0.25 * kPi * total;
}

}  // namespace polycub
