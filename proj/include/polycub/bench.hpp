#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycub/cubature.hpp"
#include "polycub/weight_model.hpp"

namespace polycub {

enum class TestFunctionId { kF0, kF1, kF2, kF3, kF4 };

struct TestFunction {
  TestFunctionId id;
  std::string name;
  PlanarFunction eval;
  BuiltinWeight weight;
  double reference;  ///< exact or high-accuracy value of the weighted integral over the unit disc
};

TestFunctionId parse_test_function(std::string_view id);
/// f0 = 1 + x^4 + y^3, f1 = 1 + x^3/r + y^7/r^2 (1 at the origin), f2 = cos(10x + 20y),
/// f3 = 30 x^12, f4 = |y|.
const TestFunction& test_function(TestFunctionId id);

struct BenchmarkCell {
  int n = 0;
  int m = 0;
  int n1 = 0;
  double value = 0.0;
  double error = 0.0;  ///< value - reference
};

struct BenchmarkTable {
  std::string weight;
  std::string function;
  int k = 0;
  double reference = 0.0;
  std::vector<int> ns;
  std::vector<int> ms;
  std::vector<BenchmarkCell> cells;  ///< row-major over (ns, ms)

  const BenchmarkCell& cell(std::size_t row, std::size_t col) const {
    return cells[row * ms.size() + col];
  }
};

struct BenchmarkConfig {
  TestFunctionId function = TestFunctionId::kF0;
  /// Defaults to the weight the function's reference value belongs to. Another weight
  /// requires use_oracle.
  std::optional<BuiltinWeight> weight;
  std::vector<int> ns{10, 15, 25, 35, 50};
  std::vector<int> ms{9, 25, 63, 83};
  int k = -1;       ///< negative: default truncation of the weight
  int n1 = 0;       ///< 0: N1 = N
  double radius = 1.0;  ///< must be 1: every reference is a unit-disc integral
  HybridOptions options;
  /// Replace the stored reference with the tensor-product oracle.
  bool use_oracle = false;
};

BenchmarkTable run_benchmark(const BenchmarkConfig& config);

enum class TableFormat { kMarkdown, kCsv, kJson };
TableFormat parse_table_format(std::string_view text);
std::string format_table(const BenchmarkTable& table, TableFormat format);

/// Tensor-product Gauss-Legendre integral of f * w over the unit disc in polar coordinates,
/// `points` nodes in r and in phi.
double polar_oracle(const PlanarFunction& f, BuiltinWeight weight, int points = 2000);

}  // namespace polycub
