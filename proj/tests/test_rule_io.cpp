#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "polycub/errors.hpp"
#include "polycub/rule_io.hpp"

using namespace polycub;

namespace {

CubatureRule w1_rule(int n, int m, int n1) {
  return assemble_hybrid_rule(builtin_weight(BuiltinWeight::kW1, 1.0, 1), n, m, 1,
                              RadialKnots::uniform(1.0, n1));
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "polycub_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("format17 round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.754424177151970, 1e308}) {
    CHECK(std::stod(format17(v)) == v);
  }
}

TEST_CASE("rule CSV layout and round trip") {
  const auto rule = w1_rule(10, 9, 10);
  std::ostringstream out;
  write_rule_csv(rule, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,s,r,phi,x,y,weight");
  int rows = 0;
  std::string last;
  while (std::getline(lines, line)) {
    ++rows;
    last = line;
  }
  CHECK(rows == 91);
  CHECK(last.rfind("0,0,0,0,0,0,", 0) == 0);

  std::istringstream in(out.str());
  const auto back = read_rule_csv(in);
  CHECK(back.weights == rule.weights);
  CHECK(back.radii == rule.radii);
  CHECK(back.angles == rule.angles);
  CHECK(back.center_weight == rule.center_weight);
}

TEST_CASE("rule JSON round trip equals CSV") {
  const auto rule = assemble_hybrid_rule(builtin_weight(BuiltinWeight::kW2, 1.0, 22), 10, 25, 22,
                                         RadialKnots::uniform(1.0, 10),
                                         {CenterPolicy::kCenterKnot, false, GaussBackend::kAuto});
  std::stringstream json, csv;
  write_rule_json(rule, json);
  write_rule_csv(rule, csv);
  const auto a = read_rule_json(json);
  const auto b = read_rule_csv(csv);
  CHECK(a.weights == rule.weights);
  CHECK(a.weights == b.weights);
  CHECK(a.center_weight == b.center_weight);
  CHECK(a.center == CenterPolicy::kCenterKnot);
  CHECK(a.params.k == 22);
  CHECK(a.params.n == 10);

  const auto path = scratch("rule.json");
  save_rule(rule, path.string());
  CHECK(load_rule(path.string()).weights == rule.weights);
}

TEST_CASE("malformed rule files") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_rule_csv(in);
  };
  CHECK_THROWS_AS(parse(""), InputError);
  CHECK_THROWS_AS(parse("a,b\n"), InputError);
  const std::string header = "m,s,r,phi,x,y,weight\n";
  CHECK_THROWS_AS(parse(header + "1,1,1,1,0,0,0.5\n"), InputError);  // no center row
  CHECK_THROWS_AS(parse(header + "1,1,1,1,0,0,0.5\n1,2,1,2,0,0,x\n0,0,0,0,0,0,0\n"), InputError);
  CHECK_THROWS_AS(parse(header + "1,1,1,1,0,0,0.5\n1,3,1,2,0,0,1\n0,0,0,0,0,0,0\n"), InputError);
  CHECK_THROWS_AS(parse(header + "1,1,1,1,0,0,0.5\n1,1,1,1,0,0,0.5\n0,0,0,0,0,0,0\n"), InputError);
  std::istringstream bad_json("{\"weights\": []}");
  CHECK_THROWS_AS(read_rule_json(bad_json), InputError);
  CHECK_THROWS_AS(load_rule("/nonexistent/rule.csv"), InputError);
}

TEST_CASE("error messages carry line numbers") {
  std::istringstream in("m,s,r,phi,x,y,weight\n1,1,1,1,0,0,0.5\n1,2,1,2,0,0,oops\n0,0,0,0,0,0,0\n");
  try {
    read_rule_csv(in);
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("samples files") {
  const auto rule = w1_rule(10, 9, 10);
  const auto samples = sample_function(rule, [](double x, double y) { return 1.0 + x * x - y; });
  std::stringstream buffer;
  write_samples_csv(samples, buffer);
  const auto back = read_samples_csv(buffer, 10, 9);
  for (int m = 1; m <= 10; ++m) {
    for (int s = 1; s <= 9; ++s) CHECK(back.at(m, s) == samples.at(m, s));
  }
  CHECK(back.center == samples.center);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_samples_csv(empty, 10, 9), InputError);
  std::istringstream missing("m,s,value\n1,1,1.0\n0,0,1.0\n");
  CHECK_THROWS_AS(read_samples_csv(missing, 10, 9), InputError);
  std::istringstream outside("m,s,value\n11,1,1.0\n0,0,1.0\n");
  CHECK_THROWS_AS(read_samples_csv(outside, 10, 9), InputError);
}

TEST_CASE("integrate from files") {
  const auto rule = w1_rule(10, 9, 10);
  const auto rule_path = scratch("w1.csv");
  const auto samples_path = scratch("ones.csv");
  save_rule(rule, rule_path.string());
  {
    std::ofstream out(samples_path);
    write_samples_csv(sample_function(rule, [](double, double) { return 1.0; }), out);
  }
  CHECK(std::abs(integrate_from_samples(rule_path.string(), samples_path.string()) - 2 * kPi) < 1e-10);

  const auto small = w1_rule(10, 9, 6);
  const auto small_samples = scratch("small.csv");
  {
    std::ofstream out(small_samples);
    write_samples_csv(sample_function(small, [](double, double) { return 1.0; }), out);
  }
  CHECK_THROWS_AS(integrate_from_samples(rule_path.string(), small_samples.string()), InputError);
}

TEST_CASE("gauss CSV") {
  const auto rule = build_gauss_rule({0, 1}, RadialProfile::power(1.0, 0.0), 1.0, 2);
  std::ostringstream out;
  write_gauss_csv(rule, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "j,t,lambda");
  std::getline(in, line);
  CHECK(line.rfind("1,", 0) == 0);
}
