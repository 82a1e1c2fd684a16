#include "polycub/rule_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "polycub/errors.hpp"

namespace polycub {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

double parse_double(const std::string& text, std::size_t line, const std::string& column) {
  const std::string t = strip(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw InputError("line " + std::to_string(line) + ", column '" + column +
                     "': not a number: '" + t + "'");
  }
  return v;
}

int parse_int(const std::string& text, std::size_t line, const std::string& column) {
  const std::string t = strip(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw InputError("line " + std::to_string(line) + ", column '" + column +
                     "': not an integer: '" + t + "'");
  }
  return v;
}

// Reads the header and data rows, checking the column names and the field count.
std::vector<std::vector<std::string>> read_table(std::istream& in,
                                                 const std::vector<std::string>& columns) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty file");
  const auto header = split_csv_line(strip(line));
  std::vector<std::string> cleaned;
  for (const auto& h : header) cleaned.push_back(strip(h));
  if (cleaned != columns) {
    std::string expected;
    for (const auto& c : columns) expected += (expected.empty() ? "" : ",") + c;
    throw InputError("line 1: expected header '" + expected + "'");
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (strip(line).empty()) continue;
    auto fields = split_csv_line(strip(line));
    if (fields.size() != columns.size()) {
      throw InputError("line " + std::to_string(number) + ": expected " +
                       std::to_string(columns.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    fields.push_back(std::to_string(number));  // remember the line for diagnostics
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw InputError("no data rows");
  return rows;
}

nlohmann::json rule_to_json(const CubatureRule& rule) {
  nlohmann::json doc;
  doc["weight"] = rule.weight_label;
  doc["parameters"] = {{"N", rule.params.n},   {"M", rule.params.m},
                       {"K", rule.params.k},   {"N1", rule.params.n1},
                       {"R", rule.params.radius}, {"center", to_string(rule.center)}};
  doc["knots"] = rule.radii;
  doc["angles"] = rule.angles;
  doc["weights"] = rule.weights;
  doc["center_weight"] = rule.center_weight;
  return doc;
}

}  // namespace

std::string format17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_rule_csv(const CubatureRule& rule, std::ostream& out) {
  out << "m,s,r,phi,x,y,weight\n";
  for (int m = 1; m <= rule.rings(); ++m) {
    const double r = rule.radii[static_cast<std::size_t>(m)];
    for (int s = 1; s <= rule.angle_count(); ++s) {
      const double phi = rule.angles[static_cast<std::size_t>(s - 1)];
      out << m << ',' << s << ',' << format17(r) << ',' << format17(phi) << ','
          << format17(r * std::cos(phi)) << ',' << format17(r * std::sin(phi)) << ','
          << format17(rule.weight(m, s)) << '\n';
    }
  }
  out << "0,0,0,0,0,0," << format17(rule.center_weight) << '\n';
}

CubatureRule read_rule_csv(std::istream& in) {
  const auto rows = read_table(in, {"m", "s", "r", "phi", "x", "y", "weight"});
  int rings = 0;
  int angles = 0;
  for (const auto& row : rows) {
    const std::size_t line = std::stoul(row.back());
    rings = std::max(rings, parse_int(row[0], line, "m"));
    angles = std::max(angles, parse_int(row[1], line, "s"));
  }
  if (rings < 1 || angles < 1) throw InputError("rule file has no ring nodes");

  CubatureRule rule;
  rule.radii.assign(static_cast<std::size_t>(rings) + 1, NAN);
  rule.radii[0] = 0.0;
  rule.angles.assign(static_cast<std::size_t>(angles), NAN);
  rule.weights.assign(static_cast<std::size_t>(rings) * static_cast<std::size_t>(angles), NAN);
  std::vector<bool> seen(rule.weights.size(), false);
  bool center_seen = false;
  for (const auto& row : rows) {
    const std::size_t line = std::stoul(row.back());
    const int m = parse_int(row[0], line, "m");
    const int s = parse_int(row[1], line, "s");
    const double w = parse_double(row[6], line, "weight");
    if (m == 0 && s == 0) {
      if (center_seen) throw InputError("line " + std::to_string(line) + ": duplicate center row");
      center_seen = true;
      rule.center_weight = w;
      continue;
    }
    if (m < 1 || s < 1) {
      throw InputError("line " + std::to_string(line) + ": invalid node index (" +
                       std::to_string(m) + "," + std::to_string(s) + ")");
    }
    const std::size_t cell = static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(angles) +
                             static_cast<std::size_t>(s - 1);
    if (seen[cell]) {
      throw InputError("line " + std::to_string(line) + ": duplicate node (" + std::to_string(m) +
                       "," + std::to_string(s) + ")");
    }
    seen[cell] = true;
    rule.weights[cell] = w;
    rule.radii[static_cast<std::size_t>(m)] = parse_double(row[2], line, "r");
    rule.angles[static_cast<std::size_t>(s - 1)] = parse_double(row[3], line, "phi");
  }
  for (std::size_t cell = 0; cell < seen.size(); ++cell) {
    if (!seen[cell]) {
      const auto m = cell / static_cast<std::size_t>(angles) + 1;
      const auto s = cell % static_cast<std::size_t>(angles) + 1;
      throw InputError("missing node (" + std::to_string(m) + "," + std::to_string(s) + ")");
    }
  }
  if (!center_seen) throw InputError("missing center row 0,0");
  rule.params.m = angles;
  rule.params.n1 = rings;
  rule.params.radius = rule.radii.back();
  rule.weight_label = "csv";
  return rule;
}

void write_rule_json(const CubatureRule& rule, std::ostream& out) {
  out << rule_to_json(rule).dump(2) << '\n';
}

CubatureRule read_rule_json(std::istream& in) {
  try {
    const auto doc = nlohmann::json::parse(in);
    CubatureRule rule;
    rule.weight_label = doc.at("weight").get<std::string>();
    const auto& p = doc.at("parameters");
    rule.params = {p.at("N").get<int>(), p.at("M").get<int>(), p.at("K").get<int>(),
                   p.at("N1").get<int>(), p.at("R").get<double>()};
    rule.center = parse_center_policy(p.at("center").get<std::string>());
    rule.radii = doc.at("knots").get<std::vector<double>>();
    rule.angles = doc.at("angles").get<std::vector<double>>();
    rule.weights = doc.at("weights").get<std::vector<double>>();
    rule.center_weight = doc.at("center_weight").get<double>();
    if (rule.radii.size() < 2 || rule.angles.empty() ||
        rule.weights.size() != (rule.radii.size() - 1) * rule.angles.size()) {
      throw InputError("rule JSON: weight array does not match knots x angles");
    }
    return rule;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("rule JSON: ") + e.what());
  }
}

void save_rule(const CubatureRule& rule, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  if (path.ends_with(".json")) {
    write_rule_json(rule, out);
  } else {
    write_rule_csv(rule, out);
  }
  if (!out) throw InputError("write to '" + path + "' failed");
}

CubatureRule load_rule(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open rule file '" + path + "'");
  return path.ends_with(".json") ? read_rule_json(in) : read_rule_csv(in);
}

void write_samples_csv(const SampleGrid& samples, std::ostream& out) {
  out << "m,s,value\n";
  for (int m = 1; m <= samples.rings(); ++m) {
    for (int s = 1; s <= samples.angles(); ++s) {
      out << m << ',' << s << ',' << format17(samples.at(m, s)) << '\n';
    }
  }
  out << "0,0," << format17(samples.center) << '\n';
}

SampleGrid read_samples_csv(std::istream& in, int rings, int angles) {
  const auto rows = read_table(in, {"m", "s", "value"});
  SampleGrid grid(rings, angles);
  std::vector<bool> seen(static_cast<std::size_t>(rings) * static_cast<std::size_t>(angles), false);
  bool center_seen = false;
  for (const auto& row : rows) {
    const std::size_t line = std::stoul(row.back());
    const int m = parse_int(row[0], line, "m");
    const int s = parse_int(row[1], line, "s");
    const double v = parse_double(row[2], line, "value");
    if (m == 0 && s == 0) {
      if (center_seen) throw InputError("line " + std::to_string(line) + ": duplicate center row");
      center_seen = true;
      grid.center = v;
      continue;
    }
    if (m < 1 || m > rings || s < 1 || s > angles) {
      throw InputError("line " + std::to_string(line) + ": cell (" + std::to_string(m) + "," +
                       std::to_string(s) + ") outside the " + std::to_string(rings) + "x" +
                       std::to_string(angles) + " rule grid");
    }
    const std::size_t cell = static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(angles) +
                             static_cast<std::size_t>(s - 1);
    if (seen[cell]) {
      throw InputError("line " + std::to_string(line) + ": duplicate cell (" + std::to_string(m) +
                       "," + std::to_string(s) + ")");
    }
    seen[cell] = true;
    grid.at(m, s) = v;
  }
  for (std::size_t cell = 0; cell < seen.size(); ++cell) {
    if (!seen[cell]) {
      const auto m = cell / static_cast<std::size_t>(angles) + 1;
      const auto s = cell % static_cast<std::size_t>(angles) + 1;
      throw InputError("missing sample cell (" + std::to_string(m) + "," + std::to_string(s) + ")");
    }
  }
  if (!center_seen) throw InputError("missing center row 0,0");
  return grid;
}

void write_gauss_csv(const GaussRadialRule& rule, std::ostream& out) {
  out << "j,t,lambda\n";
  for (std::size_t j = 0; j < rule.size(); ++j) {
    out << j + 1 << ',' << format17(rule.nodes[j]) << ',' << format17(rule.weights[j]) << '\n';
  }
}

double integrate_from_samples(const std::string& rule_path, const std::string& samples_path) {
  const auto rule = load_rule(rule_path);
  std::ifstream in(samples_path, std::ios::binary);
  if (!in) throw InputError("cannot open samples file '" + samples_path + "'");
  try {
    const auto samples = read_samples_csv(in, rule.rings(), rule.angle_count());
    return integrate_hybrid(rule, samples);
  } catch (const InputError& e) {
    throw InputError(samples_path + ": " + e.what());
  }
}

}  // namespace polycub
