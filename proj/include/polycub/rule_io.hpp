#pragma once

#include <iosfwd>
#include <string>

#include "polycub/cubature.hpp"
#include "polycub/gauss.hpp"

namespace polycub {

/// Decimal representation with 17 significant digits ('.' separator).
std::string format17(double value);

/// Header `m,s,r,phi,x,y,weight`, one row per ring node, then `0,0,0,0,0,0,<center>`.
void write_rule_csv(const CubatureRule& rule, std::ostream& out);
/// Reconstructs the node table; Gauss rules and N, K are not part of the CSV format.
CubatureRule read_rule_csv(std::istream& in);

/// Parameter block, knots, angles, flat weight array and center weight.
void write_rule_json(const CubatureRule& rule, std::ostream& out);
CubatureRule read_rule_json(std::istream& in);

/// Dispatches on the file extension (.json, otherwise CSV).
void save_rule(const CubatureRule& rule, const std::string& path);
CubatureRule load_rule(const std::string& path);

/// Header `m,s,value`, one row per ring node, center row `0,0,<f(0)>`.
void write_samples_csv(const SampleGrid& samples, std::ostream& out);
/// Every (m, s) cell of the rings x angles grid and the center row must appear once.
SampleGrid read_samples_csv(std::istream& in, int rings, int angles);

/// Header `j,t,lambda`.
void write_gauss_csv(const GaussRadialRule& rule, std::ostream& out);

/// Loads both files and applies the rule.
double integrate_from_samples(const std::string& rule_path, const std::string& samples_path);

}  // namespace polycub
