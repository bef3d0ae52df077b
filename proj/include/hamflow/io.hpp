#pragma once
// JSON serialisation of atlases and analysis reports, and the selftest entry
// point shared by the CLI and the test suite.

#include <string>
#include <vector>

#include "hamflow/enumerate.hpp"
#include "hamflow/homology.hpp"
#include "hamflow/poset.hpp"

namespace hamflow {

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Byte-stable rendering (2-space indent, keys in insertion order).
std::string atlas_json(const Atlas& atlas);
Atlas atlas_from_json(const std::string& text);  // throws SchemaError

// Per connected component of the degeneration poset.
struct ComponentReport {
  std::vector<int> members;      // atlas class indices, ascending
  std::vector<int> core_points;  // surviving atlas class indices
  bool contractible = false;
  HomologyResult core_homology;
  HomologyResult full_homology;
  int sphere_match = -1;  // n with homology of S^n (core complex), else -1
};

struct AnalysisReport {
  Atlas atlas;
  FinitePoset poset;
  std::vector<ComponentReport> components;
  Coefficients coefficients = Coefficients::Z;
};
AnalysisReport analyze_atlas(const Atlas& atlas, Coefficients c);
std::string report_json(const AnalysisReport& r);

// Internal consistency battery; returns failure descriptions (empty = pass).
// fault != 0 deliberately injects a defect (negative selftest test).
std::vector<std::string> selftest(uint64_t seed, int fault = 0);

}  // namespace hamflow
