#pragma once

// Acceptance suites. Each suite checks one group of identities against
// independent oracles and reports one line per property plus a runtime line.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polytope.hpp"
#include "rational.hpp"

namespace pluripot {

struct CheckOptions {
  std::uint64_t seed = 20240601;
  std::size_t workers = 1;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string title;
  std::vector<CheckLine> lines;
  std::vector<std::string> table;  // free-form rows printed under the lines
  double seconds = 0;
  double budget = 0;

  bool passed() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
  }
};

struct SuiteInfo {
  std::string name;
  int criterion = 0;
  std::string title;
  double budget = 0;  // seconds
  std::function<void(SuiteResult&, const CheckOptions&)> body;
};

namespace checks {

/// The quadrilateral conv{(0,0), (a,0), (b,1-b), (0,1)}.
Body quadrilateral(const Rational& a, const Rational& b);
/// The quadrilateral with a = 1/5, b = 4/5.
Body quadrilateral();
/// Polygon area by the shoelace formula after sorting the vertices by angle
/// about their centroid. Independent of the library's volume code.
Rational shoelace_area(std::vector<Point> v);

}  // namespace checks

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);
/// Runs a suite, turning exceptions into a failed line and appending the
/// runtime check.
SuiteResult run_suite(const SuiteInfo& info, const CheckOptions& opt = {});
std::string render(const SuiteResult& r);

}  // namespace pluripot
