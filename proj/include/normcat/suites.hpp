#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normcat/errors.hpp"
#include "normcat/report.hpp"

// Named verification suites. Each returns a report whose findings carry
// descriptive statement ids, counts and witnesses but no timing, so equal
// options give byte-identical output.

namespace normcat {

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

// Zero means "the suite's own default", which is the acceptance scale.
struct SuiteOptions {
  std::size_t max_order = 0;    // groups, monoids, rings
  std::size_t max_carrier = 0;  // sets and spaces
  std::uint32_t seed = 1;
  std::size_t samples = 0;  // random samples per instance
};

Report suite_decomposition(const SuiteOptions& o);
Report suite_closed_forms(const SuiteOptions& o);
Report suite_perfectness(const SuiteOptions& o);
Report suite_quillen(const SuiteOptions& o);
Report suite_slice_discrete(const SuiteOptions& o);
Report suite_slice_grp(const SuiteOptions& o);
Report suite_grp_pushout(const SuiteOptions& o);
Report suite_doolittle(const SuiteOptions& o);
Report suite_naturality(const SuiteOptions& o);
Report suite_top1(const SuiteOptions& o);

// "all" runs every suite in the order listed by suite_names().
std::vector<std::string> suite_names();
Report run_suite(const std::string& name, const SuiteOptions& o);

// Findings sorted by statement id (stable).
Report sorted(Report r);
std::string render_text(const Report& r);
// One JSON record per line.
std::string render_json_lines(const Report& r);

}  // namespace normcat
