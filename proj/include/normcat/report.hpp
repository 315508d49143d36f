#pragma once

#include <string>
#include <vector>

namespace normcat {

enum class Status { pass, fail, expected_fail, inconclusive };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::expected_fail: return "EXPECTED-FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

// One checked statement. `witness` lists every map involved, element by
// element, whenever the status is not a plain pass.
struct Finding {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  std::string witness;
};

struct Report {
  std::vector<Finding> findings;

  void add(Finding f) { findings.push_back(std::move(f)); }
  void pass(std::string id, std::string detail = {}) { add({std::move(id), Status::pass, std::move(detail), {}}); }
  void fail(std::string id, std::string detail, std::string witness = {}) {
    add({std::move(id), Status::fail, std::move(detail), std::move(witness)});
  }
  void merge(const Report& other) { findings.insert(findings.end(), other.findings.begin(), other.findings.end()); }

  bool ok() const {
    for (const auto& f : findings)
      if (f.status == Status::fail) return false;
    return true;
  }
  const Finding* first_failure() const {
    for (const auto& f : findings)
      if (f.status == Status::fail) return &f;
    return nullptr;
  }
};

}  // namespace normcat
