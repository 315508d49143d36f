#include "normcat/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>

namespace normcat {

namespace {

using Runner = Report (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> suites{
      {"decomposition", suite_decomposition}, {"closed-forms", suite_closed_forms},
      {"perfectness", suite_perfectness},     {"quillen", suite_quillen},
      {"slice-discrete", suite_slice_discrete}, {"slice-grp", suite_slice_grp},
      {"grp-pushout", suite_grp_pushout},     {"doolittle", suite_doolittle},
      {"naturality", suite_naturality},       {"top1", suite_top1},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

Report run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "all") {
    Report r;
    for (const auto& [n, fn] : registry()) r.merge(fn(o));
    return r;
  }
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(o);
  std::string known = "all";
  for (const auto& n : suite_names()) known += ", " + n;
  throw UnknownSuite("unknown suite '" + name + "' (known: " + known + ")");
}

Report sorted(Report r) {
  std::stable_sort(r.findings.begin(), r.findings.end(),
                   [](const Finding& a, const Finding& b) { return a.id < b.id; });
  return r;
}

std::string render_text(const Report& r) {
  std::string out;
  std::map<Status, std::size_t> counts;
  for (const auto& f : r.findings) {
    ++counts[f.status];
    out += std::string(status_name(f.status)) + "  " + f.id;
    if (!f.detail.empty()) out += "  (" + f.detail + ")";
    out += "\n";
    if (!f.witness.empty()) {
      std::size_t start = 0;
      while (start < f.witness.size()) {
        auto end = f.witness.find('\n', start);
        if (end == std::string::npos) end = f.witness.size();
        if (end > start) out += "    " + f.witness.substr(start, end - start) + "\n";
        start = end + 1;
      }
    }
  }
  out += std::to_string(r.findings.size()) + " findings:";
  for (Status s : {Status::pass, Status::fail, Status::expected_fail, Status::inconclusive})
    out += " " + std::to_string(counts[s]) + " " + status_name(s);
  out += "\n";
  return out;
}

std::string render_json_lines(const Report& r) {
  std::string out;
  for (const auto& f : r.findings) {
    nlohmann::ordered_json j;
    j["id"] = f.id;
    j["status"] = status_name(f.status);
    j["detail"] = f.detail;
    if (!f.witness.empty()) j["witness"] = f.witness;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace normcat
