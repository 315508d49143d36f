#pragma once

// Shared plumbing for the verification suites: exhaustive morphism
// universes, cached class membership and finding helpers.

#include <functional>
#include <string>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/render.hpp"
#include "normcat/report.hpp"
#include "normcat/suites.hpp"

namespace normcat::suites {

template <FiniteCategory K>
struct Universe {
  struct Entry {
    MorOf<K> f;
    std::size_t dom;
    std::size_t cod;
  };
  std::vector<typename K::Object> objects;
  std::vector<Entry> mors;
};

template <FiniteCategory K>
Universe<K> universe(const K& k, std::vector<typename K::Object> objects, std::size_t bound = default_hom_bound()) {
  Universe<K> u{std::move(objects), {}};
  for (std::size_t i = 0; i < u.objects.size(); ++i)
    for (std::size_t j = 0; j < u.objects.size(); ++j)
      for (auto& f : k.hom_set(u.objects[i], u.objects[j], bound)) u.mors.push_back({std::move(f), i, j});
  return u;
}

// First composable pair of members whose composite leaves the class. The
// composite is tested only when both factors are members.
template <FiniteCategory K>
std::optional<std::pair<MorOf<K>, MorOf<K>>> composition_witness(const Universe<K>& u,
                                                                 const std::function<bool(const MorOf<K>&)>& member,
                                                                 std::size_t* pairs_checked) {
  std::vector<std::vector<std::size_t>> by_dom(u.objects.size());
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < u.mors.size(); ++i)
    if (member(u.mors[i].f)) {
      members.push_back(i);
      by_dom[u.mors[i].dom].push_back(i);
    }
  for (std::size_t i : members)
    for (std::size_t j : by_dom[u.mors[i].cod]) {
      ++*pairs_checked;
      const auto& first = u.mors[i].f;
      const auto& second = u.mors[j].f;
      if (!member(compose(second, first))) return std::pair{first, second};
    }
  return std::nullopt;
}

inline std::string count_detail(std::size_t n, const std::string& what) { return std::to_string(n) + " " + what; }

// Runs body, turning any exception into a failed finding that names the
// current witness.
inline void guarded(Report& r, const std::string& id, const std::function<void(std::string&)>& body) {
  std::string witness;
  try {
    body(witness);
  } catch (const std::exception& e) {
    r.fail(id, std::string("exception: ") + e.what(), witness);
  }
}

}  // namespace normcat::suites
