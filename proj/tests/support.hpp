#pragma once

// Test-side oracles: brute-force universal properties over explicit hom
// enumeration, independent of the constructions under test.

#include <string>
#include <vector>

#include "normcat/category.hpp"

namespace normcat::testing {

inline std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Every cocone (g, h) into T factors uniquely through the pushout.
template <FiniteCategory K>
bool pushout_universal(const K& k, const MorOf<K>& f, const MorOf<K>& g, const PushoutCocone<typename K::Object>& po,
                       const std::vector<typename K::Object>& targets) {
  if (!(compose(po.in1, f) == compose(po.in2, g))) return false;
  for (const auto& t : targets) {
    auto through = k.hom_set(po.apex, t, 1u << 20);
    for (const auto& a : k.hom_set(f.cod, t, 1u << 20)) {
      for (const auto& b : k.hom_set(g.cod, t, 1u << 20)) {
        if (!(compose(a, f) == compose(b, g))) continue;
        int n = 0;
        for (const auto& u : through)
          if (compose(u, po.in1) == a && compose(u, po.in2) == b) ++n;
        if (n != 1) return false;
      }
    }
  }
  return true;
}

template <FiniteCategory K>
bool pullback_universal(const K& k, const MorOf<K>& f, const MorOf<K>& g, const PullbackCone<typename K::Object>& pb,
                        const std::vector<typename K::Object>& sources) {
  if (!(compose(f, pb.pr1) == compose(g, pb.pr2))) return false;
  for (const auto& s : sources) {
    auto into = k.hom_set(s, pb.apex, 1u << 20);
    for (const auto& a : k.hom_set(s, f.dom, 1u << 20)) {
      for (const auto& b : k.hom_set(s, g.dom, 1u << 20)) {
        if (!(compose(f, a) == compose(g, b))) continue;
        int n = 0;
        for (const auto& u : into)
          if (compose(pb.pr1, u) == a && compose(pb.pr2, u) == b) ++n;
        if (n != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace normcat::testing
