#pragma once

#include <optional>

#include "normcat/category.hpp"

namespace normcat {

// Instances may decide epi / regular mono by a known closed form when the
// cokernel pair is not representable (Grp, CRing).
template <class K>
concept HasKnownEpi = requires(const K& k, const MorOf<K>& f) {
  { k.known_epi(f) } -> std::same_as<std::optional<bool>>;
};

template <class K>
concept HasKnownRegularMono = requires(const K& k, const MorOf<K>& f) {
  { k.known_regular_mono(f) } -> std::same_as<std::optional<bool>>;
};

// Kernel-pair projections coincide.
template <FiniteCategory K>
bool is_mono(const K& k, const MorOf<K>& f) {
  auto kp = k.pullback(f, f);
  return kp.pr1.map == kp.pr2.map;
}

// Cokernel-pair injections coincide.
template <FiniteCategory K>
bool is_epi(const K& k, const MorOf<K>& f) {
  if constexpr (HasKnownEpi<K>) {
    if (auto known = k.known_epi(f)) return *known;
  }
  auto cp = k.pushout(f, f);
  return cp.in1.map == cp.in2.map;
}

// f is isomorphic over its codomain to the equalizer of its cokernel pair.
template <FiniteCategory K>
bool is_regular_mono(const K& k, const MorOf<K>& f) {
  if constexpr (HasKnownRegularMono<K>) {
    if (auto known = k.known_regular_mono(f)) return *known;
  }
  if (!is_injective(f)) return false;
  auto cp = k.pushout(f, f);
  auto e = k.equalizer(cp.in1, cp.in2);
  auto t = lift_through(k, e, f);
  return t && is_iso(k, *t);
}

// f is isomorphic under its domain to the coequalizer of its kernel pair.
template <FiniteCategory K>
bool is_regular_epi(const K& k, const MorOf<K>& f) {
  if (!is_surjective(f)) return false;
  auto kp = k.pullback(f, f);
  auto q = k.coequalizer(kp.pr1, kp.pr2);
  auto t = descend_along(k, q, f);
  return t && is_iso(k, *t);
}

}  // namespace normcat
