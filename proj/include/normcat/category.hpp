#pragma once

#include <concepts>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normcat/arrow.hpp"

namespace normcat {

template <class Object>
struct PullbackCone {
  Object apex;
  Arrow<Object> pr1;
  Arrow<Object> pr2;
};

template <class Object>
struct PushoutCocone {
  Object apex;
  Arrow<Object> in1;
  Arrow<Object> in2;
};

inline constexpr std::size_t kDefaultHomBound = 20000;

// NORMCAT_MAX_HOMSET overrides the number of candidate maps a hom-set
// enumeration may inspect before giving up with HomSetTooLarge.
inline std::size_t default_hom_bound() {
  if (const char* env = std::getenv("NORMCAT_MAX_HOMSET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultHomBound;
}

// base^exp, saturating at limit + 1.
inline std::size_t bounded_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (limit + 1) / base) return limit + 1;
    r *= base;
    if (r > limit) return limit + 1;
  }
  return r;
}

// Capability record of a finitely bicomplete concrete category whose
// morphisms are total element maps. Pushouts and the initial object may be
// partial (they throw PushoutNotRepresentable / InitialNotRepresentable).
template <class K>
concept FiniteCategory =
    requires(const K& k, const typename K::Object& o, const Arrow<typename K::Object>& f,
             const PushoutCocone<typename K::Object>& cocone, const Subset& s, std::size_t n) {
      { o.size() } -> std::convertible_to<std::size_t>;
      { o.label(n) } -> std::convertible_to<std::string>;
      { o == o } -> std::convertible_to<bool>;
      { k.name() } -> std::convertible_to<std::string>;
      { k.is_morphism(f) } -> std::same_as<bool>;
      { k.terminal() } -> std::same_as<typename K::Object>;
      { k.initial() } -> std::same_as<typename K::Object>;
      { k.to_terminal(o) } -> std::same_as<Arrow<typename K::Object>>;
      { k.from_initial(o) } -> std::same_as<Arrow<typename K::Object>>;
      { k.pullback(f, f) } -> std::same_as<PullbackCone<typename K::Object>>;
      { k.pushout(f, f) } -> std::same_as<PushoutCocone<typename K::Object>>;
      { k.equalizer(f, f) } -> std::same_as<Arrow<typename K::Object>>;
      { k.coequalizer(f, f) } -> std::same_as<Arrow<typename K::Object>>;
      { k.copair(cocone, f, f) } -> std::same_as<Arrow<typename K::Object>>;
      { k.hom_set(o, o, n) } -> std::same_as<std::vector<Arrow<typename K::Object>>>;
      { k.subobject(o, s) } -> std::same_as<Arrow<typename K::Object>>;
    };

template <class K>
using MorOf = Arrow<typename K::Object>;

template <FiniteCategory K>
bool mor_eq(const K&, const MorOf<K>& f, const MorOf<K>& g) {
  return f == g;
}

// Iso iff bijective and the inverse element map is itself a morphism
// (bijective continuous maps need not be homeomorphisms).
template <FiniteCategory K>
bool is_iso(const K& k, const MorOf<K>& f) {
  if (!is_bijective(f)) return false;
  return k.is_morphism(MorOf<K>{f.cod, f.dom, inverse_map(f.map)});
}

template <FiniteCategory K>
std::optional<MorOf<K>> inverse(const K& k, const MorOf<K>& f) {
  if (!is_bijective(f)) return std::nullopt;
  MorOf<K> inv{f.cod, f.dom, inverse_map(f.map)};
  if (!k.is_morphism(inv)) return std::nullopt;
  return inv;
}

// t with m∘t = g (m monic on elements), validated as a morphism.
template <FiniteCategory K>
std::optional<MorOf<K>> lift_through(const K& k, const MorOf<K>& m, const MorOf<K>& g) {
  if (!(m.cod == g.cod)) return std::nullopt;
  auto t = lift_map(m, g);
  if (!t) return std::nullopt;
  MorOf<K> arrow{g.dom, m.dom, std::move(*t)};
  if (!k.is_morphism(arrow)) return std::nullopt;
  return arrow;
}

// t with t∘e = g (e onto on elements), validated as a morphism.
template <FiniteCategory K>
std::optional<MorOf<K>> descend_along(const K& k, const MorOf<K>& e, const MorOf<K>& g) {
  if (!(e.dom == g.dom)) return std::nullopt;
  auto t = descend_map(e, g);
  if (!t) return std::nullopt;
  MorOf<K> arrow{e.cod, g.cod, std::move(*t)};
  if (!k.is_morphism(arrow)) return std::nullopt;
  return arrow;
}

// Mediating map into a pullback. Concrete pullbacks have jointly injective
// projections, so x ↦ the unique apex point over (g x, h x).
template <FiniteCategory K>
MorOf<K> pair_into(const K& k, const PullbackCone<typename K::Object>& pb, const MorOf<K>& g,
                   const MorOf<K>& h) {
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (std::size_t n = 0; n < pb.apex.size(); ++n) index[{pb.pr1.map[n], pb.pr2.map[n]}] = static_cast<Elem>(n);
  ElemMap t(g.map.size());
  for (std::size_t x = 0; x < g.map.size(); ++x) {
    auto it = index.find({g.map[x], h.map[x]});
    if (it == index.end()) throw NoDiagonal("pair_into: the pair of maps does not factor through the pullback");
    t[x] = it->second;
  }
  MorOf<K> arrow{g.dom, pb.apex, std::move(t)};
  if (!k.is_morphism(arrow)) throw NoDiagonal("pair_into: induced map is not a morphism");
  return arrow;
}

template <FiniteCategory K>
std::vector<MorOf<K>> hom_set(const K& k, const typename K::Object& a, const typename K::Object& b) {
  return k.hom_set(a, b, default_hom_bound());
}

// Image factorization f = m∘e with m the subobject on f's image.
template <FiniteCategory K>
std::pair<MorOf<K>, MorOf<K>> image_factorization(const K& k, const MorOf<K>& f) {
  MorOf<K> m = k.subobject(f.cod, image(f));
  auto e = lift_through(k, m, f);
  if (!e) throw NoDiagonal("image factorization failed for " + k.name());
  return {*e, m};
}

}  // namespace normcat
