#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "normcat/algebra.hpp"
#include "normcat/catalogue.hpp"
#include "normcat/finset.hpp"
#include "normcat/top1.hpp"

// Seeded generators for structures and morphisms. Only mt19937 output and
// integer arithmetic are used, so a seed gives the same stream everywhere.

namespace normcat {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }
inline std::size_t pick_between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + pick(rng, hi - lo + 1); }

ElemMap random_map(Rng& rng, std::size_t n, std::size_t m);

// Carrier sizes are drawn from [lo, hi]; labels are prefix0, prefix1, ...
Arrow<SetObj> random_set_morphism(Rng& rng, std::size_t lo, std::size_t hi);
Arrow<PointedObj> random_pointed_morphism(Rng& rng, std::size_t lo, std::size_t hi);
// Random preorders; the domain's preorder is cut down until f is monotone.
Arrow<TopObj> random_top_morphism(Rng& rng, std::size_t lo, std::size_t hi);
TopObj random_space(Rng& rng, std::size_t n, const std::string& prefix);
// Finite T1 spaces are discrete.
Arrow<Space> random_top1_morphism(Rng& rng, std::size_t lo, std::size_t hi);

// All morphisms between the objects of a catalogue, for uniform sampling of
// (dom, cod) pairs with a non-empty hom-set.
struct AlgPool {
  std::vector<Named> objects;
  std::vector<std::vector<std::vector<Arrow<Alg>>>> homs;  // [dom][cod]
  std::vector<std::pair<std::size_t, std::size_t>> nonempty;

  AlgPool(const AlgebraCategory& k, std::vector<Named> objects);
  const Arrow<Alg>& random_morphism(Rng& rng) const;
  std::size_t index_of(const Alg& a) const;
};

// Catalogues with carriers in [1, max_order].
std::vector<Named> cmon_catalogue(std::size_t max_order);
std::vector<Named> ab_catalogue(std::size_t max_order);
std::vector<Named> grp_catalogue(std::size_t max_order);
std::vector<Named> cring_catalogue(std::size_t max_order);

}  // namespace normcat
