#pragma once

#include <string>

#include "normcat/closure.hpp"

namespace normcat {

// <u,v> : f → g in the arrow category, g∘u = v∘f.
template <class Object>
struct Square {
  Arrow<Object> u;  // A → C
  Arrow<Object> f;  // A → B
  Arrow<Object> g;  // C → D
  Arrow<Object> v;  // B → D
};

template <class Object>
bool commutes(const Square<Object>& sq) {
  return compose(sq.g, sq.u) == compose(sq.v, sq.f);
}

template <class Object>
struct InducedMaps {
  Arrow<Object> P_map;  // P_f → P_g
  Arrow<Object> N_map;  // N_f → N_g
};

template <FiniteCategory K>
InducedMaps<typename K::Object> induced_from(const K& k, const Square<typename K::Object>& sq,
                                             const NormalDecomposition<typename K::Object>& df,
                                             const NormalDecomposition<typename K::Object>& dg) {
  auto N_map = lift_through(k, dg.nu, compose(sq.v, df.nu));
  if (!N_map) throw NoDiagonal("induced N-map: v∘nu_f does not factor through nu_g");
  auto P_map = descend_along(k, df.pi, compose(dg.pi, sq.u));
  if (!P_map) throw NoDiagonal("induced P-map: pi_g∘u does not factor through pi_f");
  return {*P_map, *N_map};
}

template <FiniteCategory K>
InducedMaps<typename K::Object> induced_closure_morphisms(const K& k, const Square<typename K::Object>& sq,
                                                          ClosurePolicy policy = ClosurePolicy::cross_check) {
  if (!commutes(sq)) throw NonCommutingSquare("induced_closure_morphisms: g∘u ≠ v∘f");
  auto df = normal_decomposition(k, sq.f, policy);
  auto dg = normal_decomposition(k, sq.g, policy);
  auto maps = induced_from(k, sq, df, dg);
  if (!(compose(maps.N_map, df.hat) == compose(dg.hat, sq.u)))
    throw NoDiagonal("induced N-map violates N∘hat_f = hat_g∘u");
  if (!(compose(dg.check, maps.P_map) == compose(sq.v, df.check)))
    throw NoDiagonal("induced P-map violates check_g∘P = v∘check_f");
  return maps;
}

struct NaturalityReport {
  bool ok = true;
  std::string violated;  // name of the first identity that fails
};

// The six identities behind alpha = sigma·rho for a commuting square,
// evaluated on the supplied decompositions (which a caller may corrupt).
template <FiniteCategory K>
NaturalityReport check_naturality(const K& k, const Square<typename K::Object>& sq,
                                  const NormalDecomposition<typename K::Object>& df,
                                  const NormalDecomposition<typename K::Object>& dg) {
  auto fail = [](const char* name) { return NaturalityReport{false, name}; };
  for (const auto* d : {&df, &dg}) {
    if (!(compose(d->kappa, d->pi) == d->hat) || !(compose(d->nu, d->kappa) == d->check))
      return fail("alpha-factorization");
  }
  auto N_map = lift_through(k, dg.nu, compose(sq.v, df.nu));
  if (!N_map) return fail("N-nu");
  auto P_map = descend_along(k, df.pi, compose(dg.pi, sq.u));
  if (!P_map) return fail("P-pi");
  if (!(compose(*N_map, df.hat) == compose(dg.hat, sq.u))) return fail("N-hat");
  if (!(compose(dg.check, *P_map) == compose(sq.v, df.check))) return fail("P-check");
  if (!(compose(dg.kappa, *P_map) == compose(*N_map, df.kappa))) return fail("kappa-middle");
  if (!(compose(dg.nu, *N_map) == compose(sq.v, df.nu))) return fail("N-nu");
  return {};
}

template <FiniteCategory K>
NaturalityReport check_naturality(const K& k, const Square<typename K::Object>& sq,
                                  ClosurePolicy policy = ClosurePolicy::cross_check) {
  if (!commutes(sq)) return {false, "square"};
  return check_naturality(k, sq, normal_decomposition(k, sq.f, policy), normal_decomposition(k, sq.g, policy));
}

}  // namespace normcat
