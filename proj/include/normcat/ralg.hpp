#pragma once

#include "normcat/algebra.hpp"
#include "normcat/slices.hpp"

// R-algebras as the coslice R/CRing. Decompositions are formed as in CRing,
// and the comparison sigma is bijective.

namespace normcat {

struct RalgDecomposition {
  NormalDecomposition<CommaObject<Alg>> over;
  NormalDecomposition<Alg> base;
  Arrow<Alg> sigma;
};

inline RalgDecomposition ralg_coslice_decomposition(const CosliceCategory<CRingCategory>& kc,
                                                    const Arrow<CommaObject<Alg>>& f,
                                                    ClosurePolicy policy = ClosurePolicy::cross_check) {
  RalgDecomposition d{normal_decomposition(kc, f, policy), normal_decomposition(kc.base(), underlying(f), policy),
                      sigma_comparison(kc, f, policy)};
  if (!is_bijective(d.sigma)) throw Error("R-algebra decomposition: sigma is not bijective for " + render(underlying(f)));
  if (!same_quotient(underlying(d.over.pi), d.base.pi))
    throw Error("R-algebra decomposition: pi differs from CRing for " + render(underlying(f)));
  if (!same_subobject(underlying(d.over.nu), d.base.nu))
    throw Error("R-algebra decomposition: nu differs from CRing for " + render(underlying(f)));
  return d;
}

}  // namespace normcat
