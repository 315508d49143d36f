#pragma once

#include <vector>

#include "normcat/algebra.hpp"
#include "normcat/orthogonality.hpp"

// Subgroup calculus on Cayley tables (Grp and Ab objects) and the closed
// forms for slices and coslices of groups.

namespace normcat {

Subset unit_subset(const Alg& g);
bool is_subgroup(const Alg& g, const Subset& s);
bool is_normal_subgroup(const Alg& g, const Subset& s);
// Least normal subgroup containing x: close under op, inv and conjugation.
Subset normal_hull(const Alg& g, const Subset& x);
// { s t | s ∈ S, t ∈ T }.
Subset set_product(const Alg& g, const Subset& s, const Subset& t);
Subset kernel_set(const Arrow<Alg>& f);
Subset image_set(const Arrow<Alg>& f);
// Cosets of a normal subgroup, as the partition of the quotient map.
Partition coset_partition(const Alg& g, const Subset& n);

// N_{f/C} = Im(f)·Ê^B with E = Ker(p) ∩ Im(f), for f : A → B, p : B → C.
// Throws Error if the product set is not a subgroup.
Subset slice_closure_set(const Arrow<Alg>& f, const Arrow<Alg>& p);
// f injective and the normal hull of Ker(p) ∩ Im(f) lies inside Im(f).
bool grp_slice_normal_mono_test(const Arrow<Alg>& f, const Arrow<Alg>& p);

// The square   A --pt--> A/E
//              |          | k
//              B --pb--> B/Ê^B
// for a subgroup inclusion A ↪ B and p : B → C, with E = Ker(p) ∩ A.
struct SubgroupPushoutSquare {
  Arrow<Alg> incl;
  Arrow<Alg> p_tilde;
  Arrow<Alg> p_bar;
  Arrow<Alg> k;
  Subset hull;
};
SubgroupPushoutSquare subgroup_pushout_square(const Arrow<Alg>& incl, const Arrow<Alg>& p);
// Compares p̄⁻¹(Im k) with A·Ê^B element-wise.
bool preimage_of_image_matches(const SubgroupPushoutSquare& sq);

// Pushout of q (surjective) and f as B / hull(f(Ker q)); in1 leaves cod(q),
// in2 leaves cod(f). Independent of the congruence-based pushout.
PushoutCocone<Alg> grp_pushout_along_regular_epi(const Arrow<Alg>& q, const Arrow<Alg>& f);

// Dual closure of f : j → k in C/Grp, carried by A → A/Ker f.
NormalDualClosure<Alg> grp_coslice_dual_closure(const Arrow<Alg>& j, const Arrow<Alg>& f);
// The pullback of A ↠ Im f along C → Im f is also a pushout, checked against
// every cocone into the given targets (bounded verification).
Verdict coslice_square_is_pushout(const Arrow<Alg>& j, const Arrow<Alg>& f, const std::vector<Alg>& targets,
                                  std::size_t bound);

}  // namespace normcat
