#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normcat/closure.hpp"
#include "normcat/finset.hpp"

// Finite closure spaces and the closed forms for T1 spaces and their slices
// and coslices. A finite T1 space is discrete, so the categorical claims can
// only be checked there; the formulas themselves run on any finite closure
// space.

namespace normcat {

struct ClosureData {
  std::vector<std::string> labels;
  std::vector<Subset> point_cl;  // cl{x}
  bool t1 = false;
  bool operator==(const ClosureData&) const = default;
};
using Space = Handle<ClosureData>;

// Point closures with additive extension. Checks x ∈ cl{x} and idempotence;
// with t1 set, every singleton must be closed.
Space make_closure_space(std::vector<std::string> labels, std::vector<Subset> point_cl, bool t1);
// Full table indexed by the bitmask of S (carrier ≤ 16). Checks all four
// Kuratowski axioms.
Space make_closure_space_from_table(std::vector<std::string> labels, const std::vector<Subset>& table, bool t1);
Space discrete_closure_space(std::vector<std::string> labels);
Space from_fintop(const TopObj& x);
TopObj to_fintop(const Space& s);

Subset closure_of(const Space& s, const Subset& x);
bool is_closed_in(const Space& s, const Subset& x);
bool is_continuous(const Space& a, const Space& b, const ElemMap& f);
// Injective and cl_A{x} = f⁻¹(cl_B{fx}) for every x.
bool is_embedding(const Arrow<Space>& f);

// Subspace on s with the induced closure, and its inclusion.
Arrow<Space> subspace_inclusion(const Space& b, const Subset& s);
// Final closure structure on a quotient by the partition.
Arrow<Space> quotient_by(const Space& b, const Partition& p);

struct Top1Closure {
  NormalClosure<Space> closure;
  // B+_A 1: B with cl(f(A)) collapsed, or B + 1 when A is empty.
  PushoutCocone<Space> pushout;
};
Top1Closure top1_normal_closure(const Arrow<Space>& f);

// N_{f/C} = ⋃_{a ∈ A} cl(f(q⁻¹(qa))) with q = p∘f.
NormalClosure<Space> top1_slice_normal_closure(const Arrow<Space>& f, const Arrow<Space>& p);
// f an embedding with each f(q⁻¹(qa)) closed in B.
bool top1_slice_normal_mono_test(const Arrow<Space>& f, const Arrow<Space>& p);
// B = p⁻¹(q(A)) and each f(q⁻¹(qa)) dense in p⁻¹(qa).
bool top1_slice_comparison_test(const Arrow<Space>& f, const Arrow<Space>& p);
// The C/Set construction with the quotient closure.
NormalDualClosure<Space> top1_coslice_dual_closure(const Arrow<Space>& j, const Arrow<Space>& f);

// Pushout of a subspace inclusion A ↪ B along p|_A : A → C, as
// P = (B \ D) + C with D = ⋃ cl(E_a), E_a = p⁻¹(pa) ∩ A.
struct SlicePushout {
  Subset D;
  PushoutCocone<Space> cocone;  // in1 = i : B → P, in2 = j : C → P
};
SlicePushout top1_slice_pushout(const Arrow<Space>& incl, const Arrow<Space>& p);
// i⁻¹z is {z} off D, cl(E_a) over pa, empty over C \ p(A).
bool slice_pushout_fibres_hold(const SlicePushout& po, const Arrow<Space>& incl, const Arrow<Space>& p);

}  // namespace normcat
