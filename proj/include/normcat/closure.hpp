#pragma once

#include <optional>
#include <string>

#include "normcat/category.hpp"
#include "normcat/render.hpp"

namespace normcat {

// N with nu: N → B and hat: A → N, nu∘hat = f.
template <class Object>
struct NormalClosure {
  Object object;
  Arrow<Object> nu;
  Arrow<Object> hat;
};

// P with pi: A → P and check: P → B, check∘pi = f.
template <class Object>
struct NormalDualClosure {
  Object object;
  Arrow<Object> pi;
  Arrow<Object> check;
};

template <class Object>
struct NormalDecomposition {
  Object P;
  Object N;
  Arrow<Object> pi;
  Arrow<Object> kappa;
  Arrow<Object> nu;
  Arrow<Object> hat;
  Arrow<Object> check;
};

// cross_check: run the generic construction and the instance's closed form
// whenever both are available and insist they agree.
// generic_first: consult the closed form only when the generic
// construction is not representable.
enum class ClosurePolicy { cross_check, generic_first };

template <class K>
concept HasClosedFormClosure = requires(const K& k, const MorOf<K>& f) {
  { k.closed_form_closure(f) } -> std::same_as<std::optional<NormalClosure<typename K::Object>>>;
};

template <class K>
concept HasClosedFormDualClosure = requires(const K& k, const MorOf<K>& f) {
  { k.closed_form_dual_closure(f) } -> std::same_as<std::optional<NormalDualClosure<typename K::Object>>>;
};

// N_f = B ×_{B+_A 1} 1: pull the pushout injection of the point back along
// the pushout injection of B.
template <FiniteCategory K>
NormalClosure<typename K::Object> generic_normal_closure(const K& k, const MorOf<K>& f) {
  auto bang = k.to_terminal(f.dom);
  auto po = k.pushout(f, bang);
  auto pb = k.pullback(po.in1, po.in2);
  auto hat = pair_into(k, pb, f, bang);
  return {pb.apex, pb.pr1, hat};
}

// Same subobject, as the equalizer of B → B+_A 1 and B → 1 → B+_A 1.
template <FiniteCategory K>
NormalClosure<typename K::Object> normal_closure_via_equalizer(const K& k, const MorOf<K>& f) {
  auto bang = k.to_terminal(f.dom);
  auto po = k.pushout(f, bang);
  auto through_point = compose(po.in2, k.to_terminal(f.cod));
  auto e = k.equalizer(po.in1, through_point);
  auto hat = lift_through(k, e, f);
  if (!hat) throw NoDiagonal("normal_closure_via_equalizer: f does not factor through the equalizer");
  return {e.dom, e, *hat};
}

// P_f = 0 +_{0 ×_B A} A with pi the pushout injection of A.
template <FiniteCategory K>
NormalDualClosure<typename K::Object> generic_normal_dual_closure(const K& k, const MorOf<K>& f) {
  auto zero_b = k.from_initial(f.cod);
  auto pb = k.pullback(zero_b, f);
  auto po = k.pushout(pb.pr1, pb.pr2);
  auto check = k.copair(po, k.from_initial(f.cod), f);
  return {po.apex, po.in2, check};
}

namespace detail {

template <FiniteCategory K>
void assert_closure(const K& k, const MorOf<K>& f, const NormalClosure<typename K::Object>& c, const char* who) {
  if (!(compose(c.nu, c.hat) == f) || !is_injective(c.nu))
    throw OverrideMismatch(std::string(who) + ": nu∘hat ≠ f or nu not monic in " + k.name());
}

template <FiniteCategory K>
void assert_dual_closure(const K& k, const MorOf<K>& f, const NormalDualClosure<typename K::Object>& c,
                         const char* who) {
  if (!(compose(c.check, c.pi) == f) || !is_surjective(c.pi))
    throw OverrideMismatch(std::string(who) + ": check∘pi ≠ f or pi not onto in " + k.name());
}

}  // namespace detail

template <FiniteCategory K>
NormalClosure<typename K::Object> normal_closure(const K& k, const MorOf<K>& f,
                                                 ClosurePolicy policy = ClosurePolicy::cross_check) {
  std::optional<NormalClosure<typename K::Object>> generic;
  std::optional<NormalClosure<typename K::Object>> closed;
  try {
    generic = generic_normal_closure(k, f);
  } catch (const PushoutNotRepresentable&) {
    if constexpr (!HasClosedFormClosure<K>) throw;
  }
  if constexpr (HasClosedFormClosure<K>) {
    if (!generic || policy == ClosurePolicy::cross_check) closed = k.closed_form_closure(f);
    if (!generic && !closed)
      throw PushoutNotRepresentable("normal closure in " + k.name() + ": pushout B+_A 1 not representable for " +
                                    render(f));
  }
  if (generic) detail::assert_closure(k, f, *generic, "generic normal closure");
  if (closed) {
    detail::assert_closure(k, f, *closed, "closed-form normal closure");
    if (generic && !same_subobject(generic->nu, closed->nu))
      throw OverrideMismatch("normal closure in " + k.name() + ": generic " + render_subset(generic->nu) +
                             " vs closed form " + render_subset(closed->nu) + " for " + render(f));
    return *closed;
  }
  return *generic;
}

template <FiniteCategory K>
NormalDualClosure<typename K::Object> normal_dual_closure(const K& k, const MorOf<K>& f,
                                                          ClosurePolicy policy = ClosurePolicy::cross_check) {
  std::optional<NormalDualClosure<typename K::Object>> generic;
  std::optional<NormalDualClosure<typename K::Object>> closed;
  try {
    generic = generic_normal_dual_closure(k, f);
  } catch (const PushoutNotRepresentable&) {
    if constexpr (!HasClosedFormDualClosure<K>) throw;
  } catch (const InitialNotRepresentable&) {
    if constexpr (!HasClosedFormDualClosure<K>) throw;
  }
  if constexpr (HasClosedFormDualClosure<K>) {
    if (!generic || policy == ClosurePolicy::cross_check) closed = k.closed_form_dual_closure(f);
    if (!generic && !closed)
      throw InitialNotRepresentable("normal dual closure in " + k.name() + " not representable for " + render(f));
  }
  if (generic) detail::assert_dual_closure(k, f, *generic, "generic normal dual closure");
  if (closed) {
    detail::assert_dual_closure(k, f, *closed, "closed-form normal dual closure");
    if (generic && !same_quotient(generic->pi, closed->pi))
      throw OverrideMismatch("normal dual closure in " + k.name() + ": generic and closed form differ for " +
                             render(f));
    return *closed;
  }
  return *generic;
}

// kappa is the diagonal with kappa∘pi = hat and nu∘kappa = check.
template <FiniteCategory K>
NormalDecomposition<typename K::Object> decompose_from(const K& k, const MorOf<K>& f,
                                                       const NormalClosure<typename K::Object>& nc,
                                                       const NormalDualClosure<typename K::Object>& dc) {
  auto kappa = lift_through(k, nc.nu, dc.check);
  if (!kappa || !(compose(*kappa, dc.pi) == nc.hat))
    throw NoDiagonal("normal decomposition: no diagonal between pi and nu for " + render(f));
  return {dc.object, nc.object, dc.pi, *kappa, nc.nu, nc.hat, dc.check};
}

template <FiniteCategory K>
NormalDecomposition<typename K::Object> normal_decomposition(const K& k, const MorOf<K>& f,
                                                             ClosurePolicy policy = ClosurePolicy::cross_check) {
  return decompose_from(k, f, normal_closure(k, f, policy), normal_dual_closure(k, f, policy));
}

template <FiniteCategory K>
bool is_normal_mono(const K& k, const MorOf<K>& f, ClosurePolicy policy = ClosurePolicy::cross_check) {
  if (!is_injective(f)) return false;
  return is_iso(k, normal_closure(k, f, policy).hat);
}

template <FiniteCategory K>
bool is_normal_epi(const K& k, const MorOf<K>& f, ClosurePolicy policy = ClosurePolicy::cross_check) {
  if (!is_surjective(f)) return false;
  return is_iso(k, normal_dual_closure(k, f, policy).check);
}

// Comparison class: both closures trivial.
template <FiniteCategory K>
bool is_comparison(const K& k, const MorOf<K>& f, ClosurePolicy policy = ClosurePolicy::cross_check) {
  return is_iso(k, normal_closure(k, f, policy).nu) && is_iso(k, normal_dual_closure(k, f, policy).pi);
}

}  // namespace normcat
