#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normcat/closure.hpp"
#include "normcat/partition.hpp"

namespace normcat {

struct SetData {
  std::vector<std::string> labels;
  bool operator==(const SetData&) const = default;
};
using SetObj = Handle<SetData>;

// Throws ValidationError on repeated labels.
SetObj make_set(std::vector<std::string> labels);

class FinSetCategory {
 public:
  using Object = SetObj;
  using Mor = Arrow<SetObj>;

  std::string name() const { return "FinSet"; }
  bool is_morphism(const Mor& f) const;
  Mor morphism(const Object& dom, const Object& cod, ElemMap map) const;

  Object terminal() const;
  Object initial() const;
  Mor to_terminal(const Object& o) const;
  Mor from_initial(const Object& o) const;
  PullbackCone<Object> pullback(const Mor& f, const Mor& g) const;
  PushoutCocone<Object> pushout(const Mor& f, const Mor& g) const;
  Mor equalizer(const Mor& f, const Mor& g) const;
  Mor coequalizer(const Mor& f, const Mor& g) const;
  Mor copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const;
  std::vector<Mor> hom_set(const Object& a, const Object& b, std::size_t bound) const;
  Mor subobject(const Object& o, const Subset& s) const;
  // Binary coproduct with its injections.
  PushoutCocone<Object> coproduct(const Object& a, const Object& b) const;

  // N_f = f(A) and pi_f = 1_A.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
  // Set is Boolean, so closures over any C are discrete: N_{f/C} = f(A).
  std::optional<NormalClosure<Object>> slice_closed_form_closure(const Mor& f, const Mor& p) const;
  // Under j : C → A, collapse each fibre f⁻¹(f(x)) with x ∈ A_j = f⁻¹(f(j(C)))
  // and keep A \ A_j as it is.
  std::optional<NormalDualClosure<Object>> coslice_closed_form_dual_closure(const Mor& j, const Mor& f) const;
};

struct PointedData {
  std::vector<std::string> labels;
  Elem base = 0;
  bool operator==(const PointedData&) const = default;
};
using PointedObj = Handle<PointedData>;

PointedObj make_pointed(std::vector<std::string> labels, Elem base);

class PointedSetCategory {
 public:
  using Object = PointedObj;
  using Mor = Arrow<PointedObj>;

  std::string name() const { return "FinSet*"; }
  bool is_morphism(const Mor& f) const;
  Mor morphism(const Object& dom, const Object& cod, ElemMap map) const;

  Object terminal() const;
  Object initial() const;
  Mor to_terminal(const Object& o) const;
  Mor from_initial(const Object& o) const;
  PullbackCone<Object> pullback(const Mor& f, const Mor& g) const;
  PushoutCocone<Object> pushout(const Mor& f, const Mor& g) const;
  Mor equalizer(const Mor& f, const Mor& g) const;
  Mor coequalizer(const Mor& f, const Mor& g) const;
  Mor copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const;
  std::vector<Mor> hom_set(const Object& a, const Object& b, std::size_t bound) const;
  Mor subobject(const Object& o, const Subset& s) const;

  // N_f = f(A); P_f = 1 + (A \ f⁻¹b), the fibre over the base point collapsed.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
};

// Finite topology, stored as the minimal open neighbourhood of each point.
struct TopData {
  std::vector<std::string> labels;
  std::vector<Subset> nbhd;
  bool operator==(const TopData&) const = default;
};
using TopObj = Handle<TopData>;

// From a family of opens; checks it is a topology.
TopObj make_space(std::vector<std::string> labels, const std::vector<Subset>& opens);
// From minimal neighbourhoods; checks x ∈ U_x and y ∈ U_x ⇒ U_y ⊆ U_x.
TopObj make_space_from_nbhds(std::vector<std::string> labels, std::vector<Subset> nbhd);
TopObj discrete_space(std::vector<std::string> labels);
// All open sets, in bitset order.
std::vector<Subset> opens_of(const TopObj& x);
// cl(S) = { x | U_x ∩ S ≠ ∅ }.
Subset closure_in(const TopObj& x, const Subset& s);
bool is_open(const TopObj& x, const Subset& s);

class FinTopCategory {
 public:
  using Object = TopObj;
  using Mor = Arrow<TopObj>;

  std::string name() const { return "FinTop"; }
  bool is_morphism(const Mor& f) const;
  Mor morphism(const Object& dom, const Object& cod, ElemMap map) const;

  Object terminal() const;
  Object initial() const;
  Mor to_terminal(const Object& o) const;
  Mor from_initial(const Object& o) const;
  PullbackCone<Object> pullback(const Mor& f, const Mor& g) const;
  PushoutCocone<Object> pushout(const Mor& f, const Mor& g) const;
  Mor equalizer(const Mor& f, const Mor& g) const;
  Mor coequalizer(const Mor& f, const Mor& g) const;
  Mor copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const;
  std::vector<Mor> hom_set(const Object& a, const Object& b, std::size_t bound) const;
  Mor subobject(const Object& o, const Subset& s) const;
  PushoutCocone<Object> coproduct(const Object& a, const Object& b) const;

  // Final topology on a quotient of x.
  Object quotient_space(const Object& x, const Partition& p, std::vector<std::string> labels) const;

  // N_f = f(A) with the subspace topology; pi_f = 1_A.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
};

}  // namespace normcat
