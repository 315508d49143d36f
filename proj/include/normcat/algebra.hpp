#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normcat/closure.hpp"
#include "normcat/partition.hpp"

namespace normcat {

// Signatures:  cmon  constants {unit}        unary {}     binary {op}
//              grp   constants {unit}        unary {inv}  binary {op}
//              ab    as grp, op commutative
//              cring constants {zero, one}   unary {neg}  binary {add, mul}
enum class Variety { cmon, ab, grp, cring };

const char* variety_name(Variety v);

struct AlgebraData {
  Variety variety = Variety::cmon;
  std::vector<std::string> labels;
  std::vector<Elem> constants;
  std::vector<ElemMap> unary;
  std::vector<std::vector<Elem>> binary;  // row-major n×n

  std::size_t size() const { return labels.size(); }
  Elem op(std::size_t k, Elem x, Elem y) const { return binary[k][x * labels.size() + y]; }
  bool operator==(const AlgebraData&) const = default;
};
using Alg = Handle<AlgebraData>;

// Validates every axiom of the variety and names the first failing law and
// cell. Carriers must be non-empty.
Alg make_algebra(AlgebraData data);

using Table = std::vector<std::vector<Elem>>;

Alg make_cmon(std::vector<std::string> labels, const Table& op, Elem unit);
// Inverses are derived from the table.
Alg make_group(std::vector<std::string> labels, const Table& op, Elem unit, bool abelian);
Alg make_cring(std::vector<std::string> labels, const Table& add, const Table& mul, Elem zero, Elem one);

inline Elem unit_of(const Alg& a) { return a->constants[0]; }
// Additive/multiplicative identity (ring); unit otherwise.
inline Elem zero_of(const Alg& a) { return a->constants[0]; }
inline Elem one_of(const Alg& a) { return a->constants.back(); }
inline Elem mul(const Alg& a, Elem x, Elem y) { return a->op(a->binary.size() - 1, x, y); }
inline Elem add(const Alg& a, Elem x, Elem y) { return a->op(0, x, y); }

// Least subset containing s and closed under every operation.
Subset generated(const Alg& a, const Subset& s);
bool is_closed(const Alg& a, const Subset& s);
// Least congruence containing the pairs.
Partition congruence_closure(const Alg& a, const std::vector<std::pair<Elem, Elem>>& pairs);
bool is_congruence(const Alg& a, const Partition& p);
Alg quotient_algebra(const Alg& a, const Partition& p);
Alg subalgebra(const Alg& a, const Subset& s);
Alg product_algebra(const Alg& a, const Alg& b);
Alg trivial_algebra(Variety v);
bool is_hom(const Alg& a, const Alg& b, const ElemMap& m);

// A straight-line program computing every element from a greedily chosen
// smallest generating set.
struct GenerationPlan {
  struct Step {
    enum Kind { constant, unary, binary } kind;
    std::size_t op;
    Elem a, b, result;
  };
  std::vector<Elem> generators;
  std::vector<Step> steps;
};
GenerationPlan generation_plan(const Alg& a);
ElemMap run_plan(const GenerationPlan& plan, const Alg& a, const Alg& b, const std::vector<Elem>& images);
// Fills in `partial` (unknown = ~0) by closing under the operations; nullopt
// when some element is not generated by the known ones.
std::optional<ElemMap> extend_partial(const Alg& a, const Alg& b, ElemMap partial);

class AlgebraCategory {
 public:
  using Object = Alg;
  using Mor = Arrow<Alg>;

  explicit AlgebraCategory(Variety v) : v_(v) {}
  Variety variety() const { return v_; }

  std::string name() const;
  bool is_morphism(const Mor& f) const;
  // Throws ValidationError naming the operation that is not preserved.
  Mor morphism(const Object& dom, const Object& cod, ElemMap map) const;

  Object terminal() const;
  Object initial() const;
  Mor to_terminal(const Object& o) const;
  Mor from_initial(const Object& o) const;
  PullbackCone<Object> pullback(const Mor& f, const Mor& g) const;
  // Along a surjective leg: quotient of the other codomain. Otherwise only
  // the commutative monoid and abelian group varieties have finite pushouts
  // here (quotients of the direct product); others throw.
  PushoutCocone<Object> pushout(const Mor& f, const Mor& g) const;
  Mor equalizer(const Mor& f, const Mor& g) const;
  Mor coequalizer(const Mor& f, const Mor& g) const;
  Mor copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const;
  std::vector<Mor> hom_set(const Object& a, const Object& b, std::size_t bound) const;
  Mor subobject(const Object& o, const Subset& s) const;
  PullbackCone<Object> product(const Object& a, const Object& b) const;
  Mor quotient_map(const Object& a, const Partition& p) const;

 protected:
  void require_variety(const Object& o) const;
  Variety v_;
};

class CMonCategory : public AlgebraCategory {
 public:
  CMonCategory() : AlgebraCategory(Variety::cmon) {}
  // N_f = { x | f(A)x ∩ f(A) ≠ ∅ }.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  // a ≃ b iff ua = vb for some u, v in Ker f = f⁻¹(e).
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
};

// Submonoid with the cancellation property (ax ∈ A, a ∈ A ⇒ x ∈ A).
bool cmon_normal_mono_test(const Arrow<Alg>& f);
// Surjective with weak injectivity (fa = fb ⇒ a ≃ b).
bool cmon_normal_epi_test(const Arrow<Alg>& f);

class AbCategory : public AlgebraCategory {
 public:
  AbCategory() : AlgebraCategory(Variety::ab) {}
  // Im f and A → A/Ker f.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
  // Closures over C are discrete, as in Ab itself.
  std::optional<NormalClosure<Object>> slice_closed_form_closure(const Mor& f, const Mor& p) const;
  std::optional<NormalDualClosure<Object>> coslice_closed_form_dual_closure(const Mor& j, const Mor& f) const;
};

class GrpCategory : public AlgebraCategory {
 public:
  GrpCategory() : AlgebraCategory(Variety::grp) {}
  // Normal hull of Im f, and A → A/Ker f.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
  // N_{f/C} = Im(f)·Ê^B with E = Ker(p) ∩ Im(f).
  std::optional<NormalClosure<Object>> slice_closed_form_closure(const Mor& f, const Mor& p) const;
  // A → A/Ker f, whatever j is.
  std::optional<NormalDualClosure<Object>> coslice_closed_form_dual_closure(const Mor& j, const Mor& f) const;
  // Epis of groups are surjective; monos are regular.
  std::optional<bool> known_epi(const Mor& f) const;
  std::optional<bool> known_regular_mono(const Mor& f) const;
};

class CRingCategory : public AlgebraCategory {
 public:
  CRingCategory() : AlgebraCategory(Variety::cring) {}
  // The zero ring is a strict terminal object, so nu_f = 1_B.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const;
  // Z ×_B A represented modulo L = lcm(char A, char B) as pairs (n, x) with
  // f x = n·1_B; the ideal generated by x − n·1_A is then divided out.
  // Cross-checked against A/Ker f.
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const;
  // Epimorphisms between finite commutative rings are surjective.
  std::optional<bool> known_epi(const Mor& f) const;
};

// Additive order of 1.
std::size_t characteristic(const Alg& r);

}  // namespace normcat
