#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "normcat/closure.hpp"
#include "normcat/finset.hpp"

namespace normcat {

enum class Side { over, under };

// An object of C/C (side over: structure A → C) or of C/C with C on the
// left (side under: structure C → A). Equality compares side and structure.
template <class BaseObj>
struct CommaObject {
  Side side = Side::over;
  Arrow<BaseObj> structure;

  const BaseObj& carrier() const { return side == Side::over ? structure.dom : structure.cod; }
  std::size_t size() const { return carrier().size(); }
  const std::string& label(std::size_t i) const { return carrier().label(i); }
  const std::vector<std::string>& labels() const { return carrier().labels(); }
  friend bool operator==(const CommaObject& a, const CommaObject& b) {
    return a.side == b.side && a.structure == b.structure;
  }
};

template <class BaseObj>
Arrow<BaseObj> underlying(const Arrow<CommaObject<BaseObj>>& f) {
  return {f.dom.carrier(), f.cod.carrier(), f.map};
}

template <class K>
concept HasSliceClosureHook = requires(const K& k, const MorOf<K>& f) {
  { k.slice_closed_form_closure(f, f) } -> std::same_as<std::optional<NormalClosure<typename K::Object>>>;
};

template <class K>
concept HasCosliceDualClosureHook = requires(const K& k, const MorOf<K>& f) {
  { k.coslice_closed_form_dual_closure(f, f) } -> std::same_as<std::optional<NormalDualClosure<typename K::Object>>>;
};

// Pullbacks and all colimits are formed in the base; 1_C is terminal and
// 0 → C initial.
template <FiniteCategory K>
class SliceCategory {
 public:
  using BaseObj = typename K::Object;
  using Object = CommaObject<BaseObj>;
  using Mor = Arrow<Object>;

  SliceCategory(const K& base, BaseObj c, ClosurePolicy policy = ClosurePolicy::cross_check)
      : base_(base), c_(std::move(c)), policy_(policy) {}

  const K& base() const { return base_; }
  const BaseObj& apex() const { return c_; }
  std::string name() const { return base_.name() + "/" + render_carrier(c_); }

  Object object(const MorOf<K>& p) const {
    if (!(p.cod == c_)) throw ValidationError(name() + ": structure map must end at the base object");
    return {Side::over, p};
  }
  Mor lift(const MorOf<K>& f, const Object& dom, const Object& cod) const {
    Mor m{dom, cod, f.map};
    if (!is_morphism(m)) throw ValidationError(name() + ": map does not commute over the base object");
    return m;
  }

  bool is_morphism(const Mor& f) const {
    if (f.dom.side != Side::over || f.cod.side != Side::over) return false;
    auto u = underlying(f);
    return base_.is_morphism(u) && compose(f.cod.structure, u) == f.dom.structure;
  }

  Object terminal() const { return {Side::over, identity(c_)}; }
  Object initial() const { return {Side::over, base_.from_initial(c_)}; }
  Mor to_terminal(const Object& o) const { return {o, terminal(), o.structure.map}; }
  Mor from_initial(const Object& o) const {
    auto z = base_.from_initial(o.carrier());
    return {initial(), o, z.map};
  }

  PullbackCone<Object> pullback(const Mor& f, const Mor& g) const {
    auto pb = base_.pullback(underlying(f), underlying(g));
    Object apex{Side::over, compose(f.dom.structure, pb.pr1)};
    return {apex, {apex, f.dom, pb.pr1.map}, {apex, g.dom, pb.pr2.map}};
  }
  PushoutCocone<Object> pushout(const Mor& f, const Mor& g) const {
    auto po = base_.pushout(underlying(f), underlying(g));
    Object apex{Side::over, base_.copair(po, f.cod.structure, g.cod.structure)};
    return {apex, {f.cod, apex, po.in1.map}, {g.cod, apex, po.in2.map}};
  }
  Mor equalizer(const Mor& f, const Mor& g) const {
    auto e = base_.equalizer(underlying(f), underlying(g));
    Object d{Side::over, compose(f.dom.structure, e)};
    return {d, f.dom, e.map};
  }
  Mor coequalizer(const Mor& f, const Mor& g) const {
    auto q = base_.coequalizer(underlying(f), underlying(g));
    auto s = descend_along(base_, q, f.cod.structure);
    if (!s) throw NoDiagonal(name() + ": structure does not descend along the coequalizer");
    return {f.cod, Object{Side::over, *s}, q.map};
  }
  Mor copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const {
    PushoutCocone<BaseObj> b{po.apex.carrier(), underlying(po.in1), underlying(po.in2)};
    auto t = base_.copair(b, underlying(g), underlying(h));
    return {po.apex, g.cod, t.map};
  }
  std::vector<Mor> hom_set(const Object& a, const Object& b, std::size_t bound) const {
    std::vector<Mor> out;
    for (auto& u : base_.hom_set(a.carrier(), b.carrier(), bound))
      if (compose(b.structure, u) == a.structure) out.push_back({a, b, std::move(u.map)});
    return out;
  }
  Mor subobject(const Object& o, const Subset& s) const {
    auto m = base_.subobject(o.carrier(), s);
    return {Object{Side::over, compose(o.structure, m)}, o, m.map};
  }

  // The base instance's slice closed form, reinterpreted over C.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const
    requires HasSliceClosureHook<K>
  {
    auto nc = base_.slice_closed_form_closure(underlying(f), f.cod.structure);
    if (!nc) return std::nullopt;
    Object n{Side::over, compose(f.cod.structure, nc->nu)};
    return NormalClosure<Object>{n, {n, f.cod, nc->nu.map}, {f.dom, n, nc->hat.map}};
  }

  // pi_{f/C} ≅ pi_f.
  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const {
    auto dc = normal_dual_closure(base_, underlying(f), policy_);
    Object p{Side::over, compose(f.cod.structure, dc.check)};
    return NormalDualClosure<Object>{p, {f.dom, p, dc.pi.map}, {p, f.cod, dc.check.map}};
  }

 private:
  const K& base_;
  BaseObj c_;
  ClosurePolicy policy_;
};

// Limits of connected diagrams and all colimits are formed in the base;
// C → 1 is terminal and 1_C initial.
template <FiniteCategory K>
class CosliceCategory {
 public:
  using BaseObj = typename K::Object;
  using Object = CommaObject<BaseObj>;
  using Mor = Arrow<Object>;

  CosliceCategory(const K& base, BaseObj c, ClosurePolicy policy = ClosurePolicy::cross_check)
      : base_(base), c_(std::move(c)), policy_(policy) {}

  const K& base() const { return base_; }
  const BaseObj& apex() const { return c_; }
  std::string name() const { return render_carrier(c_) + "/" + base_.name(); }

  Object object(const MorOf<K>& j) const {
    if (!(j.dom == c_)) throw ValidationError(name() + ": structure map must start at the base object");
    return {Side::under, j};
  }
  Mor lift(const MorOf<K>& f, const Object& dom, const Object& cod) const {
    Mor m{dom, cod, f.map};
    if (!is_morphism(m)) throw ValidationError(name() + ": map does not commute under the base object");
    return m;
  }

  bool is_morphism(const Mor& f) const {
    if (f.dom.side != Side::under || f.cod.side != Side::under) return false;
    auto u = underlying(f);
    return base_.is_morphism(u) && compose(u, f.dom.structure) == f.cod.structure;
  }

  Object terminal() const { return {Side::under, base_.to_terminal(c_)}; }
  Object initial() const { return {Side::under, identity(c_)}; }
  Mor to_terminal(const Object& o) const {
    auto t = base_.to_terminal(o.carrier());
    return {o, terminal(), t.map};
  }
  Mor from_initial(const Object& o) const { return {initial(), o, o.structure.map}; }

  PullbackCone<Object> pullback(const Mor& f, const Mor& g) const {
    auto pb = base_.pullback(underlying(f), underlying(g));
    Object apex{Side::under, pair_into(base_, pb, f.dom.structure, g.dom.structure)};
    return {apex, {apex, f.dom, pb.pr1.map}, {apex, g.dom, pb.pr2.map}};
  }
  PushoutCocone<Object> pushout(const Mor& f, const Mor& g) const {
    auto po = base_.pushout(underlying(f), underlying(g));
    Object apex{Side::under, compose(po.in1, f.cod.structure)};
    return {apex, {f.cod, apex, po.in1.map}, {g.cod, apex, po.in2.map}};
  }
  Mor equalizer(const Mor& f, const Mor& g) const {
    auto e = base_.equalizer(underlying(f), underlying(g));
    auto s = lift_through(base_, e, f.dom.structure);
    if (!s) throw NoDiagonal(name() + ": structure does not lift through the equalizer");
    return {Object{Side::under, *s}, f.dom, e.map};
  }
  Mor coequalizer(const Mor& f, const Mor& g) const {
    auto q = base_.coequalizer(underlying(f), underlying(g));
    return {f.cod, Object{Side::under, compose(q, f.cod.structure)}, q.map};
  }
  Mor copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const {
    PushoutCocone<BaseObj> b{po.apex.carrier(), underlying(po.in1), underlying(po.in2)};
    auto t = base_.copair(b, underlying(g), underlying(h));
    return {po.apex, g.cod, t.map};
  }
  std::vector<Mor> hom_set(const Object& a, const Object& b, std::size_t bound) const {
    std::vector<Mor> out;
    for (auto& u : base_.hom_set(a.carrier(), b.carrier(), bound))
      if (compose(u, a.structure) == b.structure) out.push_back({a, b, std::move(u.map)});
    return out;
  }
  // s must contain the image of the structure map.
  Mor subobject(const Object& o, const Subset& s) const {
    auto m = base_.subobject(o.carrier(), s);
    auto j = lift_through(base_, m, o.structure);
    if (!j) throw ValidationError(name() + ": subobject misses the image of the structure map");
    return {Object{Side::under, *j}, o, m.map};
  }

  // nu_{C/f} ≅ nu_f.
  std::optional<NormalClosure<Object>> closed_form_closure(const Mor& f) const {
    auto nc = normal_closure(base_, underlying(f), policy_);
    Object n{Side::under, compose(nc.hat, f.dom.structure)};
    return NormalClosure<Object>{n, {n, f.cod, nc.nu.map}, {f.dom, n, nc.hat.map}};
  }

  std::optional<NormalDualClosure<Object>> closed_form_dual_closure(const Mor& f) const
    requires HasCosliceDualClosureHook<K>
  {
    auto dc = base_.coslice_closed_form_dual_closure(f.dom.structure, underlying(f));
    if (!dc) return std::nullopt;
    Object p{Side::under, compose(dc->pi, f.dom.structure)};
    return NormalDualClosure<Object>{p, {f.dom, p, dc->pi.map}, {p, f.cod, dc->check.map}};
  }

 private:
  const K& base_;
  BaseObj c_;
  ClosurePolicy policy_;
};

template <FiniteCategory K>
NormalClosure<CommaObject<typename K::Object>> slice_normal_closure(const SliceCategory<K>& ks,
                                                                    const Arrow<CommaObject<typename K::Object>>& f,
                                                                    ClosurePolicy policy = ClosurePolicy::cross_check) {
  return normal_closure(ks, f, policy);
}

template <FiniteCategory K>
NormalDualClosure<CommaObject<typename K::Object>> slice_dual_closure(
    const SliceCategory<K>& ks, const Arrow<CommaObject<typename K::Object>>& f,
    ClosurePolicy policy = ClosurePolicy::cross_check) {
  return normal_dual_closure(ks, f, policy);
}

// tau : N_{f/C} → N_f with nu_f∘tau = nu_{f/C}.
template <FiniteCategory K>
MorOf<K> tau_comparison(const SliceCategory<K>& ks, const Arrow<CommaObject<typename K::Object>>& f,
                        ClosurePolicy policy = ClosurePolicy::cross_check) {
  auto over = normal_closure(ks, f, policy);
  auto plain = normal_closure(ks.base(), underlying(f), policy);
  auto tau = lift_through(ks.base(), plain.nu, underlying(over.nu));
  if (!tau) throw NoDiagonal("tau: N_{f/C} is not contained in N_f for " + render(underlying(f)));
  return *tau;
}

// sigma : P_f → P_{C/f} with sigma∘pi_f = pi_{C/f}.
template <FiniteCategory K>
MorOf<K> sigma_comparison(const CosliceCategory<K>& kc, const Arrow<CommaObject<typename K::Object>>& f,
                          ClosurePolicy policy = ClosurePolicy::cross_check) {
  auto under = normal_dual_closure(kc, f, policy);
  auto plain = normal_dual_closure(kc.base(), underlying(f), policy);
  auto sigma = descend_along(kc.base(), plain.pi, underlying(under.pi));
  if (!sigma) throw NoDiagonal("sigma: pi_{C/f} does not factor through pi_f for " + render(underlying(f)));
  return *sigma;
}

// Checks the comparison diagram between decompositions over C and in the
// base: P_f ≅ P_{f/C}, nu_f∘tau = nu_{f/C}, tau∘kappa_{f/C} = kappa_f up to
// that iso. Returns the first failing edge.
template <FiniteCategory K>
std::optional<std::string> slice_comparison_diagram(const SliceCategory<K>& ks,
                                                    const Arrow<CommaObject<typename K::Object>>& f,
                                                    ClosurePolicy policy = ClosurePolicy::cross_check) {
  const K& k = ks.base();
  auto u = underlying(f);
  auto d = normal_decomposition(k, u, policy);
  auto ds = normal_decomposition(ks, f, policy);
  auto iso = descend_along(k, d.pi, underlying(ds.pi));
  if (!iso || !is_iso(k, *iso)) return "P-iso";
  auto tau = lift_through(k, d.nu, underlying(ds.nu));
  if (!tau) return "tau";
  if (!(compose(d.nu, *tau) == underlying(ds.nu))) return "nu-tau";
  if (!(compose(*tau, underlying(ds.kappa), *iso) == d.kappa)) return "kappa-tau";
  if (!(compose(f.cod.structure, underlying(ds.nu)) == ds.N.structure)) return "over-C";
  return std::nullopt;
}

// Dual diagram in C/K: sigma∘pi_f = pi_{C/f}, N_{C/f} ≅ N_f and
// kappa_f = iso∘kappa_{C/f}∘sigma.
template <FiniteCategory K>
std::optional<std::string> coslice_comparison_diagram(const CosliceCategory<K>& kc,
                                                      const Arrow<CommaObject<typename K::Object>>& f,
                                                      ClosurePolicy policy = ClosurePolicy::cross_check) {
  const K& k = kc.base();
  auto u = underlying(f);
  auto d = normal_decomposition(k, u, policy);
  auto dc = normal_decomposition(kc, f, policy);
  auto sigma = descend_along(k, d.pi, underlying(dc.pi));
  if (!sigma) return "sigma";
  auto iso = lift_through(k, d.nu, underlying(dc.nu));
  if (!iso || !is_iso(k, *iso)) return "N-iso";
  if (!(compose(*iso, underlying(dc.kappa), *sigma) == d.kappa)) return "kappa-sigma";
  return std::nullopt;
}

// Diagnostic for the sufficient condition of discreteness over C: f regular
// mono and the upper (B, C, B+_A B, B+_A C) or lower (B+_A B, B+_A C, B, C)
// rectangle a pullback. nullopt when the base pushouts are not representable.
struct RectangleDiagnostic {
  bool upper = false;
  bool lower = false;
};

template <FiniteCategory K>
std::optional<RectangleDiagnostic> slice_rectangle_diagnostic(const K& k, const MorOf<K>& f, const MorOf<K>& p) {
  try {
    auto cp = k.pushout(f, f);                   // f_1, f_2 : B → B+_A B
    auto bc = k.pushout(f, compose(p, f));       // B → B+_A C ← C : j_f
    auto one_p = k.copair(cp, bc.in1, compose(bc.in2, p));
    auto r = k.copair(bc, p, identity(p.cod));
    auto nabla = k.copair(cp, identity(f.cod), identity(f.cod));
    auto is_pb = [&](const MorOf<K>& a, const MorOf<K>& b, const MorOf<K>& top, const MorOf<K>& left) {
      auto pb = k.pullback(a, b);
      auto t = pair_into(k, pb, left, top);
      return is_iso(k, t);
    };
    RectangleDiagnostic d;
    // Upper square: B --p--> C, B --f_2--> B+_A B, C --j_f--> B+_A C,
    // B+_A B --1+p--> B+_A C.
    d.upper = is_pb(one_p, bc.in2, p, cp.in2);
    // Lower square: B+_A B --1+p--> B+_A C, nabla down to B, r down to C,
    // B --p--> C.
    d.lower = is_pb(p, r, one_p, nabla);
    return d;
  } catch (const PushoutNotRepresentable&) {
    return std::nullopt;
  }
}

// Every square  A --q--> C, A+A' --q+1--> C+A'  with coproduct injections
// down is a pullback. Coproducts are pushouts over the initial object.
template <FiniteCategory K>
bool is_pre_extensive_probe(const K& k, const std::vector<std::pair<MorOf<K>, typename K::Object>>& samples) {
  for (const auto& [q, a2] : samples) {
    auto left = k.pushout(k.from_initial(q.dom), k.from_initial(a2));
    auto right = k.pushout(k.from_initial(q.cod), k.from_initial(a2));
    auto q_plus = k.copair(left, compose(right.in1, q), right.in2);
    auto pb = k.pullback(right.in1, q_plus);
    auto t = pair_into(k, pb, q, left.in1);
    if (!is_iso(k, t)) return false;
  }
  return true;
}

// Dual closure in C/FinSet: the fibres meeting f(j(C)) collapse, the rest of A
// stays as it is.
inline NormalDualClosure<SetObj> coslice_set_dual_closure(const Arrow<SetObj>& j, const Arrow<SetObj>& f) {
  return *FinSetCategory{}.coslice_closed_form_dual_closure(j, f);
}

}  // namespace normcat
