#pragma once

#include <map>

#include "normcat/algebra.hpp"
#include "normcat/closure.hpp"
#include "normcat/groups.hpp"

// Spans X ← A → Y and cospans X → B ← Y over a fixed pair (X, Y), with the
// pushout / pullback adjunction between them.

namespace normcat {

template <class Object>
struct Span {
  Arrow<Object> u;  // A → X
  Arrow<Object> v;  // A → Y
  const Object& apex() const { return u.dom; }
};

template <class Object>
struct Cospan {
  Arrow<Object> p;  // X → B
  Arrow<Object> q;  // Y → B
  const Object& apex() const { return p.cod; }
};

template <FiniteCategory K>
Cospan<typename K::Object> po_of_span(const K& k, const Span<typename K::Object>& s) {
  if (!(s.u.dom == s.v.dom)) throw ValidationError("span legs must share their domain");
  auto po = k.pushout(s.u, s.v);
  return {po.in1, po.in2};
}

template <FiniteCategory K>
Span<typename K::Object> pb_of_cospan(const K& k, const Cospan<typename K::Object>& c) {
  if (!(c.p.cod == c.q.cod)) throw ValidationError("cospan legs must share their codomain");
  auto pb = k.pullback(c.p, c.q);
  return {pb.pr1, pb.pr2};
}

// eta : A → Pb(Po(s)).
template <FiniteCategory K>
MorOf<K> unit_eta(const K& k, const Span<typename K::Object>& s) {
  auto c = po_of_span(k, s);
  auto pb = k.pullback(c.p, c.q);
  return pair_into(k, pb, s.u, s.v);
}

// eps : Po(Pb(c)) → B.
template <FiniteCategory K>
MorOf<K> counit_eps(const K& k, const Cospan<typename K::Object>& c) {
  auto s = pb_of_cospan(k, c);
  auto po = k.pushout(s.u, s.v);
  return k.copair(po, c.p, c.q);
}

template <FiniteCategory K>
bool is_doolittle_span(const K& k, const Span<typename K::Object>& s) {
  return is_iso(k, unit_eta(k, s));
}

template <FiniteCategory K>
bool is_doolittle_cospan(const K& k, const Cospan<typename K::Object>& c) {
  return is_iso(k, counit_eps(k, c));
}

// Some iso between the apexes commuting with both legs. When the target legs
// are jointly injective the connecting map is forced; otherwise search.
template <FiniteCategory K>
bool spans_isomorphic(const K& k, const Span<typename K::Object>& s, const Span<typename K::Object>& t,
                      std::size_t bound = kDefaultHomBound) {
  if (s.apex().size() != t.apex().size()) return false;
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (std::size_t n = 0; n < t.apex().size(); ++n) index[{t.u.map[n], t.v.map[n]}] = static_cast<Elem>(n);
  if (index.size() == t.apex().size()) {
    ElemMap phi(s.apex().size());
    for (std::size_t x = 0; x < phi.size(); ++x) {
      auto it = index.find({s.u.map[x], s.v.map[x]});
      if (it == index.end()) return false;
      phi[x] = it->second;
    }
    MorOf<K> m{s.apex(), t.apex(), std::move(phi)};
    return k.is_morphism(m) && is_iso(k, m);
  }
  for (const auto& phi : k.hom_set(s.apex(), t.apex(), bound))
    if (compose(t.u, phi) == s.u && compose(t.v, phi) == s.v && is_iso(k, phi)) return true;
  return false;
}

// Dually, jointly surjective source legs force the map.
template <FiniteCategory K>
bool cospans_isomorphic(const K& k, const Cospan<typename K::Object>& c, const Cospan<typename K::Object>& d,
                        std::size_t bound = kDefaultHomBound) {
  if (c.apex().size() != d.apex().size()) return false;
  constexpr Elem none = ~Elem{0};
  ElemMap phi(c.apex().size(), none);
  auto assign = [&](const ElemMap& from, const ElemMap& to) {
    for (std::size_t x = 0; x < from.size(); ++x) {
      if (phi[from[x]] == none) phi[from[x]] = to[x];
      else if (phi[from[x]] != to[x]) return false;
    }
    return true;
  };
  if (!assign(c.p.map, d.p.map) || !assign(c.q.map, d.q.map)) return false;
  if (std::find(phi.begin(), phi.end(), none) == phi.end()) {
    MorOf<K> m{c.apex(), d.apex(), std::move(phi)};
    return k.is_morphism(m) && is_iso(k, m);
  }
  for (const auto& f : k.hom_set(c.apex(), d.apex(), bound))
    if (compose(f, c.p) == d.p && compose(f, c.q) == d.q && is_iso(k, f)) return true;
  return false;
}

// Po∘Pb∘Po ≅ Po. The comparison is the copairing out of the outer pushout.
template <FiniteCategory K>
bool po_idempotent_on(const K& k, const Span<typename K::Object>& s) {
  auto c = po_of_span(k, s);
  auto inner = pb_of_cospan(k, c);
  auto po = k.pushout(inner.u, inner.v);
  return is_iso(k, k.copair(po, c.p, c.q));
}

// Pb∘Po∘Pb ≅ Pb.
template <FiniteCategory K>
bool pb_idempotent_on(const K& k, const Cospan<typename K::Object>& c) {
  auto s = pb_of_cospan(k, c);
  return spans_isomorphic(k, pb_of_cospan(k, po_of_span(k, s)), s);
}

// For the span (f, A → 1), Pb(Po) is N_f and eta is f-hat.
template <FiniteCategory K>
bool eta_matches_normal_closure(const K& k, const MorOf<K>& f, ClosurePolicy policy = ClosurePolicy::cross_check) {
  Span<typename K::Object> s{f, k.to_terminal(f.dom)};
  auto c = po_of_span(k, s);
  auto pb = k.pullback(c.p, c.q);
  auto eta = pair_into(k, pb, s.u, s.v);
  auto nc = normal_closure(k, f, policy);
  if (!same_subobject(pb.pr1, nc.nu)) return false;
  auto t = lift_through(k, nc.nu, pb.pr1);
  return t && compose(*t, eta) == nc.hat;
}

// Dually, for the cospan (f, 1 → B) (pointed or additive settings), eps is
// f-check.
template <FiniteCategory K>
bool eps_matches_dual_closure(const K& k, const MorOf<K>& f, ClosurePolicy policy = ClosurePolicy::cross_check) {
  Cospan<typename K::Object> c{f, k.from_initial(f.cod)};
  auto s = pb_of_cospan(k, c);
  auto po = k.pushout(s.u, s.v);
  auto eps = k.copair(po, c.p, c.q);
  auto dc = normal_dual_closure(k, f, policy);
  if (!same_quotient(po.in1, dc.pi)) return false;
  auto t = descend_along(k, dc.pi, po.in1);
  return t && compose(eps, *t) == dc.check;
}

// Abelian groups: a span is Doolittle iff Ker u ∩ Ker v = 0, a cospan iff
// Im p + Im q = B.
inline bool ab_doolittle_span(const Span<Alg>& s) { return (kernel_set(s.u) & kernel_set(s.v)) == unit_subset(s.apex()); }

inline bool ab_doolittle_cospan(const Cospan<Alg>& c) {
  return set_product(c.apex(), image_set(c.p), image_set(c.q)).all();
}

}  // namespace normcat
