#include "normcat/top1.hpp"

#include <set>

namespace normcat {

namespace {

bool all_singletons_closed(const std::vector<Subset>& point_cl) {
  for (const auto& c : point_cl)
    if (c.count() != 1) return false;
  return true;
}

Subset preimage(const ElemMap& f, std::size_t dom, const Subset& z) {
  Subset s(dom);
  for (std::size_t x = 0; x < dom; ++x)
    if (z.test(f[x])) s.set(x);
  return s;
}

Subset image_in(const ElemMap& f, std::size_t cod, const Subset& s) {
  Subset z(cod);
  for (auto x = s.find_first(); x != Subset::npos; x = s.find_next(x)) z.set(f[x]);
  return z;
}

struct Leg {
  Space space;
  ElemMap map;
};

// Finest closure structure on n points making every leg continuous: Z is
// closed iff each leg's preimage of Z is closed.
Space final_structure(std::vector<std::string> labels, const std::vector<Leg>& legs) {
  const std::size_t n = labels.size();
  std::vector<Subset> point_cl;
  for (std::size_t z = 0; z < n; ++z) {
    Subset s(n);
    s.set(z);
    for (;;) {
      Subset t = s;
      for (const auto& leg : legs)
        t |= image_in(leg.map, n, closure_of(leg.space, preimage(leg.map, leg.space.size(), s)));
      if (t == s) break;
      s = std::move(t);
    }
    point_cl.push_back(std::move(s));
  }
  bool t1 = all_singletons_closed(point_cl);
  return make_closure_space(std::move(labels), std::move(point_cl), t1);
}

Subset fibre_image(const Arrow<Space>& f, const ElemMap& q, Elem a) {
  Subset e(f.cod.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (q[x] == q[a]) e.set(f.map[x]);
  return e;
}

}  // namespace

Space make_closure_space(std::vector<std::string> labels, std::vector<Subset> point_cl, bool t1) {
  const std::size_t n = labels.size();
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw ValidationError("closure space: repeated label '" + l + "'");
  if (point_cl.size() != n) throw ValidationError("closure space: one point closure per point required");
  for (std::size_t x = 0; x < n; ++x) {
    if (point_cl[x].size() != n) throw ValidationError("closure space: closure of " + labels[x] + " has wrong width");
    if (!point_cl[x].test(x)) throw ValidationError("closure space: " + labels[x] + " not in its own closure");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = point_cl[x].find_first(); y != Subset::npos; y = point_cl[x].find_next(y))
      if (!point_cl[y].is_subset_of(point_cl[x]))
        throw ValidationError("closure space: closure not idempotent at " + labels[x]);
  if (t1 && !all_singletons_closed(point_cl))
    throw ValidationError("closure space: t1 flag set but some singleton is not closed");
  return Space(ClosureData{std::move(labels), std::move(point_cl), t1});
}

Space make_closure_space_from_table(std::vector<std::string> labels, const std::vector<Subset>& table, bool t1) {
  const std::size_t n = labels.size();
  if (n > 16) throw ValidationError("closure table: carrier too large for a full table");
  const std::size_t m = std::size_t{1} << n;
  if (table.size() != m) throw ValidationError("closure table: needs one entry per subset");
  auto as_subset = [n](std::size_t bits) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (bits >> i & 1) s.set(i);
    return s;
  };
  auto as_bits = [](const Subset& s) {
    std::size_t b = 0;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) b |= std::size_t{1} << i;
    return b;
  };
  for (const auto& c : table)
    if (c.size() != n) throw ValidationError("closure table: entry of wrong width");
  if (table[0].any()) throw ValidationError("closure table: cl(∅) ≠ ∅");
  for (std::size_t s = 0; s < m; ++s) {
    Subset S = as_subset(s);
    if (!S.is_subset_of(table[s])) throw ValidationError("closure table: not extensive at " + std::to_string(s));
    if (table[as_bits(table[s])] != table[s])
      throw ValidationError("closure table: not idempotent at " + std::to_string(s));
    for (std::size_t t = 0; t < m; ++t)
      if (table[s | t] != (table[s] | table[t]))
        throw ValidationError("closure table: not additive at " + std::to_string(s) + "," + std::to_string(t));
  }
  std::vector<Subset> point_cl;
  for (std::size_t x = 0; x < n; ++x) point_cl.push_back(table[std::size_t{1} << x]);
  return make_closure_space(std::move(labels), std::move(point_cl), t1);
}

Space discrete_closure_space(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<Subset> cl(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x) cl[x].set(x);
  return make_closure_space(std::move(labels), std::move(cl), true);
}

// In an Alexandrov space x ∈ cl{y} iff y ∈ U_x.
Space from_fintop(const TopObj& t) {
  const std::size_t n = t.size();
  std::vector<Subset> cl(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = t->nbhd[x].find_first(); y != Subset::npos; y = t->nbhd[x].find_next(y)) cl[y].set(x);
  bool t1 = all_singletons_closed(cl);
  return make_closure_space(t.labels(), std::move(cl), t1);
}

TopObj to_fintop(const Space& s) {
  const std::size_t n = s.size();
  std::vector<Subset> nbhd(n, Subset(n));
  for (std::size_t y = 0; y < n; ++y)
    for (auto x = s->point_cl[y].find_first(); x != Subset::npos; x = s->point_cl[y].find_next(x)) nbhd[x].set(y);
  return make_space_from_nbhds(s.labels(), std::move(nbhd));
}

Subset closure_of(const Space& s, const Subset& x) {
  Subset out(s.size());
  for (auto i = x.find_first(); i != Subset::npos; i = x.find_next(i)) out |= s->point_cl[i];
  return out;
}

bool is_closed_in(const Space& s, const Subset& x) { return closure_of(s, x) == x; }

bool is_continuous(const Space& a, const Space& b, const ElemMap& f) {
  if (f.size() != a.size()) return false;
  for (Elem y : f)
    if (y >= b.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!image_in(f, b.size(), a->point_cl[x]).is_subset_of(b->point_cl[f[x]])) return false;
  return true;
}

bool is_embedding(const Arrow<Space>& f) {
  if (!is_injective(f)) return false;
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (preimage(f.map, f.dom.size(), f.cod->point_cl[f.map[x]]) != f.dom->point_cl[x]) return false;
  return true;
}

Arrow<Space> subspace_inclusion(const Space& b, const Subset& s) {
  auto keep = members(s);
  std::vector<Elem> index(b.size(), ~Elem{0});
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Elem>(i);
  std::vector<std::string> labels;
  std::vector<Subset> cl;
  for (Elem x : keep) {
    labels.push_back(b.label(x));
    Subset c(keep.size());
    for (Elem y : keep)
      if (b->point_cl[x].test(y)) c.set(index[y]);
    cl.push_back(std::move(c));
  }
  bool t1 = all_singletons_closed(cl);
  auto sub = make_closure_space(std::move(labels), std::move(cl), t1);
  return {sub, b, keep};
}

Arrow<Space> quotient_by(const Space& b, const Partition& p) {
  auto q = final_structure(quotient_labels(b.labels(), p), {{b, p.cls}});
  return {b, q, p.cls};
}

Top1Closure top1_normal_closure(const Arrow<Space>& f) {
  const Space& B = f.cod;
  Subset n = closure_of(B, image(f));
  auto nu = subspace_inclusion(B, n);
  auto hat = lift_map(nu, f);
  NormalClosure<Space> nc{nu.dom, nu, {f.dom, nu.dom, *hat}};
  Space one = discrete_closure_space({"*"});
  if (f.dom.size() == 0) {
    auto labels = sum_labels(B.labels(), one.labels());
    ElemMap in1 = identity_map(B.size());
    ElemMap in2{static_cast<Elem>(B.size())};
    auto P = final_structure(labels, {{B, in1}, {one, in2}});
    return {nc, {P, {B, P, in1}, {one, P, in2}}};
  }
  UnionFind uf(B.size());
  auto ns = members(n);
  for (Elem y : ns) uf.unite(ns.front(), y);
  auto q = quotient_by(B, uf.partition());
  return {nc, {q.cod, q, {one, q.cod, ElemMap{q.map[f.map[0]]}}}};
}

NormalClosure<Space> top1_slice_normal_closure(const Arrow<Space>& f, const Arrow<Space>& p) {
  if (!(p.dom == f.cod)) throw ValidationError("top1 slice closure: p must start at the codomain of f");
  const ElemMap q = compose_maps(p.map, f.map);
  Subset n(f.cod.size());
  for (Elem a = 0; a < f.dom.size(); ++a) n |= closure_of(f.cod, fibre_image(f, q, a));
  auto nu = subspace_inclusion(f.cod, n);
  auto hat = lift_map(nu, f);
  return {nu.dom, nu, {f.dom, nu.dom, *hat}};
}

bool top1_slice_normal_mono_test(const Arrow<Space>& f, const Arrow<Space>& p) {
  if (!is_embedding(f)) return false;
  const ElemMap q = compose_maps(p.map, f.map);
  for (Elem a = 0; a < f.dom.size(); ++a)
    if (!is_closed_in(f.cod, fibre_image(f, q, a))) return false;
  return true;
}

bool top1_slice_comparison_test(const Arrow<Space>& f, const Arrow<Space>& p) {
  const ElemMap q = compose_maps(p.map, f.map);
  Subset qa(p.cod.size());
  for (Elem c : q) qa.set(c);
  for (std::size_t b = 0; b < f.cod.size(); ++b)
    if (!qa.test(p.map[b])) return false;
  for (Elem a = 0; a < f.dom.size(); ++a) {
    Subset fibre(f.cod.size());
    for (std::size_t b = 0; b < f.cod.size(); ++b)
      if (p.map[b] == q[a]) fibre.set(b);
    if (!fibre.is_subset_of(closure_of(f.cod, fibre_image(f, q, a)))) return false;
  }
  return true;
}

NormalDualClosure<Space> top1_coslice_dual_closure(const Arrow<Space>& j, const Arrow<Space>& f) {
  if (!(j.cod == f.dom)) throw ValidationError("top1 coslice dual closure: j must end at the domain of f");
  Subset hit(f.cod.size());
  for (Elem c : j.map) hit.set(f.map[c]);
  UnionFind uf(f.dom.size());
  std::vector<Elem> first(f.cod.size(), ~Elem{0});
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    Elem y = f.map[x];
    if (!hit.test(y)) continue;
    if (first[y] == ~Elem{0})
      first[y] = static_cast<Elem>(x);
    else
      uf.unite(first[y], x);
  }
  auto pi = quotient_by(f.dom, uf.partition());
  // A quotient of a finite T1 space is discrete, hence T1 again.
  if (f.dom->t1 && !pi.cod->t1) throw Error("top1 coslice dual closure: quotient of a T1 space is not T1");
  auto check = descend_map(pi, f);
  return {pi.cod, pi, {pi.cod, f.cod, *check}};
}

SlicePushout top1_slice_pushout(const Arrow<Space>& incl, const Arrow<Space>& p) {
  if (!is_injective(incl)) throw ValidationError("top1 slice pushout: needs a subspace inclusion");
  const Space& B = incl.cod;
  const Space& C = p.cod;
  Subset in_a = image(incl);
  // D and, for each b in D, the point pa it is sent to.
  Subset D(B.size());
  std::vector<Elem> over(B.size(), ~Elem{0});
  for (Elem a = 0; a < incl.dom.size(); ++a) {
    Elem pa = p.map[incl.map[a]];
    Subset e(B.size());
    for (auto b = in_a.find_first(); b != Subset::npos; b = in_a.find_next(b))
      if (p.map[b] == pa) e.set(b);
    Subset cl = closure_of(B, e);
    for (auto b = cl.find_first(); b != Subset::npos; b = cl.find_next(b))
      if (over[b] == ~Elem{0}) over[b] = pa;
    D |= cl;
  }
  std::vector<std::string> rest;
  std::vector<Elem> index(B.size(), ~Elem{0});
  for (std::size_t b = 0; b < B.size(); ++b)
    if (!D.test(b)) {
      index[b] = static_cast<Elem>(rest.size());
      rest.push_back(B.label(b));
    }
  const Elem offset = static_cast<Elem>(rest.size());
  ElemMap i(B.size()), j(C.size());
  for (std::size_t b = 0; b < B.size(); ++b) i[b] = D.test(b) ? offset + over[b] : index[b];
  for (std::size_t c = 0; c < C.size(); ++c) j[c] = offset + static_cast<Elem>(c);
  auto P = final_structure(sum_labels(rest, C.labels()), {{B, i}, {C, j}});
  return {D, {P, {B, P, i}, {C, P, j}}};
}

bool slice_pushout_fibres_hold(const SlicePushout& po, const Arrow<Space>& incl, const Arrow<Space>& p) {
  const Space& B = incl.cod;
  const auto& i = po.cocone.in1.map;
  const Elem offset = static_cast<Elem>(po.cocone.apex.size() - p.cod.size());
  Subset pa(p.cod.size());
  for (Elem a : incl.map) pa.set(p.map[a]);
  for (Elem z = 0; z < po.cocone.apex.size(); ++z) {
    Subset fibre = preimage(i, B.size(), [&] {
      Subset s(po.cocone.apex.size());
      s.set(z);
      return s;
    }());
    Subset expected(B.size());
    if (z < offset) {
      for (std::size_t b = 0; b < B.size(); ++b)
        if (!po.D.test(b) && i[b] == z) expected.set(b);
      if (expected.count() != 1) return false;
    } else if (pa.test(z - offset)) {
      Subset e(B.size());
      for (Elem a : incl.map)
        if (p.map[a] == z - offset) e.set(a);
      expected = closure_of(B, e);
    }
    if (fibre != expected) return false;
  }
  return true;
}

}  // namespace normcat
