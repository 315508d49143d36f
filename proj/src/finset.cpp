#include "normcat/finset.hpp"

#include <set>

#include "normcat/setops.hpp"

namespace normcat {

namespace {

void check_distinct(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw ValidationError(std::string(what) + ": repeated label '" + l + "'");
}

bool in_range(const ElemMap& m, std::size_t dom, std::size_t cod) {
  if (m.size() != dom) return false;
  for (Elem y : m)
    if (y >= cod) return false;
  return true;
}

std::vector<std::string> labels_of(const std::vector<std::string>& all, const std::vector<Elem>& which) {
  std::vector<std::string> out;
  out.reserve(which.size());
  for (Elem i : which) out.push_back(all[i]);
  return out;
}

std::vector<std::string> pair_labels(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                     const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::vector<std::string> out;
  out.reserve(pairs.size());
  for (auto [x, y] : pairs) out.push_back(pair_label(a[x], b[y]));
  return out;
}

Elem index_of(const std::vector<Elem>& sorted, Elem x) {
  return static_cast<Elem>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

ElemMap first_proj(const std::vector<std::pair<Elem, Elem>>& pairs) {
  ElemMap m;
  for (auto p : pairs) m.push_back(p.first);
  return m;
}

ElemMap second_proj(const std::vector<std::pair<Elem, Elem>>& pairs) {
  ElemMap m;
  for (auto p : pairs) m.push_back(p.second);
  return m;
}

}  // namespace

// ---------------------------------------------------------------- FinSet

SetObj make_set(std::vector<std::string> labels) {
  check_distinct(labels, "set");
  return SetObj(SetData{std::move(labels)});
}

bool FinSetCategory::is_morphism(const Mor& f) const { return in_range(f.map, f.dom.size(), f.cod.size()); }

FinSetCategory::Mor FinSetCategory::morphism(const Object& dom, const Object& cod, ElemMap map) const {
  Mor f{dom, cod, std::move(map)};
  if (!is_morphism(f)) throw ValidationError("FinSet: map is not total into the codomain");
  return f;
}

SetObj FinSetCategory::terminal() const { return make_set({"*"}); }
SetObj FinSetCategory::initial() const { return make_set({}); }

FinSetCategory::Mor FinSetCategory::to_terminal(const Object& o) const {
  return {o, terminal(), ElemMap(o.size(), 0)};
}

FinSetCategory::Mor FinSetCategory::from_initial(const Object& o) const { return {initial(), o, {}}; }

PullbackCone<SetObj> FinSetCategory::pullback(const Mor& f, const Mor& g) const {
  auto pairs = setops::pullback_pairs(f.map, g.map);
  auto apex = make_set(pair_labels(f.dom.labels(), g.dom.labels(), pairs));
  return {apex, {apex, f.dom, first_proj(pairs)}, {apex, g.dom, second_proj(pairs)}};
}

PushoutCocone<SetObj> FinSetCategory::pushout(const Mor& f, const Mor& g) const {
  const std::size_t nx = f.cod.size(), ny = g.cod.size();
  auto p = setops::pushout_partition(f.map, nx, g.map, ny);
  auto apex = make_set(quotient_labels(sum_labels(f.cod.labels(), g.cod.labels()), p));
  return {apex, {f.cod, apex, setops::map_through(p, 0, nx)}, {g.cod, apex, setops::map_through(p, nx, ny)}};
}

FinSetCategory::Mor FinSetCategory::equalizer(const Mor& f, const Mor& g) const {
  auto keep = setops::equalizer_elems(f.map, g.map);
  return {make_set(labels_of(f.dom.labels(), keep)), f.dom, keep};
}

FinSetCategory::Mor FinSetCategory::coequalizer(const Mor& f, const Mor& g) const {
  auto p = setops::coequalizer_partition(f.map, g.map, f.cod.size());
  auto q = make_set(quotient_labels(f.cod.labels(), p));
  return {f.cod, q, p.cls};
}

FinSetCategory::Mor FinSetCategory::copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const {
  return {po.apex, g.cod, setops::copair_map(po.in1.map, po.in2.map, po.apex.size(), g.map, h.map)};
}

std::vector<FinSetCategory::Mor> FinSetCategory::hom_set(const Object& a, const Object& b,
                                                         std::size_t bound) const {
  std::vector<Mor> out;
  setops::for_each_map(a.size(), b.size(), bound, [&](const ElemMap& m) { out.push_back({a, b, m}); });
  return out;
}

FinSetCategory::Mor FinSetCategory::subobject(const Object& o, const Subset& s) const {
  auto keep = members(s);
  return {make_set(labels_of(o.labels(), keep)), o, keep};
}

PushoutCocone<SetObj> FinSetCategory::coproduct(const Object& a, const Object& b) const {
  auto apex = make_set(sum_labels(a.labels(), b.labels()));
  ElemMap in2(b.size());
  for (std::size_t y = 0; y < b.size(); ++y) in2[y] = static_cast<Elem>(a.size() + y);
  return {apex, {a, apex, identity_map(a.size())}, {b, apex, in2}};
}

std::optional<NormalClosure<SetObj>> FinSetCategory::closed_form_closure(const Mor& f) const {
  auto nu = subobject(f.cod, image(f));
  return NormalClosure<SetObj>{nu.dom, nu, {f.dom, nu.dom, *lift_map(nu, f)}};
}

std::optional<NormalDualClosure<SetObj>> FinSetCategory::closed_form_dual_closure(const Mor& f) const {
  return NormalDualClosure<SetObj>{f.dom, identity(f.dom), f};
}

std::optional<NormalClosure<SetObj>> FinSetCategory::slice_closed_form_closure(const Mor& f, const Mor&) const {
  return closed_form_closure(f);
}

std::optional<NormalDualClosure<SetObj>> FinSetCategory::coslice_closed_form_dual_closure(const Mor& j,
                                                                                         const Mor& f) const {
  Subset hit(f.cod.size());
  for (Elem c : j.map) hit.set(f.map[c]);
  UnionFind uf(f.dom.size());
  std::vector<Elem> first_over(f.cod.size(), ~Elem{0});
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    Elem y = f.map[x];
    if (!hit.test(y)) continue;
    if (first_over[y] == ~Elem{0})
      first_over[y] = static_cast<Elem>(x);
    else
      uf.unite(first_over[y], x);
  }
  auto p = uf.partition();
  auto P = make_set(quotient_labels(f.dom.labels(), p));
  Mor pi{f.dom, P, p.cls};
  return NormalDualClosure<SetObj>{P, pi, {P, f.cod, *descend_map(pi, f)}};
}

// ---------------------------------------------------------------- pointed

PointedObj make_pointed(std::vector<std::string> labels, Elem base) {
  check_distinct(labels, "pointed set");
  if (base >= labels.size()) throw ValidationError("pointed set: base point outside the carrier");
  return PointedObj(PointedData{std::move(labels), base});
}

bool PointedSetCategory::is_morphism(const Mor& f) const {
  return in_range(f.map, f.dom.size(), f.cod.size()) && f.map[f.dom->base] == f.cod->base;
}

PointedSetCategory::Mor PointedSetCategory::morphism(const Object& dom, const Object& cod, ElemMap map) const {
  Mor f{dom, cod, std::move(map)};
  if (!in_range(f.map, dom.size(), cod.size())) throw ValidationError("FinSet*: map is not total into the codomain");
  if (!is_morphism(f)) throw ValidationError("FinSet*: base point " + dom.label(dom->base) + " not sent to base point");
  return f;
}

PointedObj PointedSetCategory::terminal() const { return make_pointed({"*"}, 0); }
PointedObj PointedSetCategory::initial() const { return make_pointed({"*"}, 0); }

PointedSetCategory::Mor PointedSetCategory::to_terminal(const Object& o) const {
  return {o, terminal(), ElemMap(o.size(), 0)};
}

PointedSetCategory::Mor PointedSetCategory::from_initial(const Object& o) const {
  return {initial(), o, ElemMap{o->base}};
}

PullbackCone<PointedObj> PointedSetCategory::pullback(const Mor& f, const Mor& g) const {
  auto pairs = setops::pullback_pairs(f.map, g.map);
  Elem base = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i] == std::pair{f.dom->base, g.dom->base}) base = static_cast<Elem>(i);
  auto apex = make_pointed(pair_labels(f.dom.labels(), g.dom.labels(), pairs), base);
  return {apex, {apex, f.dom, first_proj(pairs)}, {apex, g.dom, second_proj(pairs)}};
}

PushoutCocone<PointedObj> PointedSetCategory::pushout(const Mor& f, const Mor& g) const {
  const std::size_t nx = f.cod.size(), ny = g.cod.size();
  auto p = setops::pushout_partition(f.map, nx, g.map, ny);
  auto apex = make_pointed(quotient_labels(sum_labels(f.cod.labels(), g.cod.labels()), p), p.cls[f.cod->base]);
  return {apex, {f.cod, apex, setops::map_through(p, 0, nx)}, {g.cod, apex, setops::map_through(p, nx, ny)}};
}

PointedSetCategory::Mor PointedSetCategory::equalizer(const Mor& f, const Mor& g) const {
  auto keep = setops::equalizer_elems(f.map, g.map);
  return {make_pointed(labels_of(f.dom.labels(), keep), index_of(keep, f.dom->base)), f.dom, keep};
}

PointedSetCategory::Mor PointedSetCategory::coequalizer(const Mor& f, const Mor& g) const {
  auto p = setops::coequalizer_partition(f.map, g.map, f.cod.size());
  auto q = make_pointed(quotient_labels(f.cod.labels(), p), p.cls[f.cod->base]);
  return {f.cod, q, p.cls};
}

PointedSetCategory::Mor PointedSetCategory::copair(const PushoutCocone<Object>& po, const Mor& g,
                                                   const Mor& h) const {
  return {po.apex, g.cod, setops::copair_map(po.in1.map, po.in2.map, po.apex.size(), g.map, h.map)};
}

std::vector<PointedSetCategory::Mor> PointedSetCategory::hom_set(const Object& a, const Object& b,
                                                                 std::size_t bound) const {
  std::vector<Mor> out;
  const Elem base = a->base;
  setops::for_each_map(a.size() - 1, b.size(), bound, [&](const ElemMap& rest) {
    ElemMap m(rest.begin(), rest.end());
    m.insert(m.begin() + base, b->base);
    out.push_back({a, b, std::move(m)});
  });
  return out;
}

PointedSetCategory::Mor PointedSetCategory::subobject(const Object& o, const Subset& s) const {
  if (!s.test(o->base)) throw ValidationError("FinSet*: subobject must contain the base point");
  auto keep = members(s);
  return {make_pointed(labels_of(o.labels(), keep), index_of(keep, o->base)), o, keep};
}

std::optional<NormalClosure<PointedObj>> PointedSetCategory::closed_form_closure(const Mor& f) const {
  auto nu = subobject(f.cod, image(f));
  return NormalClosure<PointedObj>{nu.dom, nu, {f.dom, nu.dom, *lift_map(nu, f)}};
}

std::optional<NormalDualClosure<PointedObj>> PointedSetCategory::closed_form_dual_closure(const Mor& f) const {
  UnionFind uf(f.dom.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (f.map[x] == f.cod->base) uf.unite(f.dom->base, x);
  auto p = uf.partition();
  auto P = make_pointed(quotient_labels(f.dom.labels(), p), p.cls[f.dom->base]);
  Mor pi{f.dom, P, p.cls};
  return NormalDualClosure<PointedObj>{P, pi, {P, f.cod, *descend_map(pi, f)}};
}

// ---------------------------------------------------------------- FinTop

namespace {

std::vector<Subset> nbhds_from_opens(std::size_t n, const std::vector<Subset>& opens) {
  std::vector<Subset> nbhd(n, full_subset(n));
  for (const auto& u : opens)
    for (auto x = u.find_first(); x != Subset::npos; x = u.find_next(x)) nbhd[x] &= u;
  return nbhd;
}

// Subspace on the points listed in `keep` (ascending).
std::vector<Subset> restrict_nbhds(const TopObj& x, const std::vector<Elem>& keep) {
  std::vector<Subset> out;
  for (Elem p : keep) {
    Subset u(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (x->nbhd[p].test(keep[i])) u.set(i);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

TopObj make_space(std::vector<std::string> labels, const std::vector<Subset>& opens) {
  check_distinct(labels, "space");
  const std::size_t n = labels.size();
  std::set<Subset> family;
  for (const auto& u : opens) {
    if (u.size() != n) throw ValidationError("space: open set has the wrong width");
    family.insert(u);
  }
  if (!family.count(Subset(n))) throw ValidationError("space: the empty set is not open");
  if (!family.count(full_subset(n))) throw ValidationError("space: the carrier is not open");
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!family.count(a | b)) throw ValidationError("space: opens not closed under union");
      if (!family.count(a & b)) throw ValidationError("space: opens not closed under intersection");
    }
  }
  return TopObj(TopData{std::move(labels), nbhds_from_opens(n, opens)});
}

TopObj make_space_from_nbhds(std::vector<std::string> labels, std::vector<Subset> nbhd) {
  check_distinct(labels, "space");
  const std::size_t n = labels.size();
  if (nbhd.size() != n) throw ValidationError("space: one neighbourhood per point required");
  for (std::size_t x = 0; x < n; ++x) {
    if (nbhd[x].size() != n || !nbhd[x].test(x))
      throw ValidationError("space: point " + labels[x] + " not in its own neighbourhood");
    for (auto y = nbhd[x].find_first(); y != Subset::npos; y = nbhd[x].find_next(y))
      if (!nbhd[y].is_subset_of(nbhd[x]))
        throw ValidationError("space: neighbourhood of " + labels[x] + " is not open");
  }
  return TopObj(TopData{std::move(labels), std::move(nbhd)});
}

TopObj discrete_space(std::vector<std::string> labels) {
  std::vector<Subset> nbhd;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    Subset u(labels.size());
    u.set(x);
    nbhd.push_back(std::move(u));
  }
  return make_space_from_nbhds(std::move(labels), std::move(nbhd));
}

std::vector<Subset> opens_of(const TopObj& x) {
  std::set<Subset> opens{Subset(x.size())};
  for (const auto& u : x->nbhd) {
    std::vector<Subset> grown;
    for (const auto& s : opens) grown.push_back(s | u);
    opens.insert(grown.begin(), grown.end());
  }
  return {opens.begin(), opens.end()};
}

Subset closure_in(const TopObj& x, const Subset& s) {
  Subset c(x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    if (x->nbhd[p].intersects(s)) c.set(p);
  return c;
}

bool is_open(const TopObj& x, const Subset& s) {
  for (auto p = s.find_first(); p != Subset::npos; p = s.find_next(p))
    if (!x->nbhd[p].is_subset_of(s)) return false;
  return true;
}

bool FinTopCategory::is_morphism(const Mor& f) const {
  if (!in_range(f.map, f.dom.size(), f.cod.size())) return false;
  for (std::size_t x = 0; x < f.dom.size(); ++x) {
    const Subset& target = f.cod->nbhd[f.map[x]];
    const Subset& u = f.dom->nbhd[x];
    for (auto y = u.find_first(); y != Subset::npos; y = u.find_next(y))
      if (!target.test(f.map[y])) return false;
  }
  return true;
}

FinTopCategory::Mor FinTopCategory::morphism(const Object& dom, const Object& cod, ElemMap map) const {
  Mor f{dom, cod, std::move(map)};
  if (!in_range(f.map, dom.size(), cod.size())) throw ValidationError("FinTop: map is not total into the codomain");
  if (!is_morphism(f)) throw ValidationError("FinTop: map is not continuous");
  return f;
}

TopObj FinTopCategory::terminal() const { return discrete_space({"*"}); }
TopObj FinTopCategory::initial() const { return discrete_space({}); }

FinTopCategory::Mor FinTopCategory::to_terminal(const Object& o) const {
  return {o, terminal(), ElemMap(o.size(), 0)};
}

FinTopCategory::Mor FinTopCategory::from_initial(const Object& o) const { return {initial(), o, {}}; }

PullbackCone<TopObj> FinTopCategory::pullback(const Mor& f, const Mor& g) const {
  auto pairs = setops::pullback_pairs(f.map, g.map);
  std::vector<Subset> nbhd;
  for (auto [a, b] : pairs) {
    Subset u(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (f.dom->nbhd[a].test(pairs[i].first) && g.dom->nbhd[b].test(pairs[i].second)) u.set(i);
    nbhd.push_back(std::move(u));
  }
  auto apex = make_space_from_nbhds(pair_labels(f.dom.labels(), g.dom.labels(), pairs), std::move(nbhd));
  return {apex, {apex, f.dom, first_proj(pairs)}, {apex, g.dom, second_proj(pairs)}};
}

TopObj FinTopCategory::quotient_space(const Object& x, const Partition& p, std::vector<std::string> labels) const {
  const std::size_t n = x.size();
  std::vector<Subset> members_of(p.classes(), Subset(n));
  for (std::size_t i = 0; i < n; ++i) members_of[p.cls[i]].set(i);
  std::vector<Subset> nbhd;
  for (std::size_t c = 0; c < p.classes(); ++c) {
    // Least saturated open set containing the class.
    Subset s = members_of[c];
    while (true) {
      Subset t = s;
      for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) t |= x->nbhd[i];
      for (auto i = t.find_first(); i != Subset::npos; i = t.find_next(i)) t |= members_of[p.cls[i]];
      if (t == s) break;
      s = std::move(t);
    }
    Subset u(p.classes());
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) u.set(p.cls[i]);
    nbhd.push_back(std::move(u));
  }
  return make_space_from_nbhds(std::move(labels), std::move(nbhd));
}

PushoutCocone<TopObj> FinTopCategory::pushout(const Mor& f, const Mor& g) const {
  const std::size_t nx = f.cod.size(), ny = g.cod.size();
  auto sum = coproduct(f.cod, g.cod).apex;
  auto p = setops::pushout_partition(f.map, nx, g.map, ny);
  auto apex = quotient_space(sum, p, quotient_labels(sum.labels(), p));
  return {apex, {f.cod, apex, setops::map_through(p, 0, nx)}, {g.cod, apex, setops::map_through(p, nx, ny)}};
}

FinTopCategory::Mor FinTopCategory::equalizer(const Mor& f, const Mor& g) const {
  Subset s(f.dom.size());
  for (Elem x : setops::equalizer_elems(f.map, g.map)) s.set(x);
  return subobject(f.dom, s);
}

FinTopCategory::Mor FinTopCategory::coequalizer(const Mor& f, const Mor& g) const {
  auto p = setops::coequalizer_partition(f.map, g.map, f.cod.size());
  return {f.cod, quotient_space(f.cod, p, quotient_labels(f.cod.labels(), p)), p.cls};
}

FinTopCategory::Mor FinTopCategory::copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const {
  Mor t{po.apex, g.cod, setops::copair_map(po.in1.map, po.in2.map, po.apex.size(), g.map, h.map)};
  if (!is_morphism(t)) throw NoDiagonal("FinTop copair: induced map is not continuous");
  return t;
}

std::vector<FinTopCategory::Mor> FinTopCategory::hom_set(const Object& a, const Object& b,
                                                         std::size_t bound) const {
  std::vector<Mor> out;
  setops::for_each_map(a.size(), b.size(), bound, [&](const ElemMap& m) {
    Mor f{a, b, m};
    if (is_morphism(f)) out.push_back(std::move(f));
  });
  return out;
}

FinTopCategory::Mor FinTopCategory::subobject(const Object& o, const Subset& s) const {
  auto keep = members(s);
  return {make_space_from_nbhds(labels_of(o.labels(), keep), restrict_nbhds(o, keep)), o, keep};
}

PushoutCocone<TopObj> FinTopCategory::coproduct(const Object& a, const Object& b) const {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Subset> nbhd;
  for (std::size_t x = 0; x < na; ++x) {
    Subset u(na + nb);
    for (auto y = a->nbhd[x].find_first(); y != Subset::npos; y = a->nbhd[x].find_next(y)) u.set(y);
    nbhd.push_back(std::move(u));
  }
  for (std::size_t x = 0; x < nb; ++x) {
    Subset u(na + nb);
    for (auto y = b->nbhd[x].find_first(); y != Subset::npos; y = b->nbhd[x].find_next(y)) u.set(na + y);
    nbhd.push_back(std::move(u));
  }
  auto apex = make_space_from_nbhds(sum_labels(a.labels(), b.labels()), std::move(nbhd));
  ElemMap in2(nb);
  for (std::size_t y = 0; y < nb; ++y) in2[y] = static_cast<Elem>(na + y);
  return {apex, {a, apex, identity_map(na)}, {b, apex, in2}};
}

std::optional<NormalClosure<TopObj>> FinTopCategory::closed_form_closure(const Mor& f) const {
  auto nu = subobject(f.cod, image(f));
  return NormalClosure<TopObj>{nu.dom, nu, {f.dom, nu.dom, *lift_map(nu, f)}};
}

std::optional<NormalDualClosure<TopObj>> FinTopCategory::closed_form_dual_closure(const Mor& f) const {
  return NormalDualClosure<TopObj>{f.dom, identity(f.dom), f};
}

}  // namespace normcat
