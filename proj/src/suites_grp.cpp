#include <cstdint>
#include <map>
#include <unordered_map>

#include "normcat/algebra.hpp"
#include "normcat/catalogue.hpp"
#include "normcat/groups.hpp"
#include "normcat/orthogonality.hpp"
#include "normcat/random.hpp"
#include "normcat/slices.hpp"
#include "suite_util.hpp"

namespace normcat {

using namespace suites;

namespace {

const GrpCategory grp_k;

std::size_t or_default(std::size_t v, std::size_t d) { return v ? v : d; }

// Test-side subgroup arithmetic on 64-bit masks, written against the raw
// Cayley table and independent of the library's Subset routines.
using Mask = std::uint64_t;

struct Table64 {
  std::size_t n;
  std::vector<Elem> mul;
  std::vector<Elem> inv;
  Elem e;

  explicit Table64(const Alg& g) : n(g.size()), mul(n * n), inv(n), e(unit_of(g)) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) mul[x * n + y] = g->op(0, static_cast<Elem>(x), static_cast<Elem>(y));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (mul[x * n + y] == e) inv[x] = static_cast<Elem>(y);
  }
  Elem m(std::size_t x, std::size_t y) const { return mul[x * n + y]; }

  Mask product(Mask s, Mask t) const {
    Mask out = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (s >> x & 1)
        for (std::size_t y = 0; y < n; ++y)
          if (t >> y & 1) out |= Mask{1} << m(x, y);
    return out;
  }
  bool subgroup(Mask s) const {
    if (!(s >> e & 1)) return false;
    for (std::size_t x = 0; x < n; ++x)
      if (s >> x & 1) {
        if (!(s >> inv[x] & 1)) return false;
        for (std::size_t y = 0; y < n; ++y)
          if ((s >> y & 1) && !(s >> m(x, y) & 1)) return false;
      }
    return true;
  }
  // Close under conjugation, then under products, until nothing changes.
  Mask hull(Mask s) const {
    s |= Mask{1} << e;
    for (;;) {
      Mask next = s;
      for (std::size_t x = 0; x < n; ++x)
        if (s >> x & 1)
          for (std::size_t g = 0; g < n; ++g) next |= Mask{1} << m(m(g, x), inv[g]);
      next |= product(next, next);
      if (next == s) return s;
      s = next;
    }
  }
  std::vector<Mask> subgroups() const {
    std::vector<Mask> out;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
      if (subgroup(s)) out.push_back(s);
    return out;
  }
};

Mask to_mask(const Subset& s) {
  Mask out = 0;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out |= Mask{1} << i;
  return out;
}

Subset to_subset(Mask m, std::size_t n) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = m >> i & 1;
  return s;
}

Mask image_mask(const ElemMap& f, Mask s) {
  Mask out = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (s >> x & 1) out |= Mask{1} << f[x];
  return out;
}

Mask kernel_mask(const Arrow<Alg>& p) {
  Mask out = 0;
  Elem e = unit_of(p.cod);
  for (std::size_t x = 0; x < p.map.size(); ++x)
    if (p.map[x] == e) out |= Mask{1} << x;
  return out;
}

// Oracle for the slice closure: A · hull_B(Ker p ∩ A).
Mask oracle_closure(const Table64& b, Mask a, const Arrow<Alg>& p) { return b.product(a, b.hull(kernel_mask(p) & a)); }

bool oracle_slice_normal(const Table64& b, Mask a, const Arrow<Alg>& p) {
  return b.subgroup(a) && (b.hull(kernel_mask(p) & a) & ~a) == 0;
}

struct Catalogue {
  std::vector<Named> groups;
  std::vector<Table64> tables;
  std::vector<std::vector<Mask>> subgroups;
  std::vector<std::vector<std::vector<Arrow<Alg>>>> homs;  // [i][j]

  explicit Catalogue(std::vector<Named> gs) : groups(std::move(gs)) {
    for (const auto& g : groups) {
      tables.emplace_back(g.object);
      subgroups.push_back(tables.back().subgroups());
    }
    homs.resize(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = 0; j < groups.size(); ++j)
        homs[i].push_back(grp_k.hom_set(groups[i].object, groups[j].object, default_hom_bound()));
  }
  std::size_t index_of(const Alg& a) const {
    for (std::size_t i = 0; i < groups.size(); ++i)
      if (groups[i].object == a) return i;
    return groups.size();
  }
};

struct MapHash {
  std::size_t operator()(const ElemMap& m) const {
    std::size_t h = m.size();
    for (Elem x : m) h = h * 1000003u + x;
    return h;
  }
};

// One probe target: v : B → D, p_D : D → C with p_D∘v = p, and the slice-
// normal subgroups of (D, p_D).
struct ProbeFamily {
  ElemMap v;
  std::vector<Mask> normal_subs;
};

// Second route at small orders: the full reflection check in C/Grp with
// diagonals found by hom-set enumeration.
Verdict small_reflection_route(const SliceCategory<GrpCategory>& ks, const Arrow<Alg>& incl, const Arrow<Alg>& p,
                               const Catalogue& cat, std::size_t max_d, std::size_t* probes_out) {
  using SK = SliceCategory<GrpCategory>;
  auto f = ks.lift(incl, ks.object(compose(p, incl)), ks.object(p));
  auto nc = ks.closed_form_closure(f);
  if (!nc) return Verdict::fail;
  std::vector<ReflectionProbe<SK>> probes;
  const std::size_t c = cat.index_of(p.cod);
  for (std::size_t d = 0; d < cat.groups.size(); ++d) {
    if (cat.groups[d].object.size() > max_d) continue;
    const auto& D = cat.groups[d].object;
    for (const auto& pd : cat.homs[d][c]) {
      auto od = ks.object(pd);
      for (Mask sub : cat.subgroups[d]) {
        auto m0 = grp_k.subobject(D, to_subset(sub, D.size()));
        auto m = ks.lift(m0, ks.object(compose(pd, m0)), od);
        if (!is_normal_mono(ks, m)) continue;
        for (const auto& v0 : cat.homs[cat.index_of(p.dom)][d]) {
          if (!(compose(pd, v0) == p)) continue;
          auto v = ks.lift(v0, f.cod, od);
          auto lifted = lift_map(m0, compose(v0, incl));
          if (!lifted) continue;
          MorOf<SK> u{f.dom, m.dom, *lifted};
          probes.push_back({m, u, v});
        }
      }
    }
  }
  *probes_out += probes.size();
  return check_reflection_property(ks, *nc, probes);
}

}  // namespace

Report suite_slice_grp(const SuiteOptions& o) {
  Report r;
  const std::size_t order = or_default(o.max_order, 12);
  const std::size_t c_order = std::min<std::size_t>(order, 6);
  const std::size_t small = std::min<std::size_t>(order, 6);
  Catalogue cat(grp_catalogue(order));

  const std::string id_sub = "slice-grp.closure-formula.subgroup";
  const std::string id_char = "slice-grp.closure-formula.normal-mono-characterization";
  const std::string id_refl = "slice-grp.closure-formula.reflection-probe";
  const std::string id_refl_small = "slice-grp.closure-formula.reflection-by-enumeration";
  const std::string id_hull = "slice-grp.closure-formula.classical-hull-over-trivial-group";

  std::size_t cases = 0, probes = 0, small_cases = 0, small_probes = 0, hull_cases = 0, normal_monos = 0;
  std::string fail_sub, fail_char, fail_refl, fail_small, fail_hull;
  std::string w_sub, w_char, w_refl, w_small, w_hull;
  auto note = [](std::string& slot, std::string& wslot, const std::string& why, const std::string& w) {
    if (slot.empty()) {
      slot = why;
      wslot = w;
    }
  };

  std::string current;
  try {
    for (std::size_t bi = 0; bi < cat.groups.size(); ++bi) {
      const auto& B = cat.groups[bi].object;
      const auto& tb = cat.tables[bi];
      for (std::size_t ci = 0; ci < cat.groups.size(); ++ci) {
        if (cat.groups[ci].object.size() > c_order) continue;
        const auto& C = cat.groups[ci].object;
        for (const auto& p : cat.homs[bi][ci]) {
          // Probe families for this p.
          std::vector<ProbeFamily> families;
          for (std::size_t di = 0; di < cat.groups.size(); ++di)
            for (const auto& pd : cat.homs[di][ci]) {
              std::vector<Mask> subs;
              for (Mask s : cat.subgroups[di])
                if (oracle_slice_normal(cat.tables[di], s, pd)) subs.push_back(s);
              for (const auto& v : cat.homs[bi][di])
                if (compose(pd, v) == p) families.push_back({v.map, subs});
            }

          for (Mask a : cat.subgroups[bi]) {
            ++cases;
            auto incl = grp_k.subobject(B, to_subset(a, B.size()));
            current = "B = " + cat.groups[bi].name + ", C = " + cat.groups[ci].name + "\nA = " +
                      render_subset(incl) + "\np = " + render(p);
            Subset n_lib = slice_closure_set(incl, p);
            Mask n = to_mask(n_lib);

            // (i)
            if (n != oracle_closure(tb, a, p)) note(fail_sub, w_sub, "library set differs from A·Ê", current);
            if (!tb.subgroup(n)) note(fail_sub, w_sub, "A·Ê is not a subgroup", current);
            if ((a & ~n) != 0) note(fail_sub, w_sub, "closure does not contain A", current);

            // (ii)
            bool is_nm = grp_slice_normal_mono_test(incl, p);
            normal_monos += is_nm;
            if (is_nm != (n == a) || is_nm != oracle_slice_normal(tb, a, p))
              note(fail_char, w_char, "normal-mono test disagrees with N = A", current);

            // (iii) N is slice-normal, and every slice-normal D' ⊆ D through
            // which v∘incl factors also receives v(N).
            if (!oracle_slice_normal(tb, n, p)) note(fail_refl, w_refl, "closure is not slice-normal", current);
            for (const auto& fam : families) {
              Mask va = image_mask(fam.v, a), vn = image_mask(fam.v, n);
              for (Mask d : fam.normal_subs) {
                ++probes;
                if ((va & ~d) == 0 && (vn & ~d) != 0) {
                  note(fail_refl, w_refl, "a slice-normal subobject contains v(A) but not v(N)",
                       current + "\nv = " + render(Arrow<Alg>{B, C, fam.v}));
                }
              }
            }

            if (B.size() <= small && C.size() <= small) {
              ++small_cases;
              SliceCategory<GrpCategory> ks(grp_k, C);
              auto verdict = small_reflection_route(ks, incl, p, cat, small, &small_probes);
              if (verdict != Verdict::pass) note(fail_small, w_small, "enumerated reflection check fails", current);
            }

            // (iv)
            if (C.size() == 1) {
              ++hull_cases;
              auto cf = grp_k.closed_form_closure(incl);
              if (n != tb.hull(a) || !cf || to_mask(image_of(cf->nu.map, B.size())) != n)
                note(fail_hull, w_hull, "closure over 1 is not the normal hull", current);
            }
          }
        }
      }
    }
  } catch (const std::exception& e) {
    r.fail(id_sub, std::string("exception: ") + e.what(), current);
    return r;
  }

  auto finish = [&](const std::string& id, const std::string& why, const std::string& w, const std::string& ok) {
    if (why.empty()) r.pass(id, ok);
    else r.fail(id, why, w);
  };
  finish(id_sub, fail_sub, w_sub, count_detail(cases, "(A ≤ B, p : B → C) cases"));
  finish(id_char, fail_char, w_char, count_detail(cases, "cases, ") + count_detail(normal_monos, "slice-normal"));
  finish(id_refl, fail_refl, w_refl, count_detail(probes, "probes against normal monos into groups ≤ ") +
                                         std::to_string(order));
  finish(id_refl_small, fail_small, w_small,
         count_detail(small_cases, "cases, ") + count_detail(small_probes, "probes with hom-set search"));
  finish(id_hull, fail_hull, w_hull, count_detail(hull_cases, "cases with C trivial"));
  return r;
}

Report suite_grp_pushout(const SuiteOptions& o) {
  Report r;
  const std::size_t order = or_default(o.max_order, 12);
  const std::size_t c_order = std::min<std::size_t>(order, 6);
  Catalogue cat(grp_catalogue(order));

  const std::string id_pre = "grp-pushout.subgroup-rectangle.preimage-of-image";
  const std::string id_po = "grp-pushout.subgroup-rectangle.universal-property";
  const std::string id_route = "grp-pushout.subgroup-rectangle.regular-epi-route";
  std::size_t cases = 0, cocones = 0;
  std::string fail_pre, fail_po, fail_route, w_pre, w_po, w_route;
  auto note = [](std::string& slot, std::string& wslot, const std::string& why, const std::string& w) {
    if (slot.empty()) {
      slot = why;
      wslot = w;
    }
  };

  std::string current;
  try {
    for (std::size_t bi = 0; bi < cat.groups.size(); ++bi) {
      const auto& B = cat.groups[bi].object;
      const auto& tb = cat.tables[bi];
      // The square only depends on A and E = Ker p ∩ A.
      std::map<std::pair<Mask, Mask>, bool> seen;
      for (std::size_t ci = 0; ci < cat.groups.size(); ++ci) {
        if (cat.groups[ci].object.size() > c_order) continue;
        for (const auto& p : cat.homs[bi][ci])
          for (Mask a : cat.subgroups[bi]) {
            Mask e = kernel_mask(p) & a;
            if (!seen.emplace(std::pair{a, e}, true).second) continue;
            ++cases;
            auto incl = grp_k.subobject(B, to_subset(a, B.size()));
            current = "B = " + cat.groups[bi].name + "\nA = " + render_subset(incl) + "\np = " + render(p);
            auto sq = subgroup_pushout_square(incl, p);

            Mask hull = tb.hull(e);
            Mask pre = 0;
            Subset im_k = image_of(sq.k.map, sq.k.cod.size());
            for (std::size_t x = 0; x < B.size(); ++x)
              if (im_k[sq.p_bar.map[x]]) pre |= Mask{1} << x;
            if (!preimage_of_image_matches(sq) || pre != tb.product(a, hull) || to_mask(sq.hull) != hull)
              note(fail_pre, w_pre, "p̄⁻¹(Im k) differs from A·Ê", current);

            auto po = grp_pushout_along_regular_epi(sq.p_tilde, incl);
            if (!same_quotient(po.in2, sq.p_bar)) note(fail_route, w_route, "B/Ê differs from the pushout along A ↠ A/E", current);

            if (!(compose(sq.k, sq.p_tilde) == compose(sq.p_bar, sq.incl))) {
              note(fail_po, w_po, "square does not commute", current);
              continue;
            }
            // Every cocone (g : B → T, h : A/E → T) with g∘incl = h∘p̃ factors
            // through a unique t : B/Ê → T.
            const auto& P = sq.p_bar.cod;
            const auto& Q = sq.p_tilde.cod;
            for (const auto& tn : cat.groups) {
              const auto& T = tn.object;
              const auto& hb = cat.homs[bi][&tn - cat.groups.data()];
              auto hq = grp_k.hom_set(Q, T, default_hom_bound());
              auto hp = grp_k.hom_set(P, T, default_hom_bound());
              std::unordered_map<ElemMap, std::vector<const Arrow<Alg>*>, MapHash> by_restriction;
              for (const auto& h : hq) by_restriction[compose_maps(h.map, sq.p_tilde.map)].push_back(&h);
              std::unordered_map<ElemMap, std::vector<const Arrow<Alg>*>, MapHash> by_g;
              for (const auto& t : hp) by_g[compose_maps(t.map, sq.p_bar.map)].push_back(&t);
              for (const auto& g : hb) {
                auto it = by_restriction.find(compose_maps(g.map, sq.incl.map));
                if (it == by_restriction.end()) continue;
                for (const auto* h : it->second) {
                  ++cocones;
                  int found = 0;
                  if (auto jt = by_g.find(g.map); jt != by_g.end())
                    for (const auto* t : jt->second) found += compose_maps(t->map, sq.k.map) == h->map;
                  if (found != 1)
                    note(fail_po, w_po, std::to_string(found) + " mediating maps for a cocone",
                         current + "\nT = " + tn.name + "\ng = " + render(g) + "\nh = " + render(*h));
                }
              }
            }
          }
      }
    }
  } catch (const std::exception& e) {
    r.fail(id_pre, std::string("exception: ") + e.what(), current);
    return r;
  }

  auto finish = [&](const std::string& id, const std::string& why, const std::string& w, const std::string& ok) {
    if (why.empty()) r.pass(id, ok);
    else r.fail(id, why, w);
  };
  finish(id_pre, fail_pre, w_pre, count_detail(cases, "distinct (B, A, E) squares"));
  finish(id_po, fail_po, w_po,
         count_detail(cocones, "cocones into groups ≤ ") + std::to_string(order) + " over " +
             count_detail(cases, "squares"));
  finish(id_route, fail_route, w_route, count_detail(cases, "squares"));
  return r;
}

}  // namespace normcat
