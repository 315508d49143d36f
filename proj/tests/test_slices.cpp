#include <random>

#include "doctest.h"
#include "normcat/catalogue.hpp"
#include "normcat/groups.hpp"
#include "normcat/ralg.hpp"
#include "normcat/setops.hpp"
#include "normcat/slices.hpp"
#include "support.hpp"

using namespace normcat;
using testing::names;
using testing::numbered;

namespace {

const FinSetCategory set_cat;
const PointedSetCategory pt_cat;
const FinTopCategory top_cat;
const AbCategory ab_cat;
const GrpCategory grp_cat;
const CRingCategory ring_cat;

SetObj S(std::size_t n, const std::string& prefix) { return make_set(numbered(n, prefix)); }

Elem at(const Alg& a, const std::string& label) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.label(i) == label) return static_cast<Elem>(i);
  FAIL("no element " << label);
  return 0;
}

Arrow<Alg> nontrivial_hom(const AlgebraCategory& k, const Alg& a, const Alg& b) {
  for (const auto& h : k.hom_set(a, b, 1000))
    if (image(h).count() > 1) return h;
  FAIL("no nontrivial hom");
  return {};
}

Arrow<Alg> inclusion(const Alg& b, std::initializer_list<const char*> xs) {
  Subset s(b.size());
  for (const char* x : xs) s.set(at(b, x));
  auto sub = subalgebra(b, s);
  return {sub, b, members(s)};
}

}  // namespace

TEST_CASE("FinSet slice over two points: pullbacks are fibred products") {
  auto two = S(2, "c");
  SliceCategory<FinSetCategory> ks(set_cat, two);
  auto A = ks.object(set_cat.morphism(S(3, "a"), two, {0, 1, 1}));
  auto B = ks.object(set_cat.morphism(S(2, "b"), two, {0, 1}));
  auto D = ks.object(set_cat.morphism(S(2, "d"), two, {1, 1}));
  auto f = ks.to_terminal(A), g = ks.to_terminal(B);
  auto pb = ks.pullback(f, g);
  CHECK(pb.apex.size() == 3);
  CHECK(testing::pullback_universal(ks, f, g, pb, {A, B, D, ks.initial(), ks.terminal()}));
  auto po = ks.pushout(ks.from_initial(A), ks.from_initial(D));
  CHECK(po.apex.size() == 5);
  CHECK(testing::pushout_universal(ks, ks.from_initial(A), ks.from_initial(D), po, {B, D, ks.terminal()}));
}

TEST_CASE("slice over the terminal object has the hom-sets of the base") {
  SliceCategory<FinSetCategory> ks(set_cat, set_cat.terminal());
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      auto a = S(n, "a"), b = S(m, "b");
      CHECK(ks.hom_set(ks.object(set_cat.to_terminal(a)), ks.object(set_cat.to_terminal(b)), 1000).size() ==
            set_cat.hom_set(a, b, 1000).size());
    }
}

TEST_CASE("FinSet under a point agrees with pointed sets") {
  auto one = S(1, "*");
  CosliceCategory<FinSetCategory> kc(set_cat, one);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      auto a = S(n, "a"), b = S(m, "b");
      auto pa = make_pointed(numbered(n, "a"), 0), pb = make_pointed(numbered(m, "b"), 0);
      auto oa = kc.object(set_cat.morphism(one, a, {0})), ob = kc.object(set_cat.morphism(one, b, {0}));
      auto homs = kc.hom_set(oa, ob, 1000);
      CHECK(homs.size() == pt_cat.hom_set(pa, pb, 1000).size());
      for (const auto& h : homs) {
        auto p = pt_cat.morphism(pa, pb, h.map);
        CHECK(kernel_classes(underlying(normal_dual_closure(kc, h).pi).map) ==
              kernel_classes(normal_dual_closure(pt_cat, p).pi.map));
        CHECK(image(underlying(normal_closure(kc, h).nu)) == image(normal_closure(pt_cat, p).nu));
      }
    }
  CHECK(kc.initial().size() == 1);
  CHECK(kc.terminal().size() == 1);
}

TEST_CASE("FinSet and Ab slices are discrete on regular monos") {
  for (std::size_t nc = 1; nc <= 3; ++nc) {
    auto C = S(nc, "c");
    SliceCategory<FinSetCategory> ks(set_cat, C, ClosurePolicy::generic_first);
    for (std::size_t nb = 1; nb <= 4; ++nb) {
      auto B = S(nb, "b");
      setops::for_each_map(nb, nc, 1000, [&](const ElemMap& pm) {
        auto p = set_cat.morphism(B, C, pm);
        for (std::size_t mask = 0; mask < (std::size_t{1} << nb); ++mask) {
          Subset s(nb);
          for (std::size_t b = 0; b < nb; ++b)
            if (mask >> b & 1) s.set(b);
          auto m = set_cat.subobject(B, s);
          auto f = ks.lift(m, ks.object(compose(p, m)), ks.object(p));
          auto nc_over = generic_normal_closure(ks, f);
          CHECK(is_iso(ks, nc_over.hat));
          CHECK(image(underlying(nc_over.nu)) == s);
        }
      });
    }
  }
  auto abs = abelian_groups_up_to_8();
  for (const auto& c : abs) {
    if (c.object.size() > 4) continue;
    SliceCategory<AbCategory> ks(ab_cat, c.object, ClosurePolicy::generic_first);
    for (const auto& b : abs) {
      if (b.object.size() > 6) continue;
      for (const auto& p : ab_cat.hom_set(b.object, c.object, 1000))
        for (const auto& a : abs)
          for (const auto& m : ab_cat.hom_set(a.object, b.object, 1000)) {
            if (!is_injective(m)) continue;
            auto f = ks.lift(m, ks.object(compose(p, m)), ks.object(p));
            auto nc_over = generic_normal_closure(ks, f);
            CHECK(is_iso(ks, nc_over.hat));
            CHECK(image(underlying(nc_over.nu)) == image(m));
          }
    }
  }
}

TEST_CASE("Grp slice: the transposition over the sign is its own closure") {
  auto s3 = symmetric3();
  auto z2 = cyclic_group(2, false);
  auto sign = nontrivial_hom(grp_cat, s3, z2);
  auto m = inclusion(s3, {"e", "(12)"});
  SliceCategory<GrpCategory> ks(grp_cat, z2);
  auto f = ks.lift(m, ks.object(compose(sign, m)), ks.object(sign));
  auto n = slice_normal_closure(ks, f);
  CHECK(image(underlying(n.nu)) == image(m));
  CHECK(is_iso(ks, n.hat));
  auto plain = normal_closure(grp_cat, m);
  CHECK(plain.object.size() == 6);
  auto tau = tau_comparison(ks, f);
  CHECK(is_injective(tau));
  CHECK_FALSE(is_surjective(tau));
  CHECK(slice_comparison_diagram(ks, f) == std::nullopt);

  // Over the trivial group Im f ⊆ Ker p and tau is an iso.
  auto one = trivial_algebra(Variety::grp);
  SliceCategory<GrpCategory> k1(grp_cat, one);
  auto bang = grp_cat.to_terminal(s3);
  auto f1 = k1.lift(m, k1.object(compose(bang, m)), k1.object(bang));
  CHECK(is_iso(grp_cat, tau_comparison(k1, f1)));
}

TEST_CASE("slice dual closure is the base dual closure") {
  auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  SliceCategory<AbCategory> ks(ab_cat, z2);
  auto red = nontrivial_hom(ab_cat, z4, z2);
  auto f = ks.lift(red, ks.object(red), ks.object(identity(z2)));
  auto d = slice_dual_closure(ks, f);
  CHECK(d.object.size() == 2);
  CHECK(same_quotient(underlying(d.pi), normal_dual_closure(ab_cat, red).pi));
  auto abs = abelian_groups_up_to_8();
  for (const auto& c : abs) {
    if (c.object.size() > 4) continue;
    SliceCategory<AbCategory> kc(ab_cat, c.object);
    for (const auto& b : abs) {
      if (b.object.size() > 4) continue;
      for (const auto& p : ab_cat.hom_set(b.object, c.object, 1000))
        for (const auto& a : abs) {
          if (a.object.size() > 4) continue;
          for (const auto& g : ab_cat.hom_set(a.object, b.object, 1000)) {
            auto fl = kc.lift(g, kc.object(compose(p, g)), kc.object(p));
            CHECK(same_quotient(underlying(slice_dual_closure(kc, fl).pi), normal_dual_closure(ab_cat, g).pi));
            CHECK(slice_comparison_diagram(kc, fl) == std::nullopt);
          }
        }
    }
  }
}

TEST_CASE("FinSet slices: comparison diagram and identity tau") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t na = rng() % 4, nb = 1 + rng() % 4, nc = 1 + rng() % 3;
    auto A = S(na, "a"), B = S(nb, "b"), C = S(nc, "c");
    ElemMap fm(na), pm(nb);
    for (auto& x : fm) x = static_cast<Elem>(rng() % nb);
    for (auto& x : pm) x = static_cast<Elem>(rng() % nc);
    SliceCategory<FinSetCategory> ks(set_cat, C);
    auto p = set_cat.morphism(B, C, pm);
    auto f = ks.lift(set_cat.morphism(A, B, fm), ks.object(set_cat.morphism(A, C, compose_maps(pm, fm))),
                     ks.object(p));
    CHECK(slice_comparison_diagram(ks, f) == std::nullopt);
    CHECK(is_iso(set_cat, tau_comparison(ks, f)));
  }
}

TEST_CASE("coslice of FinSet: sigma is the coslice dual closure") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t nc = rng() % 3, na = 1 + rng() % 5, nb = 1 + rng() % 5;
    auto C = S(nc, "c"), A = S(na, "a"), B = S(nb, "b");
    ElemMap jm(nc), fm(na);
    for (auto& x : jm) x = static_cast<Elem>(rng() % na);
    for (auto& x : fm) x = static_cast<Elem>(rng() % nb);
    auto j = set_cat.morphism(C, A, jm);
    auto g = set_cat.morphism(A, B, fm);
    CosliceCategory<FinSetCategory> kc(set_cat, C, ClosurePolicy::generic_first);
    auto f = kc.lift(g, kc.object(j), kc.object(compose(g, j)));
    auto generic = generic_normal_dual_closure(kc, f);
    auto closed = coslice_set_dual_closure(j, g);
    CHECK(kernel_classes(closed.pi.map) == kernel_classes(underlying(generic.pi).map));
    auto sigma = sigma_comparison(kc, f);
    CHECK(kernel_classes(sigma.map) == kernel_classes(underlying(generic.pi).map));
    CHECK(coslice_comparison_diagram(kc, f) == std::nullopt);
  }
}

TEST_CASE("coslice of FinSet under a point collapses the base fibre") {
  auto one = S(1, "*");
  auto A = S(3, "a"), B = S(2, "b");
  auto j = set_cat.morphism(one, A, {0});
  auto f = set_cat.morphism(A, B, {0, 0, 1});
  auto d = coslice_set_dual_closure(j, f);
  CHECK(d.object.size() == 2);
  CHECK(d.pi.map[0] == d.pi.map[1]);
  CHECK(d.pi.map[2] != d.pi.map[0]);
  // j surjective and f injective: pi is an iso.
  auto inj = coslice_set_dual_closure(set_cat.morphism(A, A, {0, 1, 2}), set_cat.morphism(A, S(4, "b"), {0, 1, 3}));
  CHECK(inj.object.size() == 3);
}

TEST_CASE("coslices of Grp and Ab: sigma is an iso") {
  auto gs = groups_up_to_8();
  for (const auto& c : gs) {
    if (c.object.size() > 4) continue;
    CosliceCategory<GrpCategory> kc(grp_cat, c.object);
    for (const auto& a : gs) {
      if (a.object.size() > 6) continue;
      for (const auto& j : grp_cat.hom_set(c.object, a.object, 1000))
        for (const auto& b : gs) {
          if (b.object.size() > 4) continue;
          for (const auto& g : grp_cat.hom_set(a.object, b.object, 1000)) {
            auto f = kc.lift(g, kc.object(j), kc.object(compose(g, j)));
            CHECK(is_iso(grp_cat, sigma_comparison(kc, f)));
            CHECK(coslice_comparison_diagram(kc, f) == std::nullopt);
          }
        }
    }
  }
  auto abs = abelian_groups_up_to_8();
  for (const auto& c : abs) {
    if (c.object.size() > 4) continue;
    CosliceCategory<AbCategory> kc(ab_cat, c.object);
    for (const auto& a : abs) {
      if (a.object.size() > 4) continue;
      for (const auto& j : ab_cat.hom_set(c.object, a.object, 1000))
        for (const auto& b : abs) {
          if (b.object.size() > 4) continue;
          for (const auto& g : ab_cat.hom_set(a.object, b.object, 1000)) {
            auto f = kc.lift(g, kc.object(j), kc.object(compose(g, j)));
            CHECK(is_iso(ab_cat, sigma_comparison(kc, f)));
          }
        }
    }
  }
}

TEST_CASE("Grp coslice examples") {
  auto z4 = cyclic_group(4, false), z2 = cyclic_group(2, false);
  auto one = trivial_algebra(Variety::grp);
  auto red = nontrivial_hom(grp_cat, z4, z2);
  auto d = grp_coslice_dual_closure(grp_cat.from_initial(z4), red);
  CHECK(d.object.size() == 2);
  CHECK(same_quotient(d.pi, red));
  CHECK(one.size() == 1);
  auto s3 = symmetric3();
  auto sign = nontrivial_hom(grp_cat, s3, z2);
  auto all = identity(s3);
  auto ds = grp_coslice_dual_closure(all, sign);
  CHECK(same_quotient(ds.pi, sign));
}

TEST_CASE("pre-extensive probes pass for FinSet, Ab and FinTop") {
  std::vector<std::pair<Arrow<SetObj>, SetObj>> set_samples;
  for (std::size_t na = 0; na <= 3; ++na)
    for (std::size_t nc = 1; nc <= 3; ++nc)
      setops::for_each_map(na, nc, 1000, [&](const ElemMap& m) {
        for (std::size_t n2 = 0; n2 <= 2; ++n2) set_samples.push_back({set_cat.morphism(S(na, "a"), S(nc, "c"), m), S(n2, "x")});
      });
  CHECK(is_pre_extensive_probe(set_cat, set_samples));

  std::vector<std::pair<Arrow<Alg>, Alg>> ab_samples;
  auto abs = abelian_groups_up_to_8();
  for (const auto& a : abs)
    for (const auto& c : abs) {
      if (a.object.size() > 4 || c.object.size() > 4) continue;
      for (const auto& q : ab_cat.hom_set(a.object, c.object, 1000))
        ab_samples.push_back({q, cyclic_group(2)});
    }
  CHECK(is_pre_extensive_probe(ab_cat, ab_samples));

  std::vector<std::pair<Arrow<TopObj>, TopObj>> top_samples;
  auto spaces = topologies_up_to(2);
  for (const auto& a : spaces)
    for (const auto& c : spaces)
      for (const auto& q : top_cat.hom_set(a, c, 1000))
        for (const auto& x : spaces) top_samples.push_back({q, x});
  CHECK(is_pre_extensive_probe(top_cat, top_samples));
}

TEST_CASE("rectangle diagnostic on FinSet and Ab monos") {
  auto B = S(3, "b"), C = S(2, "c");
  auto m = set_cat.subobject(B, [] {
    Subset s(3);
    s.set(0);
    return s;
  }());
  auto p = set_cat.morphism(B, C, {0, 0, 1});
  auto d = slice_rectangle_diagnostic(set_cat, m, p);
  REQUIRE(d.has_value());
  CHECK((d->upper || d->lower));
  auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  auto sub = inclusion(z4, {"0", "2"});
  auto dab = slice_rectangle_diagnostic(ab_cat, sub, nontrivial_hom(ab_cat, z4, z2));
  REQUIRE(dab.has_value());
  CHECK((dab->upper || dab->lower));
  auto s3 = symmetric3();
  auto dgrp = slice_rectangle_diagnostic(grp_cat, inclusion(s3, {"e", "(12)"}), nontrivial_hom(grp_cat, s3, cyclic_group(2, false)));
  CHECK_FALSE(dgrp.has_value());
}

TEST_CASE("R-algebra decompositions are formed as in CRing") {
  auto f2 = zn_ring(2);
  auto F4 = f4();
  CosliceCategory<CRingCategory> kc(ring_cat, f2);
  auto unit4 = ring_from_zn(f2, F4);
  auto fr = frobenius(F4);
  auto f = kc.lift(fr, kc.object(unit4), kc.object(unit4));
  auto d = ralg_coslice_decomposition(kc, f);
  CHECK(is_iso(ring_cat, d.base.pi));
  CHECK(is_iso(ring_cat, d.base.nu));

  auto dual = dual_numbers_f2();
  auto ev = ring_cat.hom_set(dual, f2, 1000);
  REQUIRE(ev.size() == 1);
  auto g = kc.lift(ev[0], kc.object(ring_from_zn(f2, dual)), kc.object(identity(f2)));
  auto e = ralg_coslice_decomposition(kc, g);
  CHECK(e.base.P.size() == 2);
  CHECK(e.base.pi.map[at(dual, "0")] == e.base.pi.map[at(dual, "x")]);
  CHECK(is_iso(ring_cat, e.base.nu));

  auto id = kc.lift(identity(F4), kc.object(unit4), kc.object(unit4));
  auto t = ralg_coslice_decomposition(kc, id);
  CHECK(is_iso(ring_cat, underlying(t.over.kappa)));
}
