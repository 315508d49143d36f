#include "doctest.h"
#include "normcat/catalogue.hpp"
#include "normcat/groups.hpp"
#include "normcat/morphism_classes.hpp"
#include "support.hpp"

using namespace normcat;
using testing::names;

namespace {

const CMonCategory cmon;
const AbCategory ab;
const GrpCategory grp;
const CRingCategory cring;

// Every map a → b, kept when it preserves each constant and table cell.
std::vector<ElemMap> brute_homs(const Alg& a, const Alg& b) {
  std::vector<ElemMap> out;
  ElemMap m(a.size(), 0);
  for (;;) {
    bool ok = true;
    for (std::size_t k = 0; k < a->constants.size() && ok; ++k) ok = m[a->constants[k]] == b->constants[k];
    for (std::size_t k = 0; k < a->binary.size() && ok; ++k)
      for (Elem x = 0; x < a.size() && ok; ++x)
        for (Elem y = 0; y < a.size() && ok; ++y) ok = m[a->op(k, x, y)] == b->op(k, m[x], m[y]);
    if (ok) out.push_back(m);
    std::size_t i = 0;
    while (i < m.size() && ++m[i] == b.size()) m[i++] = 0;
    if (i == m.size()) break;
  }
  return out;
}

bool normal_in(const Alg& g, const Subset& s) {
  for (Elem x = 0; x < g.size(); ++x)
    for (auto n = s.find_first(); n != Subset::npos; n = s.find_next(n)) {
      // x n x⁻¹ with x⁻¹ found by search
      Elem xi = 0;
      while (g->op(0, x, xi) != unit_of(g)) ++xi;
      if (!s.test(g->op(0, g->op(0, x, static_cast<Elem>(n)), xi))) return false;
    }
  return true;
}

Elem find(const Alg& a, const std::string& label) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.label(x) == label) return x;
  FAIL("no element " << label);
  return 0;
}

Subset subset_of(const Alg& a, std::initializer_list<const char*> xs) {
  Subset s(a.size());
  for (auto x : xs) s.set(find(a, x));
  return s;
}

Arrow<Alg> inclusion(const AlgebraCategory& k, const Alg& b, std::initializer_list<const char*> xs) {
  return k.subobject(b, subset_of(b, xs));
}

}  // namespace

TEST_CASE("validation names the failing law") {
  CHECK_THROWS_WITH_AS(make_cmon(names({"e", "a"}), {{0, 1}, {1, 1}}, 1), doctest::Contains("unit law"),
                       ValidationError);
  CHECK_THROWS_AS(make_group(names({"e", "a"}), {{0, 1}, {1, 1}}, 0, false), ValidationError);
  CHECK_THROWS_WITH_AS(make_cmon(names({"e", "a", "b"}), {{0, 1, 2}, {1, 2, 0}, {2, 0, 0}}, 0),
                       doctest::Contains("associativity"), ValidationError);
  CHECK_NOTHROW(make_cmon(names({"e", "a", "b"}), {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}, 0));
}

TEST_CASE("congruence closure saturates") {
  auto z4 = cyclic_group(4);
  CHECK(congruence_closure(z4, {}).classes() == 4);
  auto p = congruence_closure(z4, {{0, 2}});
  CHECK(p.classes() == 2);
  CHECK(p.cls[0] == p.cls[2]);
  CHECK(p.cls[1] == p.cls[3]);
  CHECK(p.cls[0] != p.cls[1]);

  auto t = truncated_monoid(3);
  CHECK(congruence_closure(t, {{0, 2}}).classes() == 1);
  CHECK(congruence_closure(t, {{1, 2}}).classes() == 2);
  CHECK(is_congruence(t, congruence_closure(t, {{1, 2}})));
}

TEST_CASE("hom enumeration matches brute force") {
  auto z2 = cyclic_group(2), z4 = cyclic_group(4);
  CHECK(ab.hom_set(z2, z4, 1000).size() == 2);
  auto s3 = symmetric3();
  auto z2g = cyclic_group(2, false);
  CHECK(grp.hom_set(s3, z2g, 1000).size() == 2);
  CHECK(grp.hom_set(s3, grp.terminal(), 1000).size() == 1);

  auto groups = groups_up_to_8();
  for (const auto& a : groups)
    for (const auto& b : groups) {
      if (a.object.size() > 6 || b.object.size() > 6) continue;
      auto homs = grp.hom_set(a.object, b.object, 100000);
      auto oracle = brute_homs(a.object, b.object);
      CHECK_MESSAGE(homs.size() == oracle.size(), a.name << " -> " << b.name);
    }
  auto monoids = commutative_monoids(3);
  for (const auto& a : monoids)
    for (const auto& b : monoids) CHECK(cmon.hom_set(a.object, b.object, 1000).size() == brute_homs(a.object, b.object).size());
  auto rings = rings_up_to_4();
  for (const auto& a : rings)
    for (const auto& b : rings) CHECK(cring.hom_set(a.object, b.object, 1000).size() == brute_homs(a.object, b.object).size());
}

TEST_CASE("catalogue sizes") {
  CHECK(groups_up_to_12().size() == 24);
  CHECK(abelian_groups_up_to_8().size() == 11);
  CHECK(rings_up_to_4().size() == 7);
  // commutative monoids of order 1..4: 1, 2, 5, 19
  CHECK(commutative_monoids(1).size() == 1);
  CHECK(commutative_monoids(2).size() == 3);
  CHECK(commutative_monoids(3).size() == 8);
  CHECK(commutative_monoids(4).size() == 27);
  // topologies on 1..4 points up to homeomorphism: 1, 3, 9, 33
  CHECK(topologies_up_to(4).size() == 46);
  for (const auto& g : groups_up_to_12()) CHECK(normal_in(g.object, full_subset(g.object.size())));
  CHECK(characteristic(f8()) == 2);
  CHECK(f8().size() == 8);
  CHECK(characteristic(zn_ring(4)) == 4);
}

TEST_CASE("CMon closed forms") {
  auto t = truncated_monoid(3);
  auto one = cmon.terminal();
  auto f = cmon.morphism(one, t, {0});
  auto nc = normal_closure(cmon, f);
  CHECK(render_subset(nc.nu) == "{0}");

  auto g = inclusion(cmon, t, {"0", "2"});
  auto ng = normal_closure(cmon, g);
  CHECK(render_subset(ng.nu) == "{0,1,2}");
  CHECK_FALSE(cmon_normal_mono_test(g));
  CHECK_FALSE(is_normal_mono(cmon, g));
  CHECK(cmon_normal_mono_test(identity(t)));

  auto z2 = monoid_of_group(cyclic_group(2));
  auto bang = cmon.to_terminal(z2);
  CHECK(cmon_normal_epi_test(bang));
  CHECK(is_normal_epi(cmon, bang));
}

TEST_CASE("CMon tests agree with the generic characterization") {
  auto monoids = commutative_monoids(3);
  for (const auto& a : monoids)
    for (const auto& b : monoids)
      for (const auto& f : cmon.hom_set(a.object, b.object, 1000)) {
        CHECK(cmon_normal_mono_test(f) == is_normal_mono(cmon, f));
        CHECK(cmon_normal_epi_test(f) == is_normal_epi(cmon, f));
        auto d = normal_decomposition(cmon, f);
        CHECK(compose(d.nu, d.kappa, d.pi) == f);
      }
}

TEST_CASE("CMon symmetrization: invertible image gives f(a) f(b)^-1") {
  auto z4 = cyclic_group(4);
  auto m4 = monoid_of_group(z4);
  auto f = cmon.morphism(monoid_of_group(cyclic_group(2)), m4, {0, 2});
  auto nc = normal_closure(cmon, f);
  CHECK(render_subset(nc.nu) == "{0,2}");
}

TEST_CASE("Ab pushouts and closed forms") {
  auto z2 = cyclic_group(2);
  auto po = ab.pushout(ab.from_initial(z2), ab.from_initial(z2));
  CHECK(po.apex.size() == 4);
  CHECK(testing::pushout_universal(ab, ab.from_initial(z2), ab.from_initial(z2), po, {z2, cyclic_group(4)}));

  auto z4 = cyclic_group(4);
  auto f = ab.morphism(z4, z2, {0, 1, 0, 1});
  auto d = normal_decomposition(ab, f);
  CHECK(d.P.size() == 2);
  CHECK(is_iso(ab, d.kappa));
  CHECK(is_iso(ab, d.nu));

  auto i = ab.morphism(z2, z4, {0, 2});
  auto q = ab.morphism(z2, z2, {0, 0});
  auto po2 = ab.pushout(i, q);
  CHECK(testing::pushout_universal(ab, i, q, po2, {z2, z4, direct_product(z2, z2)}));
  CHECK(testing::pullback_universal(ab, f, f, ab.pullback(f, f), {z2, z4}));
}

TEST_CASE("Grp closure is the normal hull") {
  auto s3 = symmetric3();
  auto t = inclusion(grp, s3, {"e", "(12)"});
  auto nc = normal_closure(grp, t);
  CHECK(nc.object.size() == 6);
  CHECK(normal_hull(s3, subset_of(s3, {"(123)"})) == subset_of(s3, {"e", "(123)", "(132)"}));
  CHECK(normal_hull(s3, subset_of(s3, {"e"})).count() == 1);
  auto a3 = inclusion(grp, s3, {"e", "(123)", "(132)"});
  CHECK(is_normal_mono(grp, a3));
  CHECK_FALSE(is_normal_mono(grp, t));
}

TEST_CASE("Grp pushout of A3 into S3 along A3 -> 1") {
  auto s3 = symmetric3();
  auto a3 = inclusion(grp, s3, {"e", "(123)", "(132)"});
  auto po = grp.pushout(a3, grp.to_terminal(a3.dom));
  CHECK(po.apex.size() == 2);
  auto alt = grp_pushout_along_regular_epi(grp.to_terminal(a3.dom), a3);
  CHECK(alt.apex.size() == 2);
  CHECK(same_quotient(po.in1, alt.in2));
  auto t = inclusion(grp, s3, {"e", "(12)"});
  CHECK_THROWS_AS(grp.pushout(t, t), PushoutNotRepresentable);
}

TEST_CASE("Grp normal monos are normal subgroup inclusions, epis are normal") {
  auto groups = groups_up_to_8();
  for (const auto& b : groups) {
    for (const auto& a : groups) {
      if (a.object.size() > b.object.size()) continue;
      for (const auto& f : grp.hom_set(a.object, b.object, 100000)) {
        bool oracle = is_injective(f) && normal_in(b.object, image(f));
        CHECK_MESSAGE(is_normal_mono(grp, f) == oracle, a.name << " -> " << b.name);
        CHECK(is_normal_epi(grp, f) == is_surjective(f));
      }
    }
  }
}

TEST_CASE("Grp slice closure examples") {
  auto s3 = symmetric3();
  auto z2 = cyclic_group(2, false);
  auto sign = grp.hom_set(s3, z2, 1000);
  REQUIRE(sign.size() == 2);
  auto p = is_surjective(sign[0]) ? sign[0] : sign[1];
  auto f = inclusion(grp, s3, {"e", "(12)"});
  CHECK(slice_closure_set(f, p) == image(f));
  CHECK(grp_slice_normal_mono_test(f, p));
  auto to_one = grp.to_terminal(s3);
  CHECK(slice_closure_set(f, to_one).count() == 6);
  CHECK_FALSE(grp_slice_normal_mono_test(f, to_one));
  auto a3 = inclusion(grp, s3, {"e", "(123)", "(132)"});
  CHECK(grp_slice_normal_mono_test(a3, to_one));
}

TEST_CASE("subgroup pushout square") {
  auto s3 = symmetric3();
  auto f = inclusion(grp, s3, {"e", "(12)"});
  auto sq = subgroup_pushout_square(f, grp.to_terminal(s3));
  CHECK(sq.p_bar.cod.size() == 1);
  CHECK(is_injective(sq.k));
  CHECK(preimage_of_image_matches(sq));
  auto d4 = dihedral_group(4);
  for (const auto& c : groups_up_to_8()) {
    if (c.object.size() > 4) continue;
    for (const auto& p : grp.hom_set(d4, c.object, 100000)) {
      auto sq2 = subgroup_pushout_square(inclusion(grp, d4, {"e", "s"}), p);
      CHECK(is_injective(sq2.k));
      CHECK(preimage_of_image_matches(sq2));
      CHECK(testing::pushout_universal(grp, sq2.p_tilde, sq2.incl, {sq2.p_bar.cod, sq2.k, sq2.p_bar},
                                       {cyclic_group(2, false), s3}));
    }
  }
}

TEST_CASE("Grp coslice dual closure") {
  auto s3 = symmetric3();
  auto z2 = cyclic_group(2, false);
  auto homs = grp.hom_set(s3, z2, 1000);
  auto sign = is_surjective(homs[0]) ? homs[0] : homs[1];
  auto j = inclusion(grp, s3, {"e", "(123)", "(132)"});
  auto dc = grp_coslice_dual_closure(j, sign);
  CHECK(dc.object.size() == 2);
  CHECK(coslice_square_is_pushout(j, sign, {z2, s3}, 100000) == Verdict::pass);
}

TEST_CASE("CRing closed forms") {
  auto f2 = zn_ring(2);
  auto F4 = f4();
  auto incl = cring.hom_set(f2, F4, 1000);
  REQUIRE(incl.size() == 1);
  auto d = normal_decomposition(cring, incl[0]);
  CHECK(is_iso(cring, d.nu));
  CHECK(is_iso(cring, d.pi));
  auto red = cring.morphism(zn_ring(4), f2, {0, 1, 0, 1});
  auto dc = normal_dual_closure(cring, red);
  CHECK(dc.object.size() == 2);
  CHECK_THROWS_AS(cring.initial(), InitialNotRepresentable);
  auto po = cring.pushout(cring.to_terminal(zn_ring(4)), red);
  CHECK(po.apex.size() == 1);
  CHECK(is_iso(cring, frobenius(F4)));
}

TEST_CASE("CRing: normal epis are surjections, closure is the identity") {
  auto rings = rings_up_to_4();
  for (const auto& a : rings)
    for (const auto& b : rings)
      for (const auto& f : cring.hom_set(a.object, b.object, 1000)) {
        auto d = normal_decomposition(cring, f);
        CHECK(is_iso(cring, d.nu));
        CHECK(is_normal_epi(cring, f) == is_surjective(f));
        CHECK(compose(d.nu, d.kappa, d.pi) == f);
      }
}
