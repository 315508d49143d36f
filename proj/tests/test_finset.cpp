#include "doctest.h"
#include "normcat/finset.hpp"
#include "normcat/functoriality.hpp"
#include "normcat/morphism_classes.hpp"
#include "normcat/orthogonality.hpp"
#include "support.hpp"

using namespace normcat;
using testing::names;

namespace {

const FinSetCategory set_cat;
const PointedSetCategory pt_cat;
const FinTopCategory top_cat;

SetObj S(std::initializer_list<const char*> xs) { return make_set(names(xs)); }

TopObj sierpinski() {
  // open point "o", closed point "c"
  Subset o(2), all(2);
  o.set(0);
  all.set();
  return make_space(names({"o", "c"}), {Subset(2), o, all});
}

TopObj indiscrete2() { return make_space(names({"p", "q"}), {Subset(2), full_subset(2)}); }

}  // namespace

TEST_CASE("FinSet normal closure of a point into two points is the image") {
  auto f = set_cat.morphism(S({"a"}), S({"x", "y"}), {0});
  auto nc = normal_closure(set_cat, f);
  CHECK(nc.object.labels() == names({"x"}));
  auto eq = normal_closure_via_equalizer(set_cat, f);
  CHECK(same_subobject(nc.nu, eq.nu));
}

TEST_CASE("FinSet pushout of a point along the bang has an x-class and y") {
  auto f = set_cat.morphism(S({"a"}), S({"x", "y"}), {0});
  auto po = set_cat.pushout(f, set_cat.to_terminal(f.dom));
  CHECK(po.apex.size() == 2);
  CHECK(po.in1.map[0] == po.in2.map[0]);
  CHECK(po.in1.map[1] != po.in2.map[0]);
  CHECK(testing::pushout_universal(set_cat, f, set_cat.to_terminal(f.dom), po, {S({"0", "1"}), S({"0", "1", "2"})}));
}

TEST_CASE("FinSet equalizer of maps differing on one point") {
  auto two = S({"a", "b"});
  auto e = set_cat.equalizer(set_cat.morphism(two, two, {0, 1}), set_cat.morphism(two, two, {0, 0}));
  CHECK(e.dom.labels() == names({"a"}));
  CHECK(e.map == ElemMap{0});
}

TEST_CASE("FinSet pushout of 1 <- 1 -> 1 is 1") {
  auto one = S({"*"});
  auto po = set_cat.pushout(identity(one), identity(one));
  CHECK(po.apex.size() == 1);
}

TEST_CASE("FinSet decomposition of a collapsing map") {
  auto f = set_cat.morphism(S({"a", "b"}), S({"x"}), {0, 0});
  auto d = normal_decomposition(set_cat, f);
  CHECK(is_iso(set_cat, d.pi));
  CHECK(is_iso(set_cat, d.nu));
  CHECK(is_surjective(d.kappa));
  CHECK_FALSE(is_injective(d.kappa));
  CHECK(compose(d.nu, d.kappa, d.pi) == f);
}

TEST_CASE("FinSet normal monos are the injections and normal epis the bijections") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      auto a = make_set(testing::numbered(n, "a"));
      auto b = make_set(testing::numbered(m, "b"));
      for (const auto& f : set_cat.hom_set(a, b, 1000)) {
        CHECK(is_normal_mono(set_cat, f) == is_injective(f));
        CHECK(is_normal_epi(set_cat, f) == is_bijective(f));
        CHECK(is_mono(set_cat, f) == is_injective(f));
        CHECK(is_epi(set_cat, f) == is_surjective(f));
      }
    }
  }
}

TEST_CASE("FinSet surjection 2 -> 1 is a regular epi") {
  auto f = set_cat.morphism(S({"a", "b"}), S({"x"}), {0, 0});
  CHECK(is_regular_epi(set_cat, f));
  CHECK_FALSE(is_regular_mono(set_cat, f));
}

TEST_CASE("FinSet pullbacks satisfy the universal property") {
  auto two = S({"0", "1"});
  auto one = S({"*"});
  auto k = set_cat.morphism(two, one, {0, 0});
  auto pb = set_cat.pullback(k, k);
  CHECK(pb.apex.size() == 4);
  CHECK(testing::pullback_universal(set_cat, k, k, pb, {one, two, S({"a", "b", "c"})}));
}

TEST_CASE("pointed dual closure collapses the fibre over the base point") {
  auto A = make_pointed(names({"a0", "a1", "a2", "a3"}), 0);
  auto B = make_pointed(names({"b0", "b1"}), 0);
  auto f = pt_cat.morphism(A, B, {0, 0, 1, 0});
  auto dc = normal_dual_closure(pt_cat, f);
  // 1 + |A \ f⁻¹b| = 2
  CHECK(dc.object.size() == 2);
  CHECK(dc.pi.map == ElemMap{0, 0, 1, 0});
  CHECK(is_iso(pt_cat, dc.check));
}

TEST_CASE("pointed normal epis are surjections injective off the base fibre") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      auto a = make_pointed(testing::numbered(n, "a"), 0);
      auto b = make_pointed(testing::numbered(m, "b"), 0);
      for (const auto& f : pt_cat.hom_set(a, b, 1000)) {
        bool oracle = is_surjective(f);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = x + 1; y < n; ++y)
            if (f.map[x] == f.map[y] && f.map[x] != 0) oracle = false;
        CHECK(is_normal_epi(pt_cat, f) == oracle);
        CHECK(is_normal_mono(pt_cat, f) == is_injective(f));
      }
    }
  }
}

TEST_CASE("FinTop closure is the image subspace") {
  auto f = top_cat.morphism(make_space(names({"a"}), {Subset(1), full_subset(1)}), indiscrete2(), {0});
  auto nc = normal_closure(top_cat, f);
  CHECK(nc.object.size() == 1);

  auto g = top_cat.morphism(discrete_space(names({"a"})), sierpinski(), {0});
  auto ng = normal_closure(top_cat, g);
  CHECK(render_subset(ng.nu) == "{o}");
}

TEST_CASE("FinTop iso needs a continuous inverse") {
  auto d = discrete_space(names({"p", "q"}));
  auto f = top_cat.morphism(d, indiscrete2(), {0, 1});
  CHECK(is_bijective(f));
  CHECK_FALSE(is_iso(top_cat, f));
  auto nc = normal_closure(top_cat, f);
  CHECK(is_iso(top_cat, nc.nu));
}

TEST_CASE("FinTop pushout topology is final") {
  auto s = sierpinski();
  auto po = top_cat.pushout(identity(s), identity(s));
  CHECK(is_iso(top_cat, po.in1));
  auto pt = discrete_space(names({"*"}));
  auto incl = top_cat.morphism(pt, s, {1});
  auto q = top_cat.pushout(incl, top_cat.to_terminal(pt));
  CHECK(testing::pushout_universal(top_cat, incl, top_cat.to_terminal(pt), q, {s, indiscrete2()}));
}

TEST_CASE("orthogonality in FinSet") {
  auto e = set_cat.morphism(S({"a", "b"}), S({"x"}), {0, 0});
  auto m = set_cat.morphism(S({"x"}), S({"p", "q"}), {0});
  CHECK(is_orthogonal(set_cat, e, m));
  CHECK(is_orthogonal(set_cat, identity(e.dom), identity(e.dom)));
  CHECK_FALSE(is_orthogonal(set_cat, m, m));
}

TEST_CASE("reflection property in FinSet") {
  auto f = set_cat.morphism(S({"a"}), S({"x", "y"}), {0});
  auto m = set_cat.morphism(S({"x"}), f.cod, {0});
  auto u = set_cat.morphism(f.dom, m.dom, {0});
  std::vector<ReflectionProbe<FinSetCategory>> probes{{m, u, identity(f.cod)}};
  CHECK(check_reflection_property(set_cat, f, probes) == Verdict::pass);
  auto nc = normal_closure(set_cat, f);
  probes = {{nc.nu, nc.hat, identity(f.cod)}};
  CHECK(check_reflection_property(set_cat, f, probes) == Verdict::pass);
}

TEST_CASE("naturality in FinSet with a corrupted kappa") {
  auto A = S({"a", "b"});
  auto B = S({"x", "y", "z"});
  auto f = set_cat.morphism(A, B, {0, 0});
  Square<SetObj> sq{identity(A), f, f, identity(B)};
  CHECK(check_naturality(set_cat, sq).ok);
  auto df = normal_decomposition(set_cat, f);
  auto bad = df;
  bad.kappa.map[0] = 0;
  auto g = set_cat.morphism(A, B, {0, 1});
  Square<SetObj> sq2{identity(A), g, g, identity(B)};
  auto dg = normal_decomposition(set_cat, g);
  auto broken = dg;
  broken.kappa.map = {1, 0};
  auto r = check_naturality(set_cat, sq2, dg, broken);
  CHECK_FALSE(r.ok);
  CHECK(r.violated == "alpha-factorization");
}

TEST_CASE("normal closure factorization of Set passes the o.f.s. checks") {
  std::vector<Arrow<SetObj>> sample;
  std::vector<SetObj> objs{S({}), S({"a"}), S({"a", "b"}), S({"a", "b", "c"})};
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : set_cat.hom_set(x, y, 1000)) sample.push_back(f);
  // Left class: maps whose normal closure is an iso.
  ClassSpec<FinSetCategory> left{"closure-iso", [](const Arrow<SetObj>& f) {
                                   return is_iso(set_cat, normal_closure(set_cat, f).nu);
                                 }};
  auto r = verify_ofs(set_cat, left, normal_mono_class(set_cat), sample, closure_factorizer(set_cat));
  CHECK(r.ok());
  CHECK_FALSE(r.findings.empty());
}

TEST_CASE("repleteness probes separate the two sides") {
  auto b = S({"a", "b"}), c = S({"x", "y", "z"});
  // Class of maps sending the first element to the first element: not
  // closed under post-composition with isos, but closed under pre-composition
  // for maps out of a one-point set.
  ClassSpec<FinSetCategory> pinned{"pinned", [](const Arrow<SetObj>& f) { return f.map.empty() || f.map[0] == 0; }};
  Arrow<SetObj> f{S({"p"}), c, {0}};
  CHECK(repleteness_probe(set_cat, pinned, f, RepleteSide::left_only).has_value());
  CHECK_FALSE(repleteness_probe(set_cat, pinned, f, RepleteSide::right_only).has_value());
  CHECK(repleteness_probe(set_cat, pinned, f, RepleteSide::both).has_value());
  Arrow<SetObj> g{b, c, {0, 0}};
  CHECK(repleteness_probe(set_cat, pinned, g, RepleteSide::left_only).has_value());
  CHECK_FALSE(repleteness_probe(set_cat, pinned, g, RepleteSide::right_only).has_value());
  // The normal classes are replete on both sides.
  for (const auto& h : set_cat.hom_set(b, c, 100)) {
    CHECK_FALSE(repleteness_probe(set_cat, normal_mono_class(set_cat), h).has_value());
    CHECK_FALSE(repleteness_probe(set_cat, normal_epi_class(set_cat), h).has_value());
  }
}
