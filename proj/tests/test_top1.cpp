#include "doctest.h"
#include "normcat/catalogue.hpp"
#include "normcat/setops.hpp"
#include "normcat/slices.hpp"
#include "normcat/top1.hpp"
#include "support.hpp"

using namespace normcat;
using testing::names;
using testing::numbered;

namespace {

const FinSetCategory set_cat;

// Same labels on both sides so that objects line up.
struct Pair {
  SetObj set;
  Space space;
};
Pair discrete(std::size_t n, const std::string& prefix) {
  return {make_set(numbered(n, prefix)), discrete_closure_space(numbered(n, prefix))};
}

Subset single(std::size_t n, std::size_t x) {
  Subset s(n);
  s.set(x);
  return s;
}

// Sierpinski space: "o" open, "c" closed, so cl{o} = {o, c}.
Space sierpinski() {
  Subset o(2);
  o.set();
  return make_closure_space(names({"o", "c"}), {o, single(2, 1)}, false);
}

}  // namespace

TEST_CASE("closure space validation") {
  CHECK_THROWS_AS(make_closure_space(names({"a", "b"}), {single(2, 1), single(2, 1)}, false), ValidationError);
  CHECK_THROWS_AS(make_closure_space(names({"o", "c"}), sierpinski()->point_cl, true), ValidationError);
  // cl{0} = {0,1} but cl{1} = {1,2}: not idempotent.
  Subset a(3), b(3);
  a.set(0), a.set(1);
  b.set(1), b.set(2);
  CHECK_THROWS_AS(make_closure_space(names({"x", "y", "z"}), {a, b, single(3, 2)}, false), ValidationError);
}

TEST_CASE("closure table checks the Kuratowski axioms") {
  auto s = sierpinski();
  std::vector<Subset> table(4, Subset(2));
  for (std::size_t m = 0; m < 4; ++m) {
    Subset x(2);
    for (std::size_t i = 0; i < 2; ++i)
      if (m >> i & 1) x.set(i);
    table[m] = closure_of(s, x);
  }
  CHECK(make_closure_space_from_table(names({"o", "c"}), table, false) == s);
  auto bad = table;
  bad[0].set(1);
  CHECK_THROWS_AS(make_closure_space_from_table(names({"o", "c"}), bad, false), ValidationError);
  // Three points, singletons closed, every pair dense: not additive.
  std::vector<Subset> pairs(8, full_subset(3));
  pairs[0] = Subset(3);
  for (std::size_t x = 0; x < 3; ++x) pairs[std::size_t{1} << x] = single(3, x);
  CHECK_THROWS_AS(make_closure_space_from_table(names({"x", "y", "z"}), pairs, false), ValidationError);
}

TEST_CASE("finite topologies round-trip through closure spaces") {
  for (const auto& t : topologies_up_to(4)) {
    auto s = from_fintop(t);
    CHECK(to_fintop(s) == t);
    bool t1 = true;
    for (std::size_t x = 0; x < s.size(); ++x) t1 = t1 && s->point_cl[x].count() == 1;
    CHECK(s->t1 == t1);
  }
}

TEST_CASE("continuity and embeddings on the Sierpinski space") {
  auto s = sierpinski();
  CHECK(is_continuous(s, s, {1, 1}));
  CHECK(is_continuous(s, s, {0, 1}));
  CHECK_FALSE(is_continuous(s, s, {1, 0}));
  auto pt = discrete_closure_space(names({"*"}));
  CHECK(is_embedding(Arrow<Space>{pt, s, {1}}));
  CHECK(is_embedding(Arrow<Space>{pt, s, {0}}));
  auto two = discrete_closure_space(names({"a", "b"}));
  CHECK_FALSE(is_embedding(Arrow<Space>{two, s, {0, 1}}));
  CHECK(is_continuous(two, s, {0, 1}));
}

TEST_CASE("discrete top1 normal closure matches FinSet") {
  for (std::size_t na = 0; na <= 3; ++na)
    for (std::size_t nb = 1; nb <= 3; ++nb) {
      auto A = discrete(na, "a"), B = discrete(nb, "b");
      setops::for_each_map(na, nb, 1000, [&](const ElemMap& m) {
        auto ts = top1_normal_closure({A.space, B.space, m});
        auto fs = set_cat.morphism(A.set, B.set, m);
        auto gen = generic_normal_closure(set_cat, fs);
        CHECK(image(ts.closure.nu) == image(gen.nu));
        auto po = set_cat.pushout(fs, set_cat.to_terminal(fs.dom));
        CHECK(ts.pushout.apex.size() == po.apex.size());
        CHECK(kernel_classes(ts.pushout.in1.map) == kernel_classes(po.in1.map));
        CHECK(ts.pushout.apex->t1);
      });
    }
}

TEST_CASE("discrete top1 slice operations match FinSet over C") {
  for (std::size_t nc = 1; nc <= 3; ++nc) {
    auto C = discrete(nc, "c");
    SliceCategory<FinSetCategory> ks(set_cat, C.set, ClosurePolicy::generic_first);
    for (std::size_t na = 0; na <= 2; ++na)
      for (std::size_t nb = 1; nb <= 3; ++nb) {
        auto A = discrete(na, "a"), B = discrete(nb, "b");
        setops::for_each_map(nb, nc, 1000, [&](const ElemMap& pm) {
          setops::for_each_map(na, nb, 1000, [&](const ElemMap& fm) {
            Arrow<Space> f{A.space, B.space, fm}, p{B.space, C.space, pm};
            auto ps = set_cat.morphism(B.set, C.set, pm);
            auto fs = set_cat.morphism(A.set, B.set, fm);
            auto fl = ks.lift(fs, ks.object(compose(ps, fs)), ks.object(ps));
            auto gen = generic_normal_closure(ks, fl);
            auto nc_top = top1_slice_normal_closure(f, p);
            CHECK(image(nc_top.nu) == image(underlying(gen.nu)));
            CHECK(top1_slice_normal_mono_test(f, p) == is_iso(ks, gen.hat));
            auto dual = generic_normal_dual_closure(ks, fl);
            CHECK(top1_slice_comparison_test(f, p) == (is_iso(ks, gen.nu) && is_iso(ks, dual.pi)));
          });
        });
      }
  }
}

TEST_CASE("discrete top1 coslice dual closure matches FinSet under C") {
  for (std::size_t nc = 0; nc <= 2; ++nc) {
    auto C = discrete(nc, "c");
    CosliceCategory<FinSetCategory> kc(set_cat, C.set, ClosurePolicy::generic_first);
    for (std::size_t na = 1; na <= 3; ++na)
      for (std::size_t nb = 1; nb <= 3; ++nb) {
        auto A = discrete(na, "a"), B = discrete(nb, "b");
        setops::for_each_map(nc, na, 1000, [&](const ElemMap& jm) {
          setops::for_each_map(na, nb, 1000, [&](const ElemMap& fm) {
            auto js = set_cat.morphism(C.set, A.set, jm);
            auto fs = set_cat.morphism(A.set, B.set, fm);
            auto fl = kc.lift(fs, kc.object(js), kc.object(compose(fs, js)));
            auto gen = generic_normal_dual_closure(kc, fl);
            auto top = top1_coslice_dual_closure({C.space, A.space, jm}, {A.space, B.space, fm});
            CHECK(kernel_classes(top.pi.map) == kernel_classes(underlying(gen.pi).map));
            CHECK(compose(top.check, top.pi).map == fm);
          });
        });
      }
  }
}

TEST_CASE("discrete slice pushout matches the FinSet pushout") {
  for (std::size_t nc = 1; nc <= 3; ++nc)
    for (std::size_t nb = 1; nb <= 3; ++nb) {
      auto B = discrete(nb, "b"), C = discrete(nc, "c");
      for (std::size_t mask = 0; mask < (std::size_t{1} << nb); ++mask) {
        ElemMap incl;
        for (std::size_t b = 0; b < nb; ++b)
          if (mask >> b & 1) incl.push_back(static_cast<Elem>(b));
        auto A = discrete(incl.size(), "a");
        setops::for_each_map(nb, nc, 1000, [&](const ElemMap& pm) {
          Arrow<Space> i{A.space, B.space, incl}, p{B.space, C.space, pm};
          auto po = top1_slice_pushout(i, p);
          CHECK(slice_pushout_fibres_hold(po, i, p));
          auto is = set_cat.morphism(A.set, B.set, incl);
          auto ps = set_cat.morphism(B.set, C.set, pm);
          auto ref = set_cat.pushout(is, compose(ps, is));
          CHECK(po.cocone.apex.size() == ref.apex.size());
          CHECK(compose(po.cocone.in1, i).map == compose(po.cocone.in2, compose(p, i)).map);
          CHECK(po.cocone.apex->t1);
          // D agrees with the slice normal closure of the inclusion.
          CHECK(po.D == image(top1_slice_normal_closure(i, p).nu));
        });
      }
    }
}

TEST_CASE("slice closure formula on non-T1 spaces is closed and contains f(A)") {
  auto spaces = topologies_up_to(3);
  std::size_t runs = 0;
  for (const auto& tb : spaces)
    for (const auto& tc : spaces) {
      auto B = from_fintop(tb), C = from_fintop(tc);
      for (std::size_t mask = 0; mask < (std::size_t{1} << B.size()); ++mask) {
        auto i = subspace_inclusion(B, [&] {
          Subset s(B.size());
          for (std::size_t b = 0; b < B.size(); ++b)
            if (mask >> b & 1) s.set(b);
          return s;
        }());
        setops::for_each_map(B.size(), C.size(), 1000, [&](const ElemMap& pm) {
          if (!is_continuous(B, C, pm)) return;
          Arrow<Space> p{B, C, pm};
          auto n = top1_slice_normal_closure(i, p);
          Subset ns = image(n.nu);
          CHECK(is_closed_in(B, ns));
          CHECK(image(i).is_subset_of(ns));
          CHECK(is_embedding(n.nu));
          auto po = top1_slice_pushout(i, p);
          CHECK(is_continuous(B, po.cocone.apex, po.cocone.in1.map));
          CHECK(is_continuous(C, po.cocone.apex, po.cocone.in2.map));
          ++runs;
        });
      }
    }
  CHECK(runs > 1000);
}

TEST_CASE("top1 normal closure on the Sierpinski space collapses the closure") {
  auto s = sierpinski();
  auto pt = discrete_closure_space(names({"*"}));
  auto open_pt = top1_normal_closure({pt, s, {0}});
  CHECK(open_pt.closure.object.size() == 2);
  CHECK(open_pt.pushout.apex.size() == 1);
  auto closed_pt = top1_normal_closure({pt, s, {1}});
  CHECK(closed_pt.closure.object.size() == 1);
  CHECK(closed_pt.pushout.apex.size() == 2);
  auto empty = top1_normal_closure({discrete_closure_space({}), s, {}});
  CHECK(empty.closure.object.size() == 0);
  CHECK(empty.pushout.apex.size() == 3);
  CHECK(is_continuous(s, empty.pushout.apex, empty.pushout.in1.map));
}

TEST_CASE("discrete slice normal monos compose") {
  std::size_t pairs = 0;
  for (std::size_t nc = 1; nc <= 2; ++nc)
    for (std::size_t nd = 1; nd <= 3; ++nd)
      for (std::size_t nb = 0; nb <= 3; ++nb)
        for (std::size_t na = 0; na <= nb; ++na) {
          auto A = discrete(na, "a"), B = discrete(nb, "b"), C = discrete(nc, "c"), D = discrete(nd, "d");
          setops::for_each_map(nd, nc, 1000, [&](const ElemMap& pm) {
            Arrow<Space> p{D.space, C.space, pm};
            setops::for_each_map(nb, nd, 1000, [&](const ElemMap& gm) {
              Arrow<Space> g{B.space, D.space, gm};
              if (!top1_slice_normal_mono_test(g, p)) return;
              auto pg = compose(p, g);
              setops::for_each_map(na, nb, 1000, [&](const ElemMap& fm) {
                Arrow<Space> f{A.space, B.space, fm};
                if (!top1_slice_normal_mono_test(f, pg)) return;
                CHECK(top1_slice_normal_mono_test(compose(g, f), p));
                ++pairs;
              });
            });
          });
        }
  CHECK(pairs > 100);
}
