#include "doctest.h"
#include "normcat/catalogue.hpp"
#include "normcat/setops.hpp"
#include "normcat/spans.hpp"
#include "support.hpp"

using namespace normcat;
using testing::numbered;

namespace {

const FinSetCategory set_cat;
const AbCategory ab_cat;
const CMonCategory cmon_cat;

SetObj S(std::size_t n, const std::string& prefix) { return make_set(numbered(n, prefix)); }

std::vector<Alg> small_abelian(std::size_t max_order) {
  std::vector<Alg> out;
  for (const auto& n : abelian_groups_up_to_8())
    if (n.object.size() <= max_order) out.push_back(n.object);
  return out;
}

}  // namespace

TEST_CASE("span of identities goes to the cospan of identities") {
  auto x = S(3, "x");
  Span<SetObj> s{identity(x), identity(x)};
  auto c = po_of_span(set_cat, s);
  CHECK(c.apex().size() == 3);
  CHECK(is_iso(set_cat, c.p));
  CHECK(c.p == c.q);
  CHECK(is_doolittle_span(set_cat, s));
}

TEST_CASE("Ab span (id, id) on Z2 has pushout Z2") {
  auto z2 = cyclic_group(2);
  auto c = po_of_span(ab_cat, Span<Alg>{identity(z2), identity(z2)});
  CHECK(c.apex().size() == 2);
}

TEST_CASE("FinSet cospan 2 -> 1 <- 2 pulls back to four points") {
  auto two = S(2, "x"), one = S(1, "*");
  auto s = pb_of_cospan(set_cat, Cospan<SetObj>{set_cat.morphism(two, one, {0, 0}), set_cat.morphism(two, one, {0, 0})});
  CHECK(s.apex().size() == 4);
  CHECK(is_doolittle_cospan(set_cat, Cospan<SetObj>{set_cat.morphism(two, one, {0, 0}), set_cat.morphism(two, one, {0, 0})}));
}

TEST_CASE("Ab zero span on Z2 is not Doolittle") {
  auto z2 = cyclic_group(2);
  auto zero = ab_cat.morphism(z2, z2, {0, 0});
  Span<Alg> s{zero, zero};
  CHECK_FALSE(is_doolittle_span(ab_cat, s));
  CHECK_FALSE(ab_doolittle_span(s));
}

TEST_CASE("Ab Doolittle closed forms agree with eta and eps on small groups") {
  auto gs = small_abelian(4);
  std::size_t spans = 0, cospans = 0, doolittle = 0;
  for (const auto& x : gs)
    for (const auto& y : gs)
      for (const auto& a : gs)
        for (const auto& u : ab_cat.hom_set(a, x, 1000))
          for (const auto& v : ab_cat.hom_set(a, y, 1000)) {
            Span<Alg> s{u, v};
            bool closed = ab_doolittle_span(s);
            CHECK(closed == is_doolittle_span(ab_cat, s));
            if (is_injective(u)) CHECK(closed);
            doolittle += closed;
            ++spans;
          }
  for (const auto& x : gs)
    for (const auto& y : gs)
      for (const auto& b : gs)
        for (const auto& p : ab_cat.hom_set(x, b, 1000))
          for (const auto& q : ab_cat.hom_set(y, b, 1000)) {
            Cospan<Alg> c{p, q};
            bool closed = ab_doolittle_cospan(c);
            CHECK(closed == is_doolittle_cospan(ab_cat, c));
            if (is_surjective(p)) CHECK(closed);
            ++cospans;
          }
  CHECK(spans > 500);
  CHECK(cospans > 500);
  CHECK(doolittle > 0);
  CHECK(doolittle < spans);
}

TEST_CASE("pushout and pullback are idempotent up to iso") {
  auto gs = small_abelian(4);
  for (const auto& x : gs)
    for (const auto& a : gs)
      for (const auto& u : ab_cat.hom_set(a, x, 1000))
        for (const auto& v : ab_cat.hom_set(a, x, 1000)) {
          CHECK(po_idempotent_on(ab_cat, Span<Alg>{u, v}));
          // u, v : a → x also form a cospan into x.
          CHECK(pb_idempotent_on(ab_cat, Cospan<Alg>{u, v}));
        }
  for (std::size_t na = 0; na <= 2; ++na)
    for (std::size_t nx = 1; nx <= 2; ++nx)
      setops::for_each_map(na, nx, 100, [&](const ElemMap& um) {
        setops::for_each_map(na, nx, 100, [&](const ElemMap& vm) {
          auto a = S(na, "a"), x = S(nx, "x");
          Span<SetObj> s{set_cat.morphism(a, x, um), set_cat.morphism(a, x, vm)};
          CHECK(po_idempotent_on(set_cat, s));
          CHECK(pb_idempotent_on(set_cat, Cospan<SetObj>{s.u, s.v}));
        });
      });
}

TEST_CASE("eta over a terminal leg is the normal closure comparison") {
  for (std::size_t na = 0; na <= 3; ++na)
    for (std::size_t nb = 1; nb <= 3; ++nb)
      setops::for_each_map(na, nb, 100, [&](const ElemMap& m) {
        CHECK(eta_matches_normal_closure(set_cat, set_cat.morphism(S(na, "a"), S(nb, "b"), m)));
      });
  auto gs = small_abelian(4);
  for (const auto& a : gs)
    for (const auto& b : gs)
      for (const auto& f : ab_cat.hom_set(a, b, 1000)) {
        CHECK(eta_matches_normal_closure(ab_cat, f));
        CHECK(eps_matches_dual_closure(ab_cat, f));
      }
  for (const auto& a : commutative_monoids(3))
    for (const auto& b : commutative_monoids(3))
      for (const auto& f : cmon_cat.hom_set(a.object, b.object, 1000)) CHECK(eta_matches_normal_closure(cmon_cat, f));
}
