#include <fstream>
#include <sstream>

#include "doctest.h"
#include "normcat/closure.hpp"
#include "normcat/doc.hpp"
#include "normcat/setops.hpp"
#include "normcat/slices.hpp"

using namespace normcat;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(NORMCAT_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::optional<Side>> sides() { return {std::nullopt, Side::over, Side::under}; }

std::size_t line_of(const std::string& text) {
  try {
    doc::parse(text);
  } catch (const doc::ParseError& e) {
    return e.line() * 1000 + e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("random documents survive a render/parse round trip") {
  for (const auto& kind : doc::kinds()) {
    for (auto side : sides()) {
      CAPTURE(kind);
      auto docs = doc::random_docs({kind, 17, 12, 4, side});
      REQUIRE(docs.size() == 12);
      for (const auto& d : docs) {
        CHECK(doc::parse(doc::render_doc(d)) == d);
        CHECK(doc::parse(doc::render_doc(d, -1)) == d);
      }
      CHECK(doc::parse_stream(doc::render_stream(docs)) == docs);
    }
  }
}

TEST_CASE("random documents realize through the instance constructors") {
  for (auto side : sides()) {
    for (const auto& d : doc::random_docs({"set", 3, 10, 4, side})) CHECK_NOTHROW(doc::realize_set(d));
    for (const auto& d : doc::random_docs({"pointed-set", 3, 10, 4, side})) CHECK_NOTHROW(doc::realize_pointed(d));
    for (const auto& d : doc::random_docs({"top", 3, 10, 4, side})) CHECK_NOTHROW(doc::realize_top(d));
    for (const auto& d : doc::random_docs({"top1", 3, 10, 4, side})) CHECK_NOTHROW(doc::realize_top1(d));
    for (const char* k : {"cmon", "ab", "grp", "cring"})
      for (const auto& d : doc::random_docs({k, 3, 10, 4, side})) CHECK_NOTHROW(doc::realize_algebra(d));
  }
}

TEST_CASE("random documents are a function of the seed") {
  CHECK(doc::render_stream(doc::random_docs({"grp", 9, 5})) == doc::render_stream(doc::random_docs({"grp", 9, 5})));
  CHECK(doc::render_stream(doc::random_docs({"grp", 9, 5})) != doc::render_stream(doc::random_docs({"grp", 10, 5})));
  CHECK(doc::random_docs({"ab", 0, 0}).empty());
  CHECK(doc::render_stream({}).empty());
  CHECK_THROWS_AS(doc::random_docs({"rings", 0, 1}), ValidationError);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(line_of("{\"kind\": \"set\",\n  \"objects\": {,}}") == 2015);
  CHECK(line_of("{\"kind\": \"set\"") == 1015);
  try {
    doc::parse_stream("{\"kind\":\"set\",\"objects\":{},\"morphisms\":{}}\n{\"kind\": x}\n");
    FAIL("expected a parse error");
  } catch (const doc::ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("shape errors are validation errors") {
  CHECK_THROWS_AS(doc::parse("[]"), ValidationError);
  CHECK_THROWS_AS(doc::parse("{\"kind\":\"set\",\"objects\":{},\"morphisms\":{},\"extra\":1}"), ValidationError);
  CHECK_THROWS_AS(doc::parse("{\"kind\":\"set\",\"objects\":{\"A\":{}},\"morphisms\":{}}"), ValidationError);
  CHECK_THROWS_AS(doc::parse("{\"kind\":\"set\",\"objects\":{\"A\":{\"carrier\":[\"a\"]}},"
                             "\"morphisms\":{\"f\":{\"from\":\"A\",\"to\":\"B\",\"map\":[\"a\"]}}}"),
                  ValidationError);
  // a map that is not a homomorphism
  auto d = doc::parse(slurp("grp_z2_s3.json"));
  d.morphisms[0].second.map = {"(12)", "e"};
  CHECK_THROWS_AS(doc::realize_algebra(d), ValidationError);
  // a label outside the codomain
  d.morphisms[0].second.map = {"e", "(1234)"};
  CHECK_THROWS_AS(doc::realize_algebra(d), ValidationError);
}

TEST_CASE("sample documents decompose as expected") {
  const GrpCategory k;
  {
    auto real = doc::realize_algebra(doc::parse(slurp("grp_z2_s3.json")));
    auto d = normal_decomposition(k, real.morphism("f"));
    CHECK(d.N.size() == 6);
  }
  {
    auto d = doc::parse(slurp("grp_sign_slice.json"));
    auto real = doc::realize_algebra(d);
    SliceCategory<GrpCategory> ks(k, real.object("C"));
    auto a = ks.object(real.morphism("q"));
    auto b = ks.object(real.morphism("p"));
    auto f = ks.lift(real.morphism("f"), a, b);
    auto nc = normal_closure(ks, f);
    CHECK(nc.nu.dom.size() == 2);
    CHECK(nc.nu.dom.structure.dom.size() == 2);
    auto tau = tau_comparison(ks, f);
    CHECK_FALSE(is_iso(k, tau));
    CHECK(tau.dom.size() == 2);
    CHECK(tau.cod.size() == 6);
  }
  {
    auto real = doc::realize_algebra(doc::parse(slurp("grp_identity.json")));
    auto d = normal_decomposition(k, real.morphism("id"));
    CHECK(is_iso(k, d.pi));
    CHECK(is_iso(k, d.kappa));
    CHECK(is_iso(k, d.nu));
  }
}
