#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normcat/algebra.hpp"
#include "normcat/finset.hpp"
#include "normcat/slices.hpp"
#include "normcat/top1.hpp"

// Instance documents: a JSON description of objects and morphisms of one
// instance, optionally wrapped as a slice or coslice.
//
//   {"kind": "grp",
//    "objects":   {"A": {"carrier": [...], "op": [[...]], "unit": "e"}},
//    "morphisms": {"f": {"from": "A", "to": "B", "map": [...]}},
//    "slice":     {"side": "over", "object": "C", "structure": {"A": "p"}}}
//
// Elements are written by label everywhere; tables are row-major over the
// carrier order.

namespace normcat::doc {

using Labels = std::vector<std::string>;
using LabelTable = std::vector<Labels>;

struct ObjectDoc {
  ObjectDoc() = default;
  explicit ObjectDoc(Labels c) : carrier(std::move(c)) {}

  Labels carrier;
  std::optional<LabelTable> op;   // cmon, ab, grp
  std::optional<std::string> unit;
  std::optional<LabelTable> add;  // cring
  std::optional<LabelTable> mul;
  std::optional<std::string> zero;
  std::optional<std::string> one;
  std::optional<std::string> base;              // pointed-set
  std::optional<std::vector<Labels>> opens;     // top
  std::optional<std::vector<Labels>> closure;   // top1: cl{x} per point
  std::optional<bool> t1;                       // top1, default true
  bool operator==(const ObjectDoc&) const = default;
};

struct MorphismDoc {
  std::string from;
  std::string to;
  Labels map;
  bool operator==(const MorphismDoc&) const = default;
};

struct SliceDoc {
  Side side = Side::over;
  std::string object;
  std::vector<std::pair<std::string, std::string>> structure;  // object → morphism
  bool operator==(const SliceDoc&) const = default;
};

struct InstanceDoc {
  std::string kind;
  std::vector<std::pair<std::string, ObjectDoc>> objects;
  std::vector<std::pair<std::string, MorphismDoc>> morphisms;
  std::optional<SliceDoc> slice;
  bool operator==(const InstanceDoc&) const = default;

  const ObjectDoc& object(const std::string& name) const;
  const MorphismDoc& morphism(const std::string& name) const;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

const std::vector<std::string>& kinds();

// Syntax errors raise ParseError with a 1-based line and column. Shape
// errors (missing fields, unknown names) raise ValidationError with a JSON
// pointer to the offending value.
InstanceDoc parse(std::string_view text);
// One document per line, as written by render_stream.
std::vector<InstanceDoc> parse_stream(std::string_view text);
// indent < 0 gives a single line.
std::string render_doc(const InstanceDoc& d, int indent = 2);
std::string render_stream(const std::vector<InstanceDoc>& docs);

// ---------------------------------------------------------------- realizing

template <class Object>
struct Realized {
  std::vector<std::pair<std::string, Object>> objects;
  std::vector<std::pair<std::string, Arrow<Object>>> morphisms;

  const Object& object(const std::string& name) const {
    for (const auto& [n, o] : objects)
      if (n == name) return o;
    throw ValidationError("unknown object '" + name + "'");
  }
  const Arrow<Object>& morphism(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
      if (n == name) return m;
    throw ValidationError("unknown morphism '" + name + "'");
  }
};

// Each checks d.kind and runs the instance's constructor validation.
Realized<SetObj> realize_set(const InstanceDoc& d);
Realized<PointedObj> realize_pointed(const InstanceDoc& d);
Realized<TopObj> realize_top(const InstanceDoc& d);
Realized<Space> realize_top1(const InstanceDoc& d);
Realized<Alg> realize_algebra(const InstanceDoc& d);  // cmon, ab, grp, cring

ObjectDoc object_doc(const SetObj& x);
ObjectDoc object_doc(const PointedObj& x);
ObjectDoc object_doc(const TopObj& x);
ObjectDoc object_doc(const Space& x);
ObjectDoc object_doc(const Alg& x);

template <class Object>
MorphismDoc morphism_doc(const std::string& from, const std::string& to, const Arrow<Object>& f) {
  MorphismDoc m{from, to, {}};
  for (Elem x : f.map) m.map.push_back(f.cod.label(x));
  return m;
}

// ---------------------------------------------------------------- random

// Random documents with a morphism "f" : A → B. With side = over they also
// carry p : B → C and q = p∘f; with side = under, j : C → A and k = f∘j.
struct RandomOptions {
  std::string kind;
  std::uint32_t seed = 0;
  std::size_t count = 1;
  std::size_t max_carrier = 4;
  std::optional<Side> slice;
};
std::vector<InstanceDoc> random_docs(const RandomOptions& o);

}  // namespace normcat::doc
