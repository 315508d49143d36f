#include "normcat/doc.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "normcat/random.hpp"

namespace normcat::doc {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void shape(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) shape(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) shape(where, "missing field '" + key + "'");
  return *it;
}

std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) shape(where, "expected a string");
  return j.get<std::string>();
}

Labels labels_of(const json& j, const std::string& where) {
  if (!j.is_array()) shape(where, "expected an array of labels");
  Labels out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_of(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::vector<Labels> rows_of(const json& j, const std::string& where) {
  if (!j.is_array()) shape(where, "expected an array of arrays");
  std::vector<Labels> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(labels_of(j[i], where + "/" + std::to_string(i)));
  return out;
}

void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      shape(where, "unexpected field '" + it.key() + "'");
}

ObjectDoc object_from(const json& j, const std::string& where) {
  check_keys(j, {"carrier", "op", "unit", "add", "mul", "zero", "one", "base", "opens", "closure", "t1"}, where);
  ObjectDoc o;
  o.carrier = labels_of(field(j, "carrier", where), where + "/carrier");
  auto opt_rows = [&](const char* key, std::optional<std::vector<Labels>>& slot) {
    if (j.contains(key)) slot = rows_of(j[key], where + "/" + key);
  };
  auto opt_string = [&](const char* key, std::optional<std::string>& slot) {
    if (j.contains(key)) slot = string_of(j[key], where + "/" + key);
  };
  opt_rows("op", o.op);
  opt_string("unit", o.unit);
  opt_rows("add", o.add);
  opt_rows("mul", o.mul);
  opt_string("zero", o.zero);
  opt_string("one", o.one);
  opt_string("base", o.base);
  opt_rows("opens", o.opens);
  opt_rows("closure", o.closure);
  if (j.contains("t1")) {
    if (!j["t1"].is_boolean()) shape(where + "/t1", "expected true or false");
    o.t1 = j["t1"].get<bool>();
  }
  return o;
}

json object_to(const ObjectDoc& o) {
  json j;
  j["carrier"] = o.carrier;
  if (o.op) j["op"] = *o.op;
  if (o.unit) j["unit"] = *o.unit;
  if (o.add) j["add"] = *o.add;
  if (o.mul) j["mul"] = *o.mul;
  if (o.zero) j["zero"] = *o.zero;
  if (o.one) j["one"] = *o.one;
  if (o.base) j["base"] = *o.base;
  if (o.opens) j["opens"] = *o.opens;
  if (o.closure) j["closure"] = *o.closure;
  if (o.t1) j["t1"] = *o.t1;
  return j;
}

InstanceDoc doc_from(const json& j) {
  if (!j.is_object()) shape("/", "expected an object");
  check_keys(j, {"kind", "objects", "morphisms", "slice"}, "/");
  InstanceDoc d;
  d.kind = string_of(field(j, "kind", "/"), "/kind");
  if (std::find(kinds().begin(), kinds().end(), d.kind) == kinds().end())
    shape("/kind", "unknown kind '" + d.kind + "'");
  const auto& objs = field(j, "objects", "/");
  if (!objs.is_object()) shape("/objects", "expected an object");
  for (auto it = objs.begin(); it != objs.end(); ++it)
    d.objects.emplace_back(it.key(), object_from(it.value(), "/objects/" + it.key()));
  if (j.contains("morphisms")) {
    const auto& mors = j["morphisms"];
    if (!mors.is_object()) shape("/morphisms", "expected an object");
    for (auto it = mors.begin(); it != mors.end(); ++it) {
      const std::string where = "/morphisms/" + it.key();
      check_keys(it.value(), {"from", "to", "map"}, where);
      MorphismDoc m{string_of(field(it.value(), "from", where), where + "/from"),
                    string_of(field(it.value(), "to", where), where + "/to"),
                    labels_of(field(it.value(), "map", where), where + "/map")};
      d.morphisms.emplace_back(it.key(), std::move(m));
    }
  }
  if (j.contains("slice")) {
    const auto& s = j["slice"];
    check_keys(s, {"side", "object", "structure"}, "/slice");
    SliceDoc sd;
    auto side = string_of(field(s, "side", "/slice"), "/slice/side");
    if (side == "over") sd.side = Side::over;
    else if (side == "under") sd.side = Side::under;
    else shape("/slice/side", "expected \"over\" or \"under\"");
    sd.object = string_of(field(s, "object", "/slice"), "/slice/object");
    const auto& st = field(s, "structure", "/slice");
    if (!st.is_object()) shape("/slice/structure", "expected an object");
    for (auto it = st.begin(); it != st.end(); ++it)
      sd.structure.emplace_back(it.key(), string_of(it.value(), "/slice/structure/" + it.key()));
    d.slice = std::move(sd);
  }
  // Names must resolve.
  auto has_object = [&](const std::string& n) {
    return std::any_of(d.objects.begin(), d.objects.end(), [&](const auto& p) { return p.first == n; });
  };
  auto has_morphism = [&](const std::string& n) {
    return std::any_of(d.morphisms.begin(), d.morphisms.end(), [&](const auto& p) { return p.first == n; });
  };
  for (const auto& [n, m] : d.morphisms) {
    if (!has_object(m.from)) shape("/morphisms/" + n + "/from", "unknown object '" + m.from + "'");
    if (!has_object(m.to)) shape("/morphisms/" + n + "/to", "unknown object '" + m.to + "'");
  }
  if (d.slice) {
    if (!has_object(d.slice->object)) shape("/slice/object", "unknown object '" + d.slice->object + "'");
    for (const auto& [o, m] : d.slice->structure) {
      if (!has_object(o)) shape("/slice/structure", "unknown object '" + o + "'");
      if (!has_morphism(m)) shape("/slice/structure/" + o, "unknown morphism '" + m + "'");
    }
  }
  return d;
}

json doc_to(const InstanceDoc& d) {
  json j;
  j["kind"] = d.kind;
  json objs = json::object();
  for (const auto& [n, o] : d.objects) objs[n] = object_to(o);
  j["objects"] = objs;
  json mors = json::object();
  for (const auto& [n, m] : d.morphisms) mors[n] = json{{"from", m.from}, {"to", m.to}, {"map", m.map}};
  j["morphisms"] = mors;
  if (d.slice) {
    json st = json::object();
    for (const auto& [o, m] : d.slice->structure) st[o] = m;
    j["slice"] = json{{"side", d.slice->side == Side::over ? "over" : "under"},
                      {"object", d.slice->object},
                      {"structure", st}};
  }
  return j;
}

// ---------------------------------------------------------------- realizing

std::map<std::string, Elem> index_of(const Labels& carrier, const std::string& where) {
  std::map<std::string, Elem> out;
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (!out.emplace(carrier[i], static_cast<Elem>(i)).second)
      shape(where + "/carrier", "repeated label '" + carrier[i] + "'");
  return out;
}

Elem lookup(const std::map<std::string, Elem>& idx, const std::string& label, const std::string& where) {
  auto it = idx.find(label);
  if (it == idx.end()) shape(where, "'" + label + "' is not in the carrier");
  return it->second;
}

Subset subset_of(const std::map<std::string, Elem>& idx, std::size_t n, const Labels& ls, const std::string& where) {
  Subset s(n);
  for (const auto& l : ls) s.set(lookup(idx, l, where));
  return s;
}

Table table_of(const std::map<std::string, Elem>& idx, std::size_t n, const std::optional<LabelTable>& t,
               const std::string& where) {
  if (!t) shape(where, "missing table");
  if (t->size() != n) shape(where, "expected " + std::to_string(n) + " rows");
  Table out(n);
  for (std::size_t x = 0; x < n; ++x) {
    if ((*t)[x].size() != n) shape(where + "/" + std::to_string(x), "expected " + std::to_string(n) + " entries");
    for (std::size_t y = 0; y < n; ++y)
      out[x].push_back(lookup(idx, (*t)[x][y], where + "/" + std::to_string(x) + "/" + std::to_string(y)));
  }
  return out;
}

Elem constant_of(const std::map<std::string, Elem>& idx, const std::optional<std::string>& c, const std::string& where) {
  if (!c) shape(where, "missing constant");
  return lookup(idx, *c, where);
}

void expect_kind(const InstanceDoc& d, std::initializer_list<const char*> ok) {
  for (const char* k : ok)
    if (d.kind == k) return;
  throw ValidationError("document kind '" + d.kind + "' does not match the requested instance");
}

template <class Object, class Make>
Realized<Object> realize_with(const InstanceDoc& d, Make make) {
  Realized<Object> r;
  for (const auto& [n, o] : d.objects) {
    const std::string where = "/objects/" + n;
    index_of(o.carrier, where);
    try {
      r.objects.emplace_back(n, make(o, where));
    } catch (const ValidationError& e) {
      if (e.what()[0] == '/') throw;  // already located
      throw ValidationError(where + ": " + e.what());
    }
  }
  for (const auto& [n, m] : d.morphisms) {
    const std::string where = "/morphisms/" + n;
    const Object& dom = r.object(m.from);
    const Object& cod = r.object(m.to);
    if (m.map.size() != dom.size())
      shape(where + "/map", "expected " + std::to_string(dom.size()) + " entries, one per element of " + m.from);
    auto idx = index_of(cod.labels(), "/objects/" + m.to);
    ElemMap map;
    for (std::size_t i = 0; i < m.map.size(); ++i)
      map.push_back(lookup(idx, m.map[i], where + "/map/" + std::to_string(i)));
    r.morphisms.emplace_back(n, Arrow<Object>{dom, cod, std::move(map)});
  }
  return r;
}

template <class K, class Object>
void validate_morphisms(const K& k, const Realized<Object>& r) {
  for (const auto& [n, f] : r.morphisms) {
    try {
      k.morphism(f.dom, f.cod, f.map);
    } catch (const ValidationError& e) {
      if (e.what()[0] == '/') throw;
      throw ValidationError("/morphisms/" + n + ": " + e.what());
    }
  }
}

}  // namespace

const ObjectDoc& InstanceDoc::object(const std::string& name) const {
  for (const auto& [n, o] : objects)
    if (n == name) return o;
  throw ValidationError("unknown object '" + name + "'");
}

const MorphismDoc& InstanceDoc::morphism(const std::string& name) const {
  for (const auto& [n, m] : morphisms)
    if (n == name) return m;
  throw ValidationError("unknown morphism '" + name + "'");
}

const std::vector<std::string>& kinds() {
  static const std::vector<std::string> k{"set", "pointed-set", "top", "top1", "cmon", "ab", "grp", "cring"};
  return k;
}

namespace {

// Drops the library's own "[json.exception...] parse error at ...:" prefix.
ParseError parse_error_at(const json::parse_error& e, std::size_t line, std::size_t column) {
  std::string msg = e.what();
  if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
  return ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg, line,
                    column);
}

}  // namespace

InstanceDoc parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw parse_error_at(e, line, column);
  }
  return doc_from(j);
}

std::vector<InstanceDoc> parse_stream(std::string_view text) {
  std::vector<InstanceDoc> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      json j;
      try {
        j = json::parse(line.begin(), line.end());
      } catch (const json::parse_error& e) {
        auto [l, c] = line_column(text, start + e.byte);
        throw parse_error_at(e, l, c);
      }
      out.push_back(doc_from(j));
    }
    start = end + 1;
  }
  return out;
}

namespace {

// Objects and arrays of arrays break across lines; flat arrays such as table
// rows and maps stay on one line.
void pretty(const json& j, std::size_t depth, std::size_t step, std::string& out) {
  const std::string pad((depth + 1) * step, ' '), close(depth * step, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(it.key()).dump() + ": ";
      pretty(it.value(), depth + 1, step, out);
    }
    out += "\n" + close + "}";
    return;
  }
  const bool nested = j.is_array() && !j.empty() &&
                      std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
  if (nested) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      pretty(j[i], depth + 1, step, out);
    }
    out += "\n" + close + "]";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string render_doc(const InstanceDoc& d, int indent) {
  if (indent < 0) return doc_to(d).dump();
  std::string out;
  pretty(doc_to(d), 0, static_cast<std::size_t>(indent), out);
  return out + "\n";
}

std::string render_stream(const std::vector<InstanceDoc>& docs) {
  std::string out;
  for (const auto& d : docs) out += render_doc(d, -1) + "\n";
  return out;
}

Realized<SetObj> realize_set(const InstanceDoc& d) {
  expect_kind(d, {"set"});
  auto r = realize_with<SetObj>(d, [](const ObjectDoc& o, const std::string&) { return make_set(o.carrier); });
  validate_morphisms(FinSetCategory{}, r);
  return r;
}

Realized<PointedObj> realize_pointed(const InstanceDoc& d) {
  expect_kind(d, {"pointed-set"});
  auto r = realize_with<PointedObj>(d, [](const ObjectDoc& o, const std::string& where) {
    auto idx = index_of(o.carrier, where);
    return make_pointed(o.carrier, constant_of(idx, o.base, where + "/base"));
  });
  validate_morphisms(PointedSetCategory{}, r);
  return r;
}

Realized<TopObj> realize_top(const InstanceDoc& d) {
  expect_kind(d, {"top"});
  auto r = realize_with<TopObj>(d, [](const ObjectDoc& o, const std::string& where) {
    auto idx = index_of(o.carrier, where);
    if (!o.opens) shape(where, "missing field 'opens'");
    std::vector<Subset> opens;
    for (std::size_t i = 0; i < o.opens->size(); ++i)
      opens.push_back(subset_of(idx, o.carrier.size(), (*o.opens)[i], where + "/opens/" + std::to_string(i)));
    return make_space(o.carrier, opens);
  });
  validate_morphisms(FinTopCategory{}, r);
  return r;
}

Realized<Space> realize_top1(const InstanceDoc& d) {
  expect_kind(d, {"top1"});
  auto r = realize_with<Space>(d, [](const ObjectDoc& o, const std::string& where) {
    auto idx = index_of(o.carrier, where);
    const bool t1 = o.t1.value_or(true);
    if (!o.closure) {
      if (!t1) shape(where, "missing field 'closure'");
      return discrete_closure_space(o.carrier);
    }
    if (o.closure->size() != o.carrier.size()) shape(where + "/closure", "expected one point closure per point");
    std::vector<Subset> cl;
    for (std::size_t i = 0; i < o.closure->size(); ++i)
      cl.push_back(subset_of(idx, o.carrier.size(), (*o.closure)[i], where + "/closure/" + std::to_string(i)));
    return make_closure_space(o.carrier, cl, t1);
  });
  for (const auto& [n, f] : r.morphisms)
    if (!is_continuous(f.dom, f.cod, f.map)) shape("/morphisms/" + n, "map is not continuous");
  return r;
}

Realized<Alg> realize_algebra(const InstanceDoc& d) {
  expect_kind(d, {"cmon", "ab", "grp", "cring"});
  const std::string kind = d.kind;
  auto r = realize_with<Alg>(d, [&kind](const ObjectDoc& o, const std::string& where) {
    auto idx = index_of(o.carrier, where);
    const std::size_t n = o.carrier.size();
    if (kind == "cring")
      return make_cring(o.carrier, table_of(idx, n, o.add, where + "/add"), table_of(idx, n, o.mul, where + "/mul"),
                        constant_of(idx, o.zero, where + "/zero"), constant_of(idx, o.one, where + "/one"));
    auto op = table_of(idx, n, o.op, where + "/op");
    auto unit = constant_of(idx, o.unit, where + "/unit");
    if (kind == "cmon") return make_cmon(o.carrier, op, unit);
    return make_group(o.carrier, op, unit, kind == "ab");
  });
  Variety v = kind == "cmon" ? Variety::cmon : kind == "ab" ? Variety::ab : kind == "grp" ? Variety::grp : Variety::cring;
  validate_morphisms(AlgebraCategory(v), r);
  return r;
}

// ---------------------------------------------------------------- to docs

ObjectDoc object_doc(const SetObj& x) { return ObjectDoc(x.labels()); }

ObjectDoc object_doc(const PointedObj& x) {
  ObjectDoc o(x.labels());
  o.base = x.label(x->base);
  return o;
}

namespace {
Labels labels_in(const Labels& carrier, const Subset& s) {
  Labels out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(carrier[i]);
  return out;
}

LabelTable label_table(const Alg& a, std::size_t op) {
  LabelTable t(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      t[x].push_back(a.label(a->op(op, static_cast<Elem>(x), static_cast<Elem>(y))));
  return t;
}
}  // namespace

ObjectDoc object_doc(const TopObj& x) {
  ObjectDoc o(x.labels());
  o.opens.emplace();
  for (const auto& u : opens_of(x)) o.opens->push_back(labels_in(x.labels(), u));
  return o;
}

ObjectDoc object_doc(const Space& x) {
  ObjectDoc o(x.labels());
  o.closure.emplace();
  for (const auto& c : x->point_cl) o.closure->push_back(labels_in(x.labels(), c));
  o.t1 = x->t1;
  return o;
}

ObjectDoc object_doc(const Alg& a) {
  ObjectDoc o(a.labels());
  if (a->variety == Variety::cring) {
    o.add = label_table(a, 0);
    o.mul = label_table(a, 1);
    o.zero = a.label(zero_of(a));
    o.one = a.label(one_of(a));
  } else {
    o.op = label_table(a, 0);
    o.unit = a.label(unit_of(a));
  }
  return o;
}

// ---------------------------------------------------------------- random

namespace {

template <class Object>
InstanceDoc assemble(const std::string& kind, const std::vector<std::pair<std::string, Object>>& objects,
                     const std::vector<std::tuple<std::string, std::string, std::string, Arrow<Object>>>& mors) {
  InstanceDoc d{kind, {}, {}, {}};
  for (const auto& [n, o] : objects) d.objects.emplace_back(n, object_doc(o));
  for (const auto& [n, from, to, f] : mors) d.morphisms.emplace_back(n, morphism_doc(from, to, f));
  return d;
}

// f : A → B, and for slices a second random map with the right ends.
template <class Object, class Extra>
InstanceDoc build(const std::string& kind, const Arrow<Object>& f, std::optional<Side> side, Extra extra) {
  if (!side) return assemble<Object>(kind, {{"A", f.dom}, {"B", f.cod}}, {{"f", "A", "B", f}});
  if (*side == Side::over) {
    Arrow<Object> p = extra(f.cod, true);
    auto q = compose(p, f);
    auto d = assemble<Object>(kind, {{"A", f.dom}, {"B", f.cod}, {"C", p.cod}},
                              {{"f", "A", "B", f}, {"p", "B", "C", p}, {"q", "A", "C", q}});
    d.slice = SliceDoc{Side::over, "C", {{"A", "q"}, {"B", "p"}}};
    return d;
  }
  Arrow<Object> j = extra(f.dom, false);
  auto k = compose(f, j);
  auto d = assemble<Object>(kind, {{"A", f.dom}, {"B", f.cod}, {"C", j.dom}},
                            {{"f", "A", "B", f}, {"j", "C", "A", j}, {"k", "C", "B", k}});
  d.slice = SliceDoc{Side::under, "C", {{"A", "j"}, {"B", "k"}}};
  return d;
}

std::vector<std::string> relabel(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

std::vector<InstanceDoc> random_docs(const RandomOptions& o) {
  if (std::find(kinds().begin(), kinds().end(), o.kind) == kinds().end())
    throw ValidationError("unknown kind '" + o.kind + "'");
  Rng rng(o.seed);
  const std::size_t hi = std::max<std::size_t>(o.max_carrier, 1);
  std::vector<InstanceDoc> out;

  std::optional<AlgPool> pool;
  if (o.kind == "cmon" || o.kind == "ab" || o.kind == "grp" || o.kind == "cring") {
    Variety v = o.kind == "cmon" ? Variety::cmon : o.kind == "ab" ? Variety::ab : o.kind == "grp" ? Variety::grp
                                                                                                   : Variety::cring;
    auto cat = o.kind == "cmon" ? cmon_catalogue(hi) : o.kind == "ab" ? ab_catalogue(hi)
                                                   : o.kind == "grp" ? grp_catalogue(hi) : cring_catalogue(hi);
    pool.emplace(AlgebraCategory(v), std::move(cat));
  }

  // A map into an empty object needs an empty source.
  auto other_size = [&](std::size_t target, bool from) {
    return !from && target == 0 ? std::size_t{0} : pick_between(rng, 1, hi);
  };

  for (std::size_t n = 0; n < o.count; ++n) {
    if (o.kind == "set") {
      auto f = random_set_morphism(rng, 0, hi);
      out.push_back(build<SetObj>(o.kind, f, o.slice, [&](const SetObj& x, bool from) {
        auto other = make_set(relabel(other_size(x.size(), from), "c"));
        return from ? Arrow<SetObj>{x, other, random_map(rng, x.size(), other.size())}
                    : Arrow<SetObj>{other, x, random_map(rng, other.size(), x.size())};
      }));
    } else if (o.kind == "pointed-set") {
      auto f = random_pointed_morphism(rng, 1, hi);
      out.push_back(build<PointedObj>(o.kind, f, o.slice, [&](const PointedObj& x, bool from) {
        auto other = make_pointed(relabel(pick_between(rng, 1, hi), "c"), 0);
        auto m = from ? random_map(rng, x.size(), other.size()) : random_map(rng, other.size(), x.size());
        if (from) {
          m[x->base] = 0;
          return Arrow<PointedObj>{x, other, m};
        }
        m[0] = x->base;
        return Arrow<PointedObj>{other, x, m};
      }));
    } else if (o.kind == "top") {
      auto f = random_top_morphism(rng, 0, hi);
      out.push_back(build<TopObj>(o.kind, f, o.slice, [&](const TopObj& x, bool from) {
        // Indiscrete targets and discrete sources make any map continuous.
        auto labels = relabel(other_size(x.size(), from), "c");
        if (from) {
          std::vector<Subset> opens{Subset(labels.size()), full_subset(labels.size())};
          auto c = make_space(labels, opens);
          return Arrow<TopObj>{x, c, random_map(rng, x.size(), c.size())};
        }
        auto c = discrete_space(labels);
        return Arrow<TopObj>{c, x, random_map(rng, c.size(), x.size())};
      }));
    } else if (o.kind == "top1") {
      auto f = random_top1_morphism(rng, 0, hi);
      out.push_back(build<Space>(o.kind, f, o.slice, [&](const Space& x, bool from) {
        auto c = discrete_closure_space(relabel(other_size(x.size(), from), "c"));
        return from ? Arrow<Space>{x, c, random_map(rng, x.size(), c.size())}
                    : Arrow<Space>{c, x, random_map(rng, c.size(), x.size())};
      }));
    } else {
      // Algebra instances draw both maps from the catalogue pool.
      const auto& f = pool->random_morphism(rng);
      out.push_back(build<Alg>(o.kind, f, o.slice, [&](const Alg& x, bool from) {
        const std::size_t xi = pool->index_of(x);
        std::vector<const Arrow<Alg>*> options;
        for (std::size_t y = 0; y < pool->objects.size(); ++y)
          for (const auto& h : from ? pool->homs[xi][y] : pool->homs[y][xi]) options.push_back(&h);
        return *options[pick(rng, options.size())];
      }));
    }
  }
  return out;
}

}  // namespace normcat::doc
