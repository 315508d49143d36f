#include "normcat/algebra.hpp"

#include <numeric>
#include <set>

#include "normcat/groups.hpp"
#include "normcat/render.hpp"
#include "normcat/setops.hpp"

namespace normcat {

namespace {

constexpr Elem none = ~Elem{0};

struct Arity {
  std::size_t constants, unary, binary;
};

Arity arity(Variety v) {
  switch (v) {
    case Variety::cmon: return {1, 0, 1};
    case Variety::ab:
    case Variety::grp: return {1, 1, 1};
    case Variety::cring: return {2, 1, 2};
  }
  return {0, 0, 0};
}

const char* binary_name(Variety v, std::size_t k) {
  if (v == Variety::cring) return k == 0 ? "add" : "mul";
  return "op";
}

std::string cell(const AlgebraData& a, std::initializer_list<Elem> xs) {
  std::string s = "(";
  bool first = true;
  for (Elem x : xs) {
    if (!first) s += ",";
    s += a.labels[x];
    first = false;
  }
  return s + ")";
}

void fail(const AlgebraData& a, const std::string& what) {
  throw ValidationError(std::string(variety_name(a.variety)) + ": " + what);
}

void check_associative(const AlgebraData& a, std::size_t k) {
  const Elem n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (a.op(k, a.op(k, x, y), z) != a.op(k, x, a.op(k, y, z)))
          fail(a, std::string("associativity of ") + binary_name(a.variety, k) + " fails at " + cell(a, {x, y, z}));
}

void check_commutative(const AlgebraData& a, std::size_t k) {
  const Elem n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (a.op(k, x, y) != a.op(k, y, x))
        fail(a, std::string("commutativity of ") + binary_name(a.variety, k) + " fails at " + cell(a, {x, y}));
}

void check_unit(const AlgebraData& a, std::size_t k, Elem u) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.op(k, u, x) != x || a.op(k, x, u) != x)
      fail(a, std::string("unit law of ") + binary_name(a.variety, k) + " fails at " + cell(a, {u, x}));
}

void check_inverse(const AlgebraData& a, std::size_t k, const ElemMap& inv, Elem u) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.op(k, x, inv[x]) != u || a.op(k, inv[x], x) != u)
      fail(a, "inverse law fails at " + cell(a, {x}));
}

std::vector<Elem> flatten(const Table& t, std::size_t n, const char* what) {
  if (t.size() != n) throw ValidationError(std::string(what) + ": table needs " + std::to_string(n) + " rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n)
      throw ValidationError(std::string(what) + ": row " + std::to_string(r) + " needs " + std::to_string(n) +
                            " entries");
    out.insert(out.end(), t[r].begin(), t[r].end());
  }
  return out;
}

ElemMap derive_inverse(const std::vector<std::string>& labels, const std::vector<Elem>& op, Elem unit,
                       const char* what) {
  const std::size_t n = labels.size();
  ElemMap inv(n, none);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (op[x * n + y] == unit) {
        inv[x] = static_cast<Elem>(y);
        break;
      }
    if (inv[x] == none) throw ValidationError(std::string(what) + ": no inverse for " + labels[x]);
  }
  return inv;
}

std::optional<std::string> hom_failure(const Alg& a, const Alg& b, const ElemMap& m) {
  if (a->variety != b->variety) return "domain and codomain belong to different varieties";
  if (m.size() != a.size()) return "map has " + std::to_string(m.size()) + " entries for " + std::to_string(a.size()) + " elements";
  for (Elem y : m)
    if (y >= b.size()) return "map leaves the codomain";
  for (std::size_t k = 0; k < a->constants.size(); ++k)
    if (m[a->constants[k]] != b->constants[k]) return "constant " + a.label(a->constants[k]) + " not preserved";
  for (std::size_t k = 0; k < a->unary.size(); ++k)
    for (Elem x = 0; x < a.size(); ++x)
      if (m[a->unary[k][x]] != b->unary[k][m[x]]) return "unary operation not preserved at " + a.label(x);
  const Elem n = static_cast<Elem>(a.size());
  for (std::size_t k = 0; k < a->binary.size(); ++k)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (m[a->op(k, x, y)] != b->op(k, m[x], m[y]))
          return std::string(binary_name(a->variety, k)) + " not preserved at " + cell(*a, {x, y});
  return std::nullopt;
}

}  // namespace

const char* variety_name(Variety v) {
  switch (v) {
    case Variety::cmon: return "CMon";
    case Variety::ab: return "Ab";
    case Variety::grp: return "Grp";
    case Variety::cring: return "CRing";
  }
  return "?";
}

Alg make_algebra(AlgebraData a) {
  const std::size_t n = a.size();
  if (n == 0) fail(a, "empty carrier");
  std::set<std::string> seen;
  for (const auto& l : a.labels)
    if (!seen.insert(l).second) fail(a, "repeated label '" + l + "'");
  auto ar = arity(a.variety);
  if (a.constants.size() != ar.constants || a.unary.size() != ar.unary || a.binary.size() != ar.binary)
    fail(a, "wrong signature");
  for (Elem c : a.constants)
    if (c >= n) fail(a, "constant outside the carrier");
  for (const auto& u : a.unary) {
    if (u.size() != n) fail(a, "unary table has the wrong length");
    for (Elem y : u)
      if (y >= n) fail(a, "unary table leaves the carrier");
  }
  for (std::size_t k = 0; k < a.binary.size(); ++k) {
    if (a.binary[k].size() != n * n) fail(a, std::string(binary_name(a.variety, k)) + " table has the wrong size");
    for (Elem y : a.binary[k])
      if (y >= n) fail(a, std::string(binary_name(a.variety, k)) + " table leaves the carrier");
  }
  for (std::size_t k = 0; k < a.binary.size(); ++k) {
    check_associative(a, k);
    if (a.variety != Variety::grp) check_commutative(a, k);
    check_unit(a, k, a.constants[k]);
  }
  if (!a.unary.empty()) check_inverse(a, 0, a.unary[0], a.constants[0]);
  if (a.variety == Variety::cring) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (a.op(1, x, a.op(0, y, z)) != a.op(0, a.op(1, x, y), a.op(1, x, z)))
            fail(a, "distributivity fails at " + cell(a, {x, y, z}));
  }
  return Alg(std::move(a));
}

Alg make_cmon(std::vector<std::string> labels, const Table& op, Elem unit) {
  auto flat = flatten(op, labels.size(), "CMon");
  return make_algebra({Variety::cmon, std::move(labels), {unit}, {}, {std::move(flat)}});
}

Alg make_group(std::vector<std::string> labels, const Table& op, Elem unit, bool abelian) {
  const char* what = abelian ? "Ab" : "Grp";
  auto flat = flatten(op, labels.size(), what);
  if (unit >= labels.size()) throw ValidationError(std::string(what) + ": unit outside the carrier");
  for (Elem y : flat)
    if (y >= labels.size()) throw ValidationError(std::string(what) + ": op table leaves the carrier");
  auto inv = derive_inverse(labels, flat, unit, what);
  return make_algebra({abelian ? Variety::ab : Variety::grp, std::move(labels), {unit}, {inv}, {std::move(flat)}});
}

Alg make_cring(std::vector<std::string> labels, const Table& add, const Table& mul, Elem zero, Elem one) {
  auto fa = flatten(add, labels.size(), "CRing");
  auto fm = flatten(mul, labels.size(), "CRing");
  if (zero >= labels.size() || one >= labels.size()) throw ValidationError("CRing: constant outside the carrier");
  for (Elem y : fa)
    if (y >= labels.size()) throw ValidationError("CRing: add table leaves the carrier");
  auto neg = derive_inverse(labels, fa, zero, "CRing");
  return make_algebra({Variety::cring, std::move(labels), {zero, one}, {neg}, {std::move(fa), std::move(fm)}});
}

Subset generated(const Alg& a, const Subset& s) {
  Subset in = s;
  std::vector<Elem> known = members(s);
  for (Elem c : a->constants)
    if (!in.test(c)) {
      in.set(c);
      known.push_back(c);
    }
  for (std::size_t i = 0; i < known.size(); ++i) {
    const Elem x = known[i];
    auto add_elem = [&](Elem y) {
      if (!in.test(y)) {
        in.set(y);
        known.push_back(y);
      }
    };
    for (const auto& u : a->unary) add_elem(u[x]);
    for (std::size_t k = 0; k < a->binary.size(); ++k) {
      for (std::size_t j = 0; j <= i; ++j) {
        add_elem(a->op(k, x, known[j]));
        add_elem(a->op(k, known[j], x));
      }
    }
  }
  return in;
}

bool is_closed(const Alg& a, const Subset& s) { return generated(a, s) == s; }

Partition congruence_closure(const Alg& a, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const Elem n = static_cast<Elem>(a.size());
  UnionFind uf(n);
  std::vector<std::pair<Elem, Elem>> work(pairs.rbegin(), pairs.rend());
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!uf.unite(x, y)) continue;
    for (const auto& u : a->unary) work.emplace_back(u[x], u[y]);
    for (std::size_t k = 0; k < a->binary.size(); ++k) {
      for (Elem z = 0; z < n; ++z) {
        work.emplace_back(a->op(k, x, z), a->op(k, y, z));
        work.emplace_back(a->op(k, z, x), a->op(k, z, y));
      }
    }
  }
  return uf.partition();
}

bool is_congruence(const Alg& a, const Partition& p) {
  const Elem n = static_cast<Elem>(a.size());
  for (const auto& u : a->unary)
    for (Elem x = 0; x < n; ++x)
      if (p.cls[u[x]] != p.cls[u[p.reps[p.cls[x]]]]) return false;
  for (std::size_t k = 0; k < a->binary.size(); ++k)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (p.cls[a->op(k, x, y)] != p.cls[a->op(k, p.reps[p.cls[x]], p.reps[p.cls[y]])]) return false;
  return true;
}

Alg quotient_algebra(const Alg& a, const Partition& p) {
  const std::size_t m = p.classes();
  AlgebraData q{a->variety, quotient_labels(a.labels(), p), {}, {}, {}};
  for (Elem c : a->constants) q.constants.push_back(p.cls[c]);
  for (const auto& u : a->unary) {
    ElemMap t(m);
    for (std::size_t c = 0; c < m; ++c) t[c] = p.cls[u[p.reps[c]]];
    q.unary.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < a->binary.size(); ++k) {
    std::vector<Elem> t(m * m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t d = 0; d < m; ++d) t[c * m + d] = p.cls[a->op(k, p.reps[c], p.reps[d])];
    q.binary.push_back(std::move(t));
  }
  return Alg(std::move(q));
}

Alg subalgebra(const Alg& a, const Subset& s) {
  if (!is_closed(a, s)) throw ValidationError(std::string(variety_name(a->variety)) + ": subset " +
                                              render_subset(a, s) + " is not closed under the operations");
  auto keep = members(s);
  std::vector<Elem> index(a.size(), none);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Elem>(i);
  const std::size_t m = keep.size();
  AlgebraData sub{a->variety, {}, {}, {}, {}};
  for (Elem x : keep) sub.labels.push_back(a.label(x));
  for (Elem c : a->constants) sub.constants.push_back(index[c]);
  for (const auto& u : a->unary) {
    ElemMap t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = index[u[keep[i]]];
    sub.unary.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < a->binary.size(); ++k) {
    std::vector<Elem> t(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t[i * m + j] = index[a->op(k, keep[i], keep[j])];
    sub.binary.push_back(std::move(t));
  }
  return Alg(std::move(sub));
}

Alg product_algebra(const Alg& a, const Alg& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto idx = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  AlgebraData p{a->variety, {}, {}, {}, {}};
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) p.labels.push_back(pair_label(a.label(x), b.label(y)));
  for (std::size_t k = 0; k < a->constants.size(); ++k) p.constants.push_back(idx(a->constants[k], b->constants[k]));
  for (std::size_t k = 0; k < a->unary.size(); ++k) {
    ElemMap t(n);
    for (Elem x = 0; x < na; ++x)
      for (Elem y = 0; y < nb; ++y) t[idx(x, y)] = idx(a->unary[k][x], b->unary[k][y]);
    p.unary.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < a->binary.size(); ++k) {
    std::vector<Elem> t(n * n);
    for (Elem x1 = 0; x1 < na; ++x1)
      for (Elem y1 = 0; y1 < nb; ++y1)
        for (Elem x2 = 0; x2 < na; ++x2)
          for (Elem y2 = 0; y2 < nb; ++y2)
            t[idx(x1, y1) * n + idx(x2, y2)] = idx(a->op(k, x1, x2), b->op(k, y1, y2));
    p.binary.push_back(std::move(t));
  }
  return Alg(std::move(p));
}

Alg trivial_algebra(Variety v) {
  auto ar = arity(v);
  return Alg(AlgebraData{v, {"*"}, std::vector<Elem>(ar.constants, 0), std::vector<ElemMap>(ar.unary, ElemMap{0}),
                         std::vector<std::vector<Elem>>(ar.binary, std::vector<Elem>{0})});
}

bool is_hom(const Alg& a, const Alg& b, const ElemMap& m) { return !hom_failure(a, b, m); }

GenerationPlan generation_plan(const Alg& a) {
  const std::size_t n = a.size();
  GenerationPlan plan;
  Subset current = generated(a, Subset(n));
  while (current.count() < n) {
    Elem best = none;
    std::size_t best_size = 0;
    for (Elem x = 0; x < n; ++x) {
      if (current.test(x)) continue;
      Subset s = current;
      s.set(x);
      std::size_t size = generated(a, s).count();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    plan.generators.push_back(best);
    current.set(best);
    current = generated(a, current);
  }

  std::vector<char> known(n, 0);
  std::vector<Elem> order;
  for (Elem g : plan.generators) {
    known[g] = 1;
    order.push_back(g);
  }
  using Step = GenerationPlan::Step;
  for (std::size_t k = 0; k < a->constants.size(); ++k) {
    Elem c = a->constants[k];
    if (known[c]) continue;
    known[c] = 1;
    order.push_back(c);
    plan.steps.push_back({Step::constant, k, 0, 0, c});
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    auto reach = [&](Elem y, Step step) {
      if (known[y]) return;
      known[y] = 1;
      order.push_back(y);
      plan.steps.push_back(step);
    };
    for (std::size_t k = 0; k < a->unary.size(); ++k) reach(a->unary[k][x], {Step::unary, k, x, 0, a->unary[k][x]});
    for (std::size_t k = 0; k < a->binary.size(); ++k) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem y = order[j];
        reach(a->op(k, x, y), {Step::binary, k, x, y, a->op(k, x, y)});
        reach(a->op(k, y, x), {Step::binary, k, y, x, a->op(k, y, x)});
      }
    }
  }
  return plan;
}

ElemMap run_plan(const GenerationPlan& plan, const Alg& a, const Alg& b, const std::vector<Elem>& images) {
  ElemMap t(a.size(), none);
  for (std::size_t i = 0; i < plan.generators.size(); ++i) t[plan.generators[i]] = images[i];
  for (const auto& s : plan.steps) {
    switch (s.kind) {
      case GenerationPlan::Step::constant: t[s.result] = b->constants[s.op]; break;
      case GenerationPlan::Step::unary: t[s.result] = b->unary[s.op][t[s.a]]; break;
      case GenerationPlan::Step::binary: t[s.result] = b->op(s.op, t[s.a], t[s.b]); break;
    }
  }
  return t;
}

std::optional<ElemMap> extend_partial(const Alg& a, const Alg& b, ElemMap t) {
  std::vector<Elem> order;
  for (Elem x = 0; x < a.size(); ++x)
    if (t[x] != none) order.push_back(x);
  for (std::size_t k = 0; k < a->constants.size(); ++k) {
    Elem c = a->constants[k];
    if (t[c] == none) {
      t[c] = b->constants[k];
      order.push_back(c);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    auto reach = [&](Elem y, Elem value) {
      if (t[y] != none) return;
      t[y] = value;
      order.push_back(y);
    };
    for (std::size_t k = 0; k < a->unary.size(); ++k) reach(a->unary[k][x], b->unary[k][t[x]]);
    for (std::size_t k = 0; k < a->binary.size(); ++k) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Elem y = order[j];
        reach(a->op(k, x, y), b->op(k, t[x], t[y]));
        reach(a->op(k, y, x), b->op(k, t[y], t[x]));
      }
    }
  }
  if (order.size() != a.size()) return std::nullopt;
  return t;
}

// ---------------------------------------------------------------- category

std::string AlgebraCategory::name() const { return variety_name(v_); }

void AlgebraCategory::require_variety(const Object& o) const {
  if (o->variety != v_)
    throw ValidationError(name() + ": object belongs to " + variety_name(o->variety));
}

bool AlgebraCategory::is_morphism(const Mor& f) const {
  return f.dom->variety == v_ && f.cod->variety == v_ && is_hom(f.dom, f.cod, f.map);
}

AlgebraCategory::Mor AlgebraCategory::morphism(const Object& dom, const Object& cod, ElemMap map) const {
  require_variety(dom);
  require_variety(cod);
  if (auto why = hom_failure(dom, cod, map)) throw ValidationError(name() + ": not a homomorphism: " + *why);
  return {dom, cod, std::move(map)};
}

Alg AlgebraCategory::terminal() const { return trivial_algebra(v_); }

Alg AlgebraCategory::initial() const {
  if (v_ == Variety::cring) throw InitialNotRepresentable("CRing: the initial object is the ring of integers");
  return trivial_algebra(v_);
}

AlgebraCategory::Mor AlgebraCategory::to_terminal(const Object& o) const {
  return {o, terminal(), ElemMap(o.size(), 0)};
}

AlgebraCategory::Mor AlgebraCategory::from_initial(const Object& o) const {
  return {initial(), o, ElemMap{o->constants[0]}};
}

PullbackCone<Alg> AlgebraCategory::product(const Object& a, const Object& b) const {
  auto p = product_algebra(a, b);
  ElemMap pr1(p.size()), pr2(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    pr1[i] = static_cast<Elem>(i / b.size());
    pr2[i] = static_cast<Elem>(i % b.size());
  }
  return {p, {p, a, pr1}, {p, b, pr2}};
}

// The subalgebra {(x, y) | f x = g y} of the product, built without the
// full product table. Same labels and element order as subobject() would give.
PullbackCone<Alg> AlgebraCategory::pullback(const Mor& f, const Mor& g) const {
  const Alg& a = f.dom;
  const Alg& b = g.dom;
  const std::size_t nb = b.size();
  std::vector<Elem> index(a.size() * nb, none);
  ElemMap pr1, pr2;
  AlgebraData d{a->variety, {}, {}, {}, {}};
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < nb; ++y)
      if (f.map[x] == g.map[y]) {
        index[x * nb + y] = static_cast<Elem>(pr1.size());
        pr1.push_back(x);
        pr2.push_back(y);
        d.labels.push_back(pair_label(a.label(x), b.label(y)));
      }
  const std::size_t m = pr1.size();
  auto at = [&](Elem x, Elem y) { return index[x * nb + y]; };
  for (std::size_t k = 0; k < a->constants.size(); ++k) d.constants.push_back(at(a->constants[k], b->constants[k]));
  for (std::size_t k = 0; k < a->unary.size(); ++k) {
    ElemMap t(m);
    for (std::size_t i = 0; i < m; ++i) t[i] = at(a->unary[k][pr1[i]], b->unary[k][pr2[i]]);
    d.unary.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < a->binary.size(); ++k) {
    std::vector<Elem> t(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t[i * m + j] = at(a->op(k, pr1[i], pr1[j]), b->op(k, pr2[i], pr2[j]));
    d.binary.push_back(std::move(t));
  }
  Alg apex(std::move(d));
  return {apex, {apex, a, std::move(pr1)}, {apex, b, std::move(pr2)}};
}

AlgebraCategory::Mor AlgebraCategory::quotient_map(const Object& a, const Partition& p) const {
  return {a, quotient_algebra(a, p), p.cls};
}

PushoutCocone<Alg> AlgebraCategory::pushout(const Mor& f, const Mor& g) const {
  // Pushout of f along a surjective q: cod(f) modulo the congruence generated
  // by f×f applied to the kernel pair of q.
  auto along_surjection = [this](const Mor& other, const Mor& q) {
    std::vector<Elem> first(q.cod.size(), none);
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t z = 0; z < q.dom.size(); ++z) {
      Elem& slot = first[q.map[z]];
      if (slot == none)
        slot = static_cast<Elem>(z);
      else
        pairs.emplace_back(other.map[slot], other.map[z]);
    }
    auto p = congruence_closure(other.cod, pairs);
    auto quot = quotient_map(other.cod, p);
    ElemMap down(q.cod.size());
    for (std::size_t y = 0; y < q.cod.size(); ++y) down[y] = p.cls[other.map[first[y]]];
    return std::pair{quot, Mor{q.cod, quot.cod, down}};
  };
  if (is_surjective(g)) {
    auto [in1, in2] = along_surjection(f, g);
    return {in1.cod, in1, in2};
  }
  if (is_surjective(f)) {
    auto [in2, in1] = along_surjection(g, f);
    return {in2.cod, in1, in2};
  }
  if (v_ == Variety::cmon || v_ == Variety::ab) {
    // Coproduct of commutative monoids is the direct product.
    const std::size_t ny = g.cod.size();
    auto prod = product_algebra(f.cod, g.cod);
    auto i1 = [&](Elem x) { return static_cast<Elem>(x * ny + unit_of(g.cod)); };
    auto i2 = [&](Elem y) { return static_cast<Elem>(unit_of(f.cod) * ny + y); };
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t z = 0; z < f.dom.size(); ++z) pairs.emplace_back(i1(f.map[z]), i2(g.map[z]));
    auto p = congruence_closure(prod, pairs);
    auto quot = quotient_map(prod, p);
    ElemMap in1(f.cod.size()), in2(ny);
    for (Elem x = 0; x < f.cod.size(); ++x) in1[x] = p.cls[i1(x)];
    for (Elem y = 0; y < ny; ++y) in2[y] = p.cls[i2(y)];
    return {quot.cod, {f.cod, quot.cod, in1}, {g.cod, quot.cod, in2}};
  }
  throw PushoutNotRepresentable(name() + ": pushout of " + render(f) + " and " + render(g) +
                                (v_ == Variety::grp ? " is an amalgamated free product"
                                                    : " is a tensor product, not built here"));
}

AlgebraCategory::Mor AlgebraCategory::equalizer(const Mor& f, const Mor& g) const {
  Subset s(f.dom.size());
  for (Elem x : setops::equalizer_elems(f.map, g.map)) s.set(x);
  return subobject(f.dom, s);
}

AlgebraCategory::Mor AlgebraCategory::coequalizer(const Mor& f, const Mor& g) const {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t x = 0; x < f.map.size(); ++x) pairs.emplace_back(f.map[x], g.map[x]);
  return quotient_map(f.cod, congruence_closure(f.cod, pairs));
}

AlgebraCategory::Mor AlgebraCategory::copair(const PushoutCocone<Object>& po, const Mor& g, const Mor& h) const {
  ElemMap t(po.apex.size(), none);
  auto put = [&](Elem slot, Elem value) {
    if (t[slot] != none && t[slot] != value) throw NoDiagonal(name() + " copair: the maps disagree on the apex");
    t[slot] = value;
  };
  for (std::size_t x = 0; x < po.in1.map.size(); ++x) put(po.in1.map[x], g.map[x]);
  for (std::size_t y = 0; y < po.in2.map.size(); ++y) put(po.in2.map[y], h.map[y]);
  auto full = extend_partial(po.apex, g.cod, std::move(t));
  if (!full) throw NoDiagonal(name() + " copair: injections do not generate the apex");
  Mor out{po.apex, g.cod, std::move(*full)};
  if (!is_morphism(out) || !(compose(out, po.in1) == g) || !(compose(out, po.in2) == h))
    throw NoDiagonal(name() + " copair: induced map is not a homomorphism");
  return out;
}

std::vector<AlgebraCategory::Mor> AlgebraCategory::hom_set(const Object& a, const Object& b,
                                                           std::size_t bound) const {
  auto plan = generation_plan(a);
  std::vector<Mor> out;
  setops::for_each_map(plan.generators.size(), b.size(), bound, [&](const ElemMap& images) {
    auto t = run_plan(plan, a, b, images);
    if (is_hom(a, b, t)) out.push_back({a, b, std::move(t)});
  });
  return out;
}

AlgebraCategory::Mor AlgebraCategory::subobject(const Object& o, const Subset& s) const {
  return {subalgebra(o, s), o, members(s)};
}

// ---------------------------------------------------------------- CMon

namespace {

template <class Obj>
NormalClosure<Obj> closure_on(const AlgebraCategory& k, const Arrow<Obj>& f, const Subset& s) {
  auto nu = k.subobject(f.cod, s);
  auto hat = lift_map(nu, f);
  if (!hat) throw OverrideMismatch(k.name() + " closed form: image of f escapes the closure");
  return {nu.dom, nu, {f.dom, nu.dom, *hat}};
}

template <class Obj>
NormalDualClosure<Obj> dual_closure_on(const AlgebraCategory& k, const Arrow<Obj>& f, const Partition& p) {
  auto pi = k.quotient_map(f.dom, p);
  auto check = descend_map(pi, f);
  if (!check) throw OverrideMismatch(k.name() + " closed form: f is not constant on the classes");
  return {pi.cod, pi, {pi.cod, f.cod, *check}};
}

Subset cmon_closure_set(const Arrow<Alg>& f) {
  const Alg& b = f.cod;
  Subset im = image(f);
  Subset n(b.size());
  for (Elem x = 0; x < b.size(); ++x)
    for (auto a = im.find_first(); a != Subset::npos && !n.test(x); a = im.find_next(a))
      if (im.test(b->op(0, static_cast<Elem>(a), x))) n.set(x);
  return n;
}

Partition cmon_dual_partition(const Arrow<Alg>& f) {
  const Alg& a = f.dom;
  std::vector<Elem> ker;
  for (Elem x = 0; x < a.size(); ++x)
    if (f.map[x] == unit_of(f.cod)) ker.push_back(x);
  UnionFind uf(a.size());
  for (Elem u : ker)
    for (Elem v : ker)
      for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
          if (a->op(0, u, x) == a->op(0, v, y)) uf.unite(x, y);
  return uf.partition();
}

}  // namespace

std::optional<NormalClosure<Alg>> CMonCategory::closed_form_closure(const Mor& f) const {
  return closure_on(*this, f, cmon_closure_set(f));
}

std::optional<NormalDualClosure<Alg>> CMonCategory::closed_form_dual_closure(const Mor& f) const {
  return dual_closure_on(*this, f, cmon_dual_partition(f));
}

bool cmon_normal_mono_test(const Arrow<Alg>& f) {
  if (!is_injective(f)) return false;
  const Alg& b = f.cod;
  Subset im = image(f);
  for (auto a = im.find_first(); a != Subset::npos; a = im.find_next(a))
    for (Elem x = 0; x < b.size(); ++x)
      if (im.test(b->op(0, static_cast<Elem>(a), x)) && !im.test(x)) return false;
  return true;
}

bool cmon_normal_epi_test(const Arrow<Alg>& f) {
  if (!is_surjective(f)) return false;
  auto p = cmon_dual_partition(f);
  for (Elem x = 0; x < f.dom.size(); ++x)
    for (Elem y = 0; y < f.dom.size(); ++y)
      if (f.map[x] == f.map[y] && p.cls[x] != p.cls[y]) return false;
  return true;
}

// ---------------------------------------------------------------- Ab

std::optional<NormalClosure<Alg>> AbCategory::closed_form_closure(const Mor& f) const {
  return closure_on(*this, f, image(f));
}

std::optional<NormalDualClosure<Alg>> AbCategory::closed_form_dual_closure(const Mor& f) const {
  return dual_closure_on(*this, f, partition_of_kernel(f.map));
}

std::optional<NormalClosure<Alg>> AbCategory::slice_closed_form_closure(const Mor& f, const Mor&) const {
  return closed_form_closure(f);
}

std::optional<NormalDualClosure<Alg>> AbCategory::coslice_closed_form_dual_closure(const Mor&, const Mor& f) const {
  return closed_form_dual_closure(f);
}

// ---------------------------------------------------------------- Grp

std::optional<NormalClosure<Alg>> GrpCategory::closed_form_closure(const Mor& f) const {
  return closure_on(*this, f, normal_hull(f.cod, image(f)));
}

std::optional<NormalDualClosure<Alg>> GrpCategory::closed_form_dual_closure(const Mor& f) const {
  return dual_closure_on(*this, f, partition_of_kernel(f.map));
}

std::optional<NormalClosure<Alg>> GrpCategory::slice_closed_form_closure(const Mor& f, const Mor& p) const {
  return closure_on(*this, f, slice_closure_set(f, p));
}

std::optional<NormalDualClosure<Alg>> GrpCategory::coslice_closed_form_dual_closure(const Mor&, const Mor& f) const {
  return closed_form_dual_closure(f);
}

std::optional<bool> GrpCategory::known_epi(const Mor& f) const { return is_surjective(f); }
std::optional<bool> GrpCategory::known_regular_mono(const Mor& f) const { return is_injective(f); }

// ---------------------------------------------------------------- CRing

std::size_t characteristic(const Alg& r) {
  std::size_t n = 1;
  for (Elem x = one_of(r); x != zero_of(r); x = add(r, x, one_of(r))) ++n;
  return n;
}

std::optional<NormalClosure<Alg>> CRingCategory::closed_form_closure(const Mor& f) const {
  return NormalClosure<Alg>{f.cod, identity(f.cod), f};
}

std::optional<NormalDualClosure<Alg>> CRingCategory::closed_form_dual_closure(const Mor& f) const {
  const Alg& a = f.dom;
  const Alg& b = f.cod;
  const std::size_t L = std::lcm(characteristic(a), characteristic(b));
  std::vector<std::pair<Elem, Elem>> pairs;
  Elem na = zero_of(a), nb = zero_of(b);  // n·1_A and n·1_B
  for (std::size_t n = 0; n < L; ++n) {
    for (Elem x = 0; x < a.size(); ++x)
      if (f.map[x] == nb) pairs.emplace_back(x, na);
    na = add(a, na, one_of(a));
    nb = add(b, nb, one_of(b));
  }
  auto p = congruence_closure(a, pairs);
  if (p.cls != kernel_classes(f.map))
    throw OverrideMismatch("CRing: characteristic construction and A/Ker f differ for " + render(f));
  return dual_closure_on(*this, f, p);
}

std::optional<bool> CRingCategory::known_epi(const Mor& f) const { return is_surjective(f); }

}  // namespace normcat
