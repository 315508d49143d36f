#include "normcat/random.hpp"

#include <algorithm>

namespace normcat {

namespace {

std::vector<std::string> labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

using Relation = std::vector<std::vector<char>>;

Relation random_preorder(Rng& rng, std::size_t n) {
  Relation r(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r[x][y] = x == y || pick(rng, 4) == 0;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (r[x][z] && r[z][y]) r[x][y] = 1;
  return r;
}

TopObj space_of(const Relation& r, std::vector<std::string> names) {
  const std::size_t n = r.size();
  std::vector<Subset> nbhd(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r[x][y]) nbhd[x].set(y);
  return make_space_from_nbhds(std::move(names), std::move(nbhd));
}

}  // namespace

ElemMap random_map(Rng& rng, std::size_t n, std::size_t m) {
  ElemMap f(n);
  for (auto& y : f) y = static_cast<Elem>(pick(rng, m));
  return f;
}

Arrow<SetObj> random_set_morphism(Rng& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = pick_between(rng, lo, hi), m = pick_between(rng, std::max<std::size_t>(lo, 1), hi);
  auto a = make_set(labels(n, "a")), b = make_set(labels(m, "b"));
  return {a, b, random_map(rng, n, m)};
}

Arrow<PointedObj> random_pointed_morphism(Rng& rng, std::size_t lo, std::size_t hi) {
  lo = std::max<std::size_t>(lo, 1);
  std::size_t n = pick_between(rng, lo, hi), m = pick_between(rng, lo, hi);
  auto a = make_pointed(labels(n, "a"), 0), b = make_pointed(labels(m, "b"), 0);
  ElemMap f = random_map(rng, n, m);
  f[0] = 0;
  return {a, b, f};
}

TopObj random_space(Rng& rng, std::size_t n, const std::string& prefix) {
  return space_of(random_preorder(rng, n), labels(n, prefix));
}

Arrow<TopObj> random_top_morphism(Rng& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = pick_between(rng, lo, hi), m = pick_between(rng, std::max<std::size_t>(lo, 1), hi);
  auto rb = random_preorder(rng, m);
  auto ra = random_preorder(rng, n);
  ElemMap f = random_map(rng, n, m);
  // x ≤ y survives only if f x ≤ f y; an intersection of preorders is one.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!rb[f[x]][f[y]]) ra[x][y] = 0;
  return {space_of(ra, labels(n, "a")), space_of(rb, labels(m, "b")), f};
}

Arrow<Space> random_top1_morphism(Rng& rng, std::size_t lo, std::size_t hi) {
  std::size_t n = pick_between(rng, lo, hi), m = pick_between(rng, std::max<std::size_t>(lo, 1), hi);
  return {discrete_closure_space(labels(n, "a")), discrete_closure_space(labels(m, "b")), random_map(rng, n, m)};
}

AlgPool::AlgPool(const AlgebraCategory& k, std::vector<Named> objs) : objects(std::move(objs)) {
  homs.resize(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) {
      homs[i].push_back(k.hom_set(objects[i].object, objects[j].object, 1u << 16));
      if (!homs[i][j].empty()) nonempty.emplace_back(i, j);
    }
}

const Arrow<Alg>& AlgPool::random_morphism(Rng& rng) const {
  auto [i, j] = nonempty[pick(rng, nonempty.size())];
  const auto& hs = homs[i][j];
  return hs[pick(rng, hs.size())];
}

std::size_t AlgPool::index_of(const Alg& a) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i].object == a) return i;
  throw Error("AlgPool: object not in the pool");
}

std::vector<Named> cmon_catalogue(std::size_t max_order) {
  std::vector<Named> out;
  for (auto& m : commutative_monoids(std::min<std::size_t>(max_order, 4))) out.push_back(std::move(m));
  for (std::size_t n = 5; n <= max_order; ++n) out.push_back({"T" + std::to_string(n), truncated_monoid(n)});
  for (const auto& g : abelian_groups_up_to_8())
    if (g.object.size() >= 5 && g.object.size() <= max_order) out.push_back({g.name, monoid_of_group(g.object)});
  return out;
}

std::vector<Named> ab_catalogue(std::size_t max_order) {
  std::vector<Named> out;
  for (auto& g : abelian_groups_up_to_8())
    if (g.object.size() <= max_order) out.push_back(std::move(g));
  return out;
}

std::vector<Named> grp_catalogue(std::size_t max_order) {
  std::vector<Named> out;
  for (auto& g : groups_up_to_12())
    if (g.object.size() <= max_order) out.push_back(std::move(g));
  return out;
}

std::vector<Named> cring_catalogue(std::size_t max_order) {
  std::vector<Named> out;
  for (auto& r : rings_up_to_4())
    if (r.object.size() <= max_order) out.push_back(std::move(r));
  for (std::size_t n = 5; n <= std::min<std::size_t>(max_order, 8); ++n) out.push_back({"Z" + std::to_string(n), zn_ring(n)});
  if (max_order >= 8) {
    auto z2 = zn_ring(2);
    out.push_back({"F8", f8()});
    out.push_back({"F2[x]/(x^3)", poly_quotient_ring(2, {0, 0, 0})});
    out.push_back({"Z2xZ4", product_ring(z2, zn_ring(4))});
    out.push_back({"Z2xF4", product_ring(z2, f4())});
    out.push_back({"Z2xZ2xZ2", product_ring(z2, product_ring(z2, z2))});
  }
  return out;
}

}  // namespace normcat
