#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "normcat/category.hpp"
#include "normcat/partition.hpp"

// Element-level (co)limit computations shared by the set-based instances.
namespace normcat::setops {

inline std::vector<std::pair<Elem, Elem>> pullback_pairs(const ElemMap& f, const ElemMap& g) {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (f[x] == g[y]) out.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
  return out;
}

// Quotient of X + Y by the equivalence generated by f(z) ~ g(z).
inline Partition pushout_partition(const ElemMap& f, std::size_t nx, const ElemMap& g, std::size_t ny) {
  UnionFind uf(nx + ny);
  for (std::size_t z = 0; z < f.size(); ++z) uf.unite(f[z], nx + g[z]);
  return uf.partition();
}

inline std::vector<Elem> equalizer_elems(const ElemMap& f, const ElemMap& g) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] == g[x]) out.push_back(static_cast<Elem>(x));
  return out;
}

inline Partition coequalizer_partition(const ElemMap& f, const ElemMap& g, std::size_t ny) {
  UnionFind uf(ny);
  for (std::size_t x = 0; x < f.size(); ++x) uf.unite(f[x], g[x]);
  return uf.partition();
}

// t with t∘in1 = g and t∘in2 = h, for jointly surjective injections.
inline ElemMap copair_map(const ElemMap& in1, const ElemMap& in2, std::size_t apex, const ElemMap& g,
                          const ElemMap& h) {
  constexpr Elem none = ~Elem{0};
  ElemMap t(apex, none);
  auto put = [&](Elem slot, Elem value) {
    if (t[slot] != none && t[slot] != value) throw NoDiagonal("copair: the maps disagree on the pushout apex");
    t[slot] = value;
  };
  for (std::size_t x = 0; x < in1.size(); ++x) put(in1[x], g[x]);
  for (std::size_t y = 0; y < in2.size(); ++y) put(in2[y], h[y]);
  for (Elem v : t)
    if (v == none) throw NoDiagonal("copair: pushout injections are not jointly surjective");
  return t;
}

inline ElemMap map_through(const Partition& p, std::size_t offset, std::size_t n) {
  ElemMap m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = p.cls[offset + i];
  return m;
}

// Calls visit on every map n → m, in lexicographic order, after checking
// that m^n stays within the bound.
inline void for_each_map(std::size_t n, std::size_t m, std::size_t bound,
                         const std::function<void(const ElemMap&)>& visit) {
  std::size_t total = bounded_power(m, n, bound);
  if (total > bound) throw HomSetTooLarge(total, bound);
  if (n > 0 && m == 0) return;
  ElemMap f(n, 0);
  while (true) {
    visit(f);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++f[i] < m) break;
      f[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace normcat::setops
