#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "normcat/errors.hpp"

namespace normcat {

// Elements of a finite carrier are indices into its canonical label order.
using Elem = std::uint32_t;
using ElemMap = std::vector<Elem>;
using Subset = boost::dynamic_bitset<>;

// Shared immutable payload of an object. `Data` must expose `labels` and
// a defaulted equality. Copies are cheap; equality is structural.
template <class Data>
class Handle {
 public:
  Handle() = default;
  explicit Handle(Data data) : data_(std::make_shared<const Data>(std::move(data))) {}

  const Data& operator*() const { return *data_; }
  const Data* operator->() const { return data_.get(); }

  std::size_t size() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  friend bool operator==(const Handle& a, const Handle& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return *a.data_ == *b.data_;
  }

 private:
  std::shared_ptr<const Data> data_;
};

// A morphism of a concrete finite category: a total element map between
// carriers, together with its domain and codomain objects.
template <class Object>
struct Arrow {
  Object dom;
  Object cod;
  ElemMap map;

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const Arrow& a, const Arrow& b) {
    return a.map == b.map && a.dom == b.dom && a.cod == b.cod;
  }
};

inline ElemMap identity_map(std::size_t n) {
  ElemMap m(n);
  std::iota(m.begin(), m.end(), Elem{0});
  return m;
}

inline ElemMap compose_maps(const ElemMap& g, const ElemMap& f) {
  ElemMap h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

inline bool injective(const ElemMap& f, std::size_t cod_size) {
  std::vector<char> hit(cod_size, 0);
  for (Elem y : f) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

inline bool surjective(const ElemMap& f, std::size_t cod_size) {
  std::vector<char> hit(cod_size, 0);
  std::size_t count = 0;
  for (Elem y : f) {
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  }
  return count == cod_size;
}

inline Subset image_of(const ElemMap& f, std::size_t cod_size) {
  Subset s(cod_size);
  for (Elem y : f) s.set(y);
  return s;
}

inline Subset full_subset(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

inline std::vector<Elem> members(const Subset& s) {
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

// Class ids numbered by first occurrence, so two maps with the same kernel
// partition yield identical vectors.
inline std::vector<Elem> kernel_classes(const ElemMap& f) {
  constexpr Elem none = ~Elem{0};
  std::vector<Elem> ids(f.size());
  Elem top = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
  std::vector<Elem> seen(static_cast<std::size_t>(top) + 1, none);
  Elem next = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (seen[f[i]] == none) seen[f[i]] = next++;
    ids[i] = seen[f[i]];
  }
  return ids;
}

template <class Object>
Arrow<Object> identity(const Object& o) {
  return {o, o, identity_map(o.size())};
}

template <class Object>
Arrow<Object> compose(const Arrow<Object>& g, const Arrow<Object>& f) {
  if (!(g.dom == f.cod)) throw Error("compose: domain of g differs from codomain of f");
  return {f.dom, g.cod, compose_maps(g.map, f.map)};
}

template <class Object, class... Rest>
Arrow<Object> compose(const Arrow<Object>& h, const Arrow<Object>& g, const Rest&... rest) {
  return compose(h, compose(g, rest...));
}

template <class Object>
bool is_injective(const Arrow<Object>& f) {
  return injective(f.map, f.cod.size());
}

template <class Object>
bool is_surjective(const Arrow<Object>& f) {
  return surjective(f.map, f.cod.size());
}

template <class Object>
bool is_bijective(const Arrow<Object>& f) {
  return f.dom.size() == f.cod.size() && is_injective(f);
}

template <class Object>
Subset image(const Arrow<Object>& f) {
  return image_of(f.map, f.cod.size());
}

// Subobject order on images inside the common codomain.
template <class Object>
bool subobject_leq(const Arrow<Object>& m, const Arrow<Object>& n) {
  return image(m).is_subset_of(image(n));
}

template <class Object>
bool same_subobject(const Arrow<Object>& m, const Arrow<Object>& n) {
  return m.cod == n.cod && is_injective(m) && is_injective(n) && image(m) == image(n);
}

// Same quotient of the common domain: equal kernel partitions, both onto.
template <class Object>
bool same_quotient(const Arrow<Object>& e, const Arrow<Object>& q) {
  return e.dom == q.dom && is_surjective(e) && is_surjective(q) &&
         kernel_classes(e.map) == kernel_classes(q.map);
}

// The unique element map t with m∘t = g, when m is injective and the image
// of g lies in the image of m.
template <class Object>
std::optional<ElemMap> lift_map(const Arrow<Object>& m, const Arrow<Object>& g) {
  constexpr Elem none = ~Elem{0};
  ElemMap back(m.cod.size(), none);
  for (std::size_t i = 0; i < m.map.size(); ++i) {
    if (back[m.map[i]] != none) return std::nullopt;
    back[m.map[i]] = static_cast<Elem>(i);
  }
  ElemMap t(g.map.size());
  for (std::size_t i = 0; i < g.map.size(); ++i) {
    if (back[g.map[i]] == none) return std::nullopt;
    t[i] = back[g.map[i]];
  }
  return t;
}

// The unique element map t with t∘e = g, when e is surjective and g is
// constant on the fibres of e.
template <class Object>
std::optional<ElemMap> descend_map(const Arrow<Object>& e, const Arrow<Object>& g) {
  constexpr Elem none = ~Elem{0};
  ElemMap t(e.cod.size(), none);
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    Elem& slot = t[e.map[i]];
    if (slot == none) {
      slot = g.map[i];
    } else if (slot != g.map[i]) {
      return std::nullopt;
    }
  }
  if (std::find(t.begin(), t.end(), none) != t.end()) return std::nullopt;
  return t;
}

inline ElemMap inverse_map(const ElemMap& f) {
  ElemMap inv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = static_cast<Elem>(i);
  return inv;
}

}  // namespace normcat
