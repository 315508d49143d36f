#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "normcat/arrow.hpp"

namespace normcat {

// Equivalence relation on {0..n-1}. Classes are numbered in order of their
// least element, which is also the class representative.
struct Partition {
  std::vector<Elem> cls;   // element -> class index
  std::vector<Elem> reps;  // class index -> least element

  std::size_t classes() const { return reps.size(); }
  bool singleton(Elem c) const {
    std::size_t n = 0;
    for (Elem x : cls) n += (x == c);
    return n == 1;
  }
};

// Union-find that can report whether a union actually merged two classes.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : n_(n), sets_(n) {
    for (std::size_t i = 0; i < n; ++i) sets_.make_set(i);
  }
  std::size_t find(std::size_t x) { return sets_.find_set(x); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    sets_.link(a, b);
    return true;
  }
  std::size_t size() const { return n_; }

  Partition partition() {
    const std::size_t n = size();
    Partition p;
    p.cls.assign(n, 0);
    std::vector<Elem> by_root(n, ~Elem{0});
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t r = find(x);
      if (by_root[r] == ~Elem{0}) {
        by_root[r] = static_cast<Elem>(p.reps.size());
        p.reps.push_back(static_cast<Elem>(x));
      }
      p.cls[x] = by_root[r];
    }
    return p;
  }

 private:
  std::size_t n_;
  boost::disjoint_sets_with_storage<> sets_;
};

inline Partition partition_of(std::size_t n, const std::vector<std::pair<Elem, Elem>>& pairs) {
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  return uf.partition();
}

inline Partition partition_of_kernel(const ElemMap& f) {
  auto ids = kernel_classes(f);
  Partition p;
  p.cls = ids;
  for (std::size_t x = 0; x < ids.size(); ++x)
    if (ids[x] == p.reps.size()) p.reps.push_back(static_cast<Elem>(x));
  return p;
}

// Primes repeated labels until all are distinct (iterated quotients can
// produce "[a]" both as a class name and as an inherited label).
inline std::vector<std::string> distinct_labels(std::vector<std::string> labels) {
  std::set<std::string> seen;
  for (auto& l : labels) {
    while (!seen.insert(l).second) l += "'";
  }
  return labels;
}

// Labels of a quotient: singleton classes keep their label, merged classes
// are written "[rep]" after their least member.
inline std::vector<std::string> quotient_labels(const std::vector<std::string>& labels, const Partition& p) {
  std::vector<std::size_t> count(p.classes(), 0);
  for (Elem c : p.cls) ++count[c];
  std::vector<std::string> out;
  out.reserve(p.classes());
  for (std::size_t c = 0; c < p.classes(); ++c) {
    const std::string& rep = labels[p.reps[c]];
    out.push_back(count[c] == 1 ? rep : "[" + rep + "]");
  }
  return distinct_labels(std::move(out));
}

// Labels "1:x" and "2:y" of a disjoint union.
inline std::vector<std::string> sum_labels(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  for (const auto& x : a) out.push_back("1:" + x);
  for (const auto& y : b) out.push_back("2:" + y);
  return out;
}

inline std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace normcat
