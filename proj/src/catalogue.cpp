#include "normcat/catalogue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "normcat/setops.hpp"

namespace normcat {

namespace {

std::vector<std::string> numbers(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  return k == 1 ? base : base + std::to_string(k);
}

using Perm = std::vector<std::size_t>;

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Perm compose_perm(const Perm& s, const Perm& t) {
  Perm r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = s[t[i]];
  return r;
}

}  // namespace

Alg cyclic_group(std::size_t n, bool abelian) {
  Table op(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x][y] = static_cast<Elem>((x + y) % n);
  return make_group(numbers(n), op, 0, abelian);
}

Alg direct_product(const Alg& a, const Alg& b) {
  if (a->variety != b->variety) throw ValidationError("direct_product: varieties differ");
  return product_algebra(a, b);
}

Alg metacyclic_group(std::size_t n, std::size_t m, std::size_t t, std::size_t r, const std::string& a,
                     const std::string& x) {
  const std::size_t size = n * m;
  auto idx = [n](std::size_t i, std::size_t j) { return static_cast<Elem>(j * n + i); };
  std::vector<std::string> labels(size);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string l = power_label(a, i) + power_label(x, j);
      labels[idx(i, j)] = l.empty() ? "e" : l;
    }
  std::vector<std::size_t> rpow(m, 1 % n);
  for (std::size_t j = 1; j < m; ++j) rpow[j] = rpow[j - 1] * r % n;
  Table op(size, std::vector<Elem>(size));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t e = i + k * rpow[j];
          std::size_t xs = j + l;
          if (xs >= m) {
            xs -= m;
            e += t;
          }
          op[idx(i, j)][idx(k, l)] = idx(e % n, xs);
        }
  return make_group(std::move(labels), op, 0, false);
}

Alg dihedral_group(std::size_t n) { return metacyclic_group(n, 2, 0, n - 1, "r", "s"); }

Alg quaternion_group() { return metacyclic_group(4, 2, 2, 3, "i", "j"); }

Alg permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) throw ValidationError("permutation_group: generator of the wrong degree");
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (g[i] < 1 || g[i] > degree) throw ValidationError("permutation_group: image outside 1..degree");
      p[i] = g[i] - 1;
    }
    gens.push_back(p);
  }
  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm q = compose_perm(g, elems[i]);
      if (index.emplace(q, static_cast<Elem>(elems.size())).second) elems.push_back(q);
    }
  const std::size_t n = elems.size();
  Table op(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) op[a][b] = index.at(compose_perm(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycle_label(p));
  return make_group(std::move(labels), op, 0, false);
}

Alg symmetric3() { return permutation_group(3, {{2, 1, 3}, {2, 3, 1}}); }

Alg alternating4() { return permutation_group(4, {{2, 3, 1, 4}, {2, 1, 4, 3}}); }

std::vector<Named> groups_up_to_12() {
  std::vector<Named> out;
  auto z = [](std::size_t n) { return cyclic_group(n, false); };
  for (std::size_t n = 1; n <= 12; ++n) {
    out.push_back({"Z" + std::to_string(n), z(n)});
    switch (n) {
      case 4: out.push_back({"V4", direct_product(z(2), z(2))}); break;
      case 6: out.push_back({"S3", symmetric3()}); break;
      case 8:
        out.push_back({"Z4xZ2", direct_product(z(4), z(2))});
        out.push_back({"Z2^3", direct_product(direct_product(z(2), z(2)), z(2))});
        out.push_back({"D4", dihedral_group(4)});
        out.push_back({"Q8", quaternion_group()});
        break;
      case 9: out.push_back({"Z3xZ3", direct_product(z(3), z(3))}); break;
      case 10: out.push_back({"D5", dihedral_group(5)}); break;
      case 12:
        out.push_back({"Z2xZ6", direct_product(z(2), z(6))});
        out.push_back({"A4", alternating4()});
        out.push_back({"D6", dihedral_group(6)});
        out.push_back({"Dic3", metacyclic_group(6, 2, 3, 5)});
        break;
      default: break;
    }
  }
  return out;
}

namespace {

std::vector<Named> small_abelian(bool abelian) {
  std::vector<Named> out;
  auto z = [abelian](std::size_t n) { return cyclic_group(n, abelian); };
  for (std::size_t n = 1; n <= 8; ++n) {
    out.push_back({"Z" + std::to_string(n), z(n)});
    if (n == 4) out.push_back({"V4", direct_product(z(2), z(2))});
    if (n == 8) {
      out.push_back({"Z4xZ2", direct_product(z(4), z(2))});
      out.push_back({"Z2^3", direct_product(direct_product(z(2), z(2)), z(2))});
    }
  }
  return out;
}

}  // namespace

std::vector<Named> abelian_groups_up_to_8() { return small_abelian(true); }

std::vector<Named> groups_up_to_8() {
  std::vector<Named> out;
  for (auto& g : groups_up_to_12())
    if (g.object.size() <= 8) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------- rings

Alg zero_ring() { return trivial_algebra(Variety::cring); }

Alg zn_ring(std::size_t n) {
  if (n == 1) return zero_ring();
  Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      add[x][y] = static_cast<Elem>((x + y) % n);
      mul[x][y] = static_cast<Elem>((x * y) % n);
    }
  return make_cring(numbers(n), add, mul, 0, 1);
}

Alg poly_quotient_ring(std::size_t n, const std::vector<std::size_t>& lower) {
  const std::size_t d = lower.size();
  if (n < 2 || d == 0) throw ValidationError("poly_quotient_ring: needs n ≥ 2 and degree ≥ 1");
  std::size_t size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= n;
  using Poly = std::vector<std::size_t>;
  auto decode = [&](std::size_t v) {
    Poly p(d);
    for (std::size_t i = 0; i < d; ++i, v /= n) p[i] = v % n;
    return p;
  };
  auto encode = [&](const Poly& p) {
    std::size_t v = 0;
    for (std::size_t i = d; i-- > 0;) v = v * n + p[i];
    return static_cast<Elem>(v);
  };
  auto label = [&](const Poly& p) {
    std::string out;
    for (std::size_t i = d; i-- > 0;) {
      if (p[i] == 0) continue;
      if (!out.empty()) out += "+";
      std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
      if (p[i] != 1 || i == 0) out += std::to_string(p[i]);
      out += mono;
    }
    return out.empty() ? std::string("0") : out;
  };
  auto times = [&](const Poly& a, const Poly& b) {
    Poly full(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) full[i + j] = (full[i + j] + a[i] * b[j]) % n;
    // x^d = -(c_0 + ... + c_{d-1} x^{d-1})
    for (std::size_t k = 2 * d - 1; k >= d; --k) {
      std::size_t c = full[k];
      if (c == 0) continue;
      full[k] = 0;
      for (std::size_t i = 0; i < d; ++i)
        full[k - d + i] = (full[k - d + i] + (n - lower[i] % n) % n * c) % n;
    }
    return Poly(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(d));
  };
  std::vector<std::string> labels;
  Table add(size, std::vector<Elem>(size)), mul(size, std::vector<Elem>(size));
  for (std::size_t a = 0; a < size; ++a) {
    Poly pa = decode(a);
    labels.push_back(label(pa));
    for (std::size_t b = 0; b < size; ++b) {
      Poly pb = decode(b), s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = (pa[i] + pb[i]) % n;
      add[a][b] = encode(s);
      mul[a][b] = encode(times(pa, pb));
    }
  }
  Poly one(d, 0);
  one[0] = 1;
  return make_cring(std::move(labels), add, mul, 0, encode(one));
}

Alg f4() { return poly_quotient_ring(2, {1, 1}); }
Alg f8() { return poly_quotient_ring(2, {1, 1, 0}); }
Alg dual_numbers_f2() { return poly_quotient_ring(2, {0, 0}); }

Alg product_ring(const Alg& a, const Alg& b) { return direct_product(a, b); }

std::vector<Named> rings_up_to_4() {
  return {{"0", zero_ring()},
          {"Z2", zn_ring(2)},
          {"Z3", zn_ring(3)},
          {"Z4", zn_ring(4)},
          {"F4", f4()},
          {"Z2xZ2", product_ring(zn_ring(2), zn_ring(2))},
          {"F2[x]/(x^2)", dual_numbers_f2()}};
}

Arrow<Alg> frobenius(const Alg& r) {
  const std::size_t p = characteristic(r);
  ElemMap m(r.size());
  for (Elem x = 0; x < r.size(); ++x) {
    Elem y = one_of(r);
    for (std::size_t i = 0; i < p; ++i) y = mul(r, y, x);
    m[x] = y;
  }
  return CRingCategory{}.morphism(r, r, std::move(m));
}

Arrow<Alg> ring_from_zn(const Alg& zn, const Alg& r) {
  ElemMap m(zn.size());
  Elem k = zero_of(r);
  // zn's elements are 0..n-1 in order when built by zn_ring.
  for (Elem i = 0; i < zn.size(); ++i) {
    m[i] = k;
    k = add(r, k, one_of(r));
  }
  return CRingCategory{}.morphism(zn, r, std::move(m));
}

// ---------------------------------------------------------------- monoids

Alg truncated_monoid(std::size_t n) {
  Table op(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) op[x][y] = static_cast<Elem>(std::min(x + y, n - 1));
  return make_cmon(numbers(n), op, 0);
}

Alg monoid_of_group(const Alg& g) {
  return make_algebra({Variety::cmon, g.labels(), {unit_of(g)}, {}, {g->binary[0]}});
}

std::vector<Named> commutative_monoids(std::size_t max_order) {
  static const char* names = "eabcdefgh";
  std::vector<Named> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    // Unit is element 0; the cells (i, j) with 1 ≤ i ≤ j < n are free.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
    std::set<std::vector<Elem>> seen;
    std::vector<std::size_t> perm(n);
    setops::for_each_map(cells.size(), n, ~std::size_t{0} >> 1, [&](const ElemMap& values) {
      std::vector<Elem> t(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        t[x] = static_cast<Elem>(x);
        t[x * n] = static_cast<Elem>(x);
      }
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto [i, j] = cells[c];
        t[i * n + j] = t[j * n + i] = values[c];
      }
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return;
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<Elem> best;
      do {
        std::vector<Elem> r(n * n);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) r[perm[x] * n + perm[y]] = static_cast<Elem>(perm[t[x * n + y]]);
        if (best.empty() || r < best) best = std::move(r);
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      if (!seen.insert(best).second) return;
      std::vector<std::string> labels;
      for (std::size_t x = 0; x < n; ++x) labels.emplace_back(1, names[x]);
      auto m = make_algebra({Variety::cmon, labels, {0}, {}, {best}});
      out.push_back({"M" + std::to_string(n) + "." + std::to_string(out.size()), m});
    });
  }
  return out;
}

// ---------------------------------------------------------------- spaces

std::vector<TopObj> topologies_up_to(std::size_t max_points) {
  std::vector<TopObj> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off.emplace_back(i, j);
    std::set<std::vector<char>> seen;
    std::vector<std::size_t> perm(n);
    for (std::size_t bits = 0; bits < (std::size_t{1} << off.size()); ++bits) {
      std::vector<char> le(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
      for (std::size_t b = 0; b < off.size(); ++b)
        if (bits >> b & 1) le[off[b].first * n + off[b].second] = 1;
      bool transitive = true;
      for (std::size_t x = 0; x < n && transitive; ++x)
        for (std::size_t y = 0; y < n && transitive; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (le[x * n + y] && le[y * n + z] && !le[x * n + z]) {
              transitive = false;
              break;
            }
      if (!transitive) continue;
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<char> best;
      do {
        std::vector<char> r(n * n);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) r[perm[x] * n + perm[y]] = le[x * n + y];
        if (best.empty() || r > best) best = std::move(r);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) continue;
      std::vector<Subset> nbhd(n, Subset(n));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (best[x * n + y]) nbhd[x].set(y);
      out.push_back(make_space_from_nbhds(numbers(n), std::move(nbhd)));
    }
  }
  return out;
}

}  // namespace normcat
