#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "normcat/closure.hpp"
#include "normcat/report.hpp"

namespace normcat {

struct ElemMapHash {
  std::size_t operator()(const ElemMap& m) const { return boost::hash_range(m.begin(), m.end()); }
};

struct ElemMapPairHash {
  std::size_t operator()(const std::pair<ElemMap, ElemMap>& p) const {
    std::size_t h = boost::hash_range(p.first.begin(), p.first.end());
    boost::hash_combine(h, boost::hash_range(p.second.begin(), p.second.end()));
    return h;
  }
};

template <FiniteCategory K>
struct ClassSpec {
  std::string name;
  std::function<bool(const MorOf<K>&)> member;

  bool operator()(const MorOf<K>& f) const { return member(f); }
};

template <FiniteCategory K>
ClassSpec<K> iso_class(const K& k) {
  return {"iso", [&k](const MorOf<K>& f) { return is_iso(k, f); }};
}

template <FiniteCategory K>
ClassSpec<K> normal_epi_class(const K& k, ClosurePolicy policy = ClosurePolicy::cross_check) {
  return {"normal-epi", [&k, policy](const MorOf<K>& f) { return is_normal_epi(k, f, policy); }};
}

template <FiniteCategory K>
ClassSpec<K> normal_mono_class(const K& k, ClosurePolicy policy = ClosurePolicy::cross_check) {
  return {"normal-mono", [&k, policy](const MorOf<K>& f) { return is_normal_mono(k, f, policy); }};
}

template <FiniteCategory K>
ClassSpec<K> comparison_class(const K& k, ClosurePolicy policy = ClosurePolicy::cross_check) {
  return {"comparison", [&k, policy](const MorOf<K>& f) { return is_comparison(k, f, policy); }};
}

// e ⊥ m: every commuting square m∘u = v∘e has exactly one diagonal t with
// t∘e = u and m∘t = v. Exhaustive over the four hom-sets involved.
template <FiniteCategory K>
bool is_orthogonal(const K& k, const MorOf<K>& e, const MorOf<K>& m,
                   std::size_t bound = default_hom_bound()) {
  auto diagonals = k.hom_set(e.cod, m.dom, bound);
  std::unordered_map<std::pair<ElemMap, ElemMap>, int, ElemMapPairHash> fill_count;
  for (const auto& t : diagonals) ++fill_count[{compose_maps(t.map, e.map), compose_maps(m.map, t.map)}];

  // Bucket the v's by v∘e so each u meets only the v's it commutes with.
  std::unordered_map<ElemMap, std::vector<const MorOf<K>*>, ElemMapHash> by_ve;
  auto vs = k.hom_set(e.cod, m.cod, bound);
  for (const auto& v : vs) by_ve[compose_maps(v.map, e.map)].push_back(&v);
  for (const auto& u : k.hom_set(e.dom, m.dom, bound)) {
    auto it = by_ve.find(compose_maps(m.map, u.map));
    if (it == by_ve.end()) continue;
    for (const auto* v : it->second) {
      auto c = fill_count.find({u.map, v->map});
      if (c == fill_count.end() || c->second != 1) return false;
    }
  }
  return true;
}

enum class Verdict { pass, fail, inconclusive };

template <FiniteCategory K>
struct ReflectionProbe {
  MorOf<K> m;  // normal mono D' → D
  MorOf<K> u;  // A → D'
  MorOf<K> v;  // B → D
};

// Rejects a probe unless m∘u = v∘f and m is a normal mono.
template <FiniteCategory K>
void validate_probe(const K& k, const MorOf<K>& f, const ReflectionProbe<K>& p,
                    ClosurePolicy policy = ClosurePolicy::cross_check) {
  if (!(p.u.dom == f.dom) || !(p.v.dom == f.cod) || !(p.m.dom == p.u.cod) || !(p.m.cod == p.v.cod) ||
      !(compose(p.m, p.u) == compose(p.v, f)))
    throw ProbeRejected("reflection probe: square m∘u = v∘f does not commute");
  if (!is_normal_mono(k, p.m, policy)) throw ProbeRejected("reflection probe: m is not a normal mono");
}

// For each probe, exactly one t : N_f → D' with t∘hat = u and m∘t = v∘nu,
// searched over the whole hom-set. A hom-set over the bound makes the
// verdict inconclusive; it never counts as a pass.
template <FiniteCategory K>
Verdict check_reflection_property(const K& k, const NormalClosure<typename K::Object>& nc,
                                  const std::vector<ReflectionProbe<K>>& probes,
                                  std::string* note = nullptr, std::size_t bound = default_hom_bound()) {
  bool skipped = false;
  for (const auto& p : probes) {
    std::vector<MorOf<K>> candidates;
    try {
      candidates = k.hom_set(nc.object, p.m.dom, bound);
    } catch (const HomSetTooLarge& e) {
      skipped = true;
      if (note) *note += std::string("probe skipped: ") + e.what() + "\n";
      continue;
    }
    ElemMap target = compose_maps(p.v.map, nc.nu.map);
    int found = 0;
    for (const auto& t : candidates) {
      if (compose_maps(t.map, nc.hat.map) == p.u.map && compose_maps(p.m.map, t.map) == target) ++found;
    }
    if (found != 1) {
      if (note) *note += "probe m = " + render(p.m) + " admits " + std::to_string(found) + " diagonals\n";
      return Verdict::fail;
    }
  }
  return skipped ? Verdict::inconclusive : Verdict::pass;
}

template <FiniteCategory K>
Verdict check_reflection_property(const K& k, const MorOf<K>& f, const std::vector<ReflectionProbe<K>>& probes,
                                  std::string* note = nullptr, ClosurePolicy policy = ClosurePolicy::cross_check) {
  for (const auto& p : probes) validate_probe(k, f, p, policy);
  return check_reflection_property(k, normal_closure(k, f, policy), probes, note);
}

// Iso·E ⊆ E and E·Iso ⊆ E on the automorphisms of f's endpoints. The weak
// form checks only the side named in the footnoted variant.
enum class RepleteSide { both, left_only, right_only };

template <FiniteCategory K>
std::optional<std::string> repleteness_probe(const K& k, const ClassSpec<K>& cls, const MorOf<K>& f,
                                             RepleteSide side = RepleteSide::both,
                                             std::size_t bound = default_hom_bound()) {
  if (!cls(f)) return std::nullopt;
  if (side != RepleteSide::right_only) {
    for (const auto& a : k.hom_set(f.cod, f.cod, bound))
      if (is_iso(k, a) && !cls(compose(a, f))) return "iso∘f leaves " + cls.name + ": iso " + render(a);
  }
  if (side != RepleteSide::left_only) {
    for (const auto& a : k.hom_set(f.dom, f.dom, bound))
      if (is_iso(k, a) && !cls(compose(f, a))) return "f∘iso leaves " + cls.name + ": iso " + render(a);
  }
  return std::nullopt;
}

template <FiniteCategory K>
using Factorizer = std::function<std::pair<MorOf<K>, MorOf<K>>(const MorOf<K>&)>;

// (E, M)-factorization f = nu∘hat through the normal closure.
template <FiniteCategory K>
Factorizer<K> closure_factorizer(const K& k, ClosurePolicy policy = ClosurePolicy::cross_check) {
  return [&k, policy](const MorOf<K>& f) {
    auto nc = normal_closure(k, f, policy);
    return std::pair{nc.hat, nc.nu};
  };
}

template <FiniteCategory K>
Report verify_ofs(const K& k, const ClassSpec<K>& E, const ClassSpec<K>& M, const std::vector<MorOf<K>>& sample,
                  const Factorizer<K>& factor, std::size_t max_pairs = 400) {
  Report r;
  const std::string id = "ofs(" + E.name + "," + M.name + ")";
  std::vector<MorOf<K>> es, ms;
  for (const auto& f : sample) {
    auto [e, m] = factor(f);
    if (!(compose(m, e) == f)) {
      r.fail(id + ".factorization", "m∘e ≠ f", render(f));
      return r;
    }
    if (!E(e) || !M(m)) {
      r.fail(id + ".membership", "factor outside its class", render(e) + "\n" + render(m));
      return r;
    }
    es.push_back(e);
    ms.push_back(m);
    for (auto* cls : {&E, &M}) {
      if (auto bad = repleteness_probe(k, *cls, cls == &E ? e : m)) {
        r.fail(id + ".repleteness", *bad, render(f));
        return r;
      }
    }
  }
  std::size_t checked = 0;
  for (std::size_t i = 0; i < es.size() && checked < max_pairs; ++i) {
    for (std::size_t j = 0; j < ms.size() && checked < max_pairs; ++j, ++checked) {
      if (!is_orthogonal(k, es[i], ms[j])) {
        r.fail(id + ".orthogonality", "e not orthogonal to m", render(es[i]) + "\n" + render(ms[j]));
        return r;
      }
    }
  }
  r.pass(id, std::to_string(sample.size()) + " factorizations, " + std::to_string(checked) + " orthogonal pairs");
  return r;
}

// Double diagonal (P,K) ⊥ (K,N): for every outer square n∘k'∘u = v∘k∘p
// there are unique s, t with s∘p = u, n∘t = v and t∘k = k'∘s.
template <FiniteCategory K>
bool double_diagonal(const K& k, const MorOf<K>& p, const MorOf<K>& kk, const MorOf<K>& k2, const MorOf<K>& n,
                     std::size_t bound = default_hom_bound()) {
  std::unordered_map<ElemMap, std::vector<ElemMap>, ElemMapHash> s_by_u, t_by_v;
  for (const auto& s : k.hom_set(p.cod, k2.dom, bound)) s_by_u[compose_maps(s.map, p.map)].push_back(s.map);
  for (const auto& t : k.hom_set(kk.cod, n.dom, bound)) t_by_v[compose_maps(n.map, t.map)].push_back(t.map);
  auto left = compose(kk, p);
  auto right = compose(n, k2);
  std::unordered_map<ElemMap, std::vector<ElemMap>, ElemMapHash> v_by_vl;
  auto vs = k.hom_set(left.cod, right.cod, bound);
  for (const auto& v : vs) v_by_vl[compose_maps(v.map, left.map)].push_back(v.map);
  for (const auto& u : k.hom_set(p.dom, k2.dom, bound)) {
    auto it = v_by_vl.find(compose_maps(right.map, u.map));
    if (it == v_by_vl.end()) continue;
    auto su = s_by_u.find(u.map);
    for (const auto& v : it->second) {
      auto tv = t_by_v.find(v);
      int count = 0;
      if (su != s_by_u.end() && tv != t_by_v.end()) {
        for (const auto& s : su->second)
          for (const auto& t : tv->second)
            if (compose_maps(t, kk.map) == compose_maps(k2.map, s)) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

template <FiniteCategory K>
struct Triple {
  MorOf<K> p;
  MorOf<K> k;
  MorOf<K> n;
};

template <FiniteCategory K>
using TripleFactorizer = std::function<Triple<K>(const MorOf<K>&)>;

template <FiniteCategory K>
TripleFactorizer<K> normal_triple_factorizer(const K& k, ClosurePolicy policy = ClosurePolicy::cross_check) {
  return [&k, policy](const MorOf<K>& f) {
    auto d = normal_decomposition(k, f, policy);
    return Triple<K>{d.pi, d.kappa, d.nu};
  };
}

template <FiniteCategory K>
Report verify_otfs(const K& k, const ClassSpec<K>& P, const ClassSpec<K>& Kc, const ClassSpec<K>& N,
                   const std::vector<MorOf<K>>& sample, const TripleFactorizer<K>& factor,
                   std::size_t max_pairs = 200) {
  Report r;
  const std::string id = "otfs(" + P.name + "," + Kc.name + "," + N.name + ")";
  std::vector<Triple<K>> triples;
  for (const auto& f : sample) {
    auto t = factor(f);
    if (!(compose(t.n, t.k, t.p) == f)) {
      r.fail(id + ".factorization", "n∘k∘p ≠ f", render(f));
      return r;
    }
    if (!P(t.p) || !Kc(t.k) || !N(t.n)) {
      r.fail(id + ".membership", "factor outside its class", render(t.p) + "\n" + render(t.k) + "\n" + render(t.n));
      return r;
    }
    triples.push_back(std::move(t));
  }
  std::size_t checked = 0;
  for (std::size_t i = 0; i < triples.size() && checked < max_pairs; ++i) {
    for (std::size_t j = 0; j < triples.size() && checked < max_pairs; ++j, ++checked) {
      const auto& a = triples[i];
      const auto& b = triples[j];
      if (!double_diagonal(k, a.p, a.k, b.k, b.n)) {
        r.fail(id + ".double-diagonal", "no unique (s,t)",
               render(a.p) + "\n" + render(a.k) + "\n" + render(b.k) + "\n" + render(b.n));
        return r;
      }
    }
  }
  r.pass(id, std::to_string(sample.size()) + " factorizations, " + std::to_string(checked) + " double diagonals");
  return r;
}

template <FiniteCategory K>
struct CWF {
  ClassSpec<K> C;
  ClassSpec<K> W;
  ClassSpec<K> F;
};

// C = K·P, W = N·P, F = N·K, decided on the triple factorization: f lies in
// a product class when the omitted factor is iso and the merged factor
// belongs to the class that absorbs it.
template <FiniteCategory K>
CWF<K> otfs_to_cwf(const K& k, const ClassSpec<K>& P, const ClassSpec<K>& Kc, const ClassSpec<K>& N,
                   TripleFactorizer<K> factor) {
  auto C = [&k, P, Kc, factor](const MorOf<K>& f) {
    auto t = factor(f);
    return is_iso(k, t.n) && P(t.p) && Kc(compose(t.n, t.k));
  };
  auto W = [&k, P, N, factor](const MorOf<K>& f) {
    auto t = factor(f);
    return is_iso(k, t.k) && P(t.p) && N(compose(t.n, t.k));
  };
  auto F = [&k, Kc, N, factor](const MorOf<K>& f) {
    auto t = factor(f);
    return is_iso(k, t.p) && N(t.n) && Kc(compose(t.k, t.p));
  };
  return {{Kc.name + "·" + P.name, C}, {N.name + "·" + P.name, W}, {N.name + "·" + Kc.name, F}};
}

template <FiniteCategory K>
std::array<ClassSpec<K>, 3> cwf_to_otfs(const CWF<K>& cwf) {
  auto meet = [](const ClassSpec<K>& a, const ClassSpec<K>& b) {
    return ClassSpec<K>{a.name + "∩" + b.name, [a, b](const MorOf<K>& f) { return a(f) && b(f); }};
  };
  return {meet(cwf.C, cwf.W), meet(cwf.C, cwf.F), meet(cwf.F, cwf.W)};
}

struct QuillenResult {
  bool c1 = true;
  bool c2 = true;
  bool c3 = true;
  std::string w1, w2, w3;
};

// 1. P·N ⊆ N·P; 2. p∘k ∈ P, p ∈ P, k ∈ K ⇒ k iso; 3. k∘n ∈ N, n ∈ N,
// k ∈ K ⇒ k iso. Searched over all composable pairs of the sample; the
// first counterexample of each condition is kept.
template <FiniteCategory K>
QuillenResult check_quillen_conditions(const K& k, const ClassSpec<K>& P, const ClassSpec<K>& Kc,
                                       const ClassSpec<K>& N, const std::vector<MorOf<K>>& sample,
                                       const TripleFactorizer<K>& factor) {
  QuillenResult q;
  std::vector<char> inP, inK, inN, iso;
  for (const auto& f : sample) {
    inP.push_back(P(f));
    inK.push_back(Kc(f));
    inN.push_back(N(f));
    iso.push_back(is_iso(k, f));
  }
  auto in_W = [&](const MorOf<K>& f) {
    auto t = factor(f);
    return is_iso(k, t.k);
  };
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const auto& first = sample[i];
      const auto& second = sample[j];
      if (!(first.cod == second.dom)) continue;
      if (q.c1 && inN[i] && inP[j] && !in_W(compose(second, first))) {
        q.c1 = false;
        q.w1 = "n = " + render(first) + "\np = " + render(second);
      }
      if (q.c2 && inK[i] && !iso[i] && inP[j] && P(compose(second, first))) {
        q.c2 = false;
        q.w2 = "k = " + render(first) + "\np = " + render(second);
      }
      if (q.c3 && inN[i] && inK[j] && !iso[j] && N(compose(second, first))) {
        q.c3 = false;
        q.w3 = "n = " + render(first) + "\nk = " + render(second);
      }
    }
  }
  return q;
}

// Extensive, monotone, idempotent and continuous: f(nu_m) ≤ nu_{f(m)}.
template <FiniteCategory K>
Report closure_operator_laws(const K& k, const std::vector<MorOf<K>>& monos, const std::vector<MorOf<K>>& maps,
                             ClosurePolicy policy = ClosurePolicy::cross_check) {
  Report r;
  std::vector<NormalClosure<typename K::Object>> closures;
  for (const auto& m : monos) {
    auto c = normal_closure(k, m, policy);
    if (!subobject_leq(m, c.nu)) {
      r.fail("closure.extensive", "m not below its closure", render(m));
      return r;
    }
    auto cc = normal_closure(k, c.nu, policy);
    if (!same_subobject(cc.nu, c.nu)) {
      r.fail("closure.idempotent", "closure of closure is larger", render(m));
      return r;
    }
    closures.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      if (!(monos[i].cod == monos[j].cod) || !subobject_leq(monos[i], monos[j])) continue;
      if (!subobject_leq(closures[i].nu, closures[j].nu)) {
        r.fail("closure.monotone", "m ≤ m' but closures not ordered", render(monos[i]) + "\n" + render(monos[j]));
        return r;
      }
    }
  }
  for (const auto& f : maps) {
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (!(monos[i].cod == f.dom)) continue;
      auto fm = image_factorization(k, compose(f, monos[i])).second;
      auto fnu = image(compose(f, closures[i].nu));
      if (!fnu.is_subset_of(image(normal_closure(k, fm, policy).nu))) {
        r.fail("closure.continuous", "f(nu_m) not below nu_f(m)", render(f) + "\n" + render(monos[i]));
        return r;
      }
    }
  }
  r.pass("closure.laws", std::to_string(monos.size()) + " monos, " + std::to_string(maps.size()) + " maps");
  return r;
}

template <FiniteCategory K>
struct CompositionWitness {
  MorOf<K> first;
  MorOf<K> second;
};

// First composable pair of members whose composite second∘first leaves the class.
template <FiniteCategory K>
std::optional<CompositionWitness<K>> composition_closure_probe(
    const ClassSpec<K>& cls, const std::vector<std::pair<MorOf<K>, MorOf<K>>>& pairs) {
  for (const auto& [first, second] : pairs) {
    if (!(first.cod == second.dom) || !cls(first) || !cls(second)) continue;
    if (!cls(compose(second, first))) return CompositionWitness<K>{first, second};
  }
  return std::nullopt;
}

}  // namespace normcat
