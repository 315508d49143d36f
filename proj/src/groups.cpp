#include "normcat/groups.hpp"

namespace normcat {

namespace {

Elem inv(const Alg& g, Elem x) { return g->unary[0][x]; }
Elem op(const Alg& g, Elem x, Elem y) { return g->op(0, x, y); }

const GrpCategory& grp() {
  static const GrpCategory k;
  return k;
}

void require_group(const Alg& g, const char* who) {
  if (g->variety != Variety::grp && g->variety != Variety::ab)
    throw ValidationError(std::string(who) + ": needs a group, got a " + variety_name(g->variety) + " object");
}

}  // namespace

Subset unit_subset(const Alg& g) {
  Subset s(g.size());
  s.set(unit_of(g));
  return s;
}

bool is_subgroup(const Alg& g, const Subset& s) { return s.any() && is_closed(g, s); }

bool is_normal_subgroup(const Alg& g, const Subset& s) {
  if (!is_subgroup(g, s)) return false;
  for (auto n = s.find_first(); n != Subset::npos; n = s.find_next(n))
    for (Elem x = 0; x < g.size(); ++x)
      if (!s.test(op(g, op(g, x, static_cast<Elem>(n)), inv(g, x)))) return false;
  return true;
}

Subset normal_hull(const Alg& g, const Subset& x) {
  require_group(g, "normal_hull");
  Subset h = generated(g, x);
  for (;;) {
    Subset next = h;
    for (auto n = h.find_first(); n != Subset::npos; n = h.find_next(n))
      for (Elem y = 0; y < g.size(); ++y) next.set(op(g, op(g, y, static_cast<Elem>(n)), inv(g, y)));
    next = generated(g, next);
    if (next == h) return h;
    h = std::move(next);
  }
}

Subset set_product(const Alg& g, const Subset& s, const Subset& t) {
  Subset out(g.size());
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a))
    for (auto b = t.find_first(); b != Subset::npos; b = t.find_next(b))
      out.set(op(g, static_cast<Elem>(a), static_cast<Elem>(b)));
  return out;
}

Subset kernel_set(const Arrow<Alg>& f) {
  Subset s(f.dom.size());
  for (Elem x = 0; x < f.dom.size(); ++x)
    if (f.map[x] == unit_of(f.cod)) s.set(x);
  return s;
}

Subset image_set(const Arrow<Alg>& f) { return image(f); }

Partition coset_partition(const Alg& g, const Subset& n) {
  if (!is_normal_subgroup(g, n)) throw ValidationError("coset_partition: " + render_subset(g, n) + " is not normal");
  UnionFind uf(g.size());
  for (Elem x = 0; x < g.size(); ++x)
    for (auto m = n.find_first(); m != Subset::npos; m = n.find_next(m)) uf.unite(x, op(g, x, static_cast<Elem>(m)));
  return uf.partition();
}

Subset slice_closure_set(const Arrow<Alg>& f, const Arrow<Alg>& p) {
  require_group(f.cod, "slice_closure_set");
  if (!(p.dom == f.cod)) throw ValidationError("slice_closure_set: p must start at the codomain of f");
  Subset im = image_set(f);
  Subset e = kernel_set(p) & im;
  Subset n = set_product(f.cod, im, normal_hull(f.cod, e));
  if (!is_subgroup(f.cod, n)) throw Error("slice_closure_set: Im(f)·Ê^B is not a subgroup");
  return n;
}

bool grp_slice_normal_mono_test(const Arrow<Alg>& f, const Arrow<Alg>& p) {
  if (!is_injective(f)) return false;
  Subset im = image_set(f);
  return normal_hull(f.cod, kernel_set(p) & im).is_subset_of(im);
}

SubgroupPushoutSquare subgroup_pushout_square(const Arrow<Alg>& incl, const Arrow<Alg>& p) {
  if (!is_injective(incl)) throw ValidationError("subgroup_pushout_square: needs a subgroup inclusion");
  const Alg& A = incl.dom;
  const Alg& B = incl.cod;
  // E as a subgroup of A: the kernel of p restricted to A.
  Subset e_in_a = kernel_set(compose(p, incl));
  Subset e_in_b(B.size());
  for (auto a = e_in_a.find_first(); a != Subset::npos; a = e_in_a.find_next(a)) e_in_b.set(incl.map[a]);
  Subset hull = normal_hull(B, e_in_b);
  auto p_tilde = grp().quotient_map(A, coset_partition(A, e_in_a));
  auto p_bar = grp().quotient_map(B, coset_partition(B, hull));
  auto k = descend_along(grp(), p_tilde, compose(p_bar, incl));
  if (!k) throw NoDiagonal("subgroup_pushout_square: E is not inside the hull");
  return {incl, p_tilde, p_bar, *k, hull};
}

bool preimage_of_image_matches(const SubgroupPushoutSquare& sq) {
  const Alg& B = sq.incl.cod;
  Subset im_k = image(sq.k);
  Subset pre(B.size());
  for (Elem y = 0; y < B.size(); ++y)
    if (im_k.test(sq.p_bar.map[y])) pre.set(y);
  return pre == set_product(B, image(sq.incl), sq.hull);
}

PushoutCocone<Alg> grp_pushout_along_regular_epi(const Arrow<Alg>& q, const Arrow<Alg>& f) {
  if (!is_surjective(q)) throw ValidationError("grp_pushout_along_regular_epi: q must be surjective");
  const Alg& B = f.cod;
  Subset fk(B.size());
  Subset ker = kernel_set(q);
  for (auto z = ker.find_first(); z != Subset::npos; z = ker.find_next(z)) fk.set(f.map[z]);
  auto in2 = grp().quotient_map(B, coset_partition(B, normal_hull(B, fk)));
  auto in1 = descend_along(grp(), q, compose(in2, f));
  if (!in1) throw NoDiagonal("grp_pushout_along_regular_epi: Ker q is not killed");
  return {in2.cod, *in1, in2};
}

NormalDualClosure<Alg> grp_coslice_dual_closure(const Arrow<Alg>& j, const Arrow<Alg>& f) {
  if (!(j.cod == f.dom)) throw ValidationError("grp_coslice_dual_closure: j must end at the domain of f");
  auto pi = grp().quotient_map(f.dom, partition_of_kernel(f.map));
  auto check = descend_along(grp(), pi, f);
  return {pi.cod, pi, *check};
}

Verdict coslice_square_is_pushout(const Arrow<Alg>& j, const Arrow<Alg>& f, const std::vector<Alg>& targets,
                                  std::size_t bound) {
  const auto& k = grp();
  auto [e, m] = image_factorization(k, f);  // A ↠ Im f
  auto c_to_im = compose(e, j);
  auto pb = k.pullback(c_to_im, e);  // pr1 : P → C, pr2 : P → A
  try {
    for (const auto& x : targets) {
      auto from_im = k.hom_set(e.cod, x, bound);
      for (const auto& g : k.hom_set(c_to_im.dom, x, bound))
        for (const auto& h : k.hom_set(e.dom, x, bound)) {
          if (!(compose(g, pb.pr1) == compose(h, pb.pr2))) continue;
          int n = 0;
          for (const auto& t : from_im)
            if (compose(t, c_to_im) == g && compose(t, e) == h) ++n;
          if (n != 1) return Verdict::fail;
        }
    }
  } catch (const HomSetTooLarge&) {
    return Verdict::inconclusive;
  }
  return Verdict::pass;
}

}  // namespace normcat
