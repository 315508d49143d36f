// normcat: decompose morphisms, run verification suites, generate random
// instance documents and cross-check closed forms against generic routes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "normcat/algebra.hpp"
#include "normcat/doc.hpp"
#include "normcat/slices.hpp"
#include "normcat/suites.hpp"
#include "normcat/top1.hpp"

using namespace normcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <FiniteCategory K>
std::string memberships(const K& k, const MorOf<K>& g) {
  std::string out = std::string("iso: ") + yes_no(is_iso(k, g));
  auto probe = [&](const char* name, auto test) {
    out += std::string(", ") + name + ": ";
    try {
      out += yes_no(test());
    } catch (const Error&) {
      out += "not representable";
    }
  };
  probe("normal mono", [&] { return is_normal_mono(k, g); });
  probe("normal epi", [&] { return is_normal_epi(k, g); });
  probe("comparison", [&] { return is_comparison(k, g); });
  return out;
}

// Findings and a printed factorization for one morphism of one category.
template <FiniteCategory K>
NormalDecomposition<typename K::Object> decompose_into(Report& r, const K& k, const MorOf<K>& f) {
  auto d = normal_decomposition(k, f);
  std::string maps = "pi    = " + render(d.pi) + "\nkappa = " + render(d.kappa) + "\nnu    = " + render(d.nu);
  if (compose(d.nu, d.kappa, d.pi) == f)
    r.add({"decompose.identity", Status::pass, "nu∘kappa∘pi = f", maps});
  else
    r.fail("decompose.identity", "nu∘kappa∘pi differs from f", maps);
  if (is_normal_mono(k, d.nu))
    r.pass("decompose.nu-normal-mono", "N = " + render_subset(d.nu));
  else
    r.fail("decompose.nu-normal-mono", "nu is not a normal mono", render(d.nu));
  if (is_normal_epi(k, d.pi))
    r.pass("decompose.pi-normal-epi", "P = " + render_carrier(d.P));
  else
    r.fail("decompose.pi-normal-epi", "pi is not a normal epi", render(d.pi));
  r.pass("decompose.classes.f", memberships(k, f));
  r.pass("decompose.classes.pi", memberships(k, d.pi));
  r.pass("decompose.classes.kappa", memberships(k, d.kappa));
  r.pass("decompose.classes.nu", memberships(k, d.nu));
  return d;
}

template <FiniteCategory K>
Report decompose_base(const K& k, const MorOf<K>& f) {
  Report r;
  decompose_into(r, k, f);
  return r;
}

template <FiniteCategory K, class Realized>
std::vector<std::pair<std::string, CommaObject<typename K::Object>>> comma_objects(const doc::SliceDoc& s,
                                                                                  const Realized& real) {
  std::vector<std::pair<std::string, CommaObject<typename K::Object>>> out;
  for (const auto& [o, m] : s.structure) out.emplace_back(o, CommaObject<typename K::Object>{s.side, real.morphism(m)});
  return out;
}

template <class Obj>
const CommaObject<Obj>& comma_lookup(const std::vector<std::pair<std::string, CommaObject<Obj>>>& objs,
                                     const std::string& name) {
  for (const auto& [n, o] : objs)
    if (n == name) return o;
  throw ValidationError("/slice/structure: object '" + name + "' has no structure map");
}

template <FiniteCategory K, class Realized>
Report decompose_sliced(const K& k, const doc::InstanceDoc& d, const Realized& real, const std::string& name) {
  Report r;
  const auto& s = *d.slice;
  const auto& m = d.morphism(name);
  const auto& f = real.morphism(name);
  const auto& apex = real.object(s.object);
  auto objs = comma_objects<K>(s, real);
  if (s.side == Side::over) {
    SliceCategory<K> ks(k, apex);
    for (const auto& [n, o] : objs) ks.object(o.structure);
    auto fs = ks.lift(f, comma_lookup(objs, m.from), comma_lookup(objs, m.to));
    decompose_into(r, ks, fs);
    auto tau = tau_comparison(ks, fs);
    r.pass("decompose.slice.tau", std::string(is_iso(k, tau) ? "iso" : "strict") + ": " + render(tau));
    if (auto bad = slice_comparison_diagram(ks, fs))
      r.fail("decompose.slice.comparison-diagram", "edge " + *bad + " fails");
    else
      r.pass("decompose.slice.comparison-diagram", "commutes");
  } else {
    CosliceCategory<K> kc(k, apex);
    for (const auto& [n, o] : objs) kc.object(o.structure);
    auto fc = kc.lift(f, comma_lookup(objs, m.from), comma_lookup(objs, m.to));
    decompose_into(r, kc, fc);
    auto sigma = sigma_comparison(kc, fc);
    r.pass("decompose.coslice.sigma", std::string(is_iso(k, sigma) ? "iso" : "strict") + ": " + render(sigma));
    if (auto bad = coslice_comparison_diagram(kc, fc))
      r.fail("decompose.coslice.comparison-diagram", "edge " + *bad + " fails");
    else
      r.pass("decompose.coslice.comparison-diagram", "commutes");
  }
  return r;
}

// Some instances cannot build every slice pushout (CRing needs tensor
// products), which is a limit of the instance, not of the input.
template <FiniteCategory K, class Realized>
Report decompose_sliced_or_note(const K& k, const doc::InstanceDoc& d, const Realized& real, const std::string& name) {
  const std::string id = d.slice->side == Side::over ? "decompose.slice" : "decompose.coslice";
  try {
    return decompose_sliced(k, d, real, name);
  } catch (const PushoutNotRepresentable& e) {
    Report r;
    r.add({id, Status::inconclusive, std::string("construction unavailable: ") + e.what(), {}});
    return r;
  } catch (const InitialNotRepresentable& e) {
    Report r;
    r.add({id, Status::inconclusive, std::string("construction unavailable: ") + e.what(), {}});
    return r;
  }
}

template <FiniteCategory K, class Realized>
Report decompose_any(const K& k, const doc::InstanceDoc& d, const Realized& real, const std::string& name) {
  if (d.slice) return decompose_sliced_or_note(k, d, real, name);
  return decompose_base(k, real.morphism(name));
}

const std::string& structure_of(const doc::SliceDoc& s, const std::string& object) {
  for (const auto& [o, m] : s.structure)
    if (o == object) return m;
  throw ValidationError("/slice/structure: object '" + object + "' has no structure map");
}

// Finite T1 spaces are discrete; the closed forms run on any closure space,
// the full decomposition only when every space involved is discrete.
Report decompose_top1(const doc::InstanceDoc& d, const doc::Realized<Space>& real, const std::string& name) {
  Report r;
  const auto& f = real.morphism(name);
  auto t = top1_normal_closure(f);
  r.pass("decompose.top1.closure", "N = " + render_subset(t.closure.nu) + ", pushout apex " +
                                       render_carrier(t.pushout.apex));
  bool discrete = true;
  for (const auto& [n, o] : real.objects)
    for (std::size_t x = 0; x < o.size(); ++x) discrete = discrete && o->point_cl[x].count() == 1;
  if (d.slice && d.slice->side == Side::over) {
    const auto& p = real.morphism(structure_of(*d.slice, d.morphism(name).to));
    auto n = top1_slice_normal_closure(f, p);
    r.pass("decompose.top1.slice-closure", "N = " + render_subset(n.nu) + "; normal mono over C: " +
                                               yes_no(top1_slice_normal_mono_test(f, p)) +
                                               "; comparison over C: " + yes_no(top1_slice_comparison_test(f, p)));
  } else if (d.slice) {
    const auto& j = real.morphism(structure_of(*d.slice, d.morphism(name).from));
    auto dc = top1_coslice_dual_closure(j, f);
    r.pass("decompose.top1.coslice-dual-closure", "pi = " + render(dc.pi));
  }
  if (!discrete) {
    r.add({"decompose.top1.categorical", Status::inconclusive,
           "a space is not discrete, so it is not T1; only the closed forms were evaluated", {}});
    return r;
  }
  // Discrete: the same data as finite sets.
  doc::InstanceDoc as_sets = d;
  as_sets.kind = "set";
  for (auto& [n, o] : as_sets.objects) o = doc::ObjectDoc(o.carrier);
  auto sets = doc::realize_set(as_sets);
  FinSetCategory k;
  Report inner = decompose_any(k, as_sets, sets, name);
  for (auto& fi : inner.findings) {
    fi.id = "decompose.top1.discrete." + fi.id.substr(std::string("decompose.").size());
    r.add(fi);
  }
  return r;
}

std::string pick_morphism(const doc::InstanceDoc& d, const std::string& requested) {
  if (!requested.empty()) {
    d.morphism(requested);
    return requested;
  }
  for (const auto& [n, m] : d.morphisms)
    if (n == "f") return n;
  for (const auto& [n, m] : d.morphisms) {
    bool structural = false;
    if (d.slice)
      for (const auto& [o, s] : d.slice->structure) structural = structural || s == n;
    if (!structural) return n;
  }
  throw ValidationError("document has no morphism to decompose");
}

Report run_decompose(const doc::InstanceDoc& d, const std::string& requested) {
  const std::string name = pick_morphism(d, requested);
  if (d.kind == "set") return decompose_any(FinSetCategory{}, d, doc::realize_set(d), name);
  if (d.kind == "pointed-set") return decompose_any(PointedSetCategory{}, d, doc::realize_pointed(d), name);
  if (d.kind == "top") return decompose_any(FinTopCategory{}, d, doc::realize_top(d), name);
  if (d.kind == "top1") return decompose_top1(d, doc::realize_top1(d), name);
  auto real = doc::realize_algebra(d);
  if (d.kind == "cmon") return decompose_any(CMonCategory{}, d, real, name);
  if (d.kind == "ab") return decompose_any(AbCategory{}, d, real, name);
  if (d.kind == "grp") return decompose_any(GrpCategory{}, d, real, name);
  return decompose_any(CRingCategory{}, d, real, name);
}

// ---------------------------------------------------------------- cross-check

template <FiniteCategory K>
void cross_check_one(Report& r, const K& k, const MorOf<K>& f, const std::string& prefix) {
  if constexpr (HasClosedFormClosure<K>) {
    const std::string id = prefix + ".closure";
    try {
      auto g = generic_normal_closure(k, f);
      auto c = k.closed_form_closure(f);
      if (!c) r.add({id, Status::inconclusive, "no closed form for this morphism", {}});
      else if (same_subobject(g.nu, c->nu)) r.pass(id, "N = " + render_subset(g.nu));
      else r.fail(id, "generic and closed form differ", "generic N = " + render_subset(g.nu) + "\nclosed N = " + render_subset(c->nu));
    } catch (const PushoutNotRepresentable& e) {
      r.add({id, Status::inconclusive, std::string("generic route unavailable: ") + e.what(), {}});
    }
  }
  if constexpr (HasClosedFormDualClosure<K>) {
    const std::string id = prefix + ".dual-closure";
    try {
      auto g = generic_normal_dual_closure(k, f);
      auto c = k.closed_form_dual_closure(f);
      if (!c) r.add({id, Status::inconclusive, "no closed form for this morphism", {}});
      else if (same_quotient(g.pi, c->pi)) r.pass(id, "P = " + render_carrier(g.object));
      else r.fail(id, "generic and closed form differ", "generic pi = " + render(g.pi) + "\nclosed pi = " + render(c->pi));
    } catch (const PushoutNotRepresentable& e) {
      r.add({id, Status::inconclusive, std::string("generic route unavailable: ") + e.what(), {}});
    } catch (const InitialNotRepresentable& e) {
      r.add({id, Status::inconclusive, std::string("generic route unavailable: ") + e.what(), {}});
    }
  }
}

template <FiniteCategory K, class Realized>
Report cross_check_all(const K& k, const doc::InstanceDoc& d, const Realized& real) {
  Report r;
  for (const auto& [n, f] : real.morphisms) cross_check_one(r, k, f, "cross-check." + n);
  if (!d.slice) return r;
  auto objs = comma_objects<K>(*d.slice, real);
  const auto& apex = real.object(d.slice->object);
  for (const auto& [n, m] : d.morphisms) {
    bool structural = false;
    for (const auto& [o, s] : d.slice->structure) structural = structural || s == n;
    if (structural) continue;
    const auto& f = real.morphism(n);
    if (d.slice->side == Side::over) {
      SliceCategory<K> ks(k, apex);
      cross_check_one(r, ks, ks.lift(f, comma_lookup(objs, m.from), comma_lookup(objs, m.to)), "cross-check.slice." + n);
    } else {
      CosliceCategory<K> kc(k, apex);
      cross_check_one(r, kc, kc.lift(f, comma_lookup(objs, m.from), comma_lookup(objs, m.to)),
                      "cross-check.coslice." + n);
    }
  }
  return r;
}

Report run_cross_check(const doc::InstanceDoc& d) {
  if (d.kind == "set") return cross_check_all(FinSetCategory{}, d, doc::realize_set(d));
  if (d.kind == "pointed-set") return cross_check_all(PointedSetCategory{}, d, doc::realize_pointed(d));
  if (d.kind == "top") return cross_check_all(FinTopCategory{}, d, doc::realize_top(d));
  if (d.kind == "top1") {
    auto real = doc::realize_top1(d);
    Report r;
    FinSetCategory k;
    for (const auto& [n, f] : real.morphisms) {
      const std::string id = "cross-check." + n + ".top1-closure";
      auto t = top1_normal_closure(f);
      bool discrete = f.dom->t1 && f.cod->t1;
      if (!discrete) {
        r.add({id, Status::inconclusive, "not T1; no generic oracle", {}});
        continue;
      }
      auto g = generic_normal_closure(k, Arrow<SetObj>{make_set(f.dom.labels()), make_set(f.cod.labels()), f.map});
      if (image_of(g.nu.map, f.cod.size()) == image_of(t.closure.nu.map, f.cod.size()))
        r.pass(id, "N = " + render_subset(t.closure.nu));
      else
        r.fail(id, "T1 closed form differs from the FinSet generic route", render(f));
    }
    return r;
  }
  auto real = doc::realize_algebra(d);
  if (d.kind == "cmon") return cross_check_all(CMonCategory{}, d, real);
  if (d.kind == "ab") return cross_check_all(AbCategory{}, d, real);
  if (d.kind == "grp") return cross_check_all(GrpCategory{}, d, real);
  return cross_check_all(CRingCategory{}, d, real);
}

int emit(const Report& r, bool json) {
  auto s = sorted(r);
  std::cout << (json ? render_json_lines(s) : render_text(s));
  return s.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal decompositions in finite categories"};
  app.require_subcommand(1);

  bool json = false;

  auto* dec = app.add_subcommand("decompose", "Print pi, kappa, nu and class memberships for one morphism");
  std::string dec_file, dec_morphism;
  dec->add_option("file", dec_file, "Instance document, or - for stdin")->required();
  dec->add_option("--morphism,-m", dec_morphism, "Morphism name (default f, else the first non-structure map)");
  dec->add_flag("--json", json, "One JSON record per line");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  SuiteOptions so;
  ver->add_option("suite", suite, "Suite name or all")->required();
  ver->add_option("--max-order", so.max_order, "Largest algebra order in exhaustive sweeps");
  ver->add_option("--exhaustive", so.max_order, "Same as --max-order");
  ver->add_option("--max-carrier", so.max_carrier, "Largest set or space in exhaustive sweeps");
  ver->add_option("--seed", so.seed, "Seed for random samples");
  ver->add_option("--samples", so.samples, "Random samples per instance");
  ver->add_flag("--json", json, "One JSON record per line");

  auto* rnd = app.add_subcommand("random", "Write random instance documents, one per line");
  doc::RandomOptions ro;
  std::string slice_side;
  rnd->add_option("--kind", ro.kind, "Instance kind")->required();
  rnd->add_option("--seed", ro.seed, "Seed");
  rnd->add_option("--count", ro.count, "Number of documents");
  rnd->add_option("--max-carrier", ro.max_carrier, "Largest carrier or order");
  rnd->add_option("--slice", slice_side, "Wrap as a slice (over) or coslice (under)")
      ->check(CLI::IsMember({"over", "under"}));

  auto* cc = app.add_subcommand("cross-check", "Compare generic routes with closed forms for every morphism");
  std::string cc_file;
  cc->add_option("file", cc_file, "Instance document, or - for stdin")->required();
  cc->add_flag("--json", json, "One JSON record per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dec) return emit(run_decompose(doc::parse(read_input(dec_file)), dec_morphism), json);
    if (*ver) return emit(run_suite(suite, so), json);
    if (*cc) return emit(run_cross_check(doc::parse(read_input(cc_file))), json);
    if (*rnd) {
      if (!slice_side.empty()) ro.slice = slice_side == "over" ? Side::over : Side::under;
      std::cout << doc::render_stream(doc::random_docs(ro));
      return kExitOk;
    }
  } catch (const doc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PushoutNotRepresentable& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InitialNotRepresentable& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
