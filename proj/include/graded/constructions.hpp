#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "graded/core.hpp"
#include "graded/families.hpp"
#include "graded/phi.hpp"

namespace graded {

inline ElemSet map_set(const std::vector<Elem>& map, const ElemSet& s) {
  ElemSet out;
  for (Elem e : s.elements()) out.insert(map[e]);
  return out;
}

inline ElemSet preimage_set(const std::vector<Elem>& map, const ElemSet& s) {
  ElemSet out;
  for (Elem e = 0; e < static_cast<Elem>(map.size()); ++e)
    if (s.contains(map[e])) out.insert(e);
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientResult {
  ModulePtr module;             // M/K with grading (M/K)_g = (M_g + K)/K
  std::vector<Elem> projection; // x -> id of x + K
};

inline QuotientResult quotient_module(const ModulePtr& m, const ElemSet& k) {
#if GRADED_CHECKS
  if (auto rep = validate_submodule(*m, k); !rep.ok) rep.raise();
#endif
  const int n = m->order;
  // Coset of x is represented by its least member.
  std::vector<Elem> rep_of(n);
  for (Elem x = 0; x < n; ++x) {
    Elem rep = x;
    for (Elem t : k.elements()) rep = std::min(rep, m->add(x, t));
    rep_of[x] = rep;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (rep_of[x] == x) reps.push_back(x);
  std::vector<Elem> id_of(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) id_of[reps[i]] = static_cast<Elem>(i);
  std::vector<Elem> proj(n);
  for (Elem x = 0; x < n; ++x) proj[x] = id_of[rep_of[x]];

  GradedModule q;
  q.name = m->name + "/" + m->set_name(k);
  q.ring = m->ring;
  q.order = static_cast<int>(reps.size());
  q.add_table.resize(static_cast<std::size_t>(q.order) * q.order);
  for (int i = 0; i < q.order; ++i)
    for (int j = 0; j < q.order; ++j)
      q.add_table[i * q.order + j] = proj[m->add(reps[i], reps[j])];
  q.zero = proj[m->zero];
  q.act_table.resize(static_cast<std::size_t>(m->ring->order) * q.order);
  for (Elem r = 0; r < m->ring->order; ++r)
    for (int i = 0; i < q.order; ++i)
      q.act_table[r * q.order + i] = proj[m->act(r, reps[i])];
  q.component.resize(m->ring->group.order());
  for (int g = 0; g < m->ring->group.order(); ++g)
    for (Elem x : m->component[g].elements()) q.component[g].insert(proj[x]);
  for (Elem rep : reps) q.elem_names.push_back("[" + m->elem_name(rep) + "]");
  return {finalize_module(std::move(q)), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Graded homomorphisms

struct GradedHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Elem> map;
};

inline ValidationReport validate_hom(const GradedHom& f) {
  const GradedModule& src = *f.source;
  const GradedModule& dst = *f.target;
  if (src.ring != dst.ring)
    return ValidationReport::fail("malformed",
                                  "hom requires the same ring object");
  if (f.map.size() != static_cast<std::size_t>(src.order))
    return ValidationReport::fail("malformed", "hom map size",
                                  std::to_string(f.map.size()));
  for (Elem v : f.map)
    if (v < 0 || v >= dst.order)
      return ValidationReport::fail("malformed", "hom image out of range",
                                    std::to_string(v));
  for (Elem a = 0; a < src.order; ++a)
    for (Elem b = 0; b < src.order; ++b)
      if (f.map[src.add(a, b)] != dst.add(f.map[a], f.map[b]))
        return ValidationReport::fail(
            "axiom", "hom additivity",
            src.elem_name(a) + "+" + src.elem_name(b));
  for (Elem r = 0; r < src.ring->order; ++r)
    for (Elem a = 0; a < src.order; ++a)
      if (f.map[src.act(r, a)] != dst.act(r, f.map[a]))
        return ValidationReport::fail(
            "axiom", "hom linearity",
            src.ring->elem_name(r) + "*" + src.elem_name(a));
  for (int g = 0; g < src.ring->group.order(); ++g)
    for (Elem a : src.component[g].elements())
      if (!dst.component[g].contains(f.map[a]))
        return ValidationReport::fail(
            "axiom", "hom degree preservation",
            src.elem_name(a) + " degree " + std::to_string(g));
  return ValidationReport::pass();
}

inline GradedHom make_hom(ModulePtr source, ModulePtr target,
                          std::vector<Elem> map) {
  GradedHom f{std::move(source), std::move(target), std::move(map)};
  if (auto rep = validate_hom(f); !rep.ok) rep.raise();
  return f;
}

inline GradedHom projection_hom(const ModulePtr& m, const QuotientResult& q) {
  return make_hom(m, q.module, q.projection);
}

inline GradedHom identity_hom(const ModulePtr& m) {
  std::vector<Elem> map(m->order);
  for (Elem x = 0; x < m->order; ++x) map[x] = x;
  return make_hom(m, m, std::move(map));
}

// Extends generator images by additivity and linearity; rejects conflicting
// or underdetermined assignments, then validates the result as a graded hom.
inline GradedHom hom_from_generators(
    const ModulePtr& source, const ModulePtr& target,
    const std::vector<std::pair<Elem, Elem>>& images) {
  const GradedModule& src = *source;
  const GradedModule& dst = *target;
  std::vector<Elem> map(src.order, -1);
  map[src.zero] = dst.zero;
  std::vector<Elem> work{src.zero};
  auto assign = [&](Elem a, Elem v) {
    if (a < 0 || a >= src.order || v < 0 || v >= dst.order)
      throw Error("hom generator image out of range");
    if (map[a] == -1) {
      map[a] = v;
      work.push_back(a);
    } else if (map[a] != v) {
      throw Error("hom images conflict at " + src.elem_name(a));
    }
  };
  for (auto [a, v] : images) assign(a, v);
  while (!work.empty()) {
    const Elem a = work.back();
    work.pop_back();
    for (Elem b = 0; b < src.order; ++b)
      if (map[b] != -1) assign(src.add(a, b), dst.add(map[a], map[b]));
    for (Elem r = 0; r < src.ring->order; ++r)
      assign(src.act(r, a), dst.act(r, map[a]));
  }
  for (Elem a = 0; a < src.order; ++a)
    if (map[a] == -1)
      throw Error("hom generators do not span the source (first gap at " +
                  src.elem_name(a) + ")");
  return make_hom(source, target, std::move(map));
}

inline ElemSet preimage_submodule(const GradedHom& f, const ElemSet& n) {
  ElemSet out = preimage_set(f.map, n);
#if GRADED_CHECKS
  if (auto rep = validate_submodule(*f.source, out); !rep.ok) rep.raise();
#endif
  return out;
}

inline ElemSet image_submodule(const GradedHom& f, const ElemSet& k) {
  ElemSet out = map_set(f.map, k);
#if GRADED_CHECKS
  if (auto rep = validate_submodule(*f.target, out); !rep.ok) rep.raise();
#endif
  return out;
}

inline ElemSet hom_kernel(const GradedHom& f) {
  return preimage_set(f.map, ElemSet::single(f.target->zero));
}

inline bool hom_surjective(const GradedHom& f) {
  return map_set(f.map, ElemSet::full(f.source->order)).count() ==
         f.target->order;
}

// Plain (not graded) submodule closure; homs are determined by images of a
// plain generating sequence.
inline ElemSet module_span(const GradedModule& m, const ElemSet& gens) {
  ElemSet seed;
  seed.insert(m.zero);
  for (Elem x : gens.elements())
    for (Elem r = 0; r < m.ring->order; ++r) seed.insert(m.act(r, x));
  return detail::additive_closure_in(m, seed);
}

// A short generating sequence: repeatedly adjoin the least element outside
// the current span.
inline std::vector<Elem> generating_sequence(const GradedModule& m) {
  std::vector<Elem> gens;
  ElemSet span;
  span.insert(m.zero);
  for (Elem x = 0; x < m.order; ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    ElemSet g;
    for (Elem y : gens) g.insert(y);
    span = module_span(m, g);
  }
  return gens;
}

// Every graded homomorphism source -> target (epimorphisms only when asked),
// by backtracking over images of a generating sequence. Intended for small
// modules; the caller bounds the orders.
inline std::vector<GradedHom> enumerate_graded_homs(const ModulePtr& source,
                                                    const ModulePtr& target,
                                                    bool epi_only) {
  const GradedModule& src = *source;
  const GradedModule& dst = *target;
  std::vector<GradedHom> out;
  if (src.ring != dst.ring) return out;
  const std::vector<Elem> gens = generating_sequence(src);
  std::vector<std::pair<Elem, Elem>> images;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      GradedHom f;
      try {
        f = hom_from_generators(source, target, images);
      } catch (const Error&) {
        return;
      }
      if (epi_only && !hom_surjective(f)) return;
      out.push_back(std::move(f));
      return;
    }
    for (Elem v = 0; v < dst.order; ++v) {
      images.emplace_back(gens[i], v);
      self(self, i + 1);
      images.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Localization

// Subset of h(R), closed under multiplication, containing 1. Construction
// normalizes: adds 1 and closes the given elements under products.
struct MultiplicativeSet {
  RingPtr ring;
  ElemSet members;
};

inline MultiplicativeSet make_multiplicative_set(const RingPtr& ring,
                                                 const std::vector<Elem>& xs) {
  for (Elem x : xs) {
    if (x < 0 || x >= ring->order)
      throw Error("multiplicative set element out of range");
    if (!ring->is_homogeneous(x))
      throw Error("multiplicative set element " + ring->elem_name(x) +
                  " is not homogeneous");
  }
  ElemSet s = ElemSet::single(ring->one);
  std::vector<Elem> work{ring->one};
  auto push = [&](Elem x) {
    if (!s.contains(x)) {
      s.insert(x);
      work.push_back(x);
    }
  };
  for (Elem x : xs) push(x);
  while (!work.empty()) {
    const Elem a = work.back();
    work.pop_back();
    for (Elem b : s.elements()) push(ring->mul(a, b));
  }
  return {ring, s};
}

namespace detail {

struct FractionClasses {
  int count = 0;
  std::vector<Elem> pair_class;             // [elem * s_count + s_index]
  std::vector<std::pair<Elem, Elem>> reps;  // least (elem, s) per class
};

// Equivalence m/s ~ m'/s' iff s'm - sm' is S-torsion. Classes are numbered
// in the canonical order of their least representative pair.
template <class ActFn>
FractionClasses fraction_classes(int n, const std::vector<Elem>& s_list,
                                 ActFn&& act, const ElemSet& torsion,
                                 auto&& sub) {
  FractionClasses fc;
  const int sc = static_cast<int>(s_list.size());
  fc.pair_class.assign(static_cast<std::size_t>(n) * sc, -1);
  for (Elem m = 0; m < n; ++m)
    for (int si = 0; si < sc; ++si) {
      int found = -1;
      for (int c = 0; c < fc.count; ++c) {
        auto [m2, s2] = fc.reps[c];
        if (torsion.contains(sub(act(s2, m), act(s_list[si], m2)))) {
          found = c;
          break;
        }
      }
      if (found < 0) {
        found = fc.count++;
        fc.reps.emplace_back(m, s_list[si]);
      }
      fc.pair_class[m * sc + si] = found;
    }
  return fc;
}

template <class ActFn>
ElemSet s_torsion(int n, const ElemSet& s, ActFn&& act, Elem zero) {
  ElemSet t;
  for (Elem x = 0; x < n; ++x)
    for (Elem u : s.elements())
      if (act(u, x) == zero) {
        t.insert(x);
        break;
      }
  return t;
}

}  // namespace detail

struct Localization {
  // When 0 lands in S (some member is nilpotent) everything becomes a single
  // class and S^-1 R is the zero ring, which has no representation here
  // (rings must satisfy 1 != 0). The collapse is reported explicitly instead
  // and ring/module stay unset.
  bool zero_collapse = false;
  RingPtr ring;     // S^-1 R
  ModulePtr module; // S^-1 M
  MultiplicativeSet set;
  std::vector<Elem> s_list;              // sorted members of S
  std::vector<Elem> ring_map;            // a -> a/1
  std::vector<Elem> module_map;          // m -> m/1
  std::vector<Elem> ring_pair_class;     // [a * |S| + s_index]
  std::vector<Elem> module_pair_class;   // [m * |S| + s_index]

  int s_index(Elem s) const {
    auto it = std::lower_bound(s_list.begin(), s_list.end(), s);
    if (it == s_list.end() || *it != s)
      throw Error("element not in the multiplicative set");
    return static_cast<int>(it - s_list.begin());
  }
  Elem ring_fraction(Elem a, Elem s) const {
    return ring_pair_class[a * s_list.size() + s_index(s)];
  }
  Elem module_fraction(Elem m, Elem s) const {
    return module_pair_class[m * s_list.size() + s_index(s)];
  }
};

// S^-1 M over S^-1 R with the degree-aware grading: the fraction m/s with
// m of degree h and s of degree k sits in degree h k^-1. Classes whose
// members disagree on the induced degree make the component system fail
// direct-sum validation, which surfaces as a diagnostic here.
inline Localization localize(const ModulePtr& m, const MultiplicativeSet& set) {
  const GradedRing& r = *m->ring;
  if (set.ring != m->ring)
    throw Error("multiplicative set belongs to a different ring");
  Localization loc;
  loc.set = set;
  if (set.members.contains(r.zero)) {
    loc.zero_collapse = true;
    return loc;
  }
  loc.s_list = set.members.elements();
  const int sc = static_cast<int>(loc.s_list.size());
  const FiniteGroup& grp = r.group;

  const ElemSet ring_torsion = detail::s_torsion(
      r.order, set.members, [&](Elem u, Elem x) { return r.mul(u, x); },
      r.zero);
  auto ring_classes = detail::fraction_classes(
      r.order, loc.s_list, [&](Elem s, Elem a) { return r.mul(s, a); },
      ring_torsion, [&](Elem a, Elem b) { return r.sub(a, b); });

  GradedRing lr;
  lr.name = "loc(" + r.name + ")";
  lr.group = grp;
  lr.order = ring_classes.count;
  lr.add_table.resize(static_cast<std::size_t>(lr.order) * lr.order);
  lr.mul_table.resize(static_cast<std::size_t>(lr.order) * lr.order);
  auto rclass = [&](Elem a, int si) { return ring_classes.pair_class[a * sc + si]; };
  for (int c1 = 0; c1 < ring_classes.count; ++c1)
    for (int c2 = 0; c2 < ring_classes.count; ++c2) {
      auto [a, s] = ring_classes.reps[c1];
      auto [b, t] = ring_classes.reps[c2];
      const Elem st = r.mul(s, t);
      lr.add_table[c1 * lr.order + c2] =
          rclass(r.add(r.mul(t, a), r.mul(s, b)), loc.s_index(st));
      lr.mul_table[c1 * lr.order + c2] = rclass(r.mul(a, b), loc.s_index(st));
    }
  const int one_index = loc.s_index(r.one);
  lr.zero = rclass(r.zero, one_index);
  lr.one = rclass(r.one, one_index);
  lr.component.assign(grp.order(), ElemSet());
  for (Elem a = 0; a < r.order; ++a)
    for (int si = 0; si < sc; ++si) {
      const Elem s = loc.s_list[si];
      for (int h = 0; h < grp.order(); ++h) {
        if (!r.component[h].contains(a)) continue;
        for (int k = 0; k < grp.order(); ++k) {
          if (!r.component[k].contains(s)) continue;
          lr.component[grp.op(h, grp.inverse(k))].insert(rclass(a, si));
        }
      }
    }
  for (auto [a, s] : ring_classes.reps)
    lr.elem_names.push_back(r.elem_name(a) + "/" + r.elem_name(s));
  loc.ring = finalize_ring(std::move(lr));
  loc.ring_pair_class = ring_classes.pair_class;
  loc.ring_map.resize(r.order);
  for (Elem a = 0; a < r.order; ++a) loc.ring_map[a] = rclass(a, one_index);

  const ElemSet mod_torsion = detail::s_torsion(
      m->order, set.members, [&](Elem u, Elem x) { return m->act(u, x); },
      m->zero);
  auto mod_classes = detail::fraction_classes(
      m->order, loc.s_list, [&](Elem s, Elem x) { return m->act(s, x); },
      mod_torsion, [&](Elem a, Elem b) { return m->sub(a, b); });

  GradedModule lm;
  lm.name = "loc(" + m->name + ")";
  lm.ring = loc.ring;
  lm.order = mod_classes.count;
  auto mclass = [&](Elem x, int si) { return mod_classes.pair_class[x * sc + si]; };
  lm.add_table.resize(static_cast<std::size_t>(lm.order) * lm.order);
  for (int c1 = 0; c1 < mod_classes.count; ++c1)
    for (int c2 = 0; c2 < mod_classes.count; ++c2) {
      auto [x, s] = mod_classes.reps[c1];
      auto [y, t] = mod_classes.reps[c2];
      lm.add_table[c1 * lm.order + c2] = mclass(
          m->add(m->act(t, x), m->act(s, y)), loc.s_index(r.mul(s, t)));
    }
  lm.zero = mclass(m->zero, one_index);
  lm.act_table.resize(static_cast<std::size_t>(loc.ring->order) * lm.order);
  for (int rc = 0; rc < loc.ring->order; ++rc)
    for (int c = 0; c < mod_classes.count; ++c) {
      auto [a, t] = ring_classes.reps[rc];
      auto [x, s] = mod_classes.reps[c];
      lm.act_table[rc * lm.order + c] =
          mclass(m->act(a, x), loc.s_index(r.mul(t, s)));
    }
  lm.component.assign(grp.order(), ElemSet());
  for (Elem x = 0; x < m->order; ++x)
    for (int si = 0; si < sc; ++si) {
      const Elem s = loc.s_list[si];
      for (int h = 0; h < grp.order(); ++h) {
        if (!m->component[h].contains(x)) continue;
        for (int k = 0; k < grp.order(); ++k) {
          if (!r.component[k].contains(s)) continue;
          lm.component[grp.op(h, grp.inverse(k))].insert(mclass(x, si));
        }
      }
    }
  for (auto [x, s] : mod_classes.reps)
    lm.elem_names.push_back(m->elem_name(x) + "/" + r.elem_name(s));
  loc.module = finalize_module(std::move(lm));
  loc.module_pair_class = mod_classes.pair_class;
  loc.module_map.resize(m->order);
  for (Elem x = 0; x < m->order; ++x) loc.module_map[x] = mclass(x, one_index);
  return loc;
}

// S^-1 K: all classes of fractions k/s with k in K, s in S.
inline ElemSet localize_submodule(const Localization& loc, const ElemSet& k) {
  if (loc.zero_collapse)
    throw Error("localization collapsed to the zero ring");
  ElemSet out;
  const int sc = static_cast<int>(loc.s_list.size());
  for (Elem x : k.elements())
    for (int si = 0; si < sc; ++si)
      out.insert(loc.module_pair_class[x * sc + si]);
#if GRADED_CHECKS
  if (auto rep = validate_submodule(*loc.module, out); !rep.ok) rep.raise();
#endif
  return out;
}

// phi_S(S^-1 K) = S^-1 phi(K), empty marker preserved. Evaluated against the
// K supplied by the caller; two submodules with the same localization may
// disagree here, so callers pick the K they mean.
inline PhiValue localize_phi_value(const Localization& loc,
                                   const PhiValue& phi_of_k) {
  if (!phi_of_k.has_value()) return std::nullopt;
  return localize_submodule(loc, *phi_of_k);
}

}  // namespace graded
