#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graded/phi.hpp"

namespace graded {

// Failing tuple for a predicate: (r, m) for the prime/primary family,
// (x, y, m) for the 2-absorbing family. Element ids refer to the ring for
// coefficients and the module for the last entry.
struct Witness {
  std::vector<Elem> elems;

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.elems == b.elems;
  }
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

enum class PredicateKind { Prime, Primary, TwoAbsorbing, TwoAbsorbingPrimary };

inline std::string predicate_kind_name(PredicateKind k) {
  switch (k) {
    case PredicateKind::Prime: return "prime";
    case PredicateKind::Primary: return "primary";
    case PredicateKind::TwoAbsorbing: return "2-absorbing";
    case PredicateKind::TwoAbsorbingPrimary: return "2-absorbing-primary";
  }
  return "?";
}

namespace detail {

inline void require_proper(const GradedModule& m, const ElemSet& k) {
  if (k.count() >= m.order) throw ImproperSubmodule(m.set_name(k));
}

inline bool in_guard(const ElemSet& k, const PhiValue& exclude, Elem p) {
  return k.contains(p) && !(exclude.has_value() && exclude->contains(p));
}

// r m in K - exclude forces m in m_set or r in r_set, for (r, m) drawn from
// the given coefficient/module element lists in canonical order. The first
// failing pair is the witness.
inline Verdict binary_implication(const GradedModule& m, const ElemSet& k,
                                  const PhiValue& exclude,
                                  const ElemSet& m_set, const ElemSet& r_set,
                                  const std::vector<Elem>& rs,
                                  const std::vector<Elem>& ms) {
  for (Elem r : rs) {
    const bool r_ok = r_set.contains(r);
    if (r_ok) continue;
    for (Elem x : ms) {
      if (!in_guard(k, exclude, m.act(r, x))) continue;
      if (!m_set.contains(x)) return {false, Witness{{r, x}}};
    }
  }
  return {true, std::nullopt};
}

// x y m in K - exclude forces x m in xm_set, y m in ym_set, or x y in
// xy_set. Dropping a disjunct (for mutation checks) is passing an empty set.
inline Verdict ternary_implication(const GradedModule& m, const ElemSet& k,
                                   const PhiValue& exclude,
                                   const ElemSet& xm_set, const ElemSet& ym_set,
                                   const ElemSet& xy_set,
                                   const std::vector<Elem>& xs,
                                   const std::vector<Elem>& ys,
                                   const std::vector<Elem>& ms) {
  const GradedRing& ring = *m.ring;
  for (Elem x : xs)
    for (Elem y : ys) {
      const Elem xy = ring.mul(x, y);
      if (xy_set.contains(xy)) continue;
      for (Elem z : ms) {
        if (!in_guard(k, exclude, m.act(xy, z))) continue;
        if (!xm_set.contains(m.act(x, z)) && !ym_set.contains(m.act(y, z)))
          return {false, Witness{{x, y, z}}};
      }
    }
  return {true, std::nullopt};
}

}  // namespace detail

// The four phi-parameterized global predicates over homogeneous elements.
inline Verdict check_phi_predicate(PredicateKind kind, const GradedModule& m,
                                   const ElemSet& k, const PhiFunction& phi,
                                   int bound = kDefaultEnumBound) {
  detail::require_proper(m, k);
  const PhiValue exclude = phi.apply(m, k, bound);
  const ElemSet colon = colon_ideal(m, k);
  const auto& rs = m.ring->homogeneous_list;
  const auto& ms = m.homogeneous_list;
  switch (kind) {
    case PredicateKind::Prime:
      return detail::binary_implication(m, k, exclude, k, colon, rs, ms);
    case PredicateKind::Primary:
      return detail::binary_implication(m, k, exclude, k,
                                        ideal_radical(*m.ring, colon), rs, ms);
    case PredicateKind::TwoAbsorbing:
      return detail::ternary_implication(m, k, exclude, k, k, colon, rs, rs,
                                         ms);
    case PredicateKind::TwoAbsorbingPrimary: {
      const ElemSet grad = graded_radical_submodule(m, k, bound);
      return detail::ternary_implication(m, k, exclude, grad, grad, colon, rs,
                                         rs, ms);
    }
  }
  throw Error("unreachable predicate kind");
}

inline Verdict is_graded_prime(const GradedModule& m, const ElemSet& k) {
  return check_phi_predicate(PredicateKind::Prime, m, k, PhiFunction::empty());
}
inline Verdict is_graded_weakly_prime(const GradedModule& m, const ElemSet& k) {
  return check_phi_predicate(PredicateKind::Prime, m, k, PhiFunction::zero());
}
inline Verdict is_graded_phi_prime(const GradedModule& m, const ElemSet& k,
                                   const PhiFunction& phi,
                                   int bound = kDefaultEnumBound) {
  return check_phi_predicate(PredicateKind::Prime, m, k, phi, bound);
}

inline Verdict is_graded_primary(const GradedModule& m, const ElemSet& k) {
  return check_phi_predicate(PredicateKind::Primary, m, k,
                             PhiFunction::empty());
}
inline Verdict is_graded_weakly_primary(const GradedModule& m,
                                        const ElemSet& k) {
  return check_phi_predicate(PredicateKind::Primary, m, k,
                             PhiFunction::zero());
}
inline Verdict is_graded_phi_primary(const GradedModule& m, const ElemSet& k,
                                     const PhiFunction& phi,
                                     int bound = kDefaultEnumBound) {
  return check_phi_predicate(PredicateKind::Primary, m, k, phi, bound);
}

inline Verdict is_graded_2_absorbing(const GradedModule& m, const ElemSet& k) {
  return check_phi_predicate(PredicateKind::TwoAbsorbing, m, k,
                             PhiFunction::empty());
}
inline Verdict is_graded_weakly_2_absorbing(const GradedModule& m,
                                            const ElemSet& k) {
  return check_phi_predicate(PredicateKind::TwoAbsorbing, m, k,
                             PhiFunction::zero());
}
inline Verdict is_graded_phi_2_absorbing(const GradedModule& m,
                                         const ElemSet& k,
                                         const PhiFunction& phi,
                                         int bound = kDefaultEnumBound) {
  return check_phi_predicate(PredicateKind::TwoAbsorbing, m, k, phi, bound);
}

inline Verdict is_graded_2_absorbing_primary(const GradedModule& m,
                                             const ElemSet& k,
                                             int bound = kDefaultEnumBound) {
  return check_phi_predicate(PredicateKind::TwoAbsorbingPrimary, m, k,
                             PhiFunction::empty(), bound);
}
inline Verdict is_graded_weakly_2_absorbing_primary(
    const GradedModule& m, const ElemSet& k, int bound = kDefaultEnumBound) {
  return check_phi_predicate(PredicateKind::TwoAbsorbingPrimary, m, k,
                             PhiFunction::zero(), bound);
}
inline Verdict is_graded_phi_2_absorbing_primary(
    const GradedModule& m, const ElemSet& k, const PhiFunction& phi,
    int bound = kDefaultEnumBound) {
  return check_phi_predicate(PredicateKind::TwoAbsorbingPrimary, m, k, phi,
                             bound);
}

// g-local variants: coefficients restricted to R_e, the module element to
// M_g; defined only when K_g != M_g. Kind Prime is not part of the g-local
// family.
inline Verdict check_g_phi_predicate(PredicateKind kind, const GradedModule& m,
                                     const ElemSet& k, Elem g,
                                     const PhiFunction& phi,
                                     int bound = kDefaultEnumBound) {
  if (kind == PredicateKind::Prime)
    throw Error("no g-local prime predicate");
  const ElemSet mg = m.component[g];
  if ((k & mg) == mg)
    throw GComponentImproper(m.set_name(k) + " at degree " + std::to_string(g));
  const PhiValue exclude = phi.apply(m, k, bound);
  const ElemSet colon = colon_ideal(m, k);
  const std::vector<Elem> re = m.ring->component[m.ring->group.identity()].elements();
  const std::vector<Elem> ms = mg.elements();
  switch (kind) {
    case PredicateKind::Primary:
      return detail::binary_implication(m, k, exclude, k,
                                        ideal_radical(*m.ring, colon), re, ms);
    case PredicateKind::TwoAbsorbing:
      return detail::ternary_implication(m, k, exclude, k, k, colon, re, re,
                                         ms);
    case PredicateKind::TwoAbsorbingPrimary: {
      const ElemSet grad = graded_radical_submodule(m, k, bound);
      return detail::ternary_implication(m, k, exclude, grad, grad, colon, re,
                                         re, ms);
    }
    default:
      throw Error("unreachable predicate kind");
  }
}

inline Verdict is_g_phi_primary(const GradedModule& m, const ElemSet& k,
                                Elem g, const PhiFunction& phi,
                                int bound = kDefaultEnumBound) {
  return check_g_phi_predicate(PredicateKind::Primary, m, k, g, phi, bound);
}
inline Verdict is_g_phi_2_absorbing(const GradedModule& m, const ElemSet& k,
                                    Elem g, const PhiFunction& phi,
                                    int bound = kDefaultEnumBound) {
  return check_g_phi_predicate(PredicateKind::TwoAbsorbing, m, k, g, phi,
                               bound);
}
inline Verdict is_g_phi_2_absorbing_primary(const GradedModule& m,
                                            const ElemSet& k, Elem g,
                                            const PhiFunction& phi,
                                            int bound = kDefaultEnumBound) {
  return check_g_phi_predicate(PredicateKind::TwoAbsorbingPrimary, m, k, g,
                               phi, bound);
}

struct PredicateResult {
  std::string predicate;
  std::string phi;     // empty for the unparameterized rows
  std::string degree;  // g-local rows carry the degree index
  std::string status;  // "true" | "false" | "skipped"
  std::optional<Witness> witness;
  std::string reason;  // skip reason

  friend bool operator==(const PredicateResult& a, const PredicateResult& b) {
    return a.predicate == b.predicate && a.phi == b.phi &&
           a.degree == b.degree && a.status == b.status &&
           a.witness == b.witness && a.reason == b.reason;
  }
};

struct ClassificationReport {
  std::string module_name;
  std::string submodule;
  std::vector<Elem> members;
  std::vector<PredicateResult> results;

  friend bool operator==(const ClassificationReport& a,
                         const ClassificationReport& b) {
    return a.module_name == b.module_name && a.submodule == b.submodule &&
           a.members == b.members && a.results == b.results;
  }
};

// Evaluates every predicate for each phi; per-row errors become skipped
// entries instead of aborting the report.
inline ClassificationReport classify(const GradedModule& m, const ElemSet& k,
                                     const std::vector<PhiFunction>& phis,
                                     int bound = kDefaultEnumBound) {
  detail::require_proper(m, k);
  ClassificationReport rep;
  rep.module_name = m.name;
  rep.submodule = m.set_name(k);
  rep.members = k.elements();
  auto row = [&](std::string pred, std::string phi, std::string degree,
                 auto&& eval) {
    PredicateResult r;
    r.predicate = std::move(pred);
    r.phi = std::move(phi);
    r.degree = std::move(degree);
    try {
      Verdict v = eval();
      r.status = v.holds ? "true" : "false";
      r.witness = v.witness;
    } catch (const NotMultiplicationModule& e) {
      r.status = "skipped";
      r.reason = e.what();
    } catch (const TableMiss& e) {
      r.status = "skipped";
      r.reason = e.what();
    } catch (const BoundExceeded& e) {
      r.status = "skipped";
      r.reason = e.what();
    }
    rep.results.push_back(std::move(r));
  };
  row("prime", "", "", [&] { return is_graded_prime(m, k); });
  row("weakly-prime", "", "", [&] { return is_graded_weakly_prime(m, k); });
  row("primary", "", "", [&] { return is_graded_primary(m, k); });
  row("weakly-primary", "", "",
      [&] { return is_graded_weakly_primary(m, k); });
  row("2-absorbing", "", "", [&] { return is_graded_2_absorbing(m, k); });
  row("weakly-2-absorbing", "", "",
      [&] { return is_graded_weakly_2_absorbing(m, k); });
  row("2-absorbing-primary", "", "",
      [&] { return is_graded_2_absorbing_primary(m, k, bound); });
  row("weakly-2-absorbing-primary", "", "",
      [&] { return is_graded_weakly_2_absorbing_primary(m, k, bound); });
  for (const PhiFunction& phi : phis) {
    const std::string pl = phi.label();
    row("phi-prime", pl, "",
        [&] { return is_graded_phi_prime(m, k, phi, bound); });
    row("phi-primary", pl, "",
        [&] { return is_graded_phi_primary(m, k, phi, bound); });
    row("phi-2-absorbing", pl, "",
        [&] { return is_graded_phi_2_absorbing(m, k, phi, bound); });
    row("phi-2-absorbing-primary", pl, "",
        [&] { return is_graded_phi_2_absorbing_primary(m, k, phi, bound); });
    for (Elem g = 0; g < m.ring->group.order(); ++g) {
      const ElemSet mg = m.component[g];
      if ((k & mg) == mg) continue;  // precondition K_g != M_g
      const std::string gs = std::to_string(g);
      row("g-phi-primary", pl, gs,
          [&] { return is_g_phi_primary(m, k, g, phi, bound); });
      row("g-phi-2-absorbing", pl, gs,
          [&] { return is_g_phi_2_absorbing(m, k, g, phi, bound); });
      row("g-phi-2-absorbing-primary", pl, gs, [&] {
        return is_g_phi_2_absorbing_primary(m, k, g, phi, bound);
      });
    }
  }
  return rep;
}

}  // namespace graded
