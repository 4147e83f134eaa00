#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "graded/ring.hpp"

namespace graded {

struct GradedModule;
using ModulePtr = std::shared_ptr<const GradedModule>;

namespace detail {

// Per-module memo tables. Structures are immutable once finalized, so these
// behave as if they had been precomputed; the mutex only guards first fill.
// Copying a module starts with a fresh cache.
struct ModuleCache {
  mutable std::mutex mu;
  bool have_submodules = false;
  std::vector<ElemSet> submodules;
  bool have_primes = false;
  std::vector<ElemSet> primes;
  std::map<ElemSet, ElemSet> radical;  // Grad_M by submodule
  bool have_mult = false;
  bool is_mult = false;
  ElemSet mult_failure;

  ModuleCache() = default;
  ModuleCache(const ModuleCache&) {}
  ModuleCache& operator=(const ModuleCache&) { return *this; }
};

}  // namespace detail

// Finite module over a GradedRing with a compatible grading. Same lifecycle
// as GradedRing: raw tables, then validate_module()/finalize_module().
struct GradedModule {
  std::string name;
  RingPtr ring;
  int order = 0;
  std::vector<Elem> add_table;  // order x order
  Elem zero = 0;
  std::vector<Elem> act_table;  // ring->order x order, [r * order + m]
  std::vector<ElemSet> component;
  std::vector<std::string> elem_names;

  // Derived.
  std::vector<Elem> neg_table;
  std::vector<Elem> decomp_table;
  ElemSet homogeneous_set;
  std::vector<Elem> homogeneous_list;

  mutable detail::ModuleCache cache;

  Elem add(Elem a, Elem b) const { return add_table[a * order + b]; }
  Elem neg(Elem a) const { return neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem m) const { return act_table[r * order + m]; }

  Elem component_of(Elem x, Elem g) const {
    return decomp_table[x * ring->group.order() + g];
  }

  bool is_homogeneous(Elem x) const { return homogeneous_set.contains(x); }

  ElemSet carrier_set() const { return ElemSet::full(order); }

  std::string elem_name(Elem e) const {
    if (e >= 0 && e < static_cast<int>(elem_names.size())) return elem_names[e];
    return std::to_string(e);
  }

  std::string set_name(const ElemSet& s) const {
    std::string out = "{";
    bool first = true;
    for (Elem e : s.elements()) {
      if (!first) out += ",";
      out += elem_name(e);
      first = false;
    }
    return out + "}";
  }
};

// A graded submodule is identified by its member bit set over the parent's
// canonical carrier ordering; when the parent is a ring viewed as a module
// over itself this doubles as a graded ideal.
struct GradedSubmodule {
  ModulePtr parent;
  ElemSet members;

  bool is_proper() const { return members.count() < parent->order; }
};

inline ValidationReport validate_module(GradedModule& m) {
  if (!m.ring) return ValidationReport::fail("malformed", "module has no ring");
  const GradedRing& r = *m.ring;
  auto rep = detail::check_abelian_group(m.order, m.add_table, m.zero,
                                         m.neg_table, "module");
  if (!rep.ok) return rep;
  if (m.act_table.size() != static_cast<std::size_t>(r.order) * m.order)
    return ValidationReport::fail("malformed", "module action table size",
                                  std::to_string(m.act_table.size()));
  for (Elem v : m.act_table)
    if (v < 0 || v >= m.order)
      return ValidationReport::fail("malformed",
                                    "module action entry out of range",
                                    std::to_string(v));
  for (Elem x = 0; x < m.order; ++x)
    if (m.act(r.one, x) != x)
      return ValidationReport::fail("axiom", "module unital action",
                                    "m=" + std::to_string(x));
  for (Elem a = 0; a < r.order; ++a)
    for (Elem x = 0; x < m.order; ++x)
      for (Elem y = 0; y < m.order; ++y)
        if (m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y)))
          return ValidationReport::fail(
              "axiom", "module action distributes over module addition",
              "r=" + std::to_string(a) + " m=" + std::to_string(x) +
                  " n=" + std::to_string(y));
  for (Elem a = 0; a < r.order; ++a)
    for (Elem b = 0; b < r.order; ++b)
      for (Elem x = 0; x < m.order; ++x) {
        if (m.act(r.add(a, b), x) != m.add(m.act(a, x), m.act(b, x)))
          return ValidationReport::fail(
              "axiom", "module action distributes over ring addition",
              "r=" + std::to_string(a) + " s=" + std::to_string(b) +
                  " m=" + std::to_string(x));
        if (m.act(r.mul(a, b), x) != m.act(a, m.act(b, x)))
          return ValidationReport::fail(
              "axiom", "module action associativity",
              "r=" + std::to_string(a) + " s=" + std::to_string(b) +
                  " m=" + std::to_string(x));
      }
  if (static_cast<int>(m.component.size()) != r.group.order())
    return ValidationReport::fail("malformed", "module component count",
                                  std::to_string(m.component.size()));
  rep = detail::check_direct_sum(m.order, m.add_table, m.zero, m.component,
                                 m.decomp_table, "module");
  if (!rep.ok) return rep;
  for (int g = 0; g < r.group.order(); ++g)
    for (int h = 0; h < r.group.order(); ++h) {
      const Elem gh = r.group.op(g, h);
      for (Elem a : r.component[g].elements())
        for (Elem x : m.component[h].elements())
          if (!m.component[gh].contains(m.act(a, x)))
            return ValidationReport::fail(
                "axiom", "module graded action R_g M_h in M_gh",
                "g=" + std::to_string(g) + " h=" + std::to_string(h) +
                    " r=" + r.elem_name(a) + " m=" + m.elem_name(x));
    }
  m.homogeneous_set = ElemSet();
  for (const ElemSet& c : m.component) m.homogeneous_set |= c;
  m.homogeneous_list = m.homogeneous_set.elements();
  return ValidationReport::pass();
}

inline ModulePtr finalize_module(GradedModule m) {
  auto rep = validate_module(m);
  if (!rep.ok) rep.raise();
  return std::make_shared<const GradedModule>(std::move(m));
}

// Membership-level check that `members` is a graded submodule: closed under
// addition, negation, the full ring action, contains zero, and contains
// every homogeneous component of each of its elements.
inline ValidationReport validate_submodule(const GradedModule& m,
                                           const ElemSet& members) {
  if (!members.contains(m.zero))
    return ValidationReport::fail("axiom", "submodule contains zero");
  const auto elems = members.elements();
  for (Elem a : elems) {
    if (a >= m.order)
      return ValidationReport::fail("malformed",
                                    "submodule element out of range",
                                    std::to_string(a));
    if (!members.contains(m.neg(a)))
      return ValidationReport::fail("axiom", "submodule closed under negation",
                                    m.elem_name(a));
    for (Elem b : elems)
      if (!members.contains(m.add(a, b)))
        return ValidationReport::fail(
            "axiom", "submodule closed under addition",
            m.elem_name(a) + "+" + m.elem_name(b));
    for (Elem r = 0; r < m.ring->order; ++r)
      if (!members.contains(m.act(r, a)))
        return ValidationReport::fail(
            "axiom", "submodule closed under ring action",
            m.ring->elem_name(r) + "*" + m.elem_name(a));
    for (int g = 0; g < m.ring->group.order(); ++g)
      if (!members.contains(m.component_of(a, g)))
        return ValidationReport::fail(
            "axiom", "submodule graded (component of member escapes)",
            m.elem_name(a) + " degree " + std::to_string(g));
  }
  return ValidationReport::pass();
}

// Graded ideal check: the ring viewed as a module over itself.
inline ValidationReport validate_ideal(const GradedRing& r,
                                       const ElemSet& members) {
  if (!members.contains(r.zero))
    return ValidationReport::fail("axiom", "ideal contains zero");
  const auto elems = members.elements();
  for (Elem a : elems) {
    if (a >= r.order)
      return ValidationReport::fail("malformed", "ideal element out of range",
                                    std::to_string(a));
    if (!members.contains(r.neg(a)))
      return ValidationReport::fail("axiom", "ideal closed under negation",
                                    r.elem_name(a));
    for (Elem b : elems)
      if (!members.contains(r.add(a, b)))
        return ValidationReport::fail("axiom", "ideal closed under addition",
                                      r.elem_name(a) + "+" + r.elem_name(b));
    for (Elem x = 0; x < r.order; ++x)
      if (!members.contains(r.mul(x, a)))
        return ValidationReport::fail("axiom",
                                      "ideal closed under multiplication",
                                      r.elem_name(x) + "*" + r.elem_name(a));
    for (int g = 0; g < r.group.order(); ++g)
      if (!members.contains(r.component_of(a, g)))
        return ValidationReport::fail(
            "axiom", "ideal graded (component of member escapes)",
            r.elem_name(a) + " degree " + std::to_string(g));
  }
  return ValidationReport::pass();
}

}  // namespace graded
