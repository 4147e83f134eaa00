#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graded/bitset.hpp"
#include "graded/errors.hpp"
#include "graded/finite_group.hpp"

namespace graded {

struct ValidationReport {
  bool ok = true;
  std::string kind;     // "malformed" or "axiom" when !ok
  std::string axiom;
  std::string witness;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string kind, std::string axiom,
                               std::string witness = "") {
    ValidationReport r;
    r.ok = false;
    r.kind = std::move(kind);
    r.axiom = std::move(axiom);
    r.witness = std::move(witness);
    return r;
  }

  std::string message() const {
    if (ok) return "pass";
    return kind + ": " + axiom + (witness.empty() ? "" : " [" + witness + "]");
  }

  [[noreturn]] void raise() const { throw ValidationError(kind, axiom, witness); }
};

namespace detail {

// Checks that (carrier, add, zero) is a finite abelian group and returns the
// negation table through `neg`.
inline ValidationReport check_abelian_group(int order,
                                            const std::vector<Elem>& add,
                                            Elem zero, std::vector<Elem>& neg,
                                            const std::string& what) {
  if (order < 1 || order > ElemSet::capacity)
    return ValidationReport::fail("malformed", what + " carrier order out of range",
                                  std::to_string(order));
  if (add.size() != static_cast<std::size_t>(order) * order)
    return ValidationReport::fail("malformed", what + " addition table size",
                                  std::to_string(add.size()));
  for (Elem v : add)
    if (v < 0 || v >= order)
      return ValidationReport::fail("malformed",
                                    what + " addition entry out of range",
                                    std::to_string(v));
  if (zero < 0 || zero >= order)
    return ValidationReport::fail("malformed", what + " zero out of range",
                                  std::to_string(zero));
  auto at = [&](Elem a, Elem b) { return add[a * order + b]; };
  for (Elem a = 0; a < order; ++a)
    if (at(zero, a) != a || at(a, zero) != a)
      return ValidationReport::fail("axiom", what + " additive identity",
                                    "a=" + std::to_string(a));
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      if (at(a, b) != at(b, a))
        return ValidationReport::fail(
            "axiom", what + " addition commutativity",
            "a=" + std::to_string(a) + " b=" + std::to_string(b));
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      for (Elem c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          return ValidationReport::fail(
              "axiom", what + " addition associativity",
              "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                  " c=" + std::to_string(c));
  neg.assign(order, -1);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b)
      if (at(a, b) == zero) neg[a] = b;
    if (neg[a] < 0)
      return ValidationReport::fail("axiom", what + " additive inverse",
                                    "a=" + std::to_string(a));
  }
  return ValidationReport::pass();
}

// Components must be additive subgroups whose direct sum is the whole
// carrier; on success `decomp` holds the unique component of each element in
// each degree (row-major: decomp[x * num_components + g]).
inline ValidationReport check_direct_sum(int order,
                                         const std::vector<Elem>& add,
                                         Elem zero,
                                         const std::vector<ElemSet>& component,
                                         std::vector<Elem>& decomp,
                                         const std::string& what) {
  const int ng = static_cast<int>(component.size());
  auto at = [&](Elem a, Elem b) { return add[a * order + b]; };
  for (int g = 0; g < ng; ++g) {
    const ElemSet& c = component[g];
    for (Elem e : c.elements())
      if (e >= order)
        return ValidationReport::fail("malformed",
                                      what + " component element out of range",
                                      std::to_string(e));
    if (!c.contains(zero))
      return ValidationReport::fail("axiom", what + " component contains zero",
                                    "g=" + std::to_string(g));
    for (Elem a : c.elements())
      for (Elem b : c.elements())
        if (!c.contains(at(a, b)))
          return ValidationReport::fail(
              "axiom", what + " component closed under addition",
              "g=" + std::to_string(g) + " a=" + std::to_string(a) +
                  " b=" + std::to_string(b));
  }
  long long tuples = 1;
  for (int g = 0; g < ng; ++g) {
    tuples *= component[g].count();
    if (tuples > order)
      return ValidationReport::fail("axiom", what + " direct-sum violated",
                                    "component sizes multiply past carrier");
  }
  if (tuples != order)
    return ValidationReport::fail("axiom", what + " direct-sum violated",
                                  "component size product != carrier size");
  // Walk every tuple of the component product and check the sum map is a
  // bijection onto the carrier.
  std::vector<std::vector<Elem>> lists(ng);
  for (int g = 0; g < ng; ++g) lists[g] = component[g].elements();
  std::vector<int> idx(ng, 0);
  decomp.assign(static_cast<std::size_t>(order) * ng, -1);
  int seen = 0;
  while (true) {
    Elem sum = zero;
    for (int g = 0; g < ng; ++g) sum = at(sum, lists[g][idx[g]]);
    if (decomp[sum * ng] != -1)
      return ValidationReport::fail("axiom", what + " direct-sum violated",
                                    "element " + std::to_string(sum) +
                                        " has two decompositions");
    for (int g = 0; g < ng; ++g) decomp[sum * ng + g] = lists[g][idx[g]];
    ++seen;
    int g = 0;
    while (g < ng && ++idx[g] == static_cast<int>(lists[g].size())) {
      idx[g] = 0;
      ++g;
    }
    if (g == ng) break;
  }
  if (seen != order)
    return ValidationReport::fail("axiom", what + " direct-sum violated",
                                  "sum map not onto carrier");
  return ValidationReport::pass();
}

}  // namespace detail

// Finite commutative unital ring with a grading by a finite group: explicit
// addition/multiplication tables plus one additive subgroup per degree.
// Instances are built raw, then validated and frozen by finalize_ring();
// after that they are immutable.
struct GradedRing {
  std::string name;
  FiniteGroup group;
  int order = 0;
  std::vector<Elem> add_table;  // order x order, row-major
  std::vector<Elem> mul_table;
  Elem zero = 0;
  Elem one = 0;
  std::vector<ElemSet> component;       // indexed by group element
  std::vector<std::string> elem_names;  // optional; decimal ids if empty

  // Derived, filled on successful validation.
  std::vector<Elem> neg_table;
  std::vector<Elem> decomp_table;  // order x group.order()
  ElemSet homogeneous_set;
  std::vector<Elem> homogeneous_list;

  Elem add(Elem a, Elem b) const { return add_table[a * order + b]; }
  Elem mul(Elem a, Elem b) const { return mul_table[a * order + b]; }
  Elem neg(Elem a) const { return neg_table[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  // Component of x in degree g (the unique x_g with sum over g equal to x).
  Elem component_of(Elem x, Elem g) const {
    return decomp_table[x * group.order() + g];
  }

  bool is_homogeneous(Elem x) const { return homogeneous_set.contains(x); }

  // Degree of a nonzero homogeneous element; zero reports the identity.
  Elem degree_of(Elem x) const {
    if (x == zero) return group.identity();
    for (int g = 0; g < group.order(); ++g)
      if (component[g].contains(x)) return g;
    throw Error("degree of non-homogeneous element " + elem_name(x));
  }

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

using RingPtr = std::shared_ptr<const GradedRing>;

// Full axiom check in a fixed order; reports the first violation. Fills the
// derived tables of `r` as a side effect when everything passes.
inline ValidationReport validate_ring(GradedRing& r) {
  auto rep = detail::check_abelian_group(r.order, r.add_table, r.zero,
                                         r.neg_table, "ring");
  if (!rep.ok) return rep;
  const int n = r.order;
  if (r.mul_table.size() != static_cast<std::size_t>(n) * n)
    return ValidationReport::fail("malformed", "ring multiplication table size",
                                  std::to_string(r.mul_table.size()));
  for (Elem v : r.mul_table)
    if (v < 0 || v >= n)
      return ValidationReport::fail(
          "malformed", "ring multiplication entry out of range",
          std::to_string(v));
  if (r.one < 0 || r.one >= n)
    return ValidationReport::fail("malformed", "ring one out of range",
                                  std::to_string(r.one));
  if (r.one == r.zero)
    return ValidationReport::fail("axiom", "ring needs one != zero");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (r.mul(a, b) != r.mul(b, a))
        return ValidationReport::fail(
            "axiom", "ring multiplication commutativity",
            "a=" + std::to_string(a) + " b=" + std::to_string(b));
  for (Elem a = 0; a < n; ++a)
    if (r.mul(r.one, a) != a)
      return ValidationReport::fail("axiom", "ring multiplicative identity",
                                    "a=" + std::to_string(a));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          return ValidationReport::fail(
              "axiom", "ring multiplication associativity",
              "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                  " c=" + std::to_string(c));
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          return ValidationReport::fail(
              "axiom", "ring distributivity",
              "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                  " c=" + std::to_string(c));
      }
  if (static_cast<int>(r.component.size()) != r.group.order())
    return ValidationReport::fail("malformed", "ring component count",
                                  std::to_string(r.component.size()));
  rep = detail::check_direct_sum(n, r.add_table, r.zero, r.component,
                                 r.decomp_table, "ring");
  if (!rep.ok) return rep;
  for (int g = 0; g < r.group.order(); ++g)
    for (int h = 0; h < r.group.order(); ++h) {
      const Elem gh = r.group.op(g, h);
      for (Elem a : r.component[g].elements())
        for (Elem b : r.component[h].elements())
          if (!r.component[gh].contains(r.mul(a, b)))
            return ValidationReport::fail(
                "axiom", "ring graded multiplication R_g R_h in R_gh",
                "g=" + std::to_string(g) + " h=" + std::to_string(h) +
                    " a=" + r.elem_name(a) + " b=" + r.elem_name(b));
    }
  if (!r.component[r.group.identity()].contains(r.one))
    return ValidationReport::fail("axiom", "ring one lies in R_e");
  r.homogeneous_set = ElemSet();
  for (const ElemSet& c : r.component) r.homogeneous_set |= c;
  r.homogeneous_list = r.homogeneous_set.elements();
  return ValidationReport::pass();
}

inline RingPtr finalize_ring(GradedRing r) {
  auto rep = validate_ring(r);
  if (!rep.ok) rep.raise();
  return std::make_shared<const GradedRing>(std::move(r));
}

}  // namespace graded
