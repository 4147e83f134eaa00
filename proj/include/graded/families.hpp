#pragma once

#include <string>
#include <vector>

#include "graded/module.hpp"

namespace graded {
namespace families {

inline std::vector<ElemSet> trivial_components(const FiniteGroup& g, int order,
                                               Elem zero) {
  std::vector<ElemSet> comp(g.order(), ElemSet::single(zero));
  comp[g.identity()] = ElemSet::full(order);
  return comp;
}

// Z_n with the trivial grading over the supplied group (every degree other
// than the identity carries only zero).
inline GradedRing zn_raw(int n, const FiniteGroup& group) {
  if (n < 2) throw Error("zn ring needs n >= 2");
  GradedRing r;
  r.name = "zn" + std::to_string(n);
  r.group = group;
  r.order = n;
  r.add_table.resize(static_cast<std::size_t>(n) * n);
  r.mul_table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add_table[a * n + b] = (a + b) % n;
      r.mul_table[a * n + b] = (a * b) % n;
    }
  r.zero = 0;
  r.one = 1;
  r.component = trivial_components(group, n, 0);
  for (int a = 0; a < n; ++a) r.elem_names.push_back(std::to_string(a));
  return r;
}

inline RingPtr zn(int n, const FiniteGroup& group = FiniteGroup::trivial()) {
  return finalize_ring(zn_raw(n, group));
}

// Z_n[x]/(x^2 - c): elements a + b*x with id a + n*b. When `graded` the
// grading group is cyclic of order 2 with degree 0 holding the constants and
// degree 1 the x-multiples; otherwise the grading is trivial over `group`.
inline GradedRing quadratic_raw(int n, int c, bool graded,
                                const FiniteGroup& group,
                                const std::string& symbol,
                                const std::string& name) {
  if (n < 2) throw Error("quadratic ring needs n >= 2");
  c = ((c % n) + n) % n;
  const int order = n * n;
  if (order > ElemSet::capacity) throw Error("quadratic ring too large");
  GradedRing r;
  r.name = name;
  r.group = graded ? FiniteGroup::cyclic(2) : group;
  r.order = order;
  r.add_table.resize(static_cast<std::size_t>(order) * order);
  r.mul_table.resize(static_cast<std::size_t>(order) * order);
  auto id = [n](int a, int b) { return a + n * b; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          const Elem lhs = id(a, b), rhs = id(a2, b2);
          r.add_table[lhs * order + rhs] = id((a + a2) % n, (b + b2) % n);
          r.mul_table[lhs * order + rhs] =
              id((a * a2 + b * b2 * c) % n, (a * b2 + a2 * b) % n);
        }
  r.zero = id(0, 0);
  r.one = id(1, 0);
  if (graded) {
    ElemSet constants, multiples;
    for (int a = 0; a < n; ++a) constants.insert(id(a, 0));
    for (int b = 0; b < n; ++b) multiples.insert(id(0, b));
    r.component = {constants, multiples};
  } else {
    r.component = trivial_components(r.group, order, r.zero);
  }
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      std::string s;
      if (a == 0 && b == 0)
        s = "0";
      else if (b == 0)
        s = std::to_string(a);
      else {
        if (a != 0) s = std::to_string(a) + "+";
        if (b != 1) s += std::to_string(b);
        s += symbol;
      }
      r.elem_names.resize(order);
      r.elem_names[id(a, b)] = s;
    }
  return r;
}

inline RingPtr quadratic(int n, int c, bool graded = true) {
  return finalize_ring(quadratic_raw(n, c, graded, FiniteGroup::trivial(), "x",
                                     "quadratic" + std::to_string(n) + "c" +
                                         std::to_string(c)));
}

// Z_n adjoined i, i.e. Z_n[x]/(x^2 + 1).
inline GradedRing gaussian_raw(int n, bool graded) {
  return quadratic_raw(n, n - 1, graded, FiniteGroup::trivial(), "i",
                       "gaussian" + std::to_string(n));
}

inline RingPtr gaussian(int n, bool graded = true) {
  return finalize_ring(gaussian_raw(n, graded));
}

// Product of two rings graded by the same group: pair (a,b) has id
// a + |R1| * b, degrees componentwise.
inline GradedRing product_ring_raw(const RingPtr& r1, const RingPtr& r2) {
  if (r1->group != r2->group)
    throw Error("product ring needs matching grading groups");
  const int n1 = r1->order, n2 = r2->order;
  const int order = n1 * n2;
  if (order > ElemSet::capacity) throw Error("product ring too large");
  GradedRing r;
  r.name = "product(" + r1->name + "," + r2->name + ")";
  r.group = r1->group;
  r.order = order;
  r.add_table.resize(static_cast<std::size_t>(order) * order);
  r.mul_table.resize(static_cast<std::size_t>(order) * order);
  auto id = [n1](Elem a, Elem b) { return a + n1 * b; };
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      for (Elem a2 = 0; a2 < n1; ++a2)
        for (Elem b2 = 0; b2 < n2; ++b2) {
          const Elem lhs = id(a, b), rhs = id(a2, b2);
          r.add_table[lhs * order + rhs] = id(r1->add(a, a2), r2->add(b, b2));
          r.mul_table[lhs * order + rhs] = id(r1->mul(a, a2), r2->mul(b, b2));
        }
  r.zero = id(r1->zero, r2->zero);
  r.one = id(r1->one, r2->one);
  r.component.resize(r.group.order());
  for (int g = 0; g < r.group.order(); ++g)
    for (Elem a : r1->component[g].elements())
      for (Elem b : r2->component[g].elements())
        r.component[g].insert(id(a, b));
  r.elem_names.resize(order);
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      r.elem_names[id(a, b)] =
          "(" + r1->elem_name(a) + "," + r2->elem_name(b) + ")";
  return r;
}

inline RingPtr product_ring(const RingPtr& r1, const RingPtr& r2) {
  return finalize_ring(product_ring_raw(r1, r2));
}

// The ring as a module over itself; graded submodules of this module are
// exactly the graded ideals.
inline ModulePtr self_module(const RingPtr& r) {
  GradedModule m;
  m.name = r->name;
  m.ring = r;
  m.order = r->order;
  m.add_table = r->add_table;
  m.zero = r->zero;
  m.act_table = r->mul_table;
  m.component = r->component;
  m.elem_names = r->elem_names;
  return finalize_module(std::move(m));
}

// M1 x M2 over ring1 x ring2 (same grading group); id = m1 + |M1| * m2.
inline ModulePtr product_module(const ModulePtr& m1, const ModulePtr& m2) {
  RingPtr ring = product_ring(m1->ring, m2->ring);
  const int n1 = m1->order, n2 = m2->order;
  const int order = n1 * n2;
  if (order > ElemSet::capacity) throw Error("product module too large");
  GradedModule m;
  m.name = "product(" + m1->name + "," + m2->name + ")";
  m.ring = ring;
  m.order = order;
  m.add_table.resize(static_cast<std::size_t>(order) * order);
  auto id = [n1](Elem a, Elem b) { return a + n1 * b; };
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      for (Elem a2 = 0; a2 < n1; ++a2)
        for (Elem b2 = 0; b2 < n2; ++b2)
          m.add_table[id(a, b) * order + id(a2, b2)] =
              id(m1->add(a, a2), m2->add(b, b2));
  m.zero = id(m1->zero, m2->zero);
  m.act_table.resize(static_cast<std::size_t>(ring->order) * order);
  for (Elem ra = 0; ra < m1->ring->order; ++ra)
    for (Elem rb = 0; rb < m2->ring->order; ++rb)
      for (Elem a = 0; a < n1; ++a)
        for (Elem b = 0; b < n2; ++b)
          m.act_table[(ra + m1->ring->order * rb) * order + id(a, b)] =
              id(m1->act(ra, a), m2->act(rb, b));
  m.component.resize(ring->group.order());
  for (int g = 0; g < ring->group.order(); ++g)
    for (Elem a : m1->component[g].elements())
      for (Elem b : m2->component[g].elements())
        m.component[g].insert(id(a, b));
  m.elem_names.resize(order);
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      m.elem_names[id(a, b)] =
          "(" + m1->elem_name(a) + "," + m2->elem_name(b) + ")";
  return finalize_module(std::move(m));
}

// Free module R^k with componentwise action; id = sum of a_j * |R|^j.
inline ModulePtr free_module(const RingPtr& r, int k) {
  if (k < 1) throw Error("free module rank must be positive");
  long long order = 1;
  for (int j = 0; j < k; ++j) {
    order *= r->order;
    if (order > ElemSet::capacity) throw Error("free module too large");
  }
  const int n = static_cast<int>(order);
  GradedModule m;
  m.name = "free(" + r->name + "," + std::to_string(k) + ")";
  m.ring = r;
  m.order = n;
  auto coords = [&](Elem e) {
    std::vector<Elem> c(k);
    for (int j = 0; j < k; ++j) {
      c[j] = e % r->order;
      e /= r->order;
    }
    return c;
  };
  auto id = [&](const std::vector<Elem>& c) {
    Elem e = 0;
    for (int j = k - 1; j >= 0; --j) e = e * r->order + c[j];
    return e;
  };
  m.add_table.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto ca = coords(a), cb = coords(b);
      for (int j = 0; j < k; ++j) ca[j] = r->add(ca[j], cb[j]);
      m.add_table[a * n + b] = id(ca);
    }
  m.zero = 0;
  m.act_table.resize(static_cast<std::size_t>(r->order) * n);
  for (Elem s = 0; s < r->order; ++s)
    for (Elem a = 0; a < n; ++a) {
      auto ca = coords(a);
      for (int j = 0; j < k; ++j) ca[j] = r->mul(s, ca[j]);
      m.act_table[s * n + a] = id(ca);
    }
  m.component.resize(r->group.order());
  for (int g = 0; g < r->group.order(); ++g)
    for (Elem a = 0; a < n; ++a) {
      bool in = true;
      for (Elem c : coords(a))
        if (!r->component[g].contains(c)) in = false;
      if (in) m.component[g].insert(a);
    }
  m.elem_names.resize(n);
  for (Elem a = 0; a < n; ++a) {
    auto c = coords(a);
    std::string s = "(";
    for (int j = 0; j < k; ++j)
      s += (j ? "," : "") + r->elem_name(c[j]);
    m.elem_names[a] = s + ")";
  }
  return finalize_module(std::move(m));
}

inline ModulePtr zero_module(const RingPtr& r) {
  GradedModule m;
  m.name = "zero(" + r->name + ")";
  m.ring = r;
  m.order = 1;
  m.add_table = {0};
  m.zero = 0;
  m.act_table.assign(r->order, 0);
  m.component.assign(r->group.order(), ElemSet::single(0));
  m.elem_names = {"0"};
  return finalize_module(std::move(m));
}

}  // namespace families
}  // namespace graded
