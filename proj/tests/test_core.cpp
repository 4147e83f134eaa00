#include <catch2/catch_amalgamated.hpp>

#include "graded/core.hpp"
#include "graded/families.hpp"

using namespace graded;

namespace {

ElemSet set_of(std::initializer_list<Elem> xs) {
  ElemSet s;
  for (Elem x : xs) s.insert(x);
  return s;
}

// Independent oracle: every subset of the carrier, kept when it satisfies
// the graded submodule definition directly. Only for small modules.
std::vector<ElemSet> brute_force_graded_submodules(const GradedModule& m) {
  REQUIRE(m.order <= 16);
  std::vector<ElemSet> out;
  for (unsigned mask = 0; mask < (1u << m.order); ++mask) {
    ElemSet s;
    for (int i = 0; i < m.order; ++i)
      if (mask & (1u << i)) s.insert(i);
    if (!s.contains(m.zero)) continue;
    if (validate_submodule(m, s).ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Z2[i] with the order-2 grading: ids 0, 1, i = 2, 1+i = 3.
ModulePtr gaussian2_module() {
  return families::self_module(families::gaussian(2));
}

}  // namespace

TEST_CASE("validation accepts the shipped families") {
  REQUIRE_NOTHROW(families::zn(4));
  REQUIRE_NOTHROW(families::gaussian(2));
  REQUIRE_NOTHROW(families::gaussian(4));
  REQUIRE_NOTHROW(families::quadratic(3, 1));
  REQUIRE_NOTHROW(families::product_ring(families::zn(2), families::zn(3)));
  REQUIRE_NOTHROW(families::self_module(families::zn(12)));
  REQUIRE_NOTHROW(families::free_module(families::zn(2), 2));
  REQUIRE_NOTHROW(families::zero_module(families::zn(4)));
}

TEST_CASE("validation rejects overlapping components") {
  // Z4 graded by C2 with R_0 = R_1 = {0,2}: direct sum impossible.
  GradedRing r = families::zn_raw(4, FiniteGroup::cyclic(2));
  r.component[0] = set_of({0, 2});
  r.component[1] = set_of({0, 2});
  auto rep = validate_ring(r);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.kind == "axiom");
  REQUIRE(rep.axiom.find("direct-sum") != std::string::npos);
}

TEST_CASE("validation reports malformed tables distinctly") {
  GradedRing r = families::zn_raw(4, FiniteGroup::trivial());
  r.add_table[3] = 9;
  auto rep = validate_ring(r);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.kind == "malformed");
}

TEST_CASE("validation pinpoints a broken axiom") {
  GradedRing r = families::zn_raw(4, FiniteGroup::trivial());
  r.mul_table[1 * 4 + 2] = 3;  // 1*2 = 3 breaks the identity law
  auto rep = validate_ring(r);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.kind == "axiom");
}

TEST_CASE("gaussian Z2[i] grading is the expected one") {
  RingPtr r = families::gaussian(2);
  REQUIRE(r->order == 4);
  REQUIRE(r->component[0] == set_of({0, 1}));
  REQUIRE(r->component[1] == set_of({0, 2}));
  REQUIRE(r->elem_name(2) == "i");
  REQUIRE(r->elem_name(3) == "1+i");
  // i * i = -1 = 1 in Z2[i]
  REQUIRE(r->mul(2, 2) == 1);
}

TEST_CASE("homogeneous elements") {
  RingPtr z4 = families::zn(4);
  REQUIRE(homogeneous_elements(*z4) == ElemSet::full(4));

  RingPtr g2 = families::gaussian(2);
  REQUIRE(homogeneous_elements(*g2) == set_of({0, 1, 2}));
  REQUIRE_FALSE(g2->is_homogeneous(3));  // 1+i sits in neither component
  REQUIRE_THROWS_AS(g2->degree_of(3), Error);
}

TEST_CASE("homogeneous decomposition") {
  RingPtr g2 = families::gaussian(2);
  // 1+i decomposes as 1 (degree e) + i (degree g)
  REQUIRE(g2->component_of(3, 0) == 1);
  REQUIRE(g2->component_of(3, 1) == 2);
  // zero decomposes as all zeros
  REQUIRE(g2->component_of(0, 0) == 0);
  REQUIRE(g2->component_of(0, 1) == 0);

  RingPtr z4 = families::zn(4);
  REQUIRE(z4->component_of(3, 0) == 3);

  // Sum of components reproduces the element, for every element everywhere.
  for (RingPtr r : {families::zn(12), families::gaussian(4)}) {
    for (Elem x = 0; x < r->order; ++x) {
      Elem sum = r->zero;
      for (int g = 0; g < r->group.order(); ++g)
        sum = r->add(sum, r->component_of(x, g));
      REQUIRE(sum == x);
    }
  }
}

TEST_CASE("graded closure") {
  ModulePtr z4 = families::self_module(families::zn(4));
  REQUIRE(graded_closure(*z4, {}) == set_of({0}));
  const Elem two = 2;
  REQUIRE(graded_closure(*z4, std::span<const Elem>(&two, 1)) ==
          set_of({0, 2}));

  // 1+i generates all of Z2[i]: its components 1 and i already do.
  ModulePtr g2 = gaussian2_module();
  const Elem one_plus_i = 3;
  REQUIRE(graded_closure(*g2, std::span<const Elem>(&one_plus_i, 1)) ==
          ElemSet::full(4));
}

TEST_CASE("graded submodule enumeration matches the powerset oracle") {
  auto check = [](ModulePtr m) {
    const auto oracle = brute_force_graded_submodules(*m);
    const auto& got = enumerate_graded_submodules(*m);
    REQUIRE(got == oracle);
  };
  check(families::self_module(families::zn(4)));
  check(families::self_module(families::zn(2)));
  check(families::self_module(families::zn(8)));
  check(gaussian2_module());
  check(families::free_module(families::zn(2), 2));
}

TEST_CASE("graded submodule enumeration frozen values") {
  ModulePtr z4 = families::self_module(families::zn(4));
  const auto& subs = enumerate_graded_submodules(*z4);
  REQUIRE(subs == std::vector<ElemSet>{set_of({0}), set_of({0, 2}),
                                       ElemSet::full(4)});

  ModulePtr z2 = families::self_module(families::zn(2));
  REQUIRE(enumerate_graded_submodules(*z2) ==
          std::vector<ElemSet>{set_of({0}), ElemSet::full(2)});

  // Klein module Z2 x Z2 over Z2: every subgroup is a submodule.
  ModulePtr klein = families::free_module(families::zn(2), 2);
  REQUIRE(enumerate_graded_submodules(*klein).size() == 5);

  // Z2[i] has a non-graded ideal {0, 1+i}; only {0} and R itself survive.
  ModulePtr g2 = gaussian2_module();
  REQUIRE(enumerate_graded_submodules(*g2) ==
          std::vector<ElemSet>{set_of({0}), ElemSet::full(4)});
}

TEST_CASE("enumeration bound") {
  ModulePtr big = families::self_module(families::zn(9));
  REQUIRE_THROWS_AS(enumerate_graded_submodules(*big, 8), BoundExceeded);
}

TEST_CASE("colon ideal") {
  ModulePtr z4 = families::self_module(families::zn(4));
  REQUIRE(colon_ideal(*z4, set_of({0, 2})) == set_of({0, 2}));
  REQUIRE(colon_ideal(*z4, ElemSet::full(4)) == ElemSet::full(4));

  ModulePtr z8 = families::self_module(families::zn(8));
  REQUIRE(colon_ideal(*z8, set_of({0, 4})) == set_of({0, 4}));
}

TEST_CASE("graded radical of an ideal") {
  RingPtr z8 = families::zn(8);
  REQUIRE(ideal_radical(*z8, set_of({0})) == set_of({0, 2, 4, 6}));

  // Key graded-vs-ungraded divergence: in Z2[i], (1+i)^2 = 0 yet 1+i has the
  // non-nilpotent component 1, so the graded radical of {0} stays {0}.
  RingPtr g2 = families::gaussian(2);
  REQUIRE(ideal_radical(*g2, set_of({0})) == set_of({0}));
  ElemSet ungraded_nilradical;
  for (Elem x = 0; x < g2->order; ++x) {
    Elem p = x;
    for (int n = 1; n <= g2->order; ++n) {
      if (p == g2->zero) {
        ungraded_nilradical.insert(x);
        break;
      }
      p = g2->mul(p, x);
    }
  }
  REQUIRE(ungraded_nilradical == set_of({0, 3}));  // {0, 1+i}

  // Grad(R) = R convention on improper input.
  REQUIRE(ideal_radical(*z8, ElemSet::full(8)) == ElemSet::full(8));
}

TEST_CASE("homogeneous membership in Grad(I) has the single-power form") {
  // For homogeneous r: r in Grad(I) iff r^n in I for some n <= |R|.
  // Cross-check the componentwise implementation against a direct power
  // search, for every graded ideal of a few rings.
  for (RingPtr r :
       {families::zn(12), families::gaussian(2), families::gaussian(4)}) {
    ModulePtr self = families::self_module(r);
    for (const ElemSet& ideal : enumerate_graded_submodules(*self)) {
      const ElemSet rad = ideal_radical(*r, ideal);
      for (Elem x : r->homogeneous_list) {
        bool power_in = false;
        Elem p = x;
        for (int n = 1; n <= r->order; ++n) {
          if (ideal.contains(p)) {
            power_in = true;
            break;
          }
          p = r->mul(p, x);
        }
        REQUIRE(rad.contains(x) == power_in);
      }
    }
  }
}

TEST_CASE("graded prime submodules") {
  ModulePtr z4 = families::self_module(families::zn(4));
  REQUIRE(graded_prime_submodules(*z4) ==
          std::vector<ElemSet>{set_of({0, 2})});

  ModulePtr z2 = families::self_module(families::zn(2));
  REQUIRE(graded_prime_submodules(*z2) == std::vector<ElemSet>{set_of({0})});

  ModulePtr z6 = families::self_module(families::zn(6));
  REQUIRE(graded_prime_submodules(*z6) ==
          std::vector<ElemSet>{set_of({0, 3}), set_of({0, 2, 4})});
}

TEST_CASE("graded radical of a submodule") {
  ModulePtr z4 = families::self_module(families::zn(4));
  REQUIRE(graded_radical_submodule(*z4, set_of({0})) == set_of({0, 2}));
  // A prime is its own radical.
  REQUIRE(graded_radical_submodule(*z4, set_of({0, 2})) == set_of({0, 2}));
  // No graded prime contains M, so Grad_M(M) = M.
  REQUIRE(graded_radical_submodule(*z4, ElemSet::full(4)) == ElemSet::full(4));
}

TEST_CASE("radical of a submodule is a closure operator") {
  for (ModulePtr m : {families::self_module(families::zn(12)),
                      families::self_module(families::gaussian(4)),
                      families::free_module(families::zn(2), 2)}) {
    const auto& subs = enumerate_graded_submodules(*m);
    for (const ElemSet& k : subs) {
      const ElemSet rad = graded_radical_submodule(*m, k);
      REQUIRE(k.subset_of(rad));
      if (rad.count() < m->order)
        REQUIRE(graded_radical_submodule(*m, rad) == rad);
      for (const ElemSet& l : subs)
        if (k.subset_of(l))
          REQUIRE(rad.subset_of(graded_radical_submodule(*m, l)));
    }
  }
}

TEST_CASE("multiplication module detection") {
  for (int n : {2, 3, 4, 6, 8, 12, 16}) {
    ModulePtr m = families::self_module(families::zn(n));
    REQUIRE(multiplication_certificate(*m).is_multiplication);
  }
  REQUIRE(multiplication_certificate(*gaussian2_module()).is_multiplication);

  ModulePtr klein = families::free_module(families::zn(2), 2);
  auto cert = multiplication_certificate(*klein);
  REQUIRE_FALSE(cert.is_multiplication);
  // First failure in canonical order: {(0,0),(1,0)} = ids {0,1}.
  REQUIRE(cert.first_failure == set_of({0, 1}));

  ModulePtr zero = families::zero_module(families::zn(4));
  REQUIRE(multiplication_certificate(*zero).is_multiplication);
}

TEST_CASE("submodule product") {
  ModulePtr z8 = families::self_module(families::zn(8));
  const ElemSet twos = set_of({0, 2, 4, 6});
  REQUIRE(submodule_product(*z8, twos, twos) == set_of({0, 4}));
  // N * M = N since (M : M) = R.
  REQUIRE(submodule_product(*z8, ElemSet::full(8), twos) == twos);
  REQUIRE(submodule_power(*z8, twos, 3) == set_of({0}));

  ModulePtr klein = families::free_module(families::zn(2), 2);
  REQUIRE_THROWS_AS(
      submodule_product(*klein, set_of({0}), set_of({0})),
      NotMultiplicationModule);
}

TEST_CASE("submodule product is commutative with identity M") {
  for (ModulePtr m : {families::self_module(families::zn(12)),
                      families::self_module(families::gaussian(4))}) {
    const auto& subs = enumerate_graded_submodules(*m);
    for (const ElemSet& n : subs)
      for (const ElemSet& k : subs) {
        REQUIRE(submodule_product(*m, n, k) == submodule_product(*m, k, n));
      }
    for (const ElemSet& n : subs)
      REQUIRE(submodule_product(*m, n, m->carrier_set()) == n);
  }
}

TEST_CASE("Grad_M(N) agrees with Grad((N:M))M on multiplication modules") {
  // Two independent routes: prime intersection vs radical-of-colon times M.
  for (ModulePtr m : {families::self_module(families::zn(12)),
                      families::self_module(families::zn(16)),
                      families::self_module(families::gaussian(2)),
                      families::self_module(families::gaussian(4))}) {
    REQUIRE(multiplication_certificate(*m).is_multiplication);
    for (const ElemSet& n : enumerate_graded_submodules(*m)) {
      const ElemSet lhs = graded_radical_submodule(*m, n);
      const ElemSet rhs = ideal_times_module(
          *m, ideal_radical(*m->ring, colon_ideal(*m, n)));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("sums, intersections and scaled submodules stay graded") {
  for (ModulePtr m : {families::self_module(families::zn(8)),
                      families::self_module(families::gaussian(4)),
                      families::free_module(families::zn(2), 2)}) {
    const auto& subs = enumerate_graded_submodules(*m);
    for (const ElemSet& a : subs)
      for (const ElemSet& b : subs) {
        ElemSet sum;
        for (Elem x : a.elements())
          for (Elem y : b.elements()) sum.insert(m->add(x, y));
        REQUIRE(validate_submodule(*m, sum).ok);
        REQUIRE(validate_submodule(*m, a & b).ok);
      }
    // Rx for homogeneous x, IN for a graded ideal I, rN for homogeneous r.
    for (Elem x : m->homogeneous_list) {
      ElemSet rx;
      for (Elem r = 0; r < m->ring->order; ++r) rx.insert(m->act(r, x));
      REQUIRE(validate_submodule(*m, detail::additive_closure_in(*m, rx)).ok);
    }
    ModulePtr ring_self = families::self_module(m->ring);
    for (const ElemSet& ideal : enumerate_graded_submodules(*ring_self))
      for (const ElemSet& n : subs) {
        ElemSet in;
        for (Elem a : ideal.elements())
          for (Elem x : n.elements()) in.insert(m->act(a, x));
        REQUIRE(
            validate_submodule(*m, detail::additive_closure_in(*m, in)).ok);
      }
    for (Elem r : m->ring->homogeneous_list)
      for (const ElemSet& n : subs) {
        ElemSet rn;
        for (Elem x : n.elements()) rn.insert(m->act(r, x));
        REQUIRE(validate_submodule(*m, detail::additive_closure_in(*m, rn)).ok);
      }
  }
}
