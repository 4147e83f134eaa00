#include <catch2/catch_amalgamated.hpp>

#include "graded/families.hpp"
#include "graded/predicates.hpp"

using namespace graded;

namespace {

ElemSet set_of(std::initializer_list<Elem> xs) {
  ElemSet s;
  for (Elem x : xs) s.insert(x);
  return s;
}

Witness wit(std::initializer_list<Elem> xs) { return Witness{xs}; }

// Re-evaluates a failing witness directly from the definition: the guard
// must hold and every disjunct must fail. Independent of the search loops.
void replay_binary(const GradedModule& m, const ElemSet& k,
                   const PhiValue& exclude, const ElemSet& m_set,
                   const ElemSet& r_set, const Witness& w) {
  REQUIRE(w.elems.size() == 2);
  const Elem r = w.elems[0], x = w.elems[1];
  REQUIRE(m.ring->is_homogeneous(r));
  REQUIRE(m.is_homogeneous(x));
  const Elem p = m.act(r, x);
  REQUIRE(k.contains(p));
  if (exclude.has_value()) REQUIRE_FALSE(exclude->contains(p));
  REQUIRE_FALSE(m_set.contains(x));
  REQUIRE_FALSE(r_set.contains(r));
}

void replay_ternary(const GradedModule& m, const ElemSet& k,
                    const PhiValue& exclude, const ElemSet& xm_set,
                    const ElemSet& ym_set, const ElemSet& xy_set,
                    const Witness& w) {
  REQUIRE(w.elems.size() == 3);
  const Elem x = w.elems[0], y = w.elems[1], z = w.elems[2];
  REQUIRE(m.ring->is_homogeneous(x));
  REQUIRE(m.ring->is_homogeneous(y));
  REQUIRE(m.is_homogeneous(z));
  const Elem p = m.act(m.ring->mul(x, y), z);
  REQUIRE(k.contains(p));
  if (exclude.has_value()) REQUIRE_FALSE(exclude->contains(p));
  REQUIRE_FALSE(xm_set.contains(m.act(x, z)));
  REQUIRE_FALSE(ym_set.contains(m.act(y, z)));
  REQUIRE_FALSE(xy_set.contains(m.ring->mul(x, y)));
}

}  // namespace

TEST_CASE("graded prime") {
  ModulePtr z4 = families::self_module(families::zn(4));
  REQUIRE(is_graded_prime(*z4, set_of({0, 2})).holds);
  auto v = is_graded_prime(*z4, set_of({0}));
  REQUIRE_FALSE(v.holds);
  REQUIRE(*v.witness == wit({2, 2}));

  ModulePtr z2 = families::self_module(families::zn(2));
  REQUIRE(is_graded_prime(*z2, set_of({0})).holds);
}

TEST_CASE("graded weakly prime") {
  ModulePtr z4 = families::self_module(families::zn(4));
  // At K = {0} the guard 0 != rm in K is unsatisfiable.
  REQUIRE(is_graded_weakly_prime(*z4, set_of({0})).holds);

  ModulePtr z8 = families::self_module(families::zn(8));
  auto v = is_graded_weakly_prime(*z8, set_of({0, 4}));
  REQUIRE_FALSE(v.holds);
  REQUIRE(*v.witness == wit({2, 2}));
}

TEST_CASE("phi variants collapse to the classical predicates") {
  for (ModulePtr m : {families::self_module(families::zn(8)),
                      families::self_module(families::zn(12)),
                      families::self_module(families::gaussian(2))}) {
    for (const ElemSet& k : enumerate_graded_submodules(*m)) {
      if (k.count() == m->order) continue;
      REQUIRE(is_graded_phi_prime(*m, k, PhiFunction::empty()).holds ==
              is_graded_prime(*m, k).holds);
      REQUIRE(is_graded_phi_prime(*m, k, PhiFunction::zero()).holds ==
              is_graded_weakly_prime(*m, k).holds);
      REQUIRE(is_graded_phi_primary(*m, k, PhiFunction::empty()).holds ==
              is_graded_primary(*m, k).holds);
      REQUIRE(is_graded_phi_2_absorbing(*m, k, PhiFunction::empty()).holds ==
              is_graded_2_absorbing(*m, k).holds);
      REQUIRE(is_graded_phi_2_absorbing_primary(*m, k, PhiFunction::zero())
                  .holds ==
              is_graded_weakly_2_absorbing_primary(*m, k).holds);
    }
  }
}

TEST_CASE("phi-prime with phi_2 on Z8") {
  ModulePtr z8 = families::self_module(families::zn(8));
  // K = 4Z8 has K^2 = {0}, so the guard excludes nothing but 0.
  auto v = is_graded_phi_prime(*z8, set_of({0, 4}), PhiFunction::n_almost(2));
  REQUIRE_FALSE(v.holds);
  REQUIRE(*v.witness == wit({2, 2}));
}

TEST_CASE("graded primary") {
  ModulePtr z8 = families::self_module(families::zn(8));
  REQUIRE(is_graded_primary(*z8, set_of({0, 4})).holds);
  // prime implies primary corpus-wide
  for (ModulePtr m : {families::self_module(families::zn(12)),
                      families::self_module(families::gaussian(4))}) {
    for (const ElemSet& k : enumerate_graded_submodules(*m)) {
      if (k.count() == m->order) continue;
      if (is_graded_prime(*m, k).holds) REQUIRE(is_graded_primary(*m, k).holds);
    }
  }
}

TEST_CASE("graded 2-absorbing") {
  ModulePtr z8 = families::self_module(families::zn(8));
  REQUIRE(is_graded_2_absorbing(*z8, set_of({0, 4})).holds);
  REQUIRE(is_graded_2_absorbing(*z8, set_of({0, 2, 4, 6})).holds);

  ModulePtr z16 = families::self_module(families::zn(16));
  auto v = is_graded_2_absorbing(*z16, set_of({0, 8}));
  REQUIRE_FALSE(v.holds);
  REQUIRE(*v.witness == wit({2, 2, 2}));
}

TEST_CASE("graded 2-absorbing primary") {
  ModulePtr z16 = families::self_module(families::zn(16));
  REQUIRE(is_graded_2_absorbing_primary(*z16, set_of({0, 8})).holds);
  REQUIRE(graded_radical_submodule(*z16, set_of({0, 8})) ==
          set_of({0, 2, 4, 6, 8, 10, 12, 14}));

  // any 2-absorbing K is 2-absorbing primary
  for (ModulePtr m : {families::self_module(families::zn(16)),
                      families::self_module(families::gaussian(4))}) {
    for (const ElemSet& k : enumerate_graded_submodules(*m)) {
      if (k.count() == m->order) continue;
      if (is_graded_2_absorbing(*m, k).holds)
        REQUIRE(is_graded_2_absorbing_primary(*m, k).holds);
    }
  }
}

TEST_CASE("improper submodules are rejected") {
  ModulePtr z4 = families::self_module(families::zn(4));
  REQUIRE_THROWS_AS(is_graded_prime(*z4, ElemSet::full(4)),
                    ImproperSubmodule);
  REQUIRE_THROWS_AS(classify(*z4, ElemSet::full(4), {}), ImproperSubmodule);
}

TEST_CASE("g-local predicates") {
  // Trivial grading group: the g = e variant quantifies over all of R and M,
  // i.e. the global predicate.
  ModulePtr z8 = families::self_module(families::zn(8));
  for (const ElemSet& k : enumerate_graded_submodules(*z8)) {
    if (k.count() == z8->order) continue;
    for (const PhiFunction& phi : {PhiFunction::empty(), PhiFunction::zero()}) {
      REQUIRE(is_g_phi_primary(*z8, k, 0, phi).holds ==
              is_graded_phi_primary(*z8, k, phi).holds);
      REQUIRE(is_g_phi_2_absorbing(*z8, k, 0, phi).holds ==
              is_graded_phi_2_absorbing(*z8, k, phi).holds);
      REQUIRE(is_g_phi_2_absorbing_primary(*z8, k, 0, phi).holds ==
              is_graded_phi_2_absorbing_primary(*z8, k, phi).holds);
    }
  }

  // Global implies g-local for every admissible degree.
  for (ModulePtr m : {families::self_module(families::gaussian(2)),
                      families::self_module(families::gaussian(4))}) {
    for (const ElemSet& k : enumerate_graded_submodules(*m)) {
      if (k.count() == m->order) continue;
      for (Elem g = 0; g < m->ring->group.order(); ++g) {
        if ((k & m->component[g]) == m->component[g]) continue;
        if (is_graded_phi_2_absorbing(*m, k, PhiFunction::empty()).holds)
          REQUIRE(is_g_phi_2_absorbing(*m, k, g, PhiFunction::empty()).holds);
        if (is_graded_phi_primary(*m, k, PhiFunction::empty()).holds)
          REQUIRE(is_g_phi_primary(*m, k, g, PhiFunction::empty()).holds);
      }
    }
  }

  // Z2[i], K = {0}, degree of i: brute force over R_e = {0,1}, M_g = {0,i}.
  ModulePtr g2 = families::self_module(families::gaussian(2));
  REQUIRE(is_g_phi_2_absorbing(*g2, set_of({0}), 1, PhiFunction::empty())
              .holds);
  REQUIRE(is_g_phi_primary(*g2, set_of({0}), 1, PhiFunction::empty()).holds);

  // K_g = M_g is rejected: in Z2[x]/(x^2) the ideal (x) = {0,x} contains the
  // entire degree-1 component.
  ModulePtr dual = families::self_module(families::quadratic(2, 0));
  REQUIRE((set_of({0, 2}) & dual->component[1]) == dual->component[1]);
  REQUIRE_THROWS_AS(
      is_g_phi_primary(*dual, set_of({0, 2}), 1, PhiFunction::empty()),
      GComponentImproper);
}

TEST_CASE("guard normalization: phi may be replaced by K intersect phi") {
  // Predicates must be invariant under normalizing the table value, since
  // K - phi(K) = K - (K intersect phi(K)).
  ModulePtr z8 = families::self_module(families::zn(8));
  const ElemSet k = set_of({0, 4});
  std::map<ElemSet, PhiValue> raw, normalized;
  raw[k] = set_of({0, 2, 4, 6});  // sticks out of K
  normalized[k] = set_of({0, 4});
  for (auto kind : {PredicateKind::Prime, PredicateKind::Primary,
                    PredicateKind::TwoAbsorbing,
                    PredicateKind::TwoAbsorbingPrimary}) {
    REQUIRE(
        check_phi_predicate(kind, *z8, k, PhiFunction::table(raw)).holds ==
        check_phi_predicate(kind, *z8, k, PhiFunction::table(normalized))
            .holds);
  }
}

TEST_CASE("witness soundness: every false verdict replays") {
  for (ModulePtr m : {families::self_module(families::zn(12)),
                      families::self_module(families::zn(16)),
                      families::self_module(families::gaussian(4))}) {
    for (const ElemSet& k : enumerate_graded_submodules(*m)) {
      if (k.count() == m->order) continue;
      const ElemSet colon = colon_ideal(*m, k);
      const ElemSet rad_colon = ideal_radical(*m->ring, colon);
      const ElemSet grad = graded_radical_submodule(*m, k);
      for (const PhiFunction& phi :
           {PhiFunction::empty(), PhiFunction::zero(), PhiFunction::n_almost(2),
            PhiFunction::omega()}) {
        const PhiValue ex = phi.apply(*m, k);
        if (auto v = check_phi_predicate(PredicateKind::Prime, *m, k, phi);
            !v.holds)
          replay_binary(*m, k, ex, k, colon, *v.witness);
        if (auto v = check_phi_predicate(PredicateKind::Primary, *m, k, phi);
            !v.holds)
          replay_binary(*m, k, ex, k, rad_colon, *v.witness);
        if (auto v =
                check_phi_predicate(PredicateKind::TwoAbsorbing, *m, k, phi);
            !v.holds)
          replay_ternary(*m, k, ex, k, k, colon, *v.witness);
        if (auto v = check_phi_predicate(PredicateKind::TwoAbsorbingPrimary,
                                         *m, k, phi);
            !v.holds)
          replay_ternary(*m, k, ex, grad, grad, colon, *v.witness);
      }
    }
  }
}

TEST_CASE("predicates are monotone in phi") {
  // For phi below psi pointwise, every phi-predicate implies the
  // psi-predicate, across all four families.
  const std::vector<PhiFunction> chain = {
      PhiFunction::empty(), PhiFunction::zero(), PhiFunction::omega(),
      PhiFunction::n_almost(3), PhiFunction::n_almost(2)};
  for (ModulePtr m : {families::self_module(families::zn(12)),
                      families::self_module(families::zn(16)),
                      families::self_module(families::gaussian(4))}) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      REQUIRE(phi_leq(chain[i], chain[i + 1], *m).holds);
      for (const ElemSet& k : enumerate_graded_submodules(*m)) {
        if (k.count() == m->order) continue;
        for (auto kind : {PredicateKind::Prime, PredicateKind::Primary,
                          PredicateKind::TwoAbsorbing,
                          PredicateKind::TwoAbsorbingPrimary}) {
          if (check_phi_predicate(kind, *m, k, chain[i]).holds) {
            INFO(m->name << " " << predicate_kind_name(kind) << " "
                         << chain[i].label() << " -> " << chain[i + 1].label()
                         << " K=" << m->set_name(k));
            REQUIRE(check_phi_predicate(kind, *m, k, chain[i + 1]).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("classification reports") {
  ModulePtr z16 = families::self_module(families::zn(16));
  auto rep = classify(*z16, set_of({0, 8}), {PhiFunction::empty()});
  auto find = [&](const std::string& pred, const std::string& phi) {
    for (const auto& r : rep.results)
      if (r.predicate == pred && r.phi == phi) return r;
    FAIL("row not found: " + pred);
    return PredicateResult{};
  };
  REQUIRE(find("2-absorbing", "").status == "false");
  REQUIRE(find("2-absorbing", "").witness == wit({2, 2, 2}));
  REQUIRE(find("2-absorbing-primary", "").status == "true");
  REQUIRE(find("phi-2-absorbing", "empty").status == "false");

  // Hierarchy on a prime: everything weaker is true.
  ModulePtr z4 = families::self_module(families::zn(4));
  auto rep2 = classify(*z4, set_of({0, 2}),
                       {PhiFunction::empty(), PhiFunction::zero()});
  for (const auto& r : rep2.results) {
    INFO(r.predicate << " phi=" << r.phi);
    REQUIRE(r.status == "true");
  }

  // Reports are deterministic.
  auto rep3 = classify(*z16, set_of({0, 8}), {PhiFunction::empty()});
  REQUIRE(rep == rep3);

  // phi_n rows on a non-multiplication module are skipped, not fatal.
  ModulePtr klein = families::free_module(families::zn(2), 2);
  auto rep4 = classify(*klein, set_of({0}), {PhiFunction::n_almost(2)});
  bool saw_skip = false;
  for (const auto& r : rep4.results)
    if (r.status == "skipped") saw_skip = true;
  REQUIRE(saw_skip);
}
