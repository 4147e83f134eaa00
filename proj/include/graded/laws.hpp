#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "graded/constructions.hpp"
#include "graded/corpus.hpp"
#include "graded/predicates.hpp"

namespace graded {

struct LawOptions {
  int enum_bound = kDefaultEnumBound;
  // Runs the law's shipped weakened variant (a dropped hypothesis or
  // disjunct) instead of the real statement; used to prove the harness can
  // fail.
  bool mutated = false;
  // Replaces the per-module default phi lists when set.
  std::optional<std::vector<PhiFunction>> phi_override;
  // T2.9 only: enumerate every graded epimorphism onto each quotient rather
  // than just the canonical projection. Bounded to small modules.
  bool all_epimorphisms = false;
  int epi_order_bound = 12;
};

struct Counterexample {
  std::string instance_id;
  std::string part;
  std::string phi;
  std::string detail;

  friend bool operator==(const Counterexample& a, const Counterexample& b) {
    return a.instance_id == b.instance_id && a.part == b.part &&
           a.phi == b.phi && a.detail == b.detail;
  }
};

struct LawResult {
  std::string law;
  long instances = 0;  // corpus instances examined
  long checks = 0;     // implications evaluated
  long vacuous = 0;    // combinations whose hypothesis failed
  std::vector<std::string> skipped;  // precondition failures, logged
  std::optional<Counterexample> counterexample;
  double seconds = 0.0;

  bool pass() const { return !counterexample.has_value(); }
};

namespace lawdetail {

// Shared bookkeeping for a law run. Laws stop at the first counterexample;
// iteration order is canonical everywhere, so reports are deterministic.
struct Run {
  LawResult res;
  const LawOptions& opt;

  explicit Run(std::string law, const LawOptions& o) : opt(o) {
    res.law = std::move(law);
  }

  bool done() const { return res.counterexample.has_value(); }

  void require(bool ok, const Instance& inst, const std::string& part,
               const std::string& phi, const std::string& detail) {
    ++res.checks;
    if (!ok && !res.counterexample)
      res.counterexample = Counterexample{inst.id, part, phi, detail};
  }

  void vacuous() { ++res.vacuous; }

  void skip(const std::string& reason) {
    if (res.skipped.size() < 200) res.skipped.push_back(reason);
  }
};

// Predicate evaluation memo per instance; keyed by kind, submodule and phi
// label. Only the built-in phi kinds are cached (their labels identify them).
struct Eval {
  const GradedModule& m;
  int bound;
  std::map<std::tuple<int, ElemSet, std::string>, bool> memo;

  Eval(const GradedModule& mod, int b) : m(mod), bound(b) {}

  bool pred(PredicateKind kind, const ElemSet& k, const PhiFunction& phi) {
    const bool cacheable = phi.kind() != PhiFunction::Kind::Table;
    const auto key = std::make_tuple(static_cast<int>(kind), k, phi.label());
    if (cacheable) {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    const bool v = check_phi_predicate(kind, m, k, phi, bound).holds;
    if (cacheable) memo.emplace(key, v);
    return v;
  }
};

inline std::vector<PhiFunction> default_phis(const GradedModule& m,
                                             const LawOptions& opt) {
  if (opt.phi_override) return *opt.phi_override;
  if (is_multiplication_module(m, opt.enum_bound))
    return {PhiFunction::empty(), PhiFunction::zero(), PhiFunction::n_almost(2),
            PhiFunction::n_almost(3), PhiFunction::omega()};
  return {PhiFunction::empty(), PhiFunction::zero()};
}

// phi(K), with inapplicable phi kinds logged and reported as absent.
inline std::optional<PhiValue> try_phi(Run& run, const Instance& inst,
                                       const GradedModule& m,
                                       const PhiFunction& phi,
                                       const ElemSet& k) {
  try {
    return phi.apply(m, k, run.opt.enum_bound);
  } catch (const NotMultiplicationModule&) {
    run.skip(inst.id + ": phi " + phi.label() + " needs a multiplication module");
    return std::nullopt;
  } catch (const TableMiss&) {
    run.skip(inst.id + ": phi table miss");
    return std::nullopt;
  }
}

inline bool properly_contained(const ElemSet& k, const GradedModule& m) {
  return k.count() < m.order;
}

// Power chain of K until it stabilizes: K^1, K^2, ..., K^t = K^{t+1}.
inline std::vector<ElemSet> power_chain(const GradedModule& m, const ElemSet& k,
                                        int bound) {
  std::vector<ElemSet> chain{k};
  while (true) {
    ElemSet next = submodule_product(m, chain.back(), k, bound);
    if (next == chain.back()) break;
    chain.push_back(next);
  }
  return chain;
}

inline ElemSet intersect_with_list(const ElemSet& s,
                                   const std::vector<Elem>& xs,
                                   const GradedModule&) {
  ElemSet out;
  for (Elem x : xs)
    if (s.contains(x)) out.insert(x);
  return out;
}

inline std::string kset(const GradedModule& m, const ElemSet& k) {
  return "K=" + m.set_name(k);
}

}  // namespace lawdetail

// ---------------------------------------------------------------------------
// T2.3: implication chains between the phi-predicates.
//   (1) phi-prime => phi-2-absorbing => phi-2-absorbing-primary
//   (2) multiplication + phi-primary => phi-2-absorbing-primary
//   (3)/(4) the 2-absorbing (resp. primary) chain across phi_0, phi_omega,
//       phi_{n+1}, phi_n; the first step needs no multiplication hypothesis
//       and is checked everywhere, the power steps on multiplication modules
//   (5) Grad_M(K) = K makes the two 2-absorbing notions coincide
//   (6) idempotent K is omega- and n-almost-2-absorbing
//   (7) n-almost for every n >= 2 is the same as omega
// Mutated variant: (5) with the Grad_M(K) = K hypothesis dropped.
inline LawResult law_T2_3(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.3", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    ++run.res.instances;
    const bool mult = is_multiplication_module(m, opt.enum_bound);
    Eval ev(m, opt.enum_bound);
    const auto phis = default_phis(m, opt);
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      if (!properly_contained(k, m)) continue;
      const ElemSet grad = graded_radical_submodule(m, k, opt.enum_bound);
      for (const PhiFunction& phi : phis) {
        if (run.done()) break;
        if (!try_phi(run, inst, m, phi, k)) continue;
        const bool p2abs = ev.pred(PredicateKind::TwoAbsorbing, k, phi);
        const bool p2absp = ev.pred(PredicateKind::TwoAbsorbingPrimary, k, phi);
        if (opt.mutated) {
          run.require(p2absp == p2abs, inst, "5-weakened", phi.label(),
                      kset(m, k) + " 2-absorbing-primary vs 2-absorbing " +
                          "without the Grad_M(K)=K hypothesis");
          continue;
        }
        if (ev.pred(PredicateKind::Prime, k, phi)) {
          run.require(p2abs, inst, "1", phi.label(),
                      kset(m, k) + " phi-prime but not phi-2-absorbing");
        } else {
          run.vacuous();
        }
        if (p2abs) {
          run.require(p2absp, inst, "1", phi.label(),
                      kset(m, k) +
                          " phi-2-absorbing but not phi-2-absorbing-primary");
        } else {
          run.vacuous();
        }
        if (mult && ev.pred(PredicateKind::Primary, k, phi)) {
          run.require(p2absp, inst, "2", phi.label(),
                      kset(m, k) +
                          " phi-primary but not phi-2-absorbing-primary");
        } else {
          run.vacuous();
        }
        if (grad == k) {
          run.require(p2absp == p2abs, inst, "5", phi.label(),
                      kset(m, k) + " Grad_M(K)=K but the 2-absorbing notions "
                                   "disagree");
        } else {
          run.vacuous();
        }
      }
      if (opt.mutated || run.done()) continue;
      // Parts (3), (4), (6), (7): the power chains.
      for (const bool primary : {false, true}) {
        const PredicateKind kind = primary ? PredicateKind::TwoAbsorbingPrimary
                                           : PredicateKind::TwoAbsorbing;
        const std::string part = primary ? "4" : "3";
        const bool plain = ev.pred(kind, k, PhiFunction::empty());
        const bool weakly = ev.pred(kind, k, PhiFunction::zero());
        if (plain)
          run.require(weakly, inst, part, "zero",
                      kset(m, k) + " plain holds but the weak variant fails");
        else
          run.vacuous();
        if (!mult) continue;
        const auto chain = power_chain(m, k, opt.enum_bound);
        const int stable = static_cast<int>(chain.size());
        const bool omega = ev.pred(kind, k, PhiFunction::omega());
        if (weakly)
          run.require(omega, inst, part, "omega",
                      kset(m, k) + " weakly holds but the omega variant fails");
        else
          run.vacuous();
        for (int n = 2; n <= stable + 1 && !run.done(); ++n) {
          const bool pn = ev.pred(kind, k, PhiFunction::n_almost(n));
          const bool pn1 = ev.pred(kind, k, PhiFunction::n_almost(n + 1));
          if (omega)
            run.require(pn1, inst, part, "n:" + std::to_string(n + 1),
                        kset(m, k) + " omega holds but n-almost fails");
          else
            run.vacuous();
          if (pn1)
            run.require(pn, inst, part, "n:" + std::to_string(n),
                        kset(m, k) + " (n+1)-almost holds but n-almost fails");
          else
            run.vacuous();
        }
        // (7): all n >= 2 vs omega. Beyond the stable point phi_n repeats.
        bool all_n = true;
        for (int n = 2; n <= stable + 1; ++n)
          all_n = all_n && ev.pred(kind, k, PhiFunction::n_almost(n));
        run.require(all_n == omega, inst, "7",
                    primary ? "primary" : "2-absorbing",
                    kset(m, k) + " forall-n and omega variants disagree");
        // (6): idempotent submodules.
        if (!primary) {
          if (chain.size() == 1) {
            bool ok = omega;
            for (int n = 2; n <= stable + 1; ++n)
              ok = ok && ev.pred(kind, k, PhiFunction::n_almost(n));
            run.require(ok, inst, "6", "",
                        kset(m, k) +
                            " idempotent but an almost variant fails");
          } else {
            run.vacuous();
          }
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------
// T2.4: K is phi-P in M iff K/phi(K) is weakly-P in M/phi(K), for P in
// {prime, primary, 2-absorbing, 2-absorbing-primary}; the primary case also
// carries the proof's identity Grad_M(K)/phi(K) = Grad_{M/phi(K)}(K/phi(K)).
// The empty-marker branch is trivially the same statement, counted vacuous.
// Mutated variant: compares against the plain quotient predicate instead of
// the weak one (drops the nonzero guard).
inline LawResult law_T2_4(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.4", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    ++run.res.instances;
    Eval ev(m, opt.enum_bound);
    const auto phis = default_phis(m, opt);
    std::map<ElemSet, QuotientResult> quotients;
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      if (!properly_contained(k, m)) continue;
      for (const PhiFunction& phi : phis) {
        if (run.done()) break;
        const auto pv = try_phi(run, inst, m, phi, k);
        if (!pv) continue;
        if (!pv->has_value()) {
          run.vacuous();
          continue;
        }
        auto it = quotients.find(**pv);
        if (it == quotients.end())
          it = quotients.emplace(**pv, quotient_module(inst.module, **pv)).first;
        const QuotientResult& q = it->second;
        Eval evq(*q.module, opt.enum_bound);
        const ElemSet kq = map_set(q.projection, k);
        const PhiFunction quotient_phi =
            opt.mutated ? PhiFunction::empty() : PhiFunction::zero();
        for (PredicateKind kind :
             {PredicateKind::Prime, PredicateKind::Primary,
              PredicateKind::TwoAbsorbing, PredicateKind::TwoAbsorbingPrimary}) {
          const bool lhs = ev.pred(kind, k, phi);
          const bool rhs = evq.pred(kind, kq, quotient_phi);
          run.require(lhs == rhs, inst,
                      opt.mutated ? "weakened" : predicate_kind_name(kind),
                      phi.label(),
                      kset(m, k) + " and its image in M/phi(K) disagree");
        }
        if (!opt.mutated) {
          const ElemSet lhs =
              map_set(q.projection, graded_radical_submodule(m, k, opt.enum_bound));
          const ElemSet rhs =
              graded_radical_submodule(*q.module, kq, opt.enum_bound);
          run.require(lhs == rhs, inst, "radical-identity", phi.label(),
                      kset(m, k) +
                          " Grad_M(K)/phi(K) differs from the quotient radical");
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------
// T2.9: transfer along graded epimorphisms. The supply is every canonical
// projection M -> M/K0 (optionally every graded epimorphism onto those
// quotients). The phi-compatibility hypotheses are checked, never assumed:
//   preimage: phi(f^-1(N)) = f^-1(psi(N)), psi-P(N) => phi-P(f^-1(N))
//   image:    K containing Ker f, psi(f(K)) = f(phi(K)),
//             phi-P(K) => psi-P(f(K))
// for P in {2-absorbing, 2-absorbing-primary}.
// Mutated variant: drops the phi-compatibility hypothesis.
inline LawResult law_T2_9(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.9", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    ++run.res.instances;
    Eval ev(m, opt.enum_bound);
    const auto phis_m = default_phis(m, opt);
    for (const ElemSet& k0 : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      QuotientResult q = quotient_module(inst.module, k0);
      std::vector<GradedHom> homs;
      if (opt.all_epimorphisms && m.order <= opt.epi_order_bound)
        homs = enumerate_graded_homs(inst.module, q.module, true);
      else
        homs.push_back(projection_hom(inst.module, q));
      Eval evq(*q.module, opt.enum_bound);
      const auto phis_q = default_phis(*q.module, opt);
      const auto& subs_q = enumerate_graded_submodules(*q.module, opt.enum_bound);
      const auto& subs_m = m.cache.submodules;
      for (const GradedHom& f : homs) {
        if (run.done()) break;
        const ElemSet ker = hom_kernel(f);
        for (const PhiFunction& phi_m : phis_m) {
          if (run.done()) break;
          for (const PhiFunction& phi_q : phis_q) {
            if (run.done()) break;
            const std::string phis_label = phi_m.label() + "/" + phi_q.label();
            for (const ElemSet& n : subs_q) {
              if (run.done()) break;
              if (!properly_contained(n, *q.module)) continue;
              const ElemSet pre = preimage_submodule(f, n);
              const auto pv_m = try_phi(run, inst, m, phi_m, pre);
              const auto pv_q = try_phi(run, inst, *q.module, phi_q, n);
              if (!pv_m || !pv_q) continue;
              bool hyp;
              if (!pv_q->has_value())
                hyp = !pv_m->has_value();
              else
                hyp = pv_m->has_value() &&
                      **pv_m == preimage_submodule(f, **pv_q);
              if (!hyp && !opt.mutated) {
                run.vacuous();
                continue;
              }
              for (PredicateKind kind : {PredicateKind::TwoAbsorbing,
                                         PredicateKind::TwoAbsorbingPrimary}) {
                if (evq.pred(kind, n, phi_q))
                  run.require(ev.pred(kind, pre, phi_m), inst,
                              "preimage-" + predicate_kind_name(kind),
                              phis_label,
                              "N=" + q.module->set_name(n) + " via " +
                                  q.module->name);
                else
                  run.vacuous();
              }
            }
            for (const ElemSet& k : subs_m) {
              if (run.done()) break;
              if (!properly_contained(k, m)) continue;
              if (!ker.subset_of(k)) continue;
              const ElemSet img = image_submodule(f, k);
              const auto pv_m = try_phi(run, inst, m, phi_m, k);
              const auto pv_q = try_phi(run, inst, *q.module, phi_q, img);
              if (!pv_m || !pv_q) continue;
              bool hyp;
              if (!pv_m->has_value())
                hyp = !pv_q->has_value();
              else
                hyp = pv_q->has_value() && **pv_q == image_submodule(f, **pv_m);
              if (!hyp && !opt.mutated) {
                run.vacuous();
                continue;
              }
              for (PredicateKind kind : {PredicateKind::TwoAbsorbing,
                                         PredicateKind::TwoAbsorbingPrimary}) {
                if (ev.pred(kind, k, phi_m))
                  run.require(evq.pred(kind, img, phi_q), inst,
                              "image-" + predicate_kind_name(kind), phis_label,
                              kset(m, k) + " onto " + q.module->name);
                else
                  run.vacuous();
              }
            }
          }
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------
// T2.11: localization. For every multiplicative S in h(R) containing 1:
// K phi-2-absorbing (resp. primary) and S^-1 K proper forces S^-1 K to be
// phi_S-2-absorbing (resp. primary), with phi_S(S^-1 K) = S^-1 phi(K).
// Mutated variant: the localized 2-absorbing conclusion is evaluated without
// its ym disjunct.
inline std::vector<MultiplicativeSet> all_multiplicative_sets(
    const RingPtr& ring) {
  std::vector<ElemSet> seen;
  std::vector<ElemSet> queue;
  const ElemSet start = make_multiplicative_set(ring, {}).members;
  seen.push_back(start);
  queue.push_back(start);
  while (!queue.empty()) {
    ElemSet s = queue.back();
    queue.pop_back();
    for (Elem x : ring->homogeneous_list) {
      if (s.contains(x)) continue;
      std::vector<Elem> gens = s.elements();
      gens.push_back(x);
      ElemSet ext = make_multiplicative_set(ring, gens).members;
      bool known = false;
      for (const ElemSet& t : seen)
        if (t == ext) known = true;
      if (!known) {
        seen.push_back(ext);
        queue.push_back(ext);
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  std::vector<MultiplicativeSet> out;
  out.reserve(seen.size());
  for (ElemSet& s : seen) out.push_back({ring, std::move(s)});
  return out;
}

inline LawResult law_T2_11(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.11", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    ++run.res.instances;
    Eval ev(m, opt.enum_bound);
    const auto phis = default_phis(m, opt);
    for (const MultiplicativeSet& s : all_multiplicative_sets(m.ring)) {
      if (run.done()) break;
      const Localization loc = localize(inst.module, s);
      for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
        if (run.done()) break;
        if (!properly_contained(k, m)) continue;
        if (loc.zero_collapse) {
          run.vacuous();  // S^-1 K = S^-1 M = 0
          continue;
        }
        const ElemSet sk = localize_submodule(loc, k);
        for (const PhiFunction& phi : phis) {
          if (run.done()) break;
          const auto pv = try_phi(run, inst, m, phi, k);
          if (!pv) continue;
          if (!properly_contained(sk, *loc.module)) {
            run.vacuous();
            continue;
          }
          std::map<ElemSet, PhiValue> entry;
          entry[sk] = localize_phi_value(loc, *pv);
          const PhiFunction phi_s =
              PhiFunction::table(std::move(entry), "phiS(" + phi.label() + ")");
          for (PredicateKind kind : {PredicateKind::TwoAbsorbing,
                                     PredicateKind::TwoAbsorbingPrimary}) {
            if (!ev.pred(kind, k, phi)) {
              run.vacuous();
              continue;
            }
            bool concl;
            if (opt.mutated && kind == PredicateKind::TwoAbsorbing) {
              const PhiValue ex = phi_s.apply(*loc.module, sk, opt.enum_bound);
              concl = detail::ternary_implication(
                          *loc.module, sk, ex, sk, ElemSet(),
                          colon_ideal(*loc.module, sk),
                          loc.module->ring->homogeneous_list,
                          loc.module->ring->homogeneous_list,
                          loc.module->homogeneous_list)
                          .holds;
            } else {
              concl =
                  check_phi_predicate(kind, *loc.module, sk, phi_s, opt.enum_bound)
                      .holds;
            }
            run.require(concl, inst,
                        (opt.mutated ? "weakened-" : "") +
                            predicate_kind_name(kind),
                        phi.label(),
                        kset(m, k) + " localized at S=" +
                            m.ring->set_name(s.members));
          }
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------
// Product laws over K = K1 x M2 with phi = phi1 x phi2:
//   unconditional lemma: K phi-P in M forces K1 phi1-P in M1
//   T2.16/T2.17 (1): phi2(M2) = M2 makes K phi-P equivalent to K1 phi1-P
//   T2.16/T2.17 (2): phi2(M2) != M2 makes K phi-P equivalent to plain P(K1)
// with P = 2-absorbing for T2.16 and 2-absorbing-primary for T2.17.
// Mutated variants swap the plain predicate in branch (2) for the other
// family's plain predicate.
inline LawResult law_products(const Corpus& corpus, const LawOptions& opt,
                              bool primary) {
  using namespace lawdetail;
  Run run(primary ? "T2.17" : "T2.16", opt);
  const PredicateKind kind = primary ? PredicateKind::TwoAbsorbingPrimary
                                     : PredicateKind::TwoAbsorbing;
  const PredicateKind swapped = primary ? PredicateKind::TwoAbsorbing
                                        : PredicateKind::TwoAbsorbingPrimary;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    if (!inst.is_product()) continue;
    const GradedModule& m = *inst.module;
    const GradedModule& m1 = *inst.factor1;
    const GradedModule& m2 = *inst.factor2;
    ++run.res.instances;
    Eval ev(m, opt.enum_bound);
    Eval ev1(m1, opt.enum_bound);
    const auto phis1 = default_phis(m1, opt);
    const ElemSet full2 = ElemSet::full(m2.order);
    auto pair_bits = [&](const ElemSet& a, const ElemSet& b) {
      ElemSet out;
      for (Elem y : b.elements())
        for (Elem x : a.elements()) out.insert(x + m1.order * y);
      return out;
    };
    for (const ElemSet& k1 : enumerate_graded_submodules(m1, opt.enum_bound)) {
      if (run.done()) break;
      if (!properly_contained(k1, m1)) continue;
      const ElemSet k = pair_bits(k1, full2);
      for (const PhiFunction& phi1 : phis1) {
        if (run.done()) break;
        const auto pv1 = try_phi(run, inst, m1, phi1, k1);
        if (!pv1) continue;
        struct Phi2Case {
          std::string label;
          PhiValue value_at_m2;
        };
        const std::vector<Phi2Case> cases = {
            {"id", full2},
            {"zero", ElemSet::single(m2.zero)},
            {"empty", std::nullopt}};
        for (const Phi2Case& c2 : cases) {
          if (run.done()) break;
          PhiValue phi_k;
          if (pv1->has_value() && c2.value_at_m2.has_value())
            phi_k = pair_bits(**pv1, *c2.value_at_m2);
          std::map<ElemSet, PhiValue> entry;
          entry[k] = phi_k;
          const PhiFunction phi = PhiFunction::table(
              std::move(entry), phi1.label() + "x" + c2.label);
          const std::string phis_label = phi1.label() + " x " + c2.label;
          const bool lhs =
              check_phi_predicate(kind, m, k, phi, opt.enum_bound).holds;
          if (lhs)
            run.require(ev1.pred(kind, k1, phi1), inst, "lemma", phis_label,
                        "K1=" + m1.set_name(k1) +
                            " loses the factor predicate");
          else
            run.vacuous();
          const bool identity_case =
              c2.value_at_m2.has_value() && *c2.value_at_m2 == full2;
          if (identity_case) {
            run.require(lhs == ev1.pred(kind, k1, phi1), inst, "1", phis_label,
                        "K1=" + m1.set_name(k1) +
                            " disagrees with K1 x M2 when phi2(M2)=M2");
          } else {
            const PredicateKind rhs_kind = opt.mutated ? swapped : kind;
            const bool rhs = ev1.pred(rhs_kind, k1, PhiFunction::empty());
            run.require(lhs == rhs, inst, opt.mutated ? "2-weakened" : "2",
                        phis_label,
                        "K1=" + m1.set_name(k1) +
                            " disagrees with K1 x M2 when phi2(M2)!=M2");
          }
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

inline LawResult law_T2_16(const Corpus& corpus, const LawOptions& opt) {
  return law_products(corpus, opt, false);
}
inline LawResult law_T2_17(const Corpus& corpus, const LawOptions& opt) {
  return law_products(corpus, opt, true);
}

// ---------------------------------------------------------------------------
// Witness theorems T2.20 / T2.24 / T2.24p / T2.25: containment conclusions
// forced at every witness tuple of a g-local predicate.
namespace lawdetail {

// Pairwise products a*b for a in A (ring elements), b module elements of B.
inline bool act_set_inside(const GradedModule& m, const std::vector<Elem>& as,
                           const std::vector<Elem>& bs, const PhiValue& target) {
  for (Elem a : as)
    for (Elem b : bs) {
      const Elem p = m.act(a, b);
      if (!target.has_value() || !target->contains(p)) return false;
    }
  return true;
}

}  // namespace lawdetail

inline LawResult law_T2_20(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.20", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    const GradedRing& ring = *m.ring;
    ++run.res.instances;
    const auto phis = default_phis(m, opt);
    const std::vector<Elem> re =
        ring.component[ring.group.identity()].elements();
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      const ElemSet colon = colon_ideal(m, k);
      const ElemSet grad_colon = ideal_radical(ring, colon);
      std::vector<Elem> colon_e;
      for (Elem r : re)
        if (colon.contains(r)) colon_e.push_back(r);
      for (Elem g = 0; g < ring.group.order(); ++g) {
        if (run.done()) break;
        const ElemSet mg = m.component[g];
        if ((k & mg) == mg) continue;
        const std::vector<Elem> kg = (k & mg).elements();
        for (const PhiFunction& phi : phis) {
          if (run.done()) break;
          const auto pv = try_phi(run, inst, m, phi, k);
          if (!pv) continue;
          if (!is_g_phi_primary(m, k, g, phi, opt.enum_bound).holds) {
            run.vacuous();
            continue;
          }
          bool witnessed = false;
          for (Elem x : re) {
            if (run.done()) break;
            if (grad_colon.contains(x)) continue;
            for (Elem mm : mg.elements()) {
              if (!opt.mutated && k.contains(mm)) continue;
              const Elem xm = m.act(x, mm);
              if (!pv->has_value() || !(*pv)->contains(xm)) continue;
              witnessed = true;
              const std::string at = "x=" + ring.elem_name(x) +
                                     " m=" + m.elem_name(mm) + " " + kset(m, k);
              run.require(act_set_inside(m, {x}, kg, *pv), inst, "1",
                          phi.label(), at + ": xK_g escapes phi(K)");
              run.require(act_set_inside(m, colon_e, {mm}, *pv), inst, "2",
                          phi.label(), at + ": (K:M)_e m escapes phi(K)");
              run.require(act_set_inside(m, colon_e, kg, *pv), inst, "3",
                          phi.label(), at + ": (K:M)_e K_g escapes phi(K)");
              if (run.done()) break;
            }
          }
          if (!witnessed) run.vacuous();
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

inline LawResult law_witness_2abs(const Corpus& corpus, const LawOptions& opt,
                                  bool primary) {
  using namespace lawdetail;
  Run run(primary ? "T2.24p" : "T2.24", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    const GradedRing& ring = *m.ring;
    ++run.res.instances;
    const auto phis = default_phis(m, opt);
    const std::vector<Elem> re =
        ring.component[ring.group.identity()].elements();
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      const ElemSet colon = colon_ideal(m, k);
      std::vector<Elem> colon_e;
      for (Elem r : re)
        if (colon.contains(r)) colon_e.push_back(r);
      const ElemSet exclusion_set =
          primary ? graded_radical_submodule(m, k, opt.enum_bound) : k;
      for (Elem g = 0; g < ring.group.order(); ++g) {
        if (run.done()) break;
        const ElemSet mg = m.component[g];
        if ((k & mg) == mg) continue;
        const std::vector<Elem> kg = (k & mg).elements();
        for (const PhiFunction& phi : phis) {
          if (run.done()) break;
          const auto pv = try_phi(run, inst, m, phi, k);
          if (!pv) continue;
          const PredicateKind kind = primary
                                         ? PredicateKind::TwoAbsorbingPrimary
                                         : PredicateKind::TwoAbsorbing;
          if (!check_g_phi_predicate(kind, m, k, g, phi, opt.enum_bound)
                   .holds) {
            run.vacuous();
            continue;
          }
          bool witnessed = false;
          for (Elem x : re) {
            if (run.done()) break;
            for (Elem y : re) {
              if (run.done()) break;
              const Elem xy = ring.mul(x, y);
              if (colon.contains(xy)) continue;
              for (Elem mm : mg.elements()) {
                const Elem xm = m.act(x, mm);
                const Elem ym = m.act(y, mm);
                if (!opt.mutated && (exclusion_set.contains(xm) ||
                                     exclusion_set.contains(ym)))
                  continue;
                const Elem xym = m.act(xy, mm);
                if (!pv->has_value() || !(*pv)->contains(xym)) continue;
                witnessed = true;
                const std::string at = "x=" + ring.elem_name(x) +
                                       " y=" + ring.elem_name(y) +
                                       " m=" + m.elem_name(mm) + " " +
                                       kset(m, k);
                run.require(act_set_inside(m, {xy}, kg, *pv), inst, "1",
                            phi.label(), at + ": xyK_g escapes phi(K)");
                bool part2 = true, part3 = true;
                for (Elem a : colon_e) {
                  if (!pv->has_value() ||
                      !(*pv)->contains(m.act(ring.mul(x, a), mm)))
                    part2 = false;
                  if (!pv->has_value() ||
                      !(*pv)->contains(m.act(ring.mul(y, a), mm)))
                    part3 = false;
                }
                run.require(part2, inst, "2", phi.label(),
                            at + ": x(K:M)_e m escapes phi(K)");
                run.require(part3, inst, "3", phi.label(),
                            at + ": y(K:M)_e m escapes phi(K)");
                bool part4 = true;
                for (Elem a : colon_e)
                  for (Elem b : colon_e)
                    if (!pv->has_value() ||
                        !(*pv)->contains(m.act(ring.mul(a, b), mm)))
                      part4 = false;
                run.require(part4, inst, "4", phi.label(),
                            at + ": (K:M)_e^2 m escapes phi(K)");
                if (run.done()) break;
              }
            }
          }
          if (!witnessed) run.vacuous();
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

inline LawResult law_T2_24(const Corpus& corpus, const LawOptions& opt) {
  return law_witness_2abs(corpus, opt, false);
}
inline LawResult law_T2_24p(const Corpus& corpus, const LawOptions& opt) {
  return law_witness_2abs(corpus, opt, true);
}

// T2.25: a g-phi-2-absorbing-primary K that is not g-2-absorbing-primary has
// (K :_{R_e} M)^2 K_g inside phi(K).
// Mutated variant: drops the "not g-2-absorbing-primary" hypothesis.
inline LawResult law_T2_25(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.25", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    const GradedRing& ring = *m.ring;
    ++run.res.instances;
    const auto phis = default_phis(m, opt);
    const std::vector<Elem> re =
        ring.component[ring.group.identity()].elements();
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      const ElemSet colon = colon_ideal(m, k);
      std::vector<Elem> colon_e;
      for (Elem r : re)
        if (colon.contains(r)) colon_e.push_back(r);
      std::vector<Elem> colon_e2;
      {
        ElemSet seen;
        for (Elem a : colon_e)
          for (Elem b : colon_e) seen.insert(ring.mul(a, b));
        colon_e2 = seen.elements();
      }
      for (Elem g = 0; g < ring.group.order(); ++g) {
        if (run.done()) break;
        const ElemSet mg = m.component[g];
        if ((k & mg) == mg) continue;
        const std::vector<Elem> kg = (k & mg).elements();
        for (const PhiFunction& phi : phis) {
          if (run.done()) break;
          const auto pv = try_phi(run, inst, m, phi, k);
          if (!pv) continue;
          if (!is_g_phi_2_absorbing_primary(m, k, g, phi, opt.enum_bound)
                   .holds) {
            run.vacuous();
            continue;
          }
          if (!opt.mutated &&
              is_g_phi_2_absorbing_primary(m, k, g, PhiFunction::empty(),
                                           opt.enum_bound)
                  .holds) {
            run.vacuous();
            continue;
          }
          run.require(act_set_inside(m, colon_e2, kg, *pv), inst,
                      opt.mutated ? "weakened" : "containment", phi.label(),
                      kset(m, k) + " degree " + std::to_string(g) +
                          ": (K:M)_e^2 K_g escapes phi(K)");
        }
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------
// P2.34: phi(K) 2-absorbing-primary and K phi-2-absorbing-primary force K
// 2-absorbing-primary. Mutated variant drops the phi(K) hypothesis.
inline LawResult law_P2_34(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("P2.34", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    ++run.res.instances;
    Eval ev(m, opt.enum_bound);
    const auto phis = default_phis(m, opt);
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      if (!properly_contained(k, m)) continue;
      for (const PhiFunction& phi : phis) {
        if (run.done()) break;
        const auto pv = try_phi(run, inst, m, phi, k);
        if (!pv) continue;
        if (!ev.pred(PredicateKind::TwoAbsorbingPrimary, k, phi)) {
          run.vacuous();
          continue;
        }
        if (!opt.mutated) {
          if (!pv->has_value() || !properly_contained(**pv, m) ||
              !ev.pred(PredicateKind::TwoAbsorbingPrimary, **pv,
                       PhiFunction::empty())) {
            run.vacuous();
            continue;
          }
        }
        run.require(
            ev.pred(PredicateKind::TwoAbsorbingPrimary, k, PhiFunction::empty()),
            inst, opt.mutated ? "weakened" : "implication", phi.label(),
            kset(m, k) + " phi-2-absorbing-primary but not plain");
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------
// T2.39: phi(Grad_M(K)) inside phi(K) and Grad_M(K) phi-prime force K
// phi-2-absorbing-primary. Instances with Grad_M(K) = M are skipped and
// logged. Mutated variant drops the phi-prime hypothesis.
inline LawResult law_T2_39(const Corpus& corpus, const LawOptions& opt) {
  using namespace lawdetail;
  Run run("T2.39", opt);
  const auto t0 = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus.instances) {
    if (run.done()) break;
    const GradedModule& m = *inst.module;
    ++run.res.instances;
    Eval ev(m, opt.enum_bound);
    const auto phis = default_phis(m, opt);
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (run.done()) break;
      if (!properly_contained(k, m)) continue;
      const ElemSet grad = graded_radical_submodule(m, k, opt.enum_bound);
      if (!properly_contained(grad, m)) {
        run.skip(inst.id + ": Grad_M(K) = M at " + kset(m, k));
        continue;
      }
      for (const PhiFunction& phi : phis) {
        if (run.done()) break;
        const auto pv_k = try_phi(run, inst, m, phi, k);
        const auto pv_g = try_phi(run, inst, m, phi, grad);
        if (!pv_k || !pv_g) continue;
        if (!phi_value_leq(*pv_g, *pv_k)) {
          run.vacuous();
          continue;
        }
        if (!opt.mutated && !ev.pred(PredicateKind::Prime, grad, phi)) {
          run.vacuous();
          continue;
        }
        run.require(ev.pred(PredicateKind::TwoAbsorbingPrimary, k, phi), inst,
                    opt.mutated ? "weakened" : "implication", phi.label(),
                    kset(m, k) + " not phi-2-absorbing-primary though " +
                        "Grad_M(K) qualifies");
      }
    }
  }
  run.res.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return run.res;
}

// ---------------------------------------------------------------------------

using LawFn = LawResult (*)(const Corpus&, const LawOptions&);

inline const std::vector<std::pair<std::string, LawFn>>& law_registry() {
  static const std::vector<std::pair<std::string, LawFn>> laws = {
      {"T2.3", law_T2_3},   {"T2.4", law_T2_4},   {"T2.9", law_T2_9},
      {"T2.11", law_T2_11}, {"T2.16", law_T2_16}, {"T2.17", law_T2_17},
      {"T2.20", law_T2_20}, {"T2.24", law_T2_24}, {"T2.24p", law_T2_24p},
      {"T2.25", law_T2_25}, {"P2.34", law_P2_34}, {"T2.39", law_T2_39}};
  return laws;
}

inline LawResult run_law(const std::string& id, const Corpus& corpus,
                         const LawOptions& opt) {
  for (const auto& [name, fn] : law_registry())
    if (name == id) return fn(corpus, opt);
  throw Error("unknown law id: " + id);
}

inline std::vector<LawResult> run_all_laws(const Corpus& corpus,
                                           const LawOptions& opt) {
  std::vector<LawResult> out;
  for (const auto& [name, fn] : law_registry()) out.push_back(fn(corpus, opt));
  return out;
}

// ---------------------------------------------------------------------------
// Separation search: smallest corpus instance (by order, then id) with a
// proper graded submodule satisfying predicate A but not B.

struct PredicateSpec {
  std::string name;  // as parsed
  PredicateKind kind = PredicateKind::Prime;
  PhiFunction phi = PhiFunction::empty();
};

inline PredicateSpec parse_predicate_spec(const std::string& text) {
  PredicateSpec spec;
  spec.name = text;
  std::string body = text;
  std::string phi_part;
  if (auto at = body.find('@'); at != std::string::npos) {
    phi_part = body.substr(at + 1);
    body = body.substr(0, at);
  }
  auto strip = [&](const std::string& prefix) {
    if (body.rfind(prefix, 0) == 0) {
      body = body.substr(prefix.size());
      return true;
    }
    return false;
  };
  bool weakly = false, phi_form = false;
  if (strip("weakly-")) weakly = true;
  else if (strip("phi-")) phi_form = true;
  if (body == "prime") spec.kind = PredicateKind::Prime;
  else if (body == "primary") spec.kind = PredicateKind::Primary;
  else if (body == "2-absorbing") spec.kind = PredicateKind::TwoAbsorbing;
  else if (body == "2-absorbing-primary")
    spec.kind = PredicateKind::TwoAbsorbingPrimary;
  else
    throw Error("unknown predicate: " + text);
  if (weakly) {
    spec.phi = PhiFunction::zero();
  } else if (phi_form) {
    if (phi_part.empty())
      throw Error("phi predicate needs @<phi>: " + text);
    if (phi_part == "empty") spec.phi = PhiFunction::empty();
    else if (phi_part == "zero") spec.phi = PhiFunction::zero();
    else if (phi_part == "omega") spec.phi = PhiFunction::omega();
    else if (phi_part.rfind("n:", 0) == 0)
      spec.phi = PhiFunction::n_almost(std::stoi(phi_part.substr(2)));
    else
      throw Error("unknown phi spec: " + phi_part);
  } else {
    spec.phi = PhiFunction::empty();
  }
  return spec;
}

struct SearchResult {
  bool found = false;
  std::string instance_id;
  ModulePtr module;  // the found instance, for replay
  ElemSet submodule;
  std::string submodule_name;
  long examined = 0;
};

inline SearchResult search_separating_example(const PredicateSpec& a,
                                              const PredicateSpec& b,
                                              Corpus corpus,
                                              const LawOptions& opt = {}) {
  sort_for_search(corpus);
  SearchResult res;
  for (const Instance& inst : corpus.instances) {
    const GradedModule& m = *inst.module;
    for (const ElemSet& k : enumerate_graded_submodules(m, opt.enum_bound)) {
      if (k.count() >= m.order) continue;
      ++res.examined;
      bool holds_a, holds_b;
      try {
        holds_a = check_phi_predicate(a.kind, m, k, a.phi, opt.enum_bound).holds;
        holds_b = check_phi_predicate(b.kind, m, k, b.phi, opt.enum_bound).holds;
      } catch (const NotMultiplicationModule&) {
        continue;
      }
      if (holds_a && !holds_b) {
        res.found = true;
        res.instance_id = inst.id;
        res.module = inst.module;
        res.submodule = k;
        res.submodule_name = m.set_name(k);
        return res;
      }
    }
  }
  return res;
}

}  // namespace graded
