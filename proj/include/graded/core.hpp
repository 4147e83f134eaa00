#pragma once

#include <algorithm>
#include <span>
#include <unordered_set>
#include <vector>

#include "graded/module.hpp"

// Expensive postcondition checks (re-validating outputs of colon/radical/
// product calls). Test targets define GRADED_CHECKS=1.
#ifndef GRADED_CHECKS
#define GRADED_CHECKS 0
#endif

namespace graded {

inline constexpr int kDefaultEnumBound = 64;

namespace detail {

template <class S>
ElemSet additive_closure_in(const S& s, ElemSet set) {
  set.insert(s.zero);
  std::vector<Elem> work = set.elements();
  while (!work.empty()) {
    const Elem a = work.back();
    work.pop_back();
    for (Elem b : set.elements()) {
      const Elem c = s.add(a, b);
      if (!set.contains(c)) {
        set.insert(c);
        work.push_back(c);
      }
    }
  }
  return set;
}

// H + <x> for a subgroup H: the subgroup generated by H and x.
template <class S>
ElemSet cyclic_extend(const S& s, const ElemSet& h, Elem x) {
  ElemSet out = h;
  const auto base = h.elements();
  Elem p = x;
  while (p != s.zero) {
    for (Elem a : base) out.insert(s.add(a, p));
    p = s.add(p, x);
  }
  return out;
}

// All additive subgroups of the carrier, found by extending subgroups one
// cyclic generator at a time.
template <class S>
std::vector<ElemSet> additive_subgroups(const S& s) {
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<ElemSet> queue;
  const ElemSet zero_only = ElemSet::single(s.zero);
  seen.insert(zero_only);
  queue.push_back(zero_only);
  while (!queue.empty()) {
    ElemSet h = queue.back();
    queue.pop_back();
    for (Elem x = 0; x < s.order; ++x) {
      if (h.contains(x)) continue;
      ElemSet h2 = cyclic_extend(s, h, x);
      if (seen.insert(h2).second) queue.push_back(h2);
    }
  }
  std::vector<ElemSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline const ElemSet& homogeneous_elements(const GradedRing& r) {
  return r.homogeneous_set;
}
inline const ElemSet& homogeneous_elements(const GradedModule& m) {
  return m.homogeneous_set;
}

// Smallest graded submodule containing the generators: close their
// homogeneous components under addition and the full ring action (negation
// comes from acting by -1).
inline ElemSet graded_closure(const GradedModule& m,
                              std::span<const Elem> generators) {
  ElemSet set;
  set.insert(m.zero);
  std::vector<Elem> work;
  for (Elem x : generators)
    for (int g = 0; g < m.ring->group.order(); ++g) {
      const Elem c = m.component_of(x, g);
      if (!set.contains(c)) {
        set.insert(c);
        work.push_back(c);
      }
    }
  while (!work.empty()) {
    const Elem a = work.back();
    work.pop_back();
    for (Elem b : set.elements()) {
      const Elem c = m.add(a, b);
      if (!set.contains(c)) {
        set.insert(c);
        work.push_back(c);
      }
    }
    for (Elem r = 0; r < m.ring->order; ++r) {
      const Elem c = m.act(r, a);
      if (!set.contains(c)) {
        set.insert(c);
        work.push_back(c);
      }
    }
  }
#if GRADED_CHECKS
  if (auto rep = validate_submodule(m, set); !rep.ok) rep.raise();
#endif
  return set;
}

// Every graded submodule, each exactly once, sorted by member bit set:
// additive subgroups via cyclic-extension search, filtered by action closure
// and gradedness. Memoized per module.
inline const std::vector<ElemSet>& enumerate_graded_submodules(
    const GradedModule& m, int bound = kDefaultEnumBound) {
  if (m.order > bound) throw BoundExceeded(m.order, bound);
  std::lock_guard<std::mutex> lock(m.cache.mu);
  if (m.cache.have_submodules) return m.cache.submodules;
  std::vector<ElemSet> result;
  for (const ElemSet& h : detail::additive_subgroups(m)) {
    bool ok = true;
    for (Elem a : h.elements()) {
      for (Elem r = 0; ok && r < m.ring->order; ++r)
        if (!h.contains(m.act(r, a))) ok = false;
      for (int g = 0; ok && g < m.ring->group.order(); ++g)
        if (!h.contains(m.component_of(a, g))) ok = false;
      if (!ok) break;
    }
    if (ok) result.push_back(h);
  }
  m.cache.submodules = std::move(result);
  m.cache.have_submodules = true;
  return m.cache.submodules;
}

// (K :_R M) = { r : r M is contained in K }; always a graded ideal.
inline ElemSet colon_ideal(const GradedModule& m, const ElemSet& k) {
  ElemSet out;
  for (Elem r = 0; r < m.ring->order; ++r) {
    bool in = true;
    for (Elem x = 0; x < m.order; ++x)
      if (!k.contains(m.act(r, x))) {
        in = false;
        break;
      }
    if (in) out.insert(r);
  }
#if GRADED_CHECKS
  if (auto rep = validate_ideal(*m.ring, out); !rep.ok) rep.raise();
#endif
  return out;
}

// Graded radical of an ideal: r belongs when every homogeneous component of
// r has some power (exponent up to |R|) inside I. Grad(R) = R by convention.
inline ElemSet ideal_radical(const GradedRing& r, const ElemSet& ideal) {
  if (ideal.count() == r.order) return ideal;
  ElemSet out;
  for (Elem x = 0; x < r.order; ++x) {
    bool in = true;
    for (int g = 0; g < r.group.order() && in; ++g) {
      const Elem c = r.component_of(x, g);
      Elem p = c;
      bool found = false;
      for (int n = 1; n <= r.order; ++n) {
        if (ideal.contains(p)) {
          found = true;
          break;
        }
        p = r.mul(p, c);
      }
      in = found;
    }
    if (in) out.insert(x);
  }
#if GRADED_CHECKS
  if (!ideal.subset_of(out))
    throw Error("radical postcondition: Grad(I) must contain I");
  if (auto rep = validate_ideal(r, out); !rep.ok) rep.raise();
#endif
  return out;
}

// Proper graded K with: r m in K forces m in K or r in (K:M), over
// homogeneous r, m.
inline bool graded_prime_test(const GradedModule& m, const ElemSet& k) {
  const ElemSet colon = colon_ideal(m, k);
  for (Elem r : m.ring->homogeneous_list) {
    if (colon.contains(r)) continue;
    for (Elem x : m.homogeneous_list)
      if (k.contains(m.act(r, x)) && !k.contains(x)) return false;
  }
  return true;
}

inline const std::vector<ElemSet>& graded_prime_submodules(
    const GradedModule& m, int bound = kDefaultEnumBound) {
  enumerate_graded_submodules(m, bound);
  std::lock_guard<std::mutex> lock(m.cache.mu);
  if (m.cache.have_primes) return m.cache.primes;
  std::vector<ElemSet> primes;
  for (const ElemSet& k : m.cache.submodules)
    if (k.count() < m.order && graded_prime_test(m, k)) primes.push_back(k);
  m.cache.primes = std::move(primes);
  m.cache.have_primes = true;
  return m.cache.primes;
}

// Grad_M(K): intersection of the graded prime submodules containing K, the
// whole module when none exists.
inline ElemSet graded_radical_submodule(const GradedModule& m, const ElemSet& k,
                                        int bound = kDefaultEnumBound) {
  graded_prime_submodules(m, bound);
  std::lock_guard<std::mutex> lock(m.cache.mu);
  auto it = m.cache.radical.find(k);
  if (it != m.cache.radical.end()) return it->second;
  ElemSet out = m.carrier_set();
  for (const ElemSet& p : m.cache.primes)
    if (k.subset_of(p)) out &= p;
  m.cache.radical.emplace(k, out);
  return out;
}

struct MultiplicationCertificate {
  bool is_multiplication = false;
  ElemSet first_failure;  // first graded N (canonical order) with N != (N:M)M
};

// Additive closure of { a m : a in I, m in M }, i.e. the submodule I M.
inline ElemSet ideal_times_module(const GradedModule& m, const ElemSet& ideal) {
  ElemSet seed;
  for (Elem a : ideal.elements())
    for (Elem x = 0; x < m.order; ++x) seed.insert(m.act(a, x));
  return detail::additive_closure_in(m, seed);
}

inline ElemSet ideal_product(const GradedRing& r, const ElemSet& i,
                             const ElemSet& j) {
  ElemSet seed;
  for (Elem a : i.elements())
    for (Elem b : j.elements()) seed.insert(r.mul(a, b));
  return detail::additive_closure_in(r, seed);
}

inline MultiplicationCertificate multiplication_certificate(
    const GradedModule& m, int bound = kDefaultEnumBound) {
  const auto& subs = enumerate_graded_submodules(m, bound);
  std::lock_guard<std::mutex> lock(m.cache.mu);
  if (!m.cache.have_mult) {
    m.cache.is_mult = true;
    for (const ElemSet& n : subs) {
      if (ideal_times_module(m, colon_ideal(m, n)) != n) {
        m.cache.is_mult = false;
        m.cache.mult_failure = n;
        break;
      }
    }
    m.cache.have_mult = true;
  }
  return {m.cache.is_mult, m.cache.mult_failure};
}

inline bool is_multiplication_module(const GradedModule& m,
                                     int bound = kDefaultEnumBound) {
  return multiplication_certificate(m, bound).is_multiplication;
}

// Product N K = (N:M)(K:M)M, defined only on multiplication modules.
inline ElemSet submodule_product(const GradedModule& m, const ElemSet& n,
                                 const ElemSet& k,
                                 int bound = kDefaultEnumBound) {
  if (!is_multiplication_module(m, bound))
    throw NotMultiplicationModule(m.name);
  const ElemSet i = colon_ideal(m, n);
  const ElemSet j = colon_ideal(m, k);
  const ElemSet nk = ideal_times_module(m, ideal_product(*m.ring, i, j));
  if (!nk.subset_of(n & k))
    throw Error("submodule product postcondition: NK inside N and K");
  return nk;
}

inline ElemSet submodule_power(const GradedModule& m, const ElemSet& k, int n,
                               int bound = kDefaultEnumBound) {
  if (n < 1) throw Error("submodule power needs n >= 1");
  ElemSet p = k;
  for (int i = 2; i <= n; ++i) p = submodule_product(m, p, k, bound);
  return p;
}

}  // namespace graded
