#pragma once

#include <map>
#include <optional>
#include <string>

#include "graded/core.hpp"

namespace graded {

// A phi value is a graded submodule or the empty marker. The marker is
// distinct from the zero submodule: guards of the form x in K - phi(K)
// subtract nothing when phi(K) is empty.
using PhiValue = std::optional<ElemSet>;

// Reducer on graded submodules: empty, zero, K^n (n-almost), the
// intersection of all powers (omega), or an explicit table. The power kinds
// need the submodule product, so they only apply on multiplication modules.
class PhiFunction {
public:
  enum class Kind { Empty, Zero, NAlmost, Omega, Table };

  static PhiFunction empty() { return PhiFunction(Kind::Empty, 0); }
  static PhiFunction zero() { return PhiFunction(Kind::Zero, 0); }
  static PhiFunction n_almost(int n) {
    if (n < 1) throw Error("phi_n needs n >= 1");
    return PhiFunction(Kind::NAlmost, n);
  }
  static PhiFunction omega() { return PhiFunction(Kind::Omega, 0); }
  static PhiFunction table(std::map<ElemSet, PhiValue> entries,
                           std::string label = "table") {
    PhiFunction p(Kind::Table, 0);
    p.table_ = std::move(entries);
    p.label_ = std::move(label);
    return p;
  }

  Kind kind() const { return kind_; }
  int power() const { return power_; }

  std::string label() const {
    switch (kind_) {
      case Kind::Empty: return "empty";
      case Kind::Zero: return "zero";
      case Kind::NAlmost: return "n:" + std::to_string(power_);
      case Kind::Omega: return "omega";
      case Kind::Table: return label_;
    }
    return "?";
  }

  // phi(K), normalized so that the result is contained in K (or empty).
  PhiValue apply(const GradedModule& m, const ElemSet& k,
                 int bound = kDefaultEnumBound) const {
    switch (kind_) {
      case Kind::Empty:
        return std::nullopt;
      case Kind::Zero:
        return ElemSet::single(m.zero);
      case Kind::NAlmost:
        // n = 1 needs no actual product, but the power kinds are only
        // defined on multiplication modules.
        if (!is_multiplication_module(m, bound))
          throw NotMultiplicationModule(m.name);
        return submodule_power(m, k, power_, bound);
      case Kind::Omega: {
        // Powers of K form a descending chain in a finite module; the
        // intersection is the stable value.
        ElemSet p = k;
        while (true) {
          ElemSet next = submodule_product(m, p, k, bound);
          if (next == p) return p;
          p = next;
        }
      }
      case Kind::Table: {
        auto it = table_.find(k);
        if (it == table_.end()) throw TableMiss(m.set_name(k));
        if (!it->second.has_value()) return std::nullopt;
        return *it->second & k;
      }
    }
    throw Error("unreachable phi kind");
  }

private:
  PhiFunction(Kind kind, int power) : kind_(kind), power_(power) {}

  Kind kind_;
  int power_;
  std::map<ElemSet, PhiValue> table_;
  std::string label_;
};

inline PhiValue apply_phi(const PhiFunction& phi, const GradedModule& m,
                          const ElemSet& k, int bound = kDefaultEnumBound) {
  return phi.apply(m, k, bound);
}

// Containment of phi values with the empty marker below everything.
inline bool phi_value_leq(const PhiValue& a, const PhiValue& b) {
  if (!a.has_value()) return true;
  if (!b.has_value()) return false;
  return a->subset_of(*b);
}

struct PhiLeqResult {
  bool holds = true;
  std::optional<ElemSet> witness;  // first K (canonical order) violating
};

// phi <= psi: phi(K) contained in psi(K) for every graded submodule K.
inline PhiLeqResult phi_leq(const PhiFunction& phi, const PhiFunction& psi,
                            const GradedModule& m,
                            int bound = kDefaultEnumBound) {
  for (const ElemSet& k : enumerate_graded_submodules(m, bound))
    if (!phi_value_leq(phi.apply(m, k, bound), psi.apply(m, k, bound)))
      return {false, k};
  return {true, std::nullopt};
}

}  // namespace graded
