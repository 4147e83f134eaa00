#pragma once

#include <string>
#include <vector>

#include "graded/bitset.hpp"
#include "graded/errors.hpp"

namespace graded {

// Finite group given by its Cayley table. Grading groups are small, so
// every axiom is checked exhaustively at construction.
class FiniteGroup {
public:
  FiniteGroup() = default;

  FiniteGroup(std::string name, int order, std::vector<Elem> table,
              Elem identity)
      : name_(std::move(name)),
        order_(order),
        table_(std::move(table)),
        identity_(identity) {
    validate();
    inverse_.assign(order_, -1);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        if (op(a, b) == identity_ && op(b, a) == identity_) inverse_[a] = b;
  }

  static FiniteGroup trivial() {
    return FiniteGroup("trivial", 1, {0}, 0);
  }

  static FiniteGroup cyclic(int n) {
    if (n < 1) throw Error("cyclic group order must be positive");
    std::vector<Elem> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return FiniteGroup("cyclic" + std::to_string(n), n, std::move(t), 0);
  }

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem op(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inverse(Elem a) const { return inverse_[a]; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ &&
           a.table_ == b.table_;
  }
  friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) {
    return !(a == b);
  }

private:
  void validate() const {
    if (order_ < 1 || order_ > ElemSet::capacity)
      throw ValidationError("malformed", "group order out of range",
                            std::to_string(order_));
    if (table_.size() != static_cast<std::size_t>(order_) * order_)
      throw ValidationError("malformed", "group table size",
                            std::to_string(table_.size()));
    for (Elem v : table_)
      if (v < 0 || v >= order_)
        throw ValidationError("malformed", "group table entry out of range",
                              std::to_string(v));
    if (identity_ < 0 || identity_ >= order_)
      throw ValidationError("malformed", "group identity out of range",
                            std::to_string(identity_));
    for (Elem a = 0; a < order_; ++a)
      if (op(identity_, a) != a || op(a, identity_) != a)
        throw ValidationError("axiom", "group identity law",
                              "a=" + std::to_string(a));
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        for (Elem c = 0; c < order_; ++c)
          if (op(op(a, b), c) != op(a, op(b, c)))
            throw ValidationError(
                "axiom", "group associativity",
                "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    " c=" + std::to_string(c));
    for (Elem a = 0; a < order_; ++a) {
      bool has_inverse = false;
      for (Elem b = 0; b < order_; ++b)
        if (op(a, b) == identity_ && op(b, a) == identity_) has_inverse = true;
      if (!has_inverse)
        throw ValidationError("axiom", "group inverse existence",
                              "a=" + std::to_string(a));
    }
  }

  std::string name_;
  int order_ = 0;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
};

}  // namespace graded
