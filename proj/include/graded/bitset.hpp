#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace graded {

// Element of a finite carrier, identified by its index in the canonical
// ordering of the structure it belongs to.
using Elem = int;

// Fixed-capacity bit set over carrier indices. Capacity 256 covers every
// structure this library handles (construction rejects larger carriers).
//
// Sets compare as 256-bit little-endian integers; this ordering is the
// canonical order used everywhere a list of submodules must be
// deterministic.
class ElemSet {
public:
  static constexpr int capacity = 256;

  ElemSet() = default;

  static ElemSet single(Elem e) {
    ElemSet s;
    s.insert(e);
    return s;
  }

  static ElemSet full(int n) {
    ElemSet s;
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  bool contains(Elem e) const {
    return (words_[word(e)] >> bit(e)) & 1u;
  }

  void insert(Elem e) { words_[word(e)] |= std::uint64_t{1} << bit(e); }
  void erase(Elem e) { words_[word(e)] &= ~(std::uint64_t{1} << bit(e)); }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int n = 0;
    for (auto w : words_) n += __builtin_popcountll(w);
    return n;
  }

  bool subset_of(const ElemSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.words_ == b.words_;
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) {
    return !(a == b);
  }

  // Numeric order on the underlying 256-bit value.
  friend bool operator<(const ElemSet& a, const ElemSet& b) {
    for (int i = kWords - 1; i >= 0; --i)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(i * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 1099511628211ULL + w;
    return h;
  }

private:
  static constexpr int kWords = capacity / 64;
  static int word(Elem e) { return e >> 6; }
  static int bit(Elem e) { return e & 63; }

  std::array<std::uint64_t, kWords> words_{};
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace graded
