#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graded/families.hpp"

namespace graded {

// One law-checking instance: a module together with, for products, the two
// factors (the product theorems quantify over K1 x M2 shapes).
struct Instance {
  std::string id;
  ModulePtr module;
  ModulePtr factor1;
  ModulePtr factor2;

  bool is_product() const { return factor1 != nullptr; }
};

struct Corpus {
  std::vector<Instance> instances;
};

inline Instance make_instance(ModulePtr m) {
  return {m->name, std::move(m), nullptr, nullptr};
}

inline Instance make_product_instance(ModulePtr m1, ModulePtr m2) {
  ModulePtr p = families::product_module(m1, m2);
  return {p->name, std::move(p), std::move(m1), std::move(m2)};
}

// The shipped corpus: Z_n over itself for n = 2..16 (trivial grading), the
// two Gaussian rings under their order-2 grading, and three products kept
// within order 36.
inline Corpus default_corpus(int max_order = 36) {
  Corpus c;
  auto add = [&](Instance inst) {
    if (inst.module->order <= max_order) c.instances.push_back(std::move(inst));
  };
  for (int n = 2; n <= 16; ++n)
    add(make_instance(families::self_module(families::zn(n))));
  add(make_instance(families::self_module(families::gaussian(2))));
  add(make_instance(families::self_module(families::gaussian(4))));
  add(make_product_instance(families::self_module(families::zn(8)),
                            families::self_module(families::zn(2))));
  add(make_product_instance(families::self_module(families::zn(6)),
                            families::self_module(families::zn(5))));
  add(make_product_instance(families::self_module(families::gaussian(2)),
                            families::self_module(families::gaussian(2))));
  return c;
}

// Separation searches walk instances smallest-first.
inline void sort_for_search(Corpus& c) {
  std::stable_sort(c.instances.begin(), c.instances.end(),
                   [](const Instance& a, const Instance& b) {
                     if (a.module->order != b.module->order)
                       return a.module->order < b.module->order;
                     return a.id < b.id;
                   });
}

inline Corpus search_corpus(int max_order = 32) {
  Corpus c;
  for (int n = 2; n <= max_order; ++n)
    c.instances.push_back(make_instance(families::self_module(families::zn(n))));
  for (int n = 2; n * n <= max_order; ++n)
    c.instances.push_back(
        make_instance(families::self_module(families::gaussian(n))));
  sort_for_search(c);
  return c;
}

// Seeded corpus extension drawing from the built-in families; duplicates of
// instances already present are skipped.
inline void random_extend(Corpus& c, int count, std::uint64_t seed,
                          int max_order = 36) {
  if (count <= 0) return;
  struct Candidate {
    std::string id;
    Instance (*build)(int, int);
    int a, b;
  };
  std::vector<Candidate> pool;
  for (int n = 2; n <= max_order && n <= 16; ++n)
    pool.push_back({"zn" + std::to_string(n),
                    [](int a, int) {
                      return make_instance(
                          families::self_module(families::zn(a)));
                    },
                    n, 0});
  for (int n = 2; n * n <= max_order; ++n)
    pool.push_back({"gaussian" + std::to_string(n),
                    [](int a, int) {
                      return make_instance(
                          families::self_module(families::gaussian(a)));
                    },
                    n, 0});
  for (int n = 2; n * n <= max_order; ++n)
    for (int cc = 0; cc < n; ++cc)
      pool.push_back({"quadratic" + std::to_string(n) + "c" + std::to_string(cc),
                      [](int a, int b) {
                        return make_instance(
                            families::self_module(families::quadratic(a, b)));
                      },
                      n, cc});
  for (int n = 2; n <= 16; ++n)
    for (int k = 2; n * k <= max_order && k <= n; ++k)
      pool.push_back(
          {"product(zn" + std::to_string(n) + ",zn" + std::to_string(k) + ")",
           [](int a, int b) {
             return make_product_instance(
                 families::self_module(families::zn(a)),
                 families::self_module(families::zn(b)));
           },
           n, k});
  std::mt19937_64 rng(seed);
  int added = 0;
  int attempts = 0;
  while (added < count && attempts < 16 * count + 64) {
    ++attempts;
    const Candidate& cand = pool[rng() % pool.size()];
    bool dup = false;
    for (const Instance& inst : c.instances)
      if (inst.id == cand.id) dup = true;
    if (dup) continue;
    c.instances.push_back(cand.build(cand.a, cand.b));
    ++added;
  }
}

}  // namespace graded
