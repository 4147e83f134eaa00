// Builds Z8 as a module over itself, lists its graded submodules, and
// prints colon ideals and radicals for each.
#include <iostream>

#include "graded/core.hpp"
#include "graded/families.hpp"

int main() {
  using namespace graded;
  ModulePtr m = families::self_module(families::zn(8));
  std::cout << "module " << m->name << " (order " << m->order << ")\n";
  for (const ElemSet& k : enumerate_graded_submodules(*m)) {
    const ElemSet colon = colon_ideal(*m, k);
    std::cout << "  submodule " << m->set_name(k) << "\n";
    std::cout << "    (K : M)       = " << m->ring->set_name(colon) << "\n";
    std::cout << "    Grad((K : M)) = "
              << m->ring->set_name(ideal_radical(*m->ring, colon)) << "\n";
    std::cout << "    Grad_M(K)     = "
              << m->set_name(graded_radical_submodule(*m, k)) << "\n";
  }
  return 0;
}
