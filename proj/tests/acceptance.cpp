// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: acceptance --cli <path-to-graded-binary> --corpus-dir <dir>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "graded/cli.hpp"
#include "graded/laws.hpp"
#include "graded/report.hpp"
#include "graded/specfile.hpp"

using namespace graded;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int failures = 0;

void report(int n, const std::string& what, bool ok, double seconds,
            const std::string& note = "") {
  std::printf("criterion %d (%s): %s (%.2f s)%s\n", n, what.c_str(),
              ok ? "PASS" : "FAIL", seconds,
              note.empty() ? "" : (" " + note).c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ElemSet set_of(std::initializer_list<Elem> xs) {
  ElemSet s;
  for (Elem x : xs) s.insert(x);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path, corpus_dir = "corpus";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
    if (std::string(argv[i]) == "--corpus-dir") corpus_dir = argv[i + 1];
  }

  // 1. Axiom validation of every shipped structure, under 5 seconds total.
  {
    Timer t;
    bool ok = true;
    std::string note;
    try {
      const Corpus c = default_corpus();  // finalize validates everything
      ok = c.instances.size() == 20;
      if (!ok) note = "expected 20 instances";
      const SpecFile sf = parse_spec_file(corpus_dir + "/default.spec");
      ok = ok && sf.module_names.size() == 20;
      for (const auto& inst : c.instances) {
        GradedModule copy = *inst.module;
        if (!validate_module(copy).ok) ok = false;
        GradedRing ring_copy = *inst.module->ring;
        if (!validate_ring(ring_copy).ok) ok = false;
      }
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    const double sec = t.seconds();
    report(1, "axiom validation of shipped structures", ok && sec < 5.0, sec,
           note);
  }

  // 2. Radical oracle equivalence on every graded ideal of every shipped
  //    ring, plus the exact Z2[i] graded-vs-ungraded divergence.
  {
    Timer t;
    bool ok = true;
    long checked = 0;
    const Corpus c = default_corpus();
    std::vector<RingPtr> rings;
    for (const auto& inst : c.instances) {
      bool seen = false;
      for (const auto& r : rings)
        if (r->name == inst.module->ring->name) seen = true;
      if (!seen) rings.push_back(inst.module->ring);
    }
    for (const RingPtr& r : rings) {
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
          if (rad.contains(x) != power_in) ok = false;
          ++checked;
        }
      }
    }
    RingPtr g2 = families::gaussian(2);
    if (ideal_radical(*g2, set_of({0})) != set_of({0})) ok = false;
    ElemSet nil;
    for (Elem x = 0; x < g2->order; ++x) {
      Elem p = x;
      for (int n = 1; n <= g2->order; ++n) {
        if (p == g2->zero) {
          nil.insert(x);
          break;
        }
        p = g2->mul(p, x);
      }
    }
    if (nil != set_of({0, 3})) ok = false;  // {0, 1+i}
    report(2, "graded radical oracle equivalence", ok, t.seconds(),
           std::to_string(checked) + " memberships checked");
  }

  // 3. The radical identity Grad_M(N) = Grad((N:M))M on every graded
  //    submodule of every multiplication module in the corpus.
  {
    Timer t;
    bool ok = true;
    long checked = 0;
    for (const auto& inst : default_corpus().instances) {
      const GradedModule& m = *inst.module;
      if (!is_multiplication_module(m)) continue;
      for (const ElemSet& n : enumerate_graded_submodules(m)) {
        const ElemSet lhs = graded_radical_submodule(m, n);
        const ElemSet rhs =
            ideal_times_module(m, ideal_radical(*m.ring, colon_ideal(m, n)));
        if (lhs != rhs) ok = false;
        ++checked;
      }
    }
    report(3, "radical-of-colon identity on multiplication modules", ok,
           t.seconds(), std::to_string(checked) + " submodules checked");
  }

  // 4. The full law suite on the default corpus: zero counterexamples,
  //    within ten minutes.
  {
    Timer t;
    bool ok = true;
    std::string note;
    const Corpus c = default_corpus();
    const LawOptions opt;
    for (const auto& [id, fn] : law_registry()) {
      const LawResult r = fn(c, opt);
      if (!r.pass()) {
        ok = false;
        note += id + " failed at " + r.counterexample->instance_id + "; ";
      }
    }
    const double sec = t.seconds();
    report(4, "law suite on the default corpus", ok && sec <= 600.0, sec,
           note);
  }

  // 5. Mutation soundness: every weakened law variant finds a
  //    counterexample on the default corpus.
  {
    Timer t;
    bool ok = true;
    std::string note;
    const Corpus c = default_corpus();
    LawOptions opt;
    opt.mutated = true;
    for (const auto& [id, fn] : law_registry()) {
      const LawResult r = fn(c, opt);
      if (r.pass()) {
        ok = false;
        note += id + " mutant silent; ";
      }
    }
    report(5, "mutation soundness of the law harness", ok, t.seconds(), note);
  }

  // 6. Hierarchy strictness via search, each under 60 seconds, each found
  //    instance replayed against the predicate definitions.
  {
    const LawOptions opt;
    auto replay = [&](const SearchResult& r, const PredicateSpec& a,
                      const PredicateSpec& b) {
      if (!r.found || !r.module) return false;
      const bool ha =
          check_phi_predicate(a.kind, *r.module, r.submodule, a.phi).holds;
      const bool hb =
          check_phi_predicate(b.kind, *r.module, r.submodule, b.phi).holds;
      return ha && !hb;
    };
    {
      Timer t;
      const auto a = parse_predicate_spec("weakly-prime");
      const auto b = parse_predicate_spec("prime");
      const SearchResult r =
          search_separating_example(a, b, search_corpus(32), opt);
      const bool ok = r.found && r.instance_id == "zn4" &&
                      r.submodule == set_of({0}) && replay(r, a, b);
      report(6, "search: weakly-prime not prime", ok && t.seconds() < 60.0,
             t.seconds(), r.found ? r.instance_id + " K=" + r.submodule_name
                                  : "not found");
    }
    {
      Timer t;
      const auto a = parse_predicate_spec("2-absorbing-primary");
      const auto b = parse_predicate_spec("2-absorbing");
      const SearchResult r =
          search_separating_example(a, b, search_corpus(32), opt);
      bool ok = r.found && replay(r, a, b) && t.seconds() < 60.0;
      // The named witness 8Z16 inside Z16 must itself separate the two
      // predicates (the search returns the smaller Z8 instance first).
      ModulePtr z16 = families::self_module(families::zn(16));
      ok = ok && is_graded_2_absorbing_primary(*z16, set_of({0, 8})).holds &&
           !is_graded_2_absorbing(*z16, set_of({0, 8})).holds;
      report(6, "search: 2-absorbing-primary not 2-absorbing", ok, t.seconds(),
             r.found ? r.instance_id + " K=" + r.submodule_name : "not found");
    }
    {
      Timer t;
      const auto a = parse_predicate_spec("weakly-2-absorbing");
      const auto b = parse_predicate_spec("2-absorbing");
      const SearchResult r =
          search_separating_example(a, b, search_corpus(32), opt);
      const bool ok = r.found && replay(r, a, b);
      report(6, "search: weakly-2-absorbing not 2-absorbing",
             ok && t.seconds() < 60.0, t.seconds(),
             r.found ? r.instance_id + " K=" + r.submodule_name : "not found");
    }
  }

  // 7. Byte-identical law reports across consecutive CLI runs.
  {
    Timer t;
    bool ok = true;
    std::string note;
    if (cli_path.empty()) {
      ok = false;
      note = "no --cli path given";
    } else {
      const std::string out1 = "/tmp/graded_acceptance_run1.json";
      const std::string out2 = "/tmp/graded_acceptance_run2.json";
      const std::string cmd1 =
          cli_path + " laws --law all --format json > " + out1 + " 2>/dev/null";
      const std::string cmd2 =
          cli_path + " laws --law all --format json > " + out2 + " 2>/dev/null";
      if (std::system(cmd1.c_str()) != 0) ok = false;
      if (std::system(cmd2.c_str()) != 0) ok = false;
      const std::string a = read_file(out1);
      const std::string b = read_file(out2);
      if (a.empty() || a != b) {
        ok = false;
        note = "outputs differ or are empty";
      }
      std::remove(out1.c_str());
      std::remove(out2.c_str());
    }
    report(7, "deterministic law reports", ok, t.seconds(), note);
  }

  if (failures == 0) {
    std::printf("ACCEPTANCE: all criteria pass\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
  return 1;
}
