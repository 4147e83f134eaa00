#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graded/report.hpp"
#include "graded/specfile.hpp"

namespace graded {

// Exit codes, fixed for scripting:
//   0 success (laws: all pass; search: no separation within bounds)
//   1 parse or validation failure
//   2 improper submodule where a proper one is required
//   3 counterexample (laws) or separating instance found (search)
//   4 enumeration bound exceeded
namespace clidetail {

inline std::vector<PhiFunction> parse_phi_list(const std::string& list,
                                               const SpecFile* sf,
                                               const std::string& base_dir) {
  std::vector<PhiFunction> out;
  std::string cur;
  for (char c : list + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        if (sf) {
          auto it = sf->phis.find(cur);
          if (it != sf->phis.end()) {
            out.push_back(it->second);
            cur.clear();
            continue;
          }
        }
        out.push_back(parse_phi_spec(cur, base_dir));
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  return out;
}

inline const GradedSubmodule& find_submodule(const SpecFile& sf,
                                             const std::string& name) {
  auto it = sf.submodules.find(name);
  if (it == sf.submodules.end())
    throw Error("no submodule named '" + name + "' in the spec file");
  return it->second;
}

// A module is the ring seen as a module over itself exactly when its tables
// coincide with the ring's; then its submodules are the graded ideals.
inline bool is_self_module(const GradedModule& m) {
  const GradedRing& r = *m.ring;
  return m.order == r.order && m.zero == r.zero &&
         m.add_table == r.add_table && m.act_table == r.mul_table &&
         m.component == r.component;
}

inline std::string dir_of(const std::string& path) {
  if (auto slash = path.find_last_of('/'); slash != std::string::npos)
    return path.substr(0, slash);
  return ".";
}

}  // namespace clidetail

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite graded rings and modules: validation, classification, "
               "radicals, law checking and separation search"};
  app.require_subcommand(1);

  int max_order = -1;
  std::string format = "text";
  unsigned long long seed = 0;
  bool timing = false;
  app.add_option("--max-order", max_order,
                 "largest module order considered (laws default 36, search 32)");
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized corpus extensions");
  app.add_flag("--timing", timing, "include runtimes in reports");
  // Global options remain usable after the subcommand name.
  app.fallthrough();

  std::string v_file;
  auto* cmd_validate = app.add_subcommand("validate",
                                          "check every declared structure");
  cmd_validate->add_option("file", v_file, "structure definition file")
      ->required();

  std::string c_file, c_submodule, c_phis = "empty,zero";
  auto* cmd_classify =
      app.add_subcommand("classify", "evaluate all predicates on a submodule");
  cmd_classify->add_option("file", c_file)->required();
  cmd_classify->add_option("--submodule", c_submodule, "declared submodule name")
      ->required();
  cmd_classify->add_option("--phi", c_phis, "comma-separated phi selectors");

  std::string r_file, r_submodule;
  auto* cmd_radical = app.add_subcommand(
      "radical", "print graded radicals attached to a submodule");
  cmd_radical->add_option("file", r_file)->required();
  cmd_radical->add_option("--submodule", r_submodule)->required();

  std::string co_file, co_submodule;
  auto* cmd_colon =
      app.add_subcommand("colon", "print the colon ideal (K : M)");
  cmd_colon->add_option("file", co_file)->required();
  cmd_colon->add_option("--submodule", co_submodule)->required();

  std::string l_corpus, l_law = "all", l_phis, l_report;
  bool l_mutants = false, l_epis = false;
  int l_random = 0;
  auto* cmd_laws = app.add_subcommand("laws", "run the law suite");
  cmd_laws->add_option("--corpus", l_corpus, "corpus spec file");
  cmd_laws->add_option("--law", l_law, "law id or 'all'");
  cmd_laws->add_option("--phi", l_phis, "override the per-module phi lists");
  cmd_laws->add_option("--report", l_report, "also write the report here");
  cmd_laws->add_flag("--mutants", l_mutants,
                     "run the weakened law variants instead");
  cmd_laws->add_flag("--epis-all", l_epis,
                     "T2.9: enumerate all graded epimorphisms (small modules)");
  cmd_laws->add_option("--random-extend", l_random,
                       "append this many seeded random instances");

  std::string s_a, s_b, s_corpus;
  auto* cmd_search = app.add_subcommand(
      "search", "find an instance separating two predicates");
  cmd_search->add_option("--a", s_a, "predicate that must hold")->required();
  cmd_search->add_option("--b", s_b, "predicate that must fail")->required();
  cmd_search->add_option("--corpus", s_corpus, "corpus spec file");

  std::string cat_file, cat_phis = "empty,zero";
  auto* cmd_catalog = app.add_subcommand(
      "catalog", "enumerate and classify every proper graded submodule");
  cmd_catalog->add_option("file", cat_file)->required();
  cmd_catalog->add_option("--phi", cat_phis, "comma-separated phi selectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*cmd_validate) {
      SpecFile sf;
      try {
        sf = parse_spec_file(v_file);
      } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
      } catch (const ValidationError& e) {
        err << "validation failure: " << e.what() << "\n";
        return 1;
      }
      for (const auto& d : sf.order)
        out << d.kind << " " << d.name << ": pass\n";
      return 0;
    }

    if (*cmd_classify) {
      const SpecFile sf = parse_spec_file(c_file);
      const GradedSubmodule& k = clidetail::find_submodule(sf, c_submodule);
      const auto phis =
          clidetail::parse_phi_list(c_phis, &sf, clidetail::dir_of(c_file));
      const int bound = max_order > 0 ? std::max(max_order, kDefaultEnumBound)
                                      : kDefaultEnumBound;
      const ClassificationReport rep =
          classify(*k.parent, k.members, phis, bound);
      if (format == "json")
        out << to_json(rep).dump(2) << "\n";
      else
        render_text(out, rep);
      return 0;
    }

    if (*cmd_radical) {
      const SpecFile sf = parse_spec_file(r_file);
      const GradedSubmodule& k = clidetail::find_submodule(sf, r_submodule);
      const GradedModule& m = *k.parent;
      const ElemSet colon = colon_ideal(m, k.members);
      Json j;
      j["submodule"] = m.set_name(k.members);
      j["colon"] = m.ring->set_name(colon);
      j["colon_radical"] = m.ring->set_name(ideal_radical(*m.ring, colon));
      j["submodule_radical"] =
          m.set_name(graded_radical_submodule(m, k.members));
      if (clidetail::is_self_module(m))
        j["ideal_radical"] = m.set_name(ideal_radical(*m.ring, k.members));
      if (format == "json") {
        out << j.dump(2) << "\n";
      } else {
        out << "submodule " << j["submodule"].get<std::string>() << "\n";
        out << "(K : M)        = " << j["colon"].get<std::string>() << "\n";
        out << "Grad((K : M))  = " << j["colon_radical"].get<std::string>()
            << "\n";
        out << "Grad_M(K)      = "
            << j["submodule_radical"].get<std::string>() << "\n";
        if (j.contains("ideal_radical"))
          out << "Grad(K) ideal  = " << j["ideal_radical"].get<std::string>()
              << "\n";
      }
      return 0;
    }

    if (*cmd_colon) {
      const SpecFile sf = parse_spec_file(co_file);
      const GradedSubmodule& k = clidetail::find_submodule(sf, co_submodule);
      const ElemSet colon = colon_ideal(*k.parent, k.members);
      if (format == "json") {
        Json j;
        j["submodule"] = k.parent->set_name(k.members);
        j["colon"] = k.parent->ring->set_name(colon);
        j["colon_members"] = colon.elements();
        out << j.dump(2) << "\n";
      } else {
        out << "(K : M) = " << k.parent->ring->set_name(colon) << "\n";
      }
      return 0;
    }

    if (*cmd_laws) {
      const int order_cap = max_order > 0 ? max_order : 36;
      Corpus corpus;
      SpecFile sf;
      bool have_sf = false;
      if (!l_corpus.empty()) {
        sf = parse_spec_file(l_corpus);
        have_sf = true;
        corpus = corpus_from_specfile(sf, order_cap);
      } else {
        corpus = default_corpus(order_cap);
      }
      if (l_random > 0) random_extend(corpus, l_random, seed, order_cap);
      LawOptions opt;
      opt.enum_bound = std::max(kDefaultEnumBound, order_cap);
      opt.mutated = l_mutants;
      opt.all_epimorphisms = l_epis;
      if (!l_phis.empty())
        opt.phi_override = clidetail::parse_phi_list(
            l_phis, have_sf ? &sf : nullptr,
            have_sf ? clidetail::dir_of(l_corpus) : ".");
      std::vector<LawResult> results;
      if (l_law == "all") {
        results = run_all_laws(corpus, opt);
      } else {
        results.push_back(run_law(l_law, corpus, opt));
      }
      std::ostringstream rendered;
      if (format == "json") {
        rendered << to_json(results, timing).dump(2) << "\n";
      } else {
        for (const auto& r : results) render_text(rendered, r, timing);
        if (corpus.instances.empty())
          rendered << "note: empty corpus, all laws pass vacuously\n";
      }
      out << rendered.str();
      if (!l_report.empty()) {
        std::ofstream f(l_report);
        if (!f) throw Error("cannot write report to " + l_report);
        f << rendered.str();
      }
      for (const auto& r : results)
        if (!r.pass()) return 3;
      return 0;
    }

    if (*cmd_search) {
      const int order_cap = max_order > 0 ? max_order : 32;
      Corpus corpus;
      if (!s_corpus.empty())
        corpus = corpus_from_specfile(parse_spec_file(s_corpus), order_cap);
      else
        corpus = search_corpus(order_cap);
      LawOptions opt;
      opt.enum_bound = std::max(kDefaultEnumBound, order_cap);
      const SearchResult r = search_separating_example(
          parse_predicate_spec(s_a), parse_predicate_spec(s_b),
          std::move(corpus), opt);
      if (format == "json") {
        Json j;
        j["a"] = s_a;
        j["b"] = s_b;
        j["found"] = r.found;
        j["examined"] = r.examined;
        if (r.found) {
          j["instance"] = r.instance_id;
          j["submodule"] = r.submodule_name;
          j["members"] = r.submodule.elements();
        }
        out << j.dump(2) << "\n";
      } else if (r.found) {
        out << "separating instance: " << r.instance_id << " K = "
            << r.submodule_name << " (" << s_a << " holds, " << s_b
            << " fails)\n";
      } else {
        out << "no separating instance within bounds (" << r.examined
            << " submodules examined)\n";
      }
      return r.found ? 3 : 0;
    }

    if (*cmd_catalog) {
      const SpecFile sf = parse_spec_file(cat_file);
      const auto phis = clidetail::parse_phi_list(cat_phis, &sf,
                                                  clidetail::dir_of(cat_file));
      const int bound = max_order > 0 ? std::max(max_order, kDefaultEnumBound)
                                      : kDefaultEnumBound;
      Json all = Json::array();
      for (const std::string& name : sf.module_names) {
        const ModulePtr& m = sf.modules.at(name);
        for (const ElemSet& k : enumerate_graded_submodules(*m, bound)) {
          if (k.count() == m->order) continue;
          const ClassificationReport rep = classify(*m, k, phis, bound);
          if (format == "json")
            all.push_back(to_json(rep));
          else
            render_text(out, rep);
        }
      }
      if (format == "json") out << all.dump(2) << "\n";
      return 0;
    }
  } catch (const ImproperSubmodule& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace graded
