#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "graded/constructions.hpp"
#include "graded/corpus.hpp"

namespace graded {

// Line-oriented structure-definition format. One declaration per line except
// hom blocks, which run until `end`. Names are declared before use (forward
// references are rejected) and may not be redeclared. The exact grammar is
// documented in the README.
struct SpecFile {
  struct Decl {
    std::string kind;  // group | ring | module | submodule | mulset | phi | hom
    std::string name;
  };
  std::vector<Decl> order;

  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, GradedSubmodule> submodules;
  std::map<std::string, MultiplicativeSet> mulsets;
  std::map<std::string, PhiFunction> phis;
  std::map<std::string, GradedHom> homs;

  std::vector<std::string> module_names;  // declaration order
  std::map<std::string, std::pair<std::string, std::string>> module_factors;
};

namespace specdetail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

inline int parse_int(const std::string& s, int line, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, what + ": expected an integer, got '" + s + "'");
  }
}

inline std::vector<Elem> parse_id_list(const std::string& s, int line) {
  std::vector<Elem> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_int(cur, line, "element id"));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace specdetail

// Phi selector text: empty | zero | n:<k> | omega | table:<path>. Table
// files hold one entry per line, "<ids> -> <ids or empty>" with
// space-separated element ids.
inline PhiFunction parse_phi_spec(const std::string& text,
                                  const std::string& base_dir = "") {
  if (text == "empty") return PhiFunction::empty();
  if (text == "zero") return PhiFunction::zero();
  if (text == "omega") return PhiFunction::omega();
  if (text.rfind("n:", 0) == 0) {
    try {
      return PhiFunction::n_almost(std::stoi(text.substr(2)));
    } catch (const std::exception&) {
      throw Error("bad phi power in '" + text + "'");
    }
  }
  if (text.rfind("table:", 0) == 0) {
    std::string path = text.substr(6);
    if (!base_dir.empty() && !path.empty() && path[0] != '/')
      path = base_dir + "/" + path;
    std::ifstream in(path);
    if (!in) throw Error("cannot open phi table file " + path);
    std::map<ElemSet, PhiValue> entries;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
      ++ln;
      auto toks = specdetail::tokenize(line);
      if (toks.empty()) continue;
      auto arrow = std::find(toks.begin(), toks.end(), "->");
      if (arrow == toks.end())
        throw ParseError(ln, "phi table line needs '->'");
      ElemSet key;
      for (auto it = toks.begin(); it != arrow; ++it)
        key.insert(specdetail::parse_int(*it, ln, "phi table id"));
      PhiValue value;
      if (arrow + 1 != toks.end() && *(arrow + 1) == "empty") {
        value = std::nullopt;
      } else {
        ElemSet v;
        for (auto it = arrow + 1; it != toks.end(); ++it)
          v.insert(specdetail::parse_int(*it, ln, "phi table id"));
        value = v;
      }
      entries[key] = value;
    }
    return PhiFunction::table(std::move(entries), "table:" + text.substr(6));
  }
  throw Error("unknown phi selector '" + text + "'");
}

inline SpecFile parse_spec_stream(std::istream& in,
                                  const std::string& base_dir = "") {
  using specdetail::parse_id_list;
  using specdetail::parse_int;
  using specdetail::tokenize;
  SpecFile sf;
  auto declare = [&](const std::string& kind, const std::string& name,
                     int line) {
    for (const auto& d : sf.order)
      if (d.kind == kind && d.name == name)
        throw ParseError(line,
                         kind + " '" + name + "' already declared");
    sf.order.push_back({kind, name});
  };
  auto find_group = [&](const std::string& name, int line) -> FiniteGroup {
    auto it = sf.groups.find(name);
    if (it == sf.groups.end())
      throw ParseError(line, "unknown group '" + name + "'");
    return it->second;
  };
  auto find_ring = [&](const std::string& name, int line) -> RingPtr {
    auto it = sf.rings.find(name);
    if (it == sf.rings.end())
      throw ParseError(line, "unknown ring '" + name + "'");
    return it->second;
  };
  auto find_module = [&](const std::string& name, int line) -> ModulePtr {
    auto it = sf.modules.find(name);
    if (it == sf.modules.end())
      throw ParseError(line, "unknown module '" + name + "'");
    return it->second;
  };

  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "group") {
      if (toks.size() < 3) throw ParseError(ln, "group needs a name and kind");
      const std::string name = toks[1];
      declare("group", name, ln);
      if (toks[2] == "trivial") {
        sf.groups.emplace(name, FiniteGroup::trivial());
      } else if (toks[2] == "cyclic") {
        if (toks.size() < 4) throw ParseError(ln, "cyclic group needs an order");
        sf.groups.emplace(name,
                          FiniteGroup::cyclic(parse_int(toks[3], ln, "order")));
      } else {
        throw ParseError(ln, "unknown group kind '" + toks[2] + "'");
      }
      continue;
    }

    if (kw == "ring") {
      if (toks.size() < 3) throw ParseError(ln, "ring needs a name and family");
      const std::string name = toks[1];
      declare("ring", name, ln);
      const std::string family = toks[2];
      std::size_t i = 3;
      std::vector<int> nums;
      std::vector<std::string> refs;
      while (i < toks.size() && toks[i] != "group" && toks[i] != "grading") {
        if (isdigit(static_cast<unsigned char>(toks[i][0])) ||
            toks[i][0] == '-')
          nums.push_back(parse_int(toks[i], ln, "ring parameter"));
        else
          refs.push_back(toks[i]);
        ++i;
      }
      FiniteGroup group = FiniteGroup::trivial();
      std::string grading;
      std::vector<std::pair<int, std::vector<Elem>>> custom;
      while (i < toks.size()) {
        if (toks[i] == "group") {
          if (i + 1 >= toks.size()) throw ParseError(ln, "group needs a name");
          group = find_group(toks[i + 1], ln);
          i += 2;
        } else if (toks[i] == "grading") {
          if (i + 1 >= toks.size())
            throw ParseError(ln, "grading needs a kind");
          grading = toks[i + 1];
          if (grading != "trivial" && grading != "gaussian" &&
              grading != "quadratic" && grading != "custom")
            throw ParseError(ln, "unknown grading kind '" + grading + "'");
          i += 2;
          if (grading == "custom") {
            while (i < toks.size() && toks[i] != "group") {
              const std::string& pair = toks[i];
              auto colon = pair.find(':');
              if (colon == std::string::npos)
                throw ParseError(ln, "custom grading entries are deg:ids");
              custom.emplace_back(
                  parse_int(pair.substr(0, colon), ln, "degree"),
                  parse_id_list(pair.substr(colon + 1), ln));
              ++i;
            }
          }
        } else {
          throw ParseError(ln, "unexpected token '" + toks[i] + "'");
        }
      }
      try {
        GradedRing raw;
        if (family == "zn") {
          if (nums.size() != 1) throw ParseError(ln, "zn needs one modulus");
          raw = families::zn_raw(nums[0], group);
        } else if (family == "gaussian") {
          if (nums.size() != 1)
            throw ParseError(ln, "gaussian needs one modulus");
          raw = families::gaussian_raw(nums[0], grading != "trivial");
          if (grading == "trivial") raw.group = group;
        } else if (family == "quadratic") {
          if (nums.size() != 2)
            throw ParseError(ln, "quadratic needs modulus and constant");
          raw = families::quadratic_raw(
              nums[0], nums[1], grading != "trivial", group, "x",
              "quadratic" + std::to_string(nums[0]) + "c" +
                  std::to_string(nums[1]));
        } else if (family == "product") {
          if (refs.size() != 2)
            throw ParseError(ln, "ring product needs two ring names");
          raw = families::product_ring_raw(find_ring(refs[0], ln),
                                           find_ring(refs[1], ln));
        } else {
          throw ParseError(ln, "unknown ring family '" + family + "'");
        }
        if (grading == "trivial" && family != "gaussian" &&
            family != "quadratic")
          raw.component = families::trivial_components(raw.group, raw.order,
                                                       raw.zero);
        if (!custom.empty()) {
          std::vector<ElemSet> comp(raw.group.order(),
                                    ElemSet::single(raw.zero));
          for (auto& [deg, ids] : custom) {
            if (deg < 0 || deg >= raw.group.order())
              throw ParseError(ln, "custom grading degree out of range");
            ElemSet s;
            for (Elem e : ids) s.insert(e);
            comp[deg] = s;
          }
          raw.component = std::move(comp);
        }
        raw.name = name;
        sf.rings.emplace(name, finalize_ring(std::move(raw)));
      } catch (const ValidationError& e) {
        throw ValidationError(e.kind, "ring " + name + ": " + e.axiom,
                              e.witness);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(ln, e.what());
      }
      continue;
    }

    if (kw == "module") {
      if (toks.size() < 4)
        throw ParseError(ln, "module needs a name, family and arguments");
      const std::string name = toks[1];
      declare("module", name, ln);
      const std::string family = toks[2];
      try {
        ModulePtr m;
        if (family == "self") {
          m = families::self_module(find_ring(toks[3], ln));
        } else if (family == "product") {
          if (toks.size() < 5)
            throw ParseError(ln, "module product needs two module names");
          m = families::product_module(find_module(toks[3], ln),
                                       find_module(toks[4], ln));
          sf.module_factors[name] = {toks[3], toks[4]};
        } else if (family == "free") {
          if (toks.size() < 5)
            throw ParseError(ln, "module free needs a ring and a rank");
          m = families::free_module(find_ring(toks[3], ln),
                                    parse_int(toks[4], ln, "rank"));
        } else if (family == "zero") {
          m = families::zero_module(find_ring(toks[3], ln));
        } else {
          throw ParseError(ln, "unknown module family '" + family + "'");
        }
        if (m->name != name) {
          // Stamp the declared name; tables are unchanged, so no revalidation.
          GradedModule renamed = *m;
          renamed.name = name;
          m = std::make_shared<const GradedModule>(std::move(renamed));
        }
        sf.modules.emplace(name, m);
        sf.module_names.push_back(name);
      } catch (const ValidationError& e) {
        throw ValidationError(e.kind, "module " + name + ": " + e.axiom,
                              e.witness);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(ln, e.what());
      }
      continue;
    }

    if (kw == "submodule") {
      // submodule <name> of <module> generators [<id>...]
      if (toks.size() < 5 || toks[2] != "of" || toks[4] != "generators")
        throw ParseError(ln,
                         "usage: submodule <name> of <module> generators ...");
      const std::string name = toks[1];
      declare("submodule", name, ln);
      ModulePtr m = find_module(toks[3], ln);
      std::vector<Elem> gens;
      for (std::size_t i = 5; i < toks.size(); ++i) {
        const Elem e = parse_int(toks[i], ln, "generator");
        if (e < 0 || e >= m->order)
          throw ParseError(ln, "generator id out of range");
        gens.push_back(e);
      }
      sf.submodules.emplace(
          name, GradedSubmodule{m, graded_closure(*m, gens)});
      continue;
    }

    if (kw == "mulset") {
      // mulset <name> of <ring> [:] <id>...
      if (toks.size() < 4 || toks[2] != "of")
        throw ParseError(ln, "usage: mulset <name> of <ring> <ids>");
      const std::string name = toks[1];
      declare("mulset", name, ln);
      RingPtr r = find_ring(toks[3], ln);
      std::vector<Elem> xs;
      for (std::size_t i = 4; i < toks.size(); ++i) {
        if (toks[i] == ":") continue;
        xs.push_back(parse_int(toks[i], ln, "mulset element"));
      }
      try {
        sf.mulsets.emplace(name, make_multiplicative_set(r, xs));
      } catch (const Error& e) {
        throw ParseError(ln, e.what());
      }
      continue;
    }

    if (kw == "phi") {
      if (toks.size() < 3) throw ParseError(ln, "phi needs a name and selector");
      const std::string name = toks[1];
      declare("phi", name, ln);
      try {
        sf.phis.emplace(name, parse_phi_spec(toks[2], base_dir));
      } catch (const Error& e) {
        throw ParseError(ln, e.what());
      }
      continue;
    }

    if (kw == "hom") {
      // hom <name> : <src> -> <dst>  (name may carry the colon)
      std::vector<std::string> t = toks;
      if (t.size() >= 2 && !t[1].empty() && t[1].back() == ':') {
        t[1].pop_back();
        t.insert(t.begin() + 2, ":");
      }
      if (t.size() < 6 || t[2] != ":" || t[4] != "->")
        throw ParseError(ln, "usage: hom <name> : <src> -> <dst>");
      const std::string name = t[1];
      declare("hom", name, ln);
      ModulePtr src = find_module(t[3], ln);
      ModulePtr dst = find_module(t[5], ln);
      std::vector<std::pair<Elem, Elem>> images;
      bool closed = false;
      while (std::getline(in, line)) {
        ++ln;
        auto its = tokenize(line);
        if (its.empty()) continue;
        if (its[0] == "end") {
          closed = true;
          break;
        }
        if (its.size() != 3 || its[1] != "->")
          throw ParseError(ln, "hom image lines are '<id> -> <id>'");
        images.emplace_back(parse_int(its[0], ln, "source element"),
                            parse_int(its[2], ln, "target element"));
      }
      if (!closed) throw ParseError(ln, "hom block missing 'end'");
      try {
        sf.homs.emplace(name, hom_from_generators(src, dst, images));
      } catch (const ValidationError& e) {
        throw ValidationError(e.kind, "hom " + name + ": " + e.axiom,
                              e.witness);
      } catch (const Error& e) {
        throw ParseError(ln, e.what());
      }
      continue;
    }

    throw ParseError(ln, "unknown declaration '" + kw + "'");
  }
  return sf;
}

inline SpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file " + path);
  std::string dir = ".";
  if (auto slash = path.find_last_of('/'); slash != std::string::npos)
    dir = path.substr(0, slash);
  return parse_spec_stream(in, dir);
}

inline Corpus corpus_from_specfile(const SpecFile& sf, int max_order = 256) {
  Corpus c;
  for (const std::string& name : sf.module_names) {
    ModulePtr m = sf.modules.at(name);
    if (m->order > max_order) continue;
    Instance inst;
    inst.id = name;
    inst.module = m;
    if (auto it = sf.module_factors.find(name); it != sf.module_factors.end()) {
      inst.factor1 = sf.modules.at(it->second.first);
      inst.factor2 = sf.modules.at(it->second.second);
    }
    c.instances.push_back(std::move(inst));
  }
  return c;
}

}  // namespace graded
