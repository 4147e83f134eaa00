#pragma once

#include <stdexcept>
#include <string>

namespace graded {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw tables fail an axiom or are malformed; carries the first violation.
struct ValidationError : Error {
  std::string kind;     // "malformed" or "axiom"
  std::string axiom;    // which requirement failed
  std::string witness;  // offending tuple, printable

  ValidationError(std::string kind_, std::string axiom_, std::string witness_)
      : Error(kind_ + ": " + axiom_ +
              (witness_.empty() ? "" : " [" + witness_ + "]")),
        kind(std::move(kind_)),
        axiom(std::move(axiom_)),
        witness(std::move(witness_)) {}
};

struct NotMultiplicationModule : Error {
  explicit NotMultiplicationModule(const std::string& what)
      : Error("not a multiplication module: " + what) {}
};

struct ImproperSubmodule : Error {
  explicit ImproperSubmodule(const std::string& what)
      : Error("submodule must be proper: " + what) {}
};

struct GComponentImproper : Error {
  explicit GComponentImproper(const std::string& what)
      : Error("component K_g equals M_g: " + what) {}
};

struct BoundExceeded : Error {
  int order;
  BoundExceeded(int order_, int bound)
      : Error("carrier order " + std::to_string(order_) +
              " exceeds enumeration bound " + std::to_string(bound)),
        order(order_) {}
};

struct TableMiss : Error {
  explicit TableMiss(const std::string& what)
      : Error("phi table has no entry for " + what) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace graded
