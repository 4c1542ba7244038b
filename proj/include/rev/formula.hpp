#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "rev/language.hpp"

namespace rev {

// Grammar (whitespace insignificant):
//   formula := iff
//   iff     := imp ("<->" imp)*          right associative
//   imp     := or ("->" or)*             right associative
//   or      := and ("|" and)*
//   and     := not ("&" not)*
//   not     := "~" not | atom | "true" | "false" | "(" formula ")"
// Precedence: ~ > & > | > -> > <->.

enum class Connective { True, False, Atom, Not, And, Or, Implies, Iff };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Connective kind;
  int atom_index = -1;  // Atom only
  FormulaPtr left;      // Not: operand; binary: lhs
  FormulaPtr right;     // binary: rhs
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

FormulaPtr parse(const std::string& text, const Language& lang);
std::string print(const Formula& f, const Language& lang);
bool ast_equal(const Formula& a, const Formula& b);

bool eval(const Formula& f, const Language& lang, Valuation v);
ModelSet models(const Formula& f, const Language& lang);

// Convenience: parse then evaluate the truth table.
ModelSet models(const std::string& text, const Language& lang);

}  // namespace rev
