// Reader for the problem language.
//
//   problem   := (decl | cons)*
//   decl      := "var" IDENT "in" "[" BOUND "," BOUND "]" ";"
//              | "var" IDENT ";"                 (unbounded)
//   cons      := "constraint" expr "=" expr ";"
//   expr      := term (("+" | "-") term)*
//   term      := factor ("*" factor)*
//   factor    := ["-"] atom ["^" INT]
//   atom      := IDENT | NUM | "(" expr ")"
//   BOUND     := ["-"] (NUM | "inf")
//
// '#' starts a comment that runs to the end of the line.

#ifndef ICSOLVE_PARSER_HPP_
#define ICSOLVE_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icsolve/expr.hpp"
#include "icsolve/interval.hpp"

namespace icsolve {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct Declaration {
  VarName name;
  Interval domain;
};

struct Problem {
  std::vector<Declaration> declarations;
  std::vector<Equation> equations;
};

Problem parse_problem(std::string_view text);

/// Declarations then constraints, one per line, in a form parse_problem
/// reads back to the same problem.
std::string canonical_text(const Problem& problem);

}  // namespace icsolve

#endif  // ICSOLVE_PARSER_HPP_
