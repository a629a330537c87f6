#pragma once

#include "rectrep/charcalc/rep_spec.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rectrep::cli {

// Grammar (whitespace insignificant, keywords case-insensitive):
//   algebra := factor ("*" factor)*          factor := letter rank
//   rep     := term ("+" term)*               term   := irrep ("*" irrep)*
//   irrep   := triv | std | spin | spin+ | spin- | sym INT | wedge INT
//            | dual( irrep ) | hw( INT ("," INT)* )
// A term names one irrep per algebra factor, in order. "spin+" binds the
// sign only when the next token is the end, "+", "*" or ")"; otherwise
// "spin + x" is a sum.
class ParseError : public std::invalid_argument {
 public:
  enum class Kind { Syntax, Arity, Alias, Rank };
  ParseError(Kind kind, std::string message, std::size_t line, std::size_t column);
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_, column_;
};

std::string to_string(ParseError::Kind kind);

liealg::SemisimpleAlgebra parse_algebra(std::string_view text);

// The algebra comes back with canonical factor labels in the entered
// order; highest weights are in canonical coordinates.
charcalc::RepSpec parse_spec(std::string_view algebra_text, std::string_view rep_text);

}  // namespace rectrep::cli
