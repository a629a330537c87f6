#include "rectrep/cli/spec_parser.hpp"

#include "rectrep/charcalc/aliases.hpp"

#include <cctype>

namespace rectrep::cli {

using charcalc::AliasKind;
using charcalc::IrrepExpr;
using liealg::Family;
using liealg::SemisimpleAlgebra;
using liealg::SimpleType;
using liealg::Weight;

ParseError::ParseError(Kind kind, std::string message, std::size_t line, std::size_t column)
    : std::invalid_argument(to_string(kind) + " error at " + std::to_string(line) + ":" + std::to_string(column) +
                            ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::Arity: return "arity";
    case ParseError::Kind::Alias: return "alias";
    case ParseError::Kind::Rank: return "rank";
  }
  return "unknown";
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  // Lower-cased run of letters.
  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      w += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    return w;
  }

  std::string digits() {
    skip_ws();
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    if (d.empty()) fail("expected an integer" + found());
    return d;
  }

  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  [[noreturn]] void fail(const std::string& message, ParseError::Kind kind = ParseError::Kind::Syntax) {
    fail_at(pos(), message, kind);
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message, ParseError::Kind kind) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(kind, message, line, column);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct EnteredFactor {
  Family family;
  int rank;
};

std::vector<EnteredFactor> parse_factors(std::string_view text) {
  Cursor c(text);
  std::vector<EnteredFactor> out;
  do {
    const std::size_t at = c.pos();
    const char letter = c.peek();
    if (!std::isalpha(static_cast<unsigned char>(letter))) c.fail("expected a family letter A-G" + c.found());
    Family f;
    try {
      f = liealg::family_from_letter(letter);
    } catch (const std::invalid_argument&) {
      c.fail(std::string("unknown family '") + letter + "'");
    }
    c.accept(letter);
    const std::string d = c.digits();
    if (d.size() > 3) c.fail_at(at, "rank too large: " + d, ParseError::Kind::Rank);
    const int rank = std::stoi(d);
    try {
      liealg::canonicalize(f, rank);
    } catch (const liealg::InvalidType& e) {
      c.fail_at(at, e.what(), ParseError::Kind::Rank);
    }
    out.push_back({f, rank});
  } while (c.accept('*'));
  if (!c.at_end()) c.fail("expected '*' or end of algebra" + c.found());
  return out;
}

long small_int(Cursor& c) {
  const std::size_t at = c.pos();
  const std::string d = c.digits();
  if (d.size() > 6) c.fail_at(at, "index too large: " + d, ParseError::Kind::Syntax);
  return std::stol(d);
}

IrrepExpr parse_irrep(Cursor& c) {
  const std::size_t at = c.pos();
  const std::string w = c.word();
  IrrepExpr e;
  if (w == "triv") {
    e.kind = AliasKind::Triv;
  } else if (w == "std") {
    e.kind = AliasKind::Std;
  } else if (w == "spin") {
    e.kind = AliasKind::Spin;
    if (c.accept('-')) {
      e.kind = AliasKind::SpinMinus;
    } else if (c.peek() == '+') {
      // Look past the '+' to decide between spin+ and a sum.
      Cursor probe = c;
      probe.accept('+');
      const char next = probe.peek();
      if (next == '\0' || next == '+' || next == '*' || next == ')') {
        c.accept('+');
        e.kind = AliasKind::SpinPlus;
      }
    }
  } else if (w == "sym") {
    e.kind = AliasKind::Sym;
    e.k = small_int(c);
  } else if (w == "wedge") {
    e.kind = AliasKind::Wedge;
    e.k = small_int(c);
  } else if (w == "dual") {
    c.expect('(');
    e = parse_irrep(c);
    ++e.dual_depth;
    c.expect(')');
  } else if (w == "hw") {
    e.kind = AliasKind::Highest;
    c.expect('(');
    do {
      e.coords.emplace_back(c.digits());
    } while (c.accept(','));
    c.expect(')');
  } else if (w.empty()) {
    c.fail("expected an irreducible" + c.found());
  } else {
    c.fail_at(at, "unknown irreducible '" + w + "'", ParseError::Kind::Syntax);
  }
  return e;
}

}  // namespace

SemisimpleAlgebra parse_algebra(std::string_view text) {
  std::vector<SimpleType> ts;
  for (const auto& f : parse_factors(text)) ts.push_back(liealg::canonicalize(f.family, f.rank).type);
  return SemisimpleAlgebra(ts);
}

charcalc::RepSpec parse_spec(std::string_view algebra_text, std::string_view rep_text) {
  const auto factors = parse_factors(algebra_text);
  const SemisimpleAlgebra g = parse_algebra(algebra_text);
  Cursor c(rep_text);
  std::vector<Weight> hws;
  do {
    const std::size_t term_at = c.pos();
    // Highest weights of this term, expanded over multi-summand aliases.
    std::vector<Weight> partial{Weight(0)};
    std::size_t count = 0;
    do {
      const std::size_t at = c.pos();
      const IrrepExpr e = parse_irrep(c);
      if (count >= factors.size()) {
        ++count;
        continue;
      }
      std::vector<Weight> options;
      try {
        options = charcalc::resolve_alias(factors[count].family, factors[count].rank, e);
      } catch (const std::invalid_argument& err) {
        c.fail_at(at, err.what(), ParseError::Kind::Alias);
      }
      std::vector<Weight> next;
      for (const auto& p : partial)
        for (const auto& o : options) next.push_back(Weight::concat(p, o));
      partial = std::move(next);
      ++count;
    } while (c.accept('*'));
    if (count != factors.size())
      c.fail_at(term_at,
                "term names " + std::to_string(count) + " irreducibles for " + std::to_string(factors.size()) +
                    " factors",
                ParseError::Kind::Arity);
    hws.insert(hws.end(), partial.begin(), partial.end());
  } while (c.accept('+'));
  if (!c.at_end()) c.fail("expected '+', '*' or end of representation" + c.found());
  return charcalc::RepSpec(g, hws);
}

}  // namespace rectrep::cli
