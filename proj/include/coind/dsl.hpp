#pragma once

// Closed list expressions over a definitions file.
//
//   expr := nil | cons(sym, expr) | lconst(sym) | iterates(name, sym)
//         | map(name, expr) | append(expr, expr) | corec(name, seed)
//
// Identifiers are [A-Za-z0-9_]+; whitespace is ignored between tokens.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "coind/colist.hpp"

namespace coind {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

namespace expr {
struct Nil {};
struct Cons {
  std::string symbol;
  ExprPtr tail;
};
struct Lconst {
  std::string symbol;
};
struct Iterates {
  std::string fn;
  std::string symbol;
};
struct Map {
  std::string fn;
  ExprPtr inner;
};
struct Append {
  ExprPtr first;
  ExprPtr second;
};
struct Corec {
  std::string machine;
  std::string seed;
};
}  // namespace expr

struct Expr {
  std::variant<expr::Nil, expr::Cons, expr::Lconst, expr::Iterates, expr::Map, expr::Append, expr::Corec> node;
};

bool operator==(const Expr& a, const Expr& b);

namespace mk {
ExprPtr nil();
ExprPtr cons(std::string symbol, ExprPtr tail);
ExprPtr lconst(std::string symbol);
ExprPtr iterates(std::string fn, std::string symbol);
ExprPtr map(std::string fn, ExprPtr inner);
ExprPtr append(ExprPtr first, ExprPtr second);
ExprPtr corec(std::string machine, std::string seed);
}  // namespace mk

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Throws ParseError.
ExprPtr parse_expr(std::string_view text);
/// Canonical form, no whitespace; parse_expr(print(e)) == e.
std::string print(const Expr& e);

bool is_identifier(std::string_view s);

/// Alphabet, atom functions and step machines loaded from JSON.
struct Defs {
  Alphabet alphabet;
  std::map<std::string, std::shared_ptr<const AtomFun>> functions;
  std::map<std::string, std::shared_ptr<const StepFn>> machines;

  /// Throws InvalidDefinition naming the offending key.
  static Defs from_json(std::string_view text);
};

/// Throws UnknownSymbol / UnknownFunction / UnknownMachine / UnknownSeed.
CoList elaborate(const Expr& e, const Defs& d);

}  // namespace coind
