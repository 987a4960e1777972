#include "coind/dsl.hpp"

#include <json.hpp>

#include <cctype>
#include <type_traits>

namespace coind {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

enum class Tok { ident, lparen, rparen, comma, end, invalid };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  ExprPtr parse() {
    auto e = expression();
    if (tok_.kind != Tok::end) fail("end of input");
    return e;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) {
      tok_ = {Tok::end, pos_, {}};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (ident_char(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      tok_ = {Tok::ident, start, text_.substr(start, pos_ - start)};
      return;
    }
    ++pos_;
    switch (c) {
      case '(': tok_ = {Tok::lparen, start, text_.substr(start, 1)}; break;
      case ')': tok_ = {Tok::rparen, start, text_.substr(start, 1)}; break;
      case ',': tok_ = {Tok::comma, start, text_.substr(start, 1)}; break;
      default: tok_ = {Tok::invalid, start, text_.substr(start, 1)}; break;
    }
  }

  [[noreturn]] void fail(std::string expected) const { throw ParseError(tok_.offset, std::move(expected)); }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail(what);
    advance();
  }

  std::string identifier(const char* what) {
    if (tok_.kind != Tok::ident) fail(what);
    std::string s(tok_.text);
    advance();
    return s;
  }

  ExprPtr expression() {
    if (tok_.kind != Tok::ident) fail("expression");
    const std::string_view kw = tok_.text;
    if (kw == "nil") {
      advance();
      return mk::nil();
    }
    if (kw != "cons" && kw != "lconst" && kw != "iterates" && kw != "map" && kw != "append" && kw != "corec")
      fail("expression");
    advance();
    expect(Tok::lparen, "'('");
    ExprPtr out;
    if (kw == "cons") {
      auto sym = identifier("symbol");
      expect(Tok::comma, "','");
      out = mk::cons(std::move(sym), expression());
    } else if (kw == "lconst") {
      out = mk::lconst(identifier("symbol"));
    } else if (kw == "iterates") {
      auto fn = identifier("function name");
      expect(Tok::comma, "','");
      out = mk::iterates(std::move(fn), identifier("symbol"));
    } else if (kw == "map") {
      auto fn = identifier("function name");
      expect(Tok::comma, "','");
      out = mk::map(std::move(fn), expression());
    } else if (kw == "append") {
      auto first = expression();
      expect(Tok::comma, "','");
      out = mk::append(std::move(first), expression());
    } else {
      auto machine = identifier("machine name");
      expect(Tok::comma, "','");
      out = mk::corec(std::move(machine), identifier("seed"));
    }
    expect(Tok::rparen, "')'");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::end, 0, {}};
};

const nlohmann::json& field(const nlohmann::json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name))
    throw Error(ErrorCode::InvalidDefinition, where + ": missing field '" + name + "'");
  return j.at(name);
}

std::string name_at(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) throw Error(ErrorCode::InvalidDefinition, where + ": expected a string");
  auto s = v.get<std::string>();
  if (!is_identifier(s)) throw Error(ErrorCode::InvalidDefinition, where + ": '" + s + "' is not an identifier");
  return s;
}

}  // namespace

namespace expr {
namespace {
bool eq(const Nil&, const Nil&) { return true; }
bool eq(const Cons& x, const Cons& y) { return x.symbol == y.symbol && same(x.tail, y.tail); }
bool eq(const Lconst& x, const Lconst& y) { return x.symbol == y.symbol; }
bool eq(const Iterates& x, const Iterates& y) { return x.fn == y.fn && x.symbol == y.symbol; }
bool eq(const Map& x, const Map& y) { return x.fn == y.fn && same(x.inner, y.inner); }
bool eq(const Append& x, const Append& y) { return same(x.first, y.first) && same(x.second, y.second); }
bool eq(const Corec& x, const Corec& y) { return x.machine == y.machine && x.seed == y.seed; }
}  // namespace
}  // namespace expr

bool operator==(const Expr& a, const Expr& b) {
  return std::visit(
      [](const auto& x, const auto& y) {
        if constexpr (std::is_same_v<decltype(x), decltype(y)>) {
          return expr::eq(x, y);
        } else {
          return false;
        }
      },
      a.node, b.node);
}

namespace mk {
ExprPtr nil() { return make({expr::Nil{}}); }
ExprPtr cons(std::string symbol, ExprPtr tail) { return make({expr::Cons{std::move(symbol), std::move(tail)}}); }
ExprPtr lconst(std::string symbol) { return make({expr::Lconst{std::move(symbol)}}); }
ExprPtr iterates(std::string fn, std::string symbol) { return make({expr::Iterates{std::move(fn), std::move(symbol)}}); }
ExprPtr map(std::string fn, ExprPtr inner) { return make({expr::Map{std::move(fn), std::move(inner)}}); }
ExprPtr append(ExprPtr first, ExprPtr second) { return make({expr::Append{std::move(first), std::move(second)}}); }
ExprPtr corec(std::string machine, std::string seed) { return make({expr::Corec{std::move(machine), std::move(seed)}}); }
}  // namespace mk

ParseError::ParseError(std::size_t offset, std::string expected)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)) {}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print(const Expr& e) {
  return std::visit(
      overloaded{
          [](const expr::Nil&) { return std::string("nil"); },
          [](const expr::Cons& c) { return "cons(" + c.symbol + "," + print(*c.tail) + ")"; },
          [](const expr::Lconst& c) { return "lconst(" + c.symbol + ")"; },
          [](const expr::Iterates& c) { return "iterates(" + c.fn + "," + c.symbol + ")"; },
          [](const expr::Map& c) { return "map(" + c.fn + "," + print(*c.inner) + ")"; },
          [](const expr::Append& c) { return "append(" + print(*c.first) + "," + print(*c.second) + ")"; },
          [](const expr::Corec& c) { return "corec(" + c.machine + "," + c.seed + ")"; },
      },
      e.node);
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

Defs Defs::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidDefinition, std::string("defs: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidDefinition, "defs: top level must be an object");

  Defs d;
  const auto& alpha = field(j, "alphabet", "defs");
  if (!alpha.is_array()) throw Error(ErrorCode::InvalidDefinition, "alphabet: expected an array");
  std::vector<std::string> symbols;
  for (std::size_t i = 0; i < alpha.size(); ++i) symbols.push_back(name_at(alpha[i], "alphabet[" + std::to_string(i) + "]"));
  d.alphabet = Alphabet(std::move(symbols));

  if (j.contains("functions")) {
    const auto& fns = j["functions"];
    if (!fns.is_object()) throw Error(ErrorCode::InvalidDefinition, "functions: expected an object");
    for (const auto& [name, table] : fns.items()) {
      const std::string where = "functions." + name;
      if (!is_identifier(name)) throw Error(ErrorCode::InvalidDefinition, where + ": not an identifier");
      if (!table.is_object()) throw Error(ErrorCode::InvalidDefinition, where + ": expected an object");
      std::map<std::string, std::string> t;
      for (const auto& [x, y] : table.items()) t[x] = name_at(y, where + "." + x);
      try {
        d.functions.emplace(name, std::make_shared<const AtomFun>(name, std::move(t), d.alphabet));
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidDefinition, where + ": " + e.what());
      }
    }
  }

  if (j.contains("machines")) {
    const auto& ms = j["machines"];
    if (!ms.is_object()) throw Error(ErrorCode::InvalidDefinition, "machines: expected an object");
    for (const auto& [name, m] : ms.items()) {
      const std::string where = "machines." + name;
      if (!is_identifier(name)) throw Error(ErrorCode::InvalidDefinition, where + ": not an identifier");
      const auto& seeds_j = field(m, "seeds", where);
      if (!seeds_j.is_array()) throw Error(ErrorCode::InvalidDefinition, where + ".seeds: expected an array");
      std::vector<std::string> seeds;
      for (std::size_t i = 0; i < seeds_j.size(); ++i)
        seeds.push_back(name_at(seeds_j[i], where + ".seeds[" + std::to_string(i) + "]"));
      const auto& step_j = field(m, "step", where);
      if (!step_j.is_object()) throw Error(ErrorCode::InvalidDefinition, where + ".step: expected an object");
      std::map<std::string, StepResult> table;
      for (const auto& [seed, r] : step_j.items()) {
        const std::string at = where + ".step." + seed;
        if (r.is_string() && r.get<std::string>() == "stop") {
          table.emplace(seed, Stop{});
          continue;
        }
        if (!r.is_object() || !r.contains("emit") || !r["emit"].is_array() || r["emit"].size() != 2)
          throw Error(ErrorCode::InvalidDefinition, at + ": expected \"stop\" or {\"emit\": [symbol, seed]}");
        auto sym = name_at(r["emit"][0], at + ".emit[0]");
        if (!d.alphabet.contains(sym))
          throw Error(ErrorCode::InvalidDefinition, at + ": symbol '" + sym + "' is not in the alphabet");
        table.emplace(seed, Emit{Symbol{sym}, name_at(r["emit"][1], at + ".emit[1]")});
      }
      try {
        d.machines.emplace(name, std::make_shared<const StepFn>(name, std::move(seeds), std::move(table)));
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidDefinition, where + ": " + e.what());
      }
    }
  }
  return d;
}

CoList elaborate(const Expr& e, const Defs& d) {
  auto symbol = [&](const std::string& s) {
    if (!d.alphabet.contains(s)) throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + s + "'");
    return Symbol{s};
  };
  auto function = [&](const std::string& f) {
    auto it = d.functions.find(f);
    if (it == d.functions.end()) throw Error(ErrorCode::UnknownFunction, "unknown function '" + f + "'");
    return it->second;
  };
  return std::visit(
      overloaded{
          [](const expr::Nil&) { return nil(); },
          [&](const expr::Cons& c) { return cons(symbol(c.symbol), elaborate(*c.tail, d)); },
          [&](const expr::Lconst& c) { return lconst(symbol(c.symbol)); },
          [&](const expr::Iterates& c) { return iterates(function(c.fn), symbol(c.symbol)); },
          [&](const expr::Map& c) { return lmap(function(c.fn), elaborate(*c.inner, d)); },
          [&](const expr::Append& c) { return lappend(elaborate(*c.first, d), elaborate(*c.second, d)); },
          [&](const expr::Corec& c) {
            auto it = d.machines.find(c.machine);
            if (it == d.machines.end()) throw Error(ErrorCode::UnknownMachine, "unknown machine '" + c.machine + "'");
            return corec(c.seed, it->second);
          },
      },
      e.node);
}

}  // namespace coind
