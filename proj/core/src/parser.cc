// Copyright 2026 The cypherdiff Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cypherdiff/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "cypherdiff/errors.h"

namespace cypherdiff {
namespace {

enum class TokenKind { kIdent, kInteger, kFloat, kString, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // identifier/symbol text, or decoded string literal
  std::size_t pos = 0;
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    Token token;
    token.pos = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_')) {
        ++j;
      }
      token.kind = TokenKind::kIdent;
      token.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (c == '`') {
      const std::size_t close = text.find('`', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated quoted identifier", i);
      }
      token.kind = TokenKind::kIdent;
      token.text = std::string(text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      bool is_float = false;
      if (j + 1 < n && text[j] == '.' &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        is_float = true;
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < n && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
          is_float = true;
          j = k;
          while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
      }
      token.kind = is_float ? TokenKind::kFloat : TokenKind::kInteger;
      token.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (c == '\'' || c == '"') {
      const char quote = c;
      std::string decoded;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n) {
        if (text[j] == '\\' && j + 1 < n) {
          decoded += text[j + 1];
          j += 2;
          continue;
        }
        if (text[j] == quote) {
          closed = true;
          ++j;
          break;
        }
        decoded += text[j++];
      }
      if (!closed) throw ParseError("unterminated string literal", i);
      token.kind = TokenKind::kString;
      token.text = std::move(decoded);
      i = j;
    } else {
      token.kind = TokenKind::kSymbol;
      std::string_view two = text.substr(i, 2);
      if (two == "<>" || two == "<=" || two == ">=" || two == "!=") {
        token.text = std::string(two);
        i += 2;
      } else {
        token.text = std::string(1, c);
        i += 1;
      }
    }
    tokens.push_back(std::move(token));
  }
  tokens.push_back(Token{TokenKind::kEnd, "", n});
  return tokens;
}

constexpr std::string_view kUnsupportedClauseWords[] = {
    "UNION",  "CALL",    "CREATE", "MERGE", "SET",  "DELETE",
    "DETACH", "REMOVE",  "FOREACH", "LOAD", "USE",  "SHOW",
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Query query() {
    Query q;
    while (true) {
      const Token& t = peek();
      if (t.kind == TokenKind::kEnd) {
        throw ParseError("query must end with RETURN", t.pos);
      }
      if (keyword("RETURN")) {
        q.clauses.emplace_back(return_clause());
        break;
      }
      q.clauses.push_back(clause());
    }
    if (peek_symbol(";")) advance();
    const Token& rest = peek();
    if (rest.kind != TokenKind::kEnd) {
      if (is_unsupported_clause_word(rest)) {
        throw ParseError("unsupported construct " + rest.text, rest.pos, true);
      }
      throw ParseError("unexpected trailing input '" + rest.text + "'", rest.pos);
    }
    return q;
  }

  std::vector<Pattern> create_statement() {
    std::vector<Pattern> patterns;
    if (peek().kind == TokenKind::kEnd) return patterns;
    expect_keyword("CREATE");
    patterns.push_back(pattern());
    while (peek_symbol(",")) {
      advance();
      patterns.push_back(pattern());
    }
    if (peek_symbol(";")) advance();
    if (peek().kind != TokenKind::kEnd) {
      throw ParseError("unexpected trailing input", peek().pos);
    }
    return patterns;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[std::min(index_++, tokens_.size() - 1)]; }

  bool peek_keyword(std::string_view word, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::kIdent && iequals(t.text, word);
  }
  bool keyword(std::string_view word) {
    if (!peek_keyword(word)) return false;
    advance();
    return true;
  }
  void expect_keyword(std::string_view word) {
    if (!keyword(word)) {
      throw ParseError("expected " + std::string(word), peek().pos);
    }
  }
  bool peek_symbol(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::kSymbol && t.text == s;
  }
  void expect_symbol(std::string_view s) {
    if (!peek_symbol(s)) {
      throw ParseError("expected '" + std::string(s) + "'", peek().pos);
    }
    advance();
  }
  std::string identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != TokenKind::kIdent) {
      throw ParseError(std::string("expected ") + what, t.pos);
    }
    advance();
    return t.text;
  }

  static bool is_unsupported_clause_word(const Token& t) {
    if (t.kind != TokenKind::kIdent) return false;
    return std::any_of(std::begin(kUnsupportedClauseWords),
                       std::end(kUnsupportedClauseWords),
                       [&](std::string_view w) { return iequals(t.text, w); });
  }

  [[noreturn]] void unsupported(const std::string& what, std::size_t pos) {
    throw ParseError("unsupported construct " + what, pos, true);
  }

  Clause clause() {
    const Token& t = peek();
    if (keyword("OPTIONAL")) {
      expect_keyword("MATCH");
      return match_clause(true);
    }
    if (keyword("MATCH")) return match_clause(false);
    if (keyword("WITH")) {
      WithClause with;
      with.items = return_list();
      if (keyword("WHERE")) with.where = expression();
      if (peek_keyword("ORDER") || peek_keyword("SKIP") || peek_keyword("LIMIT")) {
        unsupported("ORDER BY/SKIP/LIMIT on WITH", peek().pos);
      }
      return with;
    }
    if (keyword("UNWIND")) {
      UnwindClause unwind;
      unwind.expr = expression();
      expect_keyword("AS");
      unwind.alias = identifier("alias");
      return unwind;
    }
    if (is_unsupported_clause_word(t)) unsupported(t.text, t.pos);
    throw ParseError("expected a clause, found '" + t.text + "'", t.pos);
  }

  MatchClause match_clause(bool optional) {
    MatchClause match;
    match.optional = optional;
    match.patterns.push_back(pattern());
    while (peek_symbol(",")) {
      advance();
      match.patterns.push_back(pattern());
    }
    if (keyword("WHERE")) match.where = expression();
    return match;
  }

  ReturnClause return_clause() {
    ReturnClause ret;
    ret.items = return_list();
    if (keyword("ORDER")) {
      expect_keyword("BY");
      do {
        SortItem item;
        item.expr = expression();
        if (keyword("DESC") || keyword("DESCENDING")) {
          item.descending = true;
        } else if (keyword("ASC") || keyword("ASCENDING")) {
          item.descending = false;
        }
        ret.order_by.push_back(std::move(item));
      } while (peek_symbol(",") && (advance(), true));
    }
    if (keyword("SKIP")) ret.skip = count_literal();
    if (keyword("LIMIT")) ret.limit = count_literal();
    return ret;
  }

  std::int64_t count_literal() {
    const Token& t = peek();
    if (t.kind != TokenKind::kInteger) {
      throw ParseError("expected a non-negative integer", t.pos);
    }
    advance();
    return parse_int(t);
  }

  ReturnList return_list() {
    ReturnList list;
    if (peek_keyword("DISTINCT")) unsupported("DISTINCT", peek().pos);
    if (peek_symbol("*")) {
      advance();
      list.star = true;
      if (peek_symbol(",")) unsupported("'*' combined with items", peek().pos);
      return list;
    }
    do {
      ReturnItem item;
      item.expr = expression();
      if (keyword("AS")) item.alias = identifier("alias");
      list.items.push_back(std::move(item));
    } while (peek_symbol(",") && (advance(), true));
    return list;
  }

  Pattern pattern() {
    if (peek().kind == TokenKind::kIdent && peek_symbol("=", 1)) {
      unsupported("path variable", peek().pos);
    }
    Pattern p;
    p.nodes.push_back(node_pattern());
    while (peek_symbol("-") || peek_symbol("<")) {
      p.rels.push_back(rel_pattern());
      p.nodes.push_back(node_pattern());
    }
    return p;
  }

  NodePattern node_pattern() {
    expect_symbol("(");
    NodePattern node;
    if (peek().kind == TokenKind::kIdent) node.variable = advance().text;
    while (peek_symbol(":")) {
      advance();
      node.labels.push_back(identifier("label"));
    }
    if (peek_symbol("{")) node.properties = property_map();
    if (peek_symbol("$")) unsupported("parameter", peek().pos);
    expect_symbol(")");
    return node;
  }

  RelPattern rel_pattern() {
    RelPattern rel;
    const std::size_t start = peek().pos;
    bool left = false;
    if (peek_symbol("<")) {
      advance();
      left = true;
    }
    expect_symbol("-");
    if (peek_symbol("[")) {
      advance();
      if (peek().kind == TokenKind::kIdent) rel.variable = advance().text;
      if (peek_symbol(":")) {
        advance();
        rel.types.push_back(identifier("relationship type"));
        while (peek_symbol("|")) {
          advance();
          if (peek_symbol(":")) advance();
          rel.types.push_back(identifier("relationship type"));
        }
      }
      if (peek_symbol("*")) unsupported("variable-length relationship", peek().pos);
      if (peek_symbol("{")) rel.properties = property_map();
      if (peek_symbol("$")) unsupported("parameter", peek().pos);
      expect_symbol("]");
    }
    expect_symbol("-");
    bool right = false;
    if (peek_symbol(">")) {
      advance();
      right = true;
    }
    if (left && right) throw ParseError("relationship points both ways", start);
    rel.direction = left    ? Direction::kLeft
                    : right ? Direction::kRight
                            : Direction::kUndirected;
    return rel;
  }

  PropertyMap property_map() {
    expect_symbol("{");
    PropertyMap map;
    if (!peek_symbol("}")) {
      do {
        std::string key = identifier("property key");
        expect_symbol(":");
        if (peek_symbol("$")) unsupported("parameter", peek().pos);
        const std::size_t pos = peek().pos;
        ExprPtr value = expression();
        if (value->op != ExprOp::kLiteral) {
          unsupported("non-literal property map value", pos);
        }
        map.emplace_back(std::move(key), value->literal);
      } while (peek_symbol(",") && (advance(), true));
    }
    expect_symbol("}");
    return map;
  }

  // ---- expressions ----------------------------------------------------

  ExprPtr expression() { return or_expr(); }

  ExprPtr or_expr() {
    ExprPtr lhs = xor_expr();
    while (keyword("OR")) lhs = Expression::binary(ExprOp::kOr, lhs, xor_expr());
    return lhs;
  }

  ExprPtr xor_expr() {
    ExprPtr lhs = and_expr();
    while (keyword("XOR")) lhs = Expression::binary(ExprOp::kXor, lhs, and_expr());
    return lhs;
  }

  ExprPtr and_expr() {
    ExprPtr lhs = not_expr();
    while (keyword("AND")) lhs = Expression::binary(ExprOp::kAnd, lhs, not_expr());
    return lhs;
  }

  ExprPtr not_expr() {
    if (keyword("NOT")) return Expression::unary(ExprOp::kNot, not_expr());
    return comparison();
  }

  std::optional<ExprOp> comparison_op() const {
    const Token& t = peek();
    if (t.kind != TokenKind::kSymbol) return std::nullopt;
    if (t.text == "=") return ExprOp::kEq;
    if (t.text == "<>" || t.text == "!=") return ExprOp::kNe;
    if (t.text == "<") {
      // "<-" begins a relationship pattern, never a comparison here.
      return ExprOp::kLt;
    }
    if (t.text == "<=") return ExprOp::kLe;
    if (t.text == ">") return ExprOp::kGt;
    if (t.text == ">=") return ExprOp::kGe;
    return std::nullopt;
  }

  ExprPtr comparison() {
    ExprPtr lhs = predicate();
    if (auto op = comparison_op()) {
      advance();
      lhs = Expression::binary(*op, lhs, predicate());
      if (comparison_op()) unsupported("chained comparison", peek().pos);
    }
    return lhs;
  }

  ExprPtr predicate() {
    ExprPtr lhs = additive();
    while (true) {
      if (peek_keyword("STARTS") && peek_keyword("WITH", 1)) {
        advance();
        advance();
        lhs = Expression::binary(ExprOp::kStartsWith, lhs, additive());
      } else if (peek_keyword("ENDS") && peek_keyword("WITH", 1)) {
        advance();
        advance();
        lhs = Expression::binary(ExprOp::kEndsWith, lhs, additive());
      } else if (keyword("CONTAINS")) {
        lhs = Expression::binary(ExprOp::kContains, lhs, additive());
      } else if (peek_keyword("IS")) {
        advance();
        const bool negated = keyword("NOT");
        expect_keyword("NULL");
        lhs = Expression::unary(negated ? ExprOp::kIsNotNull : ExprOp::kIsNull, lhs);
      } else if (peek_keyword("IN") || peek_symbol("=~")) {
        unsupported("IN / regular expression predicate", peek().pos);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (peek_symbol("+") || peek_symbol("-")) {
      const ExprOp op = advance().text == "+" ? ExprOp::kAdd : ExprOp::kSub;
      lhs = Expression::binary(op, lhs, multiplicative());
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (true) {
      if (peek_symbol("*")) {
        advance();
        lhs = Expression::binary(ExprOp::kMul, lhs, unary());
      } else if (peek_symbol("/") || peek_symbol("%") || peek_symbol("^")) {
        unsupported("operator " + peek().text, peek().pos);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (peek_symbol("-")) {
      const Token& minus = advance();
      const Token& t = peek();
      if (t.kind == TokenKind::kInteger) {
        advance();
        return Expression::lit(Value::integer(parse_int(t, true)));
      }
      if (t.kind == TokenKind::kFloat) {
        advance();
        return Expression::lit(Value::floating(-parse_float(t)));
      }
      unsupported("unary minus on a non-literal", minus.pos);
    }
    if (peek_symbol("+")) unsupported("unary plus", peek().pos);
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr base = atom();
    while (peek_symbol(".")) {
      const std::size_t pos = advance().pos;
      std::string key = identifier("property key");
      if (base->op != ExprOp::kVariable) {
        unsupported("property access on a non-variable", pos);
      }
      base = Expression::prop(base->variable, std::move(key));
    }
    if (peek_symbol("[")) unsupported("subscript", peek().pos);
    return base;
  }

  static std::int64_t parse_int(const Token& t, bool negative = false) {
    std::string digits = (negative ? "-" : "") + t.text;
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("integer literal out of range", t.pos);
    }
    return value;
  }

  static double parse_float(const Token& t) {
    return std::strtod(t.text.c_str(), nullptr);
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kInteger:
        advance();
        return Expression::lit(Value::integer(parse_int(t)));
      case TokenKind::kFloat:
        advance();
        return Expression::lit(Value::floating(parse_float(t)));
      case TokenKind::kString:
        advance();
        return Expression::lit(Value::text(t.text));
      case TokenKind::kEnd:
        throw ParseError("expected an expression", t.pos);
      case TokenKind::kSymbol:
        if (t.text == "(") {
          advance();
          ExprPtr inner = expression();
          expect_symbol(")");
          return inner;
        }
        if (t.text == "[") {
          advance();
          std::vector<ExprPtr> items;
          if (!peek_symbol("]")) {
            do {
              items.push_back(expression());
            } while (peek_symbol(",") && (advance(), true));
          }
          expect_symbol("]");
          return Expression::list(std::move(items));
        }
        if (t.text == "$") unsupported("parameter", t.pos);
        if (t.text == "{") unsupported("map literal", t.pos);
        throw ParseError("expected an expression, found '" + t.text + "'", t.pos);
      case TokenKind::kIdent:
        break;
    }
    if (iequals(t.text, "true") || iequals(t.text, "false")) {
      advance();
      return Expression::lit(Value::boolean(iequals(t.text, "true")));
    }
    if (iequals(t.text, "null")) {
      advance();
      return Expression::lit(Value::null());
    }
    if (iequals(t.text, "CASE") || iequals(t.text, "EXISTS")) {
      unsupported(t.text, t.pos);
    }
    if (peek_symbol("(", 1)) return function_call();
    if (peek_symbol(":", 1)) unsupported("label predicate", t.pos);
    advance();
    return Expression::var(t.text);
  }

  ExprPtr function_call() {
    const Token& name = advance();
    static constexpr std::pair<std::string_view, ExprOp> kAggregates[] = {
        {"count", ExprOp::kCount}, {"max", ExprOp::kMax}, {"min", ExprOp::kMin},
        {"sum", ExprOp::kSum},     {"avg", ExprOp::kAvg},
    };
    std::optional<ExprOp> op;
    for (const auto& [word, candidate] : kAggregates) {
      if (iequals(name.text, word)) op = candidate;
    }
    if (!op) unsupported("function " + name.text, name.pos);
    expect_symbol("(");
    if (peek_keyword("DISTINCT")) unsupported("DISTINCT aggregate", peek().pos);
    if (peek_symbol("*")) unsupported("count(*)", peek().pos);
    ExprPtr arg = expression();
    if (peek_symbol(",")) unsupported("multi-argument function", peek().pos);
    expect_symbol(")");
    return Expression::unary(*op, std::move(arg));
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Query parse_query(std::string_view text) { return Parser(text).query(); }

std::vector<Pattern> parse_create_statement(std::string_view text) {
  return Parser(text).create_statement();
}

}  // namespace cypherdiff
