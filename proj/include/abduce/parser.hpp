// Line-oriented parsers for KB documents, ABox/hypothesis files, single
// assertions, and signature files. Reports 1-based line/column positions.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abduce/core.hpp"

namespace abduce {
namespace detail {

inline bool reserved_word(std::string_view t) {
  return t == "top" || t == "bot" || t == "and" || t == "some" || t == "not" || t == "inv" ||
         t == "role";
}

struct Token {
  enum Type { Ident, LParen, RParen, Comma, Arrow, End };
  Type type;
  std::string text;
  int column;
};

inline std::vector<Token> tokenize_line(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", col});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Comma, ",", col});
      ++i;
    } else if (c == '<' && i + 1 < line.size() && line[i + 1] == '=') {
      out.push_back({Token::Arrow, "<=", col});
      i += 2;
    } else {
      throw SyntaxError(lineno, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

// Recursive-descent parser over one tokenized line.
class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int lineno) : toks_(std::move(tokens)), line_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().type == Token::End; }

  SyntaxError error(const std::string& msg) const { return SyntaxError(line_, peek().column, msg); }

  Token expect(Token::Type type, const std::string& what) {
    if (peek().type != type) throw error("expected " + what);
    return next();
  }

  std::string expect_name(const std::string& what) {
    Token t = expect(Token::Ident, what);
    if (reserved_word(t.text)) throw SyntaxError(line_, t.column, "'" + t.text + "' is a reserved word");
    return t.text;
  }

  void expect_done() {
    if (!at_end()) throw error("unexpected trailing input");
  }

  Role parse_role() {
    Token t = expect(Token::Ident, "role name");
    if (t.text == "inv") {
      expect(Token::LParen, "'(' after inv");
      std::string name = expect_name("role name");
      expect(Token::RParen, "')'");
      return {Symbol::role_name(name), true};
    }
    if (reserved_word(t.text)) throw SyntaxError(line_, t.column, "'" + t.text + "' is a reserved word");
    return {Symbol::role_name(t.text), false};
  }

  ConceptRef parse_concept() {
    const Token& t = peek();
    if (t.type == Token::Ident) {
      if (t.text == "top") {
        next();
        return Concept::top();
      }
      if (t.text == "bot") {
        next();
        return Concept::bot();
      }
      if (t.text == "not") {
        next();
        expect(Token::LParen, "'(' after not");
        ConceptRef inner = parse_concept();
        if (inner->kind != ConceptKind::Atomic && inner->kind != ConceptKind::Exists)
          throw error("negation applies only to basic concepts");
        expect(Token::RParen, "')'");
        return Concept::negation(std::move(inner));
      }
      if (reserved_word(t.text)) throw error("'" + t.text + "' is a reserved word");
      next();
      return Concept::atomic(Symbol::concept_name(t.text));
    }
    if (t.type == Token::LParen) {
      next();
      if (peek().type == Token::Ident && peek().text == "some") {
        next();
        Role role = parse_role();
        if (peek().type == Token::RParen) {
          next();
          return Concept::exists(role);
        }
        ConceptRef filler = parse_concept();
        expect(Token::RParen, "')'");
        return Concept::some(role, std::move(filler));
      }
      ConceptRef lhs = parse_concept();
      Token op = expect(Token::Ident, "'and'");
      if (op.text != "and") throw SyntaxError(line_, op.column, "expected 'and'");
      ConceptRef rhs = parse_concept();
      expect(Token::RParen, "')'");
      return Concept::conj(std::move(lhs), std::move(rhs));
    }
    throw error("expected a concept");
  }

  Axiom parse_axiom() {
    if (peek().type == Token::Ident && peek().text == "role") {
      next();
      RoleInclusion ri;
      ri.lhs = parse_role();
      expect(Token::Arrow, "'<='");
      if (peek().type == Token::Ident && peek().text == "not") {
        next();
        expect(Token::LParen, "'(' after not");
        ri.rhs = parse_role();
        ri.rhsNegated = true;
        expect(Token::RParen, "')'");
      } else {
        ri.rhs = parse_role();
      }
      expect_done();
      return ri;
    }
    ConceptInclusion ci;
    ci.lhs = parse_concept();
    expect(Token::Arrow, "'<='");
    ci.rhs = parse_concept();
    expect_done();
    return ci;
  }

  Assertion parse_assertion() {
    std::string pred = expect_name("a concept or role name");
    expect(Token::LParen, "'('");
    std::string first = expect_name("an individual");
    if (peek().type == Token::Comma) {
      next();
      std::string second = expect_name("an individual");
      expect(Token::RParen, "')'");
      expect_done();
      return Assertion::role_assertion(Symbol::role_name(pred), Symbol::individual(first),
                             Symbol::individual(second));
    }
    expect(Token::RParen, "')'");
    expect_done();
    return Assertion::concept_assertion(Symbol::concept_name(pred), Symbol::individual(first));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

// Strips the `#` comment and surrounding whitespace.
inline std::string_view clean_line(std::string_view line) {
  std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
    line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  return line;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view raw = text.substr(start, end - start);
    std::string_view line = clean_line(raw);
    std::size_t indent = line.empty() ? 0 : static_cast<std::size_t>(line.data() - raw.data());
    if (!line.empty()) fn(line, lineno, static_cast<int>(indent));
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace detail

// Parses a KB document (DIALECT line, TBOX section, ABOX section).
inline KB parse_kb(std::string_view text) {
  KB kb;
  bool have_dialect = false, have_tbox = false, have_abox = false;
  std::vector<Assertion> assertions;

  detail::for_each_line(text, [&](std::string_view line, int lineno, int indent) {
    if (!have_dialect) {
      // The dialect name may contain '-', so this line is split on whitespace
      // rather than tokenized.
      std::size_t sp = line.find_first_of(" \t");
      std::string_view head = line.substr(0, sp);
      if (head != "DIALECT") throw SyntaxError(lineno, indent + 1, "expected DIALECT line");
      if (sp == std::string_view::npos)
        throw SyntaxError(lineno, indent + static_cast<int>(line.size()) + 1,
                          "expected dialect name");
      std::string_view rest = line.substr(sp);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
      auto d = dialect_from_string(rest);
      if (!d)
        throw SyntaxError(lineno, indent + static_cast<int>(sp) + 2,
                          "unknown dialect '" + std::string(rest) +
                              "' (dllite-core, dllite-r, elbot)");
      kb.dialect = *d;
      have_dialect = true;
      return;
    }
    auto toks = detail::tokenize_line(line, lineno);
    // Offset token columns by the line's leading indentation.
    for (auto& t : toks) t.column += indent;
    detail::LineParser p(std::move(toks), lineno);
    if (p.peek().type == detail::Token::Ident && p.peek().text == "TBOX") {
      if (have_tbox || have_abox) throw p.error("TBOX section out of order");
      p.next();
      p.expect_done();
      have_tbox = true;
      return;
    }
    if (p.peek().type == detail::Token::Ident && p.peek().text == "ABOX") {
      if (have_abox) throw p.error("duplicate ABOX section");
      p.next();
      p.expect_done();
      have_abox = true;
      return;
    }
    if (have_abox) {
      assertions.push_back(p.parse_assertion());
    } else if (have_tbox) {
      kb.tbox.push_back(p.parse_axiom());
    } else {
      throw p.error("expected a TBOX or ABOX section header");
    }
  });

  if (!have_dialect) throw SyntaxError(1, 1, "empty document: expected DIALECT line");
  kb.abox = ABox(std::move(assertions));
  validate_dialect(kb);
  return kb;
}

// Parses an ABox/hypothesis file: assertion lines, `#` comments.
inline ABox parse_abox(std::string_view text) {
  std::vector<Assertion> assertions;
  detail::for_each_line(text, [&](std::string_view line, int lineno, int indent) {
    auto toks = detail::tokenize_line(line, lineno);
    for (auto& t : toks) t.column += indent;
    detail::LineParser p(std::move(toks), lineno);
    assertions.push_back(p.parse_assertion());
  });
  return ABox(std::move(assertions));
}

// Parses a single assertion such as "High(l)" or "glucoseLevel(patient, l)".
inline Assertion parse_assertion(std::string_view text) {
  detail::LineParser p(detail::tokenize_line(detail::clean_line(text), 1), 1);
  if (p.at_end()) throw SyntaxError(1, 1, "expected an assertion");
  return p.parse_assertion();
}

// Parses a signature file: lines `concept A`, `role r`, `individual a`.
inline Signature parse_signature(std::string_view text) {
  Signature sig;
  detail::for_each_line(text, [&](std::string_view line, int lineno, int indent) {
    auto toks = detail::tokenize_line(line, lineno);
    for (auto& t : toks) t.column += indent;
    detail::LineParser p(std::move(toks), lineno);
    detail::Token kind = p.expect(detail::Token::Ident, "'concept', 'role' or 'individual'");
    std::string name = p.expect_name("a name");
    p.expect_done();
    if (kind.text == "concept")
      sig.concepts.insert(Symbol::concept_name(name));
    else if (kind.text == "role")
      sig.roles.insert(Symbol::role_name(name));
    else if (kind.text == "individual")
      sig.individuals.insert(Symbol::individual(name));
    else
      throw SyntaxError(lineno, kind.column, "expected 'concept', 'role' or 'individual'");
  });
  return sig;
}

}  // namespace abduce
