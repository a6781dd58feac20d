#include "kad/hoare.hpp"

#include <cctype>

namespace kad {

TestExpr TestExpr::make(Kind k, std::vector<TestExpr> args) {
  return TestExpr(std::make_shared<const Node>(Node{k, {}, std::move(args)}));
}

TestExpr::TestExpr() : TestExpr(truth()) {}

TestExpr TestExpr::atom(std::string name) {
  return TestExpr(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}}));
}
TestExpr TestExpr::truth() { return make(Kind::truth, {}); }
TestExpr TestExpr::falsity() { return make(Kind::falsity, {}); }

TestExpr operator&&(const TestExpr& l, const TestExpr& r) {
  return TestExpr::make(TestExpr::Kind::conj, {l, r});
}
TestExpr operator||(const TestExpr& l, const TestExpr& r) {
  return TestExpr::make(TestExpr::Kind::disj, {l, r});
}
TestExpr operator!(const TestExpr& t) { return TestExpr::make(TestExpr::Kind::neg, {t}); }

std::string TestExpr::to_string() const {
  switch (kind()) {
    case Kind::atom: return name();
    case Kind::truth: return "true";
    case Kind::falsity: return "false";
    case Kind::conj: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Kind::disj: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
    case Kind::neg: return "!" + arg().to_string();
  }
  return "?";
}

bool operator==(const TestExpr& a, const TestExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name) return false;
  return a.node_->args == b.node_->args;
}

Program::Program() : Program(skip()) {}

Program Program::prim(std::string name) {
  return Program(std::make_shared<const Node>(Node{Kind::prim, std::move(name), {}, {}}));
}
Program Program::skip() { return Program(std::make_shared<const Node>(Node{Kind::skip, {}, {}, {}})); }
Program Program::seq(Program a, Program b) {
  return Program(std::make_shared<const Node>(Node{Kind::seq, {}, {}, {std::move(a), std::move(b)}}));
}
Program Program::cond(TestExpr p, Program a, Program b) {
  return Program(
      std::make_shared<const Node>(Node{Kind::cond, {}, std::move(p), {std::move(a), std::move(b)}}));
}
Program Program::loop(TestExpr p, Program a) {
  return Program(std::make_shared<const Node>(Node{Kind::loop, {}, std::move(p), {std::move(a)}}));
}

std::string Program::to_string() const {
  switch (kind()) {
    case Kind::prim: return name();
    case Kind::skip: return "skip";
    case Kind::seq: return "(" + first().to_string() + " ; " + second().to_string() + ")";
    case Kind::cond:
      return "(if " + guard().to_string() + " then " + first().to_string() + " else " +
             second().to_string() + ")";
    case Kind::loop: return "(while " + guard().to_string() + " do " + body().to_string() + ")";
  }
  return "?";
}

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name) return false;
  if (a.node_->guard.has_value() != b.node_->guard.has_value()) return false;
  if (a.node_->guard && !(*a.node_->guard == *b.node_->guard)) return false;
  return a.node_->args == b.node_->args;
}

std::string HoareTriple::to_string() const {
  return "{" + pre.to_string() + "} " + prog.to_string() + " {" + post.to_string() + "}";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::axiom: return "axiom";
    case Rule::composition: return "composition";
    case Rule::conditional: return "conditional";
    case Rule::loop: return "while";
    case Rule::weakening: return "weakening";
  }
  return "?";
}

namespace {

struct Token {
  enum Kind { ident, sym, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::ident, s.substr(start, i - start), start});
    } else if (s.compare(i, 2, ":=") == 0) {
      out.push_back({Token::sym, ":=", i});
      i += 2;
    } else if (std::string("(){};!&|=").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::sym, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw parse_error("unexpected character '" + std::string(1, static_cast<char>(c)) +
                        "' at offset " + std::to_string(i));
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

bool is_keyword(const std::string& w) {
  return w == "skip" || w == "if" || w == "then" || w == "else" || w == "while" || w == "do" ||
         w == "true" || w == "false";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  TestExpr test() {
    TestExpr t = conj();
    while (accept("|")) t = t || conj();
    return t;
  }

  Program program() {
    Program p = statement();
    while (accept(";")) p = Program::seq(p, statement());
    return p;
  }

  HoareTriple triple() {
    expect("{");
    TestExpr pre = test();
    expect("}");
    Program prog = program();
    expect("{");
    TestExpr post = test();
    expect("}");
    return {pre, prog, post};
  }

  void finish() {
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error(what + " at offset " + std::to_string(peek().pos));
  }

  bool accept(const std::string& sym) {
    if (peek().kind != Token::end && peek().text == sym) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(const std::string& sym) {
    if (!accept(sym)) {
      fail("expected '" + sym + "'" + (peek().kind == Token::end ? " before end of input"
                                                                  : ", found '" + peek().text + "'"));
    }
  }

  TestExpr conj() {
    TestExpr t = unary();
    while (accept("&")) t = t && unary();
    return t;
  }

  TestExpr unary() {
    if (accept("!")) return !unary();
    if (accept("(")) {
      TestExpr t = test();
      expect(")");
      return t;
    }
    if (accept("true")) return TestExpr::truth();
    if (accept("false")) return TestExpr::falsity();
    if (peek().kind == Token::ident && !is_keyword(peek().text)) return TestExpr::atom(toks_[i_++].text);
    fail("expected a test");
  }

  Program statement() {
    if (accept("skip")) return Program::skip();
    if (accept("(")) {
      Program p = program();
      expect(")");
      return p;
    }
    if (accept("if")) {
      TestExpr p = test();
      expect("then");
      Program a = statement();
      expect("else");
      Program b = statement();
      return Program::cond(p, a, b);
    }
    if (accept("while")) {
      TestExpr p = test();
      expect("do");
      return Program::loop(p, statement());
    }
    if (peek().kind == Token::ident && !is_keyword(peek().text)) {
      if (peek(1).text == ":=" || peek(1).text == "=") {
        fail("assignment '" + peek().text + " " + peek(1).text +
             " ...' is not supported: propositional Hoare logic has no assignment rule");
      }
      return Program::prim(toks_[i_++].text);
    }
    fail("expected a statement");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

TestExpr parse_test(const std::string& text) {
  Parser p(text);
  TestExpr t = p.test();
  p.finish();
  return t;
}

Program parse_program(const std::string& text) {
  Parser p(text);
  Program prog = p.program();
  p.finish();
  return prog;
}

HoareTriple parse_triple(const std::string& text) {
  Parser p(text);
  HoareTriple t = p.triple();
  p.finish();
  return t;
}

}  // namespace kad
