// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramcat/circuit.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace paramcat {

namespace {

struct Token {
  enum class Kind {
    name,      // identifier (gate names, "params", "pi", "t0")
    number,    // numeric literal
    integer,   // digits only (subset of number, tracked for dims)
    lparen,
    rparen,
    semi,
    pipe,
    plus,
    minus,
    star,
    comma,
    end
  };
  Kind kind;
  std::string text;
  double value = 0.0;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      SourceSpan span{line_, col_, 1};
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
          name += advance();
        span.length = name.size();
        out.push_back({Token::Kind::name, name, 0.0, span});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::string num;
        bool integral = true;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
                ((text_[pos_] == '+' || text_[pos_] == '-') && !num.empty() &&
                 (num.back() == 'e' || num.back() == 'E')))) {
          if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
            integral = false;
          num += advance();
        }
        span.length = num.size();
        double v;
        try {
          v = std::stod(num);
        } catch (const std::exception&) {
          throw CircuitError("malformed number '" + num + "'", span);
        }
        out.push_back({integral ? Token::Kind::integer : Token::Kind::number,
                       num, v, span});
      } else {
        Token::Kind k;
        switch (c) {
          case '(': k = Token::Kind::lparen; break;
          case ')': k = Token::Kind::rparen; break;
          case ';': k = Token::Kind::semi; break;
          case '|': k = Token::Kind::pipe; break;
          case '+': k = Token::Kind::plus; break;
          case '-': k = Token::Kind::minus; break;
          case '*': k = Token::Kind::star; break;
          case ',': k = Token::Kind::comma; break;
          default:
            throw CircuitError(std::string("unexpected character '") + c + "'",
                               span);
        }
        advance();
        out.push_back({k, std::string(1, c), 0.0, span});
      }
    }
    out.push_back({Token::Kind::end, "<end>", 0.0, {line_, col_, 0}});
    return out;
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Circuit run() {
    Circuit c;
    expect_name("params");
    const Token& n = expect(Token::Kind::integer, "parameter count");
    c.params = static_cast<std::size_t>(n.value);
    c.body = parse_circuit();
    expect(Token::Kind::end, "end of input");
    check_params(c.body, c.params);
    return c;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool at(Token::Kind k) const { return peek().kind == k; }

  const Token& expect(Token::Kind k, const std::string& what) {
    if (!at(k))
      throw CircuitError("expected " + what + ", found '" + peek().text + "'",
                         peek().span);
    return take();
  }

  void expect_name(const std::string& name) {
    if (!at(Token::Kind::name) || peek().text != name)
      throw CircuitError("expected '" + name + "', found '" + peek().text + "'",
                         peek().span);
    take();
  }

  CircuitAst parse_circuit() {
    CircuitAst first = parse_term();
    if (!at(Token::Kind::semi)) return first;
    CircuitAst seq{CircuitAst::Kind::seq, first.span, {std::move(first)}, "", {}, {}};
    while (at(Token::Kind::semi)) {
      take();
      seq.children.push_back(parse_term());
    }
    return seq;
  }

  CircuitAst parse_term() {
    CircuitAst first = parse_factor();
    if (!at(Token::Kind::pipe)) return first;
    CircuitAst par{CircuitAst::Kind::par, first.span, {std::move(first)}, "", {}, {}};
    while (at(Token::Kind::pipe)) {
      take();
      par.children.push_back(parse_factor());
    }
    return par;
  }

  CircuitAst parse_factor() {
    if (at(Token::Kind::lparen)) {
      take();
      CircuitAst inner = parse_circuit();
      expect(Token::Kind::rparen, "')'");
      return inner;
    }
    const Token& name = expect(Token::Kind::name, "gate name");
    CircuitAst g{CircuitAst::Kind::gate, name.span, {}, name.text, {}, {}};
    if (at(Token::Kind::lparen)) {
      take();
      if (g.name == "id" || g.name == "swap") {
        g.dims.push_back(parse_dim());
        if (at(Token::Kind::comma)) {
          take();
          g.dims.push_back(parse_dim());
        }
      } else {
        g.angle = parse_expr();
      }
      expect(Token::Kind::rparen, "')'");
    }
    return g;
  }

  std::size_t parse_dim() {
    const Token& t = expect(Token::Kind::integer, "dimension");
    const auto n = static_cast<std::size_t>(t.value);
    if (n == 0) throw CircuitError("dimension must be >= 1", t.span);
    return n;
  }

  AffineExpr parse_expr() {
    AffineExpr e = parse_prod();
    while (at(Token::Kind::plus) || at(Token::Kind::minus)) {
      const bool minus = take().kind == Token::Kind::minus;
      AffineExpr rhs = parse_prod();
      e = minus ? e - rhs : e + rhs;
    }
    return e;
  }

  // prod := NUM ["*" PARAM] | PARAM ; NUM := number | integer | "pi"
  AffineExpr parse_prod() {
    if (at(Token::Kind::name)) {
      const Token& t = peek();
      if (t.text == "pi") {
        take();
        return AffineExpr::constant(M_PI);
      }
      return AffineExpr::param(parse_param_index());
    }
    if (at(Token::Kind::number) || at(Token::Kind::integer)) {
      const double v = take().value;
      if (at(Token::Kind::star)) {
        take();
        if (at(Token::Kind::name) && peek().text == "pi") {
          take();
          return AffineExpr::constant(v * M_PI);
        }
        return AffineExpr::param(parse_param_index(), v);
      }
      return AffineExpr::constant(v);
    }
    throw CircuitError("expected number or parameter, found '" + peek().text +
                           "'",
                       peek().span);
  }

  std::size_t parse_param_index() {
    const Token& t = expect(Token::Kind::name, "parameter (tN)");
    if (t.text.size() < 2 || t.text[0] != 't')
      throw CircuitError("expected parameter like t0, found '" + t.text + "'",
                         t.span);
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
        throw CircuitError("expected parameter like t0, found '" + t.text + "'",
                           t.span);
    return static_cast<std::size_t>(std::stoul(t.text.substr(1)));
  }

  static void check_params(const CircuitAst& ast, std::size_t n) {
    if (ast.kind == CircuitAst::Kind::gate) {
      if (ast.angle && ast.angle->min_arity() > n) {
        const std::size_t bad = ast.angle->min_arity() - 1;
        throw CircuitError("parameter t" + std::to_string(bad) +
                               " out of range (params " + std::to_string(n) +
                               ")",
                           ast.span);
      }
      return;
    }
    for (const auto& c : ast.children) check_params(c, n);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_ast(const CircuitAst& ast, std::string& out, int parent_prec) {
  // seq binds looser (prec 0) than par (prec 1) than atoms (prec 2).
  switch (ast.kind) {
    case CircuitAst::Kind::seq: {
      const bool paren = parent_prec > 0;
      if (paren) out += '(';
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) out += " ; ";
        print_ast(ast.children[i], out, 1);
      }
      if (paren) out += ')';
      break;
    }
    case CircuitAst::Kind::par: {
      const bool paren = parent_prec > 1;
      if (paren) out += '(';
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) out += " | ";
        print_ast(ast.children[i], out, 2);
      }
      if (paren) out += ')';
      break;
    }
    case CircuitAst::Kind::gate:
      out += ast.name;
      if (ast.angle) {
        out += '(' + ast.angle->to_string() + ')';
      } else if (!ast.dims.empty()) {
        out += '(';
        for (std::size_t i = 0; i < ast.dims.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(ast.dims[i]);
        }
        out += ')';
      }
      break;
  }
}

ParamMor<MatrixBackend> elaborate_ast(const MatrixBackend& bk,
                                      const CircuitAst& ast) {
  switch (ast.kind) {
    case CircuitAst::Kind::seq: {
      auto acc = elaborate_ast(bk, ast.children[0]);
      for (std::size_t i = 1; i < ast.children.size(); ++i) {
        auto next = elaborate_ast(bk, ast.children[i]);
        if (acc.cod != next.dom)
          throw CircuitError(
              "dimension mismatch at ';': left yields dim " +
                  std::to_string(acc.cod) + " (at " +
                  ast.children[i - 1].span.to_string() +
                  ") but right expects dim " + std::to_string(next.dom),
              ast.children[i].span);
        acc = compose(bk, next, acc);  // diagram order: later gate applied after
      }
      return acc;
    }
    case CircuitAst::Kind::par: {
      auto acc = elaborate_ast(bk, ast.children[0]);
      for (std::size_t i = 1; i < ast.children.size(); ++i)
        acc = tensor(bk, acc, elaborate_ast(bk, ast.children[i]));
      return acc;
    }
    case CircuitAst::Kind::gate: {
      if (ast.name == "id") {
        if (ast.dims.size() != 1)
          throw CircuitError("id takes one dimension, e.g. id(2)", ast.span);
        return identity(bk, MatrixBackend::make_dim(ast.dims[0]));
      }
      if (ast.name == "swap") {
        if (ast.dims.size() != 2)
          throw CircuitError("swap takes two dimensions, e.g. swap(2,2)",
                             ast.span);
        return braiding(bk, MatrixBackend::make_dim(ast.dims[0]),
                        MatrixBackend::make_dim(ast.dims[1]));
      }
      try {
        return gate(bk, ast.name, ast.angle);
      } catch (const GateError& e) {
        throw CircuitError(e.what(), ast.span);
      }
    }
  }
  throw CircuitError("unreachable", ast.span);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

std::string pretty_print(const Circuit& c) {
  std::string out = "params " + std::to_string(c.params) + "\n";
  print_ast(c.body, out, 0);
  out += "\n";
  return out;
}

ParamMor<MatrixBackend> elaborate(const MatrixBackend& bk, const Circuit& c) {
  return elaborate_ast(bk, c.body);
}

}  // namespace paramcat
