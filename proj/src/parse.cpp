#include "staralg/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "staralg/errors.hpp"
#include "staralg/poly.hpp"
#include "staralg/weyl.hpp"

namespace staralg {

namespace {

enum class Tok { Number, Imag, Gen, Plus, Minus, Times, Caret, Prime, LParen, RParen, End };

struct Token {
  Tok kind;
  long pos;
  std::string text;        // raw characters, for numbers and messages
  Rational number{0};      // Number
  GenKind gen = GenKind::Q;  // Gen
  int index = 0;             // Gen
};

[[noreturn]] void fail_at(long pos, const std::string& expected) {
  throw StarError(ErrorCode::SyntaxError, expected, pos);
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    long pos = static_cast<long>(i);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        if (j == s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
          fail_at(static_cast<long>(j), "expected digits after '/'");
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      Token t{Tok::Number, pos, s.substr(i, j - i)};
      try {
        t.number = rational_from_string(t.text);
      } catch (const StarError& e) {
        fail_at(pos, e.detail());
      }
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      std::string letters = s.substr(i, j - i);
      std::size_t d = j;
      while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
      std::string digits = s.substr(j, d - j);
      if (letters == "i") {
        if (!digits.empty()) fail_at(pos, "unknown symbol '" + letters + digits + "'");
        out.push_back(Token{Tok::Imag, pos, letters});
        i = j;
        continue;
      }
      GenKind g;
      if (letters == "q")
        g = GenKind::Q;
      else if (letters == "p")
        g = GenKind::P;
      else if (letters == "z")
        g = GenKind::Z;
      else if (letters == "zb")
        g = GenKind::Zb;
      else
        fail_at(pos, "unknown symbol '" + letters + "'");
      if (digits.empty())
        fail_at(pos, "generator '" + letters + "' needs an index");
      if (digits.size() > 9) fail_at(pos, "generator index too large");
      Token t{Tok::Gen, pos, letters + digits};
      t.gen = g;
      t.index = std::stoi(digits);
      out.push_back(std::move(t));
      i = d;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Times; break;
      case '^': k = Tok::Caret; break;
      case '\'': k = Tok::Prime; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        fail_at(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back(Token{k, pos, std::string(1, c)});
    ++i;
  }
  out.push_back(Token{Tok::End, static_cast<long>(s.size()), ""});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }
  bool accept(Tok k) {
    if (toks[at].kind != k) return false;
    ++at;
    return true;
  }

  Expression expr() {
    bool neg = false;
    if (accept(Tok::Minus))
      neg = true;
    else
      accept(Tok::Plus);
    Expression first = term();
    if (neg) first = negate(std::move(first));
    std::vector<Expression> parts;
    parts.push_back(std::move(first));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Expression t = term();
      if (minus) t = negate(std::move(t));
      parts.push_back(std::move(t));
    }
    if (parts.size() == 1) return std::move(parts[0]);
    Expression e;
    e.kind = Expression::Kind::Sum;
    e.pos = parts[0].pos;
    e.children = std::move(parts);
    return e;
  }

  Expression term() {
    std::vector<Expression> parts;
    parts.push_back(factor());
    while (accept(Tok::Times)) parts.push_back(factor());
    if (parts.size() == 1) return std::move(parts[0]);
    Expression e;
    e.kind = Expression::Kind::Product;
    e.pos = parts[0].pos;
    e.children = std::move(parts);
    return e;
  }

  Expression factor() {
    Expression a = atom();
    for (;;) {
      if (accept(Tok::Caret)) {
        const Token& t = peek();
        if (t.kind != Tok::Number || t.text.find('/') != std::string::npos)
          fail_at(t.pos, "expected integer exponent");
        if (t.text.size() > 9) fail_at(t.pos, "exponent too large");
        Expression e;
        e.kind = Expression::Kind::Power;
        e.exponent = std::stoul(t.text);
        e.pos = a.pos;
        e.children.push_back(std::move(a));
        a = std::move(e);
        ++at;
        continue;
      }
      if (accept(Tok::Prime)) {
        Expression e;
        e.kind = Expression::Kind::Star;
        e.pos = a.pos;
        e.children.push_back(std::move(a));
        a = std::move(e);
        continue;
      }
      return a;
    }
  }

  Expression atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        Expression e;
        e.kind = Expression::Kind::Scalar;
        e.value = GaussianRational(t.number);
        e.pos = t.pos;
        ++at;
        return e;
      }
      case Tok::Imag: {
        Expression e;
        e.kind = Expression::Kind::Scalar;
        e.value = GaussianRational::i();
        e.pos = t.pos;
        ++at;
        return e;
      }
      case Tok::Gen: {
        Expression e;
        e.kind = Expression::Kind::Generator;
        e.gen = t.gen;
        e.index = t.index;
        e.pos = t.pos;
        ++at;
        return e;
      }
      case Tok::LParen: {
        long pos = t.pos;
        ++at;
        Expression e = expr();
        if (!accept(Tok::RParen)) fail_at(peek().pos, "expected ')'");
        e.pos = pos;
        return e;
      }
      default:
        fail_at(t.pos, "expected a rational, 'i', a generator, or '('");
    }
  }

  static Expression negate(Expression inner) {
    Expression e;
    e.kind = Expression::Kind::Negate;
    e.pos = inner.pos;
    e.children.push_back(std::move(inner));
    return e;
  }
};

const char* gen_name(GenKind g) {
  switch (g) {
    case GenKind::Q: return "q";
    case GenKind::P: return "p";
    case GenKind::Z: return "z";
    default: return "zb";
  }
}

AlgebraElement elab_scalar(const ElaborationConfig& cfg, const GaussianRational& c) {
  if (cfg.weyl) return WeylElement::scalar(cfg.dim, c);
  return PolyElement::scalar(cfg.dim, c);
}

AlgebraElement elab_generator(const Expression& e, const ElaborationConfig& cfg) {
  std::string name = std::string(gen_name(e.gen)) + std::to_string(e.index);
  bool weyl_gen = e.gen == GenKind::Q || e.gen == GenKind::P;
  if (weyl_gen != cfg.weyl)
    throw StarError(ErrorCode::MixedAlgebra,
                    name + " is not a " + (cfg.weyl ? "weyl" : "poly") +
                        " generator",
                    e.pos);
  if (cfg.weyl) {
    if (e.index >= cfg.dim)
      throw StarError(ErrorCode::IndexOutOfRange,
                      name + " with dim " + std::to_string(cfg.dim), e.pos);
    return e.gen == GenKind::Q ? WeylElement::q(cfg.dim, e.index)
                               : WeylElement::p(cfg.dim, e.index);
  }
  if (e.index > cfg.dim)
    throw StarError(ErrorCode::IndexOutOfRange,
                    name + " with n = " + std::to_string(cfg.dim), e.pos);
  return e.gen == GenKind::Z ? PolyElement::z(cfg.dim, e.index)
                             : PolyElement::zbar(cfg.dim, e.index);
}

}  // namespace

Expression parse_expression(const std::string& text) {
  Parser p{lex(text)};
  Expression e = p.expr();
  if (p.peek().kind != Tok::End)
    fail_at(p.peek().pos, "expected '+', '-', '*', '^', ''', or end of input");
  return e;
}

AlgebraElement elaborate(const Expression& e, const ElaborationConfig& cfg) {
  switch (e.kind) {
    case Expression::Kind::Scalar:
      return elab_scalar(cfg, e.value);
    case Expression::Kind::Generator:
      return elab_generator(e, cfg);
    case Expression::Kind::Sum: {
      AlgebraElement acc = elaborate(e.children[0], cfg);
      for (std::size_t j = 1; j < e.children.size(); ++j)
        acc = element_add(acc, elaborate(e.children[j], cfg));
      return acc;
    }
    case Expression::Kind::Product: {
      AlgebraElement acc = elaborate(e.children[0], cfg);
      for (std::size_t j = 1; j < e.children.size(); ++j)
        acc = element_mul(acc, elaborate(e.children[j], cfg));
      return acc;
    }
    case Expression::Kind::Power: {
      AlgebraElement base = elaborate(e.children[0], cfg);
      return std::visit(
          [&](const auto& x) -> AlgebraElement {
            return x.pow(static_cast<unsigned>(e.exponent));
          },
          base);
    }
    case Expression::Kind::Star:
      return element_star(elaborate(e.children[0], cfg));
    default: {  // Negate
      AlgebraElement inner = elaborate(e.children[0], cfg);
      return std::visit([](const auto& x) -> AlgebraElement { return -x; }, inner);
    }
  }
}

AlgebraElement parse_element(const std::string& text, const ElaborationConfig& cfg) {
  return elaborate(parse_expression(text), cfg);
}

namespace {

void append_factor(std::string& out, const char* g, int j, unsigned e) {
  if (e == 0) return;
  if (!out.empty()) out += "*";
  out += g;
  out += std::to_string(j);
  if (e > 1) out += "^" + std::to_string(e);
}

/// One rendered term, possibly starting with '-'. An empty monomial
/// string means the unit monomial.
std::string term_str(const GaussianRational& c, const std::string& mono) {
  if (mono.empty()) return c.str();
  if (c == GaussianRational(1)) return mono;
  if (c == GaussianRational(-1)) return "-" + mono;
  std::string cs = c.str();
  if (c.is_real() || c.re() == 0) return cs + "*" + mono;
  return "(" + cs + ")*" + mono;
}

std::string join_terms(std::vector<std::string> parts) {
  if (parts.empty()) return "0";
  std::string out = std::move(parts[0]);
  for (std::size_t j = 1; j < parts.size(); ++j) {
    if (parts[j][0] == '-')
      out += " - " + parts[j].substr(1);
    else
      out += " + " + parts[j];
  }
  return out;
}

}  // namespace

std::string render_weyl(const WeylElement& a) {
  std::vector<std::string> parts;
  for (const auto& [m, c] : a.terms()) {
    std::string mono;
    for (int j = 0; j < a.dim(); ++j) append_factor(mono, "p", j, m.k[j]);
    for (int j = 0; j < a.dim(); ++j) append_factor(mono, "q", j, m.l[j]);
    parts.push_back(term_str(c, mono));
  }
  return join_terms(std::move(parts));
}

std::string render_poly(const PolyElement& f) {
  std::vector<std::string> parts;
  for (const auto& [m, c] : f.terms()) {
    std::string mono;
    for (int j = 0; j < f.dim(); ++j) append_factor(mono, "z", j, m.a[j]);
    for (int j = 0; j < f.dim(); ++j) append_factor(mono, "zb", j, m.b[j]);
    parts.push_back(term_str(c, mono));
  }
  return join_terms(std::move(parts));
}

std::string render_element(const AlgebraElement& x) {
  if (std::holds_alternative<WeylElement>(x))
    return render_weyl(std::get<WeylElement>(x));
  return render_poly(std::get<PolyElement>(x));
}

}  // namespace staralg
