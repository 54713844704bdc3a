#include "periods/expr.hpp"

#include <cctype>
#include <sstream>

namespace periods {

Expr Expr::builtin(std::string name, std::vector<Rational> params) {
  Expr e;
  e.kind = Kind::Builtin;
  e.name = std::move(name);
  e.params = std::move(params);
  return e;
}

Expr Expr::literal(const Rational& q) {
  Expr e;
  e.kind = Kind::Literal;
  e.value = {q, Rational()};
  return e;
}

namespace {

Expr node(Expr::Kind k, std::vector<Expr> args) {
  Expr e;
  e.kind = k;
  e.args = std::move(args);
  return e;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + ("'" + v[i] + "'");
  return out;
}

}  // namespace

Expr Expr::add(Expr a, Expr b) { return node(Kind::Add, {std::move(a), std::move(b)}); }
Expr Expr::mul(Expr a, Expr b) { return node(Kind::Mul, {std::move(a), std::move(b)}); }
Expr Expr::neg(Expr a) { return node(Kind::Neg, {std::move(a)}); }

Expr Expr::scale(const GaussianRational& c, Expr a) {
  Expr e = node(Kind::Scale, {std::move(a)});
  e.value = c;
  return e;
}

Expr Expr::pow(Expr a, unsigned m) {
  Expr e = node(Kind::Pow, {std::move(a)});
  e.exponent = m;
  return e;
}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::Syntax, "at byte " + std::to_string(offset) + ": expected one of " + join(expected) +
                                   ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

const std::vector<std::string> kExprStart = {"add(", "mul(", "neg(", "scale(", "pow(", "pi",
                                             "log(", "pi_log2", "pi_squared", "zeta(", "sqrt(", "integer"};

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail({"end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < s_.size() ? "'" + s_.substr(pos_, 1) + "'" : "end of input";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_char(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek_char(c)) fail({std::string(1, c)});
    ++pos_;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail({"integer"});
    }
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    mpz_class p = integer();
    if (!peek_char('/')) return Rational(p, 1);
    ++pos_;
    skip();
    std::size_t at = pos_;
    mpz_class q = integer();
    if (q == 0) {
      pos_ = at;
      fail({"nonzero denominator"});
    }
    return Rational(p, q);
  }

  unsigned positive_int() {
    skip();
    std::size_t at = pos_;
    mpz_class v = integer();
    if (v <= 0 || v > 1000000) {
      pos_ = at;
      fail({"positive integer"});
    }
    return static_cast<unsigned>(v.get_ui());
  }

  Expr expr() {
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      return Expr::literal(rational());
    }
    std::size_t at = pos_;
    std::string id = identifier();
    if (id == "pi" || id == "pi_log2" || id == "pi_squared") {
      if (peek_char('(')) fail({",", ")", "end of input"});
      return Expr::builtin(id);
    }
    if (id == "log" || id == "zeta" || id == "sqrt") {
      expect('(');
      Rational q = rational();
      expect(')');
      return Expr::builtin(id, {q});
    }
    if (id == "add" || id == "mul") {
      expect('(');
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(')');
      return id == "add" ? Expr::add(std::move(a), std::move(b)) : Expr::mul(std::move(a), std::move(b));
    }
    if (id == "neg") {
      expect('(');
      Expr a = expr();
      expect(')');
      return Expr::neg(std::move(a));
    }
    if (id == "scale") {
      expect('(');
      GaussianRational c{rational(), Rational()};
      if (peek_char('+') || peek_char('-')) {
        bool minus = s_[pos_] == '-';
        ++pos_;
        Rational im = rational();
        expect('i');
        c.im = minus ? -im : im;
      } else if (!peek_char(',')) {
        fail({",", "+", "-"});
      }
      expect(',');
      Expr a = expr();
      expect(')');
      return Expr::scale(c, std::move(a));
    }
    if (id == "pow") {
      expect('(');
      Expr a = expr();
      expect(',');
      unsigned m = positive_int();
      expect(')');
      return Expr::pow(std::move(a), m);
    }
    pos_ = at;
    fail(kExprStart);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Builtin:
      return e.params.empty() ? e.name : e.name + "(" + e.params[0].str() + ")";
    case Expr::Kind::Literal:
      return e.value.re.str();
    case Expr::Kind::Add:
      return "add(" + print_expr(e.args[0]) + ", " + print_expr(e.args[1]) + ")";
    case Expr::Kind::Mul:
      return "mul(" + print_expr(e.args[0]) + ", " + print_expr(e.args[1]) + ")";
    case Expr::Kind::Neg:
      return "neg(" + print_expr(e.args[0]) + ")";
    case Expr::Kind::Scale: {
      std::string c = e.value.re.str();
      if (!e.value.im.is_zero()) {
        c += (e.value.im.sign() < 0 ? " - " : " + ") + e.value.im.abs().str() + "i";
      }
      return "scale(" + c + ", " + print_expr(e.args[0]) + ")";
    }
    case Expr::Kind::Pow:
      return "pow(" + print_expr(e.args[0]) + ", " + std::to_string(e.exponent) + ")";
  }
  throw Error(ErrorKind::Internal, "bad expression node");
}

PeriodWitness to_witness(const Expr& e, const Registry& registry) {
  switch (e.kind) {
    case Expr::Kind::Builtin: {
      if (e.name == "sqrt") {
        const Rational& n = e.params.at(0);
        if (!n.is_integer() || n.sign() < 0 || !n.numerator().fits_ulong_p()) {
          throw Error(ErrorKind::InvalidArgument, "sqrt needs a non-negative integer, got " + n.str());
        }
        return make_sqrt(n.numerator().get_ui());
      }
      if (e.name == "zeta") return builtin("zeta_even", e.params);
      return builtin(e.name, e.params);
    }
    case Expr::Kind::Literal:
      return make_algebraic(e.value.re);
    case Expr::Kind::Add:
      return add(to_witness(e.args[0], registry), to_witness(e.args[1], registry));
    case Expr::Kind::Mul:
      return mul(to_witness(e.args[0], registry), to_witness(e.args[1], registry), registry);
    case Expr::Kind::Neg:
      return negate(to_witness(e.args[0], registry));
    case Expr::Kind::Scale: {
      PeriodWitness w = to_witness(e.args[0], registry);
      return e.value.im.is_zero() ? scale(e.value.re, w) : scale(e.value, w);
    }
    case Expr::Kind::Pow:
      return power(to_witness(e.args[0], registry), e.exponent, registry);
  }
  throw Error(ErrorKind::Internal, "bad expression node");
}

}  // namespace periods
