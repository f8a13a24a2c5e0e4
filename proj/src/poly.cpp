#include "pindex/poly.hpp"

#include "pindex/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pindex {

PolyExpr::PolyExpr(Coefficients coefficients) : coefficients_(std::move(coefficients)) {
  std::erase_if(coefficients_, [](const auto& kv) { return kv.second == 0; });
  rebuild_cache();
}

PolyExpr PolyExpr::constant(const Rational& c) { return PolyExpr({{Monomial{0, 0}, c}}); }
PolyExpr PolyExpr::variable_x() { return PolyExpr({{Monomial{1, 0}, Rational(1)}}); }
PolyExpr PolyExpr::variable_y() { return PolyExpr({{Monomial{0, 1}, Rational(1)}}); }

void PolyExpr::rebuild_cache() {
  terms_.clear();
  terms_.reserve(coefficients_.size());
  for (const auto& [m, c] : coefficients_) terms_.push_back({m.x, m.y, c.convert_to<double>()});
}

int PolyExpr::degree() const {
  int d = 0;
  for (const auto& [m, c] : coefficients_) d = std::max(d, m.x + m.y);
  return d;
}

double PolyExpr::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& t : terms_) best = std::max(best, std::abs(t.c));
  return best;
}

namespace {

double ipow(double base, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

double PolyExpr::evaluate(double x, double y) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.c * ipow(x, t.x) * ipow(y, t.y);
  return sum;
}

PolyExpr PolyExpr::d_dx() const {
  Coefficients out;
  for (const auto& [m, c] : coefficients_)
    if (m.x > 0) out[Monomial{m.x - 1, m.y}] += c * m.x;
  return PolyExpr(std::move(out));
}

PolyExpr PolyExpr::d_dy() const {
  Coefficients out;
  for (const auto& [m, c] : coefficients_)
    if (m.y > 0) out[Monomial{m.x, m.y - 1}] += c * m.y;
  return PolyExpr(std::move(out));
}

PolyExpr PolyExpr::operator-() const {
  Coefficients out = coefficients_;
  for (auto& [m, c] : out) c = -c;
  return PolyExpr(std::move(out));
}

PolyExpr operator+(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr::Coefficients out = a.coefficients_;
  for (const auto& [m, c] : b.coefficients_) out[m] += c;
  return PolyExpr(std::move(out));
}

PolyExpr operator-(const PolyExpr& a, const PolyExpr& b) { return a + (-b); }

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr::Coefficients out;
  for (const auto& [ma, ca] : a.coefficients_)
    for (const auto& [mb, cb] : b.coefficients_) out[Monomial{ma.x + mb.x, ma.y + mb.y}] += ca * cb;
  return PolyExpr(std::move(out));
}

PolyExpr PolyExpr::pow(unsigned exponent) const {
  PolyExpr result = constant(1);
  PolyExpr base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string PolyExpr::to_string() const {
  if (coefficients_.empty()) return "0";

  std::vector<std::pair<Monomial, Rational>> ordered(coefficients_.begin(), coefficients_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.x + a.first.y;
    const int db = b.first.x + b.first.y;
    if (da != db) return da > db;
    return a.first.x > b.first.x;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    auto append = [&mono](char var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += var;
      if (e > 1) mono += '^' + std::to_string(e);
    };
    append('x', m.x);
    append('y', m.y);

    if (mono.empty()) {
      os << magnitude.str();
    } else if (magnitude == 1) {
      os << mono;
    } else {
      os << magnitude.str() << '*' << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'x' | 'y' | '(' expr ')'
//   number  := digits ('.' digits*)? ('/' digits)?

namespace {

constexpr int kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    PolyExpr result = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(ErrorCode::SyntaxError, pos_, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyExpr expr() {
    PolyExpr acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  PolyExpr term() {
    PolyExpr acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  PolyExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PolyExpr power() {
    PolyExpr base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t exponent_pos = pos_;
    const PolyExpr e = unary();
    if (e.degree() > 0)
      throw SyntaxError(ErrorCode::ExponentError, exponent_pos, "exponent must be a constant");
    const Rational value = e.is_zero() ? Rational(0) : e.coefficients().begin()->second;
    if (value < 0 || boost::multiprecision::denominator(value) != 1)
      throw SyntaxError(ErrorCode::ExponentError, exponent_pos,
                        "exponent must be a nonnegative integer, got " + value.str());
    if (value > kMaxExponent)
      throw SyntaxError(ErrorCode::ExponentError, exponent_pos, "exponent exceeds " + std::to_string(kMaxExponent));
    return base.pow(value.convert_to<unsigned>());
  }

  PolyExpr primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return PolyExpr::variable_x();
    }
    if (c == 'y') {
      ++pos_;
      return PolyExpr::variable_y();
    }
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return PolyExpr::constant(number());
    fail(std::string("unexpected character '") + c + "'");
  }

  boost::multiprecision::cpp_int digits() {
    boost::multiprecision::cpp_int value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  Rational number() {
    using boost::multiprecision::cpp_int;
    cpp_int numerator = digits();
    cpp_int denominator = 1;
    if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        numerator = numerator * 10 + (text_[pos_] - '0');
        denominator *= 10;
        ++pos_;
      }
    }
    Rational value(numerator, denominator);
    const std::size_t before_slash = pos_;
    if (accept('/')) {
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected integer denominator after '/'");
      const std::size_t denom_pos = pos_;
      const cpp_int d = digits();
      if (d == 0) throw SyntaxError(ErrorCode::SyntaxError, denom_pos, "zero denominator");
      value /= Rational(d);
    } else {
      pos_ = before_slash;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace pindex
