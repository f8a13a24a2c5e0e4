#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pindex {

using Rational = boost::multiprecision::cpp_rational;

struct Monomial {
  int x = 0;  // degree in x
  int y = 0;  // degree in y

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Bivariate polynomial with exact rational coefficients.
///
/// The coefficient map never stores zeros, so two polynomials are equal iff
/// their maps are equal. Evaluation uses a cached double copy of the terms.
class PolyExpr {
 public:
  using Coefficients = std::map<Monomial, Rational>;

  PolyExpr() = default;
  explicit PolyExpr(Coefficients coefficients);

  static PolyExpr constant(const Rational& c);
  static PolyExpr variable_x();
  static PolyExpr variable_y();

  const Coefficients& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  int degree() const;
  /// Largest |coefficient| as a double; 0 for the zero polynomial.
  double max_abs_coefficient() const;

  double evaluate(double x, double y) const;

  PolyExpr d_dx() const;
  PolyExpr d_dy() const;

  PolyExpr operator-() const;
  friend PolyExpr operator+(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator-(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  PolyExpr pow(unsigned exponent) const;

  friend bool operator==(const PolyExpr& a, const PolyExpr& b) {
    return a.coefficients_ == b.coefficients_;
  }

  /// Canonical text form, e.g. "x^2 - 3/2*x*y + 1". Parses back to *this.
  std::string to_string() const;

 private:
  struct Term {
    int x;
    int y;
    double c;
  };

  void rebuild_cache();

  Coefficients coefficients_;
  std::vector<Term> terms_;
};

/// Parses + - * ^ over rational literals, x, y and parentheses.
/// Literals are integers, decimals ("0.25") or fractions ("3/4").
/// Throws SyntaxError with ErrorCode::SyntaxError or ErrorCode::ExponentError.
PolyExpr parse_polynomial(std::string_view text);

}  // namespace pindex
