#pragma once

#include "pindex/poly.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace pindex {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Row-major 2x2 matrix; rows are the gradients of the two components.
struct Mat2 {
  double a = 0.0, b = 0.0;
  double c = 0.0, d = 0.0;

  constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
};

/// Vector field (P, Q) with polynomial components and exact derivatives.
struct VectorPolynomial {
  PolyExpr p;
  PolyExpr q;
};

/// Line field whose direction angle at polar angle phi about the singular
/// point is (two_j / 2) * phi modulo pi. Index two_j / 2.
struct LineModel {
  int two_j = 0;
  bool negated = false;  // which of the two unit representatives is reported
};

class PlaneField;

/// Pullback of a line field through the orientation double cover w -> w^2,
/// including the -arg(w) twist from the derivative of the covering map.
struct Pullback {
  std::shared_ptr<const PlaneField> base;
};

class PlaneField {
 public:
  using Model = std::variant<VectorPolynomial, LineModel, Pullback>;

  static PlaneField vector_polynomial(PolyExpr p, PolyExpr q, Vec2 singular_point = {});
  static PlaneField line_model(int two_j, Vec2 singular_point = {});
  /// Lift of a line field to the double cover branched at its singular point.
  /// The lifted field lives in the w-plane with its singular point at 0.
  static PlaneField pullback(PlaneField base);

  const Model& model() const { return model_; }
  Vec2 singular_point() const { return singular_point_; }
  const std::string& label() const { return label_; }
  PlaneField with_label(std::string label) const;

  /// Line fields report a unit representative defined up to sign.
  bool is_line_field() const;
  bool has_exact_jacobian() const { return std::holds_alternative<VectorPolynomial>(model_); }

  Vec2 value(Vec2 p) const;
  /// Exact Jacobian; throws InvalidArgument for non-polynomial fields.
  Mat2 jacobian(Vec2 p) const;
  /// Gradient of the direction angle atan2(value). Sign-invariant for line
  /// fields. Undefined where the field vanishes.
  Vec2 angle_gradient(Vec2 p) const;

  /// 1 + (max |coefficient|) * radius^degree for polynomials, 1 otherwise.
  double magnitude_scale(double radius) const;

  /// Same field with the opposite representative (line fields) or -f.
  PlaneField negated() const;

  std::string describe() const;

 private:
  PlaneField(Model model, Vec2 singular_point);

  Model model_;
  Vec2 singular_point_;
  std::string label_;
  // d/dx and d/dy of P and Q, only for polynomial fields.
  std::shared_ptr<const std::array<PolyExpr, 4>> derivatives_;
};

/// z^k for k >= 0 and conj(z)^|k| for k < 0, as a polynomial vector field.
/// Index k.
PlaneField complex_power_field(int k);

/// Pointwise complex product of two polynomial vector fields. The index of
/// the product is the sum of the indices.
PlaneField complex_product(const PlaneField& a, const PlaneField& b);

}  // namespace pindex
