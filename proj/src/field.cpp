#include "pindex/field.hpp"

#include "pindex/error.hpp"

namespace pindex {

PlaneField::PlaneField(Model model, Vec2 singular_point)
    : model_(std::move(model)), singular_point_(singular_point) {}

PlaneField PlaneField::vector_polynomial(PolyExpr p, PolyExpr q, Vec2 singular_point) {
  auto derivatives = std::make_shared<const std::array<PolyExpr, 4>>(
      std::array<PolyExpr, 4>{p.d_dx(), p.d_dy(), q.d_dx(), q.d_dy()});
  PlaneField field(VectorPolynomial{std::move(p), std::move(q)}, singular_point);
  field.derivatives_ = std::move(derivatives);
  return field;
}

PlaneField PlaneField::line_model(int two_j, Vec2 singular_point) {
  return PlaneField(LineModel{two_j, false}, singular_point);
}

PlaneField PlaneField::pullback(PlaneField base) {
  if (!base.is_line_field())
    throw Error(ErrorCode::InvalidArgument, "pullback through the orientation cover needs a line field");
  return PlaneField(Pullback{std::make_shared<const PlaneField>(std::move(base))}, Vec2{});
}

PlaneField PlaneField::with_label(std::string label) const {
  PlaneField copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

bool PlaneField::is_line_field() const { return !std::holds_alternative<VectorPolynomial>(model_); }

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Vec2 unit(Vec2 v) {
  const double n = norm(v);
  return {v.x / n, v.y / n};
}

// Covering map w -> w^2 relative to a base point.
Vec2 square(Vec2 w) { return {w.x * w.x - w.y * w.y, 2.0 * w.x * w.y}; }

}  // namespace

Vec2 PlaneField::value(Vec2 p) const {
  return std::visit(
      overloaded{
          [&](const VectorPolynomial& f) { return Vec2{f.p.evaluate(p.x, p.y), f.q.evaluate(p.x, p.y)}; },
          [&](const LineModel& f) {
            const Vec2 d = p - singular_point_;
            const double theta = 0.5 * f.two_j * std::atan2(d.y, d.x);
            const Vec2 rep{std::cos(theta), std::sin(theta)};
            return f.negated ? -rep : rep;
          },
          [&](const Pullback& f) {
            const Vec2 z = f.base->singular_point() + square(p);
            const Vec2 d = unit(f.base->value(z));
            const double r = norm(p);
            // d * conj(w) / |w|
            return Vec2{(d.x * p.x + d.y * p.y) / r, (d.y * p.x - d.x * p.y) / r};
          },
      },
      model_);
}

Mat2 PlaneField::jacobian(Vec2 p) const {
  if (!derivatives_) throw Error(ErrorCode::InvalidArgument, "exact Jacobian needs a polynomial field");
  const auto& d = *derivatives_;
  return {d[0].evaluate(p.x, p.y), d[1].evaluate(p.x, p.y), d[2].evaluate(p.x, p.y), d[3].evaluate(p.x, p.y)};
}

Vec2 PlaneField::angle_gradient(Vec2 p) const {
  return std::visit(
      overloaded{
          [&](const VectorPolynomial&) {
            const Vec2 f = value(p);
            const Mat2 j = jacobian(p);
            const double n2 = dot(f, f);
            // (P grad Q - Q grad P) / |f|^2
            return Vec2{(f.x * j.c - f.y * j.a) / n2, (f.x * j.d - f.y * j.b) / n2};
          },
          [&](const LineModel& f) {
            const Vec2 d = p - singular_point_;
            const double s = 0.5 * f.two_j / dot(d, d);
            return Vec2{-s * d.y, s * d.x};
          },
          [&](const Pullback& f) {
            const Vec2 z = f.base->singular_point() + square(p);
            const Vec2 g = f.base->angle_gradient(z);
            const double r2 = dot(p, p);
            return Vec2{2.0 * (p.x * g.x + p.y * g.y) + p.y / r2, 2.0 * (-p.y * g.x + p.x * g.y) - p.x / r2};
          },
      },
      model_);
}

double PlaneField::magnitude_scale(double radius) const {
  if (const auto* f = std::get_if<VectorPolynomial>(&model_)) {
    const double coef = std::max(f->p.max_abs_coefficient(), f->q.max_abs_coefficient());
    const int degree = std::max(f->p.degree(), f->q.degree());
    return 1.0 + coef * std::pow(radius, degree);
  }
  return 1.0;
}

PlaneField PlaneField::negated() const {
  PlaneField out = std::visit(
      overloaded{
          [&](const VectorPolynomial& f) { return vector_polynomial(-f.p, -f.q, singular_point_); },
          [&](const LineModel& f) { return PlaneField(LineModel{f.two_j, !f.negated}, singular_point_); },
          [&](const Pullback& f) { return pullback(f.base->negated()); },
      },
      model_);
  out.label_ = label_;
  return out;
}

std::string PlaneField::describe() const {
  return std::visit(
      overloaded{
          [](const VectorPolynomial& f) { return "(" + f.p.to_string() + ", " + f.q.to_string() + ")"; },
          [](const LineModel& f) { return "line_model(two_j=" + std::to_string(f.two_j) + ")"; },
          [](const Pullback& f) { return "pullback(" + f.base->describe() + ")"; },
      },
      model_);
}

PlaneField complex_power_field(int k) {
  // (re, im) of (x + i*s*y)^|k| with s = sign(k)
  const PolyExpr x = PolyExpr::variable_x();
  const PolyExpr y = k < 0 ? -PolyExpr::variable_y() : PolyExpr::variable_y();
  PolyExpr re = PolyExpr::constant(1);
  PolyExpr im;
  for (int i = 0; i < std::abs(k); ++i) {
    PolyExpr next_re = re * x - im * y;
    im = re * y + im * x;
    re = std::move(next_re);
  }
  return PlaneField::vector_polynomial(std::move(re), std::move(im));
}

PlaneField complex_product(const PlaneField& a, const PlaneField& b) {
  const auto* fa = std::get_if<VectorPolynomial>(&a.model());
  const auto* fb = std::get_if<VectorPolynomial>(&b.model());
  if (!fa || !fb) throw Error(ErrorCode::InvalidArgument, "complex product needs two polynomial vector fields");
  return PlaneField::vector_polynomial(fa->p * fb->p - fa->q * fb->q, fa->p * fb->q + fa->q * fb->p,
                                       a.singular_point());
}

}  // namespace pindex
