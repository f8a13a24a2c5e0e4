#include "pindex/plot.hpp"

#include "pindex/error.hpp"
#include "pindex/tangency.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace pindex {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid "-0.00" so output is stable across tiny sign differences.
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

class Canvas {
 public:
  Canvas(Vec2 center, double extent, int size) : center_(center), extent_(extent), size_(size) {}

  Vec2 to_px(Vec2 p) const {
    const double s = size_ / (2.0 * extent_);
    return {(p.x - center_.x + extent_) * s, (center_.y + extent_ - p.y) * s};
  }
  double scale() const { return size_ / (2.0 * extent_); }
  bool inside(Vec2 p) const {
    return std::abs(p.x - center_.x) <= extent_ && std::abs(p.y - center_.y) <= extent_;
  }

 private:
  Vec2 center_;
  double extent_;
  int size_;
};

// Unit direction, aligned with `like` for line fields; nullopt near zeros.
std::optional<Vec2> unit_direction(const PlaneField& field, Vec2 p, const Vec2* like) {
  if (field.is_line_field() && norm(p - field.singular_point()) < 1e-9) return std::nullopt;
  Vec2 v = field.value(p);
  const double n = norm(v);
  if (!(n > 1e-12) || !std::isfinite(n)) return std::nullopt;
  v = (1.0 / n) * v;
  if (field.is_line_field() && like && dot(v, *like) < 0.0) v = -v;
  return v;
}

std::vector<Vec2> trace(const PlaneField& field, const Canvas& canvas, Vec2 seed, double h, int steps, double sign) {
  std::vector<Vec2> pts{seed};
  auto first = unit_direction(field, seed, nullptr);
  if (!first) return pts;
  Vec2 heading = sign * *first;
  Vec2 p = seed;
  for (int i = 0; i < steps; ++i) {
    auto k1 = unit_direction(field, p, &heading);
    if (!k1) break;
    if (!field.is_line_field()) *k1 = sign * *k1;
    auto k2 = unit_direction(field, p + (0.5 * h) * *k1, &*k1);
    if (!k2) break;
    if (!field.is_line_field()) *k2 = sign * *k2;
    auto k3 = unit_direction(field, p + (0.5 * h) * *k2, &*k2);
    if (!k3) break;
    if (!field.is_line_field()) *k3 = sign * *k3;
    auto k4 = unit_direction(field, p + h * *k3, &*k3);
    if (!k4) break;
    if (!field.is_line_field()) *k4 = sign * *k4;
    const Vec2 step = (h / 6.0) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
    const Vec2 next = p + step;
    if (!canvas.inside(next) || norm(next - field.singular_point()) < 0.5 * h) break;
    heading = *k4;
    p = next;
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::string plot_svg(const PlaneField& field, const PlotOptions& opts) {
  if (opts.grid < 2 || opts.grid > 400) throw Error(ErrorCode::InvalidArgument, "grid must be in [2, 400]");
  if (!(opts.extent > 0.0)) throw Error(ErrorCode::InvalidArgument, "extent must be positive");

  const Vec2 center = opts.center.value_or(field.singular_point());
  const Canvas canvas(center, opts.extent, opts.size_px);
  const double cell = 2.0 * opts.extent / opts.grid;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.size_px << "\" height=\""
     << opts.size_px << "\" viewBox=\"0 0 " << opts.size_px << ' ' << opts.size_px << "\">\n"
     << "<desc>" << field.describe() << "</desc>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << opts.size_px << "\" height=\"" << opts.size_px << "\" fill=\"white\"/>\n";

  if (opts.streamlines) {
    os << "<g fill=\"none\" stroke=\"#4a7ab5\" stroke-width=\"1\">\n";
    const int seeds = std::max(2, opts.grid / 5);
    const double seed_cell = 2.0 * opts.extent / seeds;
    for (int i = 0; i < seeds; ++i) {
      for (int j = 0; j < seeds; ++j) {
        const Vec2 seed{center.x - opts.extent + (i + 0.5) * seed_cell, center.y - opts.extent + (j + 0.5) * seed_cell};
        auto back = trace(field, canvas, seed, 0.5 * cell, 400, -1.0);
        auto fwd = trace(field, canvas, seed, 0.5 * cell, 400, 1.0);
        if (back.size() + fwd.size() < 4) continue;
        os << "<polyline points=\"";
        bool first = true;
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          const Vec2 px = canvas.to_px(*it);
          os << (first ? "" : " ") << num(px.x) << ',' << num(px.y);
          first = false;
        }
        for (std::size_t k = 1; k < fwd.size(); ++k) {
          const Vec2 px = canvas.to_px(fwd[k]);
          os << ' ' << num(px.x) << ',' << num(px.y);
        }
        os << "\"/>\n";
      }
    }
    os << "</g>\n";
  }

  os << "<g stroke=\"#222\" stroke-width=\"1.2\">\n";
  const double half = 0.35 * cell;
  for (int i = 0; i < opts.grid; ++i) {
    for (int j = 0; j < opts.grid; ++j) {
      const Vec2 p{center.x - opts.extent + (i + 0.5) * cell, center.y - opts.extent + (j + 0.5) * cell};
      auto d = unit_direction(field, p, nullptr);
      if (!d) continue;
      const Vec2 a = canvas.to_px(p - half * *d);
      const Vec2 b = canvas.to_px(p + half * *d);
      os << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
         << "\"/>\n";
      if (!field.is_line_field()) os << "<circle cx=\"" << num(b.x) << "\" cy=\"" << num(b.y) << "\" r=\"1.2\"/>\n";
    }
  }
  os << "</g>\n";

  if (opts.circle) {
    const Circle circle{center, *opts.circle};
    const Vec2 c = canvas.to_px(center);
    os << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(*opts.circle * canvas.scale())
       << "\" fill=\"none\" stroke=\"#2a9d4b\" stroke-width=\"1.5\"/>\n";
    try {
      for (const Tangency& t : find_tangencies(field, circle)) {
        const Vec2 q = canvas.to_px(circle.point(t.angle));
        os << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"4\" fill=\""
           << (t.kind == TangencyKind::Internal ? "#e08a00" : "#7b3fb5") << "\"><title>" << to_string(t.kind)
           << " tangency</title></circle>\n";
      }
    } catch (const Error& e) {
      os << "<!-- tangencies unavailable: " << error_code_name(e.code()) << " -->\n";
    }
  }

  const Vec2 s = canvas.to_px(field.singular_point());
  os << "<circle cx=\"" << num(s.x) << "\" cy=\"" << num(s.y) << "\" r=\"5\" fill=\"#d62828\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace pindex
