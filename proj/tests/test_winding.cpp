#include "pindex/catalog.hpp"
#include "pindex/error.hpp"
#include "pindex/winding.hpp"

#include <doctest.h>

#include <numbers>
#include <random>
#include <string>

using namespace pindex;

namespace {

ErrorCode code_of(const PlaneField& f, const Circle& c, const WindingOptions& o = {}) {
  try {
    winding_index(f, c, o);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

PlaneField vp(const std::string& p, const std::string& q) {
  return PlaneField::vector_polynomial(parse_polynomial(p), parse_polynomial(q));
}

// z - a (orientation preserving zero) or conj(z - a) (reversing).
PlaneField linear_factor(int ax, int ay, bool conj) {
  const std::string x = "x - " + std::to_string(ax) + "/100";
  const std::string y = "y - " + std::to_string(ay) + "/100";
  return conj ? vp(x, "-(" + y + ")") : vp(x, y);
}

// Turning number from plain dense sampling, no bisection.
double dense_turns(const PlaneField& f, const Circle& c, int n) {
  double total = 0.0;
  Vec2 prev = f.value(c.point(0.0));
  for (int k = 1; k <= n; ++k) {
    const Vec2 cur = f.value(c.point(2.0 * std::numbers::pi * k / n));
    total += std::atan2(cross(prev, cur), dot(prev, cur));
    prev = cur;
  }
  return total / (2.0 * std::numbers::pi);
}

}  // namespace

TEST_CASE("catalog examples") {
  CHECK(winding_index(catalog_get("saddle").field, {{0, 0}, 1.0}).index == HalfIndex::from_int(-1));
  CHECK(winding_index(catalog_get("rotation").field, {{0, 0}, 1.0}).index == HalfIndex::from_int(1));
  CHECK(winding_index(catalog_get("lemon").field, {{0, 0}, 1.0}).index == HalfIndex::from_doubled(1));
  CHECK(winding_index(catalog_get("tripod").field, {{0, 0}, 1.0}).index == HalfIndex::from_doubled(-1));
  CHECK(winding_index(catalog_get("star").field, {{0, 0}, 1.0}).index == HalfIndex::from_doubled(3));
  CHECK(winding_index(catalog_get("tripod").field, {{0, 0}, 1.0}).index.to_string() == "-1/2");
}

TEST_CASE("catalog indices are independent of the radius") {
  for (const auto& entry : catalog_entries()) {
    for (double r : {0.1, 1.0, 7.0}) {
      CAPTURE(entry.name);
      CAPTURE(r);
      const auto res = winding_index(entry.field, entry.census_circle(r));
      CHECK(res.index == entry.expected_index);
      CHECK(res.residual < kWindingResidualLimit);
    }
  }
}

TEST_CASE("complex powers have index k") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> radius(1e-3, 10.0);
  for (int k = -4; k <= 4; ++k) {
    if (k == 0) continue;
    for (int t = 0; t < 10; ++t) {
      const double r = radius(rng);
      CAPTURE(k);
      CAPTURE(r);
      CHECK(winding_index(complex_power_field(k), {{0, 0}, r}).index == HalfIndex::from_int(k));
    }
  }
  // A nonvanishing field has index 0.
  CHECK(winding_index(vp("1", "x"), {{0, 0}, 3.0}).index == HalfIndex::from_int(0));
}

TEST_CASE("index of a product is the sum of the indices") {
  for (int a = -2; a <= 3; ++a) {
    for (int b = -2; b <= 3; ++b) {
      if (a == 0 || b == 0) continue;
      const PlaneField prod = complex_product(complex_power_field(a), complex_power_field(b));
      CHECK(winding_index(prod, {{0, 0}, 0.8}).index == HalfIndex::from_int(a + b));
    }
  }
}

TEST_CASE("root counting oracle for products of linear factors") {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> coord(-200, 200);
  std::bernoulli_distribution flip(0.4);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const Circle circle{{0.1, -0.2}, 1.3};
    const int n = count(rng);
    std::optional<PlaneField> field;
    int expected = 0;
    for (int i = 0; i < n; ++i) {
      int ax, ay;
      double dist;
      do {
        ax = coord(rng);
        ay = coord(rng);
        dist = std::hypot(ax / 100.0 - circle.center.x, ay / 100.0 - circle.center.y);
      } while (std::abs(dist - circle.radius) < 0.05);
      const bool conj = flip(rng);
      if (dist < circle.radius) expected += conj ? -1 : 1;
      const PlaneField factor = linear_factor(ax, ay, conj);
      field = field ? complex_product(*field, factor) : factor;
    }
    CAPTURE(trial);
    CHECK(winding_index(*field, circle).index == HalfIndex::from_int(expected));
  }
}

TEST_CASE("agrees with dense sampling on random polynomial fields") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto rnd = [&] {
      return std::to_string(c(rng)) + "*x^2 + " + std::to_string(c(rng)) + "*x*y + " + std::to_string(c(rng)) +
             "*y^2 + " + std::to_string(c(rng)) + "*x + " + std::to_string(c(rng)) + "*y + " +
             std::to_string(c(rng)) + "/2";
    };
    const PlaneField f = vp(rnd(), rnd());
    const Circle circle{{0.0, 0.0}, 1.5};
    double min_mag = 1e300;
    for (int k = 0; k < 4000; ++k) min_mag = std::min(min_mag, norm(f.value(circle.point(2 * std::numbers::pi * k / 4000))));
    if (min_mag < 0.05) continue;  // too close to a zero for the oracle
    const double turns = dense_turns(f, circle, 200000);
    CHECK(std::abs(turns - std::round(turns)) < 1e-9);
    CHECK(winding_index(f, circle).index == HalfIndex::from_int(static_cast<std::int64_t>(std::round(turns))));
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("start angle, sample count and representative do not matter") {
  for (const auto& entry : catalog_entries()) {
    const Circle circle = entry.census_circle(1.0);
    const HalfIndex base = winding_index(entry.field, circle).index;
    for (double start : {0.3, 1.7, -2.2}) {
      for (int n : {16, 37, 500}) {
        WindingOptions o;
        o.start_angle = start;
        o.initial_samples = n;
        CHECK(winding_index(entry.field, circle, o).index == base);
      }
    }
    CHECK(winding_index(entry.field.negated(), circle).index == base);
  }
}

TEST_CASE("deterministic") {
  const auto a = winding_index(catalog_get("monkey-saddle").field, {{0.2, 0.1}, 2.0});
  const auto b = winding_index(catalog_get("monkey-saddle").field, {{0.2, 0.1}, 2.0});
  CHECK(a.index == b.index);
  CHECK(a.samples_used == b.samples_used);
  CHECK(a.residual == b.residual);
  CHECK(a.max_step_angle == b.max_step_angle);
  CHECK(a.max_step_angle < std::numbers::pi / 2);
}

TEST_CASE("circles away from the singularity give zero") {
  for (const auto& entry : catalog_entries()) CHECK(winding_index(entry.field, {{5.0, 5.0}, 1.0}).index.doubled() == 0);
}

TEST_CASE("errors") {
  CHECK(code_of(vp("x - 1", "y"), {{0, 0}, 1.0}) == ErrorCode::SingularOnCircuit);
  CHECK(code_of(PlaneField::line_model(1, {1.0, 0.0}), {{0, 0}, 1.0}) == ErrorCode::SingularOnCircuit);
  CHECK(code_of(catalog_get("saddle").field, {{0, 0}, 0.0}) == ErrorCode::InvalidArgument);
  CHECK(code_of(catalog_get("saddle").field, {{0, 0}, -1.0}) == ErrorCode::InvalidArgument);
  WindingOptions few;
  few.initial_samples = 8;
  CHECK(code_of(catalog_get("saddle").field, {{0, 0}, 1.0}, few) == ErrorCode::InvalidArgument);
  WindingOptions shallow;
  shallow.initial_samples = 16;
  shallow.max_depth = 0;
  CHECK(code_of(complex_power_field(8), {{0, 0}, 1.0}, shallow) == ErrorCode::NonConvergent);
  shallow.max_depth = -1;
  CHECK(code_of(catalog_get("saddle").field, {{0, 0}, 1.0}, shallow) == ErrorCode::InvalidArgument);
}
