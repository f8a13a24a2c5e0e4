#include "pindex/catalog.hpp"
#include "pindex/error.hpp"
#include "pindex/plot.hpp"

#include <doctest.h>

#include <regex>

using namespace pindex;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("svg structure") {
  PlotOptions o;
  o.grid = 10;
  const std::string svg = plot_svg(catalog_get("saddle").field, o);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<desc>(x, -y)</desc>") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<line ") == 100);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("-0.00") == std::string::npos);
  CHECK(count(svg, "<title>") == 0);
}

TEST_CASE("plots are deterministic") {
  PlotOptions o;
  o.circle = 1.0;
  for (const char* name : {"saddle", "lemon", "star", "dipole"}) {
    const std::string a = plot_svg(catalog_get(name).field, o);
    const std::string b = plot_svg(catalog_get(name).field, o);
    CHECK(a == b);
  }
}

TEST_CASE("tangency markers") {
  PlotOptions o;
  o.circle = 1.0;
  o.streamlines = false;
  const std::string saddle = plot_svg(catalog_get("saddle").field, o);
  CHECK(count(saddle, "<title>external tangency</title>") == 4);
  CHECK(count(saddle, "<title>internal tangency</title>") == 0);
  const std::string dipole = plot_svg(catalog_get("dipole").field, o);
  CHECK(count(dipole, "<title>internal tangency</title>") == 2);
  const std::string tripod = plot_svg(catalog_get("tripod").field, o);
  CHECK(count(tripod, "<title>external tangency</title>") == 3);
  // A leaf circle cannot be censused; the plot still renders with a note.
  const std::string center = plot_svg(catalog_get("center").field, o);
  CHECK(center.find("<!--") != std::string::npos);
  CHECK(center.find("</svg>") != std::string::npos);
}

TEST_CASE("line fields have no arrow heads") {
  PlotOptions o;
  o.grid = 6;
  o.streamlines = false;
  const std::string lemon = plot_svg(catalog_get("lemon").field, o);
  const std::string node = plot_svg(catalog_get("node").field, o);
  CHECK(count(lemon, "r=\"1.2\"") == 0);
  CHECK(count(node, "r=\"1.2\"") == 36);
}

TEST_CASE("coordinates stay inside the canvas") {
  PlotOptions o;
  o.grid = 12;
  const std::string svg = plot_svg(catalog_get("focus").field, o);
  const std::regex num(R"re((x1|y1|x2|y2|cx|cy)="(-?[0-9.]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), num); it != std::sregex_iterator(); ++it) {
    const double v = std::stod((*it)[2]);
    CHECK(v >= -1.0);
    CHECK(v <= 601.0);
  }
}

TEST_CASE("bad options") {
  PlotOptions o;
  o.grid = 1;
  CHECK_THROWS_AS(plot_svg(catalog_get("saddle").field, o), Error);
  o.grid = 10;
  o.extent = 0.0;
  CHECK_THROWS_AS(plot_svg(catalog_get("saddle").field, o), Error);
}
