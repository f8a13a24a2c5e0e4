#include "pindex/cli.hpp"

#include "pindex/catalog.hpp"
#include "pindex/cover_lift.hpp"
#include "pindex/error.hpp"
#include "pindex/field_io.hpp"
#include "pindex/obstruction.hpp"
#include "pindex/plot.hpp"
#include "pindex/surface.hpp"
#include "pindex/tangency.hpp"
#include "pindex/winding.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pindex {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

json half(HalfIndex h) { return {{"value", h.to_string()}, {"doubled", h.doubled()}}; }

json half_list(const std::vector<HalfIndex>& hs) {
  json out = json::array();
  for (HalfIndex h : hs) out.push_back(half(h));
  return out;
}

std::string fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad " + what + " '" + s + "'");
  }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad " + what + " '" + s + "'");
  }
}

std::vector<HalfIndex> parse_half_list(const std::string& text) {
  std::vector<HalfIndex> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ',')) out.push_back(HalfIndex::parse(tok));
  return out;
}

/// Accumulates one JSON report and its exit status.
struct Report {
  json doc;
  std::string digest_source;
  int exit_code = kExitPass;

  Report(const std::string& command, const std::vector<std::string>& args) {
    doc["command"] = command;
    doc["argv"] = json(std::vector<std::string>(args.begin() + 1, args.end()));
    doc["inputs"] = json::object();
    doc["results"] = json::object();
    doc["diagnostics"] = json::object();
  }

  void fail() { exit_code = std::max(exit_code, kExitFail); }

  void error(const Error& e) {
    json diag = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) diag["position"] = se->position();
    switch (e.code()) {
      case ErrorCode::DegenerateTangency:
        diag["hint"] = "perturb the radius slightly (e.g. by 1%)";
        break;
      case ErrorCode::CircuitIsLeaf:
        diag["hint"] = "the circle is a leaf; move its center off the singular point";
        break;
      case ErrorCode::SingularOnCircuit:
      case ErrorCode::NonConvergent:
        diag["hint"] = "choose a circle that stays away from singular points";
        break;
      default:
        break;
    }
    doc["diagnostics"]["error"] = diag;
    exit_code = is_input_error(e.code()) ? kExitInput : kExitFail;
  }

  void write(std::ostream& out) {
    doc["inputs_digest"] = fnv1a(doc["inputs"].dump() + digest_source);
    doc["exit_code"] = exit_code;
    doc["status"] = exit_code == kExitPass ? "pass" : exit_code == kExitFail ? "fail" : "error";
    out << doc.dump(2) << '\n';
  }
};

struct FieldInput {
  PlaneField field;
  std::optional<std::string> builtin;
};

FieldInput resolve_field(const std::string& spec, Report& report) {
  report.doc["inputs"]["field"] = spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::ostringstream ss;
    ss << in.rdbuf();
    report.digest_source += ss.str();
    PlaneField f = parse_field_text(ss.str());
    std::optional<std::string> builtin;
    const json doc = json::parse(ss.str());
    if (doc.value("kind", "") == "builtin") builtin = doc.value("name", "");
    return {std::move(f), builtin};
  }
  if (spec.find('/') == std::string::npos && spec.find('.') == std::string::npos)
    return {catalog_get(spec).field, spec};
  throw Error(ErrorCode::FormatError, "cannot open field file '" + spec + "'");
}

Vec2 parse_center(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "center must be 'X,Y'");
  return {parse_double(parts[0], "center"), parse_double(parts[1], "center")};
}

json tangency_json(const std::vector<Tangency>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back({{"angle", t.angle}, {"kind", to_string(t.kind)}, {"h2", t.second_order}});
  return arr;
}

json surface_json(const SurfaceReport& s) {
  return {{"sigma0", s.vertices}, {"sigma1", s.edges}, {"sigma2", s.faces},
          {"chi", s.chi},         {"orientable", s.orientable}, {"components", s.components}};
}

struct MeshArgs {
  std::string mesh;
  int genus = -1;
  int crosscaps = -1;
};

Triangulation resolve_mesh(const MeshArgs& a, Report& report) {
  const int chosen = !a.mesh.empty() + (a.genus >= 0) + (a.crosscaps >= 0);
  if (chosen != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --mesh, --genus, --crosscaps");
  if (!a.mesh.empty()) {
    report.doc["inputs"]["mesh"] = a.mesh;
    std::ifstream in(a.mesh);
    if (!in) throw Error(ErrorCode::FormatError, "cannot open triangulation file '" + a.mesh + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    report.digest_source += ss.str();
    return parse_triangulation(ss.str());
  }
  if (a.genus >= 0) {
    report.doc["inputs"]["genus"] = a.genus;
    return generate_surface(SurfaceSpec::genus(a.genus));
  }
  report.doc["inputs"]["crosscaps"] = a.crosscaps;
  return generate_surface(SurfaceSpec::crosscaps(a.crosscaps));
}

SurgeryStep parse_step(const std::string& tok) {
  const auto parts = split(tok, ':');
  if (parts.empty() || parts.size() > 3 || (parts[0] != "A" && parts[0] != "B"))
    throw Error(ErrorCode::InvalidArgument, "bad surgery step '" + tok + "'; expected A, B, or A:<lostC>:<lostC'>");
  SurgeryStep s;
  s.scenario = parts[0] == "A" ? Scenario::A : Scenario::B;
  if (parts.size() > 1) s.extra_convex_lost = parse_int(parts[1], "convex loss");
  if (parts.size() > 2) s.extra_concave_lost = parse_int(parts[2], "concave loss");
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare index toolkit: singular indices of plane fields, index sums on surfaces, "
               "Euler obstruction arithmetic"};
  app.name(args.empty() ? "pindex" : std::filesystem::path(args.front()).filename().string());
  app.require_subcommand(1);

  std::function<void(Report&)> action;
  std::string command;

  // index
  std::string field_spec;
  std::string center_text;
  double radius = 1.0;
  std::string method = "all";
  int max_depth = WindingOptions{}.max_depth;
  int samples = WindingOptions{}.initial_samples;
  auto* index_cmd = app.add_subcommand("index", "Poincare index of the singularity inside a circle");
  index_cmd->add_option("--field", field_spec, "field JSON file or catalog name")->required();
  index_cmd->add_option("--center", center_text, "circle center X,Y (default: singular point)");
  index_cmd->add_option("--radius", radius, "circle radius");
  index_cmd->add_option("--method", method, "winding | bendixson | hamburger | all | bound")
      ->check(CLI::IsMember({"winding", "bendixson", "hamburger", "all", "bound"}));
  index_cmd->add_option("--samples", samples, "initial winding samples");
  index_cmd->add_option("--max-depth", max_depth, "winding bisection depth");
  index_cmd->callback([&] {
    command = "index";
    action = [&](Report& r) {
      r.doc["inputs"]["radius"] = radius;
      r.doc["inputs"]["method"] = method;
      const FieldInput in = resolve_field(field_spec, r);
      const Vec2 center = center_text.empty() ? in.field.singular_point() : parse_center(center_text);
      r.doc["inputs"]["center"] = {center.x, center.y};
      const Circle circle{center, radius};
      WindingOptions wopts;
      wopts.max_depth = max_depth;
      wopts.initial_samples = samples;

      if (method == "bound") {
        if (!in.builtin) throw Error(ErrorCode::InvalidArgument, "--method bound needs a catalog field");
        const LoopFreeVerdict v = loop_free_bound_check(catalog_get(*in.builtin), circle, wopts);
        r.doc["results"]["loop_free_bound"] = {{"index", half(v.index)}, {"holds", v.holds}};
        if (!v.holds) r.fail();
        return;
      }

      std::vector<HalfIndex> found;
      if (method == "winding" || method == "all") {
        const WindingResult w = winding_index(in.field, circle, wopts);
        r.doc["results"]["winding"] = {{"index", half(w.index)},
                                       {"samples_used", w.samples_used},
                                       {"max_step_angle", w.max_step_angle},
                                       {"residual", w.residual}};
        found.push_back(w.index);
      }
      if (method == "bendixson" || method == "hamburger" || method == "all") {
        const auto ts = find_tangencies(in.field, circle);
        const TangencyCensus c = census(ts);
        r.doc["diagnostics"]["tangencies"] = tangency_json(ts);
        if (method != "hamburger") {
          const HalfIndex j = bendixson_index(c.internal, c.external);
          r.doc["results"]["bendixson"] = {{"internal", c.internal}, {"external", c.external}, {"index", half(j)}};
          found.push_back(j);
        }
        if (method != "bendixson") {
          const TaggedCircuit circuit = circuit_from_tangencies(ts);
          const HalfIndex j = hamburger_index(circuit.convex(), circuit.concave());
          r.doc["results"]["hamburger"] = {
              {"convex", circuit.convex()}, {"concave", circuit.concave()}, {"index", half(j)}};
          found.push_back(j);
        }
      }
      const bool agree = std::all_of(found.begin(), found.end(), [&](HalfIndex j) { return j == found.front(); });
      r.doc["results"]["index"] = half(found.front());
      r.doc["results"]["agree"] = agree;
      if (!agree) r.fail();
    };
  });

  // tangencies
  auto* tan_cmd = app.add_subcommand("tangencies", "tangencies of the field with a circle");
  tan_cmd->add_option("--field", field_spec, "field JSON file or catalog name")->required();
  tan_cmd->add_option("--center", center_text, "circle center X,Y (default: singular point)");
  tan_cmd->add_option("--radius", radius, "circle radius");
  tan_cmd->callback([&] {
    command = "tangencies";
    action = [&](Report& r) {
      r.doc["inputs"]["radius"] = radius;
      const FieldInput in = resolve_field(field_spec, r);
      const Vec2 center = center_text.empty() ? in.field.singular_point() : parse_center(center_text);
      r.doc["inputs"]["center"] = {center.x, center.y};
      const auto ts = find_tangencies(in.field, Circle{center, radius});
      const TangencyCensus c = census(ts);
      r.doc["results"]["tangencies"] = tangency_json(ts);
      r.doc["results"]["internal"] = c.internal;
      r.doc["results"]["external"] = c.external;
      r.doc["results"]["index"] = half(bendixson_index(c.internal, c.external));
    };
  });

  // ph / poincare1885
  MeshArgs mesh;
  auto add_mesh_options = [&](CLI::App* cmd) {
    cmd->add_option("--mesh", mesh.mesh, "triangulation file (.tri)");
    cmd->add_option("--genus", mesh.genus, "use the generated orientable surface of this genus");
    cmd->add_option("--crosscaps", mesh.crosscaps, "use the generated surface with this many crosscaps");
  };
  auto* ph_cmd = app.add_subcommand("ph", "index sum of the barycentric field on a closed surface");
  add_mesh_options(ph_cmd);
  ph_cmd->callback([&] {
    command = "ph";
    action = [&](Report& r) {
      const DiscretePhReport p = discrete_ph_sum(resolve_mesh(mesh, r));
      r.doc["results"]["surface"] = surface_json(p.surface);
      r.doc["results"]["singularities"] = {{"vertex", {{"count", p.vertex_singularities}, {"index", 1}}},
                                           {"edge", {{"count", p.edge_singularities}, {"index", -1}}},
                                           {"face", {{"count", p.face_singularities}, {"index", 1}}}};
      r.doc["results"]["index_sum"] = p.index_sum;
      r.doc["results"]["passed"] = p.passed();
      if (!p.passed()) r.fail();
    };
  });
  auto* p85_cmd = app.add_subcommand("poincare1885", "vertex-contact counting check of the index sum");
  add_mesh_options(p85_cmd);
  p85_cmd->callback([&] {
    command = "poincare1885";
    action = [&](Report& r) {
      const Poincare1885Report p = poincare_1885_check(resolve_mesh(mesh, r));
      r.doc["results"]["surface"] = surface_json(p.surface);
      r.doc["results"]["vertex_excess"] = p.vertex_excess;
      r.doc["results"]["two_sigma0_minus_three_sigma2"] = p.excess_formula;
      r.doc["results"]["three_sigma2"] = p.three_sigma2;
      r.doc["results"]["two_sigma1"] = p.two_sigma1;
      r.doc["results"]["total"] = half(HalfIndex::from_doubled(p.doubled_total));
      r.doc["results"]["identities"] = {{"vertex_excess", p.excess_identity},
                                        {"three_sigma2_eq_two_sigma1", p.edge_face_identity},
                                        {"total_eq_chi", p.total_identity}};
      r.doc["results"]["passed"] = p.passed();
      if (!p.passed()) r.fail();
    };
  });

  // lift
  int two_j = 0;
  bool numeric_only = false;
  auto* lift_cmd = app.add_subcommand("lift", "index on the orientation double cover");
  lift_cmd->add_option("--two-j", two_j, "doubled index of the singularity (odd)")->required();
  lift_cmd->add_option("--radius", radius, "downstairs circle radius");
  lift_cmd->add_flag("--numeric-only", numeric_only, "skip the closed-form relation");
  lift_cmd->callback([&] {
    command = "lift";
    action = [&](Report& r) {
      r.doc["inputs"]["two_j"] = two_j;
      r.doc["inputs"]["radius"] = radius;
      if (!numeric_only) {
        const HalfIndex j = HalfIndex::from_doubled(two_j);
        const HalfIndex i = index_lift_relation(j);
        r.doc["results"]["relation"] = {{"j", half(j)}, {"i", half(i)}, {"inverse", half(index_descend_relation(i))}};
      }
      const LiftCheckReport c = numeric_lift_check(two_j, Circle{{0.0, 0.0}, radius});
      r.doc["results"]["numeric"] = {{"downstairs", half(c.downstairs)},
                                     {"upstairs", half(c.upstairs)},
                                     {"predicted", half(c.predicted)},
                                     {"upstairs_radius", c.upstairs_radius},
                                     {"residual", c.residual},
                                     {"passed", c.passed()}};
      if (!c.passed()) r.fail();
    };
  });

  // rh
  std::int64_t chi = 0;
  std::int64_t deg = -1;
  std::string orientable_list;
  std::string nonorientable_list;
  auto* rh_cmd = app.add_subcommand("rh", "Riemann-Hurwitz count, optionally with a singular partition chain");
  rh_cmd->add_option("--chi", chi, "Euler characteristic of the base surface")->required();
  rh_cmd->add_option("--deg", deg, "number of branch points");
  rh_cmd->add_option("--orientable", orientable_list, "indices of orientable singularities, e.g. 2/2,4/2");
  rh_cmd->add_option("--nonorientable", nonorientable_list, "indices of non-orientable singularities, e.g. 1/2,1/2");
  rh_cmd->callback([&] {
    command = "rh";
    action = [&](Report& r) {
      r.doc["inputs"]["chi"] = chi;
      const bool partition = rh_cmd->count("--orientable") + rh_cmd->count("--nonorientable") > 0;
      if (!partition) {
        if (deg < 0) throw Error(ErrorCode::InvalidArgument, "give --deg or a singular partition");
        r.doc["inputs"]["deg"] = deg;
        r.doc["results"]["cover_chi"] = riemann_hurwitz(chi, deg);
        return;
      }
      SingularPartition p{parse_half_list(orientable_list), parse_half_list(nonorientable_list), chi};
      r.doc["inputs"]["orientable"] = half_list(p.orientable);
      r.doc["inputs"]["nonorientable"] = half_list(p.non_orientable);
      if (deg >= 0 && deg != static_cast<std::int64_t>(p.non_orientable.size()))
        throw Error(ErrorCode::InvalidArgument, "--deg must equal the number of non-orientable singularities");
      auto emit = [&](const ReductionReport& rep) {
        r.doc["results"]["index_sum"] = half(rep.index_sum);
        r.doc["results"]["deg"] = rep.ramification;
        r.doc["results"]["cover_chi"] = rep.cover_chi;
        r.doc["results"]["upstairs"] = half_list(rep.upstairs);
        r.doc["results"]["upstairs_sum"] = half(rep.upstairs_sum);
        r.doc["results"]["chain"] = {
            {"sum_j", half(rep.index_sum)},
            {"half_upstairs_sum_plus_deg", half(rep.half_of_upstairs_plus_ramification)},
            {"half_cover_chi_plus_deg", half(rep.half_of_cover_chi_plus_ramification)},
            {"chi_base", chi},
            {"upstairs_formula_holds", rep.upstairs_formula_holds},
            {"holds", rep.chain_holds}};
        r.doc["diagnostics"]["assumption"] =
            "each preimage of an orientable singularity carries its index j; the index formula on the cover is "
            "assumed";
      };
      try {
        emit(reduction_sum_check(p));
      } catch (const ChiMismatchError& e) {
        emit(e.report());
        throw;
      }
    };
  });

  // feasible
  std::int64_t chi_bag = 0;
  std::int64_t pipes = 0;
  std::string caps_text;
  auto* feas_cmd = app.add_subcommand("feasible", "Euler obstruction for a bagpipe summary");
  feas_cmd->add_option("--chi-bag", chi_bag, "Euler characteristic of the bag")->required();
  feas_cmd->add_option("--pipes", pipes, "number of pipes")->required();
  feas_cmd->add_option("--caps", caps_text, "cap indices i(q_i), e.g. 2/2,0/2");
  feas_cmd->callback([&] {
    command = "feasible";
    action = [&](Report& r) {
      r.doc["inputs"]["chi_bag"] = chi_bag;
      r.doc["inputs"]["pipes"] = pipes;
      BagpipeSpec spec{chi_bag, pipes, std::nullopt};
      if (feas_cmd->count("--caps")) {
        spec.cap_indices = parse_half_list(caps_text);
        r.doc["inputs"]["caps"] = half_list(*spec.cap_indices);
      }
      const Verdict v = foliation_feasibility(spec);
      r.doc["results"]["feasible"] = v.feasible;
      r.doc["results"]["chi_m"] = v.chi_m;
      r.doc["results"]["chi_f"] = v.chi_f;
      r.doc["results"]["required_cap_sum"] = half(v.required_cap_sum);
      if (v.witness)
        r.doc["results"]["witness"] = {{"caps", half_list(v.witness->caps)},
                                       {"punctures", half_list(v.witness->punctures)}};
      json chain = json::array();
      for (const auto& c : v.chain) chain.push_back({{"equation", c.equation}, {"instance", c.instance}, {"holds", c.holds}});
      r.doc["diagnostics"]["chain"] = chain;
      r.doc["diagnostics"]["note"] = v.note;
      if (!v.feasible) r.fail();
    };
  });

  // surgery
  std::int64_t c_count = 0;
  std::int64_t cprime = 0;
  std::string steps_text;
  auto* surg_cmd = app.add_subcommand("surgery", "replay concavity-reducing surgeries on (c, c') counts");
  surg_cmd->add_option("--c", c_count, "convex vertices")->required();
  surg_cmd->add_option("--cprime", cprime, "concave vertices")->required();
  surg_cmd->add_option("--steps", steps_text, "comma-separated steps: A, B, or A:<lost c>:<lost c'>");
  surg_cmd->callback([&] {
    command = "surgery";
    action = [&](Report& r) {
      r.doc["inputs"]["c"] = c_count;
      r.doc["inputs"]["cprime"] = cprime;
      r.doc["inputs"]["steps"] = steps_text;
      std::vector<SurgeryStep> steps;
      if (!steps_text.empty())
        for (const auto& tok : split(steps_text, ',')) steps.push_back(parse_step(tok));
      const SurgeryTrace t = surgery_replay({c_count, cprime}, steps);
      json trace = json::array();
      for (const auto& p : t.trace) trace.push_back({{"c", p.convex}, {"cprime", p.concave}});
      r.doc["results"]["trace"] = trace;
      r.doc["results"]["steps_applied"] = t.steps_applied;
      r.doc["results"]["reached_zero"] = t.reached_zero;
      if (t.bound) {
        r.doc["results"]["bound"] = half(*t.bound);
        r.doc["results"]["bound_le_one"] = *t.bound <= HalfIndex::from_int(1);
      }
    };
  });

  // plot
  std::string out_path;
  int grid = 40;
  double extent = 2.0;
  double circle_radius = 0.0;
  bool no_streamlines = false;
  auto* plot_cmd = app.add_subcommand("plot", "write an SVG phase portrait");
  plot_cmd->add_option("--field", field_spec, "field JSON file or catalog name")->required();
  plot_cmd->add_option("--out", out_path, "output SVG path")->required();
  plot_cmd->add_option("--grid", grid, "direction ticks per side");
  plot_cmd->add_option("--extent", extent, "half-width of the window");
  plot_cmd->add_option("--circle", circle_radius, "overlay a circle of this radius with its tangencies");
  plot_cmd->add_flag("--no-streamlines", no_streamlines, "direction ticks only");
  plot_cmd->callback([&] {
    command = "plot";
    action = [&](Report& r) {
      r.doc["inputs"]["grid"] = grid;
      r.doc["inputs"]["extent"] = extent;
      const FieldInput in = resolve_field(field_spec, r);
      PlotOptions opts;
      opts.grid = grid;
      opts.extent = extent;
      opts.streamlines = !no_streamlines;
      if (plot_cmd->count("--circle")) {
        if (!(circle_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "--circle must be positive");
        opts.circle = circle_radius;
        r.doc["inputs"]["circle"] = circle_radius;
      }
      const std::string svg = plot_svg(in.field, opts);
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + out_path + "'");
      f << svg;
      r.doc["results"]["out"] = out_path;
      r.doc["results"]["bytes"] = svg.size();
      r.doc["results"]["svg_digest"] = fnv1a(svg);
    };
  });

  // catalog
  std::string catalog_name;
  auto* cat_cmd = app.add_subcommand("catalog", "list the built-in singularities");
  cat_cmd->add_option("--name", catalog_name, "show a single entry");
  cat_cmd->callback([&] {
    command = "catalog";
    action = [&](Report& r) {
      auto entry_json = [](const CatalogEntry& e) {
        return json{{"name", e.name},
                    {"field", e.field.describe()},
                    {"expected_index", half(e.expected_index)},
                    {"has_loops", e.has_loops},
                    {"orientable", e.orientable},
                    {"provenance", e.provenance}};
      };
      if (!catalog_name.empty()) {
        r.doc["inputs"]["name"] = catalog_name;
        r.doc["results"]["entry"] = entry_json(catalog_get(catalog_name));
        return;
      }
      json arr = json::array();
      for (const auto& e : catalog_entries()) arr.push_back(entry_json(e));
      r.doc["results"]["entries"] = arr;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return kExitInput;
  }

  Report report(command, args);
  try {
    action(report);
  } catch (const Error& e) {
    report.error(e);
  }
  report.write(out);
  return report.exit_code;
}

}  // namespace pindex
