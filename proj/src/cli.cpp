#include "tot/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tot/angle_input.hpp"
#include "tot/classification.hpp"
#include "tot/error.hpp"
#include "tot/float_triangle.hpp"
#include "tot/mc_kernels.hpp"
#include "tot/measure.hpp"
#include "tot/path.hpp"
#include "tot/svg_plot.hpp"
#include "tot/symmetry.hpp"

namespace tot::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct GlobalFlags {
  std::string format = "pi-rational";
  bool json = false;
  std::uint64_t seed = 1;
  std::int64_t samples = 0;
  std::string out;
};

Json pair_json(const PiRational& x, const PiRational& y) { return Json::array({format_pi(x), format_pi(y)}); }
Json pair_json(const TorusPoint& p) { return pair_json(p.xi1(), p.xi2()); }
Json float_pair(FloatPoint p) { return Json::array({p.xi1, p.xi2}); }

FloatPoint wrapped(FloatPoint p) {
  auto wrap = [](double x) {
    double r = std::fmod(x, 2 * std::numbers::pi);
    if (r < 0) r += 2 * std::numbers::pi;
    return r >= 2 * std::numbers::pi ? 0.0 : r;
  };
  return {wrap(p.xi1), wrap(p.xi2)};
}

Json triple_json(const AngleTriple& t) {
  return Json::array({format_pi(t.alpha()), format_pi(t.beta()), format_pi(t.gamma())});
}

Json loci_json(const std::vector<LocusId>& loci) {
  Json arr = Json::array();
  for (LocusId l : loci) arr.push_back(std::string(to_string(l)));
  return arr;
}

void flags_json(Json& j, const TypeFlags& f) {
  j["degenerate"] = f.degenerate;
  j["equilateral"] = f.equilateral;
  j["isosceles"] = f.isosceles_vertices.str();
  j["right"] = f.right_vertices.str();
  j["scalene"] = f.scalene;
  j["obtuse"] = f.obtuse;
  j["acute"] = f.acute;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_float(v.get<double>());
  return v.dump();
}

void write_text(std::ostream& os, const std::string& prefix, const Json& v) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) write_text(os, prefix.empty() ? key : prefix + "." + key, value);
    return;
  }
  if (v.is_array()) {
    const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      os << prefix << ":";
      for (const auto& x : v) os << " " << scalar_text(x);
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) write_text(os, prefix + "[" + std::to_string(i) + "]", v[i]);
    return;
  }
  os << prefix << ": " << scalar_text(v) << "\n";
}

void emit(std::ostream& out, const GlobalFlags& g, Json doc) {
  if (g.json) {
    Json wrapped;
    wrapped["schema_version"] = kSchemaVersion;
    for (auto& [k, v] : doc.items()) wrapped[k] = v;
    out << wrapped.dump(2) << "\n";
  } else {
    write_text(out, "", doc);
  }
}

AngleFormat format_of(const GlobalFlags& g) {
  auto f = parse_angle_format(g.format);
  if (!f) throw Error(ErrorKind::InvalidArgument, "unknown --format '" + g.format + "'");
  return *f;
}

PiRational exact_coordinate(const std::string& text, AngleFormat format) {
  const AngleValue v = parse_angle(text, format);
  if (!v.exact) throw Error(ErrorKind::InvalidArgument, "'" + text + "' is not a rational multiple of pi");
  return *v.exact;
}

// --- commands

Json cmd_classify(const std::vector<std::string>& angles, const GlobalFlags& g) {
  const AngleFormat format = format_of(g);
  std::array<AngleValue, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = parse_angle(angles[i], format);

  Json j;
  j["command"] = "classify";
  if (v[0].exact && v[1].exact && v[2].exact) {
    const AngleTriple t = make_triple(*v[0].exact, *v[1].exact, *v[2].exact);
    const TorusPoint p = rho(t);
    const Classification c = classify(p);
    j["exact"] = true;
    j["sheet"] = to_string(t.sheet());
    j["angles"] = triple_json(t);
    j["torus"] = pair_json(p);
    j["orientation"] = to_string(c.orientation);
    flags_json(j, taxonomy(t));
    j["loci"] = loci_json(c.loci);
    j["multiplicity"] = c.multiplicity;
    j["canonical"] = pair_json(c.canonical);
    return j;
  }
  const FloatTriangleReport r = classify_angles_float(v[0].radians, v[1].radians, v[2].radians);
  j["exact"] = false;
  j["sheet"] = to_string(r.sheet);
  j["angles"] = Json::array({r.angles[0], r.angles[1], r.angles[2]});
  j["torus"] = float_pair(r.torus);
  j["orientation"] = to_string(r.orientation);
  flags_json(j, r.flags);
  j["loci"] = loci_json(r.loci);
  j["multiplicity"] = r.multiplicity;
  j["canonical"] = float_pair(r.canonical);
  return j;
}

Json cmd_map(const std::vector<std::string>& args, bool relative, const GlobalFlags& g) {
  const AngleFormat format = format_of(g);
  std::array<AngleValue, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = parse_angle(args[i], format);
  const bool exact = v[0].exact && v[1].exact && v[2].exact;

  Json j;
  j["command"] = "map";
  j["exact"] = exact;
  if (relative) {
    if (exact) {
      j["arguments"] = Json::array({format_pi(*v[0].exact), format_pi(*v[1].exact), format_pi(*v[2].exact)});
      const TorusPoint p = project_relative(*v[0].exact, *v[1].exact, *v[2].exact);
      j["torus"] = pair_json(p);
      j["orientation"] = to_string(orientation(p));
    } else {
      j["arguments"] = Json::array({v[0].radians, v[1].radians, v[2].radians});
      const FloatPoint p{v[0].radians - v[2].radians, v[1].radians - v[2].radians};
      j["torus"] = float_pair(wrapped(p));
      j["orientation"] = to_string(float_orientation(p));
    }
    return j;
  }
  if (exact) {
    const AngleTriple t = make_triple(*v[0].exact, *v[1].exact, *v[2].exact);
    const TorusPoint p = rho(t);
    j["sheet"] = to_string(t.sheet());
    j["angles"] = triple_json(t);
    j["torus"] = pair_json(p);
    j["orientation"] = to_string(orientation(p));
  } else {
    const FloatTriangleReport r = classify_angles_float(v[0].radians, v[1].radians, v[2].radians);
    j["sheet"] = to_string(r.sheet);
    j["angles"] = Json::array({r.angles[0], r.angles[1], r.angles[2]});
    j["torus"] = float_pair(r.torus);
    j["orientation"] = to_string(r.orientation);
  }
  return j;
}

Json cmd_invert(const std::vector<std::string>& coords, const GlobalFlags& g) {
  const AngleFormat format = format_of(g);
  const TorusPoint p(exact_coordinate(coords[0], format), exact_coordinate(coords[1], format));
  const auto pre = rho_preimages(p);
  Json j;
  j["command"] = "invert";
  j["torus"] = pair_json(p);
  j["count"] = pre.size();
  Json arr = Json::array();
  for (const auto& t : pre) {
    Json e;
    e["sheet"] = to_string(t.sheet());
    e["angles"] = triple_json(t);
    arr.push_back(e);
  }
  j["preimages"] = arr;
  return j;
}

Json cmd_orbit(const std::vector<std::string>& coords, const GlobalFlags& g) {
  const AngleFormat format = format_of(g);
  const TorusPoint p(exact_coordinate(coords[0], format), exact_coordinate(coords[1], format));
  const auto points = orbit(p);
  Json j;
  j["command"] = "orbit";
  j["point"] = pair_json(p);
  j["size"] = points.size();
  j["multiplicity"] = multiplicity(p);
  j["canonical"] = pair_json(canonical_rep(p));
  Json stab = Json::array();
  for (const auto& s : stabilizer(p)) stab.push_back(s.str());
  j["stabilizer"] = stab;
  Json arr = Json::array();
  for (const auto& q : points) arr.push_back(pair_json(q));
  j["orbit"] = arr;
  return j;
}

Json cmd_measure(const GlobalFlags& g) {
  if (g.samples < 0) throw Error(ErrorKind::InvalidArgument, "--samples must be >= 0");
  const MeasureReport r = analytic_measures();
  Json j;
  j["command"] = "measure";
  Json a;
  a["total"] = r.total;
  a["obtuse"] = r.obtuse;
  a["acute"] = r.acute;
  a["isosceles"] = r.isosceles;
  a["right"] = r.right;
  a["degenerate"] = r.degenerate;
  a["obtuse_isosceles"] = r.obtuse_isosceles;
  a["acute_isosceles"] = r.acute_isosceles;
  j["analytic"] = a;
  Json ratios;
  for (const auto& [k, v] : r.ratios) ratios[k] = v;
  j["ratios"] = ratios;
  if (g.samples > 0) {
    Json mc;
    mc["generator"] = std::string(kGeneratorName);
    mc["seed"] = g.seed;
    mc["samples"] = g.samples;
    const mc::RegionCounts counts = mc::count_regions_parallel(g.seed, g.samples);
    mc["boundary_hits"] = counts.boundary;
    const std::tuple<Region, std::int64_t, double> rows[] = {
        {Region::Obtuse, counts.obtuse, r.obtuse / r.total},
        {Region::Acute, counts.acute, r.acute / r.total},
        {Region::PositiveOrientation, counts.positive, 0.5},
        {Region::NegativeOrientation, counts.negative, 0.5}};
    for (const auto& [region, hits, expected] : rows) {
      const McEstimate e = make_estimate(hits, g.samples, g.seed);
      Json row;
      row["probability"] = e.probability;
      row["standard_error"] = e.standard_error;
      row["analytic"] = expected;
      mc[std::string(to_string(region))] = row;
    }
    j["monte_carlo"] = mc;
  }
  return j;
}

Json cmd_path(const std::vector<std::string>& angles, const std::vector<double>& velocity, std::int64_t steps,
              double step_size, bool anti, const GlobalFlags& g) {
  const AngleFormat format = format_of(g);
  std::array<AngleValue, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = parse_angle(angles[i], format);
  FloatPoint start;
  Json start_json;
  if (v[0].exact && v[1].exact && v[2].exact) {
    const TorusPoint p = rho(make_triple(*v[0].exact, *v[1].exact, *v[2].exact));
    start = {p.xi1().radians(), p.xi2().radians()};
    start_json = pair_json(p);
  } else {
    start = classify_angles_float(v[0].radians, v[1].radians, v[2].radians).torus;
    start_json = float_pair(start);
  }
  PathOptions options;
  options.steps = steps;
  options.step_size = step_size;
  options.include_anti_loci = anti;
  const auto events = trace_path(start, {velocity[0], velocity[1]}, options);

  Json j;
  j["command"] = "path";
  j["start"] = start_json;
  j["velocity"] = Json::array({velocity[0], velocity[1]});
  j["steps"] = steps;
  j["step_size"] = step_size;
  Json arr = Json::array();
  for (const PathEvent& e : events) {
    Json row;
    row["step"] = e.step_index;
    row["kind"] = std::string(to_string(e.kind));
    row["locus"] = e.locus ? std::string(to_string(*e.locus)) : std::string("none");
    row["position"] = float_pair(e.position);
    row["refined"] = float_pair(e.refined_position);
    row["orientation_before"] = to_string(e.orientation_before);
    row["orientation_after"] = to_string(e.orientation_after);
    arr.push_back(row);
  }
  j["events"] = arr;
  return j;
}

Json cmd_plot(bool anti, double size, const GlobalFlags& g) {
  if (g.out.empty()) throw Error(ErrorKind::InvalidArgument, "plot needs --out <path>");
  if (g.samples < 0) throw Error(ErrorKind::InvalidArgument, "--samples must be >= 0");
  PlotOptions options;
  options.anti_loci = anti;
  options.samples = g.samples;
  options.seed = g.seed;
  options.size_px = size;
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + g.out + "' for writing");
  file << render_svg(options);
  if (!file.flush()) throw std::runtime_error("failed writing '" + g.out + "'");
  Json j;
  j["command"] = "plot";
  j["out"] = g.out;
  j["loci"] = plotted_loci(anti).size();
  j["samples"] = g.samples;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus of triangles: exact classification, symmetry and measure of triangle shapes", "tot"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "Angle input format")
      ->check(CLI::IsMember({"pi-rational", "degrees", "radians"}));
  app.add_flag("--json", g.json, "Emit JSON instead of key: value lines");
  app.add_option("--seed", g.seed, "Master seed for sampling");
  app.add_option("--samples", g.samples, "Monte Carlo sample count");
  app.add_option("--out", g.out, "Output file");

  std::vector<std::string> angles;
  std::vector<std::string> coords;
  bool relative = false;
  bool anti = false;
  std::vector<double> velocity;
  std::int64_t steps = 100;
  double step_size = 0.01;
  double size = 600.0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a labeled triangle given its three angles");
  classify_cmd->add_option("angles", angles, "alpha beta gamma")->expected(3)->required()->allow_extra_args(false);

  auto* map_cmd = app.add_subcommand("map", "Map angles (or three arguments with --relative) to the torus");
  map_cmd->add_option("values", angles, "alpha beta gamma")->expected(3)->required();
  map_cmd->add_flag("--relative", relative, "Treat the values as arguments theta1 theta2 theta3");

  auto* invert_cmd = app.add_subcommand("invert", "List every angle triple over a torus point");
  invert_cmd->add_option("point", coords, "xi1 xi2")->expected(2)->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a torus point under the relabeling group");
  orbit_cmd->add_option("point", coords, "xi1 xi2")->expected(2)->required();

  auto* measure_cmd = app.add_subcommand("measure", "Relative measures of triangle families");

  auto* path_cmd = app.add_subcommand("path", "Trace a straight path and report locus crossings");
  path_cmd->add_option("angles", angles, "start alpha beta gamma")->expected(3)->required();
  path_cmd->add_option("--velocity", velocity, "v1 v2 in rad per unit time")->expected(2)->required();
  path_cmd->add_option("--steps", steps, "Number of fixed steps")->check(CLI::NonNegativeNumber);
  path_cmd->add_option("--step-size", step_size, "Step length in time units")->check(CLI::PositiveNumber);
  path_cmd->add_flag("--anti", anti, "Also track the anti-isosceles and anti-right loci");

  auto* plot_cmd = app.add_subcommand("plot", "Write an SVG of the fundamental domain");
  plot_cmd->add_flag("--anti", anti, "Also draw the anti-isosceles and anti-right loci");
  plot_cmd->add_option("--size", size, "Plot side in pixels")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Json doc;
    if (*classify_cmd) doc = cmd_classify(angles, g);
    else if (*map_cmd) doc = cmd_map(angles, relative, g);
    else if (*invert_cmd) doc = cmd_invert(coords, g);
    else if (*orbit_cmd) doc = cmd_orbit(coords, g);
    else if (*measure_cmd) doc = cmd_measure(g);
    else if (*path_cmd) doc = cmd_path(angles, velocity, steps, step_size, anti, g);
    else if (*plot_cmd) doc = cmd_plot(anti, size, g);
    emit(out, g, doc);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kUsageError : kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace tot::cli
