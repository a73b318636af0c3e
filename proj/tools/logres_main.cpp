// SPDX-License-Identifier: MIT
//
// Command line front end: computes invariants, centers, blowup charts, and
// full principalization trees for logarithmic chart data given as JSON.

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logres/config.hpp"
#include "logres/json_io.hpp"

using namespace logres;

namespace {

int exit_code_for(const std::string& code) {
  static const std::set<std::string> input = {
      "ParseError", "InconsistentPoint", "ZeroIdeal", "DimensionMismatch",
      "NotPointed"};
  static const std::set<std::string> consistency = {
      "EngineDisagreement", "InvariantDidNotDrop", "NoMaxContact",
      "InfiniteOrder"};
  if (input.count(code)) return 2;
  if (consistency.count(code)) return 3;
  return 4;  // resource and scope limits
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open output file: " + path);
  f << text;
}

RatPoint parse_point_arg(const std::string& arg, const LogChart& chart) {
  RatPoint p;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("point entry must be name=value: " + item);
    std::string name = item.substr(0, eq);
    Rat value = parse_rat(item.substr(eq + 1));
    if (std::find(chart.ordinary.begin(), chart.ordinary.end(), name) !=
        chart.ordinary.end()) {
      p.ordinary_values[name] = value;
    } else if (chart.monomial_names.count(name)) {
      p.monomial_values[name] = value;
    } else {
      throw ParseError("unknown coordinate in point: " + name);
    }
  }
  return p;
}

EngineMode parse_engine(const std::string& s) {
  if (s == "literal") return EngineMode::Literal;
  if (s == "presentation") return EngineMode::Presentation;
  if (s == "both") return EngineMode::Both;
  throw ParseError("unknown engine: " + s);
}

struct Options {
  std::string input_path;
  std::string output_path;
  std::vector<std::string> point_args;
  std::string engine = "presentation";
  std::string transform_kind = "weak";
  long max_steps = -1;
  long jet_bound = -1;
  bool approx_jet = false;
  unsigned long long seed = 0;
  bool seed_set = false;
};

void apply_limits(const Options& opt) {
  if (opt.max_steps >= 0) limits().max_steps = opt.max_steps;
  if (opt.jet_bound >= 0) limits().jet_factor = opt.jet_bound;
  if (opt.approx_jet) limits().approx_jet = true;
  if (opt.seed_set) limits().seed = opt.seed;
}

std::vector<RatPoint> gather_points(const Options& opt, const Input& in) {
  std::vector<RatPoint> pts = in.points;
  for (const auto& arg : opt.point_args)
    pts.push_back(parse_point_arg(arg, *in.chart));
  if (pts.empty()) pts.emplace_back();
  return pts;
}

Json point_report(const Input& in, const RatPoint& p, EngineMode mode) {
  InvResult r = invariant_at_point(in.ideal, p, mode);
  Json entry;
  entry["point"] = ratpoint_to_json(p);
  entry["invariant"] = invariant_to_json(r.inv);
  entry["center"] = center_to_json(r.center);
  entry["reduced_center"] = reduced_center_to_json(reduce_center(r.center));
  return entry;
}

int run_invariant(const Options& opt, bool reduced_only) {
  Input in = parse_input(read_input(opt.input_path));
  EngineMode mode = parse_engine(opt.engine);
  Json out;
  out["points"] = Json::array();
  for (const auto& p : gather_points(opt, in)) {
    Json entry = point_report(in, p, mode);
    if (reduced_only) {
      entry.erase("center");
    }
    out["points"].push_back(std::move(entry));
  }
  write_output(opt.output_path, out);
  return 0;
}

int run_blowup(const Options& opt) {
  Input in = parse_input(read_input(opt.input_path));
  EngineMode mode = parse_engine(opt.engine);
  InvResult r = invariant_at_origin(in.ideal, mode);
  if (r.inv.is_unit_stalk())
    throw ZeroIdeal("unit stalk at the origin: nothing to blow up");
  ReducedCenter rc = reduce_center(r.center);
  Ideal normalized = rc.normalization.apply(in.ideal);

  Json out;
  out["invariant"] = invariant_to_json(r.inv);
  out["center"] = reduced_center_to_json(rc);
  out["charts"] = Json::array();
  for (const auto& bc : blowup_charts(rc)) {
    Json cj;
    cj["kind"] = bc.kind == BlowupChart::Kind::Param ? "param" : "mon";
    cj["index"] = bc.index;
    cj["torsion"] = bc.torsion;
    if (!bc.note.empty()) cj["note"] = bc.note;
    if (bc.torsion) {
      out["charts"].push_back(std::move(cj));
      continue;
    }
    cj["chart"] = chart_to_json(*bc.chart);
    cj["exceptional_point"] = point_to_json(bc.u_point);
    Json subs = Json::object();
    for (const auto& [name, poly] : bc.substitution)
      subs[name] = poly_str(poly);
    cj["substitution"] = std::move(subs);
    TransformResult t = transform(normalized, bc);
    cj["ell"] = t.ell;
    cj["weak"] = ideal_to_json(t.weak);
    if (opt.transform_kind == "proper") {
      if (t.proper.has_value())
        cj["proper"] = ideal_to_json(*t.proper);
      else
        cj["proper"] = nullptr;
    }
    out["charts"].push_back(std::move(cj));
  }
  write_output(opt.output_path, out);
  return 0;
}

int run_resolve(const Options& opt) {
  Input in = parse_input(read_input(opt.input_path));
  for (const auto& arg : opt.point_args)
    in.points.push_back(parse_point_arg(arg, *in.chart));
  EngineConfig cfg;
  cfg.engine = parse_engine(opt.engine);
  cfg.proper = opt.transform_kind == "proper";
  ChartTree tree = resolve(in, cfg);
  write_output(opt.output_path, tree_to_json(tree));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logarithmic principalization by weighted toroidal blowups"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input_path,
                    "input JSON document (- for stdin)")
        ->required();
    cmd->add_option("-o,--output", opt.output_path,
                    "output file (default stdout)");
    cmd->add_option("--engine", opt.engine,
                    "invariant engine: literal, presentation, both");
    cmd->add_option("--seed", opt.seed, "sampling seed")
        ->each([&](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--jet-bound", opt.jet_bound,
                    "jet expansion factor for contact normalization");
    cmd->add_flag("--approx-jet", opt.approx_jet,
                  "allow approximate jet-truncated contact data");
  };

  CLI::App* inv = app.add_subcommand("invariant", "invariant at given points");
  add_common(inv);
  inv->add_option("--point", opt.point_args,
                  "extra point, e.g. x=1,y=-1/2 (repeatable)");

  CLI::App* cen = app.add_subcommand("center", "reduced center at given points");
  add_common(cen);
  cen->add_option("--point", opt.point_args, "extra point (repeatable)");

  CLI::App* blo = app.add_subcommand("blowup", "charts of the first blowup");
  add_common(blo);
  blo->add_option("--transform", opt.transform_kind,
                  "transform to report: weak or proper");

  CLI::App* res = app.add_subcommand("resolve", "full principalization tree");
  add_common(res);
  res->add_option("--point", opt.point_args, "extra focus point (repeatable)");
  res->add_option("--max-steps", opt.max_steps, "round budget");
  res->add_option("--transform", opt.transform_kind,
                  "transform to track: weak or proper");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_limits(opt);
    if (app.got_subcommand(inv)) return run_invariant(opt, false);
    if (app.got_subcommand(cen)) return run_invariant(opt, true);
    if (app.got_subcommand(blo)) return run_blowup(opt);
    return run_resolve(opt);
  } catch (const LogresError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
