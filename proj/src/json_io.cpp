// Copyright (c) 2026 the logres authors.
// SPDX-License-Identifier: MIT

#include "logres/json_io.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace logres {

namespace {

Json int_to_json(const Int& v) {
  static const Int lo(std::numeric_limits<std::int64_t>::min());
  static const Int hi(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad integer literal: " + j.get<std::string>());
    }
  }
  throw ParseError("expected an integer, got " + std::string(j.type_name()));
}

Json action_to_json(const GroupAction& a) {
  Json j;
  j["order"] = a.order;
  Json w = Json::object();
  for (const auto& [name, k] : a.ordinary_weights) w[name] = k;
  j["ordinary_weights"] = std::move(w);
  j["lattice_weights"] = a.lattice_weights;
  return j;
}

GroupAction action_from_json(const Json& j) {
  GroupAction a;
  a.order = j.at("order").get<long>();
  if (j.contains("ordinary_weights"))
    for (const auto& [name, k] : j.at("ordinary_weights").items())
      a.ordinary_weights[name] = k.get<long>();
  if (j.contains("lattice_weights"))
    a.lattice_weights = j.at("lattice_weights").get<std::vector<long>>();
  return a;
}

Json mon_part_to_json(const std::pair<MonIdeal, Int>& mon) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : mon.first.gens) gens.push_back(point_to_json(g));
  j["gens"] = std::move(gens);
  j["root"] = int_to_json(mon.second);
  return j;
}

Json sub_to_json(const ChartSub& sub, const ChartPtr& chart) {
  Json steps = Json::array();
  for (const auto& st : sub.steps) {
    Json s;
    s["var"] = chart->ordinary[static_cast<size_t>(st.var_idx)];
    s["value"] = st.value.str();
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace

Json rat_to_json(const Rat& r) { return Json(rat_str(r)); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
  throw ParseError("expected a rational, got " + std::string(j.type_name()));
}

Json point_to_json(const LatticePoint& v) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(int_to_json(c));
  return j;
}

LatticePoint point_from_json(const Json& j) {
  if (!j.is_array())
    throw ParseError("expected a lattice point as an array of integers");
  LatticePoint v;
  v.reserve(j.size());
  for (const auto& c : j) v.push_back(int_from_json(c));
  return v;
}

Json chart_to_json(const LogChart& c) {
  Json j;
  j["ordinary_vars"] = c.ordinary;
  j["lattice_rank"] = c.rank();
  Json gens = Json::array();
  for (const auto& g : c.monoid.gens) gens.push_back(point_to_json(g));
  j["cone_generators"] = std::move(gens);
  Json names = Json::object();
  for (const auto& [name, pt] : c.monomial_names) names[name] = point_to_json(pt);
  j["monomial_names"] = std::move(names);
  Json exc = Json::array();
  for (const auto& e : c.exceptional) exc.push_back(point_to_json(e));
  j["exceptional"] = std::move(exc);
  Json acts = Json::array();
  for (const auto& a : c.actions) acts.push_back(action_to_json(a));
  j["actions"] = std::move(acts);
  return j;
}

ChartPtr chart_from_json(const Json& j) {
  LogChart c;
  try {
    if (j.contains("ordinary_vars"))
      c.ordinary = j.at("ordinary_vars").get<std::vector<std::string>>();
    long rank = j.value("lattice_rank", 0L);
    std::vector<LatticePoint> gens;
    if (j.contains("cone_generators"))
      for (const auto& g : j.at("cone_generators"))
        gens.push_back(point_from_json(g));
    c.monoid = make_cone(rank, std::move(gens));
    if (j.contains("monomial_names"))
      for (const auto& [name, pt] : j.at("monomial_names").items())
        c.monomial_names[name] = point_from_json(pt);
    if (j.contains("exceptional"))
      for (const auto& e : j.at("exceptional"))
        c.exceptional.push_back(point_from_json(e));
    if (j.contains("actions"))
      for (const auto& a : j.at("actions"))
        c.actions.push_back(action_from_json(a));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("chart document: ") + e.what());
  }
  return make_chart(std::move(c));
}

Json ratpoint_to_json(const RatPoint& p) {
  Json j;
  Json ov = Json::object();
  for (const auto& [name, v] : p.ordinary_values) ov[name] = rat_to_json(v);
  j["ordinary_values"] = std::move(ov);
  Json mv = Json::object();
  for (const auto& [name, v] : p.monomial_values) mv[name] = rat_to_json(v);
  j["monomial_values"] = std::move(mv);
  return j;
}

RatPoint ratpoint_from_json(const Json& j, const LogChart& chart) {
  RatPoint p;
  try {
    if (j.contains("ordinary_values"))
      for (const auto& [name, v] : j.at("ordinary_values").items()) {
        if (chart.var_index(name) < 0)
          throw ParseError("unknown ordinary variable in point: " + name);
        p.ordinary_values[name] = rat_from_json(v);
      }
    if (j.contains("monomial_values"))
      for (const auto& [name, v] : j.at("monomial_values").items()) {
        if (chart.monomial_names.find(name) == chart.monomial_names.end())
          throw ParseError("unknown monomial name in point: " + name);
        p.monomial_values[name] = rat_from_json(v);
      }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("point document: ") + e.what());
  }
  return p;
}

Json invariant_to_json(const InvariantSeq& s) {
  Json j = Json::array();
  for (const auto& e : s.entries) j.push_back(rat_to_json(e));
  if (s.inf) j.push_back("inf");
  return j;
}

Json center_to_json(const ToroidalCenter& c) {
  Json j;
  Json params = Json::array();
  for (const auto& [name, a] : c.params) {
    Json p;
    p["var"] = name;
    p["exponent"] = rat_to_json(a);
    params.push_back(std::move(p));
  }
  j["params"] = std::move(params);
  if (c.mon) j["mon"] = mon_part_to_json(*c.mon);
  j["normalization"] = sub_to_json(c.normalization, c.chart);
  return j;
}

Json reduced_center_to_json(const ReducedCenter& c) {
  Json j;
  Json params = Json::array();
  for (const auto& [name, n] : c.params) {
    Json p;
    p["var"] = name;
    p["weight"] = int_to_json(n);
    params.push_back(std::move(p));
  }
  j["params"] = std::move(params);
  if (c.mon) j["mon"] = mon_part_to_json(*c.mon);
  j["ell"] = int_to_json(c.ell);
  j["normalization"] = sub_to_json(c.normalization, c.chart);
  j["text"] = c.str();
  return j;
}

Json ideal_to_json(const Ideal& i) {
  Json j = Json::array();
  for (const auto& g : i.gens) j.push_back(g.str());
  return j;
}

Json tree_to_json(const ChartTree& t) {
  Json j;
  j["complete"] = t.complete;
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    Json nj;
    nj["id"] = n.id;
    nj["parent"] = n.parent;
    nj["edge_kind"] = n.edge_kind;
    nj["edge_ell"] = n.edge_ell;
    nj["center"] = n.center_desc;
    nj["note"] = n.note;
    nj["blown"] = n.blown;
    nj["torsion_leaf"] = n.torsion_leaf;
    if (n.chart) {
      nj["chart"] = chart_to_json(*n.chart);
      nj["ideal"] = ideal_to_json(n.ideal);
    }
    Json foci = Json::array();
    for (const auto& f : n.focus) {
      Json fj;
      fj["point"] = ratpoint_to_json(f.point);
      fj["invariant"] = invariant_to_json(f.inv);
      fj["over_center"] = f.over_center;
      fj["done"] = f.done;
      foci.push_back(std::move(fj));
    }
    nj["focus"] = std::move(foci);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json sj;
    sj["index"] = s.index;
    sj["maxinv_before"] = invariant_to_json(s.maxinv_before);
    sj["maxinv_after"] = invariant_to_json(s.maxinv_after);
    sj["blown_nodes"] = s.blown_nodes;
    sj["centers"] = s.centers;
    sj["ells"] = s.ells;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace logres
