#pragma once

#include "logres/blowup.hpp"
#include "logres/localize.hpp"
#include "logres/valuative.hpp"

namespace logres {

struct EngineConfig {
  EngineMode engine = EngineMode::Presentation;
  bool proper = false;  // track proper transforms where computable
};

struct FocusPoint {
  RatPoint point;
  InvariantSeq inv;
  bool over_center = false;  // maps to the blown-up point of the parent
  bool done = false;         // terminal (unit or zero stalk), or already blown
};

struct ChartNode {
  long id = 0;
  ChartPtr chart;
  Ideal ideal;  // weak (or proper) transform living on the chart
  std::vector<FocusPoint> focus;
  long parent = -1;
  std::string edge_kind;  // "param:<var>", "mon:<k>", "localize"
  long edge_ell = 0;
  std::string center_desc;  // center blown up at this node (if any)
  std::string note;         // torsion / pruning annotations
  bool blown = false;       // a center at this node was blown up
  bool torsion_leaf = false;
};

struct StepLog {
  int index = 0;
  InvariantSeq maxinv_before;
  InvariantSeq maxinv_after;
  std::vector<long> blown_nodes;
  std::vector<std::string> centers;
  std::vector<long> ells;
};

struct ChartTree {
  std::vector<ChartNode> nodes;
  std::vector<StepLog> steps;
  bool complete = false;
};

struct Input {
  ChartPtr chart;
  Ideal ideal;
  std::vector<RatPoint> points;  // origin is always included
};

// Parses the JSON input document (chart schema plus "ideal" and "points").
// Raises ParseError.
Input parse_input(const std::string& json_text);

// Extra candidate points: common rational zeros of the generators restricted
// to each coordinate axis (ordinary axes and named extremal monomial rays).
std::vector<RatPoint> sweep_points(const Ideal& i);

// Root tree with the invariant computed at every requested point; no blowups
// are performed yet.
ChartTree make_tree(const Input& input, const EngineConfig& cfg);

// One round: blows up every frontier point achieving the maximal invariant,
// verifies admissibility certificates and the invariant drop, and appends a
// step-log entry.  Returns false when the tree is already complete.
bool resolve_step(ChartTree& tree, const EngineConfig& cfg);

// Iterates rounds until every focus point is terminal; raises
// MaxStepsExceeded past the configured bound, InvariantDidNotDrop and
// IrrationalMaxLocus on consistency failures.
ChartTree resolve(const Input& input, const EngineConfig& cfg);

// Invariant data at an arbitrary rational point of the chart (localizes
// first when the point is not the origin).
InvResult invariant_at_point(const Ideal& i, const RatPoint& p,
                             EngineMode mode);

}  // namespace logres
