#include "gerst/descent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gerst {

bool DescentStep::ok() const {
  return std::all_of(obligations.begin(), obligations.end(), [](const Obligation& o) { return o.holds; });
}

bool DescentTrace::ok() const {
  return std::all_of(steps.begin(), steps.end(), [](const DescentStep& s) { return s.ok(); });
}

namespace {

std::string describe_failure(const DescentStep& step) {
  std::ostringstream os;
  os << step.move;
  if (!step.note.empty()) os << " (" << step.note << ")";
  for (const auto& o : step.obligations) {
    if (!o.holds) os << "; " << o.name << ": " << o.detail;
  }
  return os.str();
}

// a inside b with strictly fewer boxes.
bool strictly_inside(const HeightMap& a, const HeightMap& b) {
  const auto [x, y] = aligned(a.values(), b.values());
  return (x <= y).all() && x.sum() < y.sum();
}

long intersection_size(const HeightMap& a, const HeightMap& b) {
  const auto [x, y] = aligned(a.values(), b.values());
  return x.size() == 0 ? 0 : static_cast<long>(x.min(y).sum());
}

long total_height(const std::vector<int>& h) { return std::accumulate(h.begin(), h.end(), 0L); }

CompatibleFloorPlan drop_empty(CompatibleFloorPlan p) {
  CompatibleFloorPlan out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.h[i] == 0) continue;
    out.P.push_back(p.P[i]);
    out.Q.push_back(p.Q[i]);
    out.h.push_back(p.h[i]);
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> first_overlap(const CompatibleFloorPlan& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.P[i] == p.Q[j]) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace

ObligationFailure::ObligationFailure(DescentStep step)
    : Error(ErrorCode::ObligationFailed, describe_failure(step)), step_(std::move(step)) {}

long plan_deficiency(const CompatibleFloorPlan& p) {
  return intersection_size(max_score_table(p.left()), max_score_table(p.right())) - total_height(p.h);
}

std::optional<int> shrink_blocker(const FloorPlan& p, std::size_t i, int axis) {
  if (axis != 1 && axis != 2) throw Error(ErrorCode::PreconditionFailed, "axis must be 1 or 2");
  if (i >= p.size()) throw Error(ErrorCode::PreconditionFailed, "index out of range");
  // Axis 2 is axis 1 with the coordinates swapped.
  const std::size_t a = axis == 1 ? 0 : 1;
  const std::size_t o = 1 - a;
  const Point& pi = p.P[i];
  if (pi[a] == 0) return -1;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p.P[j][a] == pi[a] - 1 && p.P[j][o] >= pi[o]) return static_cast<int>(j);
  }
  return std::nullopt;
}

FloorPlan shrink_step(const FloorPlan& p, std::size_t i, int axis) {
  check_plan(p);
  if (const auto j = shrink_blocker(p, i, axis)) {
    const std::string what = *j < 0 ? "point " + std::to_string(i) + " is on the boundary"
                                    : "point " + std::to_string(i) + " is blocked by point " + std::to_string(*j);
    throw BlockedMove(what, *j);
  }
  FloorPlan out = p;
  out.P[i][axis == 1 ? 0 : 1] -= 1;
  if (!strictly_inside(max_score_table(out), max_score_table(p))) {
    throw Error(ErrorCode::ObligationFailed, "shrinking point " + std::to_string(i) + " did not shrink the realization");
  }
  return out;
}

CompatibleFloorPlan shrink_step(const CompatibleFloorPlan& p, PlanSide side, std::size_t i, int axis) {
  CompatibleFloorPlan out = p;
  if (side == PlanSide::P) {
    out.P = shrink_step(p.left(), i, axis).P;
  } else {
    out.Q = shrink_step(p.right(), i, axis).P;
  }
  return out;
}

CompatibleFloorPlan resolve_overlap(const CompatibleFloorPlan& p) {
  check_plan(p);
  const auto hit = first_overlap(p);
  if (!hit) throw Error(ErrorCode::NoOverlap, "P and Q share no point");
  const auto [i, j] = *hit;
  const HeightMap mp = max_score_table(p.left());
  const HeightMap mq = max_score_table(p.right());
  const Point& v = p.P[i];
  CompatibleFloorPlan out = p;
  if (mp(v[0], v[1]) >= mq(v[0], v[1])) {
    out.h[j] -= 1;
  } else {
    out.h[i] -= 1;
  }
  return drop_empty(std::move(out));
}

CompatibleFloorPlan peel_maximal(const CompatibleFloorPlan& p) {
  check_plan(p);
  const BoxSet sp = support(p.left());
  const BoxSet sq = support(p.right());
  bool outer_is_q;
  if (sp.is_subset_of(sq)) {
    outer_is_q = true;
  } else if (sq.is_subset_of(sp)) {
    outer_is_q = false;
  } else {
    throw BlockedMove("supp(P) and supp(Q) are not nested", -1);
  }
  const FloorPlan outer = outer_is_q ? p.right() : p.left();
  const BoxSet maxima = support_maxima(outer);
  CompatibleFloorPlan out = p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (maxima.contains(outer.P[i])) out.h[i] -= 1;
  }
  return drop_empty(std::move(out));
}

DescentStep checked_step(const std::string& move, const CompatibleFloorPlan& before,
                         const CompatibleFloorPlan& after, std::string note) {
  DescentStep step{move, std::move(note), before, after, {}};
  const CompatibleTower tb = realize_compatible(before);
  const CompatibleTower ta = realize_compatible(after);
  const long db = static_cast<long>(diagram_intersection(tb.lambda, tb.mu).size()) - tb.nu_size();
  const long da = static_cast<long>(diagram_intersection(ta.lambda, ta.mu).size()) - ta.nu_size();
  auto add = [&](std::string name, bool holds, std::string detail) {
    step.obligations.push_back({std::move(name), holds, std::move(detail)});
  };
  const auto report = validate_tower(ta);
  add("valid realization", report.valid(), report.summary());
  add("after <= before", tower_leq(ta, tb),
      "deficiency " + std::to_string(da) + " vs " + std::to_string(db) + ", " + std::string(to_string(compare_towers(ta, tb))));
  const auto strict = [&](const YoungDiagram& a, const YoungDiagram& b) {
    return a.is_subset_of(b) && a.size() < b.size();
  };
  const auto sizes = [](const YoungDiagram& a, const YoungDiagram& b) {
    return std::to_string(a.size()) + " vs " + std::to_string(b.size());
  };
  if (move == "shrink_P" || move == "peel_maximal") {
    add("lambda shrinks", strict(ta.lambda, tb.lambda), sizes(ta.lambda, tb.lambda));
  }
  if (move == "shrink_Q" || move == "peel_maximal") {
    add("mu shrinks", strict(ta.mu, tb.mu), sizes(ta.mu, tb.mu));
  }
  if (move == "resolve_overlap") {
    const long ib = db + tb.nu_size();
    const long ia = da + ta.nu_size();
    add("intersection drops", ia <= ib - 1, std::to_string(ia) + " vs " + std::to_string(ib));
  }
  if (move == "peel_maximal") {
    add("peel inequality", da <= db, std::to_string(da) + " vs " + std::to_string(db));
  }
  return step;
}

namespace {

void record(DescentTrace& trace, DescentStep step) {
  if (!step.ok()) throw ObligationFailure(std::move(step));
  trace.steps.push_back(std::move(step));
}

std::string index_note(std::size_t i, int axis) {
  return "index " + std::to_string(i) + ", axis " + std::to_string(axis);
}

}  // namespace

Minimized minimize(const CompatibleFloorPlan& p) {
  check_plan(p);
  Minimized out{p, {p, {}}};
  CompatibleFloorPlan& cur = out.plan;
  while (true) {
    if (const auto hit = first_overlap(cur)) {
      auto next = resolve_overlap(cur);
      record(out.trace, checked_step("resolve_overlap", cur, next,
                                     "P[" + std::to_string(hit->first) + "] = Q[" + std::to_string(hit->second) + "]"));
      cur = std::move(next);
      continue;
    }
    bool moved = false;
    for (const PlanSide side : {PlanSide::P, PlanSide::Q}) {
      const FloorPlan plan = side == PlanSide::P ? cur.left() : cur.right();
      for (std::size_t i = 0; i < plan.size() && !moved; ++i) {
        for (const int axis : {1, 2}) {
          if (shrink_blocker(plan, i, axis)) continue;
          auto next = shrink_step(cur, side, i, axis);
          record(out.trace, checked_step(side == PlanSide::P ? "shrink_P" : "shrink_Q", cur, next, index_note(i, axis)));
          cur = std::move(next);
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved) return out;
  }
}

DescentTrace certify(const CompatibleFloorPlan& p) {
  check_plan(p);
  if (has_repeated_points(p.P) || has_repeated_points(p.Q)) {
    throw Error(ErrorCode::InvalidFloorPlan, "repeated position in P or Q");
  }
  DescentTrace trace{p, {}};
  CompatibleFloorPlan cur = p;
  while (true) {
    auto m = minimize(cur);
    for (auto& s : m.trace.steps) trace.steps.push_back(std::move(s));
    cur = std::move(m.plan);
    if (cur.empty()) return trace;
    CompatibleFloorPlan next;
    try {
      next = peel_maximal(cur);
    } catch (const BlockedMove& e) {
      throw ObligationFailure({"peel_maximal", "", cur, cur, {{"peel applies", false, e.what()}}});
    }
    record(trace, checked_step("peel_maximal", cur, next));
    cur = std::move(next);
  }
}

}  // namespace gerst
