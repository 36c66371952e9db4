#pragma once

// Moves that shrink a compatible floor plan without increasing the
// deficiency of its realization, and the descent that drives any instance
// to the empty one. A finished descent certifies |nu| <= |lambda n mu|.

#include <optional>
#include <string>
#include <vector>

#include "gerst/floor_plan.hpp"

namespace gerst {

enum class PlanSide { P, Q };

struct Obligation {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct DescentStep {
  std::string move;  // shrink_P, shrink_Q, resolve_overlap or peel_maximal
  std::string note;  // which index and axis
  CompatibleFloorPlan before;
  CompatibleFloorPlan after;
  std::vector<Obligation> obligations;

  bool ok() const;
};

struct DescentTrace {
  CompatibleFloorPlan start;
  std::vector<DescentStep> steps;

  /// The instance the last step produced, or the start.
  const CompatibleFloorPlan& final() const { return steps.empty() ? start : steps.back().after; }
  bool ok() const;
};

/// PreconditionFailed raised by a move; `blocking()` names the index that
/// blocked it, or -1.
class BlockedMove : public Error {
 public:
  BlockedMove(const std::string& what, int blocking) : Error(ErrorCode::PreconditionFailed, what), blocking_(blocking) {}
  int blocking() const { return blocking_; }

 private:
  int blocking_;
};

/// ObligationFailed carrying the offending step.
class ObligationFailure : public Error {
 public:
  explicit ObligationFailure(DescentStep step);
  const DescentStep& step() const { return step_; }

 private:
  DescentStep step_;
};

/// |lambda n mu| - sum h of the realization, from the max-score tables.
long plan_deficiency(const CompatibleFloorPlan& p);

/// Why p_i may not move one step down along `axis` (1 or 2): -1 if the
/// coordinate is already 0, otherwise the index of a point on the adjacent
/// line that is not strictly below (axis 1) or left of (axis 2) p_i.
/// Empty when the move is allowed.
std::optional<int> shrink_blocker(const FloorPlan& p, std::size_t i, int axis);

/// p_i -= e_axis. Throws BlockedMove, or ObligationFailure if the
/// realization does not strictly shrink.
FloorPlan shrink_step(const FloorPlan& p, std::size_t i, int axis);
CompatibleFloorPlan shrink_step(const CompatibleFloorPlan& p, PlanSide side, std::size_t i, int axis);

/// At the first p_i = q_j, lower the height of the side with the smaller
/// max score there by one, dropping the index at zero. Throws NoOverlap.
CompatibleFloorPlan resolve_overlap(const CompatibleFloorPlan& p);

/// With supp(P) inside supp(Q), lower h at every index whose Q-point is
/// maximal in supp(Q), dropping indices at zero; mirrored when supp(Q) is
/// inside supp(P). Throws BlockedMove when the supports are not nested.
/// The peel inequality itself is left to checked_step.
CompatibleFloorPlan peel_maximal(const CompatibleFloorPlan& p);

/// Realize both sides and check that `after` <= `before` plus the
/// move-specific strict descent.
DescentStep checked_step(const std::string& move, const CompatibleFloorPlan& before,
                         const CompatibleFloorPlan& after, std::string note = {});

struct Minimized {
  CompatibleFloorPlan plan;
  DescentTrace trace;
};

/// Resolve overlaps, then shrink (P before Q, by index, axis 1 before 2)
/// until no move applies. Throws ObligationFailure.
Minimized minimize(const CompatibleFloorPlan& p);

/// Alternate minimize and peel_maximal down to the empty instance. Throws
/// ObligationFailure if a step fails its checks or no peel is possible.
DescentTrace certify(const CompatibleFloorPlan& p);

}  // namespace gerst
