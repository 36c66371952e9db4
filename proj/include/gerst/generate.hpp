#pragma once

// Exhaustive enumeration and seeded random generation of instances.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gerst/floor_plan.hpp"
#include "gerst/gluing.hpp"
#include "gerst/tower.hpp"

namespace gerst {

using Rng = std::mt19937_64;

struct PlanBounds {
  int max_r = 2;
  int box = 3;  // coordinates lie in [0, box)
  int max_h = 2;
};

/// Translate so the coordinatewise minimum over P u Q is the origin, then
/// sort the components by (p, q, h).
CompatibleFloorPlan canonical_form(const CompatibleFloorPlan& p);

/// Every canonical compatible plan with 1 <= r <= max_r, distinct points in
/// P and in Q, coordinates below `box` and 1 <= h_i <= max_h, in a fixed
/// order. `visit` returns false to stop early.
void for_each_compatible_plan(const PlanBounds& bounds, const std::function<bool(const CompatibleFloorPlan&)>& visit);
std::vector<CompatibleFloorPlan> enumerate_compatible_plans(const PlanBounds& bounds);

/// Grow a diagram by adding `size` random addable boxes.
YoungDiagram random_diagram(Rng& rng, int n, int size);

/// A valid gluing datum: lambda and mu have at most `max_boxes` boxes each;
/// the glued region is an up-set of lambda whose components are placed into
/// mu by rejection sampling. Throws GenerationFailed.
GluingDatum random_gluing(int n, int max_boxes, std::uint64_t seed);

/// r in [1, max_r], distinct points in each plan.
CompatibleFloorPlan random_compatible_plan(Rng& rng, const PlanBounds& bounds);

/// Scaffolded tower with columns at distinct positions in [0, box)^2, z
/// offsets at most max_z. Throws GenerationFailed.
Tower random_scaffolded_tower(Rng& rng, const PlanBounds& bounds, int max_z);

}  // namespace gerst
