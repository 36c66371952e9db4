#include "gerst/generate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace gerst {

CompatibleFloorPlan canonical_form(const CompatibleFloorPlan& p) {
  check_plan(p);
  if (p.empty()) return p;
  Point lo = p.P.front();
  for (const auto* pts : {&p.P, &p.Q}) {
    for (const auto& q : *pts) lo = {std::min(lo[0], q[0]), std::min(lo[1], q[1])};
  }
  std::vector<std::tuple<Point, Point, int>> comps;
  for (std::size_t i = 0; i < p.size(); ++i) comps.emplace_back(p.P[i] - lo, p.Q[i] - lo, p.h[i]);
  std::sort(comps.begin(), comps.end());
  CompatibleFloorPlan out;
  for (auto& [a, b, h] : comps) {
    out.P.push_back(a);
    out.Q.push_back(b);
    out.h.push_back(h);
  }
  return out;
}

void for_each_compatible_plan(const PlanBounds& bounds, const std::function<bool(const CompatibleFloorPlan&)>& visit) {
  // Canonical plans are exactly the strictly increasing component sequences
  // that touch both axes.
  std::vector<std::tuple<Point, Point, int>> comps;
  for (int px = 0; px < bounds.box; ++px)
    for (int py = 0; py < bounds.box; ++py)
      for (int qx = 0; qx < bounds.box; ++qx)
        for (int qy = 0; qy < bounds.box; ++qy)
          for (int h = 1; h <= bounds.max_h; ++h) comps.emplace_back(Point{px, py}, Point{qx, qy}, h);

  CompatibleFloorPlan cur;
  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (stop) return;
    if (!cur.empty()) {
      int mx = bounds.box, my = bounds.box;
      for (const auto* pts : {&cur.P, &cur.Q}) {
        for (const auto& q : *pts) {
          mx = std::min(mx, q[0]);
          my = std::min(my, q[1]);
        }
      }
      if (mx == 0 && my == 0 && !visit(cur)) {
        stop = true;
        return;
      }
    }
    if (static_cast<int>(cur.size()) == bounds.max_r) return;
    for (std::size_t k = from; k < comps.size() && !stop; ++k) {
      const auto& [p, q, h] = comps[k];
      if (std::find(cur.P.begin(), cur.P.end(), p) != cur.P.end()) continue;
      if (std::find(cur.Q.begin(), cur.Q.end(), q) != cur.Q.end()) continue;
      cur.P.push_back(p);
      cur.Q.push_back(q);
      cur.h.push_back(h);
      extend(k + 1);
      cur.P.pop_back();
      cur.Q.pop_back();
      cur.h.pop_back();
    }
  };
  extend(0);
}

std::vector<CompatibleFloorPlan> enumerate_compatible_plans(const PlanBounds& bounds) {
  std::vector<CompatibleFloorPlan> out;
  for_each_compatible_plan(bounds, [&](const CompatibleFloorPlan& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Point> addable_boxes(const BoxSet& d, int n) {
  if (d.empty()) return {zero_point(n)};
  std::set<Point> out;
  for (const auto& b : d) {
    for (int i = 0; i < n; ++i) {
      const Point c = b + unit_vector(n, i);
      if (d.contains(c)) continue;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        if (c[static_cast<std::size_t>(j)] > 0) ok = d.contains(c - unit_vector(n, j));
      }
      if (ok) out.insert(c);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

YoungDiagram random_diagram(Rng& rng, int n, int size) {
  BoxSet d(n);
  for (int k = 0; k < size; ++k) {
    const auto add = addable_boxes(d, n);
    auto boxes = d.boxes();
    boxes.push_back(add[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(add.size()) - 1))]);
    d = BoxSet(n, std::move(boxes));
  }
  return YoungDiagram(std::move(d));
}

GluingDatum random_gluing(int n, int max_boxes, std::uint64_t seed) {
  if (n < 1 || n > 4) throw Error(ErrorCode::GenerationFailed, "n must be in 1..4");
  if (max_boxes < 1) throw Error(ErrorCode::GenerationFailed, "max_boxes must be positive");
  Rng rng(seed);
  constexpr int kAttempts = 50;
  GluingDatum g;
  g.n = n;
  g.lambda = random_diagram(rng, n, uniform(rng, 1, max_boxes));

  // Peeling maximal boxes leaves an up-set of lambda, whose components
  // satisfy the saturation property automatically.
  std::vector<Point> kept = g.lambda.boxes().boxes();
  const int peel = uniform(rng, 1, static_cast<int>(kept.size()));
  for (int k = 0; k < peel; ++k) {
    const auto maxima = YoungDiagram(BoxSet(n, kept)).maximal_boxes();
    const Point drop = maxima[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(maxima.size()) - 1))];
    kept.erase(std::find(kept.begin(), kept.end(), drop));
  }
  const auto region = skew_difference(g.lambda, YoungDiagram(BoxSet(n, kept)));

  const int mu_base = uniform(rng, 0, std::max(0, max_boxes / 2));
  const YoungDiagram base = random_diagram(rng, n, mu_base);
  int spread = 1;
  for (const auto& b : base.boxes()) spread = std::max(spread, *std::max_element(b.begin(), b.end()) + 2);
  for (const auto& b : g.lambda.boxes()) spread = std::max(spread, *std::max_element(b.begin(), b.end()) + 1);

  g.mu = base;
  for (const auto& comp : connected_components(region)) {
    const auto norm = normalize(comp);
    // Abstract shapes may reach below the origin in later coordinates.
    Point low = zero_point(n);
    for (const auto& v : norm.shape.boxes()) {
      for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], v[i]);
    }
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      Point c(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = uniform(rng, -low[i], spread);
      GluingDatum trial = g;
      trial.components.push_back({norm.shape, norm.offset, c});
      trial.mu = diagram_union(g.mu, order_ideal(norm.shape.boxes().translated(c)));
      if (static_cast<int>(trial.mu.size()) > max_boxes) continue;
      if (!validate_gluing(trial).valid()) continue;
      g = std::move(trial);
      break;
    }
  }
  if (!validate_gluing(g).valid()) throw Error(ErrorCode::GenerationFailed, "no valid placement found");
  return g;
}

CompatibleFloorPlan random_compatible_plan(Rng& rng, const PlanBounds& bounds) {
  const int cells = bounds.box * bounds.box;
  const int r = uniform(rng, 1, std::min(bounds.max_r, cells));
  std::vector<Point> all;
  for (int x = 0; x < bounds.box; ++x)
    for (int y = 0; y < bounds.box; ++y) all.push_back({x, y});
  CompatibleFloorPlan p;
  std::vector<Point> a = all, b = all;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  for (int i = 0; i < r; ++i) {
    p.P.push_back(a[static_cast<std::size_t>(i)]);
    p.Q.push_back(b[static_cast<std::size_t>(i)]);
    p.h.push_back(uniform(rng, 1, bounds.max_h));
  }
  return p;
}

Tower random_scaffolded_tower(Rng& rng, const PlanBounds& bounds, int max_z) {
  constexpr int kAttempts = 200;
  const int cells = bounds.box * bounds.box;
  std::vector<Point> all;
  for (int x = 0; x < bounds.box; ++x)
    for (int y = 0; y < bounds.box; ++y) all.push_back({x, y});
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int r = uniform(rng, 0, std::min(bounds.max_r, cells));
    std::shuffle(all.begin(), all.end(), rng);
    Tower t;
    std::vector<Point> boxes;
    for (int i = 0; i < r; ++i) {
      const Point& q = all[static_cast<std::size_t>(i)];
      Column col{uniform(rng, 1, bounds.max_h), {q[0], q[1], uniform(rng, 0, max_z)}};
      for (int z = 0; z < col.height; ++z) boxes.push_back({q[0], q[1], col.base[2] + z});
      t.columns.push_back(std::move(col));
    }
    t.lambda = order_ideal(BoxSet(3, std::move(boxes)));
    if (validate_tower(t).valid()) return t;
  }
  throw Error(ErrorCode::GenerationFailed, "no valid scaffolded tower within the attempt budget");
}

}  // namespace gerst
