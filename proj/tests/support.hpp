#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing here
// calls into the code path it is used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "gerst/lattice.hpp"

namespace gerst::testing {

/// Random down-set of N^n generated by `tops` random points in [0, side)^n,
/// rejecting anything over `max_boxes`.
inline YoungDiagram random_diagram(std::mt19937_64& rng, int n, int side, int tops, std::size_t max_boxes) {
  std::uniform_int_distribution<int> coord(0, side - 1);
  while (true) {
    std::vector<Point> pts;
    for (int k = 0; k < tops; ++k) {
      Point p(static_cast<std::size_t>(n));
      for (auto& c : p) c = coord(rng);
      pts.push_back(p);
    }
    // Brute-force down-set: every point of the cube below some top.
    std::vector<Point> boxes;
    Point a(static_cast<std::size_t>(n), 0);
    while (true) {
      for (const auto& t : pts) {
        bool below = true;
        for (int i = 0; i < n; ++i) below = below && a[static_cast<std::size_t>(i)] <= t[static_cast<std::size_t>(i)];
        if (below) {
          boxes.push_back(a);
          break;
        }
      }
      int j = 0;
      for (; j < n; ++j) {
        if (++a[static_cast<std::size_t>(j)] < side) break;
        a[static_cast<std::size_t>(j)] = 0;
      }
      if (j == n) break;
    }
    if (boxes.size() <= max_boxes) return YoungDiagram(BoxSet(n, std::move(boxes)));
  }
}

/// Every integer partition of `total` as a weakly decreasing row list.
inline void partitions(int total, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline YoungDiagram diagram_from_row_lengths(const std::vector<int>& rows) {
  std::vector<Point> boxes;
  for (int y = 0; y < static_cast<int>(rows.size()); ++y) {
    for (int x = 0; x < rows[static_cast<std::size_t>(y)]; ++x) boxes.push_back({x, y});
  }
  return YoungDiagram(BoxSet(2, std::move(boxes)));
}

inline std::vector<int> row_lengths(const YoungDiagram& d) {
  std::vector<int> rows;
  for (const auto& b : d.boxes()) {
    if (static_cast<int>(rows.size()) <= b[1]) rows.resize(static_cast<std::size_t>(b[1]) + 1, 0);
    rows[static_cast<std::size_t>(b[1])] = std::max(rows[static_cast<std::size_t>(b[1])], b[0] + 1);
  }
  return rows;
}

/// Monomials of [0, side)^n not divisible by any generator.
inline std::vector<Point> brute_standard_monomials(const std::vector<Point>& gens, int n, int side) {
  std::vector<Point> out;
  Point a(static_cast<std::size_t>(n), 0);
  while (true) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool d = true;
      for (int i = 0; i < n; ++i) d = d && g[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(i)];
      divisible = divisible || d;
    }
    if (!divisible) out.push_back(a);
    int j = 0;
    for (; j < n; ++j) {
      if (++a[static_cast<std::size_t>(j)] < side) break;
      a[static_cast<std::size_t>(j)] = 0;
    }
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gerst::testing
