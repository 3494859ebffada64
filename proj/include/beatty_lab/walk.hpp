#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "beatty_lab/parallel.hpp"
#include "beatty_lab/sequences.hpp"

namespace beatty_lab {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    const auto ux = static_cast<std::uint64_t>(p.x);
    const auto uy = static_cast<std::uint64_t>(p.y);
    return std::hash<std::uint64_t>{}(ux * 0x9E3779B97F4A7C15ULL ^ (uy + 0x632BE59BD9B4E019ULL + (ux << 6)));
  }
};

/// Axis-aligned unit direction, y pointing up.
class Heading {
 public:
  Heading() = default;
  Heading(int dx, int dy) : dx_(dx), dy_(dy) {
    if (std::abs(dx) + std::abs(dy) != 1) throw std::invalid_argument("Heading: not an axis-aligned unit vector");
  }

  int dx() const { return dx_; }
  int dy() const { return dy_; }

  /// Clockwise quarter turn.
  Heading turned_right() const { return {dy_, -dx_}; }
  /// Counter-clockwise quarter turn.
  Heading turned_left() const { return {-dy_, dx_}; }

  friend bool operator==(const Heading&, const Heading&) = default;

 private:
  int dx_ = 1;
  int dy_ = 0;
};

struct Walk {
  std::vector<Point> points;
  Heading final_heading;
};

/// Start at the origin facing (1, 0). For each bit, turn right on 0 and
/// left on 1, then step one unit.
inline Walk cloitre_walk(const BitStream& bits) {
  Walk walk;
  walk.points.reserve(bits.size() + 1);
  Point at{};
  Heading h{1, 0};
  walk.points.push_back(at);
  for (auto b : bits.bits()) {
    h = b == 0 ? h.turned_right() : h.turned_left();
    at.x += h.dx();
    at.y += h.dy();
    walk.points.push_back(at);
  }
  walk.final_heading = h;
  return walk;
}

struct BoundingBox {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;

  std::int64_t width() const { return max_x - min_x; }
  std::int64_t height() const { return max_y - min_y; }

  void include(const Point& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct WalkStats {
  Point endpoint;
  BoundingBox bbox;
  std::uint64_t distinct_points = 0;

  friend bool operator==(const WalkStats&, const WalkStats&) = default;
};

inline BoundingBox bounding_box(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("bounding_box: empty walk");
  BoundingBox box{points.front().x, points.front().y, points.front().x, points.front().y};
  for (const auto& p : points) box.include(p);
  return box;
}

/// Endpoint, bounding box and number of distinct lattice points. With
/// jobs > 1 the points are split into chunks whose partial results are
/// merged; the answer does not depend on jobs.
inline WalkStats walk_stats(const Walk& walk, unsigned jobs = 1) {
  const auto& pts = walk.points;
  if (pts.empty()) throw std::invalid_argument("walk_stats: empty walk");

  WalkStats stats;
  stats.endpoint = pts.back();
  if (jobs <= 1) {
    stats.bbox = bounding_box(pts);
    std::unordered_set<Point, PointHash> seen(pts.begin(), pts.end());
    stats.distinct_points = seen.size();
    return stats;
  }

  struct Partial {
    BoundingBox box;
    std::vector<Point> unique;
  };
  auto parts = map_chunks(pts.size(), jobs, [&pts](std::uint64_t b, std::uint64_t e) {
    Partial part;
    part.box = {pts[b].x, pts[b].y, pts[b].x, pts[b].y};
    part.unique.assign(pts.begin() + static_cast<std::ptrdiff_t>(b), pts.begin() + static_cast<std::ptrdiff_t>(e));
    for (const auto& p : part.unique) part.box.include(p);
    std::sort(part.unique.begin(), part.unique.end());
    part.unique.erase(std::unique(part.unique.begin(), part.unique.end()), part.unique.end());
    return part;
  });

  stats.bbox = parts.front().box;
  std::vector<Point> merged;
  for (auto& part : parts) {
    stats.bbox.include({part.box.min_x, part.box.min_y});
    stats.bbox.include({part.box.max_x, part.box.max_y});
    const auto mid = merged.size();
    merged.insert(merged.end(), part.unique.begin(), part.unique.end());
    std::inplace_merge(merged.begin(), merged.begin() + static_cast<std::ptrdiff_t>(mid), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  }
  stats.distinct_points = merged.size();
  return stats;
}

}  // namespace beatty_lab
