#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "beatty_lab/walk.hpp"

namespace beatty_lab {

namespace detail {

inline void append_number(std::string& out, std::int64_t v) { out += std::to_string(v); }

inline void append_number(std::string& out, double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

}  // namespace detail

/// One polyline through every point of the walk, black on white. The walk
/// lives in y-up coordinates, so y is negated on the way out; the viewBox is
/// the bounding box grown by `margin` on every side.
inline std::string render_svg(const Walk& walk, double stroke_width = 1.0, std::int64_t margin = 2) {
  if (walk.points.empty()) throw std::invalid_argument("render_svg: empty walk");
  if (!(stroke_width > 0) || !std::isfinite(stroke_width)) {
    throw std::invalid_argument("render_svg: stroke width must be positive");
  }
  if (margin < 0) throw std::invalid_argument("render_svg: margin must be nonnegative");

  const BoundingBox box = bounding_box(walk.points);
  const std::int64_t vx = box.min_x - margin;
  const std::int64_t vy = -box.max_y - margin;
  const std::int64_t vw = box.width() + 2 * margin;
  const std::int64_t vh = box.height() + 2 * margin;

  std::string out;
  out.reserve(256 + walk.points.size() * 12);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  detail::append_number(out, vx);
  out += ' ';
  detail::append_number(out, vy);
  out += ' ';
  detail::append_number(out, vw);
  out += ' ';
  detail::append_number(out, vh);
  out += "\">\n";
  out += "<rect x=\"";
  detail::append_number(out, vx);
  out += "\" y=\"";
  detail::append_number(out, vy);
  out += "\" width=\"";
  detail::append_number(out, vw);
  out += "\" height=\"";
  detail::append_number(out, vh);
  out += "\" fill=\"white\"/>\n";
  out += "<polyline fill=\"none\" stroke=\"black\" stroke-linejoin=\"round\" stroke-linecap=\"round\" stroke-width=\"";
  detail::append_number(out, stroke_width);
  out += "\" points=\"";
  bool first = true;
  for (const auto& p : walk.points) {
    if (!first) out += ' ';
    first = false;
    detail::append_number(out, p.x);
    out += ',';
    detail::append_number(out, -p.y);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

inline constexpr std::int64_t kMaxRasterSide = std::int64_t{1} << 14;

/// Binary PGM (P5, maxval 255) with one pixel per lattice cell: visited
/// cells 0, background 255. Row 0 is the top, i.e. the largest y.
inline std::vector<std::uint8_t> render_pgm(const Walk& walk, std::int64_t margin = 2) {
  if (walk.points.empty()) throw std::invalid_argument("render_pgm: empty walk");
  if (margin < 0) throw std::invalid_argument("render_pgm: margin must be nonnegative");

  const BoundingBox box = bounding_box(walk.points);
  const std::int64_t w = box.width() + 1 + 2 * margin;
  const std::int64_t h = box.height() + 1 + 2 * margin;
  if (w > kMaxRasterSide || h > kMaxRasterSide) throw std::length_error("raster too large");

  const std::string header = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const std::size_t base = out.size();
  out.resize(base + static_cast<std::size_t>(w * h), 255);
  for (const auto& p : walk.points) {
    const std::int64_t col = p.x - box.min_x + margin;
    const std::int64_t row = box.max_y - p.y + margin;
    out[base + static_cast<std::size_t>(row * w + col)] = 0;
  }
  return out;
}

}  // namespace beatty_lab
