#pragma once

// Angular geometry for dial reading: landmark-angle parameterization,
// 360-bin quantization, explement-corrected keypoint angles, the
// angle-to-physical-reading map and circular error metrics.
//
// Convention used throughout: image coordinates, x rightward, y downward.
// 0 degrees points along the rightward horizontal ray from the reference
// center and angles grow clockwise on screen (the direction dial scales
// sweep). All angles live in [0, 360).

#include <cmath>
#include <stdexcept>
#include <string>

namespace gauge {

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct DegenerateGeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateGaugeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
inline double norm(Point2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

// Angle in degrees, normalized to [0, 360). Arithmetic is modulo 360.
struct AngleDeg {
  double deg = 0.0;

  AngleDeg() = default;
  explicit AngleDeg(double value) : deg(normalize(value)) {}

  static double normalize(double value) {
    double v = std::fmod(value, 360.0);
    if (v < 0.0) v += 360.0;
    // fmod can land exactly on 360.0 after the correction for tiny
    // negative inputs; fold that back to 0.
    if (v >= 360.0) v = 0.0;
    return v;
  }

  AngleDeg rotated(double delta) const { return AngleDeg(deg + delta); }
};

struct AngleTriple {
  AngleDeg start;
  AngleDeg end;
  AngleDeg needle;
};

struct GaugeRange {
  double min_value = 0.0;
  double max_value = 1.0;
  std::string unit;

  void validate() const {
    if (!(max_value > min_value))
      throw DegenerateGaugeError("gauge range requires max_value > min_value");
  }
};

using BinIndex = int;  // in [0, 359], one degree per bin

// Clockwise angular distance from a to b, in [0, 360).
inline double clockwise_between(AngleDeg a, AngleDeg b) {
  return AngleDeg::normalize(b.deg - a.deg);
}

// Angle of the ray center->point measured from the rightward horizontal,
// clockwise-positive in y-down screen coordinates.
inline AngleDeg angle_of(Point2 point, Point2 center) {
  const Point2 d = point - center;
  if (d.x == 0.0 && d.y == 0.0)
    throw DegenerateGeometryError("angle_of: point coincides with center");
  return AngleDeg(rad2deg(std::atan2(d.y, d.x)));
}

// Clockwise angle swept from the ray center->start to the ray center->tip.
// The interior angle between the rays is corrected by the sign of the 2D
// cross product: a negative cross product means the tip is reached
// counterclockwise from the start, so the explement (360 - theta) applies.
inline AngleDeg keypoint_angle(Point2 center, Point2 start, Point2 tip) {
  const Point2 a = start - center;
  const Point2 b = tip - center;
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0)
    throw DegenerateGeometryError("keypoint_angle: zero-length ray");
  double c = (a.x * b.x + a.y * b.y) / (na * nb);
  c = std::fmax(-1.0, std::fmin(1.0, c));
  const double theta = rad2deg(std::acos(c));
  const double cross = a.x * b.y - a.y * b.x;
  return AngleDeg(cross >= 0.0 ? theta : 360.0 - theta);
}

struct Reading {
  double value = 0.0;
  bool out_of_scale = false;  // needle beyond the end marker (extrapolated)
};

// Linear map of the needle position inside the start->end sweep onto the
// physical range. Needles past the end marker extrapolate and are flagged
// rather than clamped, so faulty gauges stay detectable downstream.
inline Reading angle_to_reading(const AngleTriple& triple,
                                const GaugeRange& range) {
  range.validate();
  const double sweep = clockwise_between(triple.start, triple.end);
  if (sweep <= 0.0)
    throw DegenerateGaugeError("angle_to_reading: zero-sweep gauge");
  const double pos = clockwise_between(triple.start, triple.needle);
  Reading r;
  r.value = range.min_value +
            (pos / sweep) * (range.max_value - range.min_value);
  r.out_of_scale = pos > sweep;
  return r;
}

// Bin b covers [b, b+1) degrees.
inline BinIndex quantize(AngleDeg angle) {
  int b = static_cast<int>(std::floor(angle.deg)) % 360;
  if (b < 0) b += 360;
  return b;
}

// Bin-center convention; caps worst-case quantization error at 0.5 deg.
inline AngleDeg dequantize(BinIndex bin) {
  if (bin < 0 || bin > 359)
    throw std::out_of_range("dequantize: bin outside [0, 359]");
  return AngleDeg(static_cast<double>(bin) + 0.5);
}

// Absolute angular error folded across the 0/360 seam, in [0, 180].
inline double circular_abs_error(AngleDeg pred, AngleDeg truth) {
  const double d = AngleDeg::normalize(std::fabs(pred.deg - truth.deg));
  return std::fmin(d, 360.0 - d);
}

}  // namespace gauge
