#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// atan2-based angle path: angles are recovered by sweeping a rotated unit
// ray in fixed 0.01-degree steps and matching directions, so they provide
// an independent reference for the angle operations.

#include <cmath>

#include "gaugepipe/angles.hpp"

namespace gauge::testing {

constexpr double kSweepStepDeg = 0.01;

// Clockwise angle from ray center->start to ray center->tip, found by
// rotating the start direction clockwise in 0.01-degree increments and
// keeping the rotation that best aligns with the tip direction.
inline double oracle_keypoint_angle(Point2 center, Point2 start, Point2 tip) {
  const Point2 a = start - center;
  const Point2 b = tip - center;
  const double na = std::sqrt(a.x * a.x + a.y * a.y);
  const double nb = std::sqrt(b.x * b.x + b.y * b.y);
  double vx = a.x / na, vy = a.y / na;
  const double tx = b.x / nb, ty = b.y / nb;

  // Screen-clockwise rotation step in y-down coordinates.
  const double c = std::cos(deg2rad(kSweepStepDeg));
  const double s = std::sin(deg2rad(kSweepStepDeg));

  int best_k = 0;
  double best_dot = vx * tx + vy * ty;
  const int steps = static_cast<int>(std::lround(360.0 / kSweepStepDeg));
  for (int k = 1; k < steps; ++k) {
    const double nx = vx * c - vy * s;
    const double ny = vx * s + vy * c;
    vx = nx;
    vy = ny;
    const double dot = vx * tx + vy * ty;
    if (dot > best_dot) {
      best_dot = dot;
      best_k = k;
    }
  }
  return best_k * kSweepStepDeg;
}

// Angle of center->point against the rightward horizontal reference ray.
inline double oracle_angle_of(Point2 point, Point2 center) {
  const Point2 reference{center.x + 1.0, center.y};
  return oracle_keypoint_angle(center, reference, point);
}

}  // namespace gauge::testing
