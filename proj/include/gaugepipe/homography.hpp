#pragma once

// Planar projective warp used for out-of-plane gauge views. The gauge is
// authored on a flat source plane; yaw (rotation about the vertical axis)
// and pitch (about the horizontal axis) are applied in 3D and the plane is
// reprojected through a pinhole at distance D = 4 * face_radius with focal
// length f = D, which leaves the projected gauge center fixed and makes
// the zero-angle warp the identity.

#include <array>
#include <cmath>
#include <stdexcept>

#include "gaugepipe/angles.hpp"

namespace gauge {

struct Mat3 {
  // Row-major 3x3.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }

  static Mat3 translation(double tx, double ty) {
    Mat3 t;
    t.m = {1, 0, tx, 0, 1, ty, 0, 0, 1};
    return t;
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
        r.m[3 * i + j] = s;
      }
    return r;
  }

  Point2 apply(Point2 p) const {
    const double w = m[6] * p.x + m[7] * p.y + m[8];
    if (w == 0.0) throw DegenerateGeometryError("Mat3: point at infinity");
    return {(m[0] * p.x + m[1] * p.y + m[2]) / w,
            (m[3] * p.x + m[4] * p.y + m[5]) / w};
  }

  Mat3 inverse() const {
    const auto& a = m;
    const double det = a[0] * (a[4] * a[8] - a[5] * a[7]) -
                       a[1] * (a[3] * a[8] - a[5] * a[6]) +
                       a[2] * (a[3] * a[7] - a[4] * a[6]);
    if (std::abs(det) < 1e-18)
      throw DegenerateGeometryError("Mat3: singular matrix");
    Mat3 r;
    r.m[0] = (a[4] * a[8] - a[5] * a[7]) / det;
    r.m[1] = (a[2] * a[7] - a[1] * a[8]) / det;
    r.m[2] = (a[1] * a[5] - a[2] * a[4]) / det;
    r.m[3] = (a[5] * a[6] - a[3] * a[8]) / det;
    r.m[4] = (a[0] * a[8] - a[2] * a[6]) / det;
    r.m[5] = (a[2] * a[3] - a[0] * a[5]) / det;
    r.m[6] = (a[3] * a[7] - a[4] * a[6]) / det;
    r.m[7] = (a[1] * a[6] - a[0] * a[7]) / det;
    r.m[8] = (a[0] * a[4] - a[1] * a[3]) / det;
    return r;
  }
};

struct Homography {
  Mat3 forward;
  Mat3 inverse;

  Point2 apply(Point2 p) const { return forward.apply(p); }
  Point2 apply_inv(Point2 p) const { return inverse.apply(p); }

  // Source-plane displacement per destination pixel at dest point p;
  // average column norm of the Jacobian of the inverse map. Drives the
  // anti-aliasing width of the rasterizer.
  double inv_scale_at(Point2 p) const {
    const auto& a = inverse.m;
    const double u = a[0] * p.x + a[1] * p.y + a[2];
    const double v = a[3] * p.x + a[4] * p.y + a[5];
    const double w = a[6] * p.x + a[7] * p.y + a[8];
    const double w2 = w * w;
    const double dux = (a[0] * w - u * a[6]) / w2;
    const double dvx = (a[3] * w - v * a[6]) / w2;
    const double duy = (a[1] * w - u * a[7]) / w2;
    const double dvy = (a[4] * w - v * a[7]) / w2;
    return 0.5 * (std::hypot(dux, dvx) + std::hypot(duy, dvy));
  }
};

// Camera distance, in units of the face radius.
constexpr double kCameraDistanceOverRadius = 4.0;

inline Homography gauge_plane_homography(Point2 center, double face_radius,
                                         double yaw_deg, double pitch_deg) {
  const double cy = std::cos(deg2rad(yaw_deg));
  const double sy = std::sin(deg2rad(yaw_deg));
  const double cp = std::cos(deg2rad(pitch_deg));
  const double sp = std::sin(deg2rad(pitch_deg));

  // R = Ry(yaw) * Rx(pitch); plane basis vectors r1 = R e1, r2 = R e2.
  const double r1x = cy, r1y = 0.0, r1z = -sy;
  const double r2x = sy * sp, r2y = cp, r2z = cy * sp;

  const double D = kCameraDistanceOverRadius * face_radius;
  const double f = D;

  Mat3 core;
  core.m = {f * r1x, f * r2x, 0.0,
            f * r1y, f * r2y, 0.0,
            r1z,     r2z,     D};

  Mat3 H = Mat3::translation(center.x, center.y) * core *
           Mat3::translation(-center.x, -center.y);
  Homography h;
  h.forward = H;
  h.inverse = H.inverse();
  return h;
}

}  // namespace gauge
