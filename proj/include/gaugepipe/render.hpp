#pragma once

// Procedural gauge renderer. Every scene element is an analytic shape in
// the flat source plane; destination pixels are pulled back through the
// inverse view homography and tested against the shape stack. The image
// pass anti-aliases edges with a screen-width soft step, the mask pass
// re-evaluates the same geometry with hard point-in-shape tests at pixel
// centers, and the photometric stage (lighting, shadow, glare, dust,
// tint, blur, sensor noise) never touches the mask. Ground-truth angles
// are recomputed from landmark points pushed through the homography;
// angles are not homography-invariant, so copying the pre-warp spec
// values would be wrong.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gaugepipe/angles.hpp"
#include "gaugepipe/gauge_spec.hpp"
#include "gaugepipe/homography.hpp"
#include "gaugepipe/image.hpp"
#include "gaugepipe/rng.hpp"

namespace gauge {

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labels measured in the final warped image, relative to the projected
// gauge center.
struct GroundTruth {
  AngleDeg start;
  AngleDeg end;
  AngleDeg needle;
  GaugeRange range;
  Point2 center_px;
  double radius_px = 0.0;  // min projected center-to-rim distance
};

constexpr std::uint8_t kClassBackground = 0;
constexpr std::uint8_t kClassGaugeCase = 1;
constexpr std::uint8_t kClassNeedle = 2;

struct Sample {
  Image3f image;
  Mask8 mask;
  GroundTruth truth;
  GaugeSpec spec;
};

namespace render_detail {

inline Point2 dir(double deg) {
  return {std::cos(deg2rad(deg)), std::sin(deg2rad(deg))};
}

inline double fold180(double deg) {
  double d = std::fmod(deg + 180.0, 360.0);
  if (d < 0) d += 360.0;
  return d - 180.0;
}

inline Color3 mix(Color3 a, Color3 b, double t) {
  const float tf = static_cast<float>(t);
  return {a.r + (b.r - a.r) * tf, a.g + (b.g - a.g) * tf,
          a.b + (b.b - a.b) * tf};
}

inline Color3 scale(Color3 c, double s) {
  return {static_cast<float>(c.r * s), static_cast<float>(c.g * s),
          static_cast<float>(c.b * s)};
}

inline double luminance(Color3 c) {
  return 0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b;
}

// All lengths in source-plane pixels.
struct SceneGeometry {
  double R;
  double case_outer;
  bool square_case;
  double rim_hw;
  double tick_r0, tick_r1, tick_hw;
  double marker_r0, marker_r1, marker_hw;
  double hub_r;
  double needle_tail, needle_tip;
  double needle_base_hw, needle_tip_hw;
  double arrow_head_start, arrow_head_hw, arrow_shaft_hw;

  explicit SceneGeometry(const GaugeSpec& spec) {
    R = spec.face_radius;
    square_case = spec.case_style == CaseStyle::kSquareBezel;
    case_outer = case_outer_factor(spec.case_style) * R;
    rim_hw = std::max(0.8, 0.012 * R);
    tick_r0 = 0.84 * R;
    tick_r1 = 0.96 * R;
    tick_hw = std::max(0.6, 0.010 * R);
    marker_r0 = 0.76 * R;
    marker_r1 = 0.96 * R;
    marker_hw = std::max(1.2, 0.022 * R);
    hub_r = 0.07 * R;
    needle_tail = 0.12 * R;
    needle_tip = 0.93 * R;
    switch (spec.needle_style) {
      case NeedleStyle::kTapered:
        needle_base_hw = std::max(1.4, 0.034 * R);
        needle_tip_hw = std::max(1.0, 0.015 * R);
        break;
      case NeedleStyle::kStraight:
        needle_base_hw = needle_tip_hw = std::max(1.0, 0.016 * R);
        break;
      default:  // arrow
        needle_base_hw = std::max(1.0, 0.014 * R);
        needle_tip_hw = std::max(1.0, 0.014 * R);
        break;
    }
    arrow_head_start = 0.62 * R;
    arrow_head_hw = std::max(1.6, 0.045 * R);
    arrow_shaft_hw = std::max(1.0, 0.014 * R);
  }

  double body_sdf(Point2 rs, double r) const {
    if (square_case)
      return std::max(std::abs(rs.x), std::abs(rs.y)) - case_outer;
    return r - case_outer;
  }

  double face_sdf(double r) const { return r - R; }

  double rim_sdf(double r) const { return std::abs(r - R) - rim_hw; }

  double hub_sdf(double r) const { return r - hub_r; }

  // Thin radial box aligned with `angle`, spanning [r0, r1] radially with
  // tangential half-width hw. Tangential distance is measured as arc
  // length, which is exact enough for sliver-thin ticks.
  double radial_box_sdf(Point2 rs, double r, double phi_deg, double angle_deg,
                        double r0, double r1, double hw) const {
    const double arc = std::abs(deg2rad(fold180(phi_deg - angle_deg))) * r;
    return std::max({arc - hw, r - r1, r0 - r});
  }

  double needle_sdf(Point2 p, NeedleStyle style, Point2 n) const {
    const double along = p.x * n.x + p.y * n.y;
    const double across = std::abs(-p.x * n.y + p.y * n.x);
    const double cap = std::max(-needle_tail - along, along - needle_tip);
    switch (style) {
      case NeedleStyle::kStraight:
        return std::max(cap, across - needle_base_hw);
      case NeedleStyle::kTapered: {
        const double t = std::clamp(
            (along + needle_tail) / (needle_tip + needle_tail), 0.0, 1.0);
        const double hw =
            needle_base_hw + (needle_tip_hw - needle_base_hw) * t;
        return std::max(cap, across - hw);
      }
      default: {  // arrow: shaft plus a tapering head
        const double shaft = std::max(
            std::max(-needle_tail - along, along - arrow_head_start),
            across - arrow_shaft_hw);
        const double t = std::clamp(
            (along - arrow_head_start) / (needle_tip - arrow_head_start), 0.0,
            1.0);
        const double hw =
            arrow_head_hw + (needle_tip_hw - arrow_head_hw) * t;
        const double head = std::max(
            std::max(arrow_head_start - along, along - needle_tip),
            across - hw);
        return std::min(shaft, head);
      }
    }
  }
};

struct GlareStreak {
  Point2 a, b;  // segment endpoints, relative to gauge center
  double hw;
  double gain;
};

struct DustSpeck {
  Point2 pos;  // relative to gauge center
  double rad;
  Color3 color;
};

inline double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const Point2 ap = p - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  const double t =
      len2 > 0.0 ? std::clamp((ap.x * ab.x + ap.y * ab.y) / len2, 0.0, 1.0)
                 : 0.0;
  const Point2 c{a.x + ab.x * t, a.y + ab.y * t};
  return norm(p - c);
}

}  // namespace render_detail

// Landmark reference points in the source plane. Start/end sit at the
// marker midline radius, the needle landmark is the tip vertex.
inline Point2 landmark_point(const GaugeSpec& spec, AngleDeg angle,
                             double radius_factor) {
  const Point2 d = render_detail::dir(angle.deg);
  return {spec.center.x + d.x * radius_factor * spec.face_radius,
          spec.center.y + d.y * radius_factor * spec.face_radius};
}

constexpr double kMarkerLandmarkRadius = 0.86;
constexpr double kNeedleTipRadius = 0.93;

inline Sample render(const GaugeSpec& spec) {
  using namespace render_detail;
  spec.validate();

  const Homography H = gauge_plane_homography(
      spec.center, spec.face_radius, spec.yaw_deg, spec.pitch_deg);
  const SceneGeometry geo(spec);

  const int W = spec.canvas_width;
  const int Hh = spec.canvas_height;

  // Canvas-fit check and projected radius from the face rim.
  const Point2 center_px = H.apply(spec.center);
  double radius_px = 1e300;
  for (int i = 0; i < 360; ++i) {
    const Point2 rim{
        spec.center.x + spec.face_radius * std::cos(deg2rad(i)),
        spec.center.y + spec.face_radius * std::sin(deg2rad(i))};
    const Point2 q = H.apply(rim);
    if (q.x < 0.0 || q.x > W - 1 || q.y < 0.0 || q.y > Hh - 1)
      throw RenderError("render: warped face leaves the canvas");
    radius_px = std::min(radius_px, norm(q - center_px));
  }

  // Deterministic derived appearance streams.
  Rng bg_rng(derive_seed(spec.seed, 0xB6ULL));
  const Color3 bg = detail::hsv_to_rgb(bg_rng.uniform(0.0, 360.0),
                                       bg_rng.uniform(0.0, 0.2),
                                       bg_rng.uniform(0.10, 0.70));

  const bool light_face = luminance(spec.face_color) > 0.5;
  const Color3 tick_color =
      light_face ? scale(spec.face_color, 0.18)
                 : mix(spec.face_color, {1.0f, 1.0f, 1.0f}, 0.8);
  const Color3 start_marker_color =
      light_face ? Color3{0.05f, 0.38f, 0.10f} : Color3{0.35f, 0.95f, 0.45f};
  const Color3 end_marker_color =
      light_face ? Color3{0.60f, 0.06f, 0.06f} : Color3{1.0f, 0.35f, 0.30f};
  const Color3 hub_color = scale(spec.case_color, 0.85);
  const Color3 rim_color = scale(spec.case_color, 0.6);

  std::vector<GlareStreak> streaks;
  if (spec.light.glare_enabled) {
    Rng grng(derive_seed(spec.seed, 0x61AEULL));
    for (int k = 0; k < spec.light.glare_streaks; ++k) {
      const double ang = grng.uniform(0.0, 360.0);
      const Point2 d = dir(ang);
      const Point2 c{grng.uniform(-0.45, 0.45) * geo.R,
                     grng.uniform(-0.45, 0.45) * geo.R};
      const double half_len = grng.uniform(0.5, 0.85) * geo.R;
      streaks.push_back({{c.x - d.x * half_len, c.y - d.y * half_len},
                         {c.x + d.x * half_len, c.y + d.y * half_len},
                         grng.uniform(0.05, 0.11) * geo.R,
                         grng.uniform(0.25, 0.5)});
    }
  }

  std::vector<DustSpeck> dust;
  {
    Rng drng(derive_seed(spec.noise.dust_seed, 0xD057ULL));
    const double face_area = kPi * geo.R * geo.R;
    const double n_real = spec.noise.dust_density * face_area / 1e4;
    int n = static_cast<int>(std::floor(n_real));
    if (drng.chance(n_real - n)) ++n;
    n = std::min(n, 400);
    for (int k = 0; k < n; ++k) {
      const double rr = 0.96 * geo.R * std::sqrt(drng.next_double());
      const double aa = drng.uniform(0.0, 360.0);
      const double v = drng.uniform(0.15, 0.55);
      dust.push_back({{rr * std::cos(deg2rad(aa)), rr * std::sin(deg2rad(aa))},
                      drng.uniform(0.6, 2.2),
                      detail::hsv_to_rgb(drng.uniform(20.0, 50.0),
                                         drng.uniform(0.1, 0.5), v)});
    }
  }

  const double sweep = spec.sweep();
  const double tick_step = sweep / (spec.tick_count - 1);
  const Point2 needle_dir = dir(spec.needle_angle.deg);
  const Point2 shadow_shift{spec.light.dir_x * spec.light.shadow_offset_px,
                            spec.light.dir_y * spec.light.shadow_offset_px};
  const double img_cx = (W - 1) / 2.0;
  const double img_cy = (Hh - 1) / 2.0;
  const double half_diag = std::hypot(img_cx, img_cy);

  Image3f image(W, Hh);
  Mask8 mask(W, Hh);

  for (int y = 0; y < Hh; ++y) {
    for (int x = 0; x < W; ++x) {
      const Point2 p{static_cast<double>(x), static_cast<double>(y)};
      const Point2 s = H.apply_inv(p);
      const Point2 rs = s - spec.center;
      const double r = norm(rs);
      const double aa_w = std::max(H.inv_scale_at(p), 1e-6);
      const auto cov = [aa_w](double d) {
        return std::clamp(0.5 - d / aa_w, 0.0, 1.0);
      };

      const double d_body = geo.body_sdf(rs, r);
      const double d_face = geo.face_sdf(r);
      const double d_needle = geo.needle_sdf(rs, spec.needle_style,
                                             needle_dir);

      // ---- mask: hard geometry-only classes --------------------------
      std::uint8_t cls = kClassBackground;
      if (d_needle <= 0.0)
        cls = kClassNeedle;
      else if (d_body <= 0.0 || d_face <= 0.0)
        cls = kClassGaugeCase;
      mask.at(x, y) = cls;

      // ---- image: anti-aliased layer stack ---------------------------
      Color3 col = bg;
      col = mix(col, spec.case_color, cov(d_body));
      const double a_face = cov(d_face);
      col = mix(col, spec.face_color, a_face);
      col = mix(col, rim_color, cov(geo.rim_sdf(r)));

      if (r > geo.marker_r0 - 2.0 * aa_w && r < geo.tick_r1 + 2.0 * aa_w) {
        const double phi = rad2deg(std::atan2(rs.y, rs.x));
        const double t = AngleDeg::normalize(phi - spec.start_angle.deg);
        // Nearest minor tick; both sweep ends double as candidates so the
        // wraparound just counterclockwise of the start is handled.
        double d_tick = 1e300;
        const int nearest =
            std::clamp(static_cast<int>(std::lround(t / tick_step)), 0,
                       spec.tick_count - 1);
        for (const int i : {nearest, 0, spec.tick_count - 1}) {
          const double tick_angle = spec.start_angle.deg + i * tick_step;
          d_tick = std::min(
              d_tick, geo.radial_box_sdf(rs, r, phi, tick_angle, geo.tick_r0,
                                         geo.tick_r1, geo.tick_hw));
        }
        col = mix(col, tick_color, cov(d_tick));
        col = mix(col, start_marker_color,
                  cov(geo.radial_box_sdf(rs, r, phi, spec.start_angle.deg,
                                         geo.marker_r0, geo.marker_r1,
                                         geo.marker_hw)));
        col = mix(col, end_marker_color,
                  cov(geo.radial_box_sdf(rs, r, phi, spec.end_angle.deg,
                                         geo.marker_r0, geo.marker_r1,
                                         geo.marker_hw)));
      }

      col = mix(col, hub_color, cov(geo.hub_sdf(r)));
      const double a_needle = cov(d_needle);
      col = mix(col, spec.needle_color, a_needle);

      // Lighting: global brightness plus a soft gradient along the light
      // direction across the frame.
      const double gdot = ((p.x - img_cx) * spec.light.dir_x +
                           (p.y - img_cy) * spec.light.dir_y) /
                          half_diag;
      col = scale(col, spec.light.brightness_scale * (1.0 + 0.10 * gdot));

      if (spec.light.shadow_enabled) {
        const double d_sh =
            geo.needle_sdf(rs - shadow_shift, spec.needle_style, needle_dir);
        const double a_sh = cov(d_sh) * (1.0 - a_needle) * a_face;
        col = scale(col, 1.0 - spec.light.shadow_opacity * a_sh);
      }

      for (const auto& g : streaks) {
        const double a_g =
            cov(segment_distance(rs, g.a, g.b) - g.hw) * a_face * g.gain;
        col = mix(col, {1.0f, 1.0f, 1.0f}, a_g);
      }

      for (const auto& d : dust) {
        const double a_d = cov(norm(rs - d.pos) - d.rad) * a_face;
        col = mix(col, d.color, a_d * 0.9);
      }

      col = mix(col, spec.noise.tint, spec.noise.tint_alpha * a_face);

      image.set(x, y,
                {clamp01(col.r), clamp01(col.g), clamp01(col.b)});
    }
  }

  if (spec.noise.blur_sigma > 0.0)
    image = gaussian_blur(image, spec.noise.blur_sigma);

  if (spec.noise.sensor_noise_std > 0.0) {
    Rng nrng(derive_seed(spec.seed, 0x5E50ULL));
    for (auto& v : image.data)
      v = clamp01(v + static_cast<float>(
                          nrng.normal(0.0, spec.noise.sensor_noise_std)));
  }

  Sample sample;
  sample.image = std::move(image);
  sample.mask = std::move(mask);
  sample.spec = spec;
  sample.truth.range = spec.range;
  sample.truth.center_px = center_px;
  sample.truth.radius_px = radius_px;
  sample.truth.start = angle_of(
      H.apply(landmark_point(spec, spec.start_angle, kMarkerLandmarkRadius)),
      center_px);
  sample.truth.end = angle_of(
      H.apply(landmark_point(spec, spec.end_angle, kMarkerLandmarkRadius)),
      center_px);
  sample.truth.needle = angle_of(
      H.apply(landmark_point(spec, spec.needle_angle, kNeedleTipRadius)),
      center_px);
  return sample;
}

}  // namespace gauge
