#pragma once

// Minimal float-image containers and the raster operations the renderer,
// augmentation suite and pipeline share: bilinear/nearest resampling,
// separable Gaussian blur, rigid rotation and simple overlay drawing.
// Images are row-major H x W x 3 float in [0, 1]; masks are H x W uint8
// class maps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gaugepipe/angles.hpp"

namespace gauge {

struct Color3 {
  float r = 0.0f, g = 0.0f, b = 0.0f;
};

inline float clamp01(float v) { return std::min(1.0f, std::max(0.0f, v)); }

struct Image3f {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // h * w * 3, RGB

  Image3f() = default;
  Image3f(int w, int h, Color3 fill = {}) : width(w), height(h) {
    data.resize(static_cast<size_t>(w) * h * 3);
    for (int i = 0; i < w * h; ++i) {
      data[3 * i + 0] = fill.r;
      data[3 * i + 1] = fill.g;
      data[3 * i + 2] = fill.b;
    }
  }

  float* px(int x, int y) {
    return &data[3 * (static_cast<size_t>(y) * width + x)];
  }
  const float* px(int x, int y) const {
    return &data[3 * (static_cast<size_t>(y) * width + x)];
  }

  void set(int x, int y, Color3 c) {
    float* p = px(x, y);
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }
};

struct Mask8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // h * w

  Mask8() = default;
  Mask8(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  std::uint8_t& at(int x, int y) {
    return data[static_cast<size_t>(y) * width + x];
  }
  std::uint8_t at(int x, int y) const {
    return data[static_cast<size_t>(y) * width + x];
  }
};

// Bilinear sample with edge clamp; (x, y) in pixel-center coordinates.
inline void sample_bilinear(const Image3f& img, double x, double y,
                            float out[3]) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;
  const auto cx = [&](int v) {
    return std::min(img.width - 1, std::max(0, v));
  };
  const auto cy = [&](int v) {
    return std::min(img.height - 1, std::max(0, v));
  };
  const float* p00 = img.px(cx(x0), cy(y0));
  const float* p10 = img.px(cx(x0 + 1), cy(y0));
  const float* p01 = img.px(cx(x0), cy(y0 + 1));
  const float* p11 = img.px(cx(x0 + 1), cy(y0 + 1));
  for (int c = 0; c < 3; ++c) {
    const double top = p00[c] * (1.0 - fx) + p10[c] * fx;
    const double bot = p01[c] * (1.0 - fx) + p11[c] * fx;
    out[c] = static_cast<float>(top * (1.0 - fy) + bot * fy);
  }
}

inline Image3f resize_bilinear(const Image3f& img, int out_w, int out_h) {
  Image3f out(out_w, out_h);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const double src_x = (x + 0.5) * sx - 0.5;
      const double src_y = (y + 0.5) * sy - 0.5;
      sample_bilinear(img, src_x, src_y, out.px(x, y));
    }
  }
  return out;
}

inline Mask8 resize_nearest(const Mask8& m, int out_w, int out_h) {
  Mask8 out(out_w, out_h);
  const double sx = static_cast<double>(m.width) / out_w;
  const double sy = static_cast<double>(m.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    const int src_y = std::min(
        m.height - 1, static_cast<int>(std::floor((y + 0.5) * sy)));
    for (int x = 0; x < out_w; ++x) {
      const int src_x = std::min(
          m.width - 1, static_cast<int>(std::floor((x + 0.5) * sx)));
      out.at(x, y) = m.at(src_x, src_y);
    }
  }
  return out;
}

inline std::vector<float> gaussian_kernel(double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(sigma * 3.0)));
  std::vector<float> k(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
    k[i + radius] = static_cast<float>(v);
    sum += v;
  }
  for (auto& v : k) v = static_cast<float>(v / sum);
  return k;
}

// Separable Gaussian blur with reflected borders. sigma <= 0 is identity.
inline Image3f gaussian_blur(const Image3f& img, double sigma) {
  if (sigma <= 0.0) return img;
  const auto k = gaussian_kernel(sigma);
  const int radius = static_cast<int>(k.size() / 2);
  const auto reflect = [](int v, int n) {
    if (v < 0) v = -v - 1;
    if (v >= n) v = 2 * n - v - 1;
    return std::min(n - 1, std::max(0, v));
  };

  Image3f tmp(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      float acc[3] = {0, 0, 0};
      for (int i = -radius; i <= radius; ++i) {
        const float* p = img.px(reflect(x + i, img.width), y);
        const float w = k[i + radius];
        acc[0] += w * p[0];
        acc[1] += w * p[1];
        acc[2] += w * p[2];
      }
      tmp.set(x, y, {acc[0], acc[1], acc[2]});
    }
  }
  Image3f out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      float acc[3] = {0, 0, 0};
      for (int i = -radius; i <= radius; ++i) {
        const float* p = tmp.px(x, reflect(y + i, img.height));
        const float w = k[i + radius];
        acc[0] += w * p[0];
        acc[1] += w * p[1];
        acc[2] += w * p[2];
      }
      out.set(x, y, {acc[0], acc[1], acc[2]});
    }
  }
  return out;
}

// Rotates image content clockwise (screen sense, y-down) by delta degrees
// about the image center: a point at angle a from the center moves to
// angle a + delta. Image is resampled bilinearly, masks use nearest.
inline Image3f rotate_bilinear(const Image3f& img, double delta_deg) {
  Image3f out(img.width, img.height);
  const double cx = (img.width - 1) / 2.0;
  const double cy = (img.height - 1) / 2.0;
  const double c = std::cos(deg2rad(-delta_deg));
  const double s = std::sin(deg2rad(-delta_deg));
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const double dx = x - cx;
      const double dy = y - cy;
      const double sx = cx + dx * c - dy * s;
      const double sy = cy + dx * s + dy * c;
      sample_bilinear(img, sx, sy, out.px(x, y));
    }
  }
  return out;
}

inline Mask8 rotate_nearest(const Mask8& m, double delta_deg,
                            std::uint8_t fill = 0) {
  Mask8 out(m.width, m.height, fill);
  const double cx = (m.width - 1) / 2.0;
  const double cy = (m.height - 1) / 2.0;
  const double c = std::cos(deg2rad(-delta_deg));
  const double s = std::sin(deg2rad(-delta_deg));
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const double dx = x - cx;
      const double dy = y - cy;
      const int sx = static_cast<int>(std::lround(cx + dx * c - dy * s));
      const int sy = static_cast<int>(std::lround(cy + dx * s + dy * c));
      if (sx >= 0 && sx < m.width && sy >= 0 && sy < m.height)
        out.at(x, y) = m.at(sx, sy);
    }
  }
  return out;
}

// Rotating a point about the image center in the same sense as
// rotate_bilinear; used to keep ground-truth center coordinates attached
// to rotated samples.
inline Point2 rotate_about_image_center(Point2 p, int width, int height,
                                        double delta_deg) {
  const double cx = (width - 1) / 2.0;
  const double cy = (height - 1) / 2.0;
  const double c = std::cos(deg2rad(delta_deg));
  const double s = std::sin(deg2rad(delta_deg));
  const double dx = p.x - cx;
  const double dy = p.y - cy;
  return {cx + dx * c - dy * s, cy + dx * s + dy * c};
}

// Filled disc, alpha-blended; overlay drawing for result visualization.
inline void draw_disc(Image3f& img, Point2 center, double radius, Color3 c,
                      float alpha = 1.0f) {
  const int x0 = std::max(0, static_cast<int>(std::floor(center.x - radius)));
  const int x1 = std::min(img.width - 1,
                          static_cast<int>(std::ceil(center.x + radius)));
  const int y0 = std::max(0, static_cast<int>(std::floor(center.y - radius)));
  const int y1 = std::min(img.height - 1,
                          static_cast<int>(std::ceil(center.y + radius)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - center.x;
      const double dy = y - center.y;
      if (dx * dx + dy * dy > radius * radius) continue;
      float* p = img.px(x, y);
      p[0] = clamp01(p[0] * (1 - alpha) + c.r * alpha);
      p[1] = clamp01(p[1] * (1 - alpha) + c.g * alpha);
      p[2] = clamp01(p[2] * (1 - alpha) + c.b * alpha);
    }
  }
}

inline void draw_circle_outline(Image3f& img, Point2 center, double radius,
                                Color3 c, double thickness = 1.5) {
  const int x0 =
      std::max(0, static_cast<int>(std::floor(center.x - radius - thickness)));
  const int x1 = std::min(
      img.width - 1, static_cast<int>(std::ceil(center.x + radius + thickness)));
  const int y0 =
      std::max(0, static_cast<int>(std::floor(center.y - radius - thickness)));
  const int y1 = std::min(
      img.height - 1,
      static_cast<int>(std::ceil(center.y + radius + thickness)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double d =
          std::abs(std::hypot(x - center.x, y - center.y) - radius);
      if (d <= thickness) img.set(x, y, c);
    }
  }
}

inline std::uint8_t to_u8(float v) {
  return static_cast<std::uint8_t>(std::lround(clamp01(v) * 255.0f));
}

inline float from_u8(std::uint8_t v) { return v / 255.0f; }

}  // namespace gauge
