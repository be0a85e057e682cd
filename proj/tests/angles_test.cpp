#include "gaugepipe/angles.hpp"

#include <gtest/gtest.h>

#include "gaugepipe/rng.hpp"
#include "oracles.hpp"

namespace gauge {
namespace {

Point2 from_angle(Point2 center, double deg, double r = 1.0) {
  return {center.x + r * std::cos(deg2rad(deg)),
          center.y + r * std::sin(deg2rad(deg))};
}

TEST(AngleOf, CardinalDirections) {
  const Point2 c{10.0, 20.0};
  EXPECT_DOUBLE_EQ(angle_of({11.0, 20.0}, c).deg, 0.0);    // right
  EXPECT_DOUBLE_EQ(angle_of({10.0, 21.0}, c).deg, 90.0);   // below (y down)
  EXPECT_DOUBLE_EQ(angle_of({9.0, 20.0}, c).deg, 180.0);   // left
  EXPECT_DOUBLE_EQ(angle_of({10.0, 19.0}, c).deg, 270.0);  // above
}

TEST(AngleOf, LowerLeftDiagonalMatchesSweepOracle) {
  const Point2 c{0.0, 0.0};
  const Point2 p{-1.0, 1.0};
  const double expected = testing::oracle_angle_of(p, c);
  EXPECT_NEAR(expected, 135.0, 0.02);
  EXPECT_NEAR(angle_of(p, c).deg, expected, 0.02);
}

TEST(AngleOf, CoincidentPointThrows) {
  EXPECT_THROW(angle_of({5.0, 5.0}, {5.0, 5.0}), DegenerateGeometryError);
}

TEST(AngleOf, RotationConsistency) {
  Rng rng(101);
  const Point2 c{64.0, 64.0};
  for (int i = 0; i < 500; ++i) {
    const double base = rng.uniform(0.0, 360.0);
    const double delta = rng.uniform(0.0, 360.0);
    const double r = rng.uniform(0.1, 50.0);
    const double a0 = angle_of(from_angle(c, base, r), c).deg;
    const double a1 = angle_of(from_angle(c, base + delta, r), c).deg;
    EXPECT_NEAR(AngleDeg::normalize(a0 + delta), a1, 1e-9);
  }
}

TEST(ClockwiseBetween, Basics) {
  EXPECT_DOUBLE_EQ(clockwise_between(AngleDeg(135), AngleDeg(45)), 270.0);
  EXPECT_DOUBLE_EQ(clockwise_between(AngleDeg(10), AngleDeg(10)), 0.0);
  EXPECT_DOUBLE_EQ(clockwise_between(AngleDeg(350), AngleDeg(20)), 30.0);
}

TEST(KeypointAngle, SpecExamples) {
  const Point2 c{0.0, 0.0};
  // start at left (180 deg), tip at bottom (90 deg): clockwise span 270.
  EXPECT_NEAR(keypoint_angle(c, {-1.0, 0.0}, {0.0, 1.0}).deg, 270.0, 1e-9);
  // tip along the start direction: zero span.
  EXPECT_NEAR(keypoint_angle(c, {-1.0, 0.0}, {-2.0, 0.0}).deg, 0.0, 1e-9);
  // start at left, tip at top (270 deg): clockwise span 90.
  EXPECT_NEAR(keypoint_angle(c, {-1.0, 0.0}, {0.0, -1.0}).deg, 90.0, 1e-9);
}

TEST(KeypointAngle, MatchesSweepOracleOnSpecExamples) {
  const Point2 c{0.0, 0.0};
  EXPECT_NEAR(testing::oracle_keypoint_angle(c, {-1.0, 0.0}, {0.0, 1.0}),
              270.0, 0.02);
  EXPECT_NEAR(testing::oracle_keypoint_angle(c, {-1.0, 0.0}, {0.0, -1.0}),
              90.0, 0.02);
}

TEST(KeypointAngle, ZeroLengthRayThrows) {
  const Point2 c{3.0, 4.0};
  EXPECT_THROW(keypoint_angle(c, c, {5.0, 5.0}), DegenerateGeometryError);
  EXPECT_THROW(keypoint_angle(c, {5.0, 5.0}, c), DegenerateGeometryError);
}

TEST(KeypointAngle, EqualsComposedAngleOf) {
  Rng rng(202);
  const Point2 c{100.0, 80.0};
  for (int i = 0; i < 2000; ++i) {
    const Point2 s = from_angle(c, rng.uniform(0.0, 360.0),
                                rng.uniform(0.5, 40.0));
    const Point2 t = from_angle(c, rng.uniform(0.0, 360.0),
                                rng.uniform(0.5, 40.0));
    const double via_cross = keypoint_angle(c, s, t).deg;
    const double via_angles =
        clockwise_between(angle_of(s, c), angle_of(t, c));
    EXPECT_NEAR(via_cross, via_angles, 1e-7);
  }
}

// The failure mode the explement correction exists for: spans above 180
// must come back as the clockwise span, never its complement.
TEST(KeypointAngle, ClockwiseRotationRoundTripIncludingWideSpans) {
  Rng rng(303);
  const Point2 c{0.0, 0.0};
  for (int i = 0; i < 2000; ++i) {
    const double base = rng.uniform(0.0, 360.0);
    const double delta = rng.uniform(0.0, 359.999);
    const Point2 s = from_angle(c, base, rng.uniform(0.5, 10.0));
    const Point2 t = from_angle(c, base + delta, rng.uniform(0.5, 10.0));
    EXPECT_NEAR(keypoint_angle(c, s, t).deg, delta, 1e-6);
  }
}

TEST(AngleToReading, NeedleAtStartReadsMinimum) {
  AngleTriple t{AngleDeg(135), AngleDeg(45), AngleDeg(135)};
  const Reading r = angle_to_reading(t, {0.0, 10.0, "bar"});
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_FALSE(r.out_of_scale);
}

TEST(AngleToReading, MidSweepReadsMidRange) {
  AngleTriple t{AngleDeg(135), AngleDeg(45), AngleDeg(270)};
  const Reading r = angle_to_reading(t, {0.0, 100.0, "psi"});
  EXPECT_DOUBLE_EQ(r.value, 50.0);
}

TEST(AngleToReading, HandCheckedLinearMap) {
  AngleTriple t{AngleDeg(135), AngleDeg(45), AngleDeg(180)};
  const Reading r = angle_to_reading(t, {2.0, 10.0, ""});
  EXPECT_NEAR(r.value, 2.0 + (45.0 / 270.0) * 8.0, 1e-12);
}

TEST(AngleToReading, ZeroSweepThrows) {
  AngleTriple t{AngleDeg(90), AngleDeg(90), AngleDeg(100)};
  EXPECT_THROW(angle_to_reading(t, {0.0, 1.0, ""}), DegenerateGaugeError);
}

TEST(AngleToReading, BadRangeThrows) {
  AngleTriple t{AngleDeg(135), AngleDeg(45), AngleDeg(180)};
  EXPECT_THROW(angle_to_reading(t, {5.0, 5.0, ""}), DegenerateGaugeError);
}

TEST(AngleToReading, BeyondEndExtrapolatesWithFlag) {
  // Sweep 135 -> 45 is 270 degrees; needle at 60 sits 285 degrees in.
  AngleTriple t{AngleDeg(135), AngleDeg(45), AngleDeg(60)};
  const Reading r = angle_to_reading(t, {0.0, 100.0, ""});
  EXPECT_TRUE(r.out_of_scale);
  EXPECT_GT(r.value, 100.0);
}

TEST(AngleToReading, MonotoneInNeedlePosition) {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const double start = rng.uniform(0.0, 360.0);
    const double sweep = rng.uniform(10.0, 350.0);
    const GaugeRange range{-3.0, 7.0, ""};
    double prev = -1e300;
    for (int k = 0; k <= 20; ++k) {
      AngleTriple t{AngleDeg(start), AngleDeg(start + sweep),
                    AngleDeg(start + sweep * k / 20.0)};
      const double v = angle_to_reading(t, range).value;
      EXPECT_GE(v, prev);
      prev = v;
    }
    AngleTriple at_start{AngleDeg(start), AngleDeg(start + sweep),
                         AngleDeg(start)};
    AngleTriple at_end{AngleDeg(start), AngleDeg(start + sweep),
                       AngleDeg(start + sweep)};
    EXPECT_DOUBLE_EQ(angle_to_reading(at_start, range).value, -3.0);
    EXPECT_DOUBLE_EQ(angle_to_reading(at_end, range).value, 7.0);
  }
}

TEST(Quantize, FloorRule) {
  EXPECT_EQ(quantize(AngleDeg(0.0)), 0);
  EXPECT_EQ(quantize(AngleDeg(359.9)), 359);
  EXPECT_EQ(quantize(AngleDeg(45.5)), 45);
}

TEST(Dequantize, BinCenters) {
  EXPECT_DOUBLE_EQ(dequantize(0).deg, 0.5);
  EXPECT_DOUBLE_EQ(dequantize(359).deg, 359.5);
  EXPECT_THROW(dequantize(-1), std::out_of_range);
  EXPECT_THROW(dequantize(360), std::out_of_range);
}

TEST(Quantize, RoundTripIdentityAndBound) {
  for (int b = 0; b < 360; ++b) EXPECT_EQ(quantize(dequantize(b)), b);
  Rng rng(505);
  for (int i = 0; i < 10000; ++i) {
    const AngleDeg a(rng.uniform(0.0, 360.0));
    EXPECT_LE(circular_abs_error(dequantize(quantize(a)), a), 0.5);
  }
}

TEST(CircularAbsError, SeamAndBounds) {
  EXPECT_DOUBLE_EQ(circular_abs_error(AngleDeg(10), AngleDeg(350)), 20.0);
  EXPECT_DOUBLE_EQ(circular_abs_error(AngleDeg(90), AngleDeg(90)), 0.0);
  EXPECT_DOUBLE_EQ(circular_abs_error(AngleDeg(0), AngleDeg(180)), 180.0);
  Rng rng(606);
  for (int i = 0; i < 2000; ++i) {
    const AngleDeg a(rng.uniform(0.0, 360.0));
    const AngleDeg b(rng.uniform(0.0, 360.0));
    EXPECT_DOUBLE_EQ(circular_abs_error(a, b), circular_abs_error(b, a));
    EXPECT_LE(circular_abs_error(a, b), 180.0);
    EXPECT_GE(circular_abs_error(a, b), 0.0);
  }
}

}  // namespace
}  // namespace gauge
