#pragma once

#include <cmath>

namespace coopcast {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

  double norm() const { return std::hypot(x, y); }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Rigid transform p -> R(angle) * p + t, the only map normalization needs.
struct RigidTransform {
  double angle = 0.0;  // radians, counterclockwise
  Vec2 translation{};

  Vec2 apply(const Vec2& p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y + translation.x, s * p.x + c * p.y + translation.y};
  }

  // Rotation only; for direction-like quantities (displacements).
  Vec2 rotate(const Vec2& p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
  }

  RigidTransform inverse() const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {-angle, {-(c * translation.x + s * translation.y),
                     -(-s * translation.x + c * translation.y)}};
  }
};

}  // namespace coopcast
