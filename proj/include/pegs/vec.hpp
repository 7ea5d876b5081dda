#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace pegs {

template <int D>
struct Vec {
  std::array<double, D> c{};

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < D; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < D; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < D; ++i) c[i] *= s;
    return *this;
  }
  Vec& operator/=(double s) { return *this *= (1.0 / s); }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator/(Vec a, double s) { return a /= s; }
  friend Vec operator-(Vec a) {
    for (int i = 0; i < D; ++i) a.c[i] = -a.c[i];
    return a;
  }
};

template <int D>
inline double dot(const Vec<D>& a, const Vec<D>& b) {
  double s = 0;
  for (int i = 0; i < D; ++i) s += a.c[i] * b.c[i];
  return s;
}

template <int D>
inline double norm2(const Vec<D>& v) {
  return dot(v, v);
}

template <int D>
inline double norm(const Vec<D>& v) {
  return std::sqrt(norm2(v));
}

template <int D>
inline Vec<D> normalized(const Vec<D>& v) {
  return v / norm(v);
}

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

inline Vec2 vec2(double x, double y) { return Vec2{{x, y}}; }
inline Vec3 vec3(double x, double y, double z) { return Vec3{{x, y, z}}; }

// ccw perpendicular
inline Vec2 perp(const Vec2& v) { return vec2(-v[1], v[0]); }

inline double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace pegs
