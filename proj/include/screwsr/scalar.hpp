#pragma once

#include <cmath>
#include <complex>
#include <string_view>

namespace screwsr {

/// Scalar field of a matrix. Real and complex numbers are stored as
/// quaternions whose unused components are zero, so one entry type serves
/// all three fields.
enum class Field { Real = 0, Complex = 1, Quaternion = 2 };

inline constexpr Field wider(Field a, Field b) { return a < b ? b : a; }

inline constexpr std::string_view field_name(Field f)
{
  switch (f) {
    case Field::Real: return "R";
    case Field::Complex: return "C";
    case Field::Quaternion: return "H";
  }
  return "?";
}

/// q = w + x i + y j + z k.
struct Quaternion
{
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_) : w(w_) {}
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion from_complex(std::complex<double> c) { return {c.real(), c.imag(), 0.0, 0.0}; }

  /// Split q = a + b j into the complex pair (a, b).
  std::complex<double> a() const { return {w, x}; }
  std::complex<double> b() const { return {y, z}; }
  static Quaternion from_pair(std::complex<double> a, std::complex<double> b)
  {
    return {a.real(), a.imag(), b.real(), b.imag()};
  }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o)
  {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o)
  {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s)
  {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q)
{
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

/// Real part of conj(p) * q, i.e. the Euclidean dot product on R^4.
constexpr double re_dot(const Quaternion& p, const Quaternion& q)
{
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b)
{
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline constexpr Quaternion kI{0, 1, 0, 0};
inline constexpr Quaternion kJ{0, 0, 1, 0};
inline constexpr Quaternion kK{0, 0, 0, 1};

}  // namespace screwsr
