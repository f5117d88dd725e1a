#pragma once

#include <array>
#include <utility>
#include <cmath>

#include "screwsr/errors.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/screw_core.hpp"

// 4 x 4 matrix model of the isometry groups of the three dimensional space
// forms R^3 (kappa = 0), S^3 (kappa = 1) and H^3 (kappa = -1).

namespace screwsr {

using Vec3 = std::array<double, 3>;

inline void require_kappa(int kappa)
{
  if (kappa != 1 && kappa != -1 && kappa != 0) throw DomainError("kappa must be 1, -1 or 0");
}

/// L_v, the matrix of w -> v x w.
inline Mat hat(const Vec3& v)
{
  return Mat::real({{0, -v[2], v[1]}, {v[2], 0, -v[0]}, {-v[1], v[0], 0}});
}

inline Vec3 vee(const Mat& m)
{
  if (m.rows() != 3 || m.cols() != 3) throw DimensionError("vee: expected 3x3, got " + m.shape_string());
  return {0.5 * (m(2, 1).w - m(1, 2).w), 0.5 * (m(0, 2).w - m(2, 0).w), 0.5 * (m(1, 0).w - m(0, 1).w)};
}

/// Infinitesimal translation [[0, -kappa x^t], [x, 0]].
inline Mat translation_generator(int kappa, const Vec3& x)
{
  require_kappa(kappa);
  Mat m(4, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i + 1, 0) = x[i];
    m(0, i + 1) = -kappa * x[i];
  }
  return m;
}

/// Infinitesimal rotation [[0, 0], [0, r]] for r in o(3).
inline Mat rotation_generator(const Mat& r)
{
  Mat m(4, 4);
  m.set_block(1, 1, r.promoted(Field::Real));
  return m;
}

/// D_lambda(x) = [[0, -kappa x^t], [x, lambda L_x]].
inline Mat screw_generator(int kappa, double lambda, const Vec3& x)
{
  return translation_generator(kappa, x) + rotation_generator(lambda * hat(x));
}

/// Lie algebra isomorphism from k_kappa over o(3) onto the 4 x 4 model:
/// (a, b) -> [[0, -kappa vee(a)^t], [vee(a), b]].
inline Mat space_form_image(const KkElement& e)
{
  if (e.x.rows() != 3 || e.x.field() != Field::Real) throw DimensionError("space_form_image: expected o(3) components");
  return translation_generator(e.k, vee(e.x)) + rotation_generator(e.y);
}

/// diag(kappa, 1, 1, 1).
inline Mat space_form_metric(int kappa)
{
  Mat j = Mat::identity(4);
  j(0, 0) = kappa;
  return j;
}

/// Residual of g against the identity component of the isometry group:
/// g^t J g = J for kappa = +-1; g = [[1, 0], [v, R]] with R orthogonal for
/// kappa = 0.
inline double space_form_group_residual(int kappa, const Mat& g)
{
  require_kappa(kappa);
  if (kappa != 0) {
    const Mat j = space_form_metric(kappa);
    return distance(g.transpose() * j * g, j);
  }
  double r = std::abs(g(0, 0).w - 1.0);
  for (std::size_t i = 1; i < 4; ++i) r = std::hypot(r, g(0, i).abs());
  return std::hypot(r, unitarity_residual(g.block(1, 1, 3, 3)));
}

/// Alternative closed-form condition for the space-form systems:
/// kappa^2 != lambda.
inline bool alternative_space_form_condition(int kappa, double lambda, double tol = kDefaultTolerances.equality)
{
  return std::abs(static_cast<double>(kappa * kappa) - lambda) > tol;
}

/// Condition implied by the general criterion with k = kappa: lambda^2 != kappa.
inline bool space_form_condition(int kappa, double lambda, double tol = kDefaultTolerances.equality)
{
  return std::abs(lambda * lambda - static_cast<double>(kappa)) > tol;
}

/// The two generators P = [[0, -kappa x^t], [x, L_{lambda x + y}]] and
/// Q = [[0, 0], [0, L_y]] of a space-form geodesic. Requires lambda^2 != kappa,
/// the nondegeneracy condition.
inline std::pair<Mat, Mat> space_form_generators(int kappa, double lambda, const Vec3& x, const Vec3& y)
{
  require_kappa(kappa);
  if (!space_form_condition(kappa, lambda))
    throw DomainError("space_form_geodesic: lambda^2 = kappa, the system is not bracket generating");
  Vec3 lxy;
  for (std::size_t i = 0; i < 3; ++i) lxy[i] = lambda * x[i] + y[i];
  return {translation_generator(kappa, x) + rotation_generator(hat(lxy)), rotation_generator(hat(y))};
}

/// exp(tP) exp(-tQ).
inline Mat space_form_geodesic(int kappa, double lambda, const Vec3& x, const Vec3& y, double t)
{
  const auto [p, q] = space_form_generators(kappa, lambda, x, y);
  return mat_exp(t * p) * mat_exp(-t * q);
}

/// gamma^{-1} gamma' by the product rule on the two exponential factors.
inline Mat space_form_left_log_derivative(int kappa, double lambda, const Vec3& x, const Vec3& y, double t)
{
  const auto [p, q] = space_form_generators(kappa, lambda, x, y);
  const Mat ep = mat_exp(t * p), emq = mat_exp(-t * q);
  return mat_exp(t * q) * mat_exp(-t * p) * (ep * p * emq - ep * emq * q);
}

/// Distance of a 4 x 4 algebra element from the screw distribution: the
/// element is compared with D_lambda(u) for u its lower-left column.
inline double space_form_horizontality_residual(int kappa, double lambda, const Mat& v)
{
  const Vec3 u{v(1, 0).w, v(2, 0).w, v(3, 0).w};
  return distance(v, screw_generator(kappa, lambda, u));
}

}  // namespace screwsr
