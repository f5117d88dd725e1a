#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "screwsr/errors.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/random.hpp"
#include "screwsr/tolerances.hpp"

namespace screwsr {

/// F^{n,n}: F^{2n} with the split Hermitian form g((x,y),(u,v)) = x*u - y*v.
struct SplitSpace
{
  int n = 1;
  Field field = Field::Real;

  void validate() const
  {
    if (n < 1) throw DomainError("SplitSpace: n must be positive");
  }
  /// R = diag(I, -I), the Gram matrix of g.
  Mat form() const
  {
    validate();
    const auto m = static_cast<std::size_t>(n);
    Mat r = Mat::identity(2 * m, field);
    for (std::size_t i = m; i < 2 * m; ++i) r(i, i) = -1.0;
    return r;
  }
  /// J(x, y) = (-y, x).
  Mat complex_structure() const
  {
    validate();
    const auto m = static_cast<std::size_t>(n);
    const Mat id = Mat::identity(m, field), zero(m, m, field);
    return block2x2(zero, -id, id, zero);
  }
  /// g(u, v) = u* R v for column vectors or frames.
  Mat g(const Mat& u, const Mat& v) const { return u.adjoint() * form() * v; }
};

inline SplitSpace split_space_of(const Mat& x)
{
  if (!x.square() || x.rows() % 2) throw DimensionError("split_space_of: expected a 2n x 2n matrix");
  return {static_cast<int>(x.rows() / 2), x.field()};
}

/// max |entry| of X* R X - R, relative to max(1, ||X||^2).
inline double split_unitarity_residual(const Mat& x)
{
  const SplitSpace sp = split_space_of(x);
  const Mat r = sp.form();
  const double scale = std::max(1.0, frobenius_norm(x) * frobenius_norm(x));
  return max_abs(x.adjoint() * r * x - r) / scale;
}

// ---------------------------------------------------------------------------
// Graphs of unitary maps

/// F(A) = {(Ax, x)}, stored as the 2n x n frame [A; I].
struct GraphSubspace
{
  Mat frame;
  /// max |entry| of the g-Gram matrix of the frame, i.e. of A*A - I.
  double isotropy_residual = 0.0;

  bool isotropic(double tol = 1e-10) const { return isotropy_residual <= tol; }
};

inline GraphSubspace graph_subspace(const Mat& a)
{
  if (!a.square() || a.empty()) throw DimensionError("graph_subspace: expected a square matrix");
  const std::size_t n = a.rows();
  Mat frame(2 * n, n, a.field());
  frame.set_block(0, 0, a);
  frame.set_block(n, 0, Mat::identity(n, a.field()));
  const SplitSpace sp{static_cast<int>(n), a.field()};
  return {frame, max_abs(sp.g(frame, frame))};
}

/// Orthogonal projector onto the column span of a full-rank frame.
inline Mat projector(const Mat& frame)
{
  return frame * inverse(frame.adjoint() * frame) * frame.adjoint();
}

inline double subspace_distance(const Mat& frame_a, const Mat& frame_b)
{
  return frobenius_norm(projector(frame_a) - projector(frame_b));
}

/// Smallest singular value of [V | JV]; positive iff J(V) and V meet only in 0.
inline double j_transversality(const Mat& frame)
{
  const std::size_t m = frame.rows(), n = frame.cols();
  if (m != 2 * n) throw DimensionError("j_transversality: expected a 2n x n frame");
  const SplitSpace sp{static_cast<int>(n), frame.field()};
  const Mat jf = sp.complex_structure() * frame;
  Mat both(m, 2 * n, frame.field());
  both.set_block(0, 0, frame);
  both.set_block(0, n, jf);
  return min_singular_value(both) / std::max(1.0, frobenius_norm(both));
}

// ---------------------------------------------------------------------------
// Moebius action of U(n,n,F) on U(n,F)

inline void require_unitary(const Mat& a, const char* what)
{
  if (!a.square() || a.empty()) throw DimensionError(std::string(what) + ": expected a square matrix");
  if (max_abs(a.adjoint() * a - Mat::identity(a.rows(), a.field())) > 1e-10)
    throw DomainError(std::string(what) + ": matrix is not unitary");
}

inline void require_split_unitary(const Mat& x, const char* what)
{
  if (split_unitarity_residual(x) > 1e-10)
    throw DomainError(std::string(what) + ": matrix does not preserve the split form");
}

/// X.A = (aA + c)(bA + d)^{-1} for X = [[a, c], [b, d]].
inline Mat mobius_act(const Mat& x, const Mat& a)
{
  require_unitary(a, "mobius_act");
  require_split_unitary(x, "mobius_act");
  const std::size_t n = a.rows();
  if (x.rows() != 2 * n) throw DimensionError("mobius_act: X must be 2n x 2n for n x n A");
  const Field f = wider(x.field(), a.field());
  const Mat ap = a.promoted(f), xp = x.promoted(f);
  const Mat top = xp.block(0, 0, n, n) * ap + xp.block(0, n, n, n);
  const Mat bottom = xp.block(n, 0, n, n) * ap + xp.block(n, n, n, n);
  if (min_singular_value(bottom) <= 1e-12 * std::max(1.0, frobenius_norm(bottom)))
    throw NumericError("mobius_act: point moved to infinity (bA + d singular)");
  return top * inverse(bottom);
}

// ---------------------------------------------------------------------------
// U^J(n,n,F) and psi

/// [[u cos z, -u sin z], [u sin z, u cos z]].
inline Mat uj_from_cartan(const Mat& u, const Mat& z)
{
  require_unitary(u, "uj_from_cartan");
  if (u.rows() != z.rows() || !z.square()) throw DimensionError("uj_from_cartan: u and z differ in size");
  if (anti_hermitian_residual(z) > 1e-10 * std::max(1.0, frobenius_norm(z)))
    throw DomainError("uj_from_cartan: z must be skew-Hermitian");
  const auto [c, s] = mat_cos_sin(z);
  const Mat uc = u * c, us = u * s;
  return block2x2(uc, -us, us, uc);
}

struct UJMembership
{
  bool member = false;
  double split_residual = 0.0;
  double commutation_residual = 0.0;
  Mat a;
  Mat b;
  /// max |entry| of a*a - b*b - I and of a*b + b*a.
  double block_identity_residual = 0.0;
};

/// X in U^J(n,n,F) iff X*RX = R and XJ = JX; members are [[a, -b], [b, a]].
inline UJMembership uj_membership(const Mat& x, double tol = 1e-10)
{
  UJMembership m;
  const SplitSpace sp = split_space_of(x);
  const double scale = std::max(1.0, frobenius_norm(x) * frobenius_norm(x));
  m.split_residual = split_unitarity_residual(x);
  const Mat j = sp.complex_structure();
  m.commutation_residual = max_abs(x * j - j * x) / std::sqrt(scale);
  m.member = m.split_residual <= tol && m.commutation_residual <= tol;
  if (m.member) {
    const auto n = static_cast<std::size_t>(sp.n);
    m.a = x.block(0, 0, n, n);
    m.b = x.block(n, 0, n, n);
    const Mat id = Mat::identity(n, x.field());
    m.block_identity_residual = std::max(max_abs(m.a.adjoint() * m.a - m.b.adjoint() * m.b - id),
                                         max_abs(m.a.adjoint() * m.b + m.b.adjoint() * m.a)) /
                                scale;
  }
  return m;
}

namespace detail {

/// Real form of a complex matrix: [[Re, -Im], [Im, Re]], kept in a CMat.
inline CMat realify(const CMat& c)
{
  CMat r(2 * c.rows, 2 * c.cols);
  for (std::size_t i = 0; i < c.rows; ++i)
    for (std::size_t j = 0; j < c.cols; ++j) {
      const cplx v = c(i, j);
      r(i, j) = v.real();
      r(i, c.cols + j) = -v.imag();
      r(c.rows + i, j) = v.imag();
      r(c.rows + i, c.cols + j) = v.real();
    }
  return r;
}

/// Real-linear image of an F-matrix acting on F^n = R^{n dim F}.
inline CMat real_image(const Mat& m)
{
  const CMat c = embed_complex(m);
  return m.field() == Field::Real ? c : realify(c);
}

}  // namespace detail

/// psi([[a, -b], [b, a]]) = a + i b in M_n(F) (x) C. The complexifying unit i
/// is central: F-matrices enter through their real-linear images, so
/// M_n(R) lands in M_n(C), M_n(C) in M_2n(C) and M_n(H) in M_4n(C).
inline CMat psi_map(const Mat& x)
{
  const UJMembership m = uj_membership(x);
  if (!m.member) throw DomainError("psi_map: matrix is not in U^J(n,n,F)");
  const CMat ra = detail::real_image(m.a), rb = detail::real_image(m.b);
  CMat out(ra.rows, ra.cols);
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] = ra.a[k] + cplx(0.0, 1.0) * rb.a[k];
  return out;
}

// ---------------------------------------------------------------------------
// Small rotations

enum class UPlusVerdict { Inside, Outside, Boundary };

inline const char* to_string(UPlusVerdict v)
{
  switch (v) {
    case UPlusVerdict::Inside: return "inside";
    case UPlusVerdict::Outside: return "outside";
    case UPlusVerdict::Boundary: return "boundary";
  }
  return "?";
}

struct UPlusReport
{
  UPlusVerdict verdict = UPlusVerdict::Outside;
  /// Smallest real part among the eigenvalues of the complex image of A.
  double min_real_part = 0.0;
  /// Smallest singular value of A^2 + I.
  double a2_plus_i_sigma = 0.0;
  /// A^2 + I nonsingular, i.e. A in U'(n,F).
  bool in_u_prime = false;
  /// Inside implies in U'.
  bool consistent = true;
};

/// A in U+(n,F) iff every eigenvalue has positive real part; real parts within
/// `boundary` of 0 give a Boundary verdict instead.
inline UPlusReport u_plus_membership(const Mat& a, double boundary = kDefaultTolerances.spectral_boundary)
{
  require_unitary(a, "u_plus_membership");
  UPlusReport r;
  const auto re = eig_real_parts(a);
  r.min_real_part = re.front();
  const bool near_zero = std::any_of(re.begin(), re.end(), [&](double x) { return std::abs(x) <= boundary; });
  if (near_zero)
    r.verdict = UPlusVerdict::Boundary;
  else
    r.verdict = r.min_real_part > boundary ? UPlusVerdict::Inside : UPlusVerdict::Outside;
  r.a2_plus_i_sigma = min_singular_value(a * a + Mat::identity(a.rows(), a.field()));
  r.in_u_prime = r.a2_plus_i_sigma > boundary;
  r.consistent = r.verdict != UPlusVerdict::Inside || r.in_u_prime;
  return r;
}

// ---------------------------------------------------------------------------
// SO(2,C) acting on SO(2)

inline Mat rotation2(double angle)
{
  const double c = std::cos(angle), s = std::sin(angle);
  return Mat::real({{c, -s}, {s, c}});
}

/// Closed form of the action of the rotation by zeta = s + i t on eps in S^1:
/// eps exp(-i eps arcsin(tanh 2t)). Independent of s.
inline cplx so2_orbit_closed_form(double t, int eps)
{
  if (eps != 1 && eps != -1) throw DomainError("so2_orbit: eps must be +1 or -1");
  return static_cast<double>(eps) * std::exp(cplx(0.0, -eps * std::asin(std::tanh(2.0 * t))));
}

struct SO2OrbitPoint
{
  cplx closed_form;
  cplx matrix_route;
  /// The Moebius image of eps I as a 2 x 2 matrix.
  Mat w;
  /// ||psi(X) - rotation(s + i t)||.
  double psi_residual = 0.0;

  double discrepancy() const { return std::abs(closed_form - matrix_route); }
};

/// Both routes for zeta = s + i t: the closed form, and the Moebius action of
/// X = psi^{-1}(rotation(zeta)) built from u = rotation(s), z = [[0,-t],[t,0]].
inline SO2OrbitPoint so2_orbit(double s, double t, int eps)
{
  SO2OrbitPoint p;
  p.closed_form = so2_orbit_closed_form(t, eps);
  const Mat z = Mat::real({{0.0, -t}, {t, 0.0}});
  const Mat x = uj_from_cartan(rotation2(s), z);
  p.w = mobius_act(x, static_cast<double>(eps) * Mat::identity(2));
  // A rotation [[c, -s], [s, c]] is the unit complex number c + i s.
  p.matrix_route = cplx(p.w(0, 0).w, p.w(1, 0).w);

  const cplx zeta(s, t);
  const cplx c = std::cos(zeta), sn = std::sin(zeta);
  const CMat psi = psi_map(x);
  p.psi_residual = std::max({std::abs(psi(0, 0) - c), std::abs(psi(0, 1) + sn), std::abs(psi(1, 0) - sn),
                             std::abs(psi(1, 1) - c)});
  return p;
}

// ---------------------------------------------------------------------------
// Random elements

/// Matrix with entries uniform in [-scale, scale] in every real component.
inline Mat random_f_matrix(std::size_t n, Field f, Rng& rng, double scale = 1.0)
{
  Mat m(n, n, f);
  for (auto& q : m.data()) {
    q.w = rng.uniform(-scale, scale);
    if (f != Field::Real) q.x = rng.uniform(-scale, scale);
    if (f == Field::Quaternion) {
      q.y = rng.uniform(-scale, scale);
      q.z = rng.uniform(-scale, scale);
    }
  }
  return m;
}

inline Mat random_skew(std::size_t n, Field f, Rng& rng, double scale = 1.0)
{
  const Mat m = random_f_matrix(n, f, rng, scale);
  return 0.5 * (m - m.adjoint());
}

/// exp of a random skew-Hermitian matrix.
inline Mat random_unitary(std::size_t n, Field f, Rng& rng, double scale = 1.0)
{
  return mat_exp(random_skew(n, f, rng, scale));
}

/// exp([[p, q], [q*, r]]) with p, r skew-Hermitian: an element of the
/// identity component of U(n,n,F).
inline Mat random_split_unitary(std::size_t n, Field f, Rng& rng, double scale = 0.5)
{
  const Mat q = random_f_matrix(n, f, rng, scale);
  return mat_exp(block2x2(random_skew(n, f, rng, 1.0), q, q.adjoint(), random_skew(n, f, rng, 1.0)));
}

/// uj_from_cartan of a random unitary u and skew-Hermitian z.
inline Mat random_uj(std::size_t n, Field f, Rng& rng, double scale = 0.5)
{
  return uj_from_cartan(random_unitary(n, f, rng), random_skew(n, f, rng, scale));
}

}  // namespace screwsr
