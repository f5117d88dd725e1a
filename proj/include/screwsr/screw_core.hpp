#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "screwsr/compact_groups.hpp"
#include "screwsr/errors.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/matrix.hpp"

namespace screwsr {

inline void require_curvature(int k)
{
  if (k != 1 && k != -1 && k != 0) throw DomainError("curvature sign k must be 1, -1 or 0, got " + std::to_string(k));
}

/// Element (x, y) of k_k = k + k. The x slot is the translation part p, the
/// y slot the rotation part h.
struct KkElement
{
  Mat x;
  Mat y;
  int k = 1;
};

inline void require_compatible(const KkElement& a, const KkElement& b, const char* what)
{
  if (a.k != b.k)
    throw DomainError(std::string(what) + ": mismatched curvature " + std::to_string(a.k) + " vs " + std::to_string(b.k));
  a.x.require_same_shape(b.x, what);
  a.y.require_same_shape(b.y, what);
  if (a.x.field() != b.x.field()) throw DimensionError(std::string(what) + ": mismatched fields");
}

inline KkElement operator+(const KkElement& a, const KkElement& b)
{
  require_compatible(a, b, "k_k sum");
  return {a.x + b.x, a.y + b.y, a.k};
}

inline KkElement operator-(const KkElement& a, const KkElement& b)
{
  require_compatible(a, b, "k_k difference");
  return {a.x - b.x, a.y - b.y, a.k};
}

inline KkElement operator*(double s, const KkElement& a) { return {s * a.x, s * a.y, a.k}; }

inline double frobenius_norm(const KkElement& a)
{
  const double nx = frobenius_norm(a.x), ny = frobenius_norm(a.y);
  return std::sqrt(nx * nx + ny * ny);
}

/// ([x,v] + [y,u], [y,v] + k[x,u]) for a = (x,y), b = (u,v).
inline KkElement kk_bracket(const KkElement& a, const KkElement& b)
{
  require_compatible(a, b, "kk_bracket");
  return {bracket(a.x, b.y) + bracket(a.y, b.x), bracket(a.y, b.y) + static_cast<double>(a.k) * bracket(a.x, b.x), a.k};
}

/// The distinguished map L: (x, y) -> (0, x) on the translation axis.
inline KkElement L_map(const KkElement& a)
{
  return {Mat(a.x.rows(), a.x.cols(), a.x.field()), a.x, a.k};
}

/// Block matrix [[y, k x], [x, y]]; the commutator of two block reps is the
/// block rep of their kk_bracket.
inline Mat to_block(const KkElement& a)
{
  return block2x2(a.y, static_cast<double>(a.k) * a.x, a.x, a.y);
}

/// Reads (x, y) back from the lower row of a block rep.
inline KkElement from_block(const Mat& m, int k)
{
  require_curvature(k);
  if (!m.square() || m.rows() % 2) throw DimensionError("from_block: expected an even square matrix");
  const std::size_t n = m.rows() / 2;
  return {m.block(n, 0, n, n), m.block(n, n, n, n), k};
}

/// Distance of a matrix from the block-rep pattern [[y, k x], [x, y]].
inline double block_pattern_residual(const Mat& m, int k)
{
  const std::size_t n = m.rows() / 2;
  const Mat x = m.block(n, 0, n, n), y = m.block(n, n, n, n);
  return std::hypot(distance(m.block(0, 0, n, n), y), distance(m.block(0, n, n, n), static_cast<double>(k) * x));
}

/// Configuration (K, k, lambda) of a screw-motion system.
struct ScrewSystem
{
  CompactGroupId group;
  int k = 1;
  double lambda = 0.0;

  void validate() const
  {
    group.require_valid();
    require_curvature(k);
    if (!std::isfinite(lambda)) throw DomainError("pitch lambda must be finite");
  }

  /// dim g_k = 2 dim k.
  int dim() const { return 2 * group.dim(); }

  /// lambda^2 = k: the form g is degenerate and, for k in {0, 1}, the
  /// distribution fails to bracket-generate.
  bool on_degenerate_locus(double tol = kDefaultTolerances.equality) const
  {
    return std::abs(lambda * lambda - k) <= tol;
  }

  std::string describe() const
  {
    return group.name() + " k=" + std::to_string(k) + " lambda=" + format_double(lambda);
  }

  static std::string format_double(double v)
  {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
};

/// Basis of g_k: (b_i, 0) for all i, then (0, b_i).
inline std::vector<KkElement> kk_basis(const ScrewSystem& sys)
{
  sys.validate();
  const AlgebraBasis b = algebra_basis(sys.group);
  const auto n = static_cast<std::size_t>(sys.group.n);
  const Mat zero(n, n, sys.group.field());
  std::vector<KkElement> out;
  out.reserve(2 * b.size());
  for (const auto& e : b.elements) out.push_back({e, zero, sys.k});
  for (const auto& e : b.elements) out.push_back({zero, e, sys.k});
  return out;
}

/// Lift of x to the distribution: (x, lambda x).
inline KkElement horizontal_lift(const Mat& x, const ScrewSystem& sys)
{
  if (!x.square() || x.rows() != static_cast<std::size_t>(sys.group.n))
    throw DimensionError("horizontal_lift: expected " + sys.group.name() + " algebra element, got " + x.shape_string());
  return {x, sys.lambda * x, sys.k};
}

/// ||y - lambda x|| / sqrt(1 + lambda^2): distance of (x, y) from the
/// graph {(x, lambda x)} in the product metric.
inline double horizontality_residual(const KkElement& a, double lambda)
{
  return frobenius_norm(a.y - lambda * a.x) / std::sqrt(1.0 + lambda * lambda);
}

/// Sub-Riemannian norm of a horizontal vector (x, lambda x): ||x||.
inline double sub_riemannian_norm(const KkElement& a) { return inner_norm(a.x); }

/// lambda<x,v> + lambda<y,u> - <y,v> - k<x,u>.
inline double g_lambda_k(const KkElement& a, const KkElement& b, const ScrewSystem& sys)
{
  require_compatible(a, b, "g_lambda_k");
  const double l = sys.lambda;
  return l * re_trace_inner(a.x, b.y) + l * re_trace_inner(a.y, b.x) - re_trace_inner(a.y, b.y) -
         static_cast<double>(sys.k) * re_trace_inner(a.x, b.x);
}

/// g_lambda_k / (lambda^2 - k); defined only off the degenerate locus. On the
/// distribution it restricts to the sub-Riemannian metric.
inline double h_lambda_k(const KkElement& a, const KkElement& b, const ScrewSystem& sys)
{
  if (sys.on_degenerate_locus()) throw DomainError("h_lambda_k: undefined when lambda^2 = k");
  return g_lambda_k(a, b, sys) / (sys.lambda * sys.lambda - sys.k);
}

/// Eigenvalues (ascending) of the Gram matrix of g_lambda_k on kk_basis.
inline std::vector<double> g_gram_spectrum(const ScrewSystem& sys)
{
  const auto basis = kk_basis(sys);
  const std::size_t m = basis.size();
  std::vector<double> g(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) g[i * m + j] = g[j * m + i] = g_lambda_k(basis[i], basis[j], sys);
  return symmetric_eigenvalues(std::move(g), m);
}

/// min |eigenvalue| / max |eigenvalue| of the g_lambda_k Gram matrix.
inline double g_degeneracy_ratio(const ScrewSystem& sys)
{
  const auto ev = g_gram_spectrum(sys);
  double lo = INFINITY, hi = 0.0;
  for (double e : ev) {
    lo = std::min(lo, std::abs(e));
    hi = std::max(hi, std::abs(e));
  }
  return hi == 0.0 ? 0.0 : lo / hi;
}

// ---------------------------------------------------------------------------
// Isomorphisms onto the standard models.

/// Complex image of an algebra element as a Field::Complex matrix.
inline Mat complex_image(const Mat& m)
{
  const CMat c = embed_complex(m);
  return unembed_complex(c, Field::Complex);
}

/// k = 1: k_1 -> k + k, (x, y) -> (x + y, y - x). The x axis goes to the
/// antidiagonal {(a, -a)} and the y axis to the diagonal {(a, a)}.
inline std::pair<Mat, Mat> t_plus(const KkElement& a)
{
  if (a.k != 1) throw DomainError("t_plus: requires k = 1");
  return {a.x + a.y, a.y - a.x};
}

/// Inverse of t_plus: (p, q) -> ((p - q)/2, (p + q)/2).
inline KkElement t_plus_inverse(const Mat& p, const Mat& q)
{
  return {0.5 * (p - q), 0.5 * (p + q), 1};
}

/// Componentwise bracket on k + k.
inline std::pair<Mat, Mat> product_bracket(const std::pair<Mat, Mat>& a, const std::pair<Mat, Mat>& b)
{
  return {bracket(a.first, b.first), bracket(a.second, b.second)};
}

/// k = -1: k_{-1} -> complexification, (x, y) -> y + i x, computed on
/// complex images (quaternionic blocks become 2n x 2n complex matrices).
inline Mat t_minus(const KkElement& a)
{
  if (a.k != -1) throw DomainError("t_minus: requires k = -1");
  return complex_image(a.y) + complex_image(a.x).scaled_left(kI, Field::Complex);
}

/// Inverse of t_minus for elements of the complexification of `group`.
inline KkElement t_minus_inverse(const Mat& c, const CompactGroupId& group)
{
  if (c.field() != Field::Complex) throw DimensionError("t_minus_inverse: expected a complex matrix");
  const Mat y = 0.5 * (c - c.adjoint());
  const Mat x = (0.5 * (c + c.adjoint())).scaled_left(-1.0 * kI, Field::Complex);
  const Field f = group.field();
  return {unembed_complex(embed_complex(x), f), unembed_complex(embed_complex(y), f), -1};
}

/// k = 0: identity onto Cartan motion algebra coordinates (translation, rotation).
inline std::pair<Mat, Mat> t_zero(const KkElement& a)
{
  if (a.k != 0) throw DomainError("t_zero: requires k = 0");
  return {a.x, a.y};
}

/// Bracket of the Cartan motion algebra k x| k: [(w1,z1),(w2,z2)] =
/// ([z1,w2] - [z2,w1], [z1,z2]).
inline std::pair<Mat, Mat> motion_bracket(const std::pair<Mat, Mat>& a, const std::pair<Mat, Mat>& b)
{
  return {bracket(a.second, b.first) - bracket(b.second, a.first), bracket(a.second, b.second)};
}

/// Homomorphism residual || T[a,b] - [Ta, Tb] || for the T map of a.k.
inline double t_k_homomorphism_residual(const KkElement& a, const KkElement& b)
{
  const KkElement ab = kk_bracket(a, b);
  switch (a.k) {
    case 1: {
      const auto lhs = t_plus(ab);
      const auto rhs = product_bracket(t_plus(a), t_plus(b));
      return std::hypot(distance(lhs.first, rhs.first), distance(lhs.second, rhs.second));
    }
    case -1: return distance(t_minus(ab), bracket(t_minus(a), t_minus(b)));
    default: {
      const auto lhs = t_zero(ab);
      const auto rhs = motion_bracket(t_zero(a), t_zero(b));
      return std::hypot(distance(lhs.first, rhs.first), distance(lhs.second, rhs.second));
    }
  }
}

// ---------------------------------------------------------------------------
// Identities of the map L.

struct LIdentityReport
{
  int trials = 0;
  /// max || k[L x, L y] - [x, y] ||
  double commutator_residual = 0.0;
  /// max || [L x, z] - L[x, z] ||
  double equivariance_residual = 0.0;
  /// max || first coordinate of [L x, x] ||
  double self_bracket_residual = 0.0;
};

inline LIdentityReport verify_L_identities(const ScrewSystem& sys, int trials, std::uint64_t seed = 1)
{
  sys.validate();
  if (trials < 1) throw DomainError("verify_L_identities: trials must be >= 1");
  const auto n = static_cast<std::size_t>(sys.group.n);
  const Mat zero(n, n, sys.group.field());
  LIdentityReport r;
  r.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + 3 * static_cast<std::uint64_t>(t);
    const KkElement x{random_algebra_element(sys.group, s), zero, sys.k};
    const KkElement y{random_algebra_element(sys.group, s + 1), zero, sys.k};
    const KkElement z{zero, random_algebra_element(sys.group, s + 2), sys.k};
    const KkElement lhs1 = static_cast<double>(sys.k) * kk_bracket(L_map(x), L_map(y));
    r.commutator_residual = std::max(r.commutator_residual, frobenius_norm(lhs1 - kk_bracket(x, y)));
    r.equivariance_residual =
        std::max(r.equivariance_residual, frobenius_norm(kk_bracket(L_map(x), z) - L_map(kk_bracket(x, z))));
    r.self_bracket_residual = std::max(r.self_bracket_residual, frobenius_norm(kk_bracket(L_map(x), x).x));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Group-level membership of exponentiated block reps.

/// Residual of a 2m x 2m matrix against the group generated by block reps
/// with curvature k:
///  - k = 1: M* M = I and M commutes with [[0, I], [I, 0]];
///  - k = -1: M* R M = R for R = diag(I, -I) and M commutes with
///    [[0, -I], [I, 0]];
///  - k = 0: M = [[B, 0], [W, B]] with B unitary and W B^{-1} in k.
inline double block_group_residual(const Mat& m, int k)
{
  require_curvature(k);
  if (!m.square() || m.rows() % 2) throw DimensionError("block_group_residual: expected an even square matrix");
  const std::size_t n = m.rows() / 2;
  const Field f = m.field();
  const Mat id = Mat::identity(n, f), zero(n, n, f);
  if (k == 1) {
    const Mat s = block2x2(zero, id, id, zero);
    return std::hypot(unitarity_residual(m), distance(m * s, s * m));
  }
  if (k == -1) {
    const Mat r = block2x2(id, zero, zero, -1.0 * id);
    const Mat j = block2x2(zero, -1.0 * id, id, zero);
    return std::hypot(distance(m.adjoint() * r * m, r), distance(m * j, j * m));
  }
  const Mat b = m.block(0, 0, n, n);
  const Mat w = m.block(n, 0, n, n);
  double res = std::hypot(frobenius_norm(m.block(0, n, n, n)), distance(m.block(n, n, n, n), b));
  res = std::hypot(res, unitarity_residual(b));
  return std::hypot(res, anti_hermitian_residual(w * b.adjoint()));
}

/// Element (w, B) of the Cartan motion group with product
/// (w1, B1)(w2, B2) = (w1 + B1 w2 B1^{-1}, B1 B2).
struct CartanMotionElement
{
  Mat w;
  Mat b;
};

inline CartanMotionElement motion_product(const CartanMotionElement& p, const CartanMotionElement& q)
{
  return {p.w + adjoint(p.b, q.w), p.b * q.b};
}

/// Reads (w, B) = (W B^{-1}, B) off a k = 0 group element [[B, 0], [W, B]].
inline CartanMotionElement motion_from_block(const Mat& m)
{
  const std::size_t n = m.rows() / 2;
  const Mat b = m.block(0, 0, n, n);
  return {m.block(n, 0, n, n) * inverse(b), b};
}

inline Mat motion_to_block(const CartanMotionElement& e)
{
  return block2x2(e.b, Mat(e.b.rows(), e.b.cols(), e.b.field()), e.w * e.b, e.b);
}

}  // namespace screwsr
