#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "screwsr/errors.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/tolerances.hpp"

namespace screwsr {

// ---------------------------------------------------------------------------
// Lie-algebraic primitives

/// Commutator ab - ba.
inline Mat bracket(const Mat& a, const Mat& b)
{
  if (!a.square() || !b.square()) throw DimensionError("bracket: operands must be square");
  a.require_same_shape(b, "bracket");
  if (a.field() != b.field()) throw DimensionError("bracket: field mismatch");
  return a * b - b * a;
}

/// Real trace pairing Re tr(a* b). On anti-Hermitian matrices this equals
/// -Re tr(ab), the canonical bi-invariant inner product of the compact
/// algebra, and it stays positive definite on every matrix space, which is
/// what the Gram-matrix rank test needs.
inline double re_trace_inner(const Mat& a, const Mat& b)
{
  a.require_same_shape(b, "re_trace_inner");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += re_dot(a.data()[k], b.data()[k]);
  return s;
}

inline double inner_norm(const Mat& a) { return std::sqrt(re_trace_inner(a, a)); }

// ---------------------------------------------------------------------------
// Exponential

namespace detail {

inline constexpr int kExpSeriesTerms = 18;
inline constexpr double kExpScaledNorm = 0.5;

/// Number of halvings s with ||a|| / 2^s <= 0.5.
inline int exp_scaling(double norm)
{
  int s = 0;
  while (norm > kExpScaledNorm && s < 1024) {
    norm *= 0.5;
    ++s;
  }
  return s;
}

inline CMat cexp(const CMat& a)
{
  const std::size_t n = a.rows;
  const int s = exp_scaling(a.norm());
  CMat b = a;
  const double scale = std::ldexp(1.0, -s);
  for (auto& v : b.a) v *= scale;

  // Horner form of sum_{j<=18} b^j / j!.
  CMat e = CMat::identity(n);
  for (int j = kExpSeriesTerms; j >= 1; --j) {
    CMat t = b * e;
    for (auto& v : t.a) v /= static_cast<double>(j);
    for (std::size_t i = 0; i < n; ++i) t(i, i) += 1.0;
    e = std::move(t);
  }
  for (int k = 0; k < s; ++k) e = e * e;
  return e;
}

}  // namespace detail

/// Matrix exponential by scaling and squaring with a degree-18 Taylor
/// polynomial. Quaternionic input goes through the complex embedding.
inline Mat mat_exp(const Mat& a)
{
  if (!a.square()) throw DimensionError("mat_exp: non-square input " + a.shape_string());
  return unembed_complex(detail::cexp(embed_complex(a)), a.field());
}

/// cos(z) and sin(z) from the even and odd parts of the exponential series,
/// evaluated on z / 2^s and brought back with the double-angle formulas.
/// Works natively over all three fields.
inline std::pair<Mat, Mat> mat_cos_sin(const Mat& z)
{
  if (!z.square()) throw DimensionError("mat_cos_sin: non-square input");
  const std::size_t n = z.rows();
  const int s = detail::exp_scaling(frobenius_norm(z));
  const Mat b = std::ldexp(1.0, -s) * z;
  const Mat b2 = b * b;
  const Mat id = Mat::identity(n, z.field());

  // cos b = sum (-1)^j b^{2j} / (2j)!, sin b = b * sum (-1)^j b^{2j} / (2j+1)!.
  Mat c = id;
  Mat sn = id;
  for (int j = detail::kExpSeriesTerms / 2; j >= 1; --j) {
    c = id - (1.0 / ((2.0 * j - 1.0) * (2.0 * j))) * (b2 * c);
    sn = id - (1.0 / ((2.0 * j) * (2.0 * j + 1.0))) * (b2 * sn);
  }
  sn = b * sn;
  for (int k = 0; k < s; ++k) {
    Mat c2 = c * c - sn * sn;
    sn = sn * c + c * sn;
    c = std::move(c2);
  }
  return {c.promoted(z.field()), sn.promoted(z.field())};
}

// ---------------------------------------------------------------------------
// Dense solvers

namespace detail {

/// LU with partial pivoting; throws NumericError when a pivot falls below
/// `rel_tol * max|a|`.
inline CMat cinverse(CMat a, double rel_tol = 1e-13)
{
  const std::size_t n = a.rows;
  if (a.cols != n) throw DimensionError("inverse: non-square input");
  CMat inv = CMat::identity(n);
  double scale = 0.0;
  for (const auto& v : a.a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw NumericError("inverse: zero matrix");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) <= rel_tol * scale) throw NumericError("inverse: matrix is numerically singular");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    const cplx d = 1.0 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= d;
      inv(k, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const cplx f = a(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace detail

inline Mat inverse(const Mat& a)
{
  if (!a.square()) throw DimensionError("inverse: non-square input " + a.shape_string());
  return unembed_complex(detail::cinverse(embed_complex(a)), a.field());
}

/// Solve the real square system A x = b (A row-major n x n).
inline std::vector<double> solve_real(std::vector<double> a, std::vector<double> b, double rel_tol = 1e-13)
{
  const std::size_t n = b.size();
  if (a.size() != n * n) throw DimensionError("solve_real: shape mismatch");
  double scale = 0.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    if (std::abs(a[piv * n + k]) <= rel_tol * scale) throw NumericError("solve_real: singular system");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k * n + j] * x[j];
    x[k] = s / a[k * n + k];
  }
  return x;
}

// ---------------------------------------------------------------------------
// Spectra

/// Eigenvalues of a real symmetric matrix (row-major n x n) by cyclic Jacobi
/// rotations, returned in ascending order.
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n)
{
  if (a.size() != n * n) throw DimensionError("symmetric_eigenvalues: shape mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += at(i, j) * at(i, j);
        if (i != j) off += at(i, j) * at(i, j);
      }
    if (off <= 1e-30 * total || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Gram matrix G_ij = Re tr(v_i* v_j) of equally shaped matrices.
inline std::vector<double> gram_matrix(std::span<const Mat> vs)
{
  const std::size_t n = vs.size();
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i * n + j] = g[j * n + i] = re_trace_inner(vs[i], vs[j]);
  return g;
}

/// Dimension of the real span of `vs`: the number of Gram eigenvalues above
/// `rel_tol` times the largest one.
inline int numeric_rank(std::span<const Mat> vs, double rel_tol = kDefaultTolerances.rank_relative)
{
  if (vs.empty()) return 0;
  for (const auto& v : vs) v.require_same_shape(vs.front(), "numeric_rank");
  const auto ev = symmetric_eigenvalues(gram_matrix(vs), vs.size());
  const double top = ev.back();
  if (!(top > 0.0)) return 0;
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double e) { return e > rel_tol * top; }));
}

inline int numeric_rank(const std::vector<Mat>& vs, double rel_tol = kDefaultTolerances.rank_relative)
{
  return numeric_rank(std::span<const Mat>(vs), rel_tol);
}

inline constexpr std::size_t kMaxSpectralSize = 16;

namespace detail {

/// Householder reduction to upper Hessenberg form.
inline void to_hessenberg(CMat& h)
{
  const std::size_t n = h.rows;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha2 += std::norm(h(i, k));
    const double alpha = std::sqrt(alpha2);
    if (alpha == 0.0) continue;
    std::vector<cplx> v(n, 0.0);
    const cplx x0 = h(k + 1, k);
    const cplx phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : cplx(1.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] += phase * alpha;
    double vn2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vn2 += std::norm(v[i]);
    if (vn2 == 0.0) continue;
    // H <- (I - 2 v v*/|v|^2) H (I - 2 v v*/|v|^2)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, j);
      s *= 2.0 / vn2;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
      s *= 2.0 / vn2;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

/// Eigenvalues of a complex matrix by Hessenberg reduction followed by
/// single-shift QR sweeps with Wilkinson shifts and deflation.
inline std::vector<cplx> complex_eigenvalues(CMat h)
{
  const std::size_t n = h.rows;
  std::vector<cplx> ev;
  ev.reserve(n);
  if (n == 0) return ev;
  to_hessenberg(h);
  const double eps = std::numeric_limits<double>::epsilon();
  double hnorm = h.norm();
  if (hnorm == 0.0) hnorm = 1.0;

  std::size_t hi = n - 1;
  int iter = 0;
  const int max_iter = 60 * static_cast<int>(n);
  int total_iter = 0;
  while (true) {
    if (hi == 0) {
      ev.push_back(h(0, 0));
      break;
    }
    // Locate the start of the unreduced trailing block.
    std::size_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double diag = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (diag == 0.0) diag = hnorm;
      if (sub <= eps * diag) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      ev.push_back(h(hi, hi));
      --hi;
      iter = 0;
      continue;
    }
    if (++total_iter > max_iter) throw NumericError("eig_real_parts: QR iteration did not converge");
    ++iter;

    cplx mu;
    if (iter % 11 == 10) {
      // Exceptional shift.
      mu = h(hi, hi) + cplx(std::abs(h(hi, hi - 1)), 0.0) * 0.75;
    } else {
      const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const cplx half = 0.5 * (a - d);
      const cplx disc = std::sqrt(half * half + b * c);
      const cplx m1 = 0.5 * (a + d) + disc, m2 = 0.5 * (a + d) - disc;
      mu = std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
    }

    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
    std::vector<double> cs(hi - lo);
    std::vector<cplx> sn(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      const cplx x = h(k, k), y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      double c;
      cplx s;
      if (r == 0.0) {
        c = 1.0;
        s = 0.0;
      } else if (std::abs(x) == 0.0) {
        c = 0.0;
        s = std::conj(y) / std::abs(y);
      } else {
        c = std::abs(x) / r;
        s = (x / std::abs(x)) * std::conj(y) / r;
      }
      cs[k - lo] = c;
      sn[k - lo] = s;
      for (std::size_t j = k; j <= hi; ++j) {
        const cplx u = h(k, j), v = h(k + 1, j);
        h(k, j) = c * u + s * v;
        h(k + 1, j) = -std::conj(s) * u + c * v;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const double c = cs[k - lo];
      const cplx s = sn[k - lo];
      const std::size_t top = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= top; ++i) {
        const cplx u = h(i, k), v = h(i, k + 1);
        h(i, k) = u * c + v * std::conj(s);
        h(i, k + 1) = -u * s + v * c;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
  }
  return ev;
}

}  // namespace detail

/// All eigenvalues of a square matrix (quaternionic input via its complex
/// image, so each quaternionic eigenvalue class appears with its conjugate).
inline std::vector<cplx> eigenvalues(const Mat& a)
{
  if (!a.square()) throw DimensionError("eigenvalues: non-square input");
  CMat c = embed_complex(a);
  if (c.rows > kMaxSpectralSize)
    throw CapacityError("eig_real_parts: embedded size " + std::to_string(c.rows) + " exceeds 16");
  return detail::complex_eigenvalues(std::move(c));
}

/// Real parts of the eigenvalues, sorted ascending.
inline std::vector<double> eig_real_parts(const Mat& a)
{
  const auto ev = eigenvalues(a);
  std::vector<double> re(ev.size());
  std::transform(ev.begin(), ev.end(), re.begin(), [](cplx z) { return z.real(); });
  std::sort(re.begin(), re.end());
  return re;
}

/// Smallest singular value, from the spectrum of the real symmetric image of
/// M* M.
inline double min_singular_value(const Mat& m)
{
  const CMat c = embed_complex(m);
  const CMat ch = [&] {
    CMat t(c.cols, c.rows);
    for (std::size_t i = 0; i < c.rows; ++i)
      for (std::size_t j = 0; j < c.cols; ++j) t(j, i) = std::conj(c(i, j));
    return t;
  }();
  const CMat g = ch * c;
  const std::size_t n = g.rows;
  std::vector<double> r(4 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cplx v = g(i, j);
      r[i * 2 * n + j] = v.real();
      r[i * 2 * n + n + j] = -v.imag();
      r[(n + i) * 2 * n + j] = v.imag();
      r[(n + i) * 2 * n + n + j] = v.real();
    }
  const auto ev = symmetric_eigenvalues(std::move(r), 2 * n);
  return std::sqrt(std::max(0.0, ev.front()));
}

// ---------------------------------------------------------------------------
// Sampling

/// `samples` equally spaced times on [0, t_max].
inline std::vector<double> uniform_times(double t_max, int samples)
{
  if (samples < 2) throw DomainError("uniform_times: need at least 2 samples");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("uniform_times: t_max must be positive");
  std::vector<double> t(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (samples - 1);
  return t;
}

}  // namespace screwsr
