#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "screwsr/controllability.hpp"
#include "screwsr/errors.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/random.hpp"

// Octonionic cross product on R^7 = Im(O), the splitting o(7) = L + g2, and
// the screw system on R^7 x| SO(7).

namespace screwsr {

using Vec7 = std::array<double, 7>;

inline Vec7 unit7(std::size_t i)
{
  Vec7 e{};
  e.at(i) = 1.0;
  return e;
}

inline double dot(const Vec7& u, const Vec7& v)
{
  double s = 0.0;
  for (std::size_t i = 0; i < 7; ++i) s += u[i] * v[i];
  return s;
}

inline double norm(const Vec7& u) { return std::sqrt(dot(u, u)); }

inline Vec7 operator+(Vec7 u, const Vec7& v)
{
  for (std::size_t i = 0; i < 7; ++i) u[i] += v[i];
  return u;
}

inline Vec7 operator-(Vec7 u, const Vec7& v)
{
  for (std::size_t i = 0; i < 7; ++i) u[i] -= v[i];
  return u;
}

inline Vec7 operator*(double s, Vec7 u)
{
  for (auto& c : u) c *= s;
  return u;
}

inline double distance(const Vec7& u, const Vec7& v) { return norm(u - v); }

inline Mat column(const Vec7& u)
{
  Mat m(7, 1);
  for (std::size_t i = 0; i < 7; ++i) m(i, 0) = u[i];
  return m;
}

inline Vec7 mat_vec(const Mat& a, const Vec7& u)
{
  if (a.rows() != 7 || a.cols() != 7) throw DimensionError("apply: expected a 7x7 matrix, got " + a.shape_string());
  Vec7 r{};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) r[i] += a(i, j).w * u[j];
  return r;
}

/// Multiplication table of the basis e_1..e_7, stored as signed 1-based
/// indices: product(i, j) = +-(k + 1) means e_i x e_j = +-e_k (0-based i, j, k).
class CrossProductTable
{
public:
  /// e_i x e_{i+1} = e_{i+3} (indices mod 7), extended by antisymmetry and
  /// cyclicity of each triple.
  static CrossProductTable standard()
  {
    CrossProductTable t;
    for (int i = 0; i < 7; ++i) {
      const int a = i, b = (i + 1) % 7, c = (i + 3) % 7;
      t.set_product(a, b, c + 1);
      t.set_product(b, c, a + 1);
      t.set_product(c, a, b + 1);
    }
    return t;
  }

  int product(int i, int j) const { return entry_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

  /// Sets e_i x e_j = sign(k) e_{|k|-1} and e_j x e_i = -e_i x e_j.
  void set_product(int i, int j, int signed_index)
  {
    entry_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) = signed_index;
    entry_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i)) = -signed_index;
  }

  Vec7 cross(const Vec7& u, const Vec7& v) const
  {
    Vec7 r{};
    for (std::size_t i = 0; i < 7; ++i) {
      if (u[i] == 0.0) continue;
      for (std::size_t j = 0; j < 7; ++j) {
        const int p = entry_[i][j];
        if (p == 0) continue;
        const double s = p > 0 ? 1.0 : -1.0;
        r[static_cast<std::size_t>(std::abs(p) - 1)] += s * u[i] * v[j];
      }
    }
    return r;
  }

  bool operator==(const CrossProductTable&) const = default;

private:
  std::array<std::array<int, 7>, 7> entry_{};
};

inline const CrossProductTable& standard_table()
{
  static const CrossProductTable t = CrossProductTable::standard();
  return t;
}

/// The 21 products listed in the reference table, as (s, i, j) with
/// e_s = e_i x e_j, 1-based.
inline const std::vector<std::array<int, 3>>& stated_products()
{
  static const std::vector<std::array<int, 3>> p{
      {1, 5, 6}, {1, 2, 4}, {1, 3, 7}, {2, 6, 7}, {2, 4, 1}, {2, 3, 5}, {3, 7, 1},
      {3, 5, 2}, {3, 4, 6}, {4, 1, 2}, {4, 6, 3}, {4, 5, 7}, {5, 2, 3}, {5, 7, 4},
      {5, 6, 1}, {6, 3, 4}, {6, 7, 2}, {6, 1, 5}, {7, 4, 5}, {7, 2, 6}, {7, 1, 3},
  };
  return p;
}

struct TableConsistency
{
  int stated_mismatches = 0;
  int antisymmetry_violations = 0;
  int cyclicity_violations = 0;

  bool ok() const { return stated_mismatches == 0 && antisymmetry_violations == 0 && cyclicity_violations == 0; }
};

inline TableConsistency check_table(const CrossProductTable& t)
{
  TableConsistency c;
  for (const auto& [s, i, j] : stated_products())
    if (t.product(i - 1, j - 1) != s) ++c.stated_mismatches;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (t.product(i, j) != -t.product(j, i)) ++c.antisymmetry_violations;
      const int p = t.product(i, j);
      // e_i x e_j = e_k implies e_j x e_k = e_i.
      if (p > 0 && t.product(j, p - 1) != i + 1) ++c.cyclicity_violations;
    }
  return c;
}

inline Vec7 cross(const Vec7& u, const Vec7& v, const CrossProductTable& t = standard_table()) { return t.cross(u, v); }

/// Matrix of v -> u x v.
inline Mat L_op(const Vec7& u, const CrossProductTable& t = standard_table())
{
  Mat m(7, 7);
  for (std::size_t j = 0; j < 7; ++j) {
    const Vec7 c = t.cross(u, unit7(j));
    for (std::size_t i = 0; i < 7; ++i) m(i, j) = c[i];
  }
  return m;
}

/// (u ^ v)(w) = <w,u> v - <w,v> u, i.e. v u^t - u v^t.
inline Mat wedge(const Vec7& u, const Vec7& v)
{
  Mat m(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) m(i, j) = v[i] * u[j] - u[i] * v[j];
  return m;
}

/// Z(u, v) = 3 u ^ v - L_{u x v}.
inline Mat Z_op(const Vec7& u, const Vec7& v, const CrossProductTable& t = standard_table())
{
  return 3.0 * wedge(u, v) - L_op(t.cross(u, v), t);
}

/// max_{i,j} || Z(e_i x e_j) - Z(e_i) x e_j - e_i x Z(e_j) ||.
inline double derivation_residual(const Mat& z, const CrossProductTable& t = standard_table())
{
  double r = 0.0;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      const Vec7 ei = unit7(i), ej = unit7(j);
      const Vec7 lhs = mat_vec(z, t.cross(ei, ej));
      const Vec7 rhs = t.cross(mat_vec(z, ei), ej) + t.cross(ei, mat_vec(z, ej));
      r = std::max(r, distance(lhs, rhs));
    }
  return r;
}

struct LLBracketReport
{
  Mat bracket;
  /// || [L_u, L_v] - (3 u ^ v - 2 L_{u x v}) ||
  double commutator_residual = 0.0;
  /// || [L_u, L_v] + L_{u x v} - Z(u, v) ||
  double decomposition_residual = 0.0;
  /// Component in L: -L_{u x v}, stored as the vector -u x v.
  Vec7 l_component{};
  /// Component in g2: Z(u, v).
  Mat g2_component;
};

inline LLBracketReport bracket_LL(const Vec7& u, const Vec7& v, const CrossProductTable& t = standard_table())
{
  LLBracketReport r;
  const Vec7 w = t.cross(u, v);
  r.bracket = screwsr::bracket(L_op(u, t), L_op(v, t));
  r.commutator_residual = distance(r.bracket, 3.0 * wedge(u, v) - 2.0 * L_op(w, t));
  r.g2_component = Z_op(u, v, t);
  r.decomposition_residual = distance(r.bracket + L_op(w, t), r.g2_component);
  r.l_component = -1.0 * w;
  return r;
}

/// Orthonormal basis of g2 (for the trace inner product) obtained by
/// Gram-Schmidt over Z(e_i, e_j), i < j, in lexicographic order.
struct G2Basis
{
  std::vector<Mat> elements;
  /// max derivation residual over the elements.
  double derivation_residual = 0.0;
};

inline G2Basis build_g2_basis(const CrossProductTable& t = standard_table())
{
  G2Basis b;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      Mat z = Z_op(unit7(i), unit7(j), t);
      const double n0 = inner_norm(z);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : b.elements) z -= re_trace_inner(q, z) * q;
      const double n1 = inner_norm(z);
      if (n1 <= 1e-8 * n0) continue;
      b.elements.push_back((1.0 / n1) * z);
    }
  if (b.elements.size() != 14)
    throw NumericError("build_g2_basis: found " + std::to_string(b.elements.size()) +
                       " independent derivations instead of 14; the cross-product table is inconsistent");
  for (const auto& e : b.elements) b.derivation_residual = std::max(b.derivation_residual, derivation_residual(e, t));
  return b;
}

inline const G2Basis& standard_g2_basis()
{
  static const G2Basis b = build_g2_basis();
  return b;
}

struct O7Split
{
  Vec7 y{};
  Mat g2_part;
  /// Derivation residual of g2_part.
  double derivation_residual = 0.0;
};

/// Unique decomposition W = L_y + g2_part of an antisymmetric 7 x 7 matrix.
inline O7Split split_o7(const Mat& w, const G2Basis& g2 = standard_g2_basis(),
                        const CrossProductTable& t = standard_table())
{
  if (w.rows() != 7 || w.cols() != 7) throw DimensionError("split_o7: expected 7x7, got " + w.shape_string());
  if (anti_hermitian_residual(w) > kDefaultTolerances.equality * std::max(1.0, frobenius_norm(w)))
    throw DomainError("split_o7: input is not antisymmetric");
  std::vector<Mat> basis;
  for (std::size_t s = 0; s < 7; ++s) basis.push_back(L_op(unit7(s), t));
  for (const auto& e : g2.elements) basis.push_back(e);
  const std::size_t m = basis.size();
  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = re_trace_inner(basis[i], w);
  const auto coef = solve_real(gram_matrix(basis), rhs);
  O7Split s;
  for (std::size_t i = 0; i < 7; ++i) s.y[i] = coef[i];
  s.g2_part = w - L_op(s.y, t);
  s.derivation_residual = derivation_residual(s.g2_part, t);
  return s;
}

// ---------------------------------------------------------------------------
// R^7 x| o(7) and R^7 x| SO(7).

/// (a, A): translation part a, rotation part A (antisymmetric in the algebra,
/// orthogonal in the group).
struct MotionElement
{
  Vec7 a{};
  Mat A = Mat(7, 7);
};

inline MotionElement operator+(const MotionElement& p, const MotionElement& q) { return {p.a + q.a, p.A + q.A}; }
inline MotionElement operator-(const MotionElement& p, const MotionElement& q) { return {p.a - q.a, p.A - q.A}; }
inline MotionElement operator*(double s, const MotionElement& p) { return {s * p.a, s * p.A}; }

inline double norm(const MotionElement& p)
{
  const double na = norm(p.a), nA = frobenius_norm(p.A);
  return std::sqrt(na * na + nA * nA);
}

/// [(a, A), (b, B)] = (A b - B a, [A, B]).
inline MotionElement motion_bracket(const MotionElement& p, const MotionElement& q)
{
  return {mat_vec(p.A, q.a) - mat_vec(q.A, p.a), bracket(p.A, q.A)};
}

/// Affine 8 x 8 image [[A, a], [0, 0]] (algebra) or [[A, a], [0, 1]] (group).
inline Mat to_affine(const MotionElement& p, bool group = false)
{
  Mat m(8, 8);
  m.set_block(0, 0, p.A);
  for (std::size_t i = 0; i < 7; ++i) m(i, 7) = p.a[i];
  if (group) m(7, 7) = 1.0;
  return m;
}

inline MotionElement from_affine(const Mat& m)
{
  if (m.rows() != 8 || m.cols() != 8) throw DimensionError("from_affine: expected 8x8, got " + m.shape_string());
  MotionElement p;
  p.A = m.block(0, 0, 7, 7);
  for (std::size_t i = 0; i < 7; ++i) p.a[i] = m(i, 7).w;
  return p;
}

/// Horizontal generator (x, lambda L_x).
inline MotionElement octo_lift(const Vec7& x, double lambda, const CrossProductTable& t = standard_table())
{
  return {x, lambda * L_op(x, t)};
}

/// || A - lambda L_a ||: distance of (a, A) from the distribution.
inline double octo_horizontality_residual(const MotionElement& p, double lambda,
                                          const CrossProductTable& t = standard_table())
{
  return distance(p.A, lambda * L_op(p.a, t));
}

/// Flattened (a, A) as a 56-vector.
inline std::vector<double> flatten(const MotionElement& p)
{
  std::vector<double> v(p.a.begin(), p.a.end());
  for (const auto& q : p.A.data()) v.push_back(q.w);
  return v;
}

inline double flat_dot(const std::vector<double>& u, const std::vector<double>& v)
{
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline int motion_rank(const std::vector<MotionElement>& vs, double rel_tol = kDefaultTolerances.rank_relative)
{
  std::vector<Mat> m;
  for (const auto& v : vs) m.push_back(to_affine(v));
  return numeric_rank(m, rel_tol);
}

/// Basis candidates {(e_s, lambda L_{e_s})} and {(2 e_i x e_j, lambda [L_{e_i}, L_{e_j}])}.
inline std::vector<MotionElement> octo_spanning_set(double lambda, const CrossProductTable& t = standard_table())
{
  std::vector<MotionElement> out;
  for (std::size_t s = 0; s < 7; ++s) out.push_back(octo_lift(unit7(s), lambda, t));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      out.push_back({2.0 * t.cross(unit7(i), unit7(j)), lambda * bracket(L_op(unit7(i), t), L_op(unit7(j), t))});
  return out;
}

struct OctoControllabilityReport
{
  ControllabilityReport report;
  /// Rank of the distribution plus its actual brackets (2 lambda e_i x e_j, lambda^2 [L, L]).
  int bracket_rank = 0;
};

inline OctoControllabilityReport octo_controllability(double lambda, const CrossProductTable& t = standard_table(),
                                                      double rel_tol = kDefaultTolerances.rank_relative)
{
  OctoControllabilityReport o;
  auto& r = o.report;
  r.system = "R7 x| SO(7) lambda=" + ScrewSystem::format_double(lambda);
  r.dim_g = 28;
  std::vector<Mat> m;
  for (const auto& v : octo_spanning_set(lambda, t)) m.push_back(to_affine(v));
  r.spectrum = span_spectrum(m, rel_tol);
  r.dim_span = r.spectrum.rank;
  r.predicted = lambda != 0.0;
  r.observed = r.dim_span == r.dim_g;

  std::vector<MotionElement> lifts, all;
  for (std::size_t s = 0; s < 7; ++s) lifts.push_back(octo_lift(unit7(s), lambda, t));
  all = lifts;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) all.push_back(motion_bracket(lifts[i], lifts[j]));
  o.bracket_rank = motion_rank(all, rel_tol);
  return o;
}

// ---------------------------------------------------------------------------
// Geodesics gamma(t) = exp(t(x, lambda L_x + Z)) exp(-t(0, Z)), Z = Z(x, y).

struct OctoGeodesicSpec
{
  Vec7 x{};
  Vec7 y{};
  double lambda = 1.0;

  void validate() const
  {
    if (lambda == 0.0 || !std::isfinite(lambda)) throw DomainError("octonionic geodesic: lambda must be nonzero");
    if (std::abs(dot(x, y)) > 1e-12 * std::max(1.0, norm(x) * norm(y)))
      throw DomainError("octonionic geodesic: x and y must be orthogonal");
  }

  MotionElement generator(const CrossProductTable& t = standard_table()) const
  {
    return {x, lambda * L_op(x, t) + Z_op(x, y, t)};
  }

  MotionElement vertical(const CrossProductTable& t = standard_table()) const { return {Vec7{}, Z_op(x, y, t)}; }
};

/// Group element as an 8 x 8 affine matrix.
inline Mat octo_geodesic(const OctoGeodesicSpec& spec, double t, const CrossProductTable& tab = standard_table())
{
  spec.validate();
  return mat_exp(t * to_affine(spec.generator(tab))) * mat_exp(-t * to_affine(spec.vertical(tab)));
}

/// gamma(t)^{-1} gamma'(t) by the product rule.
inline MotionElement octo_left_log_derivative(const OctoGeodesicSpec& spec, double t,
                                              const CrossProductTable& tab = standard_table())
{
  spec.validate();
  const Mat a = to_affine(spec.generator(tab)), b = to_affine(spec.vertical(tab));
  const Mat ea = mat_exp(t * a), ema = mat_exp(-t * a), eb = mat_exp(t * b), emb = mat_exp(-t * b);
  const Mat d = ea * a * emb - ea * emb * b;
  return from_affine(eb * ema * d);
}

/// Residual of an 8 x 8 matrix against the affine image of R^7 x| SO(7).
inline double octo_group_residual(const Mat& g)
{
  double r = std::abs(g(7, 7).w - 1.0);
  for (std::size_t j = 0; j < 7; ++j) r = std::hypot(r, g(7, j).abs());
  return std::hypot(r, unitarity_residual(g.block(0, 0, 7, 7)));
}

/// Seeded spec: x a unit vector, y orthogonal to x with norm n in [0.5, 1.5).
inline OctoGeodesicSpec random_octo_spec(std::uint64_t seed, double lambda)
{
  Rng rng(seed);
  Vec7 x{}, y{};
  for (auto& c : x) c = rng.uniform(-1, 1);
  for (auto& c : y) c = rng.uniform(-1, 1);
  x = (1.0 / norm(x)) * x;
  y = y - dot(x, y) * x;
  const double n = rng.uniform(0.5, 1.5);
  y = (n / norm(y)) * y;
  y = y - dot(x, y) * x;
  return {x, y, lambda};
}

/// max over the grid of || gamma_{a x, b y}(t) - gamma_{x, y}(c t) ||.
inline double octo_scaling_residual(const OctoGeodesicSpec& spec, double x_scale, double y_scale, double c,
                                    const std::vector<double>& times, const CrossProductTable& tab = standard_table())
{
  const OctoGeodesicSpec scaled{x_scale * spec.x, y_scale * spec.y, spec.lambda};
  double r = 0.0;
  for (double t : times) r = std::max(r, distance(octo_geodesic(scaled, t, tab), octo_geodesic(spec, c * t, tab)));
  return r;
}

// ---------------------------------------------------------------------------
// Momentum certificate.

struct MomentumCertificate
{
  double c = 0.0;
  double d = 0.0;
  double n = 0.0;
  /// || b(alpha) - (X - Z) ||
  double cometric_residual = 0.0;
  /// max |alpha([X, X'])| over a basis X' of the algebra.
  double ad_x_residual = 0.0;
  /// max |alpha(0, [Z, W])| over W in a g2 basis.
  double ad_z_residual = 0.0;
  /// max |alpha(0, W)| over W in a g2 basis.
  double g2_annihilation = 0.0;
  /// | alpha(b(alpha)) / 2 - ||x||^2 / 2 |
  double hamiltonian_residual = 0.0;
  /// Orthonormality defect of the adapted frame.
  double frame_residual = 0.0;

  double max_residual() const
  {
    return std::max({cometric_residual, ad_x_residual, ad_z_residual, g2_annihilation, hamiltonian_residual});
  }
};

/// Orthonormal frame x_1 = x, x_2 = y / n, x_3 = x_1 x x_2 (or just x_1 when
/// y = 0), completed by Gram-Schmidt over e_1..e_7 in order.
inline std::vector<Vec7> adapted_frame(const Vec7& x, const Vec7& y, const CrossProductTable& t = standard_table())
{
  std::vector<Vec7> cand{x};
  const double n = norm(y);
  if (n > 0.0) {
    cand.push_back((1.0 / n) * y);
    cand.push_back(t.cross(cand[0], cand[1]));
  }
  for (std::size_t i = 0; i < 7; ++i) cand.push_back(unit7(i));
  std::vector<Vec7> frame;
  for (const auto& v0 : cand) {
    Vec7 v = v0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : frame) v = v - dot(q, v) * q;
    const double nv = norm(v);
    if (nv > 1e-8 * norm(v0)) frame.push_back((1.0 / nv) * v);
    if (frame.size() == 7) break;
  }
  return frame;
}

/// Certificate for the covector alpha = delta_1 + c nu_1 + d nu_3 dual to the
/// adapted basis, with explicit coefficients.
inline MomentumCertificate certify_octo_momentum_with(const Vec7& x, const Vec7& y, double lambda, double c, double d,
                                                      const CrossProductTable& tab = standard_table(),
                                                      const G2Basis& g2 = standard_g2_basis())
{
  const OctoGeodesicSpec spec{x, y, lambda};
  spec.validate();
  if (std::abs(norm(x) - 1.0) > 1e-12) throw DomainError("certify_octo_momentum: x must be a unit vector");

  MomentumCertificate m;
  m.n = norm(y);
  const bool has_y = m.n > 0.0;
  m.c = has_y ? c : 0.0;
  m.d = has_y ? d : 0.0;

  const auto frame = adapted_frame(x, y, tab);
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.size(); ++j)
      m.frame_residual = std::max(m.frame_residual, std::abs(dot(frame[i], frame[j]) - (i == j ? 1.0 : 0.0)));

  // Basis B: (x_i, lambda L_{x_i}), (0, L_{x_i}), (0, g2 basis).
  std::vector<MotionElement> basis;
  for (const auto& f : frame) basis.push_back(octo_lift(f, lambda, tab));
  for (const auto& f : frame) basis.push_back({Vec7{}, L_op(f, tab)});
  for (const auto& w : g2.elements) basis.push_back({Vec7{}, w});
  const std::size_t dim = basis.size();
  if (dim != 28) throw NumericError("certify_octo_momentum: adapted basis has " + std::to_string(dim) + " elements");

  // Dual basis functionals as 56-vectors: dual_i = sum_j (G^{-1})_{ij} B_j.
  std::vector<std::vector<double>> flat;
  for (const auto& e : basis) flat.push_back(flatten(e));
  std::vector<double> gram(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) gram[i * dim + j] = flat_dot(flat[i], flat[j]);
  auto dual = [&](std::size_t i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    const auto g = solve_real(gram, e);
    std::vector<double> v(flat[0].size(), 0.0);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += g[j] * flat[j][k];
    return v;
  };
  std::vector<double> alpha = dual(0);
  if (has_y) {
    const auto nu1 = dual(7), nu3 = dual(9);
    for (std::size_t k = 0; k < alpha.size(); ++k) alpha[k] += m.c * nu1[k] + m.d * nu3[k];
  }
  auto eval = [&](const MotionElement& v) { return flat_dot(alpha, flatten(v)); };

  // b(alpha) = sum_i alpha(B_i) b(beta_i) with b(delta_i) = B_i and b(nu) = b(zeta) = 0.
  MotionElement b_alpha;
  for (std::size_t i = 0; i < 7; ++i) b_alpha = b_alpha + eval(basis[i]) * basis[i];
  const MotionElement X = spec.generator(tab), Z = spec.vertical(tab);
  m.cometric_residual = norm(b_alpha - (X - Z));
  for (const auto& e : basis) m.ad_x_residual = std::max(m.ad_x_residual, std::abs(eval(motion_bracket(X, e))));
  for (const auto& w : g2.elements) {
    m.ad_z_residual = std::max(m.ad_z_residual, std::abs(eval({Vec7{}, bracket(Z.A, w)})));
    m.g2_annihilation = std::max(m.g2_annihilation, std::abs(eval({Vec7{}, w})));
  }
  m.hamiltonian_residual = std::abs(0.5 * eval(b_alpha) - 0.5 * dot(x, x));
  return m;
}

/// Certificate with c = 2 / (3 lambda), d = -2 n / (3 lambda^2), n = ||y||;
/// for y = 0 the momentum is delta_1.
inline MomentumCertificate certify_octo_momentum(const Vec7& x, const Vec7& y, double lambda,
                                                 const CrossProductTable& tab = standard_table(),
                                                 const G2Basis& g2 = standard_g2_basis())
{
  const double n = norm(y);
  return certify_octo_momentum_with(x, y, lambda, 2.0 / (3.0 * lambda), -2.0 * n / (3.0 * lambda * lambda), tab, g2);
}

}  // namespace screwsr
