#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "screwsr/compact_groups.hpp"
#include "screwsr/errors.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/screw_core.hpp"
#include "screwsr/space_form.hpp"

namespace screwsr {

/// Geodesic gamma(t) = exp(t(X + lambda L_X + L_Y)) exp(-t L_Y) of the
/// screw system; in k_k coordinates the generators are A = (X, lambda X + Y)
/// and B = (0, Y).
struct GeodesicSpec
{
  ScrewSystem sys;
  Mat X;
  Mat Y;

  void validate() const
  {
    sys.validate();
    const auto n = static_cast<std::size_t>(sys.group.n);
    for (const Mat* m : {&X, &Y}) {
      if (m->rows() != n || m->cols() != n || m->field() != sys.group.field())
        throw DimensionError("GeodesicSpec: generator is not in the algebra of " + sys.group.name());
      if (anti_hermitian_residual(*m) > kDefaultTolerances.equality * std::max(1.0, frobenius_norm(*m)))
        throw DomainError("GeodesicSpec: generator is not anti-Hermitian");
    }
    if (sys.on_degenerate_locus()) throw DomainError("GeodesicSpec: requires lambda^2 != k");
  }

  KkElement generator() const { return {X, sys.lambda * X + Y, sys.k}; }
  KkElement vertical() const { return {Mat(X.rows(), X.cols(), X.field()), Y, sys.k}; }
  /// X + lambda L_X = A - B, the initial velocity.
  KkElement horizontal() const { return horizontal_lift(X, sys); }
};

inline Mat geodesic_point(const GeodesicSpec& spec, double t)
{
  spec.validate();
  return mat_exp(t * to_block(spec.generator())) * mat_exp(-t * to_block(spec.vertical()));
}

/// exp(t(X + lambda L_X)), the one-parameter subgroup with the same initial
/// velocity.
inline Mat one_parameter_point(const GeodesicSpec& spec, double t)
{
  return mat_exp(t * to_block(spec.horizontal()));
}

namespace detail {

/// gamma^{-1} gamma' from the exponential factors by the product rule:
/// gamma' = e^{tA} A e^{-tB} - e^{tA} e^{-tB} B.
inline CMat left_log_from_factors(const CMat& ea, const CMat& ema, const CMat& eb, const CMat& emb, const CMat& a,
                                  const CMat& b)
{
  const CMat gamma = ea * emb;
  const CMat dgamma = (ea * a) * emb - gamma * b;
  return (eb * ema) * dgamma;
}

inline KkElement kk_from_complex(const CMat& c, const GeodesicSpec& spec)
{
  return from_block(unembed_complex(c, spec.sys.group.field()), spec.sys.k);
}

}  // namespace detail

/// gamma(t)^{-1} gamma'(t) via the exact product rule; equals
/// Ad(exp(t L_Y))(X + lambda L_X).
inline KkElement left_log_derivative(const GeodesicSpec& spec, double t)
{
  spec.validate();
  const CMat a = embed_complex(to_block(spec.generator()));
  const CMat b = embed_complex(to_block(spec.vertical()));
  const CMat l = detail::left_log_from_factors(detail::cexp(t * a), detail::cexp(-t * a), detail::cexp(t * b),
                                               detail::cexp(-t * b), a, b);
  return detail::kk_from_complex(l, spec);
}

/// Ad(exp(t L_Y))(X + lambda L_X) = (e^{tY} X e^{-tY}, lambda e^{tY} X e^{-tY}).
inline KkElement left_log_derivative_closed_form(const GeodesicSpec& spec, double t)
{
  const Mat g = mat_exp(t * spec.Y);
  const Mat x = g * spec.X * g.adjoint();
  return {x, spec.sys.lambda * x, spec.sys.k};
}

struct CurveSample
{
  std::vector<double> times;
  /// Block-rep group elements.
  std::vector<Mat> points;
  std::vector<KkElement> left_log_derivatives;
};

/// Walks a uniform grid on [0, t_max], advancing every exponential factor by
/// one step product per sample. The callback receives the sample index, t,
/// the complex images of gamma(t), of gamma^{-1} gamma'(t), of
/// Ad(exp(tB))(A - B) and of exp(t(A - B)).
template <class Fn>
void walk_geodesic(const GeodesicSpec& spec, double t_max, int samples, Fn&& fn)
{
  spec.validate();
  const auto times = uniform_times(t_max, samples);
  const double h = times[1];
  const CMat a = embed_complex(to_block(spec.generator()));
  const CMat b = embed_complex(to_block(spec.vertical()));
  const CMat u = a - b;
  const CMat sa = detail::cexp(h * a), sma = detail::cexp(-h * a), sb = detail::cexp(h * b), su = detail::cexp(h * u);
  const std::size_t n = a.rows;
  CMat ea = CMat::identity(n), ema = ea, eb = ea, eu = ea;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0) {
      ea = ea * sa;
      ema = sma * ema;
      eb = eb * sb;
      eu = eu * su;
    }
    // B is anti-Hermitian, so exp(-tB) = exp(tB)*.
    const CMat emb = adjoint(eb);
    const CMat gamma = ea * emb;
    const CMat left_log = detail::left_log_from_factors(ea, ema, eb, emb, a, b);
    const CMat ad = eb * u * emb;
    fn(i, times[i], gamma, left_log, ad, eu);
  }
}

inline CurveSample sample_geodesic(const GeodesicSpec& spec, double t_max = 5.0, int samples = 101)
{
  CurveSample s;
  const Field f = spec.sys.group.field();
  walk_geodesic(spec, t_max, samples, [&](std::size_t, double t, const CMat& g, const CMat& l, const CMat&, const CMat&) {
    s.times.push_back(t);
    s.points.push_back(unembed_complex(g, f));
    s.left_log_derivatives.push_back(detail::kk_from_complex(l, spec));
  });
  return s;
}

/// Sup-norm certificate of a sampled geodesic.
struct GeodesicCertificate
{
  /// max ||y - lambda x|| / sqrt(1 + lambda^2) of gamma^{-1} gamma'.
  double horizontality = 0.0;
  /// max | ||x-part of gamma^{-1} gamma'|| - ||X|| |.
  double speed_deviation = 0.0;
  /// max distance between the product-rule and Ad-formula left log derivatives.
  double closed_form_residual = 0.0;
  /// max block-rep pattern / model group residual of gamma(t).
  double group_residual = 0.0;
  /// max ||gamma(t) - exp(t(X + lambda L_X))||.
  double subgroup_deviation = 0.0;
  /// ||[X, Y]||.
  double bracket_norm = 0.0;
  int samples = 0;
};

inline GeodesicCertificate certify_geodesic(const GeodesicSpec& spec, double t_max = 5.0, int samples = 101)
{
  GeodesicCertificate c;
  c.samples = samples;
  c.bracket_norm = frobenius_norm(bracket(spec.X, spec.Y));
  const double speed = inner_norm(spec.X);
  const double lambda = spec.sys.lambda;
  const Field f = spec.sys.group.field();
  walk_geodesic(spec, t_max, samples,
                [&](std::size_t, double, const CMat& g, const CMat& l, const CMat& ad, const CMat& eu) {
                  const KkElement v = detail::kk_from_complex(l, spec);
                  c.horizontality = std::max(c.horizontality, horizontality_residual(v, lambda));
                  c.speed_deviation = std::max(c.speed_deviation, std::abs(inner_norm(v.x) - speed));
                  c.closed_form_residual = std::max(c.closed_form_residual, (l - ad).norm());
                  const Mat gm = unembed_complex(g, f);
                  c.group_residual = std::max(c.group_residual, block_group_residual(gm, spec.sys.k));
                  c.subgroup_deviation = std::max(c.subgroup_deviation, (g - eu).norm());
                });
  return c;
}

/// Hypotheses under which the product-of-exponentials curves are the normal
/// geodesics: E = ({0} x k)^perp for h, h positive definite on E, and the
/// generators split as u = X + lambda L_X in E, z = L_Y in {0} x k.
struct GeodesicCriterionReport
{
  bool precondition_ok = false;
  std::string message;
  /// max |h(e, (0, b))| over basis lifts e of E and basis vectors b.
  double orthogonality_residual = 0.0;
  /// Extreme eigenvalues of the h-Gram matrix of the basis lifts.
  double min_gram_eigenvalue = 0.0;
  double max_gram_eigenvalue = 0.0;
  /// min |eig| / max |eig| of g on all of k_k.
  double nondegeneracy_ratio = 0.0;
  double u_residual = 0.0;
  double z_residual = 0.0;

  bool passed(double tol = 1e-10) const
  {
    return precondition_ok && orthogonality_residual <= tol && min_gram_eigenvalue > 1e-8 && u_residual <= tol &&
           z_residual <= tol;
  }
};

inline GeodesicCriterionReport verify_geodesic_criterion(const ScrewSystem& sys, const Mat& X, const Mat& Y)
{
  GeodesicCriterionReport r;
  sys.validate();
  if (sys.on_degenerate_locus()) {
    r.message = "lambda^2 = k: h is undefined and the system is not covered";
    return r;
  }
  r.precondition_ok = true;
  const AlgebraBasis basis = algebra_basis(sys.group);
  const std::size_t m = basis.size();
  const auto n = static_cast<std::size_t>(sys.group.n);
  const Mat zero(n, n, sys.group.field());
  std::vector<KkElement> lifts;
  for (const auto& b : basis.elements) lifts.push_back(horizontal_lift(b, sys));
  std::vector<double> gram(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      r.orthogonality_residual =
          std::max(r.orthogonality_residual, std::abs(h_lambda_k(lifts[i], {zero, basis.elements[j], sys.k}, sys)));
      gram[i * m + j] = h_lambda_k(lifts[i], lifts[j], sys);
    }
  const auto ev = symmetric_eigenvalues(std::move(gram), m);
  r.min_gram_eigenvalue = ev.front();
  r.max_gram_eigenvalue = ev.back();
  r.nondegeneracy_ratio = g_degeneracy_ratio(sys);
  const KkElement u = horizontal_lift(X, sys);
  const KkElement z{zero, Y, sys.k};
  r.u_residual = horizontality_residual(u, sys.lambda);
  r.z_residual = frobenius_norm(z.x);
  r.message = r.passed() ? "all hypotheses hold" : "hypothesis check failed";
  return r;
}

inline GeodesicCriterionReport verify_geodesic_criterion(const GeodesicSpec& spec)
{
  return verify_geodesic_criterion(spec.sys, spec.X, spec.Y);
}

/// Seeded spec with ||X|| = 1 and Y uniform in the coefficient cube.
inline GeodesicSpec random_geodesic_spec(const ScrewSystem& sys, std::uint64_t seed)
{
  Mat x = random_algebra_element(sys.group, 2 * seed + 1);
  x = (1.0 / inner_norm(x)) * x;
  return {sys, x, random_algebra_element(sys.group, 2 * seed + 2)};
}

/// Agreement of the 4 x 4 space-form geodesic with the k_k construction over
/// o(3), transported by the algebra isomorphism Phi = space_form_image.
struct CrossModelResidual
{
  /// max || Phi(gamma_block^{-1} gamma_block') - gamma_4^{-1} gamma_4' ||.
  /// Both sides are conjugates of A - B by a compact factor, so this stays
  /// well conditioned for every kappa.
  double velocity = 0.0;
  /// max || Phi(Ad(gamma_block) e) - Ad(gamma_4) Phi(e) || over a basis e.
  double adjoint_absolute = 0.0;
  /// The same, divided by ||gamma_4|| ||gamma_4^{-1}||, the growth of Ad for
  /// the non-compact kappa = -1 group.
  double adjoint_relative = 0.0;
};

inline CrossModelResidual space_form_cross_model(int kappa, double lambda, const Vec3& x, const Vec3& y,
                                                 double t_max = 5.0, int samples = 101)
{
  const ScrewSystem sys{{Family::SO, 3}, kappa, lambda};
  const GeodesicSpec spec{sys, hat(x), hat(y)};
  const auto basis = kk_basis(sys);
  CrossModelResidual r;
  for (double t : uniform_times(t_max, samples)) {
    const Mat gb = geodesic_point(spec, t);
    const Mat gbi = inverse(gb);
    const Mat g4 = space_form_geodesic(kappa, lambda, x, y, t);
    const Mat g4i = inverse(g4);
    const double cond = frobenius_norm(g4) * frobenius_norm(g4i);
    for (const auto& e : basis) {
      const KkElement moved = from_block(gb * to_block(e) * gbi, kappa);
      const double d = distance(space_form_image(moved), g4 * space_form_image(e) * g4i);
      r.adjoint_absolute = std::max(r.adjoint_absolute, d);
      r.adjoint_relative = std::max(r.adjoint_relative, d / cond);
    }
    const Mat l4 = space_form_left_log_derivative(kappa, lambda, x, y, t);
    r.velocity = std::max(r.velocity, distance(space_form_image(left_log_derivative(spec, t)), l4));
  }
  return r;
}

}  // namespace screwsr
