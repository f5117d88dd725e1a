#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "screwsr/compact_groups.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/screw_core.hpp"
#include "screwsr/space_form.hpp"

namespace screwsr {

/// Pitch values used by the controllability sweeps; they hit lambda^2 = k for
/// every k.
inline const std::vector<double>& default_lambda_grid()
{
  static const std::vector<double> grid{-2, -1, -0.75, -0.5, 0, 0.5, 0.75, 1, 2};
  return grid;
}

/// Spectrum summary of a spanning set: rank and the gap around the cutoff.
struct SpanSpectrum
{
  int rank = 0;
  /// Smallest retained Gram eigenvalue over the largest.
  double smallest_kept = 0.0;
  /// Largest discarded Gram eigenvalue over the largest (0 if none).
  double largest_dropped = 0.0;
};

inline SpanSpectrum span_spectrum(const std::vector<Mat>& vs, double rel_tol = kDefaultTolerances.rank_relative)
{
  SpanSpectrum s;
  if (vs.empty()) return s;
  const auto ev = symmetric_eigenvalues(gram_matrix(vs), vs.size());
  const double top = std::max(ev.back(), 0.0);
  if (top == 0.0) return s;
  s.smallest_kept = 1.0;
  for (double e : ev) {
    const double r = e / top;
    if (r > rel_tol) {
      ++s.rank;
      s.smallest_kept = std::min(s.smallest_kept, r);
    } else {
      s.largest_dropped = std::max(s.largest_dropped, r);
    }
  }
  return s;
}

struct ControllabilityReport
{
  std::string system;
  int dim_g = 0;
  /// rank of E + [E, E].
  int dim_span = 0;
  /// Closed-form prediction: false exactly for (k = 1, lambda = +-1) and
  /// (k = 0, lambda = 0).
  bool predicted = true;
  /// dim_span == dim_g.
  bool observed = true;
  SpanSpectrum spectrum;

  bool consistent() const { return predicted == observed; }
};

/// Prediction for (K, k, lambda): controllable unless lambda^2 = k with k in
/// {0, 1} (for k = -1 the equation has no real solution).
inline bool predicted_controllable(int k, double lambda, double tol = kDefaultTolerances.equality)
{
  return std::abs(lambda * lambda - static_cast<double>(k)) > tol;
}

/// Horizontal lifts of an orthonormal basis plus all their pairwise brackets,
/// as block reps.
inline std::vector<Mat> bracket_generating_set(const ScrewSystem& sys)
{
  sys.validate();
  const AlgebraBasis basis = algebra_basis(sys.group);
  std::vector<KkElement> lifts;
  for (const auto& b : basis.elements) lifts.push_back(horizontal_lift(b, sys));
  std::vector<Mat> out;
  for (const auto& e : lifts) out.push_back(to_block(e));
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j) out.push_back(to_block(kk_bracket(lifts[i], lifts[j])));
  return out;
}

inline ControllabilityReport bracket_generating_rank(const ScrewSystem& sys,
                                                     double rel_tol = kDefaultTolerances.rank_relative)
{
  ControllabilityReport r;
  r.system = sys.describe();
  r.dim_g = sys.dim();
  r.spectrum = span_spectrum(bracket_generating_set(sys), rel_tol);
  r.dim_span = r.spectrum.rank;
  r.predicted = predicted_controllable(sys.k, sys.lambda);
  r.observed = r.dim_span == r.dim_g;
  return r;
}

struct SpaceFormReport
{
  int kappa = 0;
  double lambda = 0.0;
  /// Rank computed in the 4 x 4 model; the source of truth.
  ControllabilityReport report;
  /// Rank of the same system computed in the k_k model over o(3) with k = kappa.
  int kk_model_dim_span = 0;
  /// kappa^2 != lambda, the alternative closed-form condition.
  bool alternative_predicate = true;
  /// lambda^2 != kappa, the general criterion specialized to o(3).
  bool general_predicate = true;

  bool predicates_disagree() const { return alternative_predicate != general_predicate; }
};

inline SpaceFormReport space_form_report(int kappa, double lambda, double rel_tol = kDefaultTolerances.rank_relative)
{
  require_kappa(kappa);
  SpaceFormReport s;
  s.kappa = kappa;
  s.lambda = lambda;
  s.alternative_predicate = alternative_space_form_condition(kappa, lambda);
  s.general_predicate = space_form_condition(kappa, lambda);

  std::vector<Mat> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec3 e{0, 0, 0};
    e[i] = 1.0;
    gens.push_back(screw_generator(kappa, lambda, e));
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) gens.push_back(bracket(gens[i], gens[j]));

  auto& r = s.report;
  r.system = "space form kappa=" + std::to_string(kappa) + " lambda=" + ScrewSystem::format_double(lambda);
  r.dim_g = 6;
  r.spectrum = span_spectrum(gens, rel_tol);
  r.dim_span = r.spectrum.rank;
  r.predicted = s.general_predicate;
  r.observed = r.dim_span == r.dim_g;
  s.kk_model_dim_span = bracket_generating_rank({{Family::SO, 3}, kappa, lambda}, rel_tol).dim_span;
  return s;
}

}  // namespace screwsr
