#pragma once

namespace screwsr {

/// Numerical thresholds shared by every check in the library. Call sites take
/// a `Tolerances` value instead of literal constants so the CLI can override
/// them in one place.
struct Tolerances
{
  /// Default bound for "these two quantities are equal".
  double equality = 1e-9;
  /// Relative eigenvalue cut-off of Gram matrices in `numeric_rank`.
  double rank_relative = 1e-8;
  /// Eigenvalue real parts closer than this to zero are "on the boundary".
  double spectral_boundary = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace screwsr
