#pragma once

// Default numerical tolerances. Dyadic-rational tables (Chebyshev) are exact;
// general recurrences accumulate rounding, hence the looser associativity and
// moment bounds. All of these are overridable at call sites and scaled by
// HYPERMOMENT_TOL_SCALE in the CLI.

namespace hypermoment::tol {

inline constexpr double kMass = 1e-12;
inline constexpr double kNonnegativity = 1e-12;
inline constexpr double kAssociativity = 1e-10;
inline constexpr double kIdentityRow = 1e-12;

// build_hypergroup clamps weights in [-kWeightClamp, 0) to 0 and rejects
// anything more negative as inadmissible.
inline constexpr double kWeightClamp = 1e-13;

inline constexpr double kExponential = 1e-9;
inline constexpr double kSine = 1e-9;
inline constexpr double kMoment = 1e-8;

// Least-squares span fits (translation matrix, alpha estimation).
inline constexpr double kSpanFit = 1e-8;
// Linear-independence floor: smallest/largest singular value of a basis
// sample matrix.
inline constexpr double kRankRatio = 1e-10;
// Null-space threshold for the sine-constraint system (relative to sigma_max),
// with an ambiguity guard band of two decades on each side.
inline constexpr double kNullspaceGap = 1e-8;
inline constexpr double kNullspaceBand = 1e2;

inline constexpr double kTriangularity = 1e-9;
inline constexpr double kIdentitySlice = 1e-12;
inline constexpr double kAlphaFloor = 1e-7;
// |s(y)| cutoff (relative to max|s|) below which points are excluded from
// the alpha least-squares fit.
inline constexpr double kSineSupport = 1e-12;
inline constexpr double kDegreeReduction = 1e-8;

inline constexpr double kSlResidual = 1e-5;
inline constexpr double kSlProportionality = 1e-8;

}  // namespace hypermoment::tol
