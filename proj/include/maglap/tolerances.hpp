#pragma once

namespace maglap {

// Relative threshold below which polynomial coefficients are dropped.
inline constexpr double kZeroThreshold = 1e-13;

// Absolute per-component tolerance when comparing envelopes.
inline constexpr double kEnvelopeTol = 1e-12;

// Relative tolerance for operator and polynomial equality checks.
inline constexpr double kEqualityTol = 1e-12;

// Relative tolerance when independent computation routes must agree.
inline constexpr double kRouteTol = 1e-10;

// Relative truncation target for confluent hypergeometric series.
inline constexpr double kSeriesTol = 1e-16;

// Iteration budget for series evaluation.
inline constexpr int kSeriesMaxTerms = 500;

// Deviation of A*A from the identity accepted as unitary.
inline constexpr double kUnitaryTol = 1e-12;

// Default start of the asymptotic regime for hyp1f1_asymptotic.
inline constexpr double kAsymptoticXMin = 30.0;

// Floating point cancellation scale for inner product error estimates.
inline constexpr double kErrorEstimateFactor = 1e-15;

// Coefficient tolerance for eigenprojection identities.
inline constexpr double kProjectionTol = 1e-8;

// Relative tolerance against the numeric quadrature oracle.
inline constexpr double kQuadratureTol = 1e-8;

// Relative tolerance for finite difference derivative checks.
inline constexpr double kFiniteDiffTol = 1e-6;

// Relative agreement between series and asymptotic evaluation.
inline constexpr double kAsymptoticRelTol = 0.05;

}  // namespace maglap
