#pragma once

// Empirical constants for the O(sqrt n) error terms. None of these come with a
// proof; they are chosen test bands, shared by the verify harness and the
// test suites so both check the same thing.

namespace floorlat::tolerances {

/// |D(n) - (n log n + (2 gamma - 1) n)| <= kDirichlet * sqrt(n)
inline constexpr double kDirichlet = 4.0;

/// |C(n) - pi n| <= kGauss * sqrt(n)
inline constexpr double kGauss = 12.0;

/// |N/n - slope| <= kConvergence / sqrt(n)
inline constexpr double kConvergence = 10.0;

/// |N(nu1)/n - N(nu2)/n| <= kNuIndependence / sqrt(n)
inline constexpr double kNuIndependence = 2.0;

/// |B_n| / sqrt(n) <= kResidual
inline constexpr double kResidual = 10.0;

/// |F_n/n - log 2| and friends <= kSequenceLimit / sqrt(n)
inline constexpr double kSequenceLimit = 10.0;

/// Series vs quadrature evaluation of the same density.
inline constexpr double kMethodAgreement = 1e-8;

/// Sum over r of slope(alpha, r, m).
inline constexpr double kRowSum = 1e-9;

/// Published six-decimal tables.
inline constexpr double kSixDecimals = 5e-7;

}  // namespace floorlat::tolerances
