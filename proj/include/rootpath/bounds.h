/**
 * @file bounds.h
 * @brief Root-modulus bounds used to validate output and stop runaway paths.
 */
#ifndef ROOTPATH_BOUNDS_H
#define ROOTPATH_BOUNDS_H

#include <span>

#include "rootpath/complex_poly.h"

namespace rootpath {

/// Smallest radius reported for a bound, so the disk stays open around 0.
inline constexpr double kMinRadius = 1e-300;

/// Trackers abort an iterate beyond this multiple of the escape radius.
inline constexpr double kEscapeSlack = 4.0;

struct RootBound {
  double radius = 0.0;
};

/// 2 * max_{i<d} |c_i / c_d|^{1/(d-i)} for the trimmed polynomial; every root
/// has modulus strictly below it. Throws InvalidInput when the trimmed degree
/// is 0.
RootBound cauchy_bound(const Polynomial& p);

/// 2 * max over samples and i < d of |phi_i / phi_d|^{1/(d-i)}, where each
/// sample is a coefficient vector of the same formal degree d >= 1.
/// Throws PathConstructionError when a sample has a negligible leading
/// coefficient.
double homotopy_escape_radius(std::span<const Polynomial> samples);

}  // namespace rootpath

#endif  // ROOTPATH_BOUNDS_H
