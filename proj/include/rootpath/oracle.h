/**
 * @file oracle.h
 * @brief Brute-force ground truth for tests: permutation-expansion
 *        determinants, an exhaustive grid root scan, and random polynomials
 *        with known roots.
 *
 * Nothing here calls the resultant or homotopy code paths it is used to check.
 */
#ifndef ROOTPATH_ORACLE_H
#define ROOTPATH_ORACLE_H

#include <string>
#include <vector>

#include "rootpath/complex_poly.h"
#include "rootpath/homotopy.h"
#include "rootpath/resultants.h"

namespace rootpath::oracle {

/// Laplace expansion along the first row, O(n!). Throws InvalidInput for
/// n > 8 or a non-square matrix.
Complex brute_determinant(const ComplexMatrix& m);

/// Samples |f| on a resolution x resolution grid over the square of half
/// width radius, Newton-polishes every local minimum and keeps the distinct
/// results with |f(z)| <= 1e-8. Needs resolution >= 64.
std::vector<Complex> grid_root_scan(const Polynomial& f, double radius, int resolution = 128);

struct OracleCase {
  Polynomial polynomial;
  std::vector<RootWithMultiplicity> true_roots;
  /// polynomial == from_roots(true_roots, lead).
  Complex lead{1.0, 0.0};
  std::string note;
};

/// Distinct roots drawn uniformly in the disk of radius 2 with pairwise
/// separation >= 0.3, lead of modulus in [0.5, 2] with random phase.
/// profile lists the multiplicity of each distinct root and must sum to
/// degree; an empty profile means all roots simple. Throws Error when the
/// separation cannot be met after many retries.
OracleCase random_case(Rng& rng, int degree, std::vector<int> profile = {});

/// count points uniform in the disk of the given radius, pairwise at least
/// separation apart. Restarts the draw when it gets stuck.
std::vector<Complex> random_separated_points(Rng& rng, int count, double radius,
                                             double separation);

/// Minimum over bijections of the maximum distance between two equally sized
/// multisets (bottleneck assignment). Infinity when the sizes differ.
double matching_distance(std::vector<Complex> a, std::vector<Complex> b);

}  // namespace rootpath::oracle

#endif  // ROOTPATH_ORACLE_H
