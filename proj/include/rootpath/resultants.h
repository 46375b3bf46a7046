/**
 * @file resultants.h
 * @brief Sylvester matrices, determinants, resultants and the discriminant.
 *
 * Row layout of Syl_{d,e}(f, g) for f = a_0 + ... + a_d x^d and
 * g = b_0 + ... + b_e x^e: rows 0..e-1 hold (a_0, ..., a_d) shifted right by
 * the row index, rows e..e+d-1 hold (b_0, ..., b_e) shifted the same way.
 */
#ifndef ROOTPATH_RESULTANTS_H
#define ROOTPATH_RESULTANTS_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rootpath/complex_poly.h"

namespace rootpath {

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Format (d, e) of a Sylvester matrix.
struct SylvesterFormat {
  int d = 1;
  int e = 1;
};

struct SylvesterMatrix {
  ComplexMatrix entries;
  SylvesterFormat format;
};

/// Builds Syl_{d,e}(f, g). f may have fewer than d+1 coefficients (it is
/// zero padded); any coefficient beyond index d must be exactly zero. Same
/// for g and e. Throws InvalidInput if d or e is below 1.
SylvesterMatrix sylvester(const Polynomial& f, const Polynomial& g, SylvesterFormat format);

/// Determinant by Gaussian elimination with partial pivoting on modulus.
/// Singular input yields 0 (or a value at round-off level).
Complex determinant(const ComplexMatrix& m);
inline Complex determinant(const SylvesterMatrix& s) { return determinant(s.entries); }

/// det Syl_{d,e}(f, g). A format with one zero entry is the empty-block
/// case: Res_{d,0}(f, g) = g_0^d and Res_{0,e}(f, g) = f_0^e.
Complex resultant(const Polynomial& f, const Polynomial& g, SylvesterFormat format);

/// Relative threshold on |lead * Delta| defining membership in the singular set.
inline constexpr double kSingularityThreshold = 1e-9;

struct DiscriminantValue {
  Complex delta;
  /// |lead * delta| <= singularity_threshold(p), or the lead is negligible.
  bool sigma_member = false;
};

/// 1e-9 * max(1, max|c_i|^{2d-1}).
double singularity_threshold(const Polynomial& p);

/// Delta_d of a polynomial of formal degree d >= 1, with
/// Res_{d,d-1}(p, p') = lead * Delta_d. The lead is factored out of the last
/// Sylvester column before taking the determinant, so no division occurs and
/// the value stays meaningful when the lead is zero. Degree 1 gives Delta = 1.
/// Throws InvalidInput for degree 0.
DiscriminantValue discriminant(const Polynomial& p);

/// Checks [alpha, beta] * Syl_{d,e}(f,g) against the coefficients of
/// alpha(x) f(x) + beta(x) g(x) computed by polynomial arithmetic.
/// alpha must have e entries, beta d entries; otherwise InvalidInput.
/// Returns true iff the two coefficient vectors agree within 1e-10 relative.
bool combination_identity_check(const Polynomial& f, const Polynomial& g, SylvesterFormat format,
                                std::span<const Complex> alpha, std::span<const Complex> beta);

/// Row vector times matrix.
std::vector<Complex> row_times(std::span<const Complex> row, const ComplexMatrix& m);

/// Threshold factor for "resultant vanishes": |Res| <= kResultantThreshold * ||f||_2 ||g||_2.
inline constexpr double kResultantThreshold = 1e-6;

/// If the resultant vanishes numerically, returns a shared root found by
/// solving f and picking the root that minimises |g|. Returns nullopt when
/// the resultant is clearly nonzero. Throws Error when the resultant is small
/// but no root of f brings |g| under 1e-6 * (1 + max|g_i|).
/// Both leading coefficients (at formal degrees d and e) must be nonzero.
std::optional<Complex> common_root_certificate(const Polynomial& f, const Polynomial& g,
                                               SylvesterFormat format);

}  // namespace rootpath

#endif  // ROOTPATH_RESULTANTS_H
