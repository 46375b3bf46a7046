/**
 * @file complex_poly.h
 * @brief Dense univariate polynomials over double-precision complex numbers.
 *
 * Coefficients are stored in ascending order: index i holds the coefficient
 * of x^i. A polynomial of formal degree d is therefore identified with the
 * point (c_0, ..., c_d) of C^{d+1}. The formal degree is the length of the
 * coefficient vector minus one; leading zeros are only removed by trimmed().
 */
#ifndef ROOTPATH_COMPLEX_POLY_H
#define ROOTPATH_COMPLEX_POLY_H

#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace rootpath {

using Complex = std::complex<double>;

/// True when both components are finite.
inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Relative threshold below which a leading coefficient counts as zero.
inline constexpr double kTrimThreshold = 1e-12;

/// Relative threshold on the remainder of each synthetic division in deflate().
inline constexpr double kDeflationThreshold = 1e-6;

class Polynomial {
 public:
  /// The zero polynomial of formal degree 0.
  Polynomial() : coeffs_{Complex{}} {}

  /// Throws InvalidInput on an empty vector or a non-finite coefficient.
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs)
      : Polynomial(std::vector<Complex>(coeffs)) {}

  /// Real coefficients, ascending.
  static Polynomial from_real(std::span<const double> coeffs);

  /// c * x^k.
  static Polynomial monomial(Complex c, int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](int i) const { return coeffs_.at(i); }
  Complex leading() const noexcept { return coeffs_.back(); }

  /// max_i |c_i|.
  double max_abs() const noexcept;
  /// Euclidean norm of the coefficient vector.
  double norm2() const noexcept;

  /// Drops leading coefficients whose modulus is at most
  /// kTrimThreshold * max_abs(). The zero polynomial trims to degree 0.
  Polynomial trimmed() const;

  /// Leading coefficient is negligible relative to the others.
  bool leading_negligible() const noexcept;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
  friend Polynomial operator*(Complex s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation. Throws InvalidInput if z is not finite.
Complex eval(const Polynomial& p, Complex z);

/// Value and first derivative in one Horner pass.
std::pair<Complex, Complex> eval_with_derivative(const Polynomial& p, Complex z);

/// Coefficient i-1 of the result is i*c_i. A constant maps to the zero
/// polynomial of degree 0.
Polynomial derivative(const Polynomial& p);

/// k-th derivative (k >= 0).
Polynomial derivative(const Polynomial& p, int k);

/// Taylor coefficients at z: entry k is p^{(k)}(z)/k!, k = 0..degree.
/// Computed by repeated synthetic division, so no factorials appear.
std::vector<Complex> taylor_coefficients(const Polynomial& p, Complex z);

/// Divides out (x - rho)^mu by mu rounds of synthetic division. Each round's
/// remainder must satisfy |r| <= kDeflationThreshold * (1 + max|coeff|) of the
/// current dividend, otherwise DeflationError is thrown.
Polynomial deflate(const Polynomial& p, Complex rho, int mu);

struct RootWithMultiplicity {
  Complex value;
  int multiplicity = 1;
};

/// lead * prod_k (x - root_k)^{mult_k}.
Polynomial from_roots(std::span<const RootWithMultiplicity> roots,
                      Complex lead = Complex{1.0, 0.0});

}  // namespace rootpath

#endif  // ROOTPATH_COMPLEX_POLY_H
