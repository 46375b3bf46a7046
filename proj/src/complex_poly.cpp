#include "rootpath/complex_poly.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rootpath/errors.h"

namespace rootpath {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw InvalidInput("polynomial needs at least one coefficient");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!is_finite(coeffs_[i])) {
      throw InvalidInput("non-finite coefficient at index " + std::to_string(i));
    }
  }
}

Polynomial Polynomial::from_real(std::span<const double> coeffs) {
  return Polynomial(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

Polynomial Polynomial::monomial(Complex c, int k) {
  if (k < 0) throw InvalidInput("monomial exponent must be nonnegative");
  std::vector<Complex> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

double Polynomial::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::norm2() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

Polynomial Polynomial::trimmed() const {
  const double cut = kTrimThreshold * max_abs();
  std::size_t n = coeffs_.size();
  while (n > 1 && std::abs(coeffs_[n - 1]) <= cut) --n;
  return Polynomial(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + n));
}

bool Polynomial::leading_negligible() const noexcept {
  return std::abs(leading()) <= kTrimThreshold * max_abs();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Complex eval(const Polynomial& p, Complex z) {
  if (!is_finite(z)) throw InvalidInput("non-finite evaluation point");
  const auto c = p.coeffs();
  Complex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

std::pair<Complex, Complex> eval_with_derivative(const Polynomial& p, Complex z) {
  if (!is_finite(z)) throw InvalidInput("non-finite evaluation point");
  const auto c = p.coeffs();
  Complex value = c.back();
  Complex slope{};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    slope = slope * z + value;
    value = value * z + c[i];
  }
  return {value, slope};
}

Polynomial derivative(const Polynomial& p) {
  const int d = p.degree();
  if (d == 0) return Polynomial{};
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) out[i - 1] = static_cast<double>(i) * p[i];
  return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p, int k) {
  if (k < 0) throw InvalidInput("derivative order must be nonnegative");
  Polynomial q = p;
  for (int i = 0; i < k; ++i) q = derivative(q);
  return q;
}

std::vector<Complex> taylor_coefficients(const Polynomial& p, Complex z) {
  if (!is_finite(z)) throw InvalidInput("non-finite expansion point");
  std::vector<Complex> work(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = work.size();
  // After pass k, work[k] holds the k-th Taylor coefficient.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n - 1; i-- > k;) work[i] += z * work[i + 1];
  }
  return work;
}

Polynomial deflate(const Polynomial& p, Complex rho, int mu) {
  if (mu < 1) throw InvalidInput("deflation multiplicity must be at least 1");
  if (mu > p.degree()) {
    throw InvalidInput("cannot deflate a multiplicity-" + std::to_string(mu) +
                       " factor from a degree-" + std::to_string(p.degree()) + " polynomial");
  }
  if (!is_finite(rho)) throw InvalidInput("non-finite deflation point");
  std::vector<Complex> cur(p.coeffs().begin(), p.coeffs().end());
  for (int round = 0; round < mu; ++round) {
    double scale = 0.0;
    for (const auto& c : cur) scale = std::max(scale, std::abs(c));
    const std::size_t n = cur.size();
    std::vector<Complex> quotient(n - 1);
    Complex acc = cur[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
      quotient[i] = acc;
      acc = acc * rho + cur[i];
    }
    const double remainder = std::abs(acc);
    if (remainder > kDeflationThreshold * (1.0 + scale)) {
      throw DeflationError("remainder " + std::to_string(remainder) +
                               " in deflation round " + std::to_string(round + 1) +
                               ": point is not a root of the stated multiplicity",
                           remainder);
    }
    cur = std::move(quotient);
  }
  return Polynomial(std::move(cur));
}

Polynomial from_roots(std::span<const RootWithMultiplicity> roots, Complex lead) {
  if (lead == Complex{}) throw InvalidInput("leading coefficient must be nonzero");
  int total = 0;
  std::vector<Complex> c{lead};
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw InvalidInput("root multiplicity must be at least 1");
    if (!is_finite(r.value)) throw InvalidInput("non-finite root");
    for (int k = 0; k < r.multiplicity; ++k) {
      // multiply by (x - value)
      c.push_back(Complex{});
      for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r.value * c[i];
      c[0] = -r.value * c[0];
    }
    total += r.multiplicity;
  }
  if (total < 1) throw InvalidInput("total multiplicity must be at least 1");
  return Polynomial(std::move(c));
}

}  // namespace rootpath
