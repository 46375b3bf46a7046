#include <doctest.h>

#include <cmath>
#include <vector>

#include "rootpath/errors.h"
#include "rootpath/homotopy.h"
#include "rootpath/oracle.h"
#include "rootpath/resultants.h"

using namespace rootpath;

namespace {

Complex random_coeff(Rng& rng) { return {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0}; }

Polynomial random_poly(Rng& rng, int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_coeff(rng);
  return Polynomial(std::move(c));
}

bool rows_equal(const ComplexMatrix& m, const std::vector<std::vector<double>>& expected) {
  if (m.rows() != expected.size()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.cols() != expected[r].size()) return false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != Complex(expected[r][c], 0.0)) return false;
    }
  }
  return true;
}

Polynomial unit_minus_one(int d) {
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
  c.front() = -1.0;
  c.back() = 1.0;
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("sylvester layout") {
  const auto s = sylvester(Polynomial{-1.0, 0.0, 1.0}, Polynomial{0.0, 2.0}, {2, 1});
  CHECK(rows_equal(s.entries, {{-1, 0, 1}, {0, 2, 0}, {0, 0, 2}}));
  const auto t = sylvester(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0}, {1, 1});
  CHECK(rows_equal(t.entries, {{-1, 1}, {1, 1}}));
  CHECK_THROWS_AS(sylvester(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0}, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(sylvester(Polynomial{-1.0, 0.0, 1.0}, Polynomial{1.0, 1.0}, {1, 1}), InvalidInput);
}

TEST_CASE("sylvester pads to a larger format") {
  const auto s = sylvester(Polynomial{1.0, 1.0}, Polynomial{2.0, 3.0}, {2, 1});
  CHECK(rows_equal(s.entries, {{1, 1, 0}, {2, 3, 0}, {0, 2, 3}}));
}

TEST_CASE("sylvester of x^d - 1 and its derivative is upper triangular") {
  for (int d = 1; d <= 10; ++d) {
    const Polynomial f = unit_minus_one(d);
    const auto s = sylvester(f, derivative(f), {d, d - 1 > 0 ? d - 1 : 1});
    if (d == 1) continue;
    for (std::size_t r = 0; r < s.entries.rows(); ++r) {
      for (std::size_t c = 0; c < r; ++c) CHECK(s.entries(r, c) == Complex{});
    }
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(ComplexMatrix::identity(3)) == Complex{1.0, 0.0});
  ComplexMatrix zero(3, 3);
  CHECK(determinant(zero) == Complex{});
  CHECK(std::abs(determinant(sylvester(Polynomial{-1.0, 0.0, 1.0}, Polynomial{0.0, 2.0}, {2, 1})) +
                 4.0) <= 1e-15);
  CHECK_THROWS_AS(determinant(ComplexMatrix(2, 3)), InvalidInput);
}

TEST_CASE("resultants of x^d - 1 and d x^(d-1)") {
  for (int d = 1; d <= 10; ++d) {
    const Polynomial f = unit_minus_one(d);
    const Complex r = resultant(f, derivative(f), {d, d - 1});
    const double expected = (d % 2 == 1 ? 1.0 : -1.0) * std::pow(d, d);
    CHECK(std::abs(r - expected) <= 1e-9 * std::abs(expected));
  }
}

TEST_CASE("small resultants") {
  CHECK(resultant(Polynomial{-1.0, 1.0}, Polynomial{3.0}, {1, 0}) == Complex{3.0, 0.0});
  CHECK(resultant(Polynomial{2.0}, Polynomial{1.0, 0.0, 1.0}, {0, 2}) == Complex{4.0, 0.0});
  CHECK_THROWS_AS(resultant(Polynomial{-1.0, 1.0}, Polynomial{3.0, 1.0}, {1, 0}), InvalidInput);
  CHECK_THROWS_AS(resultant(Polynomial{2.0}, Polynomial{3.0}, {0, 0}), InvalidInput);
  CHECK(resultant(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0}, {1, 1}) == Complex{-2.0, 0.0});
  CHECK(std::abs(resultant(Polynomial{-1.0, 0.0, 1.0}, Polynomial{0.0, 2.0}, {2, 1}) + 4.0) <= 1e-14);
  const std::vector<RootWithMultiplicity> fr{{1.5, 1}, {Complex{0.0, 1.0}, 1}};
  const std::vector<RootWithMultiplicity> gr{{1.5, 1}, {-2.0, 1}, {0.3, 1}};
  const Polynomial f = from_roots(fr);
  const Polynomial g = from_roots(gr);
  CHECK(std::abs(resultant(f, g, {2, 3})) <= 1e-12 * f.norm2() * g.norm2());
}

TEST_CASE("swapping arguments follows the sign law") {
  Rng rng(21);
  for (int d = 1; d <= 4; ++d) {
    for (int e = 1; d + e <= 8; ++e) {
      for (int trial = 0; trial < 5; ++trial) {
        const Polynomial f = random_poly(rng, d);
        const Polynomial g = random_poly(rng, e);
        const Complex fg = oracle::brute_determinant(sylvester(f, g, {d, e}).entries);
        const Complex gf = oracle::brute_determinant(sylvester(g, f, {e, d}).entries);
        const double sign = (d * e) % 2 == 0 ? 1.0 : -1.0;
        CHECK(std::abs(gf - sign * fg) <= 1e-10 * (1.0 + std::abs(fg)));
        CHECK(std::abs(resultant(g, f, {e, d}) - sign * resultant(f, g, {d, e})) <=
              1e-9 * (1.0 + std::abs(fg)));
      }
    }
  }
}

TEST_CASE("elimination determinant agrees with permutation expansion") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    ComplexMatrix m(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = random_coeff(rng);
    }
    const Complex brute = oracle::brute_determinant(m);
    CHECK(std::abs(determinant(m) - brute) <= 1e-9 * std::max(1.0, std::abs(brute)));
  }
  for (int d = 1; d < 8; ++d) {
    for (int e = 1; d + e <= 8; ++e) {
      const Polynomial f = random_poly(rng, d);
      const Polynomial g = random_poly(rng, e);
      const auto s = sylvester(f, g, {d, e});
      const Complex brute = oracle::brute_determinant(s.entries);
      CHECK(std::abs(determinant(s) - brute) <= 1e-9 * std::max(1.0, std::abs(brute)));
    }
  }
}

TEST_CASE("discriminant of quadratics is 4ac - b^2") {
  const Polynomial p{3.0, -2.0, 5.0};  // 5x^2 - 2x + 3
  const auto disc = discriminant(p);
  CHECK(std::abs(disc.delta - Complex{56.0, 0.0}) <= 1e-12 * 56.0);
  CHECK_FALSE(disc.sigma_member);
  const auto sq = discriminant(Polynomial{1.0, -2.0, 1.0});
  CHECK(std::abs(sq.delta) <= 1e-12);
  CHECK(sq.sigma_member);
}

TEST_CASE("discriminant of x^d - 1") {
  for (int d = 2; d <= 10; ++d) {
    const auto disc = discriminant(unit_minus_one(d));
    const double expected = (d % 2 == 1 ? 1.0 : -1.0) * std::pow(d, d);
    CHECK(std::abs(disc.delta - expected) <= 1e-9 * std::abs(expected));
    CHECK_FALSE(disc.sigma_member);
  }
}

TEST_CASE("discriminant edge cases") {
  const auto lin = discriminant(Polynomial{2.0, 3.0});
  CHECK(lin.delta == Complex{1.0, 0.0});
  CHECK_FALSE(lin.sigma_member);
  CHECK_THROWS_AS(discriminant(Polynomial{4.0}), InvalidInput);
  CHECK(discriminant(Polynomial{1.0, 2.0, 1e-14}).sigma_member);
}

TEST_CASE("discriminant matches the root-product formula") {
  // delta = (-1)^(d(d-1)/2) a^(2d-2) prod_{i<j} (r_i - r_j)^2
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 2 + trial % 7;
    const bool repeated = trial % 2 == 0;
    const int distinct = repeated ? degree - 1 : degree;
    const auto pts = oracle::random_separated_points(rng, distinct, 1.5, 0.5);
    std::vector<RootWithMultiplicity> roots;
    std::vector<Complex> flat;
    for (int k = 0; k < distinct; ++k) {
      const int m = (repeated && k == 0) ? 2 : 1;
      roots.push_back({pts[k], m});
      flat.insert(flat.end(), static_cast<std::size_t>(m), pts[k]);
    }
    const Complex lead = std::polar(0.5 + uniform01(rng), 6.0 * uniform01(rng));
    const Polynomial p = from_roots(roots, lead);
    Complex expected = std::pow(lead, 2 * degree - 2);
    if ((degree * (degree - 1) / 2) % 2 == 1) expected = -expected;
    double scale = std::abs(expected);
    for (std::size_t i = 0; i < flat.size(); ++i) {
      for (std::size_t j = i + 1; j < flat.size(); ++j) {
        expected *= (flat[i] - flat[j]) * (flat[i] - flat[j]);
        scale *= std::pow(std::abs(flat[i]) + std::abs(flat[j]), 2);
      }
    }
    const auto disc = discriminant(p);
    CHECK(std::abs(disc.delta - expected) <= 1e-9 * scale);
    if (repeated) CHECK(disc.sigma_member);
  }
}

TEST_CASE("combination identity") {
  const Polynomial f{-1.0, 0.0, 1.0};
  const Polynomial g{0.0, 2.0};
  const std::vector<Complex> zeros1{0.0};
  const std::vector<Complex> zeros2{0.0, 0.0};
  CHECK(combination_identity_check(f, g, {2, 1}, zeros1, zeros2));
  const std::vector<Complex> one{1.0};
  const auto s = sylvester(f, g, {2, 1});
  const std::vector<Complex> row{1.0, 0.0, 0.0};
  const auto u = row_times(row, s.entries);
  CHECK(u == std::vector<Complex>{-1.0, 0.0, 1.0});
  CHECK(combination_identity_check(f, g, {2, 1}, one, zeros2));
  CHECK_THROWS_AS(combination_identity_check(f, g, {2, 1}, zeros2, zeros2), InvalidInput);

  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 6;
    const int e = 1 + (trial / 6) % 6;
    std::vector<Complex> alpha(static_cast<std::size_t>(e));
    std::vector<Complex> beta(static_cast<std::size_t>(d));
    for (auto& a : alpha) a = random_coeff(rng);
    for (auto& b : beta) b = random_coeff(rng);
    CHECK(combination_identity_check(random_poly(rng, d), random_poly(rng, e), {d, e}, alpha, beta));
  }
}

TEST_CASE("common root certificate") {
  const std::vector<RootWithMultiplicity> fr{{2.0, 1}, {-1.0, 1}};
  const std::vector<RootWithMultiplicity> gr{{2.0, 1}, {5.0, 1}};
  const auto z = common_root_certificate(from_roots(fr), from_roots(gr), {2, 2});
  REQUIRE(z.has_value());
  CHECK(std::abs(*z - 2.0) <= 1e-8);
  CHECK_FALSE(common_root_certificate(Polynomial{-1.0, 1.0}, Polynomial{1.0, 1.0}, {1, 1}));
  CHECK_FALSE(common_root_certificate(Polynomial{-1.0, 0.0, 1.0}, Polynomial{0.0, 2.0}, {2, 1}));
}
