#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oddwheel/construct.hpp"
#include "oddwheel/quotient.hpp"
#include "oddwheel/rational.hpp"
#include "oddwheel/spectral.hpp"

using namespace oddwheel;

TEST_CASE("cubic polynomial exact views") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  CubicPoly p{Rational(-6), Rational(11), Rational(-6)};
  CHECK(p.eval(Rational(1)) == Rational(0));
  CHECK(p.eval(Rational(2)) == Rational(0));
  CHECK(p.eval(Rational(4)) == Rational(6));
  CHECK(p.eval(4.0) == doctest::Approx(6.0));
  // discriminant = prod of squared root differences = 1 * 4 * 1
  CHECK(p.discriminant() == Rational(4));
  CubicPoly repeated{Rational(-2), Rational(1), Rational(0)};  // x(x-1)^2
  CHECK(repeated.discriminant() == Rational(0));
}

TEST_CASE("pi matrix frozen instance") {
  QuotientMatrix q = pi_matrix(20, 3, Rational(0));
  REQUIRE(q.order == 3);
  CHECK(q.at(0, 0) == Rational(2));
  CHECK(q.at(0, 1) == Rational(8));
  CHECK(q.at(0, 2) == Rational(2));
  CHECK(q.at(1, 0) == Rational(10));
  CHECK(q.at(1, 1) == Rational(0));
  CHECK(q.at(1, 2) == Rational(0));
  CHECK(q.at(2, 0) == Rational(10));
  CHECK(q.at(2, 1) == Rational(0));
  CHECK(q.at(2, 2) == Rational(1));

  CubicPoly p = q.char_poly();
  CHECK(p.c2 == Rational(-3));
  CHECK(p.c1 == Rational(-98));
  CHECK(p.c0 == Rational(80));
}

TEST_CASE("pi matrix preconditions") {
  CHECK_THROWS_AS(pi_matrix(21, 3, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(pi_matrix(20, 3, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(pi_matrix(20, 1, Rational(0)), std::invalid_argument);
  // right side collapses below two vertices
  CHECK_THROWS_AS(pi_matrix(2, 3, Rational(0)), std::invalid_argument);
  CHECK_NOTHROW(pi_matrix(21, 3, Rational(1, 2)));
  CHECK_NOTHROW(pi_matrix(21, 3, Rational(-1, 2)));
}

TEST_CASE("closed form matches the matrix wherever the matrix exists") {
  std::mt19937_64 rng(1001);
  for (int t = 0; t < 50; ++t) {
    long long n = 8 + static_cast<long long>(rng() % 200);
    int k = 2 + static_cast<int>(rng() % 9);
    Rational s = (n % 2 == 0) ? Rational(static_cast<long long>(rng() % 3) - 1)
                              : Rational((rng() % 2) ? 1 : -1, 2);
    QuotientMatrix q = pi_matrix(n, k, s);
    CHECK(q.char_poly() == char_poly_ps(n, k, s));
  }
}

TEST_CASE("shift identities hold exactly") {
  std::mt19937_64 rng(2002);
  for (int t = 0; t < 50; ++t) {
    long long n = 6 + static_cast<long long>(rng() % 500);
    int k = 2 + static_cast<int>(rng() % 12);
    for (const Rational& a : {Rational(1, 2), Rational(1)}) {
      CubicPoly pa = char_poly_ps(n, k, a);
      CubicPoly pm = char_poly_ps(n, k, -a);
      CHECK(pa.c2 == pm.c2);
      CHECK(pa.c1 == pm.c1);
      CHECK(pa.c0 - pm.c0 == Rational(-4) * a);
    }
    CubicPoly p0 = char_poly_ps(n, k, Rational(0));
    CubicPoly p1 = char_poly_ps(n, k, Rational(1));
    CHECK(p0.c2 == p1.c2);
    CHECK(p0.c1 - p1.c1 == Rational(-1));
    CHECK(p0.c0 - p1.c0 == Rational(3));
  }
}

TEST_CASE("largest root of known cubics") {
  CubicPoly p{Rational(-6), Rational(11), Rational(-6)};
  CHECK(largest_root(p) == doctest::Approx(3.0).epsilon(1e-12));
  // (x-5)(x^2+x+1): complex pair, single real root
  CubicPoly q{Rational(-4), Rational(-4), Rational(-5)};
  CHECK(largest_root(q) == doctest::Approx(5.0).epsilon(1e-12));
  // triple root (x-2)^3: evaluation noise near a triple root caps any
  // double-precision root finder at ~cbrt(1e-14); only locate it coarsely
  CubicPoly r{Rational(-6), Rational(12), Rational(-8)};
  CHECK(largest_root(r) == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(pi_matrix(20, 3, Rational(0)).largest_eigenvalue() ==
        doctest::Approx(largest_root(char_poly_ps(20, 3, Rational(0))))
            .epsilon(1e-12));
}

TEST_CASE("largest root agrees with the eigensolver on real candidates") {
  // k = 3 keeps (k-1)|L| even, so the partition is equitable and the root
  // is the graph's spectral radius, not only an upper bound.
  for (auto [n, s] : {std::pair<long long, Rational>{20, Rational(0)},
                      {40, Rational(0)},
                      {21, Rational(1, 2)},
                      {41, Rational(-1, 2)}}) {
    double root = largest_root(char_poly_ps(n, 3, s));
    double lam = spectral_radius(spex_candidate(n, 3, s)).lambda1;
    CHECK(lam == doctest::Approx(root).epsilon(1e-8));
  }
}

TEST_CASE("two-cell quotient radius") {
  // k = 1 zeroes the diagonal: mu = n/2 exactly, eta = 1
  for (long long n : {4, 10, 36}) {
    QRadius qr = q_matrix_radius(n, 1, Rational(0));
    CHECK(qr.mu == doctest::Approx(static_cast<double>(n) / 2).epsilon(1e-12));
    CHECK(qr.eta == doctest::Approx(1.0).epsilon(1e-12));
  }
  // mu depends on s only through |L||R|, so +-1/2 agree
  QRadius a = q_matrix_radius(21, 4, Rational(1, 2));
  QRadius b = q_matrix_radius(21, 4, Rational(-1, 2));
  CHECK(a.mu == doctest::Approx(b.mu).epsilon(1e-14));
  // frozen closed form at (20, 3, 0): mu = 1 + sqrt(101)
  QRadius c = q_matrix_radius(20, 3, Rational(0));
  CHECK(c.mu == doctest::Approx(1.0 + std::sqrt(101.0)).epsilon(1e-12));
  CHECK(c.eta == doctest::Approx(10.0 / (1.0 + std::sqrt(101.0))).epsilon(1e-12));

  QuotientMatrix two = q_matrix(20, 3, Rational(0));
  CHECK(two.largest_eigenvalue() == doctest::Approx(c.mu).epsilon(1e-12));
  QuotientMatrix bad;
  bad.order = 1;
  CHECK_THROWS_AS(bad.largest_eigenvalue(), std::invalid_argument);
  CHECK_THROWS_AS(two.char_poly(), std::invalid_argument);
}
