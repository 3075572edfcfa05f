#pragma once
#include <array>

#include "oddwheel/rational.hpp"

namespace oddwheel {

// Monic cubic x^3 + c2 x^2 + c1 x + c0 with exact rational coefficients.
struct CubicPoly {
  Rational c2, c1, c0;

  double eval(double x) const { return ((x + c2.to_double()) * x + c1.to_double()) * x + c0.to_double(); }
  Rational eval(const Rational& x) const { return ((x + c2) * x + c1) * x + c0; }
  // Discriminant of the monic cubic; >= 0 exactly when all roots are real.
  Rational discriminant() const;

  friend bool operator==(const CubicPoly& a, const CubicPoly& b) {
    return a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0;
  }
};

// Small nonnegative rational matrix (order 2 or 3), the quotient of an
// equitable partition. Entries are kept exact; floating point enters only in
// root finding.
struct QuotientMatrix {
  int order = 0;
  std::array<Rational, 9> m{};  // row-major, order*order entries used

  const Rational& at(int r, int c) const { return m[r * order + c]; }
  Rational& at(int r, int c) { return m[r * order + c]; }

  // det(xI - M) expanded symbolically; order 3 only.
  CubicPoly char_poly() const;
  double largest_eigenvalue() const;
};

// Three-cell partition matrix of the bipartite-with-attachments candidate:
// cells (left side, right side minus the edge pair, the edge pair), with
// |L| = n/2 + s, |R| = n/2 - s as exact rationals.
//   [[k-1, n/2-s-2, 2], [n/2+s, 0, 0], [n/2+s, 0, 1]]
// Requires n/2 +- s integral, k >= 2, n/2 - s >= 2, n/2 + s >= 0.
QuotientMatrix pi_matrix(long long n, int k, const Rational& s);

// Characteristic polynomial of pi_matrix in closed form:
//   x^3 - k x^2 - (n^2/4 - s^2 - k + 1) x + (n^2/4 - s^2 - n - 2s)
// Agrees coefficient-for-coefficient with pi_matrix(...).char_poly()
// whenever the matrix exists; as a polynomial in s it is defined for any
// rational s, which is what the shift identities differentiate over.
CubicPoly char_poly_ps(long long n, int k, const Rational& s);

// Two-cell quotient [[k-1, n/2-s], [n/2+s, 0]] of the candidate without its
// extra right-side edge.
QuotientMatrix q_matrix(long long n, int k, const Rational& s);

struct QRadius {
  double mu;   // largest eigenvalue
  double eta;  // second eigenvector coordinate when the first is 1
};
QRadius q_matrix_radius(long long n, int k, const Rational& s);

// Largest real root of a monic cubic, bracketed bisection polished by
// safeguarded Newton, tolerance 1e-12. Works for any real cubic (falls back
// to the single real root when the pair is complex).
double largest_root(const CubicPoly& p);

}  // namespace oddwheel
