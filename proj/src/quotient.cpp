#include "oddwheel/quotient.hpp"

#include <cmath>
#include <stdexcept>

#include "oddwheel/errors.hpp"
#include "oddwheel/spectral.hpp"

namespace oddwheel {

Rational CubicPoly::discriminant() const {
  // monic cubic x^3 + b x^2 + c x + d
  const Rational &b = c2, &c = c1, &d = c0;
  return Rational(18) * b * c * d - Rational(4) * b * b * b * d +
         b * b * c * c - Rational(4) * c * c * c - Rational(27) * d * d;
}

CubicPoly QuotientMatrix::char_poly() const {
  if (order != 3)
    throw std::invalid_argument("char_poly: order-3 matrices only");
  Rational tr = at(0, 0) + at(1, 1) + at(2, 2);
  Rational minors = (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) +
                    (at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0)) +
                    (at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0));
  Rational det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                 at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                 at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  return CubicPoly{-tr, minors, -det};
}

double QuotientMatrix::largest_eigenvalue() const {
  if (order == 2)
    return eig2_largest(at(0, 0).to_double(), at(0, 1).to_double(),
                        at(1, 0).to_double(), at(1, 1).to_double());
  if (order == 3) return largest_root(char_poly());
  throw std::invalid_argument("largest_eigenvalue: order 2 or 3 only");
}

namespace {

void check_half_integer_split(long long n, const Rational& s) {
  Rational half_n(n, 2);
  if (!(half_n + s).is_integer() || !(half_n - s).is_integer())
    throw std::invalid_argument("quotient: n/2 +- s must be integral");
}

void check_nonneg(const QuotientMatrix& q) {
  for (int i = 0; i < q.order * q.order; ++i)
    if (q.m[i] < Rational(0))
      throw std::invalid_argument("quotient: negative matrix entry");
}

}  // namespace

QuotientMatrix pi_matrix(long long n, int k, const Rational& s) {
  if (k < 2) throw std::invalid_argument("pi_matrix: k >= 2 required");
  check_half_integer_split(n, s);
  Rational left = Rational(n, 2) + s, right = Rational(n, 2) - s;
  if (right < Rational(2))
    throw std::invalid_argument("pi_matrix: right side needs >= 2 vertices");
  QuotientMatrix q;
  q.order = 3;
  q.at(0, 0) = Rational(k - 1);
  q.at(0, 1) = right - Rational(2);
  q.at(0, 2) = Rational(2);
  q.at(1, 0) = left;
  q.at(1, 1) = Rational(0);
  q.at(1, 2) = Rational(0);
  q.at(2, 0) = left;
  q.at(2, 1) = Rational(0);
  q.at(2, 2) = Rational(1);
  check_nonneg(q);
  return q;
}

CubicPoly char_poly_ps(long long n, int k, const Rational& s) {
  if (k < 2) throw std::invalid_argument("char_poly_ps: k >= 2 required");
  // No integrality requirement here: the closed form is a polynomial in s,
  // and the shift identities evaluate it at s values of both parities.
  Rational q = Rational(n * n, 4) - s * s;  // |L| * |R|
  CubicPoly p{-Rational(k),
              -(q - Rational(k) + Rational(1)),
              q - Rational(n) - Rational(2) * s};
  // all three roots are real for every instance built here; guard the
  // root-finder's bracketing assumption numerically (roots are bounded by
  // 1 + sum |c_i|, so the discriminant, a squared Vandermonde, is scaled by
  // that bound to the sixth power)
  double b = p.c2.to_double(), c = p.c1.to_double(), d = p.c0.to_double();
  double disc = 18.0 * b * c * d - 4.0 * b * b * b * d + b * b * c * c -
                4.0 * c * c * c - 27.0 * d * d;
  double bound = 1.0 + std::max(1.0, std::abs(b) + std::abs(c) + std::abs(d));
  if (disc / std::pow(bound, 6.0) < -1e-9)
    throw VerificationError("char_poly_ps: non-real spectrum");
  return p;
}

QuotientMatrix q_matrix(long long n, int k, const Rational& s) {
  if (k < 1) throw std::invalid_argument("q_matrix: k >= 1 required");
  check_half_integer_split(n, s);
  Rational left = Rational(n, 2) + s, right = Rational(n, 2) - s;
  if (left < Rational(1) || right < Rational(1))
    throw std::invalid_argument("q_matrix: both sides need >= 1 vertex");
  QuotientMatrix q;
  q.order = 2;
  q.at(0, 0) = Rational(k - 1);
  q.at(0, 1) = right;
  q.at(1, 0) = left;
  q.at(1, 1) = Rational(0);
  check_nonneg(q);
  return q;
}

QRadius q_matrix_radius(long long n, int k, const Rational& s) {
  QuotientMatrix q = q_matrix(n, k, s);
  double mu = q.largest_eigenvalue();
  // second row: (n/2 + s) * 1 = mu * eta
  double eta = q.at(1, 0).to_double() / mu;
  return QRadius{mu, eta};
}

double largest_root(const CubicPoly& p) {
  double c2 = p.c2.to_double(), c1 = p.c1.to_double(), c0 = p.c0.to_double();
  double bound = 1.0 + std::max(1.0, std::abs(c2) + std::abs(c1) + std::abs(c0));
  double lo, hi = bound;
  // p' = 3x^2 + 2 c2 x + c1; right turning point if it exists
  double disc = c2 * c2 - 3.0 * c1;
  if (disc > 0) {
    double t2 = (-c2 + std::sqrt(disc)) / 3.0;
    if (p.eval(t2) <= 0.0) {
      lo = t2;  // largest root sits right of the local minimum
    } else {
      // largest real root precedes the local maximum t1
      hi = (-c2 - std::sqrt(disc)) / 3.0;
      lo = -bound;
    }
  } else {
    lo = -bound;  // monotone: single real root
  }
  // bisection with Newton steps whenever they stay inside the bracket
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double fx = p.eval(x);
    if (fx == 0.0) return x;
    if (fx < 0.0)
      lo = x;
    else
      hi = x;
    double dfx = (3.0 * x + 2.0 * c2) * x + c1;
    double nx = dfx != 0.0 ? x - fx / dfx : x;
    x = (nx > lo && nx < hi) ? nx : 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

}  // namespace oddwheel
