#include "oddwheel/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "oddwheel/detect.hpp"
#include "oddwheel/errors.hpp"

namespace oddwheel {

namespace {

void matvec(const Graph& g, const std::vector<double>& x,
            std::vector<double>& y) {
  int n = g.vertex_count(), wpr = g.words_per_row();
  for (int v = 0; v < n; ++v) {
    double acc = 0.0;
    const std::uint64_t* r = g.row(v);
    for (int w = 0; w < wpr; ++w) {
      std::uint64_t m = r[w];
      while (m) {
        acc += x[64 * w + std::countr_zero(m)];
        m &= m - 1;
      }
    }
    y[v] = acc;
  }
}

SpectralResult iterate(const Graph& g, std::vector<double> x, double tol,
                       long long max_iter) {
  int n = g.vertex_count();
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (!(norm > 0.0))
    throw std::invalid_argument("spectral_radius: zero start vector");
  for (double& v : x) v /= norm;

  std::vector<double> y(n);
  double best_lambda = 0.0, best_resid = 0.0;
  for (long long it = 0; it <= max_iter; ++it) {
    matvec(g, x, y);  // y = A x, with ||x|| = 1
    double lambda = 0.0;
    for (int v = 0; v < n; ++v) lambda += x[v] * y[v];
    double resid = 0.0;
    for (int v = 0; v < n; ++v)
      resid = std::max(resid, std::abs(y[v] - lambda * x[v]));
    best_lambda = lambda;
    best_resid = resid;
    if (resid <= tol) {
      SpectralResult r;
      r.lambda1 = lambda;
      r.vector = x;
      r.residual = resid;
      r.iterations = it + 1;  // products performed, including this check
      return r;
    }
    // next iterate: (A + I) x, renormalized
    norm = 0.0;
    for (int v = 0; v < n; ++v) {
      y[v] += x[v];
      norm += y[v] * y[v];
    }
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
  }
  throw ConvergenceError("spectral_radius: iteration budget exhausted",
                         best_lambda, best_resid, max_iter + 1);
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, long long max_iter) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spectral_radius: empty graph");
  if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tol > 0");
  return iterate(g, std::vector<double>(n, 1.0), tol, max_iter);
}

SpectralResult spectral_radius_from(const Graph& g,
                                    const std::vector<double>& start,
                                    double tol, long long max_iter) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spectral_radius: empty graph");
  if (static_cast<int>(start.size()) != n)
    throw std::invalid_argument("spectral_radius: start size mismatch");
  for (double v : start)
    if (v < 0) throw std::invalid_argument("spectral_radius: negative start");
  return iterate(g, start, tol, max_iter);
}

double rayleigh_quotient(const Graph& g, const std::vector<double>& z) {
  int n = g.vertex_count();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("rayleigh_quotient: size mismatch");
  double zz = 0.0;
  for (double v : z) zz += v * v;
  if (!(zz > 0.0)) throw std::invalid_argument("rayleigh_quotient: zero vector");
  std::vector<double> y(n);
  matvec(g, z, y);
  double zaz = 0.0;
  for (int v = 0; v < n; ++v) zaz += z[v] * y[v];
  return zaz / zz;
}

double eig2_largest(double a, double b, double c, double d) {
  double bc = b * c;
  if (bc < 0) throw std::invalid_argument("eig2_largest: bc must be >= 0");
  double disc = (a - d) * (a - d) + 4.0 * bc;
  return 0.5 * (a + d + std::sqrt(disc));
}

double quotient2_radius(double d, double dp, long long n0, long long n) {
  if (d < 0 || dp < 0)
    throw std::invalid_argument("quotient2_radius: negative degree");
  if (n0 < 0 || n0 > n)
    throw std::invalid_argument("quotient2_radius: need 0 <= n0 <= n");
  return eig2_largest(d, static_cast<double>(n - n0), static_cast<double>(n0),
                      dp);
}

double join_upper_bound(const Graph& g, const Graph& h) {
  long long a = g.vertex_count(), b = h.vertex_count();
  if (a < 1 || b < 1)
    throw std::invalid_argument("join_upper_bound: empty side");
  return quotient2_radius(max_degree(g), max_degree(h), a, a + b);
}

}  // namespace oddwheel
