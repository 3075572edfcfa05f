#pragma once
#include <vector>

#include "oddwheel/graph.hpp"

namespace oddwheel {

struct SpectralResult {
  double lambda1 = 0.0;
  std::vector<double> vector;  // entries >= 0, 2-norm 1
  double residual = 0.0;       // inf-norm of A*x - lambda1*x
  long long iterations = 0;    // matrix-vector products performed
};

// Power iteration on A + I starting from the all-ones vector. The +I shift
// makes lambda1 + 1 strictly dominant in magnitude for every graph (the
// least eigenvalue is >= -lambda1), so near-bipartite graphs converge too.
// lambda1 is the Rayleigh quotient of the final iterate; the result is
// accepted only when the residual certificate is <= tol. Throws
// ConvergenceError (with the best estimate) if the budget runs out.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10,
                               long long max_iter = 1'000'000);

// Same solver with a caller-supplied nonnegative start vector. Used to warm
// start across single-edge perturbations (local search); the certificate is
// identical, only the start differs.
SpectralResult spectral_radius_from(const Graph& g,
                                    const std::vector<double>& start,
                                    double tol = 1e-10,
                                    long long max_iter = 1'000'000);

// z^T A z / z^T z. Rejects zero or size-mismatched z.
double rayleigh_quotient(const Graph& g, const std::vector<double>& z);

// Largest eigenvalue of [[a, b], [c, d]] with bc >= 0 (real spectrum).
double eig2_largest(double a, double b, double c, double d);

// Largest eigenvalue of [[d, n - n0], [n0, dp]]: the 2x2 one-sided bound for
// joins. Requires 0 <= n0 <= n and nonnegative d, dp.
double quotient2_radius(double d, double dp, long long n0, long long n);

// quotient2_radius(maxdeg g, maxdeg h, |g|, |g| + |h|); certified upper
// bound on lambda1(join(g, h)), tight when both sides are regular.
double join_upper_bound(const Graph& g, const Graph& h);

}  // namespace oddwheel
