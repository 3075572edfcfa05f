#include "oddwheel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oddwheel/spectral.hpp"

namespace oddwheel {

long long ex_w5(long long n) {
  if (n < 1) throw std::invalid_argument("ex_w5: n >= 1 required");
  if (n % 4 == 2) return n * n / 4 + n / 2 - 1;
  return n * n / 4 + n / 2;  // both terms already floor for integer n
}

namespace {

long long part_value(long long n, int k, long long n0) {
  return n0 * (n - n0) + (static_cast<long long>(k) - 1) * n0 / 2 + 1;
}

}  // namespace

std::vector<long long> ex_w_odd_argmax(long long n, int k) {
  if (k < 3) throw std::invalid_argument("ex_w_odd: k >= 3 required");
  if (n < 1) throw std::invalid_argument("ex_w_odd: n >= 1 required");
  // The objective is a concave quadratic plus a floored linear term, so it
  // stays within 1/2 of a concave function peaking at x* = (2n + k - 1)/4;
  // any n0 further than 1.5 from x* loses more than that. Small n is scanned
  // outright; large n scans the window [x* - 1.5, x* + 1.5] (clamped, which
  // is exact because the objective is monotone outside the window).
  long long lo = 0, hi = n;
  if (n > 4096) {
    double xs = (2.0 * n + k - 1.0) / 4.0;
    lo = std::clamp<long long>(static_cast<long long>(std::ceil(xs - 1.5)), 0, n);
    hi = std::clamp<long long>(static_cast<long long>(std::floor(xs + 1.5)), 0, n);
  }
  long long best = part_value(n, k, lo);
  for (long long n0 = lo; n0 <= hi; ++n0)
    best = std::max(best, part_value(n, k, n0));
  std::vector<long long> arg;
  for (long long n0 = lo; n0 <= hi; ++n0)
    if (part_value(n, k, n0) == best) arg.push_back(n0);
  return arg;
}

long long ex_w_odd(long long n, int k) {
  return part_value(n, k, ex_w_odd_argmax(n, k).front());
}

double even_circuit_bound(long long n, int k) {
  if (k < 2) throw std::invalid_argument("even_circuit_bound: k >= 2 required");
  if (n < 1) throw std::invalid_argument("even_circuit_bound: n >= 1 required");
  return 8.0 * (k - 1) * std::pow(static_cast<double>(n), 1.0 + 1.0 / k);
}

EdgeBoundCheck edge_lower_bound_holds(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("edge_lower_bound_holds: empty graph");
  EdgeBoundCheck out;
  out.lambda1 = spectral_radius(g).lambda1;
  out.edges = g.edge_count();
  out.triangles = triangle_count(g);
  out.threshold =
      out.lambda1 * out.lambda1 - 6.0 * static_cast<double>(out.triangles) / n;
  out.applicable = out.lambda1 > n / 2.0 + 1e-8;
  out.holds = !out.applicable || static_cast<double>(out.edges) > out.threshold;
  return out;
}

double spex_lower(long long n, int k) {
  if (k < 2) throw std::invalid_argument("spex_lower: k >= 2 required");
  if (n < 1) throw std::invalid_argument("spex_lower: n >= 1 required");
  return (static_cast<double>(n) + k - 1) / 2.0;
}

}  // namespace oddwheel
