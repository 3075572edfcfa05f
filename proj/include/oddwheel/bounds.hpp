#pragma once
#include <vector>

#include "oddwheel/graph.hpp"

namespace oddwheel {

// Turan number of the 5-wheel:
//   n^2/4 + n/2 - 1              if n == 2 (mod 4)
//   floor(n^2/4) + floor(n/2)    otherwise
// Exact integer arithmetic; n >= 1.
long long ex_w5(long long n);

// Turan number of W_{2k+1} for k >= 3:
//   max over n0 of n0*(n - n0) + floor((k-1)*n0/2) + 1.
// The maximizer set is an interval of one or two consecutive n0 around
// (2n + k - 1)/4; ex_w_odd_argmax returns it in ascending order.
long long ex_w_odd(long long n, int k);
std::vector<long long> ex_w_odd_argmax(long long n, int k);

// Even-cycle edge bound: a C_{2k}-free graph on n vertices has at most
// 8 (k-1) n^{1 + 1/k} edges.
double even_circuit_bound(long long n, int k);

struct EdgeBoundCheck {
  bool applicable = false;  // lambda1 > n/2 (with a small numeric margin)
  bool holds = true;        // e(G) > lambda1^2 - 6 t(G) / n, or vacuous
  double lambda1 = 0.0;
  long long edges = 0;
  long long triangles = 0;
  double threshold = 0.0;  // lambda1^2 - 6 t / n
};

// Spectral edge lower bound: graphs with lambda1 > n/2 satisfy
// e(G) > lambda1^2 - 6 t(G)/n. Applicability uses lambda1 > n/2 + 1e-8 so
// exact-equality cases (complete bipartite K_{m,m}) read as not applicable
// instead of jittering on the numeric boundary.
EdgeBoundCheck edge_lower_bound_holds(const Graph& g);

// Lower bound (n + k - 1) / 2 on the spectral radius of the extremal
// wheel-free graphs (sharp in the large-n regime).
double spex_lower(long long n, int k);

}  // namespace oddwheel
