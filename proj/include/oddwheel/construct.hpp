#pragma once
#include <vector>

#include "oddwheel/graph.hpp"
#include "oddwheel/rational.hpp"

namespace oddwheel {

// Member of the family U_{k,m}: a graph on m vertices, every component of
// size between k and 2k-2, that is (k-1)-regular when (k-1)*m is even and
// otherwise has exactly one vertex of degree k-2 (placed at local index 0 of
// the last component). Small components rule out any path on 2k-1 vertices.
// Deterministic circulant construction, re-verified before returning.
// Requires k >= 3, m >= 2k.
Graph u_family(int k, long long m);

// Extremal 5-wheel-free graphs: complete bipartite plus a maximum matching
// inside each part. Balanced split, except n == 2 (mod 4) where the
// (n/2, n/2) and (n/2+1, n/2-1) splits tie and both graphs are returned.
// Edge count always equals ex_w5(n). Requires n >= 2.
std::vector<Graph> ex_w5_graph(long long n);

// Edge-extremal W_{2k+1}-free graphs: for each larger-part size n0 that
// maximizes n0*(n-n0) + floor((k-1)*n0/2) + 1, the complete bipartite graph
// K_{n0, n-n0} with u_family(k, n0) embedded in the larger part and a single
// edge in the smaller part. Requires k >= 3 and sizes that admit the
// embedding (n0 >= 2k, n - n0 >= 2).
std::vector<Graph> yuan_extremal(long long n, int k);

// Spectral-extremal candidate: K_{|L|,|R|} with |L| = n/2 + s and
// |R| = n/2 - s, u_family(k, |L|) embedded in L (vertices 0..|L|-1) and one
// edge on the two lowest vertices of R. Requires k >= 3, |s| <= 1 with
// n/2 +- s integral, |L| >= 2k, |R| >= 2. Verified wheel-free on return.
Graph spex_candidate(long long n, int k, const Rational& s);

// The half-split candidate with |L| = ceil(n/2): the lower-bound witness for
// the spectral problem. Requires k >= 3, n >= 4k.
Graph tilde_g(long long n, int k);

// Candidate imbalances s to compare at a given n, k: for odd k the single s
// with |L| = ceil(n/2); for even k, by n mod 4: {0}, {-1/2}, {0, 1}, {+1/2}.
std::vector<Rational> select_s(long long n, int k);

}  // namespace oddwheel
