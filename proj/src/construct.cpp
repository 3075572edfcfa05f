#include "oddwheel/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddwheel/bounds.hpp"
#include "oddwheel/detect.hpp"
#include "oddwheel/errors.hpp"

namespace oddwheel {

namespace {

// Component sizes for u_family: q = floor(m/k) blocks of size k with the
// remainder folded into the last one or two so every size stays <= 2k-2.
// For even k the fold keeps all sizes even, except exactly one odd size
// (last) when m is odd; that component carries the degree-deficient vertex.
std::vector<int> u_partition(int k, long long m) {
  long long q = m / k;
  int r = static_cast<int>(m % k);
  std::vector<int> sizes(static_cast<std::size_t>(q), k);
  if (r == 0) return sizes;
  if (r <= k - 2) {
    sizes.back() = k + r;
    return sizes;
  }
  // r == k - 1 would overflow one block; split across the last two
  int a = k + (k - 1) / 2, b = k + k / 2;  // a + b = 3k - 1
  sizes.pop_back();
  if (a % 2 != 0) std::swap(a, b);  // odd size (if any) goes last
  sizes.back() = a;
  sizes.push_back(b);
  return sizes;
}

// One u_family component on c vertices:
//  - k odd: circulant with offsets 1..(k-1)/2, (k-1)-regular, any c >= k
//  - k even, c even: offsets 1..(k-2)/2 plus the antipodal c/2
//  - k even, c odd: offsets 1..(k-2)/2 plus chords {i, i+(c-1)/2} for
//    i = 1..(c-1)/2, a near-perfect matching missing vertex 0, which ends
//    up with degree k-2 while everyone else has k-1
Graph u_component(int k, int c) {
  Graph g(c);
  int half_offsets = (k % 2 == 1) ? (k - 1) / 2 : (k - 2) / 2;
  for (int v = 0; v < c; ++v)
    for (int o = 1; o <= half_offsets; ++o) g.add_edge(v, (v + o) % c);
  if (k % 2 == 0) {
    if (c % 2 == 0) {
      for (int v = 0; v < c / 2; ++v) g.add_edge(v, v + c / 2);
    } else {
      for (int i = 1; i <= (c - 1) / 2; ++i) g.add_edge(i, i + (c - 1) / 2);
    }
  }
  return g;
}

void verify_u_member(const Graph& g, int k, long long m) {
  if (g.vertex_count() != m) throw VerificationError("u_family: wrong order");
  bool need_deficient = ((static_cast<long long>(k) - 1) * m) % 2 != 0;
  int deficient = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d == k - 2)
      ++deficient;
    else if (d != k - 1)
      throw VerificationError("u_family: bad degree");
  }
  if (deficient != (need_deficient ? 1 : 0))
    throw VerificationError("u_family: bad deficiency count");
  if (contains_path(g, 2 * k - 1))
    throw VerificationError("u_family: contains long path");
}

void embed(Graph& host, const Graph& part, int base) {
  for (int u = 0; u < part.vertex_count(); ++u)
    for (int v : part.neighbors(u))
      if (u < v) host.add_edge(base + u, base + v);
}

}  // namespace

Graph u_family(int k, long long m) {
  if (k < 3) throw std::invalid_argument("u_family: k >= 3 required");
  if (m < 2 * k) throw std::invalid_argument("u_family: m >= 2k required");
  if (m > (1LL << 30)) throw std::invalid_argument("u_family: m too large");
  std::vector<Graph> comps;
  for (int c : u_partition(k, m)) comps.push_back(u_component(k, c));
  Graph g = disjoint_union(comps);
  verify_u_member(g, k, m);
  return g;
}

std::vector<Graph> ex_w5_graph(long long n) {
  if (n < 2) throw std::invalid_argument("ex_w5_graph: n >= 2 required");
  if (n > (1LL << 16)) throw std::invalid_argument("ex_w5_graph: n too large");
  std::vector<std::pair<int, int>> splits;
  if (n % 4 == 2) {
    splits.push_back({static_cast<int>(n / 2), static_cast<int>(n / 2)});
    splits.push_back({static_cast<int>(n / 2 + 1), static_cast<int>(n / 2 - 1)});
  } else {
    splits.push_back({static_cast<int>((n + 1) / 2), static_cast<int>(n / 2)});
  }
  std::vector<Graph> out;
  for (auto [a, b] : splits) {
    Graph g = complete_bipartite(a, b);
    for (int i = 0; i + 1 < a; i += 2) g.add_edge(i, i + 1);
    for (int i = a; i + 1 < a + b; i += 2) g.add_edge(i, i + 1);
    if (g.edge_count() != ex_w5(n))
      throw VerificationError("ex_w5_graph: wrong edge count");
    if (!is_wheel_free(g, 2))
      throw VerificationError("ex_w5_graph: candidate contains a 5-wheel");
    if (std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> yuan_extremal(long long n, int k) {
  if (k < 3) throw std::invalid_argument("yuan_extremal: k >= 3 required");
  if (n < 2) throw std::invalid_argument("yuan_extremal: n >= 2 required");
  std::vector<Graph> out;
  for (long long n0 : ex_w_odd_argmax(n, k)) {
    if (n0 < 2 * k || n - n0 < 2)
      throw std::invalid_argument(
          "yuan_extremal: part sizes infeasible (need n0 >= 2k and n-n0 >= 2)");
    Graph g = complete_bipartite(static_cast<int>(n0), static_cast<int>(n - n0));
    embed(g, u_family(k, n0), 0);
    g.add_edge(static_cast<int>(n0), static_cast<int>(n0 + 1));
    if (g.edge_count() != ex_w_odd(n, k))
      throw VerificationError("yuan_extremal: wrong edge count");
    if (!is_wheel_free(g, k))
      throw VerificationError("yuan_extremal: candidate contains a wheel");
    out.push_back(std::move(g));
  }
  return out;
}

Graph spex_candidate(long long n, int k, const Rational& s) {
  if (k < 3) throw std::invalid_argument("spex_candidate: k >= 3 required");
  Rational half(n, 2);
  if (!(half + s).is_integer() || !(half - s).is_integer())
    throw std::invalid_argument("spex_candidate: n/2 +- s must be integral");
  if (s > Rational(1) || s < Rational(-1))
    throw std::invalid_argument("spex_candidate: |s| <= 1 required");
  long long left = (half + s).as_integer();
  long long right = (half - s).as_integer();
  if (left < 2 * k)
    throw std::invalid_argument("spex_candidate: left side needs >= 2k vertices");
  if (right < 2)
    throw std::invalid_argument("spex_candidate: right side needs >= 2 vertices");
  Graph g = complete_bipartite(static_cast<int>(left), static_cast<int>(right));
  embed(g, u_family(k, left), 0);
  g.add_edge(static_cast<int>(left), static_cast<int>(left + 1));
  if (!is_wheel_free(g, k))
    throw VerificationError("spex_candidate: candidate contains a wheel");
  return g;
}

Graph tilde_g(long long n, int k) {
  if (k < 3) throw std::invalid_argument("tilde_g: k >= 3 required");
  if (n < 4 * k) throw std::invalid_argument("tilde_g: n >= 4k required");
  Rational s = (n % 2 == 0) ? Rational(0) : Rational(1, 2);
  return spex_candidate(n, k, s);
}

std::vector<Rational> select_s(long long n, int k) {
  if (k < 3) throw std::invalid_argument("select_s: k >= 3 required");
  if (n < 1) throw std::invalid_argument("select_s: n >= 1 required");
  if (k % 2 == 1)
    return {(n % 2 == 0) ? Rational(0) : Rational(1, 2)};
  switch (n % 4) {
    case 0: return {Rational(0)};
    case 1: return {Rational(-1, 2)};
    case 2: return {Rational(0), Rational(1)};
    default: return {Rational(1, 2)};
  }
}

}  // namespace oddwheel
