#include "oddwheel/graph.hpp"

#include <bit>
#include <stdexcept>

namespace oddwheel {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  wpr_ = n <= 64 ? 1 : (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop");
  std::uint64_t bit = 1ULL << (v & 63);
  if (mrow(u)[v >> 6] & bit) return;
  mrow(u)[v >> 6] |= bit;
  mrow(v)[u >> 6] |= 1ULL << (u & 63);
  ++edges_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return;
  std::uint64_t bit = 1ULL << (v & 63);
  if (!(mrow(u)[v >> 6] & bit)) return;
  mrow(u)[v >> 6] &= ~bit;
  mrow(v)[u >> 6] &= ~(1ULL << (u & 63));
  --edges_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < wpr_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < wpr_; ++w) {
    std::uint64_t m = r[w];
    while (m) {
      out.push_back(64 * w + std::countr_zero(m));
      m &= m - 1;
    }
  }
  return out;
}

std::uint64_t Graph::row64(int v) const {
  check_vertex(v);
  if (n_ > 64) throw std::invalid_argument("Graph: row64 needs n <= 64");
  return row(v)[0];
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative part");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n >= 1 required");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph join(const Graph& g, const Graph& h) {
  int a = g.vertex_count(), b = h.vertex_count();
  Graph out(a + b);
  for (int u = 0; u < a; ++u)
    for (int v : g.neighbors(u))
      if (u < v) out.add_edge(u, v);
  for (int u = 0; u < b; ++u)
    for (int v : h.neighbors(u))
      if (u < v) out.add_edge(a + u, a + v);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const Graph& p : parts) n += p.vertex_count();
  Graph out(n);
  int base = 0;
  for (const Graph& p : parts) {
    for (int u = 0; u < p.vertex_count(); ++u)
      for (int v : p.neighbors(u))
        if (u < v) out.add_edge(base + u, base + v);
    base += p.vertex_count();
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
  int m = static_cast<int>(vs.size());
  Graph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (vs[i] == vs[j])
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
      if (g.has_edge(vs[i], vs[j])) out.add_edge(i, j);
    }
  return out;
}

long long triangle_count(const Graph& g) {
  int n = g.vertex_count(), wpr = g.words_per_row();
  long long t = 0;
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      // common neighbors above v close a triangle u < v < w exactly once
      const std::uint64_t* ru = g.row(u);
      const std::uint64_t* rv = g.row(v);
      for (int w = v >> 6; w < wpr; ++w) {
        std::uint64_t m = ru[w] & rv[w];
        if (w == (v >> 6)) m &= ~((2ULL << (v & 63)) - 1);
        t += std::popcount(m);
      }
    }
  return t;
}

Cut max_cut_exact(const Graph& g) {
  int n = g.vertex_count();
  if (n > 28) throw std::invalid_argument("max_cut_exact: n <= 28 required");
  if (n <= 1) return Cut{};
  // Gray-code walk over subsets of {0..n-2}; vertex n-1 stays on the fixed
  // side, so each bipartition is visited once via its smaller mask.
  std::vector<std::uint64_t> rows(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = g.row64(v) & ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
    deg[v] = std::popcount(rows[v]);
  }
  std::uint64_t mask = 0;
  long long cut = 0;
  Cut best{0, 0};
  std::uint64_t total = 1ULL << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    long long in_s = std::popcount(rows[b] & mask);
    if (mask & (1ULL << b)) {
      cut += 2 * in_s - deg[b];  // b leaves the mask side
      mask &= ~(1ULL << b);
    } else {
      cut += deg[b] - 2 * in_s;  // b joins the mask side
      mask |= 1ULL << b;
    }
    if (cut > best.cross_edges ||
        (cut == best.cross_edges && mask < best.side_mask)) {
      best.cross_edges = cut;
      best.side_mask = mask;
    }
  }
  return best;
}

}  // namespace oddwheel
