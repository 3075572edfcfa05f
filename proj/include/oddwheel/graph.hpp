#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace oddwheel {

// Undirected simple graph on vertices 0..n-1. Adjacency is stored as n rows
// of 64-bit words. For n <= 64 every row is a single word, which is the fast
// kernel the exhaustive searches rely on; larger n just widens the rows, so
// constructors work for n in the hundreds without a separate code path.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edges_; }
  int words_per_row() const { return wpr_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);     // no-op if already present
  void remove_edge(int u, int v);  // no-op if absent

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending

  // Single-word adjacency row; requires n <= 64.
  std::uint64_t row64(int v) const;
  const std::uint64_t* row(int v) const {
    return &bits_[static_cast<std::size_t>(v) * wpr_];
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void check_vertex(int v) const;
  std::uint64_t* mrow(int v) {
    return &bits_[static_cast<std::size_t>(v) * wpr_];
  }

  int n_ = 0;
  int wpr_ = 0;
  long long edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // part A = 0..a-1, part B = a..a+b-1
Graph cycle_graph(int n);                // n >= 3
Graph path_graph(int n);                 // n >= 1

// Join: disjoint union plus all edges between the two sides; g's vertices
// come first.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const std::vector<Graph>& parts);

// Induced subgraph on vs; vertex i of the result is vs[i]. vs must be
// duplicate-free and in range.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

long long triangle_count(const Graph& g);

struct Cut {
  std::uint64_t side_mask = 0;  // one side of the bipartition
  long long cross_edges = 0;
};

// Exhaustive max cut, n <= 28. Among optimal cuts reports the one whose
// side_mask is smallest as an integer (that side never contains vertex n-1).
Cut max_cut_exact(const Graph& g);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

}  // namespace oddwheel
