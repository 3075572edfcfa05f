#pragma once
#include <functional>
#include <string>
#include <vector>

#include "oddwheel/graph.hpp"

namespace oddwheel {

struct SearchOptions {
  int shards = 1;             // static split of the enumeration space
  int threads = 1;            // worker threads (<= shards are used)
  bool isomorph_reduce = false;  // one representative per isomorphism class
  double tol = 1e-9;          // lambda1 tie tolerance (spex objective)
  double eig_tol = 1e-10;     // eigensolver residual tolerance
  long long eig_max_iter = 1'000'000;
};

struct SearchReport {
  int n = 0;
  int k = 0;
  std::string objective;           // "edges" or "lambda1"
  long long optimum_edges = 0;     // objective == "edges"
  double optimum_lambda1 = 0.0;    // objective == "lambda1"
  std::vector<std::string> argmax;  // canonical graph6, sorted, iso-deduped
  long long graphs_scanned = 0;
  long long wheel_free_count = 0;
  double wall_time_s = 0.0;
  double tol = 0.0;  // tie tolerance actually used (spex only)
};

// Exhaustive search over all labeled graphs on n vertices (edge-bitmask
// order) for n <= 7; n == 8 requires isomorph_reduce, which enumerates one
// canonical representative per isomorphism class instead. Sharding splits
// the labeled mask space into contiguous ranges; reports are byte-identical
// for any shard/thread count. Argmax graphs are re-verified (wheel-free and
// objective value) before the report is returned.
SearchReport brute_force_ex(int n, int k, const SearchOptions& opt = {});
SearchReport brute_force_spex(int n, int k, const SearchOptions& opt = {});

// Stream every wheel-free graph on n vertices to fn: all labeled graphs in
// ascending bitmask order, or canonical representatives when isomorph_reduce
// is set. Same size limits as the brute-force searches.
void enumerate_wheel_free(int n, int k, bool isomorph_reduce,
                          const std::function<void(const Graph&)>& fn);

// Min-lex canonical form under vertex relabeling (n <= 11): the labeled
// graph whose column-major upper-triangle bitstring is smallest.
Graph canonical_form(const Graph& g);

// Steepest-free hill climb on lambda1 over wheel-free graphs: scans add,
// remove, then swap moves in lexicographic order and takes the first move
// that keeps the graph wheel-free and improves lambda1 by more than 1e-10.
// Stops at a local maximum or after `budget` candidate evaluations.
Graph local_search_spex(const Graph& start, int k, long long budget);

// Canonical JSON for a report; floats carry 12 significant digits.
// wall_time_s is emitted only when include_timing is set, keeping the
// deterministic payload free of run-dependent fields.
std::string search_report_json(const SearchReport& r, bool include_timing);

}  // namespace oddwheel
