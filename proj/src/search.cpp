#include "oddwheel/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"
#include "oddwheel/detect.hpp"
#include "oddwheel/errors.hpp"
#include "oddwheel/spectral.hpp"

namespace oddwheel {
namespace {

// Pair p <-> bit p of an edge mask, column-major: (0,1), (0,2), (1,2),
// (0,3), ... Matches the graph6 bit order, so ascending masks enumerate
// graphs in ascending graph6 order.
std::vector<std::pair<int, int>> pair_table(int n) {
  std::vector<std::pair<int, int>> ps;
  ps.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) ps.push_back({i, j});
  return ps;
}

Graph graph_from_mask(int n, std::uint64_t mask,
                      const std::vector<std::pair<int, int>>& ps) {
  Graph g(n);
  while (mask != 0) {
    int p = std::countr_zero(mask);
    mask &= mask - 1;
    g.add_edge(ps[static_cast<std::size_t>(p)].first,
               ps[static_cast<std::size_t>(p)].second);
  }
  return g;
}

std::vector<std::uint8_t> colmajor_bits(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  return bits;
}

// Min-lex canonical label search. Positions are filled one vertex at a
// time; filling position p determines column p of the upper triangle
// (adjacency to the already-placed vertices), so partial strings compare
// against the incumbent column by column. With a target string the search
// only asks whether any permutation beats it and exits on the first win.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> order;  // candidate vertices, low degree first
  std::vector<int> place;
  std::vector<char> used;
  std::vector<std::uint8_t> cur;
  std::vector<std::uint8_t> best;
  bool best_init = false;
  bool stop_on_smaller = false;
  bool found_smaller = false;

  explicit CanonSearch(const Graph& gr) : g(gr), n(gr.vertex_count()) {
    order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da < db : a < b;
    });
    place.assign(static_cast<std::size_t>(n), -1);
    used.assign(static_cast<std::size_t>(n), 0);
    cur.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  }

  void run(const std::vector<std::uint8_t>* target) {
    if (target != nullptr) {
      best = *target;
      best_init = true;
      stop_on_smaller = true;
    }
    dfs(0, true);
  }

  void dfs(int p, bool tight) {
    if (found_smaller) return;
    if (p == n) {
      if (!best_init) {
        best = cur;
        best_init = true;
      } else if (!tight && std::lexicographical_compare(cur.begin(), cur.end(),
                                                        best.begin(),
                                                        best.end())) {
        // best may have dropped since this branch diverged, so compare in
        // full rather than trusting the stale first-difference.
        best = cur;
      }
      return;
    }
    std::size_t off = static_cast<std::size_t>(p) * (p - 1) / 2;
    for (int v : order) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool newtight = tight;
      if (best_init && tight) {
        int cmp = 0;
        for (int i = 0; i < p; ++i) {
          std::uint8_t b = g.has_edge(place[static_cast<std::size_t>(i)], v);
          cur[off + static_cast<std::size_t>(i)] = b;
          if (cmp == 0 && b != best[off + static_cast<std::size_t>(i)])
            cmp = b < best[off + static_cast<std::size_t>(i)] ? -1 : 1;
          if (cmp > 0) break;
        }
        if (cmp > 0) continue;  // prefix beaten, prune
        if (cmp < 0) {
          if (stop_on_smaller) {
            found_smaller = true;
            return;
          }
          newtight = false;
        }
      } else {
        for (int i = 0; i < p; ++i)
          cur[off + static_cast<std::size_t>(i)] =
              g.has_edge(place[static_cast<std::size_t>(i)], v);
      }
      place[static_cast<std::size_t>(p)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      dfs(p + 1, newtight);
      used[static_cast<std::size_t>(v)] = 0;
      if (found_smaller) return;
    }
  }
};

bool is_canon_labeled(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<std::uint8_t> target = colmajor_bits(g);
  CanonSearch cs(g);
  cs.run(&target);
  return !cs.found_smaller;
}

// Parent with one extra vertex adjacent to the subset in `sub`.
Graph extend_graph(const Graph& parent, std::uint64_t sub) {
  int v = parent.vertex_count();
  Graph h(v + 1);
  for (int j = 1; j < v; ++j)
    for (int i = 0; i < j; ++i)
      if (parent.has_edge(i, j)) h.add_edge(i, j);
  while (sub != 0) {
    int i = std::countr_zero(sub);
    sub &= sub - 1;
    h.add_edge(i, v);
  }
  return h;
}

// All labeled wheel-free graphs with edge mask in [lo, hi), ascending.
template <typename Fn>
void scan_labeled(int n, int k, std::uint64_t lo, std::uint64_t hi,
                  const std::vector<std::pair<int, int>>& ps, long long& scanned,
                  long long& freecnt, Fn&& fn) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Graph g = graph_from_mask(n, mask, ps);
    ++scanned;
    if (!is_wheel_free(g, k)) continue;
    ++freecnt;
    fn(g);
  }
}

// One canonical representative per wheel-free isomorphism class, by orderly
// vertex augmentation: a canonical graph minus its top vertex is canonical
// (columns 1..v-1 never reference vertex v), and wheel-freeness is closed
// under subgraphs, so growing canonical wheel-free parents by every neighbor
// subset of one new top vertex reaches each class exactly once. The subset
// range [sub_lo, sub_hi) restricts the final level only; that is the shard
// axis. scanned counts final-level candidates before any filtering.
template <typename Fn>
void scan_iso(int n, int k, std::uint64_t sub_lo, std::uint64_t sub_hi,
              long long& scanned, long long& freecnt, Fn&& fn) {
  if (n == 1) {
    if (sub_lo == 0) {
      ++scanned;
      ++freecnt;
      fn(Graph(1));
    }
    return;
  }
  std::vector<Graph> cur = {Graph(1)};
  for (int v = 1; v < n; ++v) {
    bool final_level = v == n - 1;
    std::uint64_t lo = final_level ? sub_lo : 0;
    std::uint64_t hi = final_level ? sub_hi : (std::uint64_t{1} << v);
    std::vector<Graph> next;
    for (const Graph& parent : cur) {
      for (std::uint64_t sub = lo; sub < hi; ++sub) {
        Graph h = extend_graph(parent, sub);
        if (final_level) ++scanned;
        if (!is_wheel_free(h, k)) continue;
        if (!is_canon_labeled(h)) continue;
        if (final_level) {
          ++freecnt;
          fn(h);
        } else {
          next.push_back(std::move(h));
        }
      }
    }
    cur = std::move(next);
  }
}

enum class Objective { kEdges, kLambda1 };

struct ShardOut {
  long long scanned = 0;
  long long freecnt = 0;
  long long best_e = -1;
  double best_l = -HUGE_VAL;
  std::vector<Graph> arg_e;
  std::vector<std::pair<double, Graph>> arg_l;
};

void scan_shard(int n, int k, Objective obj, const SearchOptions& opt,
                std::uint64_t lo, std::uint64_t hi,
                const std::vector<std::pair<int, int>>& ps, ShardOut& out) {
  double tol = opt.tol;
  auto visit = [&](const Graph& g) {
    if (obj == Objective::kEdges) {
      long long e = g.edge_count();
      if (e > out.best_e) {
        out.best_e = e;
        out.arg_e.clear();
      }
      if (e == out.best_e) out.arg_e.push_back(g);
    } else {
      double lam = spectral_radius(g, opt.eig_tol, opt.eig_max_iter).lambda1;
      if (lam > out.best_l) {
        out.best_l = lam;
        std::erase_if(out.arg_l, [&](const std::pair<double, Graph>& c) {
          return c.first < out.best_l - tol;
        });
      }
      if (lam >= out.best_l - tol) out.arg_l.push_back({lam, g});
    }
  };
  if (opt.isomorph_reduce)
    scan_iso(n, k, lo, hi, out.scanned, out.freecnt, visit);
  else
    scan_labeled(n, k, lo, hi, ps, out.scanned, out.freecnt, visit);
}

double round12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

SearchReport brute_force(int n, int k, Objective obj, const SearchOptions& opt) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("exhaustive search supports 2 <= n <= 8");
  if (n == 8 && !opt.isomorph_reduce)
    throw std::invalid_argument(
        "n = 8 labeled space is out of budget; set isomorph_reduce");
  if (k < 2) throw std::invalid_argument("wheel parameter k must be >= 2");
  if (opt.shards < 1) throw std::invalid_argument("shards must be >= 1");
  if (opt.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (!(opt.tol >= 0)) throw std::invalid_argument("tol must be >= 0");
  if (!(opt.eig_tol > 0) || opt.eig_max_iter < 1)
    throw std::invalid_argument("eigensolver settings must be positive");

  auto t0 = std::chrono::steady_clock::now();
  auto ps = pair_table(n);
  std::uint64_t units = opt.isomorph_reduce
                            ? (std::uint64_t{1} << (n - 1))
                            : (std::uint64_t{1} << ps.size());
  int S = opt.shards;
  std::vector<ShardOut> outs(static_cast<std::size_t>(S));
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(S));
  auto run_one = [&](int s) {
    std::uint64_t lo = units * static_cast<std::uint64_t>(s) /
                       static_cast<std::uint64_t>(S);
    std::uint64_t hi = units * static_cast<std::uint64_t>(s + 1) /
                       static_cast<std::uint64_t>(S);
    scan_shard(n, k, obj, opt, lo, hi, ps, outs[static_cast<std::size_t>(s)]);
  };
  int T = std::min(opt.threads, S);
  if (T <= 1) {
    for (int s = 0; s < S; ++s) run_one(s);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
      pool.emplace_back([&]() {
        for (int s = next.fetch_add(1); s < S; s = next.fetch_add(1)) {
          try {
            run_one(s);
          } catch (...) {
            errs[static_cast<std::size_t>(s)] = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  SearchReport rep;
  rep.n = n;
  rep.k = k;
  rep.objective = obj == Objective::kEdges ? "edges" : "lambda1";
  rep.tol = obj == Objective::kLambda1 ? opt.tol : 0.0;
  std::vector<Graph> winners;
  if (obj == Objective::kEdges) {
    long long best = -1;
    for (const ShardOut& o : outs) best = std::max(best, o.best_e);
    rep.optimum_edges = best;
    for (const ShardOut& o : outs)
      if (o.best_e == best)
        winners.insert(winners.end(), o.arg_e.begin(), o.arg_e.end());
  } else {
    double best = -HUGE_VAL;
    for (const ShardOut& o : outs) best = std::max(best, o.best_l);
    rep.optimum_lambda1 = best;
    for (const ShardOut& o : outs)
      for (const auto& c : o.arg_l)
        if (c.first >= best - opt.tol) winners.push_back(c.second);
  }
  for (const ShardOut& o : outs) {
    rep.graphs_scanned += o.scanned;
    rep.wheel_free_count += o.freecnt;
  }

  // Canonical dedupe plus an independent re-check of every winner; a winner
  // that fails wheel-freeness or its objective value voids the whole run.
  for (const Graph& w : winners) {
    Graph c = canonical_form(w);
    if (!is_wheel_free(c, k))
      throw VerificationError("search winner is not wheel-free");
    if (obj == Objective::kEdges) {
      if (c.edge_count() != rep.optimum_edges)
        throw VerificationError("search winner edge count mismatch");
    } else {
      double lam = spectral_radius(c, opt.eig_tol, opt.eig_max_iter).lambda1;
      if (lam < rep.optimum_lambda1 - opt.tol - 1e-8)
        throw VerificationError("search winner spectral radius mismatch");
    }
    rep.argmax.push_back(graph6_encode(c));
  }
  std::sort(rep.argmax.begin(), rep.argmax.end());
  rep.argmax.erase(std::unique(rep.argmax.begin(), rep.argmax.end()),
                   rep.argmax.end());
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace

SearchReport brute_force_ex(int n, int k, const SearchOptions& opt) {
  return brute_force(n, k, Objective::kEdges, opt);
}

SearchReport brute_force_spex(int n, int k, const SearchOptions& opt) {
  return brute_force(n, k, Objective::kLambda1, opt);
}

void enumerate_wheel_free(int n, int k, bool isomorph_reduce,
                          const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= 8");
  if (n == 8 && !isomorph_reduce)
    throw std::invalid_argument(
        "n = 8 labeled space is out of budget; set isomorph_reduce");
  if (k < 2) throw std::invalid_argument("wheel parameter k must be >= 2");
  long long scanned = 0, freecnt = 0;
  if (isomorph_reduce) {
    std::uint64_t hi = n == 1 ? 1 : (std::uint64_t{1} << (n - 1));
    scan_iso(n, k, 0, hi, scanned, freecnt, fn);
  } else {
    auto ps = pair_table(n);
    scan_labeled(n, k, 0, std::uint64_t{1} << ps.size(), ps, scanned, freecnt,
                 fn);
  }
}

Graph canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n > 11)
    throw std::invalid_argument("canonical_form supports n <= 11");
  if (n <= 1) return g;
  CanonSearch cs(g);
  cs.run(nullptr);
  Graph out(n);
  std::size_t p = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++p)
      if (cs.best[p] != 0) out.add_edge(i, j);
  return out;
}

Graph local_search_spex(const Graph& start, int k, long long budget) {
  if (k < 2) throw std::invalid_argument("wheel parameter k must be >= 2");
  if (!is_wheel_free(start, k))
    throw std::invalid_argument("local search start contains an odd wheel");
  int n = start.vertex_count();
  Graph cur = start;
  SpectralResult best = spectral_radius(cur);
  long long evals = 0;
  const double kGain = 1e-10;

  // Candidate order within a round: every add (i, j) ascending, every
  // remove, then every remove+add swap. First strict improvement restarts
  // the round. Edge removal never raises lambda1 and never creates a wheel,
  // so removes skip the wheel check but still spend an evaluation.
  auto solve = [&](bool& out_of_budget) -> double {
    if (evals >= budget) {
      out_of_budget = true;
      return -HUGE_VAL;
    }
    ++evals;
    SpectralResult r = spectral_radius_from(cur, best.vector);
    if (r.lambda1 > best.lambda1 + kGain) {
      best = std::move(r);
      return best.lambda1;
    }
    return -HUGE_VAL;
  };

  bool out_of_budget = false;
  bool improved = true;
  while (improved && !out_of_budget) {
    improved = false;
    for (int i = 0; i < n && !improved && !out_of_budget; ++i) {
      for (int j = i + 1; j < n && !improved && !out_of_budget; ++j) {
        if (cur.has_edge(i, j)) continue;
        cur.add_edge(i, j);
        if (is_wheel_free(cur, k) && solve(out_of_budget) > -HUGE_VAL) {
          improved = true;
          break;
        }
        cur.remove_edge(i, j);
      }
    }
    if (improved || out_of_budget) continue;
    for (int i = 0; i < n && !improved && !out_of_budget; ++i) {
      for (int j = i + 1; j < n && !improved && !out_of_budget; ++j) {
        if (!cur.has_edge(i, j)) continue;
        cur.remove_edge(i, j);
        if (solve(out_of_budget) > -HUGE_VAL) {
          improved = true;
          break;
        }
        cur.add_edge(i, j);
      }
    }
    if (improved || out_of_budget) continue;
    for (int a = 0; a < n && !improved && !out_of_budget; ++a) {
      for (int b = a + 1; b < n && !improved && !out_of_budget; ++b) {
        if (!cur.has_edge(a, b)) continue;
        cur.remove_edge(a, b);
        for (int c = 0; c < n && !improved && !out_of_budget; ++c) {
          for (int d = c + 1; d < n && !improved && !out_of_budget; ++d) {
            if (cur.has_edge(c, d) || (c == a && d == b)) continue;
            cur.add_edge(c, d);
            if (is_wheel_free(cur, k) && solve(out_of_budget) > -HUGE_VAL) {
              improved = true;
              break;
            }
            cur.remove_edge(c, d);
          }
        }
        if (!improved) cur.add_edge(a, b);
      }
    }
  }
  return cur;
}

std::string search_report_json(const SearchReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["n"] = r.n;
  j["k"] = r.k;
  j["objective"] = r.objective;
  if (r.objective == "edges") {
    j["optimum"] = r.optimum_edges;
  } else {
    j["optimum"] = round12(r.optimum_lambda1);
    j["tol"] = round12(r.tol);
  }
  j["graphs_scanned"] = r.graphs_scanned;
  j["wheel_free_count"] = r.wheel_free_count;
  j["argmax"] = r.argmax;
  if (include_timing) j["wall_time_s"] = round12(r.wall_time_s);
  return j.dump(2) + "\n";
}

}  // namespace oddwheel
