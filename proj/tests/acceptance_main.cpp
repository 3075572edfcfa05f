// End-to-end acceptance checks. Each check prints exactly one line,
// "pass" or "FAIL", with the measured quantity it hinges on; the process
// exits with the number of failed checks.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oddwheel/bounds.hpp"
#include "oddwheel/construct.hpp"
#include "oddwheel/detect.hpp"
#include "oddwheel/graph.hpp"
#include "oddwheel/quotient.hpp"
#include "oddwheel/rational.hpp"
#include "oddwheel/search.hpp"
#include "oddwheel/spectral.hpp"

using namespace oddwheel;

namespace {

double now_s() {
  using clk = std::chrono::steady_clock;
  static const clk::time_point t0 = clk::now();
  return std::chrono::duration<double>(clk::now() - t0).count();
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(i, j);
  return g;
}

// 1. Exhaustive edge maxima at n = 5, 6, 7 match the closed formula and,
//    at 6 and 7, the constructed extremal graphs, within a 2 minute budget.
bool check_small_edge_optima(std::string& detail) {
  double start = now_s();
  SearchOptions opt;
  opt.isomorph_reduce = true;
  bool ok = true;
  for (int n : {5, 6, 7}) {
    SearchReport r = brute_force_ex(n, 2, opt);
    if (r.optimum_edges != ex_w5(n)) ok = false;
    if (n >= 6) {
      std::vector<std::string> want;
      for (const Graph& g : ex_w5_graph(n))
        want.push_back(graph6_encode(canonical_form(g)));
      std::sort(want.begin(), want.end());
      if (r.argmax != want) ok = false;
    }
  }
  double elapsed = now_s() - start;
  if (elapsed >= 120.0) ok = false;
  char buf[128];
  std::snprintf(buf, sizeof buf, "optima 8/11/15 verified in %.1fs (budget 120s)",
                elapsed);
  detail = buf;
  return ok;
}

// 2. The half-split candidate beats the (n + k - 1)/2 radius bound with
//    slack above 1/(2n), certified to residual 1e-10.
bool check_radius_lower_bound(std::string& detail) {
  bool ok = true;
  double min_slack = 1e300;
  for (int k : {3, 6, 7}) {
    for (long long n : {4LL * k, 50LL, 100LL}) {
      SpectralResult r = spectral_radius(tilde_g(n, k));
      double margin = r.lambda1 - (static_cast<double>(n) + k - 1) / 2.0;
      double slack = margin - 1.0 / (2.0 * static_cast<double>(n));
      min_slack = std::min(min_slack, slack);
      if (!(margin > 1.0 / (2.0 * static_cast<double>(n)))) ok = false;
      if (!(r.residual <= 1e-10)) ok = false;
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "9 instances, min slack past 1/(2n): %.6f",
                min_slack);
  detail = buf;
  return ok;
}

// 3. For k = 3 the computed radius of the candidate equals the largest
//    root of its cubic to 1e-8.
bool check_cubic_agreement(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  for (long long n : {20, 21, 23, 40, 41, 43}) {
    Rational s = select_s(n, 3).front();
    double lam = spectral_radius(spex_candidate(n, 3, s)).lambda1;
    double root = largest_root(char_poly_ps(n, 3, s));
    worst = std::max(worst, std::abs(lam - root));
    if (!(std::abs(lam - root) <= 1e-8)) ok = false;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max |lambda1 - root| = %.3g (cap 1e-8)",
                worst);
  detail = buf;
  return ok;
}

// 4. Coefficient identities between shifted cubics hold in exact arithmetic
//    on a 50-point (n, k) grid.
bool check_shift_identities(std::string& detail) {
  int exact = 0;
  for (int i = 0; i < 50; ++i) {
    long long n = 6 + i;
    int k = 3 + (i % 6);
    bool point_ok = true;
    for (const Rational& a : {Rational(1, 2), Rational(1)}) {
      CubicPoly pa = char_poly_ps(n, k, a);
      CubicPoly pm = char_poly_ps(n, k, -a);
      if (!(pa.c2 == pm.c2 && pa.c1 == pm.c1 &&
            pa.c0 - pm.c0 == Rational(-4) * a))
        point_ok = false;
    }
    CubicPoly p0 = char_poly_ps(n, k, Rational(0));
    CubicPoly p1 = char_poly_ps(n, k, Rational(1));
    if (!(p0.c2 == p1.c2 && p0.c1 - p1.c1 == Rational(-1) &&
          p0.c0 - p1.c0 == Rational(3)))
      point_ok = false;
    if (point_ok) ++exact;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d/50 grid points exact", exact);
  detail = buf;
  return exact == 50;
}

// 5. Between the two 2x2 comparison matrices, the imbalanced one wins
//    strictly at every n in 6, 10, ..., 102.
bool check_two_cell_comparison(std::string& detail) {
  bool ok = true;
  double min_margin = 1e300;
  long long at = 0;
  for (long long n = 6; n <= 102; n += 4) {
    double h = static_cast<double>(n) / 2.0;
    double a = eig2_largest(1.0, h - 1.0, h + 1.0, 1.0);
    double b = eig2_largest(h, 1.0, h - 1.0, 1.0);
    if (a - b < min_margin) {
      min_margin = a - b;
      at = n;
    }
    if (!(a > b)) ok = false;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "min margin %.6f at n = %lld", min_margin, at);
  detail = buf;
  return ok;
}

// 6. The two-cell join bound is never exceeded over 200 random joins and is
//    tight when both sides are regular.
bool check_join_bound(std::string& detail) {
  std::mt19937_64 rng(90210);
  bool ok = true;
  double max_over = -1e300, max_eq_gap = 0.0;
  int regular_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph a(1), b(1);
    if (trial % 5 == 0) {
      // a guaranteed regular x regular pair
      int x = 3 + static_cast<int>(rng() % 13);
      int y = 3 + static_cast<int>(rng() % 13);
      a = (trial % 10 == 0) ? cycle_graph(x) : complete_graph(x);
      b = (trial % 15 == 0) ? Graph(y) : cycle_graph(y);
    } else {
      a = random_graph(rng, 1 + static_cast<int>(rng() % 15),
                       static_cast<int>(rng() % 101));
      b = random_graph(rng, 1 + static_cast<int>(rng() % 15),
                       static_cast<int>(rng() % 101));
    }
    double lam = spectral_radius(join(a, b)).lambda1;
    double bound = join_upper_bound(a, b);
    max_over = std::max(max_over, lam - bound);
    if (lam > bound + 1e-9) ok = false;
    if (is_regular(a) && is_regular(b)) {
      ++regular_pairs;
      max_eq_gap = std::max(max_eq_gap, std::abs(lam - bound));
      if (std::abs(lam - bound) > 1e-9) ok = false;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "200 joins, worst excess %.3g; %d regular pairs, worst "
                "equality gap %.3g",
                max_over, regular_pairs, max_eq_gap);
  detail = buf;
  return ok && regular_pairs >= 30;
}

// 7. Every corpus graph whose radius clears n/2 also clears the edge lower
//    bound e > lambda1^2 - 6 t / n.
bool check_edge_lower_bound(std::string& detail) {
  std::vector<Graph> corpus;
  for (long long n = 6; n <= 30; ++n)
    for (const Graph& g : ex_w5_graph(n)) corpus.push_back(g);
  for (long long n : {26, 40, 60}) {
    corpus.push_back(spex_candidate(n, 4, Rational(0)));
    corpus.push_back(tilde_g(n, 3));
    for (const Graph& g : yuan_extremal(n, 3)) corpus.push_back(g);
  }
  for (int k = 3; k <= 8; ++k) corpus.push_back(u_family(k, 4 * k + 1));
  for (int n = 3; n <= 25; ++n) corpus.push_back(complete_graph(n));
  for (int a = 2; a <= 12; a += 2)
    for (int b = a; b <= 12; b += 3) corpus.push_back(complete_bipartite(a, b));
  for (int n = 3; n <= 12; ++n) corpus.push_back(cycle_graph(n));
  std::mt19937_64 rng(1337);
  for (int trial = 0; trial < 100; ++trial)
    corpus.push_back(random_graph(rng, 4 + static_cast<int>(rng() % 21),
                                  20 + static_cast<int>(rng() % 76)));
  int applicable = 0, violations = 0;
  for (const Graph& g : corpus) {
    EdgeBoundCheck r = edge_lower_bound_holds(g);
    if (r.applicable) ++applicable;
    if (!r.holds) ++violations;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%zu graphs, %d above n/2, %d violations", corpus.size(),
                applicable, violations);
  detail = buf;
  return violations == 0 && applicable > 0;
}

// 8. The packing family keeps its degree, star, and path guarantees across
//    k = 3..8, and the flagship candidates stay wheel-free.
bool check_family_invariants(std::string& detail) {
  bool ok = true;
  int families = 0, candidates = 0;
  for (int k = 3; k <= 8; ++k) {
    for (long long m = 2 * k; m <= 2 * k + 40; ++m) {
      Graph g = u_family(k, m);
      int deficient = 0;
      for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == k - 2)
          ++deficient;
        else if (d != k - 1)
          ok = false;
      }
      if (deficient != (((k - 1) * m) % 2 != 0 ? 1 : 0)) ok = false;
      if (max_degree(g) != k - 1) ok = false;  // K_{1,k} would need degree k
      if (contains_path(g, 2 * k - 1).has_value()) ok = false;
      ++families;
    }
  }
  for (int k : {3, 6, 7}) {
    for (long long n : {8LL * k, 100LL}) {
      for (const Rational& s : select_s(n, k)) {
        if (!is_wheel_free(spex_candidate(n, k, s), k)) ok = false;
        ++candidates;
      }
      for (const Graph& g : yuan_extremal(n, k)) {
        if (!is_wheel_free(g, k)) ok = false;
        ++candidates;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d family members, %d candidates wheel-free",
                families, candidates);
  detail = buf;
  return ok;
}

// 9. For k = 4 at n == 2 (mod 4), the two tied imbalances give radii within
//    3/n of each other.
bool check_tied_imbalances(std::string& detail) {
  bool ok = true;
  std::string gaps;
  for (long long n : {26, 50, 102}) {
    double l0 = spectral_radius(spex_candidate(n, 4, Rational(0))).lambda1;
    double l1 = spectral_radius(spex_candidate(n, 4, Rational(1))).lambda1;
    double gap = std::abs(l1 - l0);
    if (!(gap <= 3.0 / static_cast<double>(n))) ok = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%sn=%lld: gap*n=%.3f",
                  gaps.empty() ? "" : ", ", n, gap * n);
    gaps += buf;
  }
  detail = gaps + " (cap 3)";
  return ok;
}

// 10. Sharded spectral searches serialize to byte-identical reports.
bool check_shard_determinism(std::string& detail) {
  SearchOptions one;
  std::string want = search_report_json(brute_force_spex(6, 2, one), false);
  bool ok = true;
  for (int shards : {2, 4}) {
    SearchOptions opt;
    opt.shards = shards;
    if (search_report_json(brute_force_spex(6, 2, opt), false) != want)
      ok = false;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "1/2/4 shards, %zu-byte report", want.size());
  detail = buf;
  return ok;
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    bool (*run)(std::string&);
  };
  const Check checks[] = {
      {"exhaustive edge optima at n=5,6,7", check_small_edge_optima},
      {"radius lower bound with 1/(2n) slack", check_radius_lower_bound},
      {"radius equals cubic root for k=3", check_cubic_agreement},
      {"exact cubic shift identities", check_shift_identities},
      {"two-cell matrix comparison", check_two_cell_comparison},
      {"join bound safety and tightness", check_join_bound},
      {"edge lower bound on the corpus", check_edge_lower_bound},
      {"family and candidate invariants", check_family_invariants},
      {"tied imbalance radius gap, k=4", check_tied_imbalances},
      {"shard-count determinism", check_shard_determinism},
  };
  int failures = 0;
  int idx = 0;
  for (const Check& c : checks) {
    ++idx;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%2d/10] %s  %s (%s)\n", idx, ok ? "pass" : "FAIL", c.name,
                detail.c_str());
  }
  if (failures == 0)
    std::printf("all checks passed\n");
  else
    std::printf("%d check(s) failed\n", failures);
  return failures;
}
