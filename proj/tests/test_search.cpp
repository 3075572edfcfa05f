#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oddwheel/bounds.hpp"
#include "oddwheel/construct.hpp"
#include "oddwheel/detect.hpp"
#include "oddwheel/graph.hpp"
#include "oddwheel/search.hpp"
#include "oddwheel/spectral.hpp"

using namespace oddwheel;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("exhaustive edge search, labeled space") {
  SearchOptions opt;
  SearchReport r5 = brute_force_ex(5, 2, opt);
  CHECK(r5.optimum_edges == 8);
  CHECK(r5.graphs_scanned == 1024);
  CHECK(r5.wheel_free_count == 998);
  REQUIRE(r5.argmax.size() == 1);
  CHECK(r5.argmax[0] == graph6_encode(canonical_form(ex_w5_graph(5)[0])));
  CHECK(r5.argmax[0] == "DN{");

  SearchReport r6 = brute_force_ex(6, 2, opt);
  CHECK(r6.optimum_edges == 11);
  CHECK(r6.graphs_scanned == 32768);
  CHECK(r6.wheel_free_count == 29156);
  REQUIRE(r6.argmax.size() == 2);
  // the two tied bipartition shapes, canonically encoded
  std::vector<std::string> want;
  for (const Graph& g : ex_w5_graph(6))
    want.push_back(graph6_encode(canonical_form(g)));
  std::sort(want.begin(), want.end());
  CHECK(r6.argmax == want);
  CHECK(r6.argmax == std::vector<std::string>({"EK~w", "ENzg"}));
}

TEST_CASE("exhaustive edge search, one representative per class") {
  SearchOptions opt;
  opt.isomorph_reduce = true;
  SearchReport r5 = brute_force_ex(5, 2, opt);
  CHECK(r5.optimum_edges == 8);
  CHECK(r5.wheel_free_count == 31);
  CHECK(r5.argmax == std::vector<std::string>{"DN{"});

  SearchReport r6 = brute_force_ex(6, 2, opt);
  CHECK(r6.optimum_edges == 11);
  CHECK(r6.wheel_free_count == 130);
  CHECK(r6.argmax == std::vector<std::string>({"EK~w", "ENzg"}));

  CHECK(brute_force_ex(7, 2, opt).optimum_edges == ex_w5(7));
  CHECK(brute_force_ex(8, 2, opt).optimum_edges == ex_w5(8));
}

TEST_CASE("exhaustive spectral search") {
  SearchOptions opt;
  SearchReport r4 = brute_force_spex(4, 2, opt);
  CHECK(r4.objective == "lambda1");
  CHECK(r4.graphs_scanned == 64);
  CHECK(r4.wheel_free_count == 64);  // a 5-wheel needs five vertices
  CHECK(r4.optimum_lambda1 == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(r4.argmax == std::vector<std::string>{"C~"});

  SearchReport r5 = brute_force_spex(5, 2, opt);
  // the edge-extremal graph is one feasible point
  double lower = spectral_radius(ex_w5_graph(5)[0]).lambda1;
  CHECK(r5.optimum_lambda1 >= lower - 1e-9);
  REQUIRE(!r5.argmax.empty());
  for (const std::string& s : r5.argmax) {
    Graph g = graph6_decode(s);
    CHECK(is_wheel_free(g, 2));
    CHECK(spectral_radius(g).lambda1 ==
          doctest::Approx(r5.optimum_lambda1).epsilon(1e-8));
  }
}

TEST_CASE("shard and thread counts do not change reports") {
  for (bool iso : {false, true}) {
    SearchOptions base;
    base.isomorph_reduce = iso;
    std::string want_ex = search_report_json(brute_force_ex(6, 2, base), false);
    std::string want_sp =
        search_report_json(brute_force_spex(6, 2, base), false);
    for (int shards : {2, 4, 8}) {
      for (int threads : {1, 3}) {
        SearchOptions opt = base;
        opt.shards = shards;
        opt.threads = threads;
        CAPTURE(iso);
        CAPTURE(shards);
        CAPTURE(threads);
        CHECK(search_report_json(brute_force_ex(6, 2, opt), false) == want_ex);
        CHECK(search_report_json(brute_force_spex(6, 2, opt), false) ==
              want_sp);
      }
    }
  }
  // more shards than work units: empty shards merge away
  SearchOptions iso1;
  iso1.isomorph_reduce = true;
  SearchOptions iso100 = iso1;
  iso100.shards = 100;
  CHECK(search_report_json(brute_force_ex(5, 2, iso100), false) ==
        search_report_json(brute_force_ex(5, 2, iso1), false));
}

TEST_CASE("report serialization, golden instance") {
  SearchOptions opt;
  SearchReport r = brute_force_ex(5, 2, opt);
  const std::string want = R"({
  "schema_version": 1,
  "n": 5,
  "k": 2,
  "objective": "edges",
  "optimum": 8,
  "graphs_scanned": 1024,
  "wheel_free_count": 998,
  "argmax": [
    "DN{"
  ]
}
)";
  CHECK(search_report_json(r, false) == want);
  // timing variant appends exactly one field
  std::string timed = search_report_json(r, true);
  CHECK(timed.find("\"wall_time_s\":") != std::string::npos);
  CHECK(search_report_json(r, false).find("wall_time_s") == std::string::npos);
}

TEST_CASE("enumeration counts") {
  long long labeled = 0;
  enumerate_wheel_free(5, 2, false, [&](const Graph&) { ++labeled; });
  CHECK(labeled == 998);

  long long classes = 0;
  enumerate_wheel_free(5, 2, true, [&](const Graph& g) {
    ++classes;
    CHECK(is_wheel_free(g, 2));
    CHECK(canonical_form(g) == g);
  });
  CHECK(classes == 31);

  long long six = 0;
  enumerate_wheel_free(6, 2, true, [&](const Graph&) { ++six; });
  CHECK(six == 130);

  // k = 5 needs eleven vertices for a wheel: these are all graphs
  const long long all_counts[] = {11, 34, 156, 1044, 12346};
  for (int n = 4; n <= 8; ++n) {
    long long cnt = 0;
    enumerate_wheel_free(n, 5, true, [&](const Graph&) { ++cnt; });
    CHECK(cnt == all_counts[n - 4]);
  }

  CHECK_THROWS_AS(enumerate_wheel_free(8, 2, false, [](const Graph&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_wheel_free(0, 2, true, [](const Graph&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_wheel_free(5, 1, true, [](const Graph&) {}),
                  std::invalid_argument);
}

TEST_CASE("canonical form") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge(i, j);
    Graph c = canonical_form(g);
    CHECK(canonical_form(c) == c);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(permuted(g, perm)) == c);
  }
  // same degree sequence, different graphs
  CHECK(!(canonical_form(cycle_graph(6)) ==
          canonical_form(disjoint_union({cycle_graph(3), cycle_graph(3)}))));
  CHECK(canonical_form(complete_graph(7)) == complete_graph(7));
  CHECK_THROWS_AS(canonical_form(Graph(12)), std::invalid_argument);
}

TEST_CASE("local spectral search improves a slack start") {
  Graph start = complete_bipartite(3, 3);
  Graph out = local_search_spex(start, 2, 10000);
  CHECK(is_wheel_free(out, 2));
  double lam = spectral_radius(out).lambda1;
  CHECK(lam > 3.05);  // an interior edge is available and helps
  CHECK(out.edge_count() > start.edge_count());
}

TEST_CASE("local spectral search leaves optima alone") {
  SearchOptions opt;
  SearchReport r6 = brute_force_spex(6, 2, opt);
  Graph top = graph6_decode(r6.argmax[0]);
  CHECK(local_search_spex(top, 2, 100000) == top);

  for (long long n : {20, 24, 30}) {
    Graph g = spex_candidate(n, 3, select_s(n, 3).front());
    CAPTURE(n);
    CHECK(local_search_spex(g, 3, 1000000) == g);
  }
}

TEST_CASE("local search edge cases") {
  Graph k33 = complete_bipartite(3, 3);
  CHECK(local_search_spex(k33, 2, 0) == k33);  // no budget, no move
  CHECK_THROWS_AS(local_search_spex(join(Graph(1), cycle_graph(4)), 2, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_search_spex(k33, 1, 100), std::invalid_argument);
}

TEST_CASE("search input validation") {
  SearchOptions opt;
  CHECK_THROWS_AS(brute_force_ex(9, 2, opt), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_ex(1, 2, opt), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_ex(8, 2, opt), std::invalid_argument);  // labeled
  CHECK_THROWS_AS(brute_force_ex(6, 1, opt), std::invalid_argument);
  SearchOptions bad = opt;
  bad.shards = 0;
  CHECK_THROWS_AS(brute_force_ex(5, 2, bad), std::invalid_argument);
  bad = opt;
  bad.threads = 0;
  CHECK_THROWS_AS(brute_force_ex(5, 2, bad), std::invalid_argument);
  bad = opt;
  bad.tol = -1.0;
  CHECK_THROWS_AS(brute_force_spex(5, 2, bad), std::invalid_argument);
  bad = opt;
  bad.eig_max_iter = 0;
  CHECK_THROWS_AS(brute_force_spex(5, 2, bad), std::invalid_argument);
}
