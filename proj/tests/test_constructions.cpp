#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "satlab/binom.hpp"
#include "satlab/canonical.hpp"
#include "satlab/cliques.hpp"
#include "satlab/coloring.hpp"
#include "satlab/constructions.hpp"
#include "satlab/errors.hpp"
#include "satlab/graph.hpp"
#include "satlab/saturation.hpp"
#include "oracles.hpp"

using namespace satlab;

namespace {

int label_count(const Graph& g, const std::string& want) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.label(v) == want) ++c;
  return c;
}

int r_neighbours(const Graph& g, int v) {
  int c = 0;
  g.neighbors(v).for_each([&](int w) {
    if (g.label(w) == "R") ++c;
  });
  return c;
}

} // namespace

TEST_CASE("subset family hits the golden orders and sizes") {
  const std::pair<int, long long> want[] = {
      {10, 15}, {26, 70}, {78, 315}, {262, 1386}};
  for (int t = 3; t <= 6; ++t) {
    Graph g = build_gt(t);
    CHECK(g.order() == want[t - 3].first);
    CHECK(g.edge_count() == want[t - 3].second);
    CHECK(label_count(g, "S") == 2 * (t - 1));
    CHECK(label_count(g, "R") == binom_ll(2 * (t - 1), t - 1));
  }
  CHECK_THROWS_AS(build_gt(2), ParameterError);
}

TEST_CASE("subset family structure: degrees, matching, freeness") {
  for (int t = 3; t <= 5; ++t) {
    Graph g = build_gt(t);
    int s = 2 * (t - 1);
    for (int v = 0; v < g.order(); ++v) {
      if (g.label(v) == "S") {
        CHECK(g.degree(v) == binom_ll(s - 1, t - 2));
        CHECK(r_neighbours(g, v) == g.degree(v));  // S is independent
      } else {
        CHECK(g.degree(v) == t);
        CHECK(r_neighbours(g, v) == 1);  // complement partner only
      }
    }
    CHECK(is_kr_free(g, 3));
    CHECK(is_saturated(g, 3));
  }
  CHECK(is_saturated(build_gt(6), 3));
  CHECK(oracles::is_saturated(build_gt(3), 3));
  CHECK(oracles::is_saturated(build_gt(4), 3));

  CHECK(isomorphic(build_gt(3), build_p()));
  CHECK(chromatic_number(build_gt(3)) == 3);
  CHECK(chromatic_number(build_gt(4)) == 3);
}

TEST_CASE("apex variant adds one dominating-the-core vertex") {
  Graph a3 = build_gt_prime(3);
  CHECK(a3.order() == 11);
  CHECK(a3.edge_count() == 19);
  Graph a4 = build_gt_prime(4);
  CHECK(a4.order() == 27);
  CHECK(a4.edge_count() == 76);
  for (const Graph* g : {&a3, &a4}) {
    CHECK(label_count(*g, "apex") == 1);
    CHECK(is_saturated(*g, 3));
  }
  CHECK(oracles::is_saturated(a3, 3));
  int apex = 10;
  CHECK(a3.label(apex) == "apex");
  CHECK(a3.degree(apex) == 4);  // joined to all of S
}

TEST_CASE("trimming matched pairs keeps saturation at every size") {
  Graph a3 = build_gt_prime(3);
  for (int keep = 0; keep <= 3; ++keep) {
    Graph g = remove_matched_pairs(a3, keep);
    CHECK(g.order() == 2 * keep + 5);
    CHECK(g.edge_count() == 5 * keep + 4);
    CHECK(is_saturated(g, 3));
    CHECK(oracles::is_saturated(g, 3));
  }
  CHECK(remove_matched_pairs(a3, 3) == a3);

  Graph a4 = build_gt_prime(4);
  for (int keep : {0, 1, 5, 10}) {
    Graph g = remove_matched_pairs(a4, keep);
    CHECK(g.order() == 2 * keep + 7);
    CHECK(g.edge_count() == 7 * keep + 6);
    CHECK(is_saturated(g, 3));
  }

  CHECK_THROWS_AS(remove_matched_pairs(a3, 4), ParameterError);
  CHECK_THROWS_AS(remove_matched_pairs(a3, -1), ParameterError);
  CHECK_THROWS_AS(remove_matched_pairs(build_gt(3), 1), ParameterError);
  CHECK_THROWS_AS(remove_matched_pairs(build_p(), 1), ParameterError);
}

TEST_CASE("triple apex variant pins a degree three vertex") {
  Graph g = build_gt_double_prime(3);
  CHECK(g.order() == 14);
  CHECK(g.edge_count() == 29);
  CHECK(label_count(g, "apex") == 3);
  CHECK(label_count(g, "top") == 1);
  CHECK(*g.stats().min_degree == 3);
  int top = 13;
  CHECK(g.label(top) == "top");
  CHECK(g.degree(top) == 3);
  // the top vertex is the unique one of minimum degree
  for (int v = 0; v < top; ++v) CHECK(g.degree(v) >= 4);
  CHECK(is_saturated(g, 3));
  CHECK(oracles::is_saturated(g, 3));

  Graph g4 = build_gt_double_prime(4);
  CHECK(g4.order() == 26 + 4);
  CHECK(is_saturated(g4, 3));
}

TEST_CASE("doubled subset family golden sizes and saturation") {
  const std::pair<int, long long> want[] = {{16, 36}, {46, 160}, {148, 700}};
  for (int t = 4; t <= 6; ++t) {
    Graph g = build_ht(t);
    CHECK(g.order() == want[t - 4].first);
    CHECK(g.edge_count() == want[t - 4].second);
    CHECK(is_saturated(g, 3));
  }
  CHECK(oracles::is_saturated(build_ht(4), 3));
  CHECK_THROWS_AS(build_ht(3), ParameterError);
}

TEST_CASE("sporadic small graphs") {
  Graph p = build_p();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  auto pst = p.stats();
  CHECK(*pst.min_degree == 3);
  CHECK(*pst.max_degree == 3);
  CHECK(is_saturated(p, 3));
  CHECK(oracles::is_saturated(p, 3));

  Graph q = build_q();
  CHECK(q.order() == 13);
  CHECK(q.edge_count() == 24);
  auto qst = q.stats();
  CHECK(*qst.min_degree == 3);
  CHECK(*qst.max_degree == 4);
  CHECK(is_saturated(q, 3));
  CHECK(oracles::is_saturated(q, 3));
  CHECK_FALSE(isomorphic(q.induced(VertexSet::full(13)), p));

  Graph c5 = build_c5();
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(is_saturated(c5, 3));

  Graph k22 = build_k22();
  CHECK(k22.order() == 4);
  CHECK(k22.edge_count() == 4);
  CHECK(is_saturated(k22, 3));
  CHECK(chromatic_number(k22) == 2);

  CHECK(build_complete(4) == Graph::from_edges(
                                 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("clique plus independent set is saturated one clique short") {
  Graph e = build_ehm(10, 4);
  CHECK(e.order() == 10);
  CHECK(e.edge_count() == 1 + 2 * 8);
  CHECK(is_saturated(e, 4));
  CHECK(oracles::is_saturated(e, 4));

  CHECK(isomorphic(build_ehm(5, 3),
                   Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})));
  CHECK(build_ehm(6, 2) == Graph(6));
  CHECK(build_ehm(3, 5) == build_complete(3));
  CHECK(is_saturated(build_ehm(4, 4), 4));

  CHECK_THROWS_AS(build_ehm(1, 4), ParameterError);
  CHECK_THROWS_AS(build_ehm(3, 1), ParameterError);
}

TEST_CASE("blow-ups and cones preserve saturation") {
  Graph b = blow_up(build_c5(), {2, 1, 1, 1, 1});
  CHECK(is_saturated(b, 3));
  CHECK(oracles::is_saturated(b, 3));

  Graph w = add_conical(build_c5(), 1);
  CHECK(is_saturated(w, 4));
  CHECK(oracles::is_saturated(w, 4));
  CHECK(is_saturated(add_conical(build_p(), 2), 5));
}

TEST_CASE("tight cover picks the documented branch and certificates") {
  auto a = build_tight_cover(3, 9, 29);
  CHECK(a.branch == 'A');
  CHECK(a.t == 3);
  CHECK(a.conical_added == 0);
  CHECK(a.graph.order() == 23);
  CHECK(a.graph.edge_count() == 56);
  CHECK(int(a.matching_certificate.size()) >= binom_ll(4, 2) / 2);
  CHECK(is_saturated(a.graph, 3));

  auto b = build_tight_cover(3, 4, 36);
  CHECK(b.branch == 'B');
  CHECK(b.t == 5);
  CHECK(b.graph.order() == 17);
  CHECK(b.graph.edge_count() == 44);
  CHECK(int(b.matching_certificate.size()) == 4);
  CHECK(is_saturated(b.graph, 3));

  auto c = build_tight_cover(5, 9, 29);
  CHECK(c.branch == 'A');
  CHECK(c.conical_added == 2);
  CHECK(c.graph.order() == 25);
  CHECK(is_saturated(c.graph, 5));

  for (const auto* res : {&a, &b, &c}) {
    VertexSet used(res->graph.order());
    for (auto [u, v] : res->matching_certificate) {
      CHECK(res->graph.adjacent(u, v));
      CHECK_FALSE(used.contains(u));
      CHECK_FALSE(used.contains(v));
      used.add(u);
      used.add(v);
    }
  }

  CHECK_THROWS_AS(build_tight_cover(2, 5, 5), ParameterError);
  CHECK_THROWS_AS(build_tight_cover(3, 0, 5), ParameterError);
  CHECK_THROWS_AS(build_tight_cover(3, 100, 10), Infeasible);
  CHECK_THROWS_AS(build_tight_cover(3, 4, 100), Infeasible);
}
