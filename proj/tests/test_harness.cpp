#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "cdv/corpus.hpp"
#include "cdv/errors.hpp"
#include "cdv/harness.hpp"

using namespace cdv;

namespace {

MuBounds interval(int lo, int hi) {
  MuBounds b;
  b.lo = lo;
  b.hi = hi;
  return b;
}

bool has_tag(const Verdict& v, ClassTag t) {
  return std::find(v.classTags.begin(), v.classTags.end(), t) != v.classTags.end();
}

}  // namespace

TEST_CASE("verdict arithmetic") {
  const Verdict k6 = check_conjecture(complete(6), mu_bounds(complete(6)));
  CHECK(k6.outcome == Outcome::Holds);
  CHECK(edge_bound_at(5, 6) == 15);
  const Verdict pet = check_conjecture(petersen(), mu_bounds(petersen()));
  CHECK(pet.outcome == Outcome::Holds);
  CHECK(edge_bound_at(5, 10) == 35);
  // K_{2,2,2,2,2}: 40 edges; at t = 7 the bound is 70 - 28 = 42.
  const Graph k = complete_multipartite({2, 2, 2, 2, 2});
  CHECK(check_conjecture(k, interval(7, 8)).outcome == Outcome::Holds);
  // 40 edges on 10 vertices is above 6n - 21 = 39 and at most 7n - 28 = 42.
  CHECK(check_conjecture(k, interval(6, 7)).outcome == Outcome::Inconclusive);
  CHECK(check_conjecture(k, interval(5, 5)).outcome == Outcome::Violates);
}

TEST_CASE("class tags") {
  const Verdict v = check_conjecture(complete(4), mu_bounds(complete(4)));
  CHECK(has_tag(v, ClassTag::chordal));
  CHECK(has_tag(v, ClassTag::coChordal));
  CHECK(has_tag(v, ClassTag::muAtMost7));
  const Verdict c = check_conjecture(cycle(5), mu_bounds(cycle(5)));
  CHECK_FALSE(has_tag(c, ClassTag::chordal));
  CHECK_FALSE(has_tag(c, ClassTag::coChordal));
  CHECK(has_tag(c, ClassTag::muAtLeastNminus6));
  const Graph big = cycle(20);
  CHECK_FALSE(has_tag(check_conjecture(big, mu_bounds(big)), ClassTag::muAtLeastNminus6));
}

TEST_CASE("campaign over all graphs on n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    auto s = enumerate_graphs(n);
    const CampaignReport r = run_campaign(*s);
    CHECK(r.summary.violates == 0);
    CHECK(r.summary.inconclusive == 0);
    CHECK(r.summary.holds == r.summary.graphs);
    CHECK(r.verdicts.size() == r.summary.graphs);
    for (const Verdict& v : r.verdicts) {
      if (has_tag(v, ClassTag::chordal) || has_tag(v, ClassTag::coChordal)) CHECK(v.outcome == Outcome::Holds);
    }
  }
}

TEST_CASE("campaign JSONL round trip and parallel order") {
  const std::string path = (std::filesystem::temp_directory_path() / "cdv_test_campaign.jsonl").string();
  auto s = enumerate_graphs(6);
  CampaignOptions opts;
  opts.jsonlPath = path;
  opts.jobs = 3;
  const CampaignReport r = run_campaign(*s, opts);
  const CampaignSummary back = summarize_jsonl(path);
  CHECK(back.same_counts(r.summary));
  CHECK(back.graphs == 156);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  for (const char* field : {"\"canon\"", "\"g6\"", "\"n\"", "\"m\"", "\"lo\"", "\"hi\"", "\"outcome\"", "\"tags\"",
                            "\"rulesFired\"", "\"elapsedMicros\""})
    CHECK(first.find(field) != std::string::npos);
  // Same verdict order as a sequential run.
  auto s2 = enumerate_graphs(6);
  const CampaignReport seq = run_campaign(*s2);
  for (std::size_t i = 0; i < seq.verdicts.size(); ++i) CHECK(seq.verdicts[i].canon == r.verdicts[i].canon);
  std::filesystem::remove(path);

  std::istringstream broken("{\"outcome\": \"Holds\", \"tags\": []}\nnot json\n");
  try {
    summarize_jsonl(broken);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("empty stream gives an empty report") {
  VectorStream s({});
  const CampaignReport r = run_campaign(s);
  CHECK(r.summary.graphs == 0);
  CHECK(r.verdicts.empty());
}

TEST_CASE("random graphs on 8 vertices hold") {
  std::mt19937_64 rng(77);
  std::vector<Graph> graphs;
  for (int k = 0; k < 100; ++k) {
    std::bernoulli_distribution coin(0.1 + 0.8 * k / 100.0);
    std::vector<Edge> edges;
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    graphs.emplace_back(8, edges);
  }
  VectorStream s(graphs);
  const CampaignReport r = run_campaign(s);
  CHECK(r.summary.violates == 0);
  CHECK(r.summary.holds == 100);
}

TEST_CASE("minimal counterexample filter") {
  CHECK_FALSE(minimal_counterexample_filter(star(4), mu_bounds(star(4)), true));
  CHECK_FALSE(minimal_counterexample_filter(cycle(6), mu_bounds(cycle(6)), true));
  CHECK_FALSE(minimal_counterexample_filter(complete(4), mu_bounds(complete(4)), true));
  CHECK(minimal_counterexample_filter(complete(4), mu_bounds(complete(4)), false));
  // Cube: 3-regular, mu = 3, so delta is not above lo.
  const Graph cube(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK_FALSE(minimal_counterexample_filter(cube, mu_bounds(cube), true));
  CHECK(minimal_counterexample_filter(cube, interval(2, 3), true));
  auto s = enumerate_graphs(7);
  CampaignOptions opts;
  opts.useLemma6Filter = true;
  const CampaignReport r = run_campaign(*s, opts);
  CHECK(r.summary.holds == 1044);
}

TEST_CASE("tight join family") {
  CHECK(join_tight(3, 4, 1) == complete(4));
  CHECK(join_tight(5, 4, 1).size() == 15);
  const Graph g = join_tight(8, 10, 1);
  CHECK(g.order() == 15);
  CHECK(g.size() == 84);
  const TightReport r = verify_tight_family(3, 6, {4, 5, 6}, {1, 2});
  CHECK(r.ok());
  CHECK(r.cases.size() == 4 * 3 * 2);
  CHECK_THROWS_AS(join_tight(2, 4, 1), PreconditionError);
  CHECK_THROWS_AS(join_tight(4, 3, 1), PreconditionError);
}

TEST_CASE("extremal clique-sum formulas") {
  for (int copies = 1; copies <= 4; ++copies) {
    const Graph g = clique_sum_chain("k22222", copies);
    CHECK(g.order() == 10 + 5 * (copies - 1));
    CHECK(g.size() == 40 + 30 * (copies - 1));
    CHECK(g.size() == 6 * g.order() - 20);
  }
  for (int copies = 1; copies <= 3; ++copies) {
    const Graph g = clique_sum_chain("k122222", copies);
    CHECK(g.size() == 7 * g.order() - 27);
  }
  for (const FormulaCheck& f : verify_extremal_formulas()) {
    INFO(f.name);
    CHECK(f.ok());
  }
  CHECK(complete_multipartite({2, 2, 2, 3, 3}).size() == 57);
  CHECK_THROWS_AS(clique_sum_chain("k33", 2), PreconditionError);
}

TEST_CASE("complement identity") {
  CHECK(verify_identity_lemma5(12));
  CHECK(verify_identity_lemma5(30, 500, 3));
  // n = 6, t = 3: 3 + 12 = 15.
  CHECK(edge_bound_at(3, 6) == 12);
}

TEST_CASE("named graphs") {
  CHECK(named_graph("K5") == complete(5));
  CHECK(named_graph("K3,3") == complete_multipartite({3, 3}));
  CHECK(named_graph("P4") == path(4));
  CHECK(named_graph("C7") == cycle(7));
  CHECK(named_graph("petersen") == petersen());
  CHECK(named_graph("K3,3,1").size() == 15);
  CHECK_THROWS_AS(named_graph("Q3"), ParseError);
  CHECK_THROWS_AS(named_graph("K"), ParseError);
}
