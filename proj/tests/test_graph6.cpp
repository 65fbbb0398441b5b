#include <catch_amalgamated.hpp>

#include <random>

#include "cdv/errors.hpp"
#include "cdv/graph6.hpp"

using namespace cdv;

TEST_CASE("known graph6 strings") {
  CHECK(graph6_encode(complete(4)) == "C~");
  CHECK(graph6_encode(complete(3)) == "Bw");
  CHECK(graph6_encode(edgeless(3)) == "B?");
  CHECK(graph6_encode(path(3)) == "Bg");
  CHECK(graph6_decode("C~") == complete(4));
  CHECK(graph6_decode("IheA@GUAo") == petersen());
  CHECK(graph6_decode(">>graph6<<C~\n") == complete(4));
}

TEST_CASE("round trip on random graphs of every order") {
  std::mt19937_64 rng(42);
  for (int n = 1; n <= 64; ++n) {
    std::bernoulli_distribution coin(0.3);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const std::string s = graph6_encode(g);
    if (n >= 63) CHECK(s[0] == '~');
    CHECK(graph6_decode(s) == g);
  }
}

TEST_CASE("malformed graph6") {
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("?"), ParseError);
  CHECK_THROWS_AS(graph6_decode("C"), ParseError);
  CHECK_THROWS_AS(graph6_decode("C~~"), ParseError);
  CHECK_THROWS_AS(graph6_decode("C\x01"), ParseError);
  CHECK_THROWS_AS(graph6_decode("Bx"), ParseError);  // padding bit set
  try {
    graph6_decode("D~~~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);  // two data bytes for n = 5, extras start at 3
  }
}
