#include <catch_amalgamated.hpp>

#include <sstream>

#include "cdv/certificates.hpp"
#include "cdv/corpus.hpp"
#include "cdv/errors.hpp"
#include "cdv/mu_engine.hpp"
#include "mutations.hpp"

using namespace cdv;

TEST_CASE("hand-checked certificates") {
  const CertVerdict k3 = verify_certificate(canonical_complete_certificate(3));
  CHECK(k3.valid);
  CHECK(k3.corank == 2);
  CHECK(k3.claimMatches);

  const CdVCertificate p3{path(3), RationalMatrix{{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}}, 1};
  const CertVerdict v = verify_certificate(p3);
  CHECK(v.valid);
  CHECK(v.corank == 1);

  const CdVCertificate bad{edgeless(3), RationalMatrix{{-1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, 2};
  const CertVerdict b = verify_certificate(bad);
  CHECK_FALSE(b.valid);
  REQUIRE(b.failure.has_value());
  CHECK(*b.failure == CertFailure::SapFails);
  CHECK(b.details.find("X_{2,3}") != std::string::npos);

  // diag(-1, 0, 1) is the matrix-definition witness for 3K_1.
  const CdVCertificate e3{edgeless(3), RationalMatrix{{-1, 0, 0}, {0, 0, 0}, {0, 0, 1}}, 1};
  CHECK(verify_certificate(e3).valid);
}

TEST_CASE("canonical complete certificates") {
  for (int n = 2; n <= 8; ++n) {
    const CertVerdict v = verify_certificate(canonical_complete_certificate(n));
    CHECK(v.valid);
    CHECK(v.corank == n - 1);
  }
  CHECK_THROWS_AS(canonical_complete_certificate(1), PreconditionError);
}

TEST_CASE("structural failures are verdicts, not exceptions") {
  const CdVCertificate dim{complete(3), RationalMatrix(2, 2), 1};
  CHECK(verify_certificate(dim).failure == CertFailure::DimensionMismatch);
  const CdVCertificate asym{path(2), RationalMatrix{{0, -1}, {-2, 0}}, 0};
  CHECK(verify_certificate(asym).failure == CertFailure::NotSymmetric);
  const CertVerdict claim = verify_certificate({complete(3), canonical_complete_certificate(3).matrix, 1});
  CHECK(claim.valid);
  CHECK_FALSE(claim.claimMatches);
}

TEST_CASE("each mutation class flips the verdict with its own code") {
  std::mt19937_64 rng(2024);
  struct Class {
    CdVCertificate (*make)(std::mt19937_64&);
    CertFailure code;
  };
  const Class classes[] = {
      {mutations::nonedge_mutation, CertFailure::PatternNonEdge},
      {mutations::edge_sign_mutation, CertFailure::PatternEdgeSign},
      {mutations::inertia_mutation, CertFailure::InertiaNotOneNegative},
      {mutations::sap_mutation, CertFailure::SapFails},
  };
  for (const Class& c : classes)
    for (int k = 0; k < 20; ++k) {
      const CdVCertificate cert = c.make(rng);
      const CertVerdict v = verify_certificate(cert);
      CHECK_FALSE(v.valid);
      REQUIRE(v.failure.has_value());
      CHECK(*v.failure == c.code);
    }
  // The unmutated scaled certificates are valid.
  for (int k = 0; k < 20; ++k) CHECK(verify_certificate(mutations::scaled_complete(2 + k % 7, rng)).valid);
}

TEST_CASE("certificate text round trip") {
  for (int n = 2; n <= 5; ++n) {
    std::mt19937_64 rng(n);
    const CdVCertificate c = mutations::scaled_complete(n, rng);
    std::stringstream s;
    cert_write(c, s);
    const CdVCertificate back = cert_read(s);
    CHECK(back.graph == c.graph);
    CHECK(back.matrix == c.matrix);
    CHECK(back.claimedCorank == c.claimedCorank);
  }
}

TEST_CASE("malformed certificate files") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return cert_read(in);
  };
  CHECK_THROWS_AS(parse("cdv 2\nBw\n2\n"), ParseError);
  CHECK_THROWS_AS(parse("cdv 1\nBw\n2\n-1 -1 -1\n-1 -1 1/0\n-1 -1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("cdv 1\nBw\n2\n-1 -1 -1\n-1 -1\n-1 -1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("cdv 1\nBw\n2\n-1 -1 -1\n-1 -1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("cdv 1\nBw\nx\n"), ParseError);
  try {
    parse("cdv 1\nBw\n2\n-1 -1 -1\n-1 -1 1/0\n-1 -1 -1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.offset() == 8);
  }
  try {
    parse("cdv 1\nBw\n2\n-1 -1 -1\n-1 -1 -1\n-1 -2 -1\n");
    FAIL("expected an asymmetry error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("asymmetric") != std::string::npos);
  }
}

TEST_CASE("certificate search") {
  const auto k4 = search_certificate(complete(4), 3);
  REQUIRE(k4.has_value());
  CHECK(k4->claimedCorank == 3);
  const auto p3 = search_certificate(path(3), 1);
  REQUIRE(p3.has_value());
  CHECK(verify_certificate(*p3).valid);
  SearchOptions small;
  small.budget = 200;
  CHECK_FALSE(search_certificate(path(3), 2, small).has_value());
  CHECK_FALSE(search_certificate(complete_multipartite({2, 2, 2}), 4, small).has_value());
  const auto pet = search_certificate(petersen(), 5);
  REQUIRE(pet.has_value());
  CHECK(verify_certificate(*pet).corank == 5);
  CHECK_THROWS_AS(search_certificate(complete(3), 3), PreconditionError);
}

TEST_CASE("found certificates never exceed the engine's upper bound") {
  MuEngine engine;
  int found = 0, tried = 0;
  SearchOptions opts;
  opts.budget = 2000;
  for (const Graph& g : enumerate_up_to(6)) {
    if (g.is_edgeless()) continue;
    const MuBounds b = engine.bounds(g);
    REQUIRE(b.resolved());
    if (b.hi >= g.order()) continue;
    ++tried;
    if (auto c = search_certificate(g, b.hi, opts)) {
      ++found;
      const CertVerdict v = verify_certificate(*c);
      CHECK(v.valid);
      CHECK(v.corank <= b.hi);
    }
  }
  CHECK(found > tried / 2);
}
