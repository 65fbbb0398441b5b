#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cdv/graph.hpp"
#include "cdv/rational_matrix.hpp"

namespace cdv {

/// A symmetric matrix claimed to satisfy the three matrix conditions for
/// `graph`, witnessing mu(graph) >= corank(matrix).
struct CdVCertificate {
  Graph graph;
  RationalMatrix matrix;
  int claimedCorank = 0;
};

enum class CertFailure {
  DimensionMismatch,
  NotSymmetric,
  PatternNonEdge,
  PatternEdgeSign,
  InertiaNotOneNegative,
  SapFails,
};

std::string to_string(CertFailure f);

struct CertVerdict {
  bool valid = false;
  int corank = 0;
  std::optional<CertFailure> failure;
  std::string details;
  /// The exact corank equals the certificate's claim.
  bool claimMatches = false;
};

/// Checks, in order: dimensions and symmetry; the sign pattern (zero on
/// off-diagonal non-edges, strictly negative on edges, diagonal free);
/// exactly one negative eigenvalue; the Strong Arnold Property. The SAP
/// system has one unknown X_ij per non-edge i < j and one equation per
/// entry (k, l) of M X; SAP holds iff its only solution is zero. A valid
/// verdict proves mu(graph) >= corank. Never throws on bad certificates.
CertVerdict verify_certificate(const CdVCertificate& cert);

/// (K_n, -J_n, n - 1). Throws PreconditionError for n < 2.
CdVCertificate canonical_complete_certificate(int n);

struct SearchOptions {
  /// Gradient iterations across all restarts.
  std::uint64_t budget = 20'000;
  std::uint64_t seed = 1;
  std::int64_t maxDenominator = 1'000'000;
};

/// Best-effort numeric search for a certificate of corank >= targetCorank.
/// Floating point only proposes: the diagonal and edge weights are tuned so
/// that eigenvalues 2..target+1 coalesce with gaps on both sides, then the
/// proposal is rounded (continued fractions, capped denominators) and, if
/// needed, projected exactly onto {M : M U = 0} for a rounded kernel basis
/// U. Only exactly verified certificates are returned; nullopt says
/// nothing about mu. Requires n <= 20 and targetCorank < n.
std::optional<CdVCertificate> search_certificate(const Graph& g, int targetCorank,
                                                 const SearchOptions& options = {});

/// Text format:
///   cdv 1
///   <graph6>
///   <claimed corank>
///   n lines of n space-separated rationals (p/q or integers)
void cert_write(const CdVCertificate& cert, std::ostream& out);
void cert_write(const CdVCertificate& cert, const std::string& path);
/// Throws ParseError (line, column) on malformed text and on asymmetric
/// matrices.
CdVCertificate cert_read(std::istream& in);
CdVCertificate cert_read(const std::string& path);

}  // namespace cdv
