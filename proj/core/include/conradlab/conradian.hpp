#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "conradlab/ordering.hpp"

namespace conradlab {

/// Positive pair (f, g) with f g^2 < g, certifying a failure of the
/// Conradian property.
struct ConradWitness {
  GroupElement f, g;
};

struct ConradianReport {
  bool pass = true;
  std::optional<ConradWitness> witness;  // first in scan order
  int radius = 0;
  uint64_t pairs_checked = 0;
  // Optional cross-check of the equivalent conjugation form: for id < g < f,
  // g^-1 f^2 g > f. Report content only.
  bool condition2_checked = false;
  std::optional<ConradWitness> condition2_witness;
};

/// Verifies f g^2 > g for every positive pair (f, g) in the ball, scanning
/// pairs f-major in the ball's canonical order and returning the first
/// violating pair. Signs of products are evaluated through the descriptor's
/// total oracle, so products may leave the ball.
ConradianReport conradian_check(const OrderingDescriptor& ord, const Ball& ball,
                                bool check_condition2 = false);

/// Same check for a batch of flip descriptors over one family, sharing a
/// single pair scan. Witnesses coincide with per-descriptor scans.
std::vector<ConradianReport> conradian_check_batch(const std::vector<OrderingDescriptor>& flips,
                                                   const Ball& ball);

// ---------------------------------------------------------------------------

struct ConvexityReport {
  bool convex = true;
  int radius = 0;
  // f1 < h < f2 with f1, f2 in S and h outside
  std::optional<std::array<GroupElement, 3>> violation;
};

/// S given by a canonical series level: members are the elements at levels
/// <= series_level.
ConvexityReport convexity_check(int series_level, const OrderingDescriptor& ord,
                                const Ball& ball);
ConvexityReport convexity_check(const std::function<bool(const GroupElement&)>& in_s,
                                const OrderingDescriptor& ord, const Ball& ball);

/// Conrad homomorphism at the top convex jump of a flip ordering, normalized
/// so the distinguished top-level generator maps to +/-1 with its ordering
/// sign. Kernel is exactly the penultimate series level.
Rat conrad_homomorphism(const OrderingDescriptor& flip_ord, const GroupElement& g);

/// Toggles flip bit i (0-based series level).
OrderingDescriptor flip(const OrderingDescriptor& flip_ord, int level);

/// All 2^len flip orderings over the canonical series, in lexicographic bit
/// order. Requires the family to pass the rational-series hypothesis check.
std::vector<OrderingDescriptor> enumerate_c_orderings(const Family& f);

struct EnumerationReport {
  Family fam;
  std::vector<OrderingDescriptor> orderings;
  bool count_matches = false;
  bool pairwise_distinct = false;
  bool all_conradian = false;
  int distinct_radius = 0;
  int conradian_radius = 0;
};

EnumerationReport verify_enumeration(const Family& f, int conradian_radius,
                                     int distinct_radius, size_t cap = kDefaultBallCap);

// ---------------------------------------------------------------------------

struct QuotientEvidence {
  int level = 0;  // quotient G_level / G_{level-1}
  bool images_commute = true;
  std::optional<std::pair<GroupElement, GroupElement>> commute_violation;
  bool rank1_evidence_ok = true;
  uint64_t commensurable_pairs = 0;  // rank-1 evidence at desk scale
  uint64_t commensurable_skipped = 0;
};

struct StepWitness {
  int step = 0;  // i: quotient G_{i+2} / G_i
  std::optional<std::pair<GroupElement, GroupElement>> noncommuting;
};

struct RationalSeriesReport {
  Family fam;
  int radius = 0;
  std::vector<QuotientEvidence> quotients;
  std::vector<StepWitness> steps;
  bool hypotheses_hold = false;
};

/// Desk-scale evidence for the canonical series: each quotient looks rank-1
/// abelian on the ball, and each two-step quotient G_{i+2}/G_i exhibits a
/// non-commuting pair. Findings are report content, never errors.
RationalSeriesReport check_rational_series(const Family& f, const Ball& ball);

// ---------------------------------------------------------------------------

struct BiInvarianceReport {
  bool pass = true;
  int radius = 0;
  // (g, h) with sign(h g h^-1) != sign(g)
  std::optional<std::pair<GroupElement, GroupElement>> witness;
  bool witness_conjugate_is_inverse = false;
  uint64_t pairs_checked = 0;
};

BiInvarianceReport bi_invariance_check(const OrderingDescriptor& ord, const Ball& ball);

}  // namespace conradlab
