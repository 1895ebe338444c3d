#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conradlab/ordering.hpp"

namespace conradlab {

/// First ball radius on which two orderings disagree; the distance between
/// them is 1/2^n, or at most 1/2^r_max when no disagreement was found.
struct AgreementReport {
  int r_max = 0;
  std::optional<int> first_disagreement_radius;
  std::optional<GroupElement> witness;  // minimal in (word length, canonical) order

  bool disagrees() const { return first_disagreement_radius.has_value(); }
  std::string distance() const;  // "1/2^n" or "<=1/2^r_max"
};

AgreementReport agreement_radius(const OrderingDescriptor& a, const OrderingDescriptor& b,
                                 int r_max, size_t cap = kDefaultBallCap);

// ---------------------------------------------------------------------------

/// Built-in candidate generators for isolation probes.
enum class CandidatePool {
  SmirnovFamily,   // basepoint orderings with far-out basepoints (and opposites)
  COrderingFamily, // the 2^n flip orderings of the family
  SlopeNeighbors,  // slope perturbations: rational approximants of irrational
                   // directions, irrational perturbations of rational ones
};

struct IsolationResult {
  std::optional<OrderingDescriptor> approximant;  // agrees on Ball(R), differs beyond
  std::optional<GroupElement> distinctness_witness;
  uint64_t candidates_tried = 0;
};

/// Searches the pool for a descriptor distinct from ord as an oracle yet
/// agreeing with it on Ball(R). Agreement is verified exhaustively;
/// distinctness by an explicit witness element.
IsolationResult isolation_probe(const OrderingDescriptor& ord, CandidatePool pool, int radius,
                                size_t cap = kDefaultBallCap);
IsolationResult isolation_probe(const OrderingDescriptor& ord,
                                const std::vector<OrderingDescriptor>& candidates, int radius,
                                int distinct_scan_radius, size_t cap = kDefaultBallCap);

// ---------------------------------------------------------------------------

struct ConvergenceReport {
  int radius = 0;
  // least index from which every later descriptor agrees with the limit on
  // Ball(radius); empty when the tail still disagrees
  std::optional<size_t> agrees_from;
};

ConvergenceReport convergence_check(const std::vector<OrderingDescriptor>& seq,
                                    const OrderingDescriptor& limit, int radius,
                                    size_t cap = kDefaultBallCap);

// ---------------------------------------------------------------------------

/// Finds g whose conjugacy action steers the basepoint of `from` into the
/// agreement gap of `target` on Ball(radius): conjugate(from, g) then agrees
/// with target there. Both orderings must leave the a-generator positive
/// (no opposite flags). Returns the identity when the basepoints already
/// share a gap.
std::optional<GroupElement> conjugacy_orbit_probe(const SmirnovOrder& from,
                                                  const SmirnovOrder& target, int radius,
                                                  size_t cap = kDefaultBallCap);

// ---------------------------------------------------------------------------

/// Prefix tree of sign patterns on nested balls; descriptors sharing a
/// pattern up to some radius share the node.
struct CantorTreeNode {
  int radius = 0;
  uint64_t pattern_hash = 0;
  std::vector<size_t> leaves;  // descriptor indices, filled at depth == max radius
  std::vector<CantorTreeNode> children;

  size_t leaf_count() const;
  size_t branching_nodes() const;  // nodes with >= 2 children
};

CantorTreeNode cantor_tree(const std::vector<OrderingDescriptor>& descriptors, int radius,
                           size_t cap = kDefaultBallCap);

// ---------------------------------------------------------------------------
// Threshold engine: sign patterns of basepoint orderings on a ball are
// constant between consecutive breakpoints -r/(ell^n - 1).

std::vector<Rat> smirnov_thresholds(int32_t ell, const Ball& ball);

struct ThresholdGap {
  std::optional<Rat> lo, hi;  // empty side = unbounded
};

/// Open gap between thresholds containing x; for a rational x that sits on a
/// threshold, side +1 (-1) selects the gap to its right (left).
ThresholdGap gap_around(const std::vector<Rat>& thresholds, const QuadraticNumber& x, int side);

}  // namespace conradlab
