#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conradlab/affine.hpp"
#include "conradlab/conradian.hpp"
#include "conradlab/ordering.hpp"

namespace conradlab {

struct BsAffineData {
  int32_t ell = 2;
  QuadraticNumber alpha;  // a: x -> x + alpha
  QuadraticNumber beta;   // b: x -> ell x + beta
};

struct ZnTranslationData {
  std::vector<QuadraticNumber> direction;  // v acts by x -> x + <v, direction>
};

/// Total affine action of a built-in family on the line.
class AffineAction {
 public:
  using Data = std::variant<BsAffineData, ZnTranslationData>;

  /// a -> (1, alpha), b -> (ell, beta); alpha = 0 is rejected as non-faithful.
  static AffineAction bs(int32_t ell, QuadraticNumber alpha, QuadraticNumber beta);
  /// The reference embedding a: x -> x + 1, b: x -> ell x.
  static AffineAction standard_bs(int32_t ell);
  static AffineAction zn_translations(std::vector<QuadraticNumber> direction);

  Family family() const;
  AffineMap map_of(const GroupElement& g) const;
  const Data& data() const { return data_; }

 private:
  explicit AffineAction(Data d) : data_(std::move(d)) {}
  Data data_;
};

struct AffineRelationReport {
  bool holds = false;     // b a b^-1 = a^ell as affine maps
  bool faithful = false;  // holds with a translation part alpha != 0
};

/// Checks whether a -> (s, alpha), b -> (t, beta) satisfies the defining
/// relation of B(1,ell) in the affine group.
AffineRelationReport check_affine_relation(int32_t ell, const Rat& s, const Rat& t,
                                           const QuadraticNumber& alpha,
                                           const QuadraticNumber& beta);

// ---------------------------------------------------------------------------

enum class InducedSign : int8_t { Negative = -1, Zero = 0, Positive = 1, Unresolved = 2 };
std::string induced_sign_str(InducedSign s);

/// Sign of g in the ordering induced from an ordered list of basepoints:
/// the first basepoint moved decides. Elements fixing every basepoint are
/// Unresolved (stabilizer of the basepoint list); the identity is Zero.
InducedSign induced_sign(const AffineAction& action,
                         const std::vector<QuadraticNumber>& basepoints,
                         const GroupElement& g);

std::vector<std::pair<GroupElement, InducedSign>> induced_ordering(
    const AffineAction& action, const std::vector<QuadraticNumber>& basepoints,
    const Ball& ball);

// ---------------------------------------------------------------------------

enum class CrossingMode : uint8_t { AffineExact, Bounded };

/// 5-tuple (f, g, u, v, w) with witnesses M, N:
///   i)   u < w < v
///   ii)  g^n u < v and f^n v > u for all n (exactly in AffineExact mode,
///        up to n_max in Bounded mode)
///   iii) f^N v < w < g^M u
struct CrossingCertificate {
  GroupElement f, g;
  QuadraticNumber u, v, w;
  uint64_t M = 0, N = 0;
  CrossingMode mode = CrossingMode::AffineExact;
  uint64_t n_max = 0;  // Bounded mode only
};

struct CrossingCheck {
  bool valid = false;
  CrossingMode mode = CrossingMode::AffineExact;
  std::string detail;  // first failed condition, empty when valid
};

CrossingCheck verify_crossing(const CrossingCertificate& cert, const AffineAction& action);

struct CrossingSearchParams {
  uint64_t n_max = 64;          // Bounded-mode depth
  uint64_t iter_cap = 1000000;  // witness iteration guard
};

/// Exhaustive search over ordered pairs (f, g) of ball elements (f-major, in
/// ball order) and points (u, v, w) ascending over the orbit of the
/// basepoints under the ball. Returns the first certificate in that scan
/// order, if any.
std::optional<CrossingCertificate> detect_crossing(const AffineAction& action, const Ball& ball,
                                                   const std::vector<QuadraticNumber>& basepoints,
                                                   const CrossingSearchParams& params = {});

/// Builds the certificate (fg, fg^2, w, g(w), fg^2(w)) from a Conradian
/// violation, with minimal witnesses M, N, and verifies it before returning.
CrossingCertificate crossing_from_witness(const ConradWitness& wit, const AffineAction& action,
                                          const QuadraticNumber& wbar);

// ---------------------------------------------------------------------------

/// Finite order-embedding t of a ball into the rationals, built by the
/// midpoint/endpoint induction from an enumeration; t(base) = 0.
struct RealizationTable {
  Family fam;
  std::vector<std::pair<GroupElement, Rat>> entries;  // enumeration order
  std::map<GroupElement, Rat, CanonicalLess> value_of;
  std::map<Rat, GroupElement> element_at;

  const GroupElement& base() const { return entries.front().first; }
  std::optional<Rat> value(const GroupElement& g) const;
  /// Partial action g . t(h) = t(g h), defined when both lookups resolve.
  std::optional<Rat> apply(const GroupElement& g, const Rat& x) const;
  std::vector<Rat> points() const;
};

/// The enumeration must list exactly the ball's elements, identity first.
RealizationTable dynamical_realization(const OrderingDescriptor& ord, const Ball& ball,
                                       const std::vector<GroupElement>& enumeration);
RealizationTable dynamical_realization(const OrderingDescriptor& ord, const Ball& ball);

struct RealizationCheckReport {
  bool pass = true;
  // g together with table points x < y whose images swap
  std::optional<std::tuple<GroupElement, Rat, Rat>> violation;
};

/// Verifies the partial action is order-preserving wherever defined.
RealizationCheckReport realization_action_check(const RealizationTable& table,
                                                const OrderingDescriptor& ord, const Ball& ball);

/// Crossing search over the partial action of a realization table; points
/// are the table values. Bounded mode: condition ii must be checkable to
/// depth n_max, so orbits that leave the table before n_max disqualify.
std::optional<CrossingCertificate> detect_crossing(const RealizationTable& table,
                                                   const Ball& ball,
                                                   const CrossingSearchParams& params = {});
CrossingCheck verify_crossing(const CrossingCertificate& cert, const RealizationTable& table,
                              uint64_t n_max = 64);

// ---------------------------------------------------------------------------

struct EpsilonRecovery {
  enum class Status : uint8_t { Interval, NotSmirnov } status = Status::NotSmirnov;
  Rat lo, hi;          // Interval: hi - lo <= 2^-depth
  std::string reason;  // NotSmirnov diagnostics
};

/// Bisection over basepoint thresholds using only queries g = (r, 1):
/// sign((ell-1) eps + r) separates eps from -r/(ell-1). Oracles whose signs
/// are consistent with no finite basepoint (the flip orderings) are reported
/// as not of Smirnov type.
EpsilonRecovery recover_epsilon(const SignOracle& oracle, int32_t ell, int depth,
                                int escape_log = 64);

}  // namespace conradlab
