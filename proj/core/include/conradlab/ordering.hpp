#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conradlab/ball.hpp"
#include "conradlab/element.hpp"
#include "conradlab/quadratic.hpp"

namespace conradlab {

enum class Sign : int8_t { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_from_int(int s) { return static_cast<Sign>(s < 0 ? -1 : s > 0 ? 1 : 0); }
inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int8_t>(s)); }
std::string sign_str(Sign s);

enum class Cmp : int8_t { Less = -1, Equal = 0, Greater = 1 };
std::string cmp_str(Cmp c);

class OrderingDescriptor;

/// Ordering induced by the canonical convex series: the sign of g is the sign
/// of its leading series coordinate, negated at levels whose flip bit is set.
struct FlipOrder {
  Family fam;
  std::vector<uint8_t> flips;  // size == series_length(fam); index i flips G_{i+1}/G_i

  std::string bits() const;
};

/// Left-ordering of B(1,ell) attached to a basepoint eps of the affine line:
/// g = (r, n) is positive when (ell^n - 1) eps + r > 0. At rational eps the
/// comparison can tie away from the identity; the side picks the one-sided
/// completion (PlusLimit: ties resolve to the sign of n; MinusLimit: to its
/// negation). The opposite flag negates every sign.
struct SmirnovOrder {
  enum class Side : uint8_t { Exact, PlusLimit, MinusLimit };

  int32_t ell = 2;
  QuadraticNumber eps;
  Side side = Side::Exact;
  bool opposite = false;
};

/// Ordering of Z^n by a linear form with irrational-capable coefficients;
/// exact ties fall back to the sign of the first nonzero coordinate in
/// tiebreak order.
struct SlopeOrder {
  int32_t n = 1;
  std::vector<QuadraticNumber> direction;
  std::vector<int32_t> tiebreak;  // permutation of 0..n-1
};

struct OppositeOrder {
  std::shared_ptr<const OrderingDescriptor> inner;
};

/// Conjugated ordering: sign(h) = sign_inner(g h g^-1). This is a left action
/// on descriptors; for the basepoint orderings of B(1,ell) it satisfies
/// g . ord_eps = ord_{g^-1(eps)}.
struct ConjugateOrder {
  std::shared_ptr<const OrderingDescriptor> inner;
  GroupElement g;
};

/// Serializable finite description of a left-ordering; yields an exact sign
/// oracle. Immutable after construction; construction validates invariants.
class OrderingDescriptor {
 public:
  using Payload = std::variant<FlipOrder, SmirnovOrder, SlopeOrder, OppositeOrder, ConjugateOrder>;

  explicit OrderingDescriptor(Payload p);

  const Payload& data() const { return payload_; }
  Family family() const;
  std::string str() const;

  const FlipOrder* as_flip() const { return std::get_if<FlipOrder>(&payload_); }
  const SmirnovOrder* as_smirnov() const { return std::get_if<SmirnovOrder>(&payload_); }
  const SlopeOrder* as_slope() const { return std::get_if<SlopeOrder>(&payload_); }

 private:
  Payload payload_;
};

OrderingDescriptor make_flip(const Family& fam, const std::vector<uint8_t>& flips);
OrderingDescriptor make_flip(const Family& fam, std::string_view bits);
OrderingDescriptor make_smirnov(int32_t ell, QuadraticNumber eps,
                                SmirnovOrder::Side side = SmirnovOrder::Side::Exact,
                                bool opposite = false);
OrderingDescriptor make_slope(std::vector<QuadraticNumber> direction,
                              std::vector<int32_t> tiebreak = {});

/// Sign of g in the ordering: Positive when id < g. Zero exactly at the
/// identity for every well-formed descriptor.
Sign sign_of(const OrderingDescriptor& ord, const GroupElement& g);

/// Left-invariant comparison: g < h iff g^-1 h is positive.
Cmp compare(const OrderingDescriptor& ord, const GroupElement& g, const GroupElement& h);

/// Reverses every sign. Involution; flip and Smirnov descriptors simplify
/// structurally, others wrap.
OrderingDescriptor opposite(const OrderingDescriptor& ord);

/// Left conjugacy action, sign(h) = sign_ord(g h g^-1). conjugate(ord, id)
/// returns ord unchanged.
OrderingDescriptor conjugate(const OrderingDescriptor& ord, const GroupElement& g);

using SignOracle = std::function<Sign(const GroupElement&)>;
SignOracle oracle_of(const OrderingDescriptor& ord);

// ---------------------------------------------------------------------------

struct ConeAxiomViolation {
  std::string axiom;  // "inverse-sign", "zero-only-identity", "cone-closure"
  GroupElement g;
  std::optional<GroupElement> h;
};

struct ConeAxiomReport {
  bool pass = true;
  int radius = 0;
  std::vector<ConeAxiomViolation> violations;
};

/// Verifies on the ball that the oracle behaves like a positive cone:
/// (i) sign(g^-1) = -sign(g); (ii) Zero exactly at the identity;
/// (iii) products of positives that land in the ball stay positive.
ConeAxiomReport check_cone_axioms(const SignOracle& oracle, const Ball& ball,
                                  size_t max_violations = 8);
ConeAxiomReport check_cone_axioms(const OrderingDescriptor& ord, const Ball& ball,
                                  size_t max_violations = 8);

}  // namespace conradlab
