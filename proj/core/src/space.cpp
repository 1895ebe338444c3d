#include "conradlab/space.hpp"

#include <algorithm>
#include <map>

#include "conradlab/conradian.hpp"

namespace conradlab {

std::string AgreementReport::distance() const {
  if (first_disagreement_radius)
    return "1/2^" + std::to_string(*first_disagreement_radius);
  return "<=1/2^" + std::to_string(r_max);
}

AgreementReport agreement_radius(const OrderingDescriptor& a, const OrderingDescriptor& b,
                                 int r_max, size_t cap) {
  if (!(a.family() == b.family()))
    throw UsageError("agreement_radius: descriptors live on different families");
  AgreementReport report;
  report.r_max = r_max;
  Ball ball = generate_ball(a.family(), r_max, cap);
  for (size_t i = 0; i < ball.size(); ++i) {
    const GroupElement& g = ball.at(i);
    if (sign_of(a, g) != sign_of(b, g)) {
      report.first_disagreement_radius = ball.word_length_at(i);
      report.witness = g;
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

IsolationResult isolation_probe(const OrderingDescriptor& ord,
                                const std::vector<OrderingDescriptor>& candidates, int radius,
                                int distinct_scan_radius, size_t cap) {
  IsolationResult result;
  Ball agreement_ball = generate_ball(ord.family(), radius, cap);
  Ball scan_ball = distinct_scan_radius > radius
                       ? generate_ball(ord.family(), distinct_scan_radius, cap)
                       : agreement_ball;

  for (const auto& cand : candidates) {
    if (!(cand.family() == ord.family())) throw UsageError("isolation candidates family mismatch");
    ++result.candidates_tried;

    // distinctness: first disagreement in the scan ball
    std::optional<size_t> witness_index;
    for (size_t i = 0; i < scan_ball.size(); ++i) {
      if (sign_of(ord, scan_ball.at(i)) != sign_of(cand, scan_ball.at(i))) {
        witness_index = i;
        break;
      }
    }
    if (!witness_index) continue;  // cannot certify distinctness
    if (scan_ball.word_length_at(*witness_index) <= radius) continue;  // disagrees too early

    bool agrees = true;
    for (const auto& g : agreement_ball.elements())
      if (sign_of(ord, g) != sign_of(cand, g)) {
        agrees = false;
        break;
      }
    if (!agrees) continue;

    result.approximant = cand;
    result.distinctness_witness = scan_ball.at(*witness_index);
    return result;
  }
  return result;
}

namespace {

GroupElement bs_pair(int32_t ell, Int r_num, int64_t r_k, int64_t n) {
  return {bs_family(ell), BsElemT<Int>{make_lfraction(std::move(r_num), r_k, ell), n}};
}

IsolationResult probe_smirnov_pool(const FlipOrder& ord, const OrderingDescriptor& ord_desc,
                                   int radius, size_t cap) {
  if (ord.fam.kind != FamilyKind::Bs)
    throw UsageError("the Smirnov candidate pool applies to B(1,ell) orderings");
  const int32_t ell = ord.fam.param;
  Ball ball = generate_ball(ord.fam, radius, cap);
  std::vector<Rat> thresholds = smirnov_thresholds(ell, ball);
  Rat maxabs(0);
  for (const Rat& t : thresholds) {
    if (t > maxabs) maxabs = t;
    if (-t > maxabs) maxabs = -t;
  }

  const bool b0 = ord.flips[0], b1 = ord.flips[1];
  IsolationResult result;
  Int c = boost::multiprecision::numerator(maxabs) / boost::multiprecision::denominator(maxabs) + 2;
  for (int attempt = 0; attempt < 16; ++attempt, c *= 2) {
    ++result.candidates_tried;
    // basepoints far right give the unflipped n-level, far left the flipped
    // one; opposite descriptors cover a-negative targets
    bool eps_neg = b0 != b1;
    QuadraticNumber eps(Rat(0), eps_neg ? Rat(-c) : Rat(c), 2);
    auto cand = make_smirnov(ell, eps, SmirnovOrder::Side::Exact, /*opposite=*/b0);

    // explicit distinctness witness: a basepoint query beyond eps
    Int t0 = 2 * c * (eps_neg ? -1 : 1);
    GroupElement witness = bs_pair(ell, Int(-t0 * (ell - 1)), 0, 1);
    if (sign_of(cand, witness) == sign_of(ord_desc, witness))
      throw InternalError("smirnov pool: constructed witness does not separate");

    bool agrees = true;
    for (const auto& g : ball.elements())
      if (sign_of(ord_desc, g) != sign_of(cand, g)) {
        agrees = false;
        break;
      }
    if (!agrees) continue;

    result.approximant = cand;
    result.distinctness_witness = witness;
    return result;
  }
  return result;
}

// primitive integer direction positively proportional to a rational-ratio
// direction
std::pair<Int, Int> primitive_direction(const SlopeOrder& s) {
  const QuadraticNumber &d1 = s.direction[0], &d2 = s.direction[1];
  if (d2.sign() == 0) return {Int(d1.sign()), Int(0)};
  Rat ratio = (d1 / d2).as_rational();
  Int p = boost::multiprecision::numerator(ratio);
  Int q = boost::multiprecision::denominator(ratio);
  if (d2.sign() < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::vector<std::pair<Int, Int>> continued_fraction_convergents(QuadraticNumber alpha,
                                                                int count) {
  std::vector<std::pair<Int, Int>> out;
  Int p_prev(1), p_prev2(0), q_prev(0), q_prev2(1);
  for (int i = 0; i < count; ++i) {
    Int a = alpha.floor();
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    out.push_back({p, q});
    QuadraticNumber frac = alpha - QuadraticNumber(Rat(a));
    if (frac.sign() == 0) break;
    alpha = QuadraticNumber(Rat(1)) / frac;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return out;
}

IsolationResult probe_slope_pool(const SlopeOrder& ord, const OrderingDescriptor& ord_desc,
                                 int radius, size_t cap) {
  if (ord.n != 2) throw UsageError("slope neighbor candidates support Z^2 only");
  const QuadraticNumber &d1 = ord.direction[0], &d2 = ord.direction[1];
  bool rational_ratio = d2.sign() == 0 || (d1 / d2).is_rational();
  std::vector<OrderingDescriptor> candidates;

  if (rational_ratio) {
    auto [p, q] = primitive_direction(ord);
    // perturb along the tiebreak coordinate that first sees the tie line
    // k(-q, p); a positive irrational nudge below the ball's sign thresholds
    // keeps every Ball(radius) sign, including the lex ties, and first
    // disagrees at far-out near-ties
    std::array<Int, 2> tie_dir{-q, p};
    int cstar = -1;
    for (int32_t idx : ord.tiebreak)
      if (tie_dir[idx] != 0) {
        cstar = idx;
        break;
      }
    if (cstar < 0) throw InternalError("slope pool: degenerate tie direction");

    Ball ball = generate_ball(abelian_family(ord.n), radius, cap);
    std::optional<Rat> m;
    for (const auto& g : ball.elements()) {
      const auto& v = g.as_zn().v;
      Rat dot = Rat(v[0]) * Rat(p) + Rat(v[1]) * Rat(q);
      if (dot == 0 || v[cstar] == 0) continue;
      Rat bound = abs(dot) / Rat(abs(v[cstar]));
      if (!m || bound < *m) m = bound;
    }
    Rat delta = m ? *m / 4 : Rat(1);
    for (int halvings = 0; halvings < 2; ++halvings, delta /= 2) {
      std::vector<QuadraticNumber> dir{QuadraticNumber(Rat(p)), QuadraticNumber(Rat(q))};
      dir[cstar] += QuadraticNumber(Rat(0), delta, 2);
      candidates.push_back(make_slope(dir, ord.tiebreak));
    }
  } else {
    QuadraticNumber alpha = d1 / d2;
    int dsign = d2.sign();
    for (auto& [p, q] : continued_fraction_convergents(alpha, 24)) {
      if (q == 0) continue;
      Int pp = dsign < 0 ? Int(-p) : p;
      Int qq = dsign < 0 ? Int(-q) : q;
      candidates.push_back(make_slope(
          {QuadraticNumber(Rat(pp)), QuadraticNumber(Rat(qq))}, ord.tiebreak));
    }
  }
  return isolation_probe(ord_desc, candidates, radius, radius + 48, cap);
}

}  // namespace

IsolationResult isolation_probe(const OrderingDescriptor& ord, CandidatePool pool, int radius,
                                size_t cap) {
  switch (pool) {
    case CandidatePool::SmirnovFamily: {
      const FlipOrder* f = ord.as_flip();
      if (!f) throw UsageError("the Smirnov pool expects a flip ordering target");
      return probe_smirnov_pool(*f, ord, radius, cap);
    }
    case CandidatePool::COrderingFamily: {
      std::vector<OrderingDescriptor> candidates;
      for (auto& cand : enumerate_c_orderings(ord.family())) {
        if (ord.as_flip() && cand.as_flip()->bits() == ord.as_flip()->bits()) continue;
        candidates.push_back(std::move(cand));
      }
      return isolation_probe(ord, candidates, radius, radius, cap);
    }
    case CandidatePool::SlopeNeighbors: {
      const SlopeOrder* s = ord.as_slope();
      if (!s) throw UsageError("the slope pool expects a slope ordering target");
      return probe_slope_pool(*s, ord, radius, cap);
    }
  }
  throw InternalError("isolation_probe: bad pool");
}

// ---------------------------------------------------------------------------

ConvergenceReport convergence_check(const std::vector<OrderingDescriptor>& seq,
                                    const OrderingDescriptor& limit, int radius, size_t cap) {
  ConvergenceReport report;
  report.radius = radius;
  Ball ball = generate_ball(limit.family(), radius, cap);
  std::vector<Sign> limit_signs;
  limit_signs.reserve(ball.size());
  for (const auto& g : ball.elements()) limit_signs.push_back(sign_of(limit, g));

  std::optional<size_t> last_disagreement;
  for (size_t k = 0; k < seq.size(); ++k) {
    if (!(seq[k].family() == limit.family()))
      throw UsageError("convergence_check: family mismatch");
    for (size_t i = 0; i < ball.size(); ++i) {
      if (sign_of(seq[k], ball.at(i)) != limit_signs[i]) {
        last_disagreement = k;
        break;
      }
    }
  }
  if (!last_disagreement)
    report.agrees_from = 0;
  else if (*last_disagreement + 1 < seq.size())
    report.agrees_from = *last_disagreement + 1;
  return report;
}

// ---------------------------------------------------------------------------

std::vector<Rat> smirnov_thresholds(int32_t ell, const Ball& ball) {
  if (ball.family().kind != FamilyKind::Bs || ball.family().param != ell)
    throw UsageError("smirnov_thresholds: ball family mismatch");
  std::vector<Rat> out;
  for (const auto& g : ball.elements()) {
    const auto& e = g.as_bs();
    if (e.n == 0) continue;
    out.push_back(-lf_value(e.r) / (pow_rat(Rat(ell), e.n) - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ThresholdGap gap_around(const std::vector<Rat>& thresholds, const QuadraticNumber& x, int side) {
  ThresholdGap gap;
  for (const Rat& t : thresholds) {
    int cmp = (x - QuadraticNumber(t)).sign();
    if (cmp == 0) cmp = side;  // on a threshold: the side selects the gap
    if (cmp > 0) {
      if (!gap.lo || t > *gap.lo) gap.lo = t;
    } else if (cmp < 0) {
      if (!gap.hi || t < *gap.hi) gap.hi = t;
    } else {
      throw UsageError("gap_around: point sits on a threshold and no side was given");
    }
  }
  return gap;
}

std::optional<GroupElement> conjugacy_orbit_probe(const SmirnovOrder& from,
                                                  const SmirnovOrder& target, int radius,
                                                  size_t cap) {
  if (from.opposite || target.opposite)
    throw UsageError("conjugacy orbit probe requires both orderings to keep a positive");
  if (from.ell != target.ell) throw UsageError("conjugacy orbit probe: ell mismatch");
  const int32_t ell = from.ell;
  Family fam = bs_family(ell);
  Ball ball = generate_ball(fam, radius, cap);
  std::vector<Rat> thresholds = smirnov_thresholds(ell, ball);

  auto side_int = [](SmirnovOrder::Side s) {
    return s == SmirnovOrder::Side::PlusLimit ? 1 : s == SmirnovOrder::Side::MinusLimit ? -1 : 0;
  };
  ThresholdGap gap = gap_around(thresholds, target.eps, side_int(target.side));

  auto inside = [&](const QuadraticNumber& x) {
    if (gap.lo && !(x > QuadraticNumber(*gap.lo))) return false;
    if (gap.hi && !(x < QuadraticNumber(*gap.hi))) return false;
    return true;
  };

  GroupElement g = identity(fam);
  if (!inside(from.eps)) {
    Int r;
    int64_t n = 0;
    if (gap.lo && gap.hi) {
      Rat width = *gap.hi - *gap.lo;
      Rat scale(1);
      while (scale * width < 3) {
        scale *= ell;
        ++n;
      }
      // r integer in (eps0 - ell^n hi, eps0 - ell^n lo), width >= 3
      QuadraticNumber upper = from.eps - QuadraticNumber(Rat(scale * *gap.lo));
      r = upper.floor() - 1;
    } else if (gap.lo) {
      r = (from.eps - QuadraticNumber(Rat(*gap.lo))).floor() - 1;
    } else if (gap.hi) {
      r = (from.eps - QuadraticNumber(Rat(*gap.hi))).floor() + 1;
    } else {
      return identity(fam);  // no thresholds at this radius: everything agrees
    }
    g = bs_pair(ell, std::move(r), 0, n);
  }

  // verify: the conjugated ordering agrees with the target on the ball
  auto from_desc = make_smirnov(from.ell, from.eps, from.side, from.opposite);
  auto target_desc = make_smirnov(target.ell, target.eps, target.side, target.opposite);
  auto conj = conjugate(from_desc, g);
  for (const auto& x : ball.elements())
    if (sign_of(conj, x) != sign_of(target_desc, x))
      throw InternalError("conjugacy orbit probe: steering missed the agreement gap");
  return g;
}

// ---------------------------------------------------------------------------

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

char sign_char(Sign s) { return s == Sign::Positive ? '+' : s == Sign::Negative ? '-' : '0'; }

void build_tree(CantorTreeNode& node, const std::vector<std::vector<Sign>>& patterns,
                const std::vector<size_t>& members, const std::vector<size_t>& layer_begin,
                const std::vector<std::string>& prefixes, int max_radius) {
  if (node.radius == max_radius) {
    node.leaves = members;
    return;
  }
  int next = node.radius + 1;
  size_t begin = layer_begin[next], end = layer_begin[next + 1];
  std::map<std::string, std::vector<size_t>> groups;
  for (size_t idx : members) {
    std::string key;
    key.reserve(end - begin);
    for (size_t i = begin; i < end; ++i) key.push_back(sign_char(patterns[idx][i]));
    groups[key].push_back(idx);
  }
  for (auto& [key, group] : groups) {
    CantorTreeNode child;
    child.radius = next;
    child.pattern_hash = fnv1a(prefixes[group.front()].substr(0, end));
    build_tree(child, patterns, group, layer_begin, prefixes, max_radius);
    node.children.push_back(std::move(child));
  }
}

}  // namespace

size_t CantorTreeNode::leaf_count() const {
  if (children.empty()) return leaves.empty() ? 0 : 1;
  size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

size_t CantorTreeNode::branching_nodes() const {
  size_t n = children.size() >= 2 ? 1 : 0;
  for (const auto& c : children) n += c.branching_nodes();
  return n;
}

CantorTreeNode cantor_tree(const std::vector<OrderingDescriptor>& descriptors, int radius,
                           size_t cap) {
  CantorTreeNode root;
  if (descriptors.empty()) return root;
  Family fam = descriptors.front().family();
  for (const auto& d : descriptors)
    if (!(d.family() == fam)) throw UsageError("cantor_tree: descriptors on mixed families");

  Ball ball = generate_ball(fam, radius, cap);
  // layer_begin[r] = first index of word length r in the sorted ball;
  // layer_begin[radius + 1] stays at size() as the end sentinel
  std::vector<size_t> layer_begin(radius + 2, ball.size());
  for (size_t i = ball.size(); i-- > 0;) layer_begin[ball.word_length_at(i)] = i;

  std::vector<std::vector<Sign>> patterns(descriptors.size());
  std::vector<std::string> prefixes(descriptors.size());
  for (size_t d = 0; d < descriptors.size(); ++d) {
    patterns[d].reserve(ball.size());
    for (const auto& g : ball.elements()) patterns[d].push_back(sign_of(descriptors[d], g));
    for (Sign s : patterns[d]) prefixes[d].push_back(sign_char(s));
  }

  std::vector<size_t> all(descriptors.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  root.radius = 0;
  root.pattern_hash = fnv1a("0");
  build_tree(root, patterns, all, layer_begin, prefixes, radius);
  return root;
}

}  // namespace conradlab
