#include "conradlab/conradian.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace conradlab {

namespace {

// -------------------------------------------------------------------------
// Shared pair scan for flip-family batches. Signs of flip orderings depend
// only on (series level, leading-coordinate sign), so one scan over all
// ordered pairs records the set of abstraction patterns
//   (abstr(f), abstr(g), abstr(g^-1 f g^2))
// together with the minimal pair index realizing each pattern; every flip
// vector is then evaluated against the pattern table. Runs on checked
// 64-bit coordinates and falls back to big integers on overflow.

constexpr int kAbstrBits = 5;  // level (4 bits) + sign bit
constexpr size_t kTableSize = 1u << (3 * kAbstrBits);

struct PatternTable {
  std::vector<uint64_t> min_pair;  // index: packed abstraction triple
  std::vector<uint32_t> occupied;
  uint64_t pairs_checked = 0;

  PatternTable() : min_pair(kTableSize, UINT64_MAX) {}

  void record(uint32_t code, uint64_t pair_index) {
    if (min_pair[code] == UINT64_MAX) occupied.push_back(code);
    if (pair_index < min_pair[code]) min_pair[code] = pair_index;
  }
};

inline uint32_t abstr_code(int level, int sign) {
  return static_cast<uint32_t>(level << 1) | (sign > 0 ? 1u : 0u);
}

template <class Elem, class Mul, class Inv, class Abstr>
PatternTable scan_pairs(const std::vector<Elem>& elems, Mul mul, Inv inv, Abstr abstr) {
  const size_t n = elems.size();
  std::vector<Elem> inverses;
  inverses.reserve(n);
  for (const auto& e : elems) inverses.push_back(inv(e));
  std::vector<uint32_t> codes(n);
  for (size_t i = 0; i < n; ++i) codes[i] = abstr(elems[i]);

  PatternTable table;
  for (size_t gi = 0; gi < n; ++gi) {
    if (codes[gi] >> 1 == 0) continue;  // identity
    const Elem& g = elems[gi];
    const Elem& gin = inverses[gi];
    for (size_t fi = 0; fi < n; ++fi) {
      if (codes[fi] >> 1 == 0) continue;
      Elem w = mul(mul(mul(gin, elems[fi]), g), g);
      uint32_t code =
          codes[fi] | (codes[gi] << kAbstrBits) | (abstr(w) << (2 * kAbstrBits));
      table.record(code, static_cast<uint64_t>(fi) * n + gi);
      ++table.pairs_checked;
    }
  }
  return table;
}

template <class I>
PatternTable scan_family(const Family& fam, const std::vector<GroupElement>& elems);

template <class I, class Elem, class Mul, class Inv, class Abstr, class Pack>
PatternTable scan_with(const std::vector<GroupElement>& elems, Mul mul, Inv inv, Abstr abstr,
                       Pack pack) {
  std::vector<Elem> packed;
  packed.reserve(elems.size());
  for (const auto& e : elems) packed.push_back(pack(e));
  return scan_pairs(packed, mul, inv, abstr);
}

template <class I>
PatternTable scan_family(const Family& fam, const std::vector<GroupElement>& elems) {
  constexpr bool packed = std::is_same_v<I, SafeI64>;
  switch (fam.kind) {
    case FamilyKind::Bs:
      return scan_with<I, BsElemT<I>>(
          elems, [](const auto& a, const auto& b) { return bs_mul(a, b); },
          [](const auto& a) { return bs_inv(a); },
          [](const auto& a) { return abstr_code(bs_level(a), bs_top_sign(a)); },
          [](const GroupElement& e) {
            if constexpr (packed)
              return pack_bs(e.as_bs());
            else
              return e.as_bs();
          });
    case FamilyKind::Tararin:
      return scan_with<I, TarElemT<I>>(
          elems, [](const auto& a, const auto& b) { return tar_mul(a, b); },
          [](const auto& a) { return tar_inv(a); },
          [](const auto& a) { return abstr_code(tar_level(a), tar_top_sign(a)); },
          [](const GroupElement& e) {
            if constexpr (packed)
              return pack_tar(e.as_tar());
            else
              return e.as_tar();
          });
    case FamilyKind::Cn:
      return scan_with<I, CnElemT<I>>(
          elems, [](const auto& a, const auto& b) { return cn_mul(a, b); },
          [](const auto& a) { return cn_inv(a); },
          [](const auto& a) { return abstr_code(cn_level(a), cn_top_sign(a)); },
          [](const GroupElement& e) {
            if constexpr (packed)
              return pack_cn(e.as_cn());
            else
              return e.as_cn();
          });
    case FamilyKind::Abelian:
      return scan_with<I, ZnElemT<I>>(
          elems, [](const auto& a, const auto& b) { return zn_mul(a, b); },
          [](const auto& a) { return zn_inv(a); },
          [](const auto& a) { return abstr_code(zn_level(a), zn_top_sign(a)); },
          [](const GroupElement& e) {
            if constexpr (packed)
              return pack_zn(e.as_zn());
            else
              return e.as_zn();
          });
  }
  throw InternalError("scan_family: bad kind");
}

std::vector<ConradianReport> evaluate_patterns(const std::vector<OrderingDescriptor>& flips,
                                               const PatternTable& table, const Ball& ball) {
  std::vector<ConradianReport> reports;
  reports.reserve(flips.size());
  const size_t n = ball.size();
  for (const auto& ord : flips) {
    const FlipOrder* f = ord.as_flip();
    if (!f) throw UsageError("conradian_check_batch expects flip descriptors");
    // +1 / -1 per level, index 0 unused (identity level)
    std::array<int, 16> level_sign{};
    for (size_t lvl = 1; lvl <= f->flips.size(); ++lvl)
      level_sign[lvl] = f->flips[lvl - 1] ? -1 : 1;

    ConradianReport report;
    report.radius = ball.radius();
    report.pairs_checked = table.pairs_checked;
    uint64_t best = UINT64_MAX;
    for (uint32_t code : table.occupied) {
      auto part = [&](int shift) {
        uint32_t a = (code >> shift) & ((1u << kAbstrBits) - 1);
        int level = static_cast<int>(a >> 1);
        int sign = (a & 1) ? 1 : -1;
        return std::pair<int, int>(level, sign);
      };
      auto [lf, sf] = part(0);
      auto [lg, sg] = part(kAbstrBits);
      auto [lw, sw] = part(2 * kAbstrBits);
      bool f_pos = sf * level_sign[lf] > 0;
      bool g_pos = sg * level_sign[lg] > 0;
      bool w_pos = lw > 0 && sw * level_sign[lw] > 0;
      if (f_pos && g_pos && !w_pos) best = std::min(best, table.min_pair[code]);
    }
    if (best != UINT64_MAX) {
      report.pass = false;
      report.witness = ConradWitness{ball.at(best / n), ball.at(best % n)};
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace

std::vector<ConradianReport> conradian_check_batch(const std::vector<OrderingDescriptor>& flips,
                                                   const Ball& ball) {
  for (const auto& ord : flips)
    if (!(ord.family() == ball.family()))
      throw UsageError("conradian_check_batch: family mismatch");
  PatternTable table;
  try {
    table = scan_family<SafeI64>(ball.family(), ball.elements());
  } catch (const OverflowError&) {
    table = scan_family<Int>(ball.family(), ball.elements());
  }
  return evaluate_patterns(flips, table, ball);
}

ConradianReport conradian_check(const OrderingDescriptor& ord, const Ball& ball,
                                bool check_condition2) {
  if (!(ord.family() == ball.family()))
    throw UsageError("conradian_check: family mismatch");

  ConradianReport report;
  report.radius = ball.radius();

  if (ord.as_flip() && !check_condition2) {
    return conradian_check_batch({ord}, ball).front();
  }

  const auto& elems = ball.elements();
  std::vector<Sign> signs(elems.size());
  std::vector<GroupElement> inverses;
  inverses.reserve(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    signs[i] = sign_of(ord, elems[i]);
    inverses.push_back(invert(elems[i]));
  }

  for (size_t fi = 0; fi < elems.size() && report.pass; ++fi) {
    if (signs[fi] != Sign::Positive) continue;
    for (size_t gi = 0; gi < elems.size(); ++gi) {
      if (signs[gi] != Sign::Positive) continue;
      ++report.pairs_checked;
      // f g^2 > g  iff  g^-1 f g^2 positive
      GroupElement w = multiply(multiply(multiply(inverses[gi], elems[fi]), elems[gi]), elems[gi]);
      if (sign_of(ord, w) != Sign::Positive) {
        report.pass = false;
        report.witness = ConradWitness{elems[fi], elems[gi]};
        break;
      }
    }
  }

  if (check_condition2) {
    report.condition2_checked = true;
    for (size_t fi = 0; fi < elems.size() && !report.condition2_witness; ++fi) {
      if (signs[fi] != Sign::Positive) continue;
      for (size_t gi = 0; gi < elems.size(); ++gi) {
        if (signs[gi] != Sign::Positive) continue;
        // id < g < f: check g^-1 f^2 g > f
        if (compare(ord, elems[gi], elems[fi]) != Cmp::Less) continue;
        GroupElement conj = multiply(multiply(inverses[gi], multiply(elems[fi], elems[fi])), elems[gi]);
        if (compare(ord, elems[fi], conj) != Cmp::Less) {
          report.condition2_witness = ConradWitness{elems[fi], elems[gi]};
          break;
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

ConvexityReport convexity_check(const std::function<bool(const GroupElement&)>& in_s,
                                const OrderingDescriptor& ord, const Ball& ball) {
  ConvexityReport report;
  report.radius = ball.radius();

  std::optional<GroupElement> lo, hi;  // order-min and order-max of S in the ball
  for (const auto& g : ball.elements()) {
    if (!in_s(g)) continue;
    if (!lo || compare(ord, g, *lo) == Cmp::Less) lo = g;
    if (!hi || compare(ord, *hi, g) == Cmp::Less) hi = g;
  }
  if (!lo) return report;  // S misses the ball entirely: vacuously convex

  // h violates iff some S-pair straddles it, i.e. min(S) < h < max(S)
  for (const auto& h : ball.elements()) {
    if (in_s(h)) continue;
    if (compare(ord, *lo, h) == Cmp::Less && compare(ord, h, *hi) == Cmp::Less) {
      report.convex = false;
      report.violation = std::array<GroupElement, 3>{*lo, h, *hi};
      break;
    }
  }
  return report;
}

ConvexityReport convexity_check(int series_level, const OrderingDescriptor& ord,
                                const Ball& ball) {
  int len = series_length(ball.family());
  if (series_level < 0 || series_level > len)
    throw UsageError("convexity_check: series level out of range");
  return convexity_check(
      [series_level](const GroupElement& g) { return series_level_of(g) <= series_level; }, ord,
      ball);
}

Rat conrad_homomorphism(const OrderingDescriptor& flip_ord, const GroupElement& g) {
  const FlipOrder* f = flip_ord.as_flip();
  if (!f) throw UsageError("conrad_homomorphism requires a flip (Conradian) descriptor");
  if (!(f->fam == g.family())) throw UsageError("conrad_homomorphism: family mismatch");
  int len = series_length(f->fam);
  Rat coord = series_level_coordinate(g, len);
  return f->flips[len - 1] ? Rat(-coord) : coord;
}

OrderingDescriptor flip(const OrderingDescriptor& flip_ord, int level) {
  const FlipOrder* f = flip_ord.as_flip();
  if (!f) throw UsageError("flip requires a flip descriptor");
  if (level < 0 || level >= static_cast<int>(f->flips.size()))
    throw UsageError("flip level out of range");
  FlipOrder out = *f;
  out.flips[level] = !out.flips[level];
  return OrderingDescriptor(out);
}

std::vector<OrderingDescriptor> enumerate_c_orderings(const Family& f) {
  RationalSeriesReport series = check_rational_series(f, generate_ball(f, 2));
  if (!series.hypotheses_hold)
    throw UsageError(family_name(f) +
                     " fails the rational-series hypotheses; its C-orderings are not the "
                     "flip family");
  int len = series_length(f);
  std::vector<OrderingDescriptor> out;
  out.reserve(size_t{1} << len);
  for (uint32_t mask = 0; mask < (1u << len); ++mask) {
    std::vector<uint8_t> flips(len);
    for (int j = 0; j < len; ++j) flips[j] = (mask >> (len - 1 - j)) & 1;
    out.push_back(make_flip(f, flips));
  }
  return out;
}

EnumerationReport verify_enumeration(const Family& f, int conradian_radius,
                                     int distinct_radius, size_t cap) {
  EnumerationReport report;
  report.fam = f;
  report.orderings = enumerate_c_orderings(f);
  report.distinct_radius = distinct_radius;
  report.conradian_radius = conradian_radius;
  report.count_matches =
      report.orderings.size() == (size_t{1} << series_length(f));

  Ball small = generate_ball(f, distinct_radius, cap);
  std::set<std::vector<Sign>> patterns;
  for (const auto& ord : report.orderings) {
    std::vector<Sign> pattern;
    pattern.reserve(small.size());
    for (const auto& g : small.elements()) pattern.push_back(sign_of(ord, g));
    patterns.insert(std::move(pattern));
  }
  report.pairwise_distinct = patterns.size() == report.orderings.size();

  Ball ball = generate_ball(f, conradian_radius, cap);
  report.all_conradian = true;
  for (const auto& r : conradian_check_batch(report.orderings, ball))
    report.all_conradian = report.all_conradian && r.pass;
  return report;
}

// ---------------------------------------------------------------------------

RationalSeriesReport check_rational_series(const Family& f, const Ball& ball) {
  RationalSeriesReport report;
  report.fam = f;
  report.radius = ball.radius();
  const int len = series_length(f);

  // rank-1 abelian evidence per quotient
  for (int level = 1; level <= len; ++level) {
    QuotientEvidence ev;
    ev.level = level;
    std::vector<const GroupElement*> members;       // inside G_level
    std::vector<const GroupElement*> proper;        // at level exactly
    for (const auto& g : ball.elements()) {
      int lvl = series_level_of(g);
      if (lvl <= level) members.push_back(&g);
      if (lvl == level) proper.push_back(&g);
    }
    for (size_t i = 0; i < members.size() && ev.images_commute; ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        GroupElement comm = multiply(multiply(*members[i], *members[j]),
                                     invert(multiply(*members[j], *members[i])));
        if (series_level_of(comm) >= level) {
          ev.images_commute = false;
          ev.commute_violation = {*members[i], *members[j]};
          break;
        }
      }
    }
    // commensurability of sampled coset-nontrivial pairs: with p/q the reduced
    // coordinate ratio, x^p y^-q must drop below the level
    constexpr size_t kSampleCap = 24;
    constexpr int64_t kPowerCap = 64;
    size_t limit = std::min(proper.size(), kSampleCap);
    for (size_t i = 0; i < limit; ++i) {
      for (size_t j = i + 1; j < limit; ++j) {
        Rat ci = series_level_coordinate(*proper[i], level);
        Rat cj = series_level_coordinate(*proper[j], level);
        Rat ratio = cj / ci;
        Int p = boost::multiprecision::numerator(ratio);
        Int q = boost::multiprecision::denominator(ratio);
        if (abs(p) > kPowerCap || q > kPowerCap) {
          ++ev.commensurable_skipped;
          continue;
        }
        GroupElement xp = element_power(*proper[i], p.convert_to<int64_t>());
        GroupElement yq = element_power(*proper[j], q.convert_to<int64_t>());
        if (series_level_of(multiply(xp, invert(yq))) < level)
          ++ev.commensurable_pairs;
        else
          ev.rank1_evidence_ok = false;
      }
    }
    report.quotients.push_back(std::move(ev));
  }

  // a non-commuting pair inside each two-step quotient
  for (int i = 0; i + 2 <= len; ++i) {
    StepWitness w;
    w.step = i;
    for (const auto& x : ball.elements()) {
      if (series_level_of(x) > i + 2) continue;
      for (const auto& y : ball.elements()) {
        if (series_level_of(y) > i + 2) continue;
        GroupElement comm =
            multiply(multiply(x, y), invert(multiply(y, x)));
        if (series_level_of(comm) > i) {
          w.noncommuting = {x, y};
          break;
        }
      }
      if (w.noncommuting) break;
    }
    report.steps.push_back(std::move(w));
  }

  report.hypotheses_hold = true;
  for (const auto& q : report.quotients)
    report.hypotheses_hold = report.hypotheses_hold && q.images_commute && q.rank1_evidence_ok;
  for (const auto& s : report.steps)
    report.hypotheses_hold = report.hypotheses_hold && s.noncommuting.has_value();
  return report;
}

// ---------------------------------------------------------------------------

BiInvarianceReport bi_invariance_check(const OrderingDescriptor& ord, const Ball& ball) {
  if (!(ord.family() == ball.family()))
    throw UsageError("bi_invariance_check: family mismatch");
  BiInvarianceReport report;
  report.radius = ball.radius();
  for (const auto& g : ball.elements()) {
    Sign s = sign_of(ord, g);
    for (const auto& h : ball.elements()) {
      ++report.pairs_checked;
      GroupElement conj = conjugate_element(g, h);
      if (sign_of(ord, conj) != s) {
        report.pass = false;
        report.witness = {g, h};
        report.witness_conjugate_is_inverse = conj == invert(g);
        return report;
      }
    }
  }
  return report;
}

}  // namespace conradlab
