#include "conradlab/dynamics.hpp"

#include <algorithm>

namespace conradlab {

AffineAction AffineAction::bs(int32_t ell, QuadraticNumber alpha, QuadraticNumber beta) {
  if (ell < 2) throw UsageError("affine action requires ell >= 2");
  if (alpha.sign() == 0)
    throw UsageError("affine representation with alpha = 0 is not faithful");
  return AffineAction(BsAffineData{ell, std::move(alpha), std::move(beta)});
}

AffineAction AffineAction::standard_bs(int32_t ell) {
  return bs(ell, QuadraticNumber(Rat(1)), QuadraticNumber());
}

AffineAction AffineAction::zn_translations(std::vector<QuadraticNumber> direction) {
  if (direction.empty()) throw UsageError("translation action needs a direction");
  bool nonzero = false;
  for (const auto& d : direction) nonzero = nonzero || d.sign() != 0;
  if (!nonzero) throw UsageError("translation action direction must be nonzero");
  return AffineAction(ZnTranslationData{std::move(direction)});
}

Family AffineAction::family() const {
  if (const auto* b = std::get_if<BsAffineData>(&data_)) return bs_family(b->ell);
  return abelian_family(
      static_cast<int32_t>(std::get<ZnTranslationData>(data_).direction.size()));
}

AffineMap AffineAction::map_of(const GroupElement& g) const {
  if (!(family() == g.family())) throw UsageError("action family mismatch");
  if (const auto* b = std::get_if<BsAffineData>(&data_)) {
    const auto& e = g.as_bs();
    Rat scale = pow_rat(Rat(b->ell), e.n);
    // translation part: beta (ell^n - 1)/(ell - 1) + alpha r
    QuadraticNumber offset = b->beta * QuadraticNumber(Rat((scale - 1) / (b->ell - 1))) +
                             b->alpha * QuadraticNumber(lf_value(e.r));
    return {scale, std::move(offset)};
  }
  const auto& data = std::get<ZnTranslationData>(data_);
  const auto& e = g.as_zn();
  QuadraticNumber offset;
  for (size_t i = 0; i < data.direction.size(); ++i)
    offset += QuadraticNumber(Rat(e.v[i])) * data.direction[i];
  return {Rat(1), std::move(offset)};
}

AffineRelationReport check_affine_relation(int32_t ell, const Rat& s, const Rat& t,
                                           const QuadraticNumber& alpha,
                                           const QuadraticNumber& beta) {
  if (ell < 2) throw UsageError("check_affine_relation requires ell >= 2");
  if (s <= 0 || t <= 0) throw UsageError("affine scales must be positive");
  AffineMap a{s, alpha}, b{t, beta};
  AffineMap lhs = b.after(a).after(b.inverse());
  AffineMap rhs = a.power(ell);
  AffineRelationReport report;
  report.holds = lhs == rhs;
  report.faithful = report.holds && alpha.sign() != 0;
  return report;
}

// ---------------------------------------------------------------------------

std::string induced_sign_str(InducedSign s) {
  switch (s) {
    case InducedSign::Negative:
      return "negative";
    case InducedSign::Zero:
      return "zero";
    case InducedSign::Positive:
      return "positive";
    case InducedSign::Unresolved:
      return "unresolved";
  }
  throw InternalError("induced_sign_str");
}

InducedSign induced_sign(const AffineAction& action,
                         const std::vector<QuadraticNumber>& basepoints,
                         const GroupElement& g) {
  if (basepoints.empty()) throw UsageError("induced ordering needs at least one basepoint");
  if (g.is_identity()) return InducedSign::Zero;
  AffineMap m = action.map_of(g);
  for (const auto& w : basepoints) {
    int s = (m.apply(w) - w).sign();
    if (s != 0) return s > 0 ? InducedSign::Positive : InducedSign::Negative;
  }
  return InducedSign::Unresolved;
}

std::vector<std::pair<GroupElement, InducedSign>> induced_ordering(
    const AffineAction& action, const std::vector<QuadraticNumber>& basepoints,
    const Ball& ball) {
  std::vector<std::pair<GroupElement, InducedSign>> out;
  out.reserve(ball.size());
  for (const auto& g : ball.elements())
    out.emplace_back(g, induced_sign(action, basepoints, g));
  return out;
}

// ---------------------------------------------------------------------------

CrossingCheck verify_crossing(const CrossingCertificate& cert, const AffineAction& action) {
  CrossingCheck check;
  check.mode = CrossingMode::AffineExact;
  AffineMap F = action.map_of(cert.f);
  AffineMap G = action.map_of(cert.g);
  if (cert.M < 1 || cert.N < 1) {
    check.detail = "witnesses M, N must be positive";
    return check;
  }
  if (!(cert.u < cert.w && cert.w < cert.v)) {
    check.detail = "condition i: u < w < v";
    return check;
  }
  if (!(F.power(static_cast<int64_t>(cert.N)).apply(cert.v) < cert.w)) {
    check.detail = "condition iii: f^N v < w";
    return check;
  }
  if (!(G.power(static_cast<int64_t>(cert.M)).apply(cert.u) > cert.w)) {
    check.detail = "condition iii: w < g^M u";
    return check;
  }
  if (!forall_iterates_below(G, cert.u, cert.v)) {
    check.detail = "condition ii: g^n u < v for all n";
    return check;
  }
  if (!forall_iterates_above(F, cert.v, cert.u)) {
    check.detail = "condition ii: f^n v > u for all n";
    return check;
  }
  check.valid = true;
  return check;
}

namespace {

std::vector<QuadraticNumber> orbit_points(const AffineAction& action, const Ball& ball,
                                          const std::vector<QuadraticNumber>& basepoints) {
  if (basepoints.empty()) throw UsageError("crossing search needs basepoints");
  std::vector<QuadraticNumber> points;
  points.reserve(ball.size() * basepoints.size());
  for (const auto& g : ball.elements()) {
    AffineMap m = action.map_of(g);
    for (const auto& bp : basepoints) points.push_back(m.apply(bp));
  }
  std::sort(points.begin(), points.end(),
            [](const QuadraticNumber& a, const QuadraticNumber& b) { return a < b; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// index of the first point strictly above x
std::optional<size_t> first_above(const std::vector<QuadraticNumber>& pts,
                                  const QuadraticNumber& x) {
  size_t lo = 0, hi = pts.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (pts[mid] > x)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo == pts.size()) return std::nullopt;
  return lo;
}

std::optional<size_t> first_at_or_above(const std::vector<QuadraticNumber>& pts,
                                        const QuadraticNumber& x) {
  size_t lo = 0, hi = pts.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (pts[mid] >= x)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo == pts.size()) return std::nullopt;
  return lo;
}

}  // namespace

std::optional<CrossingCertificate> detect_crossing(const AffineAction& action, const Ball& ball,
                                                   const std::vector<QuadraticNumber>& basepoints,
                                                   const CrossingSearchParams& params) {
  std::vector<QuadraticNumber> points = orbit_points(action, ball, basepoints);
  if (points.empty()) return std::nullopt;

  // Conditions ii + iii force both maps to be contractions with the fixed
  // point of f below the fixed point of g; given that, the valid tuples are
  //   u <= p_f, v >= p_g, w in (p_f, p_g),
  // and the first tuple in ascending scan order takes the least admissible
  // point in each slot.
  std::vector<AffineMap> maps;
  maps.reserve(ball.size());
  for (const auto& g : ball.elements()) maps.push_back(action.map_of(g));

  for (size_t fi = 0; fi < ball.size(); ++fi) {
    const AffineMap& F = maps[fi];
    if (!(F.scale < 1)) continue;
    QuadraticNumber pf = *F.fixed_point();
    if (!(points.front() <= pf)) continue;  // no admissible u
    for (size_t gi = 0; gi < ball.size(); ++gi) {
      const AffineMap& G = maps[gi];
      if (!(G.scale < 1)) continue;
      QuadraticNumber pg = *G.fixed_point();
      if (!(pf < pg)) continue;
      auto vi = first_at_or_above(points, pg);
      if (!vi) continue;
      auto wi = first_above(points, pf);
      if (!wi || !(points[*wi] < pg)) continue;

      const QuadraticNumber& u = points.front();
      const QuadraticNumber& v = points[*vi];
      const QuadraticNumber& w = points[*wi];
      auto M = first_iterate_above(G, u, w, params.iter_cap);
      auto N = first_iterate_below(F, v, w, params.iter_cap);
      if (!M || !N) throw InternalError("detect_crossing: witness iteration disagrees");
      CrossingCertificate cert{ball.at(fi), ball.at(gi), u,
                               v,           w,           *M,
                               *N,          CrossingMode::AffineExact};
      if (!verify_crossing(cert, action).valid)
        throw InternalError("detect_crossing: assembled certificate failed verification");
      return cert;
    }
  }
  return std::nullopt;
}

CrossingCertificate crossing_from_witness(const ConradWitness& wit, const AffineAction& action,
                                          const QuadraticNumber& wbar) {
  AffineMap mf = action.map_of(wit.f);
  AffineMap mg = action.map_of(wit.g);
  if (!(mf.apply(wbar) > wbar) || !(mg.apply(wbar) > wbar))
    throw InternalError("crossing_from_witness: pair is not positive at the basepoint");

  GroupElement fg = multiply(wit.f, wit.g);
  GroupElement fg2 = multiply(fg, wit.g);
  AffineMap mfg = action.map_of(fg);
  AffineMap mfg2 = action.map_of(fg2);

  QuadraticNumber u = wbar;
  QuadraticNumber v = mg.apply(wbar);
  QuadraticNumber w = mfg2.apply(wbar);
  if (!(u < w && w < v))
    throw InternalError("crossing_from_witness: witness does not cross at the basepoint");

  auto N = first_iterate_below(mfg, v, w);
  auto M = first_iterate_above(mfg2, u, w);
  if (!N || !M) throw InternalError("crossing_from_witness: missing iteration witnesses");
  CrossingCertificate cert{std::move(fg), std::move(fg2),           std::move(u), std::move(v),
                           std::move(w),  *M,                       *N,
                           CrossingMode::AffineExact};

  auto check = verify_crossing(cert, action);
  if (!check.valid)
    throw InternalError("crossing_from_witness: certificate failed verification: " +
                        check.detail);
  return cert;
}

// ---------------------------------------------------------------------------

std::optional<Rat> RealizationTable::value(const GroupElement& g) const {
  auto it = value_of.find(g);
  if (it == value_of.end()) return std::nullopt;
  return it->second;
}

std::optional<Rat> RealizationTable::apply(const GroupElement& g, const Rat& x) const {
  auto it = element_at.find(x);
  if (it == element_at.end()) return std::nullopt;
  return value(multiply(g, it->second));
}

std::vector<Rat> RealizationTable::points() const {
  std::vector<Rat> pts;
  pts.reserve(element_at.size());
  for (const auto& [t, g] : element_at) pts.push_back(t);
  return pts;
}

RealizationTable dynamical_realization(const OrderingDescriptor& ord, const Ball& ball,
                                       const std::vector<GroupElement>& enumeration) {
  if (enumeration.size() != ball.size())
    throw UsageError("enumeration must list exactly the ball elements");
  if (enumeration.empty() || !enumeration.front().is_identity())
    throw UsageError("enumeration must start with the identity");
  for (const auto& g : enumeration)
    if (!ball.contains(g)) throw UsageError("enumeration omits ball elements");

  RealizationTable table;
  table.fam = ball.family();

  // inserted elements kept sorted in the source ordering; t-values share
  // that order by construction
  std::vector<std::pair<GroupElement, Rat>> sorted;
  sorted.reserve(enumeration.size());

  for (const auto& x : enumeration) {
    Rat t;
    if (!sorted.empty()) {
      size_t lo = 0, hi = sorted.size();
      while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (compare(ord, sorted[mid].first, x) == Cmp::Less)
          lo = mid + 1;
        else
          hi = mid;
      }
      if (lo == 0)
        t = sorted.front().second - 1;  // new minimum
      else if (lo == sorted.size())
        t = sorted.back().second + 1;  // new maximum
      else
        t = (sorted[lo - 1].second + sorted[lo].second) / 2;  // tightest midpoint
      sorted.insert(sorted.begin() + lo, {x, t});
    } else {
      sorted.push_back({x, t});
    }
    table.entries.emplace_back(x, t);
    table.value_of.emplace(x, t);
    table.element_at.emplace(t, x);
  }
  if (table.value_of.size() != enumeration.size())
    throw UsageError("enumeration repeats elements");
  return table;
}

RealizationTable dynamical_realization(const OrderingDescriptor& ord, const Ball& ball) {
  return dynamical_realization(ord, ball, ball.elements());
}

RealizationCheckReport realization_action_check(const RealizationTable& table,
                                                const OrderingDescriptor& ord, const Ball& ball) {
  RealizationCheckReport report;
  (void)ord;
  for (const auto& g : ball.elements()) {
    // images of the table points under g, in ascending point order
    std::optional<Rat> prev_x, prev_img;
    for (const auto& [x, h] : table.element_at) {
      auto img = table.value(multiply(g, h));
      if (!img) continue;
      if (prev_img && !(*prev_img < *img)) {
        report.pass = false;
        report.violation = {g, *prev_x, x};
        return report;
      }
      prev_x = x;
      prev_img = img;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct OrbitInfo {
  bool survives = false;  // defined for n_max steps
  bool increasing = false;
  bool decreasing = false;
  Rat last;  // value after the final step
};

OrbitInfo table_orbit(const RealizationTable& table, const GroupElement& g, const Rat& start,
                      uint64_t n_max) {
  OrbitInfo info;
  Rat cur = start;
  for (uint64_t n = 1; n <= n_max; ++n) {
    auto next = table.apply(g, cur);
    if (!next) return info;  // leaves the table: cannot certify to depth n_max
    if (*next > cur) info.increasing = true;
    if (*next < cur) info.decreasing = true;
    cur = *next;
  }
  info.survives = true;
  info.last = cur;
  return info;
}

}  // namespace

std::optional<CrossingCertificate> detect_crossing(const RealizationTable& table,
                                                   const Ball& ball,
                                                   const CrossingSearchParams& params) {
  std::vector<Rat> points = table.points();

  // per element: points whose orbit stays in the table for n_max steps and
  // moves strictly up (resp. down); orbits are monotone since the partial
  // action preserves order
  const size_t nelem = ball.size();
  std::vector<std::vector<std::pair<Rat, Rat>>> up(nelem), down(nelem);
  for (size_t i = 0; i < nelem; ++i) {
    const GroupElement& g = ball.at(i);
    for (const Rat& x : points) {
      OrbitInfo info = table_orbit(table, g, x, params.n_max);
      if (!info.survives) continue;
      if (info.increasing && !info.decreasing) up[i].push_back({x, info.last});
      if (info.decreasing && !info.increasing) down[i].push_back({x, info.last});
    }
  }

  for (size_t fi = 0; fi < nelem; ++fi) {
    if (down[fi].empty()) continue;
    for (size_t gi = 0; gi < nelem; ++gi) {
      if (up[gi].empty()) continue;
      // bounded analogue of the contraction window: the g-orbit of u tops out
      // below v, the f-orbit of v bottoms out above u, and w sits strictly
      // between the two reaches
      for (const auto& [u, ureach] : up[gi]) {
        for (const auto& [v, vreach] : down[fi]) {
          if (!(u < v) || !(ureach < v) || !(vreach > u)) continue;
          for (const Rat& w : points) {
            if (!(u < w && w < v && vreach < w && w < ureach)) continue;
            uint64_t M = 0, N = 0;
            Rat cur = u;
            for (uint64_t n = 1; n <= params.n_max && M == 0; ++n) {
              cur = *table.apply(ball.at(gi), cur);
              if (cur > w) M = n;
            }
            cur = v;
            for (uint64_t n = 1; n <= params.n_max && N == 0; ++n) {
              cur = *table.apply(ball.at(fi), cur);
              if (cur < w) N = n;
            }
            if (M == 0 || N == 0) continue;
            CrossingCertificate cert{ball.at(fi),
                                     ball.at(gi),
                                     QuadraticNumber(u),
                                     QuadraticNumber(v),
                                     QuadraticNumber(w),
                                     M,
                                     N,
                                     CrossingMode::Bounded,
                                     params.n_max};
            if (verify_crossing(cert, table, params.n_max).valid) return cert;
          }
        }
      }
    }
  }
  return std::nullopt;
}

CrossingCheck verify_crossing(const CrossingCertificate& cert, const RealizationTable& table,
                              uint64_t n_max) {
  CrossingCheck check;
  check.mode = CrossingMode::Bounded;
  if (!cert.u.is_rational() || !cert.v.is_rational() || !cert.w.is_rational()) {
    check.detail = "table certificates must use table points";
    return check;
  }
  Rat u = cert.u.as_rational(), v = cert.v.as_rational(), w = cert.w.as_rational();
  if (cert.M < 1 || cert.N < 1) {
    check.detail = "witnesses M, N must be positive";
    return check;
  }
  if (!(u < w && w < v)) {
    check.detail = "condition i: u < w < v";
    return check;
  }

  // condition ii to depth n_max plus condition iii at the stored witnesses;
  // an orbit that leaves the table before n_max cannot be certified
  Rat cur = u;
  bool iii_m = false;
  for (uint64_t n = 1; n <= n_max; ++n) {
    auto next = table.apply(cert.g, cur);
    if (!next) {
      check.detail = "condition ii: g-orbit leaves the table before n_max";
      return check;
    }
    cur = *next;
    if (!(cur < v)) {
      check.detail = "condition ii: g^n u < v";
      return check;
    }
    if (n == cert.M && cur > w) iii_m = true;
  }
  if (!iii_m) {
    check.detail = "condition iii: w < g^M u";
    return check;
  }

  cur = v;
  bool iii_n = false;
  for (uint64_t n = 1; n <= n_max; ++n) {
    auto next = table.apply(cert.f, cur);
    if (!next) {
      check.detail = "condition ii: f-orbit leaves the table before n_max";
      return check;
    }
    cur = *next;
    if (!(cur > u)) {
      check.detail = "condition ii: f^n v > u";
      return check;
    }
    if (n == cert.N && cur < w) iii_n = true;
  }
  if (!iii_n) {
    check.detail = "condition iii: f^N v < w";
    return check;
  }
  check.valid = true;
  return check;
}

// ---------------------------------------------------------------------------

namespace {

// query element (r, 1) with r = -t (ell - 1), for a threshold t = c / ell^j
GroupElement threshold_query(int32_t ell, const Int& c, int64_t j) {
  Int num = -c * (ell - 1);
  return {bs_family(ell), BsElemT<Int>{make_lfraction(num, j, ell), 1}};
}

}  // namespace

EpsilonRecovery recover_epsilon(const SignOracle& oracle, int32_t ell, int depth,
                                int escape_log) {
  if (ell < 2) throw UsageError("recover_epsilon requires ell >= 2");
  if (depth < 0) throw UsageError("recover_epsilon requires depth >= 0");

  EpsilonRecovery out;
  auto answer = [&](const Rat& t) -> int {
    Int den = boost::multiprecision::denominator(t);
    int64_t j = 0;
    const Int b(ell);
    while (den > 1) {
      if (den % b != 0) throw InternalError("recover_epsilon: probe not on the ell-adic grid");
      den /= b;
      ++j;
    }
    Sign s = oracle(threshold_query(ell, boost::multiprecision::numerator(t), j));
    if (s == Sign::Zero)
      throw InternalError("recover_epsilon: oracle returned zero off the identity");
    return s == Sign::Positive ? 1 : -1;  // positive: eps lies right of t
  };

  // exponential escape: find integer thresholds answering on both sides
  std::optional<Rat> lo, hi;
  Rat t(1);
  for (int k = 0; k <= escape_log && !hi; ++k) {
    if (answer(t) < 0)
      hi = t;
    else
      lo = t;
    t *= ell;
  }
  if (!hi) {
    out.reason = "no finite upper threshold: signs are consistent with no basepoint";
    return out;
  }
  if (!lo) {
    t = Rat(-1);
    for (int k = 0; k <= escape_log && !lo; ++k) {
      if (answer(t) > 0)
        lo = t;
      else
        hi = t;
      t *= ell;
    }
    if (!lo) {
      out.reason = "no finite lower threshold: signs are consistent with no basepoint";
      return out;
    }
  }

  // bisection on the ell-adic grid: probe within [mid - step, mid],
  // step <= width/4, so the interval contracts geometrically
  Rat width_target = pow_rat(Rat(2), -static_cast<int64_t>(depth));
  while (*hi - *lo > width_target) {
    Rat width = *hi - *lo;
    Rat mid = (*lo + *hi) / 2;
    Rat step(1);
    while (step > width / 4) step /= ell;
    Rat scaled = mid / step;
    Int c = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    if (scaled < 0 && Rat(c) != scaled) c -= 1;  // floor
    Rat probe = Rat(c) * step;
    if (probe <= *lo || probe >= *hi)
      throw InternalError("recover_epsilon: grid probe left the interval");
    if (answer(probe) > 0)
      lo = probe;
    else
      hi = probe;
  }
  out.status = EpsilonRecovery::Status::Interval;
  out.lo = *lo;
  out.hi = *hi;
  return out;
}

}  // namespace conradlab
