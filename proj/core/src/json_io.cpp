#include "conradlab/json_io.hpp"

#include <sstream>

namespace conradlab {

Json int_to_json(const Int& x) {
  if (x >= INT64_MIN && x <= INT64_MAX) return Json(x.convert_to<int64_t>());
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw UsageError("expected an integer or integer string");
}

Json quadratic_to_json(const QuadraticNumber& x) {
  return Json{{"p", rat_str(x.rational_part())},
              {"q", rat_str(x.radical_part())},
              {"d", x.radicand()}};
}

QuadraticNumber quadratic_from_json(const Json& j) {
  return {parse_rat(j.at("p").get<std::string>()), parse_rat(j.at("q").get<std::string>()),
          j.at("d").get<int64_t>()};
}

Json family_fields(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Bs:
      return Json{{"family", "BS"}, {"ell", f.param}};
    case FamilyKind::Tararin:
      return Json{{"family", "T"}, {"n", f.param}};
    case FamilyKind::Cn:
      return Json{{"family", "C"}, {"n", f.param}};
    case FamilyKind::Abelian:
      return Json{{"family", "Z"}, {"n", f.param}};
  }
  throw InternalError("family_fields");
}

Family family_from_json(const Json& j) {
  std::string name = j.at("family").get<std::string>();
  if (name == "BS") return bs_family(j.at("ell").get<int32_t>());
  if (name == "T") return tararin_family(j.at("n").get<int32_t>());
  if (name == "C") return cn_family(j.at("n").get<int32_t>());
  if (name == "Z") return abelian_family(j.at("n").get<int32_t>());
  throw UsageError("unknown family tag '" + name + "'");
}

namespace {

Json lf_to_json(const LFraction& f) {
  return Json{{"num", int_to_json(f.num)}, {"k", f.k}};
}

LFraction lf_from_json(const Json& j, int32_t base) {
  return make_lfraction(int_from_json(j.at("num")), j.at("k").get<int64_t>(), base);
}

}  // namespace

Json element_to_json(const GroupElement& g) {
  Json j = family_fields(g.family());
  switch (g.family().kind) {
    case FamilyKind::Bs: {
      const auto& e = g.as_bs();
      j["r"] = lf_to_json(e.r);
      j["n"] = e.n;
      break;
    }
    case FamilyKind::Tararin: {
      Json coords = Json::array();
      for (const auto& c : g.as_tar().b) coords.push_back(int_to_json(c));
      j["b"] = std::move(coords);
      break;
    }
    case FamilyKind::Cn: {
      const auto& e = g.as_cn();
      j["c"] = e.c;
      j["d"] = lf_to_json(e.d);
      Json coords = Json::array();
      for (const auto& c : e.a) coords.push_back(int_to_json(c));
      j["a"] = std::move(coords);
      break;
    }
    case FamilyKind::Abelian: {
      Json coords = Json::array();
      for (const auto& c : g.as_zn().v) coords.push_back(int_to_json(c));
      j["v"] = std::move(coords);
      break;
    }
  }
  return j;
}

GroupElement element_from_json(const Json& j) {
  Family f = family_from_json(j);
  switch (f.kind) {
    case FamilyKind::Bs:
      return {f, BsElemT<Int>{lf_from_json(j.at("r"), f.param), j.at("n").get<int64_t>()}};
    case FamilyKind::Tararin: {
      TarElemT<Int> e;
      for (const auto& c : j.at("b")) e.b.push_back(int_from_json(c));
      return {f, std::move(e)};
    }
    case FamilyKind::Cn: {
      CnElemT<Int> e;
      e.c = j.at("c").get<int64_t>();
      e.d = lf_from_json(j.at("d"), 3);
      for (const auto& c : j.at("a")) e.a.push_back(int_from_json(c));
      return {f, std::move(e)};
    }
    case FamilyKind::Abelian: {
      ZnElemT<Int> e;
      for (const auto& c : j.at("v")) e.v.push_back(int_from_json(c));
      return {f, std::move(e)};
    }
  }
  throw InternalError("element_from_json");
}

Json descriptor_to_json(const OrderingDescriptor& ord) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FlipOrder>) {
          Json j = family_fields(x.fam);
          j["kind"] = "flip";
          j["flips"] = x.bits();
          return j;
        } else if constexpr (std::is_same_v<T, SmirnovOrder>) {
          Json j{{"kind", "smirnov"}, {"ell", x.ell}, {"epsilon", quadratic_to_json(x.eps)}};
          j["side"] = x.side == SmirnovOrder::Side::Exact
                          ? "exact"
                          : x.side == SmirnovOrder::Side::PlusLimit ? "plus" : "minus";
          j["opposite"] = x.opposite;
          return j;
        } else if constexpr (std::is_same_v<T, SlopeOrder>) {
          Json dir = Json::array();
          for (const auto& c : x.direction) dir.push_back(quadratic_to_json(c));
          return Json{{"kind", "slope"}, {"n", x.n}, {"direction", std::move(dir)},
                      {"tiebreak", x.tiebreak}};
        } else if constexpr (std::is_same_v<T, OppositeOrder>) {
          return Json{{"kind", "opposite"}, {"inner", descriptor_to_json(*x.inner)}};
        } else {
          return Json{{"kind", "conjugate"},
                      {"inner", descriptor_to_json(*x.inner)},
                      {"g", element_to_json(x.g)}};
        }
      },
      ord.data());
}

OrderingDescriptor descriptor_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "flip")
    return make_flip(family_from_json(j), j.at("flips").get<std::string>());
  if (kind == "smirnov") {
    std::string side = j.value("side", "exact");
    SmirnovOrder::Side s = side == "plus" ? SmirnovOrder::Side::PlusLimit
                           : side == "minus" ? SmirnovOrder::Side::MinusLimit
                                             : SmirnovOrder::Side::Exact;
    return make_smirnov(j.at("ell").get<int32_t>(), quadratic_from_json(j.at("epsilon")), s,
                        j.value("opposite", false));
  }
  if (kind == "slope") {
    std::vector<QuadraticNumber> dir;
    for (const auto& c : j.at("direction")) dir.push_back(quadratic_from_json(c));
    std::vector<int32_t> tiebreak;
    if (j.contains("tiebreak")) tiebreak = j.at("tiebreak").get<std::vector<int32_t>>();
    return make_slope(std::move(dir), std::move(tiebreak));
  }
  if (kind == "opposite")
    return OrderingDescriptor(OppositeOrder{
        std::make_shared<const OrderingDescriptor>(descriptor_from_json(j.at("inner")))});
  if (kind == "conjugate")
    return OrderingDescriptor(ConjugateOrder{
        std::make_shared<const OrderingDescriptor>(descriptor_from_json(j.at("inner"))),
        element_from_json(j.at("g"))});
  throw UsageError("unknown descriptor kind '" + kind + "'");
}

Json action_to_json(const AffineAction& action) {
  if (const auto* b = std::get_if<BsAffineData>(&action.data())) {
    return Json{{"type", "bs-affine"},
                {"ell", b->ell},
                {"alpha", quadratic_to_json(b->alpha)},
                {"beta", quadratic_to_json(b->beta)}};
  }
  const auto& z = std::get<ZnTranslationData>(action.data());
  Json dir = Json::array();
  for (const auto& c : z.direction) dir.push_back(quadratic_to_json(c));
  return Json{{"type", "zn-translation"}, {"direction", std::move(dir)}};
}

AffineAction action_from_json(const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "bs-affine")
    return AffineAction::bs(j.at("ell").get<int32_t>(), quadratic_from_json(j.at("alpha")),
                            quadratic_from_json(j.at("beta")));
  if (type == "zn-translation") {
    std::vector<QuadraticNumber> dir;
    for (const auto& c : j.at("direction")) dir.push_back(quadratic_from_json(c));
    return AffineAction::zn_translations(std::move(dir));
  }
  throw UsageError("unknown action type '" + type + "'");
}

Json certificate_to_json(const CrossingCertificate& cert, const AffineAction* action) {
  Json j{{"schema", 1},
         {"kind", "crossing-certificate"},
         {"f", element_to_json(cert.f)},
         {"g", element_to_json(cert.g)},
         {"u", quadratic_to_json(cert.u)},
         {"v", quadratic_to_json(cert.v)},
         {"w", quadratic_to_json(cert.w)},
         {"M", cert.M},
         {"N", cert.N},
         {"mode", cert.mode == CrossingMode::AffineExact ? "affine-exact" : "bounded"}};
  if (cert.mode == CrossingMode::Bounded) j["n_max"] = cert.n_max;
  if (action) j["action"] = action_to_json(*action);
  return j;
}

CrossingCertificate certificate_from_json(const Json& j) {
  CrossingCertificate cert{element_from_json(j.at("f")), element_from_json(j.at("g")),
                           quadratic_from_json(j.at("u")), quadratic_from_json(j.at("v")),
                           quadratic_from_json(j.at("w"))};
  cert.M = j.at("M").get<uint64_t>();
  cert.N = j.at("N").get<uint64_t>();
  cert.mode = j.at("mode").get<std::string>() == "bounded" ? CrossingMode::Bounded
                                                           : CrossingMode::AffineExact;
  cert.n_max = j.value("n_max", uint64_t{0});
  return cert;
}

Json conradian_report_to_json(const ConradianReport& r) {
  Json j{{"check", "conradian"},
         {"result", r.pass ? "pass" : "witness"},
         {"radius", r.radius},
         {"pairs_checked", r.pairs_checked}};
  if (r.witness) {
    j["f"] = element_to_json(r.witness->f);
    j["g"] = element_to_json(r.witness->g);
  }
  if (r.condition2_checked) {
    j["condition2"] = r.condition2_witness ? "witness" : "pass";
    if (r.condition2_witness) {
      j["condition2_f"] = element_to_json(r.condition2_witness->f);
      j["condition2_g"] = element_to_json(r.condition2_witness->g);
    }
  }
  return j;
}

Json cone_report_to_json(const ConeAxiomReport& r) {
  Json j{{"check", "cone-axioms"}, {"result", r.pass ? "pass" : "violations"},
         {"radius", r.radius}};
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json item{{"axiom", v.axiom}, {"g", element_to_json(v.g)}};
    if (v.h) item["h"] = element_to_json(*v.h);
    vs.push_back(std::move(item));
  }
  j["violations"] = std::move(vs);
  return j;
}

Json convexity_report_to_json(const ConvexityReport& r) {
  Json j{{"check", "convexity"}, {"result", r.convex ? "convex" : "violation"},
         {"radius", r.radius}};
  if (r.violation) {
    j["f1"] = element_to_json((*r.violation)[0]);
    j["h"] = element_to_json((*r.violation)[1]);
    j["f2"] = element_to_json((*r.violation)[2]);
  }
  return j;
}

Json bi_invariance_report_to_json(const BiInvarianceReport& r) {
  Json j{{"check", "bi-invariance"},
         {"result", r.pass ? "pass" : "witness"},
         {"radius", r.radius},
         {"pairs_checked", r.pairs_checked}};
  if (r.witness) {
    j["g"] = element_to_json(r.witness->first);
    j["h"] = element_to_json(r.witness->second);
    j["conjugate_is_inverse"] = r.witness_conjugate_is_inverse;
  }
  return j;
}

Json presentation_report_to_json(const PresentationReport& r) {
  Json rel = Json::array();
  for (const auto& rr : r.relators)
    rel.push_back(Json{{"relator", rr.name}, {"holds", rr.holds}, {"value", rr.value}});
  return Json{{"check", "presentation"},
              {"result", r.all_hold ? "pass" : "fail"},
              {"family", family_name(r.fam)},
              {"relators", std::move(rel)}};
}

Json rational_series_report_to_json(const RationalSeriesReport& r) {
  Json quotients = Json::array();
  for (const auto& q : r.quotients) {
    Json item{{"level", q.level},
              {"images_commute", q.images_commute},
              {"rank1_evidence_ok", q.rank1_evidence_ok},
              {"commensurable_pairs", q.commensurable_pairs},
              {"commensurable_skipped", q.commensurable_skipped}};
    if (q.commute_violation) {
      item["x"] = element_to_json(q.commute_violation->first);
      item["y"] = element_to_json(q.commute_violation->second);
    }
    quotients.push_back(std::move(item));
  }
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json item{{"step", s.step}, {"noncommuting_found", s.noncommuting.has_value()}};
    if (s.noncommuting) {
      item["x"] = element_to_json(s.noncommuting->first);
      item["y"] = element_to_json(s.noncommuting->second);
    }
    steps.push_back(std::move(item));
  }
  return Json{{"check", "rational-series"},
              {"result", r.hypotheses_hold ? "pass" : "hypotheses-fail"},
              {"family", family_name(r.fam)},
              {"radius", r.radius},
              {"quotients", std::move(quotients)},
              {"steps", std::move(steps)}};
}

Json agreement_report_to_json(const AgreementReport& r, const OrderingDescriptor& a,
                              const OrderingDescriptor& b) {
  Json j{{"check", "agreement"},
         {"ord1", descriptor_to_json(a)},
         {"ord2", descriptor_to_json(b)},
         {"r_max", r.r_max},
         {"distance", r.distance()}};
  if (r.first_disagreement_radius) {
    j["first_disagreement_radius"] = *r.first_disagreement_radius;
    j["witness"] = element_to_json(*r.witness);
  } else {
    j["first_disagreement_radius"] = ">=" + std::to_string(r.r_max + 1);
  }
  return j;
}

Json realization_check_to_json(const RealizationCheckReport& r) {
  Json j{{"check", "realization"}, {"result", r.pass ? "pass" : "violation"}};
  if (r.violation) {
    j["g"] = element_to_json(std::get<0>(*r.violation));
    j["x"] = rat_str(std::get<1>(*r.violation));
    j["y"] = rat_str(std::get<2>(*r.violation));
  }
  return j;
}

Json epsilon_recovery_to_json(const EpsilonRecovery& r) {
  if (r.status == EpsilonRecovery::Status::Interval)
    return Json{{"check", "recover-epsilon"},
                {"result", "interval"},
                {"lo", rat_str(r.lo)},
                {"hi", rat_str(r.hi)},
                {"width", rat_str(r.hi - r.lo)}};
  return Json{{"check", "recover-epsilon"}, {"result", "not-smirnov"}, {"reason", r.reason}};
}

Json cantor_tree_to_json(const CantorTreeNode& node) {
  Json j{{"radius", node.radius},
         {"pattern_hash", node.pattern_hash}};
  if (!node.leaves.empty()) j["leaves"] = node.leaves;
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(cantor_tree_to_json(c));
  j["children"] = std::move(children);
  return j;
}

void realization_to_csv(const RealizationTable& table, std::ostream& out) {
  out << "element,t\n";
  for (const auto& [g, t] : table.entries)
    out << '"' << compact_str(g) << "\"," << rat_str(t) << "\n";
}

RealizationTable realization_from_csv(const Family& fam, std::istream& in) {
  RealizationTable table;
  table.fam = fam;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      if (line.rfind("element,", 0) == 0) continue;  // column header
    }
    auto comma = line.rfind(',');
    if (comma == std::string::npos) throw UsageError("bad realization CSV row: " + line);
    std::string elem = line.substr(0, comma);
    std::string tstr = line.substr(comma + 1);
    if (elem.size() >= 2 && elem.front() == '"' && elem.back() == '"')
      elem = elem.substr(1, elem.size() - 2);
    GroupElement g = parse_compact(fam, elem);
    Rat t = parse_rat(tstr);
    table.entries.emplace_back(g, t);
    table.value_of.emplace(g, t);
    table.element_at.emplace(t, g);
  }
  if (table.entries.empty()) throw UsageError("realization CSV holds no rows");
  return table;
}

}  // namespace conradlab
