// conradlab: exact construction, comparison, verification and enumeration of
// left-orderings on the built-in group families, with machine-readable
// reports.

#include <CLI11.hpp>
#include <algorithm>
#include <random>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conradlab/json_io.hpp"

using namespace conradlab;

namespace {

enum ExitCode : int {
  kExitPass = 0,     // pass / found nothing bad
  kExitFinding = 1,  // witness, certificate or approximant found
  kExitUsage = 2,
  kExitResource = 3,
};

struct Output {
  std::string format = "pretty";  // json | csv | pretty
  std::string path;               // empty: stdout
  bool reproducible = false;

  void emit(const Json& payload, const std::string& pretty_text) const {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw UsageError("cannot open output file " + path);
      out = &file;
    }
    if (format == "json") {
      Json j = payload;
      if (!reproducible) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
      }
      *out << j.dump(2) << "\n";
    } else {
      *out << pretty_text;
    }
  }
};

size_t effective_cap(std::optional<size_t> flag_cap) {
  if (flag_cap) return *flag_cap;
  if (const char* env = std::getenv("CONRADLAB_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
    throw UsageError("CONRADLAB_CAP is not a positive integer");
  }
  return kDefaultBallCap;
}

Family parse_family(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  int32_t param = 0;
  if (colon != std::string::npos) param = std::stoi(spec.substr(colon + 1));
  if (name == "bs") return bs_family(colon == std::string::npos ? 2 : param);
  if (name == "tararin" || name == "t") return tararin_family(param);
  if (name == "cn" || name == "c") return cn_family(param);
  if (name == "z" || name == "abelian") return abelian_family(param);
  throw UsageError("unknown family '" + spec + "' (expected bs:L, tararin:N, cn:N or z:N)");
}

// "sqrt2", "2sqrt3", "1+sqrt2", "-3/4", "1-1/2sqrt2"
QuadraticNumber parse_quadratic(const std::string& s) {
  auto pos = s.find("sqrt");
  if (pos == std::string::npos) return QuadraticNumber(parse_rat(s));
  int64_t d = std::stoll(s.substr(pos + 4));
  std::string before = s.substr(0, pos);
  Rat p(0), q(1);
  if (before.empty()) {
    // plain radical
  } else if (before == "-") {
    q = -1;
  } else if (before == "+") {
    q = 1;
  } else {
    // split at the last sign that separates the rational part from the
    // radical coefficient
    size_t split = std::string::npos;
    for (size_t i = before.size(); i-- > 1;) {
      if ((before[i] == '+' || before[i] == '-') && std::isdigit(before[i - 1])) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      q = parse_rat(before);
    } else {
      p = parse_rat(before.substr(0, split));
      std::string coeff = before.substr(split);
      q = coeff == "+" ? Rat(1) : coeff == "-" ? Rat(-1) : parse_rat(coeff);
    }
  }
  return {p, q, d};
}

OrderingDescriptor parse_descriptor(const std::string& spec, std::optional<Family> fam) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ':') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.empty()) throw UsageError("empty ordering spec");
  bool opp = !parts.empty() && parts.back() == "opp";
  if (opp) parts.pop_back();

  OrderingDescriptor ord = [&]() -> OrderingDescriptor {
    if (parts[0] == "flip") {
      if (parts.size() != 2) throw UsageError("expected flip:BITS");
      if (!fam) throw UsageError("flip orderings need --family");
      return make_flip(*fam, parts[1]);
    }
    if (parts[0] == "smirnov") {
      if (parts.size() < 2) throw UsageError("expected smirnov:EPS[:+|-]");
      int32_t ell = 2;
      if (fam) {
        if (fam->kind != FamilyKind::Bs)
          throw UsageError("smirnov orderings live on B(1,ell)");
        ell = fam->param;
      }
      auto side = SmirnovOrder::Side::Exact;
      if (parts.size() >= 3) {
        if (parts[2] == "+")
          side = SmirnovOrder::Side::PlusLimit;
        else if (parts[2] == "-")
          side = SmirnovOrder::Side::MinusLimit;
        else
          throw UsageError("bad side '" + parts[2] + "' (expected + or -)");
      }
      QuadraticNumber eps = parse_quadratic(parts[1]);
      if (side == SmirnovOrder::Side::Exact && eps.is_rational())
        throw UsageError("rational basepoint '" + parts[1] + "' needs a side, e.g. smirnov:" +
                         parts[1] + ":+");
      return make_smirnov(ell, eps, side);
    }
    if (parts[0] == "slope") {
      if (parts.size() != 2) throw UsageError("expected slope:C1,C2,...");
      std::vector<QuadraticNumber> dir;
      size_t begin = 0;
      const std::string& body = parts[1];
      for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
          dir.push_back(parse_quadratic(body.substr(begin, i - begin)));
          begin = i + 1;
        }
      }
      return make_slope(std::move(dir));
    }
    throw UsageError("unknown ordering kind '" + parts[0] +
                     "' (expected flip, smirnov or slope)");
  }();
  return opp ? opposite(ord) : ord;
}

OrderingDescriptor load_descriptor(const std::string& ord_spec, const std::string& ord_file,
                                   std::optional<Family> fam) {
  if (!ord_file.empty()) {
    std::ifstream in(ord_file);
    if (!in) throw UsageError("cannot read --ord-file " + ord_file);
    return descriptor_from_json(Json::parse(in));
  }
  if (ord_spec.empty()) throw UsageError("an ordering is required (--ord or --ord-file)");
  return parse_descriptor(ord_spec, fam);
}

Json base_config(const Output& out, size_t cap) {
  return Json{{"cap", cap}, {"format", out.format}, {"reproducible", out.reproducible}};
}

Json envelope(const std::string& command, Json config, Json result) {
  return Json{{"schema", 1},
              {"command", command},
              {"config", std::move(config)},
              {"result", std::move(result)}};
}

// the natural line action attached to a descriptor, for crossing searches
struct NaturalAction {
  std::optional<AffineAction> affine;
  std::vector<QuadraticNumber> basepoints;
  std::optional<RealizationTable> table;  // realization of non-affine orderings
};

NaturalAction natural_action(const OrderingDescriptor& ord, const Ball& ball) {
  NaturalAction out;
  if (const SmirnovOrder* s = ord.as_smirnov()) {
    if (!s->opposite) {
      out.affine = AffineAction::standard_bs(s->ell);
      out.basepoints = {s->eps};
      return out;
    }
  }
  if (const SlopeOrder* s = ord.as_slope()) {
    out.affine = AffineAction::zn_translations(s->direction);
    out.basepoints = {QuadraticNumber()};
    return out;
  }
  out.table = dynamical_realization(ord, ball);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact left-ordering laboratory for B(1,ell), T_n, C_n and Z^n"};
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  std::optional<size_t> cap_flag;
  app.add_option("--format", output.format, "output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("-o,--output", output.path, "write output to a file");
  app.add_flag("--reproducible", output.reproducible, "suppress the timestamp field");
  app.add_option("--cap", cap_flag, "ball element cap (or env CONRADLAB_CAP)");

  std::string family_spec, ord_spec, ord_file, ord1_spec, ord2_spec;
  int radius = 6;
  uint64_t n_max = 64;

  // --- compare ---------------------------------------------------------
  auto* cmd_compare = app.add_subcommand("compare", "compare two words in an ordering");
  std::string word_g, word_h;
  cmd_compare->add_option("--family", family_spec, "family, e.g. bs:2");
  cmd_compare->add_option("--ord", ord_spec, "ordering spec, e.g. smirnov:sqrt2");
  cmd_compare->add_option("--ord-file", ord_file, "ordering descriptor JSON file");
  cmd_compare->add_option("word-g", word_g, "first word")->required();
  cmd_compare->add_option("word-h", word_h, "second word")->required();

  // --- enumerate -------------------------------------------------------
  auto* cmd_enumerate = app.add_subcommand("enumerate", "enumerate the flip orderings");
  int distinct_radius = 2;
  int conr_radius = 6;
  cmd_enumerate->add_option("--family", family_spec)->required();
  cmd_enumerate->add_option("-R,--radius", conr_radius, "conradian verification radius");
  cmd_enumerate->add_option("--distinct-radius", distinct_radius);

  // --- verify ----------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "run a named check");
  std::string check_name, table_file;
  int level = 1;
  bool check_condition2 = false;
  cmd_verify->add_option("check", check_name,
                         "conradian | bi-invariance | convexity | cone-axioms | presentation "
                         "| rational-series | realization")
      ->required();
  cmd_verify->add_option("--family", family_spec);
  cmd_verify->add_option("--ord", ord_spec);
  cmd_verify->add_option("--ord-file", ord_file);
  cmd_verify->add_option("-R,--radius", radius);
  cmd_verify->add_option("--level", level, "series level for convexity");
  cmd_verify->add_option("--table", table_file, "realization CSV to re-check");
  cmd_verify->add_flag("--check-condition2", check_condition2,
                       "also cross-check the conjugation form of the criterion");

  // --- crossing --------------------------------------------------------
  auto* cmd_crossing = app.add_subcommand("crossing", "search or build crossing certificates");
  bool from_witness = false;
  std::string wbar_spec = "sqrt2";
  cmd_crossing->add_option("--family", family_spec);
  cmd_crossing->add_option("--ord", ord_spec);
  cmd_crossing->add_option("--ord-file", ord_file);
  cmd_crossing->add_option("-R,--radius", radius);
  cmd_crossing->add_option("--n-max", n_max, "bounded-mode depth");
  cmd_crossing->add_flag("--from-witness", from_witness,
                         "build the certificate from the first Conradian violation");
  cmd_crossing->add_option("--wbar", wbar_spec, "basepoint for --from-witness");
  auto* cmd_crossing_verify =
      cmd_crossing->add_subcommand("verify", "re-verify an exported certificate");
  std::string cert_file;
  cmd_crossing_verify->add_option("file", cert_file, "certificate JSON")->required();

  // --- realize ---------------------------------------------------------
  auto* cmd_realize = app.add_subcommand("realize", "export a dynamical realization table");
  std::string enumeration_spec = "canonical";
  cmd_realize->add_option("--family", family_spec);
  cmd_realize->add_option("--ord", ord_spec);
  cmd_realize->add_option("--ord-file", ord_file);
  cmd_realize->add_option("-R,--radius", radius);
  cmd_realize->add_option("--enumeration", enumeration_spec,
                          "canonical | reverse | shuffle:SEED");

  // --- space -----------------------------------------------------------
  auto* cmd_space = app.add_subcommand("space", "ordering-space probes");
  cmd_space->require_subcommand(1);
  auto* cmd_distance = cmd_space->add_subcommand("distance", "ultrametric distance");
  cmd_distance->add_option("--family", family_spec);
  cmd_distance->add_option("--ord1", ord1_spec)->required();
  cmd_distance->add_option("--ord2", ord2_spec)->required();
  cmd_distance->add_option("-R,--radius", radius);

  auto* cmd_isolate = cmd_space->add_subcommand("isolate", "non-isolation probe");
  std::string pool_name = "smirnov";
  cmd_isolate->add_option("--family", family_spec);
  cmd_isolate->add_option("--ord", ord_spec);
  cmd_isolate->add_option("--ord-file", ord_file);
  cmd_isolate->add_option("--candidates", pool_name, "smirnov | c-orderings | slope");
  cmd_isolate->add_option("-R,--radius", radius);

  auto* cmd_tree = cmd_space->add_subcommand("tree", "sign-pattern prefix tree");
  int samples = 16;
  cmd_tree->add_option("--family", family_spec);
  cmd_tree->add_option("--samples", samples, "basepoint orderings sampled per threshold gaps");
  cmd_tree->add_option("-R,--radius", radius);

  auto* cmd_converge = cmd_space->add_subcommand("converge", "convergence of a sequence");
  std::string seq_spec = "pow2:10", limit_spec;
  std::string seq_file;
  cmd_converge->add_option("--family", family_spec);
  cmd_converge->add_option("--limit", limit_spec)->required();
  cmd_converge->add_option("--seq", seq_spec, "pow2:K for basepoints 2^k sqrt2, k=1..K");
  cmd_converge->add_option("--seq-file", seq_file, "JSON array of descriptors");
  cmd_converge->add_option("-R,--radius", radius);

  CLI11_PARSE(app, argc, argv);
  size_t cap = effective_cap(cap_flag);

  std::optional<Family> fam;
  if (!family_spec.empty()) fam = parse_family(family_spec);

  // ----------------------------------------------------------------------
  if (*cmd_compare) {
    auto ord = load_descriptor(ord_spec, ord_file, fam);
    Family f = ord.family();
    GroupElement g = eval_word(f, parse_word(f, word_g));
    GroupElement h = eval_word(f, parse_word(f, word_h));
    Cmp c = compare(ord, g, h);
    GroupElement ginv_h = multiply(invert(g), h);
    Json config = base_config(output, cap);
    config["ord"] = descriptor_to_json(ord);
    Json result{{"comparison", cmp_str(c)},
                {"trace",
                 Json{{"g", element_to_json(g)},
                      {"h", element_to_json(h)},
                      {"g_inv_h", element_to_json(ginv_h)},
                      {"sign_of_g_inv_h", sign_str(sign_of(ord, ginv_h))}}}};
    std::ostringstream pretty;
    pretty << cmp_str(c) << "\n"
           << "  g = " << compact_str(g) << ", h = " << compact_str(h) << "\n"
           << "  g^-1 h = " << compact_str(ginv_h) << " is "
           << sign_str(sign_of(ord, ginv_h)) << "\n";
    output.emit(envelope("compare", config, result), pretty.str());
    return kExitPass;
  }

  // ----------------------------------------------------------------------
  if (*cmd_enumerate) {
    auto report = verify_enumeration(*fam, conr_radius, distinct_radius, cap);
    Json orderings = Json::array();
    for (const auto& ord : report.orderings) orderings.push_back(descriptor_to_json(ord));
    Json config = base_config(output, cap);
    config["family"] = family_fields(*fam);
    config["radius"] = conr_radius;
    config["distinct_radius"] = distinct_radius;
    Json result{{"count", report.orderings.size()},
                {"expected", uint64_t{1} << series_length(*fam)},
                {"count_matches", report.count_matches},
                {"pairwise_distinct", report.pairwise_distinct},
                {"all_conradian", report.all_conradian},
                {"orderings", std::move(orderings)}};
    std::ostringstream pretty;
    pretty << family_name(*fam) << ": " << report.orderings.size() << " C-orderings"
           << (report.count_matches ? "" : " (count mismatch!)") << "\n"
           << "  pairwise distinct on Ball(" << distinct_radius << "): "
           << (report.pairwise_distinct ? "yes" : "no") << "\n"
           << "  all pass the Conradian check on Ball(" << conr_radius << "): "
           << (report.all_conradian ? "yes" : "no") << "\n";
    output.emit(envelope("enumerate", config, result), pretty.str());
    bool ok = report.count_matches && report.pairwise_distinct && report.all_conradian;
    return ok ? kExitPass : kExitFinding;
  }

  // ----------------------------------------------------------------------
  if (*cmd_verify) {
    Json config = base_config(output, cap);
    config["check"] = check_name;
    config["radius"] = radius;
    Json result;
    bool pass = false;

    if (check_name == "presentation") {
      if (!fam) throw UsageError("verify presentation needs --family");
      auto report = verify_presentation(*fam);
      result = presentation_report_to_json(report);
      pass = report.all_hold;
      config["family"] = family_fields(*fam);
    } else if (check_name == "rational-series") {
      if (!fam) throw UsageError("verify rational-series needs --family");
      auto report = check_rational_series(*fam, generate_ball(*fam, radius, cap));
      result = rational_series_report_to_json(report);
      pass = report.hypotheses_hold;
      config["family"] = family_fields(*fam);
    } else {
      auto ord = load_descriptor(ord_spec, ord_file, fam);
      config["ord"] = descriptor_to_json(ord);
      Ball ball = generate_ball(ord.family(), radius, cap);
      if (check_name == "conradian") {
        auto report = conradian_check(ord, ball, check_condition2);
        result = conradian_report_to_json(report);
        pass = report.pass;
      } else if (check_name == "bi-invariance") {
        auto report = bi_invariance_check(ord, ball);
        result = bi_invariance_report_to_json(report);
        pass = report.pass;
      } else if (check_name == "convexity") {
        auto report = convexity_check(level, ord, ball);
        result = convexity_report_to_json(report);
        pass = report.convex;
        config["level"] = level;
      } else if (check_name == "cone-axioms") {
        auto report = check_cone_axioms(ord, ball);
        result = cone_report_to_json(report);
        pass = report.pass;
      } else if (check_name == "realization") {
        RealizationTable table = [&] {
          if (table_file.empty()) return dynamical_realization(ord, ball);
          std::ifstream in(table_file);
          if (!in) throw UsageError("cannot read --table " + table_file);
          return realization_from_csv(ord.family(), in);
        }();
        auto report = realization_action_check(table, ord, ball);
        bool monotone = true;
        Rat prev;
        bool first = true;
        for (const auto& [t, g] : table.element_at) {
          (void)g;
          if (!first && !(prev < t)) monotone = false;
          prev = t;
          first = false;
        }
        bool base_zero = table.value(identity(ord.family())) == Rat(0);
        result = realization_check_to_json(report);
        result["order_preserving"] = monotone;
        result["base_is_zero"] = base_zero;
        pass = report.pass && monotone && base_zero;
      } else {
        throw UsageError("unknown check '" + check_name + "'");
      }
    }

    std::ostringstream pretty;
    pretty << "verify " << check_name << ": " << (pass ? "pass" : "FINDING") << "\n"
           << result.dump(2) << "\n";
    output.emit(envelope("verify", config, result), pretty.str());
    return pass ? kExitPass : kExitFinding;
  }

  // ----------------------------------------------------------------------
  if (*cmd_crossing) {
    Json config = base_config(output, cap);

    if (*cmd_crossing_verify) {
      std::ifstream in(cert_file);
      if (!in) throw UsageError("cannot read certificate " + cert_file);
      Json j = Json::parse(in);
      auto cert = certificate_from_json(j);
      if (!j.contains("action"))
        throw UsageError("certificate file does not record its action");
      auto action = action_from_json(j["action"]);
      auto check = verify_crossing(cert, action);
      Json result{{"valid", check.valid}, {"detail", check.detail},
                  {"mode", j["mode"]}};
      std::ostringstream pretty;
      pretty << "certificate " << (check.valid ? "valid" : "INVALID") << "\n";
      if (!check.valid) pretty << "  " << check.detail << "\n";
      output.emit(envelope("crossing-verify", config, result), pretty.str());
      return check.valid ? kExitPass : kExitFinding;
    }

    auto ord = load_descriptor(ord_spec, ord_file, fam);
    config["ord"] = descriptor_to_json(ord);
    config["radius"] = radius;
    config["n_max"] = n_max;
    Ball ball = generate_ball(ord.family(), radius, cap);
    NaturalAction nat = natural_action(ord, ball);
    CrossingSearchParams params;
    params.n_max = n_max;

    std::optional<CrossingCertificate> cert;
    if (from_witness) {
      if (!nat.affine) throw UsageError("--from-witness needs an affine ordering (smirnov/slope)");
      auto report = conradian_check(ord, ball);
      if (!report.witness) {
        Json result{{"found", false}, {"note", "no Conradian violation on this ball"}};
        output.emit(envelope("crossing", config, result), "none\n");
        return kExitPass;
      }
      cert = crossing_from_witness(*report.witness, *nat.affine,
                                   parse_quadratic(wbar_spec));
    } else if (nat.affine) {
      cert = detect_crossing(*nat.affine, ball, nat.basepoints, params);
    } else {
      cert = detect_crossing(*nat.table, ball, params);
    }

    if (!cert) {
      Json result{{"found", false}};
      output.emit(envelope("crossing", config, result), "none\n");
      return kExitPass;
    }
    Json result{{"found", true},
                {"certificate",
                 certificate_to_json(*cert, nat.affine ? &*nat.affine : nullptr)}};
    std::ostringstream pretty;
    pretty << "crossing certificate (" 
           << (cert->mode == CrossingMode::AffineExact ? "affine-exact" : "bounded") << ")\n"
           << "  f = " << compact_str(cert->f) << ", g = " << compact_str(cert->g) << "\n"
           << "  u = " << cert->u.str() << ", w = " << cert->w.str()
           << ", v = " << cert->v.str() << "\n"
           << "  M = " << cert->M << ", N = " << cert->N << "\n";
    output.emit(envelope("crossing", config, result), pretty.str());
    return kExitFinding;
  }

  // ----------------------------------------------------------------------
  if (*cmd_realize) {
    auto ord = load_descriptor(ord_spec, ord_file, fam);
    Ball ball = generate_ball(ord.family(), radius, cap);
    std::vector<GroupElement> enumeration = ball.elements();
    if (enumeration_spec == "reverse") {
      std::reverse(enumeration.begin() + 1, enumeration.end());
    } else if (enumeration_spec.rfind("shuffle:", 0) == 0) {
      std::mt19937 rng(static_cast<uint32_t>(std::stoul(enumeration_spec.substr(8))));
      std::shuffle(enumeration.begin() + 1, enumeration.end(), rng);
    } else if (enumeration_spec != "canonical") {
      throw UsageError("unknown enumeration '" + enumeration_spec + "'");
    }
    auto table = dynamical_realization(ord, ball, enumeration);

    Json config = base_config(output, cap);
    config["ord"] = descriptor_to_json(ord);
    config["radius"] = radius;
    config["enumeration"] = enumeration_spec;
    std::ostringstream csv;
    if (output.format != "json") csv << "# config: " << config.dump() << "\n";
    realization_to_csv(table, csv);
    if (output.format == "json") {
      Json rows = Json::array();
      for (const auto& [g, t] : table.entries)
        rows.push_back(Json{{"element", element_to_json(g)}, {"t", rat_str(t)}});
      output.emit(envelope("realize", config, Json{{"table", std::move(rows)}}), csv.str());
    } else {
      output.emit(Json{}, csv.str());
    }
    return kExitPass;
  }

  // ----------------------------------------------------------------------
  if (*cmd_distance) {
    auto o1 = parse_descriptor(ord1_spec, fam);
    auto o2 = parse_descriptor(ord2_spec, fam);
    auto report = agreement_radius(o1, o2, radius, cap);
    Json config = base_config(output, cap);
    config["radius"] = radius;
    Json result = agreement_report_to_json(report, o1, o2);
    std::ostringstream pretty;
    pretty << "distance " << report.distance() << "\n";
    if (report.witness)
      pretty << "  first disagreement at " << compact_str(*report.witness) << " (radius "
             << *report.first_disagreement_radius << ")\n";
    output.emit(envelope("space-distance", config, result), pretty.str());
    return kExitPass;
  }

  if (*cmd_isolate) {
    auto ord = load_descriptor(ord_spec, ord_file, fam);
    CandidatePool pool;
    if (pool_name == "smirnov")
      pool = CandidatePool::SmirnovFamily;
    else if (pool_name == "c-orderings")
      pool = CandidatePool::COrderingFamily;
    else if (pool_name == "slope")
      pool = CandidatePool::SlopeNeighbors;
    else
      throw UsageError("unknown candidate pool '" + pool_name + "'");
    auto result = isolation_probe(ord, pool, radius, cap);
    Json config = base_config(output, cap);
    config["ord"] = descriptor_to_json(ord);
    config["radius"] = radius;
    config["candidates"] = pool_name;
    Json jres{{"found", result.approximant.has_value()},
              {"candidates_tried", result.candidates_tried}};
    std::ostringstream pretty;
    if (result.approximant) {
      jres["approximant"] = descriptor_to_json(*result.approximant);
      jres["distinctness_witness"] = element_to_json(*result.distinctness_witness);
      pretty << "approximant found: " << result.approximant->str() << "\n"
             << "  agrees on Ball(" << radius << "), differs at "
             << compact_str(*result.distinctness_witness) << "\n";
    } else {
      pretty << "no approximant among " << result.candidates_tried << " candidates\n";
    }
    output.emit(envelope("space-isolate", config, jres), pretty.str());
    return result.approximant ? kExitFinding : kExitPass;
  }

  if (*cmd_tree) {
    Family f = fam.value_or(bs_family(2));
    if (f.kind != FamilyKind::Bs) throw UsageError("space tree samples B(1,ell) orderings");
    Ball ball = generate_ball(f, radius, cap);
    auto thresholds = smirnov_thresholds(f.param, ball);
    std::vector<OrderingDescriptor> descriptors;
    for (size_t i = 0; i + 1 < thresholds.size() && descriptors.size() < size_t(samples); ++i) {
      Rat mid = (thresholds[i] + thresholds[i + 1]) / 2;
      if (thresholds[i] == thresholds[i + 1]) continue;
      descriptors.push_back(
          make_smirnov(f.param, QuadraticNumber(mid), SmirnovOrder::Side::PlusLimit));
    }
    auto tree = cantor_tree(descriptors, radius, cap);
    Json config = base_config(output, cap);
    config["family"] = family_fields(f);
    config["radius"] = radius;
    config["samples"] = descriptors.size();
    Json jdescs = Json::array();
    for (const auto& d : descriptors) jdescs.push_back(descriptor_to_json(d));
    Json result{{"tree", cantor_tree_to_json(tree)},
                {"descriptors", std::move(jdescs)},
                {"leaves", tree.leaf_count()},
                {"branching_nodes", tree.branching_nodes()}};
    std::ostringstream pretty;
    pretty << "tree over " << descriptors.size() << " descriptors: " << tree.leaf_count()
           << " leaves, " << tree.branching_nodes() << " branching nodes\n";
    output.emit(envelope("space-tree", config, result), pretty.str());
    return kExitPass;
  }

  if (*cmd_converge) {
    auto limit = parse_descriptor(limit_spec, fam);
    std::vector<OrderingDescriptor> seq;
    if (!seq_file.empty()) {
      std::ifstream in(seq_file);
      if (!in) throw UsageError("cannot read --seq-file " + seq_file);
      for (const auto& j : Json::parse(in)) seq.push_back(descriptor_from_json(j));
    } else if (seq_spec.rfind("pow2:", 0) == 0) {
      int count = std::stoi(seq_spec.substr(5));
      for (int k = 1; k <= count; ++k)
        seq.push_back(make_smirnov(limit.family().param,
                                   QuadraticNumber(Rat(0), Rat(Int(1) << k), 2)));
    } else {
      throw UsageError("unknown --seq '" + seq_spec + "'");
    }
    auto report = convergence_check(seq, limit, radius, cap);
    Json config = base_config(output, cap);
    config["limit"] = descriptor_to_json(limit);
    config["radius"] = radius;
    config["sequence_length"] = seq.size();
    Json result{{"agrees_from",
                 report.agrees_from ? Json(*report.agrees_from) : Json(nullptr)}};
    std::ostringstream pretty;
    if (report.agrees_from)
      pretty << "agrees with the limit on Ball(" << radius << ") from index "
             << *report.agrees_from << "\n";
    else
      pretty << "the listed prefix never settles on Ball(" << radius << ")\n";
    output.emit(envelope("space-converge", config, result), pretty.str());
    return report.agrees_from ? kExitPass : kExitFinding;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
