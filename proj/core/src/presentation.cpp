#include "conradlab/presentation.hpp"

namespace conradlab {

namespace {

Word commutator(GenId x, GenId y) {
  return Word{{{x, 1}, {y, 1}, {x, -1}, {y, -1}}};
}

void tararin_relators(int32_t n, std::vector<std::pair<std::string, Word>>& out) {
  for (int32_t i = 1; i < n; ++i) {
    GenId hi{'a', i + 1}, lo{'a', i};
    // a_{i+1} a_i a_{i+1}^-1 = a_i^-1
    out.push_back({"a" + std::to_string(i + 1) + " a" + std::to_string(i) + " a" +
                       std::to_string(i + 1) + "^-1 a" + std::to_string(i),
                   Word{{{hi, 1}, {lo, 1}, {hi, -1}, {lo, 1}}}});
  }
  for (int32_t i = 1; i <= n; ++i)
    for (int32_t j = i + 2; j <= n; ++j)
      out.push_back({"[a" + std::to_string(j) + ",a" + std::to_string(i) + "]",
                     commutator({'a', j}, {'a', i})});
}

}  // namespace

std::vector<std::pair<std::string, Word>> defining_relators(const Family& f) {
  std::vector<std::pair<std::string, Word>> out;
  switch (f.kind) {
    case FamilyKind::Bs:
      out.push_back({"b a b^-1 a^-" + std::to_string(f.param),
                     Word{{{{'b', 0}, 1}, {{'a', 0}, 1}, {{'b', 0}, -1}, {{'a', 0}, -f.param}}}});
      break;
    case FamilyKind::Tararin:
      tararin_relators(f.param, out);
      break;
    case FamilyKind::Cn: {
      const int32_t n = f.param;
      out.push_back({"c b c^-1 b^-3",
                     Word{{{{'c', 0}, 1}, {{'b', 0}, 1}, {{'c', 0}, -1}, {{'b', 0}, -3}}}});
      for (int32_t i = 1; i <= n; ++i)
        out.push_back({"[c,a" + std::to_string(i) + "]", commutator({'c', 0}, {'a', i})});
      out.push_back({"b a" + std::to_string(n) + " b^-1 a" + std::to_string(n),
                     Word{{{{'b', 0}, 1}, {{'a', n}, 1}, {{'b', 0}, -1}, {{'a', n}, 1}}}});
      for (int32_t i = 1; i < n; ++i)
        out.push_back({"[b,a" + std::to_string(i) + "]", commutator({'b', 0}, {'a', i})});
      tararin_relators(n, out);
      break;
    }
    case FamilyKind::Abelian:
      for (int32_t i = 1; i <= f.param; ++i)
        for (int32_t j = i + 1; j <= f.param; ++j)
          out.push_back({"[a" + std::to_string(j) + ",a" + std::to_string(i) + "]",
                         commutator({'a', j}, {'a', i})});
      break;
  }
  return out;
}

PresentationReport verify_presentation(const Family& f) {
  PresentationReport report;
  report.fam = f;
  for (const auto& [name, word] : defining_relators(f)) {
    GroupElement value = eval_word(f, word);
    RelatorReport r;
    r.name = name;
    r.holds = value.is_identity();
    r.value = compact_str(value);
    report.all_hold = report.all_hold && r.holds;
    report.relators.push_back(std::move(r));
  }
  return report;
}

}  // namespace conradlab
