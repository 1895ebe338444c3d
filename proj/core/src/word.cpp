#include "conradlab/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace conradlab {

namespace {

GenId parse_gen(const Family& f, std::string_view tok) {
  if (tok.empty()) throw UsageError("empty generator token");
  char tag = tok[0];
  if (tag != 'a' && tag != 'b' && tag != 'c')
    throw UsageError("unknown generator '" + std::string(tok) + "'");
  int32_t index = 0;
  if (tok.size() > 1) {
    if (tag != 'a') throw UsageError("unknown generator '" + std::string(tok) + "'");
    auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), index);
    if (ec != std::errc() || p != tok.data() + tok.size() || index < 1)
      throw UsageError("unknown generator '" + std::string(tok) + "'");
  }
  GenId g{tag, index};
  for (const auto& known : generators(f))
    if (known == g) return g;
  // `a` means `a1` in the rank-1 indexed families
  if (tag == 'a' && index == 0 && f.kind != FamilyKind::Bs && f.kind != FamilyKind::Cn) {
    GenId a1{'a', 1};
    for (const auto& known : generators(f))
      if (known == a1) return a1;
  }
  throw UsageError("unknown generator '" + std::string(tok) + "' for " + family_name(f));
}

}  // namespace

Word parse_word(const Family& f, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "id" || tok == "1") continue;
    int64_t exp = 1;
    std::string gen = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      gen = tok.substr(0, caret);
      std::string es = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), exp);
      if (ec != std::errc() || p != es.data() + es.size())
        throw UsageError("bad exponent in token '" + tok + "'");
    }
    w.terms.push_back({parse_gen(f, gen), exp});
  }
  return w;
}

GroupElement eval_word(const Family& f, const Word& w) {
  GroupElement acc = identity(f);
  for (const auto& t : w.terms) acc = multiply(acc, generator_power(f, t.gen, t.exp));
  return acc;
}

std::string word_str(const Family& f, const Word& w) {
  if (w.terms.empty()) return "id";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : w.terms) {
    if (!first) os << ' ';
    first = false;
    os << gen_name(f, t.gen);
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

}  // namespace conradlab
