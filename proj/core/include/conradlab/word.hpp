#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conradlab/element.hpp"

namespace conradlab {

struct WordTerm {
  GenId gen;
  int64_t exp = 1;
};

/// A word over a family's fixed generating set; evaluation is the
/// left-to-right product of generator powers.
struct Word {
  std::vector<WordTerm> terms;
};

/// Grammar: whitespace-separated tokens `gen^exp` (exp optional, default 1);
/// generators `a`, `b`, `c`, `a1..an` depending on the family. The token
/// `id` denotes the empty word.
Word parse_word(const Family& f, std::string_view text);

GroupElement eval_word(const Family& f, const Word& w);

std::string word_str(const Family& f, const Word& w);

}  // namespace conradlab
