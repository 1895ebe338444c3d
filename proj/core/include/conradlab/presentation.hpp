#pragma once

#include <string>
#include <vector>

#include "conradlab/word.hpp"

namespace conradlab {

struct RelatorReport {
  std::string name;   // e.g. "b a b^-1 a^-2"
  bool holds = false;
  std::string value;  // compact form of the evaluated relator
};

struct PresentationReport {
  Family fam;
  std::vector<RelatorReport> relators;
  bool all_hold = true;
};

/// Defining relators of the family's presentation, as words.
std::vector<std::pair<std::string, Word>> defining_relators(const Family& f);

/// Evaluates every defining relator; failures are report content, not errors.
PresentationReport verify_presentation(const Family& f);

}  // namespace conradlab
