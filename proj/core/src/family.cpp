#include "conradlab/family.hpp"

namespace conradlab {

Family bs_family(int32_t ell) {
  if (ell < 2) throw UsageError("B(1,ell) requires ell >= 2");
  return {FamilyKind::Bs, ell};
}

Family tararin_family(int32_t n) {
  if (n < 1) throw UsageError("T_n requires n >= 1");
  return {FamilyKind::Tararin, n};
}

Family cn_family(int32_t n) {
  if (n < 1) throw UsageError("C_n requires n >= 1");
  return {FamilyKind::Cn, n};
}

Family abelian_family(int32_t n) {
  if (n < 1) throw UsageError("Z^n requires n >= 1");
  return {FamilyKind::Abelian, n};
}

std::string family_name(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Bs:
      return "B(1," + std::to_string(f.param) + ")";
    case FamilyKind::Tararin:
      return "T_" + std::to_string(f.param);
    case FamilyKind::Cn:
      return "C_" + std::to_string(f.param);
    case FamilyKind::Abelian:
      return "Z^" + std::to_string(f.param);
  }
  throw InternalError("family_name: bad kind");
}

int series_length(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Bs:
      return 2;
    case FamilyKind::Tararin:
    case FamilyKind::Abelian:
      return f.param;
    case FamilyKind::Cn:
      return f.param + 2;
  }
  throw InternalError("series_length: bad kind");
}

std::vector<GenId> generators(const Family& f) {
  std::vector<GenId> out;
  switch (f.kind) {
    case FamilyKind::Bs:
      out.push_back({'a', 0});
      out.push_back({'b', 0});
      break;
    case FamilyKind::Tararin:
    case FamilyKind::Abelian:
      for (int32_t i = 1; i <= f.param; ++i) out.push_back({'a', i});
      break;
    case FamilyKind::Cn:
      for (int32_t i = 1; i <= f.param; ++i) out.push_back({'a', i});
      out.push_back({'b', 0});
      out.push_back({'c', 0});
      break;
  }
  return out;
}

std::string gen_name(const Family& f, const GenId& g) {
  if (g.tag == 'a' && g.index > 0) return "a" + std::to_string(g.index);
  return std::string(1, g.tag);
}

}  // namespace conradlab
