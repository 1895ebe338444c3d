#include "conradlab/element.hpp"

#include <sstream>

namespace conradlab {

namespace {

void check_same_family(const GroupElement& x, const GroupElement& y) {
  if (!(x.family() == y.family()))
    throw UsageError("family mismatch: " + family_name(x.family()) + " vs " +
                     family_name(y.family()));
}

int rat_cmp(const Rat& a, const Rat& b) { return sgn(a - b); }

int lf_cmp(const LFraction& a, const LFraction& b) {
  // compare num_a / base^ka vs num_b / base^kb by cross multiplication
  int64_t k = a.k > b.k ? a.k : b.k;
  Int lhs = a.num * pow_int(Int(a.base), k - a.k);
  Int rhs = b.num * pow_int(Int(b.base), k - b.k);
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

template <class V>
int vec_cmp(const V& a, const V& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

int64_t to_i64(const Int& x) {
  if (x < INT64_MIN || x > INT64_MAX) throw OverflowError("coordinate exceeds 64 bits");
  return static_cast<int64_t>(x);
}

}  // namespace

GroupElement::GroupElement(Family fam, Payload payload)
    : fam_(fam), payload_(std::move(payload)) {
  switch (fam_.kind) {
    case FamilyKind::Bs: {
      const auto& e = as_bs();
      if (e.r.base != fam_.param) throw UsageError("BS element base does not match family ell");
      break;
    }
    case FamilyKind::Tararin:
      if (static_cast<int32_t>(as_tar().b.size()) != fam_.param)
        throw UsageError("Tararin element arity mismatch");
      break;
    case FamilyKind::Cn: {
      const auto& e = as_cn();
      if (static_cast<int32_t>(e.a.size()) != fam_.param)
        throw UsageError("C_n element arity mismatch");
      if (e.d.base != 3) throw UsageError("C_n element d-part must have base 3");
      break;
    }
    case FamilyKind::Abelian:
      if (static_cast<int32_t>(as_zn().v.size()) != fam_.param)
        throw UsageError("Z^n element arity mismatch");
      break;
  }
}

const BsElemT<Int>& GroupElement::as_bs() const { return std::get<BsElemT<Int>>(payload_); }
const TarElemT<Int>& GroupElement::as_tar() const { return std::get<TarElemT<Int>>(payload_); }
const CnElemT<Int>& GroupElement::as_cn() const { return std::get<CnElemT<Int>>(payload_); }
const ZnElemT<Int>& GroupElement::as_zn() const { return std::get<ZnElemT<Int>>(payload_); }

bool GroupElement::is_identity() const { return series_level_of(*this) == 0; }

GroupElement identity(const Family& f) {
  switch (f.kind) {
    case FamilyKind::Bs:
      return {f, BsElemT<Int>{make_lfraction(Int(0), 0, f.param), 0}};
    case FamilyKind::Tararin: {
      TarElemT<Int> e;
      e.b.resize(f.param, Int(0));
      return {f, std::move(e)};
    }
    case FamilyKind::Cn: {
      CnElemT<Int> e;
      e.a.resize(f.param, Int(0));
      return {f, std::move(e)};
    }
    case FamilyKind::Abelian: {
      ZnElemT<Int> e;
      e.v.resize(f.param, Int(0));
      return {f, std::move(e)};
    }
  }
  throw InternalError("identity: bad kind");
}

GroupElement generator_power(const Family& f, const GenId& g, int64_t exp) {
  auto bad = [&] { return UsageError("unknown generator '" + gen_name(f, g) + "' for " + family_name(f)); };
  switch (f.kind) {
    case FamilyKind::Bs:
      if (g.tag == 'a' && g.index == 0)
        return {f, BsElemT<Int>{make_lfraction(Int(exp), 0, f.param), 0}};
      if (g.tag == 'b' && g.index == 0)
        return {f, BsElemT<Int>{make_lfraction(Int(0), 0, f.param), exp}};
      throw bad();
    case FamilyKind::Tararin: {
      if (g.tag != 'a' || g.index < 1 || g.index > f.param) throw bad();
      TarElemT<Int> e;
      e.b.resize(f.param, Int(0));
      e.b[f.param - g.index] = exp;
      return {f, std::move(e)};
    }
    case FamilyKind::Cn: {
      CnElemT<Int> e;
      e.a.resize(f.param, Int(0));
      if (g.tag == 'c' && g.index == 0) {
        e.c = exp;
      } else if (g.tag == 'b' && g.index == 0) {
        e.d = make_lfraction(Int(exp), 0, 3);
      } else if (g.tag == 'a' && g.index >= 1 && g.index <= f.param) {
        e.a[f.param - g.index] = exp;
      } else {
        throw bad();
      }
      return {f, std::move(e)};
    }
    case FamilyKind::Abelian: {
      if (g.tag != 'a' || g.index < 1 || g.index > f.param) throw bad();
      ZnElemT<Int> e;
      e.v.resize(f.param, Int(0));
      e.v[g.index - 1] = exp;
      return {f, std::move(e)};
    }
  }
  throw InternalError("generator_power: bad kind");
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  check_same_family(x, y);
  const Family& f = x.family();
  switch (f.kind) {
    case FamilyKind::Bs:
      return {f, bs_mul(x.as_bs(), y.as_bs())};
    case FamilyKind::Tararin:
      return {f, tar_mul(x.as_tar(), y.as_tar())};
    case FamilyKind::Cn:
      return {f, cn_mul(x.as_cn(), y.as_cn())};
    case FamilyKind::Abelian:
      return {f, zn_mul(x.as_zn(), y.as_zn())};
  }
  throw InternalError("multiply: bad kind");
}

GroupElement invert(const GroupElement& x) {
  const Family& f = x.family();
  switch (f.kind) {
    case FamilyKind::Bs:
      return {f, bs_inv(x.as_bs())};
    case FamilyKind::Tararin:
      return {f, tar_inv(x.as_tar())};
    case FamilyKind::Cn:
      return {f, cn_inv(x.as_cn())};
    case FamilyKind::Abelian:
      return {f, zn_inv(x.as_zn())};
  }
  throw InternalError("invert: bad kind");
}

GroupElement conjugate_element(const GroupElement& x, const GroupElement& h) {
  return multiply(multiply(h, x), invert(h));
}

GroupElement element_power(const GroupElement& x, int64_t e) {
  GroupElement base = e < 0 ? invert(x) : x;
  uint64_t k = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
  GroupElement acc = identity(x.family());
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

bool canonical_less(const GroupElement& a, const GroupElement& b) {
  check_same_family(a, b);
  switch (a.family().kind) {
    case FamilyKind::Bs: {
      const auto &x = a.as_bs(), &y = b.as_bs();
      if (x.n != y.n) return x.n < y.n;
      return lf_cmp(x.r, y.r) < 0;
    }
    case FamilyKind::Tararin:
      return vec_cmp(a.as_tar().b, b.as_tar().b) < 0;
    case FamilyKind::Cn: {
      const auto &x = a.as_cn(), &y = b.as_cn();
      if (x.c != y.c) return x.c < y.c;
      if (int c = lf_cmp(x.d, y.d); c != 0) return c < 0;
      return vec_cmp(x.a, y.a) < 0;
    }
    case FamilyKind::Abelian:
      return vec_cmp(a.as_zn().v, b.as_zn().v) < 0;
  }
  throw InternalError("canonical_less: bad kind");
}

int series_level_of(const GroupElement& g) {
  switch (g.family().kind) {
    case FamilyKind::Bs:
      return bs_level(g.as_bs());
    case FamilyKind::Tararin:
      return tar_level(g.as_tar());
    case FamilyKind::Cn:
      return cn_level(g.as_cn());
    case FamilyKind::Abelian:
      return zn_level(g.as_zn());
  }
  throw InternalError("series_level_of: bad kind");
}

int series_top_sign(const GroupElement& g) {
  switch (g.family().kind) {
    case FamilyKind::Bs:
      return bs_top_sign(g.as_bs());
    case FamilyKind::Tararin:
      return tar_top_sign(g.as_tar());
    case FamilyKind::Cn:
      return cn_top_sign(g.as_cn());
    case FamilyKind::Abelian:
      return zn_top_sign(g.as_zn());
  }
  throw InternalError("series_top_sign: bad kind");
}

Rat series_level_coordinate(const GroupElement& g, int level) {
  const Family& f = g.family();
  const int len = series_length(f);
  if (level < 1 || level > len) throw UsageError("series level out of range");
  switch (f.kind) {
    case FamilyKind::Bs:
      return level == 2 ? Rat(g.as_bs().n) : lf_value(g.as_bs().r);
    case FamilyKind::Tararin:
      return Rat(g.as_tar().b[f.param - level]);
    case FamilyKind::Cn: {
      const auto& e = g.as_cn();
      if (level == f.param + 2) return Rat(e.c);
      if (level == f.param + 1) return lf_value(e.d);
      return Rat(e.a[f.param - level]);
    }
    case FamilyKind::Abelian:
      return Rat(g.as_zn().v[level - 1]);
  }
  throw InternalError("series_level_coordinate: bad kind");
}

std::string compact_str(const GroupElement& g) {
  std::ostringstream os;
  switch (g.family().kind) {
    case FamilyKind::Bs: {
      const auto& e = g.as_bs();
      os << "BS(" << lf_str(e.r) << "," << e.n << ")";
      break;
    }
    case FamilyKind::Tararin: {
      const auto& e = g.as_tar();
      os << "T(";
      for (size_t i = 0; i < e.b.size(); ++i) os << (i ? "," : "") << e.b[i].str();
      os << ")";
      break;
    }
    case FamilyKind::Cn: {
      const auto& e = g.as_cn();
      os << "C(" << e.c << ";" << lf_str(e.d) << ";";
      for (size_t i = 0; i < e.a.size(); ++i) os << (i ? "," : "") << e.a[i].str();
      os << ")";
      break;
    }
    case FamilyKind::Abelian: {
      const auto& e = g.as_zn();
      os << "Z(";
      for (size_t i = 0; i < e.v.size(); ++i) os << (i ? "," : "") << e.v[i].str();
      os << ")";
      break;
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

LFraction parse_lf(std::string_view s, int32_t base) {
  // "num" or "num/base^k" or "num/<power>"
  Rat r = parse_rat(s);
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  int64_t k = 0;
  Int b(base);
  while (den > 1) {
    if (den % b != 0) throw UsageError("not an l-fraction: " + std::string(s));
    den /= b;
    ++k;
  }
  return make_lfraction(std::move(num), k, base);
}

}  // namespace

GroupElement parse_compact(const Family& f, std::string_view s) {
  auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')')
    throw UsageError("bad element literal: " + std::string(s));
  std::string_view body = s.substr(open + 1, s.size() - open - 2);
  switch (f.kind) {
    case FamilyKind::Bs: {
      auto parts = split(body, ',');
      if (parts.size() != 2) throw UsageError("bad BS literal");
      return {f, BsElemT<Int>{parse_lf(parts[0], f.param), to_i64(Int(parts[1]))}};
    }
    case FamilyKind::Tararin: {
      auto parts = split(body, ',');
      if (static_cast<int32_t>(parts.size()) != f.param) throw UsageError("bad T literal");
      TarElemT<Int> e;
      for (auto& p : parts) e.b.push_back(Int(p));
      return {f, std::move(e)};
    }
    case FamilyKind::Cn: {
      auto outer = split(body, ';');
      if (outer.size() != 3) throw UsageError("bad C literal");
      CnElemT<Int> e;
      e.c = to_i64(Int(outer[0]));
      e.d = parse_lf(outer[1], 3);
      for (auto& p : split(outer[2], ',')) e.a.push_back(Int(p));
      if (static_cast<int32_t>(e.a.size()) != f.param) throw UsageError("bad C literal arity");
      return {f, std::move(e)};
    }
    case FamilyKind::Abelian: {
      auto parts = split(body, ',');
      if (static_cast<int32_t>(parts.size()) != f.param) throw UsageError("bad Z literal");
      ZnElemT<Int> e;
      for (auto& p : parts) e.v.push_back(Int(p));
      return {f, std::move(e)};
    }
  }
  throw InternalError("parse_compact: bad kind");
}

BsElemT<SafeI64> pack_bs(const BsElemT<Int>& x) {
  return {LFractionT<SafeI64>{SafeI64(to_i64(x.r.num)), x.r.k, x.r.base}, x.n};
}

TarElemT<SafeI64> pack_tar(const TarElemT<Int>& x) {
  TarElemT<SafeI64> out;
  for (const auto& c : x.b) out.b.push_back(SafeI64(to_i64(c)));
  return out;
}

CnElemT<SafeI64> pack_cn(const CnElemT<Int>& x) {
  CnElemT<SafeI64> out;
  out.c = x.c;
  out.d = LFractionT<SafeI64>{SafeI64(to_i64(x.d.num)), x.d.k, x.d.base};
  for (const auto& c : x.a) out.a.push_back(SafeI64(to_i64(c)));
  return out;
}

ZnElemT<SafeI64> pack_zn(const ZnElemT<Int>& x) {
  ZnElemT<SafeI64> out;
  for (const auto& c : x.v) out.v.push_back(SafeI64(to_i64(c)));
  return out;
}

}  // namespace conradlab
