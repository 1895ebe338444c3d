#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conradlab/errors.hpp"

namespace conradlab {

/// The four built-in group families.
enum class FamilyKind : uint8_t {
  Bs,       // B(1,ell) = <a, b | b a b^-1 = a^ell>, elements (r, n), r in Z[1/ell]
  Tararin,  // T_n = Z^n with the sign-twisted product
  Cn,       // C_n = Z x Z[1/3] x Z^n
  Abelian,  // Z^n, componentwise addition
};

struct Family {
  FamilyKind kind;
  int32_t param;  // ell for Bs (>= 2); n for the others (>= 1)

  friend bool operator==(const Family&, const Family&) = default;
};

Family bs_family(int32_t ell);
Family tararin_family(int32_t n);
Family cn_family(int32_t n);
Family abelian_family(int32_t n);

std::string family_name(const Family& f);  // "B(1,2)", "T_3", "C_3", "Z^2"

/// Length of the canonical convex series {id} = G_0 < ... < G_len = G.
/// Bs: 2 (translations, then the b-exponent); Tararin/Abelian: n
/// (coordinate filtration, innermost first); Cn: n + 2 (a_1..a_n, d, c).
int series_length(const Family& f);

/// Generator identifier. tag is 'a', 'b' or 'c'; index is 1..n for the
/// indexed a-generators of Tararin/Cn/Abelian families, 0 otherwise.
struct GenId {
  char tag;
  int32_t index;

  friend bool operator==(const GenId&, const GenId&) = default;
};

/// Canonical generator list (one per inverse pair):
/// Bs: a, b; Tararin: a_1..a_n; Cn: a_1..a_n, b, c; Abelian: a_1..a_n.
std::vector<GenId> generators(const Family& f);

std::string gen_name(const Family& f, const GenId& g);

}  // namespace conradlab
