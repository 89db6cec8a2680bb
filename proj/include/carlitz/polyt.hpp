#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/gf.hpp"

namespace carlitz {

// Element of F_{q^n}[T], coefficients low degree first, no trailing zeros.
// The zero polynomial has an empty coefficient list.
struct PolyT {
  std::vector<FF> c;
  bool zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
};

PolyT pt_trim(PolyT a);
PolyT pt_x(const Field& F);
PolyT pt_const(const Field& F, const FF& v);
PolyT pt_one(const Field& F);
PolyT pt_from_codes(const Field& F, const std::vector<long long>& codes);

bool pt_eq(const PolyT& a, const PolyT& b);
// canonical order: degree first, then coefficient codes low degree first
bool pt_less(const Field& F, const PolyT& a, const PolyT& b);

FF pt_lead(const Field& F, const PolyT& a);
bool pt_is_monic(const Field& F, const PolyT& a);
bool pt_in_fq(const Field& F, const PolyT& a);

PolyT pt_add(const Field& F, const PolyT& a, const PolyT& b);
PolyT pt_sub(const Field& F, const PolyT& a, const PolyT& b);
PolyT pt_neg(const Field& F, const PolyT& a);
PolyT pt_mul(const Field& F, const PolyT& a, const PolyT& b);
PolyT pt_mul_ff(const Field& F, const PolyT& a, const FF& v);
PolyT pt_shift(const PolyT& a, int k, const Field& F);  // a * T^k
std::pair<PolyT, PolyT> pt_divmod(const Field& F, const PolyT& a, const PolyT& b);
PolyT pt_mod(const Field& F, const PolyT& a, const PolyT& b);
PolyT pt_div_exact(const Field& F, const PolyT& a, const PolyT& b);
PolyT pt_monic(const Field& F, const PolyT& a);
PolyT pt_gcd(const Field& F, PolyT a, PolyT b);  // monic

struct XgcdResult {
  PolyT g, s, t;  // s*f + t*g0 == g, g monic
};
XgcdResult xgcd(const Field& F, const PolyT& f, const PolyT& g);

FF pt_eval(const Field& F, const PolyT& a, const FF& x);
PolyT pt_pow_q(const Field& F, const PolyT& a, int i);  // a(T)^{q^i}
PolyT pt_pow_p(const Field& F, const PolyT& a, int e);  // a(T)^{p^e}
PolyT pt_pow(const Field& F, PolyT a, long long e);
PolyT pt_powmod(const Field& F, PolyT base, long long e, const PolyT& mod);
PolyT pt_derivative(const Field& F, const PolyT& a);

// quotient-field helpers (mod a monic irreducible pi, or pi^N)
PolyT qf_mul(const Field& F, const PolyT& mod, const PolyT& a, const PolyT& b);
PolyT qf_inv(const Field& F, const PolyT& mod, const PolyT& a);

// enumeration, canonical order; subfield restricts coefficients to F_q
std::vector<PolyT> monic_polys(const Field& F, int deg, bool subfield);
bool pt_irreducible(const Field& F, const PolyT& a, bool subfield);
std::vector<PolyT> monic_irreducibles(const Field& F, int deg, bool subfield);

struct Factorization {
  FF unit;
  std::vector<std::pair<PolyT, int>> factors;  // monic irreducible, exponent; canonical order
};

// trial division by enumerated monic irreducibles in degree order; desk scale
Factorization factor(const Field& F, const PolyT& a, bool subfield);
// distinct-degree + equal-degree splitting; for larger inputs (solver internals)
Factorization factor_ddf(const Field& F, const PolyT& a);

PolyT factorization_product(const Field& F, const Factorization& f);

// residues (b_i, modulus_i) with pairwise coprime moduli
PolyT crt(const Field& F, const std::vector<std::pair<PolyT, PolyT>>& congruences);

// function-field Euler phi; counts residues coprime to a over F_q (subfield)
// or over F_{q^n}
long long euler_phi(const Field& F, const PolyT& a, bool subfield);

// number of monic irreducibles of degree d over the coefficient field
long long necklace_count(long long field_size, int d);

// wire format: comma-separated coefficient digit groups, lowest T-degree first
std::string pt_wire(const Field& F, const PolyT& a);
PolyT pt_parse(const Field& F, const std::string& s);
// human-readable form, e.g. "T^2 + T + 1"
std::string pt_pretty(const Field& F, const PolyT& a);

}  // namespace carlitz
