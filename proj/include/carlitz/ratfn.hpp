#pragma once

#include "carlitz/polyt.hpp"

namespace carlitz {

// Element of K = F_{q^n}(T). Reduced form: gcd(num, den) = 1, den monic;
// zero is num = 0, den = 1.
struct RatFn {
  PolyT num;
  PolyT den;
};

RatFn rf_make(const Field& F, PolyT num, PolyT den);
RatFn rf_from(const Field& F, PolyT num);
RatFn rf_zero(const Field& F);
RatFn rf_one(const Field& F);

bool rf_is_zero(const RatFn& a);
bool rf_is_poly(const RatFn& a);
bool rf_eq(const RatFn& a, const RatFn& b);
bool rf_less(const Field& F, const RatFn& a, const RatFn& b);

RatFn rf_add(const Field& F, const RatFn& a, const RatFn& b);
RatFn rf_sub(const Field& F, const RatFn& a, const RatFn& b);
RatFn rf_neg(const Field& F, const RatFn& a);
RatFn rf_mul(const Field& F, const RatFn& a, const RatFn& b);
RatFn rf_div(const Field& F, const RatFn& a, const RatFn& b);
RatFn rf_inv(const Field& F, const RatFn& a);
RatFn rf_mul_ff(const Field& F, const RatFn& a, const FF& v);
RatFn rf_pow_p(const Field& F, const RatFn& a, int e);  // a^{p^e}

// multiplicity of the monic irreducible pi in num minus in den
int rf_val(const Field& F, const RatFn& a, const PolyT& pi);  // throws on zero input
// valuation at the infinite place: deg den - deg num
int rf_val_inf(const RatFn& a);

// substitute T -> 1/U (maps the infinite place to the finite place U)
RatFn rf_subst_inv(const Field& F, const RatFn& a);

// residue mod pi^N; requires den coprime to pi
PolyT rf_reduce(const Field& F, const RatFn& a, const PolyT& pi_pow);

std::string rf_wire(const Field& F, const RatFn& a);
RatFn rf_parse(const Field& F, const std::string& s);
std::string rf_pretty(const Field& F, const RatFn& a);

}  // namespace carlitz
