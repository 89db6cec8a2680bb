#include "carlitz/ratfn.hpp"

#include <algorithm>

namespace carlitz {

// a default-constructed RatFn (both parts empty) is accepted as zero
static RatFn canon(const Field& F, const RatFn& a) {
  if (a.num.zero()) return {PolyT{}, pt_one(F)};
  return a;
}

RatFn rf_make(const Field& F, PolyT num, PolyT den) {
  if (den.zero()) throw std::domain_error("rational function with zero denominator");
  if (num.zero()) return {PolyT{}, pt_one(F)};
  PolyT g = pt_gcd(F, num, den);
  if (g.deg() > 0) {
    num = pt_div_exact(F, num, g);
    den = pt_div_exact(F, den, g);
  }
  FF linv = F.inv(pt_lead(F, den));
  return {pt_mul_ff(F, num, linv), pt_mul_ff(F, den, linv)};
}

RatFn rf_from(const Field& F, PolyT num) { return {std::move(num), pt_one(F)}; }
RatFn rf_zero(const Field& F) { return {PolyT{}, pt_one(F)}; }
RatFn rf_one(const Field& F) { return {pt_one(F), pt_one(F)}; }

bool rf_is_zero(const RatFn& a) { return a.num.zero(); }
bool rf_is_poly(const RatFn& a) { return a.den.deg() == 0; }

bool rf_eq(const RatFn& a, const RatFn& b) {
  if (a.num.zero() || b.num.zero()) return a.num.zero() && b.num.zero();
  return pt_eq(a.num, b.num) && pt_eq(a.den, b.den);
}

bool rf_less(const Field& F, const RatFn& a0, const RatFn& b0) {
  RatFn a = canon(F, a0), b = canon(F, b0);
  if (!pt_eq(a.den, b.den)) return pt_less(F, a.den, b.den);
  return pt_less(F, a.num, b.num);
}

RatFn rf_add(const Field& F, const RatFn& a0, const RatFn& b0) {
  RatFn a = canon(F, a0), b = canon(F, b0);
  return rf_make(F, pt_add(F, pt_mul(F, a.num, b.den), pt_mul(F, b.num, a.den)),
                 pt_mul(F, a.den, b.den));
}

RatFn rf_neg(const Field& F, const RatFn& a0) {
  RatFn a = canon(F, a0);
  return {pt_neg(F, a.num), a.den};
}

RatFn rf_sub(const Field& F, const RatFn& a, const RatFn& b) {
  return rf_add(F, a, rf_neg(F, b));
}

RatFn rf_mul(const Field& F, const RatFn& a0, const RatFn& b0) {
  RatFn a = canon(F, a0), b = canon(F, b0);
  return rf_make(F, pt_mul(F, a.num, b.num), pt_mul(F, a.den, b.den));
}

RatFn rf_inv(const Field& F, const RatFn& a) {
  if (rf_is_zero(a)) throw std::domain_error("inverse of zero rational function");
  return rf_make(F, a.den, a.num);
}

RatFn rf_div(const Field& F, const RatFn& a, const RatFn& b) {
  return rf_mul(F, a, rf_inv(F, b));
}

RatFn rf_mul_ff(const Field& F, const RatFn& a0, const FF& v) {
  RatFn a = canon(F, a0);
  if (F.is_zero(v)) return rf_zero(F);
  return {pt_mul_ff(F, a.num, v), a.den};
}

RatFn rf_pow_p(const Field& F, const RatFn& a0, int e) {
  RatFn a = canon(F, a0);
  return {pt_pow_p(F, a.num, e), pt_pow_p(F, a.den, e)};
}

static int pt_multiplicity(const Field& F, PolyT a, const PolyT& pi) {
  int v = 0;
  while (!a.zero() && pt_mod(F, a, pi).zero()) {
    a = pt_div_exact(F, a, pi);
    ++v;
  }
  return v;
}

int rf_val(const Field& F, const RatFn& a, const PolyT& pi) {
  if (rf_is_zero(a)) throw std::domain_error("valuation of zero");
  return pt_multiplicity(F, a.num, pi) - pt_multiplicity(F, a.den, pi);
}

int rf_val_inf(const RatFn& a) {
  if (rf_is_zero(a)) throw std::domain_error("valuation of zero");
  return a.den.deg() - a.num.deg();
}

static PolyT pt_reverse_pad(const Field& F, const PolyT& a, int deg) {
  // T^deg * a(1/T), written in the new variable
  PolyT out;
  out.c.assign(deg + 1, F.zero());
  for (int i = 0; i <= a.deg(); ++i) out.c[deg - i] = a.c[i];
  return pt_trim(std::move(out));
}

RatFn rf_subst_inv(const Field& F, const RatFn& a) {
  if (rf_is_zero(a)) return rf_zero(F);
  int d = std::max(a.num.deg(), a.den.deg());
  PolyT n2 = pt_reverse_pad(F, a.num, d);
  PolyT d2 = pt_reverse_pad(F, a.den, d);
  return rf_make(F, std::move(n2), std::move(d2));
}

PolyT rf_reduce(const Field& F, const RatFn& a, const PolyT& pi_pow) {
  if (rf_is_zero(a)) return {};
  PolyT dinv = qf_inv(F, pi_pow, a.den);
  return pt_mod(F, pt_mul(F, a.num, dinv), pi_pow);
}

std::string rf_wire(const Field& F, const RatFn& a0) {
  RatFn a = canon(F, a0);
  if (rf_is_poly(a)) return pt_wire(F, a.num);
  return pt_wire(F, a.num) + "/" + pt_wire(F, a.den);
}

RatFn rf_parse(const Field& F, const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return rf_from(F, pt_parse(F, s));
  return rf_make(F, pt_parse(F, s.substr(0, slash)), pt_parse(F, s.substr(slash + 1)));
}

std::string rf_pretty(const Field& F, const RatFn& a0) {
  RatFn a = canon(F, a0);
  if (rf_is_poly(a)) return pt_pretty(F, a.num);
  return "(" + pt_pretty(F, a.num) + ")/(" + pt_pretty(F, a.den) + ")";
}

}  // namespace carlitz
