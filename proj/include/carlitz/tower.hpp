#pragma once

#include "carlitz/carlitz.hpp"

namespace carlitz {

// Element of a quotient-algebra tower over K = F_{q^n}(T). Level 0 is K
// itself (field r); level k > 0 is a polynomial in the level-k generator
// with coefficients one level down (c, low degree first, trimmed).
struct TVal {
  int lvl = 0;
  RatFn r;
  std::vector<TVal> c;
};

// polynomial over a tower level, coefficients low degree first, trimmed
using TPoly = std::vector<TVal>;

// Chain K = level 0 < level 1 < ... ; defs[k-1] is the monic defining
// polynomial of level k with coefficients at level k-1.
struct Tower {
  const Field* F = nullptr;
  std::vector<TPoly> defs;

  int levels() const { return (int)defs.size(); }
  int level_degree(int k) const { return (int)defs[k - 1].size() - 1; }
  int abs_degree(int lvl) const {
    int d = 1;
    for (int k = 1; k <= lvl; ++k) d *= level_degree(k);
    return d;
  }
};

TVal tv_zero(int lvl);
TVal tv_one(const Tower& tw, int lvl);
TVal tv_rf(const Tower& tw, int lvl, const RatFn& v);
TVal tv_lift(const Tower& tw, const TVal& x, int lvl);
TVal tv_gen(const Tower& tw, int k);  // generator of level k, as a level-k value

bool tv_is_zero(const TVal& x);
bool tv_eq(const Tower& tw, const TVal& a, const TVal& b);
TVal tv_trim(TVal x);

TVal tv_add(const Tower& tw, const TVal& a, const TVal& b);
TVal tv_sub(const Tower& tw, const TVal& a, const TVal& b);
TVal tv_neg(const Tower& tw, const TVal& a);
TVal tv_mul(const Tower& tw, const TVal& a, const TVal& b);
TVal tv_inv(const Tower& tw, const TVal& a);
TVal tv_pow(const Tower& tw, TVal a, long long e);
TVal tv_pow_p(const Tower& tw, const TVal& a, int e);  // a^{p^e}

// coordinates over K in the product power basis; index digits run lowest
// level fastest
std::vector<RatFn> tv_flatten(const Tower& tw, const TVal& x, int lvl);
TVal tv_unflatten(const Tower& tw, int lvl, const std::vector<RatFn>& coords);
TVal tv_basis_elt(const Tower& tw, int lvl, int index);

bool tv_is_rational(const Tower& tw, const TVal& x, int lvl);
RatFn tv_to_rational(const Tower& tw, const TVal& x, int lvl);

std::string tv_key(const Tower& tw, const TVal& x, int lvl);

// polynomial helpers over a level
TPoly tp_trim(TPoly f);
TPoly tp_add(const Tower& tw, const TPoly& a, const TPoly& b);
TPoly tp_sub(const Tower& tw, const TPoly& a, const TPoly& b);
TPoly tp_mul(const Tower& tw, const TPoly& a, const TPoly& b);
std::pair<TPoly, TPoly> tp_divmod(const Tower& tw, const TPoly& a, const TPoly& b);
TPoly tp_gcd_monic(const Tower& tw, TPoly a, TPoly b);
// s*a == g mod m, g monic; used for inverses in quotient levels
std::pair<TPoly, TPoly> tp_invmod_pair(const Tower& tw, const TPoly& a, const TPoly& m);
TVal tp_eval(const Tower& tw, const TPoly& f, const TVal& x);

// adds a level defined by a monic polynomial over the current top level
void add_level(Tower& tw, TPoly def);

// C_a(x) etc. over the tower: coefficients of x^{p^e} lifted to lvl
std::vector<TVal> ap_to_plin(const Tower& tw, int lvl, const AdditivePoly& ap);
TVal plin_eval(const Tower& tw, const std::vector<TVal>& plin, const TVal& x);
TVal carlitz_eval_tower(const Tower& tw, int lvl, const PolyT& a, const TVal& x);

}  // namespace carlitz
