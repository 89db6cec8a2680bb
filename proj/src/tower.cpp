#include "carlitz/tower.hpp"

#include <algorithm>

namespace carlitz {

TVal tv_trim(TVal x) {
  if (x.lvl == 0) return x;
  while (!x.c.empty() && tv_is_zero(x.c.back())) x.c.pop_back();
  return x;
}

bool tv_is_zero(const TVal& x) {
  if (x.lvl == 0) return rf_is_zero(x.r);
  for (const auto& v : x.c)
    if (!tv_is_zero(v)) return false;
  return true;
}

TVal tv_zero(int lvl) {
  TVal x;
  x.lvl = lvl;
  return x;
}

TVal tv_rf(const Tower& tw, int lvl, const RatFn& v) {
  TVal x;
  x.lvl = 0;
  x.r = v;
  return tv_lift(tw, x, lvl);
}

TVal tv_one(const Tower& tw, int lvl) { return tv_rf(tw, lvl, rf_one(*tw.F)); }

TVal tv_lift(const Tower& tw, const TVal& x, int lvl) {
  if (x.lvl > lvl) throw std::invalid_argument("tv_lift: cannot lower a tower value");
  TVal out = x;
  while (out.lvl < lvl) {
    TVal up;
    up.lvl = out.lvl + 1;
    if (!tv_is_zero(out)) up.c.push_back(out);
    out = std::move(up);
  }
  return out;
}

TVal tv_gen(const Tower& tw, int k) {
  if (k < 1 || k > tw.levels()) throw std::invalid_argument("tv_gen: no such level");
  TVal x;
  x.lvl = k;
  x.c = {tv_zero(k - 1), tv_one(tw, k - 1)};
  return x;
}

static void require_same_level(const TVal& a, const TVal& b) {
  if (a.lvl != b.lvl) throw std::invalid_argument("tower level mismatch");
}

TVal tv_add(const Tower& tw, const TVal& a0, const TVal& b0) {
  int lvl = std::max(a0.lvl, b0.lvl);
  TVal a = tv_lift(tw, a0, lvl), b = tv_lift(tw, b0, lvl);
  if (lvl == 0) {
    a.r = rf_add(*tw.F, a.r, b.r);
    return a;
  }
  TVal out = tv_zero(lvl);
  out.c.resize(std::max(a.c.size(), b.c.size()), tv_zero(lvl - 1));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = tv_add(tw, out.c[i], b.c[i]);
  return tv_trim(std::move(out));
}

TVal tv_neg(const Tower& tw, const TVal& a) {
  TVal out = a;
  if (a.lvl == 0) {
    out.r = rf_neg(*tw.F, a.r);
    return out;
  }
  for (auto& v : out.c) v = tv_neg(tw, v);
  return out;
}

TVal tv_sub(const Tower& tw, const TVal& a, const TVal& b) {
  return tv_add(tw, a, tv_neg(tw, b));
}

TVal tv_mul(const Tower& tw, const TVal& a0, const TVal& b0) {
  int lvl = std::max(a0.lvl, b0.lvl);
  TVal a = tv_lift(tw, a0, lvl), b = tv_lift(tw, b0, lvl);
  if (lvl == 0) {
    a.r = rf_mul(*tw.F, a.r, b.r);
    return a;
  }
  if (a.c.empty() || b.c.empty()) return tv_zero(lvl);
  TPoly prod(a.c.size() + b.c.size() - 1, tv_zero(lvl - 1));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      prod[i + j] = tv_add(tw, prod[i + j], tv_mul(tw, a.c[i], b.c[j]));
  TVal out = tv_zero(lvl);
  out.c = tp_divmod(tw, tp_trim(std::move(prod)), tw.defs[lvl - 1]).second;
  return tv_trim(std::move(out));
}

bool tv_eq(const Tower& tw, const TVal& a, const TVal& b) {
  return tv_is_zero(tv_sub(tw, a, b));
}

TVal tv_inv(const Tower& tw, const TVal& a) {
  if (tv_is_zero(a)) throw std::domain_error("tower inverse of zero");
  if (a.lvl == 0) {
    TVal out = a;
    out.r = rf_inv(*tw.F, a.r);
    return out;
  }
  auto [g, s] = tp_invmod_pair(tw, a.c, tw.defs[a.lvl - 1]);
  if (g.size() != 1)
    throw std::domain_error("tower inverse: element not invertible (reducible level?)");
  TVal ginv = tv_inv(tw, g[0]);
  TVal out = tv_zero(a.lvl);
  for (const auto& v : s) out.c.push_back(tv_mul(tw, v, ginv));
  out.c = tp_trim(std::move(out.c));
  return out;
}

TVal tv_pow(const Tower& tw, TVal a, long long e) {
  TVal acc = tv_one(tw, a.lvl);
  while (e > 0) {
    if (e & 1) acc = tv_mul(tw, acc, a);
    a = tv_mul(tw, a, a);
    e >>= 1;
  }
  return acc;
}

TVal tv_pow_p(const Tower& tw, const TVal& a, int e) {
  TVal out = a;
  for (int i = 0; i < e; ++i) out = tv_pow(tw, out, tw.F->p);
  return out;
}

std::vector<RatFn> tv_flatten(const Tower& tw, const TVal& x, int lvl) {
  if (x.lvl != lvl) return tv_flatten(tw, tv_lift(tw, x, lvl), lvl);
  if (lvl == 0) return {x.r};
  int sub = tw.abs_degree(lvl - 1);
  std::vector<RatFn> out;
  out.reserve((size_t)tw.abs_degree(lvl));
  for (int t = 0; t < tw.level_degree(lvl); ++t) {
    TVal coef = (t < (int)x.c.size()) ? x.c[t] : tv_zero(lvl - 1);
    auto part = tv_flatten(tw, coef, lvl - 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  (void)sub;
  return out;
}

TVal tv_unflatten(const Tower& tw, int lvl, const std::vector<RatFn>& coords) {
  if ((int)coords.size() != tw.abs_degree(lvl))
    throw std::invalid_argument("tv_unflatten: coordinate count mismatch");
  if (lvl == 0) {
    TVal x;
    x.lvl = 0;
    x.r = coords[0];
    return x;
  }
  int sub = tw.abs_degree(lvl - 1);
  TVal out = tv_zero(lvl);
  for (int t = 0; t < tw.level_degree(lvl); ++t) {
    std::vector<RatFn> chunk(coords.begin() + (size_t)t * sub,
                             coords.begin() + (size_t)(t + 1) * sub);
    out.c.push_back(tv_unflatten(tw, lvl - 1, chunk));
  }
  return tv_trim(std::move(out));
}

TVal tv_basis_elt(const Tower& tw, int lvl, int index) {
  std::vector<RatFn> coords((size_t)tw.abs_degree(lvl), rf_zero(*tw.F));
  coords[(size_t)index] = rf_one(*tw.F);
  return tv_unflatten(tw, lvl, coords);
}

bool tv_is_rational(const Tower& tw, const TVal& x, int lvl) {
  auto coords = tv_flatten(tw, x, lvl);
  for (size_t i = 1; i < coords.size(); ++i)
    if (!rf_is_zero(coords[i])) return false;
  return true;
}

RatFn tv_to_rational(const Tower& tw, const TVal& x, int lvl) {
  if (!tv_is_rational(tw, x, lvl))
    throw std::domain_error("tower value is not rational");
  return tv_flatten(tw, x, lvl)[0];
}

std::string tv_key(const Tower& tw, const TVal& x, int lvl) {
  std::string s;
  for (const auto& r : tv_flatten(tw, x, lvl)) {
    if (!s.empty()) s.push_back('|');
    s += rf_wire(*tw.F, r);
  }
  return s;
}

TPoly tp_trim(TPoly f) {
  while (!f.empty() && tv_is_zero(f.back())) f.pop_back();
  return f;
}

TPoly tp_add(const Tower& tw, const TPoly& a, const TPoly& b) {
  TPoly out = a;
  if (b.size() > out.size()) out.resize(b.size(), tv_zero(b.empty() ? 0 : b[0].lvl));
  for (size_t i = 0; i < b.size(); ++i) out[i] = tv_add(tw, out[i], b[i]);
  return tp_trim(std::move(out));
}

TPoly tp_sub(const Tower& tw, const TPoly& a, const TPoly& b) {
  TPoly nb = b;
  for (auto& v : nb) v = tv_neg(tw, v);
  return tp_add(tw, a, nb);
}

TPoly tp_mul(const Tower& tw, const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1, tv_zero(a[0].lvl));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = tv_add(tw, out[i + j], tv_mul(tw, a[i], b[j]));
  return tp_trim(std::move(out));
}

std::pair<TPoly, TPoly> tp_divmod(const Tower& tw, const TPoly& a, const TPoly& b) {
  if (b.empty()) throw std::domain_error("tower polynomial division by zero");
  int lvl = b[0].lvl;
  TVal linv = tv_inv(tw, b.back());
  TPoly rem = a, quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, tv_zero(lvl));
  while (rem.size() >= b.size() && !rem.empty()) {
    size_t k = rem.size() - b.size();
    TVal c = tv_mul(tw, rem.back(), linv);
    quot[k] = c;
    for (size_t i = 0; i < b.size(); ++i)
      rem[k + i] = tv_sub(tw, rem[k + i], tv_mul(tw, c, b[i]));
    rem = tp_trim(std::move(rem));
  }
  return {tp_trim(std::move(quot)), rem};
}

TPoly tp_gcd_monic(const Tower& tw, TPoly a, TPoly b) {
  while (!b.empty()) {
    TPoly r = tp_divmod(tw, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  TVal linv = tv_inv(tw, a.back());
  for (auto& v : a) v = tv_mul(tw, v, linv);
  return a;
}

std::pair<TPoly, TPoly> tp_invmod_pair(const Tower& tw, const TPoly& a, const TPoly& m) {
  int lvl = m[0].lvl;
  TPoly r0 = m, r1 = tp_divmod(tw, a, m).second;
  TPoly s0, s1 = {tv_one(tw, lvl)};
  while (!r1.empty()) {
    auto [q, r2] = tp_divmod(tw, r0, r1);
    TPoly s2 = tp_sub(tw, s0, tp_mul(tw, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) throw std::domain_error("tp_invmod_pair: zero gcd");
  TVal linv = tv_inv(tw, r0.back());
  for (auto& v : r0) v = tv_mul(tw, v, linv);
  for (auto& v : s0) v = tv_mul(tw, v, linv);
  return {r0, s0};
}

TVal tp_eval(const Tower& tw, const TPoly& f, const TVal& x) {
  TVal acc = tv_zero(x.lvl);
  for (size_t i = f.size(); i-- > 0;)
    acc = tv_add(tw, tv_mul(tw, acc, x), tv_lift(tw, f[i], x.lvl));
  return acc;
}

void add_level(Tower& tw, TPoly def) {
  def = tp_trim(std::move(def));
  if (def.size() < 2) throw std::invalid_argument("add_level: defining polynomial too small");
  int lvl = tw.levels();
  for (const auto& v : def)
    if (v.lvl != lvl) throw std::invalid_argument("add_level: coefficient level mismatch");
  if (!tv_eq(tw, def.back(), tv_one(tw, lvl)))
    throw std::invalid_argument("add_level: defining polynomial must be monic");
  tw.defs.push_back(std::move(def));
}

std::vector<TVal> ap_to_plin(const Tower& tw, int lvl, const AdditivePoly& ap) {
  std::vector<TVal> out((size_t)(ap.tau_deg() < 0 ? 0 : ap.tau_deg() * tw.F->r + 1),
                        tv_zero(lvl));
  for (size_t i = 0; i < ap.c.size(); ++i)
    out[i * (size_t)tw.F->r] =
        tv_rf(tw, lvl, ap.c[i].zero() ? rf_zero(*tw.F) : rf_from(*tw.F, ap.c[i]));
  return out;
}

TVal plin_eval(const Tower& tw, const std::vector<TVal>& plin, const TVal& x) {
  TVal acc = tv_zero(x.lvl);
  TVal xp = x;
  for (size_t e = 0; e < plin.size(); ++e) {
    if (!tv_is_zero(plin[e])) acc = tv_add(tw, acc, tv_mul(tw, plin[e], xp));
    if (e + 1 < plin.size()) xp = tv_pow(tw, xp, tw.F->p);
  }
  return acc;
}

TVal carlitz_eval_tower(const Tower& tw, int lvl, const PolyT& a, const TVal& x) {
  return plin_eval(tw, ap_to_plin(tw, lvl, carlitz_coeffs(*tw.F, a)), tv_lift(tw, x, lvl));
}

}  // namespace carlitz
