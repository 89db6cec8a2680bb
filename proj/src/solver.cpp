#include "carlitz/solver.hpp"

#include <algorithm>
#include <map>

#include "carlitz/fplin.hpp"
#include "carlitz/hull.hpp"

namespace carlitz {

namespace {

// valuation lower bound that may be +infinity (the zero element)
struct LB {
  bool inf = true;
  Rat v{0, 1};
};

LB lb_min(LB a, LB b) {
  if (a.inf) return b;
  if (b.inf) return a;
  return {false, rat_min(a.v, b.v)};
}

LB lb_add(LB a, Rat k) {
  if (a.inf) return a;
  return {false, rat_add(a.v, k)};
}

struct PlaceCtx {
  bool infinite = false;
  PolyT pi;                   // finite place only
  std::vector<Rat> lb_gen;    // per tower level, valid for all conjugates
};

int val_rf(const Field& F, const RatFn& r, const PlaceCtx& pc) {
  return pc.infinite ? rf_val_inf(r) : rf_val(F, r, pc.pi);
}

LB lb_tv(const Tower& tw, const TVal& x, const PlaceCtx& pc) {
  if (tv_is_zero(x)) return {};
  if (x.lvl == 0) return {false, rat(val_rf(*tw.F, x.r, pc))};
  LB out;
  for (size_t t = 0; t < x.c.size(); ++t)
    out = lb_min(out, lb_add(lb_tv(tw, x.c[t], pc), rat_mul(pc.lb_gen[x.lvl - 1], rat((long long)t))));
  return out;
}

// lower bound on the valuation of every root (all conjugates) of a monic
// polynomial whose coefficient valuations are bounded below by lb of coeffs
Rat lb_monic_roots(const std::vector<LB>& coeff_lb) {
  // coeff_lb[t] bounds the coefficient of z^t, t < deg; leading coeff is 1
  int deg = (int)coeff_lb.size();
  Rat out = rat(0);
  for (int t = 0; t < deg; ++t) {
    if (coeff_lb[t].inf) continue;
    out = rat_min(out, rat_div(coeff_lb[t].v, deg - t));
  }
  return out;
}

PlaceCtx make_place_ctx(const Tower& tw, bool infinite, const PolyT& pi) {
  PlaceCtx pc;
  pc.infinite = infinite;
  pc.pi = pi;
  for (int k = 1; k <= tw.levels(); ++k) {
    const TPoly& def = tw.defs[k - 1];
    std::vector<LB> cl;
    for (size_t t = 0; t + 1 < def.size(); ++t) cl.push_back(lb_tv(tw, def[t], pc));
    pc.lb_gen.push_back(lb_monic_roots(cl));
  }
  return pc;
}

void collect_den_primes(const Field& F, const RatFn& r,
                        std::map<std::string, PolyT>& primes) {
  if (rf_is_zero(r) || r.den.deg() == 0) return;
  for (const auto& [pfac, e] : factor_ddf(F, r.den).factors)
    primes.emplace(pt_wire(F, pfac), pfac);
}

std::vector<std::vector<RatFn>> rf_matrix_inverse(const Field& F,
                                                  std::vector<std::vector<RatFn>> m) {
  size_t s = m.size();
  std::vector<std::vector<RatFn>> inv(s, std::vector<RatFn>(s, rf_zero(F)));
  for (size_t i = 0; i < s; ++i) inv[i][i] = rf_one(F);
  for (size_t col = 0; col < s; ++col) {
    size_t sel = s;
    for (size_t i = col; i < s; ++i)
      if (!rf_is_zero(m[i][col])) {
        sel = i;
        break;
      }
    if (sel == s) throw std::runtime_error("trace form singular (inseparable tower?)");
    std::swap(m[col], m[sel]);
    std::swap(inv[col], inv[sel]);
    RatFn piv = rf_inv(F, m[col][col]);
    for (size_t j = 0; j < s; ++j) {
      m[col][j] = rf_mul(F, m[col][j], piv);
      inv[col][j] = rf_mul(F, inv[col][j], piv);
    }
    for (size_t i = 0; i < s; ++i) {
      if (i == col || rf_is_zero(m[i][col])) continue;
      RatFn f = m[i][col];
      for (size_t j = 0; j < s; ++j) {
        m[i][j] = rf_sub(F, m[i][j], rf_mul(F, f, m[col][j]));
        inv[i][j] = rf_sub(F, inv[i][j], rf_mul(F, f, inv[col][j]));
      }
    }
  }
  return inv;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<TVal> solve_linearized(const Tower& tw, int lvl, std::vector<TVal> coeffs,
                                   TVal rhs, int degree_cap) {
  const Field& F = *tw.F;
  for (auto& c : coeffs) c = tv_lift(tw, c, lvl);
  rhs = tv_lift(tw, rhs, lvl);
  while (!coeffs.empty() && tv_is_zero(coeffs.back())) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("solve_linearized: zero operator");
  int E = (int)coeffs.size() - 1;
  bool rhs_zero = tv_is_zero(rhs);

  // normalize to a monic top coefficient
  TVal linv = tv_inv(tw, coeffs[E]);
  for (auto& c : coeffs) c = tv_mul(tw, c, linv);
  rhs = tv_mul(tw, rhs, linv);

  if (E == 0) {
    // c0 * x = rhs with invertible c0
    return {tv_mul(tw, tv_inv(tw, coeffs[0]), rhs)};
  }

  int s = tw.abs_degree(lvl);
  std::vector<TVal> basis;
  for (int j = 0; j < s; ++j) basis.push_back(tv_basis_elt(tw, lvl, j));

  // trace form and its inverse over K
  auto trace = [&](const TVal& z) {
    RatFn tr = rf_zero(F);
    for (int j = 0; j < s; ++j) tr = rf_add(F, tr, tv_flatten(tw, tv_mul(tw, z, basis[j]), lvl)[(size_t)j]);
    return tr;
  };
  std::vector<std::vector<RatFn>> gram(s, std::vector<RatFn>(s, rf_zero(F)));
  for (int i = 0; i < s; ++i)
    for (int j = i; j < s; ++j)
      gram[i][j] = gram[j][i] = trace(tv_mul(tw, basis[i], basis[j]));
  std::vector<std::vector<RatFn>> minv =
      (s == 1) ? std::vector<std::vector<RatFn>>{{rf_inv(F, gram[0][0])}}
               : rf_matrix_inverse(F, gram);

  // finite places that can carry denominators of roots or coordinates
  std::map<std::string, PolyT> primes;
  for (const auto& c : coeffs)
    for (const auto& r : tv_flatten(tw, c, lvl)) collect_den_primes(F, r, primes);
  for (const auto& r : tv_flatten(tw, rhs, lvl)) collect_den_primes(F, r, primes);
  for (const auto& def : tw.defs)
    for (const auto& v : def)
      for (const auto& r : tv_flatten(tw, v, v.lvl)) collect_den_primes(F, r, primes);
  for (const auto& row : minv)
    for (const auto& r : row) collect_den_primes(F, r, primes);

  // per-unknown denominator D_j and numerator degree bound
  std::vector<PolyT> denom(s, pt_one(F));
  std::vector<int> numdeg(s, 0);

  auto root_lb = [&](const PlaceCtx& pc) {
    Rat out = rat(0);
    for (int e = 0; e < E; ++e) {
      if (tv_is_zero(coeffs[(size_t)e])) continue;
      LB lb = lb_tv(tw, coeffs[(size_t)e], pc);
      if (!lb.inf) out = rat_min(out, rat_div(lb.v, ipow(F.p, E) - ipow(F.p, e)));
    }
    if (!rhs_zero) {
      LB lb = lb_tv(tw, rhs, pc);
      if (!lb.inf) out = rat_min(out, rat_div(lb.v, ipow(F.p, E)));
    }
    return out;
  };

  // at the base level the polygon is exact: rational roots must have an
  // integral valuation equal to a negated slope
  auto exact_bound = [&](const PlaceCtx& pc, bool& no_integral) {
    std::vector<std::pair<long long, Rat>> pts;
    for (int e = 0; e <= E; ++e)
      if (!tv_is_zero(coeffs[(size_t)e]))
        pts.push_back({ipow(F.p, e), rat(val_rf(F, tv_to_rational(tw, coeffs[(size_t)e], lvl), pc))});
    if (!rhs_zero) pts.push_back({0, rat(val_rf(F, tv_to_rational(tw, rhs, lvl), pc))});
    bool found = false;
    long long best = 0;
    for (const auto& seg : lower_hull(pts)) {
      Rat rv = rat_neg(seg.slope);
      if (!rat_is_int(rv)) continue;
      if (!found || rv.n < best) best = rv.n;
      found = true;
    }
    no_integral = !found;
    return best;  // minimal integral root valuation
  };

  bool only_zero = false;
  for (const auto& [key, pi] : primes) {
    PlaceCtx pc = make_place_ctx(tw, false, pi);
    if (lvl == 0) {
      bool none = false;
      long long minval = exact_bound(pc, none);
      if (none) {
        only_zero = true;
        break;
      }
      long long b = std::max(0LL, -minval);
      if (b > 0) denom[0] = pt_mul(F, denom[0], pt_pow(F, pi, b));
      continue;
    }
    Rat lr = root_lb(pc);
    for (int j = 0; j < s; ++j) {
      long long bound = 0;
      bool any = false;
      for (int k = 0; k < s; ++k) {
        if (rf_is_zero(minv[(size_t)j][(size_t)k])) continue;
        LB bk = lb_tv(tw, basis[(size_t)k], pc);
        long long cand = val_rf(F, minv[(size_t)j][(size_t)k], pc) +
                         rat_ceil(rat_add(bk.inf ? rat(0) : bk.v, lr));
        if (!any || cand < bound) bound = cand;
        any = true;
      }
      long long b = any ? std::max(0LL, -bound) : 0;
      if (b > 0) denom[(size_t)j] = pt_mul(F, denom[(size_t)j], pt_pow(F, pi, b));
    }
  }

  // degree bound from the infinite place
  PlaceCtx pinf = make_place_ctx(tw, true, PolyT{});
  std::vector<bool> unknown_active(s, true);
  if (!only_zero) {
    if (lvl == 0) {
      bool none = false;
      long long minval = exact_bound(pinf, none);
      if (none)
        only_zero = true;
      else
        numdeg[0] = (int)(denom[0].deg() - minval);
    } else {
      Rat lr = root_lb(pinf);
      for (int j = 0; j < s; ++j) {
        long long bound = 0;
        bool any = false;
        for (int k = 0; k < s; ++k) {
          if (rf_is_zero(minv[(size_t)j][(size_t)k])) continue;
          LB bk = lb_tv(tw, basis[(size_t)k], pinf);
          long long cand = rf_val_inf(minv[(size_t)j][(size_t)k]) +
                           rat_ceil(rat_add(bk.inf ? rat(0) : bk.v, lr));
          if (!any || cand < bound) bound = cand;
          any = true;
        }
        numdeg[(size_t)j] = any ? (int)(denom[(size_t)j].deg() - bound) : 0;
      }
    }
  }
  if (only_zero) {
    if (rhs_zero) return {tv_zero(lvl)};
    return {};
  }
  for (int j = 0; j < s; ++j) {
    if (numdeg[(size_t)j] < 0) unknown_active[(size_t)j] = false;
    if (numdeg[(size_t)j] > degree_cap)
      throw std::runtime_error("solve_linearized: certified degree bound " +
                               std::to_string(numdeg[(size_t)j]) + " exceeds cap " +
                               std::to_string(degree_cap));
  }

  // columns: one F_p unknown per (basis index, T-degree, F_p coordinate)
  struct Unit {
    int j, t, coord;
  };
  std::vector<Unit> units;
  std::vector<TVal> unit_vals;
  std::vector<std::vector<RatFn>> cols;
  for (int j = 0; j < s; ++j) {
    if (!unknown_active[(size_t)j]) continue;
    for (int t = 0; t <= numdeg[(size_t)j]; ++t) {
      for (int coord = 0; coord < F.ext_deg(); ++coord) {
        FF e = F.zero();
        e[(size_t)coord] = 1;
        PolyT mono = pt_shift(pt_const(F, e), t, F);
        TVal xu = tv_mul(tw, tv_rf(tw, lvl, rf_make(F, mono, denom[(size_t)j])),
                         basis[(size_t)j]);
        units.push_back({j, t, coord});
        unit_vals.push_back(xu);
        cols.push_back(tv_flatten(tw, plin_eval(tw, coeffs, xu), lvl));
      }
    }
  }
  std::vector<RatFn> rhs_flat = tv_flatten(tw, rhs, lvl);

  // clear denominators per tower coordinate, then match T-coefficients
  std::vector<std::vector<int>> rows;
  std::vector<int> brhs;
  for (int k = 0; k < s; ++k) {
    PolyT lc = pt_one(F);
    auto fold = [&](const RatFn& r) {
      if (rf_is_zero(r) || r.den.deg() == 0) return;
      PolyT g = pt_gcd(F, lc, r.den);
      lc = pt_mul(F, lc, pt_div_exact(F, r.den, g));
    };
    for (const auto& col : cols) fold(col[(size_t)k]);
    fold(rhs_flat[(size_t)k]);
    auto cleared = [&](const RatFn& r) {
      if (rf_is_zero(r)) return PolyT{};
      return pt_mul(F, r.num, pt_div_exact(F, lc, r.den));
    };
    std::vector<PolyT> cp;
    for (const auto& col : cols) cp.push_back(cleared(col[(size_t)k]));
    PolyT rp = cleared(rhs_flat[(size_t)k]);
    int maxdeg = rp.deg();
    for (const auto& c : cp) maxdeg = std::max(maxdeg, c.deg());
    for (int d = 0; d <= maxdeg; ++d) {
      for (int coord = 0; coord < F.ext_deg(); ++coord) {
        std::vector<int> row(cols.size(), 0);
        bool nonzero = false;
        for (size_t u = 0; u < cp.size(); ++u) {
          int v = (d <= cp[u].deg()) ? cp[u].c[(size_t)d][(size_t)coord] : 0;
          row[u] = v;
          nonzero = nonzero || (v != 0);
        }
        int rv = (d <= rp.deg()) ? rp.c[(size_t)d][(size_t)coord] : 0;
        if (!nonzero && rv == 0) continue;
        rows.push_back(std::move(row));
        brhs.push_back(rv);
      }
    }
  }

  FpSolution sol = fplin_solve(F.p, std::move(rows), std::move(brhs), (int)cols.size());
  if (!sol.solvable) return {};
  long long combos = 1;
  for (size_t i = 0; i < sol.kernel.size(); ++i) {
    combos *= F.p;
    if (combos > 4096) throw std::runtime_error("solve_linearized: solution set too large");
  }

  std::vector<TVal> roots;
  std::vector<int> pick(sol.kernel.size(), 0);
  for (long long iter = 0; iter < combos; ++iter) {
    std::vector<int> lambda = sol.x;
    long long t = iter;
    for (size_t kd = 0; kd < sol.kernel.size(); ++kd) {
      int w = (int)(t % F.p);
      t /= F.p;
      if (w)
        for (size_t u = 0; u < lambda.size(); ++u)
          lambda[u] = (lambda[u] + w * sol.kernel[kd][u]) % F.p;
    }
    // assemble x = sum_j (N_j / D_j) * basis_j
    std::vector<PolyT> nums(s);
    for (size_t u = 0; u < units.size(); ++u) {
      if (lambda[u] == 0) continue;
      const Unit& un = units[u];
      PolyT& N = nums[(size_t)un.j];
      if (N.deg() < un.t) N.c.resize((size_t)un.t + 1, F.zero());
      N.c[(size_t)un.t][(size_t)un.coord] =
          (N.c[(size_t)un.t][(size_t)un.coord] + lambda[u]) % F.p;
    }
    TVal x = tv_zero(lvl);
    for (int j = 0; j < s; ++j) {
      PolyT N = pt_trim(nums[(size_t)j]);
      if (N.zero()) continue;
      x = tv_add(tw, x, tv_mul(tw, tv_rf(tw, lvl, rf_make(F, N, denom[(size_t)j])),
                               basis[(size_t)j]));
    }
    if (!tv_eq(tw, plin_eval(tw, coeffs, x), rhs))
      throw std::runtime_error("solve_linearized: candidate failed verification");
    roots.push_back(std::move(x));
  }
  std::sort(roots.begin(), roots.end(), [&](const TVal& a, const TVal& b) {
    return tv_key(tw, a, lvl) < tv_key(tw, b, lvl);
  });
  return roots;
}

std::vector<TVal> solve_carlitz_level(const Tower& tw, int lvl, const PolyT& a,
                                      const TVal& m, int degree_cap) {
  return solve_linearized(tw, lvl, ap_to_plin(tw, lvl, carlitz_coeffs(*tw.F, a)),
                          tv_lift(tw, m, lvl), degree_cap);
}

}  // namespace carlitz
