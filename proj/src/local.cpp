#include "carlitz/local.hpp"

#include <algorithm>

#include "carlitz/fplin.hpp"

namespace carlitz {

bool place_eq(const Place& a, const Place& b) {
  if (a.infinite != b.infinite) return false;
  return a.infinite || pt_eq(a.pi, b.pi);
}

bool place_less(const Field& F, const Place& a, const Place& b) {
  if (a.infinite != b.infinite) return b.infinite;  // infinite sorts last
  if (a.infinite) return false;
  if (a.pi.deg() != b.pi.deg()) return a.pi.deg() < b.pi.deg();
  return pt_less(F, a.pi, b.pi);
}

std::string place_wire(const Field& F, const Place& p) {
  return p.infinite ? "inf" : pt_wire(F, p.pi);
}

Place place_parse(const Field& F, const std::string& s) {
  if (s == "inf" || s == "infinity") return {true, PolyT{}};
  Place p;
  p.pi = pt_parse(F, s);
  if (!pt_is_monic(F, p.pi) || !pt_irreducible(F, p.pi, false))
    throw std::invalid_argument("place must be a monic irreducible or 'inf'");
  return p;
}

std::vector<Place> enumerate_places(const Field& F, int max_degree, bool include_infinite) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  std::vector<Place> out;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& pi : monic_irreducibles(F, d, false)) out.push_back({false, pi});
  if (include_infinite) out.push_back({true, PolyT{}});
  return out;
}

namespace {

// coefficients of C_a and m, rewritten in the local variable (U = 1/T at
// the infinite place so that a single code path applies)
struct LocalEq {
  std::vector<RatFn> c;  // coefficient of x^{q^i}
  RatFn m;
  PolyT pi;
};

LocalEq localize(const Field& F, const AdditivePoly& a, const RatFn& m, const Place& place) {
  LocalEq eq;
  for (const auto& ci : a.c) {
    RatFn r = ci.zero() ? rf_zero(F) : rf_from(F, ci);
    eq.c.push_back(place.infinite ? rf_subst_inv(F, r) : r);
  }
  eq.m = place.infinite ? rf_subst_inv(F, m) : m;
  eq.pi = place.infinite ? pt_x(F) : place.pi;
  return eq;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<HullSegment> newton_polygon(const Field& F, const AdditivePoly& a,
                                        const RatFn& m, const Place& place) {
  if (a.zero()) throw std::invalid_argument("newton_polygon of the zero operator");
  LocalEq eq = localize(F, a, m, place);
  std::vector<std::pair<long long, Rat>> pts;
  for (size_t i = 0; i < eq.c.size(); ++i)
    if (!rf_is_zero(eq.c[i]))
      pts.push_back({ipow(F.q(), (int)i), rat(rf_val(F, eq.c[i], eq.pi))});
  if (!rf_is_zero(eq.m)) pts.push_back({0, rat(rf_val(F, eq.m, eq.pi))});
  return lower_hull(pts);
}

std::vector<PolyT> solve_residue(const Field& F, const PolyT& a, const PolyT& mbar,
                                 const Place& place) {
  LocalEq eq = localize(F, carlitz_coeffs(F, a), rf_zero(F), place);
  for (const auto& ci : eq.c)
    if (!rf_is_zero(ci) && rf_val(F, ci, eq.pi) < 0)
      throw std::invalid_argument("coefficients not integral at the place");
  long long count = 1;
  for (int i = 0; i < eq.pi.deg() * F.ext_deg(); ++i) {
    count *= F.p;
    if (count > 4096) throw std::runtime_error("residue field too large to enumerate");
  }
  std::vector<PolyT> reduced;
  for (const auto& ci : eq.c)
    reduced.push_back(rf_is_zero(ci) ? PolyT{} : rf_reduce(F, ci, eq.pi));
  PolyT mred = pt_mod(F, mbar, eq.pi);
  std::vector<PolyT> out;
  int coords = eq.pi.deg() * F.ext_deg();
  for (long long code = 0; code < count; ++code) {
    // residue candidates: polynomials of degree < deg pi over F_{q^n}
    PolyT cand;
    long long t = code;
    for (int d = 0; d < eq.pi.deg(); ++d) {
      FF v = F.zero();
      for (int j = 0; j < F.ext_deg(); ++j) {
        v[(size_t)j] = (int)(t % F.p);
        t /= F.p;
      }
      cand.c.push_back(v);
    }
    cand = pt_trim(std::move(cand));
    PolyT acc;
    PolyT xp = cand;
    for (size_t i = 0; i < reduced.size(); ++i) {
      if (!reduced[i].zero())
        acc = pt_mod(F, pt_add(F, acc, pt_mul(F, reduced[i], xp)), eq.pi);
      if (i + 1 < reduced.size()) xp = pt_powmod(F, xp, F.q(), eq.pi);
    }
    if (pt_eq(acc, mred)) out.push_back(cand);
  }
  (void)coords;
  std::sort(out.begin(), out.end(),
            [&F](const PolyT& x, const PolyT& y) { return pt_less(F, x, y); });
  return out;
}

static RatFn scaled_eval(const Field& F, const ScaledEq& eq, const RatFn& z) {
  RatFn acc = rf_zero(F);
  RatFn zp = z;
  for (size_t e = 0; e < eq.gamma.size(); ++e) {
    if (!rf_is_zero(eq.gamma[e])) acc = rf_add(F, acc, rf_mul(F, eq.gamma[e], zp));
    if (e + 1 < eq.gamma.size()) zp = rf_pow_p(F, zp, 1);
  }
  return acc;
}

std::optional<PolyT> lift_hensel(const Field& F, const ScaledEq& eq, PolyT z0, int target) {
  PolyT mod_target = pt_pow(F, eq.pi, target);
  RatFn g0 = eq.gamma[0];
  PolyT z = pt_mod(F, z0, mod_target);
  for (int iter = 0; iter < 64; ++iter) {
    RatFn resid = rf_sub(F, scaled_eval(F, eq, rf_from(F, z)), eq.mprime);
    if (rf_is_zero(resid)) return z;
    int v = rf_val(F, resid, eq.pi);
    if (v >= target) return z;
    if (v <= 2 * eq.eprime) return std::nullopt;  // Newton step would not contract
    RatFn step = rf_div(F, resid, g0);
    RatFn znew = rf_sub(F, rf_from(F, z), step);
    z = rf_reduce(F, znew, mod_target);
  }
  throw std::runtime_error("lift_hensel: iteration budget exhausted");
}

LocalVerdict solve_local(const Field& F, const PolyT& a, const RatFn& m,
                         const Place& place, int precision_cap) {
  if (a.zero()) throw std::invalid_argument("solve_local with a = 0");
  AdditivePoly ap = carlitz_coeffs(F, a);
  LocalEq eq = localize(F, ap, m, place);

  LocalVerdict out;
  if (rf_is_zero(eq.m)) {
    out.status = LocalStatus::Solvable;
    out.witness = LocalElem{place, 0, PolyT{}, precision_cap > 0 ? precision_cap : 4};
    out.certified_precision = out.witness->prec;
    return out;
  }

  std::vector<std::pair<long long, Rat>> pts;
  for (size_t i = 0; i < eq.c.size(); ++i)
    if (!rf_is_zero(eq.c[i]))
      pts.push_back({ipow(F.q(), (int)i), rat(rf_val(F, eq.c[i], eq.pi))});
  pts.push_back({0, rat(rf_val(F, eq.m, eq.pi))});
  long long min_int_val = 0;
  bool found_int = false;
  for (const auto& seg : lower_hull(pts)) {
    Rat rv = rat_neg(seg.slope);
    if (!rat_is_int(rv)) continue;
    if (!found_int || rv.n < min_int_val) min_int_val = rv.n;
    found_int = true;
  }
  if (!found_int) {
    out.status = LocalStatus::Unsolvable;
    out.obstruction = Obstruction::NonIntegralSlope;
    return out;
  }

  // x = pi^{-B} z, then clear by pi^s to an integral equation
  int B = (int)std::max(0LL, -min_int_val);
  int vmin = rf_val(F, eq.m, eq.pi);
  for (size_t i = 0; i < eq.c.size(); ++i)
    if (!rf_is_zero(eq.c[i]))
      vmin = std::min(vmin, rf_val(F, eq.c[i], eq.pi) - B * (int)ipow(F.q(), (int)i));
  int s = std::max(0, -vmin);

  ScaledEq sc;
  sc.pi = eq.pi;
  sc.shift_b = B;
  sc.clear_s = s;
  sc.gamma.assign((eq.c.size() - 1) * (size_t)F.r + 1, rf_zero(F));
  RatFn piR = rf_from(F, eq.pi);
  auto pi_pow_rf = [&](int e) {
    if (e >= 0) return rf_from(F, pt_pow(F, eq.pi, e));
    return rf_make(F, pt_one(F), pt_pow(F, eq.pi, -e));
  };
  for (size_t i = 0; i < eq.c.size(); ++i) {
    if (rf_is_zero(eq.c[i])) continue;
    sc.gamma[i * (size_t)F.r] =
        rf_mul(F, eq.c[i], pi_pow_rf(s - B * (int)ipow(F.q(), (int)i)));
  }
  sc.mprime = rf_mul(F, eq.m, pi_pow_rf(s));
  sc.eprime = rf_val(F, sc.gamma[0], eq.pi);
  sc.modulus_n = 2 * sc.eprime + 1;
  out.scaled = sc;
  (void)piR;

  int cap = precision_cap > 0 ? precision_cap : 4 * sc.modulus_n;
  if (cap < sc.modulus_n) {
    out.status = LocalStatus::Inconclusive;
    return out;
  }

  // decide integral solvability modulo pi^N by linear algebra over F_p
  int N = sc.modulus_n;
  PolyT piN = pt_pow(F, eq.pi, N);
  int nmono = N * eq.pi.deg();
  int ncols = nmono * F.ext_deg();
  std::vector<std::vector<RatFn>> colvals;
  std::vector<std::vector<int>> rows;
  std::vector<PolyT> colred;
  for (int t = 0; t < nmono; ++t)
    for (int j = 0; j < F.ext_deg(); ++j) {
      FF e = F.zero();
      e[(size_t)j] = 1;
      PolyT mono = pt_shift(pt_const(F, e), t, F);
      colred.push_back(rf_reduce(F, scaled_eval(F, sc, rf_from(F, mono)), piN));
    }
  PolyT rred = rf_reduce(F, sc.mprime, piN);
  int maxd = N * eq.pi.deg() - 1;
  std::vector<int> brhs;
  for (int d = 0; d <= maxd; ++d)
    for (int j = 0; j < F.ext_deg(); ++j) {
      std::vector<int> row((size_t)ncols, 0);
      for (int u = 0; u < ncols; ++u)
        row[(size_t)u] = (d <= colred[(size_t)u].deg()) ? colred[(size_t)u].c[(size_t)d][(size_t)j] : 0;
      rows.push_back(std::move(row));
      brhs.push_back(d <= rred.deg() ? rred.c[(size_t)d][(size_t)j] : 0);
    }
  FpSolution sol = fplin_solve(F.p, std::move(rows), std::move(brhs), ncols);
  if (!sol.solvable) {
    out.status = LocalStatus::Unsolvable;
    out.obstruction =
        sc.eprime == 0 ? Obstruction::ResidueObstruction : Obstruction::LiftObstruction;
    return out;
  }
  PolyT z0;
  for (int t = 0; t < nmono; ++t) {
    FF v = F.zero();
    for (int j = 0; j < F.ext_deg(); ++j) v[(size_t)j] = sol.x[(size_t)(t * F.ext_deg() + j)];
    z0.c.push_back(v);
  }
  z0 = pt_trim(std::move(z0));

  auto lifted = lift_hensel(F, sc, z0, cap);
  if (!lifted) throw std::runtime_error("solve_local: Hensel precondition violated");
  out.status = LocalStatus::Solvable;
  out.witness = LocalElem{place, B, *lifted, cap};
  out.certified_precision = cap - s;
  return out;
}

int local_residual_valuation(const Field& F, const PolyT& a, const RatFn& m,
                             const LocalElem& x, int cap) {
  LocalEq eq = localize(F, carlitz_coeffs(F, a), m, x.place);
  RatFn xv = rf_mul(F, rf_from(F, x.mantissa),
                    x.shift >= 0
                        ? rf_make(F, pt_one(F), pt_pow(F, eq.pi, x.shift))
                        : rf_from(F, pt_pow(F, eq.pi, -x.shift)));
  RatFn acc = rf_zero(F);
  RatFn xp = xv;
  for (size_t i = 0; i < eq.c.size(); ++i) {
    if (!rf_is_zero(eq.c[i])) acc = rf_add(F, acc, rf_mul(F, eq.c[i], xp));
    if (i + 1 < eq.c.size()) xp = rf_pow_p(F, xp, F.r);
  }
  RatFn resid = rf_sub(F, acc, eq.m);
  if (rf_is_zero(resid)) return cap;
  return std::min(cap, rf_val(F, resid, eq.pi));
}

}  // namespace carlitz
