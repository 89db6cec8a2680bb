#include "carlitz/carlitz.hpp"

#include <algorithm>
#include <map>

namespace carlitz {

AdditivePoly ap_trim(AdditivePoly a) {
  while (!a.c.empty() && a.c.back().zero()) a.c.pop_back();
  return a;
}

AdditivePoly ap_add(const Field& F, const AdditivePoly& a, const AdditivePoly& b) {
  AdditivePoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = pt_add(F, out.c[i], b.c[i]);
  return ap_trim(std::move(out));
}

AdditivePoly ap_sub(const Field& F, const AdditivePoly& a, const AdditivePoly& b) {
  AdditivePoly nb;
  nb.c.reserve(b.c.size());
  for (const auto& v : b.c) nb.c.push_back(pt_neg(F, v));
  return ap_add(F, a, nb);
}

AdditivePoly twisted_mul(const Field& F, const AdditivePoly& a, const AdditivePoly& b) {
  if (a.zero() || b.zero()) return {};
  AdditivePoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, PolyT{});
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = pt_add(F, out.c[i + j], pt_mul(F, a.c[i], pt_pow_q(F, b.c[j], (int)i)));
  return ap_trim(std::move(out));
}

bool ap_eq(const AdditivePoly& a, const AdditivePoly& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!pt_eq(a.c[i], b.c[i])) return false;
  return true;
}

AdditivePoly carlitz_coeffs(const Field& F, const PolyT& a) {
  if (!pt_in_fq(F, a))
    throw std::invalid_argument("Carlitz argument must have F_q coefficients");
  AdditivePoly ct;  // C_T = T + tau
  ct.c = {pt_x(F), pt_one(F)};
  AdditivePoly power;  // C_{T^k}
  power.c = {pt_one(F)};
  AdditivePoly out;
  for (int k = 0; k <= a.deg(); ++k) {
    if (!F.is_zero(a.c[k])) {
      AdditivePoly term;
      term.c.reserve(power.c.size());
      for (const auto& v : power.c) term.c.push_back(pt_mul_ff(F, v, a.c[k]));
      out = ap_add(F, out, term);
    }
    power = twisted_mul(F, ct, power);
  }
  return out;
}

RatFn additive_eval(const Field& F, const AdditivePoly& L, const RatFn& x) {
  RatFn acc = rf_zero(F);
  RatFn xp = x;  // x^{q^i}
  for (size_t i = 0; i < L.c.size(); ++i) {
    if (!L.c[i].zero()) acc = rf_add(F, acc, rf_mul(F, RatFn{L.c[i], pt_one(F)}, xp));
    if (i + 1 < L.c.size()) xp = rf_pow_p(F, xp, F.r);
  }
  return acc;
}

RatFn carlitz_eval(const Field& F, const PolyT& a, const RatFn& x) {
  return additive_eval(F, carlitz_coeffs(F, a), x);
}

XPoly xp_trim(XPoly a) {
  while (!a.c.empty() && a.c.back().zero()) a.c.pop_back();
  return a;
}

XPoly ap_dense(const Field& F, const AdditivePoly& a) {
  XPoly out;
  if (a.zero()) return out;
  long long top = 1;
  for (int i = 0; i < a.tau_deg(); ++i) top *= F.q();
  out.c.assign((size_t)top + 1, PolyT{});
  long long e = 1;
  for (size_t i = 0; i < a.c.size(); ++i) {
    out.c[(size_t)e] = a.c[i];
    e *= F.q();
  }
  return xp_trim(std::move(out));
}

XPoly xp_add(const Field& F, const XPoly& a, const XPoly& b) {
  XPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = pt_add(F, out.c[i], b.c[i]);
  return xp_trim(std::move(out));
}

XPoly xp_sub(const Field& F, const XPoly& a, const XPoly& b) {
  XPoly nb;
  nb.c.reserve(b.c.size());
  for (const auto& v : b.c) nb.c.push_back(pt_neg(F, v));
  return xp_add(F, a, nb);
}

XPoly xp_mul(const Field& F, const XPoly& a, const XPoly& b) {
  if (a.zero() || b.zero()) return {};
  XPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, PolyT{});
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = pt_add(F, out.c[i + j], pt_mul(F, a.c[i], b.c[j]));
  return xp_trim(std::move(out));
}

XPoly xp_div_exact(const Field& F, const XPoly& a, const XPoly& b) {
  if (b.zero() || !pt_eq(b.c.back(), pt_one(F)))
    throw std::invalid_argument("xp_div_exact: divisor must be monic in x");
  XPoly rem = a, quot;
  if (a.deg() >= b.deg()) quot.c.assign(a.deg() - b.deg() + 1, PolyT{});
  while (!rem.zero() && rem.deg() >= b.deg()) {
    int k = rem.deg() - b.deg();
    PolyT c = rem.c.back();
    quot.c[k] = c;
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[k + i] = pt_sub(F, rem.c[k + i], pt_mul(F, c, b.c[i]));
    rem = xp_trim(std::move(rem));
  }
  if (!rem.zero()) throw std::runtime_error("xp_div_exact: division not exact");
  return quot;
}

bool xp_eq(const XPoly& a, const XPoly& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!pt_eq(a.c[i], b.c[i])) return false;
  return true;
}

RatFn xp_eval(const Field& F, const XPoly& f, const RatFn& x) {
  RatFn acc = rf_zero(F);
  for (int i = f.deg(); i >= 0; --i)
    acc = rf_add(F, rf_mul(F, acc, x), RatFn{f.c[i], pt_one(F)});
  return acc;
}

std::pair<FF, PolyT> monic_normalize(const Field& F, const PolyT& a) {
  if (a.zero()) throw std::domain_error("monic_normalize(0)");
  FF u = pt_lead(F, a);
  return {u, pt_mul_ff(F, a, F.inv(u))};
}

std::vector<PolyT> monic_divisors(const Field& F, const PolyT& abar) {
  Factorization f = factor(F, abar, true);
  std::vector<PolyT> out = {pt_one(F)};
  for (const auto& [pfac, e] : f.factors) {
    std::vector<PolyT> next;
    PolyT pk = pt_one(F);
    for (int i = 0; i <= e; ++i) {
      for (const auto& d : out) next.push_back(pt_mul(F, d, pk));
      pk = pt_mul(F, pk, pfac);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [&F](const PolyT& x, const PolyT& y) { return pt_less(F, x, y); });
  return out;
}

XPoly cyclotomic_poly(const Field& F, const PolyT& a) {
  if (a.deg() < 1) throw std::domain_error("cyclotomic of a constant");
  PolyT abar = monic_normalize(F, a).second;
  if (!pt_in_fq(F, abar))
    throw std::invalid_argument("cyclotomic argument must have F_q coefficients");
  // Phi_d for monic divisors d, built in degree order from C_d = prod_{e|d} Phi_e
  std::map<std::string, XPoly> memo;
  XPoly x_poly;
  x_poly.c = {PolyT{}, pt_one(F)};
  memo[pt_wire(F, pt_one(F))] = x_poly;  // Phi_1 = x
  auto divisors = monic_divisors(F, abar);
  for (const auto& d : divisors) {
    auto key = pt_wire(F, d);
    if (memo.count(key)) continue;
    XPoly dense = ap_dense(F, carlitz_coeffs(F, d));
    XPoly prod;
    prod.c = {pt_one(F)};
    for (const auto& e : monic_divisors(F, d)) {
      if (pt_eq(e, d)) continue;
      prod = xp_mul(F, prod, memo.at(pt_wire(F, e)));
    }
    memo[key] = xp_div_exact(F, dense, prod);
  }
  return memo.at(pt_wire(F, abar));
}

TorsionSet torsion_points(const Field& F, const PolyT& a) {
  if (a.deg() < 1) throw std::domain_error("torsion of a constant");
  PolyT abar = monic_normalize(F, a).second;
  AdditivePoly ca = carlitz_coeffs(F, abar);
  // rational torsion points are polynomials of degree <= deg abar (integral
  // over F_{q^n}[T] since C_abar is monic; degree bound from the hull at infinity)
  long long total_cands = 1;
  for (int i = 0; i <= abar.deg(); ++i) {
    total_cands *= F.qn();
    if (total_cands > 1000000) throw std::runtime_error("torsion enumeration too large");
  }
  TorsionSet out;
  XPoly phi = cyclotomic_poly(F, abar);
  for (const auto& cand : [&] {
         std::vector<PolyT> all;
         long long total = 1;
         for (int i = 0; i <= abar.deg(); ++i) total *= F.qn();
         std::vector<long long> codes(abar.deg() + 1, 0);
         for (long long c = 0; c < total; ++c) {
           long long t = c;
           for (int i = 0; i <= abar.deg(); ++i) {
             codes[i] = t % F.qn();
             t /= F.qn();
           }
           all.push_back(pt_from_codes(F, codes));
         }
         std::sort(all.begin(), all.end(),
                   [&F](const PolyT& x, const PolyT& y) { return pt_less(F, x, y); });
         all.erase(std::unique(all.begin(), all.end(),
                               [](const PolyT& x, const PolyT& y) { return pt_eq(x, y); }),
                   all.end());
         return all;
       }()) {
    RatFn v = additive_eval(F, ca, rf_from(F, cand));
    if (!rf_is_zero(v)) continue;
    out.elements.push_back(cand);
    if (!out.has_generator && rf_is_zero(xp_eval(F, phi, rf_from(F, cand)))) {
      out.has_generator = true;
      out.generator = cand;
    }
  }
  long long full = 1;
  for (int i = 0; i < abar.deg(); ++i) full *= F.q();
  out.full = ((long long)out.elements.size() == full);
  return out;
}

bool is_generator(const Field& F, const RatFn& lam, const PolyT& a) {
  PolyT abar = monic_normalize(F, a).second;
  if (!rf_is_zero(carlitz_eval(F, abar, lam)))
    throw std::invalid_argument("element is not a-torsion");
  return rf_is_zero(xp_eval(F, cyclotomic_poly(F, abar), lam));
}

}  // namespace carlitz
