#include "carlitz/polyt.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace carlitz {

PolyT pt_trim(PolyT a) {
  while (!a.c.empty() && std::all_of(a.c.back().begin(), a.c.back().end(),
                                     [](int v) { return v == 0; }))
    a.c.pop_back();
  return a;
}

PolyT pt_x(const Field& F) {
  PolyT a;
  a.c = {F.zero(), F.one()};
  return a;
}

PolyT pt_const(const Field& F, const FF& v) {
  PolyT a;
  if (!F.is_zero(v)) a.c = {v};
  return a;
}

PolyT pt_one(const Field& F) { return pt_const(F, F.one()); }

PolyT pt_from_codes(const Field& F, const std::vector<long long>& codes) {
  PolyT a;
  for (long long c : codes) a.c.push_back(F.from_code(c));
  return pt_trim(std::move(a));
}

bool pt_eq(const PolyT& a, const PolyT& b) { return a.c == b.c; }

bool pt_less(const Field& F, const PolyT& a, const PolyT& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (size_t i = 0; i < a.c.size(); ++i) {
    long long ca = F.code(a.c[i]), cb = F.code(b.c[i]);
    if (ca != cb) return ca < cb;
  }
  return false;
}

FF pt_lead(const Field& F, const PolyT& a) {
  if (a.zero()) return F.zero();
  return a.c.back();
}

bool pt_is_monic(const Field& F, const PolyT& a) {
  return !a.zero() && F.is_one(a.c.back());
}

bool pt_in_fq(const Field& F, const PolyT& a) {
  for (const auto& v : a.c)
    if (!F.in_fq(v)) return false;
  return true;
}

PolyT pt_add(const Field& F, const PolyT& a, const PolyT& b) {
  PolyT out;
  out.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] = F.add(out.c[i], b.c[i]);
  return pt_trim(std::move(out));
}

PolyT pt_neg(const Field& F, const PolyT& a) {
  PolyT out = a;
  for (auto& v : out.c) v = F.neg(v);
  return out;
}

PolyT pt_sub(const Field& F, const PolyT& a, const PolyT& b) {
  return pt_add(F, a, pt_neg(F, b));
}

PolyT pt_mul(const Field& F, const PolyT& a, const PolyT& b) {
  if (a.zero() || b.zero()) return {};
  PolyT out;
  out.c.assign(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
  return pt_trim(std::move(out));
}

PolyT pt_mul_ff(const Field& F, const PolyT& a, const FF& v) {
  if (F.is_zero(v)) return {};
  PolyT out = a;
  for (auto& w : out.c) w = F.mul(w, v);
  return out;
}

PolyT pt_shift(const PolyT& a, int k, const Field& F) {
  if (a.zero()) return {};
  PolyT out;
  out.c.assign(a.c.size() + k, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i + k] = a.c[i];
  return out;
}

std::pair<PolyT, PolyT> pt_divmod(const Field& F, const PolyT& a, const PolyT& b) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  PolyT rem = a, quot;
  if (a.deg() >= b.deg()) quot.c.assign(a.deg() - b.deg() + 1, F.zero());
  FF linv = F.inv(b.c.back());
  while (!rem.zero() && rem.deg() >= b.deg()) {
    int k = rem.deg() - b.deg();
    FF c = F.mul(rem.c.back(), linv);
    quot.c[k] = c;
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[k + i] = F.sub(rem.c[k + i], F.mul(c, b.c[i]));
    rem = pt_trim(std::move(rem));
  }
  return {pt_trim(std::move(quot)), rem};
}

PolyT pt_mod(const Field& F, const PolyT& a, const PolyT& b) {
  return pt_divmod(F, a, b).second;
}

PolyT pt_div_exact(const Field& F, const PolyT& a, const PolyT& b) {
  auto [q, r] = pt_divmod(F, a, b);
  if (!r.zero()) throw std::runtime_error("pt_div_exact: division not exact");
  return q;
}

PolyT pt_monic(const Field& F, const PolyT& a) {
  if (a.zero()) return a;
  return pt_mul_ff(F, a, F.inv(a.c.back()));
}

PolyT pt_gcd(const Field& F, PolyT a, PolyT b) {
  while (!b.zero()) {
    PolyT r = pt_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pt_monic(F, a);
}

XgcdResult xgcd(const Field& F, const PolyT& f, const PolyT& g) {
  if (f.zero() && g.zero()) throw std::domain_error("xgcd(0, 0) rejected");
  PolyT r0 = f, r1 = g;
  PolyT s0 = pt_one(F), s1 = {};
  PolyT t0 = {}, t1 = pt_one(F);
  while (!r1.zero()) {
    auto [q, r2] = pt_divmod(F, r0, r1);
    PolyT s2 = pt_sub(F, s0, pt_mul(F, q, s1));
    PolyT t2 = pt_sub(F, t0, pt_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  FF linv = F.inv(r0.c.back());
  return {pt_mul_ff(F, r0, linv), pt_mul_ff(F, s0, linv), pt_mul_ff(F, t0, linv)};
}

FF pt_eval(const Field& F, const PolyT& a, const FF& x) {
  FF acc = F.zero();
  for (int i = a.deg(); i >= 0; --i) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

PolyT pt_pow_q(const Field& F, const PolyT& a, int i) {
  if (i == 0 || a.zero()) return a;
  long long step = 1;
  for (int j = 0; j < i; ++j) step *= F.q();  // q^i; desk scale keeps this small
  PolyT out;
  out.c.assign((size_t)(a.deg() * step) + 1, F.zero());
  for (int k = 0; k <= a.deg(); ++k) out.c[(size_t)(k * step)] = F.pow_q(a.c[k], i);
  return pt_trim(std::move(out));
}

PolyT pt_pow_p(const Field& F, const PolyT& a, int e) {
  if (e == 0 || a.zero()) return a;
  long long step = 1;
  for (int j = 0; j < e; ++j) step *= F.p;
  PolyT out;
  out.c.assign((size_t)(a.deg() * step) + 1, F.zero());
  for (int k = 0; k <= a.deg(); ++k) out.c[(size_t)(k * step)] = F.pow_p(a.c[k], e);
  return pt_trim(std::move(out));
}

PolyT pt_pow(const Field& F, PolyT a, long long e) {
  PolyT acc = pt_one(F);
  while (e > 0) {
    if (e & 1) acc = pt_mul(F, acc, a);
    a = pt_mul(F, a, a);
    e >>= 1;
  }
  return acc;
}

PolyT pt_powmod(const Field& F, PolyT base, long long e, const PolyT& mod) {
  PolyT acc = pt_mod(F, pt_one(F), mod);
  base = pt_mod(F, base, mod);
  while (e > 0) {
    if (e & 1) acc = pt_mod(F, pt_mul(F, acc, base), mod);
    base = pt_mod(F, pt_mul(F, base, base), mod);
    e >>= 1;
  }
  return acc;
}

PolyT pt_derivative(const Field& F, const PolyT& a) {
  PolyT out;
  for (int k = 1; k <= a.deg(); ++k) {
    FF v = F.zero();
    for (int rep = 0; rep < k % F.p; ++rep) v = F.add(v, a.c[k]);
    out.c.push_back(v);
  }
  return pt_trim(std::move(out));
}

PolyT qf_mul(const Field& F, const PolyT& mod, const PolyT& a, const PolyT& b) {
  return pt_mod(F, pt_mul(F, a, b), mod);
}

PolyT qf_inv(const Field& F, const PolyT& mod, const PolyT& a) {
  auto res = xgcd(F, pt_mod(F, a, mod), mod);
  if (res.g.deg() != 0) throw std::domain_error("qf_inv: element not invertible");
  return pt_mod(F, res.s, mod);
}

std::vector<PolyT> monic_polys(const Field& F, int deg, bool subfield) {
  std::vector<FF> coeffs = subfield ? F.fq_elements() : F.all_elements();
  std::vector<PolyT> out;
  std::vector<size_t> idx(deg, 0);
  while (true) {
    PolyT a;
    a.c.reserve(deg + 1);
    for (int i = 0; i < deg; ++i) a.c.push_back(coeffs[idx[i]]);
    a.c.push_back(F.one());
    out.push_back(std::move(a));
    int pos = 0;
    while (pos < deg) {
      if (++idx[pos] < coeffs.size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos >= deg) break;
  }
  std::sort(out.begin(), out.end(),
            [&F](const PolyT& a, const PolyT& b) { return pt_less(F, a, b); });
  return out;
}

bool pt_irreducible(const Field& F, const PolyT& a, bool subfield) {
  if (a.deg() <= 0) return false;
  if (subfield && !pt_in_fq(F, a)) throw std::invalid_argument("coefficients not in F_q");
  if (a.deg() == 1) return true;
  for (int e = 1; e <= a.deg() / 2; ++e) {
    for (const auto& g : monic_polys(F, e, subfield)) {
      if (pt_mod(F, a, g).zero()) return false;
    }
  }
  return true;
}

std::vector<PolyT> monic_irreducibles(const Field& F, int deg, bool subfield) {
  std::vector<PolyT> out;
  for (const auto& a : monic_polys(F, deg, subfield))
    if (pt_irreducible(F, a, subfield)) out.push_back(a);
  return out;
}

PolyT factorization_product(const Field& F, const Factorization& f) {
  PolyT acc = pt_const(F, f.unit);
  for (const auto& [pfac, e] : f.factors) acc = pt_mul(F, acc, pt_pow(F, pfac, e));
  return acc;
}

static void sort_factors(const Field& F, Factorization& f) {
  std::sort(f.factors.begin(), f.factors.end(),
            [&F](const auto& a, const auto& b) { return pt_less(F, a.first, b.first); });
}

Factorization factor(const Field& F, const PolyT& a, bool subfield) {
  if (a.zero()) throw std::domain_error("factor(0) rejected");
  if (subfield && !pt_in_fq(F, a)) throw std::invalid_argument("coefficients not in F_q");
  Factorization out;
  out.unit = pt_lead(F, a);
  PolyT rest = pt_monic(F, a);
  for (int d = 1; d <= rest.deg() && rest.deg() > 0; ++d) {
    for (const auto& pcand : monic_irreducibles(F, d, subfield)) {
      if (rest.deg() < d) break;
      int e = 0;
      while (pt_mod(F, rest, pcand).zero()) {
        rest = pt_div_exact(F, rest, pcand);
        ++e;
      }
      if (e > 0) out.factors.emplace_back(pcand, e);
    }
  }
  if (rest.deg() != 0) throw std::runtime_error("factor: trial division left a nonunit");
  sort_factors(F, out);
  return out;
}

namespace {

// squarefree part handling for char p: strip p-th powers when f' == 0
PolyT pt_pth_root(const Field& F, const PolyT& a) {
  PolyT out;
  out.c.assign(a.deg() / F.p + 1, F.zero());
  for (int k = 0; k <= a.deg(); ++k) {
    if (F.is_zero(a.c[k])) continue;
    if (k % F.p != 0) throw std::runtime_error("pt_pth_root: not a p-th power");
    // coefficient root: x -> x^{p^{rn-1}} inverts Frobenius on F_{q^n}
    out.c[k / F.p] = F.pow_p(a.c[k], F.ext_deg() - 1);
  }
  return pt_trim(std::move(out));
}

// splitmix64 used only to pick deterministic splitting elements
uint64_t mix64(uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

PolyT random_poly_below(const Field& F, int deg, uint64_t& state) {
  PolyT a;
  for (int i = 0; i < deg; ++i) a.c.push_back(F.from_code((long long)(mix64(state) % (uint64_t)F.qn())));
  return pt_trim(std::move(a));
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const Field& F, const PolyT& f, int d, uint64_t& state, std::vector<PolyT>& out) {
  if (f.deg() == d) {
    out.push_back(pt_monic(F, f));
    return;
  }
  long long Q = F.qn();
  int total_p_deg = 0;  // log_p of the residue field size Q^d
  {
    long long t = Q;
    while (t > 1) {
      t /= F.p;
      ++total_p_deg;
    }
    total_p_deg *= d;
  }
  while (true) {
    PolyT h = random_poly_below(F, f.deg(), state);
    if (h.zero()) continue;
    PolyT g;
    if (F.p == 2) {
      // trace map over F_2
      PolyT acc = pt_mod(F, h, f);
      PolyT cur = acc;
      for (int i = 1; i < total_p_deg; ++i) {
        cur = pt_mod(F, pt_mul(F, cur, cur), f);
        acc = pt_add(F, acc, cur);
      }
      g = pt_gcd(F, f, acc);
    } else {
      long long e = 1;
      for (int i = 0; i < total_p_deg; ++i) e *= F.p;  // Q^d
      PolyT t = pt_powmod(F, h, (e - 1) / 2, f);
      g = pt_gcd(F, f, pt_sub(F, t, pt_one(F)));
    }
    if (g.deg() > 0 && g.deg() < f.deg()) {
      edf(F, g, d, state, out);
      edf(F, pt_div_exact(F, f, g), d, state, out);
      return;
    }
  }
}

}  // namespace

Factorization factor_ddf(const Field& F, const PolyT& a) {
  if (a.zero()) throw std::domain_error("factor(0) rejected");
  Factorization out;
  out.unit = pt_lead(F, a);
  std::map<std::string, std::pair<PolyT, int>> acc;  // wire -> (factor, exponent)
  uint64_t state = 0x243F6A8885A308D3ull;            // fixed seed: deterministic output

  // multiplicity loop: peel squarefree layers
  PolyT rest = pt_monic(F, a);
  int mult_scale = 1;
  while (rest.deg() > 0) {
    PolyT der = pt_derivative(F, rest);
    if (der.zero()) {
      rest = pt_pth_root(F, rest);
      mult_scale *= F.p;
      continue;
    }
    PolyT sf = pt_div_exact(F, rest, pt_gcd(F, rest, der));  // squarefree part
    // distinct-degree on sf
    PolyT work = sf;
    PolyT xq = pt_mod(F, pt_x(F), work);
    for (int d = 1; work.deg() > 0 && d <= work.deg(); ++d) {
      xq = pt_powmod(F, xq, F.qn(), work);
      PolyT g = pt_gcd(F, work, pt_sub(F, xq, pt_x(F)));
      if (g.deg() > 0) {
        std::vector<PolyT> irr;
        edf(F, g, d, state, irr);
        for (const auto& f0 : irr) {
          // exponent of f0 in the original rest (before peeling this layer)
          int e = 0;
          PolyT probe = rest;
          while (pt_mod(F, probe, f0).zero()) {
            probe = pt_div_exact(F, probe, f0);
            ++e;
          }
          auto key = pt_wire(F, f0);
          auto it = acc.find(key);
          int add = e * mult_scale;
          if (it == acc.end())
            acc.emplace(key, std::make_pair(f0, add));
          else
            it->second.second += add;
        }
        work = pt_div_exact(F, work, g);
        xq = pt_mod(F, xq, work);
      }
    }
    // remove all found factors from rest
    PolyT stripped = rest;
    for (const auto& f0 : acc)
      while (pt_mod(F, stripped, f0.second.first).zero())
        stripped = pt_div_exact(F, stripped, f0.second.first);
    rest = stripped;
    if (rest.deg() > 0 && pt_derivative(F, rest).zero()) continue;
    if (rest.deg() > 0) throw std::runtime_error("factor_ddf: incomplete factorization");
  }
  for (auto& [k, v] : acc) out.factors.push_back(v);
  sort_factors(F, out);
  // sanity: refactorization must be exact
  if (!pt_eq(factorization_product(F, out), a))
    throw std::runtime_error("factor_ddf: refactorization check failed");
  return out;
}

PolyT crt(const Field& F, const std::vector<std::pair<PolyT, PolyT>>& congruences) {
  if (congruences.empty()) throw std::invalid_argument("crt: empty congruence list");
  for (size_t i = 0; i < congruences.size(); ++i)
    for (size_t j = i + 1; j < congruences.size(); ++j) {
      PolyT g = pt_gcd(F, congruences[i].second, congruences[j].second);
      if (g.deg() != 0)
        throw std::invalid_argument("crt: moduli not coprime: " +
                                    pt_pretty(F, congruences[i].second) + " and " +
                                    pt_pretty(F, congruences[j].second));
    }
  PolyT x = pt_mod(F, congruences[0].first, congruences[0].second);
  PolyT m = congruences[0].second;
  for (size_t i = 1; i < congruences.size(); ++i) {
    const auto& [b, mi] = congruences[i];
    // x + m*t ≡ b (mod mi)
    auto res = xgcd(F, m, mi);
    PolyT t = pt_mod(F, pt_mul(F, res.s, pt_sub(F, b, x)), mi);
    x = pt_add(F, x, pt_mul(F, m, t));
    m = pt_mul(F, m, mi);
    x = pt_mod(F, x, m);
  }
  return x;
}

long long euler_phi(const Field& F, const PolyT& a, bool subfield) {
  if (a.deg() < 1) throw std::domain_error("euler_phi: constant input rejected");
  long long qeff = subfield ? F.q() : F.qn();
  Factorization f = factor(F, a, subfield);
  long long phi = 1;
  for (const auto& [pfac, e] : f.factors) {
    long long pd = 1;
    for (int i = 0; i < pfac.deg(); ++i) pd *= qeff;
    long long term = pd - 1;
    for (int i = 1; i < e; ++i) term *= pd;
    phi *= term;
  }
  return phi;
}

long long necklace_count(long long field_size, int d) {
  // (1/d) sum_{e|d} mu(e) * field_size^{d/e}
  auto mobius = [](int m) {
    int mu = 1;
    for (int pr = 2; pr * pr <= m; ++pr) {
      if (m % pr == 0) {
        m /= pr;
        if (m % pr == 0) return 0;
        mu = -mu;
      }
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    long long pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= field_size;
    total += mu * pw;
  }
  return total / d;
}

std::string pt_wire(const Field& F, const PolyT& a) {
  if (a.zero()) return F.wire(F.zero());
  std::string s;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) s.push_back(',');
    s += F.wire(a.c[i]);
  }
  return s;
}

PolyT pt_parse(const Field& F, const std::string& s) {
  PolyT a;
  std::stringstream ss(s);
  std::string group;
  while (std::getline(ss, group, ',')) a.c.push_back(F.parse_wire(group));
  if (a.c.empty()) throw std::invalid_argument("empty polynomial string");
  return pt_trim(std::move(a));
}

std::string pt_pretty(const Field& F, const PolyT& a) {
  if (a.zero()) return "0";
  std::string s;
  for (int k = a.deg(); k >= 0; --k) {
    if (F.is_zero(a.c[k])) continue;
    if (!s.empty()) s += " + ";
    std::string coef;
    if (!F.is_one(a.c[k]) || k == 0) {
      if (F.ext_deg() == 1)
        coef = std::to_string(a.c[k][0]);
      else
        coef = "[" + F.wire(a.c[k]) + "]";
    }
    std::string mono = (k == 0) ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
    if (coef.empty())
      s += mono;
    else if (mono.empty())
      s += coef;
    else
      s += coef + "*" + mono;
  }
  return s;
}

}  // namespace carlitz
