#include "carlitz/gf.hpp"

#include <algorithm>

namespace carlitz {

namespace {

// dense F_p polynomial helpers, coefficients low degree first

std::vector<int> fp_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> fp_mul(int p, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return fp_trim(out);
}

int fp_inv_int(int p, int a) {
  a %= p;
  if (a < 0) a += p;
  int t = 0, newt = 1, rr = p, newr = a;
  while (newr != 0) {
    int qq = rr / newr;
    int tmp = t - qq * newt;
    t = newt;
    newt = tmp;
    tmp = rr - qq * newr;
    rr = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return t;
}

std::vector<int> fp_mod(int p, std::vector<int> a, const std::vector<int>& m) {
  a = fp_trim(std::move(a));
  int dm = (int)m.size() - 1;
  int linv = fp_inv_int(p, m.back());
  while ((int)a.size() - 1 >= dm) {
    int k = (int)a.size() - 1 - dm;
    int c = (a.back() * linv) % p;
    for (int i = 0; i <= dm; ++i) {
      a[k + i] = ((a[k + i] - c * m[i]) % p + p) % p;
    }
    a = fp_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

// extended gcd over F_p[x]; returns (g, s) with s*a == g mod m (used for inverses)
std::vector<int> fp_invmod(int p, const std::vector<int>& a, const std::vector<int>& m) {
  std::vector<int> r0 = m, r1 = fp_mod(p, a, m);
  std::vector<int> s0 = {}, s1 = {1};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    std::vector<int> q((r0.size() >= r1.size()) ? r0.size() - r1.size() + 1 : 1, 0);
    std::vector<int> rem = r0;
    int linv = fp_inv_int(p, r1.back());
    while ((int)rem.size() >= (int)r1.size() && !rem.empty()) {
      int k = (int)rem.size() - (int)r1.size();
      int c = (rem.back() * linv) % p;
      q[k] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[k + i] = ((rem[k + i] - c * r1[i]) % p + p) % p;
      rem = fp_trim(std::move(rem));
    }
    std::vector<int> s2 = s0;  // s2 = s0 - q*s1
    std::vector<int> qs1 = fp_mul(p, q, s1);
    size_t len = std::max(s2.size(), qs1.size());
    s2.resize(len, 0);
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] = ((s2[i] - qs1[i]) % p + p) % p;
    s2 = fp_trim(std::move(s2));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (r0.size() != 1) throw std::runtime_error("fp_invmod: element not invertible");
  int c = fp_inv_int(p, r0[0]);
  std::vector<int> out;
  out.reserve(s0.size());
  for (int v : s0) out.push_back((v * c) % p);
  return fp_trim(std::move(out));
}

bool fp_divides(int p, const std::vector<int>& d, const std::vector<int>& a) {
  return fp_mod(p, a, d).empty();
}

// monic polynomials of given degree, smallest first under low-degree-first
// digit order (low coefficients are the least significant digits)
std::vector<std::vector<int>> fp_monic_of_degree(int p, int d) {
  std::vector<std::vector<int>> out;
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    std::vector<int> poly(d + 1, 0);
    long long c = code;
    for (int i = 0; i < d; ++i) {
      poly[i] = (int)(c % p);
      c /= p;
    }
    poly[d] = 1;
    out.push_back(std::move(poly));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

bool fp_irreducible(int p, const std::vector<int>& f) {
  int d = (int)f.size() - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int e = 1; e <= d / 2; ++e) {
    for (const auto& g : fp_monic_of_degree(p, e)) {
      if (fp_divides(p, g, f)) return false;
    }
  }
  return true;
}

std::vector<int> fp_smallest_irreducible(int p, int d) {
  for (const auto& f : fp_monic_of_degree(p, d)) {
    if (fp_irreducible(p, f)) return f;
  }
  throw std::runtime_error("no irreducible polynomial found (internal error)");
}

}  // namespace

bool is_prime_int(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

FF Field::one() const {
  FF a(ext_deg(), 0);
  a[0] = 1;
  return a;
}

FF Field::from_int(long long c) const {
  c %= p;
  if (c < 0) c += p;
  FF a(ext_deg(), 0);
  a[0] = (int)c;
  return a;
}

FF Field::from_code(long long code) const {
  FF a(ext_deg(), 0);
  for (int i = 0; i < ext_deg(); ++i) {
    a[i] = (int)(code % p);
    code /= p;
  }
  return a;
}

long long Field::code(const FF& a) const {
  long long c = 0;
  for (int i = ext_deg() - 1; i >= 0; --i) c = c * p + a[i];
  return c;
}

bool Field::is_zero(const FF& a) const {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

bool Field::is_one(const FF& a) const {
  if (a.empty() || a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

FF Field::add(const FF& a, const FF& b) const {
  FF out(ext_deg());
  for (int i = 0; i < ext_deg(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

FF Field::sub(const FF& a, const FF& b) const {
  FF out(ext_deg());
  for (int i = 0; i < ext_deg(); ++i) out[i] = ((a[i] - b[i]) % p + p) % p;
  return out;
}

FF Field::neg(const FF& a) const {
  FF out(ext_deg());
  for (int i = 0; i < ext_deg(); ++i) out[i] = (p - a[i]) % p;
  return out;
}

FF Field::mul(const FF& a, const FF& b) const {
  auto prod = fp_mul(p, fp_trim(a), fp_trim(b));
  auto red = fp_mod(p, prod, fqn_mod);
  red.resize(ext_deg(), 0);
  return red;
}

FF Field::inv(const FF& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero field element");
  auto res = fp_invmod(p, fp_trim(a), fqn_mod);
  res.resize(ext_deg(), 0);
  return res;
}

FF Field::pow(FF a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FF acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

FF Field::pow_q(FF a, int i) const {
  for (int j = 0; j < i; ++j) a = pow(a, q_);
  return a;
}

FF Field::pow_p(FF a, int e) const {
  for (int j = 0; j < e; ++j) a = pow(a, p);
  return a;
}

bool Field::in_fq(const FF& a) const { return frob_q(a) == a; }

std::vector<FF> Field::all_elements() const {
  std::vector<FF> out;
  out.reserve((size_t)qn_);
  for (long long c = 0; c < qn_; ++c) out.push_back(from_code(c));
  return out;
}

std::vector<FF> Field::fq_elements() const {
  std::vector<FF> out;
  // span of 1, fq_gen, ..., fq_gen^{r-1} over F_p
  std::vector<FF> basis;
  FF g = one();
  for (int i = 0; i < r; ++i) {
    basis.push_back(g);
    g = mul(g, fq_gen);
  }
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    FF acc = zero();
    for (int i = 0; i < r; ++i) {
      int digit = (int)(c % p);
      c /= p;
      if (digit != 0) {
        FF term = basis[i];
        FF scaled = zero();
        for (int rep = 0; rep < digit; ++rep) scaled = add(scaled, term);
        acc = add(acc, scaled);
      }
    }
    out.push_back(acc);
  }
  std::sort(out.begin(), out.end(),
            [this](const FF& a, const FF& b) { return code(a) < code(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if ((long long)out.size() != q_)
    throw std::runtime_error("subfield enumeration produced wrong cardinality");
  return out;
}

std::string Field::wire(const FF& a) const {
  std::string s;
  s.reserve(a.size());
  for (int v : a) s.push_back(char('0' + v));
  return s;
}

FF Field::parse_wire(const std::string& s) const {
  if (s.empty() || (int)s.size() > ext_deg())
    throw std::invalid_argument("bad field element digits: '" + s + "'");
  FF a(ext_deg(), 0);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] >= '0' + p)
      throw std::invalid_argument("digit out of range for characteristic " + std::to_string(p));
    a[i] = s[i] - '0';
  }
  return a;
}

Field field_tower(int p, int r, int n) {
  if (!is_prime_int(p)) throw std::invalid_argument("p must be prime");
  if (r < 1 || n < 1) throw std::invalid_argument("extension degrees must be >= 1");
  Field F;
  F.p = p;
  F.r = r;
  F.n = n;
  F.q_ = 1;
  for (int i = 0; i < r; ++i) F.q_ *= p;
  F.qn_ = 1;
  for (int i = 0; i < r * n; ++i) F.qn_ *= p;
  F.fq_mod = fp_smallest_irreducible(p, r);
  F.fqn_mod = (n == 1) ? F.fq_mod : fp_smallest_irreducible(p, r * n);
  if (n == 1) {
    // identity embedding: the generator is the residue of x itself
    F.fq_gen = F.zero();
    if (r > 1) F.fq_gen[1] = 1;
  } else {
    // smallest root of fq_mod inside F_{q^n}
    bool found = false;
    for (long long c = 0; c < F.qn_ && !found; ++c) {
      FF cand = F.from_code(c);
      FF acc = F.zero();
      FF powv = F.one();
      for (size_t i = 0; i < F.fq_mod.size(); ++i) {
        FF term = F.zero();
        for (int rep = 0; rep < F.fq_mod[i]; ++rep) term = F.add(term, powv);
        acc = F.add(acc, term);
        powv = F.mul(powv, cand);
      }
      if (F.is_zero(acc)) {
        F.fq_gen = cand;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("no embedding root found (internal error)");
  }
  return F;
}

}  // namespace carlitz
