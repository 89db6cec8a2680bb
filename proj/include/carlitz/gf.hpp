#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace carlitz {

// Element of F_{q^n}, stored as coordinates over F_p with respect to the
// power basis of the defining modulus. Length is always Field::ext_deg().
using FF = std::vector<int>;

// The constant-field tower F_p <= F_q <= F_{q^n}. All FF values live in
// F_{q^n}; F_q is the span of the powers of fq_gen.
struct Field {
  int p = 2;
  int r = 1;  // q = p^r
  int n = 1;  // ground field constants are F_{q^n}
  std::vector<int> fq_mod;   // monic irreducible of degree r over F_p
  std::vector<int> fqn_mod;  // monic irreducible of degree r*n over F_p
  FF fq_gen;                 // image of the F_q generator inside F_{q^n}

  int q() const { return q_; }
  long long qn() const { return qn_; }
  int ext_deg() const { return r * n; }

  FF zero() const { return FF(ext_deg(), 0); }
  FF one() const;
  FF from_int(long long c) const;  // c mod p, as a prime-field constant
  FF from_code(long long code) const;
  long long code(const FF& a) const;

  bool is_zero(const FF& a) const;
  bool is_one(const FF& a) const;

  FF add(const FF& a, const FF& b) const;
  FF sub(const FF& a, const FF& b) const;
  FF neg(const FF& a) const;
  FF mul(const FF& a, const FF& b) const;
  FF inv(const FF& a) const;
  FF pow(FF a, long long e) const;
  FF frob_q(const FF& a) const { return pow(a, q_); }
  FF pow_q(FF a, int i) const;  // a^{q^i}
  FF pow_p(FF a, int e) const;  // a^{p^e}

  bool in_fq(const FF& a) const;  // a^q == a

  std::vector<FF> all_elements() const;  // ordered by code
  std::vector<FF> fq_elements() const;   // the subfield F_q, ordered by code

  std::string wire(const FF& a) const;  // base-p digits, low coordinate first
  FF parse_wire(const std::string& s) const;

  // set by field_tower
  int q_ = 2;
  long long qn_ = 2;
};

// Deterministic construction: each modulus is the lexicographically smallest
// monic irreducible of its degree (coefficient lists compared low degree
// first, digits as integers); the F_q generator embeds onto the smallest
// root of fq_mod inside F_{q^n}.
Field field_tower(int p, int r, int n);

bool is_prime_int(long long v);

}  // namespace carlitz
