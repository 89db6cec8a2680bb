#pragma once

#include "carlitz/ratfn.hpp"

namespace carlitz {

// F_q-linear polynomial sum c_i x^{q^i} with c_i in F_{q^n}[T]; equivalently
// the twisted-ring element sum c_i tau^i (tau a = a^q tau)
struct AdditivePoly {
  std::vector<PolyT> c;
  bool zero() const { return c.empty(); }
  int tau_deg() const { return (int)c.size() - 1; }
};

AdditivePoly ap_trim(AdditivePoly a);
AdditivePoly ap_add(const Field& F, const AdditivePoly& a, const AdditivePoly& b);
AdditivePoly ap_sub(const Field& F, const AdditivePoly& a, const AdditivePoly& b);
// operator composition a(b(x)); tau degrees add
AdditivePoly twisted_mul(const Field& F, const AdditivePoly& a, const AdditivePoly& b);
bool ap_eq(const AdditivePoly& a, const AdditivePoly& b);

// the Carlitz homomorphism a -> C_a (C_T = T + tau); a must have F_q coefficients
AdditivePoly carlitz_coeffs(const Field& F, const PolyT& a);

RatFn additive_eval(const Field& F, const AdditivePoly& L, const RatFn& x);
RatFn carlitz_eval(const Field& F, const PolyT& a, const RatFn& x);

// dense polynomial in x with F_{q^n}[T] coefficients, low x-degree first
struct XPoly {
  std::vector<PolyT> c;
  bool zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
};

XPoly xp_trim(XPoly a);
XPoly ap_dense(const Field& F, const AdditivePoly& a);
XPoly xp_add(const Field& F, const XPoly& a, const XPoly& b);
XPoly xp_sub(const Field& F, const XPoly& a, const XPoly& b);
XPoly xp_mul(const Field& F, const XPoly& a, const XPoly& b);
// exact division; divisor must be monic in x
XPoly xp_div_exact(const Field& F, const XPoly& a, const XPoly& b);
bool xp_eq(const XPoly& a, const XPoly& b);
RatFn xp_eval(const Field& F, const XPoly& f, const RatFn& x);

// strip the unit of a, returning (unit, monic part)
std::pair<FF, PolyT> monic_normalize(const Field& F, const PolyT& a);

// monic divisors of abar over F_q, sorted canonically
std::vector<PolyT> monic_divisors(const Field& F, const PolyT& abar);

// Carlitz cyclotomic polynomial Phi_abar (a normalized monic); deg = phi(abar)
XPoly cyclotomic_poly(const Field& F, const PolyT& a);

struct TorsionSet {
  std::vector<PolyT> elements;        // all K-rational a-torsion points (polynomials in T)
  bool full = false;                  // cardinality == q^{deg abar}
  bool has_generator = false;
  PolyT generator;                    // smallest root of Phi_abar in K, if any
};

// torsion of C_abar rational over K = F_{q^n}(T)
TorsionSet torsion_points(const Field& F, const PolyT& a);

// true iff Phi_abar(lam) = 0; requires C_abar(lam) = 0
bool is_generator(const Field& F, const RatFn& lam, const PolyT& a);

}  // namespace carlitz
