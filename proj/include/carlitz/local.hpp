#pragma once

#include <optional>

#include "carlitz/carlitz.hpp"
#include "carlitz/hull.hpp"

namespace carlitz {

// place of K = F_{q^n}(T): monic irreducible pi, or the infinite place with
// uniformizer 1/T
struct Place {
  bool infinite = false;
  PolyT pi;
  int degree() const { return infinite ? 1 : pi.deg(); }
};

bool place_eq(const Place& a, const Place& b);
bool place_less(const Field& F, const Place& a, const Place& b);
std::string place_wire(const Field& F, const Place& p);
Place place_parse(const Field& F, const std::string& s);

// all finite places of degree <= max_degree in canonical order, infinite last
std::vector<Place> enumerate_places(const Field& F, int max_degree, bool include_infinite);

// pi^{-shift} * (mantissa + O(pi^prec)); mantissa reduced mod pi^prec.
// At the infinite place everything is written in the variable U = 1/T.
struct LocalElem {
  Place place;
  int shift = 0;
  PolyT mantissa;
  int prec = 0;
};

enum class Obstruction { None, NonIntegralSlope, ResidueObstruction, LiftObstruction };

// equation data after the shift x = pi^{-B} z and clearing by pi^s:
// sum gamma[e] z^{p^e} = mprime with integral coefficients
struct ScaledEq {
  std::vector<RatFn> gamma;  // coefficient of z^{p^e}
  RatFn mprime;
  PolyT pi;
  int shift_b = 0;   // B
  int clear_s = 0;   // s
  int eprime = 0;    // valuation of gamma[0]
  int modulus_n = 0; // decision modulus exponent 2*eprime + 1
};

enum class LocalStatus { Solvable, Unsolvable, Inconclusive };

struct LocalVerdict {
  LocalStatus status = LocalStatus::Inconclusive;
  Obstruction obstruction = Obstruction::None;
  std::optional<LocalElem> witness;
  int certified_precision = 0;
  std::optional<ScaledEq> scaled;  // present for every decided nonzero case
};

// lower convex hull of {(q^i, v(c_i))} plus (0, v(m)) when m != 0
std::vector<HullSegment> newton_polygon(const Field& F, const AdditivePoly& a,
                                        const RatFn& m, const Place& place);

// all residue-field roots of C_a(x) = mbar; residues represented as PolyT
// reduced mod pi (in U for the infinite place)
std::vector<PolyT> solve_residue(const Field& F, const PolyT& a, const PolyT& mbar,
                                 const Place& place);

// Newton iteration on the scaled integral equation; z0 must satisfy
// v(g(z0) - mprime) >= 2*eprime + 1. Returns the mantissa mod pi^target.
std::optional<PolyT> lift_hensel(const Field& F, const ScaledEq& eq, PolyT z0, int target);

// complete decision procedure for C_a(x) = m in the completion K_place.
// precision_cap = 0 selects the default 4 * (2e' + 1).
LocalVerdict solve_local(const Field& F, const PolyT& a, const RatFn& m,
                         const Place& place, int precision_cap);

// evaluate C_a at a local witness and return v(C_a(x) - m) truncated at cap
int local_residual_valuation(const Field& F, const PolyT& a, const RatFn& m,
                             const LocalElem& x, int cap);

}  // namespace carlitz
