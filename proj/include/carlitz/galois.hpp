#pragma once

#include "carlitz/global.hpp"

namespace carlitz {

// automorphism coordinates: sigma(lambda) = C_b(lambda), sigma(h) = C_u(lambda) + h
struct GaloisPair {
  PolyT b;  // unit residue mod abar, coefficients in F_q
  PolyT u;  // residue mod abar
};

bool gp_eq(const GaloisPair& x, const GaloisPair& y);
// (b1,u1) o (b2,u2) = (b1 b2, b1 u2 + u1), reduced mod abar
GaloisPair gp_compose(const Field& F, const PolyT& abar, const GaloisPair& x,
                      const GaloisPair& y);

// all pairs (b, u) that define a K-automorphism of the splitting tower
std::vector<GaloisPair> galois_image(const Field& F, const SplittingData& sd);

// true iff every pair with b = 1 has u = 0
bool sigma_cap_M_trivial(const Field& F, const std::vector<GaloisPair>& sigma);

// decomposition data of a finite prime P of F_q(T) in the torsion extension
struct SplittingType {
  int e = 0;  // ramification index
  int f = 0;  // residue degree
  int g = 0;  // number of primes above P
  PolyT place;
};

// derived from the factorization of the torsion polynomial over A/P
SplittingType frobenius_splitting(const Field& F, const PolyT& P, const PolyT& abar);

struct DensityEstimate {
  long long total = 0;
  // unit class mod abar (canonical reduced representative) -> count
  std::vector<std::pair<PolyT, long long>> counts;
};

// monic irreducibles of F_q[T] coprime to abar, degree <= max_degree, binned
// by residue class mod abar
DensityEstimate density_estimate(const Field& F, const PolyT& abar, int max_degree);

}  // namespace carlitz
