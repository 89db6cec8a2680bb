#pragma once

#include "carlitz/local.hpp"
#include "carlitz/solver.hpp"

namespace carlitz {

// all roots of C_a(x) = m in K = F_{q^n}(T)
std::vector<RatFn> solve_global(const Field& F, const PolyT& a, const RatFn& m,
                                int degree_cap);

// true iff solutions is empty or a coset of the rational torsion of C_a
bool solution_coset_check(const Field& F, const std::vector<RatFn>& solutions,
                          const PolyT& a, int degree_cap);

// K <= K(lambda_a) <= L with distinguished lambda_a (generator of the
// torsion module) and h (root of C_a(x) = m scaled monic)
struct SplittingData {
  Tower tower;
  FF unit;            // a = unit * abar
  PolyT abar;
  RatFn mbar;         // m / unit; the tower splits C_abar(x) = mbar
  int lambda_level = 0;
  int h_level = 0;
  TVal lambda;
  TVal h;
};

SplittingData build_splitting_tower(const Field& F, const PolyT& a, const RatFn& m,
                                    int degree_cap);

struct SplittingReport {
  bool splits_over_k_lambda = false;  // C_a(x) - m splits into linear factors there
  bool l_equals_k_lambda = false;     // [L : K(lambda_a)] = 1
  long long root_count = 0;
  int deg_k_lambda = 0;  // [K(lambda_a) : K]
  int deg_l = 0;         // [L : K]
};

SplittingReport verify_splitting_theorem(const Field& F, const SplittingData& sd,
                                         int degree_cap);

struct Reconstruction {
  bool ok = false;
  RatFn x_k;
  PolyT epsilon;                 // CRT solution
  std::vector<PolyT> residues;   // b_i
  std::vector<PolyT> prime_powers;
  std::string obstruction;       // nonempty when a prime power blocks rationality
};

// Bezout/CRT reconstruction of a rational solution from the splitting tower
Reconstruction reconstruct_global_solution(const Field& F, const SplittingData& sd,
                                           int degree_cap);

}  // namespace carlitz
