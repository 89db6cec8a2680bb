#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "carlitz/global.hpp"
#include "carlitz/rng.hpp"

using namespace carlitz;

namespace {

PolyT mkp(const Field& F, std::vector<int> cs) {
  PolyT p;
  for (int c : cs) p.c.push_back(F.from_int(c));
  return pt_trim(std::move(p));
}

PolyT rand_poly(const Field& F, SplitMix64& rng, int max_deg) {
  PolyT p;
  int d = (int)rng.below((uint64_t)max_deg + 1);
  for (int i = 0; i <= d; ++i) p.c.push_back(F.from_code((long long)rng.below((uint64_t)F.qn())));
  return pt_trim(std::move(p));
}

// brute-force criterion on the scaled integral equation: enumerate every
// residue z mod pi^N and test sum gamma_e z^{p^e} = m' mod pi^N
bool brute_solvable(const Field& F, const ScaledEq& eq) {
  PolyT mod = pt_one(F);
  for (int i = 0; i < eq.modulus_n; ++i) mod = pt_mul(F, mod, eq.pi);
  auto red = [&](const RatFn& v) { return rf_reduce(F, v, mod); };
  PolyT mprime = red(eq.mprime);
  long long total = 1;
  for (int i = 0; i < mod.deg(); ++i) total *= F.qn();
  REQUIRE(total <= (1 << 22));
  for (long long code = 0; code < total; ++code) {
    PolyT z;
    long long c = code;
    for (int i = 0; i < mod.deg(); ++i) {
      z.c.push_back(F.from_code(c % F.qn()));
      c /= F.qn();
    }
    z = pt_trim(std::move(z));
    PolyT acc;
    PolyT zp = z;
    for (size_t e = 0; e < eq.gamma.size(); ++e) {
      if (e > 0) {
        PolyT pw = pt_one(F);
        for (int k = 0; k < F.p; ++k) pw = pt_divmod(F, pt_mul(F, pw, zp), mod).second;
        zp = pw;  // now z^{p^e} mod pi^N
      }
      if (!rf_is_zero(eq.gamma[e]))
        acc = pt_divmod(F, pt_add(F, acc, pt_mul(F, red(eq.gamma[e]), zp)), mod).second;
    }
    if (pt_eq(acc, mprime)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("place enumeration") {
  Field F = field_tower(2, 1, 1);
  auto pls = enumerate_places(F, 2, true);
  REQUIRE(pls.size() == 4);
  CHECK(pt_eq(pls[0].pi, mkp(F, {0, 1})));
  CHECK(pt_eq(pls[1].pi, mkp(F, {1, 1})));
  CHECK(pt_eq(pls[2].pi, mkp(F, {1, 1, 1})));
  CHECK(pls[3].infinite);

  Field F3 = field_tower(3, 1, 1);
  auto pls3 = enumerate_places(F3, 1, false);
  CHECK(pls3.size() == 3);

  Field F4 = field_tower(2, 1, 2);
  auto pls4 = enumerate_places(F4, 1, false);
  CHECK(pls4.size() == 4);
  for (const auto& pl : pls4) CHECK(pl.pi.deg() == 1);
}

TEST_CASE("place counts match the necklace formula") {
  for (auto [p, r, n] : {std::tuple{2, 1, 1}, {2, 1, 2}, {3, 1, 1}}) {
    Field F = field_tower(p, r, n);
    auto pls = enumerate_places(F, 6, false);
    for (int d = 1; d <= 6; ++d) {
      long long count = 0;
      for (const auto& pl : pls)
        if (pl.degree() == d) ++count;
      CHECK(count == necklace_count(F.qn(), d));
    }
  }
}

TEST_CASE("place wire round trip") {
  Field F = field_tower(2, 1, 1);
  for (const auto& pl : enumerate_places(F, 3, true)) {
    Place back = place_parse(F, place_wire(F, pl));
    CHECK(place_eq(pl, back));
  }
}

TEST_CASE("newton polygon examples") {
  Field F = field_tower(2, 1, 1);
  PolyT T = mkp(F, {0, 1});
  Place pT{false, T};

  // x^2 + Tx + T at T: single slope -1/2, length 2
  auto h1 = newton_polygon(F, carlitz_coeffs(F, T), rf_from(F, T), pT);
  REQUIRE(h1.size() == 1);
  CHECK(rat_eq(h1[0].slope, rat(-1, 2)));
  CHECK(h1[0].length == 2);

  // x^2 + Tx + T^3 at T: slopes -2 and -1
  auto h2 = newton_polygon(F, carlitz_coeffs(F, T), rf_from(F, mkp(F, {0, 0, 0, 1})), pT);
  REQUIRE(h2.size() == 2);
  CHECK(rat_eq(h2[0].slope, rat(-2, 1)));
  CHECK(h2[0].length == 1);
  CHECK(rat_eq(h2[1].slope, rat(-1, 1)));
  CHECK(h2[1].length == 1);

  // m = 0: hull of (1,1),(2,0) only
  auto h3 = newton_polygon(F, carlitz_coeffs(F, T), rf_zero(F), pT);
  REQUIRE(h3.size() == 1);
  CHECK(rat_eq(h3[0].slope, rat(-1, 1)));
}

TEST_CASE("residue solving examples") {
  Field F = field_tower(2, 1, 1);
  PolyT T = mkp(F, {0, 1});
  Place pT{false, T}, pT1{false, mkp(F, {1, 1})};

  CHECK(solve_residue(F, T, pt_one(F), pT1).empty());
  CHECK(solve_residue(F, T, PolyT{}, pT1).size() == 2);
  auto r = solve_residue(F, T, pt_one(F), pT);
  REQUIRE(r.size() == 1);
  CHECK(pt_eq(r[0], pt_one(F)));
  // kernel always contains zero
  auto k = solve_residue(F, mkp(F, {0, 1, 1}), PolyT{}, pT);
  bool has_zero = false;
  for (const auto& z : k)
    if (z.zero()) has_zero = true;
  CHECK(has_zero);
}

TEST_CASE("hensel lifting through solve_local witnesses") {
  Field F = field_tower(2, 1, 1);
  PolyT T = mkp(F, {0, 1});
  Place pT{false, T}, pT1{false, mkp(F, {1, 1})};

  // exact root 1 of x^2 + Tx + (T+1) at place T
  LocalVerdict v1 = solve_local(F, T, rf_from(F, mkp(F, {1, 1})), pT, 0);
  REQUIRE(v1.status == LocalStatus::Solvable);
  REQUIRE(v1.witness.has_value());
  CHECK(local_residual_valuation(F, T, rf_from(F, mkp(F, {1, 1})), *v1.witness, 64) >=
        v1.certified_precision);

  // global root T^2 of x^2 + Tx + (T^4 + T^3) reduces to 1 mod T+1
  RatFn m = rf_from(F, mkp(F, {0, 0, 0, 1, 1}));
  LocalVerdict v2 = solve_local(F, T, m, pT1, 0);
  REQUIRE(v2.status == LocalStatus::Solvable);
  REQUIRE(v2.witness.has_value());
  CHECK(v2.witness->shift <= 0);
  REQUIRE(v2.witness->prec >= 3);
  PolyT cube = pt_mul(F, pt_mul(F, pT1.pi, pT1.pi), pT1.pi);
  PolyT wit3 = pt_divmod(F, v2.witness->mantissa, cube).second;
  // shift is 0 here, so the mantissa reduces one of the two global roots
  // T^2 and T^2 + T mod (T+1)^3
  CHECK(v2.witness->shift == 0);
  bool matches_root = pt_eq(wit3, pt_divmod(F, mkp(F, {0, 0, 1}), cube).second) ||
                      pt_eq(wit3, pt_divmod(F, mkp(F, {0, 1, 1}), cube).second);
  CHECK(matches_root);

  // residual already zero: witness survives at any precision
  CHECK(local_residual_valuation(F, T, rf_from(F, mkp(F, {1, 1})), *v1.witness, 80) >= 64);
}

TEST_CASE("solve_local worked examples") {
  Field F = field_tower(2, 1, 1);
  PolyT T = mkp(F, {0, 1});
  Place pT{false, T}, pT1{false, mkp(F, {1, 1})};

  LocalVerdict v1 = solve_local(F, T, rf_from(F, T), pT, 0);
  CHECK(v1.status == LocalStatus::Unsolvable);
  CHECK(v1.obstruction == Obstruction::NonIntegralSlope);

  LocalVerdict v2 = solve_local(F, T, rf_from(F, mkp(F, {1, 1})), pT, 0);
  CHECK(v2.status == LocalStatus::Solvable);

  LocalVerdict v3 = solve_local(F, T, rf_from(F, pt_one(F)), pT1, 0);
  CHECK(v3.status == LocalStatus::Unsolvable);
  CHECK(v3.obstruction == Obstruction::ResidueObstruction);

  RatFn t3 = rf_from(F, mkp(F, {0, 0, 0, 1}));
  CHECK(solve_local(F, T, t3, pT, 0).status == LocalStatus::Solvable);
  CHECK(solve_local(F, T, t3, pT1, 0).status == LocalStatus::Unsolvable);
  // and the infinite place rejects it by a fractional slope
  Place inf{true, {}};
  LocalVerdict vi = solve_local(F, T, t3, inf, 0);
  CHECK(vi.status == LocalStatus::Unsolvable);
  CHECK(vi.obstruction == Obstruction::NonIntegralSlope);
}

TEST_CASE("oracle equivalence on a seeded sample") {
  Field F = field_tower(2, 1, 1);
  SplitMix64 rng(2024);
  std::vector<PolyT> as = {mkp(F, {0, 1}), mkp(F, {1, 1})};
  auto places = enumerate_places(F, 2, true);
  for (const auto& a : as)
    for (int i = 0; i < 12; ++i) {
      RatFn m = rf_make(F, rand_poly(F, rng, 3),
                        pt_add(F, rand_poly(F, rng, 2), mkp(F, {0, 0, 0, 1})));
      for (const auto& pl : places) {
        LocalVerdict v = solve_local(F, a, m, pl, 0);
        REQUIRE(v.status != LocalStatus::Inconclusive);
        if (rf_is_zero(m)) continue;
        if (v.obstruction == Obstruction::NonIntegralSlope) continue;  // certificate is the hull
        REQUIRE(v.scaled.has_value());
        CHECK((v.status == LocalStatus::Solvable) == brute_solvable(F, *v.scaled));
        if (v.status == LocalStatus::Solvable) {
          REQUIRE(v.witness.has_value());
          CHECK(local_residual_valuation(F, a, m, *v.witness, v.certified_precision + 8) >=
                v.certified_precision);
        }
      }
    }
}

TEST_CASE("global roots are locally visible everywhere") {
  Field F = field_tower(2, 1, 1);
  SplitMix64 rng(77);
  PolyT a = mkp(F, {0, 1, 1});
  auto places = enumerate_places(F, 2, true);
  for (int i = 0; i < 10; ++i) {
    RatFn x0 = rf_make(F, rand_poly(F, rng, 2), mkp(F, {(int)rng.below(2), 1}));
    RatFn m = carlitz_eval(F, a, x0);
    for (const auto& pl : places) {
      LocalVerdict v = solve_local(F, a, m, pl, 0);
      CHECK(v.status == LocalStatus::Solvable);
    }
  }
}
