#include "carlitz/galois.hpp"

#include <algorithm>

#include "carlitz/fplin.hpp"

namespace carlitz {

bool gp_eq(const GaloisPair& x, const GaloisPair& y) {
  return pt_eq(x.b, y.b) && pt_eq(x.u, y.u);
}

GaloisPair gp_compose(const Field& F, const PolyT& abar, const GaloisPair& x,
                      const GaloisPair& y) {
  GaloisPair out;
  out.b = pt_divmod(F, pt_mul(F, x.b, y.b), abar).second;
  out.u = pt_divmod(F, pt_add(F, pt_mul(F, x.b, y.u), x.u), abar).second;
  return out;
}

namespace {

std::vector<PolyT> residues_mod(const Field& F, int deg) {
  std::vector<PolyT> out = {PolyT{}};
  auto elems = F.fq_elements();
  for (int d = 0; d < deg; ++d) {
    std::vector<PolyT> next;
    for (const auto& pdone : out)
      for (const auto& e : elems) {
        PolyT q = pdone;
        q.c.resize((size_t)d + 1, F.zero());
        q.c[(size_t)d] = e;
        next.push_back(pt_trim(std::move(q)));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [&F](const PolyT& x, const PolyT& y) { return pt_less(F, x, y); });
  return out;
}

// image of a level-lambda value under lambda -> lam_img, result at out_lvl
TVal transport(const Tower& tw, const TVal& x, int lambda_level, const TVal& lam_img,
               int out_lvl) {
  if (lambda_level == 0) return tv_lift(tw, x, out_lvl);
  TVal acc = tv_zero(out_lvl);
  TVal pw = tv_one(tw, out_lvl);
  TVal xx = tv_trim(tv_lift(tw, x, lambda_level));
  if (xx.lvl < lambda_level) xx = tv_lift(tw, xx, lambda_level);
  for (size_t i = 0; i < xx.c.size(); ++i) {
    acc = tv_add(tw, acc, tv_mul(tw, tv_lift(tw, xx.c[i], out_lvl), pw));
    pw = tv_mul(tw, pw, lam_img);
  }
  return acc;
}

}  // namespace

std::vector<GaloisPair> galois_image(const Field& F, const SplittingData& sd) {
  const Tower& tw = sd.tower;
  int d = sd.abar.deg();
  long long residues = 1;
  for (int i = 0; i < d; ++i) {
    residues *= F.q();
    if (residues > 64) throw std::runtime_error("residue enumeration cap exceeded");
  }
  int lvl = sd.h_level;
  TVal lam = tv_lift(tw, sd.lambda, lvl);
  TVal h = tv_lift(tw, sd.h, lvl);
  auto all = residues_mod(F, d);

  std::vector<GaloisPair> sigma;
  for (const auto& b : all) {
    if (xgcd(F, b, sd.abar).g.deg() != 0) continue;
    TVal lam_img = carlitz_eval_tower(tw, lvl, b, lam);
    // sigma(lambda) must satisfy lambda's defining polynomial over K
    if (sd.lambda_level == 0) {
      if (!tv_eq(tw, lam_img, lam)) continue;
    } else {
      const TPoly& def = tw.defs[0];
      TVal acc = tv_zero(lvl);
      TVal pw = tv_one(tw, lvl);
      for (const auto& cc : def) {
        acc = tv_add(tw, acc, tv_mul(tw, tv_lift(tw, cc, lvl), pw));
        pw = tv_mul(tw, pw, lam_img);
      }
      if (!tv_is_zero(tv_trim(acc))) continue;
    }
    for (const auto& u : all) {
      TVal h_img = tv_add(tw, u.zero() ? tv_zero(lvl) : carlitz_eval_tower(tw, lvl, u, lam), h);
      bool ok;
      if (sd.h_level == sd.lambda_level) {
        // sigma(h) is already forced by sigma on K(lambda)
        ok = tv_eq(tw, transport(tw, sd.h, sd.lambda_level, lam_img, lvl), h_img);
      } else {
        // transported defining polynomial of h must vanish at sigma(h)
        const TPoly& def = tw.defs[(size_t)sd.h_level - 1];
        TVal acc = tv_zero(lvl);
        TVal pw = tv_one(tw, lvl);
        for (const auto& cc : def) {
          acc = tv_add(tw, acc, tv_mul(tw, transport(tw, cc, sd.lambda_level, lam_img, lvl), pw));
          pw = tv_mul(tw, pw, h_img);
        }
        ok = tv_is_zero(tv_trim(acc));
      }
      if (ok) sigma.push_back({b, u});
    }
  }
  return sigma;
}

bool sigma_cap_M_trivial(const Field& F, const std::vector<GaloisPair>& sigma) {
  PolyT one = pt_one(F);
  for (const auto& gp : sigma)
    if (pt_eq(gp.b, one) && !gp.u.zero()) return false;
  return true;
}

namespace {

// coordinates of an F_q element in the power basis of fq_gen over F_p
std::vector<int> fq_coords(const Field& F, const FF& a) {
  int dim = F.ext_deg();
  std::vector<std::vector<int>> rows((size_t)dim, std::vector<int>((size_t)F.r, 0));
  FF g = F.one();
  for (int j = 0; j < F.r; ++j) {
    for (int i = 0; i < dim; ++i) rows[(size_t)i][(size_t)j] = g[(size_t)i];
    g = F.mul(g, F.fq_gen);
  }
  auto sol = fplin_solve(F.p, rows, a, F.r);
  if (!sol.solvable) throw std::invalid_argument("element lies outside F_q");
  return sol.x;
}

FF fq_rebuild(const Field& F, const std::vector<int>& coords) {
  FF acc = F.zero();
  FF g = F.one();
  for (int j = 0; j < F.r; ++j) {
    FF term = F.zero();
    for (int rep = 0; rep < coords[(size_t)j]; ++rep) term = F.add(term, g);
    acc = F.add(acc, term);
    g = F.mul(g, F.fq_gen);
  }
  return acc;
}

}  // namespace

SplittingType frobenius_splitting(const Field& F, const PolyT& P, const PolyT& abar) {
  if (P.deg() < 1 || !pt_irreducible(F, P, true))
    throw std::invalid_argument("frobenius_splitting needs a monic irreducible over F_q");
  int d = P.deg();
  // residue field A/P as the degree-d extension of the same F_q
  Field Fres = field_tower(F.p, F.r, d);
  auto embed = [&](const FF& a) { return fq_rebuild(Fres, fq_coords(F, a)); };
  // theta = a root of P in the residue field
  FF theta;
  bool found = false;
  for (const auto& cand : Fres.all_elements()) {
    FF acc = Fres.zero();
    for (size_t i = P.c.size(); i-- > 0;)
      acc = Fres.add(Fres.mul(acc, cand), embed(P.c[i]));
    if (Fres.is_zero(acc)) {
      theta = cand;
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("irreducible has no root in its residue field");

  XPoly phi = cyclotomic_poly(F, abar);
  PolyT reduced;
  for (const auto& coef : phi.c) {
    FF acc = Fres.zero();
    for (size_t i = coef.c.size(); i-- > 0;)
      acc = Fres.add(Fres.mul(acc, theta), embed(coef.c[i]));
    reduced.c.push_back(acc);
  }
  reduced = pt_trim(std::move(reduced));
  if (reduced.deg() < 1)
    throw std::runtime_error("torsion polynomial degenerates over the residue field");

  Factorization fac = factor_ddf(Fres, reduced);
  SplittingType st;
  st.place = P;
  st.f = fac.factors.front().first.deg();
  st.g = (int)fac.factors.size();
  for (const auto& [fp, fe] : fac.factors)
    if (fp.deg() != st.f)
      throw std::runtime_error("non-uniform splitting in the torsion extension");
  long long phi_deg = euler_phi(F, abar, true);
  if (phi_deg % ((long long)st.f * st.g) != 0)
    throw std::runtime_error("splitting data does not divide the extension degree");
  st.e = (int)(phi_deg / ((long long)st.f * st.g));
  return st;
}

DensityEstimate density_estimate(const Field& F, const PolyT& abar, int max_degree) {
  if (abar.deg() < 1) throw std::invalid_argument("density_estimate needs deg >= 1");
  DensityEstimate out;
  std::vector<std::pair<PolyT, long long>>& bins = out.counts;
  for (const auto& cls : residues_mod(F, abar.deg()))
    if (xgcd(F, cls, abar).g.deg() == 0 && !cls.zero()) bins.emplace_back(cls, 0);
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& P : monic_irreducibles(F, d, true)) {
      PolyT res = pt_divmod(F, P, abar).second;
      if (xgcd(F, res, abar).g.deg() != 0) continue;  // P divides abar
      for (auto& [cls, cnt] : bins)
        if (pt_eq(cls, res)) {
          ++cnt;
          ++out.total;
          break;
        }
    }
  if (out.total == 0) throw std::runtime_error("density sample is empty");
  return out;
}

}  // namespace carlitz
