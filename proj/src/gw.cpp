#include "carlitz/gw.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

namespace carlitz {

namespace {

PolyT sample_poly(const Field& F, SplitMix64& rng, int max_deg) {
  int deg = (int)rng.below((uint64_t)max_deg + 1);
  PolyT out;
  for (int i = 0; i <= deg; ++i) out.c.push_back(F.from_code((long long)rng.below((uint64_t)F.qn())));
  return pt_trim(std::move(out));
}

PolyT sample_monic(const Field& F, SplitMix64& rng, int max_deg) {
  int deg = (int)rng.below((uint64_t)max_deg + 1);
  PolyT out;
  for (int i = 0; i < deg; ++i) out.c.push_back(F.from_code((long long)rng.below((uint64_t)F.qn())));
  out.c.push_back(F.one());
  return out;
}

RatFn sample_rational(const Field& F, SplitMix64& rng, int max_deg) {
  PolyT num = sample_poly(F, rng, max_deg);
  PolyT den = sample_monic(F, rng, max_deg);
  return rf_make(F, num, den);
}

std::vector<Place> place_set(const Field& F, const PolyT& abar, int max_degree,
                             bool include_infinite) {
  auto places = enumerate_places(F, max_degree, include_infinite);
  for (const auto& [P, e] : factor(F, abar, false).factors)
    if (P.deg() > max_degree) places.push_back(Place{false, P});
  std::sort(places.begin(), places.end(),
            [&F](const Place& x, const Place& y) { return place_less(F, x, y); });
  places.erase(std::unique(places.begin(), places.end(), place_eq), places.end());
  return places;
}

const char* status_name(LocalStatus s) {
  switch (s) {
    case LocalStatus::Solvable: return "solvable";
    case LocalStatus::Unsolvable: return "unsolvable";
    default: return "inconclusive";
  }
}

const char* obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::NonIntegralSlope: return "non-integral-slope";
    case Obstruction::ResidueObstruction: return "residue";
    case Obstruction::LiftObstruction: return "lift";
    default: return "none";
  }
}

}  // namespace

const char* trial_class_name(TrialClass c) {
  switch (c) {
    case TrialClass::Consistent: return "consistent";
    case TrialClass::Vacuous: return "vacuous";
    case TrialClass::CounterexampleCandidate: return "counterexample-candidate";
    default: return "untested";
  }
}

GWReport run_gw_experiment(const ExperimentConfig& cfg) {
  Field F = field_tower(cfg.p, cfg.r, cfg.n);
  GWReport rep;
  rep.config = cfg;
  rep.a = pt_parse(F, cfg.a_wire);
  if (rep.a.zero()) throw std::invalid_argument("experiment needs a != 0");
  rep.abar = monic_normalize(F, rep.a).second;
  if (rep.abar.deg() < 1) throw std::invalid_argument("experiment needs deg a >= 1");
  for (const auto& c : rep.abar.c)
    if (!F.in_fq(c)) throw std::invalid_argument("a must have coefficients in F_q");
  rep.config.max_place_degree = std::max(cfg.max_place_degree, rep.abar.deg());
  int D = rep.config.max_place_degree;

  if (cfg.scenario == Scenario::A && !torsion_points(F, rep.abar).has_generator)
    throw std::invalid_argument("scenario A requires a rational torsion generator");

  long long phi = euler_phi(F, rep.abar, true);
  long long qd = 1;
  for (int i = 0; i < rep.abar.deg(); ++i) qd *= F.q();
  rep.density_threshold = std::to_string(phi * qd - 1) + "/" + std::to_string(phi * qd);

  rep.places = place_set(F, rep.abar, D, cfg.include_infinite);

  SplitMix64 master(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng(master.next());
    TrialRecord rec;
    rec.index = t;
    switch (cfg.m_source) {
      case MSource::Explicit: rec.m = rf_parse(F, cfg.m_wire); break;
      case MSource::Forward:
        rec.m = carlitz_eval(F, rep.a, sample_rational(F, rng, cfg.sample_degree));
        break;
      case MSource::RandomRational: rec.m = sample_rational(F, rng, cfg.sample_degree); break;
    }

    bool inconclusive = false, all_solvable = true;
    for (const auto& pl : rep.places) {
      LocalVerdict v = solve_local(F, rep.a, rec.m, pl, cfg.precision_cap);
      if (v.status == LocalStatus::Inconclusive) inconclusive = true;
      if (v.status != LocalStatus::Solvable) all_solvable = false;
      rec.locals.emplace_back(pl, std::move(v));
    }
    rec.locally_solvable_everywhere = all_solvable && !inconclusive;
    rec.solutions = solve_global(F, rep.a, rec.m, cfg.degree_cap);
    rec.globally_solvable = !rec.solutions.empty();

    if (inconclusive) {
      rec.cls = TrialClass::Untested;
    } else if (!all_solvable) {
      rec.cls = TrialClass::Vacuous;
      if (rec.globally_solvable)
        rec.note = "global solution despite a local obstruction";
    } else if (rec.globally_solvable) {
      rec.cls = TrialClass::Consistent;
    } else {
      // re-verify at D+2 before reporting a candidate
      rec.cls = TrialClass::CounterexampleCandidate;
      for (const auto& pl : place_set(F, rep.abar, D + 2, cfg.include_infinite)) {
        LocalVerdict v = solve_local(F, rep.a, rec.m, pl, cfg.precision_cap);
        if (v.status == LocalStatus::Inconclusive) {
          rec.cls = TrialClass::Untested;
          rec.note = "inconclusive during candidate recheck";
          break;
        }
        if (v.status == LocalStatus::Unsolvable) {
          rec.cls = TrialClass::Vacuous;
          rec.note = "obstruction found during recheck at degree " +
                     std::to_string(pl.degree());
          break;
        }
      }
    }

    try {
      SplittingData sd = build_splitting_tower(F, rep.a, rec.m, cfg.degree_cap);
      rec.deg_k_lambda = sd.tower.abs_degree(sd.lambda_level);
      rec.deg_l = sd.tower.abs_degree(sd.h_level);
      if (qd <= 64) {
        auto sigma = galois_image(F, sd);
        rec.sigma_size = (long long)sigma.size();
        rec.sigma_m_trivial = sigma_cap_M_trivial(F, sigma);
      }
      if (cfg.scenario == Scenario::B) {
        rec.reconstruction_checked = true;
        Reconstruction rc = reconstruct_global_solution(F, sd, cfg.degree_cap);
        if (rc.ok) {
          bool member = false;
          for (const auto& s : rec.solutions)
            if (rf_eq(s, rc.x_k)) member = true;
          rec.reconstruction_agrees = member;
        } else {
          rec.reconstruction_agrees = !rec.globally_solvable;
        }
        if (!rec.reconstruction_agrees && rec.note.empty())
          rec.note = "reconstruction disagrees with the direct solver";
      }
    } catch (const std::exception& e) {
      if (rec.note.empty()) rec.note = std::string("tower: ") + e.what();
    }

    switch (rec.cls) {
      case TrialClass::Consistent: ++rep.consistent; break;
      case TrialClass::Vacuous: ++rep.vacuous; break;
      case TrialClass::CounterexampleCandidate: ++rep.candidates; break;
      case TrialClass::Untested: ++rep.untested; break;
    }
    rep.trials.push_back(std::move(rec));
  }
  return rep;
}

namespace {

nlohmann::json verdict_json(const Field& F, const LocalVerdict& v) {
  nlohmann::json j;
  j["status"] = status_name(v.status);
  j["obstruction"] = obstruction_name(v.obstruction);
  j["certified_precision"] = v.certified_precision;
  if (v.witness) {
    j["witness"]["shift"] = v.witness->shift;
    j["witness"]["mantissa"] = pt_wire(F, v.witness->mantissa);
    j["witness"]["precision"] = v.witness->prec;
  }
  return j;
}

}  // namespace

std::string report_json(const Field& F, const GWReport& rep) {
  nlohmann::json j;
  j["config"]["p"] = rep.config.p;
  j["config"]["r"] = rep.config.r;
  j["config"]["n"] = rep.config.n;
  j["config"]["a"] = rep.config.a_wire;
  j["config"]["m_source"] = rep.config.m_source == MSource::Explicit  ? "explicit"
                            : rep.config.m_source == MSource::Forward ? "forward"
                                                                      : "random-rational";
  if (rep.config.m_source == MSource::Explicit) j["config"]["m"] = rep.config.m_wire;
  j["config"]["max_place_degree"] = rep.config.max_place_degree;
  j["config"]["include_infinity"] = rep.config.include_infinite;
  j["config"]["trials"] = rep.config.trials;
  j["config"]["seed"] = rep.config.seed;
  j["config"]["precision_cap"] = rep.config.precision_cap;
  j["config"]["degree_cap"] = rep.config.degree_cap;
  j["config"]["sample_degree"] = rep.config.sample_degree;
  j["config"]["scenario"] = rep.config.scenario == Scenario::A   ? "A"
                            : rep.config.scenario == Scenario::B ? "B"
                                                                 : "free";
  j["a"] = pt_wire(F, rep.a);
  j["abar"] = pt_wire(F, rep.abar);
  j["places"] = nlohmann::json::array();
  for (const auto& pl : rep.places) j["places"].push_back(place_wire(F, pl));

  j["trials"] = nlohmann::json::array();
  std::vector<int> candidate_indices;
  for (const auto& rec : rep.trials) {
    nlohmann::json t;
    t["index"] = rec.index;
    t["m"] = rf_wire(F, rec.m);
    t["class"] = trial_class_name(rec.cls);
    t["locally_solvable_everywhere"] = rec.locally_solvable_everywhere;
    t["globally_solvable"] = rec.globally_solvable;
    t["solutions"] = nlohmann::json::array();
    for (const auto& s : rec.solutions) t["solutions"].push_back(rf_wire(F, s));
    t["locals"] = nlohmann::json::array();
    for (const auto& [pl, v] : rec.locals) {
      nlohmann::json lj = verdict_json(F, v);
      lj["place"] = place_wire(F, pl);
      t["locals"].push_back(lj);
    }
    t["deg_k_lambda"] = rec.deg_k_lambda;
    t["deg_l"] = rec.deg_l;
    t["sigma_size"] = rec.sigma_size;
    t["sigma_m_trivial"] = rec.sigma_m_trivial;
    if (rec.reconstruction_checked)
      t["reconstruction_agrees"] = rec.reconstruction_agrees;
    t["note"] = rec.note;
    j["trials"].push_back(t);
    if (rec.cls == TrialClass::CounterexampleCandidate) candidate_indices.push_back(rec.index);
  }
  j["summary"]["trials"] = (long long)rep.trials.size();
  j["summary"]["consistent"] = rep.consistent;
  j["summary"]["vacuous"] = rep.vacuous;
  j["summary"]["untested"] = rep.untested;
  j["summary"]["counterexample_candidates"] = candidate_indices;
  j["summary"]["locally_solvable_everywhere"] =
      std::count_if(rep.trials.begin(), rep.trials.end(),
                    [](const TrialRecord& r) { return r.locally_solvable_everywhere; });
  j["summary"]["globally_solvable"] =
      std::count_if(rep.trials.begin(), rep.trials.end(),
                    [](const TrialRecord& r) { return r.globally_solvable; });
  j["summary"]["density_threshold"] = rep.density_threshold;
  return j.dump(2) + "\n";
}

std::string report_csv(const Field& F, const GWReport& rep) {
  std::string out =
      "index,m,class,locally_solvable_everywhere,globally_solvable,"
      "solution_count,sigma_size,deg_k_lambda,deg_l,note\n";
  for (const auto& rec : rep.trials) {
    // the wire format itself uses commas, so text fields are quoted
    out += std::to_string(rec.index) + ",\"" + rf_wire(F, rec.m) + "\"," +
           trial_class_name(rec.cls) + "," +
           (rec.locally_solvable_everywhere ? "1" : "0") + "," +
           (rec.globally_solvable ? "1" : "0") + "," +
           std::to_string(rec.solutions.size()) + "," + std::to_string(rec.sigma_size) +
           "," + std::to_string(rec.deg_k_lambda) + "," + std::to_string(rec.deg_l) +
           ",\"" + rec.note + "\"\n";
  }
  return out;
}

void emit_report(const Field& F, const GWReport& rep, const std::string& format,
                 const std::string& path) {
  std::string body;
  if (format == "json")
    body = report_json(F, rep);
  else if (format == "csv")
    body = report_csv(F, rep);
  else
    throw std::invalid_argument("unknown report format: " + format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace carlitz
