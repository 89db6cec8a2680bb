#pragma once

#include <cstdint>

#include "carlitz/galois.hpp"
#include "carlitz/rng.hpp"

namespace carlitz {

enum class MSource { Explicit, Forward, RandomRational };
enum class Scenario { Free, A, B };

struct ExperimentConfig {
  int p = 2, r = 1, n = 1;
  std::string a_wire;
  MSource m_source = MSource::Forward;
  std::string m_wire;        // used when m_source == Explicit
  int max_place_degree = 3;  // D; raised to deg abar when smaller
  bool include_infinite = false;
  int trials = 1;
  uint64_t seed = 0;
  int precision_cap = 0;
  int degree_cap = 40;
  int sample_degree = 3;  // degree bound for sampled numerators/denominators
  Scenario scenario = Scenario::Free;
};

enum class TrialClass { Consistent, Vacuous, CounterexampleCandidate, Untested };

struct TrialRecord {
  int index = 0;
  RatFn m;
  std::vector<std::pair<Place, LocalVerdict>> locals;
  std::vector<RatFn> solutions;
  bool locally_solvable_everywhere = false;
  bool globally_solvable = false;
  TrialClass cls = TrialClass::Untested;
  int deg_k_lambda = 0;
  int deg_l = 0;
  long long sigma_size = 0;
  bool sigma_m_trivial = false;
  bool reconstruction_checked = false;  // scenario B only
  bool reconstruction_agrees = false;
  std::string note;
};

struct GWReport {
  ExperimentConfig config;
  PolyT a;
  PolyT abar;
  std::vector<Place> places;
  std::vector<TrialRecord> trials;
  long long consistent = 0, vacuous = 0, candidates = 0, untested = 0;
  std::string density_threshold;  // 1 - 1/(phi(abar) q^{deg abar}), exact
};

// runs the local-global comparison for each trial and classifies it
GWReport run_gw_experiment(const ExperimentConfig& cfg);

std::string report_json(const Field& F, const GWReport& rep);
std::string report_csv(const Field& F, const GWReport& rep);
void emit_report(const Field& F, const GWReport& rep, const std::string& format,
                 const std::string& path);

const char* trial_class_name(TrialClass c);

}  // namespace carlitz
