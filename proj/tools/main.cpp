#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "carlitz/gw.hpp"
#include "json.hpp"

using namespace carlitz;
using nlohmann::json;

namespace {

struct Common {
  int p = 2, r = 1, n = 1;
  std::string a, m;
  int max_place_degree = 3;
  bool include_infinity = false;
  uint64_t seed = 0;
  int precision_cap = 0;
  int degree_cap = 40;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "characteristic");
  cmd->add_option("--r", c.r, "q = p^r");
  cmd->add_option("--n", c.n, "constants are F_{q^n}");
  cmd->add_option("--a", c.a, "Carlitz operator index, wire format");
  cmd->add_option("--m", c.m, "right-hand side / evaluation point, wire format");
  cmd->add_option("--max-place-degree", c.max_place_degree, "finite place degree bound");
  cmd->add_flag("--include-infinity", c.include_infinity, "also test the infinite place");
  cmd->add_option("--seed", c.seed, "experiment seed");
  cmd->add_option("--precision-cap", c.precision_cap, "local precision cap (0 = default)");
  cmd->add_option("--degree-cap", c.degree_cap, "global solution degree cap");
  cmd->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "output path (default stdout)");
}

void write_out(const Common& c, const std::string& body) {
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + c.out);
  f << body;
}

// flat key=value file mirroring the long flags (keys without the leading --);
// command-line values win over file values
void apply_config(CLI::App* cmd, const std::string& path, Common& c, std::string& place_s,
                  std::string& m_source, std::string& scenario, int& trials,
                  int& sample_degree, int& density_degree) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config file not readable: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) + " is not key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    std::string flag = "--" + key;
    if (cmd->get_option_no_throw(flag) && cmd->count(flag) > 0) continue;  // CLI wins
    if (key == "p") c.p = std::stoi(val);
    else if (key == "r") c.r = std::stoi(val);
    else if (key == "n") c.n = std::stoi(val);
    else if (key == "a") c.a = val;
    else if (key == "m") c.m = val;
    else if (key == "max-place-degree") c.max_place_degree = std::stoi(val);
    else if (key == "include-infinity") c.include_infinity = (val == "1" || val == "true");
    else if (key == "seed") c.seed = std::stoull(val);
    else if (key == "precision-cap") c.precision_cap = std::stoi(val);
    else if (key == "degree-cap") c.degree_cap = std::stoi(val);
    else if (key == "format") c.format = val;
    else if (key == "out") c.out = val;
    else if (key == "place") place_s = val;
    else if (key == "max-degree") density_degree = std::stoi(val);
    else if (key == "trials") trials = std::stoi(val);
    else if (key == "m-source") m_source = val;
    else if (key == "scenario") scenario = val;
    else if (key == "sample-degree") sample_degree = std::stoi(val);
    else throw std::runtime_error("unknown config key: " + key);
  }
}

json verdict_to_json(const Field& F, const Place& pl, const LocalVerdict& v) {
  json j;
  j["place"] = place_wire(F, pl);
  j["status"] = v.status == LocalStatus::Solvable     ? "solvable"
                : v.status == LocalStatus::Unsolvable ? "unsolvable"
                                                      : "inconclusive";
  switch (v.obstruction) {
    case Obstruction::NonIntegralSlope: j["obstruction"] = "non-integral-slope"; break;
    case Obstruction::ResidueObstruction: j["obstruction"] = "residue"; break;
    case Obstruction::LiftObstruction: j["obstruction"] = "lift"; break;
    default: j["obstruction"] = "none";
  }
  j["certified_precision"] = v.certified_precision;
  if (v.witness) {
    j["witness"]["shift"] = v.witness->shift;
    j["witness"]["mantissa"] = pt_wire(F, v.witness->mantissa);
    j["witness"]["precision"] = v.witness->prec;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carlitz-module local-global arithmetic over F_{q^n}(T)"};
  app.require_subcommand(1);

  Common c;
  std::string config_path;
  std::string place_s = "inf";
  std::string m_source = "forward", scenario = "free";
  int trials = 1, sample_degree = 3, density_degree = 8;

  auto* cmd_eval = app.add_subcommand("eval", "evaluate C_a at a point");
  auto* cmd_cyc = app.add_subcommand("cyclotomic", "emit the torsion generator polynomial");
  auto* cmd_tor = app.add_subcommand("torsion", "enumerate rational torsion of C_a");
  auto* cmd_loc = app.add_subcommand("solve-local", "decide C_a(x) = m in one completion");
  auto* cmd_glob = app.add_subcommand("solve-global", "all rational solutions of C_a(x) = m");
  auto* cmd_split = app.add_subcommand("splitting", "build the splitting tower and report degrees");
  auto* cmd_gal = app.add_subcommand("galois", "automorphism pairs of the splitting tower");
  auto* cmd_den = app.add_subcommand("density", "residue-class statistics of irreducibles mod a");
  auto* cmd_gw = app.add_subcommand("gw-verify", "run the local-global experiment");

  for (auto* cmd : {cmd_eval, cmd_cyc, cmd_tor, cmd_loc, cmd_glob, cmd_split, cmd_gal,
                    cmd_den, cmd_gw}) {
    add_common(cmd, c);
    cmd->add_option("--config", config_path, "flat key=value config file");
  }
  cmd_loc->add_option("--place", place_s, "monic irreducible in wire format, or 'inf'");
  cmd_den->add_option("--max-degree", density_degree, "prime degree bound for the sieve");
  cmd_gw->add_option("--trials", trials, "number of trials");
  cmd_gw->add_option("--m-source", m_source, "explicit | forward | random-rational")
      ->check(CLI::IsMember({"explicit", "forward", "random-rational"}));
  cmd_gw->add_option("--scenario", scenario, "free | A | B")
      ->check(CLI::IsMember({"free", "A", "B"}));
  cmd_gw->add_option("--sample-degree", sample_degree, "degree bound for sampled m");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty())
      apply_config(app.get_subcommands().front(), config_path, c, place_s, m_source,
                   scenario, trials, sample_degree, density_degree);
    Field F = field_tower(c.p, c.r, c.n);
    auto need_a = [&]() {
      if (c.a.empty()) throw std::invalid_argument("--a is required");
      return pt_parse(F, c.a);
    };
    auto need_m = [&]() {
      if (c.m.empty()) throw std::invalid_argument("--m is required");
      return rf_parse(F, c.m);
    };

    if (cmd_eval->parsed()) {
      json j;
      j["value"] = rf_wire(F, carlitz_eval(F, need_a(), need_m()));
      write_out(c, j.dump(2) + "\n");
    } else if (cmd_cyc->parsed()) {
      PolyT abar = monic_normalize(F, need_a()).second;
      XPoly phi = cyclotomic_poly(F, abar);
      json j;
      j["a"] = pt_wire(F, abar);
      j["degree"] = phi.deg();
      j["euler_phi"] = euler_phi(F, abar, true);
      j["coefficients"] = json::array();
      for (const auto& cc : phi.c) j["coefficients"].push_back(pt_wire(F, cc));
      write_out(c, j.dump(2) + "\n");
    } else if (cmd_tor->parsed()) {
      PolyT abar = monic_normalize(F, need_a()).second;
      TorsionSet ts = torsion_points(F, abar);
      json j;
      j["a"] = pt_wire(F, abar);
      j["full"] = ts.full;
      j["has_generator"] = ts.has_generator;
      if (ts.has_generator) j["generator"] = pt_wire(F, ts.generator);
      j["points"] = json::array();
      for (const auto& pt : ts.elements) j["points"].push_back(pt_wire(F, pt));
      write_out(c, j.dump(2) + "\n");
    } else if (cmd_loc->parsed()) {
      Place pl = place_parse(F, place_s);
      LocalVerdict v = solve_local(F, need_a(), need_m(), pl, c.precision_cap);
      write_out(c, verdict_to_json(F, pl, v).dump(2) + "\n");
    } else if (cmd_glob->parsed()) {
      auto sols = solve_global(F, need_a(), need_m(), c.degree_cap);
      json j;
      j["solvable"] = !sols.empty();
      j["solutions"] = json::array();
      for (const auto& s : sols) j["solutions"].push_back(rf_wire(F, s));
      write_out(c, j.dump(2) + "\n");
    } else if (cmd_split->parsed()) {
      SplittingData sd = build_splitting_tower(F, need_a(), need_m(), c.degree_cap);
      SplittingReport rp = verify_splitting_theorem(F, sd, c.degree_cap);
      json j;
      j["deg_k_lambda"] = rp.deg_k_lambda;
      j["deg_l"] = rp.deg_l;
      j["root_count_over_k_lambda"] = rp.root_count;
      j["splits_over_k_lambda"] = rp.splits_over_k_lambda;
      j["l_equals_k_lambda"] = rp.l_equals_k_lambda;
      write_out(c, j.dump(2) + "\n");
    } else if (cmd_gal->parsed()) {
      SplittingData sd = build_splitting_tower(F, need_a(), need_m(), c.degree_cap);
      auto sigma = galois_image(F, sd);
      json j;
      j["size"] = sigma.size();
      j["sigma_cap_m_trivial"] = sigma_cap_M_trivial(F, sigma);
      j["pairs"] = json::array();
      for (const auto& gp : sigma)
        j["pairs"].push_back({{"b", pt_wire(F, gp.b)}, {"u", pt_wire(F, gp.u)}});
      write_out(c, j.dump(2) + "\n");
    } else if (cmd_den->parsed()) {
      PolyT abar = monic_normalize(F, need_a()).second;
      DensityEstimate de = density_estimate(F, abar, density_degree);
      if (c.format == "csv") {
        std::string body = "class,count,fraction\n";
        for (const auto& [cls, cnt] : de.counts)
          body += pt_wire(F, cls) + "," + std::to_string(cnt) + "," +
                  std::to_string((double)cnt / (double)de.total) + "\n";
        write_out(c, body);
      } else {
        json j;
        j["total"] = de.total;
        j["classes"] = json::array();
        for (const auto& [cls, cnt] : de.counts)
          j["classes"].push_back({{"class", pt_wire(F, cls)},
                                  {"count", cnt},
                                  {"fraction", (double)cnt / (double)de.total}});
        write_out(c, j.dump(2) + "\n");
      }
    } else if (cmd_gw->parsed()) {
      ExperimentConfig cfg;
      cfg.p = c.p;
      cfg.r = c.r;
      cfg.n = c.n;
      cfg.a_wire = c.a;
      cfg.m_wire = c.m;
      cfg.m_source = m_source == "explicit"  ? MSource::Explicit
                     : m_source == "forward" ? MSource::Forward
                                             : MSource::RandomRational;
      cfg.scenario = scenario == "A" ? Scenario::A : scenario == "B" ? Scenario::B : Scenario::Free;
      cfg.max_place_degree = c.max_place_degree;
      cfg.include_infinite = c.include_infinity;
      cfg.trials = trials;
      cfg.seed = c.seed;
      cfg.precision_cap = c.precision_cap;
      cfg.degree_cap = c.degree_cap;
      cfg.sample_degree = sample_degree;
      GWReport rep = run_gw_experiment(cfg);
      if (c.out.empty())
        std::cout << (c.format == "csv" ? report_csv(F, rep) : report_json(F, rep));
      else
        emit_report(F, rep, c.format, c.out);
      if (rep.candidates > 0) return 2;
      if (rep.untested > 0) return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
