#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace fsmcheck;

namespace {

nlohmann::json config_json(const RunConfig& cfg, const std::string& command) {
  nlohmann::json j;
  j["command"] = command;
  j["model"] = cfg.model;
  j["N"] = cfg.n;
  j["epsilon"] = cfg.epsilon;
  j["g"] = cfg.g;
  j["a"] = cfg.a;
  j["zeros"] = cfg.zeros;
  j["theta_max"] = cfg.theta_max;
  j["nodes"] = cfg.nodes;
  j["nmax"] = cfg.nmax;
  j["samples"] = cfg.samples;
  j["states"] = cfg.states;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["extra"] = cfg.extra;
  return j;
}

void add_common(CLI::App* sub, std::map<std::string, std::string>& ov, std::string& file, RunConfig& cfg) {
  auto opt = [&](const std::string& flag, const std::string& key, const std::string& help) {
    sub->add_option_function<std::string>(flag, [&ov, key](const std::string& v) { ov[key] = v; }, help);
  };
  opt("--model", "model", "constant | sinhgordon | rational | diagonal | onsigma");
  opt("--N", "N", "O(N) rank");
  opt("--epsilon", "epsilon", "sign for constant and rational models");
  opt("--g", "g", "sinh-Gordon coupling");
  opt("--theta-max", "theta_max", "rapidity cutoff");
  opt("--nodes", "nodes", "Gauss-Legendre nodes on the rapidity grid");
  opt("--nmax", "nmax", "particle-number truncation");
  opt("--samples", "samples", "random rapidities per axiom check");
  opt("--states", "states", "random states per algebra check");
  opt("--seed", "seed", "random seed");
  for (const char* fam : {"axioms", "fock", "zf", "locality", "scattering"})
    opt(std::string("--tol-") + fam, std::string("tol.") + fam, std::string("tolerance for the ") + fam + " checks");
  sub->add_option("--file", file, "flat key = value config file")->check(CLI::ExistingFile);
  sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
  sub->add_option("--csv", cfg.csv, "write the two-particle amplitude table here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for factorizing S-matrices, their Fock spaces, fields and scattering"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<std::string, std::string> overrides;
  std::string file;
  for (const char* name : {"axioms", "fock", "zf", "locality", "scattering", "all"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " suite");
    add_common(sub, overrides, file, cfg);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  CheckReport rep;
  try {
    if (!file.empty()) apply_key_values(cfg, read_key_values(file));
    apply_key_values(cfg, overrides);
    cfg.validate();
    fsm::ModelPtr model;
    try {
      model = build_model(cfg);
    } catch (const fsm::DiagonalViolation& v) {
      CheckEntry e;
      e.suite = "axioms";
      e.name = "diagonal_constraints";
      e.anchor = "conj(s_ab) = 1/s_ab = s_ba(-theta) = s_ba(i pi + theta)";
      e.params = {{"a", v.a + 1}, {"b", v.b + 1}, {"theta", v.theta}, {"constraint", v.which}};
      e.residual = v.residual;
      e.threshold = 1e-8;
      rep.add(e);
    }
    if (model) {
      const bool all = command == "all";
      if (all || command == "axioms") run_axioms(cfg, model, rep);
      if (all || command == "fock") run_fock(cfg, model, rep);
      if (all || command == "zf") run_zf(cfg, model, rep);
      if (all || command == "locality") run_locality(cfg, model, rep);
      if (all || command == "scattering") run_scattering(cfg, model, rep);
    }
  } catch (const ConfigError& e) {
    std::cerr << "fsmcheck: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fsmcheck: " << e.what() << "\n";
    return 2;
  }

  const std::string text = rep.to_json(config_json(cfg, command)).dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
      std::cerr << "fsmcheck: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    os << text;
  }
  int failed = 0;
  for (const auto& e : rep.entries()) {
    if (e.pass) continue;
    ++failed;
    std::cerr << "FAIL " << e.suite << "/" << e.name << " residual=" << e.residual << " threshold=" << e.threshold
              << "\n";
  }
  std::cerr << command << ": " << rep.entries().size() - failed << "/" << rep.entries().size() << " checks passed\n";
  return rep.passed() ? 0 : 1;
}
