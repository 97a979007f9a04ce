#pragma once

#include "config.hpp"
#include "report.hpp"

namespace fsmcheck {

void run_axioms(const RunConfig& cfg, const fsm::ModelPtr& model, CheckReport& rep);
void run_fock(const RunConfig& cfg, const fsm::ModelPtr& model, CheckReport& rep);
void run_zf(const RunConfig& cfg, const fsm::ModelPtr& model, CheckReport& rep);
void run_locality(const RunConfig& cfg, const fsm::ModelPtr& model, CheckReport& rep);
// Writes the two-particle amplitude table when cfg.csv is set.
void run_scattering(const RunConfig& cfg, const fsm::ModelPtr& model, CheckReport& rep);

}  // namespace fsmcheck
