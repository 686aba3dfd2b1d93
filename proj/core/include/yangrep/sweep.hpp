#pragma once

#include <string>

#include "yangrep/verify.hpp"

namespace yangrep {

/// Grid sweep configuration. The predicate name selects the interpretation
/// of the axes:
///   "tensor_pairs"      axes pair1, pair2 of (alpha, beta) weight pairs
///   "symplectic_pairs"  axes pair1, pair2 of (gamma, gamma') pairs
///   "orthogonal_mixed"  axes pair1 and gamma
///   "plus3_vs_odd"      axes alpha, beta
///   "y_witness"         axes pair1, pair2 of (alpha, beta) weight pairs
///   "yminus_witness"    axes pair1, pair2 of (gamma, gamma') pairs
///   "plus_odd_witness"  axes alpha, beta
struct SweepConfig {
  std::string predicate;
  bool oracle = true;
  std::map<std::string, std::vector<std::vector<Rat>>> axes;  // name -> list of tuples
};

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // lexicographic grid order
  long points = 0;
  long agreements = 0;
  bool all_agree = true;
};

SweepResult run_sweep(const SweepConfig& config);

std::string sweep_to_csv(const SweepResult& result);

/// The standard grids used by the oracle_sweep verification suite.
SweepConfig grid_tensor_pairs();
SweepConfig grid_symplectic_pairs();
SweepConfig grid_orthogonal_mixed();
SweepConfig grid_plus3_vs_odd();
SweepConfig grid_y_witness();
SweepConfig grid_yminus_witness();
SweepConfig grid_plus_odd_witness();

/// Criterion/oracle agreement over the standard grids, reported as a
/// verification suite.
VerifyReport verify_oracle_sweeps();

}  // namespace yangrep
