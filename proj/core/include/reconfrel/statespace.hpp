#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "reconfrel/model.hpp"
#include "reconfrel/rational.hpp"

namespace reconfrel {

struct LevelRow {
  int gamma;       // failed capabilities
  Int n_states;    // N_M = C(k_sigma, gamma)
  Int n_operable;  // N_L
  Rat g;           // N_L / N_M
};

struct LevelTable {
  int k_sigma = 0;
  std::vector<LevelRow> rows;  // gamma = 0..k_sigma
  Int n_omega;                 // 2^k_sigma
  Int n_reliable;              // sum of N_L
  Rat eta;                     // N_R / N_Omega
};

/// Precomputed matching context for one model; reusable across states.
class OperabilityChecker {
 public:
  explicit OperabilityChecker(const SystemModel& model);

  /// True iff the capabilities in `alive_mask` (bit i = variable i+1)
  /// admit a matching saturating all m functions.
  bool is_operable(std::uint64_t alive_mask) const;

  int k_sigma() const { return k_sigma_; }

 private:
  int m_, n_, k_sigma_;
  // var -> (unit, function) lookup for mask expansion
  std::vector<int> var_unit_, var_function_;
  mutable std::vector<std::uint64_t> fn_units_;  // per function: alive unit mask
  mutable std::vector<int> match_of_unit_;
  mutable std::vector<std::uint64_t> visited_;

  bool augment(int function) const;
};

bool is_operable(std::uint64_t alive_mask, const SystemModel& model);

/// Exhaustive enumeration of all 2^k_sigma states, bucketed by failure
/// count. Partitioned across workers; the merge is order-independent.
/// `max_states_log2` guards the enumeration (default 2^30 states).
LevelTable level_table(const SystemModel& model, int max_states_log2 = 30,
                       int threads = 0);

/// Largest gamma with N_L > 0, or -1 for an inoperable system.
int max_tolerated_failures(const LevelTable& table);

struct MonteCarloResult {
  Rat estimate;
  double std_error;
  std::uint64_t successes;
  std::uint64_t samples;
};

/// Independent per-capability alive draws; reproducible for a given
/// (seed, samples) regardless of thread count: samples are processed in
/// fixed 2^16 blocks, block b drawing from stream (seed, b).
MonteCarloResult monte_carlo_reliability(const SystemModel& model,
                                         const std::map<int, Rat>& probs,
                                         std::uint64_t samples,
                                         std::uint64_t seed, int threads = 0);

/// Worker count: `requested` if > 0, else hardware concurrency, both
/// capped by the RECONF_REL_THREADS environment variable.
int effective_thread_count(int requested);

Int binomial(int n, int k);

}  // namespace reconfrel
