#pragma once

#include <cstdint>
#include <vector>

#include "reconfrel/rational.hpp"

namespace reconfrel {

/// A single multi-functional element: k functions with per-function
/// success probabilities at the evaluation instant.
struct MfeSpec {
  std::vector<Rat> probs;  // probs[j] for function j+1

  int k() const { return static_cast<int>(probs.size()); }
};

/// Validates k >= 1 and probabilities in [0,1].
MfeSpec make_mfe_spec(std::vector<Rat> probs);

/// Probability of the state where exactly the functions in
/// `functioning_mask` (bit j = function j+1) work.
Rat mfe_state_probability(const MfeSpec& spec, std::uint64_t functioning_mask);

/// 1 - product of (1 - p_j): the element performs at least one function.
Rat mfe_reliability(const MfeSpec& spec);

struct MfeState {
  std::uint64_t functioning_mask;
  Rat probability;
};

/// All 2^k states, ordered functioning-first: state s fails function j
/// iff bit (k-j) of s is set, so s = 0 is the fully functional state and
/// the complete-failure state comes last. Guarded at k <= 20.
std::vector<MfeState> mfe_state_table(const MfeSpec& spec);

}  // namespace reconfrel
