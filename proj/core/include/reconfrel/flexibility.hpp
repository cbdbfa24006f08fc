#pragma once

#include <cstdint>
#include <vector>

#include "reconfrel/model.hpp"

namespace reconfrel {

/// A row-saturating matching: every function assigned to one distinct
/// capable unit. unit_for_function[j] is the 0-based unit performing
/// function j.
struct OperationalPath {
  std::vector<int> unit_for_function;
  int rank() const { return static_cast<int>(unit_for_function.size()); }
};

struct EnumerationLimits {
  std::uint64_t max_paths = 1'000'000;
  int max_variables = 64;
};

/// All row-saturating matchings, ordered lexicographically by
/// (function index -> chosen unit index). This order makes the dual-core
/// and four-core golden tables byte-stable.
/// Throws SizeGuardError when limits are exceeded; an inoperable matrix
/// yields an empty list, not an error.
std::vector<OperationalPath> enumerate_paths(const ResourceMatrix& b,
                                             const EnumerationLimits& limits = {});
std::vector<OperationalPath> enumerate_paths(const SystemModel& model,
                                             const EnumerationLimits& limits = {});

/// Exact matrix permanent (number of row-saturating matchings).
/// Subset DP over the function rows; n <= 24 columns supported.
Int permanent(const ResourceMatrix& b);

/// N_S = per B.
Int flexibility_index(const SystemModel& model);

/// 0/1 participation table, one row per path, one column per capability
/// variable (k_sigma columns). Each row has exactly m ones.
std::vector<std::vector<int>> path_table(const std::vector<OperationalPath>& paths,
                                         const SystemModel& model);

}  // namespace reconfrel
