#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reconfrel/rational.hpp"

namespace reconfrel {

struct Unit {
  std::string name;
  std::string element;
  std::vector<int> caps;  // 0-based function indices, ascending
};

/// One 1-entry of the resource matrix. Indices are dense 1..k_sigma,
/// assigned unit by unit, scanning that unit's capabilities in function order.
struct CapabilityVar {
  int index;     // 1-based variable index
  int unit;      // 0-based unit index
  int function;  // 0-based function index
};

/// Per-function bitmask view of the 0/1 resource matrix.
/// row_mask[j] has bit i set iff unit i can perform function j.
struct ResourceMatrix {
  int m = 0;  // functions
  int n = 0;  // units
  std::vector<std::uint64_t> row_mask;

  bool entry(int function, int unit) const {
    return (row_mask[function] >> unit) & 1u;
  }
};

/// Immutable system description: functions, execution units and optional
/// exact per-capability probabilities. Variable indices are fixed at
/// construction and shared by every downstream module.
class SystemModel {
 public:
  SystemModel(std::vector<std::string> functions, std::vector<Unit> units,
              std::map<std::string, Rat> probs_by_name = {});

  /// Parses the line-oriented text format or the equivalent JSON form
  /// (auto-detected). Throws ParseError.
  static SystemModel parse(const std::string& text);

  const std::vector<std::string>& functions() const { return functions_; }
  const std::vector<Unit>& units() const { return units_; }
  const std::vector<CapabilityVar>& variables() const { return vars_; }

  int function_count() const { return static_cast<int>(functions_.size()); }
  int unit_count() const { return static_cast<int>(units_.size()); }
  int k_sigma() const { return static_cast<int>(vars_.size()); }
  int unit_capability_count(int unit) const {
    return static_cast<int>(units_[unit].caps.size());
  }

  /// 1-based variable index for (unit, function), 0 if B entry is 0.
  int var_index(int unit, int function) const;
  const CapabilityVar& variable(int index) const { return vars_[index - 1]; }
  std::string variable_name(int index) const;  // "unit.function"

  bool has_probabilities() const { return !probs_.empty(); }
  /// Probability map keyed by 1-based variable index. Empty in symbolic
  /// equal-p mode. When non-empty it covers every variable.
  const std::map<int, Rat>& probabilities() const { return probs_; }
  /// Uniform map var -> p over all variables.
  std::map<int, Rat> uniform_probabilities(const Rat& p) const;

  std::string serialize() const;       // text format
  std::string serialize_json() const;  // JSON format

 private:
  std::vector<std::string> functions_;
  std::vector<Unit> units_;
  std::vector<CapabilityVar> vars_;
  std::vector<std::vector<int>> var_by_unit_function_;  // [unit][function] -> index or 0
  std::map<int, Rat> probs_;
};

ResourceMatrix resource_matrix(const SystemModel& model);

/// Builds a model from an explicit 0/1 matrix (units u1..un, single element,
/// functions f1..fm). Every column must have at least one 1; rows may be
/// all-zero (an uncoverable function). Useful for tests and tools.
SystemModel model_from_matrix(const std::vector<std::vector<int>>& rows);

}  // namespace reconfrel
