#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reconfrel/flexibility.hpp"
#include "reconfrel/model.hpp"
#include "reconfrel/reliability.hpp"
#include "reconfrel/statespace.hpp"

namespace reconfrel {

struct ReportOptions {
  std::optional<Rat> p;    // evaluate the polynomial at this p
  int digits = 7;          // significant decimals in rendered output
  bool ascending = true;   // polynomial term order
  int max_states_log2 = 30;
  int threads = 0;
  EnumerationLimits limits;
};

/// Everything the analyze pipeline produces for one model.
struct ReportBundle {
  std::string model_text;  // canonical echo
  int k_sigma = 0;
  bool operable = false;
  Int flexibility;  // N_S
  std::vector<std::vector<int>> paths;
  std::size_t odnf_term_count = 0;
  std::vector<std::string> odnf_terms;
  ReliabilityPolynomial polynomial;
  /// Self-check: 2^k_sigma * P(1/2) must equal N_R for any valid
  /// reliability polynomial of the model.
  bool polynomial_state_count_ok = false;
  LevelTable levels;
  int max_tolerated = -1;
  std::optional<Rat> p_used;
  std::optional<Rat> reliability_at_p;       // polynomial at p_used
  std::optional<Rat> reliability_with_probs; // ODNF with per-capability probs
};

/// parse -> paths -> DNF -> ODNF -> polynomial -> level table -> metrics.
/// An inoperable model yields a bundle with operable = false, N_S = 0 and
/// an all-zero polynomial rather than an exception.
ReportBundle build_report(const SystemModel& model, const ReportOptions& options);

std::string render_text(const ReportBundle& bundle, const ReportOptions& options);
std::string render_json(const ReportBundle& bundle, const ReportOptions& options);
std::string render_csv(const ReportBundle& bundle, const ReportOptions& options);

std::string render_level_table_text(const LevelTable& table, int digits);
std::string render_level_table_csv(const LevelTable& table);
std::string render_level_table_json(const LevelTable& table, int digits);

}  // namespace reconfrel
