#include "reconfrel/report.hpp"

#include <sstream>

#include "json.hpp"
#include "reconfrel/boolengine.hpp"

namespace reconfrel {

ReportBundle build_report(const SystemModel& model, const ReportOptions& options) {
  ReportBundle bundle;
  bundle.model_text = model.serialize();
  bundle.k_sigma = model.k_sigma();

  auto paths = enumerate_paths(model, options.limits);
  bundle.flexibility = flexibility_index(model);
  bundle.paths = path_table(paths, model);
  bundle.operable = !paths.empty();

  bundle.levels = level_table(model, options.max_states_log2, options.threads);
  bundle.max_tolerated = max_tolerated_failures(bundle.levels);

  if (bundle.operable) {
    auto dnf = build_operability_dnf(paths, model);
    auto odnf = orthogonalize(dnf);
    bundle.odnf_term_count = odnf.terms.size();
    for (const auto& t : odnf.terms) bundle.odnf_terms.push_back(format_term(t));
    bundle.polynomial = odnf_polynomial(odnf);
    if (model.has_probabilities())
      bundle.reliability_with_probs = odnf_probability(odnf, model.probabilities());
  } else {
    bundle.polynomial = ReliabilityPolynomial{{Int(0)}};
  }

  bundle.polynomial_state_count_ok =
      evaluate(bundle.polynomial, Rat(1, 2)) * bundle.levels.n_omega ==
      bundle.levels.n_reliable;

  if (options.p) {
    bundle.p_used = *options.p;
    bundle.reliability_at_p = evaluate(bundle.polynomial, *options.p);
  }
  return bundle;
}

std::string render_level_table_text(const LevelTable& table, int digits) {
  std::ostringstream out;
  out << "gamma  N_M  N_L  g_A\n";
  for (const auto& row : table.rows) {
    out << row.gamma << "  " << row.n_states.str() << "  "
        << row.n_operable.str() << "  " << decimal_string(row.g, digits) << "\n";
  }
  out << "total  N_Omega=" << table.n_omega.str()
      << "  N_R=" << table.n_reliable.str()
      << "  eta_A=" << decimal_string(table.eta, digits) << "\n";
  return out.str();
}

std::string render_level_table_csv(const LevelTable& table) {
  std::ostringstream out;
  out << "gamma,n_states,n_operable,g\n";
  for (const auto& row : table.rows)
    out << row.gamma << "," << row.n_states.str() << "," << row.n_operable.str()
        << "," << rational_string(row.g) << "\n";
  return out.str();
}

namespace {

nlohmann::json level_table_json(const LevelTable& table, int digits) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"gamma", row.gamma},
                    {"n_states", row.n_states.str()},
                    {"n_operable", row.n_operable.str()},
                    {"g", rational_string(row.g)},
                    {"g_decimal", decimal_string(row.g, digits)}});
  }
  return {{"k_sigma", table.k_sigma},
          {"rows", rows},
          {"n_omega", table.n_omega.str()},
          {"n_reliable", table.n_reliable.str()},
          {"eta", rational_string(table.eta)},
          {"eta_decimal", decimal_string(table.eta, digits)}};
}

std::string path_row_string(const std::vector<int>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += " ";
    s += row[i] ? "1" : "0";
  }
  return s;
}

}  // namespace

std::string render_level_table_json(const LevelTable& table, int digits) {
  return level_table_json(table, digits).dump(2);
}

std::string render_text(const ReportBundle& bundle, const ReportOptions& options) {
  const int digits = options.digits;
  std::ostringstream out;
  out << "model:\n";
  std::istringstream model_lines(bundle.model_text);
  std::string line;
  while (std::getline(model_lines, line)) out << "  " << line << "\n";
  out << "k_sigma: " << bundle.k_sigma << "\n";
  out << "flexibility N_S: " << bundle.flexibility.str() << "\n";
  out << "paths (" << bundle.paths.size() << "):\n";
  for (std::size_t q = 0; q < bundle.paths.size(); ++q)
    out << "  S" << (q + 1) << ": " << path_row_string(bundle.paths[q]) << "\n";
  if (bundle.operable) {
    out << "odnf terms (" << bundle.odnf_term_count << "):\n";
    for (const auto& t : bundle.odnf_terms) out << "  " << t << "\n";
  } else {
    out << "system is inoperable: no path covers all functions\n";
  }
  out << "polynomial: " << bundle.polynomial.render(options.ascending) << "\n";
  out << "polynomial state-count check (2^k P(1/2) = N_R): "
      << (bundle.polynomial_state_count_ok ? "ok" : "INCONSISTENT") << "\n";
  if (bundle.p_used) {
    out << "P(p=" << decimal_string(*bundle.p_used, digits)
        << ") = " << decimal_string(*bundle.reliability_at_p, digits) << " ("
        << rational_string(*bundle.reliability_at_p) << ")\n";
  }
  if (bundle.reliability_with_probs) {
    out << "P(model probabilities) = "
        << decimal_string(*bundle.reliability_with_probs, digits) << " ("
        << rational_string(*bundle.reliability_with_probs) << ")\n";
  }
  out << "level table:\n";
  std::istringstream table_lines(render_level_table_text(bundle.levels, digits));
  while (std::getline(table_lines, line)) out << "  " << line << "\n";
  out << "max tolerated failures: " << bundle.max_tolerated << "\n";
  return out.str();
}

std::string render_json(const ReportBundle& bundle, const ReportOptions& options) {
  const int digits = options.digits;
  nlohmann::json j;
  j["model"] = nlohmann::json::parse(
      SystemModel::parse(bundle.model_text).serialize_json());
  j["k_sigma"] = bundle.k_sigma;
  j["operable"] = bundle.operable;
  j["flexibility"] = bundle.flexibility.str();
  auto paths = nlohmann::json::array();
  for (const auto& row : bundle.paths) paths.push_back(row);
  j["paths"] = paths;
  j["odnf_term_count"] = bundle.odnf_term_count;
  j["odnf_terms"] = bundle.odnf_terms;
  j["polynomial"] = {{"coefficients", bundle.polynomial.coefficient_strings()},
                     {"rendered", bundle.polynomial.render(options.ascending)}};
  j["polynomial_state_count_ok"] = bundle.polynomial_state_count_ok;
  j["levels"] = level_table_json(bundle.levels, digits);
  j["max_tolerated_failures"] = bundle.max_tolerated;
  if (bundle.p_used) {
    j["evaluation"] = {
        {"p", rational_string(*bundle.p_used)},
        {"value", rational_string(*bundle.reliability_at_p)},
        {"value_decimal", decimal_string(*bundle.reliability_at_p, digits)}};
  }
  if (bundle.reliability_with_probs) {
    j["probability_with_model_probs"] = {
        {"value", rational_string(*bundle.reliability_with_probs)},
        {"value_decimal",
         decimal_string(*bundle.reliability_with_probs, digits)}};
  }
  return j.dump(2);
}

std::string render_csv(const ReportBundle& bundle, const ReportOptions& options) {
  std::ostringstream out;
  out << "metric,value\n";
  out << "k_sigma," << bundle.k_sigma << "\n";
  out << "operable," << (bundle.operable ? 1 : 0) << "\n";
  out << "flexibility," << bundle.flexibility.str() << "\n";
  out << "odnf_terms," << bundle.odnf_term_count << "\n";
  out << "polynomial,\"" << bundle.polynomial.render(options.ascending) << "\"\n";
  out << "n_omega," << bundle.levels.n_omega.str() << "\n";
  out << "n_reliable," << bundle.levels.n_reliable.str() << "\n";
  out << "eta," << rational_string(bundle.levels.eta) << "\n";
  out << "max_tolerated_failures," << bundle.max_tolerated << "\n";
  if (bundle.p_used)
    out << "reliability_at_p," << rational_string(*bundle.reliability_at_p) << "\n";
  out << "\n" << render_level_table_csv(bundle.levels);
  return out.str();
}

}  // namespace reconfrel
