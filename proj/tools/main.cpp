#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reconfrel/boolengine.hpp"
#include "reconfrel/errors.hpp"
#include "reconfrel/flexibility.hpp"
#include "reconfrel/mfe.hpp"
#include "reconfrel/report.hpp"

namespace {

using namespace reconfrel;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SystemModel load_model(const std::string& path) {
  return SystemModel::parse(read_file(path));
}

// Probability file: one "unit.function = value" or "x3 = value" per line.
std::map<int, Rat> load_probs(const std::string& path, const SystemModel& model) {
  std::map<int, Rat> out;
  std::istringstream in(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, eq, value;
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw ParseError("expected '<capability> = <value>'", lineno);
    int idx = 0;
    if (key.size() > 1 && key[0] == 'x' &&
        key.find_first_not_of("0123456789", 1) == std::string::npos) {
      idx = std::stoi(key.substr(1));
      if (idx < 1 || idx > model.k_sigma())
        throw ParseError("variable " + key + " out of range", lineno);
    } else {
      for (int i = 1; i <= model.k_sigma(); ++i)
        if (model.variable_name(i) == key) idx = i;
      if (idx == 0) throw ParseError("unknown capability " + key, lineno);
    }
    out[idx] = parse_decimal(value);
  }
  return out;
}

struct CommonOpts {
  std::string format = "text";
  int digits = 7;
  int max_states = 30;
  bool quiet = false;
  bool descending = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--digits", opts.digits, "Significant decimal digits")
      ->check(CLI::Range(1, 60));
  cmd->add_option("--max-states", opts.max_states,
                  "log2 of the state enumeration guard");
  cmd->add_flag("--quiet", opts.quiet, "Suppress normal output");
  cmd->add_flag("--desc", opts.descending, "Render polynomials highest power first");
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (!opts.quiet) std::cout << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Structural reliability analysis of reconfigurable multi-functional systems"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string model_path, probs_path, p_text, plist_text;
  std::uint64_t samples = 1'000'000, seed = 1;
  bool raw_dnf = false;

  auto* analyze = app.add_subcommand("analyze", "Full pipeline report");
  analyze->add_option("model", model_path)->required();
  analyze->add_option("--p", p_text, "Evaluate the polynomial at this p");
  add_common(analyze, opts);

  auto* paths_cmd = app.add_subcommand("paths", "Shortest operational paths");
  paths_cmd->add_option("model", model_path)->required();
  add_common(paths_cmd, opts);

  auto* odnf_cmd = app.add_subcommand("odnf", "Orthogonal disjunctive normal form");
  odnf_cmd->add_option("input", model_path, "Model file, or a DNF file with --dnf")
      ->required();
  odnf_cmd->add_flag("--dnf", raw_dnf, "Treat the input as a raw DNF file");
  add_common(odnf_cmd, opts);

  auto* poly_cmd = app.add_subcommand("poly", "Exact reliability polynomial");
  poly_cmd->add_option("model", model_path)->required();
  add_common(poly_cmd, opts);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate system reliability");
  eval_cmd->add_option("model", model_path)->required();
  eval_cmd->add_option("--p", p_text, "Uniform capability probability");
  eval_cmd->add_option("--probs", probs_path, "Per-capability probability file");
  add_common(eval_cmd, opts);

  auto* table_cmd = app.add_subcommand("table", "Failure-level table");
  table_cmd->add_option("model", model_path)->required();
  add_common(table_cmd, opts);

  auto* mfe_cmd = app.add_subcommand("mfe", "Single multi-functional element");
  mfe_cmd->add_option("--p-list", plist_text, "Comma-separated per-function probabilities")
      ->required();
  add_common(mfe_cmd, opts);

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo reliability estimate");
  mc_cmd->add_option("model", model_path)->required();
  mc_cmd->add_option("--p", p_text, "Uniform capability probability");
  mc_cmd->add_option("--probs", probs_path, "Per-capability probability file");
  mc_cmd->add_option("--samples", samples, "Sample count");
  mc_cmd->add_option("--seed", seed, "RNG seed");
  add_common(mc_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ReportOptions ropts;
  ropts.digits = opts.digits;
  ropts.ascending = !opts.descending;
  ropts.max_states_log2 = opts.max_states;

  if (analyze->parsed()) {
    if (!p_text.empty()) ropts.p = parse_decimal(p_text);
    auto model = load_model(model_path);
    auto bundle = build_report(model, ropts);
    if (opts.format == "json")
      emit(opts, render_json(bundle, ropts));
    else if (opts.format == "csv")
      emit(opts, render_csv(bundle, ropts));
    else
      emit(opts, render_text(bundle, ropts));
    return bundle.operable ? 0 : 3;
  }

  if (paths_cmd->parsed()) {
    auto model = load_model(model_path);
    auto paths = enumerate_paths(model);
    auto table = path_table(paths, model);
    std::ostringstream out;
    if (opts.format == "json") {
      out << "[";
      for (std::size_t q = 0; q < table.size(); ++q) {
        out << (q ? "," : "") << "[";
        for (std::size_t i = 0; i < table[q].size(); ++i)
          out << (i ? "," : "") << table[q][i];
        out << "]";
      }
      out << "]\n";
    } else {
      const char sep = opts.format == "csv" ? ',' : ' ';
      for (std::size_t q = 0; q < table.size(); ++q) {
        if (opts.format == "text") out << "S" << (q + 1) << sep;
        for (std::size_t i = 0; i < table[q].size(); ++i) {
          if (i) out << sep;
          out << table[q][i];
        }
        out << "\n";
      }
    }
    emit(opts, out.str());
    return table.empty() ? 3 : 0;
  }

  if (odnf_cmd->parsed()) {
    DnfForm dnf;
    if (raw_dnf) {
      dnf = parse_dnf(read_file(model_path));
      if (dnf.terms.empty()) throw InoperableError("empty DNF");
    } else {
      auto model = load_model(model_path);
      dnf = build_operability_dnf(enumerate_paths(model), model);
    }
    auto odnf = orthogonalize(dnf);
    emit(opts, format_form(odnf.terms));
    return 0;
  }

  if (poly_cmd->parsed()) {
    auto model = load_model(model_path);
    auto dnf = build_operability_dnf(enumerate_paths(model), model);
    auto poly = odnf_polynomial(orthogonalize(dnf));
    if (opts.format == "json") {
      std::ostringstream out;
      out << "[";
      auto coeffs = poly.coefficient_strings();
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << (i ? "," : "") << '"' << coeffs[i] << '"';
      out << "]\n";
      emit(opts, out.str());
    } else {
      emit(opts, poly.render(!opts.descending) + "\n");
    }
    return 0;
  }

  if (eval_cmd->parsed()) {
    auto model = load_model(model_path);
    auto dnf = build_operability_dnf(enumerate_paths(model), model);
    auto odnf = orthogonalize(dnf);
    Rat value;
    if (!probs_path.empty()) {
      value = odnf_probability(odnf, load_probs(probs_path, model));
    } else if (!p_text.empty()) {
      Rat p = parse_decimal(p_text);
      value = evaluate(odnf_polynomial(odnf), p);
    } else if (model.has_probabilities()) {
      value = odnf_probability(odnf, model.probabilities());
    } else {
      throw ParseError("eval needs --p, --probs, or prob lines in the model");
    }
    emit(opts, decimal_string(value, opts.digits) + "\n");
    return 0;
  }

  if (table_cmd->parsed()) {
    auto model = load_model(model_path);
    auto levels = level_table(model, opts.max_states);
    if (opts.format == "json")
      emit(opts, render_level_table_json(levels, opts.digits) + "\n");
    else if (opts.format == "csv")
      emit(opts, render_level_table_csv(levels));
    else
      emit(opts, render_level_table_text(levels, opts.digits));
    return levels.n_reliable == 0 ? 3 : 0;
  }

  if (mfe_cmd->parsed()) {
    std::vector<Rat> probs;
    std::istringstream ls(plist_text);
    std::string tok;
    while (std::getline(ls, tok, ',')) probs.push_back(parse_decimal(tok));
    auto spec = make_mfe_spec(probs);
    auto states = mfe_state_table(spec);
    std::ostringstream out;
    if (opts.format == "csv") out << "functioning,probability\n";
    for (const auto& st : states) {
      std::string fset;
      for (int j = 0; j < spec.k(); ++j)
        fset += ((st.functioning_mask >> j) & 1u) ? '1' : '0';
      if (opts.format == "csv")
        out << fset << "," << rational_string(st.probability) << "\n";
      else
        out << fset << "  " << decimal_string(st.probability, opts.digits)
            << "\n";
    }
    out << "reliability: " << decimal_string(mfe_reliability(spec), opts.digits)
        << "\n";
    emit(opts, out.str());
    return 0;
  }

  if (mc_cmd->parsed()) {
    auto model = load_model(model_path);
    std::map<int, Rat> probs;
    if (!probs_path.empty())
      probs = load_probs(probs_path, model);
    else if (!p_text.empty())
      probs = model.uniform_probabilities(parse_decimal(p_text));
    else if (model.has_probabilities())
      probs = model.probabilities();
    else
      throw ParseError("mc needs --p, --probs, or prob lines in the model");
    auto result = monte_carlo_reliability(model, probs, samples, seed);
    std::ostringstream out;
    out << "estimate: " << decimal_string(result.estimate, opts.digits) << "\n"
        << "std_error: " << decimal_string(Rat(result.std_error), opts.digits)
        << "\n"
        << "successes: " << result.successes << "\n"
        << "samples: " << result.samples << "\n";
    emit(opts, out.str());
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const reconfrel::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const reconfrel::InoperableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
