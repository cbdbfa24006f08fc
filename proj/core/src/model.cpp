#include "reconfrel/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "reconfrel/errors.hpp"

namespace reconfrel {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

SystemModel::SystemModel(std::vector<std::string> functions, std::vector<Unit> units,
                         std::map<std::string, Rat> probs_by_name)
    : functions_(std::move(functions)), units_(std::move(units)) {
  if (functions_.empty()) throw ParseError("model needs at least one function");
  if (units_.empty()) throw ParseError("model needs at least one unit");

  std::unordered_set<std::string> seen;
  for (const auto& f : functions_) {
    if (f.empty()) throw ParseError("empty function name");
    if (!seen.insert(f).second) throw ParseError("duplicate function name: " + f);
  }
  seen.clear();
  for (auto& u : units_) {
    if (u.name.empty()) throw ParseError("empty unit name");
    if (!seen.insert(u.name).second) throw ParseError("duplicate unit name: " + u.name);
    if (u.element.empty()) u.element = u.name;
    if (u.caps.empty()) throw ParseError("unit " + u.name + " has no capabilities");
    std::sort(u.caps.begin(), u.caps.end());
    u.caps.erase(std::unique(u.caps.begin(), u.caps.end()), u.caps.end());
    for (int f : u.caps) {
      if (f < 0 || f >= function_count())
        throw ParseError("unit " + u.name + " has capability out of range");
    }
  }

  // Dense 1..k_sigma indices, unit-major, function order within each unit.
  var_by_unit_function_.assign(units_.size(),
                               std::vector<int>(functions_.size(), 0));
  for (int u = 0; u < unit_count(); ++u) {
    for (int f : units_[u].caps) {
      int idx = static_cast<int>(vars_.size()) + 1;
      vars_.push_back(CapabilityVar{idx, u, f});
      var_by_unit_function_[u][f] = idx;
    }
  }

  for (const auto& [key, p] : probs_by_name) {
    if (p < 0 || p > 1)
      throw ParseError("probability outside [0,1] for " + key);
    auto dot = key.rfind('.');
    if (dot == std::string::npos)
      throw ParseError("probability key must be unit.function: " + key);
    std::string un = key.substr(0, dot);
    std::string fn = key.substr(dot + 1);
    int u = -1, f = -1;
    for (int i = 0; i < unit_count(); ++i)
      if (units_[i].name == un) u = i;
    for (int i = 0; i < function_count(); ++i)
      if (functions_[i] == fn) f = i;
    if (u < 0 || f < 0 || var_index(u, f) == 0)
      throw ParseError("probability for unknown capability: " + key);
    probs_[var_index(u, f)] = p;
  }
  if (!probs_.empty() && probs_.size() != vars_.size()) {
    for (const auto& v : vars_)
      if (!probs_.count(v.index))
        throw ParseError("missing probability for " + variable_name(v.index));
  }
}

int SystemModel::var_index(int unit, int function) const {
  return var_by_unit_function_[unit][function];
}

std::string SystemModel::variable_name(int index) const {
  const auto& v = variable(index);
  return units_[v.unit].name + "." + functions_[v.function];
}

std::map<int, Rat> SystemModel::uniform_probabilities(const Rat& p) const {
  std::map<int, Rat> out;
  for (const auto& v : vars_) out[v.index] = p;
  return out;
}

namespace {

SystemModel parse_text(const std::string& text) {
  std::vector<std::string> functions;
  std::vector<Unit> units;
  std::map<std::string, Rat> probs;
  std::unordered_map<std::string, int> fidx;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "functions:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        fidx[toks[i]] = static_cast<int>(functions.size());
        functions.push_back(toks[i]);
      }
      if (functions.empty())
        throw ParseError("functions: line lists no functions", lineno);
    } else if (toks[0] == "unit") {
      if (toks.size() < 3) throw ParseError("malformed unit line", lineno);
      Unit u;
      u.name = toks[1];
      bool have_caps = false;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].rfind("element=", 0) == 0) {
          u.element = toks[i].substr(8);
        } else if (toks[i].rfind("caps=", 0) == 0) {
          have_caps = true;
          for (const auto& cap : split_on(toks[i].substr(5), ',')) {
            auto it = fidx.find(cap);
            if (it == fidx.end())
              throw ParseError("unknown function '" + cap + "' in capability set",
                               lineno);
            u.caps.push_back(it->second);
          }
        } else {
          throw ParseError("unexpected token '" + toks[i] + "' on unit line", lineno);
        }
      }
      if (!have_caps) throw ParseError("unit line without caps=", lineno);
      units.push_back(std::move(u));
    } else if (toks[0] == "prob") {
      // prob unit.function = value
      if (toks.size() != 4 || toks[2] != "=")
        throw ParseError("malformed prob line", lineno);
      Rat p;
      try {
        p = parse_decimal(toks[3]);
      } catch (const std::exception& e) {
        throw ParseError(std::string("bad probability: ") + e.what(), lineno);
      }
      if (!probs.emplace(toks[1], p).second)
        throw ParseError("duplicate prob for " + toks[1], lineno);
    } else {
      throw ParseError("unrecognized directive '" + toks[0] + "'", lineno);
    }
  }
  return SystemModel(std::move(functions), std::move(units), std::move(probs));
}

SystemModel parse_json_checked(const nlohmann::json& j) {
  std::vector<std::string> functions;
  for (const auto& f : j.at("functions")) functions.push_back(f.get<std::string>());
  std::unordered_map<std::string, int> fidx;
  for (int i = 0; i < static_cast<int>(functions.size()); ++i)
    fidx[functions[i]] = i;

  std::vector<Unit> units;
  for (const auto& ju : j.at("units")) {
    Unit u;
    u.name = ju.at("name").get<std::string>();
    if (ju.contains("element")) u.element = ju["element"].get<std::string>();
    for (const auto& cap : ju.at("caps")) {
      auto it = fidx.find(cap.get<std::string>());
      if (it == fidx.end())
        throw ParseError("unknown function '" + cap.get<std::string>() +
                         "' in capability set of unit " + u.name);
      u.caps.push_back(it->second);
    }
    units.push_back(std::move(u));
  }

  std::map<std::string, Rat> probs;
  if (j.contains("probs")) {
    for (const auto& [key, val] : j["probs"].items()) {
      // Strings keep exactness; bare JSON numbers go through their shortest
      // round-trip decimal form.
      std::string s = val.is_string() ? val.get<std::string>() : val.dump();
      try {
        probs[key] = parse_decimal(s);
      } catch (const std::exception& e) {
        throw ParseError("bad probability for " + key + ": " + e.what());
      }
    }
  }
  return SystemModel(std::move(functions), std::move(units), std::move(probs));
}

SystemModel parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
  try {
    return parse_json_checked(j);
  } catch (const nlohmann::json::exception& e) {
    // Missing keys and type mismatches surface as the library's exceptions;
    // normalize them so callers see one error type for any bad input.
    throw ParseError(std::string("JSON: ") + e.what());
  }
}

}  // namespace

SystemModel SystemModel::parse(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json(text);
    break;
  }
  return parse_text(text);
}

std::string SystemModel::serialize() const {
  std::ostringstream out;
  out << "functions:";
  for (const auto& f : functions_) out << " " << f;
  out << "\n";
  for (const auto& u : units_) {
    out << "unit " << u.name << " element=" << u.element << " caps=";
    for (std::size_t i = 0; i < u.caps.size(); ++i) {
      if (i) out << ",";
      out << functions_[u.caps[i]];
    }
    out << "\n";
  }
  for (const auto& [idx, p] : probs_)
    out << "prob " << variable_name(idx) << " = " << rational_string(p) << "\n";
  return out.str();
}

std::string SystemModel::serialize_json() const {
  nlohmann::json j;
  j["functions"] = functions_;
  j["units"] = nlohmann::json::array();
  for (const auto& u : units_) {
    nlohmann::json ju;
    ju["name"] = u.name;
    ju["element"] = u.element;
    auto caps = nlohmann::json::array();
    for (int f : u.caps) caps.push_back(functions_[f]);
    ju["caps"] = caps;
    j["units"].push_back(ju);
  }
  if (!probs_.empty()) {
    nlohmann::json jp = nlohmann::json::object();
    for (const auto& [idx, p] : probs_) jp[variable_name(idx)] = rational_string(p);
    j["probs"] = jp;
  }
  return j.dump(2);
}

ResourceMatrix resource_matrix(const SystemModel& model) {
  if (model.unit_count() > 64)
    throw SizeGuardError("resource matrix limited to 64 units");
  ResourceMatrix b;
  b.m = model.function_count();
  b.n = model.unit_count();
  b.row_mask.assign(b.m, 0);
  for (const auto& v : model.variables())
    b.row_mask[v.function] |= std::uint64_t{1} << v.unit;
  return b;
}

SystemModel model_from_matrix(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty()) throw ParseError("empty matrix");
  int m = static_cast<int>(rows.size());
  int n = static_cast<int>(rows[0].size());
  std::vector<std::string> functions;
  for (int j = 0; j < m; ++j) functions.push_back("f" + std::to_string(j + 1));
  std::vector<Unit> units;
  for (int i = 0; i < n; ++i) {
    Unit u;
    u.name = "u" + std::to_string(i + 1);
    for (int j = 0; j < m; ++j) {
      if (static_cast<int>(rows[j].size()) != n)
        throw ParseError("ragged matrix");
      if (rows[j][i]) u.caps.push_back(j);
    }
    units.push_back(std::move(u));
  }
  return SystemModel(std::move(functions), std::move(units));
}

}  // namespace reconfrel
