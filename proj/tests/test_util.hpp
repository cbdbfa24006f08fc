#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "reconfrel/boolengine.hpp"
#include "reconfrel/model.hpp"
#include "reconfrel/rng.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(RECONFREL_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline reconfrel::SystemModel load_model(const std::string& name) {
  return reconfrel::SystemModel::parse(read_file(data_path(name)));
}

inline reconfrel::ResourceMatrix matrix_from_rows(
    const std::vector<std::vector<int>>& rows) {
  reconfrel::ResourceMatrix b;
  b.m = static_cast<int>(rows.size());
  b.n = static_cast<int>(rows[0].size());
  for (const auto& row : rows) {
    std::uint64_t mask = 0;
    for (int i = 0; i < b.n; ++i)
      if (row[i]) mask |= std::uint64_t{1} << i;
    b.row_mask.push_back(mask);
  }
  return b;
}

inline reconfrel::ResourceMatrix all_ones(int m, int n) {
  return matrix_from_rows(
      std::vector<std::vector<int>>(m, std::vector<int>(n, 1)));
}

// Independent matching-count oracle: unit-major exhaustive recursion with an
// explicit idle branch, sharing neither the DP nor the function-major
// traversal used by the implementation.
inline long long oracle_count_from(const reconfrel::ResourceMatrix& b, int unit,
                                   std::uint64_t remaining_functions) {
  if (remaining_functions == 0) return 1;
  if (unit == b.n) return 0;
  long long total = oracle_count_from(b, unit + 1, remaining_functions);  // idle
  for (int f = 0; f < b.m; ++f) {
    if (!((remaining_functions >> f) & 1u)) continue;
    if (!b.entry(f, unit)) continue;
    total += oracle_count_from(b, unit + 1,
                               remaining_functions & ~(std::uint64_t{1} << f));
  }
  return total;
}

inline long long oracle_matching_count(const reconfrel::ResourceMatrix& b) {
  std::uint64_t all = b.m == 0 ? 0 : (std::uint64_t{1} << b.m) - 1;
  return oracle_count_from(b, 0, all);
}

// Independent operability oracle built on the count above.
inline bool oracle_is_operable(const reconfrel::ResourceMatrix& b,
                               std::uint64_t alive_vars,
                               const reconfrel::SystemModel& model) {
  reconfrel::ResourceMatrix alive = b;
  for (auto& mask : alive.row_mask) mask = 0;
  int i = 0;
  for (const auto& v : model.variables()) {
    if ((alive_vars >> i) & 1u)
      alive.row_mask[v.function] |= std::uint64_t{1} << v.unit;
    ++i;
  }
  return oracle_matching_count(alive) > 0;
}

// Seeded random model: m in [1,4], n in [m, m+2], random non-empty caps.
inline reconfrel::SystemModel random_model(reconfrel::Xoshiro256& rng,
                                           int max_k_sigma = 14,
                                           bool require_operable = true) {
  using namespace reconfrel;
  for (;;) {
    int m = 1 + static_cast<int>(rng.next() % 4);
    int n = m + static_cast<int>(rng.next() % 3);
    std::vector<std::vector<int>> rows(m, std::vector<int>(n, 0));
    int k_sigma = 0;
    bool empty_col = false;
    for (int u = 0; u < n; ++u) {
      int caps = 0;
      for (int f = 0; f < m; ++f) {
        if (rng.next() % 2) {
          rows[f][u] = 1;
          ++caps;
          ++k_sigma;
        }
      }
      if (caps == 0) empty_col = true;
    }
    if (empty_col || k_sigma > max_k_sigma) continue;
    if (require_operable && oracle_matching_count(matrix_from_rows(rows)) == 0)
      continue;
    return model_from_matrix(rows);
  }
}

inline reconfrel::ConjTerm pos_term(std::initializer_list<int> vars) {
  reconfrel::ConjTerm t;
  for (int v : vars) t.pos |= std::uint64_t{1} << (v - 1);
  return t;
}

inline reconfrel::ConjTerm term(std::initializer_list<int> pos,
                                std::initializer_list<int> neg) {
  reconfrel::ConjTerm t;
  for (int v : pos) t.pos |= std::uint64_t{1} << (v - 1);
  for (int v : neg) t.neg |= std::uint64_t{1} << (v - 1);
  return t;
}

}  // namespace testutil
