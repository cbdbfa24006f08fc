#include "reconfrel/flexibility.hpp"

#include <bit>

#include "reconfrel/errors.hpp"

namespace reconfrel {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

Int int_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 a = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  Int r = static_cast<u64>(a >> 64);
  r <<= 64;
  r += static_cast<u64>(a);
  return neg ? Int(-r) : r;
}

struct PathEnumerator {
  const ResourceMatrix& b;
  const EnumerationLimits& limits;
  std::vector<int> assignment;  // function -> unit
  std::vector<OperationalPath> out;

  PathEnumerator(const ResourceMatrix& b, const EnumerationLimits& limits)
      : b(b), limits(limits) {
    assignment.assign(b.m, -1);
  }

  void recurse(int function, u64 used_units) {
    if (function == b.m) {
      if (out.size() >= limits.max_paths)
        throw SizeGuardError("path count exceeds enumeration guard (" +
                             std::to_string(limits.max_paths) + ")");
      out.push_back(OperationalPath{assignment});
      return;
    }
    for (int j = function; j < b.m; ++j)
      if ((b.row_mask[j] & ~used_units) == 0) return;  // uncoverable function
    u64 options = b.row_mask[function] & ~used_units;
    while (options) {
      int u = std::countr_zero(options);
      options &= options - 1;
      assignment[function] = u;
      recurse(function + 1, used_units | (u64{1} << u));
      assignment[function] = -1;
    }
  }
};

}  // namespace

std::vector<OperationalPath> enumerate_paths(const ResourceMatrix& b,
                                             const EnumerationLimits& limits) {
  int k_sigma = 0;
  for (int j = 0; j < b.m; ++j) k_sigma += std::popcount(b.row_mask[j]);
  if (k_sigma > limits.max_variables)
    throw SizeGuardError("k_sigma exceeds variable guard (" +
                         std::to_string(limits.max_variables) + ")");
  if (b.m > 64) throw SizeGuardError("more than 64 functions");
  if (b.m > b.n) return {};
  PathEnumerator e(b, limits);
  e.recurse(0, 0);
  return std::move(e.out);
}

std::vector<OperationalPath> enumerate_paths(const SystemModel& model,
                                             const EnumerationLimits& limits) {
  return enumerate_paths(resource_matrix(model), limits);
}

namespace {

// Subset DP over function rows, columns scanned once. dp[S] counts matchings
// of exactly the rows in S within the columns processed so far.
Int permanent_subset_dp(const ResourceMatrix& b) {
  const std::size_t size = std::size_t{1} << b.m;
  std::vector<i128> dp(size, 0);
  dp[0] = 1;
  for (int i = 0; i < b.n; ++i) {
    for (std::size_t s = size - 1; s > 0; --s) {
      u64 rows = static_cast<u64>(s);
      i128 add = 0;
      while (rows) {
        int j = std::countr_zero(rows);
        rows &= rows - 1;
        if (b.entry(j, i)) add += dp[s & ~(u64{1} << j)];
      }
      dp[s] += add;
    }
  }
  return int_from_i128(dp[size - 1]);
}

Int binom_small(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Binet-Minc / Ryser inclusion-exclusion over column subsets; only used
// when 2^m DP tables would be too large (m >= 23, n <= 24).
Int permanent_ryser(const ResourceMatrix& b) {
  const u64 full = (u64{1} << b.n) - 1;
  std::vector<i128> coeff(b.n + 1);  // (-1)^(n-|S|) * C(n-|S|, n-m), sign folded
  for (int s = 0; s <= b.n; ++s) {
    Int c = binom_small(b.n - s, b.n - b.m);
    i128 cv = c.convert_to<long long>();
    coeff[s] = ((b.m - s) % 2 == 0) ? cv : -cv;
  }
  i128 total = 0;
  std::vector<int> rowsum(b.m, 0);
  u64 prev = 0;
  // Gray-code walk over column subsets keeps row sums incremental.
  for (u64 g = 1; g <= full; ++g) {
    u64 code = g ^ (g >> 1);
    u64 diff = code ^ prev;
    int col = std::countr_zero(diff);
    int delta = (code & diff) ? 1 : -1;
    for (int j = 0; j < b.m; ++j)
      if (b.entry(j, col)) rowsum[j] += delta;
    prev = code;
    i128 prod = 1;
    for (int j = 0; j < b.m; ++j) {
      prod *= rowsum[j];
      if (prod == 0) break;
    }
    total += coeff[std::popcount(code)] * prod;
  }
  return int_from_i128(total);
}

}  // namespace

Int permanent(const ResourceMatrix& b) {
  if (b.n > 24)
    throw SizeGuardError("exact permanent limited to n <= 24 units");
  if (b.m > b.n) return 0;
  for (int j = 0; j < b.m; ++j)
    if (b.row_mask[j] == 0) return 0;
  if (b.m <= 22) return permanent_subset_dp(b);
  return permanent_ryser(b);
}

Int flexibility_index(const SystemModel& model) {
  return permanent(resource_matrix(model));
}

std::vector<std::vector<int>> path_table(const std::vector<OperationalPath>& paths,
                                         const SystemModel& model) {
  std::vector<std::vector<int>> table;
  table.reserve(paths.size());
  for (const auto& p : paths) {
    std::vector<int> row(model.k_sigma(), 0);
    for (int f = 0; f < p.rank(); ++f) {
      int idx = model.var_index(p.unit_for_function[f], f);
      row[idx - 1] = 1;
    }
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace reconfrel
