#include "reconfrel/statespace.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "reconfrel/errors.hpp"
#include "reconfrel/rng.hpp"

namespace reconfrel {

namespace {
using u64 = std::uint64_t;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int effective_thread_count(int requested) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("RECONF_REL_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

OperabilityChecker::OperabilityChecker(const SystemModel& model)
    : m_(model.function_count()),
      n_(model.unit_count()),
      k_sigma_(model.k_sigma()) {
  for (const auto& v : model.variables()) {
    var_unit_.push_back(v.unit);
    var_function_.push_back(v.function);
  }
  fn_units_.assign(m_, 0);
  match_of_unit_.assign(n_, -1);
}

bool OperabilityChecker::augment(int function) const {
  u64 candidates = fn_units_[function] & ~visited_[0];
  while (candidates) {
    int u = std::countr_zero(candidates);
    candidates &= candidates - 1;
    visited_[0] |= u64{1} << u;
    if (match_of_unit_[u] < 0 || augment(match_of_unit_[u])) {
      match_of_unit_[u] = function;
      return true;
    }
    candidates = fn_units_[function] & ~visited_[0];
  }
  return false;
}

bool OperabilityChecker::is_operable(u64 alive_mask) const {
  if (std::popcount(alive_mask) < m_) return false;
  std::fill(fn_units_.begin(), fn_units_.end(), 0);
  u64 rest = alive_mask;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (i >= k_sigma_) break;
    fn_units_[var_function_[i]] |= u64{1} << var_unit_[i];
  }
  std::fill(match_of_unit_.begin(), match_of_unit_.end(), -1);
  visited_.assign(1, 0);
  for (int f = 0; f < m_; ++f) {
    visited_[0] = 0;
    if (!augment(f)) return false;
  }
  return true;
}

bool is_operable(u64 alive_mask, const SystemModel& model) {
  return OperabilityChecker(model).is_operable(alive_mask);
}

LevelTable level_table(const SystemModel& model, int max_states_log2,
                       int threads) {
  const int k = model.k_sigma();
  if (k > max_states_log2)
    throw SizeGuardError(
        "state enumeration needs 2^" + std::to_string(k) +
        " states (guard 2^" + std::to_string(max_states_log2) +
        "); consider the Monte Carlo estimator");

  const u64 states = u64{1} << k;
  const int workers =
      static_cast<int>(std::min<u64>(effective_thread_count(threads), states));
  std::vector<std::vector<u64>> counts(workers, std::vector<u64>(k + 1, 0));

  auto run = [&](int w) {
    OperabilityChecker checker(model);
    const u64 lo = states / workers * w + std::min<u64>(w, states % workers);
    const u64 hi = lo + states / workers + (static_cast<u64>(w) < states % workers);
    for (u64 s = lo; s < hi; ++s)
      if (checker.is_operable(s)) ++counts[w][k - std::popcount(s)];
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  LevelTable table;
  table.k_sigma = k;
  table.n_omega = Int(1) << k;
  table.n_reliable = 0;
  for (int gamma = 0; gamma <= k; ++gamma) {
    u64 nl = 0;
    for (int w = 0; w < workers; ++w) nl += counts[w][gamma];
    LevelRow row;
    row.gamma = gamma;
    row.n_states = binomial(k, gamma);
    row.n_operable = nl;
    row.g = Rat(row.n_operable, row.n_states);
    table.rows.push_back(row);
    table.n_reliable += nl;
  }
  table.eta = Rat(table.n_reliable, table.n_omega);
  return table;
}

int max_tolerated_failures(const LevelTable& table) {
  int best = -1;
  for (const auto& row : table.rows)
    if (row.n_operable > 0) best = row.gamma;
  return best;
}

MonteCarloResult monte_carlo_reliability(const SystemModel& model,
                                         const std::map<int, Rat>& probs,
                                         u64 samples, u64 seed, int threads) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const int k = model.k_sigma();

  // Exact 64-bit alive thresholds: alive iff next() < threshold[i].
  // p = 1 always draws alive, p = 0 never does.
  std::vector<u64> threshold(k);
  std::vector<bool> certain(k);
  for (int i = 1; i <= k; ++i) {
    auto it = probs.find(i);
    if (it == probs.end())
      throw std::invalid_argument("missing probability for variable " +
                                  model.variable_name(i));
    const Rat& p = it->second;
    if (p < 0 || p > 1)
      throw std::domain_error("probability outside [0,1]");
    certain[i - 1] = (p == 1);
    Int t = (numerator(p) << 64) / denominator(p);
    threshold[i - 1] = certain[i - 1] ? ~u64{0} : t.convert_to<u64>();
  }

  constexpr u64 kBlock = 1u << 16;
  const u64 blocks = (samples + kBlock - 1) / kBlock;
  const int workers =
      static_cast<int>(std::min<u64>(effective_thread_count(threads), blocks));

  std::atomic<u64> next_block{0};
  std::vector<u64> hits(workers, 0);
  auto run = [&](int w) {
    OperabilityChecker checker(model);
    for (;;) {
      const u64 b = next_block.fetch_add(1);
      if (b >= blocks) return;
      Xoshiro256 rng = Xoshiro256::stream(seed, b);
      const u64 lo = b * kBlock;
      const u64 hi = std::min(samples, lo + kBlock);
      for (u64 s = lo; s < hi; ++s) {
        u64 alive = 0;
        for (int i = 0; i < k; ++i) {
          const u64 u = rng.next();
          if (certain[i] || u < threshold[i]) alive |= u64{1} << i;
        }
        if (checker.is_operable(alive)) ++hits[w];
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  u64 total = 0;
  for (u64 h : hits) total += h;

  MonteCarloResult result;
  result.successes = total;
  result.samples = samples;
  result.estimate = Rat(Int(total), Int(samples));
  const double phat = result.estimate.convert_to<double>();
  result.std_error =
      std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
  return result;
}

}  // namespace reconfrel
