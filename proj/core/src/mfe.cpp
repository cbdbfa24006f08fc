#include "reconfrel/mfe.hpp"

#include <stdexcept>

#include "reconfrel/errors.hpp"

namespace reconfrel {

namespace {
using u64 = std::uint64_t;
}

MfeSpec make_mfe_spec(std::vector<Rat> probs) {
  if (probs.empty())
    throw std::invalid_argument("an MFE needs at least one function");
  for (const auto& p : probs)
    if (p < 0 || p > 1)
      throw std::domain_error("MFE probability outside [0,1]");
  return MfeSpec{std::move(probs)};
}

Rat mfe_state_probability(const MfeSpec& spec, u64 functioning_mask) {
  if (functioning_mask >> spec.k())
    throw std::out_of_range("functioning set references unknown function");
  Rat product = 1;
  for (int j = 0; j < spec.k(); ++j)
    product *= ((functioning_mask >> j) & 1u) ? spec.probs[j]
                                              : Rat(1 - spec.probs[j]);
  return product;
}

Rat mfe_reliability(const MfeSpec& spec) {
  Rat all_failed = 1;
  for (const auto& p : spec.probs) all_failed *= (1 - p);
  return 1 - all_failed;
}

std::vector<MfeState> mfe_state_table(const MfeSpec& spec) {
  const int k = spec.k();
  if (k > 20) throw SizeGuardError("MFE state table limited to k <= 20");
  std::vector<MfeState> out;
  out.reserve(std::size_t{1} << k);
  const u64 full = (u64{1} << k) - 1;
  for (u64 s = 0; s <= full; ++s) {
    // bit (k-j) of s marks function j as failed; flip to a functioning mask
    u64 failed = 0;
    for (int j = 1; j <= k; ++j)
      if ((s >> (k - j)) & 1u) failed |= u64{1} << (j - 1);
    u64 functioning = full & ~failed;
    out.push_back(MfeState{functioning, mfe_state_probability(spec, functioning)});
  }
  return out;
}

}  // namespace reconfrel
