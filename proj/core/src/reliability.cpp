#include "reconfrel/reliability.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "reconfrel/errors.hpp"

namespace reconfrel {

namespace {
using u64 = std::uint64_t;

void trim(std::vector<Int>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

// Adds coeff * p^a * (1-p)^b into acc (binomial expansion).
void accumulate_term(std::vector<Int>& acc, const Int& coeff, int a, int b) {
  if (static_cast<int>(acc.size()) < a + b + 1) acc.resize(a + b + 1, 0);
  Int binom = 1;
  for (int i = 0; i <= b; ++i) {
    Int contribution = coeff * binom;
    acc[a + i] += (i % 2 == 0) ? contribution : -contribution;
    binom = binom * (b - i) / (i + 1);
  }
}

}  // namespace

int ReliabilityPolynomial::degree() const {
  for (int d = static_cast<int>(coefficients.size()) - 1; d >= 0; --d)
    if (coefficients[d] != 0) return d;
  return 0;
}

std::string ReliabilityPolynomial::render(bool ascending) const {
  std::vector<int> powers;
  for (int d = 0; d < static_cast<int>(coefficients.size()); ++d)
    if (coefficients[d] != 0) powers.push_back(d);
  if (powers.empty()) return "0";
  if (!ascending) std::reverse(powers.begin(), powers.end());

  std::string out;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    const int d = powers[i];
    Int c = coefficients[d];
    const bool neg = c < 0;
    if (neg) c = -c;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (c != 1 || d == 0) out += c.str();
    if (d > 0) {
      if (c != 1) out += " ";
      out += "p";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::vector<std::string> ReliabilityPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coefficients) out.push_back(c.str());
  return out;
}

Rat odnf_probability(const OdnfForm& odnf, const std::map<int, Rat>& probs) {
  if (!verify_orthogonal(odnf))
    throw std::invalid_argument(
        "odnf_probability requires pairwise-orthogonal terms");
  Rat total = 0;
  for (const auto& term : odnf.terms) {
    Rat product = 1;
    for (const auto& lit : term.literals()) {
      auto it = probs.find(lit.var);
      if (it == probs.end())
        throw std::invalid_argument("missing probability for variable x" +
                                    std::to_string(lit.var));
      product *= lit.negated ? Rat(1 - it->second) : it->second;
    }
    total += product;
  }
  return total;
}

ReliabilityPolynomial odnf_polynomial(const OdnfForm& odnf) {
  if (!verify_orthogonal(odnf))
    throw std::invalid_argument(
        "odnf_polynomial requires pairwise-orthogonal terms");
  std::vector<Int> acc(1, 0);
  for (const auto& term : odnf.terms)
    accumulate_term(acc, 1, std::popcount(term.pos), std::popcount(term.neg));
  trim(acc);
  return ReliabilityPolynomial{std::move(acc)};
}

ReliabilityPolynomial polynomial_from_levels(const LevelTable& levels) {
  if (static_cast<int>(levels.rows.size()) != levels.k_sigma + 1)
    throw std::invalid_argument("incomplete level table");
  std::vector<Int> acc(1, 0);
  for (const auto& row : levels.rows)
    accumulate_term(acc, row.n_operable, levels.k_sigma - row.gamma, row.gamma);
  trim(acc);
  return ReliabilityPolynomial{std::move(acc)};
}

Rat evaluate(const ReliabilityPolynomial& poly, const Rat& p) {
  if (p < 0 || p > 1)
    throw std::domain_error("p must lie in [0,1]");
  Rat acc = 0;
  for (int d = static_cast<int>(poly.coefficients.size()) - 1; d >= 0; --d)
    acc = acc * p + poly.coefficients[d];
  return acc;
}

Rat system_reliability_expansion(const SystemModel& model,
                                 const std::map<int, Rat>& probs) {
  const int k = model.k_sigma();
  if (k > 30)
    throw SizeGuardError("state-space expansion limited to k_sigma <= 30");
  std::vector<Rat> p(k);
  for (int i = 1; i <= k; ++i) {
    auto it = probs.find(i);
    if (it == probs.end())
      throw std::invalid_argument("missing probability for variable " +
                                  model.variable_name(i));
    p[i - 1] = it->second;
  }
  OperabilityChecker checker(model);
  Rat total = 0;
  const u64 states = u64{1} << k;
  for (u64 s = 0; s < states; ++s) {
    if (!checker.is_operable(s)) continue;
    Rat product = 1;
    for (int i = 0; i < k; ++i)
      product *= ((s >> i) & 1u) ? p[i] : Rat(1 - p[i]);
    total += product;
  }
  return total;
}

Rat dnf_state_sum(const DnfForm& dnf, const std::map<int, Rat>& probs) {
  if (dnf.k > 30)
    throw SizeGuardError("state-space sum limited to k <= 30");
  std::vector<Rat> p(dnf.k);
  for (int i = 1; i <= dnf.k; ++i) {
    auto it = probs.find(i);
    if (it == probs.end())
      throw std::invalid_argument("missing probability for variable x" +
                                  std::to_string(i));
    p[i - 1] = it->second;
  }
  Rat total = 0;
  const u64 states = u64{1} << dnf.k;
  for (u64 s = 0; s < states; ++s) {
    if (!dnf.evaluates(s)) continue;
    Rat product = 1;
    for (int i = 0; i < dnf.k; ++i)
      product *= ((s >> i) & 1u) ? p[i] : Rat(1 - p[i]);
    total += product;
  }
  return total;
}

}  // namespace reconfrel
