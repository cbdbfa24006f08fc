#pragma once

#include <map>
#include <string>
#include <vector>

#include "reconfrel/boolengine.hpp"
#include "reconfrel/rational.hpp"
#include "reconfrel/statespace.hpp"

namespace reconfrel {

/// Exact integer-coefficient polynomial in p; coefficients[d] scales p^d.
struct ReliabilityPolynomial {
  std::vector<Int> coefficients;

  int degree() const;
  bool operator==(const ReliabilityPolynomial&) const = default;

  /// "c p^d" terms joined by " + "/" - ", ascending or descending powers.
  std::string render(bool ascending = true) const;
  /// JSON array of decimal coefficient strings, index = power.
  std::vector<std::string> coefficient_strings() const;
};

/// Sum of disjoint products: per orthogonal term, product of R_i over
/// positive literals times (1 - R_i) over negated ones.
/// Rejects non-orthogonal input and incomplete probability maps.
Rat odnf_probability(const OdnfForm& odnf, const std::map<int, Rat>& probs);

/// Equal-p polynomial of an ODNF: each term contributes p^a (1-p)^b,
/// binomially expanded in exact integers.
ReliabilityPolynomial odnf_polynomial(const OdnfForm& odnf);

/// P = sum over gamma of N_L(gamma) p^(k_sigma - gamma) (1 - p)^gamma.
ReliabilityPolynomial polynomial_from_levels(const LevelTable& levels);

/// Exact Horner evaluation; p must lie in [0,1].
Rat evaluate(const ReliabilityPolynomial& poly, const Rat& p);

/// Direct state-space sum: over every operable alive-state, the product
/// of p_i (alive) and 1-p_i (failed). Independent oracle for the ODNF
/// route. Guarded at k_sigma <= 30.
Rat system_reliability_expansion(const SystemModel& model,
                                 const std::map<int, Rat>& probs);

/// Same state-space sum for an arbitrary DNF (k <= 30): covers structures
/// that are not matching models.
Rat dnf_state_sum(const DnfForm& dnf, const std::map<int, Rat>& probs);

}  // namespace reconfrel
