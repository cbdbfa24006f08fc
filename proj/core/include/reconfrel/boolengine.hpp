#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reconfrel/flexibility.hpp"
#include "reconfrel/model.hpp"
#include "reconfrel/rational.hpp"

namespace reconfrel {

struct Literal {
  int var;  // 1-based variable index
  bool negated;
};

/// Elementary conjunction over up to 64 variables, as positive/negative
/// bitmasks (bit i = variable i+1). Contradictory combinations are never
/// representable as a stored term: construction rejects pos & neg overlap.
struct ConjTerm {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  int rank() const;
  bool positive_only() const { return neg == 0; }
  bool contains(Literal l) const;
  std::vector<Literal> literals() const;  // ascending variable index
  bool evaluates(std::uint64_t assignment) const {
    return (assignment & pos) == pos && (assignment & neg) == 0;
  }
  bool operator==(const ConjTerm&) const = default;
};

/// Two terms are orthogonal iff some variable appears with opposite
/// polarity in them (their conjunction is constant false).
bool orthogonal(const ConjTerm& a, const ConjTerm& b);

struct DnfForm {
  int k = 0;  // variable count
  std::vector<ConjTerm> terms;
  bool evaluates(std::uint64_t assignment) const;
};

/// A DNF whose terms are pairwise orthogonal, so term probabilities add.
struct OdnfForm {
  int k = 0;
  std::vector<ConjTerm> terms;
  bool evaluates(std::uint64_t assignment) const;
  /// Exact satisfying-assignment count: sum of 2^(k - rank) over terms.
  Int satisfying_count() const;
};

/// Operability function: one positive conjunction of rank m per path,
/// in path order. Throws InoperableError on an empty path list.
DnfForm build_operability_dnf(const std::vector<OperationalPath>& paths,
                              const SystemModel& model);

/// Negation of a positive conjunction as r pairwise-orthogonal terms:
/// x1' v x1 x2' v ... v x1...x_{r-1} xr' (variables ascending).
std::vector<ConjTerm> negate_conjunction(const ConjTerm& k);

/// Chain expansion K1 v K1'K2 v ... with factors skipped when the source
/// term is already orthogonal to the partial product, contradictions
/// dropped and duplicate terms merged. Input must be positive-only.
/// Terms are first ordered by rank, ties by sorted variable indices.
OdnfForm orthogonalize(const DnfForm& dnf);

bool verify_orthogonal(const OdnfForm& odnf);

/// Exhaustive truth-table comparison for k <= 24; above that, 10^5
/// seeded random assignments.
bool truth_equivalent(const DnfForm& a, const OdnfForm& b);

/// Exhaustive satisfying-assignment count of an arbitrary DNF (k <= 30).
Int dnf_satisfying_count(const DnfForm& dnf);

/// One term per line, positive variables only, e.g. "x1 x3".
DnfForm parse_dnf(const std::string& text);
std::string format_term(const ConjTerm& term);    // "x1 !x3 x4"
std::string format_form(const std::vector<ConjTerm>& terms);

}  // namespace reconfrel
