#include "reconfrel/boolengine.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "reconfrel/errors.hpp"
#include "reconfrel/rng.hpp"

namespace reconfrel {

namespace {
using u64 = std::uint64_t;

u64 bit(int var) { return u64{1} << (var - 1); }
}  // namespace

int ConjTerm::rank() const { return std::popcount(pos | neg); }

bool ConjTerm::contains(Literal l) const {
  return ((l.negated ? neg : pos) >> (l.var - 1)) & 1u;
}

std::vector<Literal> ConjTerm::literals() const {
  std::vector<Literal> out;
  u64 all = pos | neg;
  while (all) {
    int v = std::countr_zero(all) + 1;
    all &= all - 1;
    out.push_back(Literal{v, ((neg >> (v - 1)) & 1u) != 0});
  }
  return out;
}

bool orthogonal(const ConjTerm& a, const ConjTerm& b) {
  return ((a.pos & b.neg) | (a.neg & b.pos)) != 0;
}

bool DnfForm::evaluates(u64 assignment) const {
  for (const auto& t : terms)
    if (t.evaluates(assignment)) return true;
  return false;
}

bool OdnfForm::evaluates(u64 assignment) const {
  for (const auto& t : terms)
    if (t.evaluates(assignment)) return true;
  return false;
}

Int OdnfForm::satisfying_count() const {
  Int total = 0;
  for (const auto& t : terms) total += Int(1) << (k - t.rank());
  return total;
}

DnfForm build_operability_dnf(const std::vector<OperationalPath>& paths,
                              const SystemModel& model) {
  if (paths.empty())
    throw InoperableError("system inoperable by construction: no paths");
  DnfForm dnf;
  dnf.k = model.k_sigma();
  for (const auto& p : paths) {
    ConjTerm t;
    for (int f = 0; f < p.rank(); ++f)
      t.pos |= bit(model.var_index(p.unit_for_function[f], f));
    dnf.terms.push_back(t);
  }
  return dnf;
}

std::vector<ConjTerm> negate_conjunction(const ConjTerm& k) {
  if (k.neg != 0)
    throw std::invalid_argument("negate_conjunction needs a positive-only term");
  std::vector<ConjTerm> out;
  u64 prefix = 0;
  u64 vars = k.pos;
  while (vars) {
    int v = std::countr_zero(vars) + 1;
    vars &= vars - 1;
    out.push_back(ConjTerm{prefix, bit(v)});
    prefix |= bit(v);
  }
  return out;
}

namespace {

// Sort key: rank first, then the sorted variable-index sequence.
bool term_order(const ConjTerm& a, const ConjTerm& b) {
  int ra = a.rank(), rb = b.rank();
  if (ra != rb) return ra < rb;
  u64 va = a.pos, vb = b.pos;
  while (va && vb) {
    int xa = std::countr_zero(va), xb = std::countr_zero(vb);
    if (xa != xb) return xa < xb;
    va &= va - 1;
    vb &= vb - 1;
  }
  return false;
}

}  // namespace

OdnfForm orthogonalize(const DnfForm& dnf) {
  for (const auto& t : dnf.terms)
    if (!t.positive_only())
      throw std::invalid_argument("orthogonalize needs a positive-only DNF");

  std::vector<ConjTerm> ordered = dnf.terms;
  std::stable_sort(ordered.begin(), ordered.end(), term_order);
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  OdnfForm odnf;
  odnf.k = dnf.k;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    // Expand K_1'...K_{i-1}' K_i, one negated factor at a time.
    std::vector<ConjTerm> partial{ordered[i]};
    for (std::size_t j = 0; j < i && !partial.empty(); ++j) {
      std::vector<ConjTerm> next;
      for (const auto& p : partial) {
        if (orthogonal(ordered[j], p)) {
          next.push_back(p);  // K_j already contradicts p; factor is 1 here
          continue;
        }
        for (const auto& njt : negate_conjunction(ordered[j])) {
          if (((p.pos & njt.neg) | (p.neg & njt.pos)) != 0) continue;  // contradiction
          next.push_back(ConjTerm{p.pos | njt.pos, p.neg | njt.neg});
        }
      }
      partial = std::move(next);
    }
    for (const auto& t : partial) {
      if (std::find(odnf.terms.begin(), odnf.terms.end(), t) == odnf.terms.end())
        odnf.terms.push_back(t);
    }
  }
  return odnf;
}

bool verify_orthogonal(const OdnfForm& odnf) {
  for (std::size_t i = 0; i < odnf.terms.size(); ++i)
    for (std::size_t j = i + 1; j < odnf.terms.size(); ++j)
      if (!orthogonal(odnf.terms[i], odnf.terms[j])) return false;
  return true;
}

bool truth_equivalent(const DnfForm& a, const OdnfForm& b) {
  int k = std::max(a.k, b.k);
  if (k <= 24) {
    const u64 states = u64{1} << k;
    for (u64 s = 0; s < states; ++s)
      if (a.evaluates(s) != b.evaluates(s)) return false;
    return true;
  }
  Xoshiro256 rng(0x7265636f6e66ULL);
  const u64 mask = (k == 64) ? ~u64{0} : (u64{1} << k) - 1;
  for (int i = 0; i < 100'000; ++i) {
    u64 s = rng.next() & mask;
    if (a.evaluates(s) != b.evaluates(s)) return false;
  }
  return true;
}

Int dnf_satisfying_count(const DnfForm& dnf) {
  if (dnf.k > 30) throw SizeGuardError("exhaustive DNF count limited to k <= 30");
  Int count = 0;
  const u64 states = u64{1} << dnf.k;
  for (u64 s = 0; s < states; ++s)
    if (dnf.evaluates(s)) ++count;
  return count;
}

DnfForm parse_dnf(const std::string& text) {
  DnfForm dnf;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    ConjTerm t;
    bool any = false;
    while (ls >> tok) {
      if (tok[0] == '!')
        throw ParseError("negated literals are not accepted in DNF input", lineno);
      if (tok[0] != 'x')
        throw ParseError("expected variable like x3, got '" + tok + "'", lineno);
      int v = 0;
      try {
        v = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        v = 0;
      }
      if (v < 1 || v > 64)
        throw ParseError("variable index out of range in '" + tok + "'", lineno);
      t.pos |= bit(v);
      any = true;
      dnf.k = std::max(dnf.k, v);
    }
    if (any) dnf.terms.push_back(t);
  }
  return dnf;
}

std::string format_term(const ConjTerm& term) {
  std::string out;
  for (const auto& l : term.literals()) {
    if (!out.empty()) out += " ";
    if (l.negated) out += "!";
    out += "x" + std::to_string(l.var);
  }
  return out.empty() ? "1" : out;
}

std::string format_form(const std::vector<ConjTerm>& terms) {
  std::string out;
  for (const auto& t : terms) out += format_term(t) + "\n";
  return out;
}

}  // namespace reconfrel
