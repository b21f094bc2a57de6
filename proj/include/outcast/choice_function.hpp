#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "outcast/subset.hpp"

namespace outcast {

class ChoiceViolation : public std::invalid_argument {
 public:
  ChoiceViolation(SubsetId subset, SubsetId chosen, const std::string& what)
      : std::invalid_argument(what), subset_(subset), chosen_(chosen) {}
  SubsetId subset() const { return subset_; }
  SubsetId chosen() const { return chosen_; }

 private:
  SubsetId subset_;
  SubsetId chosen_;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pair with f(a) ⊆ b ⊆ a and f(a) != f(b).
struct OutcastWitness {
  SubsetId a;
  SubsetId b;
  friend bool operator==(const OutcastWitness&, const OutcastWitness&) = default;
};

class NotOutcast : public std::runtime_error {
 public:
  NotOutcast(OutcastWitness w, const std::string& what) : std::runtime_error(what), witness_(w) {}
  const OutcastWitness& witness() const { return witness_; }

 private:
  OutcastWitness witness_;
};

/// Total map f : 2^X -> 2^X with f(A) ⊆ A. Only constructible through validate().
class ChoiceFunction {
 public:
  /// Checks length and the choice condition; reports the first offending
  /// subset in ascending bit order.
  static ChoiceFunction validate(Universe universe, std::vector<SubsetId> table) {
    if (table.size() != universe.powerset_size()) {
      throw LengthMismatch("choice table has " + std::to_string(table.size()) + " entries, expected " +
                           std::to_string(universe.powerset_size()));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      const SubsetId a{static_cast<std::uint32_t>(i)};
      if (!is_subset(table[i], a)) {
        throw ChoiceViolation(a, table[i],
                              "choice for " + universe.format(a) + " is not a subset of it (got bitmask " +
                                  std::to_string(table[i].bits) + ")");
      }
    }
    return ChoiceFunction(std::move(universe), std::move(table));
  }

  static ChoiceFunction identity(Universe universe) {
    auto table = universe.all_subsets();
    return ChoiceFunction(std::move(universe), std::move(table));
  }

  static ChoiceFunction constant_empty(Universe universe) {
    std::vector<SubsetId> table(universe.powerset_size(), kEmptySet);
    return ChoiceFunction(std::move(universe), std::move(table));
  }

  SubsetId operator()(SubsetId a) const { return table_.at(a.index()); }
  const Universe& universe() const { return universe_; }
  const std::vector<SubsetId>& table() const { return table_; }

  friend bool operator==(const ChoiceFunction&, const ChoiceFunction&) = default;

 private:
  ChoiceFunction(Universe universe, std::vector<SubsetId> table)
      : universe_(std::move(universe)), table_(std::move(table)) {}

  Universe universe_;
  std::vector<SubsetId> table_;
};

/// Decides Outcast: f(A) ⊆ B ⊆ A must imply f(A) = f(B).
///
/// Returns nullopt on pass, otherwise the violation minimizing
/// (canonical_key(a), canonical_key(b)). A is scanned in canonical order, so
/// the first A with any violation is the minimal one; among its violating B
/// the canonically smallest is kept.
inline std::optional<OutcastWitness> check_outcast(const ChoiceFunction& f) {
  for (const SubsetId a : f.universe().canonical_subsets()) {
    const SubsetId chosen = f(a);
    std::optional<SubsetId> best;
    // B = f(A) ∪ S for S ⊆ A \ f(A)
    for_each_subset(a - chosen, [&](SubsetId extra) {
      const SubsetId b = chosen | extra;
      if (f(b) != chosen && (!best || CanonicalLess{}(b, *best))) best = b;
    });
    if (best) return OutcastWitness{a, *best};
  }
  return std::nullopt;
}

inline bool is_outcast(const ChoiceFunction& f) { return !check_outcast(f).has_value(); }

/// Every A with f(A) = A, sorted by canonical key.
inline std::vector<SubsetId> fixpoints(const ChoiceFunction& f) {
  std::vector<SubsetId> out;
  for (const SubsetId a : f.universe().all_subsets()) {
    if (f(a) == a) out.push_back(a);
  }
  sort_canonical(out);
  return out;
}

inline bool is_idempotent(const ChoiceFunction& f) {
  for (const SubsetId a : f.universe().all_subsets()) {
    if (f(f(a)) != f(a)) return false;
  }
  return true;
}

/// Fibers of an Outcast choice function, keyed by fixpoint.
struct DomainPartition {
  std::vector<SubsetId> fixpoints;                      // canonical order
  std::map<SubsetId, std::vector<SubsetId>> members;    // each list ascending by bits

  const std::vector<SubsetId>& domain_of(SubsetId fixpoint) const { return members.at(fixpoint); }
};

/// Partitions 2^X into the fibers {B | f(B) = F}. Requires Outcast, which
/// makes every value of f a fixpoint.
inline DomainPartition domains(const ChoiceFunction& f) {
  if (const auto w = check_outcast(f)) {
    const auto& u = f.universe();
    throw NotOutcast(*w, "choice function violates Outcast at A=" + u.format(w->a) + ", B=" + u.format(w->b));
  }
  DomainPartition out;
  out.fixpoints = fixpoints(f);
  for (const SubsetId fp : out.fixpoints) out.members[fp];
  for (const SubsetId b : f.universe().all_subsets()) out.members.at(f(b)).push_back(b);
  return out;
}

}  // namespace outcast
