#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "outcast/choice_function.hpp"
#include "outcast/hyper_order.hpp"
#include "outcast/subset.hpp"

namespace outcast {

class HeadNotInDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UniverseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an Outcast function admits no representing order. `cycle`
/// lists fixpoints F0, F1, ..., Fk where each must rank below the next and
/// Fk below F0.
class NotRepresentable : public std::runtime_error {
 public:
  NotRepresentable(std::vector<SubsetId> cycle, const std::string& what)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  const std::vector<SubsetId>& cycle() const { return cycle_; }

 private:
  std::vector<SubsetId> cycle_;
};

/// How fixpoints are linearly ordered before domains are concatenated.
enum class FixpointOrdering {
  /// Topological sort of F(B) -> F(A) for B ⊆ A, canonical-key tie-break.
  /// Succeeds exactly when some hyper-order induces f.
  revealed,
  /// Canonical-key sort: extends ⊆ on fixpoints and nothing more. Can
  /// produce an order whose induced choice differs from f.
  subset_only,
};

struct SynthesisTrace {
  std::vector<SubsetId> fixpoint_sequence;
  std::map<SubsetId, std::vector<SubsetId>> domain_sequences;  // each ends with its key
  HyperOrder order;
};

/// Fixpoints sorted by canonical key, a linear extension of ⊆.
inline std::vector<SubsetId> fixpoint_order(std::vector<SubsetId> fixpoint_set) {
  sort_canonical(fixpoint_set);
  return fixpoint_set;
}

/// Non-head members by canonical key, then the head, so the head is the
/// domain maximum.
inline std::vector<SubsetId> domain_order(const std::vector<SubsetId>& members, SubsetId head) {
  if (std::find(members.begin(), members.end(), head) == members.end()) {
    throw HeadNotInDomain("head bitmask " + std::to_string(head.bits) + " is not a member of its domain");
  }
  std::vector<SubsetId> out;
  out.reserve(members.size());
  for (const SubsetId m : members) {
    if (m != head) out.push_back(m);
  }
  sort_canonical(out);
  out.push_back(head);
  return out;
}

namespace detail {

// Edges f(A \ {x}) -> f(A). Any B ⊆ A is reached by a chain of single
// removals, so the transitive closure covers every pair B ⊆ A.
inline std::map<SubsetId, std::set<SubsetId>> revealed_successors(const ChoiceFunction& f,
                                                                  const std::vector<SubsetId>& fps) {
  std::map<SubsetId, std::set<SubsetId>> succ;
  for (const SubsetId fp : fps) succ[fp];
  const int n = f.universe().n();
  for (const SubsetId a : f.universe().all_subsets()) {
    for (int i = 0; i < n; ++i) {
      const std::uint32_t bit = 1u << i;
      if (!(a.bits & bit)) continue;
      const SubsetId lower = f(SubsetId{a.bits & ~bit});
      const SubsetId upper = f(a);
      if (lower != upper) succ.at(lower).insert(upper);
    }
  }
  return succ;
}

inline std::vector<SubsetId> find_cycle(const std::map<SubsetId, std::set<SubsetId>>& succ,
                                        const std::set<SubsetId>& remaining) {
  // Nodes Kahn could not emit each keep a predecessor among themselves, so
  // walking predecessors must revisit a node.
  std::map<SubsetId, SubsetId> pred_of;
  for (const auto& [from, tos] : succ) {
    if (!remaining.count(from)) continue;
    for (const SubsetId to : tos) {
      if (remaining.count(to) && !pred_of.count(to)) pred_of[to] = from;
    }
  }
  std::map<SubsetId, std::size_t> seen_at;
  std::vector<SubsetId> walk;
  SubsetId cur = *remaining.begin();
  while (!seen_at.count(cur)) {
    seen_at[cur] = walk.size();
    walk.push_back(cur);
    cur = pred_of.at(cur);
  }
  std::vector<SubsetId> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at.at(cur)), walk.end());
  // walked backwards along edges
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace detail

/// Linear order on the fixpoints of an Outcast f placing f(B) before f(A)
/// whenever B ⊆ A. Ties are broken by canonical key. Throws NotRepresentable
/// with a witnessing cycle when no such order exists.
inline std::vector<SubsetId> revealed_fixpoint_order(const ChoiceFunction& f) {
  const auto fps = fixpoints(f);
  const auto succ = detail::revealed_successors(f, fps);
  std::map<SubsetId, int> indegree;
  for (const SubsetId fp : fps) indegree[fp] = 0;
  for (const auto& [from, tos] : succ) {
    for (const SubsetId to : tos) ++indegree.at(to);
  }
  auto later = [](SubsetId a, SubsetId b) { return CanonicalLess{}(b, a); };
  std::priority_queue<SubsetId, std::vector<SubsetId>, decltype(later)> ready(later);
  for (const auto& [fp, deg] : indegree) {
    if (deg == 0) ready.push(fp);
  }
  std::vector<SubsetId> out;
  while (!ready.empty()) {
    const SubsetId cur = ready.top();
    ready.pop();
    out.push_back(cur);
    for (const SubsetId next : succ.at(cur)) {
      if (--indegree.at(next) == 0) ready.push(next);
    }
  }
  if (out.size() != fps.size()) {
    std::set<SubsetId> remaining(fps.begin(), fps.end());
    for (const SubsetId s : out) remaining.erase(s);
    auto cycle = detail::find_cycle(succ, remaining);
    std::string msg = "no hyper-order induces this choice function; fixpoints must rank ";
    for (const SubsetId s : cycle) msg += f.universe().format(s) + " < ";
    msg += f.universe().format(cycle.front());
    throw NotRepresentable(std::move(cycle), msg);
  }
  return out;
}

/// Builds a hyper-order from an Outcast choice function: order the
/// fixpoints, order each domain with its fixpoint last, then concatenate the
/// domains in fixpoint order and rank consecutively.
inline SynthesisTrace synthesize_order(const ChoiceFunction& f,
                                       FixpointOrdering ordering = FixpointOrdering::revealed) {
  const DomainPartition parts = domains(f);
  std::vector<SubsetId> fixpoint_sequence = ordering == FixpointOrdering::revealed
                                                ? revealed_fixpoint_order(f)
                                                : fixpoint_order(parts.fixpoints);
  std::map<SubsetId, std::vector<SubsetId>> domain_sequences;
  std::vector<SubsetId> ascending;
  ascending.reserve(f.universe().powerset_size());
  for (const SubsetId fp : fixpoint_sequence) {
    auto seq = domain_order(parts.domain_of(fp), fp);
    ascending.insert(ascending.end(), seq.begin(), seq.end());
    domain_sequences.emplace(fp, std::move(seq));
  }
  return SynthesisTrace{std::move(fixpoint_sequence), std::move(domain_sequences),
                        HyperOrder::from_sequence(f.universe(), ascending)};
}

/// nullopt iff induced_choice(order) = f; otherwise the canonically
/// smallest A where they differ.
inline std::optional<SubsetId> verify_representation(const ChoiceFunction& f, const HyperOrder& order) {
  if (!(f.universe() == order.universe())) {
    throw UniverseMismatch("choice function and order are over different universes");
  }
  for (const SubsetId a : f.universe().canonical_subsets()) {
    if (choose_max(order, a) != f(a)) return a;
  }
  return std::nullopt;
}

}  // namespace outcast
