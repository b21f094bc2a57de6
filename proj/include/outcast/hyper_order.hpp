#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "outcast/choice_function.hpp"
#include "outcast/subset.hpp"

namespace outcast {

class NotAPermutation : public std::invalid_argument {
 public:
  NotAPermutation(std::size_t index, std::int64_t value, const std::string& what)
      : std::invalid_argument(what), index_(index), value_(value) {}
  std::size_t index() const { return index_; }
  std::int64_t value() const { return value_; }

 private:
  std::size_t index_;
  std::int64_t value_;
};

/// Total order on 2^X stored as ranks: ranks[A] is A's position, 0 = least.
/// Finite, so every such order is also a well-order.
class HyperOrder {
 public:
  using Rank = std::uint32_t;

  /// Accepts raw_ranks iff it is a permutation of [0, 2^n). Reports the first
  /// index holding an out-of-range or repeated value.
  static HyperOrder validate(Universe universe, const std::vector<std::int64_t>& raw_ranks) {
    const std::size_t size = universe.powerset_size();
    if (raw_ranks.size() != size) {
      throw LengthMismatch("rank table has " + std::to_string(raw_ranks.size()) + " entries, expected " +
                           std::to_string(size));
    }
    std::vector<bool> used(size, false);
    std::vector<Rank> ranks(size);
    for (std::size_t i = 0; i < size; ++i) {
      const std::int64_t r = raw_ranks[i];
      if (r < 0 || static_cast<std::uint64_t>(r) >= size) {
        throw NotAPermutation(i, r, "rank " + std::to_string(r) + " at index " + std::to_string(i) +
                                        " is out of range [0, " + std::to_string(size) + ")");
      }
      if (used[static_cast<std::size_t>(r)]) {
        throw NotAPermutation(i, r, "rank " + std::to_string(r) + " at index " + std::to_string(i) +
                                        " is repeated");
      }
      used[static_cast<std::size_t>(r)] = true;
      ranks[i] = static_cast<Rank>(r);
    }
    return HyperOrder(std::move(universe), std::move(ranks));
  }

  /// Order listing `ascending` from least to greatest; must name each subset once.
  static HyperOrder from_sequence(Universe universe, const std::vector<SubsetId>& ascending) {
    std::vector<std::int64_t> raw(universe.powerset_size(), -1);
    if (ascending.size() != raw.size()) {
      throw LengthMismatch("sequence has " + std::to_string(ascending.size()) + " subsets, expected " +
                           std::to_string(raw.size()));
    }
    for (std::size_t pos = 0; pos < ascending.size(); ++pos) {
      const SubsetId s = ascending[pos];
      if (!universe.contains(s) || raw[s.index()] != -1) {
        throw NotAPermutation(pos, s.bits, "subset bitmask " + std::to_string(s.bits) +
                                               " is invalid or repeated in sequence");
      }
      raw[s.index()] = static_cast<std::int64_t>(pos);
    }
    return validate(std::move(universe), raw);
  }

  const Universe& universe() const { return universe_; }
  const std::vector<Rank>& ranks() const { return ranks_; }
  Rank rank(SubsetId a) const { return ranks_.at(a.index()); }
  bool less(SubsetId a, SubsetId b) const { return rank(a) < rank(b); }

  /// Subsets from least to greatest.
  std::vector<SubsetId> sequence() const {
    std::vector<SubsetId> out(ranks_.size());
    for (std::size_t i = 0; i < ranks_.size(); ++i) out[ranks_[i]] = SubsetId{static_cast<std::uint32_t>(i)};
    return out;
  }

  friend bool operator==(const HyperOrder&, const HyperOrder&) = default;

 private:
  HyperOrder(Universe universe, std::vector<Rank> ranks) : universe_(std::move(universe)), ranks_(std::move(ranks)) {}

  Universe universe_;
  std::vector<Rank> ranks_;
};

/// The greatest subset of `a` under `order`.
inline SubsetId choose_max(const HyperOrder& order, SubsetId a) {
  SubsetId best = kEmptySet;
  for_each_subset(a, [&](SubsetId b) {
    if (order.rank(b) > order.rank(best)) best = b;
  });
  return best;
}

/// f_≤ : A ↦ max{B | B ⊆ A}. Always a valid Outcast choice function.
inline ChoiceFunction induced_choice(const HyperOrder& order) {
  const auto& u = order.universe();
  std::vector<SubsetId> table;
  table.reserve(u.powerset_size());
  for (const SubsetId a : u.all_subsets()) table.push_back(choose_max(order, a));
  return ChoiceFunction::validate(u, std::move(table));
}

}  // namespace outcast
