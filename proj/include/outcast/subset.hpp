#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace outcast {

/// Subset of a finite universe; bit i set means element i is a member.
struct SubsetId {
  std::uint32_t bits = 0;

  constexpr SubsetId() = default;
  constexpr explicit SubsetId(std::uint32_t b) : bits(b) {}

  constexpr std::size_t index() const { return bits; }
  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }

  friend constexpr bool operator==(SubsetId, SubsetId) = default;
  friend constexpr auto operator<=>(SubsetId, SubsetId) = default;

  friend constexpr SubsetId operator&(SubsetId a, SubsetId b) { return SubsetId{a.bits & b.bits}; }
  friend constexpr SubsetId operator|(SubsetId a, SubsetId b) { return SubsetId{a.bits | b.bits}; }
  /// Set difference a \ b.
  friend constexpr SubsetId operator-(SubsetId a, SubsetId b) { return SubsetId{a.bits & ~b.bits}; }
};

inline constexpr SubsetId kEmptySet{};

constexpr bool is_subset(SubsetId b, SubsetId a) { return (b.bits & ~a.bits) == 0; }

/// Sort key (|A|, bits). Lexicographic order on keys is total and refines
/// strict inclusion: B ⊂ A implies key(B) < key(A).
struct CanonicalKey {
  int cardinality = 0;
  std::uint32_t bits = 0;
  friend constexpr auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

constexpr CanonicalKey canonical_key(SubsetId a) { return {a.cardinality(), a.bits}; }

struct CanonicalLess {
  constexpr bool operator()(SubsetId a, SubsetId b) const { return canonical_key(a) < canonical_key(b); }
};

inline void sort_canonical(std::vector<SubsetId>& xs) { std::sort(xs.begin(), xs.end(), CanonicalLess{}); }

/// Calls fn(B) for every B ⊆ a in ascending bit order.
template <typename Fn>
constexpr void for_each_subset(SubsetId a, Fn&& fn) {
  std::uint32_t s = 0;
  while (true) {
    fn(SubsetId{s});
    if (s == a.bits) break;
    // next submask of a in increasing numeric order
    s = ((s | ~a.bits) + 1u) & a.bits;
  }
}

inline std::vector<SubsetId> subsets_of(SubsetId a) {
  std::vector<SubsetId> out;
  out.reserve(std::size_t{1} << a.cardinality());
  for_each_subset(a, [&](SubsetId b) { out.push_back(b); });
  return out;
}

class UniverseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite base set with labelled elements. Element i is bit i.
class Universe {
 public:
  static constexpr int kMaxElements = 16;

  Universe() = default;

  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > static_cast<std::size_t>(kMaxElements)) {
      throw UniverseError("universe has " + std::to_string(names_.size()) + " elements, limit is " +
                          std::to_string(kMaxElements));
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
      if (!seen.insert(name).second) throw UniverseError("duplicate element name '" + name + "'");
    }
  }

  /// Universe {a, b, c, ...} with n single-letter (then indexed) labels.
  static Universe with_size(int n) {
    if (n < 0) throw UniverseError("negative universe size");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
      names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    }
    return Universe(std::move(names));
  }

  int n() const { return static_cast<int>(names_.size()); }
  /// Number of subsets, 2^n.
  std::size_t powerset_size() const { return std::size_t{1} << names_.size(); }
  SubsetId full() const { return SubsetId{static_cast<std::uint32_t>(powerset_size() - 1)}; }
  bool contains(SubsetId a) const { return a.index() < powerset_size(); }
  const std::vector<std::string>& names() const { return names_; }

  /// Every subset, ascending by bits.
  std::vector<SubsetId> all_subsets() const { return subsets_of(full()); }

  /// Every subset, ascending by canonical key.
  std::vector<SubsetId> canonical_subsets() const {
    auto xs = all_subsets();
    sort_canonical(xs);
    return xs;
  }

  /// "{a,b}" style rendering in bit order.
  std::string format(SubsetId a) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n(); ++i) {
      if (a.bits & (1u << i)) {
        if (!first) out += ',';
        out += names_[static_cast<std::size_t>(i)];
        first = false;
      }
    }
    return out + "}";
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace outcast
