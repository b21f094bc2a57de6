#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "outcast/choice_function.hpp"
#include "outcast/hyper_order.hpp"
#include "outcast/subset.hpp"

namespace outcast {

class UniverseTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest n for which exhaustive enumeration is allowed.
inline constexpr int kMaxExhaustiveN = 3;

namespace detail {
inline void require_exhaustive(int n) {
  if (n < 0 || n > kMaxExhaustiveN) {
    throw UniverseTooLarge("exhaustive enumeration needs 0 <= n <= " + std::to_string(kMaxExhaustiveN) +
                           ", got " + std::to_string(n));
  }
}
}  // namespace detail

/// Every choice function on an n-element universe, once each. Mixed-radix
/// counter: subset A's digit walks the submasks of A in ascending order, and
/// A = 0 is the least significant position.
class ChoiceFunctionStream {
 public:
  explicit ChoiceFunctionStream(int n) : universe_((detail::require_exhaustive(n), Universe::with_size(n))) {
    for (const SubsetId a : universe_.all_subsets()) options_.push_back(subsets_of(a));
    digits_.assign(options_.size(), 0);
  }

  std::optional<ChoiceFunction> next() {
    if (done_) return std::nullopt;
    std::vector<SubsetId> table(options_.size());
    for (std::size_t i = 0; i < options_.size(); ++i) table[i] = options_[i][digits_[i]];
    advance();
    return ChoiceFunction::validate(universe_, std::move(table));
  }

 private:
  void advance() {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (++digits_[i] < options_[i].size()) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

  Universe universe_;
  std::vector<std::vector<SubsetId>> options_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

/// Every rank permutation of [0, 2^n), lexicographically.
class OrderStream {
 public:
  explicit OrderStream(int n) : universe_((detail::require_exhaustive(n), Universe::with_size(n))) {
    ranks_.resize(universe_.powerset_size());
    std::iota(ranks_.begin(), ranks_.end(), std::int64_t{0});
  }

  /// Restricts the stream to permutations whose first rank is `leading`.
  OrderStream(int n, std::int64_t leading) : OrderStream(n) {
    std::rotate(ranks_.begin(), ranks_.begin() + leading, ranks_.begin() + leading + 1);
    leading_ = leading;
  }

  std::optional<HyperOrder> next() {
    if (done_) return std::nullopt;
    auto order = HyperOrder::validate(universe_, ranks_);
    done_ = !std::next_permutation(ranks_.begin(), ranks_.end()) || (leading_ && ranks_.front() != *leading_);
    return order;
  }

 private:
  Universe universe_;
  std::vector<std::int64_t> ranks_;
  std::optional<std::int64_t> leading_;
  bool done_ = false;
};

namespace detail {
// Unbiased draw in [0, bound) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so seeds reproduce across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}
}  // namespace detail

/// Uniform random hyper-order, reproducible from (n, seed).
inline HyperOrder random_order(int n, std::uint64_t seed) {
  if (n < 0 || n > Universe::kMaxElements) {
    throw UniverseTooLarge("random_order needs 0 <= n <= " + std::to_string(Universe::kMaxElements) + ", got " +
                           std::to_string(n));
  }
  auto universe = Universe::with_size(n);
  std::vector<std::int64_t> ranks(universe.powerset_size());
  std::iota(ranks.begin(), ranks.end(), std::int64_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = ranks.size(); i > 1; --i) {
    std::swap(ranks[i - 1], ranks[detail::bounded(rng, i)]);
  }
  return HyperOrder::validate(std::move(universe), ranks);
}

struct CensusReport {
  int n = 0;
  std::uint64_t total_choice_functions = 0;
  std::uint64_t outcast_count = 0;
  std::uint64_t total_orders = 0;
  std::uint64_t induced_distinct = 0;
  bool directions_hold = false;
  /// Outcast functions that no order induces (tables, ascending).
  std::vector<std::vector<SubsetId>> outcast_not_induced;
};

/// Exhaustive comparison of Outcast functions against order-induced ones.
/// Orders are split into chunks by leading rank, one chunk per task; the
/// merged set does not depend on the thread count.
inline CensusReport theorem_census(int n, unsigned threads = 1) {
  detail::require_exhaustive(n);
  using Table = std::vector<SubsetId>;

  CensusReport report;
  report.n = n;

  std::set<Table> outcast;
  ChoiceFunctionStream functions(n);
  while (auto f = functions.next()) {
    ++report.total_choice_functions;
    if (is_outcast(*f)) outcast.insert(f->table());
  }
  report.outcast_count = outcast.size();

  const auto size = static_cast<std::int64_t>(std::size_t{1} << n);
  std::vector<std::set<Table>> induced_parts(static_cast<std::size_t>(size));
  std::vector<std::uint64_t> order_counts(static_cast<std::size_t>(size), 0);
  auto run_chunk = [&](std::int64_t leading) {
    OrderStream orders(n, leading);
    auto& part = induced_parts[static_cast<std::size_t>(leading)];
    while (auto ord = orders.next()) {
      ++order_counts[static_cast<std::size_t>(leading)];
      part.insert(induced_choice(*ord).table());
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::int64_t lead = 0; lead < size; ++lead) run_chunk(lead);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::int64_t lead = t; lead < size; lead += threads) run_chunk(lead);
      });
    }
  }

  std::set<Table> induced;
  for (auto& part : induced_parts) induced.merge(part);
  for (const auto c : order_counts) report.total_orders += c;
  report.induced_distinct = induced.size();
  report.directions_hold = induced == outcast;
  std::set_difference(outcast.begin(), outcast.end(), induced.begin(), induced.end(),
                      std::back_inserter(report.outcast_not_induced));
  return report;
}

}  // namespace outcast
