#pragma once

#include "facecount/numeric.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace facecount {

/// Memoized Pascal triangle with exact entries.
///
/// Rows are grown on demand under an exclusive lock; lookups of rows that
/// already exist take a shared lock only. Rows live in a deque, so references
/// returned by `get` stay valid while the table grows.
class BinomialTable {
public:
  const Integer& get(std::int64_t n, std::int64_t c) const {
    if (n < 0 || c < 0) {
      throw DomainError("binomial(" + std::to_string(n) + ", " + std::to_string(c) +
                        "): negative argument");
    }
    if (c > n) return zero_;
    const auto row = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (row < rows_.size()) return rows_[row][static_cast<std::size_t>(c)];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= row) grow_one();
    return rows_[row][static_cast<std::size_t>(c)];
  }

  std::size_t rows() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
  }

private:
  // Caller holds the exclusive lock.
  void grow_one() const {
    if (rows_.empty()) {
      rows_.push_back({Integer(1)});
      return;
    }
    const auto& prev = rows_.back();
    std::vector<Integer> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows_.push_back(std::move(next));
  }

  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<Integer>> rows_;
  inline static const Integer zero_{0};
};

inline BinomialTable& binomial_table() {
  static BinomialTable table;
  return table;
}

/// C(n, c) with C(n, c) = 0 for c > n. Negative arguments throw DomainError.
inline const Integer& binomial(std::int64_t n, std::int64_t c) {
  return binomial_table().get(n, c);
}

}  // namespace facecount
