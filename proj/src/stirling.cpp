#include "mpbern/stirling.hpp"

#include <mutex>

namespace mpbern {

Integer StirlingTable::get(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("stirling2: a must be non-negative");
  if (b < 0 || b > a) return Integer(0);
  const auto row = static_cast<std::size_t>(a);
  {
    std::shared_lock lock(mutex_);
    if (row < rows_.size()) return rows_[row][static_cast<std::size_t>(b)];
  }
  grow_to(row);
  std::shared_lock lock(mutex_);
  return rows_[row][static_cast<std::size_t>(b)];
}

std::size_t StirlingTable::rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void StirlingTable::grow_to(std::size_t a) {
  std::unique_lock lock(mutex_);
  if (a < rows_.size()) return;
  const std::size_t target = std::max(a + 1, 2 * rows_.size());
  rows_.reserve(target);
  while (rows_.size() < target) {
    const auto& prev = rows_.back();
    const std::size_t n = rows_.size();  // building row n from row n-1
    std::vector<Integer> row(n + 1);
    row[0] = 0;
    for (std::size_t b = 1; b <= n; ++b) {
      Integer below = b < prev.size() ? prev[b] : Integer(0);
      row[b] = prev[b - 1] + static_cast<unsigned long>(b) * below;
    }
    rows_.push_back(std::move(row));
  }
}

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

Integer stirling2(std::int64_t a, std::int64_t b) { return stirling_table().get(a, b); }

std::vector<Rational> falling_basis_expand(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("falling_basis_expand: n must be non-negative");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    out.emplace_back(stirling2(n, j) * factorial(static_cast<std::uint64_t>(j)));
  }
  return out;
}

}  // namespace mpbern
