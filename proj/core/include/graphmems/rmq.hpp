#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace gm {

inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

// Sparse-table range minimum query; ties resolve to the smallest index.
// Ranges are 0-based and inclusive.
class RmqStructure {
 public:
  RmqStructure() = default;
  explicit RmqStructure(std::vector<std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  std::size_t argmin(std::size_t lo, std::size_t hi) const;

  // Appends every k in [lo, hi] with value <= threshold, each once, by
  // recursing around range minima. Returns the number of argmin calls made,
  // which never exceeds 2 * (number reported) + 1.
  std::size_t listAtMost(std::size_t lo, std::size_t hi, std::int64_t threshold,
                         std::vector<std::size_t>& out) const;

 private:
  std::size_t better(std::size_t a, std::size_t b) const {
    return values_[b] < values_[a] || (values_[b] == values_[a] && b < a) ? b : a;
  }

  std::vector<std::int64_t> values_;
  std::vector<std::vector<std::uint32_t>> table_;  // table_[k][i] = argmin of [i, i + 2^k)
};

}  // namespace gm
