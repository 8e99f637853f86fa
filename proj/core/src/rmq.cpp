#include "graphmems/rmq.hpp"

#include <bit>
#include <utility>

namespace gm {

RmqStructure::RmqStructure(std::vector<std::int64_t> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n == 0) return;
  table_.emplace_back(n);
  for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const auto& prev = table_[k - 1];
    std::vector<std::uint32_t> level(n - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < level.size(); ++i)
      level[i] = static_cast<std::uint32_t>(better(prev[i], prev[i + half]));
    table_.push_back(std::move(level));
  }
}

std::size_t RmqStructure::argmin(std::size_t lo, std::size_t hi) const {
  const std::size_t k = std::bit_width(hi - lo + 1) - 1;
  return better(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
}

std::size_t RmqStructure::listAtMost(std::size_t lo, std::size_t hi, std::int64_t threshold,
                                     std::vector<std::size_t>& out) const {
  std::size_t calls = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pending{{lo, hi}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    std::size_t k = argmin(a, b);
    ++calls;
    if (values_[k] > threshold) continue;
    out.push_back(k);
    if (k + 1 <= b) pending.emplace_back(k + 1, b);
    if (k > a) pending.emplace_back(a, k - 1);
  }
  return calls;
}

}  // namespace gm
