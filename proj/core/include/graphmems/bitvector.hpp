#pragma once

#include <cstdint>
#include <vector>

namespace gm {

// Plain bitvector with rank/select support. Positions are 0-based:
// rank(i) counts the ones in [0, i), select(r) is the position of the r-th
// one (r >= 1).
class RankSelectBitvector {
 public:
  RankSelectBitvector() = default;
  explicit RankSelectBitvector(const std::vector<bool>& bits);

  std::size_t size() const { return size_; }
  bool operator[](std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t ones() const { return ones_; }

  // Throws std::out_of_range when i > size().
  std::size_t rank(std::size_t i) const;
  // Throws std::out_of_range unless 1 <= r <= ones().
  std::size_t select(std::size_t r) const;

 private:
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> before_;  // ones before each word
  std::size_t size_ = 0;
  std::size_t ones_ = 0;
};

}  // namespace gm
