#include "graphmems/bitvector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gm {

RankSelectBitvector::RankSelectBitvector(const std::vector<bool>& bits) : size_(bits.size()) {
  words_.assign((size_ + 63) / 64, 0);
  for (std::size_t i = 0; i < size_; ++i)
    if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  before_.resize(words_.size() + 1);
  std::uint32_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    before_[w] = total;
    total += static_cast<std::uint32_t>(std::popcount(words_[w]));
  }
  before_[words_.size()] = total;
  ones_ = total;
}

std::size_t RankSelectBitvector::rank(std::size_t i) const {
  if (i > size_) throw std::out_of_range("rank position out of range");
  std::size_t w = i >> 6;
  std::size_t r = before_[w];
  if (i & 63) r += std::popcount(words_[w] & ((std::uint64_t{1} << (i & 63)) - 1));
  return r;
}

std::size_t RankSelectBitvector::select(std::size_t r) const {
  if (r < 1 || r > ones_) throw std::out_of_range("select rank out of range");
  // last word whose preceding count is < r
  auto it = std::lower_bound(before_.begin(), before_.end(), static_cast<std::uint32_t>(r));
  std::size_t w = static_cast<std::size_t>(it - before_.begin()) - 1;
  std::size_t need = r - before_[w];
  std::uint64_t word = words_[w];
  for (std::size_t k = 1; k < need; ++k) word &= word - 1;
  return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
}

}  // namespace gm
