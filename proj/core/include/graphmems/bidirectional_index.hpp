#pragma once

#include <utility>
#include <vector>

#include "graphmems/suffix_array.hpp"

namespace gm {

// A pattern X tracked in both directions: the range of suffixes of T'
// prefixed by X and the range of suffixes of reverse(T)' prefixed by
// reverse(X). Both ranges have the same size.
struct BiState {
  std::size_t fwd = 0;
  std::size_t rev = 0;
  std::size_t size = 0;
  std::size_t length = 0;

  bool empty() const { return size == 0; }
  SaRange forwardRange() const { return {fwd, size}; }
  SaRange reverseRange() const { return {rev, size}; }
};

// Bidirectional index over plain suffix arrays of T and reverse(T). The end
// marker is treated cyclically: END . X occurs when X is a prefix of T and
// X . END occurs when X is a suffix of T.
class BidirectionalIndex {
 public:
  BidirectionalIndex() = default;
  BidirectionalIndex(const SymbolString& text, std::size_t code_count);

  const SuffixArrayIndex& forward() const { return fwd_; }
  const SuffixArrayIndex& reverse() const { return rev_; }
  std::size_t codeCount() const { return fwd_.codeCount(); }

  BiState whole() const { return {0, 0, fwd_.size(), 0}; }
  BiState extendLeft(const BiState& s, Symbol a) const;
  BiState extendRight(const BiState& s, Symbol b) const;

  // Symbols a with a.X occurring, with occurrence counts, in symbol order.
  void leftSymbols(const BiState& s, std::vector<std::pair<Symbol, std::size_t>>& out) const;
  // Symbols b with X.b occurring, with occurrence counts, in symbol order.
  void rightSymbols(const BiState& s, std::vector<std::pair<Symbol, std::size_t>>& out) const;

  std::vector<std::pair<Symbol, BiState>> enumerateLeftExtensions(const BiState& s) const;

  // Start of the occurrence of X in T' for forward rank k.
  std::size_t positionOf(std::size_t k) const { return fwd_.sa()[k]; }

 private:
  static BiState step(const SuffixArrayIndex& along, std::size_t lo_along, std::size_t lo_other,
                      std::size_t size, Symbol c, std::size_t length, bool left);

  SuffixArrayIndex fwd_;
  SuffixArrayIndex rev_;
};

}  // namespace gm
