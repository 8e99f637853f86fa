#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphmems/alphabet.hpp"

namespace gm {

// Half-open range [lo, lo + size) of suffix-array ranks.
struct SaRange {
  std::size_t lo = 0;
  std::size_t size = 0;
  bool empty() const { return size == 0; }
  std::size_t hi() const { return lo + size; }
};

// Suffix array, inverse, LCP and BWT of T' = T . END, plus per-symbol
// occurrence counts over the BWT for backward search. T must not contain
// sym::kEnd.
class SuffixArrayIndex {
 public:
  SuffixArrayIndex() = default;
  SuffixArrayIndex(SymbolString text, std::size_t code_count);

  // |T'| = |T| + 1
  std::size_t size() const { return text_.size(); }
  std::size_t codeCount() const { return code_count_; }
  const SymbolString& text() const { return text_; }
  std::span<const std::uint32_t> sa() const { return sa_; }
  std::span<const std::uint32_t> isa() const { return isa_; }
  // lcp(i) = longest common prefix of the suffixes of rank i-1 and i; lcp(0) = 0.
  std::span<const std::uint32_t> lcp() const { return lcp_; }
  const SymbolString& bwt() const { return bwt_; }

  // Number of rows before `end` whose BWT symbol is c.
  std::size_t occ(Symbol c, std::size_t end) const { return occ_[c * (size() + 1) + end]; }
  // Number of symbols of T' smaller than c.
  std::size_t countSmaller(Symbol c) const { return c_[c]; }

  // Range of suffixes prefixed by c . X given the range of X.
  SaRange backwardStep(SaRange range, Symbol c) const;
  SaRange find(std::span<const Symbol> pattern) const;
  std::size_t count(std::span<const Symbol> pattern) const { return find(pattern).size; }

  // Versioned little-endian binary format; see docs/index-format.md.
  void save(std::ostream& out) const;
  static SuffixArrayIndex load(std::istream& in);

 private:
  void buildAuxiliary();

  SymbolString text_;
  std::size_t code_count_ = 0;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> isa_;
  std::vector<std::uint32_t> lcp_;
  SymbolString bwt_;
  std::vector<std::uint32_t> occ_;  // (code_count_) x (size() + 1)
  std::vector<std::size_t> c_;
};

// Suffix array of `text` (which must end in a unique smallest-or-not end
// symbol) by prefix doubling with radix passes, O(n log n).
std::vector<std::uint32_t> buildSuffixArray(std::span<const Symbol> text, std::size_t code_count);

}  // namespace gm
