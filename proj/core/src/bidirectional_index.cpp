#include "graphmems/bidirectional_index.hpp"

#include <algorithm>

namespace gm {

BidirectionalIndex::BidirectionalIndex(const SymbolString& text, std::size_t code_count)
    : fwd_(text, code_count), rev_(SymbolString(text.rbegin(), text.rend()), code_count) {}

BiState BidirectionalIndex::step(const SuffixArrayIndex& along, std::size_t lo_along,
                                 std::size_t lo_other, std::size_t size, Symbol c,
                                 std::size_t length, bool left) {
  if (size == 0 || c >= along.codeCount()) return {};
  const std::size_t hi = lo_along + size;
  std::size_t smaller = 0;
  for (Symbol b = 0; b < c; ++b) smaller += along.occ(b, hi) - along.occ(b, lo_along);
  std::size_t lo = along.countSmaller(c) + along.occ(c, lo_along);
  std::size_t count = along.occ(c, hi) - along.occ(c, lo_along);
  if (count == 0) return {};
  BiState s;
  s.size = count;
  s.length = length + 1;
  if (left) {
    s.fwd = lo;
    s.rev = lo_other + smaller;
  } else {
    s.rev = lo;
    s.fwd = lo_other + smaller;
  }
  return s;
}

BiState BidirectionalIndex::extendLeft(const BiState& s, Symbol a) const {
  return step(fwd_, s.fwd, s.rev, s.size, a, s.length, true);
}

BiState BidirectionalIndex::extendRight(const BiState& s, Symbol b) const {
  return step(rev_, s.rev, s.fwd, s.size, b, s.length, false);
}

namespace {

void symbolsIn(const SuffixArrayIndex& idx, std::size_t lo, std::size_t size,
               std::vector<std::pair<Symbol, std::size_t>>& out) {
  out.clear();
  if (size == 1) {
    out.emplace_back(idx.bwt()[lo], 1);
    return;
  }
  for (Symbol c = 0; c < idx.codeCount(); ++c) {
    std::size_t k = idx.occ(c, lo + size) - idx.occ(c, lo);
    if (k > 0) out.emplace_back(c, k);
  }
}

}  // namespace

void BidirectionalIndex::leftSymbols(const BiState& s,
                                     std::vector<std::pair<Symbol, std::size_t>>& out) const {
  symbolsIn(fwd_, s.fwd, s.size, out);
}

void BidirectionalIndex::rightSymbols(const BiState& s,
                                      std::vector<std::pair<Symbol, std::size_t>>& out) const {
  symbolsIn(rev_, s.rev, s.size, out);
}

std::vector<std::pair<Symbol, BiState>> BidirectionalIndex::enumerateLeftExtensions(const BiState& s) const {
  std::vector<std::pair<Symbol, std::size_t>> symbols;
  leftSymbols(s, symbols);
  std::vector<std::pair<Symbol, BiState>> out;
  out.reserve(symbols.size());
  for (auto [a, count] : symbols) out.emplace_back(a, extendLeft(s, a));
  return out;
}

}  // namespace gm
