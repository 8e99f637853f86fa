#include "graphmems/suffix_array.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace gm {

std::vector<std::uint32_t> buildSuffixArray(std::span<const Symbol> text, std::size_t code_count) {
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n), second(n);
  if (n == 0) return sa;
  std::vector<std::uint32_t> bucket(std::max(n, code_count) + 1);

  auto countingSort = [&](const std::vector<std::uint32_t>& order, std::size_t keys) {
    std::fill(bucket.begin(), bucket.begin() + keys + 1, 0);
    for (std::uint32_t i : order) ++bucket[rank[i] + 1];
    for (std::size_t k = 1; k <= keys; ++k) bucket[k] += bucket[k - 1];
    for (std::uint32_t i : order) sa[bucket[rank[i]]++] = i;
  };

  for (std::size_t i = 0; i < n; ++i) {
    rank[i] = text[i];
    second[i] = static_cast<std::uint32_t>(i);
  }
  countingSort(second, code_count);

  std::size_t classes = code_count;
  for (std::size_t k = 1;; k <<= 1) {
    // order by second key: suffixes without a partner first, then by rank of i + k
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) second[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t r = 0; r < n; ++r)
      if (sa[r] >= k) second[p++] = static_cast<std::uint32_t>(sa[r] - k);
    countingSort(second, classes);

    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      std::uint32_t a = sa[r - 1], b = sa[r];
      bool same = rank[a] == rank[b] && a + k < n && b + k < n && rank[a + k] == rank[b + k];
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    std::swap(rank, tmp);
    classes = rank[sa[n - 1]] + 1;
    if (classes == n) break;
  }
  return sa;
}

SuffixArrayIndex::SuffixArrayIndex(SymbolString text, std::size_t code_count)
    : text_(std::move(text)), code_count_(code_count) {
  if (std::find(text_.begin(), text_.end(), sym::kEnd) != text_.end())
    throw std::invalid_argument("text contains the end marker");
  for (Symbol s : text_)
    if (s >= code_count_) throw std::invalid_argument("symbol outside the declared alphabet");
  text_.push_back(sym::kEnd);
  sa_ = buildSuffixArray(text_, code_count_);
  buildAuxiliary();
}

void SuffixArrayIndex::buildAuxiliary() {
  const std::size_t n = text_.size();
  isa_.resize(n);
  for (std::size_t r = 0; r < n; ++r) isa_[sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai et al.
  lcp_.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (isa_[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa_[isa_[i] - 1];
    while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
    lcp_[isa_[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }

  bwt_.resize(n);
  for (std::size_t r = 0; r < n; ++r) bwt_[r] = text_[sa_[r] == 0 ? n - 1 : sa_[r] - 1];

  occ_.assign(code_count_ * (n + 1), 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (Symbol c = 0; c < code_count_; ++c) occ_[c * (n + 1) + r + 1] = occ_[c * (n + 1) + r];
    ++occ_[bwt_[r] * (n + 1) + r + 1];
  }
  c_.assign(code_count_ + 1, 0);
  for (Symbol s : text_) ++c_[s + 1];
  for (std::size_t c = 1; c <= code_count_; ++c) c_[c] += c_[c - 1];
}

SaRange SuffixArrayIndex::backwardStep(SaRange range, Symbol c) const {
  if (c >= code_count_) return {};
  std::size_t lo = c_[c] + occ(c, range.lo);
  std::size_t hi = c_[c] + occ(c, range.hi());
  return {lo, hi - lo};
}

SaRange SuffixArrayIndex::find(std::span<const Symbol> pattern) const {
  SaRange r{0, size()};
  for (std::size_t k = pattern.size(); k-- > 0 && !r.empty();) r = backwardStep(r, pattern[k]);
  return r;
}

namespace {

constexpr std::array<char, 4> kMagic{'G', 'M', 'S', 'A'};
constexpr std::uint32_t kFormatVersion = 1;

void putU32(std::ostream& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xFF));
}
void putU64(std::ostream& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xFF));
}
std::uint64_t getLe(std::istream& in, int bytes) {
  std::uint64_t v = 0;
  for (int b = 0; b < bytes; ++b) {
    int c = in.get();
    if (c == EOF) throw std::runtime_error("truncated index file");
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
  }
  return v;
}

}  // namespace

void SuffixArrayIndex::save(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  putU32(out, kFormatVersion);
  putU32(out, static_cast<std::uint32_t>(code_count_));
  putU64(out, text_.size());
  for (Symbol s : text_) putU32(out, s);
  for (std::uint32_t r : sa_) putU32(out, r);
}

SuffixArrayIndex SuffixArrayIndex::load(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("not a suffix array index file");
  if (getLe(in, 4) != kFormatVersion) throw std::runtime_error("unsupported index format version");
  SuffixArrayIndex idx;
  idx.code_count_ = getLe(in, 4);
  std::size_t n = getLe(in, 8);
  idx.text_.resize(n);
  for (auto& s : idx.text_) s = static_cast<Symbol>(getLe(in, 4));
  idx.sa_.resize(n);
  for (auto& r : idx.sa_) r = static_cast<std::uint32_t>(getLe(in, 4));
  if (n == 0 || idx.text_.back() != sym::kEnd) throw std::runtime_error("corrupt index file");
  idx.buildAuxiliary();
  return idx;
}

}  // namespace gm
