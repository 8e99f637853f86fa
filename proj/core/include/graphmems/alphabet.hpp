#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gm {

using Symbol = std::uint32_t;
using SymbolString = std::vector<Symbol>;

// Internal symbol codes. Sentinels sort below every alphabet symbol:
// node delimiter < unknown-extension marker < end marker < query separator < Σ.
namespace sym {
inline constexpr Symbol kZero = 0;  // delimits chunks of a path text
inline constexpr Symbol kHash = 1;  // non-singleton left/right extension
inline constexpr Symbol kEnd = 2;   // end-of-text marker of an index
inline constexpr Symbol kSep = 3;   // query separator, also used for foreign query bytes
inline constexpr Symbol kFirst = 4; // first alphabet symbol

constexpr bool isSentinel(Symbol s) { return s < kFirst; }
}  // namespace sym

// Ordered set Σ discovered from input strings. Characters are mapped to
// consecutive codes starting at sym::kFirst in byte order.
class Alphabet {
 public:
  Alphabet() { code_.fill(kAbsent); }

  template <typename Range>
  static Alphabet fromStrings(const Range& strings) {
    Alphabet a;
    for (const auto& s : strings) a.add(s);
    a.finalize();
    return a;
  }

  // True for bytes that may never appear in labels or queries.
  static bool isReservedByte(unsigned char c);

  bool contains(char c) const { return code_[static_cast<unsigned char>(c)] != kAbsent; }
  // Alphabet symbol for c, or sym::kSep if c is not part of Σ.
  Symbol encode(char c) const {
    Symbol s = code_[static_cast<unsigned char>(c)];
    return s == kAbsent ? sym::kSep : s;
  }
  SymbolString encode(std::string_view s) const;
  char decode(Symbol s) const;

  // Number of alphabet symbols |Σ|.
  std::size_t size() const { return chars_.size(); }
  // Number of distinct codes in use, sentinels included.
  std::size_t codeCount() const { return sym::kFirst + chars_.size(); }
  const std::string& chars() const { return chars_; }

 private:
  static constexpr Symbol kAbsent = 0xFFFFFFFFu;

  void add(std::string_view s) {
    for (unsigned char c : s) seen_[c] = true;
  }
  void finalize();

  std::array<bool, 256> seen_{};
  std::array<Symbol, 256> code_{};
  std::string chars_;
};

}  // namespace gm
