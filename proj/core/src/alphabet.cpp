#include "graphmems/alphabet.hpp"

#include <cctype>

namespace gm {

bool Alphabet::isReservedByte(unsigned char c) {
  return !std::isgraph(c) || c == '#' || c == '$';
}

void Alphabet::finalize() {
  chars_.clear();
  code_.fill(kAbsent);
  for (int c = 0; c < 256; ++c) {
    if (!seen_[c]) continue;
    code_[c] = sym::kFirst + static_cast<Symbol>(chars_.size());
    chars_.push_back(static_cast<char>(c));
  }
}

SymbolString Alphabet::encode(std::string_view s) const {
  SymbolString out;
  out.reserve(s.size());
  for (char c : s) out.push_back(encode(c));
  return out;
}

char Alphabet::decode(Symbol s) const {
  switch (s) {
    case sym::kZero: return '0';
    case sym::kHash: return '#';
    case sym::kEnd: return '$';
    case sym::kSep: return '|';
    default: break;
  }
  std::size_t k = s - sym::kFirst;
  return k < chars_.size() ? chars_[k] : '?';
}

}  // namespace gm
