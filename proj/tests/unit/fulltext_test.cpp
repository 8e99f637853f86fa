#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "graphmems/bidirectional_index.hpp"
#include "graphmems/suffix_array.hpp"
#include "graphmems/suffix_tree.hpp"
#include "support/instances.hpp"

using namespace gm;

namespace {

// Letters map to codes from sym::kFirst upward.
SymbolString codes(const std::string& s) {
  SymbolString out;
  for (char c : s) out.push_back(sym::kFirst + static_cast<Symbol>(c - 'a'));
  return out;
}

std::vector<std::uint32_t> naiveSa(const SymbolString& t) {
  std::vector<std::uint32_t> sa(t.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](auto a, auto b) {
    return std::lexicographical_compare(t.begin() + a, t.end(), t.begin() + b, t.end());
  });
  return sa;
}

std::size_t naiveCount(const SymbolString& t, const SymbolString& p) {
  if (p.size() > t.size()) return 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i) c += std::equal(p.begin(), p.end(), t.begin() + i);
  return c;
}

SymbolString randomCodes(testing::Rng& rng, std::size_t n, std::size_t sigma) {
  SymbolString s(n);
  for (auto& c : s) c = sym::kFirst + static_cast<Symbol>(testing::uniform(rng, 0, sigma - 1));
  return s;
}

}  // namespace

TEST_CASE("suffix array of banana") {
  SuffixArrayIndex idx(codes("banana"), sym::kFirst + 26);
  CHECK(idx.size() == 7);
  std::vector<std::uint32_t> sa(idx.sa().begin(), idx.sa().end());
  CHECK(sa == std::vector<std::uint32_t>{6, 5, 3, 1, 0, 4, 2});
  std::vector<std::uint32_t> lcp(idx.lcp().begin(), idx.lcp().end());
  CHECK(lcp == std::vector<std::uint32_t>{0, 0, 1, 3, 0, 0, 2});
  CHECK(idx.count(codes("ana")) == 2);
  CHECK(idx.count(codes("nab")) == 0);
  CHECK(idx.count(codes("a")) == 3);
  for (std::size_t k = 0; k < idx.size(); ++k) CHECK(idx.isa()[idx.sa()[k]] == k);
}

TEST_CASE("single-symbol text") {
  SuffixArrayIndex idx(codes("a"), sym::kFirst + 1);
  std::vector<std::uint32_t> sa(idx.sa().begin(), idx.sa().end());
  CHECK(sa == std::vector<std::uint32_t>{1, 0});
  CHECK(idx.count(codes("a")) == 1);
  CHECK(idx.count(codes("aa")) == 0);
}

TEST_CASE("suffix arrays match naive sorting and counts") {
  testing::Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    std::size_t sigma = testing::uniform(rng, 1, 4);
    auto text = randomCodes(rng, testing::uniform(rng, 1, 200), sigma);
    if (t % 3 == 0) text[testing::uniform(rng, 0, text.size() - 1)] = sym::kZero;
    SuffixArrayIndex idx(text, sym::kFirst + sigma);
    SymbolString with_end = text;
    with_end.push_back(sym::kEnd);
    std::vector<std::uint32_t> sa(idx.sa().begin(), idx.sa().end());
    REQUIRE(sa == naiveSa(with_end));
    for (int p = 0; p < 20; ++p) {
      auto pat = randomCodes(rng, testing::uniform(rng, 1, 4), sigma);
      REQUIRE(idx.count(pat) == naiveCount(text, pat));
    }
  }
}

TEST_CASE("bidirectional extensions agree with counts in both directions") {
  testing::Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    std::size_t sigma = testing::uniform(rng, 1, 3);
    auto text = randomCodes(rng, testing::uniform(rng, 1, 120), sigma);
    BidirectionalIndex bi(text, sym::kFirst + sigma);
    for (int p = 0; p < 20; ++p) {
      auto pat = randomCodes(rng, testing::uniform(rng, 1, 5), sigma);
      // Build the pattern from a random middle symbol outward.
      std::size_t mid = testing::uniform(rng, 0, pat.size() - 1);
      BiState s = bi.extendRight(bi.whole(), pat[mid]);
      std::size_t lo = mid, hi = mid + 1;
      while ((lo > 0 || hi < pat.size()) && !s.empty()) {
        if (lo > 0 && (hi == pat.size() || testing::uniform(rng, 0, 1)))
          s = bi.extendLeft(s, pat[--lo]);
        else
          s = bi.extendRight(s, pat[hi++]);
      }
      std::size_t expect = naiveCount(text, pat);
      REQUIRE((s.empty() ? 0 : s.size) == expect);
      if (expect > 0) {
        REQUIRE(s.length == pat.size());
        REQUIRE(bi.forward().find(pat).lo == s.fwd);
        SymbolString rpat(pat.rbegin(), pat.rend());
        REQUIRE(bi.reverse().find(rpat).lo == s.rev);
        std::size_t pos = bi.positionOf(s.fwd);
        REQUIRE(std::equal(pat.begin(), pat.end(), text.begin() + pos));
      }
    }
  }
}

TEST_CASE("left and right symbol listings") {
  BidirectionalIndex bi(codes("abcab"), sym::kFirst + 3);
  auto ab = bi.extendRight(bi.extendRight(bi.whole(), codes("a")[0]), codes("b")[0]);
  CHECK(ab.size == 2);
  std::vector<std::pair<Symbol, std::size_t>> syms;
  bi.leftSymbols(ab, syms);
  // "ab" at 0 is preceded by the cyclic end marker, at 3 by c.
  CHECK(syms == std::vector<std::pair<Symbol, std::size_t>>{{sym::kEnd, 1}, {codes("c")[0], 1}});
  syms.clear();
  bi.rightSymbols(ab, syms);
  CHECK(syms == std::vector<std::pair<Symbol, std::size_t>>{{sym::kEnd, 1}, {codes("c")[0], 1}});
}

TEST_CASE("suffix tree of aaa") {
  SuffixTree st(codes("aaa"), sym::kFirst + 1);
  CHECK(st.leafCount() == 4);
  // root, "a", "aa" plus four leaves
  CHECK(st.nodeCount() == 7);
  auto l = st.rootLocus();
  for (int k = 0; k < 3; ++k) {
    auto next = st.descend(l, codes("a")[0]);
    REQUIRE(next.has_value());
    l = *next;
  }
  CHECK(l.depth == 3);
  CHECK_FALSE(st.descend(l, codes("a")[0]).has_value());
  CHECK(st.spell(l) == codes("aaa"));
  auto s = st.suffixLink(l);
  CHECK(st.spell(s) == codes("aa"));
  CHECK(st.isExplicit(s));
}

TEST_CASE("suffix tree structure and links on random texts") {
  testing::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    std::size_t sigma = testing::uniform(rng, 1, 3);
    auto text = randomCodes(rng, testing::uniform(rng, 1, 80), sigma);
    SuffixTree st(text, sym::kFirst + sigma);
    SymbolString with_end = text;
    with_end.push_back(sym::kEnd);
    for (SuffixTree::NodeId v = 0; v < st.nodeCount(); ++v) {
      if (v == st.root()) continue;
      REQUIRE(st.depth(st.parent(v)) < st.depth(v));
      REQUIRE(st.lb(st.parent(v)) <= st.lb(v));
      REQUIRE(st.rb(v) <= st.rb(st.parent(v)));
      if (st.isLeaf(v)) {
        REQUIRE(st.depth(v) == with_end.size() - st.suffixStart(v));
        continue;
      }
      std::size_t kids = 0;
      for (auto c = st.firstChild(v); c != SuffixTree::kNone; c = st.nextSibling(c)) ++kids;
      REQUIRE(kids >= 2);
      auto w = st.link(v);
      SymbolString label(with_end.begin() + st.suffixStart(st.leafOfRank(st.lb(v))),
                         with_end.begin() + st.suffixStart(st.leafOfRank(st.lb(v))) + st.depth(v));
      REQUIRE(st.spell({w, st.depth(w)}) == SymbolString(label.begin() + 1, label.end()));
    }
    // Every substring descends and links to its own suffix.
    for (int p = 0; p < 20; ++p) {
      std::size_t i = testing::uniform(rng, 0, text.size() - 1);
      std::size_t len = testing::uniform(rng, 1, text.size() - i);
      auto l = st.rootLocus();
      for (std::size_t k = 0; k < len; ++k) l = *st.descend(l, text[i + k]);
      REQUIRE(st.spell(l) == SymbolString(text.begin() + i, text.begin() + i + len));
      std::size_t hops = 0;
      auto s = st.suffixLink(l, &hops);
      REQUIRE(st.spell(s) == SymbolString(text.begin() + i + 1, text.begin() + i + len));
    }
  }
}

TEST_CASE("index save and load round-trip") {
  testing::Rng rng(37);
  auto text = randomCodes(rng, 150, 4);
  SuffixArrayIndex idx(text, sym::kFirst + 4);
  std::stringstream ss;
  idx.save(ss);
  auto loaded = SuffixArrayIndex::load(ss);
  CHECK(loaded.text() == idx.text());
  CHECK(std::equal(loaded.sa().begin(), loaded.sa().end(), idx.sa().begin(), idx.sa().end()));
  CHECK(std::equal(loaded.lcp().begin(), loaded.lcp().end(), idx.lcp().begin(), idx.lcp().end()));
  CHECK(loaded.count(SymbolString(text.begin() + 10, text.begin() + 20)) >= 1);

  std::stringstream bad("not an index");
  CHECK_THROWS(SuffixArrayIndex::load(bad));
}
