#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gm::tools {

// How row differences arise. Independent: every row substitutes each symbol
// of a shared reference with the given rate, so variants are private to a
// row. Genealogy: rows are leaves of a random coalescent tree and a
// substitution on a branch is inherited by every row below it; the rate is
// the expected divergence of a row from the root.
enum class MutationModel { Independent, Genealogy };

struct HarnessParams {
  MutationModel model = MutationModel::Genealogy;
  std::vector<std::size_t> row_counts{10, 20};
  std::size_t length = 1000;
  double mutation_rate = 0.01;
  std::size_t block_width = 20;
  std::size_t query_count = 100;
  std::size_t query_length = 100;
  std::size_t query_mutations = 2;
  std::size_t kappa = 16;
  std::uint64_t seed = 1;
};

struct HarnessRow {
  std::size_t t = 0;
  std::size_t string_mems = 0;
  std::size_t efg_nodes = 0;
  std::size_t efg_edges = 0;
  std::size_t efg_paths = 0;  // three or more nodes
  std::size_t efg_total = 0;
  std::size_t block_width = 0;  // width actually used
};

// Gapless MSA of t rows derived from a random reference.
std::vector<std::string> syntheticMsa(std::size_t t, std::size_t length, double mutation_rate, MutationModel model,
                                      std::uint64_t seed);

// Substrings of random rows with a few substitutions each.
std::vector<std::string> sampleQueries(const std::vector<std::string>& rows, std::size_t count, std::size_t length,
                                       std::size_t mutations, std::uint64_t seed);

// Boundaries every `width` columns.
std::vector<std::size_t> uniformBoundaries(std::size_t length, std::size_t width);

// Counts string MEMs against the concatenated rows and MEMs per category
// against a naive founder graph of the rows. The block width is widened
// until the graph is semi-repeat-free.
HarnessRow runHarness(std::size_t t, const HarnessParams& params);

void writeHarnessHeader(std::ostream& out);
void writeHarnessRow(std::ostream& out, const HarnessRow& row);

}  // namespace gm::tools
