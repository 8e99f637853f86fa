#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using gm::tools::OutputFormat;
using gm::tools::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Maximal exact matches between query strings and labeled graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto graphOptions = [&](CLI::App* cmd) {
    cmd->add_option("--graph", cfg.graph, "GFA file (S and L records, optional BK:i block tags)")->required();
    cmd->add_option("--blocks", cfg.blocks, "blocks sidecar: one line of node ids per block");
  };
  auto outOption = [&](CLI::App* cmd) { cmd->add_option("--out", cfg.out, "output file (default stdout)"); };

  auto* find = app.add_subcommand("find", "report all kappa-MEMs of the queries");
  graphOptions(find);
  find->add_option("--queries", cfg.queries, "FASTA queries")->required();
  find->add_option("--kappa", cfg.kappa, "minimum MEM length")->check(CLI::PositiveNumber);
  find->add_option("--lmax", cfg.lmax, "longest path in nodes for the generic engine")->check(CLI::PositiveNumber);
  find->add_flag("--efg", cfg.efg, "use the founder-graph engine (unbounded path length)");
  find->add_option("--filter-text", cfg.filter_text, "keep only MEMs occurring in these FASTA rows");
  find->add_option("--format", cfg.format, "tsv or encoding")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"tsv", OutputFormat::Tsv},
                                                                              {"encoding", OutputFormat::Encoding}},
                                          CLI::ignore_case));
  find->add_flag("--oracle", cfg.oracle, "cross-check against brute force and report differences");
  find->add_flag("--asymmetric", cfg.asymmetric, "keep only query-maximal intervals");
  find->add_option("--max-text-size", cfg.max_text_size, "refuse path texts estimated above this many symbols");
  outOption(find);

  auto* filter = app.add_subcommand("filter", "keep MEM rows whose string occurs in a text");
  graphOptions(filter);
  filter->add_option("--mems", cfg.mems, "MEM TSV (default stdin)");
  filter->add_option("--filter-text", cfg.filter_text, "FASTA rows; gaps are removed")->required();
  outOption(filter);

  auto* harness = app.add_subcommand("harness", "count MEMs per category on synthetic alignments");
  harness->add_option("--rows", cfg.harness.row_counts, "row counts t, one CSV line each");
  harness->add_option("--length", cfg.harness.length, "alignment columns");
  harness->add_option("--mutation", cfg.harness.mutation_rate, "per-symbol substitution rate");
  harness->add_option("--model", cfg.harness.model, "independent or genealogy")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, gm::tools::MutationModel>{{"independent", gm::tools::MutationModel::Independent},
                                                          {"genealogy", gm::tools::MutationModel::Genealogy}},
          CLI::ignore_case));
  harness->add_option("--block-width", cfg.harness.block_width, "initial founder block width");
  harness->add_option("--query-count", cfg.harness.query_count, "queries per instance");
  harness->add_option("--query-length", cfg.harness.query_length, "query length");
  harness->add_option("--query-mutations", cfg.harness.query_mutations, "substitutions per query");
  harness->add_option("--kappa", cfg.kappa, "minimum MEM length")->check(CLI::PositiveNumber);
  harness->add_option("--seed", cfg.harness.seed, "generator seed");
  outOption(harness);

  auto* validate = app.add_subcommand("validate", "print graph statistics and check the block structure");
  graphOptions(validate);

  auto* index = app.add_subcommand("index", "build and save the suffix array of a path text");
  graphOptions(index);
  index->add_option("--lmax", cfg.lmax, "path length in nodes")->check(CLI::PositiveNumber);
  index->add_flag("--efg", cfg.efg, "index the 3-node text of a founder graph");
  index->add_option("--max-text-size", cfg.max_text_size, "refuse path texts estimated above this many symbols");
  index->add_option("--out", cfg.out, "index file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gm::tools::kInputError;
  }

  if (*find) return gm::tools::cmdFindMems(cfg, std::cout, std::cerr);
  if (*filter) return gm::tools::cmdFilterByText(cfg, std::cout, std::cerr);
  if (*harness) return gm::tools::cmdCountHarness(cfg, std::cout, std::cerr);
  if (*validate) return gm::tools::cmdValidate(cfg, std::cout, std::cerr);
  return gm::tools::cmdIndex(cfg, std::cout, std::cerr);
}
