#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphmems/efg_mems.hpp"
#include "graphmems/graph.hpp"
#include "graphmems/mem.hpp"
#include "graphmems/suffix_array.hpp"
#include "harness.hpp"

namespace gm::tools {

inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kInputError = 2;
inline constexpr int kGuardError = 3;
inline constexpr int kOracleMismatch = 4;

enum class OutputFormat { Tsv, Encoding };

struct RunConfig {
  std::string graph;
  std::string blocks;
  std::string queries;
  std::string mems;
  std::string filter_text;
  std::string out;
  std::size_t kappa = 16;
  std::size_t lmax = 3;
  bool efg = false;
  bool oracle = false;
  bool asymmetric = false;
  OutputFormat format = OutputFormat::Tsv;
  double max_text_size = 5e8;
  HarnessParams harness;
};

// A MEM table row: the record plus the query name it refers to.
struct TsvRow {
  std::string query_id;
  MemRecord record;
};

void writeMemTsv(std::ostream& out, const LabeledGraph& g, const std::vector<std::string>& query_ids,
                 const std::vector<MemRecord>& records);
// Throws std::runtime_error with a line number on malformed input.
std::vector<TsvRow> readMemTsv(std::istream& in, const LabeledGraph& g);
void writeMemTsv(std::ostream& out, const LabeledGraph& g, const std::vector<TsvRow>& rows);

// Rows with gaps removed, joined by a separator, behind a suffix array.
class TextFilter {
 public:
  TextFilter(const LabeledGraph& g, const std::vector<std::string>& rows);
  bool occurs(const std::string& s) const;

 private:
  Alphabet alphabet_;
  SuffixArrayIndex index_;
};

// Keeps the records whose spelled string occurs in one of the rows.
std::vector<MemRecord> filterByText(const LabeledGraph& g, const std::vector<MemRecord>& records,
                                    const std::vector<std::string>& rows);

// Records whose query interval is not strictly inside another record's
// interval of the same query: the query substring occurs in the graph but
// neither one-symbol extension does. Needs the complete MEM set.
std::vector<MemRecord> asymmetricMems(const std::vector<MemRecord>& records);

// Loads a graph and its block structure (from tags or a sidecar file).
struct LoadedGraph {
  LabeledGraph graph;
  std::optional<EfgStructure> efg;
};
LoadedGraph loadGraph(const std::string& gfa, const std::string& blocks);

int cmdFindMems(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmdFilterByText(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmdCountHarness(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmdValidate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmdIndex(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gm::tools
