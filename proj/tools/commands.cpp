#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "graphmems/efg.hpp"
#include "graphmems/graph_io.hpp"
#include "graphmems/mem_finder.hpp"
#include "graphmems/oracle.hpp"
#include "graphmems/path_text.hpp"

namespace gm::tools {
namespace {

const char* const kTsvHeader = "query_id\tx\ty\tlength\tpath\ti\tj\tcategory";

std::string joinPath(const LabeledGraph& g, const std::vector<NodeIndex>& path) {
  std::string s;
  for (NodeIndex v : path) {
    if (!s.empty()) s += ',';
    s += g.id(v);
  }
  return s;
}

void writeRow(std::ostream& out, const LabeledGraph& g, const std::string& query_id, const MemRecord& r) {
  out << query_id << '\t' << r.x << '\t' << r.y << '\t' << r.length() << '\t' << joinPath(g, r.location.path) << '\t'
      << r.location.start << '\t' << r.location.end << '\t' << categoryName(r) << '\n';
}

std::size_t parseCount(const std::string& field, std::size_t line) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty() || field[0] == '-')
    throw std::runtime_error("line " + std::to_string(line) + ": expected a positive integer, got '" + field + "'");
  return static_cast<std::size_t>(v);
}

MemCategory parseCategory(const std::string& field, std::size_t line) {
  if (field == "NODE") return MemCategory::Node;
  if (field == "EFG_4PLUS") return MemCategory::Efg4Plus;
  if (field.rfind("EXACT_L(", 0) == 0 && field.back() == ')') return MemCategory::ExactL;
  throw std::runtime_error("line " + std::to_string(line) + ": unknown category '" + field + "'");
}

// Output stream for --out, or the given fallback.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    out_ = &file_;
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

struct LoadedQueries {
  std::vector<std::string> ids;
  std::vector<std::string> sequences;
};

LoadedQueries loadQueries(const std::string& path) {
  if (path.empty()) throw std::runtime_error("--queries is required");
  LoadedQueries q;
  for (auto& rec : loadFasta(path)) {
    q.ids.push_back(rec.name);
    q.sequences.push_back(std::move(rec.sequence));
  }
  if (q.ids.empty()) throw std::runtime_error(path + ": no FASTA records");
  return q;
}

std::vector<std::string> loadRows(const std::string& path) {
  std::vector<std::string> rows;
  for (auto& rec : loadFasta(path)) {
    std::string s;
    for (char c : rec.sequence)
      if (c != kGapSymbol) s += c;
    rows.push_back(std::move(s));
  }
  return rows;
}

nlohmann::json recordJson(const LabeledGraph& g, const std::string& query_id, const MemRecord& r) {
  std::vector<std::string> path;
  for (NodeIndex v : r.location.path) path.push_back(g.id(v));
  return {{"type", "record"}, {"query_id", query_id}, {"x", r.x}, {"y", r.y}, {"path", path},
          {"i", r.location.start}, {"j", r.location.end}, {"category", categoryName(r)}};
}

nlohmann::json encodingJson(const LabeledGraph& g, const std::string& query_id, const CompactMemEncoding& e) {
  auto lefts = [&](const std::vector<LeftEntry>& entries) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& l : entries) a.push_back({{"node", g.id(l.node)}, {"i", l.i}});
    return a;
  };
  nlohmann::json spine = nlohmann::json::array(), u_lt = nlohmann::json::array(), right = nlohmann::json::array();
  for (NodeIndex v : e.spine) spine.push_back(g.id(v));
  for (const auto& entries : e.u_lt) u_lt.push_back(lefts(entries));
  for (const auto& entries : e.right) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : entries) a.push_back({{"node", g.id(r.node)}, {"j", r.j}});
    right.push_back(std::move(a));
  }
  return {{"type", "encoding"}, {"query_id", query_id}, {"spine", spine}, {"spine_pos", e.spine_pos},
          {"u1", lefts(e.u1)}, {"u_lt", u_lt}, {"right", right}};
}

int reportOracleDiff(const LabeledGraph& g, const LoadedQueries& q, const std::vector<MemRecord>& got,
                     std::vector<MemRecord> expected, std::ostream& err) {
  canonicalize(g, expected);
  std::vector<MemRecord> missing, extra;
  auto less = [&](const MemRecord& a, const MemRecord& b) { return canonicalLess(g, a, b); };
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing), less);
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra), less);
  for (const auto& r : missing) {
    err << "oracle-only\t";
    writeRow(err, g, q.ids[r.query], r);
  }
  for (const auto& r : extra) {
    err << "engine-only\t";
    writeRow(err, g, q.ids[r.query], r);
  }
  err << "oracle check: " << expected.size() << " expected, " << missing.size() << " missing, " << extra.size()
      << " extra\n";
  return missing.empty() && extra.empty() ? kOk : kOracleMismatch;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardError;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

void writeMemTsv(std::ostream& out, const LabeledGraph& g, const std::vector<std::string>& query_ids,
                 const std::vector<MemRecord>& records) {
  out << kTsvHeader << '\n';
  for (const auto& r : records) writeRow(out, g, query_ids[r.query], r);
}

void writeMemTsv(std::ostream& out, const LabeledGraph& g, const std::vector<TsvRow>& rows) {
  out << kTsvHeader << '\n';
  for (const auto& row : rows) writeRow(out, g, row.query_id, row.record);
}

std::vector<TsvRow> readMemTsv(std::istream& in, const LabeledGraph& g) {
  std::vector<TsvRow> rows;
  std::map<std::string, std::size_t> query_index;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == kTsvHeader) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, '\t');) f.push_back(field);
    if (f.size() != 8)
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 8 fields, got " + std::to_string(f.size()));
    TsvRow row;
    row.query_id = f[0];
    auto [it, fresh] = query_index.try_emplace(f[0], query_index.size());
    row.record.query = it->second;
    row.record.x = parseCount(f[1], lineno);
    row.record.y = parseCount(f[2], lineno);
    if (row.record.y < row.record.x || parseCount(f[3], lineno) != row.record.length())
      throw std::runtime_error("line " + std::to_string(lineno) + ": inconsistent interval");
    std::stringstream ps(f[4]);
    for (std::string id; std::getline(ps, id, ',');) {
      auto v = g.find(id);
      if (!v) throw std::runtime_error("line " + std::to_string(lineno) + ": unknown node '" + id + "'");
      row.record.location.path.push_back(*v);
    }
    row.record.location.start = parseCount(f[5], lineno);
    row.record.location.end = parseCount(f[6], lineno);
    row.record.category = parseCategory(f[7], lineno);
    if (!isValidSubstring(g, row.record.location) ||
        spelledLength(g, row.record.location) != row.record.length())
      throw std::runtime_error("line " + std::to_string(lineno) + ": location does not spell the interval");
    rows.push_back(std::move(row));
  }
  return rows;
}

TextFilter::TextFilter(const LabeledGraph& g, const std::vector<std::string>& rows) {
  std::vector<std::string> all(rows);
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) all.push_back(g.label(v));
  alphabet_ = Alphabet::fromStrings(all);
  SymbolString text;
  for (const auto& r : rows) {
    if (!text.empty()) text.push_back(sym::kSep);
    auto enc = alphabet_.encode(r);
    text.insert(text.end(), enc.begin(), enc.end());
  }
  index_ = SuffixArrayIndex(std::move(text), alphabet_.codeCount());
}

bool TextFilter::occurs(const std::string& s) const {
  auto enc = alphabet_.encode(s);
  return index_.count(enc) > 0;
}

std::vector<MemRecord> filterByText(const LabeledGraph& g, const std::vector<MemRecord>& records,
                                    const std::vector<std::string>& rows) {
  TextFilter filter(g, rows);
  std::vector<MemRecord> out;
  for (const auto& r : records)
    if (filter.occurs(spelled(g, r.location))) out.push_back(r);
  return out;
}

std::vector<MemRecord> asymmetricMems(const std::vector<MemRecord>& records) {
  // per query, the distinct intervals sorted by x then decreasing y
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> intervals;
  for (const auto& r : records) intervals[r.query].emplace_back(r.x, r.y);
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> maximal;
  for (auto& [q, list] : intervals) {
    std::sort(list.begin(), list.end(), [](auto a, auto b) { return a.first != b.first ? a.first < b.first : a.second > b.second; });
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::size_t reach = 0;
    for (auto [x, y] : list) {
      if (y > reach) maximal[q].emplace_back(x, y);
      reach = std::max(reach, y);
    }
  }
  std::vector<MemRecord> out;
  for (const auto& r : records) {
    const auto& keep = maximal[r.query];
    if (std::binary_search(keep.begin(), keep.end(), std::make_pair(r.x, r.y))) out.push_back(r);
  }
  return out;
}

LoadedGraph loadGraph(const std::string& gfa, const std::string& blocks) {
  if (gfa.empty()) throw std::runtime_error("--graph is required");
  GfaDocument doc = readGfaFile(gfa);
  LoadedGraph loaded{std::move(doc.graph), std::move(doc.efg)};
  if (!blocks.empty()) loaded.efg = loadBlocks(blocks, loaded.graph);
  return loaded;
}

int cmdFindMems(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validateKappa(cfg.kappa);
    if (cfg.lmax < 1) throw std::runtime_error("--lmax must be at least 1");
    LoadedGraph lg = loadGraph(cfg.graph, cfg.blocks);
    const LabeledGraph& g = lg.graph;
    LoadedQueries q = loadQueries(cfg.queries);
    QuerySet qs(q.sequences, g.alphabet());
    FinderOptions options;
    options.max_text_size = cfg.max_text_size;

    std::vector<MemRecord> records;
    std::vector<CompactMemEncoding> encodings;
    if (cfg.efg) {
      if (!lg.efg) throw std::runtime_error("EFG mode needs block tags or --blocks");
      EfgIndex idx = buildEfgIndex(g, *lg.efg);
      if (cfg.format == OutputFormat::Encoding) {
        records = findAllMemsGeneric(g, qs, cfg.kappa, 3, options);
        for (std::size_t k = 0; k < qs.size(); ++k) {
          const auto begin = qs.text().begin() + static_cast<std::ptrdiff_t>(qs.position(k, 1));
          SymbolString sq(begin, begin + static_cast<std::ptrdiff_t>(qs.query(k).size()));
          auto encs = buildEncodings(idx, sq, k, findEdgeOccurrences(idx, sq));
          encodings.insert(encodings.end(), encs.begin(), encs.end());
        }
      } else {
        records = findEfgMems(idx, qs, cfg.kappa, options);
      }
    } else {
      records = findAllMemsGeneric(g, qs, cfg.kappa, cfg.lmax, options);
    }

    if (!cfg.filter_text.empty()) records = filterByText(g, records, loadRows(cfg.filter_text));
    if (cfg.asymmetric) records = asymmetricMems(records);

    int status = kOk;
    if (cfg.oracle) {
      OracleConfig oc;
      oc.max_walk_nodes = cfg.efg ? 0 : cfg.lmax;
      auto expected = oracleAllMems(g, q.sequences, cfg.kappa, oc);
      if (cfg.efg && cfg.format == OutputFormat::Encoding)
        std::erase_if(expected, [](const MemRecord& r) { return r.location.path.size() >= 4; });
      if (!cfg.filter_text.empty()) expected = filterByText(g, expected, loadRows(cfg.filter_text));
      if (cfg.asymmetric) expected = asymmetricMems(expected);
      status = reportOracleDiff(g, q, records, std::move(expected), err);
    }

    Sink sink(cfg.out, out);
    if (cfg.format == OutputFormat::Tsv) {
      writeMemTsv(sink.stream(), g, q.ids, records);
    } else {
      for (const auto& r : records) sink.stream() << recordJson(g, q.ids[r.query], r).dump() << '\n';
      for (const auto& e : encodings) sink.stream() << encodingJson(g, q.ids[e.query], e).dump() << '\n';
    }
    return status;
  });
}

int cmdFilterByText(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.filter_text.empty()) throw std::runtime_error("--filter-text is required");
    LoadedGraph lg = loadGraph(cfg.graph, cfg.blocks);
    std::vector<TsvRow> rows;
    if (cfg.mems.empty() || cfg.mems == "-") {
      rows = readMemTsv(std::cin, lg.graph);
    } else {
      std::ifstream in(cfg.mems);
      if (!in) throw std::runtime_error("cannot open " + cfg.mems);
      rows = readMemTsv(in, lg.graph);
    }
    TextFilter filter(lg.graph, loadRows(cfg.filter_text));
    std::erase_if(rows, [&](const TsvRow& r) { return !filter.occurs(spelled(lg.graph, r.record.location)); });
    Sink sink(cfg.out, out);
    writeMemTsv(sink.stream(), lg.graph, rows);
    return kOk;
  });
}

int cmdCountHarness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    HarnessParams params = cfg.harness;
    params.kappa = cfg.kappa;
    Sink sink(cfg.out, out);
    writeHarnessHeader(sink.stream());
    for (std::size_t t : params.row_counts) {
      HarnessRow row = runHarness(t, params);
      writeHarnessRow(sink.stream(), row);
      err << "t=" << t << ": block width " << row.block_width << '\n';
    }
    return kOk;
  });
}

int cmdValidate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    LoadedGraph lg = loadGraph(cfg.graph, cfg.blocks);
    const LabeledGraph& g = lg.graph;
    out << "nodes\t" << g.nodeCount() << "\nedges\t" << g.edgeCount() << "\ntotal_label_length\t"
        << g.totalLabelLength() << "\nmax_degree\t" << g.maxDegree() << "\nacyclic\t"
        << (g.isAcyclic() ? "yes" : "no") << '\n';
    if (!lg.efg) return kOk;
    out << "blocks\t" << lg.efg->blocks.size() << "\nheight\t" << lg.efg->height() << '\n';
    auto report = validateSemiRepeatFree(g, *lg.efg);
    out << "semi_repeat_free\t" << (report.ok ? "yes" : "no") << '\n';
    for (const auto& v : report.violations)
      out << "violation\t" << g.id(v.node) << '\t' << g.id(v.witness) << '\t' << v.offset << '\n';
    return report.ok ? kOk : kInvalid;
  });
}

int cmdIndex(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.out.empty()) throw std::runtime_error("--out is required");
    LoadedGraph lg = loadGraph(cfg.graph, cfg.blocks);
    const LabeledGraph& g = lg.graph;
    PathText pt;
    if (cfg.efg) {
      if (!lg.efg) throw std::runtime_error("EFG mode needs block tags or --blocks");
      if (!validateSemiRepeatFree(g, *lg.efg).ok) throw std::runtime_error("block graph is not semi-repeat-free");
      pt = buildEfg3Text(g);
    } else {
      double estimate = estimatePathsTextSize(g, cfg.lmax);
      if (estimate > cfg.max_text_size) throw GuardError("path text estimate exceeds --max-text-size");
      pt = buildPathsText(g, cfg.lmax);
    }
    SuffixArrayIndex index(pt.text(), g.alphabet().codeCount());
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    index.save(file);
    out << "text_length\t" << pt.text().size() << "\nchunks\t" << pt.chunks().size() << '\n';
    return kOk;
  });
}

}  // namespace gm::tools
