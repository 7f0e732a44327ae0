#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qnring/constructions.hpp"
#include "qnring/harness.hpp"

namespace qnring::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,    // parse, semantic or malformed-corpus error
  kCapExceeded = 2,   // a ring exceeds --max-order
  kCheckFailed = 3,   // at least one harness check failed
  kInternalError = 4, // a structural assertion inside the library fired
};

struct AnalyzeOptions {
  std::string spec;
  std::optional<std::string> json_path;  // "-" writes JSON to stdout
  std::vector<std::string> sets;
  bool named = false;
  std::size_t max_order = kDefaultOrderCap;
};

struct CheckOptions {
  std::optional<std::string> corpus_path;
  std::vector<std::string> only;
  std::optional<std::string> json_path;
  std::uint64_t seed = kDefaultCorpusSeed;
  std::vector<std::string> families;
  /// Generated corpus: largest ring order (default 256). Corpus file: build
  /// cap per line (default 20000).
  std::optional<std::size_t> max_order;
};

struct CorpusOptions {
  std::size_t max_order = kDefaultCorpusMaxOrder;
  std::uint64_t seed = kDefaultCorpusSeed;
  std::vector<std::string> families;
  std::optional<std::string> output;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int cmd_corpus(const CorpusOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qnring::cli
