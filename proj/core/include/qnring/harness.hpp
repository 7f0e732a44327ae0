#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qnring/classify.hpp"
#include "qnring/dsl.hpp"

namespace qnring {

inline constexpr std::uint64_t kDefaultCorpusSeed = 20240601;
inline constexpr std::size_t kDefaultCorpusMaxOrder = 256;

/// Families understood by generate_corpus.
const std::vector<std::string>& corpus_families();

struct CorpusParams {
  std::size_t max_order = kDefaultCorpusMaxOrder;
  std::uint64_t seed = kDefaultCorpusSeed;
  /// Empty means every family.
  std::vector<std::string> families;
};

struct ReportSlot;

struct CorpusEntry {
  std::string text;  // canonical DSL form
  BuiltRing built;

  const FiniteRing& ring() const { return *built.ring; }
  /// Full classification, computed once and shared between copies.
  const ClassReport& report() const;

  std::shared_ptr<ReportSlot> slot;
};

struct Corpus {
  std::uint64_t seed = kDefaultCorpusSeed;
  std::vector<CorpusEntry> entries;
  /// Specs the generator dropped, with the reason (cap violations).
  std::vector<std::string> skipped;
};

CorpusEntry make_entry(BuiltRing built);

/// Deterministic for fixed parameters. Throws InvalidArgument for an unknown
/// family name.
Corpus generate_corpus(const CorpusParams& params);

/// A malformed corpus file line (1-based).
class CorpusError : public RingError {
 public:
  CorpusError(std::size_t line, const std::string& message)
      : RingError("corpus line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// "# seed=<n>" followed by one DSL expression per line.
std::string write_corpus(const Corpus& corpus);

/// Parses and builds every line. Blank lines and other '#' lines are ignored.
Corpus read_corpus(std::string_view text, const BuildOptions& options = {});

enum class CheckStatus { kPass, kFail, kSkipped };
std::string_view status_name(CheckStatus status);

struct Counterexample {
  std::string ring;
  std::vector<Elem> witness;
  std::string note;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  std::string description;
  std::size_t rings_tested = 0;
  CheckStatus status = CheckStatus::kSkipped;
  std::vector<Counterexample> counterexamples;
  /// Supporting data recorded on success, such as the witness units of
  /// the matrix obstruction.
  std::vector<Counterexample> evidence;
  std::string skip_reason;
  std::int64_t runtime_ms = 0;
};

struct CheckInfo {
  std::string_view id;
  std::string_view anchor;
  std::string_view description;
};

const std::vector<CheckInfo>& check_catalog();
bool is_known_check(std::string_view id);

struct HarnessOptions {
  /// Order cap for rings the harness builds itself (products of corpus
  /// pairs, Morita contexts, formal triangular rings).
  std::size_t derived_max_order = 1024;
  std::uint64_t seed = kDefaultCorpusSeed;
  /// Random corpus pairs used by the product checks.
  std::size_t product_pairs = 20;
};

/// Throws InvalidArgument for an unknown id.
CheckResult run_check(std::string_view id, const Corpus& corpus,
                      const HarnessOptions& options = {});

/// Runs the given checks (every check when `ids` is empty) in catalog order.
std::vector<CheckResult> run_all(const Corpus& corpus, const std::vector<std::string>& ids = {},
                                 const HarnessOptions& options = {});

/// m = 2^a 3^b with a, b >= 0 and m >= 2.
bool is_2_3_smooth(std::size_t m);

}  // namespace qnring
