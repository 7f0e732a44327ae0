#include "qnring_cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qnring/classify.hpp"
#include "qnring/dsl.hpp"
#include "qnring/report.hpp"

namespace qnring::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

bool write_text(const std::string& path, const std::string& text, std::ostream& out,
                std::ostream& err) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string join_elements(const BuiltRing& built, const ElementSet& s, bool named) {
  std::string out;
  for (Elem e : s.members()) {
    if (!out.empty()) out += ", ";
    out += named ? element_name(built, e) : std::to_string(e);
  }
  return "{" + out + "}";
}

void print_report(const BuiltRing& built, const ClassReport& report,
                  const std::vector<std::string>& sets, bool named, long long runtime,
                  std::ostream& out) {
  out << "ring     " << report.label << "\n";
  out << "order    " << report.order << "\n";
  out << "runtime  " << runtime << " ms\n\n";
  const auto& s = report.sizes;
  out << "|U|=" << s.units << "  |Id|=" << s.idempotents << "  |Nil|=" << s.nilpotents
      << "  |C|=" << s.center << "  |QN|=" << s.quasi_nilpotents << "  |J|=" << s.jacobson
      << "  |Nil*|=" << s.prime_radical << "\n\n";
  for (Flag f : all_flags()) {
    out << std::left << std::setw(22) << flag_name(f);
    if (auto it = report.witnesses.find(f); it != report.witnesses.end()) {
      out << std::setw(7) << (report.flag(f) ? "true" : "false") << "witness";
      for (Elem w : it->second)
        out << " " << (named ? element_name(built, w) : std::to_string(w));
    } else {
      out << (report.flag(f) ? "true" : "false");
    }
    out << "\n";
  }
  if (!sets.empty()) {
    out << "\n";
    for (const auto& name : sets)
      out << name << " = " << join_elements(built, element_set(*built.ring, name), named)
          << "\n";
  }
}

void print_check(const CheckResult& r, std::ostream& out) {
  out << std::left << std::setw(9) << r.id << std::setw(8) << status_name(r.status)
      << "tested=" << std::setw(6) << r.rings_tested << r.runtime_ms << " ms\n";
  if (r.status == CheckStatus::kSkipped) out << "         " << r.skip_reason << "\n";
  for (const auto& c : r.counterexamples) {
    out << "         counterexample " << c.ring << " witness [";
    for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? ", " : "") << c.witness[i];
    out << "] " << c.note << "\n";
  }
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  try {
    for (const auto& s : options.sets) element_set(zmod(1), s);  // validates names
    const auto start = Clock::now();
    const BuiltRing built = build_from_text(options.spec, {options.max_order, true});
    const ClassReport report = classify(*built.ring);
    const long long runtime = elapsed_ms(start);
    if (options.json_path) {
      const std::string text =
          dump(analysis_document(built, report, options.sets, options.named));
      if (!write_text(*options.json_path, text, out, err)) return kInputError;
      if (*options.json_path == "-") return kOk;
    }
    print_report(built, report, options.sets, options.named, runtime, out);
    return kOk;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise it with --max-order)\n";
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  try {
    Corpus corpus;
    if (options.corpus_path) {
      const auto text = read_file(*options.corpus_path);
      if (!text) {
        err << "error: cannot read " << *options.corpus_path << "\n";
        return kInputError;
      }
      corpus = read_corpus(*text, {options.max_order.value_or(kDefaultOrderCap), true});
    } else {
      CorpusParams params;
      params.max_order = options.max_order.value_or(kDefaultCorpusMaxOrder);
      params.seed = options.seed;
      params.families = options.families;
      corpus = generate_corpus(params);
    }
    HarnessOptions harness;
    harness.seed = options.seed;
    const auto results = run_all(corpus, options.only, harness);
    bool failed = false;
    for (const auto& r : results) {
      print_check(r, out);
      failed = failed || r.status == CheckStatus::kFail;
    }
    out << "corpus: " << corpus.entries.size() << " rings, seed " << corpus.seed << "\n";
    if (options.json_path &&
        !write_text(*options.json_path, dump(check_document(corpus, results)), out, err))
      return kInputError;
    return failed ? kCheckFailed : kOk;
  } catch (const CorpusError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_corpus(const CorpusOptions& options, std::ostream& out, std::ostream& err) {
  try {
    CorpusParams params;
    params.max_order = options.max_order;
    params.seed = options.seed;
    params.families = options.families;
    const Corpus corpus = generate_corpus(params);
    for (const auto& s : corpus.skipped) err << "skipped " << s << "\n";
    const std::string text = write_corpus(corpus);
    if (!write_text(options.output.value_or("-"), text, out, err)) return kInputError;
    return kOk;
  } catch (const RingError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ring analysis and 2-UQ classification"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Build a ring from a spec and classify it");
  a->add_option("spec", analyze.spec, "Ring spec, e.g. \"T(2, Z(3))\"")->required();
  a->add_option("--json", analyze.json_path, "Write the JSON report to PATH ('-' for stdout)");
  a->add_option("--sets", analyze.sets, "Element sets to list: U,Id,Nil,C,QN,J,NilStar")
      ->delimiter(',');
  a->add_flag("--named", analyze.named, "Render elements structurally");
  a->add_option("--max-order", analyze.max_order, "Largest ring order to build")
      ->capture_default_str();

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Run the theorem checks over a corpus");
  c->add_option("--corpus", check.corpus_path, "Corpus file (one spec per line)");
  c->add_option("--only", check.only, "Comma-separated check ids")->delimiter(',');
  c->add_option("--json", check.json_path, "Write the JSON report to PATH ('-' for stdout)");
  c->add_option("--seed", check.seed, "Seed for the generated corpus and sampled pairs")
      ->capture_default_str();
  c->add_option("--families", check.families, "Families of the generated corpus")
      ->delimiter(',');
  c->add_option("--max-order", check.max_order,
                "Generated corpus: largest order (256). Corpus file: build cap (20000)");

  CorpusOptions corpus;
  auto* g = app.add_subcommand("corpus", "Write a deterministic corpus file");
  g->add_option("--max-order", corpus.max_order, "Largest ring order")->capture_default_str();
  g->add_option("--seed", corpus.seed, "Generator seed")->capture_default_str();
  g->add_option("--families", corpus.families,
                "Comma-separated subset of zmod,field,product,matrix,triangular,trivext,"
                "polymod,groupring,quotient,corner")
      ->delimiter(',');
  g->add_option("--output", corpus.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (a->parsed()) return cmd_analyze(analyze, out, err);
  if (c->parsed()) return cmd_check(check, out, err);
  return cmd_corpus(corpus, out, err);
}

}  // namespace qnring::cli
