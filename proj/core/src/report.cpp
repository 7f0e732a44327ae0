#include "qnring/report.hpp"

#include "qnring/errors.hpp"

namespace qnring {

namespace {

Json tool_json() { return Json{{"name", "qnring"}, {"version", kToolVersion}}; }

Json elements_json(const std::vector<Elem>& elems) {
  Json out = Json::array();
  for (Elem e : elems) out.push_back(e);
  return out;
}

}  // namespace

const std::vector<std::string>& element_set_names() {
  static const std::vector<std::string> kNames = {"U", "Id", "Nil", "C", "QN", "J", "NilStar"};
  return kNames;
}

const ElementSet& element_set(const FiniteRing& ring, std::string_view name) {
  if (name == "U") return ring.units();
  if (name == "Id") return ring.idempotents();
  if (name == "Nil") return ring.nilpotents();
  if (name == "C") return ring.center();
  if (name == "QN") return ring.quasi_nilpotents();
  if (name == "J") return ring.jacobson_radical().members();
  if (name == "NilStar") return ring.prime_radical().members();
  throw InvalidArgument("unknown element set '" + std::string(name) +
                        "' (expected U, Id, Nil, C, QN, J or NilStar)");
}

Json to_json(const Cardinalities& s) {
  return Json{{"U", s.units},          {"Id", s.idempotents},
              {"Nil", s.nilpotents},   {"C", s.center},
              {"QN", s.quasi_nilpotents}, {"J", s.jacobson},
              {"NilStar", s.prime_radical}};
}

Json to_json(const ClassReport& report) {
  Json flags = Json::object();
  for (Flag f : all_flags()) flags[std::string(flag_name(f))] = report.flag(f);
  Json witnesses = Json::object();
  for (Flag f : all_flags()) {
    auto it = report.witnesses.find(f);
    if (it != report.witnesses.end())
      witnesses[std::string(flag_name(f))] = elements_json(it->second);
  }
  return Json{{"label", report.label},
              {"order", report.order},
              {"sizes", to_json(report.sizes)},
              {"flags", std::move(flags)},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const Counterexample& c) {
  return Json{{"ring", c.ring}, {"witness", elements_json(c.witness)}, {"note", c.note}};
}

Json to_json(const CheckResult& r) {
  Json out{{"id", r.id},
           {"anchor", r.anchor},
           {"description", r.description},
           {"status", status_name(r.status)},
           {"rings_tested", r.rings_tested}};
  if (r.status == CheckStatus::kSkipped) out["skip_reason"] = r.skip_reason;
  Json cex = Json::array();
  for (const auto& c : r.counterexamples) cex.push_back(to_json(c));
  out["counterexamples"] = std::move(cex);
  Json evidence = Json::array();
  for (const auto& c : r.evidence) evidence.push_back(to_json(c));
  out["evidence"] = std::move(evidence);
  return out;
}

Json element_sets_json(const BuiltRing& built, const std::vector<std::string>& sets, bool named) {
  Json out = Json::object();
  for (const auto& name : sets) {
    const ElementSet& s = element_set(*built.ring, name);
    Json list = Json::array();
    for (Elem e : s.members()) {
      if (named)
        list.push_back(Json{{"index", e}, {"name", element_name(built, e)}});
      else
        list.push_back(e);
    }
    out[name] = std::move(list);
  }
  return out;
}

Json analysis_document(const BuiltRing& built, const ClassReport& report,
                       const std::vector<std::string>& sets, bool named) {
  Json doc{{"schema", kReportSchema},
           {"tool", tool_json()},
           {"kind", "analysis"},
           {"spec", to_string(built.spec)},
           {"report", to_json(report)}};
  if (!sets.empty()) doc["sets"] = element_sets_json(built, sets, named);
  return doc;
}

Json check_document(const Corpus& corpus, const std::vector<CheckResult>& results) {
  std::size_t pass = 0, fail = 0, skipped = 0;
  Json checks = Json::array();
  for (const auto& r : results) {
    pass += r.status == CheckStatus::kPass;
    fail += r.status == CheckStatus::kFail;
    skipped += r.status == CheckStatus::kSkipped;
    checks.push_back(to_json(r));
  }
  return Json{{"schema", kReportSchema},
              {"tool", tool_json()},
              {"kind", "check"},
              {"corpus", Json{{"seed", corpus.seed}, {"entries", corpus.entries.size()}}},
              {"summary", Json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}}},
              {"checks", std::move(checks)}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qnring
