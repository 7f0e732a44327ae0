// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qnring/classify.hpp"
#include "qnring/constructions.hpp"
#include "qnring/dsl.hpp"
#include "qnring/harness.hpp"
#include "qnring/report.hpp"
#include "qnring_cli/commands.hpp"

namespace {

using namespace qnring;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail.clear();
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (ok) detail = what;
  }
};

bool is_2uq(const FiniteRing& r) { return unit_property(r, UnitProperty::k2UQ).holds; }

bool smooth(std::size_t m) {
  while (m % 2 == 0) m /= 2;
  while (m % 3 == 0) m /= 3;
  return m == 1;
}

const Corpus& default_corpus() {
  static const Corpus c = generate_corpus({});
  return c;
}

const std::vector<CheckResult>& default_results() {
  static const std::vector<CheckResult> r = run_all(default_corpus());
  return r;
}

const CheckResult& result(const std::string& id) {
  for (const auto& r : default_results())
    if (r.id == id) return r;
  throw std::runtime_error("missing check " + id);
}

void require_pass(Outcome& o, const std::string& id, std::size_t min_tested = 1) {
  const auto& r = result(id);
  if (r.status != CheckStatus::kPass)
    o.fail(id + " " + std::string(status_name(r.status)) + " (" +
           std::to_string(r.counterexamples.size()) + " counterexamples)");
  else if (r.rings_tested < min_tested)
    o.fail(id + " tested only " + std::to_string(r.rings_tested));
}

Outcome zmod_law() {
  Outcome o;
  for (std::size_t m = 2; m <= 200; ++m)
    if (is_2uq(zmod(m)) != smooth(m)) o.fail("m=" + std::to_string(m));
  o.note("199 moduli");
  return o;
}

Outcome division_rings() {
  Outcome o;
  const std::vector<std::pair<unsigned, unsigned>> qs = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                         {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}};
  for (auto [p, k] : qs) {
    const auto f = finite_field(p, k);
    const bool expected = f.order() == 2 || f.order() == 3;
    if (is_2uq(f) != expected) o.fail("GF(" + std::to_string(f.order()) + ")");
  }
  o.note("10 fields");
  return o;
}

Outcome matrix_obstruction() {
  Outcome o;
  for (std::size_t n : {2, 3, 4}) {
    const auto m = matrix_ring(2, zmod(n));
    const auto res = unit_property(m, UnitProperty::k2UQ);
    if (res.holds || !res.witness) {
      o.fail("M2(Z" + std::to_string(n) + ") reported 2-UQ");
      continue;
    }
    const Elem u = *res.witness;
    if (!m.is_unit(u) || m.quasi_nilpotents().contains(m.sub(m.mul(u, u), m.one())))
      o.fail("M2(Z" + std::to_string(n) + ") witness invalid");
  }
  const auto m = matrix_ring(2, zmod(2));
  const Elem a = 1 + 2 + 4;  // [[1,1],[1,0]]
  if (!m.is_unit(a) || m.sub(m.mul(a, a), m.one()) != a || m.quasi_nilpotents().contains(a))
    o.fail("A^2 - I = A witness does not validate");
  o.note("witnesses verified, A = [[1,1],[1,0]]");
  return o;
}

Outcome extensions() {
  Outcome o;
  const std::vector<FiniteRing> bases = {zmod(2), zmod(3), zmod(4), zmod(5), finite_field(2, 2)};
  std::size_t built = 0;
  for (const auto& r : bases) {
    const bool base = is_2uq(r);
    std::vector<std::function<FiniteRing()>> makers = {
        [&] { return trivial_extension(r); },  [&] { return upper_triangular(2, r); },
        [&] { return upper_triangular(3, r); }, [&] { return truncated_poly(r, 2); },
        [&] { return truncated_poly(r, 3); }};
    const char* names[] = {"TrivExt", "T2", "T3", "PolyMod2", "PolyMod3"};
    for (std::size_t i = 0; i < makers.size(); ++i) {
      try {
        const auto ext = makers[i]();
        ++built;
        if (is_2uq(ext) != base) o.fail(std::string(names[i]) + "(" + r.label() + ")");
      } catch (const CapExceeded&) {
      }
    }
  }
  o.note(std::to_string(built) + " extensions");
  return o;
}

Outcome group_rings() {
  Outcome o;
  struct Case {
    std::size_t m;
    FiniteGroup g;
    bool expected;
  };
  const std::vector<Case> cases = {
      {2, cyclic_group(2), true},         {2, cyclic_group(4), true},
      {2, builtin_group("Klein"), true},  {2, builtin_group("D4"), true},
      {2, builtin_group("Q8"), true},     {2, cyclic_group(3), false},
      {2, builtin_group("S3"), false},    {3, cyclic_group(3), true},
      {3, cyclic_group(4), false}};
  std::size_t lemma_cases = 0;
  for (const auto& c : cases) {
    const auto base = zmod(c.m);
    const auto gr = group_ring(base, c.g);
    const std::string name = "Z" + std::to_string(c.m) + "." + c.g.label();
    if (is_2uq(gr.ring) != c.expected) o.fail(name);
    for (std::size_t p : {2, 3}) {
      if (!is_p_group(c.g, p) || !base.jacobson_radical().contains(base.scalar(p))) continue;
      ++lemma_cases;
      if (!gr.augmentation_ideal.members().is_subset_of(gr.ring.jacobson_radical().members()))
        o.fail("augmentation ideal not in J for " + name);
    }
  }
  if (lemma_cases == 0) o.fail("no case with p in J(R)");
  o.note("9 group rings, " + std::to_string(lemma_cases) + " augmentation cases");
  return o;
}

Outcome artinian_coincidence() {
  Outcome o;
  for (const auto& e : default_corpus().entries) {
    const auto& r = e.report();
    if (r.flag(Flag::k2UQ) != r.flag(Flag::k2UJ) || r.flag(Flag::k2UJ) != r.flag(Flag::k2UU))
      o.fail(e.text);
  }
  require_pass(o, "C-3.7", default_corpus().entries.size());
  o.note(std::to_string(default_corpus().entries.size()) + " rings");
  return o;
}

Outcome potent_equivalences() {
  Outcome o;
  for (const auto& e : default_corpus().entries) {
    const auto& r = e.report();
    if ((r.flag(Flag::kClean) && r.flag(Flag::k2UQ)) != r.flag(Flag::kSemitripotent))
      o.fail("clean characterization: " + e.text);
  }
  require_pass(o, "C-3.5");
  require_pass(o, "C-3.6");
  o.note("C-3.5 tested " + std::to_string(result("C-3.5").rings_tested) + ", C-3.6 tested " +
         std::to_string(result("C-3.6").rings_tested));
  return o;
}

Outcome two_units() {
  Outcome o;
  std::size_t tested = 0;
  for (const auto& e : default_corpus().entries) {
    if (!e.report().flag(Flag::k2UQ) || e.ring().order() < 2) continue;
    ++tested;
    const auto& r = e.ring();
    const auto units = r.units().members();
    for (Elem u : units)
      for (Elem v : units)
        if (r.add(r.mul(u, u), v) == r.one()) o.fail(e.text);
  }
  require_pass(o, "C-3.1");
  o.note(std::to_string(tested) + " 2-UQ rings scanned");
  return o;
}

Outcome qn_laws() {
  Outcome o;
  require_pass(o, "C-2.4", 20);
  const auto& entries = default_corpus().entries;
  std::mt19937_64 rng(kDefaultCorpusSeed);
  std::size_t corner_rings = 0, corners = 0;
  for (std::size_t attempt = 0; corner_rings < 10 && attempt < 1000; ++attempt) {
    const auto& e = entries[rng() % entries.size()];
    const auto& r = e.ring();
    if (r.idempotents().count() <= 2) continue;
    ++corner_rings;
    r.idempotents().for_each([&](Elem idem) {
      ++corners;
      const auto c = corner_ring(r, idem);
      for (Elem x = 0; x < c.ring.order(); ++x)
        if (r.quasi_nilpotents().contains(c.embedding[x]) && !c.ring.quasi_nilpotents().contains(x))
          o.fail("corner " + e.text + " e=" + std::to_string(idem));
    });
  }
  if (corner_rings < 10) o.fail("fewer than 10 rings with nontrivial idempotents");
  for (const auto& e : entries) {
    const auto& r = e.ring();
    const auto& qn = r.quasi_nilpotents();
    if (!(r.nilpotents() | r.jacobson_radical().members()).is_subset_of(qn) ||
        r.units().intersects(qn))
      o.fail("inclusions " + e.text);
  }
  o.note(std::to_string(result("C-2.4").rings_tested) + " products, " + std::to_string(corners) +
         " corners, " + std::to_string(entries.size()) + " rings");
  return o;
}

Outcome definition_consistency() {
  Outcome o;
  for (const auto& e : default_corpus().entries)
    if (is_2uq(e.ring()) != two_uq_strong_form(e.ring()).holds)
      o.fail("forms disagree on " + e.text);
  require_pass(o, "C-DEF", default_corpus().entries.size());
  o.note(std::to_string(default_corpus().entries.size()) + " rings");
  return o;
}

Outcome infrastructure() {
  Outcome o;
  for (const auto& e : default_corpus().entries)
    if (const auto v = validate(e.ring()); !v.ok()) o.fail(e.text + ": " + v.message);
  const auto z2 = std::make_shared<const FiniteRing>(zmod(2));
  const std::vector<FiniteRing> extra = {
      finite_field(3, 2), matrix_ring(2, zmod(3)), group_ring(zmod(2), builtin_group("Q8")).ring,
      morita_ring(scalar_context(z2, 1)).ring, trivial_extension(zmod(4))};
  for (const auto& r : extra)
    if (const auto v = validate(r); !v.ok()) o.fail(r.label() + ": " + v.message);

  const std::string text = write_corpus(default_corpus());
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && to_string(parse_spec(line)) != line)
      o.fail("round trip " + line);
  if (write_corpus(read_corpus(text)) != text) o.fail("corpus file round trip");

  std::ostringstream out, err;
  if (const int code = cli::cmd_check({}, out, err); code != 0)
    o.fail("default check exited " + std::to_string(code));

  auto golden = [] {
    const auto built = build_from_text("M(2, Z(2))");
    return dump(analysis_document(built, classify(*built.ring), element_set_names(), true));
  };
  if (golden() != golden()) o.fail("analysis JSON not byte-stable");
  CorpusParams small;
  small.max_order = 32;
  auto check_json = [&] {
    const auto c = generate_corpus(small);
    return dump(check_document(c, run_all(c)));
  };
  if (check_json() != check_json()) o.fail("check JSON not byte-stable");
  o.note("axioms, round trip, check exit 0, stable JSON");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Z_m 2-UQ iff m = 2^a 3^b, 2 <= m <= 200", zmod_law},
      {"division rings: only GF(2), GF(3) are 2-UQ", division_rings},
      {"M_2(Z_2), M_2(Z_3), M_2(Z_4) not 2-UQ", matrix_obstruction},
      {"extensions are 2-UQ iff the base is", extensions},
      {"group rings", group_rings},
      {"2-UQ = 2-UJ = 2-UU on the corpus", artinian_coincidence},
      {"potent equivalences and clean characterization", potent_equivalences},
      {"no u^2 + v = 1 in 2-UQ rings", two_units},
      {"quasi-nilpotent laws", qn_laws},
      {"2-UQ definition forms agree", definition_consistency},
      {"infrastructure", infrastructure},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [%s] (%.1f s)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
