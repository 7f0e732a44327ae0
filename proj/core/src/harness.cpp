#include "qnring/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "qnring/ring_ops.hpp"

namespace qnring {

struct ReportSlot {
  std::once_flag once;
  std::optional<ClassReport> report;
};

const ClassReport& CorpusEntry::report() const {
  std::call_once(slot->once, [&] { slot->report = classify(ring()); });
  return *slot->report;
}

CorpusEntry make_entry(BuiltRing built) {
  CorpusEntry e;
  e.text = to_string(built.spec);
  e.built = std::move(built);
  e.slot = std::make_shared<ReportSlot>();
  return e;
}

const std::vector<std::string>& corpus_families() {
  static const std::vector<std::string> kFamilies = {
      "zmod", "field", "product", "matrix", "triangular", "trivext",
      "polymod", "groupring", "quotient", "corner"};
  return kFamilies;
}

// ---------------------------------------------------------------------------
// Corpus generation

namespace {

class CorpusBuilder {
 public:
  CorpusBuilder(const CorpusParams& params, Corpus& out)
      : options_{params.max_order, true}, out_(out) {}

  /// Adds the ring unless it is a duplicate or exceeds the cap. Returns the
  /// entry index on success.
  std::optional<std::size_t> add(const std::string& text) {
    RingSpec spec = parse_spec(text);
    const std::string canonical = to_string(spec);
    if (auto it = seen_.find(canonical); it != seen_.end()) return it->second;
    if (rejected_.count(canonical)) return std::nullopt;
    try {
      out_.entries.push_back(make_entry(elaborate(spec, options_)));
    } catch (const CapExceeded& e) {
      rejected_.insert(canonical);
      out_.skipped.push_back(canonical + ": " + e.what());
      return std::nullopt;
    }
    seen_[canonical] = out_.entries.size() - 1;
    return out_.entries.size() - 1;
  }

  /// Builds without adding, for rings that only seed other families.
  std::optional<BuiltRing> probe(const std::string& text) {
    try {
      return elaborate(parse_spec(text), options_);
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
  }

  std::size_t max_order() const { return options_.max_order; }

 private:
  BuildOptions options_;
  Corpus& out_;
  std::map<std::string, std::size_t> seen_;
  std::set<std::string> rejected_;
};

std::vector<std::pair<unsigned, unsigned>> prime_powers(std::size_t bound) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    std::size_t q = static_cast<std::size_t>(p) * p;
    for (unsigned k = 2; q <= bound; ++k, q *= p) out.emplace_back(p, k);
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    std::size_t qa = 1, qb = 1;
    for (unsigned i = 0; i < a.second; ++i) qa *= a.first;
    for (unsigned i = 0; i < b.second; ++i) qb *= b.first;
    return qa != qb ? qa < qb : a < b;
  });
  return out;
}

std::string z(std::size_t m) { return "Z(" + std::to_string(m) + ")"; }

}  // namespace

Corpus generate_corpus(const CorpusParams& params) {
  std::set<std::string> families(params.families.begin(), params.families.end());
  for (const auto& f : families)
    if (std::find(corpus_families().begin(), corpus_families().end(), f) ==
        corpus_families().end())
      throw InvalidArgument("unknown corpus family '" + f + "'");
  const auto wants = [&](const std::string& f) { return families.empty() || families.count(f); };

  Corpus corpus;
  corpus.seed = params.seed;
  CorpusBuilder b(params, corpus);
  std::mt19937_64 rng(params.seed);
  const std::size_t cap = params.max_order;

  if (wants("zmod"))
    for (std::size_t m = 2; m <= std::min<std::size_t>(36, cap); ++m) b.add(z(m));

  if (wants("field"))
    for (auto [p, k] : prime_powers(cap))
      b.add("GF(" + std::to_string(p) + ", " + std::to_string(k) + ")");

  if (wants("product")) {
    for (const char* fixed : {"Prod(Z(2), Z(3))", "Prod(Z(4), Z(3))", "Prod(Z(2), Z(2))",
                              "Prod(Z(3), Z(3))", "Prod(Z(2), Z(2), Z(2))",
                              "Prod(Z(2), GF(2, 2))", "Prod(Z(2), Z(5))"})
      b.add(fixed);
    const std::vector<std::string> pool = {
        "Z(2)",       "Z(3)",       "Z(4)",       "Z(5)",        "Z(6)",
        "Z(7)",       "Z(8)",       "Z(9)",       "Z(12)",       "GF(2, 2)",
        "GF(2, 3)",   "GF(3, 2)",   "T(2, Z(2))", "TrivExt(Z(2))", "M(2, Z(2))",
        "PolyMod(Z(3), 2)"};
    std::vector<std::size_t> order;
    for (const auto& s : pool) {
      auto built = b.probe(s);
      order.push_back(built ? built->ring->order() : cap + 1);
    }
    std::size_t made = 0;
    for (int attempt = 0; attempt < 2000 && made < 20; ++attempt) {
      const std::size_t i = rng() % pool.size(), j = rng() % pool.size();
      if (order[i] > cap || order[j] > cap || order[i] * order[j] > cap) continue;
      if (b.add("Prod(" + pool[i] + ", " + pool[j] + ")")) ++made;
    }
  }

  if (wants("matrix"))
    for (const char* s : {"M(2, Z(2))", "M(2, Z(3))", "M(2, Z(4))", "M(2, GF(2, 2))"}) b.add(s);

  if (wants("triangular")) {
    for (const char* base : {"Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "GF(2, 2)"})
      for (int n : {2, 3}) b.add("T(" + std::to_string(n) + ", " + base + ")");
  }

  if (wants("trivext")) {
    for (std::size_t m = 2; m <= 16; ++m) b.add("TrivExt(" + z(m) + ")");
    for (const char* base : {"GF(2, 2)", "GF(2, 3)", "GF(3, 2)", "T(2, Z(2))", "M(2, Z(2))",
                             "Prod(Z(2), Z(3))", "PolyMod(Z(2), 2)"})
      b.add(std::string("TrivExt(") + base + ")");
  }

  if (wants("polymod")) {
    for (const char* base : {"Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "GF(2, 2)", "GF(3, 2)"})
      for (int n : {2, 3}) b.add(std::string("PolyMod(") + base + ", " + std::to_string(n) + ")");
  }

  if (wants("groupring")) {
    const char* bases[] = {"Z(2)", "Z(3)", "Z(4)", "Z(5)", "GF(2, 2)", "Z(6)", "Z(9)"};
    const char* groups[] = {"C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(8)",
                            "Klein", "S3", "D4", "Q8", "GProd(C(2), C(4))",
                            "GProd(C(2), C(2), C(2))", "GProd(C(3), C(3))"};
    for (const char* base : bases) {
      auto built = b.probe(base);
      if (!built) continue;
      for (const char* g : groups) {
        // Only combinations whose order |R|^|G| fits are attempted.
        const std::size_t n = build_group(parse_group_spec(g)).order();
        std::size_t order = 1;
        for (std::size_t i = 0; i < n && order <= cap; ++i) order *= built->ring->order();
        if (order <= cap) b.add(std::string("GroupRing(") + base + ", " + g + ")");
      }
    }
  }

  if (wants("quotient")) {
    const char* pool[] = {"Z(12)",         "Z(36)",          "Z(32)",
                          "T(2, Z(4))",    "PolyMod(Z(4), 2)", "PolyMod(Z(2), 3)",
                          "GroupRing(Z(2), C(4))", "GroupRing(Z(4), C(2))", "M(2, Z(4))",
                          "TrivExt(Z(8))", "Prod(Z(4), Z(9))", "GroupRing(Z(2), S3)"};
    for (const char* s : pool) {
      auto built = b.probe(s);
      if (!built) continue;
      const std::size_t n = built->ring->order();
      for (std::size_t gens = 1; gens <= 2; ++gens) {
        std::vector<std::uint64_t> g;
        for (std::size_t i = 0; i < gens; ++i) g.push_back(1 + rng() % (n - 1));
        RingSpec q;
        q.kind = RingSpec::Kind::kQuot;
        q.rings.push_back(built->spec);
        q.gens = g;
        // Skip quotients by the whole ring; the zero ring adds nothing.
        const auto ideal = ideal_generated(*built->ring, std::vector<Elem>(g.begin(), g.end()));
        if (ideal.size() == n) continue;
        b.add(to_string(q));
      }
    }
  }

  if (wants("corner")) {
    const char* pool[] = {"Z(6)",       "Z(12)",      "Z(30)",      "M(2, Z(2))",
                          "M(2, Z(3))", "T(2, Z(2))", "T(2, Z(3))", "T(3, Z(2))",
                          "Prod(Z(2), Z(3))", "Prod(Z(4), Z(9))", "GroupRing(Z(3), C(2))",
                          "GroupRing(Z(2), S3)"};
    for (const char* s : pool) {
      auto built = b.probe(s);
      if (!built) continue;
      const FiniteRing& r = *built->ring;
      for (Elem e : r.idempotents().members()) {
        if (e == r.zero() || e == r.one()) continue;
        b.add(std::string("Corner(") + to_string(built->spec) + ", " + std::to_string(e) + ")");
      }
    }
  }
  return corpus;
}

std::string write_corpus(const Corpus& corpus) {
  std::string out = "# seed=" + std::to_string(corpus.seed) + "\n";
  for (const auto& e : corpus.entries) out += e.text + "\n";
  return out;
}

Corpus read_corpus(std::string_view text, const BuildOptions& options) {
  Corpus corpus;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (line[first] == '#') {
      const std::string body = line.substr(first + 1);
      const auto key = body.find("seed=");
      if (key != std::string::npos) {
        try {
          corpus.seed = std::stoull(body.substr(key + 5));
        } catch (const std::exception&) {
          throw CorpusError(line_no, "malformed seed header");
        }
      }
      if (end == text.size()) break;
      continue;
    }
    try {
      corpus.entries.push_back(make_entry(build_from_text(line, options)));
    } catch (const RingError& e) {
      throw CorpusError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Checks

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool is_2_3_smooth(std::size_t m) {
  if (m < 2) return false;
  while (m % 2 == 0) m /= 2;
  while (m % 3 == 0) m /= 3;
  return m == 1;
}

namespace {

struct Context {
  const Corpus& corpus;
  const HarnessOptions& options;
  CheckResult& result;

  void tested() { ++result.rings_tested; }
  void fail(const std::string& ring, std::vector<Elem> witness, std::string note) {
    result.counterexamples.push_back({ring, std::move(witness), std::move(note)});
  }
  void record(const std::string& ring, std::vector<Elem> witness, std::string note) {
    result.evidence.push_back({ring, std::move(witness), std::move(note)});
  }
};

using CheckFn = void (*)(Context&);

UnitPropertyResult uq2(const FiniteRing& r) { return unit_property(r, UnitProperty::k2UQ); }

std::vector<Elem> witness_of(const UnitPropertyResult& r) {
  return r.witness ? std::vector<Elem>{*r.witness} : std::vector<Elem>{};
}

bool nontrivial(const CorpusEntry& e) { return e.ring().order() >= 2; }
bool q2(const CorpusEntry& e) { return e.report().flag(Flag::k2UQ); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string describe_flags(std::initializer_list<std::pair<const char*, bool>> values) {
  std::string out;
  for (const auto& [name, v] : values)
    out += std::string(out.empty() ? "" : ", ") + name + "=" + yes_no(v);
  return out;
}

bool all_equal(std::initializer_list<bool> values) {
  const bool first = *values.begin();
  for (bool v : values)
    if (v != first) return false;
  return true;
}

/// Mixed-radix decode of a product element into factor coordinates.
std::vector<Elem> decode(std::size_t x, const std::vector<const FiniteRing*>& factors) {
  std::vector<Elem> out;
  for (const auto* f : factors) {
    out.push_back(static_cast<Elem>(x % f->order()));
    x /= f->order();
  }
  return out;
}

/// Seeded random pairs of nontrivial corpus entries whose product fits the
/// derived cap.
std::vector<std::pair<std::size_t, std::size_t>> product_pairs(const Context& ctx) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < ctx.corpus.entries.size(); ++i)
    if (nontrivial(ctx.corpus.entries[i])) pool.push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (pool.empty()) return out;
  std::mt19937_64 rng(ctx.options.seed);
  for (int attempt = 0; attempt < 10000 && out.size() < ctx.options.product_pairs; ++attempt) {
    const std::size_t i = pool[rng() % pool.size()], j = pool[rng() % pool.size()];
    const auto& a = ctx.corpus.entries[i].ring();
    const auto& b = ctx.corpus.entries[j].ring();
    if (a.order() * b.order() <= ctx.options.derived_max_order) out.emplace_back(i, j);
  }
  return out;
}

struct ProductInstance {
  std::string label;
  RingPtr product;
  std::vector<RingPtr> factors;
};

std::vector<ProductInstance> product_instances(const Context& ctx) {
  std::vector<ProductInstance> out;
  for (const auto& e : ctx.corpus.entries) {
    if (e.built.spec.kind != RingSpec::Kind::kProd || !nontrivial(e)) continue;
    ProductInstance p{e.text, e.built.ring, {}};
    for (const auto& c : e.built.children) p.factors.push_back(c.ring);
    out.push_back(std::move(p));
  }
  const BuildOptions opts{ctx.options.derived_max_order, true};
  for (auto [i, j] : product_pairs(ctx)) {
    const auto& a = ctx.corpus.entries[i];
    const auto& b = ctx.corpus.entries[j];
    auto prod = std::make_shared<const FiniteRing>(direct_product(a.ring(), b.ring(), opts));
    out.push_back({prod->label(), prod, {a.built.ring, b.built.ring}});
  }
  return out;
}

void check_good_subrings(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !q2(e)) continue;
    const FiniteRing& r = e.ring();
    const auto& spec = e.built.spec;
    std::vector<std::pair<std::string, ElementSet>> candidates;
    candidates.emplace_back("center", r.center());
    if (!e.built.children.empty()) {
      const FiniteRing& base = *e.built.children[0].ring;
      switch (spec.kind) {
        case RingSpec::Kind::kM:
        case RingSpec::Kind::kT:
          candidates.emplace_back(
              "scalar matrices",
              scalar_matrix_copy(spec.ints[0], base, spec.kind == RingSpec::Kind::kT));
          break;
        case RingSpec::Kind::kTrivExt:
        case RingSpec::Kind::kPolyMod:
          candidates.emplace_back("constants", constant_copy(base, r.order()));
          break;
        case RingSpec::Kind::kGroupRing:
          candidates.emplace_back("coefficient ring",
                                  group_ring_coefficient_copy(base, *e.built.group));
          break;
        default: break;
      }
    }
    for (const auto& [name, s] : candidates) {
      if (!is_unital_subring(r, s) || !is_good_subring(r, s)) continue;
      ctx.tested();
      const EmbeddedRing sub = subring(r, s);
      const auto res = uq2(sub.ring);
      if (!res.holds)
        ctx.fail(e.text, {sub.embedding[*res.witness]}, "good subring (" + name + ") is not 2-UQ");
    }
  }
}

void check_qn_product(Context& ctx) {
  for (const auto& p : product_instances(ctx)) {
    ctx.tested();
    std::vector<const FiniteRing*> factors;
    for (const auto& f : p.factors) factors.push_back(f.get());
    const auto& qn = p.product->quasi_nilpotents();
    for (std::size_t x = 0; x < p.product->order(); ++x) {
      const auto coords = decode(x, factors);
      bool expected = true;
      for (std::size_t i = 0; i < factors.size(); ++i)
        expected = expected && factors[i]->quasi_nilpotents().contains(coords[i]);
      if (expected != qn.contains(static_cast<Elem>(x))) {
        ctx.fail(p.label, {static_cast<Elem>(x)},
                 expected ? "componentwise quasi-nilpotent but not quasi-nilpotent"
                          : "quasi-nilpotent but some component is not");
        break;
      }
    }
  }
}

void check_product_2uq(Context& ctx) {
  for (const auto& p : product_instances(ctx)) {
    ctx.tested();
    const auto whole = uq2(*p.product);
    bool parts = true;
    for (const auto& f : p.factors) parts = parts && uq2(*f).holds;
    if (whole.holds != parts)
      ctx.fail(p.label, witness_of(whole),
               describe_flags({{"product 2UQ", whole.holds}, {"all factors 2UQ", parts}}));
  }
}

void check_corners(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !q2(e)) continue;
    const FiniteRing& r = e.ring();
    for (Elem idem : r.idempotents().members()) {
      if (idem == r.zero()) continue;
      ctx.tested();
      const EmbeddedRing c = corner_ring(r, idem);
      const auto res = uq2(c.ring);
      if (!res.holds)
        ctx.fail(e.text, {idem, c.embedding[*res.witness]}, "corner eRe is not 2-UQ");
    }
  }
}

void check_matrix_obstruction(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    const auto& spec = e.built.spec;
    if (spec.kind != RingSpec::Kind::kM || spec.ints[0] < 2) continue;
    if (e.built.children[0].ring->order() < 2) continue;
    ctx.tested();
    const FiniteRing& r = e.ring();
    const auto res = uq2(r);
    if (res.holds) {
      ctx.fail(e.text, {}, "matrix ring is 2-UQ");
      continue;
    }
    const Elem u = *res.witness;
    const Elem q = r.sub(r.mul(u, u), r.one());
    if (!r.is_unit(u) || r.is_quasi_nilpotent(q)) {
      ctx.fail(e.text, {u}, "recorded witness does not reproduce");
      continue;
    }
    ctx.record(e.text, {u, q}, "unit u with u^2 - 1 not quasi-nilpotent");
  }
}

void check_dedekind_finite(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e)) continue;
    ctx.tested();
    if (q2(e) && !e.report().flag(Flag::kDedekindFinite)) {
      const auto w = find_non_dedekind_finite(e.ring());
      ctx.fail(e.text, w ? std::vector<Elem>{*w} : std::vector<Elem>{},
               "2-UQ but not Dedekind-finite");
    }
  }
}

void check_division_rings(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!is_division_ring(e.ring())) continue;
    ctx.tested();
    const bool small = e.ring().order() == 2 || e.ring().order() == 3;
    if (q2(e) != small)
      ctx.fail(e.text, witness_of(uq2(e.ring())),
               describe_flags({{"2UQ", q2(e)}, {"order in {2,3}", small}}));
  }
}

/// Corpus entries of `kind` whose 2-UQ status must match that of their base.
void check_same_as_base(Context& ctx, RingSpec::Kind kind) {
  for (const auto& e : ctx.corpus.entries) {
    if (e.built.spec.kind != kind) continue;
    const FiniteRing& base = *e.built.children[0].ring;
    if (base.order() < 2) continue;
    ctx.tested();
    const auto base_res = uq2(base);
    if (q2(e) != base_res.holds)
      ctx.fail(e.text, witness_of(uq2(e.ring())),
               describe_flags({{"ring 2UQ", q2(e)}, {"base 2UQ", base_res.holds}}));
  }
}

void check_trivext(Context& ctx) { check_same_as_base(ctx, RingSpec::Kind::kTrivExt); }
void check_triangular(Context& ctx) { check_same_as_base(ctx, RingSpec::Kind::kT); }
void check_polymod(Context& ctx) { check_same_as_base(ctx, RingSpec::Kind::kPolyMod); }

std::vector<const CorpusEntry*> entries_by_order(const Context& ctx, std::size_t max_order) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : ctx.corpus.entries)
    if (nontrivial(e) && e.ring().order() <= max_order) out.push_back(&e);
  return out;
}

bool is_zmod(const CorpusEntry& e) { return e.built.spec.kind == RingSpec::Kind::kZ; }

void check_formal_triangular(Context& ctx) {
  const BuildOptions opts{ctx.options.derived_max_order, true};
  const std::size_t cap = ctx.options.derived_max_order;
  constexpr std::size_t kMaxInstances = 40;
  std::size_t made = 0;
  const auto run = [&](const CorpusEntry& a, const CorpusEntry& b, Bimodule m,
                       const std::string& label) {
    auto ctx_data = trivial_context(a.built.ring, b.built.ring, std::move(m),
                                    zero_bimodule(b.ring(), a.ring()));
    const MoritaRing mr = morita_ring(ctx_data, opts);
    ctx.tested();
    ++made;
    const auto whole = uq2(mr.ring);
    const bool corners = q2(a) && q2(b);
    if (whole.holds != corners)
      ctx.fail(label, witness_of(whole),
               describe_flags({{"ring 2UQ", whole.holds}, {"both corners 2UQ", corners}}));
  };
  // [[R, R], [0, R]] over the regular bimodule.
  for (const auto* r : entries_by_order(ctx, cap)) {
    if (made >= kMaxInstances / 2) break;
    const std::size_t n = r->ring().order();
    if (n * n * n > cap) continue;
    run(*r, *r, regular_bimodule(r->ring()), "FormalTriangular(" + r->text + ", " + r->text +
                                                 ", " + r->text + ")");
  }
  // [[Z_m, S], [0, S]] with S a Z_m-S-bimodule through k -> k·1.
  for (const auto* a : entries_by_order(ctx, cap)) {
    if (!is_zmod(*a)) continue;
    for (const auto* b : entries_by_order(ctx, cap)) {
      if (made >= kMaxInstances) return;
      if (a == b) continue;
      const std::size_t m = a->ring().order(), nb = b->ring().order();
      if (m % b->ring().characteristic() != 0 || m * nb * nb > cap) continue;
      const auto f = integer_hom(a->ring(), b->ring());
      run(*a, *b, hom_bimodule(a->ring(), b->ring(), f),
          "FormalTriangular(" + a->text + ", " + b->text + ", " + b->text + ")");
    }
  }
}

void check_morita(Context& ctx) {
  // Morita rings have order |A||M||N||B|; allow somewhat more room here.
  const std::size_t cap = std::max<std::size_t>(ctx.options.derived_max_order, 4096);
  const BuildOptions opts{cap, true};
  constexpr std::size_t kMaxInstances = 40;
  std::size_t made = 0;
  const auto run = [&](const BimodulePairing& pairing, bool corners_2uq) {
    const MoritaRing mr = morita_ring(pairing, opts);
    if (!mr.trace_nilpotent || !mr.trace_central) return;
    ctx.tested();
    ++made;
    const auto whole = uq2(mr.ring);
    if (whole.holds != corners_2uq)
      ctx.fail(pairing.label, witness_of(whole),
               describe_flags({{"ring 2UQ", whole.holds}, {"both corners 2UQ", corners_2uq}}));
  };
  for (const auto* r : entries_by_order(ctx, cap)) {
    const FiniteRing& ring = r->ring();
    const std::size_t n = ring.order();
    if (n * n * n * n > cap) continue;
    for (Elem c : r->ring().center().members()) {
      if (made >= kMaxInstances / 2) break;
      if (!ring.is_nilpotent(c)) continue;
      auto pairing = scalar_context(r->built.ring, c);
      pairing.label = "Morita(" + r->text + ", c=" + std::to_string(c) + ")";
      run(pairing, q2(*r));
    }
  }
  for (const auto* a : entries_by_order(ctx, cap)) {
    if (!is_zmod(*a)) continue;
    for (const auto* b : entries_by_order(ctx, cap)) {
      if (made >= kMaxInstances) return;
      if (a == b) continue;
      const std::size_t m = a->ring().order(), nb = b->ring().order();
      if (m % b->ring().characteristic() != 0 || m * nb * nb * nb > cap) continue;
      const auto f = integer_hom(a->ring(), b->ring());
      auto pairing = trivial_context(a->built.ring, b->built.ring,
                                     hom_bimodule(a->ring(), b->ring(), f),
                                     hom_bimodule_right(a->ring(), b->ring(), f));
      pairing.label = "Morita(" + a->text + ", " + b->text + ", trivial pairing)";
      run(pairing, q2(*a) && q2(*b));
    }
  }
}

void check_lifting(Context& ctx) {
  constexpr std::size_t kPrincipalIdeals = 3;
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e)) continue;
    const FiniteRing& r = e.ring();
    const Ideal& j = r.jacobson_radical();
    if (j.size() == 1) continue;
    std::vector<std::pair<std::vector<Elem>, Ideal>> ideals;
    ideals.emplace_back(j.members().members(), j);
    for (Elem a : j.members().members()) {
      if (ideals.size() > kPrincipalIdeals) break;
      if (a == r.zero()) continue;
      Ideal i = ideal_generated(r, std::vector<Elem>{a});
      bool fresh = true;
      for (const auto& [g, known] : ideals) fresh = fresh && !(known == i);
      if (fresh) ideals.emplace_back(std::vector<Elem>{a}, std::move(i));
    }
    for (const auto& [gens, ideal] : ideals) {
      const QuotientRing q = quotient(r, ideal);
      if (!uq2(q.ring).holds) continue;
      ctx.tested();
      if (!q2(e))
        ctx.fail(e.text, gens.size() == 1 ? gens : std::vector<Elem>{},
                 "R/I is 2-UQ for I inside J(R) but R is not");
    }
  }
}

void check_local(Context& ctx) {
  static const Fingerprint f2 = fingerprint(zmod(2));
  static const Fingerprint f3 = fingerprint(zmod(3));
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !q2(e)) continue;
    ctx.tested();
    const FiniteRing& rad = e.ring().radical_quotient().ring;
    bool small_field = false;
    if (rad.order() == 2 || rad.order() == 3) {
      const Fingerprint fp = fingerprint(rad);
      small_field = fp == f2 || fp == f3;
    }
    const bool local = e.report().flag(Flag::kLocal);
    if (local != small_field)
      ctx.fail(e.text, {}, describe_flags({{"local", local}, {"R/J is F2 or F3", small_field}}));
  }
}

void check_semisimple(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !e.report().flag(Flag::kSemisimple)) continue;
    ctx.tested();
    const bool trip = e.report().flag(Flag::kTripotent);
    if (q2(e) != trip)
      ctx.fail(e.text, witness_of(uq2(e.ring())),
               describe_flags({{"2UQ", q2(e)}, {"tripotent", trip}}));
  }
}

void check_zmod(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!is_zmod(e) || !nontrivial(e)) continue;
    ctx.tested();
    const bool expected = is_2_3_smooth(e.ring().order());
    if (q2(e) != expected)
      ctx.fail(e.text, witness_of(uq2(e.ring())),
               describe_flags({{"2UQ", q2(e)}, {"m = 2^a 3^b", expected}}));
  }
}

void check_two_units(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !q2(e)) continue;
    ctx.tested();
    const FiniteRing& r = e.ring();
    for (Elem u : r.units().members()) {
      const Elem v = r.sub(r.one(), r.mul(u, u));
      if (r.is_unit(v)) {
        ctx.fail(e.text, {u, v}, "units u, v with u^2 + v = 1");
        break;
      }
    }
  }
}

struct QuotientFlags {
  bool uq2, uj2, uu2, tripotent;
};

QuotientFlags radical_flags(const FiniteRing& r) {
  const FiniteRing& q = r.radical_quotient().ring;
  return {unit_property(q, UnitProperty::k2UQ).holds, unit_property(q, UnitProperty::k2UJ).holds,
          unit_property(q, UnitProperty::k2UU).holds, is_tripotent(q)};
}

void check_semipotent(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !e.report().flag(Flag::kSemipotent)) continue;
    ctx.tested();
    const auto f = radical_flags(e.ring());
    const bool uj = e.report().flag(Flag::k2UJ);
    if (!all_equal({f.uq2, f.tripotent, f.uu2, uj}))
      ctx.fail(e.text, {},
               describe_flags({{"R/J 2UQ", f.uq2}, {"R/J tripotent", f.tripotent},
                               {"R/J 2UU", f.uu2}, {"R 2UJ", uj}}));
  }
}

void check_regular_2uq(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !q2(e)) continue;
    ctx.tested();
    const auto& rep = e.report();
    const bool reg = rep.flag(Flag::kRegular), sreg = rep.flag(Flag::kStronglyRegular),
               ureg = rep.flag(Flag::kUnitRegular), trip = rep.flag(Flag::kTripotent),
               pir = rep.flag(Flag::kPiRegular) && rep.flag(Flag::kReduced);
    if (!all_equal({reg, sreg, ureg, trip, pir}))
      ctx.fail(e.text, {},
               describe_flags({{"regular", reg}, {"strongly regular", sreg},
                               {"unit-regular", ureg}, {"tripotent", trip},
                               {"pi-regular reduced", pir}}));
  }
}

void check_potent(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e) || !e.report().flag(Flag::kPotent)) continue;
    ctx.tested();
    const auto f = radical_flags(e.ring());
    const bool uq = q2(e), uj = e.report().flag(Flag::k2UJ);
    if (!all_equal({uq, f.uq2, f.tripotent, uj, f.uj2, f.uu2}))
      ctx.fail(e.text, {},
               describe_flags({{"R 2UQ", uq}, {"R/J 2UQ", f.uq2}, {"R/J tripotent", f.tripotent},
                               {"R 2UJ", uj}, {"R/J 2UJ", f.uj2}, {"R/J 2UU", f.uu2}}));
  }
}

void check_clean(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e)) continue;
    ctx.tested();
    const auto& rep = e.report();
    const bool lhs = rep.flag(Flag::kClean) && q2(e);
    const bool st = rep.flag(Flag::kSemitripotent);
    if (lhs != st)
      ctx.fail(e.text, {}, describe_flags({{"clean and 2UQ", lhs}, {"semi-tripotent", st}}));
  }
}

void check_artinian(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    if (!nontrivial(e)) continue;
    ctx.tested();
    const auto& rep = e.report();
    const bool uq = rep.flag(Flag::k2UQ), uj = rep.flag(Flag::k2UJ), uu = rep.flag(Flag::k2UU);
    if (!all_equal({uq, uj, uu}))
      ctx.fail(e.text, witness_of(unit_property(e.ring(), UnitProperty::k2UU)),
               describe_flags({{"2UQ", uq}, {"2UJ", uj}, {"2UU", uu}}));
  }
}

struct GroupRingView {
  const CorpusEntry* entry;
  const FiniteRing* base;
  const FiniteGroup* group;
};

std::vector<GroupRingView> group_rings(const Context& ctx) {
  std::vector<GroupRingView> out;
  for (const auto& e : ctx.corpus.entries)
    if (e.built.spec.kind == RingSpec::Kind::kGroupRing && e.built.children[0].ring->order() >= 2)
      out.push_back({&e, e.built.children[0].ring.get(), &*e.built.group});
  return out;
}

bool prime_in_radical(const FiniteRing& r, std::size_t p) {
  return r.jacobson_radical().contains(r.scalar(static_cast<long long>(p)));
}

/// Primes p with G a p-group; every prime qualifies for the trivial group,
/// so only primes up to `bound` are listed.
std::vector<std::size_t> group_primes(const FiniteGroup& g, std::size_t bound = 7) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p <= std::max(bound, g.order()); ++p)
    if (is_prime(p) && is_p_group(g, p)) out.push_back(p);
  return out;
}

void check_augmentation(Context& ctx) {
  for (const auto& v : group_rings(ctx)) {
    if (v.group->order() < 2) continue;
    for (std::size_t p : group_primes(*v.group)) {
      if (!prime_in_radical(*v.base, p)) continue;
      ctx.tested();
      const FiniteRing& r = v.entry->ring();
      const std::size_t nb = v.base->order();
      for (std::size_t x = 0; x < r.order(); ++x) {
        std::size_t rest = x;
        Elem sum = v.base->zero();
        for (std::size_t i = 0; i < v.group->order(); ++i) {
          sum = v.base->add(sum, static_cast<Elem>(rest % nb));
          rest /= nb;
        }
        if (sum == v.base->zero() && !r.jacobson_radical().contains(static_cast<Elem>(x))) {
          ctx.fail(v.entry->text, {static_cast<Elem>(x)},
                   "augmentation ideal element outside J(RG)");
          break;
        }
      }
    }
  }
}

void check_group_ring_base(Context& ctx) {
  for (const auto& v : group_rings(ctx)) {
    ctx.tested();
    if (q2(*v.entry)) {
      const auto base = uq2(*v.base);
      if (!base.holds) ctx.fail(v.entry->text, {}, "RG is 2-UQ but R is not");
    }
  }
}

void check_group_ring_lift(Context& ctx) {
  for (const auto& v : group_rings(ctx)) {
    if (!uq2(*v.base).holds) continue;
    bool hypothesis = false;
    for (std::size_t p : group_primes(*v.group))
      hypothesis = hypothesis || prime_in_radical(*v.base, p);
    if (!hypothesis) continue;
    ctx.tested();
    if (!q2(*v.entry))
      ctx.fail(v.entry->text, witness_of(uq2(v.entry->ring())),
               "R is 2-UQ, p in J(R), G a p-group, yet RG is not 2-UQ");
  }
}

void check_two_group(Context& ctx) {
  for (const auto& v : group_rings(ctx)) {
    if (!prime_in_radical(*v.base, 2)) continue;
    ctx.tested();
    const bool two_group = is_p_group(*v.group, 2);
    if (q2(*v.entry) && !two_group)
      ctx.fail(v.entry->text, {}, "RG is 2-UQ with 2 in J(R) but G is not a 2-group");
    else if (!q2(*v.entry) && !two_group)
      ctx.record(v.entry->text, witness_of(uq2(v.entry->ring())),
                 "G is not a 2-group and RG is not 2-UQ");
  }
}

void check_three(Context& ctx) {
  for (const auto& v : group_rings(ctx)) {
    if (!prime_in_radical(*v.base, 3) || group_primes(*v.group).empty()) continue;
    ctx.tested();
    const bool conclusion = is_p_group(*v.group, 3) || group_exponent(*v.group) <= 2;
    if (q2(*v.entry) && !conclusion)
      ctx.fail(v.entry->text, {}, "RG is 2-UQ with 3 in J(R) but G is neither a 3-group nor of exponent 2");
    else if (!q2(*v.entry) && !conclusion)
      ctx.record(v.entry->text, witness_of(uq2(v.entry->ring())),
                 "G violates the conclusion and RG is not 2-UQ");
  }
}

void check_definition(Context& ctx) {
  for (const auto& e : ctx.corpus.entries) {
    ctx.tested();
    const auto strong = two_uq_strong_form(e.ring());
    if (strong.holds != q2(e))
      ctx.fail(e.text, strong.witness ? witness_of(strong) : witness_of(uq2(e.ring())),
               describe_flags({{"u^2 in 1 + QN", q2(e)}, {"u^2 = e + q commuting", strong.holds}}));
  }
}

struct CatalogEntry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> kCatalog = {
      {{"C-2.3", "If R is 2-UQ, then S inherits",
        "Good subrings (center, scalar copies, constants, coefficient rings) of 2-UQ rings are "
        "2-UQ; counts (ring, subring) pairs"},
       check_good_subrings},
      {{"C-2.4", "quasi-nilpotent elements of their direct product",
        "QN of a product equals the product of the QN sets, on Prod entries and seeded random "
        "corpus pairs"},
       check_qn_product},
      {{"C-2.5", "uniquely when each direct component",
        "A product is 2-UQ iff every factor is, on Prod entries and seeded random corpus pairs"},
       check_product_2uq},
      {{"C-2.6", "corner ring eRe maintains",
        "Every corner eRe (e a nonzero idempotent) of a 2-UQ ring is 2-UQ; counts corners"},
       check_corners},
      {{"C-2.7", "fails to be a 2-UQ ring",
        "M_n(S) with n >= 2 and S nonzero is never 2-UQ; the witness unit is rechecked"},
       check_matrix_obstruction},
      {{"C-2.9", "All 2-UQ rings are Dedekind-finite", "2-UQ implies Dedekind-finite"},
       check_dedekind_finite},
      {{"C-2.10", "either R \xe2\x89\x85 F_2 or R \xe2\x89\x85 F_3",
        "A finite division ring is 2-UQ iff it has 2 or 3 elements"},
       check_division_rings},
      {{"C-2.12a", "T(R,M) is 2-UQ if, and only if",
        "TrivExt(R) is 2-UQ iff R is"},
       check_trivext},
      {{"C-2.12b", "both R and S are 2-UQ",
        "Formal triangular rings [[R, M], [0, S]] built from corpus rings (regular bimodule, and "
        "Z_m-S-bimodules through k -> k*1) are 2-UQ iff R and S are"},
       check_formal_triangular},
      {{"C-2.12c", "the triangular matrix ring", "T_n(R) is 2-UQ iff R is"}, check_triangular},
      {{"C-2.12d", "the quotient ring", "R[x]/(x^n) is 2-UQ iff R is"}, check_polymod},
      {{"C-2.13", "both nilpotent and central",
        "Morita context rings whose trace ideals MN, NM are nilpotent (as ideals) and consist of "
        "central elements are 2-UQ iff both corner rings are; contexts failing the hypothesis "
        "are not counted"},
       check_morita},
      {{"C-2.18", "then R itself is a 2-UQ ring",
        "For I = J(R) and principal ideals inside J(R): R/I 2-UQ implies R 2-UQ"},
       check_lifting},
      {{"C-2.19a", "R/J(R) \xe2\x89\x85 F_2 or R/J(R) \xe2\x89\x85 F_3",
        "A 2-UQ ring is local iff R/J(R) has the fingerprint of F_2 or F_3"},
       check_local},
      {{"C-2.19b", "F_p \xc3\x97 \xe2\x8b\xaf \xc3\x97 F_q",
        "A semisimple ring is 2-UQ iff it is tripotent (tripotence stands in for the "
        "product-of-F_2/F_3 isomorphism type)"},
       check_semisimple},
      {{"C-2.20", "m = 2^k 3^s",
        "Z_m is 2-UQ iff m = 2^a 3^b; exponents are nonnegative so that m = 2 and m = 3, which "
        "are 2-UQ fields, are covered"},
       check_zmod},
      {{"C-3.1", "we have u\xc2\xb2 + v \xe2\x89\xa0 1",
        "A 2-UQ ring has no units u, v with u^2 + v = 1"},
       check_two_units},
      {{"C-3.3", "The factor-ring R/J(R) is a tripotent",
        "For semi-potent R: R/J 2-UQ, R/J tripotent, R/J 2-UU and R 2-UJ agree"},
       check_semipotent},
      {{"C-3.4", "R is a \xcf\x80-regular reduced ring",
        "For 2-UQ R: regular, strongly regular, unit-regular, tripotent and pi-regular reduced "
        "agree"},
       check_regular_2uq},
      {{"C-3.5", "Let R be a potent ring",
        "For potent R: R 2-UQ, R/J 2-UQ, R/J tripotent, R 2-UJ, R/J 2-UJ and R/J 2-UU agree"},
       check_potent},
      {{"C-3.6", "if, and only if, R is semi-tripotent",
        "R is clean and 2-UQ iff R is semi-tripotent"},
       check_clean},
      {{"C-3.7", "Let R be an artinian", "For finite rings 2-UQ, 2-UJ and 2-UU coincide"},
       check_artinian},
      {{"C-4.1", "the augmentation ideal satisfies",
        "If p*1 lies in J(R) and G is a p-group, the augmentation ideal lies in J(RG)"},
       check_augmentation},
      {{"C-4.2a", "then R is also a 2-UQ ring", "RG 2-UQ implies R 2-UQ"},
       check_group_ring_base},
      {{"C-4.2b", "then RG is a 2-UQ ring",
        "R 2-UQ, p*1 in J(R) and G a p-group imply RG 2-UQ"},
       check_group_ring_lift},
      {{"C-4.3", "the group G must be a 2-group",
        "If 2*1 lies in J(R) and RG is 2-UQ then G is a 2-group; counts group rings with 2*1 in "
        "J(R)"},
       check_two_group},
      {{"C-4.4", "either G is a 3-group or G is a group of exponent 2",
        "If 3*1 lies in J(R), G is a p-group and RG is 2-UQ, then G is a 3-group or has "
        "exponent at most 2"},
       check_three},
      {{"C-DEF", "(or, equivalently, u\xc2\xb2 = 1 + q)",
        "u^2 - 1 in QN for all units agrees with the commuting idempotent-plus-QN form"},
       check_definition},
  };
  return kCatalog;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> kInfo = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : catalog()) out.push_back(c.info);
    return out;
  }();
  return kInfo;
}

bool is_known_check(std::string_view id) {
  for (const auto& c : catalog())
    if (c.info.id == id) return true;
  return false;
}

CheckResult run_check(std::string_view id, const Corpus& corpus, const HarnessOptions& options) {
  for (const auto& c : catalog()) {
    if (c.info.id != id) continue;
    CheckResult result;
    result.id = std::string(c.info.id);
    result.anchor = std::string(c.info.anchor);
    result.description = std::string(c.info.description);
    const auto start = std::chrono::steady_clock::now();
    Context ctx{corpus, options, result};
    c.fn(ctx);
    result.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (!result.counterexamples.empty()) {
      result.status = CheckStatus::kFail;
    } else if (result.rings_tested == 0) {
      result.status = CheckStatus::kSkipped;
      result.skip_reason = "hypothesis never satisfied in corpus";
    } else {
      result.status = CheckStatus::kPass;
    }
    return result;
  }
  throw InvalidArgument("unknown check id '" + std::string(id) + "'");
}

std::vector<CheckResult> run_all(const Corpus& corpus, const std::vector<std::string>& ids,
                                 const HarnessOptions& options) {
  for (const auto& id : ids)
    if (!is_known_check(id)) throw InvalidArgument("unknown check id '" + id + "'");
  std::vector<CheckResult> out;
  for (const auto& c : catalog()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.info.id) == ids.end()) continue;
    out.push_back(run_check(c.info.id, corpus, options));
  }
  return out;
}

}  // namespace qnring
