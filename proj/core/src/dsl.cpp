#include "qnring/dsl.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "qnring/ring_ops.hpp"

namespace qnring {

namespace {

// Upper bounds on structural integers. Ring orders are bounded separately by
// the order cap; these keep degenerate inputs such as M(5000, Z(1)) from
// building huge digit vectors.
constexpr std::uint64_t kMaxDimension = 64;
constexpr std::uint64_t kMaxGroupOrder = 256;

constexpr std::array<std::string_view, 4> kNamedGroups = {"S3", "D4", "Q8", "Klein"};

std::string position_message(const std::string& message, std::size_t line, std::size_t column) {
  return "syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
         ": " + message;
}

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpec parse_ring_document() {
    RingSpec spec = ring();
    expect_end();
    return spec;
  }

  GroupSpec parse_group_document() {
    GroupSpec spec = group();
    expect_end();
    return spec;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  Position position_of(std::size_t offset) const {
    Position p;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    return p;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    const Position p = position_of(offset);
    throw SyntaxError(message, p.line, p.column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string describe_next() {
    skip_space();
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail("expected '" + std::string(1, c) + "', found " + describe_next(), pos_);
    ++pos_;
  }

  void expect_end() {
    skip_space();
    if (pos_ < text_.size()) fail("unexpected " + describe_next() + " after expression", pos_);
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected a constructor name, found " + describe_next(), pos_);
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer, found " + describe_next(), pos_);
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const unsigned digit = static_cast<unsigned>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        fail("integer literal is too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  RingSpec ring() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    RingSpec spec;
    const auto open = [&] { expect('('); };
    const auto comma = [&] { expect(','); };
    const auto close = [&] { expect(')'); };
    if (name == "Z") {
      spec.kind = RingSpec::Kind::kZ;
      open();
      spec.ints.push_back(integer());
      close();
    } else if (name == "GF") {
      spec.kind = RingSpec::Kind::kGF;
      open();
      spec.ints.push_back(integer());
      comma();
      spec.ints.push_back(integer());
      close();
    } else if (name == "Prod") {
      spec.kind = RingSpec::Kind::kProd;
      open();
      spec.rings.push_back(ring());
      while (peek(',')) {
        ++pos_;
        spec.rings.push_back(ring());
      }
      close();
    } else if (name == "M" || name == "T") {
      spec.kind = name == "M" ? RingSpec::Kind::kM : RingSpec::Kind::kT;
      open();
      spec.ints.push_back(integer());
      comma();
      spec.rings.push_back(ring());
      close();
    } else if (name == "TrivExt") {
      spec.kind = RingSpec::Kind::kTrivExt;
      open();
      spec.rings.push_back(ring());
      close();
    } else if (name == "PolyMod") {
      spec.kind = RingSpec::Kind::kPolyMod;
      open();
      spec.rings.push_back(ring());
      comma();
      spec.ints.push_back(integer());
      close();
    } else if (name == "GroupRing") {
      spec.kind = RingSpec::Kind::kGroupRing;
      open();
      spec.rings.push_back(ring());
      comma();
      spec.group.push_back(group());
      close();
    } else if (name == "Quot") {
      spec.kind = RingSpec::Kind::kQuot;
      open();
      spec.rings.push_back(ring());
      comma();
      expect('[');
      if (!peek(']')) {
        spec.gens.push_back(integer());
        while (peek(',')) {
          ++pos_;
          spec.gens.push_back(integer());
        }
      }
      expect(']');
      close();
    } else if (name == "Corner") {
      spec.kind = RingSpec::Kind::kCorner;
      open();
      spec.rings.push_back(ring());
      comma();
      spec.ints.push_back(integer());
      close();
    } else {
      fail("unknown ring constructor '" + name + "'", start);
    }
    return spec;
  }

  GroupSpec group() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    GroupSpec spec;
    if (name == "C") {
      spec.kind = GroupSpec::Kind::kCyclic;
      expect('(');
      spec.n = integer();
      expect(')');
    } else if (name == "GProd") {
      spec.kind = GroupSpec::Kind::kProduct;
      expect('(');
      spec.factors.push_back(group());
      while (peek(',')) {
        ++pos_;
        spec.factors.push_back(group());
      }
      expect(')');
    } else {
      bool known = false;
      for (auto g : kNamedGroups) known = known || g == name;
      if (!known) fail("unknown group '" + name + "'", start);
      spec.kind = GroupSpec::Kind::kNamed;
      spec.name = name;
      if (peek('(')) {
        ++pos_;
        expect(')');
      }
    }
    return spec;
  }
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

[[noreturn]] void semantic(const std::string& message) { throw SemanticError(message); }

std::size_t group_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic: return spec.n;
    case GroupSpec::Kind::kNamed: return spec.name == "S3" ? 6 : spec.name == "Klein" ? 4 : 8;
    case GroupSpec::Kind::kProduct: {
      std::size_t n = 1;
      for (const auto& f : spec.factors) {
        n *= group_order(f);
        if (n > kMaxGroupOrder) return kMaxGroupOrder + 1;
      }
      return n;
    }
  }
  return 0;
}

std::size_t small_int(std::uint64_t value, std::uint64_t lo, std::uint64_t hi,
                      const std::string& what) {
  if (value < lo || value > hi)
    semantic(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
             "], got " + std::to_string(value));
  return static_cast<std::size_t>(value);
}

bool needs_parentheses(const std::string& name) {
  return name.find_first_of(" +") != std::string::npos;
}

std::string wrap(const std::string& name) {
  return needs_parentheses(name) ? "(" + name + ")" : name;
}

std::vector<Elem> digits_of(std::size_t x, std::size_t base, std::size_t count) {
  std::vector<Elem> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<Elem>(x % base);
    x /= base;
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column)
    : RingError(position_message(message, line, column)),
      detail_(std::move(message)),
      line_(line),
      column_(column) {}

RingSpec parse_spec(std::string_view text) { return Parser(text).parse_ring_document(); }

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse_group_document(); }

std::string to_string(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic: return "C(" + std::to_string(spec.n) + ")";
    case GroupSpec::Kind::kNamed: return spec.name;
    case GroupSpec::Kind::kProduct: {
      std::vector<std::string> parts;
      for (const auto& f : spec.factors) parts.push_back(to_string(f));
      return "GProd(" + join(parts) + ")";
    }
  }
  return {};
}

std::string to_string(const RingSpec& spec) {
  const auto n = [&](std::size_t i) { return std::to_string(spec.ints.at(i)); };
  const auto r = [&](std::size_t i) { return to_string(spec.rings.at(i)); };
  switch (spec.kind) {
    case RingSpec::Kind::kZ: return "Z(" + n(0) + ")";
    case RingSpec::Kind::kGF: return "GF(" + n(0) + ", " + n(1) + ")";
    case RingSpec::Kind::kProd: {
      std::vector<std::string> parts;
      for (const auto& f : spec.rings) parts.push_back(to_string(f));
      return "Prod(" + join(parts) + ")";
    }
    case RingSpec::Kind::kM: return "M(" + n(0) + ", " + r(0) + ")";
    case RingSpec::Kind::kT: return "T(" + n(0) + ", " + r(0) + ")";
    case RingSpec::Kind::kTrivExt: return "TrivExt(" + r(0) + ")";
    case RingSpec::Kind::kPolyMod: return "PolyMod(" + r(0) + ", " + n(0) + ")";
    case RingSpec::Kind::kGroupRing:
      return "GroupRing(" + r(0) + ", " + to_string(spec.group.at(0)) + ")";
    case RingSpec::Kind::kQuot: {
      std::vector<std::string> parts;
      for (auto g : spec.gens) parts.push_back(std::to_string(g));
      return "Quot(" + r(0) + ", [" + join(parts) + "])";
    }
    case RingSpec::Kind::kCorner: return "Corner(" + r(0) + ", " + n(0) + ")";
  }
  return {};
}

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::kCyclic:
      return cyclic_group(small_int(spec.n, 1, kMaxGroupOrder, "cyclic group order"));
    case GroupSpec::Kind::kNamed: return builtin_group(spec.name);
    case GroupSpec::Kind::kProduct: {
      if (group_order(spec) > kMaxGroupOrder)
        semantic("group product order exceeds " + std::to_string(kMaxGroupOrder));
      std::vector<FiniteGroup> factors;
      for (const auto& f : spec.factors) factors.push_back(build_group(f));
      auto g = group_product(factors);
      return FiniteGroup(g.order(), {g.cayley().begin(), g.cayley().end()}, g.identity(),
                         to_string(spec), [&] {
                           std::vector<std::string> names;
                           for (std::size_t x = 0; x < g.order(); ++x)
                             names.push_back(g.element_name(static_cast<Elem>(x)));
                           return names;
                         }());
    }
  }
  throw InternalError("unhandled group kind");
}

BuiltRing elaborate(const RingSpec& spec, const BuildOptions& options) {
  BuiltRing out;
  out.spec = spec;
  for (const auto& child : spec.rings) out.children.push_back(elaborate(child, options));
  const auto child = [&](std::size_t i) -> const FiniteRing& { return *out.children.at(i).ring; };

  std::optional<FiniteRing> ring;
  switch (spec.kind) {
    case RingSpec::Kind::kZ: {
      const std::uint64_t m = spec.ints.at(0);
      if (m == 0) semantic("Z(m) requires m >= 1");
      const std::size_t cap = std::min(options.max_order, kMaxRepresentableOrder);
      if (m > cap) throw CapExceeded(static_cast<std::size_t>(m), cap);
      ring = zmod(static_cast<std::size_t>(m), options);
      break;
    }
    case RingSpec::Kind::kGF: {
      const std::uint64_t p = spec.ints.at(0), k = spec.ints.at(1);
      if (p > kMaxRepresentableOrder || !is_prime(static_cast<std::size_t>(p)))
        semantic("GF(p, k) requires p prime, got " + std::to_string(p));
      if (k == 0) semantic("GF(p, k) requires k >= 1");
      const std::size_t cap = std::min(options.max_order, kMaxRepresentableOrder);
      std::size_t q = 1;
      for (std::uint64_t i = 0; i < k && q <= cap; ++i) q *= p;
      if (q > cap) throw CapExceeded(q, cap);
      ring = finite_field(static_cast<unsigned>(p), static_cast<unsigned>(k), options);
      break;
    }
    case RingSpec::Kind::kProd: {
      std::vector<RingRef> factors;
      for (const auto& c : out.children) factors.push_back(std::cref(*c.ring));
      ring = direct_product(factors, options);
      break;
    }
    case RingSpec::Kind::kM:
      ring = matrix_ring(small_int(spec.ints.at(0), 1, kMaxDimension, "matrix size n"), child(0),
                         options);
      break;
    case RingSpec::Kind::kT:
      ring = upper_triangular(small_int(spec.ints.at(0), 1, kMaxDimension, "matrix size n"),
                              child(0), options);
      break;
    case RingSpec::Kind::kTrivExt: ring = trivial_extension(child(0), options); break;
    case RingSpec::Kind::kPolyMod:
      ring = truncated_poly(child(0), small_int(spec.ints.at(0), 1, kMaxDimension, "truncation n"),
                            options);
      break;
    case RingSpec::Kind::kGroupRing: {
      out.group = build_group(spec.group.at(0));
      ring = group_ring(child(0), *out.group, options).ring;
      break;
    }
    case RingSpec::Kind::kQuot: {
      const FiniteRing& base = child(0);
      std::vector<Elem> gens;
      for (auto g : spec.gens) {
        if (g >= base.order())
          semantic("Quot generator " + std::to_string(g) + " is not an element of " +
                   base.label());
        gens.push_back(static_cast<Elem>(g));
      }
      auto q = quotient(base, ideal_generated(base, gens));
      out.parent_index = std::move(q.representatives);
      ring = std::move(q.ring);
      break;
    }
    case RingSpec::Kind::kCorner: {
      const FiniteRing& base = child(0);
      const std::uint64_t e = spec.ints.at(0);
      if (e >= base.order())
        semantic("Corner element " + std::to_string(e) + " is not an element of " + base.label());
      if (!base.is_idempotent(static_cast<Elem>(e)))
        semantic("Corner element " + std::to_string(e) + " is not idempotent in " +
                 base.label());
      auto c = corner_ring(base, static_cast<Elem>(e));
      out.parent_index = std::move(c.embedding);
      ring = std::move(c.ring);
      break;
    }
  }
  ring->set_label(to_string(spec));
  out.ring = std::make_shared<const FiniteRing>(std::move(*ring));
  return out;
}

BuiltRing build_from_text(std::string_view text, const BuildOptions& options) {
  return elaborate(parse_spec(text), options);
}

std::string element_name(const BuiltRing& built, Elem a) {
  const RingSpec& spec = built.spec;
  const auto sub = [&](std::size_t i, Elem x) { return element_name(built.children.at(i), x); };
  switch (spec.kind) {
    case RingSpec::Kind::kZ: return std::to_string(a);
    case RingSpec::Kind::kGF: {
      const auto p = static_cast<std::size_t>(spec.ints[0]);
      const auto k = static_cast<std::size_t>(spec.ints[1]);
      const auto c = digits_of(a, p, k);
      std::string out;
      for (std::size_t i = k; i-- > 0;) {
        if (c[i] == 0) continue;
        std::string term;
        if (i == 0) {
          term = std::to_string(c[i]);
        } else {
          term = (c[i] == 1 ? "" : std::to_string(c[i])) + "x" +
                 (i == 1 ? "" : "^" + std::to_string(i));
        }
        out += (out.empty() ? "" : "+") + term;
      }
      return out.empty() ? "0" : out;
    }
    case RingSpec::Kind::kProd: {
      std::size_t rest = a;
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < built.children.size(); ++i) {
        const std::size_t n = built.children[i].ring->order();
        parts.push_back(sub(i, static_cast<Elem>(rest % n)));
        rest /= n;
      }
      return "(" + join(parts) + ")";
    }
    case RingSpec::Kind::kM:
    case RingSpec::Kind::kT: {
      const auto n = static_cast<std::size_t>(spec.ints[0]);
      const FiniteRing& base = *built.children[0].ring;
      const bool triangular = spec.kind == RingSpec::Kind::kT;
      const auto d = digits_of(a, base.order(), triangular ? n * (n + 1) / 2 : n * n);
      std::vector<std::string> rows;
      for (std::size_t i = 0, s = 0; i < n; ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < n; ++j) {
          if (triangular && j < i)
            cells.push_back(sub(0, base.zero()));
          else
            cells.push_back(sub(0, d[triangular ? s++ : i * n + j]));
        }
        rows.push_back("[" + join(cells) + "]");
      }
      return "[" + join(rows) + "]";
    }
    case RingSpec::Kind::kTrivExt: {
      const std::size_t n = built.children[0].ring->order();
      return "(" + sub(0, static_cast<Elem>(a % n)) + ", " + sub(0, static_cast<Elem>(a / n)) +
             ")";
    }
    case RingSpec::Kind::kPolyMod: {
      const FiniteRing& base = *built.children[0].ring;
      const auto d = digits_of(a, base.order(), static_cast<std::size_t>(spec.ints[0]));
      std::string out;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == base.zero()) continue;
        std::string term;
        const std::string power = i == 1 ? "x" : "x^" + std::to_string(i);
        if (i == 0)
          term = wrap(sub(0, d[i]));
        else if (d[i] == base.one())
          term = power;
        else
          term = wrap(sub(0, d[i])) + "*" + power;
        out += (out.empty() ? "" : " + ") + term;
      }
      return out.empty() ? sub(0, base.zero()) : out;
    }
    case RingSpec::Kind::kGroupRing: {
      const FiniteRing& base = *built.children[0].ring;
      const FiniteGroup& g = *built.group;
      const auto d = digits_of(a, base.order(), g.order());
      std::string out;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == base.zero()) continue;
        const std::string gname = g.element_name(static_cast<Elem>(i));
        const std::string term =
            d[i] == base.one() ? gname : wrap(sub(0, d[i])) + "*" + gname;
        out += (out.empty() ? "" : " + ") + term;
      }
      return out.empty() ? sub(0, base.zero()) : out;
    }
    case RingSpec::Kind::kQuot: return wrap(sub(0, built.parent_index.at(a))) + " + I";
    case RingSpec::Kind::kCorner: return sub(0, built.parent_index.at(a));
  }
  return std::to_string(a);
}

}  // namespace qnring
