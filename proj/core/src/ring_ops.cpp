#include "qnring/ring_ops.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "qnring/errors.hpp"

namespace qnring {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kNone: return "none";
    case Axiom::kTableShape: return "table-shape";
    case Axiom::kIndexRange: return "index-range";
    case Axiom::kAdditiveIdentity: return "additive-identity";
    case Axiom::kAdditiveInverse: return "additive-inverse";
    case Axiom::kAdditiveCommutativity: return "additive-commutativity";
    case Axiom::kAdditiveAssociativity: return "additive-associativity";
    case Axiom::kMultiplicativeIdentity: return "multiplicative-identity";
    case Axiom::kNontrivialIdentity: return "nontrivial-identity";
    case Axiom::kMultiplicativeAssociativity: return "multiplicative-associativity";
    case Axiom::kLeftDistributivity: return "left-distributivity";
    case Axiom::kRightDistributivity: return "right-distributivity";
  }
  return "unknown";
}

namespace {

ValidationResult violation(Axiom axiom, Elem a, Elem b = 0, Elem c = 0) {
  ValidationResult r;
  r.axiom = axiom;
  r.witness = {a, b, c};
  std::ostringstream os;
  os << axiom_name(axiom) << " fails at (" << a << ", " << b << ", " << c << ")";
  r.message = os.str();
  return r;
}

// Each triple law is checked in its own pass so the reported axiom does not
// depend on how passes interleave.
template <class Law>
std::optional<std::array<Elem, 3>> first_bad_triple(const FiniteRing& ring,
                                                    const ValidationOptions& opt, Law&& law) {
  const std::size_t n = ring.order();
  if (n <= opt.exhaustive_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!law(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)))
            return std::array<Elem, 3>{static_cast<Elem>(a), static_cast<Elem>(b),
                                       static_cast<Elem>(c)};
    return std::nullopt;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto a = static_cast<Elem>(rng() % n);
    const auto b = static_cast<Elem>(rng() % n);
    const auto c = static_cast<Elem>(rng() % n);
    if (!law(a, b, c)) return std::array<Elem, 3>{a, b, c};
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate(const FiniteRing& ring, const ValidationOptions& opt) {
  const std::size_t n = ring.order();
  const auto add = ring.add_table();
  const auto mul = ring.mul_table();
  const auto neg = ring.neg_table();
  if (add.size() != n * n || mul.size() != n * n || neg.size() != n)
    return violation(Axiom::kTableShape, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n || mul[i] >= n)
      return violation(Axiom::kIndexRange, static_cast<Elem>(i / n), static_cast<Elem>(i % n));
  }
  for (std::size_t a = 0; a < n; ++a)
    if (neg[a] >= n) return violation(Axiom::kIndexRange, static_cast<Elem>(a));

  const Elem zero = ring.zero();
  const Elem one = ring.one();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Elem>(i);
    if (ring.add(zero, a) != a || ring.add(a, zero) != a)
      return violation(Axiom::kAdditiveIdentity, a);
    if (ring.add(a, ring.neg(a)) != zero) return violation(Axiom::kAdditiveInverse, a);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ring.add(static_cast<Elem>(i), static_cast<Elem>(j)) !=
          ring.add(static_cast<Elem>(j), static_cast<Elem>(i)))
        return violation(Axiom::kAdditiveCommutativity, static_cast<Elem>(i),
                         static_cast<Elem>(j));

  if (auto t = first_bad_triple(ring, opt, [&](Elem a, Elem b, Elem c) {
        return ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c));
      }))
    return violation(Axiom::kAdditiveAssociativity, (*t)[0], (*t)[1], (*t)[2]);

  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Elem>(i);
    if (ring.mul(one, a) != a || ring.mul(a, one) != a)
      return violation(Axiom::kMultiplicativeIdentity, a);
  }
  if (n > 1 && zero == one) return violation(Axiom::kNontrivialIdentity, zero);

  if (auto t = first_bad_triple(ring, opt, [&](Elem a, Elem b, Elem c) {
        return ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c));
      }))
    return violation(Axiom::kMultiplicativeAssociativity, (*t)[0], (*t)[1], (*t)[2]);
  if (auto t = first_bad_triple(ring, opt, [&](Elem a, Elem b, Elem c) {
        return ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c));
      }))
    return violation(Axiom::kLeftDistributivity, (*t)[0], (*t)[1], (*t)[2]);
  if (auto t = first_bad_triple(ring, opt, [&](Elem a, Elem b, Elem c) {
        return ring.mul(ring.add(a, b), c) == ring.add(ring.mul(a, c), ring.mul(b, c));
      }))
    return violation(Axiom::kRightDistributivity, (*t)[0], (*t)[1], (*t)[2]);
  return {};
}

void require_valid(const FiniteRing& ring, const ValidationOptions& options) {
  const auto result = validate(ring, options);
  if (!result) throw InvalidRing(ring.label() + ": " + result.message);
}

namespace {

// Grows the additive subgroup `s` to s + <c>.
void extend_subgroup(const FiniteRing& ring, ElementSet& s, Elem c) {
  if (s.contains(c)) return;
  std::vector<Elem> multiples;
  for (Elem k = c; !s.contains(k); k = ring.add(k, c)) multiples.push_back(k);
  const auto base = s.members();
  for (Elem m : multiples)
    for (Elem b : base) s.insert(ring.add(b, m));
}

}  // namespace

Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens) {
  ElementSet s(ring.order());
  s.insert(ring.zero());
  for (Elem g : gens) {
    if (g >= ring.order()) throw InvalidArgument("generator index out of range");
    extend_subgroup(ring, s, g);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem m : s.members()) {
      for (std::size_t r = 0; r < ring.order(); ++r) {
        for (Elem p : {ring.mul(static_cast<Elem>(r), m), ring.mul(m, static_cast<Elem>(r))}) {
          if (!s.contains(p)) {
            extend_subgroup(ring, s, p);
            changed = true;
          }
        }
      }
    }
  }
  return Ideal::from_set(ring, std::move(s));
}

QuotientRing quotient(const FiniteRing& ring, const Ideal& ideal, std::string label) {
  const std::size_t n = ring.order();
  constexpr std::int32_t kUnassigned = -1;
  std::vector<std::int32_t> coset(n, kUnassigned);
  std::vector<Elem> reps;
  const auto members = ideal.members().members();
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] != kUnassigned) continue;
    const auto id = static_cast<std::int32_t>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    for (Elem i : members) coset[ring.add(static_cast<Elem>(a), i)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> add(m * m), mul(m * m), neg(m);
  for (std::size_t x = 0; x < m; ++x) {
    neg[x] = static_cast<Elem>(coset[ring.neg(reps[x])]);
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = static_cast<Elem>(coset[ring.add(reps[x], reps[y])]);
      mul[x * m + y] = static_cast<Elem>(coset[ring.mul(reps[x], reps[y])]);
    }
  }
  std::vector<Elem> projection(n);
  for (std::size_t a = 0; a < n; ++a) projection[a] = static_cast<Elem>(coset[a]);
  if (label.empty()) label = ring.label() + "/I";
  FiniteRing q(m, std::move(add), std::move(neg), std::move(mul),
               projection[ring.zero()], projection[ring.one()], std::move(label));
  return QuotientRing{std::move(q), std::move(projection), std::move(reps)};
}

QuotientRing quotient(const FiniteRing& ring, const ElementSet& members, std::string label) {
  return quotient(ring, Ideal::from_set(ring, members), std::move(label));
}

namespace {

EmbeddedRing restrict_to(const FiniteRing& ring, const std::vector<Elem>& elems, Elem one,
                         std::string label) {
  const std::size_t n = ring.order();
  const std::size_t m = elems.size();
  std::vector<std::int32_t> local(n, -1);
  for (std::size_t i = 0; i < m; ++i) local[elems[i]] = static_cast<std::int32_t>(i);
  std::vector<Elem> add(m * m), mul(m * m), neg(m);
  for (std::size_t x = 0; x < m; ++x) {
    neg[x] = static_cast<Elem>(local[ring.neg(elems[x])]);
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = static_cast<Elem>(local[ring.add(elems[x], elems[y])]);
      mul[x * m + y] = static_cast<Elem>(local[ring.mul(elems[x], elems[y])]);
    }
  }
  FiniteRing sub(m, std::move(add), std::move(neg), std::move(mul),
                 static_cast<Elem>(local[ring.zero()]), static_cast<Elem>(local[one]),
                 std::move(label));
  return EmbeddedRing{std::move(sub), elems};
}

}  // namespace

EmbeddedRing corner_ring(const FiniteRing& ring, Elem e, std::string label) {
  if (e >= ring.order() || !ring.is_idempotent(e))
    throw InvalidArgument("corner element " + std::to_string(e) + " is not an idempotent of " +
                          ring.label());
  ElementSet s(ring.order());
  for (std::size_t a = 0; a < ring.order(); ++a)
    s.insert(ring.mul(ring.mul(e, static_cast<Elem>(a)), e));
  if (label.empty()) label = "Corner(" + ring.label() + ", " + std::to_string(e) + ")";
  return restrict_to(ring, s.members(), e, std::move(label));
}

bool is_unital_subring(const FiniteRing& ring, const ElementSet& s) {
  if (s.universe() != ring.order() || !s.contains(ring.zero()) || !s.contains(ring.one()))
    return false;
  const auto members = s.members();
  for (Elem a : members) {
    if (!s.contains(ring.neg(a))) return false;
    for (Elem b : members)
      if (!s.contains(ring.add(a, b)) || !s.contains(ring.mul(a, b))) return false;
  }
  return true;
}

EmbeddedRing subring(const FiniteRing& ring, const ElementSet& s, std::string label) {
  if (!is_unital_subring(ring, s))
    throw InvalidArgument("subset is not a unital subring of " + ring.label());
  if (label.empty()) label = "Sub(" + ring.label() + ")";
  return restrict_to(ring, s.members(), ring.one(), std::move(label));
}

bool is_good_subring(const FiniteRing& ring, const ElementSet& s) {
  if (!is_unital_subring(ring, s))
    throw InvalidArgument("subset is not a unital subring of " + ring.label());
  bool good = true;
  s.for_each([&](Elem a) {
    if (const auto inv = ring.inverse(a); inv && !s.contains(*inv)) good = false;
  });
  return good;
}

std::size_t nilpotency_index(const FiniteRing& ring, const ElementSet& ideal) {
  // I^(k+1) is the additive span of I^k · I.
  ElementSet power = ideal;
  for (std::size_t k = 1; k <= ring.order() + 1; ++k) {
    if (power.count() == 1 && power.contains(ring.zero())) return k;
    ElementSet next(ring.order());
    next.insert(ring.zero());
    const auto lhs = power.members();
    const auto rhs = ideal.members();
    for (Elem a : lhs)
      for (Elem b : rhs) extend_subgroup(ring, next, ring.mul(a, b));
    if (next == power) return 0;
    power = std::move(next);
  }
  return 0;
}

}  // namespace qnring
