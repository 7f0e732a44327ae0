#include "qnring/classify.hpp"

#include <utility>

#include "qnring/errors.hpp"
#include "qnring/ring_ops.hpp"

namespace qnring {

namespace {

Elem as_elem(std::size_t a) { return static_cast<Elem>(a); }

// aR
ElementSet right_multiples(const FiniteRing& r, Elem a) {
  ElementSet s(r.order());
  for (std::size_t x = 0; x < r.order(); ++x) s.insert(r.mul(a, as_elem(x)));
  return s;
}

// Ra
ElementSet left_multiples(const FiniteRing& r, Elem a) {
  ElementSet s(r.order());
  for (std::size_t x = 0; x < r.order(); ++x) s.insert(r.mul(as_elem(x), a));
  return s;
}

template <class Pred>
Scan first_failure(const FiniteRing& r, Pred&& holds) {
  for (std::size_t a = 0; a < r.order(); ++a)
    if (!holds(as_elem(a))) return as_elem(a);
  return std::nullopt;
}

bool is_inner_regular(const FiniteRing& r, Elem a, Elem p) {
  // ∃x: p x p = p, with p a power of a
  (void)a;
  for (std::size_t x = 0; x < r.order(); ++x)
    if (r.mul(r.mul(p, as_elem(x)), p) == p) return true;
  return false;
}

}  // namespace

std::string_view unit_property_name(UnitProperty kind) {
  switch (kind) {
    case UnitProperty::kUU: return "UU";
    case UnitProperty::kUJ: return "UJ";
    case UnitProperty::kUQ: return "UQ";
    case UnitProperty::k2UU: return "2UU";
    case UnitProperty::k2UJ: return "2UJ";
    case UnitProperty::k2UQ: return "2UQ";
  }
  return "?";
}

UnitPropertyResult unit_property(const FiniteRing& r, UnitProperty kind) {
  const bool squared =
      kind == UnitProperty::k2UU || kind == UnitProperty::k2UJ || kind == UnitProperty::k2UQ;
  ElementSet accepted(r.order());
  ElementSet rejected(r.order());
  const auto in_target = [&](Elem q) {
    switch (kind) {
      case UnitProperty::kUU:
      case UnitProperty::k2UU: return r.is_nilpotent(q);
      case UnitProperty::kUJ:
      case UnitProperty::k2UJ: return r.jacobson_radical().contains(q);
      case UnitProperty::kUQ:
      case UnitProperty::k2UQ: return r.is_quasi_nilpotent(q);
    }
    return false;
  };
  UnitPropertyResult result;
  for (Elem u : r.units().members()) {
    const Elem v = squared ? r.mul(u, u) : u;
    const Elem q = r.sub(v, r.one());
    if (accepted.contains(q)) continue;
    if (!rejected.contains(q) && in_target(q)) {
      accepted.insert(q);
      continue;
    }
    rejected.insert(q);
    result.holds = false;
    result.witness = u;
    break;
  }
  return result;
}

UnitPropertyResult two_uq_strong_form(const FiniteRing& r) {
  const auto idempotents = r.idempotents().members();
  UnitPropertyResult result;
  for (Elem u : r.units().members()) {
    const Elem s = r.mul(u, u);
    bool decomposes = false;
    for (Elem e : idempotents) {
      const Elem q = r.sub(s, e);
      if (r.commute(e, q) && r.is_quasi_nilpotent(q)) {
        decomposes = true;
        break;
      }
    }
    if (!decomposes) {
      result.holds = false;
      result.witness = u;
      break;
    }
  }
  return result;
}

Scan find_non_clean(const FiniteRing& r) {
  const auto idempotents = r.idempotents().members();
  const auto& units = r.units();
  return first_failure(r, [&](Elem a) {
    for (Elem e : idempotents)
      if (units.contains(r.sub(a, e))) return true;
    return false;
  });
}

Scan find_non_exchange(const FiniteRing& r) {
  const auto idempotents = r.idempotents().members();
  return first_failure(r, [&](Elem a) {
    const ElementSet ar = right_multiples(r, a);
    const ElementSet br = right_multiples(r, r.sub(r.one(), a));
    for (Elem e : idempotents)
      if (ar.contains(e) && br.contains(r.sub(r.one(), e))) return true;
    return false;
  });
}

Scan find_non_regular(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) { return is_inner_regular(r, a, a); });
}

Scan find_non_strongly_regular(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) {
    const Elem a2 = r.mul(a, a);
    for (std::size_t b = 0; b < r.order(); ++b)
      if (r.mul(a2, as_elem(b)) == a) return true;
    return false;
  });
}

Scan find_non_unit_regular(const FiniteRing& r) {
  const auto units = r.units().members();
  return first_failure(r, [&](Elem a) {
    for (Elem u : units)
      if (r.mul(r.mul(a, u), a) == a) return true;
    return false;
  });
}

Scan find_non_pi_regular(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) {
    ElementSet seen(r.order());
    // Once a power repeats, later powers repeat too, so the scan stops there.
    for (Elem p = a; !seen.contains(p); p = r.mul(p, a)) {
      if (is_inner_regular(r, a, p)) return true;
      seen.insert(p);
    }
    return false;
  });
}

Scan find_non_strongly_pi_regular(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) {
    ElementSet seen(r.order());
    for (Elem p = a; !seen.contains(p); p = r.mul(p, a)) {
      const Elem next = r.mul(p, a);
      for (std::size_t x = 0; x < r.order(); ++x)
        if (r.mul(next, as_elem(x)) == p) return true;
      seen.insert(p);
    }
    return false;
  });
}

Scan find_non_tripotent(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) { return r.mul(r.mul(a, a), a) == a; });
}

Scan find_non_boolean(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) { return r.is_idempotent(a); });
}

Scan find_non_semitripotent(const FiniteRing& r) {
  std::vector<Elem> tripotents;
  for (std::size_t t = 0; t < r.order(); ++t)
    if (r.mul(r.mul(as_elem(t), as_elem(t)), as_elem(t)) == as_elem(t))
      tripotents.push_back(as_elem(t));
  const Ideal& j = r.jacobson_radical();
  return first_failure(r, [&](Elem a) {
    for (Elem t : tripotents)
      if (j.contains(r.sub(a, t))) return true;
    return false;
  });
}

Scan find_non_reduced(const FiniteRing& r) {
  Scan witness;
  r.nilpotents().for_each([&](Elem a) {
    if (!witness && a != r.zero()) witness = a;
  });
  return witness;
}

Scan find_non_abelian(const FiniteRing& r) {
  const auto& center = r.center();
  Scan witness;
  r.idempotents().for_each([&](Elem e) {
    if (!witness && !center.contains(e)) witness = e;
  });
  return witness;
}

Scan find_non_semipotent(const FiniteRing& r) {
  const Ideal& j = r.jacobson_radical();
  auto nonzero_idempotents = r.idempotents();
  nonzero_idempotents.erase(r.zero());
  return first_failure(r, [&](Elem a) {
    if (j.contains(a)) return true;
    return right_multiples(r, a).intersects(nonzero_idempotents) &&
           left_multiples(r, a).intersects(nonzero_idempotents);
  });
}

Scan find_non_dedekind_finite(const FiniteRing& r) {
  return first_failure(r, [&](Elem a) {
    for (std::size_t b = 0; b < r.order(); ++b)
      if (r.mul(a, as_elem(b)) == r.one() && r.mul(as_elem(b), a) != r.one()) return false;
    return true;
  });
}

Scan find_unliftable_idempotent(const FiniteRing& r) {
  const QuotientRing& q = r.radical_quotient();
  ElementSet image(q.ring.order());
  r.idempotents().for_each([&](Elem e) { image.insert(q.projection[e]); });
  Scan witness;
  q.ring.idempotents().for_each([&](Elem e) {
    if (!witness && !image.contains(e)) witness = e;
  });
  return witness;
}

bool is_clean(const FiniteRing& r) { return !find_non_clean(r); }
bool is_exchange(const FiniteRing& r) { return !find_non_exchange(r); }
bool idempotents_lift(const FiniteRing& r) { return !find_unliftable_idempotent(r); }
bool is_semiregular(const FiniteRing& r) {
  return !find_non_regular(r.radical_quotient().ring) && idempotents_lift(r);
}
bool is_tripotent(const FiniteRing& r) { return !find_non_tripotent(r); }
bool is_semitripotent(const FiniteRing& r) { return !find_non_semitripotent(r); }
bool is_boolean(const FiniteRing& r) { return !find_non_boolean(r); }
bool is_reduced(const FiniteRing& r) { return !find_non_reduced(r); }
bool is_abelian(const FiniteRing& r) { return !find_non_abelian(r); }

bool is_local(const FiniteRing& r) {
  const FiniteRing& q = r.radical_quotient().ring;
  return q.units().count() + 1 == q.order() || q.order() == 1;
}

bool is_division_ring(const FiniteRing& r) {
  return r.order() > 1 && r.units().count() + 1 == r.order();
}

bool is_semisimple(const FiniteRing& r) { return r.jacobson_radical().size() == 1; }
bool is_semipotent(const FiniteRing& r) { return !find_non_semipotent(r); }
bool is_potent(const FiniteRing& r) { return is_semipotent(r) && idempotents_lift(r); }
bool is_dedekind_finite(const FiniteRing& r) { return !find_non_dedekind_finite(r); }
bool is_2primal(const FiniteRing& r) {
  return r.nilpotents() == r.prime_radical().members();
}

RegularFamily regular_family(const FiniteRing& r) {
  RegularFamily f;
  f.regular = !find_non_regular(r);
  f.strongly_regular = !find_non_strongly_regular(r);
  f.unit_regular = !find_non_unit_regular(r);
  f.pi_regular = !find_non_pi_regular(r);
  f.strongly_pi_regular = !find_non_strongly_pi_regular(r);
  return f;
}

namespace {

constexpr std::array<std::string_view, kFlagCount> kFlagNames = {
    "UU",         "UJ",           "UQ",          "2UU",
    "2UJ",        "2UQ",          "clean",       "exchange",
    "semiregular", "tripotent",   "semitripotent", "reduced",
    "abelian",    "regular",      "strongly_regular", "unit_regular",
    "pi_regular", "strongly_pi_regular", "boolean", "local",
    "semisimple", "semipotent",   "potent",      "dedekind_finite",
    "2primal",
};

}  // namespace

std::string_view flag_name(Flag flag) { return kFlagNames[static_cast<std::size_t>(flag)]; }

std::optional<Flag> flag_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFlagCount; ++i)
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  return std::nullopt;
}

ClassReport classify(const FiniteRing& r) {
  ClassReport report;
  report.label = r.label();
  report.order = r.order();
  report.sizes = Cardinalities{r.units().count(),
                               r.idempotents().count(),
                               r.nilpotents().count(),
                               r.center().count(),
                               r.quasi_nilpotents().count(),
                               r.jacobson_radical().size(),
                               r.prime_radical().size()};

  const auto set = [&](Flag f, bool value, Scan witness = std::nullopt) {
    report.flags[static_cast<std::size_t>(f)] = value;
    if (!value && witness) report.witnesses[f] = {*witness};
  };
  const auto set_scan = [&](Flag f, Scan failure) { set(f, !failure, failure); };

  const std::pair<Flag, UnitProperty> unit_flags[] = {
      {Flag::kUU, UnitProperty::kUU},   {Flag::kUJ, UnitProperty::kUJ},
      {Flag::kUQ, UnitProperty::kUQ},   {Flag::k2UU, UnitProperty::k2UU},
      {Flag::k2UJ, UnitProperty::k2UJ}, {Flag::k2UQ, UnitProperty::k2UQ}};
  for (const auto& [flag, kind] : unit_flags) {
    const auto res = unit_property(r, kind);
    set(flag, res.holds, res.witness);
  }

  const QuotientRing& rad = r.radical_quotient();
  const Scan unliftable = find_unliftable_idempotent(r);
  const Scan unliftable_rep =
      unliftable ? Scan(rad.representatives[*unliftable]) : Scan(std::nullopt);

  set_scan(Flag::kClean, find_non_clean(r));
  set_scan(Flag::kExchange, find_non_exchange(r));
  {
    const Scan non_regular_quotient = find_non_regular(rad.ring);
    const Scan w = non_regular_quotient ? Scan(rad.representatives[*non_regular_quotient])
                                        : unliftable_rep;
    set(Flag::kSemiregular, !non_regular_quotient && !unliftable, w);
  }
  set_scan(Flag::kTripotent, find_non_tripotent(r));
  set_scan(Flag::kSemitripotent, find_non_semitripotent(r));
  set_scan(Flag::kReduced, find_non_reduced(r));
  set_scan(Flag::kAbelian, find_non_abelian(r));
  set_scan(Flag::kRegular, find_non_regular(r));
  set_scan(Flag::kStronglyRegular, find_non_strongly_regular(r));
  set_scan(Flag::kUnitRegular, find_non_unit_regular(r));
  set_scan(Flag::kPiRegular, find_non_pi_regular(r));
  set_scan(Flag::kStronglyPiRegular, find_non_strongly_pi_regular(r));
  set_scan(Flag::kBoolean, find_non_boolean(r));
  {
    Scan w;
    if (!is_local(r)) {
      // A nonzero non-unit of R/J, lifted to its representative.
      rad.ring.units();
      for (std::size_t x = 0; x < rad.ring.order() && !w; ++x)
        if (as_elem(x) != rad.ring.zero() && !rad.ring.is_unit(as_elem(x)))
          w = rad.representatives[x];
    }
    set(Flag::kLocal, is_local(r), w);
  }
  {
    Scan w;
    r.jacobson_radical().members().for_each([&](Elem a) {
      if (!w && a != r.zero()) w = a;
    });
    set(Flag::kSemisimple, !w, w);
  }
  const Scan non_semipotent = find_non_semipotent(r);
  set_scan(Flag::kSemipotent, non_semipotent);
  set(Flag::kPotent, !non_semipotent && !unliftable,
      non_semipotent ? non_semipotent : unliftable_rep);
  set_scan(Flag::kDedekindFinite, find_non_dedekind_finite(r));
  {
    Scan w;
    r.nilpotents().for_each([&](Elem a) {
      if (!w && !r.prime_radical().contains(a)) w = a;
    });
    set(Flag::k2Primal, !w, w);
  }

  // Semi-tripotence has a second characterization; both must agree.
  const bool quotient_tripotent = is_tripotent(rad.ring);
  if (report.flag(Flag::kSemitripotent) != (quotient_tripotent && !unliftable))
    throw InternalError("semi-tripotent characterizations disagree on " + r.label());

  if (auto broken = lattice_violation(report))
    throw InternalError("implication lattice violated on " + r.label() + ": " + *broken);
  return report;
}

std::optional<std::string> lattice_violation(const ClassReport& report) {
  static constexpr std::pair<Flag, Flag> kImplications[] = {
      {Flag::kUJ, Flag::k2UJ},
      {Flag::kUU, Flag::k2UU},
      {Flag::kUQ, Flag::k2UQ},
      {Flag::k2UJ, Flag::k2UQ},
      {Flag::k2UU, Flag::k2UQ},
      {Flag::kUJ, Flag::kUQ},
      {Flag::kUU, Flag::kUQ},
      {Flag::kBoolean, Flag::kTripotent},
      {Flag::kTripotent, Flag::kRegular},
      {Flag::kTripotent, Flag::kStronglyRegular},
      {Flag::kTripotent, Flag::kUnitRegular},
      {Flag::kTripotent, Flag::kReduced},
      {Flag::kTripotent, Flag::kSemitripotent},
      {Flag::kStronglyRegular, Flag::kUnitRegular},
      {Flag::kUnitRegular, Flag::kRegular},
      {Flag::kRegular, Flag::kPiRegular},
      {Flag::kRegular, Flag::kSemisimple},
      {Flag::kStronglyRegular, Flag::kStronglyPiRegular},
      {Flag::kReduced, Flag::kAbelian},
      {Flag::kReduced, Flag::k2Primal},
      {Flag::kPotent, Flag::kSemipotent},
      {Flag::kClean, Flag::kExchange},
      {Flag::kSemiregular, Flag::kExchange},
  };
  for (const auto& [from, to] : kImplications)
    if (report.flag(from) && !report.flag(to))
      return std::string(flag_name(from)) + " => " + std::string(flag_name(to));
  return std::nullopt;
}

Fingerprint fingerprint(const ClassReport& report) {
  return Fingerprint{report.order, report.sizes, report.flags};
}

Fingerprint fingerprint(const FiniteRing& ring) { return fingerprint(classify(ring)); }

}  // namespace qnring
