#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnring/finite_ring.hpp"

namespace qnring {

enum class UnitProperty { kUU, kUJ, kUQ, k2UU, k2UJ, k2UQ };

std::string_view unit_property_name(UnitProperty kind);

struct UnitPropertyResult {
  bool holds = true;
  /// Smallest unit violating the property.
  std::optional<Elem> witness;
};

/// UU/UJ/UQ: u - 1 ∈ S for every unit u; the 2- variants test u² - 1 ∈ S.
/// S is Nil(R), J(R) or QN(R) respectively.
UnitPropertyResult unit_property(const FiniteRing& ring, UnitProperty kind);

/// Every unit square is e + q with e idempotent, q quasi-nilpotent, eq = qe.
UnitPropertyResult two_uq_strong_form(const FiniteRing& ring);

/// Outcome of a definitional scan: nullopt if the property holds, otherwise
/// a counterexample element.
using Scan = std::optional<Elem>;

Scan find_non_clean(const FiniteRing& ring);
Scan find_non_exchange(const FiniteRing& ring);
Scan find_non_regular(const FiniteRing& ring);
Scan find_non_strongly_regular(const FiniteRing& ring);
Scan find_non_unit_regular(const FiniteRing& ring);
Scan find_non_pi_regular(const FiniteRing& ring);
Scan find_non_strongly_pi_regular(const FiniteRing& ring);
Scan find_non_tripotent(const FiniteRing& ring);
Scan find_non_semitripotent(const FiniteRing& ring);
Scan find_non_boolean(const FiniteRing& ring);
Scan find_non_reduced(const FiniteRing& ring);
Scan find_non_abelian(const FiniteRing& ring);
Scan find_non_semipotent(const FiniteRing& ring);
Scan find_non_dedekind_finite(const FiniteRing& ring);
/// An idempotent of R/J(R) (index in the quotient) with no idempotent preimage.
Scan find_unliftable_idempotent(const FiniteRing& ring);

bool is_clean(const FiniteRing& ring);
bool is_exchange(const FiniteRing& ring);
bool is_semiregular(const FiniteRing& ring);
bool is_tripotent(const FiniteRing& ring);
bool is_semitripotent(const FiniteRing& ring);
bool is_boolean(const FiniteRing& ring);
bool is_reduced(const FiniteRing& ring);
bool is_abelian(const FiniteRing& ring);
bool is_local(const FiniteRing& ring);
bool is_semisimple(const FiniteRing& ring);
bool is_semipotent(const FiniteRing& ring);
bool is_potent(const FiniteRing& ring);
bool is_dedekind_finite(const FiniteRing& ring);
bool is_2primal(const FiniteRing& ring);
bool idempotents_lift(const FiniteRing& ring);
/// Order > 1 and every nonzero element is a unit.
bool is_division_ring(const FiniteRing& ring);

struct RegularFamily {
  bool regular = false;
  bool strongly_regular = false;
  bool unit_regular = false;
  bool pi_regular = false;
  bool strongly_pi_regular = false;
};

RegularFamily regular_family(const FiniteRing& ring);

enum class Flag {
  kUU,
  kUJ,
  kUQ,
  k2UU,
  k2UJ,
  k2UQ,
  kClean,
  kExchange,
  kSemiregular,
  kTripotent,
  kSemitripotent,
  kReduced,
  kAbelian,
  kRegular,
  kStronglyRegular,
  kUnitRegular,
  kPiRegular,
  kStronglyPiRegular,
  kBoolean,
  kLocal,
  kSemisimple,
  kSemipotent,
  kPotent,
  kDedekindFinite,
  k2Primal,
};

inline constexpr std::size_t kFlagCount = 25;

/// Stable key used in reports ("2UQ", "strongly_regular", ...).
std::string_view flag_name(Flag flag);
std::optional<Flag> flag_from_name(std::string_view name);
inline constexpr std::array<Flag, kFlagCount> all_flags() {
  std::array<Flag, kFlagCount> out{};
  for (std::size_t i = 0; i < kFlagCount; ++i) out[i] = static_cast<Flag>(i);
  return out;
}

struct Cardinalities {
  std::size_t units = 0;
  std::size_t idempotents = 0;
  std::size_t nilpotents = 0;
  std::size_t center = 0;
  std::size_t quasi_nilpotents = 0;
  std::size_t jacobson = 0;
  std::size_t prime_radical = 0;

  friend bool operator==(const Cardinalities&, const Cardinalities&) = default;
};

struct ClassReport {
  std::string label;
  std::size_t order = 0;
  Cardinalities sizes;
  std::array<bool, kFlagCount> flags{};
  /// Counterexample elements for flags that are false.
  std::map<Flag, std::vector<Elem>> witnesses;

  bool flag(Flag f) const { return flags[static_cast<std::size_t>(f)]; }
};

/// Evaluates every predicate, attaches witnesses and asserts the
/// implication lattice (throws InternalError on a violation).
ClassReport classify(const FiniteRing& ring);

/// Implications that must hold between flags; returns the first broken one.
std::optional<std::string> lattice_violation(const ClassReport& report);

/// Isomorphism-free structural summary.
struct Fingerprint {
  std::size_t order = 0;
  Cardinalities sizes;
  std::array<bool, kFlagCount> flags{};

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const ClassReport& report);
Fingerprint fingerprint(const FiniteRing& ring);

}  // namespace qnring
