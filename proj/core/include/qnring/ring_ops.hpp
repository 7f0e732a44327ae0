#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnring/element_set.hpp"
#include "qnring/finite_ring.hpp"

namespace qnring {

enum class Axiom {
  kNone,
  kTableShape,
  kIndexRange,
  kAdditiveIdentity,
  kAdditiveInverse,
  kAdditiveCommutativity,
  kAdditiveAssociativity,
  kMultiplicativeIdentity,
  kNontrivialIdentity,
  kMultiplicativeAssociativity,
  kLeftDistributivity,
  kRightDistributivity,
};

std::string_view axiom_name(Axiom axiom);

struct ValidationResult {
  Axiom axiom = Axiom::kNone;
  /// Offending elements; unused slots are zero.
  std::array<Elem, 3> witness{};
  std::string message;

  bool ok() const noexcept { return axiom == Axiom::kNone; }
  explicit operator bool() const noexcept { return ok(); }
};

struct ValidationOptions {
  /// Rings up to this order are checked on every triple.
  std::size_t exhaustive_limit = 64;
  /// Random triples checked above the exhaustive limit.
  std::size_t samples = 100000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Checks every ring axiom. Identity, inverse and commutativity laws are
/// always checked on all elements; associativity and distributivity on all
/// triples up to `exhaustive_limit`, on random triples beyond it.
ValidationResult validate(const FiniteRing& ring, const ValidationOptions& options = {});

/// Throws InvalidRing carrying the validation message.
void require_valid(const FiniteRing& ring, const ValidationOptions& options = {});

/// Smallest two-sided ideal containing `gens`.
Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens);

/// R/I. Cosets are numbered in increasing order of their smallest member,
/// which is also the stored representative.
struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> projection;       // element of R -> coset
  std::vector<Elem> representatives;  // coset -> smallest member
};

QuotientRing quotient(const FiniteRing& ring, const Ideal& ideal, std::string label = {});
/// Throws InvalidArgument when `members` is not an ideal.
QuotientRing quotient(const FiniteRing& ring, const ElementSet& members, std::string label = {});

/// A ring carried on a subset of a parent ring; elements are numbered in
/// increasing order of their parent index.
struct EmbeddedRing {
  FiniteRing ring;
  std::vector<Elem> embedding;  // element of the subring -> element of the parent
};

/// eRe with identity e. Throws InvalidArgument if e is not idempotent.
EmbeddedRing corner_ring(const FiniteRing& ring, Elem e, std::string label = {});

/// True iff `s` contains 0 and 1 and is closed under +, - and *.
bool is_unital_subring(const FiniteRing& ring, const ElementSet& s);

/// The ring carried by a unital subring. Throws InvalidArgument otherwise.
EmbeddedRing subring(const FiniteRing& ring, const ElementSet& s, std::string label = {});

/// U(R) ∩ S ⊆ U(S): inverses in R of members of S stay in S.
/// Throws InvalidArgument if `s` is not a unital subring.
bool is_good_subring(const FiniteRing& ring, const ElementSet& s);

/// Least k ≥ 1 with I^k = 0, or 0 if the ideal is not nilpotent.
std::size_t nilpotency_index(const FiniteRing& ring, const ElementSet& ideal);

}  // namespace qnring
