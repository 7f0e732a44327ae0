#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnring/element_set.hpp"

namespace qnring {

class FiniteRing;
struct QuotientRing;

/// A two-sided ideal of a specific ring. Only obtainable through checked
/// factories, so holding one means the closure laws were verified.
class Ideal {
 public:
  /// Throws InvalidArgument if `members` is not a two-sided ideal of `ring`.
  static Ideal from_set(const FiniteRing& ring, ElementSet members);

  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(Elem a) const noexcept { return members_.contains(a); }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(ElementSet members) : members_(std::move(members)) {}
  ElementSet members_;
};

/// True iff `s` contains zero, is closed under addition and negation, and
/// absorbs multiplication on both sides.
bool is_ideal(const FiniteRing& ring, const ElementSet& s);

/// Unital ring on {0, ..., order-1} given by dense row-major tables.
///
/// Tables are immutable after construction. Derived element sets (units,
/// idempotents, quasi-nilpotents, the Jacobson radical, ...) are computed on
/// first request and memoized; the memo is thread-safe and shared between
/// copies of the same ring.
class FiniteRing {
 public:
  FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> neg,
             std::vector<Elem> mul, Elem zero, Elem one, std::string label);

  /// Derives the negation table from `add` by search. Quadratic; meant for
  /// hand-written tables.
  FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
             Elem one, std::string label);

  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Elem add(Elem a, Elem b) const noexcept { return add_[index(a, b)]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[index(a, b)]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }

  /// a^k with a^0 = 1.
  Elem pow(Elem a, std::size_t k) const noexcept;
  /// The element k·1 (negative k allowed).
  Elem scalar(long long k) const noexcept;
  /// Additive order of 1.
  std::size_t characteristic() const noexcept;

  std::span<const Elem> add_table() const noexcept { return add_; }
  std::span<const Elem> neg_table() const noexcept { return neg_; }
  std::span<const Elem> mul_table() const noexcept { return mul_; }

  // Memoized element sets.
  const ElementSet& units() const;
  std::optional<Elem> inverse(Elem a) const;
  bool is_unit(Elem a) const { return units().contains(a); }
  const ElementSet& idempotents() const;
  const ElementSet& nilpotents() const;
  const ElementSet& center() const;
  const ElementSet& quasi_nilpotents() const;
  const Ideal& jacobson_radical() const;
  /// Lower nil-radical. For a finite ring this coincides with J(R).
  const Ideal& prime_radical() const { return jacobson_radical(); }
  /// R/J(R) together with the canonical projection.
  const QuotientRing& radical_quotient() const;

  /// Single-element quasi-nilpotency test; uses the memoized set when it
  /// is already available and scans the commutant of `a` otherwise.
  bool is_quasi_nilpotent(Elem a) const;
  bool is_nilpotent(Elem a) const noexcept;
  bool is_idempotent(Elem a) const noexcept { return mul(a, a) == a; }

 private:
  struct Cache;

  std::size_t index(Elem a, Elem b) const noexcept {
    return static_cast<std::size_t>(a) * order_ + b;
  }

  std::size_t order_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> mul_;
  Elem zero_;
  Elem one_;
  std::string label_;
  std::shared_ptr<Cache> cache_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

}  // namespace qnring
