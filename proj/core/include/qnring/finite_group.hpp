#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnring/element_set.hpp"

namespace qnring {

/// Finite group on {0, ..., order-1} given by its Cayley table.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Elem> cayley, Elem identity, std::string label,
              std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  const std::string& label() const noexcept { return label_; }
  Elem op(Elem a, Elem b) const noexcept { return cayley_[a * order_ + b]; }
  std::span<const Elem> cayley() const noexcept { return cayley_; }

  Elem inverse(Elem a) const;
  std::size_t element_order(Elem a) const;
  bool is_abelian() const;
  std::string element_name(Elem a) const;

 private:
  std::size_t order_;
  std::vector<Elem> cayley_;
  Elem identity_;
  std::string label_;
  std::vector<std::string> names_;
};

/// Describes the first group-axiom violation, or nullopt for a valid group.
std::optional<std::string> group_violation(const FiniteGroup& group);

/// C_n with element k standing for g^k.
FiniteGroup cyclic_group(std::size_t n);
/// G_1 × ... × G_k, mixed radix with the first factor least significant.
FiniteGroup group_product(std::span<const FiniteGroup> factors);
/// One of "S3", "D4", "Q8", "Klein". Throws InvalidArgument otherwise.
FiniteGroup builtin_group(std::string_view name);

/// Least common multiple of the element orders.
std::size_t group_exponent(const FiniteGroup& group);
/// |G| is a power of p (the trivial group counts for every p).
bool is_p_group(const FiniteGroup& group, std::size_t p);

bool is_prime(std::size_t n);

}  // namespace qnring
