#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnring/finite_group.hpp"
#include "qnring/finite_ring.hpp"
#include "qnring/ring_ops.hpp"

namespace qnring {

inline constexpr std::size_t kDefaultOrderCap = 20000;

struct BuildOptions {
  /// Builders refuse to materialize rings with more elements than this.
  std::size_t max_order = kDefaultOrderCap;
  /// Run the ring-axiom checker on every result.
  bool validate = true;
};

// Element encodings are canonical and documented here because the DSL, the
// corpus files and the JSON element listings all refer to raw indices.
//
//   zmod            residue
//   finite_field    sum c_i p^i over the coefficients of the residue polynomial
//   direct_product  mixed radix, first factor least significant
//   matrix_ring     row-major entries, entry (0,0) least significant
//   upper_triangular  row-major entries with i <= j
//   trivial_extension (r, m) -> r + |R| m
//   truncated_poly  sum a_i |R|^i
//   group_ring      coefficient of group element g at digit g
//   morita_ring     (a, m, n, b) -> a + |A|(m + |M|(n + |N| b))

FiniteRing zmod(std::size_t m, const BuildOptions& options = {});

/// Coefficients c_0..c_{k-1} of the monic irreducible x^k + ... used for
/// GF(p^k): the smallest such polynomial, comparing c_{k-1} first.
std::vector<unsigned> field_modulus(unsigned p, unsigned k);

FiniteRing finite_field(unsigned p, unsigned k, const BuildOptions& options = {});

using RingRef = std::reference_wrapper<const FiniteRing>;

FiniteRing direct_product(std::span<const RingRef> factors, const BuildOptions& options = {});
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b,
                          const BuildOptions& options = {});

FiniteRing matrix_ring(std::size_t n, const FiniteRing& base, const BuildOptions& options = {});
FiniteRing upper_triangular(std::size_t n, const FiniteRing& base,
                            const BuildOptions& options = {});
FiniteRing trivial_extension(const FiniteRing& base, const BuildOptions& options = {});
FiniteRing truncated_poly(const FiniteRing& base, std::size_t n, const BuildOptions& options = {});

/// RG together with the augmentation map and its kernel.
struct GroupRing {
  FiniteRing ring;
  std::vector<Elem> augmentation;  // element of RG -> element of R
  Ideal augmentation_ideal;
};

GroupRing group_ring(const FiniteRing& base, const FiniteGroup& group,
                     const BuildOptions& options = {});

// Canonical copies of the base ring inside larger constructions.

/// {diag(r, ..., r)} inside matrix_ring(n, base) or upper_triangular(n, base).
ElementSet scalar_matrix_copy(std::size_t n, const FiniteRing& base, bool triangular);
/// {(r, 0)} inside trivial_extension(base), equally the constants of truncated_poly.
ElementSet constant_copy(const FiniteRing& base, std::size_t ring_order);
/// {r·1_G} inside group_ring(base, group).
ElementSet group_ring_coefficient_copy(const FiniteRing& base, const FiniteGroup& group);

// Bimodules and Morita contexts.

/// An (A,B)-bimodule: an abelian group with a left A-action and a right
/// B-action, all tabulated.
struct Bimodule {
  std::size_t order = 1;
  std::size_t left_order = 1;
  std::size_t right_order = 1;
  std::vector<Elem> add;    // order x order
  std::vector<Elem> neg;    // order
  std::vector<Elem> left;   // left_order x order: a·m
  std::vector<Elem> right;  // order x right_order: m·b
  Elem zero = 0;
  std::string label;

  Elem plus(Elem x, Elem y) const { return add[x * order + y]; }
  Elem act_left(Elem a, Elem m) const { return left[a * order + m]; }
  Elem act_right(Elem m, Elem b) const { return right[m * right_order + b]; }
};

/// R as an (R,R)-bimodule.
Bimodule regular_bimodule(const FiniteRing& ring);
/// The zero (A,B)-bimodule.
Bimodule zero_bimodule(const FiniteRing& left, const FiniteRing& right);
/// B as an (A,B)-bimodule through a ring homomorphism f: A -> B, a·m·b = f(a) m b.
Bimodule hom_bimodule(const FiniteRing& a, const FiniteRing& b, std::span<const Elem> f);
/// B as a (B,A)-bimodule through f: A -> B, b·n·a = b n f(a).
Bimodule hom_bimodule_right(const FiniteRing& a, const FiniteRing& b, std::span<const Elem> f);
/// The ring homomorphism Z_m -> R, k -> k·1. Requires char(R) | m.
std::vector<Elem> integer_hom(const FiniteRing& zm, const FiniteRing& target);

/// Describes the first module-axiom violation of `m` over (a, b), or nullopt.
std::optional<std::string> bimodule_violation(const FiniteRing& a, const FiniteRing& b,
                                              const Bimodule& m);

/// T(R, M) with (r, m)(s, n) = (rs, rn + ms).
FiniteRing trivial_extension(const FiniteRing& base, const Bimodule& module,
                             const BuildOptions& options = {});

/// Data of a Morita context (A M; N B): M an (A,B)-bimodule, N a
/// (B,A)-bimodule, phi: M × N -> A and psi: N × M -> B.
struct BimodulePairing {
  RingPtr a;
  RingPtr b;
  Bimodule m;
  Bimodule n;
  std::vector<Elem> phi;  // |M| x |N| -> A
  std::vector<Elem> psi;  // |N| x |M| -> B
  std::string label;

  Elem mn(Elem x, Elem y) const { return phi[x * n.order + y]; }
  Elem nm(Elem y, Elem x) const { return psi[y * m.order + x]; }
};

/// Describes the first violated law (module axioms, bilinearity, balance,
/// mixed associativity), or nullopt.
std::optional<std::string> pairing_violation(const BimodulePairing& ctx);

/// Context over a single ring R: M = N = R with phi(m, n) = m c n and
/// psi(n, m) = n c m. Requires c central (checked by pairing_violation).
/// c = 1 gives M_2(R); c = 0 the trivial context.
BimodulePairing scalar_context(RingPtr ring, Elem c);
/// phi = psi = 0 with the given modules.
BimodulePairing trivial_context(RingPtr a, RingPtr b, Bimodule m, Bimodule n);

struct MoritaRing {
  FiniteRing ring;
  ElementSet trace_mn;  // additive span of phi(M, N) in A
  ElementSet trace_nm;  // additive span of psi(N, M) in B
  bool trace_nilpotent = false;
  bool trace_central = false;
};

/// Throws InvalidArgument when the pairing violates its laws.
MoritaRing morita_ring(const BimodulePairing& ctx, const BuildOptions& options = {});

/// M ⊕ N as an (A×B)-bimodule: (a,b)(m,n) = (am, bn), (m,n)(a,b) = (mb, na).
/// Trivial Morita contexts are trivial extensions by this bimodule.
Bimodule context_bimodule(const FiniteRing& a, const FiniteRing& b, const Bimodule& m,
                          const Bimodule& n);

}  // namespace qnring
