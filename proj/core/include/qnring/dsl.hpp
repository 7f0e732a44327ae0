#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnring/constructions.hpp"
#include "qnring/errors.hpp"
#include "qnring/finite_group.hpp"
#include "qnring/finite_ring.hpp"

namespace qnring {

// Construction language.
//
//   ring  := 'Z' '(' int ')' | 'GF' '(' int ',' int ')'
//          | 'Prod' '(' ring {',' ring} ')'
//          | 'M' '(' int ',' ring ')' | 'T' '(' int ',' ring ')'
//          | 'TrivExt' '(' ring ')' | 'PolyMod' '(' ring ',' int ')'
//          | 'GroupRing' '(' ring ',' group ')'
//          | 'Quot' '(' ring ',' '[' [int {',' int}] ']' ')'
//          | 'Corner' '(' ring ',' int ')'
//   group := 'C' '(' int ')' | 'GProd' '(' group {',' group} ')'
//          | ('S3' | 'D4' | 'Q8' | 'Klein') ['(' ')']
//
// Whitespace is insignificant and integers are decimal. Quot generators and
// Corner elements are raw element indices of the inner ring.

struct GroupSpec {
  enum class Kind { kCyclic, kProduct, kNamed };
  Kind kind = Kind::kCyclic;
  std::uint64_t n = 0;             // kCyclic
  std::string name;                // kNamed
  std::vector<GroupSpec> factors;  // kProduct

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct RingSpec {
  enum class Kind { kZ, kGF, kProd, kM, kT, kTrivExt, kPolyMod, kGroupRing, kQuot, kCorner };
  Kind kind = Kind::kZ;
  /// Integer arguments in source order: Z(m), GF(p,k), M/T(n), PolyMod(n), Corner(e).
  std::vector<std::uint64_t> ints;
  std::vector<RingSpec> rings;
  std::vector<GroupSpec> group;  // one entry for GroupRing
  std::vector<std::uint64_t> gens;  // Quot generators

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Malformed input; line and column are 1-based.
class SyntaxError : public RingError {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that names an impossible ring (M(0, ...), GF(4, 1),
/// a non-idempotent corner, ...).
class SemanticError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

RingSpec parse_spec(std::string_view text);
GroupSpec parse_group_spec(std::string_view text);

std::string to_string(const RingSpec& spec);
std::string to_string(const GroupSpec& spec);

FiniteGroup build_group(const GroupSpec& spec);

/// A ring built from a spec, keeping the intermediate rings so elements can
/// be rendered structurally.
struct BuiltRing {
  RingSpec spec;
  RingPtr ring;
  std::vector<BuiltRing> children;
  std::optional<FiniteGroup> group;  // GroupRing
  std::vector<Elem> parent_index;    // Quot: coset representative; Corner: parent element
};

/// Builds the ring described by `spec`. Throws SemanticError for invalid
/// arguments and CapExceeded when an intermediate ring exceeds the cap.
/// The result is labelled with to_string(spec).
BuiltRing elaborate(const RingSpec& spec, const BuildOptions& options = {});

/// parse_spec followed by elaborate.
BuiltRing build_from_text(std::string_view text, const BuildOptions& options = {});

/// Structural rendering of an element: residues, polynomials in x,
/// tuples, matrices, group-ring sums, cosets.
std::string element_name(const BuiltRing& built, Elem a);

}  // namespace qnring
