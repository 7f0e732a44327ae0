#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qnring {

/// Index of a ring (or group) element. Tables store these densely.
using Elem = std::uint16_t;

/// Largest order representable with 16-bit element indices.
inline constexpr std::size_t kMaxRepresentableOrder = 65536;

/// Subset of {0, ..., universe-1} with O(1) membership.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet from_members(std::size_t universe, std::span<const Elem> members) {
    ElementSet s(universe);
    for (Elem a : members) s.insert(a);
    return s;
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t a = 0; a < universe; ++a) s.insert(static_cast<Elem>(a));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t a) const noexcept {
    return a < universe_ && ((words_[a >> 6] >> (a & 63)) & 1u) != 0;
  }
  void insert(std::size_t a) noexcept { words_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  void erase(std::size_t a) noexcept { words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Members in increasing order.
  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem a) { out.push_back(a); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Elem>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    if (other.universe_ != universe_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w)
      words_[w] |= other.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qnring
