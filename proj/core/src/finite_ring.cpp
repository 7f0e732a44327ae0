#include "qnring/finite_ring.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>

#include "qnring/errors.hpp"
#include "qnring/ring_ops.hpp"

namespace qnring {

namespace {

constexpr std::int32_t kNoInverse = -1;

}  // namespace

struct FiniteRing::Cache {
  std::once_flag units_once;
  ElementSet units;
  std::vector<std::int32_t> inverse;

  std::once_flag idempotents_once;
  ElementSet idempotents;

  std::once_flag nilpotents_once;
  ElementSet nilpotents;

  std::once_flag center_once;
  ElementSet center;

  std::once_flag qn_once;
  ElementSet qn;
  std::atomic<bool> qn_ready{false};

  std::once_flag jacobson_once;
  std::optional<Ideal> jacobson;

  std::once_flag quotient_once;
  std::unique_ptr<QuotientRing> radical_quotient;
};

FiniteRing::FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> neg,
                       std::vector<Elem> mul, Elem zero, Elem one, std::string label)
    : order_(order),
      add_(std::move(add)),
      neg_(std::move(neg)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      label_(std::move(label)),
      cache_(std::make_shared<Cache>()) {
  if (order_ == 0 || order_ > kMaxRepresentableOrder)
    throw std::invalid_argument("ring order must be in [1, 65536]");
  if (add_.size() != order_ * order_ || mul_.size() != order_ * order_ || neg_.size() != order_)
    throw std::invalid_argument("ring tables are not " + std::to_string(order_) + "x" +
                                std::to_string(order_));
  if (zero_ >= order_ || one_ >= order_)
    throw std::invalid_argument("zero/one index out of range");
}

FiniteRing::FiniteRing(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
                       Elem zero, Elem one, std::string label)
    : FiniteRing(order, add, std::vector<Elem>(order, zero), std::move(mul), zero, one,
                 std::move(label)) {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (add_[a * order_ + b] == zero_) {
        neg_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
}

Elem FiniteRing::pow(Elem a, std::size_t k) const noexcept {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::scalar(long long k) const noexcept {
  const auto ch = static_cast<long long>(characteristic());
  long long r = k % ch;
  if (r < 0) r += ch;
  Elem acc = zero_;
  for (long long i = 0; i < r; ++i) acc = add(acc, one_);
  return acc;
}

std::size_t FiniteRing::characteristic() const noexcept {
  std::size_t ch = 1;
  Elem acc = one_;
  while (acc != zero_) {
    acc = add(acc, one_);
    ++ch;
  }
  return ch;
}

bool FiniteRing::is_nilpotent(Elem a) const noexcept {
  // The nilpotency index never exceeds the order, so a^(2^m) with 2^m ≥ order decides it.
  Elem p = a;
  for (std::size_t e = 1; e < order_; e <<= 1) p = mul(p, p);
  return p == zero_;
}

const ElementSet& FiniteRing::units() const {
  std::call_once(cache_->units_once, [this] {
    auto& c = *cache_;
    c.units = ElementSet(order_);
    c.inverse.assign(order_, kNoInverse);
    for (std::size_t a = 0; a < order_; ++a) {
      if (c.inverse[a] != kNoInverse) continue;
      const Elem* row = mul_.data() + a * order_;
      for (std::size_t b = 0; b < order_; ++b) {
        if (row[b] == one_ && mul(static_cast<Elem>(b), static_cast<Elem>(a)) == one_) {
          c.inverse[a] = static_cast<std::int32_t>(b);
          c.inverse[b] = static_cast<std::int32_t>(a);
          break;
        }
      }
    }
    for (std::size_t a = 0; a < order_; ++a)
      if (c.inverse[a] != kNoInverse) c.units.insert(a);
  });
  return cache_->units;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  units();
  const auto inv = cache_->inverse[a];
  if (inv == kNoInverse) return std::nullopt;
  return static_cast<Elem>(inv);
}

const ElementSet& FiniteRing::idempotents() const {
  std::call_once(cache_->idempotents_once, [this] {
    cache_->idempotents = ElementSet(order_);
    for (std::size_t a = 0; a < order_; ++a)
      if (is_idempotent(static_cast<Elem>(a))) cache_->idempotents.insert(a);
  });
  return cache_->idempotents;
}

const ElementSet& FiniteRing::nilpotents() const {
  std::call_once(cache_->nilpotents_once, [this] {
    cache_->nilpotents = ElementSet(order_);
    for (std::size_t a = 0; a < order_; ++a)
      if (is_nilpotent(static_cast<Elem>(a))) cache_->nilpotents.insert(a);
  });
  return cache_->nilpotents;
}

const ElementSet& FiniteRing::center() const {
  std::call_once(cache_->center_once, [this] {
    cache_->center = ElementSet(order_);
    for (std::size_t a = 0; a < order_; ++a) {
      bool central = true;
      for (std::size_t x = 0; x < order_ && central; ++x)
        central = commute(static_cast<Elem>(a), static_cast<Elem>(x));
      if (central) cache_->center.insert(a);
    }
  });
  return cache_->center;
}

bool FiniteRing::is_quasi_nilpotent(Elem a) const {
  if (cache_->qn_ready.load(std::memory_order_acquire)) return cache_->qn.contains(a);
  const ElementSet& u = units();
  const Elem* row = mul_.data() + static_cast<std::size_t>(a) * order_;
  for (std::size_t x = 0; x < order_; ++x) {
    const Elem ax = row[x];
    if (ax != mul(static_cast<Elem>(x), a)) continue;
    if (!u.contains(sub(one_, ax))) return false;
  }
  return true;
}

const ElementSet& FiniteRing::quasi_nilpotents() const {
  std::call_once(cache_->qn_once, [this] {
    ElementSet qn(order_);
    for (std::size_t a = 0; a < order_; ++a)
      if (is_quasi_nilpotent(static_cast<Elem>(a))) qn.insert(a);
    cache_->qn = std::move(qn);
    cache_->qn_ready.store(true, std::memory_order_release);
  });
  return cache_->qn;
}

const Ideal& FiniteRing::jacobson_radical() const {
  std::call_once(cache_->jacobson_once, [this] {
    const ElementSet& u = units();
    ElementSet j(order_);
    for (std::size_t a = 0; a < order_; ++a) {
      bool in_j = true;
      for (std::size_t x = 0; x < order_ && in_j; ++x)
        in_j = u.contains(sub(one_, mul(static_cast<Elem>(x), static_cast<Elem>(a))));
      if (in_j) j.insert(a);
    }
    if (!is_ideal(*this, j))
      throw InternalError("computed Jacobson radical of " + label_ + " is not an ideal");
    j.for_each([&](Elem a) {
      if (!u.contains(add(one_, a)))
        throw InternalError("1 + J(R) is not inside U(R) for " + label_);
    });
    cache_->jacobson = Ideal::from_set(*this, std::move(j));
  });
  return *cache_->jacobson;
}

const QuotientRing& FiniteRing::radical_quotient() const {
  std::call_once(cache_->quotient_once, [this] {
    cache_->radical_quotient = std::make_unique<QuotientRing>(
        quotient(*this, jacobson_radical(), label_ + "/J"));
  });
  return *cache_->radical_quotient;
}

bool is_ideal(const FiniteRing& ring, const ElementSet& s) {
  if (s.universe() != ring.order() || !s.contains(ring.zero())) return false;
  const auto members = s.members();
  for (Elem a : members) {
    if (!s.contains(ring.neg(a))) return false;
    for (Elem b : members)
      if (!s.contains(ring.add(a, b))) return false;
  }
  for (std::size_t r = 0; r < ring.order(); ++r) {
    for (Elem a : members) {
      if (!s.contains(ring.mul(static_cast<Elem>(r), a))) return false;
      if (!s.contains(ring.mul(a, static_cast<Elem>(r)))) return false;
    }
  }
  return true;
}

Ideal Ideal::from_set(const FiniteRing& ring, ElementSet members) {
  if (!is_ideal(ring, members))
    throw InvalidArgument("subset is not a two-sided ideal of " + ring.label());
  return Ideal(std::move(members));
}

}  // namespace qnring
