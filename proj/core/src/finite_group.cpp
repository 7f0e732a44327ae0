#include "qnring/finite_group.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "qnring/errors.hpp"

namespace qnring {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> cayley, Elem identity,
                         std::string label, std::vector<std::string> names)
    : order_(order),
      cayley_(std::move(cayley)),
      identity_(identity),
      label_(std::move(label)),
      names_(std::move(names)) {
  if (order_ == 0 || order_ > kMaxRepresentableOrder || cayley_.size() != order_ * order_ ||
      identity_ >= order_)
    throw std::invalid_argument("malformed Cayley table");
  if (!names_.empty() && names_.size() != order_)
    throw std::invalid_argument("element name count does not match group order");
}

Elem FiniteGroup::inverse(Elem a) const {
  for (std::size_t b = 0; b < order_; ++b)
    if (op(a, static_cast<Elem>(b)) == identity_) return static_cast<Elem>(b);
  throw InvalidArgument("element has no inverse in " + label_);
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem p = a; p != identity_; p = op(p, a)) {
    if (++k > order_) throw InvalidArgument("element of infinite order in " + label_);
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (op(static_cast<Elem>(a), static_cast<Elem>(b)) !=
          op(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

std::string FiniteGroup::element_name(Elem a) const {
  if (!names_.empty()) return names_[a];
  return "g" + std::to_string(a);
}

std::optional<std::string> group_violation(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (auto v : g.cayley())
    if (v >= n) return "Cayley entry out of range";
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Elem>(a);
    if (g.op(g.identity(), x) != x || g.op(x, g.identity()) != x)
      return "identity law fails at " + std::to_string(a);
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = g.op(x, static_cast<Elem>(b)) == g.identity() &&
                    g.op(static_cast<Elem>(b), x) == g.identity();
    if (!has_inverse) return "element " + std::to_string(a) + " has no inverse";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b), z = static_cast<Elem>(c);
        if (g.op(g.op(x, y), z) != g.op(x, g.op(y, z)))
          return "associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                 ", " + std::to_string(c) + ")";
      }
  return std::nullopt;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be at least 1");
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroup(n, std::move(table), 0, "C(" + std::to_string(n) + ")", std::move(names));
}

FiniteGroup group_product(std::span<const FiniteGroup> factors) {
  if (factors.empty()) throw InvalidArgument("group product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.order();
    if (n > kMaxRepresentableOrder) throw CapExceeded(n, kMaxRepresentableOrder);
  }
  const std::size_t k = factors.size();
  std::vector<std::size_t> digits(n * k);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      digits[x * k + i] = rest % factors[i].order();
      rest /= factors[i].order();
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0, stride = 1;
      for (std::size_t i = 0; i < k; ++i) {
        z += stride * factors[i].op(static_cast<Elem>(digits[x * k + i]),
                                    static_cast<Elem>(digits[y * k + i]));
        stride *= factors[i].order();
      }
      table[x * n + y] = static_cast<Elem>(z);
    }
  std::size_t identity = 0, stride = 1;
  std::string label = "GProd(";
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < k; ++i) {
    identity += stride * factors[i].identity();
    stride *= factors[i].order();
    label += (i ? ", " : "") + factors[i].label();
  }
  label += ")";
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i)
      s += (i ? ", " : "") + factors[i].element_name(static_cast<Elem>(digits[x * k + i]));
    names[x] = s + ")";
  }
  return FiniteGroup(n, std::move(table), static_cast<Elem>(identity), std::move(label),
                     std::move(names));
}

namespace {

FiniteGroup symmetric3() {
  // Permutations of {0,1,2} in lexicographic order; op(a, b) = a ∘ b.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<Elem> table(36);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 6; ++a) {
    names.push_back("[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                    std::to_string(perms[a][2]) + "]");
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t r = 0; r < 6; ++r)
        if (perms[r] == c) table[a * 6 + b] = static_cast<Elem>(r);
    }
  }
  return FiniteGroup(6, std::move(table), 0, "S3", std::move(names));
}

FiniteGroup dihedral4() {
  // r^i s^j at index i + 4j, with s r s = r^-1.
  std::vector<Elem> table(64);
  std::vector<std::string> names(8);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t i = x % 4, j = x / 4;
    std::string name = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    if (j == 1) name += "s";
    names[x] = name.empty() ? "e" : name;
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t k = y % 4, l = y / 4;
      const std::size_t rot = (j == 0 ? i + k : i + 4 - k) % 4;
      table[x * 8 + y] = static_cast<Elem>(rot + 4 * ((j + l) % 2));
    }
  }
  return FiniteGroup(8, std::move(table), 0, "D4", std::move(names));
}

FiniteGroup quaternion8() {
  // Index 2u + s: u ∈ {1, i, j, k} as 0..3, s = 1 for the negative sign.
  constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const char* unit_names[4] = {"1", "i", "j", "k"};
  std::vector<Elem> table(64);
  std::vector<std::string> names(8);
  for (int x = 0; x < 8; ++x) {
    names[x] = std::string(x % 2 ? "-" : "") + unit_names[x / 2];
    for (int y = 0; y < 8; ++y) {
      const int u = kUnit[x / 2][y / 2];
      const int s = (x % 2 + y % 2 + kSign[x / 2][y / 2]) % 2;
      table[x * 8 + y] = static_cast<Elem>(2 * u + s);
    }
  }
  return FiniteGroup(8, std::move(table), 0, "Q8", std::move(names));
}

}  // namespace

FiniteGroup builtin_group(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  if (name == "Klein") {
    const std::array<FiniteGroup, 2> c2 = {cyclic_group(2), cyclic_group(2)};
    auto k = group_product(c2);
    return FiniteGroup(4, {k.cayley().begin(), k.cayley().end()}, k.identity(), "Klein",
                       {"e", "a", "b", "ab"});
  }
  throw InvalidArgument("unknown group '" + std::string(name) + "'");
}

std::size_t group_exponent(const FiniteGroup& group) {
  std::size_t e = 1;
  for (std::size_t a = 0; a < group.order(); ++a)
    e = std::lcm(e, group.element_order(static_cast<Elem>(a)));
  return e;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_p_group(const FiniteGroup& group, std::size_t p) {
  if (!is_prime(p)) return false;
  std::size_t n = group.order();
  while (n % p == 0) n /= p;
  if (n != 1) return false;
  for (std::size_t a = 0; a < group.order(); ++a) {
    std::size_t k = group.element_order(static_cast<Elem>(a));
    while (k % p == 0) k /= p;
    if (k != 1) return false;
  }
  return true;
}

}  // namespace qnring
