#include "qnring/constructions.hpp"

#include <algorithm>
#include <array>

#include "qnring/errors.hpp"

namespace qnring {

namespace {

/// An abelian group used as one coordinate of a mixed-radix element.
struct Coordinate {
  std::size_t order;
  std::span<const Elem> add;
  std::span<const Elem> neg;
  Elem zero = 0;
};

Coordinate coordinate(const FiniteRing& r) {
  return {r.order(), r.add_table(), r.neg_table(), r.zero()};
}
Coordinate coordinate(const Bimodule& m) { return {m.order, m.add, m.neg, m.zero}; }

std::size_t checked_order(std::span<const Coordinate> coords, const BuildOptions& options) {
  std::size_t n = 1;
  for (const auto& c : coords) {
    // Saturating product: the true order only matters up to the cap.
    if (n > kMaxRepresentableOrder || c.order > kMaxRepresentableOrder) {
      n = kMaxRepresentableOrder + 1;
      break;
    }
    n *= c.order;
  }
  const std::size_t cap = std::min(options.max_order, kMaxRepresentableOrder);
  if (n > cap) throw CapExceeded(n, cap);
  return n;
}

std::size_t power_order(std::size_t base, std::size_t exponent, const BuildOptions& options) {
  const std::size_t cap = std::min(options.max_order, kMaxRepresentableOrder);
  std::size_t n = 1;
  for (std::size_t i = 0; i < exponent && n <= cap; ++i) {
    if (base > kMaxRepresentableOrder) {
      n = kMaxRepresentableOrder + 1;
      break;
    }
    n *= base;
    if (base <= 1) break;
  }
  if (n > cap) throw CapExceeded(n, cap);
  return n;
}

/// Tables of a ring whose elements are tuples over `coords`, with
/// coordinatewise addition and a caller-supplied product on digit vectors.
template <class MulDigits>
FiniteRing build_tuple_ring(std::span<const Coordinate> coords, MulDigits&& mul_digits,
                            std::span<const Elem> one_digits, std::string label,
                            const BuildOptions& options) {
  const std::size_t n = checked_order(coords, options);
  const std::size_t k = coords.size();
  std::vector<std::size_t> stride(k);
  for (std::size_t i = 0, s = 1; i < k; ++i) {
    stride[i] = s;
    s *= coords[i].order;
  }
  std::vector<Elem> digits(n * k);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      digits[x * k + i] = static_cast<Elem>(rest % coords[i].order);
      rest /= coords[i].order;
    }
  }
  const auto encode = [&](const Elem* d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx += stride[i] * d[i];
    return static_cast<Elem>(idx);
  };

  std::vector<Elem> add(n * n), mul(n * n), neg(n);
  std::vector<Elem> out(k);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem* dx = &digits[x * k];
    for (std::size_t i = 0; i < k; ++i) out[i] = coords[i].neg[dx[i]];
    neg[x] = encode(out.data());
    for (std::size_t y = 0; y < n; ++y) {
      const Elem* dy = &digits[y * k];
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i)
        idx += stride[i] * coords[i].add[dx[i] * coords[i].order + dy[i]];
      add[x * n + y] = static_cast<Elem>(idx);
      mul_digits(dx, dy, out.data());
      mul[x * n + y] = encode(out.data());
    }
  }
  for (std::size_t i = 0; i < k; ++i) out[i] = coords[i].zero;
  const Elem zero = encode(out.data());
  FiniteRing ring(n, std::move(add), std::move(neg), std::move(mul), zero,
                  encode(one_digits.data()), std::move(label));
  if (options.validate) require_valid(ring);
  return ring;
}

std::string join_labels(std::span<const RingRef> rings) {
  std::string s;
  for (std::size_t i = 0; i < rings.size(); ++i) s += (i ? ", " : "") + rings[i].get().label();
  return s;
}

}  // namespace

FiniteRing zmod(std::size_t m, const BuildOptions& options) {
  if (m == 0) throw InvalidArgument("Z(m) requires m >= 1");
  const std::size_t cap = std::min(options.max_order, kMaxRepresentableOrder);
  if (m > cap) throw CapExceeded(m, cap);
  std::vector<Elem> add(m * m), mul(m * m), neg(m);
  for (std::size_t a = 0; a < m; ++a) {
    neg[a] = static_cast<Elem>((m - a) % m);
    for (std::size_t b = 0; b < m; ++b) {
      add[a * m + b] = static_cast<Elem>((a + b) % m);
      mul[a * m + b] = static_cast<Elem>((a * b) % m);
    }
  }
  FiniteRing ring(m, std::move(add), std::move(neg), std::move(mul), 0,
                  static_cast<Elem>(1 % m), "Z(" + std::to_string(m) + ")");
  if (options.validate) require_valid(ring);
  return ring;
}

namespace {

using Poly = std::vector<unsigned>;  // coefficients, lowest degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const unsigned lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned factor = (f.back() * lead_inv) % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p - (factor * g[i]) % p) % p;
    trim(f);
  }
  return f;
}

Poly monic_from_index(std::size_t index, unsigned p, unsigned degree) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::size_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::size_t idx = 0; idx < count; ++idx)
      if (poly_mod(f, monic_from_index(idx, p, d), p).empty()) return false;
  }
  return true;
}

}  // namespace

std::vector<unsigned> field_modulus(unsigned p, unsigned k) {
  if (!is_prime(p)) throw InvalidArgument("GF(p, k) requires p prime, got " + std::to_string(p));
  if (k == 0) throw InvalidArgument("GF(p, k) requires k >= 1");
  std::size_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxRepresentableOrder) throw CapExceeded(count, kMaxRepresentableOrder);
  }
  for (std::size_t idx = 0; idx < count; ++idx) {
    Poly f = monic_from_index(idx, p, k);
    if (is_irreducible(f, p)) return Poly(f.begin(), f.end() - 1);
  }
  throw InternalError("no irreducible polynomial found");
}

FiniteRing finite_field(unsigned p, unsigned k, const BuildOptions& options) {
  if (!is_prime(p)) throw InvalidArgument("GF(p, k) requires p prime, got " + std::to_string(p));
  if (k == 0) throw InvalidArgument("GF(p, k) requires k >= 1");
  std::vector<Coordinate> coords;
  std::vector<Elem> zp_add(p * p), zp_neg(p);
  for (unsigned a = 0; a < p; ++a) {
    zp_neg[a] = static_cast<Elem>((p - a) % p);
    for (unsigned b = 0; b < p; ++b) zp_add[a * p + b] = static_cast<Elem>((a + b) % p);
  }
  for (unsigned i = 0; i < k; ++i) coords.push_back({p, zp_add, zp_neg, 0});
  checked_order(coords, options);
  const Poly modulus = field_modulus(p, k);

  // Multiply via reduction of x^(i+j) terms; precompute x^t mod f for t < 2k-1.
  std::vector<Poly> reduced(2 * k - 1);
  for (unsigned t = 0; t < 2 * k - 1; ++t) {
    Poly xt(t + 1, 0);
    xt[t] = 1;
    Poly full = modulus;
    full.push_back(1);
    Poly r = poly_mod(xt, full, p);
    r.resize(k, 0);
    reduced[t] = r;
  }
  std::vector<unsigned> prod(2 * k - 1);
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    std::fill(prod.begin(), prod.end(), 0u);
    for (unsigned i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    for (unsigned i = 0; i < k; ++i) out[i] = 0;
    for (unsigned t = 0; t < 2 * k - 1; ++t) {
      if (prod[t] == 0) continue;
      for (unsigned i = 0; i < k; ++i)
        out[i] = static_cast<Elem>((out[i] + prod[t] * reduced[t][i]) % p);
    }
  };
  std::vector<Elem> one(k, 0);
  one[0] = 1;
  auto ring = build_tuple_ring(coords, mul_digits, one,
                               "GF(" + std::to_string(p) + ", " + std::to_string(k) + ")",
                               options);
  if (ring.units().count() != ring.order() - 1)
    throw InternalError("GF construction produced a non-field for " + ring.label());
  return ring;
}

FiniteRing direct_product(std::span<const RingRef> factors, const BuildOptions& options) {
  if (factors.empty()) throw InvalidArgument("Prod needs at least one factor");
  std::vector<Coordinate> coords;
  std::vector<Elem> one;
  for (const auto& f : factors) {
    coords.push_back(coordinate(f.get()));
    one.push_back(f.get().one());
  }
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    for (std::size_t i = 0; i < factors.size(); ++i) out[i] = factors[i].get().mul(x[i], y[i]);
  };
  return build_tuple_ring(coords, mul_digits, one, "Prod(" + join_labels(factors) + ")", options);
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b, const BuildOptions& options) {
  const std::array<RingRef, 2> f = {std::cref(a), std::cref(b)};
  return direct_product(f, options);
}

FiniteRing matrix_ring(std::size_t n, const FiniteRing& base, const BuildOptions& options) {
  if (n == 0) throw InvalidArgument("M(n, R) requires n >= 1");
  power_order(base.order(), n * n, options);
  std::vector<Coordinate> coords(n * n, coordinate(base));
  std::vector<Elem> one(n * n, base.zero());
  for (std::size_t i = 0; i < n; ++i) one[i * n + i] = base.one();
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Elem acc = base.zero();
        for (std::size_t l = 0; l < n; ++l)
          acc = base.add(acc, base.mul(x[i * n + l], y[l * n + j]));
        out[i * n + j] = acc;
      }
  };
  return build_tuple_ring(coords, mul_digits, one,
                          "M(" + std::to_string(n) + ", " + base.label() + ")", options);
}

FiniteRing upper_triangular(std::size_t n, const FiniteRing& base, const BuildOptions& options) {
  if (n == 0) throw InvalidArgument("T(n, R) requires n >= 1");
  const std::size_t slots = n * (n + 1) / 2;
  power_order(base.order(), slots, options);
  // slot[i][j] for i <= j, row-major.
  std::vector<std::size_t> slot(n * n, 0);
  for (std::size_t i = 0, s = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slot[i * n + j] = s++;
  std::vector<Coordinate> coords(slots, coordinate(base));
  std::vector<Elem> one(slots, base.zero());
  for (std::size_t i = 0; i < n; ++i) one[slot[i * n + i]] = base.one();
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Elem acc = base.zero();
        for (std::size_t l = i; l <= j; ++l)
          acc = base.add(acc, base.mul(x[slot[i * n + l]], y[slot[l * n + j]]));
        out[slot[i * n + j]] = acc;
      }
  };
  return build_tuple_ring(coords, mul_digits, one,
                          "T(" + std::to_string(n) + ", " + base.label() + ")", options);
}

FiniteRing trivial_extension(const FiniteRing& base, const BuildOptions& options) {
  auto ring = trivial_extension(base, regular_bimodule(base), options);
  ring.set_label("TrivExt(" + base.label() + ")");
  return ring;
}

FiniteRing trivial_extension(const FiniteRing& base, const Bimodule& module,
                             const BuildOptions& options) {
  if (module.left_order != base.order() || module.right_order != base.order())
    throw InvalidArgument("bimodule is not over " + base.label());
  const std::array<Coordinate, 2> coords = {coordinate(base), coordinate(module)};
  const std::array<Elem, 2> one = {base.one(), module.zero};
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    out[0] = base.mul(x[0], y[0]);
    out[1] = module.plus(module.act_left(x[0], y[1]), module.act_right(x[1], y[0]));
  };
  return build_tuple_ring(coords, mul_digits, one,
                          "T(" + base.label() + ", " + module.label + ")", options);
}

FiniteRing truncated_poly(const FiniteRing& base, std::size_t n, const BuildOptions& options) {
  if (n == 0) throw InvalidArgument("PolyMod(R, n) requires n >= 1");
  power_order(base.order(), n, options);
  std::vector<Coordinate> coords(n, coordinate(base));
  std::vector<Elem> one(n, base.zero());
  one[0] = base.one();
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    for (std::size_t d = 0; d < n; ++d) {
      Elem acc = base.zero();
      for (std::size_t i = 0; i <= d; ++i) acc = base.add(acc, base.mul(x[i], y[d - i]));
      out[d] = acc;
    }
  };
  return build_tuple_ring(coords, mul_digits, one,
                          "PolyMod(" + base.label() + ", " + std::to_string(n) + ")", options);
}

GroupRing group_ring(const FiniteRing& base, const FiniteGroup& group,
                     const BuildOptions& options) {
  const std::size_t g = group.order();
  power_order(base.order(), g, options);
  std::vector<Coordinate> coords(g, coordinate(base));
  std::vector<Elem> one(g, base.zero());
  one[group.identity()] = base.one();
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    for (std::size_t i = 0; i < g; ++i) out[i] = base.zero();
    for (std::size_t a = 0; a < g; ++a) {
      if (x[a] == base.zero()) continue;
      for (std::size_t b = 0; b < g; ++b) {
        const Elem c = group.op(static_cast<Elem>(a), static_cast<Elem>(b));
        out[c] = base.add(out[c], base.mul(x[a], y[b]));
      }
    }
  };
  auto ring = build_tuple_ring(coords, mul_digits, one,
                               "GroupRing(" + base.label() + ", " + group.label() + ")", options);
  std::vector<Elem> eps(ring.order());
  ElementSet kernel(ring.order());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    std::size_t rest = x;
    Elem sum = base.zero();
    for (std::size_t i = 0; i < g; ++i) {
      sum = base.add(sum, static_cast<Elem>(rest % base.order()));
      rest /= base.order();
    }
    eps[x] = sum;
    if (sum == base.zero()) kernel.insert(x);
  }
  auto delta = Ideal::from_set(ring, std::move(kernel));
  return GroupRing{std::move(ring), std::move(eps), std::move(delta)};
}

ElementSet scalar_matrix_copy(std::size_t n, const FiniteRing& base, bool triangular) {
  const std::size_t slots = triangular ? n * (n + 1) / 2 : n * n;
  std::size_t order = 1;
  std::vector<std::size_t> diag_strides;
  for (std::size_t s = 0, i = 0; i < n; ++i) {
    for (std::size_t j = triangular ? i : 0; j < n; ++j, ++s) {
      std::size_t stride = 1;
      for (std::size_t t = 0; t < s; ++t) stride *= base.order();
      if (i == j) diag_strides.push_back(stride);
    }
  }
  for (std::size_t s = 0; s < slots; ++s) order *= base.order();
  ElementSet copy(order);
  for (std::size_t r = 0; r < base.order(); ++r) {
    std::size_t idx = 0;
    for (auto st : diag_strides) idx += st * r;
    copy.insert(idx);
  }
  return copy;
}

ElementSet constant_copy(const FiniteRing& base, std::size_t ring_order) {
  ElementSet copy(ring_order);
  for (std::size_t r = 0; r < base.order(); ++r) copy.insert(r);
  return copy;
}

ElementSet group_ring_coefficient_copy(const FiniteRing& base, const FiniteGroup& group) {
  std::size_t order = 1, stride = 1;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (i == group.identity()) stride = order;
    order *= base.order();
  }
  ElementSet copy(order);
  for (std::size_t r = 0; r < base.order(); ++r) copy.insert(r * stride);
  return copy;
}

Bimodule regular_bimodule(const FiniteRing& ring) {
  Bimodule m;
  m.order = m.left_order = m.right_order = ring.order();
  m.add.assign(ring.add_table().begin(), ring.add_table().end());
  m.neg.assign(ring.neg_table().begin(), ring.neg_table().end());
  m.left.assign(ring.mul_table().begin(), ring.mul_table().end());
  m.right = m.left;
  m.zero = ring.zero();
  m.label = ring.label();
  return m;
}

Bimodule zero_bimodule(const FiniteRing& left, const FiniteRing& right) {
  Bimodule m;
  m.order = 1;
  m.left_order = left.order();
  m.right_order = right.order();
  m.add = {0};
  m.neg = {0};
  m.left.assign(left.order(), 0);
  m.right.assign(right.order(), 0);
  m.zero = 0;
  m.label = "0";
  return m;
}

Bimodule hom_bimodule(const FiniteRing& a, const FiniteRing& b, std::span<const Elem> f) {
  Bimodule m = regular_bimodule(b);
  m.left_order = a.order();
  m.left.assign(a.order() * b.order(), 0);
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < b.order(); ++y)
      m.left[x * b.order() + y] = b.mul(f[x], static_cast<Elem>(y));
  m.label = b.label() + "_f";
  return m;
}

Bimodule hom_bimodule_right(const FiniteRing& a, const FiniteRing& b, std::span<const Elem> f) {
  Bimodule m = regular_bimodule(b);
  m.right_order = a.order();
  m.right.assign(b.order() * a.order(), 0);
  for (std::size_t y = 0; y < b.order(); ++y)
    for (std::size_t x = 0; x < a.order(); ++x)
      m.right[y * a.order() + x] = b.mul(static_cast<Elem>(y), f[x]);
  m.label = "f_" + b.label();
  return m;
}

std::vector<Elem> integer_hom(const FiniteRing& zm, const FiniteRing& target) {
  if (zm.order() % target.characteristic() != 0)
    throw InvalidArgument("characteristic of " + target.label() + " does not divide " +
                          std::to_string(zm.order()));
  std::vector<Elem> f(zm.order());
  Elem acc = target.zero();
  for (std::size_t k = 0; k < zm.order(); ++k) {
    f[k] = acc;
    acc = target.add(acc, target.one());
  }
  return f;
}

std::optional<std::string> bimodule_violation(const FiniteRing& a, const FiniteRing& b,
                                              const Bimodule& m) {
  if (m.left_order != a.order() || m.right_order != b.order()) return "action table shape";
  const auto M = static_cast<Elem>(m.order);
  for (Elem x = 0; x < M; ++x) {
    if (m.act_left(a.one(), x) != x) return "1·m != m";
    if (m.act_right(x, b.one()) != x) return "m·1 != m";
    for (Elem y = 0; y < M; ++y) {
      for (std::size_t r = 0; r < a.order(); ++r) {
        const auto ar = static_cast<Elem>(r);
        if (m.act_left(ar, m.plus(x, y)) != m.plus(m.act_left(ar, x), m.act_left(ar, y)))
          return "a(m+m') != am + am'";
      }
      for (std::size_t s = 0; s < b.order(); ++s) {
        const auto bs = static_cast<Elem>(s);
        if (m.act_right(m.plus(x, y), bs) != m.plus(m.act_right(x, bs), m.act_right(y, bs)))
          return "(m+m')b != mb + m'b";
      }
    }
    for (std::size_t r = 0; r < a.order(); ++r)
      for (std::size_t r2 = 0; r2 < a.order(); ++r2) {
        const auto p = static_cast<Elem>(r), q = static_cast<Elem>(r2);
        if (m.act_left(a.mul(p, q), x) != m.act_left(p, m.act_left(q, x)))
          return "(aa')m != a(a'm)";
        if (m.act_left(a.add(p, q), x) != m.plus(m.act_left(p, x), m.act_left(q, x)))
          return "(a+a')m != am + a'm";
      }
    for (std::size_t s = 0; s < b.order(); ++s)
      for (std::size_t s2 = 0; s2 < b.order(); ++s2) {
        const auto p = static_cast<Elem>(s), q = static_cast<Elem>(s2);
        if (m.act_right(x, b.mul(p, q)) != m.act_right(m.act_right(x, p), q))
          return "m(bb') != (mb)b'";
        if (m.act_right(x, b.add(p, q)) != m.plus(m.act_right(x, p), m.act_right(x, q)))
          return "m(b+b') != mb + mb'";
      }
    for (std::size_t r = 0; r < a.order(); ++r)
      for (std::size_t s = 0; s < b.order(); ++s)
        if (m.act_right(m.act_left(static_cast<Elem>(r), x), static_cast<Elem>(s)) !=
            m.act_left(static_cast<Elem>(r), m.act_right(x, static_cast<Elem>(s))))
          return "(am)b != a(mb)";
  }
  return std::nullopt;
}

std::optional<std::string> pairing_violation(const BimodulePairing& ctx) {
  const FiniteRing& A = *ctx.a;
  const FiniteRing& B = *ctx.b;
  if (auto e = bimodule_violation(A, B, ctx.m)) return "M: " + *e;
  if (auto e = bimodule_violation(B, A, ctx.n)) return "N: " + *e;
  if (ctx.phi.size() != ctx.m.order * ctx.n.order || ctx.psi.size() != ctx.n.order * ctx.m.order)
    return "pairing table shape";
  const auto Mo = static_cast<Elem>(ctx.m.order);
  const auto No = static_cast<Elem>(ctx.n.order);
  for (Elem x = 0; x < Mo; ++x)
    for (Elem y = 0; y < No; ++y) {
      for (Elem x2 = 0; x2 < Mo; ++x2) {
        if (ctx.mn(ctx.m.plus(x, x2), y) != A.add(ctx.mn(x, y), ctx.mn(x2, y)))
          return "phi not additive in M";
        if (ctx.nm(y, ctx.m.plus(x, x2)) != B.add(ctx.nm(y, x), ctx.nm(y, x2)))
          return "psi not additive in M";
        // Id_M ⊗ psi = phi ⊗ Id_M
        if (ctx.m.act_left(ctx.mn(x, y), x2) != ctx.m.act_right(x, ctx.nm(y, x2)))
          return "mixed associativity (mn)m' = m(nm') fails";
      }
      for (Elem y2 = 0; y2 < No; ++y2) {
        if (ctx.mn(x, ctx.n.plus(y, y2)) != A.add(ctx.mn(x, y), ctx.mn(x, y2)))
          return "phi not additive in N";
        if (ctx.nm(ctx.n.plus(y, y2), x) != B.add(ctx.nm(y, x), ctx.nm(y2, x)))
          return "psi not additive in N";
        if (ctx.n.act_left(ctx.nm(y, x), y2) != ctx.n.act_right(y, ctx.mn(x, y2)))
          return "mixed associativity (nm)n' = n(mn') fails";
      }
      for (std::size_t r = 0; r < A.order(); ++r) {
        const auto a = static_cast<Elem>(r);
        if (ctx.mn(ctx.m.act_left(a, x), y) != A.mul(a, ctx.mn(x, y))) return "phi(am, n) != a phi(m, n)";
        if (ctx.mn(x, ctx.n.act_right(y, a)) != A.mul(ctx.mn(x, y), a)) return "phi(m, na) != phi(m, n) a";
        if (ctx.nm(ctx.n.act_right(y, a), x) != ctx.nm(y, ctx.m.act_left(a, x)))
          return "psi not balanced over A";
      }
      for (std::size_t s = 0; s < B.order(); ++s) {
        const auto b = static_cast<Elem>(s);
        if (ctx.nm(ctx.n.act_left(b, y), x) != B.mul(b, ctx.nm(y, x))) return "psi(bn, m) != b psi(n, m)";
        if (ctx.nm(y, ctx.m.act_right(x, b)) != B.mul(ctx.nm(y, x), b)) return "psi(n, mb) != psi(n, m) b";
        if (ctx.mn(ctx.m.act_right(x, b), y) != ctx.mn(x, ctx.n.act_left(b, y)))
          return "phi not balanced over B";
      }
    }
  return std::nullopt;
}

BimodulePairing scalar_context(RingPtr ring, Elem c) {
  const FiniteRing& r = *ring;
  BimodulePairing ctx;
  ctx.m = regular_bimodule(r);
  ctx.n = regular_bimodule(r);
  const std::size_t n = r.order();
  ctx.phi.resize(n * n);
  ctx.psi.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem v = r.mul(r.mul(static_cast<Elem>(x), c), static_cast<Elem>(y));
      ctx.phi[x * n + y] = v;
      ctx.psi[x * n + y] = v;
    }
  ctx.label = "Morita(" + r.label() + ", c=" + std::to_string(c) + ")";
  ctx.a = ring;
  ctx.b = std::move(ring);
  return ctx;
}

BimodulePairing trivial_context(RingPtr a, RingPtr b, Bimodule m, Bimodule n) {
  BimodulePairing ctx;
  ctx.phi.assign(m.order * n.order, a->zero());
  ctx.psi.assign(n.order * m.order, b->zero());
  ctx.label = "Morita(" + a->label() + ", " + m.label + "; " + n.label + ", " + b->label() + ")";
  ctx.m = std::move(m);
  ctx.n = std::move(n);
  ctx.a = std::move(a);
  ctx.b = std::move(b);
  return ctx;
}

namespace {

ElementSet additive_span(const FiniteRing& r, const std::vector<Elem>& gens) {
  ElementSet s(r.order());
  s.insert(r.zero());
  std::vector<Elem> frontier = {r.zero()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem g : gens) {
        const Elem y = r.add(x, g);
        if (!s.contains(y)) {
          s.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace

MoritaRing morita_ring(const BimodulePairing& ctx, const BuildOptions& options) {
  if (auto e = pairing_violation(ctx)) throw InvalidArgument(ctx.label + ": " + *e);
  const FiniteRing& A = *ctx.a;
  const FiniteRing& B = *ctx.b;
  const Bimodule& M = ctx.m;
  const Bimodule& N = ctx.n;
  const std::array<Coordinate, 4> coords = {coordinate(A), coordinate(M), coordinate(N),
                                            coordinate(B)};
  const std::array<Elem, 4> one = {A.one(), M.zero, N.zero, B.one()};
  const auto mul_digits = [&](const Elem* x, const Elem* y, Elem* out) {
    out[0] = A.add(A.mul(x[0], y[0]), ctx.mn(x[1], y[2]));
    out[1] = M.plus(M.act_left(x[0], y[1]), M.act_right(x[1], y[3]));
    out[2] = N.plus(N.act_right(x[2], y[0]), N.act_left(x[3], y[2]));
    out[3] = B.add(ctx.nm(x[2], y[1]), B.mul(x[3], y[3]));
  };
  MoritaRing result{build_tuple_ring(coords, mul_digits, one, ctx.label, options),
                    additive_span(A, ctx.phi), additive_span(B, ctx.psi)};
  result.trace_central = result.trace_mn.is_subset_of(A.center()) &&
                         result.trace_nm.is_subset_of(B.center());
  result.trace_nilpotent = is_ideal(A, result.trace_mn) && is_ideal(B, result.trace_nm) &&
                           nilpotency_index(A, result.trace_mn) > 0 &&
                           nilpotency_index(B, result.trace_nm) > 0;
  return result;
}

Bimodule context_bimodule(const FiniteRing& a, const FiniteRing& b, const Bimodule& m,
                          const Bimodule& n) {
  Bimodule s;
  s.order = m.order * n.order;
  s.left_order = s.right_order = a.order() * b.order();
  s.add.resize(s.order * s.order);
  s.neg.resize(s.order);
  s.left.resize(s.left_order * s.order);
  s.right.resize(s.order * s.right_order);
  const auto enc = [&](Elem x, Elem y) { return static_cast<Elem>(x + m.order * y); };
  for (std::size_t u = 0; u < s.order; ++u) {
    const auto um = static_cast<Elem>(u % m.order), un = static_cast<Elem>(u / m.order);
    s.neg[u] = enc(m.neg[um], n.neg[un]);
    for (std::size_t v = 0; v < s.order; ++v) {
      const auto vm = static_cast<Elem>(v % m.order), vn = static_cast<Elem>(v / m.order);
      s.add[u * s.order + v] = enc(m.plus(um, vm), n.plus(un, vn));
    }
    for (std::size_t r = 0; r < s.left_order; ++r) {
      const auto ra = static_cast<Elem>(r % a.order()), rb = static_cast<Elem>(r / a.order());
      s.left[r * s.order + u] = enc(m.act_left(ra, um), n.act_left(rb, un));
      s.right[u * s.right_order + r] = enc(m.act_right(um, rb), n.act_right(un, ra));
    }
  }
  s.zero = enc(m.zero, n.zero);
  s.label = m.label + "+" + n.label;
  return s;
}

}  // namespace qnring
