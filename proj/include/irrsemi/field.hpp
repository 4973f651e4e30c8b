// Arithmetic in odd finite fields F_q, q = p^e.
//
// Elements are encoded as integers in [0, q). For e > 1 the encoding is the
// little-endian base-p digit vector of the element's coefficients with respect
// to the power basis 1, t, t^2, ... where t is a root of the field modulus.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrsemi {

/// Thrown for invalid field parameters and out-of-range elements.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An encoded element of some F_q. Carries no reference to its field.
struct Elem {
  std::uint64_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint64_t v) : value(v) {}

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Minimal F_p[x] toolkit used only to validate and select the field modulus.
// Polynomials are little-endian coefficient vectors without trailing zeros.
namespace fp_poly {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly rem(Poly f, const Poly& g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = powmod(g.back(), p - 2, p);
  trim(f);
  while (f.size() >= g.size()) {
    const std::uint64_t c = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

inline Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return rem(std::move(out), m, p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or: f of degree n is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= n/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  Poly xp = rem(Poly{0, 1}, f, p);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    // xp <- xp^p mod f
    Poly acc{1};
    Poly base = xp;
    for (std::uint64_t e = p; e != 0; e >>= 1U) {
      if (e & 1U) acc = mulmod_poly(acc, base, f, p);
      base = mulmod_poly(base, base, f, p);
    }
    xp = acc;
    Poly h = xp;
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace fp_poly
}  // namespace detail

/// Immutable description of F_q. Cheap to copy: the residue table is shared.
class Field {
 public:
  static constexpr std::size_t kMaxDegree = 40;
  static constexpr std::uint64_t kSquareTableLimit = std::uint64_t{1} << 20;

  /// Builds F_{p^e}. When `modulus` is omitted and e > 1 the lexicographically
  /// smallest monic irreducible polynomial (compared by coefficient tuple from
  /// the constant term up) is used. A supplied modulus is little-endian with
  /// length e + 1 and must be monic and irreducible.
  static Field make(std::uint64_t p, unsigned e = 1,
                    std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
    if (p == 2) throw FieldError("even characteristic unsupported");
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw FieldError("extension degree must be at least 1");
    if (e > 1 && p >= (std::uint64_t{1} << 32)) throw FieldError("characteristic too large for an extension field");
    if (e > kMaxDegree) throw FieldError("extension degree too large");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (q > (std::uint64_t{1} << 62) / p) throw FieldError("field order exceeds 2^62");
      q *= p;
    }

    std::vector<std::uint64_t> mod;
    if (modulus) {
      mod = *modulus;
      if (mod.size() != e + 1) throw FieldError("modulus must have exactly e + 1 coefficients");
      for (auto c : mod) {
        if (c >= p) throw FieldError("modulus coefficient out of range");
      }
      if (mod.back() != 1) throw FieldError("modulus must be monic");
      if (e > 1 && !detail::fp_poly::is_irreducible(mod, p)) throw FieldError("supplied modulus is reducible");
    } else if (e == 1) {
      mod = {0, 1};
    } else {
      mod = smallest_irreducible(p, e);
    }
    if (e == 1) mod = {0, 1};
    return Field(p, e, q, std::move(mod));
  }

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint64_t q() const { return q_; }
  /// Little-endian monic modulus over F_p; x for prime fields.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  bool has_square_table() const { return squares_ != nullptr; }

  bool contains(Elem x) const { return x.value < q_; }

  /// Validated construction from an encoded integer.
  Elem elem(std::uint64_t v) const {
    if (v >= q_) throw FieldError("element " + std::to_string(v) + " out of range for q = " + std::to_string(q_));
    return Elem{v};
  }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }

  /// The image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const {
    const auto ip = static_cast<std::int64_t>(p_);
    std::int64_t r = n % ip;
    if (r < 0) r += ip;
    return Elem{static_cast<std::uint64_t>(r)};
  }

  /// The class of t in F_p[t]/(modulus); for prime fields this is the modulus root 0.
  Elem generator() const { return e_ == 1 ? Elem{0} : Elem{p_}; }

  Elem add(Elem x, Elem y) const {
    if (e_ == 1) {
      std::uint64_t s = x.value + y.value;
      return Elem{s >= p_ ? s - p_ : s};
    }
    Digits a = decode(x);
    Digits b = decode(y);
    for (unsigned i = 0; i < e_; ++i) {
      a[i] += b[i];
      if (a[i] >= p_) a[i] -= p_;
    }
    return encode(a);
  }

  Elem neg(Elem x) const {
    if (e_ == 1) return Elem{x.value == 0 ? 0 : p_ - x.value};
    Digits a = decode(x);
    for (unsigned i = 0; i < e_; ++i) a[i] = a[i] == 0 ? 0 : p_ - a[i];
    return encode(a);
  }

  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  Elem mul(Elem x, Elem y) const {
    if (e_ == 1) return Elem{detail::mulmod(x.value, y.value, p_)};
    const Digits a = decode(x);
    const Digits b = decode(y);
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < e_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < e_; ++j) {
        prod[i + j] = (prod[i + j] + detail::mulmod(a[i], b[j], p_)) % p_;
      }
    }
    // Reduce by the monic modulus from the top down.
    for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < e_; ++i) {
        const std::uint64_t t = detail::mulmod(c, modulus_[i], p_);
        prod[k - e_ + i] = (prod[k - e_ + i] + p_ - t) % p_;
      }
    }
    Digits out{};
    std::copy_n(prod.begin(), e_, out.begin());
    return encode(out);
  }

  Elem sqr(Elem x) const { return mul(x, x); }

  Elem pow(Elem x, std::uint64_t exp) const {
    Elem r = one();
    while (exp != 0) {
      if (exp & 1U) r = mul(r, x);
      x = mul(x, x);
      exp >>= 1U;
    }
    return r;
  }

  Elem inv(Elem x) const {
    if (x.value == 0) throw FieldError("inversion of zero");
    if (e_ == 1) return Elem{detail::powmod(x.value, p_ - 2, p_)};
    return pow(x, q_ - 2);
  }

  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  /// Quadratic-residue test; 0 counts as a square.
  bool is_square(Elem x) const {
    if (squares_) return (*squares_)[x.value] != 0;
    return is_square_euler(x);
  }

  /// Euler's criterion, independent of the residue table.
  bool is_square_euler(Elem x) const {
    if (x.value == 0) return true;
    return pow(x, (q_ - 1) / 2) == one();
  }

  /// All q elements in increasing encoded order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(q_);
    for (std::uint64_t v = 0; v < q_; ++v) out.emplace_back(v);
    return out;
  }

  /// Little-endian base-p coefficient vector of length e.
  std::vector<std::uint64_t> digits(Elem x) const {
    const Digits d = decode(x);
    return {d.begin(), d.begin() + e_};
  }

  Elem from_digits(const std::vector<std::uint64_t>& d) const {
    if (d.size() != e_) throw FieldError("digit vector must have length e");
    Digits a{};
    for (unsigned i = 0; i < e_; ++i) {
      if (d[i] >= p_) throw FieldError("digit out of range");
      a[i] = d[i];
    }
    return encode(a);
  }

  friend bool operator==(const Field& x, const Field& y) {
    return x.p_ == y.p_ && x.e_ == y.e_ && x.modulus_ == y.modulus_;
  }

 private:
  using Digits = std::array<std::uint64_t, kMaxDegree>;

  Field(std::uint64_t p, unsigned e, std::uint64_t q, std::vector<std::uint64_t> modulus)
      : p_(p), e_(e), q_(q), modulus_(std::move(modulus)) {
    if (q_ <= kSquareTableLimit) {
      auto table = std::make_shared<std::vector<std::uint8_t>>(q_, 0);
      for (std::uint64_t v = 0; v < q_; ++v) (*table)[mul(Elem{v}, Elem{v}).value] = 1;
      squares_ = std::move(table);
    }
  }

  static std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned e) {
    // Counter over (c0, c1, ..., c_{e-1}) with c0 most significant.
    std::vector<std::uint64_t> f(e + 1, 0);
    f[e] = 1;
    for (;;) {
      if (f[0] != 0 && detail::fp_poly::is_irreducible(f, p)) return f;
      int pos = static_cast<int>(e) - 1;
      while (pos >= 0) {
        if (++f[static_cast<std::size_t>(pos)] < p) break;
        f[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) throw FieldError("no irreducible modulus found");
    }
  }

  Digits decode(Elem x) const {
    Digits d{};
    std::uint64_t v = x.value;
    for (unsigned i = 0; i < e_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  }

  Elem encode(const Digits& d) const {
    std::uint64_t v = 0;
    for (unsigned i = e_; i-- > 0;) v = v * p_ + d[i];
    return Elem{v};
  }

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::shared_ptr<const std::vector<std::uint8_t>> squares_;
};

}  // namespace irrsemi
