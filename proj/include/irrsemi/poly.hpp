// Dense univariate polynomials over F_q.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "irrsemi/field.hpp"

namespace irrsemi {

/// Little-endian coefficient vector in canonical form: no trailing zeros, so
/// the zero polynomial is empty and degree = size - 1.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DensePoly constant(Elem c) { return DensePoly({c}); }
  static DensePoly x() { return DensePoly({Elem{0}, Elem{1}}); }

  /// The degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }
  Elem lead() const { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Elem{1}; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Elem{0}) coeffs_.pop_back();
  }

  std::vector<Elem> coeffs_;
};

namespace poly {

inline DensePoly add(const Field& k, const DensePoly& f, const DensePoly& g) {
  std::vector<Elem> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.add(f[i], g[i]);
  return DensePoly(std::move(out));
}

inline DensePoly sub(const Field& k, const DensePoly& f, const DensePoly& g) {
  std::vector<Elem> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.sub(f[i], g[i]);
  return DensePoly(std::move(out));
}

inline DensePoly scale(const Field& k, const DensePoly& f, Elem c) {
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = k.mul(f[i], c);
  return DensePoly(std::move(out));
}

/// Schoolbook product.
inline DensePoly mul(const Field& k, const DensePoly& f, const DensePoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Elem> out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == Elem{0}) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = k.add(out[i + j], k.mul(f[i], g[j]));
    }
  }
  return DensePoly(std::move(out));
}

struct DivRem {
  DensePoly quotient;
  DensePoly remainder;
};

inline DivRem divrem(const Field& k, const DensePoly& f, const DensePoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.degree() < g.degree()) return {DensePoly{}, f};
  std::vector<Elem> r = f.coeffs();
  const std::size_t dg = g.size() - 1;
  std::vector<Elem> q(r.size() - dg);
  const Elem lead_inv = k.inv(g.lead());
  for (std::size_t top = r.size(); top-- > dg;) {
    const Elem c = k.mul(r[top], lead_inv);
    if (c == Elem{0}) continue;
    const std::size_t shift = top - dg;
    q[shift] = c;
    for (std::size_t i = 0; i <= dg; ++i) r[shift + i] = k.sub(r[shift + i], k.mul(c, g[i]));
  }
  r.resize(dg);
  return {DensePoly(std::move(q)), DensePoly(std::move(r))};
}

inline DensePoly rem(const Field& k, const DensePoly& f, const DensePoly& g) {
  return divrem(k, f, g).remainder;
}

inline DensePoly make_monic(const Field& k, const DensePoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(k, f, k.inv(f.lead()));
}

/// Monic gcd; gcd(0, 0) = 0.
inline DensePoly gcd(const Field& k, DensePoly f, DensePoly g) {
  while (!g.is_zero()) {
    DensePoly r = rem(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(k, f);
}

inline DensePoly mulmod(const Field& k, const DensePoly& f, const DensePoly& g, const DensePoly& m) {
  return rem(k, mul(k, f, g), m);
}

/// base^exp mod m by square-and-multiply.
inline DensePoly powmod(const Field& k, DensePoly base, std::uint64_t exp, const DensePoly& m) {
  DensePoly r = rem(k, DensePoly::constant(k.one()), m);
  base = rem(k, base, m);
  while (exp != 0) {
    if (exp & 1U) r = mulmod(k, r, base, m);
    base = mulmod(k, base, base, m);
    exp >>= 1U;
  }
  return r;
}

/// Horner evaluation.
inline Elem eval(const Field& k, const DensePoly& f, Elem x) {
  Elem acc{0};
  for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, x), f[i]);
  return acc;
}

/// outer(inner(x)) by Horner's scheme over polynomials.
inline DensePoly substitute(const Field& k, const DensePoly& outer, const DensePoly& inner) {
  DensePoly acc;
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = add(k, mul(k, acc, inner), DensePoly::constant(outer[i]));
  }
  return acc;
}

}  // namespace poly
}  // namespace irrsemi
