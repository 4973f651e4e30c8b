// Ground truth for irreducibility: Rabin's deterministic test on dense
// polynomials, and a crosscheck of the residue-chain test against it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "irrsemi/criterion.hpp"
#include "irrsemi/field.hpp"
#include "irrsemi/poly.hpp"
#include "irrsemi/quadratic.hpp"

namespace irrsemi {

/// x^(q^k) mod f, as k successive q-th powerings.
inline DensePoly frobenius_power(const Field& k, std::size_t steps, const DensePoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("frobenius_power needs a monic nonconstant modulus");
  DensePoly r = poly::rem(k, DensePoly::x(), f);
  for (std::size_t i = 0; i < steps; ++i) r = poly::powmod(k, r, k.q(), f);
  return r;
}

namespace detail {

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

/// Rabin: monic f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r | n.
inline bool rabin_irreducible(const Field& k, const DensePoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("rabin_irreducible needs a nonconstant polynomial");
  if (!f.is_monic()) throw std::invalid_argument("rabin_irreducible needs a monic polynomial");
  const auto n = static_cast<std::size_t>(f.degree());
  if (n == 1) return true;

  const DensePoly x = poly::rem(k, DensePoly::x(), f);
  // powers[i] = x^(q^i) mod f
  std::vector<DensePoly> powers{x};
  powers.reserve(n + 1);
  for (std::size_t i = 1; i <= n; ++i) powers.push_back(poly::powmod(k, powers.back(), k.q(), f));

  if (powers[n] != x) return false;
  for (const std::size_t r : detail::prime_divisors(n)) {
    const DensePoly h = poly::sub(k, powers[n / r], x);
    if (poly::gcd(k, h, f).degree() != 0) return false;
  }
  return true;
}

struct CrosscheckMismatch {
  Word word;
  bool chain_irreducible;
  bool rabin_irreducible;
};

struct CrosscheckReport {
  std::size_t depth = 0;
  std::size_t words = 0;
  std::vector<CrosscheckMismatch> mismatches;
  std::map<std::size_t, std::size_t> irreducible_per_length;
  std::map<std::size_t, std::size_t> reducible_per_length;

  bool ok() const { return mismatches.empty(); }
};

/// Calls fn(word) for every word of length 1..depth, shorter words first and
/// lexicographic (outermost first) within a length.
template <typename Fn>
void for_each_word(std::size_t alphabet, std::size_t depth, Fn&& fn) {
  for (std::size_t len = 1; len <= depth; ++len) {
    Word w(len, 0);
    for (;;) {
      fn(static_cast<const Word&>(w));
      std::size_t pos = len;
      while (pos > 0 && ++w[pos - 1] == alphabet) w[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

/// Compares word_irreducible with Rabin's test on the expanded composition
/// for every word up to `depth`.
inline CrosscheckReport crosscheck(const GeneratorSet& s, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("crosscheck depth must be at least 1");
  CrosscheckReport report;
  report.depth = depth;
  for (std::size_t len = 1; len <= depth; ++len) {
    report.irreducible_per_length[len] = 0;
    report.reducible_per_length[len] = 0;
  }
  for_each_word(s.size(), depth, [&](const Word& w) {
    const bool by_chain = word_irreducible(s, w);
    const bool by_rabin = rabin_irreducible(s.field(), compose_word(s, w));
    ++report.words;
    ++(by_rabin ? report.irreducible_per_length : report.reducible_per_length)[w.size()];
    if (by_chain != by_rabin) report.mismatches.push_back({w, by_chain, by_rabin});
  });
  return report;
}

}  // namespace irrsemi
