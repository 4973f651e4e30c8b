// Monic quadratics in the canonical form f = (x - a)^2 - b, composition words,
// and generator sets.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irrsemi/field.hpp"
#include "irrsemi/poly.hpp"

namespace irrsemi {

/// f = (x - a)^2 - b. Over odd q every monic quadratic has exactly one such pair.
struct MonicQuadratic {
  Elem a;
  Elem b;

  friend constexpr auto operator<=>(const MonicQuadratic&, const MonicQuadratic&) = default;
};

/// Indices into a GeneratorSet; index 0 is the outermost factor, so
/// [i1, i2, ..., im] denotes f_i1(f_i2(...f_im(x)...)).
using Word = std::vector<std::size_t>;

/// Canonicalizes x^2 + c1 x + c0: a = -c1/2, b = a^2 - c0.
inline MonicQuadratic from_coeffs(const Field& k, Elem c1, Elem c0) {
  const Elem a = k.neg(k.div(c1, k.from_int(2)));
  return {a, k.sub(k.sqr(a), c0)};
}

struct QuadraticCoeffs {
  Elem c1;
  Elem c0;
};

inline QuadraticCoeffs to_coeffs(const Field& k, const MonicQuadratic& f) {
  return {k.neg(k.add(f.a, f.a)), k.sub(k.sqr(f.a), f.b)};
}

inline DensePoly expand(const Field& k, const MonicQuadratic& f) {
  const auto [c1, c0] = to_coeffs(k, f);
  return DensePoly({c0, c1, k.one()});
}

inline Elem eval(const Field& k, const MonicQuadratic& f, Elem x) {
  return k.sub(k.sqr(k.sub(x, f.a)), f.b);
}

inline bool is_irreducible_quadratic(const Field& k, const MonicQuadratic& f) {
  return !k.is_square(f.b);
}

/// A field plus an ordered, duplicate-free, nonempty list of generators.
class GeneratorSet {
 public:
  GeneratorSet(Field field, const std::vector<MonicQuadratic>& gens) : field_(std::move(field)) {
    for (const auto& g : gens) {
      if (!field_.contains(g.a) || !field_.contains(g.b)) {
        throw std::invalid_argument("generator coefficient out of range");
      }
      if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) {
        gens_.push_back(g);
      } else {
        ++duplicates_dropped_;
      }
    }
    if (gens_.empty()) throw std::invalid_argument("generator set must be nonempty");
  }

  const Field& field() const { return field_; }
  const std::vector<MonicQuadratic>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const MonicQuadratic& operator[](std::size_t i) const { return gens_[i]; }
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  void validate(const Word& w) const {
    if (w.empty()) throw std::invalid_argument("word must be nonempty");
    for (auto i : w) {
      if (i >= gens_.size()) throw std::out_of_range("word index " + std::to_string(i) + " out of range");
    }
  }

 private:
  Field field_;
  std::vector<MonicQuadratic> gens_;
  std::size_t duplicates_dropped_ = 0;
};

/// f_w1(f_w2(...f_wm(x)...)) evaluated innermost first.
inline Elem eval_word(const GeneratorSet& s, const Word& w, Elem x) {
  for (std::size_t i = w.size(); i-- > 0;) x = eval(s.field(), s[w[i]], x);
  return x;
}

/// Dense form of the composition, built innermost-out by p <- (p - a)^2 - b.
inline DensePoly compose_word(const GeneratorSet& s, const Word& w) {
  s.validate(w);
  const Field& k = s.field();
  DensePoly acc = expand(k, s[w.back()]);
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    const MonicQuadratic& f = s[w[i]];
    const DensePoly shifted = poly::sub(k, acc, DensePoly::constant(f.a));
    acc = poly::sub(k, poly::mul(k, shifted, shifted), DensePoly::constant(f.b));
  }
  return acc;
}

}  // namespace irrsemi
