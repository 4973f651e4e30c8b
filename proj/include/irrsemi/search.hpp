// Exhaustive sweeps over generator pairs, the a/a+1 existence family, and
// desk-scale verification of the non-existence results for p = 3 mod 4.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "irrsemi/criterion.hpp"
#include "irrsemi/field.hpp"
#include "irrsemi/quadratic.hpp"

namespace irrsemi {

/// Thrown when a sweep is requested outside the residue class it applies to.
class ResidueClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CensusFilter { All, IrreducibleGenerators, NoLinearTerm };

struct CensusRow {
  std::uint64_t q = 0;
  MonicQuadratic first;
  MonicQuadratic second;
  VerdictKind verdict = VerdictKind::AllIrreducible;
  std::size_t witness_len = 0;
  std::size_t reach_size = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `workers` threads; each index is
/// handled exactly once, so results written by index are order-independent.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

}  // namespace detail

inline bool passes(const Field& k, const MonicQuadratic& f, CensusFilter filter) {
  switch (filter) {
    case CensusFilter::All:
      return true;
    case CensusFilter::IrreducibleGenerators:
      return is_irreducible_quadratic(k, f);
    case CensusFilter::NoLinearTerm:
      return f.a == Elem{0};
  }
  return false;
}

/// Every monic quadratic passing `filter`, ordered by (a, b).
inline std::vector<MonicQuadratic> quadratics(const Field& k, CensusFilter filter = CensusFilter::All) {
  std::vector<MonicQuadratic> out;
  for (const Elem a : k.elements()) {
    for (const Elem b : k.elements()) {
      if (passes(k, {a, b}, filter)) out.push_back({a, b});
    }
  }
  return out;
}

inline CensusRow census_row(const Field& k, const MonicQuadratic& first, const MonicQuadratic& second) {
  const GeneratorSet s(k, {first, second});
  const ReachGraph g = reachable_subgraph(s);
  const Verdict v = check_semigroup_irreducible(s, g);
  return {k.q(), first, second, v.kind, v.witness ? v.witness->size() : 0, g.nodes.size()};
}

/// One row per unordered pair of distinct quadratics passing `filter`, in
/// canonical pair order, truncated to the first `limit` pairs.
inline std::vector<CensusRow> census_pairs(const Field& k, CensusFilter filter,
                                           std::optional<std::size_t> limit = std::nullopt,
                                           unsigned workers = 1) {
  const std::vector<MonicQuadratic> qs = quadratics(k, filter);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < qs.size() && (!limit || pairs.size() < *limit); ++i) {
    for (std::size_t j = i + 1; j < qs.size() && (!limit || pairs.size() < *limit); ++j) pairs.emplace_back(i, j);
  }
  std::vector<CensusRow> rows(pairs.size());
  detail::parallel_for(pairs.size(), workers, [&](std::size_t n) {
    rows[n] = census_row(k, qs[pairs[n].first], qs[pairs[n].second]);
  });
  return rows;
}

/// All a with a and a + 1 non-squares; requires q = 1 mod 4, where -a is then
/// a non-square as well.
inline std::vector<Elem> example_family(const Field& k) {
  if (k.q() % 4 != 1) {
    throw ResidueClassError("example family needs q = 1 mod 4, got q = " + std::to_string(k.q()));
  }
  std::vector<Elem> out;
  for (const Elem a : k.elements()) {
    if (!k.is_square(a) && !k.is_square(k.add(a, k.one()))) out.push_back(a);
  }
  return out;
}

/// {(x - a)^2 + a, (x - a - 1)^2 + a} in canonical form.
inline GeneratorSet example_family_set(const Field& k, Elem a) {
  const Elem b = k.neg(a);
  return GeneratorSet(k, {{a, b}, {k.add(a, k.one()), b}});
}

struct LemmaRow {
  Elem b;
  VerdictKind verdict;
  Word witness;
};

struct LemmaReport {
  std::uint64_t p = 0;
  bool holds = false;
  bool square_b_reducible = false;
  std::vector<LemmaRow> rows;  // one per non-square b
};

/// Over F_p with p = 7 mod 8, every singleton {x^2 - b} generates a semigroup
/// containing a reducible polynomial.
inline LemmaReport verify_lemma_p7mod8(std::uint64_t p) {
  const Field k = Field::make(p);
  if (p % 8 != 7) throw ResidueClassError("expected p = 7 mod 8, got p = " + std::to_string(p));
  LemmaReport report;
  report.p = p;
  report.holds = true;
  report.square_b_reducible = true;
  for (const Elem b : k.elements()) {
    const GeneratorSet s(k, {{Elem{0}, b}});
    const Verdict v = check_semigroup_irreducible(s);
    if (k.is_square(b)) {
      report.square_b_reducible = report.square_b_reducible && !v.irreducible();
      continue;
    }
    report.rows.push_back({b, v.kind, v.witness.value_or(Word{})});
    report.holds = report.holds && !v.irreducible();
  }
  report.holds = report.holds && report.square_b_reducible;
  return report;
}

struct PropRow {
  Elem bf;
  Elem bg;
  VerdictKind verdict;
  Word witness;
  std::size_t node_count = 0;
  bool all_nonsquare = false;
  /// Every pair of distinct nodes u, u' with f(u) = f(u') for a generator f
  /// satisfies u' = -u with exactly one of them a square.
  bool indegree_consistent = true;
  /// 1 <= node_count <= (p - 1) / 2; only meaningful when all_nonsquare.
  bool node_bound = true;
};

struct PropReport {
  std::uint64_t p = 0;
  bool holds = false;
  std::vector<PropRow> rows;
};

/// Node pairs of `g` colliding under some generator of `s`, with the
/// collision structure expected when every a_f = 0 and -1 is a non-square.
inline bool indegree_consistent(const GeneratorSet& s, const ReachGraph& g) {
  const Field& k = s.field();
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::unordered_map<std::uint64_t, Elem> first_source;
    for (const Elem u : g.nodes) {
      const Elem v = eval(k, s[i], u);
      const auto [it, fresh] = first_source.emplace(v.value, u);
      if (fresh) continue;
      const Elem w = it->second;
      if (w != k.neg(u) || k.is_square(u) == k.is_square(w)) return false;
    }
  }
  return true;
}

/// Over F_p with p = 3 mod 4, every pair {x^2 - b_f, x^2 - b_g} of distinct
/// non-squares generates a semigroup containing a reducible polynomial.
inline PropReport verify_prop_p3mod4(std::uint64_t p, unsigned workers = 1) {
  const Field k = Field::make(p);
  if (p % 4 != 3) throw ResidueClassError("expected p = 3 mod 4, got p = " + std::to_string(p));
  std::vector<Elem> nonsquares;
  for (const Elem x : k.elements()) {
    if (!k.is_square(x)) nonsquares.push_back(x);
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t i = 0; i < nonsquares.size(); ++i) {
    for (std::size_t j = i + 1; j < nonsquares.size(); ++j) pairs.emplace_back(nonsquares[i], nonsquares[j]);
  }

  PropReport report;
  report.p = p;
  report.rows.resize(pairs.size());
  detail::parallel_for(pairs.size(), workers, [&](std::size_t n) {
    const auto [bf, bg] = pairs[n];
    const GeneratorSet s(k, {{Elem{0}, bf}, {Elem{0}, bg}});
    const ReachGraph g = reachable_subgraph(s);
    const Verdict v = check_semigroup_irreducible(s, g);
    PropRow row{bf, bg, v.kind, v.witness.value_or(Word{})};
    row.node_count = g.nodes.size();
    row.all_nonsquare = std::none_of(g.nodes.begin(), g.nodes.end(), [&](Elem x) { return k.is_square(x); });
    row.indegree_consistent = indegree_consistent(s, g);
    if (row.all_nonsquare) row.node_bound = row.node_count >= 1 && row.node_count <= (p - 1) / 2;
    report.rows[n] = std::move(row);
  });
  report.holds = std::all_of(report.rows.begin(), report.rows.end(), [](const PropRow& r) {
    return r.verdict == VerdictKind::Reducible && !r.witness.empty() && r.indegree_consistent && r.node_bound;
  });
  return report;
}

}  // namespace irrsemi
