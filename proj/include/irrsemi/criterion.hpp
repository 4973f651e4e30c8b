// The graph criterion for irreducibility of a compositional semigroup
// generated by monic quadratics, together with the per-word residue chain
// test and witness extraction.
//
// For S = {f = (x - a_f)^2 - b_f}, the graph G_S has vertex set F_q and an
// edge u -> f(u) labeled f for every generator. Every composition in the
// semigroup is irreducible iff no b_f is a square and no vertex reachable
// from D_S = {-b_f} by a path of positive length is a square.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "irrsemi/field.hpp"
#include "irrsemi/quadratic.hpp"

namespace irrsemi {

/// {-b_f : f in S}, deduplicated, in generator order.
inline std::vector<Elem> distinguished_set(const GeneratorSet& s) {
  std::vector<Elem> out;
  for (const auto& g : s.gens()) {
    const Elem d = s.field().neg(g.b);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  return out;
}

struct Edge {
  Elem from;
  std::size_t gen;
  Elem to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The part of G_S reachable from D_S by paths of positive length.
struct ReachGraph {
  struct Step {
    Elem from;
    std::size_t gen;
  };

  std::vector<Elem> seeds;  // D_S
  std::vector<Elem> nodes;  // discovery order
  std::vector<std::size_t> dist;  // minimal path length >= 1
  std::vector<Step> parent;  // BFS predecessor; a seed when dist == 1
  /// Out-edges of every seed and every node, seeds that are not nodes first.
  std::vector<Edge> edges;

  std::optional<std::size_t> find(Elem x) const {
    const auto it = index.find(x.value);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  bool contains(Elem x) const { return index.count(x.value) != 0; }
  bool is_seed(Elem x) const { return std::find(seeds.begin(), seeds.end(), x) != seeds.end(); }

  std::unordered_map<std::uint64_t, std::size_t> index;  // node value -> position in `nodes`
};

/// Level-synchronous BFS from the one-step images of D_S. Within a level the
/// generators are applied in list order, each to the whole frontier in
/// discovery order.
inline ReachGraph reachable_subgraph(const GeneratorSet& s) {
  const Field& k = s.field();
  ReachGraph g;
  g.seeds = distinguished_set(s);

  std::vector<Elem> frontier = g.seeds;
  std::size_t level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<Elem> next;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (const Elem u : frontier) {
        const Elem v = eval(k, s[i], u);
        if (g.index.emplace(v.value, g.nodes.size()).second) {
          g.nodes.push_back(v);
          g.dist.push_back(level);
          g.parent.push_back({u, i});
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }

  auto add_edges = [&](Elem u) {
    for (std::size_t i = 0; i < s.size(); ++i) g.edges.push_back({u, i, eval(k, s[i], u)});
  };
  for (const Elem d : g.seeds) {
    if (!g.contains(d)) add_edges(d);
  }
  for (const Elem u : g.nodes) add_edges(u);
  return g;
}

enum class VerdictKind { AllIrreducible, Reducible };
enum class Reason { SquareInNegD, SquareReachable };

struct Verdict {
  VerdictKind kind = VerdictKind::AllIrreducible;
  std::optional<Word> witness;
  std::optional<Reason> reason;

  bool irreducible() const { return kind == VerdictKind::AllIrreducible; }
};

/// The residue chain of a word w = f_1 f_2 ... f_m (outermost first):
/// b_1, f_1(-b_2), f_1 f_2(-b_3), ..., f_1 ... f_{m-1}(-b_m).
/// Each value is the F_q-norm of the element whose non-squareness decides the
/// next step of the Capelli tower, provided every earlier value is a
/// non-square.
inline std::vector<Elem> residue_chain(const GeneratorSet& s, const Word& w) {
  s.validate(w);
  const Field& k = s.field();
  std::vector<Elem> chain;
  chain.reserve(w.size());
  chain.push_back(s[w[0]].b);
  for (std::size_t i = 1; i < w.size(); ++i) {
    Elem x = k.neg(s[w[i]].b);
    for (std::size_t j = i; j-- > 0;) x = eval(k, s[w[j]], x);
    chain.push_back(x);
  }
  return chain;
}

/// Position of the first square in the residue chain, evaluated in order.
inline std::optional<std::size_t> first_square_in_chain(const GeneratorSet& s, const Word& w) {
  s.validate(w);
  const Field& k = s.field();
  if (k.is_square(s[w[0]].b)) return 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Elem x = k.neg(s[w[i]].b);
    for (std::size_t j = i; j-- > 0;) x = eval(k, s[w[j]], x);
    if (k.is_square(x)) return i;
  }
  return std::nullopt;
}

/// Whether the composition denoted by w is irreducible over F_q.
inline bool word_irreducible(const GeneratorSet& s, const Word& w) {
  return !first_square_in_chain(s, w).has_value();
}

/// A reducible word all of whose strictly shorter outer prefixes are
/// irreducible. Throws std::logic_error when the semigroup is irreducible.
inline Word witness_word(const GeneratorSet& s, const ReachGraph& g) {
  const Field& k = s.field();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (k.is_square(s[i].b)) return {i};
  }

  std::optional<std::size_t> target;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (k.is_square(g.nodes[n])) {
      target = n;
      break;
    }
  }
  if (!target) throw std::logic_error("no reducible composition: the semigroup is irreducible");

  // Walk back from the square: the last edge applied is the outermost factor.
  Word word;
  std::size_t n = *target;
  Elem start;
  for (;;) {
    const auto& step = g.parent[n];
    word.push_back(step.gen);
    if (g.dist[n] == 1) {
      start = step.from;
      break;
    }
    n = *g.find(step.from);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (k.neg(s[i].b) == start) {
      word.push_back(i);
      break;
    }
  }

  const auto cut = first_square_in_chain(s, word);
  if (!cut) throw std::logic_error("witness path does not yield a square residue");
  word.resize(*cut + 1);
  return word;
}

inline Verdict check_semigroup_irreducible(const GeneratorSet& s, const ReachGraph& g) {
  const Field& k = s.field();
  for (const auto& f : s.gens()) {
    if (k.is_square(f.b)) return {VerdictKind::Reducible, witness_word(s, g), Reason::SquareInNegD};
  }
  for (const Elem v : g.nodes) {
    if (k.is_square(v)) return {VerdictKind::Reducible, witness_word(s, g), Reason::SquareReachable};
  }
  return {};
}

inline Verdict check_semigroup_irreducible(const GeneratorSet& s) {
  return check_semigroup_irreducible(s, reachable_subgraph(s));
}

/// Exhaustive word-level check: the first reducible word of length <= max_len
/// in depth-first lexicographic order, or nullopt if every such word passes
/// word_irreducible. Independent of the graph.
inline std::optional<Word> first_reducible_word(const GeneratorSet& s, std::size_t max_len) {
  const Field& k = s.field();
  Word w;
  // Prefixes reaching a node here have all passed, so only the newest chain
  // value needs testing.
  auto visit = [&](auto&& self) -> bool {
    if (w.size() == max_len) return false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Elem x = k.neg(s[j].b);
      if (w.empty()) {
        x = s[j].b;
      } else {
        for (std::size_t i = w.size(); i-- > 0;) x = eval(k, s[w[i]], x);
      }
      w.push_back(j);
      if (k.is_square(x) || self(self)) return true;
      w.pop_back();
    }
    return false;
  };
  if (visit(visit)) return w;
  return std::nullopt;
}

/// Graphviz rendering of the reachable part of G_S. D_S members are
/// double-circled and squares shaded. `names` labels the generators; the
/// default is f0, f1, ...
inline std::string export_dot(const GeneratorSet& s, const ReachGraph& g,
                              const std::vector<std::string>& names = {}) {
  const Field& k = s.field();
  auto label = [&](std::size_t i) { return i < names.size() ? names[i] : "f" + std::to_string(i); };
  auto node_line = [&](std::ostringstream& os, Elem v) {
    os << "  \"" << v.value << "\" [shape=" << (g.is_seed(v) ? "doublecircle" : "circle");
    if (k.is_square(v)) os << ", style=filled, fillcolor=lightgray";
    os << "];\n";
  };

  std::ostringstream os;
  os << "digraph G_S {\n";
  os << "  // q = " << k.q() << "\n";
  for (const Elem d : g.seeds) {
    if (!g.contains(d)) node_line(os, d);
  }
  for (const Elem v : g.nodes) node_line(os, v);
  for (const auto& e : g.edges) {
    os << "  \"" << e.from.value << "\" -> \"" << e.to.value << "\" [label=\"" << label(e.gen) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace irrsemi
