// JSON and TSV encodings of fields, generator sets, verdicts, reports and
// census rows.
//
// Input document:
//   {"field": {"p": 7, "e": 1, "modulus": [..]},
//    "generators": [{"a": 1, "b": 5}, {"c1": 6, "c0": 4}]}
// Elements are encoded integers in [0, q). Unknown keys are rejected.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "irrsemi/criterion.hpp"
#include "irrsemi/field.hpp"
#include "irrsemi/oracle.hpp"
#include "irrsemi/quadratic.hpp"
#include "irrsemi/search.hpp"

namespace irrsemi::io {

using json = nlohmann::ordered_json;

/// Malformed or semantically invalid input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw InputError("unknown field \"" + key + "\" in " + where);
  }
}

inline std::uint64_t as_uint(const json& v, const std::string& what) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw InputError(what + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline std::uint64_t get_uint(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError("missing field \"" + std::string(key) + "\" in " + where);
  return as_uint(obj.at(key), "field \"" + std::string(key) + "\" in " + where);
}

}  // namespace detail

inline Field parse_field(const json& j) {
  detail::reject_unknown_keys(j, {"p", "e", "modulus"}, "field");
  const std::uint64_t p = detail::get_uint(j, "p", "field");
  const std::uint64_t e = j.contains("e") ? detail::get_uint(j, "e", "field") : 1;
  if (e == 0 || e > Field::kMaxDegree) throw InputError("field degree e out of range");
  std::optional<std::vector<std::uint64_t>> modulus;
  if (j.contains("modulus")) {
    const json& m = j.at("modulus");
    if (!m.is_array()) throw InputError("field modulus must be an array");
    std::vector<std::uint64_t> coeffs;
    for (const auto& c : m) coeffs.push_back(detail::as_uint(c, "modulus coefficient"));
    modulus = std::move(coeffs);
  }
  try {
    return Field::make(p, static_cast<unsigned>(e), modulus);
  } catch (const FieldError& err) {
    throw InputError(err.what());
  }
}

inline MonicQuadratic parse_generator(const Field& k, const json& j) {
  if (!j.is_object()) throw InputError("generator must be a JSON object");
  auto element = [&](const char* key) {
    const std::uint64_t v = detail::get_uint(j, key, "generator");
    if (v >= k.q()) throw InputError("generator field \"" + std::string(key) + "\" out of range for q = " + std::to_string(k.q()));
    return Elem{v};
  };
  if (j.contains("a") || j.contains("b")) {
    detail::reject_unknown_keys(j, {"a", "b"}, "generator");
    return {element("a"), element("b")};
  }
  if (j.contains("c1") || j.contains("c0")) {
    detail::reject_unknown_keys(j, {"c1", "c0"}, "generator");
    return from_coeffs(k, element("c1"), element("c0"));
  }
  throw InputError("generator needs either {\"a\", \"b\"} or {\"c1\", \"c0\"}");
}

struct Problem {
  Field field;
  std::vector<MonicQuadratic> generators;  // as given, duplicates included
};

inline Problem parse_problem(const json& j) {
  detail::reject_unknown_keys(j, {"field", "generators"}, "input");
  if (!j.contains("field")) throw InputError("missing field \"field\" in input");
  if (!j.contains("generators")) throw InputError("missing field \"generators\" in input");
  Field k = parse_field(j.at("field"));
  const json& gens = j.at("generators");
  if (!gens.is_array() || gens.empty()) throw InputError("\"generators\" must be a nonempty array");
  std::vector<MonicQuadratic> out;
  for (const auto& g : gens) out.push_back(parse_generator(k, g));
  return {std::move(k), std::move(out)};
}

inline Problem parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("malformed JSON: ") + err.what());
  }
  return parse_problem(j);
}

inline json elems_json(const std::vector<Elem>& xs) {
  json out = json::array();
  for (const Elem x : xs) out.push_back(x.value);
  return out;
}

inline json word_json(const Word& w) {
  json out = json::array();
  for (const auto i : w) out.push_back(i);
  return out;
}

inline const char* verdict_name(VerdictKind k) {
  return k == VerdictKind::AllIrreducible ? "irreducible" : "reducible";
}

inline const char* reason_name(Reason r) {
  return r == Reason::SquareInNegD ? "square_in_neg_d" : "square_reachable";
}

inline json verdict_json(const Verdict& v, const ReachGraph& g) {
  json out;
  out["verdict"] = verdict_name(v.kind);
  out["reason"] = v.reason ? json(reason_name(*v.reason)) : json(nullptr);
  out["witness"] = v.witness ? word_json(*v.witness) : json(nullptr);
  out["reach_nodes"] = elems_json(g.nodes);
  out["d_s"] = elems_json(g.seeds);
  return out;
}

inline json report_json(const CrosscheckReport& r) {
  json out;
  out["depth"] = r.depth;
  out["words"] = r.words;
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"word", word_json(m.word)}, {"chain", m.chain_irreducible}, {"rabin", m.rabin_irreducible}});
  }
  out["mismatches"] = std::move(mismatches);
  json irr = json::object();
  json red = json::object();
  for (const auto& [len, n] : r.irreducible_per_length) irr[std::to_string(len)] = n;
  for (const auto& [len, n] : r.reducible_per_length) red[std::to_string(len)] = n;
  out["irreducible_per_length"] = std::move(irr);
  out["reducible_per_length"] = std::move(red);
  return out;
}

inline CensusFilter parse_filter(const std::string& name) {
  if (name == "all") return CensusFilter::All;
  if (name == "irreducible" || name == "irreducible-generators-only") return CensusFilter::IrreducibleGenerators;
  if (name == "no-linear" || name == "no-linear-term") return CensusFilter::NoLinearTerm;
  throw InputError("unknown census filter \"" + name + "\"");
}

inline void write_census_tsv(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << "q\ta1\tb1\ta2\tb2\tverdict\twitness_len\treach_size\n";
  for (const auto& r : rows) {
    os << r.q << '\t' << r.first.a.value << '\t' << r.first.b.value << '\t' << r.second.a.value << '\t'
       << r.second.b.value << '\t' << verdict_name(r.verdict) << '\t' << r.witness_len << '\t' << r.reach_size
       << '\n';
  }
}

inline json census_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"q", r.q},
                   {"a1", r.first.a.value},
                   {"b1", r.first.b.value},
                   {"a2", r.second.a.value},
                   {"b2", r.second.b.value},
                   {"verdict", verdict_name(r.verdict)},
                   {"witness_len", r.witness_len},
                   {"reach_size", r.reach_size}});
  }
  return out;
}

inline json lemma_json(const LemmaReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"b", row.b.value}, {"verdict", verdict_name(row.verdict)}, {"witness", word_json(row.witness)}});
  }
  return {{"p", r.p}, {"holds", r.holds}, {"square_b_reducible", r.square_b_reducible}, {"rows", std::move(rows)}};
}

inline json prop_json(const PropReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"b_f", row.bf.value},
                    {"b_g", row.bg.value},
                    {"verdict", verdict_name(row.verdict)},
                    {"witness", word_json(row.witness)},
                    {"node_count", row.node_count},
                    {"all_nonsquare", row.all_nonsquare},
                    {"indegree_consistent", row.indegree_consistent}});
  }
  return {{"p", r.p}, {"holds", r.holds}, {"rows", std::move(rows)}};
}

}  // namespace irrsemi::io
