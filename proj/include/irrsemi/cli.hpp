// Command-line front end. Exit codes: 0 irreducible / success / true,
// 1 reducible / mismatch / false, 2 input or usage error.

#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrsemi/criterion.hpp"
#include "irrsemi/io.hpp"
#include "irrsemi/oracle.hpp"
#include "irrsemi/search.hpp"

namespace irrsemi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReducible = 1;
inline constexpr int kExitError = 2;

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw io::InputError("cannot open input file \"" + path + "\"");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline GeneratorSet load_set(const std::string& path, std::istream& in, std::ostream& err,
                             std::size_t max_generators) {
  io::Problem problem = io::parse_problem(slurp(path, in));
  GeneratorSet s(problem.field, problem.generators);
  if (s.duplicates_dropped() != 0) {
    err << "warning: dropped " << s.duplicates_dropped() << " duplicate generator(s)\n";
  }
  if (s.size() > max_generators) {
    throw io::InputError("generator set has " + std::to_string(s.size()) + " elements, above --max-generators " +
                         std::to_string(max_generators));
  }
  return s;
}

inline Field field_from_flags(const std::optional<std::string>& input, std::uint64_t p, unsigned e, std::istream& in) {
  if (input) {
    const auto doc = io::json::parse(slurp(*input, in), nullptr, false);
    if (doc.is_discarded()) throw io::InputError("malformed JSON");
    io::detail::reject_unknown_keys(doc, {"field", "generators"}, "input");
    if (!doc.contains("field")) throw io::InputError("missing field \"field\" in input");
    return io::parse_field(doc.at("field"));
  }
  if (p == 0) throw io::InputError("either an input file or --p is required");
  return Field::make(p, e);
}

}  // namespace detail

/// Runs the CLI on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility of compositional semigroups generated by monic quadratics over odd F_q"};
  app.require_subcommand(1);

  std::string input;
  std::size_t max_generators = 8;
  std::size_t depth = 3;

  auto* check = app.add_subcommand("check", "Decide whether every composition of the generators is irreducible");
  check->add_option("input", input, "Input JSON file, or - for stdin")->required();
  check->add_option("--max-generators", max_generators, "Upper bound on |S|")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "Print a minimal reducible composition, if any");
  witness->add_option("input", input, "Input JSON file, or - for stdin")->required();
  witness->add_option("--max-generators", max_generators, "Upper bound on |S|")->capture_default_str();

  auto* words = app.add_subcommand("words", "Cross-check the residue chain against Rabin's test on all short words");
  words->add_option("input", input, "Input JSON file, or - for stdin")->required();
  words->add_option("--depth", depth, "Maximum word length (1-4)")->capture_default_str()->check(CLI::Range(1, 4));
  words->add_option("--max-generators", max_generators, "Upper bound on |S|")->capture_default_str();

  std::optional<std::string> census_input;
  std::uint64_t p = 0;
  unsigned e = 1;
  std::string filter = "all";
  std::string format = "tsv";
  std::optional<std::size_t> limit;
  unsigned workers = 1;
  auto* census = app.add_subcommand("census", "Classify every unordered pair of distinct generators over F_q");
  census->add_option("input", census_input, "Input JSON whose \"field\" is used");
  census->add_option("--p", p, "Characteristic");
  census->add_option("--e", e, "Extension degree")->capture_default_str();
  census->add_option("--filter", filter, "all | irreducible | no-linear")->capture_default_str();
  census->add_option("--format", format, "tsv | json")->capture_default_str()->check(CLI::IsMember({"tsv", "json"}));
  census->add_option("--limit", limit, "Keep only the first N pairs");
  census->add_option("--workers", workers, "Worker threads")->capture_default_str();

  std::optional<std::uint64_t> lemma_p;
  std::optional<std::uint64_t> prop_p;
  std::optional<std::uint64_t> family_p;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Exhaustively verify a non-existence result or the existence family");
  auto* vg = verify->add_option_group("claim");
  vg->add_option("--lemma-7mod8", lemma_p, "Singletons {x^2 - b} over F_p, p = 7 mod 8");
  vg->add_option("--prop-3mod4", prop_p, "Pairs {x^2 - b_f, x^2 - b_g} over F_p, p = 3 mod 4");
  vg->add_option("--example-family", family_p, "The a, a+1 family over F_{p^e}, q = 1 mod 4");
  vg->require_option(1);
  verify->add_option("--e", e, "Extension degree for --example-family")->capture_default_str();
  verify->add_option("--format", verify_format, "text | json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--workers", workers, "Worker threads")->capture_default_str();

  std::vector<std::string> names;
  auto* dot = app.add_subcommand("dot", "Render the reachable part of G_S as Graphviz DOT");
  dot->add_option("input", input, "Input JSON file, or - for stdin")->required();
  dot->add_option("--names", names, "Generator labels")->delimiter(',');
  dot->add_option("--max-generators", max_generators, "Upper bound on |S|")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e_) {
    const int code = app.exit(e_, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) {
      const GeneratorSet s = detail::load_set(input, in, err, max_generators);
      const ReachGraph g = reachable_subgraph(s);
      const Verdict v = check_semigroup_irreducible(s, g);
      out << io::verdict_json(v, g).dump() << '\n';
      return v.irreducible() ? kExitOk : kExitReducible;
    }
    if (witness->parsed()) {
      const GeneratorSet s = detail::load_set(input, in, err, max_generators);
      const ReachGraph g = reachable_subgraph(s);
      const Verdict v = check_semigroup_irreducible(s, g);
      io::json doc;
      doc["verdict"] = io::verdict_name(v.kind);
      doc["reason"] = v.reason ? io::json(io::reason_name(*v.reason)) : io::json(nullptr);
      doc["witness"] = v.witness ? io::word_json(*v.witness) : io::json(nullptr);
      doc["chain"] = v.witness ? io::elems_json(residue_chain(s, *v.witness)) : io::json(nullptr);
      out << doc.dump() << '\n';
      return v.irreducible() ? kExitOk : kExitReducible;
    }
    if (words->parsed()) {
      const GeneratorSet s = detail::load_set(input, in, err, max_generators);
      const CrosscheckReport r = crosscheck(s, depth);
      out << io::report_json(r).dump() << '\n';
      return r.ok() ? kExitOk : kExitReducible;
    }
    if (census->parsed()) {
      const Field k = detail::field_from_flags(census_input, p, e, in);
      const auto rows = census_pairs(k, io::parse_filter(filter), limit, workers);
      if (format == "json") {
        out << io::census_json(rows).dump() << '\n';
      } else {
        io::write_census_tsv(out, rows);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      bool holds = false;
      io::json doc;
      if (lemma_p) {
        const LemmaReport r = verify_lemma_p7mod8(*lemma_p);
        holds = r.holds;
        doc = io::lemma_json(r);
      } else if (prop_p) {
        const PropReport r = verify_prop_p3mod4(*prop_p, workers);
        holds = r.holds;
        doc = io::prop_json(r);
      } else {
        const Field k = Field::make(*family_p, e);
        const auto family = example_family(k);
        holds = true;
        io::json members = io::json::array();
        for (const Elem a : family) {
          const bool ok = check_semigroup_irreducible(example_family_set(k, a)).irreducible();
          holds = holds && ok;
          members.push_back({{"a", a.value}, {"irreducible", ok}});
        }
        doc = {{"q", k.q()}, {"holds", holds}, {"members", std::move(members)}};
      }
      if (verify_format == "json") {
        out << doc.dump() << '\n';
      } else {
        out << (holds ? "true" : "false") << '\n';
      }
      return holds ? kExitOk : kExitReducible;
    }
    if (dot->parsed()) {
      const GeneratorSet s = detail::load_set(input, in, err, max_generators);
      out << export_dot(s, reachable_subgraph(s), names);
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace irrsemi::cli
