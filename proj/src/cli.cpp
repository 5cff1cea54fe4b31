#include "nilary/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilary/classifier.hpp"
#include "nilary/corpus.hpp"
#include "nilary/hunt.hpp"
#include "nilary/json_io.hpp"
#include "nilary/ring_spec.hpp"
#include "nilary/theorems.hpp"

namespace nilary {

namespace {

std::string set_text(const ElementSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each([&](Element e) {
    os << (first ? "" : ",") << e;
    first = false;
  });
  os << "}";
  return os.str();
}

std::string abbreviation_help() {
  std::ostringstream os;
  os << "Predicate columns (Y = holds, n = fails, - = not applicable):\n";
  for (Predicate p : kAllPredicates)
    os << "  " << std::left << std::setw(6) << predicate_abbrev(p) << predicate_name(p) << "\n";
  return os.str();
}

std::string characteristic_text(const Characteristic& c) {
  std::ostringstream os;
  os << c.value;
  if (!c.factors.empty()) {
    os << "=";
    for (std::size_t k = 0; k < c.factors.size(); ++k) {
      os << (k ? "*" : "") << c.factors[k].first;
      if (c.factors[k].second > 1) os << "^" << c.factors[k].second;
    }
  }
  return os.str();
}

std::string witness_text(const Witness& w) {
  std::ostringstream os;
  if (const auto* e = std::get_if<ElementWitness>(&w)) {
    os << "a=" << e->a;
    if (e->exponent) os << " n=" << *e->exponent;
  } else if (const auto* e = std::get_if<ElementPairWitness>(&w)) {
    os << "a=" << e->a << " b=" << e->b;
  } else if (const auto* e = std::get_if<IdealWitness>(&w)) {
    os << "J=" << set_text(e->ideal.elements);
  } else if (const auto* e = std::get_if<IdealPairWitness>(&w)) {
    os << "J=" << set_text(e->first.elements) << " K=" << set_text(e->second.elements);
  }
  return os.str();
}

void print_ring_header(std::ostream& out, const Ring& r) {
  const auto facts = ring_facts(r);
  out << "ring " << r.label() << "  order " << facts.order << (facts.commutative ? "  commutative" : "")
      << (facts.unital ? "  unital" : "") << (facts.nil ? "  nil" : "");
  if (facts.characteristic) out << "  char " << characteristic_text(*facts.characteristic);
  out << "\n";
}

void print_report_table(std::ostream& out, const std::vector<PropertyReport>& reports, bool witnesses) {
  std::size_t width = 7;
  for (const auto& r : reports) width = std::max(width, set_text(r.ideal).size() + 2);
  out << std::left << std::setw(static_cast<int>(width)) << "ideal" << std::setw(7) << "proper";
  for (Predicate p : kAllPredicates)
    out << std::setw(static_cast<int>(predicate_abbrev(p).size() + 1)) << predicate_abbrev(p);
  out << "\n";
  for (const auto& r : reports) {
    out << std::setw(static_cast<int>(width)) << set_text(r.ideal) << std::setw(7) << (r.proper ? "yes" : "no");
    for (Predicate p : kAllPredicates) {
      const auto& v = r[p];
      out << std::setw(static_cast<int>(predicate_abbrev(p).size() + 1)) << (v.not_applicable ? "-" : v.holds ? "Y" : "n");
    }
    out << "\n";
  }
  if (!witnesses) return;
  for (const auto& r : reports)
    for (Predicate p : kAllPredicates) {
      const auto& v = r[p];
      if (!v.holds && !v.not_applicable && !std::holds_alternative<std::monostate>(v.witness))
        out << "  " << set_text(r.ideal) << " " << predicate_name(p) << ": " << witness_text(v.witness) << "\n";
    }
}

std::vector<Element> parse_generators(const std::string& text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit)) throw Error("invalid ideal generator '" + item + "'");
    out.push_back(static_cast<Element>(std::stoul(item)));
  }
  return out;
}

Caps caps_from(std::size_t max_order_flag) {
  Caps caps;
  if (const char* env = std::getenv("NILARY_MAX_ORDER")) {
    try {
      caps.max_order = std::stoul(env);
    } catch (const std::exception&) {
      throw Error(std::string("NILARY_MAX_ORDER is not a number: ") + env);
    }
  }
  if (max_order_flag) caps.max_order = max_order_flag;
  return caps;
}

struct CorpusFlags {
  bool builtin = false;
  std::string corpus_file;
};

Corpus corpus_from(const CorpusFlags& flags, const Caps& caps) {
  if (flags.builtin == !flags.corpus_file.empty()) throw Error("choose exactly one of --builtin or --corpus <file>");
  if (flags.builtin) return build_builtin_corpus(caps);
  return load_corpus_file(flags.corpus_file, caps);
}

int cmd_classify(const std::string& spec, const std::optional<std::string>& ideal, bool json, const Caps& caps,
                 std::ostream& out) {
  const Ring ring = parse_ring_spec(spec, caps);
  const RingAnalysis analysis(ring, caps);
  std::vector<PropertyReport> reports;
  if (ideal) {
    const auto gens = parse_generators(*ideal);
    for (Element g : gens)
      if (g >= ring.order()) throw Error("ideal generator " + std::to_string(g) + " out of range");
    const Ideal generated = ideal_generated_by(ring, gens, IdealKind::two_sided);
    reports.push_back(classify_ideal(analysis, analysis.ideal(generated.elements())));
    if (generated.is_zero()) reports.back().facts = ring_facts(ring);
  } else {
    reports = full_report(analysis);
  }
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << arr.dump(2) << "\n";
  } else {
    print_ring_header(out, ring);
    print_report_table(out, reports, ideal.has_value());
  }
  return kExitOk;
}

int cmd_ideals(const std::string& spec, const std::string& kind_text, bool oracle, bool json, const Caps& caps,
               std::ostream& out) {
  const auto kind = parse_ideal_kind(kind_text);
  if (!kind) throw Error("unknown ideal kind '" + kind_text + "'");
  const Ring ring = parse_ring_spec(spec, caps);
  const auto lattice = enumerate_ideals(ring, *kind, caps);
  std::optional<bool> oracle_match;
  if (oracle && ring.order() <= caps.bruteforce_order)
    oracle_match = enumerate_ideals_bruteforce(ring, *kind, caps).masks() == lattice.masks();

  if (json) {
    auto j = lattice_json(lattice);
    if (oracle_match) j["oracle_match"] = *oracle_match;
    out << j.dump(2) << "\n";
  } else {
    out << "ring " << ring.label() << "  order " << ring.order() << "  " << to_string(*kind) << " ideals: "
        << lattice.size() << "\n";
    for (std::size_t k = 0; k < lattice.size(); ++k)
      out << std::right << std::setw(4) << k << "  size " << std::setw(4) << lattice[k].size() << "  "
          << set_text(lattice[k].elements()) << "\n";
    if (oracle && !oracle_match) out << "oracle: skipped (order above " << caps.bruteforce_order << ")\n";
    if (oracle_match) out << "oracle: " << (*oracle_match ? "match" : "MISMATCH") << "\n";
  }
  return oracle_match.value_or(true) ? kExitOk : kExitFailed;
}

int cmd_verify(const CorpusFlags& flags, const std::vector<std::string>& cases, bool json, const Caps& caps,
               std::ostream& out, std::ostream& err) {
  for (const auto& id : cases)
    if (!is_theorem_case(id)) throw Error("unknown case '" + id + "'");
  const Corpus corpus = corpus_from(flags, caps);
  HarnessOptions options;
  options.cases = cases;
  const auto report = run_all(corpus, options);
  if (report.empty_corpus) err << "warning: empty corpus\n";
  if (json) {
    out << harness_json(report).dump(2) << "\n";
  } else {
    out << "corpus: " << corpus.size() << " rings\n";
    out << std::left << std::setw(18) << "case" << std::setw(6) << "pass" << std::right << std::setw(10)
        << "instances" << std::setw(12) << "hypothesis" << std::setw(12) << "violations" << std::setw(10) << "ms"
        << "\n";
    std::size_t passed = 0;
    for (const auto& c : report.cases) {
      passed += c.pass();
      out << std::left << std::setw(18) << c.id << std::setw(6) << (c.pass() ? "ok" : "FAIL") << std::right
          << std::setw(10) << c.instances << std::setw(12) << c.hypothesis_instances << std::setw(12)
          << c.violations.size() << std::setw(10) << std::fixed << std::setprecision(1) << c.elapsed_ms
          << (c.vacuous() ? "  (vacuous)" : "") << "\n";
      for (const auto& v : c.violations) {
        out << "    violation: " << v.instance << "\n";
        for (const auto& w : v.witnesses)
          out << "      " << w.ring->label() << " " << set_text(w.ideal) << " " << predicate_name(w.predicate) << "="
              << (w.verdict.not_applicable ? "na" : w.verdict.holds ? "true" : "false") << " "
              << witness_text(w.verdict.witness) << "\n";
      }
    }
    out << passed << "/" << report.cases.size() << " cases passed\n";
  }
  return report.pass() ? kExitOk : kExitFailed;
}

int cmd_hunt(const CorpusFlags& flags, const std::string& query_text, const std::string& target_text, bool json,
             const Caps& caps, std::ostream& out) {
  const auto query = HuntQuery::parse(query_text);
  HuntTarget target;
  if (target_text == "zero")
    target = HuntTarget::zero_ideal;
  else if (target_text == "any")
    target = HuntTarget::any_ideal;
  else
    throw Error("unknown hunt target '" + target_text + "' (expected zero or any)");
  const Corpus corpus = corpus_from(flags, caps);
  const auto matches = hunt(corpus, query, target);
  if (json) {
    out << hunt_json(matches, query).dump(2) << "\n";
  } else {
    for (const auto& m : matches) out << m.ring_label << "  " << set_text(m.ideal) << "\n";
    out << matches.size() << " match(es) for: " << query.text() << "\n";
  }
  return matches.empty() ? kExitFailed : kExitOk;
}

int cmd_corpus(const CorpusFlags& flags, bool json, const Caps& caps, std::ostream& out) {
  const Corpus corpus = corpus_from(flags, caps);
  if (json) {
    nlohmann::json rings = nlohmann::json::array();
    for (const auto& e : corpus.entries) rings.push_back({{"spec", e.spec}, {"order", e.ring->order()}});
    out << nlohmann::json{{"rings", rings}}.dump(2) << "\n";
  } else {
    for (const auto& e : corpus.entries) out << std::left << std::setw(24) << e.spec << e.ring->order() << "\n";
    out << corpus.size() << " rings\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-ring workbench for nilary-type ideal predicates", "nilary"};
  app.require_subcommand(1);
  app.footer(abbreviation_help());

  bool json = false;
  std::size_t max_order = 0;
  CorpusFlags corpus_flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Machine-readable output");
    sub->add_option("--max-order", max_order, "Largest ring order to construct (default 4096, env NILARY_MAX_ORDER)");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_flag("--builtin", corpus_flags.builtin, "Use the builtin corpus");
    sub->add_option("--corpus", corpus_flags.corpus_file, "JSON corpus file");
  };

  std::string spec;
  std::optional<std::string> ideal;
  auto* classify = app.add_subcommand("classify", "Classify the ideals of a ring");
  classify->add_option("spec", spec, "Ring spec, e.g. Zn:6 or M:2:Zn:2")->required();
  classify->add_option_function<std::string>("--ideal", [&](const std::string& v) { ideal = v; },
                                             "Classify only the ideal generated by e1,e2,...")
      ->expected(0, 1)
      ->default_str("");
  add_common(classify);

  std::string kind = "two-sided";
  bool oracle = false;
  auto* ideals = app.add_subcommand("ideals", "List the ideal lattice of a ring");
  ideals->add_option("spec", spec, "Ring spec")->required();
  ideals->add_option("--kind", kind, "two-sided | left | right");
  ideals->add_flag("--oracle", oracle, "Cross-check against the subset scan (order <= 16)");
  add_common(ideals);

  std::vector<std::string> cases;
  auto* verify = app.add_subcommand("verify", "Run the theorem harness over a corpus");
  add_corpus(verify);
  verify->add_option("--case", cases, "Only run the given case id (repeatable)");
  add_common(verify);

  std::string query;
  std::string target = "zero";
  auto* hunt_cmd = app.add_subcommand("hunt", "Find corpus instances matching a boolean predicate query");
  add_corpus(hunt_cmd);
  hunt_cmd->add_option("query", query, "e.g. \"weakly_nilary and not nilary\"")->required();
  hunt_cmd->add_option("--target", target, "zero (zero ideal of each ring) | any (every ideal)");
  add_common(hunt_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "List the rings of a corpus");
  add_corpus(corpus_cmd);
  add_common(corpus_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Caps caps = caps_from(max_order);
    if (classify->parsed()) return cmd_classify(spec, ideal, json, caps, out);
    if (ideals->parsed()) return cmd_ideals(spec, kind, oracle, json, caps, out);
    if (verify->parsed()) return cmd_verify(corpus_flags, cases, json, caps, out, err);
    if (hunt_cmd->parsed()) return cmd_hunt(corpus_flags, query, target, json, caps, out);
    if (corpus_cmd->parsed()) return cmd_corpus(corpus_flags, json, caps, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nilary
