#include "fpg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fpg/report.hpp"

namespace fpg {

namespace {

Presentation load_presentation(const std::string& arg) {
  std::string text = arg;
  if (text.find('<') == std::string::npos) {
    std::ifstream file(arg);
    if (!file)
      throw std::invalid_argument("cannot open presentation file '" + arg + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return parse_presentation(text);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string piece;
  std::istringstream stream(text);
  while (std::getline(stream, piece, ',')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stoll(piece));
  }
  return out;
}

std::vector<Word> parse_word_list(const std::string& text, const Alphabet& gens) {
  std::vector<Word> out;
  std::string piece;
  std::istringstream stream(text);
  while (std::getline(stream, piece, ';')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_word(piece, gens));
  }
  return out;
}

void print_verdict_text(std::ostream& out, const Verdict& v) {
  out << "status: " << to_string(v.status) << "\n";
  out << "interval: [" << v.interval.lower << ", ";
  if (v.interval.upper)
    out << *v.interval.upper;
  else
    out << "?";
  out << "]\n";
  for (const RuleCitation& c : v.justification)
    out << "rule " << c.rule << ": " << c.citation << "\n";
  for (const std::string& note : v.notes) out << "note: " << note << "\n";
}

void print_invariants_text(std::ostream& out, const InvariantReport& r) {
  out << "label: " << r.label << "\n";
  out << "generators: " << r.generators << "\n";
  out << "relators: " << r.relators << "\n";
  out << "def_lower: " << r.def_lower << "\n";
  out << "def_upper: ";
  if (r.def_upper)
    out << *r.def_upper;
  else
    out << "?";
  out << "\n";
  out << "b1: " << r.b1 << "\n";
  out << "torsion:";
  for (const Integer& t : r.torsion) out << " " << t;
  out << "\n";
  out << "euler_complex: " << r.euler_complex << "\n";
  for (const ComplexBettiProfile& profile : r.betti_mod)
    out << "betti mod " << profile.characteristic << ": (" << profile.b0 << ", "
        << profile.b1 << ", " << profile.b2 << ")\n";
  if (r.l2_b1) out << "l2_b1: " << to_string_fraction(*r.l2_b1) << "\n";
  if (r.verdict) print_verdict_text(out, *r.verdict);
}

void print_table_text(std::ostream& out, const CosetTable& table) {
  out << "index: " << table.index() << "\n";
  const Presentation& base = table.base();
  for (std::size_t g = 0; g < base.generator_count(); ++g) {
    out << base.generators[g].name << ":";
    for (std::int64_t c = 0; c < table.index(); ++c)
      out << " " << table.image(c, g, 1) + 1;
    out << "\n";
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"finitely presented group toolkit"};
  app.require_subcommand(1);

  std::string pres_arg;
  std::string family_arg;
  std::string gens_arg;
  std::string mult_arg;
  std::string infinite_arg = "unknown";
  std::string limit_arg = "unknown";
  std::string abelian_arg = "unknown";
  std::vector<std::int64_t> mod_primes;
  std::int64_t genus = 1;
  std::int64_t prime = 2;
  std::int64_t max_cosets = kDefaultMaxCosets;
  std::int64_t max_index = 6;
  bool json = false;

  CLI::App* parse_cmd = app.add_subcommand("parse", "echo a canonicalized presentation");
  parse_cmd->add_option("presentation", pres_arg, "inline form or file path")->required();
  parse_cmd->add_flag("--json", json, "machine-readable output");

  CLI::App* invariants_cmd =
      app.add_subcommand("invariants", "abelianization, deficiency bounds, Betti data");
  invariants_cmd->add_option("presentation", pres_arg)->required();
  invariants_cmd->add_option("--mod", mod_primes, "also report mod-p Betti numbers");
  invariants_cmd->add_option("--family", family_arg,
                             "closed-form family tag, e.g. surface(2)*abelian(2)");
  invariants_cmd->add_flag("--json", json);

  CLI::App* orbifold_cmd =
      app.add_subcommand("orbifold", "emit an orbifold surface group presentation");
  orbifold_cmd->add_option("--genus", genus)->required();
  orbifold_cmd->add_option("--mult", mult_arg, "cone point multiplicities, e.g. 2,3");
  orbifold_cmd->add_flag("--json", json);

  CLI::App* subgroup_cmd = app.add_subcommand(
      "subgroup", "coset enumeration and Reidemeister-Schreier rewriting");
  subgroup_cmd->add_option("presentation", pres_arg)->required();
  subgroup_cmd->add_option("--gens", gens_arg, "subgroup generators, ';' separated")
      ->required();
  subgroup_cmd->add_option("--max-cosets", max_cosets);
  subgroup_cmd->add_flag("--json", json);

  CLI::App* low_index_cmd =
      app.add_subcommand("low-index", "conjugacy classes of low-index subgroups");
  low_index_cmd->add_option("presentation", pres_arg)->required();
  low_index_cmd->add_option("--max", max_index);
  low_index_cmd->add_flag("--json", json);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Kahler classification verdict");
  classify_cmd->add_option("presentation", pres_arg)->required();
  classify_cmd->add_option("--infinite", infinite_arg, "yes|no|unknown");
  classify_cmd->add_option("--limit-group", limit_arg, "yes|no|unknown");
  classify_cmd->add_option("--abelian", abelian_arg, "yes|no|unknown");
  classify_cmd->add_option("--family", family_arg);
  classify_cmd->add_flag("--json", json);

  CLI::App* table_cmd =
      app.add_subcommand("table", "deficiency table of the product families");
  table_cmd->add_option("--genus", genus)->required();
  table_cmd->add_option("--prime", prime)->required();
  table_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (parse_cmd->parsed()) {
    const Presentation p = load_presentation(pres_arg);
    if (json)
      out << to_json(p).dump() << "\n";
    else
      out << to_string(p) << "\n";
    return 0;
  }

  if (invariants_cmd->parsed()) {
    GroupFacts facts;
    facts.presentation = load_presentation(pres_arg);
    if (!family_arg.empty()) facts.family = parse_family_tag(family_arg);
    const InvariantReport report = build_invariant_report(facts, mod_primes);
    if (json)
      out << to_json(report).dump() << "\n";
    else
      print_invariants_text(out, report);
    return 0;
  }

  if (orbifold_cmd->parsed()) {
    const Presentation p = orbifold_presentation(
        OrbifoldSignature::make(genus, parse_int_list(mult_arg)));
    if (json)
      out << to_json(p).dump() << "\n";
    else
      out << to_string(p) << "\n";
    return 0;
  }

  if (subgroup_cmd->parsed()) {
    const Presentation p = load_presentation(pres_arg);
    const std::vector<Word> subgens = parse_word_list(gens_arg, p.generators);
    const CosetTable table = coset_enumerate(p, subgens, max_cosets);
    const RewrittenPresentation rewritten = reidemeister_schreier(p, table);
    if (json) {
      Json result;
      result["table"] = to_json(table);
      result["rewritten"] = to_json(rewritten);
      out << result.dump() << "\n";
    } else {
      print_table_text(out, table);
      out << "rewritten generators: " << rewritten.generator_count() << "\n";
      out << "rewritten relators: " << rewritten.relator_count() << " ("
          << rewritten.trivial_relator_count() << " trivial)\n";
      out << "presentation: " << to_string(rewritten.simplified()) << "\n";
    }
    return 0;
  }

  if (low_index_cmd->parsed()) {
    const Presentation p = load_presentation(pres_arg);
    const std::vector<CosetTable> tables = low_index_subgroups(p, max_index);
    if (json) {
      Json result = Json::array();
      for (const CosetTable& t : tables) result.push_back(to_json(t));
      out << result.dump() << "\n";
    } else {
      out << tables.size() << " subgroup classes of index <= " << max_index << "\n";
      for (const CosetTable& t : tables) print_table_text(out, t);
    }
    return 0;
  }

  if (classify_cmd->parsed()) {
    GroupFacts facts;
    facts.presentation = load_presentation(pres_arg);
    facts.is_infinite = tristate_from_string(infinite_arg);
    facts.is_limit_group = tristate_from_string(limit_arg);
    facts.is_abelian = tristate_from_string(abelian_arg);
    if (!family_arg.empty()) facts.family = parse_family_tag(family_arg);
    const Verdict verdict = classify(facts);
    if (json)
      out << to_json(verdict).dump() << "\n";
    else
      print_verdict_text(out, verdict);
    return 0;
  }

  if (table_cmd->parsed()) {
    const DeficiencyTableResult table = deficiency_table(genus, prime);
    if (json) {
      out << to_json(table).dump() << "\n";
    } else {
      std::size_t width = 0;
      for (const DeficiencyTableRow& row : table.rows)
        width = std::max(width, row.label.size());
      for (const DeficiencyTableRow& row : table.rows)
        out << std::left << std::setw(static_cast<int>(width) + 2) << row.label
            << std::right << std::setw(6) << row.lower << std::setw(6)
            << row.upper << "\n";
      for (const std::string& note : table.notes) out << "note: " << note << "\n";
    }
    return 0;
  }

  err << "no subcommand given\n";
  return 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(argc, argv, out, err);
  } catch (const EnumerationOverflow& e) {
    err << "overflow: " << e.what() << "\n";
    return 2;
  } catch (const InconsistentFacts& e) {
    err << "inconsistent facts: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fpg
