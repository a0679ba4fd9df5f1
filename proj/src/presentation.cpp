#include "fpg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace fpg {

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty() || std::isalpha(static_cast<unsigned char>(name[0])) == 0)
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

std::string join_multiplicities(const std::vector<std::int64_t>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ms[i]);
  }
  return out;
}

}  // namespace

Presentation Presentation::make(Alphabet generators, std::vector<Word> relators,
                                std::string label) {
  std::set<std::string> seen;
  for (const GeneratorSymbol& g : generators) {
    if (!valid_identifier(g.name))
      throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("duplicate generator '" + g.name + "'");
  }
  for (const Word& r : relators) {
    if (r.empty())
      throw std::invalid_argument("relators must be nonempty");
    for (const Run& run : r.runs())
      if (std::find(generators.begin(), generators.end(), run.gen) ==
          generators.end())
        throw std::invalid_argument("relator uses unknown generator '" +
                                    run.gen.name + "'");
  }
  Presentation p;
  p.generators = std::move(generators);
  p.relators = std::move(relators);
  p.label = std::move(label);
  return p;
}

std::optional<std::size_t> Presentation::generator_index(
    const GeneratorSymbol& g) const {
  const auto it = std::find(generators.begin(), generators.end(), g);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

OrbifoldSignature OrbifoldSignature::make(
    std::int64_t genus, std::vector<std::int64_t> multiplicities) {
  if (genus < 1)
    throw std::invalid_argument("orbifold signature requires genus >= 1");
  for (std::int64_t m : multiplicities)
    if (m < 2)
      throw std::invalid_argument("orbifold multiplicities must be >= 2");
  OrbifoldSignature sig;
  sig.genus = genus;
  sig.multiplicities = std::move(multiplicities);
  return sig;
}

Presentation orbifold_presentation(const OrbifoldSignature& sig) {
  const auto validated = OrbifoldSignature::make(sig.genus, sig.multiplicities);
  const std::int64_t g = validated.genus;
  const std::size_t k = validated.multiplicities.size();

  Alphabet gens;
  std::vector<GeneratorSymbol> xs, ys, zs;
  for (std::int64_t i = 1; i <= g; ++i) {
    xs.push_back({"x" + std::to_string(i)});
    ys.push_back({"y" + std::to_string(i)});
    gens.push_back(xs.back());
    gens.push_back(ys.back());
  }
  for (std::size_t i = 1; i <= k; ++i) {
    zs.push_back({"z" + std::to_string(i)});
    gens.push_back(zs.back());
  }

  Word main;
  for (std::int64_t i = 0; i < g; ++i)
    main *= commutator(Word::single(xs[static_cast<std::size_t>(i)]),
                       Word::single(ys[static_cast<std::size_t>(i)]));
  for (const GeneratorSymbol& z : zs) main *= Word::single(z);

  std::vector<Word> relators{main};
  for (std::size_t i = 0; i < k; ++i)
    relators.push_back(Word::single(zs[i], validated.multiplicities[i]));

  std::string label = "orbifold(" + std::to_string(g);
  if (k > 0) label += ";" + join_multiplicities(validated.multiplicities);
  label += ")";
  return Presentation::make(std::move(gens), std::move(relators), std::move(label));
}

Presentation one_relator_orbifold(std::int64_t genus, std::int64_t power) {
  if (genus < 1)
    throw std::invalid_argument("one_relator_orbifold requires genus >= 1");
  if (power < 1)
    throw std::invalid_argument("one_relator_orbifold requires power >= 1");

  Alphabet gens;
  Word base;
  for (std::int64_t i = 1; i <= genus; ++i) {
    GeneratorSymbol x{"x" + std::to_string(i)};
    GeneratorSymbol y{"y" + std::to_string(i)};
    gens.push_back(x);
    gens.push_back(y);
    base *= commutator(Word::single(x), Word::single(y));
  }
  const std::string label =
      "one-relator(" + std::to_string(genus) + ";" + std::to_string(power) + ")";
  return Presentation::make(std::move(gens), {base.pow(power)}, label);
}

Presentation surface_presentation(std::int64_t genus) {
  Presentation p = orbifold_presentation(OrbifoldSignature::make(genus, {}));
  p.label = "surface(" + std::to_string(genus) + ")";
  return p;
}

Presentation cyclic_presentation(std::int64_t order) {
  if (order < 2)
    throw std::invalid_argument("cyclic_presentation requires order >= 2");
  GeneratorSymbol z{"z"};
  return Presentation::make({z}, {Word::single(z, order)},
                            "Z/" + std::to_string(order));
}

Presentation free_abelian_presentation(std::int64_t rank) {
  if (rank < 1)
    throw std::invalid_argument("free_abelian_presentation requires rank >= 1");
  Alphabet gens;
  for (std::int64_t i = 1; i <= rank; ++i)
    gens.push_back({"a" + std::to_string(i)});
  std::vector<Word> relators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      relators.push_back(commutator(Word::single(gens[i]), Word::single(gens[j])));
  return Presentation::make(std::move(gens), std::move(relators),
                            "Z^" + std::to_string(rank));
}

Presentation free_presentation(std::int64_t rank) {
  if (rank < 0)
    throw std::invalid_argument("free_presentation requires rank >= 0");
  Alphabet gens;
  for (std::int64_t i = 1; i <= rank; ++i)
    gens.push_back({"a" + std::to_string(i)});
  return Presentation::make(std::move(gens), {},
                            "free(" + std::to_string(rank) + ")");
}

Presentation eliminate_generator(const Presentation& p, std::size_t relator_index,
                                 const GeneratorSymbol& generator) {
  if (relator_index >= p.relators.size())
    throw std::invalid_argument("relator index out of range");
  if (!p.generator_index(generator))
    throw std::invalid_argument("unknown generator '" + generator.name + "'");

  const Word& relator = p.relators[relator_index];
  std::int64_t occurrences = 0;
  std::size_t run_at = 0;
  for (std::size_t i = 0; i < relator.runs().size(); ++i) {
    if (relator.runs()[i].gen == generator) {
      occurrences += std::abs(relator.runs()[i].exponent);
      run_at = i;
    }
  }
  if (occurrences != 1)
    throw std::invalid_argument(
        "generator must occur exactly once with exponent +-1 in the relator");

  // relator = u t^e v with e = +-1; solve for t.
  const auto& runs = relator.runs();
  Word before = Word::from_runs(std::span(runs.data(), run_at));
  Word after =
      Word::from_runs(std::span(runs.data() + run_at + 1, runs.size() - run_at - 1));
  const std::int64_t e = runs[run_at].exponent;
  const Word solved = e == 1 ? before.inverse() * after.inverse()
                             : after * before;

  Alphabet gens;
  for (const GeneratorSymbol& g : p.generators)
    if (!(g == generator)) gens.push_back(g);

  std::vector<Word> relators;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == relator_index) continue;
    Word rewritten;
    for (const Run& run : p.relators[i].runs()) {
      if (run.gen == generator)
        rewritten *= solved.pow(run.exponent);
      else
        rewritten *= Word::single(run.gen, run.exponent);
    }
    if (!rewritten.empty()) relators.push_back(std::move(rewritten));
  }
  return Presentation::make(std::move(gens), std::move(relators), p.label);
}

Presentation product_presentation(const Presentation& p, const Presentation& q) {
  std::set<std::string> taken;
  for (const GeneratorSymbol& g : p.generators) taken.insert(g.name);
  for (const GeneratorSymbol& g : q.generators) taken.insert(g.name);

  // Rename colliding right-hand generators deterministically: smallest
  // numeric suffix >= 2 that collides with nothing on either side.
  std::vector<GeneratorSymbol> q_gens;
  bool renamed = false;
  for (const GeneratorSymbol& g : q.generators) {
    if (!p.generator_index(g)) {
      q_gens.push_back(g);
      continue;
    }
    std::int64_t suffix = 2;
    std::string candidate;
    do {
      candidate = g.name + std::to_string(suffix++);
    } while (taken.contains(candidate));
    taken.insert(candidate);
    q_gens.push_back({candidate});
    renamed = true;
  }

  auto rename = [&](const Word& w) {
    if (!renamed) return w;
    std::vector<Run> runs;
    runs.reserve(w.runs().size());
    for (const Run& r : w.runs())
      runs.push_back(Run{q_gens[*q.generator_index(r.gen)], r.exponent});
    return Word::from_runs(runs);
  };

  Alphabet gens = p.generators;
  gens.insert(gens.end(), q_gens.begin(), q_gens.end());

  std::vector<Word> relators = p.relators;
  for (const Word& r : q.relators) relators.push_back(rename(r));
  for (const GeneratorSymbol& a : p.generators)
    for (const GeneratorSymbol& b : q_gens)
      relators.push_back(commutator(Word::single(a), Word::single(b)));

  std::string label;
  if (!p.label.empty() && !q.label.empty()) label = p.label + " x " + q.label;
  return Presentation::make(std::move(gens), std::move(relators), std::move(label));
}

std::int64_t deficiency_lower_bound(const Presentation& p) {
  return static_cast<std::int64_t>(p.generator_count()) -
         static_cast<std::int64_t>(p.relator_count());
}

std::int64_t euler_char_complex(const Presentation& p) {
  return 1 - static_cast<std::int64_t>(p.generator_count()) +
         static_cast<std::int64_t>(p.relator_count());
}

std::int64_t min_generators_orbifold(const OrbifoldSignature& sig) {
  const auto validated = OrbifoldSignature::make(sig.genus, sig.multiplicities);
  const std::int64_t k =
      static_cast<std::int64_t>(validated.multiplicities.size());
  return k > 0 ? 2 * validated.genus + k - 1 : 2 * validated.genus;
}

namespace {

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

Alphabet parse_generator_list(std::string_view text, std::size_t offset) {
  Alphabet gens;
  if (trim(text).empty()) return gens;
  for (const std::string& part : split_top_level(text, ',')) {
    const std::string name = trim(part);
    if (!valid_identifier(name))
      throw ParseError("invalid generator name '" + name + "'", offset);
    gens.push_back({name});
  }
  return gens;
}

Presentation parse_inline(std::string_view text) {
  const std::size_t open = text.find('<');
  const std::size_t bar = text.find('|', open);
  const std::size_t close = text.rfind('>');
  if (open == std::string_view::npos || bar == std::string_view::npos ||
      close == std::string_view::npos || close < bar)
    throw ParseError("expected '< gens | relators >'", 0);
  if (!trim(text.substr(0, open)).empty() || !trim(text.substr(close + 1)).empty())
    throw ParseError("unexpected text around presentation", 0);

  Alphabet gens = parse_generator_list(text.substr(open + 1, bar - open - 1), open + 1);
  std::vector<Word> relators;
  const std::string_view relator_section = text.substr(bar + 1, close - bar - 1);
  if (!trim(relator_section).empty()) {
    for (const std::string& part : split_top_level(relator_section, ',')) {
      Word w = parse_word(part, gens);
      if (w.empty())
        throw ParseError("relator reduces to the empty word", bar + 1);
      relators.push_back(std::move(w));
    }
  }
  return Presentation::make(std::move(gens), std::move(relators));
}

Presentation parse_file_form(std::string_view text) {
  Alphabet gens;
  std::vector<Word> relators;
  bool have_gens = false;
  std::size_t pos = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string line = trim(text.substr(line_start, line_end - line_start));
    pos = line_start;
    line_start = line_end + 1;
    if (line.empty()) {
      if (line_end == text.size()) break;
      continue;
    }
    if (line.starts_with("gens:")) {
      if (have_gens) throw ParseError("duplicate 'gens:' line", pos);
      gens = parse_generator_list(std::string_view(line).substr(5), pos);
      have_gens = true;
    } else if (line.starts_with("rel:")) {
      if (!have_gens)
        throw ParseError("'rel:' line before 'gens:' line", pos);
      Word w = parse_word(std::string_view(line).substr(4), gens);
      if (w.empty())
        throw ParseError("relator reduces to the empty word", pos);
      relators.push_back(std::move(w));
    } else {
      throw ParseError("expected 'gens:' or 'rel:' line", pos);
    }
    if (line_end == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", 0);
  return Presentation::make(std::move(gens), std::move(relators));
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  const std::string trimmed = trim(text);
  if (trimmed.empty()) throw ParseError("empty presentation", 0);
  if (trimmed.front() == '<') return parse_inline(text);
  return parse_file_form(text);
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out += (i == 0 ? " " : ", ") + p.generators[i].name;
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i == 0 ? " " : ", ") + to_string(p.relators[i]);
  out += " >";
  return out;
}

}  // namespace fpg
