#include "fpg/classify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace fpg {

namespace {

const char* const kCiteMaster =
    "a group of deficiency >= 2 is Kahler iff it is the orbifold fundamental "
    "group of a curve of genus >= 2";
const char* const kCiteOneRelator =
    "an infinite one-relator group is Kahler iff it is the orbifold "
    "fundamental group of a genus >= 1 orbifold with at most one multiple "
    "point";
const char* const kCiteEvenDeficiency =
    "no Kahler group has positive even deficiency";
const char* const kCiteLimit =
    "a non-abelian limit group is Kahler iff it is a surface group of genus "
    ">= 2";

}  // namespace

std::string to_string(KahlerStatus status) {
  switch (status) {
    case KahlerStatus::kahler:
      return "Kahler";
    case KahlerStatus::not_kahler:
      return "NotKahler";
    case KahlerStatus::kahler_iff_surface_form:
      return "KahlerIffSurfaceForm";
    case KahlerStatus::unknown:
      return "Unknown";
  }
  throw std::logic_error("unreachable");
}

std::int64_t FamilyTag::characteristic() const {
  std::int64_t p = 0;
  for (const FamilyFactor& f : factors) {
    if (f.kind() != FamilyFactor::Kind::cyclic) continue;
    if (p == 0)
      p = f.parameter();
    else if (p != f.parameter())
      throw std::invalid_argument(
          "family tags with cyclic factors of different orders are not "
          "supported");
  }
  if (p != 0 && !is_prime(p))
    throw std::invalid_argument("cyclic family factors must have prime order");
  return p;
}

BettiProfile FamilyTag::kunneth_profile() const {
  return kunneth_betti(factors, characteristic());
}

Presentation FamilyTag::build_presentation() const {
  if (factors.empty()) return free_presentation(0);
  Presentation out = factors.front().build_presentation();
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = product_presentation(out, factors[i].build_presentation());
  return out;
}

std::string FamilyTag::label() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    out += (i > 0 ? " x " : "") + factors[i].label();
  return out;
}

namespace {

std::vector<Letter> rotated(const std::vector<Letter>& letters, std::size_t by) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i)
    out.push_back(letters[(i + by) % letters.size()]);
  return out;
}

struct PatternMatch {
  std::vector<GeneratorSymbol> handles;  // x1,y1,...,xg,yg in match order
  std::vector<GeneratorSymbol> cone_points;
};

// Reads a letter sequence as [u1,v1]...[ug,vg] w1...wk with all 2g+k
// generators distinct and the trailing block made of bare positive letters.
std::optional<PatternMatch> match_normal_pattern(
    const std::vector<Letter>& letters, std::int64_t g, std::int64_t k) {
  if (static_cast<std::int64_t>(letters.size()) != 4 * g + k)
    return std::nullopt;
  std::set<std::string> used;
  PatternMatch out;
  for (std::int64_t i = 0; i < g; ++i) {
    const Letter& a = letters[static_cast<std::size_t>(4 * i)];
    const Letter& b = letters[static_cast<std::size_t>(4 * i + 1)];
    const Letter& a_inv = letters[static_cast<std::size_t>(4 * i + 2)];
    const Letter& b_inv = letters[static_cast<std::size_t>(4 * i + 3)];
    if (a.sign != 1 || b.sign != 1 || a_inv.sign != -1 || b_inv.sign != -1)
      return std::nullopt;
    if (!(a.gen == a_inv.gen) || !(b.gen == b_inv.gen) || a.gen == b.gen)
      return std::nullopt;
    if (!used.insert(a.gen.name).second) return std::nullopt;
    if (!used.insert(b.gen.name).second) return std::nullopt;
    out.handles.push_back(a.gen);
    out.handles.push_back(b.gen);
  }
  for (std::int64_t j = 0; j < k; ++j) {
    const Letter& z = letters[static_cast<std::size_t>(4 * g + j)];
    if (z.sign != 1) return std::nullopt;
    if (!used.insert(z.gen.name).second) return std::nullopt;
    out.cone_points.push_back(z.gen);
  }
  return out;
}

std::optional<PatternMatch> match_any_rotation(const Word& w, std::int64_t g,
                                               std::int64_t k) {
  for (const Word& candidate : {w, w.inverse()}) {
    const std::vector<Letter> letters = candidate.letters();
    for (std::size_t by = 0; by < letters.size(); ++by) {
      if (auto match = match_normal_pattern(rotated(letters, by), g, k))
        return match;
    }
  }
  return std::nullopt;
}

std::optional<RecognizedForm> recognize_single_relator(const Presentation& p) {
  const std::size_t n = p.generator_count();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  const std::int64_t g = static_cast<std::int64_t>(n) / 2;
  const Word& relator = p.relators.front();
  if (!is_cyclically_reduced(relator)) return std::nullopt;
  const PowerDecomposition decomposition = power_decompose(relator);
  if (decomposition.root.letter_length() != 4 * g) return std::nullopt;
  if (!match_any_rotation(decomposition.root, g, 0)) return std::nullopt;
  RecognizedForm out;
  out.signature = OrbifoldSignature::make(
      g, decomposition.exponent >= 2
             ? std::vector<std::int64_t>{decomposition.exponent}
             : std::vector<std::int64_t>{});
  out.from_single_relator = true;
  out.relator_power = decomposition.exponent;
  return out;
}

std::optional<RecognizedForm> recognize_full_form(const Presentation& p) {
  // One long relator plus one z^m relator per cone point.
  std::map<std::string, std::int64_t> powers;
  const Word* main = nullptr;
  for (const Word& r : p.relators) {
    if (r.run_count() == 1) {
      const Run& run = r.runs().front();
      const std::int64_t m = run.exponent > 0 ? run.exponent : -run.exponent;
      if (m < 2) return std::nullopt;
      if (!powers.emplace(run.gen.name, m).second) return std::nullopt;
    } else {
      if (main != nullptr) return std::nullopt;
      main = &r;
    }
  }
  if (main == nullptr) return std::nullopt;
  const std::int64_t k = static_cast<std::int64_t>(powers.size());
  if (k + 1 != static_cast<std::int64_t>(p.relator_count())) return std::nullopt;
  const std::int64_t n = static_cast<std::int64_t>(p.generator_count());
  if (n - k < 2 || (n - k) % 2 != 0) return std::nullopt;
  const std::int64_t g = (n - k) / 2;
  if (!is_cyclically_reduced(*main)) return std::nullopt;

  const auto match = match_any_rotation(*main, g, k);
  if (!match) return std::nullopt;
  std::vector<std::int64_t> multiplicities;
  for (const GeneratorSymbol& z : match->cone_points) {
    const auto it = powers.find(z.name);
    if (it == powers.end()) return std::nullopt;
    multiplicities.push_back(it->second);
  }
  RecognizedForm out;
  out.signature = OrbifoldSignature::make(g, std::move(multiplicities));
  out.from_single_relator = false;
  return out;
}

}  // namespace

std::optional<RecognizedForm> recognize_orbifold_form(const Presentation& p) {
  if (p.relator_count() == 1) return recognize_single_relator(p);
  if (p.relator_count() >= 2) return recognize_full_form(p);
  return std::nullopt;
}

namespace {

std::vector<std::int64_t> sorted_relator_lengths(const Presentation& p) {
  std::vector<std::int64_t> out;
  out.reserve(p.relator_count());
  for (const Word& r : p.relators) out.push_back(r.letter_length());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> sorted_multiplicities(const OrbifoldSignature& sig) {
  std::vector<std::int64_t> out = sig.multiplicities;
  std::sort(out.begin(), out.end());
  return out;
}

// A tag is an assertion about the presentation; reject it when cheap
// isomorphism invariants disagree. Single orbifold/surface tags are fully
// checked through the normal-form recognizer.
void validate_family_tag(const Presentation& p, const FamilyTag& tag) {
  const Presentation expected = tag.build_presentation();
  if (p.generator_count() != expected.generator_count() ||
      p.relator_count() != expected.relator_count())
    throw InconsistentFacts(
        "family tag does not match the presentation: generator or relator "
        "counts differ");
  if (tag.factors.size() == 1 &&
      (tag.factors.front().kind() == FamilyFactor::Kind::surface ||
       tag.factors.front().kind() == FamilyFactor::Kind::orbifold)) {
    const FamilyFactor& f = tag.factors.front();
    const OrbifoldSignature expected_sig =
        f.kind() == FamilyFactor::Kind::surface
            ? OrbifoldSignature::make(f.parameter(), {})
            : f.signature();
    const auto rec = recognize_orbifold_form(p);
    if (!rec || rec->signature.genus != expected_sig.genus ||
        sorted_multiplicities(rec->signature) !=
            sorted_multiplicities(expected_sig))
      throw InconsistentFacts(
          "family tag does not match the presentation: orbifold normal form "
          "not recognized");
    return;
  }
  if (abelianization(p) != abelianization(expected) ||
      sorted_relator_lengths(p) != sorted_relator_lengths(expected))
    throw InconsistentFacts(
        "family tag does not match the presentation: abelianization or "
        "relator shape differs");
}

}  // namespace

DeficiencyInterval deficiency_interval(const GroupFacts& facts) {
  const Presentation& p = facts.presentation;
  DeficiencyInterval out;
  out.lower = deficiency_lower_bound(p);

  std::optional<BettiProfile> profile;
  if (facts.family) {
    validate_family_tag(p, *facts.family);
    profile = facts.family->kunneth_profile();
  } else if (p.relator_count() == 0) {
    profile = BettiProfile{0, 1, static_cast<std::int64_t>(p.generator_count()), 0};
  } else if (const auto rec = recognize_orbifold_form(p)) {
    profile = BettiProfile{0, 1, 2 * rec->signature.genus, 1};
  }
  if (profile) {
    out.upper = morse_upper_bound(*profile);
    if (*out.upper < out.lower)
      throw InconsistentFacts(
          "witness lower bound exceeds the certified upper bound");
  }
  return out;
}

std::int64_t multiple_fiber_bound(std::int64_t a, std::int64_t b1,
                                  std::int64_t b) {
  if (a < b1)
    throw std::invalid_argument(
        "multiple_fiber_bound requires at least b1 generators");
  const std::int64_t k = a - b1 + 1;
  if (k > b)
    throw InconsistentFacts(
        "multiple fiber bound violated: a - b1 + 1 exceeds the relator count");
  return k;
}

Verdict classify(const GroupFacts& facts) {
  const Presentation& p = facts.presentation;
  const auto recognized = recognize_orbifold_form(p);

  TriState infinite = facts.is_infinite;
  if (abelianization(p).b1 > 0) {
    // Positive b1 certifies an infinite group; this is the one sound
    // auto-promotion.
    if (infinite == TriState::no)
      throw InconsistentFacts(
          "is_infinite = no contradicts positive first Betti number");
    infinite = TriState::yes;
  }

  const DeficiencyInterval interval = deficiency_interval(facts);

  struct FiredRule {
    KahlerStatus status;
    std::vector<RuleCitation> citations;
  };
  std::vector<FiredRule> fired;

  if (recognized && recognized->signature.genus >= 2)
    fired.push_back({KahlerStatus::kahler, {{"R1", kCiteMaster}}});

  if (recognized && recognized->from_single_relator &&
      recognized->signature.genus >= 1 && infinite == TriState::yes)
    fired.push_back({KahlerStatus::kahler, {{"R1'", kCiteOneRelator}}});

  if (interval.upper && *interval.upper == interval.lower &&
      interval.lower >= 2 && interval.lower % 2 == 0)
    fired.push_back({KahlerStatus::not_kahler, {{"R2", kCiteEvenDeficiency}}});

  if (interval.lower >= 2 && !recognized &&
      facts.is_limit_group == TriState::yes && facts.is_abelian == TriState::no)
    fired.push_back(
        {KahlerStatus::not_kahler, {{"R3", kCiteLimit}, {"R3", kCiteMaster}}});

  if (facts.is_limit_group == TriState::yes) {
    if (p.relator_count() == 0 && p.generator_count() >= 2) {
      // A relator-free presentation certifies a non-abelian free group,
      // which is never a surface group.
      fired.push_back({KahlerStatus::not_kahler, {{"R4", kCiteLimit}}});
    } else if (recognized && recognized->signature.multiplicities.empty() &&
               recognized->signature.genus >= 2) {
      fired.push_back({KahlerStatus::kahler, {{"R4", kCiteLimit}}});
    } else if (facts.is_abelian == TriState::no) {
      fired.push_back(
          {KahlerStatus::kahler_iff_surface_form, {{"R4", kCiteLimit}}});
    }
  }

  Verdict verdict;
  verdict.interval = interval;
  if (fired.empty()) {
    verdict.status = KahlerStatus::unknown;
    return verdict;
  }
  verdict.status = fired.front().status;
  for (const FiredRule& rule : fired) {
    if (rule.status != verdict.status) continue;
    verdict.justification.insert(verdict.justification.end(),
                                 rule.citations.begin(), rule.citations.end());
  }
  const bool r1_cited =
      std::any_of(verdict.justification.begin(), verdict.justification.end(),
                  [](const RuleCitation& c) { return c.rule == "R1"; });
  if (r1_cited && recognized->signature.multiplicities.size() >= 2) {
    verdict.notes.push_back(
        "the cone point count (" +
        std::to_string(recognized->signature.multiplicities.size()) +
        ") equals the minimal number of relations in any finite presentation");
  }
  return verdict;
}

DeficiencyTableResult deficiency_table(std::int64_t genus, std::int64_t prime) {
  if (genus < 1)
    throw std::invalid_argument("deficiency_table requires genus >= 1");
  if (!is_prime(prime))
    throw std::invalid_argument("deficiency_table requires a prime");

  const std::string g = std::to_string(genus);
  const std::string p = std::to_string(prime);

  DeficiencyTableResult out;
  out.genus = genus;
  out.prime = prime;

  const auto add_row = [&](std::string label, std::vector<FamilyFactor> factors,
                           std::int64_t characteristic) {
    Presentation pres = factors.front().build_presentation();
    for (std::size_t i = 1; i < factors.size(); ++i)
      pres = product_presentation(pres, factors[i].build_presentation());
    const BettiProfile profile = kunneth_betti(factors, characteristic);
    out.rows.push_back(DeficiencyTableRow{std::move(label),
                                          deficiency_lower_bound(pres),
                                          morse_upper_bound(profile)});
  };

  const FamilyFactor surface = FamilyFactor::surface(genus);
  const FamilyFactor z2 = FamilyFactor::free_abelian(2);
  const FamilyFactor z4 = FamilyFactor::free_abelian(4);
  const FamilyFactor zp = FamilyFactor::cyclic(prime);

  add_row("surface(" + g + ") x Z^2", {surface, z2}, 0);
  add_row("surface(" + g + ") x Z/" + p, {surface, zp}, prime);
  add_row("surface(" + g + ") x Z^4", {surface, z4}, 0);
  add_row("surface(" + g + ") x Z^2 x (Z/" + p + ")^2", {surface, z2, zp, zp},
          prime);
  add_row("surface(" + g + ") x (Z/" + p + ")^4", {surface, zp, zp, zp, zp},
          prime);
  add_row("(Z/" + p + ")^3", {zp, zp, zp}, prime);

  out.notes.push_back(
      "deficiency values -5 and -7 remain undecided for this class of groups");
  return out;
}

namespace {

std::string trim_copy(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_int(std::string_view s) {
  const std::string t = trim_copy(s);
  if (t.empty()) throw std::invalid_argument("expected an integer");
  std::size_t consumed = 0;
  const std::int64_t value = std::stoll(t, &consumed);
  if (consumed != t.size())
    throw std::invalid_argument("invalid integer '" + t + "'");
  return value;
}

FamilyFactor parse_factor(std::string_view text) {
  const std::string t = trim_copy(text);
  const std::size_t open = t.find('(');
  const std::size_t close = t.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close != t.size() - 1)
    throw std::invalid_argument("invalid family factor '" + t + "'");
  const std::string name = trim_copy(t.substr(0, open));
  const std::string args = t.substr(open + 1, close - open - 1);
  if (name == "surface") return FamilyFactor::surface(parse_int(args));
  if (name == "abelian") return FamilyFactor::free_abelian(parse_int(args));
  if (name == "cyclic") return FamilyFactor::cyclic(parse_int(args));
  if (name == "free") return FamilyFactor::free_group(parse_int(args));
  if (name == "orbifold") {
    const std::size_t semi = args.find(';');
    const std::int64_t genus =
        parse_int(semi == std::string::npos ? args : args.substr(0, semi));
    std::vector<std::int64_t> mults;
    if (semi != std::string::npos) {
      std::string_view rest = std::string_view(args).substr(semi + 1);
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        mults.push_back(parse_int(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    }
    return FamilyFactor::orbifold(OrbifoldSignature::make(genus, std::move(mults)));
  }
  throw std::invalid_argument("unknown family factor '" + name + "'");
}

}  // namespace

FamilyTag parse_family_tag(std::string_view text) {
  FamilyTag tag;
  std::string_view rest = text;
  while (true) {
    const std::size_t star = rest.find('*');
    std::string_view piece = rest.substr(0, star);
    std::int64_t repeat = 1;
    const std::size_t caret = piece.rfind('^');
    const std::size_t close = piece.rfind(')');
    if (caret != std::string_view::npos &&
        (close == std::string_view::npos || caret > close)) {
      repeat = parse_int(piece.substr(caret + 1));
      if (repeat < 1)
        throw std::invalid_argument("family factor repeat must be >= 1");
      piece = piece.substr(0, caret);
    }
    const FamilyFactor factor = parse_factor(piece);
    for (std::int64_t i = 0; i < repeat; ++i) tag.factors.push_back(factor);
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  if (tag.factors.empty())
    throw std::invalid_argument("empty family tag");
  return tag;
}

}  // namespace fpg
