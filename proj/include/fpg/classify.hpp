// Normal-form recognition, deficiency intervals, and the classification
// rule engine. Verdicts are produced by syntactic recognition plus
// user-asserted structural facts, never by guessing: the necessity
// directions of the classification theorems would need an isomorphism test,
// so unrecognized input stays Unknown. Every verdict carries the rules that
// fired and the theorem each rule rests on.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/homology.hpp"
#include "fpg/presentation.hpp"
#include "fpg/tristate.hpp"

namespace fpg {

// User-supplied facts contradict each other or the presentation.
class InconsistentFacts : public std::runtime_error {
 public:
  explicit InconsistentFacts(const std::string& message)
      : std::runtime_error(message) {}
};

// A direct product of closed-form factors, asserted by the user to describe
// the presentation. Single factors tag plain families.
struct FamilyTag {
  std::vector<FamilyFactor> factors;

  // Prime p when cyclic factors are present (all must agree), else 0.
  std::int64_t characteristic() const;
  BettiProfile kunneth_profile() const;
  Presentation build_presentation() const;
  std::string label() const;
};

// Grammar: factor ("*" factor)*, factor := name "(" args ")" ("^" count)?,
// names surface(g), orbifold(g) or orbifold(g;m1,m2,...), abelian(k),
// cyclic(p), free(n).
FamilyTag parse_family_tag(std::string_view text);

struct GroupFacts {
  Presentation presentation;
  TriState is_infinite = TriState::unknown;
  TriState is_limit_group = TriState::unknown;
  TriState is_abelian = TriState::unknown;
  std::optional<FamilyTag> family;
};

enum class KahlerStatus { kahler, not_kahler, kahler_iff_surface_form, unknown };

std::string to_string(KahlerStatus status);

struct RuleCitation {
  std::string rule;
  std::string citation;

  friend bool operator==(const RuleCitation&, const RuleCitation&) = default;
};

struct DeficiencyInterval {
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;

  friend bool operator==(const DeficiencyInterval&,
                         const DeficiencyInterval&) = default;
};

struct Verdict {
  KahlerStatus status = KahlerStatus::unknown;
  std::vector<RuleCitation> justification;  // nonempty unless status unknown
  DeficiencyInterval interval;
  std::vector<std::string> notes;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Result of matching a presentation against the two normal forms: the full
// orbifold presentation, or the single-relator power form. Purely
// syntactic up to generator renaming and cyclic rotation/inversion of
// relators; a miss is not a proof of non-isomorphism.
struct RecognizedForm {
  OrbifoldSignature signature;
  bool from_single_relator = false;
  std::int64_t relator_power = 1;  // the n with relator = (surface word)^n
};

std::optional<RecognizedForm> recognize_orbifold_form(const Presentation& p);

// Witness lower bound #gens - #rels, plus a Morse upper bound whenever a
// closed-form profile is available: from the family tag, from a relator-free
// presentation (free group), or from a recognized orbifold normal form.
DeficiencyInterval deficiency_interval(const GroupFacts& facts);

// k <= a - b1 + 1 <= b for a group with an (a, b) presentation fibering
// with k multiple fibers; returns a - b1 + 1 and rejects inputs violating
// the second inequality.
std::int64_t multiple_fiber_bound(std::int64_t a, std::int64_t b1,
                                  std::int64_t b);

// Applies the rules in fixed priority order R1, R1', R2, R3, R4; the first
// decisive rule sets the status and every agreeing fired rule is cited.
Verdict classify(const GroupFacts& facts);

struct DeficiencyTableRow {
  std::string label;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

struct DeficiencyTableResult {
  std::int64_t genus = 1;
  std::int64_t prime = 2;
  std::vector<DeficiencyTableRow> rows;  // five product families + (Z/p)^3
  std::vector<std::string> notes;
};

// The negative-deficiency product families at the given genus and prime;
// every row closes (lower = upper).
DeficiencyTableResult deficiency_table(std::int64_t genus, std::int64_t prime);

}  // namespace fpg
