// Aggregated invariant reports and the JSON renderings of every value the
// command line emits. All objects use insertion-ordered keys and
// deterministic list orders, so identical inputs produce identical bytes.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpg/classify.hpp"
#include "fpg/homology.hpp"
#include "fpg/l2.hpp"
#include "fpg/presentation.hpp"
#include "fpg/subgroups.hpp"

namespace fpg {

using Json = nlohmann::ordered_json;

struct InvariantReport {
  std::string label;
  std::int64_t generators = 0;
  std::int64_t relators = 0;
  std::int64_t def_lower = 0;
  std::optional<std::int64_t> def_upper;
  std::int64_t b1 = 0;
  std::vector<Integer> torsion;
  std::int64_t euler_complex = 0;
  std::vector<ComplexBettiProfile> betti_mod;
  std::optional<Rational> l2_b1;
  std::optional<Verdict> verdict;
};

// Assembles the report: abelianization, deficiency interval (validating any
// family tag), requested mod-p profiles, the closed-form first L2-Betti
// number when one applies, and the classification verdict.
InvariantReport build_invariant_report(const GroupFacts& facts,
                                       std::span<const std::int64_t> primes);

Json to_json(const Presentation& p);
Json to_json(const Verdict& v);
Json to_json(const InvariantReport& report);
Json to_json(const CosetTable& table);
Json to_json(const RewrittenPresentation& rewritten);
Json to_json(const DeficiencyTableResult& table);

}  // namespace fpg
