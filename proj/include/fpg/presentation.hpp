// Finite presentations and the constructor families used throughout:
// orbifold surface groups, one-relator orbifold groups, direct products,
// cyclic/free-abelian/free building blocks, plus Tietze generator
// elimination and presentation-level counts.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpg/words.hpp"

namespace fpg {

// Immutable value; relators are freely reduced, nonempty and use only
// alphabet generators.
struct Presentation {
  Alphabet generators;
  std::vector<Word> relators;
  std::string label;

  static Presentation make(Alphabet generators, std::vector<Word> relators,
                           std::string label = "");

  std::size_t generator_count() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }
  std::optional<std::size_t> generator_index(const GeneratorSymbol& g) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Genus plus cone-point multiplicities; multiplicity-1 points never appear.
struct OrbifoldSignature {
  std::int64_t genus = 1;                       // >= 1
  std::vector<std::int64_t> multiplicities;     // each >= 2

  static OrbifoldSignature make(std::int64_t genus,
                                std::vector<std::int64_t> multiplicities);
  std::size_t cone_point_count() const { return multiplicities.size(); }

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

// < x1,y1,...,xg,yg,z1,...,zk | [x1,y1]...[xg,yg] z1...zk, z1^m1, ..., zk^mk >
Presentation orbifold_presentation(const OrbifoldSignature& sig);

// < x1,y1,...,xg,yg | ([x1,y1]...[xg,yg])^m >
Presentation one_relator_orbifold(std::int64_t genus, std::int64_t power);

// Genus-g closed orientable surface group (the k = 0 orbifold case).
Presentation surface_presentation(std::int64_t genus);

Presentation cyclic_presentation(std::int64_t order);          // order >= 2
Presentation free_abelian_presentation(std::int64_t rank);     // rank >= 1
Presentation free_presentation(std::int64_t rank);             // rank >= 0

// Solves the chosen relator for a generator occurring in it exactly once
// with exponent +-1, substitutes the solution everywhere else, and drops
// both the relator and the generator. Relators that reduce to the empty
// word after substitution are dropped as well.
Presentation eliminate_generator(const Presentation& p, std::size_t relator_index,
                                 const GeneratorSymbol& generator);

// Disjoint union of generators and relators plus all mixed commutators;
// colliding generator names on the right are renamed with a numeric suffix.
Presentation product_presentation(const Presentation& p, const Presentation& q);

std::int64_t deficiency_lower_bound(const Presentation& p);

// Euler characteristic of the presentation 2-complex: 1 - #gens + #rels.
std::int64_t euler_char_complex(const Presentation& p);

// Minimal generator count of the orbifold group: 2g+k-1 for k > 0, else 2g.
std::int64_t min_generators_orbifold(const OrbifoldSignature& sig);

// Text formats. The inline form is "< x, y | [x,y]^2, ... >"; the file form
// is one "gens: x, y" line followed by "rel: <word>" lines.
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);

}  // namespace fpg
