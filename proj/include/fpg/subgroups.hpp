// Todd-Coxeter coset enumeration (relator-driven HLT scanning with
// coincidence processing), a low-index subgroup search, and Reidemeister-
// Schreier rewriting onto Schreier generators with the spanning tree
// eliminated, so a subgroup of index d in an (a, b) presentation comes out
// on exactly (a-1)d+1 generators and b*d relators.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/presentation.hpp"
#include "fpg/words.hpp"

namespace fpg {

// Enumeration exceeded its live-coset budget: possibly infinite index, or
// the budget was too small. Never a silent truncation.
class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(const std::string& message)
      : std::runtime_error(message) {}
};

inline constexpr std::int64_t kDefaultMaxCosets = 10000;

// Complete standardized table of the action of the generators on the right
// cosets of a finite-index subgroup. Cosets are 0-based internally, with
// coset 0 the subgroup itself, numbered in breadth-first discovery order
// (scanning generator, then inverse, in alphabet order), so equal subgroups
// produce identical tables.
class CosetTable {
 public:
  std::int64_t index() const { return static_cast<std::int64_t>(size_); }
  const Presentation& base() const { return base_; }
  std::span<const Word> subgroup_generators() const {
    return subgroup_generators_;
  }

  // Image of a coset under a generator (sign +1) or its inverse (sign -1).
  std::int64_t image(std::int64_t coset, std::size_t generator, int sign) const;

  std::int64_t trace(std::int64_t start, const Word& w) const;

  // Table invariants: permutation columns, all relators acting trivially,
  // subgroup generators fixing coset 0. Throws std::logic_error on failure.
  void validate() const;

  // Row-major flattening of the positive-generator action; the identity
  // carrier for equality and ordering.
  std::vector<std::int32_t> flat() const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.base_ == b.base_ && a.action_ == b.action_;
  }

 private:
  friend class CosetTableBuilder;
  friend std::vector<CosetTable> low_index_subgroups(const Presentation&,
                                                     std::int64_t);

  Presentation base_;
  std::vector<Word> subgroup_generators_;
  std::size_t size_ = 0;
  // action_[g][c] = image of coset c under generator g; inverse_ the inverse
  // permutation.
  std::vector<std::vector<std::int32_t>> action_;
  std::vector<std::vector<std::int32_t>> inverse_;
};

// Enumerates the cosets of the subgroup generated by the given words.
// Deterministic for fixed inputs; throws EnumerationOverflow if more than
// max_cosets cosets are alive at any point.
CosetTable coset_enumerate(const Presentation& p,
                           std::span<const Word> subgroup_generators,
                           std::int64_t max_cosets = kDefaultMaxCosets);

// All conjugacy classes of subgroups of index <= max_index, as standardized
// tables of canonical conjugacy representatives, sorted by index and then
// table order. Subgroup generator words are the Schreier generators of the
// representative.
std::vector<CosetTable> low_index_subgroups(const Presentation& p,
                                            std::int64_t max_index);

// Subgroup presentation on Schreier generators. The relator list keeps one
// slot per (relator, coset) pair, so its length is exactly b*d; slots whose
// rewritten word freely reduces to the identity stay as flagged empty words
// and are dropped by simplified().
struct RewrittenPresentation {
  Alphabet generators;                  // (a-1)d + 1 entries
  std::vector<Word> relators;           // b*d entries, possibly empty
  std::vector<Word> transversal;        // Schreier representatives, d entries
  std::vector<Word> generator_images;   // parent word per Schreier generator

  std::size_t generator_count() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }
  std::size_t trivial_relator_count() const;

  Presentation simplified(std::string label = "") const;
};

RewrittenPresentation reidemeister_schreier(const Presentation& p,
                                            const CosetTable& table);

// The passage-to-finite-index arithmetic: (a-1)d+1 generators, b*d
// relators, deficiency witness (a-b-1)d+1.
struct RSCounts {
  std::int64_t generators = 0;
  std::int64_t relators = 0;
  std::int64_t deficiency_lower = 0;

  friend bool operator==(const RSCounts&, const RSCounts&) = default;
};
RSCounts rs_counts(std::int64_t a, std::int64_t b, std::int64_t d);

}  // namespace fpg
