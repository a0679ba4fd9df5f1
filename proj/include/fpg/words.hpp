// Free-group word algebra: parsing, free and cyclic reduction, proper-power
// decomposition, exponent sums. Words are immutable values in run-length
// canonical form (adjacent runs carry distinct generators), so every Word is
// automatically freely reduced.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpg {

struct GeneratorSymbol {
  std::string name;

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend std::strong_ordering operator<=>(const GeneratorSymbol&,
                                          const GeneratorSymbol&) = default;
};

// Ordered alphabet; names must be unique.
using Alphabet = std::vector<GeneratorSymbol>;

// A maximal block g^e with e != 0 inside a canonical word.
struct Run {
  GeneratorSymbol gen;
  std::int64_t exponent = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

// Single signed letter g^{+1} or g^{-1}.
struct Letter {
  GeneratorSymbol gen;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;

  // Both constructors freely reduce their input.
  static Word from_runs(std::span<const Run> runs);
  static Word from_letters(std::span<const Letter> letters);
  static Word single(GeneratorSymbol gen, std::int64_t exponent = 1);

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }
  std::size_t run_count() const { return runs_.size(); }
  std::int64_t letter_length() const;
  std::vector<Letter> letters() const;

  Word inverse() const;
  Word pow(std::int64_t n) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Run> runs_;
};

// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

// Syntax error with the offset into the input where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGeneratorError : public ParseError {
 public:
  UnknownGeneratorError(std::string name, std::size_t position);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Grammar (whitespace ignored):
//   word   := term*
//   term   := factor ("^" signed-int)?
//   factor := ident | "(" word ")" | "[" word "," word "]"
// Identifiers are matched longest-first against the alphabet, so generators
// may be juxtaposed without separators ("xy" over {x,y}). The empty string
// denotes the identity. Exponent 0 yields the empty word; [a,b] expands to
// the commutator.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Free reduction of an arbitrary run sequence (exponent 0 runs are dropped,
// adjacent runs over the same generator merge and cancel transitively).
Word free_reduce(std::span<const Run> runs);
inline Word free_reduce(const Word& w) { return free_reduce(std::span(w.runs())); }

// Splits a freely reduced word as conjugator * core * conjugator^-1 with a
// cyclically reduced core (first and last letters not mutually inverse).
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// Maximal decomposition w = root^n of a nonempty cyclically reduced word;
// the root is primitive (not itself a proper power).
struct PowerDecomposition {
  Word root;
  std::int64_t exponent = 1;
};
PowerDecomposition power_decompose(const Word& w);

// Total exponent sum per alphabet entry; throws UnknownGeneratorError if the
// word mentions a generator outside the alphabet.
std::vector<std::int64_t> exponent_vector(const Word& w, const Alphabet& alphabet);

// Canonical rendering: runs as "g" / "g^e", space separated, with runs of
// shape a b a^-1 b^-1 folded back into "[a,b]". parse_word(to_string(w))
// reproduces w exactly.
std::string to_string(const Word& w);

}  // namespace fpg
