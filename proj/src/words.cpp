#include "fpg/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace fpg {

namespace {

void push_reduced(std::vector<Run>& out, const GeneratorSymbol& gen,
                  std::int64_t exponent) {
  if (exponent == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exponent += exponent;
    if (out.back().exponent == 0) out.pop_back();
    return;
  }
  out.push_back(Run{gen, exponent});
}

}  // namespace

Word Word::from_runs(std::span<const Run> runs) {
  Word w;
  for (const Run& r : runs) push_reduced(w.runs_, r.gen, r.exponent);
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (const Letter& l : letters) push_reduced(w.runs_, l.gen, l.sign);
  return w;
}

Word Word::single(GeneratorSymbol gen, std::int64_t exponent) {
  Word w;
  if (exponent != 0) w.runs_.push_back(Run{std::move(gen), exponent});
  return w;
}

std::int64_t Word::letter_length() const {
  return std::accumulate(runs_.begin(), runs_.end(), std::int64_t{0},
                         [](std::int64_t acc, const Run& r) {
                           return acc + std::llabs(r.exponent);
                         });
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(letter_length()));
  for (const Run& r : runs_) {
    const int sign = r.exponent > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < std::llabs(r.exponent); ++i)
      out.push_back(Letter{r.gen, sign});
  }
  return out;
}

Word Word::inverse() const {
  Word w;
  w.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
    w.runs_.push_back(Run{it->gen, -it->exponent});
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n == 0 || runs_.empty()) return Word{};
  const Word base = n > 0 ? *this : inverse();
  const std::int64_t count = n > 0 ? n : -n;
  if (base.runs_.size() == 1) {
    return single(base.runs_.front().gen, base.runs_.front().exponent * count);
  }
  Word out;
  for (std::int64_t i = 0; i < count; ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const Run& r : rhs.runs_) push_reduced(runs_, r.gen, r.exponent);
  return *this;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error(std::move(message) + " at position " +
                         std::to_string(position)),
      position_(position) {}

UnknownGeneratorError::UnknownGeneratorError(std::string name,
                                             std::size_t position)
    : ParseError("unknown generator '" + name + "'", position),
      name_(std::move(name)) {}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'",
                       pos_);
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '[' ||
           std::isalpha(static_cast<unsigned char>(c)) != 0;
  }

  Word parse_word() {
    Word w;
    while (at_factor_start()) w *= parse_term();
    return w;
  }

  Word parse_term() {
    Word base = parse_factor();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return base.pow(parse_exponent());
    }
    return base;
  }

  std::int64_t parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", start);
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40))
        throw ParseError("exponent too large", start);
      ++pos_;
    }
    return negative ? -value : value;
  }

  Word parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected word factor", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_word();
      expect(',');
      Word b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_generator();
    throw ParseError("expected word factor", pos_);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError("expected '" + std::string(1, c) + "'", pos_);
    ++pos_;
  }

  // Longest match against the alphabet; falls back to a generic identifier
  // so unknown names are reported by name rather than as stray characters.
  Word parse_generator() {
    std::size_t best = 0;
    const GeneratorSymbol* match = nullptr;
    for (const GeneratorSymbol& g : alphabet_) {
      if (g.name.size() > best && text_.substr(pos_).starts_with(g.name)) {
        best = g.name.size();
        match = &g;
      }
    }
    if (match != nullptr) {
      pos_ += best;
      return Word::single(*match);
    }
    const std::size_t start = pos_;
    std::size_t end = pos_ + 1;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) != 0))
      ++end;
    throw UnknownGeneratorError(std::string(text_.substr(start, end - start)),
                                start);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (alphabet.empty())
    throw std::invalid_argument("parse_word: empty alphabet");
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i].name == alphabet[j].name)
        throw std::invalid_argument("parse_word: duplicate generator '" +
                                    alphabet[i].name + "'");
  return WordParser(text, alphabet).parse();
}

Word free_reduce(std::span<const Run> runs) { return Word::from_runs(runs); }

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> letters = w.letters();
  std::vector<Letter> conjugator;
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    conjugator.push_back(letters[lo]);
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.core = Word::from_letters(
      std::span(letters.data() + lo, hi - lo));
  out.conjugator = Word::from_letters(conjugator);
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  const auto& runs = w.runs();
  if (runs.size() < 2) return true;
  const Run& first = runs.front();
  const Run& last = runs.back();
  return !(first.gen == last.gen &&
           (first.exponent > 0) != (last.exponent > 0));
}

PowerDecomposition power_decompose(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("power_decompose: empty word");
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("power_decompose: word not cyclically reduced");
  const std::vector<Letter> letters = w.letters();
  const std::size_t n = letters.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i)
      periodic = letters[i] == letters[i % period];
    if (periodic) {
      PowerDecomposition out;
      out.root = Word::from_letters(std::span(letters.data(), period));
      out.exponent = static_cast<std::int64_t>(n / period);
      return out;
    }
  }
  return PowerDecomposition{w, 1};  // unreachable: period == n always works
}

std::vector<std::int64_t> exponent_vector(const Word& w,
                                          const Alphabet& alphabet) {
  std::vector<std::int64_t> out(alphabet.size(), 0);
  for (const Run& r : w.runs()) {
    const auto it = std::find(alphabet.begin(), alphabet.end(), r.gen);
    if (it == alphabet.end()) throw UnknownGeneratorError(r.gen.name, 0);
    out[static_cast<std::size_t>(it - alphabet.begin())] += r.exponent;
  }
  return out;
}

std::string to_string(const Word& w) {
  const auto& runs = w.runs();
  std::string out;
  std::size_t i = 0;
  while (i < runs.size()) {
    if (!out.empty()) out += ' ';
    if (i + 3 < runs.size() && runs[i].exponent == 1 &&
        runs[i + 1].exponent == 1 && runs[i + 2].exponent == -1 &&
        runs[i + 3].exponent == -1 && runs[i].gen == runs[i + 2].gen &&
        runs[i + 1].gen == runs[i + 3].gen && !(runs[i].gen == runs[i + 1].gen)) {
      out += '[' + runs[i].gen.name + ',' + runs[i + 1].gen.name + ']';
      i += 4;
      continue;
    }
    out += runs[i].gen.name;
    if (runs[i].exponent != 1)
      out += '^' + std::to_string(runs[i].exponent);
    ++i;
  }
  return out;
}

}  // namespace fpg
