#include <doctest.h>

#include <random>
#include <vector>

#include "fpg/words.hpp"

using namespace fpg;

namespace {

const Alphabet kXY{{"x"}, {"y"}};

Word wparse(const char* text) { return parse_word(text, kXY); }

// Independent divisor-sweep oracle: try every divisor d of the letter
// length and test whether the word is the (len/d)-th power of its d-prefix
// by explicit concatenation.
PowerDecomposition power_oracle(const Word& w) {
  const auto letters = w.letters();
  const std::int64_t n = static_cast<std::int64_t>(letters.size());
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const Word prefix =
        Word::from_letters(std::span(letters.data(), static_cast<std::size_t>(d)));
    if (prefix.pow(n / d) == w) return {prefix, n / d};
  }
  return {w, 1};
}

// Freely reduced random word of the requested letter length.
Word random_reduced_word(std::mt19937& rng, int length, int alphabet_size) {
  std::uniform_int_distribution<int> gen_dist(0, alphabet_size - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    const GeneratorSymbol g{std::string(1, static_cast<char>('a' + gen_dist(rng)))};
    const int sign = sign_dist(rng) == 0 ? 1 : -1;
    const Letter l{g, sign};
    if (!letters.empty() && letters.back() == l.inverse()) continue;
    letters.push_back(l);
  }
  return Word::from_letters(letters);
}

Word random_cyclically_reduced_word(std::mt19937& rng, int length,
                                    int alphabet_size) {
  for (;;) {
    const Word w = random_reduced_word(rng, length, alphabet_size);
    if (static_cast<int>(w.letter_length()) == length && is_cyclically_reduced(w))
      return w;
  }
}

}  // namespace

TEST_CASE("parse_word expands commutators and powers") {
  const Word expected = Word::from_letters(std::vector<Letter>{
      {{"x"}, 1}, {{"y"}, 1}, {{"x"}, -1}, {{"y"}, -1},
      {{"x"}, 1}, {{"y"}, 1}, {{"x"}, -1}, {{"y"}, -1}});
  CHECK(wparse("[x,y]^2") == expected);
  CHECK(wparse("x x^-1 y") == Word::single({"y"}));
  CHECK(wparse("(xy)^3") == wparse("x y x y x y"));
  CHECK(wparse("x^0").empty());
  CHECK(wparse("").empty());
}

TEST_CASE("parse_word matches generator names longest-first") {
  const Alphabet gens{{"x1"}, {"y1"}, {"x"}};
  CHECK(parse_word("x1y1", gens) ==
        Word::single({"x1"}) * Word::single({"y1"}));
  CHECK(parse_word("xx1", gens) == Word::single({"x"}) * Word::single({"x1"}));
}

TEST_CASE("parse_word reports errors with positions") {
  CHECK_THROWS_AS(wparse("x ^"), ParseError);
  CHECK_THROWS_AS(wparse("(x"), ParseError);
  CHECK_THROWS_AS(wparse("[x y]"), ParseError);
  CHECK_THROWS_AS(wparse("x z y"), UnknownGeneratorError);
  try {
    wparse("x z2 y");
    FAIL("expected UnknownGeneratorError");
  } catch (const UnknownGeneratorError& e) {
    CHECK(e.name() == "z2");
    CHECK(e.position() == 2);
  }
}

TEST_CASE("free reduction and canonical runs") {
  CHECK(wparse("x x^-1 y") == wparse("y"));
  CHECK(free_reduce(Word{}) == Word{});
  const Word w = wparse("y x^-1 x y");
  CHECK(w == Word::single({"y"}, 2));
  CHECK(w.runs().size() == 1);
  // Constructing from raw runs reduces transitively.
  const std::vector<Run> raw{{{"x"}, 1}, {{"y"}, 2}, {{"y"}, -2}, {{"x"}, -1}};
  CHECK(free_reduce(raw).empty());
}

TEST_CASE("free_reduce is idempotent on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len_dist(0, 16);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_reduced_word(rng, len_dist(rng), 3);
    CHECK(free_reduce(w) == w);
  }
}

TEST_CASE("cyclic_reduce splits off the conjugator") {
  SUBCASE("x^-1 y x") {
    const auto [core, conj] = cyclic_reduce(wparse("x^-1 y x"));
    CHECK(core == wparse("y"));
    CHECK(conj == wparse("x^-1"));
  }
  SUBCASE("commutator is already cyclically reduced") {
    const auto [core, conj] = cyclic_reduce(wparse("[x,y]"));
    CHECK(core == wparse("[x,y]"));
    CHECK(conj.empty());
  }
  SUBCASE("x^-1 y^2 x") {
    const auto [core, conj] = cyclic_reduce(wparse("x^-1 y^2 x"));
    CHECK(core == wparse("y^2"));
    CHECK(conj == wparse("x^-1"));
  }
}

TEST_CASE("cyclic_reduce reassembles to the input") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len_dist(0, 14);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_reduced_word(rng, len_dist(rng), 2);
    const auto [core, conj] = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(core));
    CHECK(core.letter_length() <= w.letter_length());
    CHECK(conj * core * conj.inverse() == w);
  }
}

TEST_CASE("power_decompose finds the primitive root") {
  SUBCASE("xyxyxy") {
    const auto [root, n] = power_decompose(wparse("x y x y x y"));
    CHECK(root == wparse("x y"));
    CHECK(n == 3);
  }
  SUBCASE("commutator has no period") {
    const auto [root, n] = power_decompose(wparse("[x,y]"));
    CHECK(root == wparse("[x,y]"));
    CHECK(n == 1);
  }
  SUBCASE("single run") {
    const auto [root, n] = power_decompose(wparse("y^6"));
    CHECK(root == wparse("y"));
    CHECK(n == 6);
  }
  CHECK_THROWS_AS(power_decompose(Word{}), std::invalid_argument);
  CHECK_THROWS_AS(power_decompose(wparse("x y x^-1")), std::invalid_argument);
}

TEST_CASE("power_decompose agrees with the divisor-sweep oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len_dist(1, 12);
  std::uniform_int_distribution<int> power_dist(1, 4);
  int checked = 0;
  while (checked < 1200) {
    Word w;
    if (checked % 2 == 0) {
      w = random_cyclically_reduced_word(rng, len_dist(rng), 2);
    } else {
      // Bias toward genuine proper powers.
      const int n = power_dist(rng);
      const Word root = random_cyclically_reduced_word(rng, len_dist(rng), 2);
      w = root.pow(n);
      if (static_cast<int>(w.letter_length()) !=
              n * static_cast<int>(root.letter_length()) ||
          !is_cyclically_reduced(w))
        continue;
    }
    const auto got = power_decompose(w);
    const auto expected = power_oracle(w);
    CHECK(got.root == expected.root);
    CHECK(got.exponent == expected.exponent);
    CHECK(got.root.pow(got.exponent) == w);
    // The root itself must be primitive.
    CHECK(power_oracle(got.root).exponent == 1);
    ++checked;
  }
}

TEST_CASE("exponent_vector reads off exponent sums") {
  const Alphabet gens{{"x1"}, {"y1"}, {"x2"}, {"y2"}};
  const Word commutators = parse_word("([x1,y1] [x2,y2])^5", gens);
  CHECK(exponent_vector(commutators, gens) ==
        std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(exponent_vector(wparse("x^2 y^-1"), kXY) ==
        std::vector<std::int64_t>{2, -1});
  const Alphabet with_z{{"x"}, {"y"}, {"z1"}, {"z2"}};
  CHECK(exponent_vector(parse_word("[x,y] z1 z2", with_z), with_z) ==
        std::vector<std::int64_t>{0, 0, 1, 1});
  CHECK_THROWS_AS(exponent_vector(wparse("x"), Alphabet{{"a"}}),
                  UnknownGeneratorError);
}

TEST_CASE("exponent_vector is a homomorphism") {
  std::mt19937 rng(31);
  const Alphabet gens{{"a"}, {"b"}, {"c"}};
  std::uniform_int_distribution<int> len_dist(0, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_reduced_word(rng, len_dist(rng), 3);
    const Word v = random_reduced_word(rng, len_dist(rng), 3);
    const auto vu = exponent_vector(u, gens);
    const auto vv = exponent_vector(v, gens);
    const auto vuv = exponent_vector(u * v, gens);
    for (std::size_t i = 0; i < gens.size(); ++i)
      CHECK(vuv[i] == vu[i] + vv[i]);
  }
}

TEST_CASE("to_string round-trips through parse_word") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> len_dist(0, 14);
  const Alphabet gens{{"a"}, {"b"}, {"c"}};
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_reduced_word(rng, len_dist(rng), 3);
    CHECK(parse_word(to_string(w), gens) == w);
  }
  CHECK(to_string(wparse("[x,y] x^2")) == "[x,y] x^2");
  CHECK(to_string(Word{}).empty());
}

TEST_CASE("word inverse and powers") {
  const Word w = wparse("x y^2");
  CHECK(w * w.inverse() == Word{});
  CHECK(w.pow(0).empty());
  CHECK(w.pow(-2) == w.inverse() * w.inverse());
  CHECK(wparse("x").pow(5) == Word::single({"x"}, 5));
}
