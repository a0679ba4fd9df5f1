#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "fpg/homology.hpp"
#include "fpg/presentation.hpp"
#include "fpg/subgroups.hpp"

using namespace fpg;

namespace {

// Brute-force oracle over homomorphisms to symmetric groups: assigns a
// permutation of degree d to every generator, keeps the assignments under
// which every relator acts trivially and the action is transitive. Entirely
// independent of the coset enumeration machinery.
using Perm = std::vector<int>;

std::vector<Perm> all_perms(int degree) {
  Perm base(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) base[static_cast<std::size_t>(i)] = i;
  std::vector<Perm> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

Perm inverse_perm(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

int trace_word(const Word& w, const std::vector<Perm>& images,
               const std::vector<Perm>& inverses, const Presentation& p,
               int start) {
  int current = start;
  for (const Letter& l : w.letters()) {
    const std::size_t g = *p.generator_index(l.gen);
    current = l.sign > 0 ? images[g][static_cast<std::size_t>(current)]
                         : inverses[g][static_cast<std::size_t>(current)];
  }
  return current;
}

bool transitive(const std::vector<Perm>& images, int degree) {
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int at = stack.back();
    stack.pop_back();
    for (const Perm& p : images) {
      const int next = p[static_cast<std::size_t>(at)];
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        stack.push_back(next);
        ++count;
      }
    }
  }
  return count == degree;
}

// Visits every relator-respecting transitive assignment of degree d.
template <typename Fn>
void for_each_transitive_rep(const Presentation& p, int degree, Fn&& fn) {
  const std::vector<Perm> symmetric = all_perms(degree);
  const std::size_t n = p.generator_count();
  std::vector<std::size_t> odometer(n, 0);
  std::vector<Perm> images(n), inverses(n);
  for (;;) {
    for (std::size_t g = 0; g < n; ++g) {
      images[g] = symmetric[odometer[g]];
      inverses[g] = inverse_perm(images[g]);
    }
    bool ok = true;
    for (const Word& r : p.relators) {
      for (int point = 0; point < degree && ok; ++point)
        ok = trace_word(r, images, inverses, p, point) == point;
      if (!ok) break;
    }
    if (ok && transitive(images, degree)) fn(images, inverses);

    std::size_t g = 0;
    while (g < n && ++odometer[g] == symmetric.size()) odometer[g++] = 0;
    if (g == n) break;
  }
  if (n == 0 && degree == 1) {
    std::vector<Perm> empty;
    fn(empty, empty);
  }
}

// Canonical form of a transitive action under relabeling of the points by
// the full symmetric group (conjugacy of the point stabilizers).
std::vector<int> canonical_action(const std::vector<Perm>& images, int degree) {
  const std::vector<Perm> symmetric = all_perms(degree);
  std::vector<int> best;
  for (const Perm& sigma : symmetric) {
    const Perm sigma_inv = inverse_perm(sigma);
    std::vector<int> flat;
    flat.reserve(images.size() * static_cast<std::size_t>(degree));
    for (int point = 0; point < degree; ++point)
      for (const Perm& img : images)
        flat.push_back(sigma[static_cast<std::size_t>(
            img[static_cast<std::size_t>(sigma_inv[static_cast<std::size_t>(
                point)])])]);
    if (best.empty() || flat < best) best = flat;
  }
  return best;
}

// Conjugacy classes of subgroups of each index <= max_degree.
std::map<int, int> oracle_class_counts(const Presentation& p, int max_degree) {
  std::map<int, int> counts;
  for (int degree = 1; degree <= max_degree; ++degree) {
    std::set<std::vector<int>> classes;
    for_each_transitive_rep(p, degree,
                            [&](const std::vector<Perm>& images,
                                const std::vector<Perm>&) {
                              classes.insert(canonical_action(images, degree));
                            });
    counts[degree] = static_cast<int>(classes.size());
  }
  return counts;
}

// Largest degree <= max_degree of a transitive action in which every given
// subgroup generator fixes the basepoint; this is the index of the subgroup
// they generate, provided it is <= max_degree.
int oracle_index(const Presentation& p, const std::vector<Word>& subgens,
                 int max_degree) {
  int best = 0;
  for (int degree = 1; degree <= max_degree; ++degree) {
    for_each_transitive_rep(
        p, degree,
        [&](const std::vector<Perm>& images, const std::vector<Perm>& inverses) {
          for (const Word& w : subgens)
            if (trace_word(w, images, inverses, p, 0) != 0) return;
          best = std::max(best, degree);
        });
  }
  return best;
}

std::map<int, int> table_class_counts(const std::vector<CosetTable>& tables) {
  std::map<int, int> counts;
  for (const CosetTable& t : tables) ++counts[static_cast<int>(t.index())];
  return counts;
}

std::vector<Word> parse_words(const Presentation& p,
                              std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* text : texts) out.push_back(parse_word(text, p.generators));
  return out;
}

}  // namespace

TEST_CASE("coset_enumerate pinned examples") {
  SUBCASE("index-2 subgroup of the free group of rank 2") {
    const Presentation f2 = parse_presentation("< x, y | >");
    const auto subgens = parse_words(f2, {"x^2", "y", "x y x^-1"});
    const CosetTable t = coset_enumerate(f2, subgens);
    CHECK(t.index() == 2);
    CHECK(t.index() == oracle_index(f2, subgens, 4));
  }
  SUBCASE("index-2 subgroup of a one-relator orbifold group") {
    const Presentation p = parse_presentation("< x, y | ([x,y])^2 >");
    const auto subgens = parse_words(p, {"x", "y^2", "y x y^-1"});
    const CosetTable t = coset_enumerate(p, subgens);
    CHECK(t.index() == 2);
    CHECK(t.index() == oracle_index(p, subgens, 4));
  }
  SUBCASE("the whole group has index 1") {
    for (const Presentation& p :
         {surface_presentation(2), free_presentation(3),
          orbifold_presentation({1, {2, 3}})}) {
      std::vector<Word> gens;
      for (const GeneratorSymbol& g : p.generators)
        gens.push_back(Word::single(g));
      CHECK(coset_enumerate(p, gens).index() == 1);
    }
  }
}

TEST_CASE("coset_enumerate handles coincidence collapse") {
  SUBCASE("gcd of relator powers") {
    const Presentation p = parse_presentation("< x | x^2, x^3 >");
    CHECK(coset_enumerate(p, {}).index() == 1);
  }
  SUBCASE("a presentation of the trivial group") {
    const Presentation p =
        parse_presentation("< x, y | x y x^-1 y^-2, y x y^-1 x^-2 >");
    CHECK(coset_enumerate(p, {}).index() == 1);
  }
  SUBCASE("finite cyclic quotients") {
    const Presentation p = parse_presentation("< x | x^12 >");
    const auto subgens = parse_words(p, {"x^4"});
    CHECK(coset_enumerate(p, subgens).index() == 4);
  }
}

TEST_CASE("coset_enumerate overflow is an error") {
  const Presentation p = parse_presentation("< x, y | >");
  CHECK_THROWS_AS(coset_enumerate(p, {}, 50), EnumerationOverflow);
  CHECK_THROWS_AS(coset_enumerate(p, {}, 1), EnumerationOverflow);
}

TEST_CASE("coset_enumerate rejects foreign words") {
  const Presentation p = parse_presentation("< x | x^4 >");
  const Presentation q = parse_presentation("< y | >");
  const auto subgens = parse_words(q, {"y"});
  CHECK_THROWS_AS(coset_enumerate(p, subgens, 100), std::invalid_argument);
}

TEST_CASE("coset tables are deterministic and standardized") {
  const Presentation p = parse_presentation("< x, y | ([x,y])^2 >");
  const auto subgens = parse_words(p, {"x", "y^2", "y x y^-1"});
  const CosetTable a = coset_enumerate(p, subgens);
  const CosetTable b = coset_enumerate(p, subgens);
  CHECK(a == b);
  CHECK(a.flat() == b.flat());
  a.validate();
}

TEST_CASE("low_index_subgroups pinned counts") {
  SUBCASE("free(2) has 3 subgroups of index 2") {
    const auto tables = low_index_subgroups(free_presentation(2), 2);
    CHECK(table_class_counts(tables) == std::map<int, int>{{1, 1}, {2, 3}});
  }
  SUBCASE("cyclic(3) has no index-2 subgroup") {
    const auto tables = low_index_subgroups(cyclic_presentation(3), 2);
    CHECK(table_class_counts(tables) == std::map<int, int>{{1, 1}});
  }
  SUBCASE("surface(2) has 15 subgroups of index 2") {
    const auto tables = low_index_subgroups(surface_presentation(2), 2);
    CHECK(table_class_counts(tables) == std::map<int, int>{{1, 1}, {2, 15}});
  }
}

TEST_CASE("low_index_subgroups matches the permutation-representation oracle") {
  const std::vector<std::pair<Presentation, int>> cases{
      {free_presentation(1), 4},
      {free_presentation(2), 4},
      {free_presentation(3), 3},
      {cyclic_presentation(2), 4},
      {cyclic_presentation(3), 4},
      {cyclic_presentation(6), 4},
      {free_abelian_presentation(2), 4},
      {surface_presentation(1), 4},
      {surface_presentation(2), 3},
      {orbifold_presentation({1, {2}}), 4},
      {orbifold_presentation({1, {2, 3}}), 4},
      {parse_presentation("< x, y | ([x,y])^2 >"), 4},
      {product_presentation(surface_presentation(1), cyclic_presentation(2)), 3},
      {parse_presentation("< x, y | x^2 y^2 >"), 4},
  };
  for (const auto& [p, max_index] : cases) {
    CAPTURE(to_string(p));
    const auto tables = low_index_subgroups(p, max_index);
    std::map<int, int> got;
    for (int d = 1; d <= max_index; ++d) got[d] = 0;
    for (const CosetTable& t : tables) ++got[static_cast<int>(t.index())];
    CHECK(got == oracle_class_counts(p, max_index));
    for (const CosetTable& t : tables) t.validate();
  }
}

TEST_CASE("low_index tables are canonical conjugacy representatives") {
  const auto tables = low_index_subgroups(free_presentation(2), 3);
  std::set<std::vector<std::int32_t>> flats;
  for (const CosetTable& t : tables) CHECK(flats.insert(t.flat()).second);
  // Index-3 subgroups of F2: 13 subgroups in 7 conjugacy classes.
  CHECK(table_class_counts(tables) ==
        std::map<int, int>{{1, 1}, {2, 3}, {3, 7}});
}

TEST_CASE("reidemeister_schreier pinned examples") {
  SUBCASE("surface(2) index 2 gives 7 generators and 2 relators") {
    const Presentation p = surface_presentation(2);
    const auto tables = low_index_subgroups(p, 2);
    REQUIRE(tables.size() == 16);
    for (const CosetTable& t : tables) {
      if (t.index() != 2) continue;
      const RewrittenPresentation sub = reidemeister_schreier(p, t);
      CHECK(sub.generator_count() == 7);
      CHECK(sub.relator_count() == 2);
      const auto ab = abelianization(sub.simplified());
      CHECK(ab.b1 == 6);
      CHECK(ab.torsion.empty());
    }
  }
  SUBCASE("free(2) index 2 gives the free group of rank 3") {
    const Presentation p = parse_presentation("< x, y | >");
    const auto subgens = parse_words(p, {"x^2", "y", "x y x^-1"});
    const CosetTable t = coset_enumerate(p, subgens);
    const RewrittenPresentation sub = reidemeister_schreier(p, t);
    CHECK(sub.generator_count() == 3);
    CHECK(sub.relator_count() == 0);
    CHECK(sub.transversal.size() == 2);
    // Schreier generators of the kernel of x -> 1, y -> 0 mod 2.
    CHECK(sub.generator_images ==
          parse_words(p, {"y", "x^2", "x y x^-1"}));
  }
  SUBCASE("index 1 reproduces the presentation up to renaming") {
    const Presentation p = orbifold_presentation({1, {2, 3}});
    std::vector<Word> gens;
    for (const GeneratorSymbol& g : p.generators) gens.push_back(Word::single(g));
    const CosetTable t = coset_enumerate(p, gens);
    const RewrittenPresentation sub = reidemeister_schreier(p, t);
    CHECK(sub.generator_count() == p.generator_count());
    CHECK(sub.relator_count() == p.relator_count());
    for (std::size_t g = 0; g < p.generator_count(); ++g)
      CHECK(sub.generator_images[g] == Word::single(p.generators[g]));
    // Rewriting is the renaming x_i -> s_i.
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      CHECK(sub.relators[r].letter_length() == p.relators[r].letter_length());
    }
  }
}

TEST_CASE("rewritten relator slots keep the b*d count") {
  // In Z^2 the index-2 subgroup generated by x and y^2 rewrites the single
  // commutator relator into two slots, none of which is trivial here.
  const Presentation p = surface_presentation(1);
  const auto subgens = parse_words(p, {"x1", "y1^2"});
  const CosetTable t = coset_enumerate(p, subgens);
  const RewrittenPresentation sub = reidemeister_schreier(p, t);
  CHECK(sub.relator_count() == 2);
  CHECK(sub.relator_count() ==
        sub.trivial_relator_count() + sub.simplified().relator_count());
}

TEST_CASE("rs_counts") {
  CHECK(rs_counts(2, 1, 3) == RSCounts{4, 3, 1});
  for (std::int64_t a = 1; a <= 5; ++a)
    for (std::int64_t b = 0; b <= 4; ++b)
      CHECK(rs_counts(a, b, 1) == RSCounts{a, b, a - b});
  CHECK(rs_counts(4, 1, 2) == RSCounts{7, 2, 5});
  CHECK_THROWS_AS(rs_counts(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rs_counts(1, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(rs_counts(1, 0, 0), std::invalid_argument);
}

TEST_CASE("rs_counts deficiency growth under passage to finite index") {
  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b)
      for (std::int64_t d = 1; d <= 10; ++d) {
        const RSCounts counts = rs_counts(a, b, d);
        CHECK(1 - counts.generators + counts.relators == d * (1 - a + b));
        if (a - b >= 3) CHECK(counts.deficiency_lower >= 2);
        if (a - b >= 2) CHECK(counts.deficiency_lower >= 1);
      }
}

TEST_CASE("rewritten counts match rs_counts across enumerated subgroups") {
  const std::vector<Presentation> pool{
      surface_presentation(2),
      orbifold_presentation({1, {2}}),
      free_presentation(2),
      product_presentation(surface_presentation(1), cyclic_presentation(2)),
  };
  int pairs = 0;
  for (const Presentation& p : pool) {
    const std::int64_t a = static_cast<std::int64_t>(p.generator_count());
    const std::int64_t b = static_cast<std::int64_t>(p.relator_count());
    for (const CosetTable& t : low_index_subgroups(p, 3)) {
      const RewrittenPresentation sub = reidemeister_schreier(p, t);
      const RSCounts expected = rs_counts(a, b, t.index());
      CHECK(static_cast<std::int64_t>(sub.generator_count()) == expected.generators);
      CHECK(static_cast<std::int64_t>(sub.relator_count()) == expected.relators);
      ++pairs;
    }
  }
  CHECK(pairs >= 20);
}

TEST_CASE("schreier generators stabilize coset 0 and describe the subgroup") {
  const Presentation p = parse_presentation("< x, y | ([x,y])^3 >");
  for (const CosetTable& t : low_index_subgroups(p, 3)) {
    for (const Word& w : t.subgroup_generators()) CHECK(t.trace(0, w) == 0);
    // Re-enumerating against the Schreier generators reproduces the table.
    const std::vector<Word> gens(t.subgroup_generators().begin(),
                                 t.subgroup_generators().end());
    const CosetTable again = coset_enumerate(p, gens);
    CHECK(again.index() == t.index());
    CHECK(again.flat() == t.flat());
  }
}
