#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbibraid/error.hpp"
#include "orbibraid/free_product.hpp"
#include "orbibraid/word.hpp"

using namespace orbibraid;

namespace {

Word random_word(std::mt19937& rng, const std::vector<std::string>& gens, int max_syllables,
                 int max_exp) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::vector<Syllable> syl;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = 0;
    while (e == 0) e = ex(rng);
    syl.push_back({gens[pick(rng)], e});
  }
  return Word(syl);
}

std::vector<oracle::Syl> to_oracle(const FreeProductContext& ctx, const Word& w) {
  std::vector<oracle::Syl> out;
  for (const auto& s : w.syllables()) out.push_back({ctx.factor_of(s.generator), s.exponent});
  return out;
}

// Compares a library normal form with the naive rewriting oracle, mapping
// exponents into [0, q) on finite factors.
bool same_element(const FreeProductContext& ctx, const NormalWord& nf, const std::vector<oracle::Syl>& o) {
  if (nf.syllables.size() != o.size()) return false;
  for (std::size_t i = 0; i < o.size(); ++i) {
    const auto& s = nf.syllables[i];
    if (s.factor != o[i].factor) return false;
    const auto& q = ctx.factor_orders()[s.factor];
    const std::int64_t e = q ? ((s.exponent % *q) + *q) % *q : s.exponent;
    if (e != o[i].exponent) return false;
  }
  return true;
}

oracle::Mat2 psl_image(const Word& w) {
  oracle::Mat2 m{1, 0, 0, 1};
  for (const auto& s : w.syllables()) m = oracle::mul(m, oracle::psl_generator(s.generator == "x1" ? 0 : 1, s.exponent));
  return m;
}

oracle::Affine dihedral_image(const Word& w) {
  oracle::Affine a;
  for (const auto& l : w.letters()) a = oracle::then(a, oracle::dihedral_generator(l.generator == "x1" ? 0 : 1));
  return a;
}

}  // namespace

TEST_CASE("word parsing and printing") {
  const Word w = Word::parse("x1 x2^-1 x1^3");
  REQUIRE(w.syllable_count() == 3);
  CHECK(w.syllables()[1] == Syllable{"x2", -1});
  CHECK(w.length() == 5);
  CHECK(w.to_string() == "x1 x2^-1 x1^3");
  CHECK(Word().to_string() == "1");
  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("x1^0"), InvariantViolation);
  CHECK_THROWS_AS(Word::parse("x1^"), InvariantViolation);
  CHECK_THROWS_AS(Word::parse("^2"), InvariantViolation);
}

TEST_CASE("free and cyclic reduction") {
  CHECK(Word::parse("a b b^-1 a^-1").freely_reduced().empty());
  CHECK(Word::parse("a a^2 b").freely_reduced() == Word::parse("a^3 b"));
  CHECK(Word::parse("a^-1 b a").cyclically_reduced() == Word::parse("b"));
  CHECK(Word::parse("a b a^-1 c a").cyclically_reduced() == Word::parse("a b a^-1 c a").freely_reduced().cyclically_reduced());
  CHECK(Word::parse("a^2 b a^-1").cyclically_reduced().length() == 2);
}

TEST_CASE("inverse, power and substitution") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Word w = random_word(rng, {"a", "b", "c"}, 6, 3);
    CHECK((w * w.inverse()).empty());
    CHECK(w.power(3) == (w * w * w));
    CHECK(w.power(-2) == (w.inverse() * w.inverse()));
    CHECK(w.exponent_sum("a") == -w.inverse().exponent_sum("a"));
  }
  const Word w = Word::parse("a b a^-1 c");
  CHECK(w.substitute("c", Word::parse("a b^-1 a^-1")).empty());
  CHECK(w.occurrences("a") == 2);
}

TEST_CASE("canonical relators identify rotations and inverses") {
  const Word r = Word::parse("a b a^-1 b^-1");
  CHECK(relators_equivalent(r, Word::parse("b a^-1 b^-1 a")));
  CHECK(relators_equivalent(r, r.inverse()));
  CHECK(relators_equivalent(r, Word::parse("x a b a^-1 b^-1 x^-1")));
  CHECK_FALSE(relators_equivalent(r, Word::parse("a b a^-1 b")));

  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Word w = random_word(rng, {"a", "b"}, 5, 2).cyclically_reduced();
    const auto letters = w.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      std::vector<Letter> rot(letters.begin() + static_cast<long>(k), letters.end());
      rot.insert(rot.end(), letters.begin(), letters.begin() + static_cast<long>(k));
      CHECK(canonical_relator(Word::from_letters(rot)) == canonical_relator(w));
    }
    CHECK(canonical_relator(w.inverse()) == canonical_relator(w));
  }
}

TEST_CASE("maximal root matches the prefix-power oracle") {
  CHECK(maximal_root(Word::parse("a b a^-1 b^-1 a b a^-1 b^-1")).exponent == 2);
  CHECK(maximal_root(Word::parse("a")).exponent == 1);
  CHECK(maximal_root(Word::parse("a^6")).exponent == 6);
  CHECK(maximal_root(Word::parse("a^6")).root == Word::parse("a"));

  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const Word base = random_word(rng, {"a", "b"}, 3, 2).cyclically_reduced();
    if (base.empty()) continue;
    const int k = 1 + t % 4;
    const Word w = base.power(k).cyclically_reduced();
    const RootDecomposition rd = maximal_root(w);
    CHECK(rd.exponent == oracle::max_power(w.letters()));
    CHECK(rd.root.power(rd.exponent) == w);
    CHECK(rd.exponent % k == 0);
  }
}

TEST_CASE("free product contexts") {
  CHECK_THROWS_AS(FreeProductContext({}), InvariantViolation);
  CHECK_THROWS_AS(FreeProductContext({1}), InvariantViolation);
  const FreeProductContext ctx({2, 3, kInfinite});
  CHECK(ctx.generator_name(2) == "x3");
  CHECK(ctx.factor_of("x2") == 1);
  CHECK_THROWS_AS((void)ctx.factor_of("y"), InvariantViolation);
  CHECK(ctx.reduce_exponent(1, 2) == -1);
  CHECK(ctx.reduce_exponent(0, 1) == 1);
  CHECK(ctx.reduce_exponent(0, -1) == 1);
  CHECK(ctx.reduce_exponent(2, -7) == -7);
  CHECK(FreeProductContext({4}).reduce_exponent(0, 2) == 2);
  CHECK(FreeProductContext({4}).reduce_exponent(0, -2) == 2);
}

TEST_CASE("normal forms on named examples") {
  const FreeProductContext z2z3({2, 3});
  CHECK(normal_form(z2z3, Word::parse("x1^3")) == normal_form(z2z3, Word::parse("x1")));
  CHECK(normal_form(z2z3, Word::parse("x1 x2 x2^2 x1")).identity());
  CHECK(normal_form(FreeProductContext({5}), Word::parse("x1^5")).identity());
  CHECK(to_string(z2z3, normal_form(z2z3, Word::parse("x2^2 x1^3"))) == "x2^-1 x1");
}

TEST_CASE("normal forms agree with naive rewriting") {
  std::mt19937 rng(5);
  const std::vector<std::vector<Order>> contexts{{2, 3}, {2, 2}, {3, 4, 5}, {2, kInfinite}, {5, 3, 2, 4}};
  for (const auto& orders : contexts) {
    const FreeProductContext ctx(orders);
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < orders.size(); ++i) gens.push_back(ctx.generator_name(i));
    for (int t = 0; t < 300; ++t) {
      const Word w = random_word(rng, gens, 10, 6);
      const NormalWord nf = normal_form(ctx, w);
      CHECK(same_element(ctx, nf, oracle::rewrite(to_oracle(ctx, w), orders)));
      for (std::size_t i = 0; i + 1 < nf.syllables.size(); ++i) CHECK(nf.syllables[i].factor != nf.syllables[i + 1].factor);
      for (const auto& s : nf.syllables) CHECK(s.exponent == ctx.reduce_exponent(s.factor, s.exponent));
      // Idempotent and multiplicative.
      CHECK(normal_form(ctx, to_word(ctx, nf)) == nf);
      const Word v = random_word(rng, gens, 6, 6);
      CHECK(multiply(ctx, nf, normal_form(ctx, v)) == normal_form(ctx, w * v));
      CHECK(multiply(ctx, nf, inverse(nf)).identity());
    }
  }
}

TEST_CASE("normal forms agree with PSL(2,Z)") {
  std::mt19937 rng(13);
  const FreeProductContext ctx({2, 3});
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, {"x1", "x2"}, 12, 4);
    CHECK(normal_form(ctx, w).identity() == oracle::psl_identity(psl_image(w)));
  }
}

TEST_CASE("element orders") {
  const FreeProductContext z2z3({2, 3});
  CHECK(element_order(z2z3, Word::parse("x1 x2")) == kInfinite);
  CHECK(element_order(FreeProductContext({6}), Word::parse("x1^2")) == Order{3});
  CHECK(element_order(FreeProductContext({2, 2}), Word::parse("x1 x2 x1")) == Order{2});
  CHECK(element_order(z2z3, Word()) == Order{1});
  CHECK(to_string(kInfinite) == "infinite");
  CHECK(to_string(Order{4}) == "4");
}

TEST_CASE("element orders agree with the infinite dihedral oracle") {
  std::mt19937 rng(17);
  const FreeProductContext ctx({2, 2});
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, {"x1", "x2"}, 9, 3);
    const Order o = element_order(ctx, w);
    const auto expected = oracle::dihedral_order(dihedral_image(w));
    CHECK(o == (expected ? Order{*expected} : kInfinite));
  }
}

TEST_CASE("element orders agree with PSL(2,Z) powers") {
  std::mt19937 rng(19);
  const FreeProductContext ctx({2, 3});
  for (int t = 0; t < 300; ++t) {
    const Word w = random_word(rng, {"x1", "x2"}, 8, 3);
    const Order o = element_order(ctx, w);
    const oracle::Mat2 m = psl_image(w);
    oracle::Mat2 p = m;
    std::optional<std::int64_t> found;
    for (std::int64_t k = 1; k <= 12 && !found; ++k) {
      if (oracle::psl_identity(p)) found = k;
      p = oracle::mul(p, m);
    }
    CHECK(o == (found ? Order{*found} : kInfinite));
  }
}

TEST_CASE("boundary words of length at least two have infinite order") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k), 2);
    while (true) {
      std::vector<Order> orders(idx.begin(), idx.end());
      const FreeProductContext ctx(orders);
      Word boundary;
      for (std::size_t i = 0; i < orders.size(); ++i) boundary = boundary * Word::generator(ctx.generator_name(i));
      CHECK(element_order(ctx, boundary) == (k >= 2 ? kInfinite : orders[0]));
      std::size_t pos = 0;
      while (pos < idx.size() && idx[pos] == 5) idx[pos++] = 2;
      if (pos == idx.size()) break;
      ++idx[pos];
    }
  }
}

TEST_CASE("cyclic reduction is conjugation") {
  std::mt19937 rng(23);
  const FreeProductContext ctx({2, 3, 4});
  for (int t = 0; t < 300; ++t) {
    const NormalWord nf = normal_form(ctx, random_word(rng, {"x1", "x2", "x3"}, 10, 3));
    const NormalWord c = cyclically_reduce(ctx, nf);
    CHECK(c.length() <= nf.length());
    if (c.length() >= 2) CHECK(c.syllables.front().factor != c.syllables.back().factor);
    CHECK(element_order(ctx, nf) == element_order(ctx, c));
  }
}

TEST_CASE("word enumeration") {
  const FreeProductContext ctx({2, 3});
  CentralizerSearchOptions opts;
  opts.max_syllables = 3;
  const auto words = enumerate_normal_words(ctx, opts);
  // 1 + 3 + (1*2 + 2*1) + (1*2*1 + 2*1*2) = 1 + 3 + 4 + 6
  CHECK(words.size() == 14);
  CHECK(count_normal_words(ctx, opts) == 14);
  CHECK(std::is_sorted(words.begin(), words.end()));
  opts.cap = 5;
  CHECK_THROWS_AS(enumerate_normal_words(ctx, opts), SearchTooLarge);
  opts.max_syllables = 0;
  CHECK_THROWS_AS(enumerate_normal_words(ctx, opts), InvariantViolation);
}

TEST_CASE("bounded centralizer search") {
  const FreeProductContext z2z3({2, 3});
  const auto c = bounded_centralizer_search(z2z3, Word::parse("x1"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].identity());
  CHECK(c[1] == normal_form(z2z3, Word::parse("x1")));

  CentralizerSearchOptions two;
  two.max_syllables = 2;
  CHECK(bounded_centralizer_search(z2z3, Word(), two).size() == count_normal_words(z2z3, two));

  // Centralizer of a translation in the infinite dihedral group is generated
  // by x1 x2; within four syllables that leaves its powers of length <= 4.
  const FreeProductContext d({2, 2});
  CentralizerSearchOptions four;
  four.max_syllables = 4;
  const auto cd = bounded_centralizer_search(d, Word::parse("x1 x2"), four);
  std::vector<NormalWord> expected;
  for (const auto& w : enumerate_normal_words(d, four)) {
    const oracle::Affine a = dihedral_image(to_word(d, w));
    if (a.sign == 1) expected.push_back(w);
  }
  CHECK(cd == expected);
  CHECK(cd.size() == 5);
}

TEST_CASE("bounded center search finds only the identity in PSL(2,Z)") {
  const FreeProductContext z2z3({2, 3});
  const auto center = bounded_center_search(z2z3);
  REQUIRE(center.size() == 1);
  CHECK(center[0].identity());
  // Oracle side: no element of length <= 6 commutes with both generators.
  std::size_t commuting = 0;
  for (const auto& w : enumerate_normal_words(z2z3, {})) {
    const oracle::Mat2 m = psl_image(to_word(z2z3, w));
    bool central = true;
    for (int f = 0; f < 2; ++f) {
      const oracle::Mat2 g = oracle::psl_generator(f, 1);
      central = central && oracle::psl_equal(oracle::mul(m, g), oracle::mul(g, m));
    }
    commuting += central ? 1 : 0;
  }
  CHECK(commuting == 1);
}
