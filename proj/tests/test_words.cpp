#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "sbm/word.hpp"

using namespace sbm;

TEST_CASE("parse maps tokens to letters") {
  Word w = parse("s1 s2- x1", 3);
  REQUIRE(w.letters() == std::vector<Letter>{sigma(1), sigma_inv(2), singular(1)});
  REQUIRE(parse("", 2).empty());
  REQUIRE(parse("  s1   x1 ", 2).size() == 2);
}

TEST_CASE("parse rejects bad input") {
  REQUIRE_THROWS_AS(parse("x3", 3), ParseError);
  REQUIRE_THROWS_AS(parse("s0", 3), ParseError);
  REQUIRE_THROWS_AS(parse("y1", 3), ParseError);
  REQUIRE_THROWS_AS(parse("s", 3), ParseError);
  REQUIRE_THROWS_AS(parse("x1-", 3), ParseError);
  REQUIRE_THROWS_AS(parse("s1", 1), ParseError);
}

TEST_CASE("format inverts parse") {
  REQUIRE(format(parse("s1 s2- x1", 3)) == "s1 s2- x1");
  REQUIRE(format(parse("", 2)).empty());
  REQUIRE(format(parse("x2 x2", 3)) == "x2 x2");

  th::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Word w = th::random_word(rng, 2 + static_cast<int>(rng.below(4)), static_cast<int>(rng.below(9)),
                             true, true);
    REQUIRE(parse(format(w), w.ctx().n) == w);
  }
}

TEST_CASE("degrees") {
  REQUIRE(degrees(parse("x1 s1 x2 s1-", 3)) == Degrees{0, 2, 2});
  REQUIRE(degrees(parse("", 2)) == Degrees{0, 0, 0});
  REQUIRE(degrees(parse("s1 s2 s1", 3)) == Degrees{3, 0, 3});

  th::Rng rng(12);
  for (int k = 0; k < 200; ++k) { // homomorphism
    Word u = th::random_word(rng, 4, static_cast<int>(rng.below(7)), true, true);
    Word v = th::random_word(rng, 4, static_cast<int>(rng.below(7)), true, true);
    Degrees du = degrees(u), dv = degrees(v), duv = degrees(concat(u, v));
    REQUIRE(duv.sigma == du.sigma + dv.sigma);
    REQUIRE(duv.x == du.x + dv.x);
    REQUIRE(duv.total == du.total + dv.total);
  }
}

TEST_CASE("reflect") {
  REQUIRE(reflect(parse("s1 x2", 4)) == parse("s3 x2", 4));
  th::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    Word w = th::random_word(rng, 2, static_cast<int>(rng.below(7)), true, true);
    REQUIRE(reflect(w) == w); // n=2 fixes everything
  }
  for (int k = 0; k < 100; ++k) {
    Word w = th::random_word(rng, 5, static_cast<int>(rng.below(9)), true, true);
    REQUIRE(reflect(reflect(w)) == w);
    REQUIRE(degrees(reflect(w)) == degrees(w));
    REQUIRE(reflect(w).size() == w.size());
  }
}

TEST_CASE("lex order") {
  auto pw = [](const char* t, int n) { return parse_positive(t, n); };
  REQUIRE(lex_compare(pw("s1 s2 s1", 3), pw("s2 s1 s2", 3)) == std::strong_ordering::less);
  REQUIRE(lex_compare(pw("s2", 3), pw("x1", 3)) == std::strong_ordering::less);
  REQUIRE(lex_compare(pw("x1 s2", 3), pw("x1 s2", 3)) == std::strong_ordering::equal);
  REQUIRE(lex_compare(pw("s1", 3), pw("s1 s1", 3)) == std::strong_ordering::less); // prefix first
  REQUIRE_THROWS_AS(lex_compare(pw("s1", 3), pw("s1", 4)), ContextMismatch);

  // total order on a sample: antisymmetric and transitive
  auto words = th::all_positive_words(3, 3);
  for (std::size_t i = 0; i < words.size(); i += 7)
    for (std::size_t j = 0; j < words.size(); j += 5) {
      auto ij = lex_compare(words[i], words[j]);
      auto ji = lex_compare(words[j], words[i]);
      if (ij == std::strong_ordering::equal) {
        REQUIRE(words[i] == words[j]);
      } else {
        REQUIRE(((ij == std::strong_ordering::less) != (ji == std::strong_ordering::less)));
      }
    }
}

TEST_CASE("invert") {
  REQUIRE(invert(parse("s1 s2-", 3)) == parse("s2 s1-", 3));
  REQUIRE(invert(parse("", 3)).empty());
  REQUIRE_THROWS_AS(invert(parse("x1", 3)), NonInvertible);

  // w * invert(w) free-reduces to the identity
  th::Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    Word w = th::random_word(rng, 4, 1 + static_cast<int>(rng.below(6)), true, false);
    std::vector<Letter> stack;
    for (const Letter& l : concat(w, invert(w)).letters()) {
      if (!stack.empty() && stack.back().index == l.index && stack.back().kind != l.kind)
        stack.pop_back();
      else
        stack.push_back(l);
    }
    REQUIRE(stack.empty());
  }
}

TEST_CASE("positive word invariant") {
  REQUIRE_THROWS_AS(PositiveWord(parse("s1-", 3)), ParseError);
  REQUIRE(PositiveWord(parse("s1 x1", 3)).size() == 2);
}
