#include <random>

#include "catch_amalgamated.hpp"

#include "groupcode/error.hpp"
#include "groupcode/freegroup.hpp"
#include "oracles.hpp"

using namespace groupcode;

namespace {

Alphabet const ab = Alphabet::two_letter();

Word w(std::string_view text) {
  return parse_word(ab, text);
}

}  // namespace

TEST_CASE("alphabet validates names", "[freegroup]") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"a^"}), Error);
  CHECK_THROWS_AS(Alphabet({"x#"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);

  auto x = Alphabet::numbered("x_", 12);
  CHECK(x.size() == 12);
  CHECK(x.name(11) == "x_12");
  CHECK(x.find("x_3") == 2U);
  CHECK_FALSE(x.find("y").has_value());
}

TEST_CASE("reduce", "[freegroup]") {
  CHECK(to_string(reduce(w("a a^-1 b"))) == "b");
  CHECK(to_string(reduce(w("b a^-1 a b^-1 a"))) == "a");
  CHECK(to_string(reduce(w("a b"))) == "a b");
  CHECK(reduce(w("a b b^-1 a^-1")).empty());
}

TEST_CASE("invert", "[freegroup]") {
  CHECK(to_string(invert(w("a b^-1"))) == "b a^-1");
  CHECK(invert(Word(ab)).empty());
  CHECK(to_string(invert(w("a a"))) == "a^-1 a^-1");
}

TEST_CASE("free_multiply", "[freegroup]") {
  CHECK(to_string(free_multiply(w("a b"), w("b^-1 a"))) == "a a");
  CHECK(free_multiply(w("a"), w("a^-1")).empty());
  CHECK(to_string(free_multiply(w("b"), w("b"))) == "b b");
  CHECK_THROWS_AS(free_multiply(w("a"), parse_word(Alphabet({"a", "c"}), "c")), Error);
}

TEST_CASE("is_dyck", "[freegroup]") {
  CHECK(is_dyck(w("a b b^-1 a^-1")));
  CHECK(is_dyck(Word(ab)));
  CHECK_FALSE(is_dyck(w("a b a^-1")));
}

TEST_CASE("cyclic_decompose", "[freegroup]") {
  auto [u1, c1] = cyclic_decompose(w("a b a^-1"));
  CHECK(to_string(u1) == "a");
  CHECK(to_string(c1) == "b");

  auto [u2, c2] = cyclic_decompose(w("b a"));
  CHECK(u2.empty());
  CHECK(to_string(c2) == "b a");

  Word const g  = w("a b a b^-1 a^-1");
  auto [u3, c3] = cyclic_decompose(g);
  CHECK(to_string(u3) == "a b");
  CHECK(to_string(c3) == "a");
  CHECK(free_multiply(free_multiply(u3, c3), invert(u3)) == g);

  CHECK_THROWS_AS(cyclic_decompose(Word(ab)), Error);
  CHECK_THROWS_AS(cyclic_decompose(w("a a^-1")), Error);
}

TEST_CASE("word syntax", "[freegroup]") {
  CHECK(parse_word(ab, "1").empty());
  CHECK(parse_word(ab, "   ").empty());
  CHECK(to_string(parse_word(ab, "  a   b^-1 ")) == "a b^-1");
  CHECK_THROWS_AS(parse_word(ab, "c"), ParseError);
  CHECK_THROWS_AS(parse_word(ab, "a^2"), ParseError);

  Alphabet const one({"1", "2"});
  CHECK(parse_word(one, "1").size() == 1);

  CHECK(letter_names("x_2 x_10^-1 x_2") == std::vector<std::string>{"x_2", "x_10"});
  CHECK(letter_names("1").empty());
}

TEST_CASE("free group identities on random words", "[freegroup][property]") {
  std::mt19937 rng(11);
  Alphabet const abc({"a", "b", "c"});
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::uniform_int_distribution<std::size_t> code(0, 5);
  auto random_word = [&] {
    oracle::Key k(len(rng));
    for (auto& c : k) {
      c = code(rng);
    }
    return oracle::word(abc, k);
  };
  for (int trial = 0; trial < 2000; ++trial) {
    Word const u = random_word();
    Word const v = random_word();
    Word const x = random_word();

    Word const r = reduce(u);
    CHECK(oracle::key(r) == oracle::naive_reduce(oracle::key(u)));
    CHECK(reduce(r) == r);
    CHECK(is_reduced(r));
    CHECK(r.size() <= u.size());
    CHECK(reduce(concatenate(u, invert(u))).empty());
    CHECK(invert(invert(u)) == u);
    CHECK(free_multiply(free_multiply(u, v), x) == free_multiply(u, free_multiply(v, x)));
    CHECK(is_dyck(u) == oracle::naive_reduce(oracle::key(u)).empty());

    if (!r.empty()) {
      auto [p, c] = cyclic_decompose(r);
      CHECK(concatenate(concatenate(p, c), invert(p)) == r);
      CHECK(c.letters().front() != c.letters().back().inverse());
      for (std::size_t k = 1; k <= 3; ++k) {
        Word const g = concatenate(concatenate(p, power(c, k)), invert(p));
        CHECK(is_reduced(g));
      }
    }
  }
}
