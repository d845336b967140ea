#include <doctest.h>

#include <random>

#include "ggslab/error.hpp"
#include "ggslab/words.hpp"
#include "oracles.hpp"

using namespace ggslab;

namespace {

// Reference reduction in C_p * C_p: repeatedly merge equal neighbours and drop
// trivial factors until nothing changes.
std::vector<std::pair<bool, int>> reduce_ref(const oracle::Raw& raw, int p) {
  std::vector<std::pair<bool, int>> w;
  for (auto [b, k] : raw) w.emplace_back(b, oracle::mod(k, p));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<bool, int>> next;
    for (auto f : w) {
      if (f.second == 0) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().first == f.first) {
        next.back().second = (next.back().second + f.second) % p;
        changed = true;
        continue;
      }
      next.push_back(f);
    }
    w = std::move(next);
  }
  return w;
}

std::vector<std::pair<bool, int>> flatten(const GroupWord& w) {
  std::vector<std::pair<bool, int>> out;
  if (w.leading_a()) out.emplace_back(false, w.leading_a());
  for (auto s : w.body()) {
    out.emplace_back(true, s.beta);
    if (s.alpha) out.emplace_back(false, s.alpha);
  }
  return out;
}

std::vector<Factor> to_factors(const oracle::Raw& raw) {
  std::vector<Factor> f;
  for (auto [b, k] : raw) f.push_back({b ? Gen::b : Gen::a, k});
  return f;
}

}  // namespace

TEST_CASE("normalize examples") {
  const std::vector<Factor> r1{{Gen::a, 1}, {Gen::a, 2}};
  CHECK(normalize(r1, 3).is_identity());
  const std::vector<Factor> r2{{Gen::b, 1}, {Gen::a, 0}, {Gen::b, 2}};
  CHECK(normalize(r2, 3).is_identity());
  const std::vector<Factor> r3{{Gen::a, 1}, {Gen::b, 1}, {Gen::a, 1}, {Gen::b, 1}};
  const auto w = normalize(r3, 3);
  CHECK(w.leading_a() == 1);
  CHECK(w.body().size() == 2);
  CHECK(w.body()[0] == BSyllable{1, 1});
  CHECK(w.body()[1] == BSyllable{1, 0});
  CHECK(syllable_length(w) == 2);
}

TEST_CASE("syllable length examples") {
  CHECK(syllable_length(GroupWord(3)) == 0);
  CHECK(syllable_length(parse_word("b", 3)) == 1);
  CHECK(syllable_length(parse_word("a b a b^2 a^-1", 3)) == 2);
}

TEST_CASE("concat examples") {
  const int p = 5;
  CHECK(concat(parse_word("b", p), parse_word("b^4", p)).is_identity());
  const auto ab = concat(parse_word("a", p), parse_word("b", p));
  CHECK(to_string(ab) == "a b");
  CHECK(syllable_length(ab) == 1);
  const auto w = concat(parse_word("a b", p), parse_word("b^4 a", p));
  CHECK(w == parse_word("a^2", p));
  CHECK(syllable_length(w) == 0);
  CHECK_THROWS_AS(concat(parse_word("a", 3), parse_word("a", 5)), InputError);
}

TEST_CASE("invert examples") {
  CHECK(invert(GroupWord(3)).is_identity());
  CHECK(invert(parse_word("b", 5)) == parse_word("b^4", 5));
  CHECK(to_string(invert(parse_word("a b", 3))) == "b^2 a^2");
}

TEST_CASE("parsing and printing") {
  CHECK(to_string(parse_word("a b^2 a^-1 b", 3)) == "a b^2 a^2 b");
  CHECK(to_string(parse_word("", 3)) == "1");
  CHECK(parse_word("1", 3).is_identity());
  CHECK(parse_word("  a^10  ", 3) == parse_word("a", 3));
  CHECK_THROWS_AS(parse_word("c", 3), InputError);
  CHECK_THROWS_AS(parse_word("a^", 3), InputError);
  CHECK_THROWS_AS(parse_word("a^x", 3), InputError);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const auto w = random_word(5, 6, rng);
    CHECK(parse_word(to_string(w), 5) == w);
  }
}

TEST_CASE("random words") {
  CHECK(syllable_length(random_word(3, 0, std::uint64_t{9})) == 0);
  CHECK(random_word(5, 4, std::uint64_t{42}) == random_word(5, 4, std::uint64_t{42}));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const auto w = random_word(3 + 2 * (k % 2), 4, rng);
    CHECK(syllable_length(w) <= 4);
    CHECK(is_normal_form(w.modulus(), w.leading_a(), w.body()));
  }
}

TEST_CASE("normal form invariants checker") {
  const std::vector<BSyllable> bad_beta{{0, 1}};
  CHECK_FALSE(is_normal_form(3, 0, bad_beta));
  const std::vector<BSyllable> bad_interior{{1, 0}, {1, 0}};
  CHECK_FALSE(is_normal_form(3, 0, bad_interior));
  const std::vector<BSyllable> good{{1, 2}, {2, 0}};
  CHECK(is_normal_form(3, 1, good));
  CHECK_FALSE(is_normal_form(3, 3, good));
}

TEST_CASE("normalize agrees with the reference reduction") {
  std::mt19937_64 rng(2);
  for (int p : {3, 5, 7}) {
    for (int k = 0; k < 2000; ++k) {
      const auto raw = oracle::random_raw(p, 12, rng);
      const auto w = normalize(to_factors(raw), p);
      REQUIRE(flatten(w) == reduce_ref(raw, p));
      // idempotent on its own expansion
      REQUIRE(normalize(w.expand(), p) == w);
    }
  }
}

TEST_CASE("word-level group laws") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10000; ++k) {
    const int p = k % 2 ? 3 : 5;
    const auto x = random_word(p, 5, rng), y = random_word(p, 5, rng), z = random_word(p, 5, rng);
    REQUIRE(syllable_length(concat(x, y)) <= syllable_length(x) + syllable_length(y));
    REQUIRE(concat(concat(x, y), z) == concat(x, concat(y, z)));
    REQUIRE(invert(invert(x)) == x);
    REQUIRE(concat(x, invert(x)).is_identity());
    REQUIRE(concat(GroupWord(p), x) == x);
    REQUIRE(concat(x, GroupWord(p)) == x);
    REQUIRE((concat(x, y).a_total()) == (x.a_total() + y.a_total()) % p);
    REQUIRE((concat(x, y).b_total()) == (x.b_total() + y.b_total()) % p);
  }
}
