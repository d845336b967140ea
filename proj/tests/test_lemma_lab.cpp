#include <doctest.h>

#include <random>

#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"
#include "ggslab/lemma_lab.hpp"

using namespace ggslab;
using namespace ggslab::lab;

namespace {

Element E(const GgsGroup& G, const char* w) { return parse_element(G, w); }

// n_u, m_u straight from the sections, with no shortcut.
std::pair<std::vector<int>, std::vector<int>> profile_by_hand(const Element& g) {
  const int p = g.group().p();
  std::vector<int> n(static_cast<std::size_t>(p)), m(static_cast<std::size_t>(p));
  for (int u = 0; u < p; ++u) {
    const auto w = section(g, u).word();
    std::vector<Factor> f = w.expand();
    int al = 0, be = 0;
    for (const auto& x : f) (x.gen == Gen::a ? al : be) += static_cast<int>(x.exponent);
    n[static_cast<std::size_t>(u)] = ((al % p) + p) % p;
    m[static_cast<std::size_t>(u)] = ((be % p) + p) % p;
  }
  return {n, m};
}

}  // namespace

TEST_CASE("profile of b and its conjugate") {
  for (const auto& G : {make_ggs(3, {1, 1}), make_ggs(5, {1, 0, 2, 4})}) {
    const int p = G.p();
    const auto prof = exponent_profile(gen_b(G));
    CHECK(prof.t == 1);
    for (int u = 0; u < p; ++u) {
      CHECK(prof.m[u] == (u == 0 ? 1 : 0));
      CHECK(prof.n[u] == G.e(u));
    }
    const auto shifted = exponent_profile(conjugate(gen_b(G), gen_a(G)));
    for (int u = 0; u < p; ++u) {
      CHECK(shifted.m[(u + 1) % p] == prof.m[u]);
      CHECK(shifted.n[(u + 1) % p] == prof.n[u]);
    }
  }
}

TEST_CASE("profile of b b^a for the constant group, p = 3") {
  const auto G = make_ggs(3, {1, 1});
  const auto prof = exponent_profile(gen_b(G) * conjugate(gen_b(G), gen_a(G)));
  // residues 0, 1, 2 are the letters 3, 1, 2
  CHECK(prof.m == std::vector<int>{1, 1, 0});
  CHECK(prof.n == std::vector<int>{1, 1, 2});
  CHECK(prof.t == 2);
}

TEST_CASE("profile routes agree with a direct section count") {
  std::mt19937_64 rng(41);
  for (const auto& G : {make_ggs(3, {1, 1}), make_ggs(3, {1, 0}), make_ggs(5, {1, 2, 0, 0}), make_ggs(5, {1, 2, 3, 4})}) {
    for (int k = 0; k < 300; ++k) {
      const auto g = random_stabilizer_element(G, rng);
      const auto [n, m] = profile_by_hand(g);
      const auto a = profile_from_sections(g), b = profile_from_conjugates(g);
      REQUIRE(a.n == n);
      REQUIRE(a.m == m);
      REQUIRE(b.n == n);
      REQUIRE(b.m == m);
    }
  }
}

TEST_CASE("profile preconditions") {
  const auto G = make_ggs(3, {1, 1});
  CHECK_THROWS_AS(exponent_profile(gen_a(G)), PreconditionError);
  CHECK_THROWS_AS(exponent_profile(E(G, "b a b^2 a^2")), PreconditionError);
}

TEST_CASE("case classification") {
  for (const auto& G : {make_ggs(3, {1, 1}), make_ggs(5, {1, 0, 2, 4})}) {
    const auto v = classify_case(exponent_profile(gen_b(G)), G.lambda());
    CHECK(v.tag == CaseVerdict::Tag::case1);
    CHECK(v.u == 0);
    CHECK(v.j0 == 1);
  }
  ExponentProfile degenerate{3, {0, 0, 0}, {1, 1, 1}, 0};
  CHECK_THROWS_AS(classify_case(degenerate, 2), PreconditionError);
  CHECK_THROWS_AS(classify_case(exponent_profile(gen_b(make_ggs(3, {1, 2}))), 0), PreconditionError);
}

TEST_CASE("case 2 witnesses on a constructed element") {
  // b^2 (b^2)^a in the constant group, p = 3: m = (1,2,0), n = (2,1,0) up to order
  const auto G = make_ggs(3, {1, 1});
  const auto g = gen_b(G, 2) * b_conjugate(G, 2, 1);
  const auto prof = exponent_profile(g);
  const auto v = classify_case(prof, G.lambda());
  if (v.tag == CaseVerdict::Tag::case2) {
    CHECK(v.unbalanced[0] != v.unbalanced[1]);
    CHECK(v.b_carrying[0] != v.b_carrying[1]);
  } else {
    CHECK(prof.n[v.u] == 0);
    CHECK(prof.m[v.u] != 0);
  }
}

TEST_CASE("derived products") {
  std::mt19937_64 rng(43);
  for (const auto& G : {make_ggs(3, {1, 2}), make_ggs(3, {1, 1}), make_ggs(5, {1, 0, 2, 4})}) {
    const auto c = commutator(gen_a(G), gen_b(G));
    CHECK(check_derived_product(c));
    CHECK(check_derived_product(conjugate(c, gen_a(G))));
    for (int k = 0; k < 100; ++k) {
      const auto g = random_derived_element(G, rng);
      REQUIRE(abelianize(g) == std::pair{0, 0});
      REQUIRE(check_derived_product(g));
    }
  }
}

TEST_CASE("propagation examples") {
  const auto C = make_ggs(3, {1, 1});
  CHECK(check_propagates(gen_a(C)).verdict == Verdict::pass);
  const auto r = check_propagates(gen_a(C) * gen_b(C));
  CHECK(r.verdict == Verdict::pass);
  for (const auto& s : r.section_abelianizations) CHECK(s == std::pair{2, 1});

  const auto G = make_ggs(5, {1, 0, 2, 4});
  const auto r5 = check_propagates(E(G, "a^2 b"));
  CHECK(r5.verdict == Verdict::pass);
  REQUIRE(r5.section_abelianizations.size() == 5);
  for (const auto& s : r5.section_abelianizations) CHECK(s == std::pair{2, 1});

  const auto bounded = check_propagates(gen_a(C) * gen_b(C), 6);
  CHECK(bounded.length_bound_holds == true);

  CHECK_THROWS_AS(check_propagates(gen_b(C)), PreconditionError);
  CHECK_THROWS_AS(check_propagates(gen_a(make_ggs(3, {1, 2}))), PreconditionError);
}

TEST_CASE("infinite order trace") {
  const auto C = make_ggs(3, {1, 1});
  const auto t = infinite_order_trace(gen_a(C) * gen_b(C), 5);
  REQUIRE(t.size() == 6);
  CHECK(t[0] == std::pair{1, 1});
  for (std::size_t s = 1; s < t.size(); ++s) CHECK(t[s] == std::pair{2, 1});

  const auto G = make_ggs(5, {1, 0, 2, 4});
  const auto t5 = infinite_order_trace(gen_a(G) * gen_b(G), 4);
  for (std::size_t s = 1; s < t5.size(); ++s) CHECK(t5[s] == std::pair{2, 1});

  CHECK_THROWS_AS(infinite_order_trace(gen_a(make_ggs(3, {1, 2})) * gen_b(make_ggs(3, {1, 2})), 3),
                  PreconditionError);
}

TEST_CASE("section less than half on constructed case 2 elements") {
  // x = b^i1 (b^j1)^(a^v) b^i2 (b^j2)^(a^v), four b-syllables. With a sparse
  // vector such as (1,2,0,0) every element of this shape is in Case 1.
  const auto G = make_ggs(5, {1, 1, 1, 1});
  int confirmed = 0;
  for (int i1 = 1; i1 < 5 && confirmed < 5; ++i1)
    for (int j1 = 1; j1 < 5 && confirmed < 5; ++j1)
      for (int i2 = 1; i2 < 5 && confirmed < 5; ++i2)
        for (int j2 = 1; j2 < 5 && confirmed < 5; ++j2)
          for (int v = 1; v < 5 && confirmed < 5; ++v) {
            const auto x = gen_b(G, i1) * b_conjugate(G, j1, v) * gen_b(G, i2) * b_conjugate(G, j2, v);
            if (abelianize(x).second == 0) continue;
            const auto r = check_section_less_than_half(x, 4);
            if (r.verdict == Verdict::skipped) continue;
            REQUIRE(r.verdict == Verdict::pass);
            REQUIRE(r.length == 4u);
            ++confirmed;
          }
  CHECK(confirmed == 5);
}

TEST_CASE("section less than half skips outside its hypotheses") {
  const auto C = make_ggs(3, {1, 1});
  CHECK(check_section_less_than_half(gen_a(C)).verdict == Verdict::skipped);
  CHECK(check_section_less_than_half(gen_b(C)).verdict == Verdict::skipped);  // case 1
  CHECK(check_section_less_than_half(gen_b(make_ggs(3, {1, 2}))).verdict == Verdict::skipped);
}

TEST_CASE("length contraction on random stabilizer elements") {
  std::mt19937_64 rng(47);
  for (const auto& G : {make_ggs(3, {1, 2}), make_ggs(3, {1, 1}), make_ggs(5, {1, 0, 2, 4})}) {
    int certified = 0;
    for (int k = 0; k < 60; ++k) {
      const auto r = check_length_contraction(random_stabilizer_element(G, rng, 4), 4);
      REQUIRE(r.verdict != Verdict::fail);
      certified += r.verdict == Verdict::pass;
    }
    CHECK(certified > 0);
  }
  CHECK(check_length_contraction(gen_a(make_ggs(3, {1, 1}))).verdict == Verdict::skipped);
}

TEST_CASE("interval lemma") {
  for (int p : {5, 7, 11, 13}) {
    const auto s = interval_lemma_scan(p);
    CHECK(s.counterexamples.empty());
    CHECK(s.quadruples == static_cast<std::size_t>((p - 1) * (p - 3) * p * (p - 1)));
    CHECK(s.hypothesis_met > 0);
  }
  CHECK_THROWS_AS(interval_lemma_scan(3), PreconditionError);
  CHECK_THROWS_AS(interval_lemma_scan(9), InputError);
}

TEST_CASE("commutator tuple and k-generator identities") {
  for (int p : {3, 5, 7}) {
    const auto C = make_ggs(p, std::vector<std::int64_t>(static_cast<std::size_t>(p - 1), 1));
    CHECK(commutator_tuple_identity(C));
    CHECK(k_generator_identity(C));
  }
  CHECK(commutator_tuple_identity(make_ggs(5, {1, 0, 2, 4})));
  CHECK_THROWS_AS(k_generator_identity(make_ggs(3, {1, 2})), PreconditionError);
}

TEST_CASE("b conjugates and random generators") {
  const auto G = make_ggs(5, {1, 0, 2, 4});
  for (int l = 0; l < 5; ++l) {
    const auto s = psi(b_conjugate(G, 3, l));
    for (int x = 0; x < 5; ++x) {
      const int letter_pos = x == 0 ? 4 : x - 1;
      CHECK((s[letter_pos].word().b_total() != 0) == (x == l));
    }
  }
  std::mt19937_64 rng(53);
  for (int k = 0; k < 200; ++k) CHECK(root_permutation_power(random_stabilizer_element(G, rng)) == 0);
}

TEST_CASE("circulant bridge on synthetic profiles") {
  // n_u = sum_j e_j m_{u-j}; n = lambda m forces sum m = 0
  for (const auto& G : {make_ggs(3, {1, 1}), make_ggs(3, {1, 0}), make_ggs(5, {1, 2, 0, 0}), make_ggs(5, {1, 1, 1, 1})}) {
    const int p = G.p(), lam = G.lambda();
    std::vector<std::int64_t> row(static_cast<std::size_t>(p));
    row[0] = -lam;
    for (int j = 1; j < p; ++j) row[static_cast<std::size_t>(j)] = G.e(j);
    CHECK(fp::circulant_rank(row, p) < p);
    int total = 1;
    for (int k = 0; k < p; ++k) total *= p;
    for (int code = 0; code < total; ++code) {
      std::vector<int> m(static_cast<std::size_t>(p));
      int c = code, sum = 0;
      for (auto& x : m) {
        x = c % p;
        c /= p;
        sum += x;
      }
      bool balanced = true;
      for (int u = 0; u < p; ++u) {
        int n = 0;
        for (int j = 1; j < p; ++j) n += G.e(j) * m[static_cast<std::size_t>((u - j + p) % p)];
        balanced = balanced && (n - lam * m[static_cast<std::size_t>(u)]) % p == 0;
      }
      if (balanced) REQUIRE(sum % p == 0);
    }
  }
}
