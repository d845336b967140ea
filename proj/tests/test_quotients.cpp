#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ggslab/error.hpp"
#include "ggslab/quotients.hpp"
#include "oracles.hpp"

using namespace ggslab;

namespace {

oracle::Tree tree_of(const GgsGroup& G) {
  return {G.p(), std::vector<int>(G.defining_vector().begin(), G.defining_vector().end())};
}

oracle::Raw raw_of(const GroupWord& w) {
  oracle::Raw r;
  for (const auto& f : w.expand()) r.emplace_back(f.gen == Gen::b, f.exponent);
  return r;
}

}  // namespace

TEST_CASE("leaf indexing") {
  CHECK(leaf_index(parse_vertex("1.1", 3), 3) == 0);
  CHECK(leaf_index(parse_vertex("1.3", 3), 3) == 2);
  CHECK(leaf_index(parse_vertex("3.3", 3), 3) == 8);
  for (std::size_t i = 0; i < 125; ++i) CHECK(leaf_index(leaf_vertex(i, 5, 3), 5) == i);
}

TEST_CASE("projection examples") {
  const auto G = make_ggs(5, {1, 0, 2, 4});
  const auto a1 = project(gen_a(G), 1);
  for (std::uint32_t i = 0; i < 5; ++i) CHECK(a1.images[i] == (i + 1) % 5);
  CHECK(project(gen_b(G), 1).is_identity());
  CHECK(project(identity(G), 3).is_identity());
  CHECK(project(identity(G), 3).images.size() == 125);
}

TEST_CASE("projection agrees with the oracle, is a homomorphism and is tower compatible") {
  std::mt19937_64 rng(5);
  for (const auto& G : {make_ggs(3, {1, 2}), make_ggs(5, {1, 2, 0, 0})}) {
    const auto T = tree_of(G);
    for (int k = 0; k < 100; ++k) {
      const Element g(G, random_word(G.p(), 5, rng)), h(G, random_word(G.p(), 5, rng));
      for (int n = 1; n <= 3; ++n) {
        const auto pg = project(g, n);
        const auto want = T.permutation(raw_of(g.word()), n);
        REQUIRE(pg.images == Points(want.begin(), want.end()));
        REQUIRE(project(g * h, n) == pg * project(h, n));
        REQUIRE((pg * pg.inverse()).is_identity());
        if (n > 1) REQUIRE(block_image(pg, G.p()) == project(g, n - 1));
      }
    }
  }
}

TEST_CASE("first level quotient is cyclic of order p") {
  for (const auto& f : quotient_fixtures()) {
    const auto G = make_ggs(f.p, f.e);
    CHECK(level_quotient(G, 1).order().to_u64() == static_cast<std::uint64_t>(f.p));
  }
}

TEST_CASE("quotient orders match the frozen oracle values") {
  for (const auto& f : quotient_fixtures()) {
    const auto G = make_ggs(f.p, f.e);
    const auto q = level_quotient(G, f.n);
    INFO(G.spec(), " n=", f.n);
    CHECK(q.order().to_u64() == f.order);
    CHECK(q.order().log_p(f.p).has_value());
  }
}

TEST_CASE("oracle recomputes the small fixtures") {
  for (const auto& f : quotient_fixtures()) {
    if (f.order > 20000) continue;
    const std::vector<int> e(f.e.begin(), f.e.end());
    CHECK(oracle::Tree(f.p, e).bfs_order(f.n) == f.order);
  }
}

TEST_CASE("stabilizer chain on small known groups") {
  // S_4 from a 4-cycle and a transposition; A_4 from two 3-cycles
  const StabilizerChain s4(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  CHECK(GroupOrder{s4.orbit_lengths()}.to_u64() == 24u);
  const StabilizerChain a4(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  CHECK(GroupOrder{a4.orbit_lengths()}.to_u64() == 12u);
  CHECK(a4.contains({2, 0, 1, 3}));
  CHECK_FALSE(a4.contains({1, 0, 2, 3}));
  const StabilizerChain trivial(5, {});
  CHECK(GroupOrder{trivial.orbit_lengths()}.to_u64() == 1u);
  CHECK(trivial.contains({0, 1, 2, 3, 4}));
}

TEST_CASE("orders and their rendering") {
  const GroupOrder big{{729, 729, 729, 729, 729, 729, 729}};
  CHECK(big.to_u64() == std::nullopt);
  CHECK(big.to_string() == "109418989131512359209");
  CHECK(big.log_p(3) == 42);
  CHECK(to_json(big) == "109418989131512359209");
  CHECK(to_json(GroupOrder{{3, 9}}) == 27);
  CHECK(GroupOrder{{6}}.log_p(3) == std::nullopt);
}

TEST_CASE("membership") {
  const auto G = make_ggs(3, {1, 2});
  const auto q = level_quotient(G, 2);
  CHECK(membership(q, project(gen_a(G) * gen_b(G), 2)));
  CHECK(membership(q, LeafPermutation::identity(2, 9)));
  auto swap = LeafPermutation::identity(2, 9);
  std::swap(swap.images[0], swap.images[1]);
  CHECK_FALSE(membership(q, swap));
  CHECK_THROWS_AS(membership(q, LeafPermutation::identity(1, 3)), InputError);
}

TEST_CASE("guard") {
  const auto G = make_ggs(3, {1, 2});
  CHECK_THROWS_AS(level_quotient(G, 7), ResourceError);
  CHECK_THROWS_AS(level_quotient(G, 3, {26}), ResourceError);
  CHECK_NOTHROW(level_quotient(G, 3, {27}));
  CHECK_THROWS_AS(level_quotient(G, 0), PreconditionError);
}

TEST_CASE("census examples") {
  const auto gs = maximal_subgroups_census(make_ggs(3, {1, 2}), 2);
  CHECK(gs.maximal.size() == 4);
  for (const auto& m : gs.maximal) {
    CHECK(m.index == 3);
    CHECK(m.normal);
  }
  CHECK(gs.distinct);
  CHECK(gs.verdict);

  const auto fg = maximal_subgroups_census(make_ggs(5, {1, 0, 0, 0}), 2);
  CHECK(fg.maximal.size() == 6);
  for (const auto& m : fg.maximal) {
    CHECK(m.index == 5);
    CHECK(m.normal);
  }
  CHECK(fg.verdict);

  for (const auto& e : {std::vector<std::int64_t>{1, 1}, {1, 0}, {0, 1}, {2, 2}})
    CHECK(maximal_subgroups_census(make_ggs(3, e), 2).maximal.size() == 4);

  CHECK_THROWS_AS(maximal_subgroups_census(make_ggs(3, {1, 2}), 1), PreconditionError);
}

TEST_CASE("census membership follows the functional") {
  const auto G = make_ggs(3, {1, 1});
  const auto c = maximal_subgroups_census(G, 3);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const Element g(G, random_word(3, 5, rng));
    const auto [al, be] = abelianize(g);
    for (const auto& m : c.maximal)
      REQUIRE(m.contains(g) == ((m.functional[0] * al + m.functional[1] * be) % 3 == 0));
  }
}

TEST_CASE("census json") {
  const auto j = to_json(maximal_subgroups_census(make_ggs(3, {1, 2}), 2));
  CHECK(j["p"] == 3);
  CHECK(j["e"] == nlohmann::json::array({1, 2}));
  CHECK(j["n"] == 2);
  CHECK(j["order"] == 27);
  CHECK(j["maximal"].size() == 4);
  CHECK(j["maximal"][0].contains("functional"));
  CHECK(j["maximal"][0]["index"] == 3);
  CHECK(j["maximal"][0]["normal"] == true);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}
