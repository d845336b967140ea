#include "ggslab/quotients.hpp"

#include <algorithm>
#include <numeric>

#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"

namespace ggslab {

namespace {

Points compose(const Points& lhs, const Points& rhs) {
  Points out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] = rhs[lhs[i]];
  return out;
}

Points invert_points(const Points& g) {
  Points out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Points identity_points(std::size_t degree) {
  Points id(degree);
  std::iota(id.begin(), id.end(), 0u);
  return id;
}

bool is_identity_points(const Points& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) return false;
  return true;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// LeafPermutation

LeafPermutation LeafPermutation::identity(int n, std::size_t degree) { return {n, identity_points(degree)}; }

bool LeafPermutation::is_identity() const { return is_identity_points(images); }

LeafPermutation LeafPermutation::operator*(const LeafPermutation& rhs) const {
  if (n != rhs.n || images.size() != rhs.images.size()) throw InputError("leaf permutations on different levels");
  return {n, compose(images, rhs.images)};
}

LeafPermutation LeafPermutation::inverse() const { return {n, invert_points(images)}; }

std::size_t leaf_index(const TreeVertex& v, int p) {
  std::size_t idx = 0;
  for (const int x : v.letters) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(residue_to_letter(x, p) - 1);
  return idx;
}

TreeVertex leaf_vertex(std::size_t index, int p, int n) {
  TreeVertex v;
  v.letters.resize(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    const int digit = static_cast<int>(index % static_cast<std::size_t>(p));
    v.letters[static_cast<std::size_t>(k)] = (digit + 1) % p;
    index /= static_cast<std::size_t>(p);
  }
  return v;
}

LeafPermutation project(const Element& g, int n) {
  if (n < 1) throw PreconditionError("project: level must be >= 1");
  const int p = g.group().p();
  const std::size_t degree = ipow(static_cast<std::size_t>(p), n);
  LeafPermutation out{n, Points(degree)};
  for (std::size_t i = 0; i < degree; ++i)
    out.images[i] = static_cast<std::uint32_t>(leaf_index(act(g, leaf_vertex(i, p, n)), p));
  return out;
}

LeafPermutation block_image(const LeafPermutation& perm, int p) {
  if (perm.n < 2) throw PreconditionError("block_image needs level >= 2");
  const std::size_t up = static_cast<std::size_t>(p);
  LeafPermutation out{perm.n - 1, Points(perm.images.size() / up)};
  for (std::size_t blk = 0; blk < out.images.size(); ++blk)
    out.images[blk] = static_cast<std::uint32_t>(perm.images[blk * up] / up);
  return out;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Points>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw InputError("generator degree mismatch");
    if (is_identity_points(g)) continue;
    if (levels_.empty()) {
      std::uint32_t moved = 0;
      while (g[moved] == moved) ++moved;
      add_level(moved);
    }
    if (contains(g)) continue;
    add_generator(0, g);
    while (process_one()) {
    }
  }
}

void StabilizerChain::add_level(std::uint32_t base) {
  Level L;
  L.base = base;
  L.orbit_slot.assign(degree_, -1);
  add_orbit_point(L, base, identity_points(degree_));
  levels_.push_back(std::move(L));
}

void StabilizerChain::add_orbit_point(Level& L, std::uint32_t point, Points u) {
  const auto slot = L.orbit.size();
  L.orbit_slot[point] = static_cast<std::int32_t>(slot);
  L.orbit.push_back(point);
  L.transversal_inv.push_back(invert_points(u));
  L.transversal.push_back(std::move(u));
  for (std::size_t gi = 0; gi < L.gens.size(); ++gi) L.pending.emplace_back(slot, gi);
}

void StabilizerChain::add_generator(std::size_t level, const Points& g) {
  Level& L = levels_[level];
  const auto gi = L.gens.size();
  L.gens.push_back(g);
  for (std::size_t slot = 0; slot < L.orbit.size(); ++slot) L.pending.emplace_back(slot, gi);
}

bool StabilizerChain::process_one() {
  // Deepest level first keeps lower levels complete while upper ones grow.
  for (std::size_t lv = levels_.size(); lv-- > 0;) {
    if (levels_[lv].pending.empty()) continue;
    Level& L = levels_[lv];
    const auto [slot, gi] = L.pending.front();
    L.pending.pop_front();
    const std::uint32_t beta = L.orbit[slot];
    const Points& s = L.gens[gi];
    const std::uint32_t gamma = s[beta];
    if (L.orbit_slot[gamma] < 0) {
      add_orbit_point(L, gamma, compose(L.transversal[slot], s));
      return true;
    }
    Points schreier = compose(compose(L.transversal[slot], s),
                              L.transversal_inv[static_cast<std::size_t>(L.orbit_slot[gamma])]);
    const std::size_t stop = sift(schreier, lv + 1);
    if (stop == levels_.size() && is_identity_points(schreier)) return true;
    if (stop == levels_.size()) {
      std::uint32_t moved = 0;
      while (schreier[moved] == moved) ++moved;
      add_level(moved);
    }
    for (std::size_t j = lv + 1; j <= stop; ++j) add_generator(j, schreier);
    return true;
  }
  return false;
}

std::size_t StabilizerChain::sift(Points& g, std::size_t level) const {
  for (std::size_t j = level; j < levels_.size(); ++j) {
    const Level& L = levels_[j];
    const std::int32_t slot = L.orbit_slot[g[L.base]];
    if (slot < 0) return j;
    g = compose(g, L.transversal_inv[static_cast<std::size_t>(slot)]);
  }
  return levels_.size();
}

bool StabilizerChain::contains(const Points& perm) const {
  if (perm.size() != degree_) return false;
  Points g = perm;
  return sift(g, 0) == levels_.size() && is_identity_points(g);
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> out;
  for (const auto& L : levels_) out.push_back(L.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& L : levels_) out.push_back(L.orbit.size());
  return out;
}

// ---------------------------------------------------------------------------
// GroupOrder

std::string GroupOrder::to_string() const {
  std::vector<int> digits{1};  // little-endian decimal
  for (const std::size_t f : orbit_lengths) {
    std::size_t carry = 0;
    for (auto& d : digits) {
      const std::size_t v = static_cast<std::size_t>(d) * f + carry;
      d = static_cast<int>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<int>(carry % 10));
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

std::optional<std::uint64_t> GroupOrder::to_u64() const {
  unsigned __int128 acc = 1;
  for (const std::size_t f : orbit_lengths) {
    acc *= f;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<int> GroupOrder::log_p(int p) const {
  int k = 0;
  for (std::size_t f : orbit_lengths) {
    while (f % static_cast<std::size_t>(p) == 0) {
      f /= static_cast<std::size_t>(p);
      ++k;
    }
    if (f != 1) return std::nullopt;
  }
  return k;
}

nlohmann::json to_json(const GroupOrder& order) {
  if (auto v = order.to_u64()) return *v;
  return order.to_string();
}

// ---------------------------------------------------------------------------
// Congruence quotients

PermQuotient level_quotient(const GgsGroup& G, int n, const QuotientOptions& opts) {
  if (n < 1) throw PreconditionError("level_quotient: level must be >= 1");
  const std::size_t degree = ipow(static_cast<std::size_t>(G.p()), n);
  if (degree > opts.leaf_guard || (n > 1 && degree / static_cast<std::size_t>(G.p()) > opts.leaf_guard))
    throw ResourceError("level_quotient: p^n = " + std::to_string(degree) + " exceeds leaf guard " +
                        std::to_string(opts.leaf_guard));
  auto a = project(gen_a(G), n);
  auto b = project(gen_b(G), n);
  StabilizerChain chain(degree, {a.images, b.images});
  return {G, n, std::move(a), std::move(b), std::move(chain)};
}

bool membership(const PermQuotient& q, const LeafPermutation& perm) {
  if (perm.n != q.n || perm.images.size() != q.chain.degree()) throw InputError("membership: level mismatch");
  return q.chain.contains(perm.images);
}

bool CensusEntry::contains(const Element& g) const {
  const auto [al, be] = abelianize(g);
  const int p = g.group().p();
  return (functional[0] * al + functional[1] * be) % p == 0;
}

Census maximal_subgroups_census(const GgsGroup& G, int n, const QuotientOptions& opts) {
  if (n < 2) throw PreconditionError("census needs level n >= 2");
  const int p = G.p();
  const PermQuotient Q = level_quotient(G, n, opts);
  const std::size_t degree = Q.chain.degree();
  const auto qlog = Q.order().log_p(p);
  if (!qlog) throw InvariantError("congruence quotient is not a p-group");

  auto gpow = [&](const LeafPermutation& x, std::int64_t k) {
    k = fp::reduce(k, p);
    auto out = LeafPermutation::identity(n, degree);
    for (std::int64_t i = 0; i < k; ++i) out = out * x;
    return out;
  };

  std::vector<std::array<int, 2>> functionals;
  for (int t = 0; t < p; ++t) functionals.push_back({1, t});
  functionals.push_back({0, 1});

  Census census{G, n, Q.order(), {}, true, true};
  std::vector<StabilizerChain> chains;
  for (const auto& f : functionals) {
    const auto [s, t] = f;
    // Reidemeister-Schreier generators of ker(f o abelianize).
    std::vector<LeafPermutation> gens;
    if (s != 0) {
      const std::int64_t shift = static_cast<std::int64_t>(t) * fp::inverse(s, p);
      for (int i = 0; i < p; ++i) gens.push_back(gpow(Q.a, i) * Q.b * gpow(Q.a, -(i + shift)));
    } else {
      for (int i = 0; i < p; ++i) gens.push_back(gpow(Q.b, i) * Q.a * gpow(Q.b, -i));
    }
    std::vector<Points> raw;
    for (const auto& g : gens) raw.push_back(g.images);
    StabilizerChain chain(degree, raw);
    GroupOrder order{chain.orbit_lengths()};
    const auto mlog = order.log_p(p);
    if (!mlog) throw InvariantError("census subgroup order is not a power of p");
    bool normal = true;
    for (const auto& g : gens)
      for (const auto* x : {&Q.a, &Q.b}) normal = normal && chain.contains((x->inverse() * g * *x).images);
    const std::uint64_t index = static_cast<std::uint64_t>(ipow(static_cast<std::size_t>(p), *qlog - *mlog));
    census.maximal.push_back({f, std::move(gens), std::move(order), index, normal});
    chains.push_back(std::move(chain));
  }

  // a^t b^-s spans ker f; it must lie in exactly the one matching entry.
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    const auto [s, t] = functionals[i];
    const auto witness = gpow(Q.a, t) * gpow(Q.b, -s);
    for (std::size_t j = 0; j < functionals.size(); ++j)
      census.distinct = census.distinct && (chains[j].contains(witness.images) == (i == j));
  }
  census.verdict = census.distinct && census.maximal.size() == static_cast<std::size_t>(p + 1);
  for (const auto& m : census.maximal)
    census.verdict = census.verdict && m.normal && m.index == static_cast<std::uint64_t>(p);
  return census;
}

nlohmann::json to_json(const Census& census) {
  nlohmann::json j;
  j["p"] = census.group.p();
  j["e"] = std::vector<int>(census.group.defining_vector().begin(), census.group.defining_vector().end());
  j["n"] = census.n;
  j["order"] = to_json(census.order);
  j["maximal"] = nlohmann::json::array();
  for (const auto& m : census.maximal)
    j["maximal"].push_back({{"functional", m.functional}, {"index", m.index}, {"normal", m.normal}});
  return j;
}

}  // namespace ggslab
