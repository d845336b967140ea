#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggslab/ggs.hpp"

namespace ggslab {

using Points = std::vector<std::uint32_t>;

/// A permutation of the p^n leaves at level n. Leaf i is the vertex whose
/// letters, read as base-p digits (letter - 1), spell i; so leaves are ranked
/// lexicographically over {1,...,p}^n. Composition follows the right action:
/// (x)(g * h) = ((x)g)h.
struct LeafPermutation {
  int n = 0;
  Points images;

  static LeafPermutation identity(int n, std::size_t degree);
  bool is_identity() const;
  LeafPermutation operator*(const LeafPermutation& rhs) const;
  LeafPermutation inverse() const;
  bool operator==(const LeafPermutation&) const = default;
};

/// Leaf rank of a level-n vertex and back.
std::size_t leaf_index(const TreeVertex& v, int p);
TreeVertex leaf_vertex(std::size_t index, int p, int n);

/// The permutation g induces on level n.
LeafPermutation project(const Element& g, int n);

/// Restriction of a level-n permutation to the level-(n-1) blocks.
LeafPermutation block_image(const LeafPermutation& perm, int p);

/// Deterministic Schreier-Sims chain. New base points are the smallest point
/// moved by the residue that needs them; Schreier generators are processed in
/// insertion order, so the chain is reproducible run to run.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Points>& generators);

  std::size_t degree() const { return degree_; }
  bool contains(const Points& perm) const;
  std::vector<std::uint32_t> base() const;
  std::vector<std::size_t> orbit_lengths() const;

 private:
  struct Level {
    std::uint32_t base;
    std::vector<Points> gens;
    std::vector<std::int32_t> orbit_slot;  // point -> slot in orbit, or -1
    std::vector<std::uint32_t> orbit;
    std::vector<Points> transversal;        // base -> orbit[slot]
    std::vector<Points> transversal_inv;
    std::deque<std::pair<std::size_t, std::size_t>> pending;  // (slot, gen)
  };

  // Sifts g starting at `level`; returns the level where it stopped (equal to
  // levels_.size() when it passed every level) and leaves the residue in g.
  std::size_t sift(Points& g, std::size_t level) const;
  void add_level(std::uint32_t base);
  void add_generator(std::size_t level, const Points& g);
  void add_orbit_point(Level& L, std::uint32_t point, Points u);
  bool process_one();

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Group order stored as stabilizer-chain orbit lengths.
struct GroupOrder {
  std::vector<std::size_t> orbit_lengths;

  std::string to_string() const;
  std::optional<std::uint64_t> to_u64() const;
  /// k with order = p^k, or empty when the order is not a power of p.
  std::optional<int> log_p(int p) const;
};

nlohmann::json to_json(const GroupOrder& order);

struct QuotientOptions {
  std::size_t leaf_guard = 729;
};

/// G / st_G(n) realized on the p^n leaves.
struct PermQuotient {
  GgsGroup group;
  int n;
  LeafPermutation a;
  LeafPermutation b;
  StabilizerChain chain;

  GroupOrder order() const { return {chain.orbit_lengths()}; }
};

PermQuotient level_quotient(const GgsGroup& G, int n, const QuotientOptions& opts = {});

/// Membership in the subgroup generated by the images of a and b.
bool membership(const PermQuotient& q, const LeafPermutation& perm);

/// One index-p candidate: the kernel of (alpha, beta) -> s*alpha + t*beta.
struct CensusEntry {
  std::array<int, 2> functional;
  std::vector<LeafPermutation> generators;
  GroupOrder order;
  std::uint64_t index;
  bool normal;

  /// Membership through the abelianization of a lift.
  bool contains(const Element& g) const;
};

struct Census {
  GgsGroup group;
  int n;
  GroupOrder order;
  std::vector<CensusEntry> maximal;
  /// The p+1 entries are pairwise distinct subgroups (so Q/Phi(Q) has rank 2).
  bool distinct;
  /// All entries have index p, are normal, and are pairwise distinct.
  bool verdict;
};

Census maximal_subgroups_census(const GgsGroup& G, int n, const QuotientOptions& opts = {});

/// {p, e, n, order, maximal: [{functional, index, normal}]}
nlohmann::json to_json(const Census& census);

}  // namespace ggslab
