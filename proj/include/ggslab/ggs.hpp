#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggslab/words.hpp"

namespace ggslab {

enum class Family { torsion, constant, fabrykowski_gupta_type, generic_nontorsion };

std::string to_string(Family f);

/// A GGS-group on the p-adic tree. Cheap to copy; copies share the same data.
///
/// Tree letters are residues mod p throughout the library: the letter p of the
/// usual alphabet {1,...,p} is residue 0, and the rooted generator acts as
/// x -> x + 1. Conversion happens only when vertices are parsed or printed.
class GgsGroup {
 public:
  int p() const { return data_->p; }
  /// Defining vector (e_1, ..., e_{p-1}) as residues.
  std::span<const int> defining_vector() const { return data_->e; }
  /// e_x for a residue letter x; e_0 is 0 by convention.
  int e(int x) const { return x == 0 ? 0 : data_->e[static_cast<std::size_t>(x - 1)]; }
  int lambda() const { return data_->lambda; }
  Family family() const { return data_->family; }
  bool is_torsion() const { return data_->family == Family::torsion; }
  bool is_constant() const { return data_->family == Family::constant; }

  /// `p=<p>;e=<e_1>,...,<e_{p-1}>`
  std::string spec() const;

  bool operator==(const GgsGroup& o) const { return p() == o.p() && data_->e == o.data_->e; }

 private:
  struct Data {
    int p;
    std::vector<int> e;
    int lambda;
    Family family;
  };
  friend GgsGroup make_ggs(std::int64_t p, std::span<const std::int64_t> e);
  explicit GgsGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// Validates p and e, reduces e mod p, computes lambda and the family.
GgsGroup make_ggs(std::int64_t p, std::span<const std::int64_t> e);
GgsGroup make_ggs(std::int64_t p, std::initializer_list<std::int64_t> e);

/// Parses `p=<prime>;e=<c1>,...,<c_{p-1}>`.
GgsGroup parse_group_spec(std::string_view spec);

/// A vertex of the p-adic tree as a sequence of residue letters.
struct TreeVertex {
  std::vector<int> letters;
  bool operator==(const TreeVertex&) const = default;
};

/// Dot-separated letters in {1,...,p}; the empty string is the root.
TreeVertex parse_vertex(std::string_view text, int p);
std::string to_string(const TreeVertex& v, int p);
/// Residue of a letter from {1,...,p} and back.
int letter_to_residue(int letter, int p);
int residue_to_letter(int residue, int p);

/// A group element, carried as a normal-form word over a and b.
class Element {
 public:
  Element(GgsGroup group, GroupWord word);

  const GgsGroup& group() const { return group_; }
  const GroupWord& word() const { return word_; }

  Element operator*(const Element& rhs) const;
  Element inverse() const;

 private:
  GgsGroup group_;
  GroupWord word_;
};

Element identity(const GgsGroup& G);
Element gen_a(const GgsGroup& G, std::int64_t k = 1);
Element gen_b(const GgsGroup& G, std::int64_t k = 1);
Element parse_element(const GgsGroup& G, std::string_view text);

/// Total a-exponent; the element acts on level 1 as x -> x + this.
int root_permutation_power(const Element& g);

TreeVertex act(const Element& g, const TreeVertex& v);

/// Section at a residue letter, or along a vertex.
Element section(const Element& g, int letter);
Element section(const Element& g, const TreeVertex& u);

/// (g_1, ..., g_p) in the order of the letters 1, ..., p. Throws
/// PreconditionError unless g fixes level 1.
std::vector<Element> psi(const Element& g);

struct EqualOptions {
  /// Recursion depth at which equal() gives up with ResourceError.
  int depth_cap = 12;
};

/// Decides whether g and h define the same tree automorphism.
bool equal(const Element& g, const Element& h, const EqualOptions& opts = {});
inline bool is_trivial(const Element& g, const EqualOptions& opts = {}) {
  return equal(g, identity(g.group()), opts);
}

/// Image in G/G' = F_p^2: (total a-exponent, total b-exponent).
std::pair<int, int> abelianize(const Element& g);

/// Minimal number of b-syllables over preimage words, searched up to `cap`.
/// Empty when no preimage of length <= cap exists.
std::optional<std::size_t> length(const Element& g, std::size_t cap = 6, const EqualOptions& opts = {});

/// h^-1 g h.
Element conjugate(const Element& g, const Element& h);
Element power(const Element& g, std::int64_t n);
/// g^-1 h^-1 g h.
Element commutator(const Element& g, const Element& h);

/// For each residue letter x: elements s_a, s_b of st(1) whose sections at x
/// are a and b respectively.
struct FractalityWitness {
  int letter;
  Element yields_a;
  Element yields_b;
};
std::vector<FractalityWitness> fractality_witnesses(const GgsGroup& G);

}  // namespace ggslab
