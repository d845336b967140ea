#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ggslab/ggs.hpp"

namespace ggslab::lab {

/// Outcome of a hypothesis-gated check.
enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);

/// Per-letter abelianized sections (n_u, m_u) of an element g = b^t mod G',
/// indexed by residue letter u. `t` is the b-exponent of g.
struct ExponentProfile {
  int p = 0;
  std::vector<int> n;
  std::vector<int> m;
  int t = 0;
  bool operator==(const ExponentProfile&) const = default;
};

/// Profile read off from abelianize(section(g, u)).
ExponentProfile profile_from_sections(const Element& g);

/// Profile from the decomposition g = prod (b^{j_k})^{a^{l_k}}:
/// m_u = sum_{l_k = u} j_k and n_u = sum_{j=1}^{p-1} e_j m_{u-j}.
ExponentProfile profile_from_conjugates(const Element& g);

/// Both routes, cross-checked. Requires g in st(1) with abelianization (0, t),
/// t != 0 (PreconditionError); disagreement throws InvariantError.
ExponentProfile exponent_profile(const Element& g);

struct CaseVerdict {
  enum class Tag { case1, case2 } tag;
  /// Case 1: a letter u with n_u = 0, m_u != 0, and j0 = m_u.
  int u = -1;
  int j0 = 0;
  /// Case 2: two letters with n != lambda m, and two letters with m != 0.
  std::array<int, 2> unbalanced{-1, -1};
  std::array<int, 2> b_carrying{-1, -1};
};

/// Exactly one of the two cases, with witnesses. Throws InvariantError if the
/// Case 2 witnesses do not exist; PreconditionError if t = 0 or lambda = 0.
CaseVerdict classify_case(const ExponentProfile& profile, int lambda);

/// abelianize(g_1 g_2 ... g_p) == (0, 0) for psi(g) = (g_1, ..., g_p).
bool check_derived_product(const Element& g);

struct PropagationReport {
  Verdict verdict = Verdict::skipped;
  /// abelianize(section(g^p, u)) per residue letter u.
  std::vector<std::pair<int, int>> section_abelianizations;
  /// Set when all lengths were certified within the cap.
  std::optional<bool> length_bound_holds;
};

/// For g = a^i b^j mod G' with i != 0 in a non-torsion group: every section of
/// g^p abelianizes to (lambda j, j). With a length cap, also checks
/// |section(g^p, u)| <= sum_k |g_k| <= |g| when all lengths are certified.
PropagationReport check_propagates(const Element& g, std::optional<std::size_t> length_cap = std::nullopt,
                                   const EqualOptions& eq = {});

struct SectionHalfReport {
  Verdict verdict = Verdict::skipped;
  std::string reason;
  std::optional<std::size_t> length;
  /// Letter of a nontrivial section shorter than |x|/2.
  std::optional<int> witness;
};

/// For x = b^t mod G' in Case 2 with |x| = 2 mu: some section x_u != 1 has
/// |x_u| < mu. Hypotheses not met gives a skipped verdict.
SectionHalfReport check_section_less_than_half(const Element& x, std::size_t cap = 6, const EqualOptions& eq = {});

struct ContractionReport {
  Verdict verdict = Verdict::skipped;
  std::optional<std::size_t> length;
  std::vector<std::size_t> section_lengths;
};

/// For g in st(1) with certified length l: sum of section lengths <= l, each
/// section length <= (l+1)/2, and each < l when l > 1.
ContractionReport check_length_contraction(const Element& g, std::size_t cap = 6, const EqualOptions& eq = {});

struct IntervalCounterexample {
  int i, k, i1, i2;
};

struct IntervalScan {
  std::size_t quadruples = 0;
  std::size_t hypothesis_met = 0;
  std::vector<IntervalCounterexample> counterexamples;
};

/// Brute force over i != 0, 1 < k < p-1, i1 != i2 in F_p with
/// I_v = {v - d i : 0 <= d < k}: whenever exactly two v have
/// |I_v ∩ {i1, i2}| = 1, require i2 = i1 ± i.
IntervalScan interval_lemma_scan(int p);

/// psi([a,b]) == (b^-1 a^e1, a^{e2-e1}, ..., a^{e_{p-1}-e_{p-2}}, a^{-e_{p-1}} b).
bool commutator_tuple_identity(const GgsGroup& G, const EqualOptions& eq = {});

/// For the constant-vector group, with y_i = (b a^-1)^{a^i}:
/// psi([y0, y1]) == (1, ..., 1, y2, (y0^-1 y1^-1)^a, y1).
bool k_generator_identity(const GgsGroup& G, const EqualOptions& eq = {});

/// Iterates g -> section(g^p, letter 1) and records abelianizations, starting
/// with that of g itself. Needs i, j != 0 and a non-torsion group.
std::vector<std::pair<int, int>> infinite_order_trace(const Element& g, int steps);

/// (b^j)^(a^l) for a residue letter l; its only b-section sits at letter l.
Element b_conjugate(const GgsGroup& G, int j, int l);

/// Product of 1..max_factors random b-conjugates; always in st(1).
Element random_stabilizer_element(const GgsGroup& G, std::mt19937_64& rng, std::size_t max_factors = 6);

/// Product of 1..max_factors random conjugates of [a,b]^{+-1}; always in G'.
Element random_derived_element(const GgsGroup& G, std::mt19937_64& rng, std::size_t max_factors = 3);

}  // namespace ggslab::lab
