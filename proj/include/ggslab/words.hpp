#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ggslab {

enum class Gen : std::uint8_t { a, b };

/// One raw factor gen^exponent; exponent is any integer.
struct Factor {
  Gen gen;
  std::int64_t exponent;
};

/// b^beta followed by a^alpha inside a normal form.
struct BSyllable {
  int beta;
  int alpha;
  bool operator==(const BSyllable&) const = default;
};

/// Normal form in C_p * C_p:  a^alpha_1 b^beta_1 a^alpha_2 ... b^beta_m a^alpha_{m+1}.
/// Every beta is nonzero, every interior alpha is nonzero; the leading and the
/// trailing a-exponent may be zero. Instances are always normalized.
class GroupWord {
 public:
  explicit GroupWord(int p);

  int modulus() const { return p_; }
  int leading_a() const { return leading_a_; }
  std::span<const BSyllable> body() const { return body_; }
  bool is_identity() const { return leading_a_ == 0 && body_.empty(); }

  /// Sum of a-exponents and of b-exponents, mod p.
  int a_total() const;
  int b_total() const;

  /// Raw factor sequence that multiplies out to this word.
  std::vector<Factor> expand() const;

  bool operator==(const GroupWord&) const = default;

 private:
  friend GroupWord normalize(std::span<const Factor> raw, int p);

  int p_;
  int leading_a_ = 0;
  std::vector<BSyllable> body_;
};

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const noexcept;
};

GroupWord normalize(std::span<const Factor> raw, int p);

/// Word for a single generator power.
GroupWord generator_power(Gen g, std::int64_t k, int p);

/// Number of b-syllables.
inline std::size_t syllable_length(const GroupWord& w) { return w.body().size(); }

GroupWord concat(const GroupWord& lhs, const GroupWord& rhs);
GroupWord invert(const GroupWord& w);

/// Samples a normal form with at most max_syllables b-syllables. The syllable
/// count is uniform on [0, max_syllables]; exponents are uniform on their
/// admissible ranges.
GroupWord random_word(int p, std::size_t max_syllables, std::mt19937_64& rng);
GroupWord random_word(int p, std::size_t max_syllables, std::uint64_t seed);

/// Parses whitespace separated tokens `a`, `b`, `a^k`, `b^k` (k any integer) and
/// `1` for the identity. Throws InputError on anything else.
GroupWord parse_word(std::string_view text, int p);

/// Renders with exponents in [1, p-1]; the identity renders as `1`.
std::string to_string(const GroupWord& w);

/// Checks the normal-form invariants on an arbitrary (p, leading, body) triple.
bool is_normal_form(int p, int leading_a, std::span<const BSyllable> body);

}  // namespace ggslab
