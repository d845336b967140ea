#include "ggslab/words.hpp"

#include <charconv>
#include <sstream>

#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"

namespace ggslab {

namespace {

int residue(std::int64_t x, int p) { return static_cast<int>(fp::reduce(x, p)); }

struct Syllable {
  Gen gen;
  int exponent;
};

}  // namespace

GroupWord::GroupWord(int p) : p_(p) {}

int GroupWord::a_total() const {
  std::int64_t s = leading_a_;
  for (const auto& syl : body_) s += syl.alpha;
  return residue(s, p_);
}

int GroupWord::b_total() const {
  std::int64_t s = 0;
  for (const auto& syl : body_) s += syl.beta;
  return residue(s, p_);
}

std::vector<Factor> GroupWord::expand() const {
  std::vector<Factor> out;
  out.reserve(2 * body_.size() + 1);
  out.push_back({Gen::a, leading_a_});
  for (const auto& syl : body_) {
    out.push_back({Gen::b, syl.beta});
    out.push_back({Gen::a, syl.alpha});
  }
  return out;
}

std::size_t GroupWordHash::operator()(const GroupWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.leading_a()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& syl : w.body()) {
    h ^= static_cast<std::size_t>(syl.beta * 131 + syl.alpha) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GroupWord normalize(std::span<const Factor> raw, int p) {
  // Free reduction with a stack of alternating syllables; one pass reaches the
  // fixpoint because a cancellation only ever exposes the new stack top.
  std::vector<Syllable> stack;
  stack.reserve(raw.size());
  for (const auto& f : raw) {
    const int e = residue(f.exponent, p);
    if (e == 0) continue;
    if (!stack.empty() && stack.back().gen == f.gen) {
      const int merged = (stack.back().exponent + e) % p;
      if (merged == 0)
        stack.pop_back();
      else
        stack.back().exponent = merged;
    } else {
      stack.push_back({f.gen, e});
    }
  }

  GroupWord w(p);
  std::size_t i = 0;
  if (i < stack.size() && stack[i].gen == Gen::a) w.leading_a_ = stack[i++].exponent;
  for (; i < stack.size(); ++i) {
    const int beta = stack[i].exponent;
    int alpha = 0;
    if (i + 1 < stack.size()) alpha = stack[++i].exponent;
    w.body_.push_back({beta, alpha});
  }
  return w;
}

GroupWord generator_power(Gen g, std::int64_t k, int p) {
  const Factor f{g, k};
  return normalize(std::span(&f, 1), p);
}

GroupWord concat(const GroupWord& lhs, const GroupWord& rhs) {
  if (lhs.modulus() != rhs.modulus()) throw InputError("concat: modulus mismatch");
  auto raw = lhs.expand();
  const auto tail = rhs.expand();
  raw.insert(raw.end(), tail.begin(), tail.end());
  return normalize(raw, lhs.modulus());
}

GroupWord invert(const GroupWord& w) {
  auto raw = w.expand();
  std::vector<Factor> rev(raw.rbegin(), raw.rend());
  for (auto& f : rev) f.exponent = -f.exponent;
  return normalize(rev, w.modulus());
}

GroupWord random_word(int p, std::size_t max_syllables, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, max_syllables);
  std::uniform_int_distribution<int> any(0, p - 1);
  std::uniform_int_distribution<int> nonzero(1, p - 1);
  const std::size_t m = count(rng);
  std::vector<Factor> raw;
  raw.push_back({Gen::a, any(rng)});
  for (std::size_t k = 0; k < m; ++k) {
    raw.push_back({Gen::b, nonzero(rng)});
    raw.push_back({Gen::a, k + 1 == m ? any(rng) : nonzero(rng)});
  }
  return normalize(raw, p);
}

GroupWord random_word(int p, std::size_t max_syllables, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_word(p, max_syllables, rng);
}

GroupWord parse_word(std::string_view text, int p) {
  std::vector<Factor> raw;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    Gen g;
    if (tok[0] == 'a')
      g = Gen::a;
    else if (tok[0] == 'b')
      g = Gen::b;
    else
      throw InputError("bad word token '" + tok + "'");
    std::int64_t k = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2) throw InputError("bad word token '" + tok + "'");
      const char* first = tok.data() + 2;
      const char* last = tok.data() + tok.size();
      if (*first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last) throw InputError("bad exponent in '" + tok + "'");
    }
    raw.push_back({g, k});
  }
  return normalize(raw, p);
}

std::string to_string(const GroupWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  auto emit = [&](char g, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += g;
    if (e != 1) out += '^' + std::to_string(e);
  };
  emit('a', w.leading_a());
  for (const auto& syl : w.body()) {
    emit('b', syl.beta);
    emit('a', syl.alpha);
  }
  return out;
}

bool is_normal_form(int p, int leading_a, std::span<const BSyllable> body) {
  if (leading_a < 0 || leading_a >= p) return false;
  for (std::size_t k = 0; k < body.size(); ++k) {
    if (body[k].beta <= 0 || body[k].beta >= p) return false;
    if (body[k].alpha < 0 || body[k].alpha >= p) return false;
    if (k + 1 < body.size() && body[k].alpha == 0) return false;
  }
  return true;
}

}  // namespace ggslab
