#include "ggslab/ggs.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <unordered_set>

#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"

namespace ggslab {

namespace {

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw InputError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Section of a word at a residue letter, as a raw factor list.
GroupWord section_word(const GgsGroup& G, const GroupWord& w, int letter) {
  const int p = G.p();
  std::vector<Factor> raw;
  raw.reserve(w.body().size());
  int pos = (letter + w.leading_a()) % p;
  for (const auto& syl : w.body()) {
    if (pos == 0)
      raw.push_back({Gen::b, syl.beta});
    else
      raw.push_back({Gen::a, static_cast<std::int64_t>(syl.beta) * G.e(pos)});
    pos = (pos + syl.alpha) % p;
  }
  return normalize(raw, p);
}

struct PairHash {
  std::size_t operator()(const std::pair<GroupWord, GroupWord>& pr) const noexcept {
    GroupWordHash h;
    return h(pr.first) * 1000003u ^ h(pr.second);
  }
};

class Bisimulation {
 public:
  Bisimulation(const GgsGroup& G, int depth_cap) : G_(G), depth_cap_(depth_cap) {}

  bool run(const GroupWord& x, const GroupWord& y, int depth) {
    if (x == y) return true;
    if (x.a_total() != y.a_total()) return false;
    auto key = std::make_pair(x, y);
    if (assumed_.contains(key)) return true;
    if (depth >= depth_cap_) throw ResourceError("equal(): depth cap exceeded");
    assumed_.insert(std::move(key));
    for (int u = 0; u < G_.p(); ++u) {
      if (!run(section_word(G_, x, u), section_word(G_, y, u), depth + 1)) return false;
    }
    return true;
  }

 private:
  const GgsGroup& G_;
  int depth_cap_;
  std::unordered_set<std::pair<GroupWord, GroupWord>, PairHash> assumed_;
};

void require_same_group(const Element& g, const Element& h) {
  if (!(g.group() == h.group())) throw InputError("elements belong to different groups");
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::torsion:
      return "torsion";
    case Family::constant:
      return "constant";
    case Family::fabrykowski_gupta_type:
      return "fabrykowski_gupta_type";
    case Family::generic_nontorsion:
      return "generic_nontorsion";
  }
  return "unknown";
}

std::string GgsGroup::spec() const {
  std::string s = "p=" + std::to_string(p()) + ";e=";
  for (std::size_t i = 0; i < data_->e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(data_->e[i]);
  }
  return s;
}

GgsGroup make_ggs(std::int64_t p, std::span<const std::int64_t> e) {
  fp::require_odd_prime(p);
  if (static_cast<std::int64_t>(e.size()) != p - 1)
    throw InputError("defining vector must have length p-1 = " + std::to_string(p - 1));
  auto d = std::make_shared<GgsGroup::Data>();
  d->p = static_cast<int>(p);
  std::int64_t sum = 0;
  int nonzero = 0;
  bool all_one = true;
  for (auto x : e) {
    const int r = static_cast<int>(fp::reduce(x, p));
    d->e.push_back(r);
    sum += r;
    nonzero += r != 0;
    all_one = all_one && r == 1;
  }
  if (nonzero == 0) throw InputError("defining vector must be non-zero");
  d->lambda = static_cast<int>(fp::reduce(sum, p));
  if (d->lambda == 0)
    d->family = Family::torsion;
  else if (all_one)
    d->family = Family::constant;
  else if (nonzero == 1)
    d->family = Family::fabrykowski_gupta_type;
  else
    d->family = Family::generic_nontorsion;
  return GgsGroup(std::move(d));
}

GgsGroup make_ggs(std::int64_t p, std::initializer_list<std::int64_t> e) {
  return make_ggs(p, std::span<const std::int64_t>(e.begin(), e.size()));
}

GgsGroup parse_group_spec(std::string_view spec) {
  std::optional<std::int64_t> p;
  std::optional<std::vector<std::int64_t>> e;
  while (!spec.empty()) {
    const auto semi = spec.find(';');
    const auto part = trim(spec.substr(0, semi));
    spec = semi == std::string_view::npos ? std::string_view{} : spec.substr(semi + 1);
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) throw InputError("bad group spec field '" + std::string(part) + "'");
    const auto key = trim(part.substr(0, eq));
    auto value = trim(part.substr(eq + 1));
    if (key == "p") {
      p = parse_int(value, "prime");
    } else if (key == "e") {
      e.emplace();
      while (true) {
        const auto comma = value.find(',');
        e->push_back(parse_int(trim(value.substr(0, comma)), "defining vector entry"));
        if (comma == std::string_view::npos) break;
        value = value.substr(comma + 1);
      }
    } else {
      throw InputError("unknown group spec key '" + std::string(key) + "'");
    }
  }
  if (!p || !e) throw InputError("group spec needs both p= and e=");
  return make_ggs(*p, *e);
}

int letter_to_residue(int letter, int p) {
  if (letter < 1 || letter > p) throw InputError("vertex letter out of range 1.." + std::to_string(p));
  return letter % p;
}

int residue_to_letter(int residue, int p) { return residue == 0 ? p : residue; }

TreeVertex parse_vertex(std::string_view text, int p) {
  TreeVertex v;
  text = trim(text);
  if (text.empty()) return v;
  while (true) {
    const auto dot = text.find('.');
    v.letters.push_back(
        letter_to_residue(static_cast<int>(parse_int(trim(text.substr(0, dot)), "vertex letter")), p));
    if (dot == std::string_view::npos) break;
    text = text.substr(dot + 1);
  }
  return v;
}

std::string to_string(const TreeVertex& v, int p) {
  std::string s;
  for (std::size_t i = 0; i < v.letters.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(residue_to_letter(v.letters[i], p));
  }
  return s;
}

Element::Element(GgsGroup group, GroupWord word) : group_(std::move(group)), word_(std::move(word)) {
  if (word_.modulus() != group_.p()) throw InputError("word modulus differs from group prime");
}

Element Element::operator*(const Element& rhs) const {
  require_same_group(*this, rhs);
  return {group_, concat(word_, rhs.word_)};
}

Element Element::inverse() const { return {group_, invert(word_)}; }

Element identity(const GgsGroup& G) { return {G, GroupWord(G.p())}; }
Element gen_a(const GgsGroup& G, std::int64_t k) { return {G, generator_power(Gen::a, k, G.p())}; }
Element gen_b(const GgsGroup& G, std::int64_t k) { return {G, generator_power(Gen::b, k, G.p())}; }
Element parse_element(const GgsGroup& G, std::string_view text) { return {G, parse_word(text, G.p())}; }

int root_permutation_power(const Element& g) { return g.word().a_total(); }

TreeVertex act(const Element& g, const TreeVertex& v) {
  const int p = g.group().p();
  TreeVertex out;
  out.letters.reserve(v.letters.size());
  GroupWord cur = g.word();
  for (const int x : v.letters) {
    out.letters.push_back((x + cur.a_total()) % p);
    cur = section_word(g.group(), cur, x);
  }
  return out;
}

Element section(const Element& g, int letter) {
  if (letter < 0 || letter >= g.group().p()) throw InputError("section letter out of range");
  return {g.group(), section_word(g.group(), g.word(), letter)};
}

Element section(const Element& g, const TreeVertex& u) {
  GroupWord cur = g.word();
  for (const int x : u.letters) cur = section_word(g.group(), cur, x);
  return {g.group(), std::move(cur)};
}

std::vector<Element> psi(const Element& g) {
  if (root_permutation_power(g) != 0) throw PreconditionError("psi: element does not fix level 1");
  const int p = g.group().p();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(p));
  for (int letter = 1; letter <= p; ++letter) out.push_back(section(g, letter % p));
  return out;
}

bool equal(const Element& g, const Element& h, const EqualOptions& opts) {
  require_same_group(g, h);
  Bisimulation bisim(g.group(), opts.depth_cap);
  return bisim.run(g.word(), h.word(), 0);
}

std::pair<int, int> abelianize(const Element& g) { return {g.word().a_total(), g.word().b_total()}; }

std::optional<std::size_t> length(const Element& g, std::size_t cap, const EqualOptions& opts) {
  const int p = g.group().p();
  const auto [A, B] = abelianize(g);
  const std::size_t own = syllable_length(g.word());

  // Candidates of exactly m syllables with abelianization (A, B):
  // a^al_1 b^be_1 ... b^be_m a^al_{m+1}, the last a-exponent being forced.
  std::vector<Factor> raw;
  std::function<bool(std::size_t, std::size_t, int, int)> search =
      [&](std::size_t m, std::size_t k, int a_sum, int b_sum) -> bool {
    if (k == m) {
      if (b_sum != B) return false;
      raw.push_back({Gen::a, A - a_sum});
      const bool hit = equal(g, Element(g.group(), normalize(raw, p)), opts);
      raw.pop_back();
      return hit;
    }
    for (int beta = 1; beta < p; ++beta) {
      if (k + 1 == m && (b_sum + beta) % p != B) continue;
      raw.push_back({Gen::b, beta});
      if (k + 1 == m) {
        if (search(m, k + 1, a_sum, (b_sum + beta) % p)) return true;
      } else {
        for (int alpha = 1; alpha < p; ++alpha) {
          raw.push_back({Gen::a, alpha});
          const bool hit = search(m, k + 1, (a_sum + alpha) % p, (b_sum + beta) % p);
          raw.pop_back();
          if (hit) return true;
        }
      }
      raw.pop_back();
    }
    return false;
  };

  for (std::size_t m = 0; m <= cap; ++m) {
    if (m == own) return m;
    if (m == 0) {
      if (B == 0 && equal(g, gen_a(g.group(), A), opts)) return 0;
      continue;
    }
    for (int lead = 0; lead < p; ++lead) {
      raw.assign(1, {Gen::a, lead});
      if (search(m, 0, lead, 0)) return m;
    }
  }
  return std::nullopt;
}

Element conjugate(const Element& g, const Element& h) { return h.inverse() * g * h; }

Element power(const Element& g, std::int64_t n) {
  Element base = n < 0 ? g.inverse() : g;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element out = identity(g.group());
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

Element commutator(const Element& g, const Element& h) { return g.inverse() * h.inverse() * g * h; }

std::vector<FractalityWitness> fractality_witnesses(const GgsGroup& G) {
  const int p = G.p();
  std::vector<FractalityWitness> out;
  for (int x = 0; x < p; ++x) {
    // (b^k)^(a^l) has section b^k at x = l and a^(k e_{x-l}) elsewhere.
    const Element yields_b = conjugate(gen_b(G), gen_a(G, x));
    std::optional<Element> yields_a;
    for (int l = 0; l < p && !yields_a; ++l) {
      const int coeff = G.e((x - l + p) % p);
      if (coeff == 0) continue;
      yields_a = conjugate(gen_b(G, fp::inverse(coeff, p)), gen_a(G, l));
    }
    out.push_back({x, *yields_a, yields_b});
  }
  return out;
}

}  // namespace ggslab
