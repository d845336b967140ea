#include "ggslab/lemma_lab.hpp"

#include <numeric>

#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"

namespace ggslab::lab {

namespace {

int mod(std::int64_t x, int p) { return static_cast<int>(fp::reduce(x, p)); }

void require_stabilizer_with_b(const Element& g) {
  const auto [al, be] = abelianize(g);
  if (al != 0) throw PreconditionError("element is not in st(1)");
  if (be == 0) throw PreconditionError("element has b-exponent t = 0");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "unknown";
}

ExponentProfile profile_from_sections(const Element& g) {
  const int p = g.group().p();
  ExponentProfile prof{p, std::vector<int>(static_cast<std::size_t>(p)), std::vector<int>(static_cast<std::size_t>(p)),
                       abelianize(g).second};
  for (int u = 0; u < p; ++u) {
    const auto [al, be] = abelianize(section(g, u));
    prof.n[static_cast<std::size_t>(u)] = al;
    prof.m[static_cast<std::size_t>(u)] = be;
  }
  return prof;
}

ExponentProfile profile_from_conjugates(const Element& g) {
  const GgsGroup& G = g.group();
  const int p = G.p();
  ExponentProfile prof{p, std::vector<int>(static_cast<std::size_t>(p)), std::vector<int>(static_cast<std::size_t>(p)),
                       abelianize(g).second};
  // a^{s} b^{beta} a^{-s} = (b^{beta})^{a^{-s}}, so the conjugating letter is -s
  // for s the a-exponent accumulated before the syllable.
  int s = g.word().leading_a();
  for (const auto& syl : g.word().body()) {
    const int l = mod(-s, p);
    prof.m[static_cast<std::size_t>(l)] = mod(prof.m[static_cast<std::size_t>(l)] + syl.beta, p);
    s = mod(s + syl.alpha, p);
  }
  for (int u = 0; u < p; ++u) {
    std::int64_t acc = 0;
    for (int j = 1; j < p; ++j) acc += static_cast<std::int64_t>(G.e(j)) * prof.m[static_cast<std::size_t>(mod(u - j, p))];
    prof.n[static_cast<std::size_t>(u)] = mod(acc, p);
  }
  return prof;
}

ExponentProfile exponent_profile(const Element& g) {
  require_stabilizer_with_b(g);
  const auto direct = profile_from_sections(g);
  const auto formula = profile_from_conjugates(g);
  if (!(direct == formula)) throw InvariantError("exponent profile: section route and n_u formula disagree");
  return direct;
}

CaseVerdict classify_case(const ExponentProfile& prof, int lambda) {
  const int p = prof.p;
  if (mod(prof.t, p) == 0) throw PreconditionError("classify_case: t must be non-zero");
  if (mod(lambda, p) == 0) throw PreconditionError("classify_case: group must be non-torsion");
  CaseVerdict out{CaseVerdict::Tag::case1};
  for (int u = 0; u < p; ++u) {
    const auto k = static_cast<std::size_t>(u);
    if (prof.n[k] == 0 && prof.m[k] != 0) {
      out.u = u;
      out.j0 = prof.m[k];
      return out;
    }
  }
  out.tag = CaseVerdict::Tag::case2;
  std::vector<int> unbalanced, carrying;
  for (int u = 0; u < p; ++u) {
    const auto k = static_cast<std::size_t>(u);
    if (prof.n[k] != mod(static_cast<std::int64_t>(lambda) * prof.m[k], p)) unbalanced.push_back(u);
    if (prof.m[k] != 0) carrying.push_back(u);
  }
  if (unbalanced.size() < 2 || carrying.size() < 2)
    throw InvariantError("classify_case: Case 2 without two witnesses of each kind");
  out.unbalanced = {unbalanced[0], unbalanced[1]};
  out.b_carrying = {carrying[0], carrying[1]};
  return out;
}

bool check_derived_product(const Element& g) {
  const auto sections = psi(g);
  Element prod = identity(g.group());
  for (const auto& s : sections) prod = prod * s;
  return abelianize(prod) == std::make_pair(0, 0);
}

PropagationReport check_propagates(const Element& g, std::optional<std::size_t> length_cap, const EqualOptions& eq) {
  const GgsGroup& G = g.group();
  const int p = G.p();
  const auto [i, j] = abelianize(g);
  if (i == 0) throw PreconditionError("check_propagates: a-exponent i must be non-zero");
  if (G.is_torsion()) throw PreconditionError("check_propagates: group must be non-torsion");

  PropagationReport rep;
  rep.verdict = Verdict::pass;
  const Element gp = power(g, p);
  const std::pair<int, int> expected{mod(static_cast<std::int64_t>(G.lambda()) * j, p), j};
  std::vector<Element> sections;
  for (int u = 0; u < p; ++u) {
    sections.push_back(section(gp, u));
    rep.section_abelianizations.push_back(abelianize(sections.back()));
    if (rep.section_abelianizations.back() != expected) rep.verdict = Verdict::fail;
  }

  if (length_cap) {
    const auto total = length(g, *length_cap, eq);
    std::optional<std::size_t> sum = 0;
    for (int u = 0; u < p && sum; ++u) {
      const auto l = length(section(g, u), *length_cap, eq);
      sum = l ? std::optional(*sum + *l) : std::nullopt;
    }
    bool certified = total && sum;
    bool holds = certified && *sum <= *total;
    for (const auto& s : sections) {
      if (!certified) break;
      const auto l = length(s, *length_cap, eq);
      if (!l) {
        certified = false;
        break;
      }
      holds = holds && *l <= *sum;
    }
    if (certified) {
      rep.length_bound_holds = holds;
      if (!holds) rep.verdict = Verdict::fail;
    }
  }
  return rep;
}

SectionHalfReport check_section_less_than_half(const Element& x, std::size_t cap, const EqualOptions& eq) {
  SectionHalfReport rep;
  const GgsGroup& G = x.group();
  const auto [al, be] = abelianize(x);
  if (G.is_torsion()) {
    rep.reason = "group is torsion";
    return rep;
  }
  if (al != 0 || be == 0) {
    rep.reason = "x is not b^t mod G' with t != 0";
    return rep;
  }
  if (classify_case(exponent_profile(x), G.lambda()).tag != CaseVerdict::Tag::case2) {
    rep.reason = "x is in Case 1";
    return rep;
  }
  rep.length = length(x, cap, eq);
  if (!rep.length) {
    rep.reason = "length not certified within cap";
    return rep;
  }
  if (*rep.length == 0 || *rep.length % 2 != 0) {
    rep.reason = "length is odd";
    return rep;
  }
  const std::size_t mu = *rep.length / 2;
  for (int u = 0; u < G.p(); ++u) {
    const Element s = section(x, u);
    if (is_trivial(s, eq)) continue;
    const auto l = length(s, mu > 0 ? mu - 1 : 0, eq);
    if (l && *l < mu) {
      rep.verdict = Verdict::pass;
      rep.witness = u;
      return rep;
    }
  }
  rep.verdict = Verdict::fail;
  rep.reason = "no nontrivial section shorter than |x|/2";
  return rep;
}

ContractionReport check_length_contraction(const Element& g, std::size_t cap, const EqualOptions& eq) {
  ContractionReport rep;
  if (root_permutation_power(g) != 0) return rep;
  rep.length = length(g, cap, eq);
  if (!rep.length) return rep;
  const std::size_t l = *rep.length;
  std::size_t sum = 0;
  bool ok = true;
  for (const auto& s : psi(g)) {
    const auto sl = length(s, cap, eq);
    if (!sl) {
      rep.length.reset();
      rep.section_lengths.clear();
      return rep;
    }
    rep.section_lengths.push_back(*sl);
    sum += *sl;
    ok = ok && 2 * *sl <= l + 1;
    if (l > 1) ok = ok && *sl < l;
  }
  ok = ok && sum <= l;
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  return rep;
}

IntervalScan interval_lemma_scan(int p) {
  fp::require_odd_prime(p);
  if (p < 5) throw PreconditionError("interval lemma needs p >= 5 (no k with 1 < k < p-1)");
  IntervalScan scan;
  for (int i = 1; i < p; ++i) {
    for (int k = 2; k < p - 1; ++k) {
      for (int i1 = 0; i1 < p; ++i1) {
        for (int i2 = 0; i2 < p; ++i2) {
          if (i1 == i2) continue;
          ++scan.quadruples;
          int exactly_one = 0;
          for (int v = 0; v < p; ++v) {
            bool has1 = false, has2 = false;
            for (int d = 0; d < k; ++d) {
              const int x = mod(v - d * i, p);
              has1 = has1 || x == i1;
              has2 = has2 || x == i2;
            }
            exactly_one += has1 != has2;
          }
          if (exactly_one != 2) continue;
          ++scan.hypothesis_met;
          if (i2 != mod(i1 + i, p) && i2 != mod(i1 - i, p)) scan.counterexamples.push_back({i, k, i1, i2});
        }
      }
    }
  }
  return scan;
}

bool commutator_tuple_identity(const GgsGroup& G, const EqualOptions& eq) {
  const int p = G.p();
  const auto lhs = psi(commutator(gen_a(G), gen_b(G)));
  for (int letter = 1; letter <= p; ++letter) {
    Element expected = identity(G);
    if (letter == 1)
      expected = gen_b(G, -1) * gen_a(G, G.e(1));
    else if (letter == p)
      expected = gen_a(G, -G.e(p - 1)) * gen_b(G);
    else
      expected = gen_a(G, G.e(letter) - G.e(letter - 1));
    if (!equal(lhs[static_cast<std::size_t>(letter - 1)], expected, eq)) return false;
  }
  return true;
}

bool k_generator_identity(const GgsGroup& G, const EqualOptions& eq) {
  if (!G.is_constant()) throw PreconditionError("k_generator_identity needs the constant defining vector");
  const int p = G.p();
  const Element y0 = gen_b(G) * gen_a(G, -1);
  auto y = [&](int i) { return conjugate(y0, gen_a(G, i)); };
  const auto lhs = psi(commutator(y0, y(1)));
  std::vector<Element> rhs(static_cast<std::size_t>(p), identity(G));
  rhs[static_cast<std::size_t>(p - 3)] = y(2);
  rhs[static_cast<std::size_t>(p - 2)] = conjugate(y0.inverse() * y(1).inverse(), gen_a(G));
  rhs[static_cast<std::size_t>(p - 1)] = y(1);
  for (std::size_t k = 0; k < rhs.size(); ++k)
    if (!equal(lhs[k], rhs[k], eq)) return false;
  return true;
}

std::vector<std::pair<int, int>> infinite_order_trace(const Element& g, int steps) {
  const GgsGroup& G = g.group();
  const auto [i, j] = abelianize(g);
  if (G.is_torsion()) throw PreconditionError("infinite_order_trace: group must be non-torsion");
  if (i == 0 || j == 0) throw PreconditionError("infinite_order_trace: needs i != 0 and j != 0");
  std::vector<std::pair<int, int>> trace{abelianize(g)};
  Element cur = g;
  for (int s = 0; s < steps; ++s) {
    cur = section(power(cur, G.p()), 1);
    trace.push_back(abelianize(cur));
  }
  return trace;
}

Element b_conjugate(const GgsGroup& G, int j, int l) { return conjugate(gen_b(G, j), gen_a(G, l)); }

Element random_stabilizer_element(const GgsGroup& G, std::mt19937_64& rng, std::size_t max_factors) {
  const int p = G.p();
  std::uniform_int_distribution<std::size_t> count(1, max_factors);
  std::uniform_int_distribution<int> letter(0, p - 1);
  std::uniform_int_distribution<int> nonzero(1, p - 1);
  Element out = identity(G);
  const std::size_t k = count(rng);
  for (std::size_t f = 0; f < k; ++f) {
    const int j = nonzero(rng);
    const int l = letter(rng);
    out = out * b_conjugate(G, j, l);
  }
  return out;
}

Element random_derived_element(const GgsGroup& G, std::mt19937_64& rng, std::size_t max_factors) {
  std::uniform_int_distribution<std::size_t> count(1, max_factors);
  std::bernoulli_distribution flip(0.5);
  const Element c = commutator(gen_a(G), gen_b(G));
  Element out = identity(G);
  const std::size_t k = count(rng);
  for (std::size_t f = 0; f < k; ++f) {
    const Element w = Element(G, random_word(G.p(), 2, rng));
    out = out * conjugate(flip(rng) ? c : c.inverse(), w);
  }
  return out;
}

}  // namespace ggslab::lab
