#include "ggslab/verify.hpp"

#include <random>

#include "ggslab/constant_model.hpp"
#include "ggslab/error.hpp"
#include "ggslab/fp.hpp"
#include "ggslab/lemma_lab.hpp"

namespace ggslab::lab {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string show(const Element& g) { return "[" + to_string(g.word()) + "]"; }

void tally(LemmaReport& r, bool ok, const std::string& what) {
  ++r.cases_run;
  if (ok)
    ++r.passed;
  else
    r.counterexamples.push_back(what);
}

void tally(LemmaReport& r, Verdict v, const std::string& what) {
  ++r.cases_run;
  if (v == Verdict::pass)
    ++r.passed;
  else if (v == Verdict::skipped)
    ++r.skipped;
  else
    r.counterexamples.push_back(what);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// All vectors in F_p^len (exhaustive) or `samples` random ones.
template <typename Fn>
void for_vectors(int p, int len, std::int64_t exhaustive_limit, std::size_t samples, std::mt19937_64& rng, Fn&& fn) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(len));
  const std::int64_t total = ipow(p, len);
  if (total <= exhaustive_limit) {
    for (std::int64_t code = 0; code < total; ++code) {
      std::int64_t c = code;
      for (auto& x : v) {
        x = c % p;
        c /= p;
      }
      fn(v);
    }
    return;
  }
  std::uniform_int_distribution<int> digit(0, p - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& x : v) x = digit(rng);
    fn(v);
  }
}

LemmaReport torsion_criterion(const GgsGroup& G, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "torsion-criterion";
  const int p = G.p();
  for_vectors(p, p - 1, 1'000'000, 10'000, rng, [&](const std::vector<std::int64_t>& e) {
    std::int64_t sum = 0;
    bool nonzero = false;
    for (auto x : e) {
      sum += x;
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) return;
    const GgsGroup H = make_ggs(p, e);
    tally(r, H.is_torsion() == (sum % p == 0), H.spec());
  });
  return r;
}

LemmaReport circulant(const GgsGroup& G, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "circulant";
  const int p = G.p();
  for_vectors(p, p, 100'000, 10'000, rng, [&](const std::vector<std::int64_t>& m) {
    std::int64_t sum = 0;
    for (auto x : m) sum += x;
    const auto rank = fp::circulant_rank(m, p);
    const auto explicit_rank = fp::gaussian_rank(fp::FpMatrix::circulant(m, p));
    std::string what = "m=(";
    for (std::size_t k = 0; k < m.size(); ++k) what += (k ? "," : "") + std::to_string(m[k]);
    what += ")";
    tally(r, rank == explicit_rank && (rank < p) == (sum % p == 0), what);
  });
  return r;
}

LemmaReport commutator_tuple(const GgsGroup& G, const SuiteOptions& o) {
  LemmaReport r;
  r.lemma = "commutator-tuple";
  tally(r, commutator_tuple_identity(G, o.equal), G.spec());
  return r;
}

LemmaReport k_generator(const GgsGroup& G, const SuiteOptions& o) {
  LemmaReport r;
  r.lemma = "k-generator";
  tally(r, k_generator_identity(G, o.equal), G.spec());
  return r;
}

LemmaReport derived_product(const GgsGroup& G, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "derived-product";
  for (int k = 0; k < 100; ++k) {
    const Element g = random_derived_element(G, rng);
    tally(r, check_derived_product(g), show(g));
  }
  return r;
}

LemmaReport split_case(const GgsGroup& G, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "split-case";
  const int p = G.p();
  const int lambda = G.lambda();
  while (r.cases_run < 1000) {
    const Element g = random_stabilizer_element(G, rng);
    if (abelianize(g).second == 0) continue;
    bool ok = true;
    try {
      const auto prof = exponent_profile(g);
      int sum_m = 0, sum_n = 0;
      for (int u = 0; u < p; ++u) {
        sum_m = (sum_m + prof.m[static_cast<std::size_t>(u)]) % p;
        sum_n = (sum_n + prof.n[static_cast<std::size_t>(u)]) % p;
      }
      ok = sum_m == prof.t && sum_n == (lambda * prof.t) % p;
      const auto verdict = classify_case(prof, lambda);
      auto at = [&](const std::vector<int>& v, int u) { return v[static_cast<std::size_t>(u)]; };
      bool case1_holds = false;
      for (int u = 0; u < p; ++u) case1_holds = case1_holds || (at(prof.n, u) == 0 && at(prof.m, u) != 0);
      if (verdict.tag == CaseVerdict::Tag::case1) {
        ok = ok && case1_holds && at(prof.n, verdict.u) == 0 && at(prof.m, verdict.u) == verdict.j0 && verdict.j0 != 0;
      } else {
        ok = ok && !case1_holds;
        const auto [u1, u2] = verdict.unbalanced;
        const auto [v1, v2] = verdict.b_carrying;
        ok = ok && u1 != u2 && v1 != v2;
        for (const int u : {u1, u2}) ok = ok && at(prof.n, u) != (lambda * at(prof.m, u)) % p;
        for (const int v : {v1, v2}) ok = ok && at(prof.m, v) != 0;
        for (int u = 0; u < p; ++u) ok = ok && (at(prof.m, u) == 0 || at(prof.n, u) != 0);
      }
    } catch (const InvariantError&) {
      ok = false;
    }
    tally(r, ok, show(g));
  }
  return r;
}

LemmaReport propagation(const GgsGroup& G, const SuiteOptions& o, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "propagation";
  const int p = G.p();
  std::uniform_int_distribution<int> nonzero(1, p - 1);
  for (int k = 0; k < 200; ++k) {
    const Element g = gen_a(G, nonzero(rng)) * random_stabilizer_element(G, rng, 4);
    // Lengths are exponential to certify; the bound is checked on a prefix.
    const auto cap = k < 20 ? std::optional(o.length_cap) : std::nullopt;
    const auto rep = check_propagates(g, cap, o.equal);
    tally(r, rep.verdict, show(g));
  }
  return r;
}

LemmaReport infinite_order(const GgsGroup& G) {
  LemmaReport r;
  r.lemma = "infinite-order";
  const Element g = gen_a(G) * gen_b(G);
  const auto trace = infinite_order_trace(g, 5);
  const std::pair<int, int> expected{G.lambda(), 1};
  for (std::size_t s = 1; s < trace.size(); ++s)
    tally(r, trace[s] == expected,
          "step " + std::to_string(s) + ": (" + std::to_string(trace[s].first) + "," + std::to_string(trace[s].second) + ")");
  r.details = nlohmann::json::array();
  for (const auto& [al, be] : trace) r.details.push_back({al, be});
  return r;
}

LemmaReport section_half(const GgsGroup& G, const SuiteOptions& o, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "section-half";
  const std::size_t cap = std::min<std::size_t>(o.length_cap, 4);
  for (int attempt = 0; attempt < 4000 && r.passed < 50; ++attempt) {
    const Element x = random_stabilizer_element(G, rng, 4);
    if (abelianize(x).second == 0) continue;
    const auto rep = check_section_less_than_half(x, cap, o.equal);
    tally(r, rep.verdict, show(x));
  }
  return r;
}

LemmaReport length_contraction(const GgsGroup& G, const SuiteOptions& o, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "length-contraction";
  const std::size_t cap = std::min<std::size_t>(o.length_cap, 4);
  for (int k = 0; k < 200; ++k) {
    const Element g = random_stabilizer_element(G, rng, 4);
    const auto rep = check_length_contraction(g, cap, o.equal);
    tally(r, rep.verdict, show(g));
  }
  return r;
}

LemmaReport interval_lemma(const GgsGroup& G) {
  LemmaReport r;
  r.lemma = "interval-lemma";
  const auto scan = interval_lemma_scan(G.p());
  r.cases_run = scan.hypothesis_met;
  r.passed = scan.hypothesis_met - scan.counterexamples.size();
  for (const auto& c : scan.counterexamples)
    r.counterexamples.push_back("i=" + std::to_string(c.i) + " k=" + std::to_string(c.k) + " i1=" + std::to_string(c.i1) +
                                " i2=" + std::to_string(c.i2));
  r.details = {{"quadruples", scan.quadruples}, {"hypothesis_met", scan.hypothesis_met}};
  return r;
}

LemmaReport census(const GgsGroup& G, const SuiteOptions& o) {
  LemmaReport r;
  r.lemma = "census";
  r.details = nlohmann::json::array();
  for (int n = 2; n <= 3; ++n) {
    std::size_t leaves = 1;
    for (int k = 0; k < n; ++k) leaves *= static_cast<std::size_t>(G.p());
    if (leaves > o.quotient.leaf_guard) break;
    const auto c = maximal_subgroups_census(G, n, o.quotient);
    tally(r, c.verdict, G.spec() + " n=" + std::to_string(n));
    r.details.push_back(to_json(c));
  }
  return r;
}

LemmaReport constant_model_check(const GgsGroup& G, std::mt19937_64& rng) {
  LemmaReport r;
  r.lemma = "constant-model";
  const int p = G.p();
  const auto A = model::model_matrix(p);
  tally(r, true, "action matrix invariants");

  // (qZ)^{p-1} is invariant under A.
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int k = 0; k < 100; ++k) {
    model::IntRowVector v(p - 1);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = 2 * coord(rng);
    model::ModelElement x{0, v * A.A};
    tally(r, model::mq_membership(x, 2), "A-invariance of (2Z)^{p-1}");
  }

  tally(r, model::distinct_mq_witness(2, 3, p), "M_2 != M_3");
  tally(r, model::distinct_mq_witness(2, 5, p), "M_2 != M_5");

  double size = p;
  for (int k = 0; k < p - 1; ++k) size *= 2;
  if (size <= 5000) {
    const auto fm = model::reduce_mod(p, 2);
    const auto maximal = model::enumerate_maximal_subgroups(fm);
    bool exotic = false;
    for (const auto& m : maximal) exotic = exotic || (!m.normal && m.index != static_cast<std::size_t>(p));
    tally(r, exotic, "no maximal subgroup that is non-normal and of index != p");
    r.details = model::census_to_json(fm, maximal);
    nlohmann::json profile = nlohmann::json::object();
    for (const auto& [ord, count] : model::order_profile(fm)) profile[std::to_string(ord)] = count;
    r.details["order_profile"] = profile;
  }
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "torsion-criterion", "circulant",      "commutator-tuple",   "k-generator",    "derived-product",
      "split-case",        "propagation",    "infinite-order",     "section-half",   "length-contraction",
      "interval-lemma",    "census",         "constant-model"};
  return names;
}

bool check_applies(std::string_view name, const GgsGroup& G) {
  if (name == "k-generator" || name == "constant-model") return G.is_constant();
  if (name == "split-case" || name == "propagation" || name == "infinite-order" || name == "section-half")
    return !G.is_torsion();
  if (name == "interval-lemma") return G.p() >= 5;
  return true;
}

LemmaReport run_check(std::string_view name, const GgsGroup& G, const SuiteOptions& opts) {
  const auto& names = check_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InputError("unknown check '" + std::string(name) + "'");
  if (!check_applies(name, G))
    throw PreconditionError("check '" + std::string(name) + "' does not apply to " + G.spec());
  std::mt19937_64 rng(mix_seed(opts.seed, name));
  if (name == "torsion-criterion") return torsion_criterion(G, rng);
  if (name == "circulant") return circulant(G, rng);
  if (name == "commutator-tuple") return commutator_tuple(G, opts);
  if (name == "k-generator") return k_generator(G, opts);
  if (name == "derived-product") return derived_product(G, rng);
  if (name == "split-case") return split_case(G, rng);
  if (name == "propagation") return propagation(G, opts, rng);
  if (name == "infinite-order") return infinite_order(G);
  if (name == "section-half") return section_half(G, opts, rng);
  if (name == "length-contraction") return length_contraction(G, opts, rng);
  if (name == "interval-lemma") return interval_lemma(G);
  if (name == "census") return census(G, opts);
  return constant_model_check(G, rng);
}

nlohmann::json to_json(const LemmaReport& r, std::uint64_t seed) {
  nlohmann::json j{{"lemma", r.lemma},
                   {"cases_run", r.cases_run},
                   {"passed", r.passed},
                   {"skipped", r.skipped},
                   {"counterexamples", r.counterexamples},
                   {"seed", seed}};
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

}  // namespace ggslab::lab
