#include "ggslab/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggslab/error.hpp"
#include "ggslab/ggs.hpp"
#include "ggslab/quotients.hpp"
#include "ggslab/verify.hpp"

namespace ggslab {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string group;
  bool json_out = false;
  std::optional<std::uint64_t> seed;
  std::size_t length_cap = 6;
  int depth_cap = 12;
  std::size_t quotient_guard = 729;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("GGSLAB_SEED")) {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string_view(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw InputError("GGSLAB_SEED is not a non-negative integer");
    }
    return 1;
  }
  EqualOptions equal() const { return {depth_cap}; }
  QuotientOptions quotient() const { return {quotient_guard}; }
};

json group_json(const GgsGroup& G) {
  return {{"p", G.p()}, {"e", std::vector<int>(G.defining_vector().begin(), G.defining_vector().end())}};
}

void emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.json_out)
    out << j.dump() << '\n';
  else
    out << text << '\n';
}

int cmd_classify(const RunConfig& cfg, const GgsGroup& G, std::ostream& out) {
  const bool branch = !G.is_constant();
  json j = group_json(G);
  j["lambda"] = G.lambda();
  j["family"] = to_string(G.family());
  j["torsion"] = G.is_torsion();
  j["branch"] = branch;
  std::string text = "group " + G.spec() + "\nlambda " + std::to_string(G.lambda()) + "\nfamily " +
                     to_string(G.family()) + "\ntorsion " + (G.is_torsion() ? "yes" : "no") + "\nbranch " +
                     (branch ? "yes (regular branch)" : "no (weakly regular branch, not branch)");
  emit(out, cfg, j, text);
  return exit_ok;
}

int cmd_act(const RunConfig& cfg, const GgsGroup& G, const std::string& word, const std::string& vertex,
            std::ostream& out) {
  const Element g = parse_element(G, word);
  const auto image = to_string(act(g, parse_vertex(vertex, G.p())), G.p());
  emit(out, cfg, json{{"vertex", image}}, image);
  return exit_ok;
}

int cmd_section(const RunConfig& cfg, const GgsGroup& G, const std::string& word, const std::string& vertex,
                std::ostream& out) {
  const Element g = parse_element(G, word);
  const auto s = to_string(section(g, parse_vertex(vertex, G.p())).word());
  emit(out, cfg, json{{"section", s}}, s);
  return exit_ok;
}

int cmd_equal(const RunConfig& cfg, const GgsGroup& G, const std::string& w1, const std::string& w2,
              std::ostream& out) {
  const bool eq = equal(parse_element(G, w1), parse_element(G, w2), cfg.equal());
  emit(out, cfg, json{{"equal", eq}}, eq ? "true" : "false");
  return exit_ok;
}

int cmd_length(const RunConfig& cfg, const GgsGroup& G, const std::string& word, std::ostream& out) {
  const auto len = length(parse_element(G, word), cfg.length_cap, cfg.equal());
  json j{{"length", len ? json(*len) : json("unknown")}};
  emit(out, cfg, j, len ? std::to_string(*len) : "unknown");
  return exit_ok;
}

int cmd_abelianize(const RunConfig& cfg, const GgsGroup& G, const std::string& word, std::ostream& out) {
  const auto [al, be] = abelianize(parse_element(G, word));
  emit(out, cfg, json{{"a", al}, {"b", be}}, "(" + std::to_string(al) + ", " + std::to_string(be) + ")");
  return exit_ok;
}

int cmd_quotient(const RunConfig& cfg, const GgsGroup& G, int n, std::ostream& out) {
  const auto q = level_quotient(G, n, cfg.quotient());
  json j = group_json(G);
  j["n"] = n;
  j["order"] = to_json(q.order());
  std::string text = "order " + q.order().to_string();
  if (n >= 2) {
    const auto census = maximal_subgroups_census(G, n, cfg.quotient());
    j["census"] = to_json(census);
    text += "\nmaximal subgroups " + std::to_string(census.maximal.size());
    for (const auto& m : census.maximal)
      text += "\n  (" + std::to_string(m.functional[0]) + "," + std::to_string(m.functional[1]) +
              ") index " + std::to_string(m.index) + (m.normal ? " normal" : " not normal");
  }
  emit(out, cfg, j, text);
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg, const GgsGroup& G, const std::vector<std::string>& names, std::ostream& out) {
  lab::SuiteOptions opts;
  opts.seed = cfg.resolved_seed();
  opts.length_cap = cfg.length_cap;
  opts.equal = cfg.equal();
  opts.quotient = cfg.quotient();

  std::vector<std::string> selected;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& c : lab::check_names())
        if (lab::check_applies(c, G)) selected.push_back(c);
    } else {
      selected.push_back(n);
    }
  }
  json reports = json::array();
  std::string text;
  bool failed = false;
  for (const auto& name : selected) {
    const auto r = lab::run_check(name, G, opts);
    failed = failed || !r.counterexamples.empty();
    reports.push_back(lab::to_json(r, opts.seed));
    if (!text.empty()) text += '\n';
    text += (r.counterexamples.empty() ? "PASS " : "FAIL ") + r.lemma + ": " + std::to_string(r.passed) + "/" +
            std::to_string(r.cases_run) + " passed, " + std::to_string(r.skipped) + " skipped";
    for (const auto& c : r.counterexamples) text += "\n  counterexample " + c;
  }
  json j = group_json(G);
  j["seed"] = opts.seed;
  j["reports"] = reports;
  emit(out, cfg, j, text);
  return failed ? exit_counterexample : exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations and machine checks for GGS-groups on the p-adic tree", "ggslab"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--group", cfg.group, "Group spec, e.g. p=3;e=1,2");
  app.add_flag("--json", cfg.json_out, "Emit JSON");
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps (default: GGSLAB_SEED or 1)");
  app.add_option("--length-cap", cfg.length_cap, "Largest length certified by exhaustive search")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth-cap", cfg.depth_cap, "Recursion depth cap of the word problem")->check(CLI::PositiveNumber);
  app.add_option("--quotient-guard", cfg.quotient_guard, "Largest number of leaves for congruence quotients")
      ->check(CLI::PositiveNumber);

  std::string w1, w2, vertex;
  int level = 0;
  std::vector<std::string> names;

  auto* classify = app.add_subcommand("classify", "Family, lambda and branch status");
  auto* act_cmd = app.add_subcommand("act", "Image of a vertex");
  act_cmd->add_option("word", w1)->required();
  act_cmd->add_option("vertex", vertex)->required();
  auto* section_cmd = app.add_subcommand("section", "Section at a vertex");
  section_cmd->add_option("word", w1)->required();
  section_cmd->add_option("vertex", vertex)->required();
  auto* equal_cmd = app.add_subcommand("equal", "Decide whether two words are equal in G");
  equal_cmd->add_option("word1", w1)->required();
  equal_cmd->add_option("word2", w2)->required();
  auto* length_cmd = app.add_subcommand("length", "Length up to --length-cap");
  length_cmd->add_option("word", w1)->required();
  auto* abel_cmd = app.add_subcommand("abelianize", "Image in G/G'");
  abel_cmd->add_option("word", w1)->required();
  auto* quotient_cmd = app.add_subcommand("quotient", "Order of G/st(n) and maximal subgroup census");
  quotient_cmd->add_option("n", level)->required()->check(CLI::PositiveNumber);
  auto* verify_cmd = app.add_subcommand("verify", "Run named checks (or 'all')");
  verify_cmd->add_option("checks", names)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input;
  }

  try {
    if (cfg.group.empty()) throw InputError("--group is required");
    const GgsGroup G = parse_group_spec(cfg.group);
    if (*classify) return cmd_classify(cfg, G, out);
    if (*act_cmd) return cmd_act(cfg, G, w1, vertex, out);
    if (*section_cmd) return cmd_section(cfg, G, w1, vertex, out);
    if (*equal_cmd) return cmd_equal(cfg, G, w1, w2, out);
    if (*length_cmd) return cmd_length(cfg, G, w1, out);
    if (*abel_cmd) return cmd_abelianize(cfg, G, w1, out);
    if (*quotient_cmd) return cmd_quotient(cfg, G, level, out);
    return cmd_verify(cfg, G, names, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return exit_resource;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
}

}  // namespace ggslab
