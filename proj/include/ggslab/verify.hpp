#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ggslab/ggs.hpp"
#include "ggslab/quotients.hpp"

namespace ggslab::lab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t length_cap = 6;
  EqualOptions equal;
  QuotientOptions quotient;
};

/// Result of one named check: {lemma, cases_run, passed, skipped, counterexamples}.
struct LemmaReport {
  std::string lemma;
  std::size_t cases_run = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> counterexamples;
  nlohmann::json details;  // null unless the check has extra output
};

/// All check names in run order.
const std::vector<std::string>& check_names();

/// Whether a named check's hypotheses hold for G (e.g. non-torsion, constant vector).
bool check_applies(std::string_view name, const GgsGroup& G);

/// Runs one check. Each check seeds its own generator from (seed, name), so a
/// report does not depend on which other checks ran. Unknown names throw
/// InputError; inapplicable ones throw PreconditionError.
LemmaReport run_check(std::string_view name, const GgsGroup& G, const SuiteOptions& opts);

nlohmann::json to_json(const LemmaReport& r, std::uint64_t seed);

}  // namespace ggslab::lab
