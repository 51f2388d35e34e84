#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois/catalog.hpp"
#include "galois/generate.hpp"
#include "galois/report.hpp"
#include "galois/theorems.hpp"

namespace galois {

enum class Suite { lm, rm, rm045, lm045, lf, rf, derivations, modularity, composition };

/// The order `verify --suite all` runs them in.
inline constexpr std::array<Suite, 9> all_suites = {Suite::lm,  Suite::rm,          Suite::rm045,
                                                    Suite::lm045, Suite::lf,        Suite::rf,
                                                    Suite::derivations, Suite::modularity, Suite::composition};

inline std::string_view to_string(Suite s) {
  constexpr std::array<std::string_view, 9> names = {"lm", "rm",          "rm045",      "lm045",      "lf",
                                                     "rf", "derivations", "modularity", "composition"};
  return names[static_cast<std::size_t>(s)];
}

inline std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : all_suites)
    if (to_string(s) == text) return s;
  return std::nullopt;
}

/// Lattices the theorem suites range over by default.
inline std::vector<LatticePtr> theorem_family() {
  return catalog_family({"C2", "C3", "C4", "B2", "B3", "M3", "N5", "Div12"});
}

/// Catalog lattices small enough for the composition suite.
inline std::vector<LatticePtr> composition_family() {
  std::vector<LatticePtr> out;
  for (const auto& L : catalog())
    if (L->size() <= 4) out.push_back(L);
  return out;
}

struct SuiteResult {
  Suite suite = Suite::lm;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_lines;  // first few, in enumeration order

  bool ok() const noexcept { return failures == 0; }
};

inline constexpr std::size_t max_failure_lines = 5;

namespace detail {

inline void note_failure(SuiteResult& r, const std::string& line) {
  ++r.failures;
  if (r.failure_lines.size() < max_failure_lines) r.failure_lines.push_back(line);
}

inline void tally(SuiteResult& r, const std::string& what, const EquivalenceReport& e) {
  ++r.cases;
  if (e.skipped) ++r.skipped;
  else if (!e.consistent()) note_failure(r, what + ": " + format_equivalence(e));
}

inline void tally(SuiteResult& r, const std::string& what, const Report& rep) {
  ++r.cases;
  bool any_evaluated = false;
  for (const auto& c : rep.checks) {
    if (c.outcome != CheckOutcome::skipped) any_evaluated = true;
    if (c.outcome == CheckOutcome::violated) note_failure(r, what + ": " + format_check(c));
  }
  if (!any_evaluated) ++r.skipped;
}

}  // namespace detail

/// Runs one theorem suite over every ordered pair (every composable triple
/// for composition) of the given lattices.
inline SuiteResult run_suite(Suite suite, const std::vector<LatticePtr>& family) {
  SuiteResult r{suite, 0, 0, 0, {}};
  if (suite == Suite::composition) {
    for (const auto& P : family)
      for (const auto& Q : family) {
        const auto first = enumerate_adjoint_connections(P, Q);
        for (const auto& S : family) {
          const auto second = enumerate_adjoint_connections(Q, S);
          for (const auto& a : first)
            for (const auto& b : second)
              for (Law law : {Law::LF0, Law::RF0})
                detail::tally(r, describe(a) + " then " + describe(b), verify_composition_stability(a, b, law));
        }
      }
    return r;
  }
  for (const auto& P : family)
    for (const auto& Q : family) {
      if (suite == Suite::lf) {
        for (const auto& l : enumerate_left_adjoint_connections(P, Q)) {
          if (auto a = make_adjoint(l.conn)) detail::tally(r, describe(l), verify_lf_theorem(*a));
          else detail::tally(r, describe(l), verify_lf_theorem(l));
        }
        continue;
      }
      if (suite == Suite::rf) {
        for (const auto& g : enumerate_right_adjoint_connections(P, Q)) {
          if (auto a = make_adjoint(g.conn)) detail::tally(r, describe(g), verify_rf_theorem(*a));
          else detail::tally(r, describe(g), verify_rf_theorem(g));
        }
        continue;
      }
      for (const auto& a : enumerate_adjoint_connections(P, Q)) {
        const auto what = describe(a);
        switch (suite) {
          case Suite::lm: detail::tally(r, what, verify_lm_theorem(a)); break;
          case Suite::rm: detail::tally(r, what, verify_rm_theorem(a)); break;
          case Suite::rm045: detail::tally(r, what, verify_rm045_theorem(a)); break;
          case Suite::lm045: detail::tally(r, what, verify_lm045_theorem(a)); break;
          case Suite::derivations: detail::tally(r, what, verify_derivations(a)); break;
          case Suite::modularity: detail::tally(r, what, verify_modularity_refinements(a)); break;
          default: break;
        }
      }
    }
  return r;
}

/// Runs a suite over its default lattice family.
inline SuiteResult run_suite(Suite suite) {
  return run_suite(suite, suite == Suite::composition ? composition_family() : theorem_family());
}

inline std::string format_suite_result(const SuiteResult& r) {
  std::string out = "suite " + std::string(to_string(r.suite)) + ": " + std::to_string(r.cases) + " cases, " +
                    std::to_string(r.skipped) + " skipped, " + std::to_string(r.failures) + " failures\n";
  for (const auto& line : r.failure_lines) out += "  failure " + line + "\n";
  if (r.failures > r.failure_lines.size())
    out += "  ... " + std::to_string(r.failures - r.failure_lines.size()) + " more\n";
  return out;
}

}  // namespace galois
