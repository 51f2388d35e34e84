#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galois/laws.hpp"

namespace galois {

/// Truth values of a family of laws that a theorem declares equivalent.
/// `consistent()` is false exactly when two evaluated laws disagree, which
/// would refute the theorem.
struct EquivalenceReport {
  std::string theorem;
  std::vector<LawReport> laws;
  bool skipped = false;
  std::string reason;

  bool consistent() const {
    std::optional<bool> seen;
    for (const auto& law : laws) {
      if (law.skipped()) continue;
      if (seen && *seen != law.holds()) return false;
      seen = law.holds();
    }
    return true;
  }

  /// The shared truth value, when at least one law was evaluated.
  std::optional<bool> value() const {
    for (const auto& law : laws)
      if (!law.skipped()) return law.holds();
    return std::nullopt;
  }
};

enum class CheckOutcome { held, vacuous, violated, skipped };

inline std::string_view to_string(CheckOutcome c) {
  switch (c) {
    case CheckOutcome::held: return "held";
    case CheckOutcome::vacuous: return "vacuous";
    case CheckOutcome::violated: return "violated";
    case CheckOutcome::skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string statement;
  CheckOutcome outcome = CheckOutcome::held;
  std::string detail;
};

/// Outcome of a batch of implications / biconditionals on one connection.
struct Report {
  std::string name;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.outcome == CheckOutcome::violated) return false;
    return true;
  }
};

namespace detail {

inline EquivalenceReport equivalence(std::string theorem, const LawContext& ctx, std::initializer_list<Law> laws) {
  EquivalenceReport report{std::move(theorem), {}, false, {}};
  for (Law law : laws) report.laws.push_back(eval_law(law, ctx));
  return report;
}

inline EquivalenceReport skipped_equivalence(std::string theorem, std::string reason) {
  return {std::move(theorem), {}, true, std::move(reason)};
}

inline Check implication(std::string statement, const LawReport& premise, const LawReport& conclusion) {
  if (premise.skipped() || conclusion.skipped())
    return {std::move(statement), CheckOutcome::skipped, premise.skipped() ? premise.reason : conclusion.reason};
  if (!premise.holds()) return {std::move(statement), CheckOutcome::vacuous, {}};
  if (conclusion.holds()) return {std::move(statement), CheckOutcome::held, {}};
  return {std::move(statement), CheckOutcome::violated, premise.name + " holds but " + conclusion.name + " fails"};
}

inline Check biconditional(std::string statement, bool lhs, bool rhs) {
  if (lhs == rhs) return {std::move(statement), CheckOutcome::held, lhs ? "both true" : "both false"};
  return {std::move(statement), CheckOutcome::violated,
          std::string("left side ") + (lhs ? "true" : "false") + ", right side " + (rhs ? "true" : "false")};
}

}  // namespace detail

/// LM1, LM2, LM3 must agree, and with LM0 as well when P has a top.
inline EquivalenceReport verify_lm_theorem(const AdjointConnection& a) {
  return detail::equivalence("LM", LawContext::of(a), {Law::LM1, Law::LM2, Law::LM3, Law::LM0});
}

inline EquivalenceReport verify_rm_theorem(const AdjointConnection& a) {
  return detail::equivalence("RM", LawContext::of(a), {Law::RM1, Law::RM2, Law::RM3, Law::RM0});
}

/// RM0 <=> RM4 <=> RM5, for P with binary joins and Q with a bottom.
inline EquivalenceReport verify_rm045_theorem(const AdjointConnection& a) {
  if (auto missing = missing_structure(Law::RM4, *a.source(), *a.target()); !missing.empty())
    return detail::skipped_equivalence("RM045", std::move(missing));
  return detail::equivalence("RM045", LawContext::of(a), {Law::RM0, Law::RM4, Law::RM5});
}

inline EquivalenceReport verify_lm045_theorem(const AdjointConnection& a) {
  if (auto missing = missing_structure(Law::LM4, *a.source(), *a.target()); !missing.empty())
    return detail::skipped_equivalence("LM045", std::move(missing));
  return detail::equivalence("LM045", LawContext::of(a), {Law::LM0, Law::LM4, Law::LM5});
}

/// LF1 <=> LF2 for any left adjoint connection.
inline EquivalenceReport verify_lf_theorem(const LeftAdjointConnection& a) {
  return detail::equivalence("LF", LawContext::of(a), {Law::LF1, Law::LF2});
}

/// LF1 <=> LF2, and <=> LF0 when both posets have binary meets.
inline EquivalenceReport verify_lf_theorem(const AdjointConnection& a) {
  return detail::equivalence("LF", LawContext::of(a), {Law::LF1, Law::LF2, Law::LF0});
}

inline EquivalenceReport verify_rf_theorem(const RightAdjointConnection& a) {
  return detail::equivalence("RF", LawContext::of(a), {Law::RF1, Law::RF2});
}

inline EquivalenceReport verify_rf_theorem(const AdjointConnection& a) {
  return detail::equivalence("RF", LawContext::of(a), {Law::RF1, Law::RF2, Law::RF0});
}

/// RF0 => RM0 (put c = ⊥) and LF0 => LM0 (put b = ⊤). Never the converses.
inline Report verify_derivations(const AdjointConnection& a) {
  const auto ctx = LawContext::of(a);
  Report report{"derivations", {}};
  report.checks.push_back(detail::implication("RF0 => RM0", eval_law(Law::RF0, ctx), eval_law(Law::RM0, ctx)));
  report.checks.push_back(detail::implication("LF0 => LM0", eval_law(Law::LF0, ctx), eval_law(Law::LM0, ctx)));
  return report;
}

/// For bounded lattices P and Q: P modular gives LM0 <=> LF0, Q modular gives
/// RM0 <=> RF0, and both modular gives (LM0 & RM0) <=> (LF0 & RF0).
inline Report verify_modularity_refinements(const AdjointConnection& a) {
  const auto& P = *a.source();
  const auto& Q = *a.target();
  Report report{"modularity", {}};
  const char* statements[] = {"P modular: LM0 <=> LF0", "Q modular: RM0 <=> RF0",
                              "P, Q modular: LM0 & RM0 <=> LF0 & RF0"};
  if (!(P.is_lattice() && P.is_bounded() && Q.is_lattice() && Q.is_bounded())) {
    for (const char* s : statements) report.checks.push_back({s, CheckOutcome::skipped, "P and Q must be bounded lattices"});
    return report;
  }
  const auto ctx = LawContext::of(a);
  const bool lm0 = eval_law(Law::LM0, ctx).holds();
  const bool rm0 = eval_law(Law::RM0, ctx).holds();
  const bool lf0 = eval_law(Law::LF0, ctx).holds();
  const bool rf0 = eval_law(Law::RF0, ctx).holds();
  if (P.is_modular()) report.checks.push_back(detail::biconditional(statements[0], lm0, lf0));
  else report.checks.push_back({statements[0], CheckOutcome::skipped, "P not modular"});
  if (Q.is_modular()) report.checks.push_back(detail::biconditional(statements[1], rm0, rf0));
  else report.checks.push_back({statements[1], CheckOutcome::skipped, "Q not modular"});
  if (P.is_modular() && Q.is_modular())
    report.checks.push_back(detail::biconditional(statements[2], lm0 && rm0, lf0 && rf0));
  else report.checks.push_back({statements[2], CheckOutcome::skipped, "P or Q not modular"});
  return report;
}

/// law(r) & law(s) => law(s . r) for law in {LF0, RF0}.
inline Report verify_composition_stability(const AdjointConnection& r, const AdjointConnection& s, Law law) {
  if (law != Law::LF0 && law != Law::RF0)
    throw std::invalid_argument("composition stability is stated for LF0 and RF0 only");
  const auto composite = compose(r, s);
  const auto name = std::string(to_string(law));
  Report report{"composition", {}};
  const auto lr = eval_law(law, r);
  const auto ls = eval_law(law, s);
  const auto lc = eval_law(law, composite);
  if (lr.skipped() || ls.skipped() || lc.skipped()) {
    report.checks.push_back({name + "(r) & " + name + "(s) => " + name + "(s.r)", CheckOutcome::skipped,
                             lr.skipped() ? lr.reason : (ls.skipped() ? ls.reason : lc.reason)});
    return report;
  }
  LawReport both = lr;
  both.name = name + "(r) & " + name + "(s)";
  both.verdict = lr.holds() && ls.holds() ? Verdict::holds : Verdict::fails;
  report.checks.push_back(detail::implication(name + "(r) & " + name + "(s) => " + name + "(s.r)", both, lc));
  return report;
}

}  // namespace galois
