#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois/connection.hpp"

namespace galois {

/// The named laws on an (adjoint) connection R : P -> Q with left adjoint
/// f = f_R : P -> Q and right adjoint g = f^R : Q -> P.
///
///   LM0  f(g(y)) = y ∧ f(⊤)                                   needs ⊤ in P
///   LM1  c <= f(b)  =>  c = f(a) for some a
///   LM2  c <= d  =>  f(g(c)) = c ∧ f(g(d))
///   LM3  c ∧ d exists  =>  f(g(c ∧ d)) = c ∧ f(g(d))
///   LM4  g(c) = g(d)  =>  c ∧ f(⊤) = d ∧ f(⊤)                 needs ⊤ in P, meets in Q
///   LM5  g(c) <= g(d)  =>  c ∧ f(⊤) <= d                      needs ⊤ in P, meets in Q
///   RM0  g(f(x)) = x ∨ g(⊥)                                   needs ⊥ in Q
///   RM1  b >= g(c)  =>  b = g(d) for some d
///   RM2  a <= b  =>  g(f(b)) = b ∨ g(f(a))
///   RM3  a ∨ b exists  =>  g(f(a ∨ b)) = a ∨ g(f(b))
///   RM4  f(a) = f(b)  =>  a ∨ g(⊥) = b ∨ g(⊥)                 needs joins in P, ⊥ in Q
///   RM5  f(a) <= f(b)  =>  a <= b ∨ g(⊥)                      needs joins in P, ⊥ in Q
///   LF0  c ∧ f(b) = f(g(c) ∧ b)                               needs meets in P and Q
///   RF0  a ∨ g(c) = g(f(a) ∨ c)                               needs joins in P and Q
///   LF1  c <= f(b)  =>  c = f(a) for some a <= b
///   LF2  LM1 holds for every restriction a↓ -> f(a)↓
///   RF1  b >= g(c)  =>  b = g(d) for some d >= c
///   RF2  RM1 holds for every restriction c↑ -> g(c)↑
///
/// An equation "x = y ∧ z" is read as "x is the meet of y and z", so it fails
/// wherever that meet does not exist; dually for joins.
enum class Law { LM0, LM1, LM2, LM3, LM4, LM5, RM0, RM1, RM2, RM3, RM4, RM5, LF0, LF1, LF2, RF0, RF1, RF2 };

inline constexpr std::array<Law, 18> all_laws = {Law::LM0, Law::LM1, Law::LM2, Law::LM3, Law::LM4, Law::LM5,
                                                 Law::RM0, Law::RM1, Law::RM2, Law::RM3, Law::RM4, Law::RM5,
                                                 Law::LF0, Law::LF1, Law::LF2, Law::RF0, Law::RF1, Law::RF2};

inline std::string_view to_string(Law law) {
  constexpr std::array<std::string_view, 18> names = {"LM0", "LM1", "LM2", "LM3", "LM4", "LM5",
                                                      "RM0", "RM1", "RM2", "RM3", "RM4", "RM5",
                                                      "LF0", "LF1", "LF2", "RF0", "RF1", "RF2"};
  return names[static_cast<std::size_t>(law)];
}

inline std::optional<Law> parse_law(std::string_view text) {
  for (Law law : all_laws)
    if (to_string(law) == text) return law;
  return std::nullopt;
}

enum class Side { P, Q };

enum class Verdict { holds, fails, skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

/// One side of an evaluated law instance. An absent value means the meet or
/// join the formula asks for does not exist.
struct Term {
  Side side = Side::P;
  std::optional<Elem> value;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Instance {
  bool holds = true;
  Term lhs;
  Term rhs;
};

struct Witness {
  std::vector<std::string> names;
  std::vector<Side> sides;
  std::vector<Elem> values;
  std::vector<std::string> labels;
  Term lhs;
  Term rhs;
  std::string lhs_label;
  std::string rhs_label;
};

struct LawReport {
  std::string name;
  std::optional<Law> law;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::string reason;

  bool holds() const noexcept { return verdict == Verdict::holds; }
  bool fails() const noexcept { return verdict == Verdict::fails; }
  bool skipped() const noexcept { return verdict == Verdict::skipped; }
};

/// What a law may look at: both posets and whichever adjoints are known.
struct LawContext {
  LatticePtr P;
  LatticePtr Q;
  std::optional<MonotoneMap> left;
  std::optional<MonotoneMap> right;

  static LawContext of(const AdjointConnection& a) { return {a.source(), a.target(), a.left, a.right}; }
  static LawContext of(const LeftAdjointConnection& a) { return {a.source(), a.target(), a.left, std::nullopt}; }
  static LawContext of(const RightAdjointConnection& a) { return {a.source(), a.target(), std::nullopt, a.right}; }

  const FiniteLattice& lattice(Side side) const { return side == Side::P ? *P : *Q; }
  std::string label(const Term& t) const { return t.value ? lattice(t.side).label(*t.value) : "undefined"; }
};

struct Variable {
  const char* name;
  Side side;
};

namespace detail {

inline std::optional<Elem> meet_of(const FiniteLattice& L, std::optional<Elem> a, std::optional<Elem> b) {
  if (!a || !b) return std::nullopt;
  return L.meet(*a, *b);
}

inline std::optional<Elem> join_of(const FiniteLattice& L, std::optional<Elem> a, std::optional<Elem> b) {
  if (!a || !b) return std::nullopt;
  return L.join(*a, *b);
}

inline Instance equation(Side side, std::optional<Elem> lhs, std::optional<Elem> rhs) {
  return {lhs.has_value() && rhs.has_value() && *lhs == *rhs, {side, lhs}, {side, rhs}};
}

inline Instance inequality(const FiniteLattice& L, Side side, std::optional<Elem> lo, std::optional<Elem> hi) {
  return {lo.has_value() && hi.has_value() && L.leq(*lo, *hi), {side, lo}, {side, hi}};
}

inline bool needs_left(Law law) {
  return law != Law::RM1 && law != Law::RF1 && law != Law::RF2;
}

inline bool needs_right(Law law) {
  return law != Law::LM1 && law != Law::LF1 && law != Law::LF2;
}

}  // namespace detail

inline std::vector<Variable> law_variables(Law law) {
  switch (law) {
    case Law::LM0: return {{"y", Side::Q}};
    case Law::RM0: return {{"x", Side::P}};
    case Law::LM1:
    case Law::LF1: return {{"b", Side::P}, {"c", Side::Q}};
    case Law::RM1:
    case Law::RF1: return {{"c", Side::Q}, {"b", Side::P}};
    case Law::LM2:
    case Law::LM3:
    case Law::LM4:
    case Law::LM5: return {{"c", Side::Q}, {"d", Side::Q}};
    case Law::RM2:
    case Law::RM3:
    case Law::RM4:
    case Law::RM5: return {{"a", Side::P}, {"b", Side::P}};
    case Law::LF0: return {{"c", Side::Q}, {"b", Side::P}};
    case Law::RF0: return {{"a", Side::P}, {"c", Side::Q}};
    case Law::LF2: return {{"a", Side::P}, {"b", Side::P}, {"c", Side::Q}};
    case Law::RF2: return {{"c", Side::Q}, {"d", Side::Q}, {"b", Side::P}};
  }
  return {};
}

/// Empty when the posets carry the structure the law presupposes; otherwise
/// names what is missing.
inline std::string missing_structure(Law law, const FiniteLattice& P, const FiniteLattice& Q) {
  std::string missing;
  auto need = [&](bool present, const char* what) {
    if (present) return;
    if (!missing.empty()) missing += ", ";
    missing += what;
  };
  switch (law) {
    case Law::LM0: need(P.top().has_value(), "top of P"); break;
    case Law::RM0: need(Q.bottom().has_value(), "bottom of Q"); break;
    case Law::LM4:
    case Law::LM5:
      need(P.top().has_value(), "top of P");
      need(Q.has_binary_meets(), "binary meets in Q");
      break;
    case Law::RM4:
    case Law::RM5:
      need(P.has_binary_joins(), "binary joins in P");
      need(Q.bottom().has_value(), "bottom of Q");
      break;
    case Law::LF0:
      need(P.has_binary_meets(), "binary meets in P");
      need(Q.has_binary_meets(), "binary meets in Q");
      break;
    case Law::RF0:
      need(P.has_binary_joins(), "binary joins in P");
      need(Q.has_binary_joins(), "binary joins in Q");
      break;
    default: break;
  }
  return missing;
}

inline LawReport eval_law(Law law, const LawContext& ctx);

/// Evaluates one instance of a law at the given variable values (ordered as in
/// law_variables). Returns nullopt when the instance's premise is not met.
/// Structural hypotheses are assumed to have been checked by the caller.
inline std::optional<Instance> law_instance(Law law, const LawContext& ctx, std::span<const Elem> v) {
  const FiniteLattice& P = *ctx.P;
  const FiniteLattice& Q = *ctx.Q;
  const MonotoneMap* f = ctx.left ? &*ctx.left : nullptr;
  const MonotoneMap* g = ctx.right ? &*ctx.right : nullptr;
  using detail::equation;
  using detail::inequality;
  using detail::join_of;
  using detail::meet_of;

  switch (law) {
    case Law::LM0: {
      const Elem y = v[0];
      return equation(Side::Q, (*f)((*g)(y)), meet_of(Q, y, (*f)(*P.top())));
    }
    case Law::RM0: {
      const Elem x = v[0];
      return equation(Side::P, (*g)((*f)(x)), join_of(P, x, (*g)(*Q.bottom())));
    }
    case Law::LM1: {
      const Elem b = v[0], c = v[1];
      if (!Q.leq(c, (*f)(b))) return std::nullopt;
      bool in_image = false;
      for (Elem a = 0; a < P.size() && !in_image; ++a) in_image = (*f)(a) == c;
      return Instance{in_image, {Side::Q, c}, {Side::Q, (*f)(b)}};
    }
    case Law::LM2: {
      const Elem c = v[0], d = v[1];
      if (!Q.leq(c, d)) return std::nullopt;
      return equation(Side::Q, (*f)((*g)(c)), meet_of(Q, c, (*f)((*g)(d))));
    }
    case Law::LM3: {
      const Elem c = v[0], d = v[1];
      const auto cd = Q.meet(c, d);
      if (!cd) return std::nullopt;
      return equation(Side::Q, (*f)((*g)(*cd)), meet_of(Q, c, (*f)((*g)(d))));
    }
    case Law::LM4: {
      const Elem c = v[0], d = v[1];
      if ((*g)(c) != (*g)(d)) return std::nullopt;
      const Elem ftop = (*f)(*P.top());
      return equation(Side::Q, Q.meet(c, ftop), Q.meet(d, ftop));
    }
    case Law::LM5: {
      const Elem c = v[0], d = v[1];
      if (!P.leq((*g)(c), (*g)(d))) return std::nullopt;
      return inequality(Q, Side::Q, Q.meet(c, (*f)(*P.top())), d);
    }
    case Law::RM1: {
      const Elem c = v[0], b = v[1];
      if (!P.leq((*g)(c), b)) return std::nullopt;
      bool in_image = false;
      for (Elem d = 0; d < Q.size() && !in_image; ++d) in_image = (*g)(d) == b;
      return Instance{in_image, {Side::P, b}, {Side::P, (*g)(c)}};
    }
    case Law::RM2: {
      const Elem a = v[0], b = v[1];
      if (!P.leq(a, b)) return std::nullopt;
      return equation(Side::P, (*g)((*f)(b)), join_of(P, b, (*g)((*f)(a))));
    }
    case Law::RM3: {
      const Elem a = v[0], b = v[1];
      const auto ab = P.join(a, b);
      if (!ab) return std::nullopt;
      return equation(Side::P, (*g)((*f)(*ab)), join_of(P, a, (*g)((*f)(b))));
    }
    case Law::RM4: {
      const Elem a = v[0], b = v[1];
      if ((*f)(a) != (*f)(b)) return std::nullopt;
      const Elem gbot = (*g)(*Q.bottom());
      return equation(Side::P, P.join(a, gbot), P.join(b, gbot));
    }
    case Law::RM5: {
      const Elem a = v[0], b = v[1];
      if (!Q.leq((*f)(a), (*f)(b))) return std::nullopt;
      return inequality(P, Side::P, a, P.join(b, (*g)(*Q.bottom())));
    }
    case Law::LF0: {
      const Elem c = v[0], b = v[1];
      const auto gcb = P.meet((*g)(c), b);
      return equation(Side::Q, Q.meet(c, (*f)(b)), gcb ? std::optional<Elem>((*f)(*gcb)) : std::nullopt);
    }
    case Law::RF0: {
      const Elem a = v[0], c = v[1];
      const auto fac = Q.join((*f)(a), c);
      return equation(Side::P, P.join(a, (*g)(c)), fac ? std::optional<Elem>((*g)(*fac)) : std::nullopt);
    }
    case Law::LF1: {
      const Elem b = v[0], c = v[1];
      if (!Q.leq(c, (*f)(b))) return std::nullopt;
      bool found = false;
      for (Elem a = 0; a < P.size() && !found; ++a) found = P.leq(a, b) && (*f)(a) == c;
      return Instance{found, {Side::Q, c}, {Side::Q, (*f)(b)}};
    }
    case Law::RF1: {
      const Elem c = v[0], b = v[1];
      if (!P.leq((*g)(c), b)) return std::nullopt;
      bool found = false;
      for (Elem d = 0; d < Q.size() && !found; ++d) found = Q.leq(c, d) && (*g)(d) == b;
      return Instance{found, {Side::P, b}, {Side::P, (*g)(c)}};
    }
    case Law::LF2: {
      const Elem a = v[0], b = v[1], c = v[2];
      const auto r = restrict_left(LeftAdjointConnection{connection_of_monotone_left(*f), *f}, a);
      const auto lb = r.domain.to_local(b);
      const auto lc = r.codomain.to_local(c);
      if (!lb || !lc) return std::nullopt;
      const std::array<Elem, 2> local{*lb, *lc};
      auto inst = law_instance(Law::LM1, LawContext::of(r.restricted), local);
      if (!inst) return std::nullopt;
      inst->lhs.value = r.codomain.to_host(*inst->lhs.value);
      inst->rhs.value = r.codomain.to_host(*inst->rhs.value);
      return inst;
    }
    case Law::RF2: {
      const Elem c = v[0], d = v[1], b = v[2];
      const auto r = restrict_right(RightAdjointConnection{connection_of_monotone_right(*g), *g}, c);
      const auto ld = r.domain.to_local(d);
      const auto lb = r.codomain.to_local(b);
      if (!ld || !lb) return std::nullopt;
      const std::array<Elem, 2> local{*ld, *lb};
      auto inst = law_instance(Law::RM1, LawContext::of(r.restricted), local);
      if (!inst) return std::nullopt;
      inst->lhs.value = r.codomain.to_host(*inst->lhs.value);
      inst->rhs.value = r.codomain.to_host(*inst->rhs.value);
      return inst;
    }
  }
  return std::nullopt;
}

namespace detail {

inline Witness make_witness(Law law, const LawContext& ctx, std::span<const Elem> values, const Instance& inst) {
  Witness w;
  const auto vars = law_variables(law);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    w.names.emplace_back(vars[i].name);
    w.sides.push_back(vars[i].side);
    w.values.push_back(values[i]);
    w.labels.push_back(ctx.lattice(vars[i].side).label(values[i]));
  }
  w.lhs = inst.lhs;
  w.rhs = inst.rhs;
  w.lhs_label = ctx.label(inst.lhs);
  w.rhs_label = ctx.label(inst.rhs);
  return w;
}

// Odometer over all tuples, first variable outermost. Stops at the first
// failing instance.
inline LawReport quantify(Law law, const LawContext& ctx) {
  LawReport report{std::string(to_string(law)), law, Verdict::holds, std::nullopt, {}};
  const auto vars = law_variables(law);
  std::vector<Elem> values(vars.size(), 0);
  std::vector<std::size_t> bounds;
  for (const auto& var : vars) bounds.push_back(ctx.lattice(var.side).size());
  while (true) {
    if (auto inst = law_instance(law, ctx, values); inst && !inst->holds) {
      report.verdict = Verdict::fails;
      report.witness = make_witness(law, ctx, values, *inst);
      return report;
    }
    std::size_t i = vars.size();
    while (true) {
      --i;
      if (++values[i] < bounds[i]) break;
      values[i] = 0;
      if (i == 0) return report;
    }
  }
}

// LF2 and RF2 restrict once per anchor and run LM1 / RM1 on the restriction.
inline LawReport quantify_restricted(Law law, const LawContext& ctx) {
  LawReport report{std::string(to_string(law)), law, Verdict::holds, std::nullopt, {}};
  if (law == Law::LF2) {
    const LeftAdjointConnection whole{connection_of_monotone_left(*ctx.left), *ctx.left};
    for (Elem a = 0; a < ctx.P->size(); ++a) {
      const auto r = restrict_left(whole, a);
      const auto inner = quantify(Law::LM1, LawContext::of(r.restricted));
      if (inner.holds()) continue;
      const std::array<Elem, 3> values{a, r.domain.to_host(inner.witness->values[0]),
                                       r.codomain.to_host(inner.witness->values[1])};
      Instance inst{false, {Side::Q, r.codomain.to_host(*inner.witness->lhs.value)},
                    {Side::Q, r.codomain.to_host(*inner.witness->rhs.value)}};
      report.verdict = Verdict::fails;
      report.witness = make_witness(law, ctx, values, inst);
      return report;
    }
    return report;
  }
  const RightAdjointConnection whole{connection_of_monotone_right(*ctx.right), *ctx.right};
  for (Elem c = 0; c < ctx.Q->size(); ++c) {
    const auto r = restrict_right(whole, c);
    const auto inner = quantify(Law::RM1, LawContext::of(r.restricted));
    if (inner.holds()) continue;
    const std::array<Elem, 3> values{c, r.domain.to_host(inner.witness->values[0]),
                                     r.codomain.to_host(inner.witness->values[1])};
    Instance inst{false, {Side::P, r.codomain.to_host(*inner.witness->lhs.value)},
                  {Side::P, r.codomain.to_host(*inner.witness->rhs.value)}};
    report.verdict = Verdict::fails;
    report.witness = make_witness(law, ctx, values, inst);
    return report;
  }
  return report;
}

}  // namespace detail

/// Evaluates a law over every tuple. A law whose structural hypotheses are
/// missing is reported as skipped with the missing structure as reason.
/// Throws std::invalid_argument when the context lacks an adjoint the law needs.
inline LawReport eval_law(Law law, const LawContext& ctx) {
  if (detail::needs_left(law) && !ctx.left)
    throw std::invalid_argument(std::string(to_string(law)) + " needs a left adjoint");
  if (detail::needs_right(law) && !ctx.right)
    throw std::invalid_argument(std::string(to_string(law)) + " needs a right adjoint");
  if (auto missing = missing_structure(law, *ctx.P, *ctx.Q); !missing.empty())
    return {std::string(to_string(law)), law, Verdict::skipped, std::nullopt, std::move(missing)};
  if (law == Law::LF2 || law == Law::RF2) return detail::quantify_restricted(law, ctx);
  return detail::quantify(law, ctx);
}

inline LawReport eval_law(Law law, const AdjointConnection& a) { return eval_law(law, LawContext::of(a)); }
inline LawReport eval_law(Law law, const LeftAdjointConnection& a) { return eval_law(law, LawContext::of(a)); }
inline LawReport eval_law(Law law, const RightAdjointConnection& a) { return eval_law(law, LawContext::of(a)); }

/// Re-evaluates a reported witness; used to confirm reproducibility.
inline std::optional<Instance> reevaluate(const LawReport& report, const LawContext& ctx) {
  if (!report.law || !report.witness) return std::nullopt;
  return law_instance(*report.law, ctx, report.witness->values);
}

}  // namespace galois
