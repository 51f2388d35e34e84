#pragma once

#include <sstream>
#include <string>

#include "galois/connection.hpp"
#include "galois/laws.hpp"
#include "galois/theorems.hpp"

namespace galois {

inline std::string format_flags(const FiniteLattice& L) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "size=" << L.size() << " lattice=" << yn(L.is_lattice()) << " bounded=" << yn(L.is_bounded())
     << " modular=" << yn(L.is_modular()) << " distributive=" << yn(L.is_distributive());
  os << " bottom=" << (L.bottom() ? L.label(*L.bottom()) : "none");
  os << " top=" << (L.top() ? L.label(*L.top()) : "none");
  return os.str();
}

/// "0->0 m->0 1->1"
inline std::string format_map(const MonotoneMap& f) {
  std::ostringstream os;
  for (Elem x = 0; x < f.source()->size(); ++x) {
    if (x) os << ' ';
    os << f.source()->label(x) << "->" << f.target()->label(f(x));
  }
  return os.str();
}

inline std::string format_witness(const Witness& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.names.size(); ++i) os << w.names[i] << '=' << w.labels[i] << ' ';
  os << "lhs=" << w.lhs_label << " rhs=" << w.rhs_label;
  return os.str();
}

/// `<law> <holds|fails|skipped> [witness: ...] [reason: ...]`
inline std::string format_law_report(const LawReport& r) {
  std::string line = r.name + " " + std::string(to_string(r.verdict));
  if (r.witness) line += " witness: " + format_witness(*r.witness);
  if (!r.reason.empty()) line += " reason: " + r.reason;
  return line;
}

inline std::string describe(const AdjointConnection& a) {
  return a.source()->name() + "->" + a.target()->name() + " f_R=[" + format_map(a.left) + "]";
}

inline std::string describe(const LeftAdjointConnection& a) {
  return a.source()->name() + "->" + a.target()->name() + " f_R=[" + format_map(a.left) + "]";
}

inline std::string describe(const RightAdjointConnection& a) {
  return a.source()->name() + "->" + a.target()->name() + " f^R=[" + format_map(a.right) + "]";
}

inline std::string format_equivalence(const EquivalenceReport& r) {
  std::string line = r.theorem + (r.consistent() ? " agree" : " DISAGREE");
  for (const auto& law : r.laws) line += " " + law.name + "=" + std::string(to_string(law.verdict));
  if (r.skipped) line += " skipped reason: " + r.reason;
  return line;
}

inline std::string format_check(const Check& c) {
  std::string line = c.statement + ": " + std::string(to_string(c.outcome));
  if (!c.detail.empty()) line += " (" + c.detail + ")";
  return line;
}

}  // namespace galois
