#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois/lattice.hpp"

namespace galois {

/// Chain 0 < 1 < ... < n-1. The 3-chain uses the labels 0 < m < 1 and the
/// 4-chain 0 < a < b < 1, matching the usual pictures.
inline LatticePtr chain(std::size_t n) {
  std::vector<std::string> labels;
  if (n == 1) labels = {"0"};
  else if (n == 2) labels = {"0", "1"};
  else if (n == 3) labels = {"0", "m", "1"};
  else if (n == 4) labels = {"0", "a", "b", "1"};
  else
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_pairs("C" + std::to_string(n), std::move(labels), pairs));
}

/// Subsets of a k-element set, labelled by their members ("0" for the empty
/// set, "a", "ab", ...). Element i is the subset with bitmask i.
inline LatticePtr boolean_algebra(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s;
    for (std::size_t bit = 0; bit < k; ++bit)
      if (mask & (std::size_t{1} << bit)) s.push_back(static_cast<char>('a' + bit));
    labels.push_back(s.empty() ? "0" : s);
  }
  if (k == 1) labels = {"0", "1"};
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && (a & b) == a) pairs.emplace_back(a, b);
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_pairs("B" + std::to_string(k), std::move(labels), pairs));
}

inline LatticePtr diamond_m3() {
  return build_poset("M3", {"bot", "a", "b", "c", "top"},
                     {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

/// Pentagon: bot < a < b < top and bot < c < top.
inline LatticePtr pentagon_n5() {
  return build_poset("N5", {"bot", "a", "b", "c", "top"},
                     {{"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"}, {"c", "top"}});
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Ideals (d) of Z_n for d | n, ordered by inclusion: (a) <= (b) iff b | a.
/// Elements appear in increasing order of d, so (1) is index 0 and is the top.
inline LatticePtr divisor_lattice(unsigned n) {
  if (n < 1) throw Error(Errc::invalid_modulus, "modulus must be positive");
  const auto ds = divisors(n);
  std::vector<std::string> labels;
  for (unsigned d : ds) labels.push_back("(" + std::to_string(d) + ")");
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < ds.size(); ++i)
    for (Elem j = 0; j < ds.size(); ++j)
      if (i != j && ds[i] % ds[j] == 0) pairs.emplace_back(i, j);
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_pairs("Div" + std::to_string(n), std::move(labels), pairs));
}

/// The 3-chain bot < m < top, used as a frame (multiplication = meet).
inline LatticePtr frame3() {
  return build_poset("Frame3", {"bot", "m", "top"}, {{"bot", "m"}, {"m", "top"}});
}

/// The fixed test corpus, in this order:
/// C1 C2 C3 C4 B1 B2 B3 M3 N5 Div12 Frame3.
inline const std::vector<LatticePtr>& catalog() {
  static const std::vector<LatticePtr> lattices = [] {
    std::vector<LatticePtr> out;
    for (std::size_t n = 1; n <= 4; ++n) out.push_back(chain(n));
    for (std::size_t k = 1; k <= 3; ++k) out.push_back(boolean_algebra(k));
    out.push_back(diamond_m3());
    out.push_back(pentagon_n5());
    out.push_back(divisor_lattice(12));
    out.push_back(frame3());
    return out;
  }();
  return lattices;
}

inline LatticePtr catalog_lattice(std::string_view name) {
  for (const auto& lattice : catalog())
    if (lattice->name() == name) return lattice;
  return nullptr;
}

/// Catalog lattices by name, in the given order. Throws on unknown names.
inline std::vector<LatticePtr> catalog_family(const std::vector<std::string>& names) {
  std::vector<LatticePtr> out;
  for (const auto& name : names) {
    auto lattice = catalog_lattice(name);
    if (!lattice) throw Error(Errc::unknown_label, "no catalog lattice named '" + name + "'");
    out.push_back(std::move(lattice));
  }
  return out;
}

}  // namespace galois
