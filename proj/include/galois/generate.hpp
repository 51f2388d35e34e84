#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "galois/lattice.hpp"

namespace galois {

/// Isomorphism-invariant key of a bounded poset: the lexicographically least
/// order table over all orderings that put the bottom first and the top last.
/// Returns an empty key for posets without both bounds.
inline std::vector<std::uint8_t> canonical_key(const FiniteLattice& L) {
  if (!L.is_bounded()) return {};
  const std::size_t n = L.size();
  std::vector<Elem> middle;
  for (Elem x = 0; x < n; ++x)
    if (x != *L.bottom() && x != *L.top()) middle.push_back(x);
  std::vector<Elem> order;
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> key(n * n);
  do {
    order.clear();
    order.push_back(*L.bottom());
    order.insert(order.end(), middle.begin(), middle.end());
    if (n > 1) order.push_back(*L.top());
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) key[i * n + j] = L.leq(order[i], order[j]);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return best;
}

/// Every lattice with exactly n elements, one per isomorphism class, in a
/// fixed order. Elements are labelled bot, e1, e2, ..., top.
inline std::vector<LatticePtr> lattices_of_size(std::size_t n) {
  std::vector<LatticePtr> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(std::make_shared<const FiniteLattice>(FiniteLattice::from_pairs("L1_1", {"bot"}, {})));
    return out;
  }
  std::vector<std::string> labels{"bot"};
  for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("e" + std::to_string(i));
  labels.push_back("top");

  // Every poset has a linear extension, so it suffices to consider order
  // relations on the middle elements that only go from lower to higher index.
  const std::size_t k = n - 2;
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem i = 1; i <= k; ++i)
    for (Elem j = i + 1; j <= k; ++j) slots.emplace_back(i, j);

  std::set<std::vector<std::uint8_t>> seen;
  const std::uint64_t combos = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (std::uint64_t{1} << s)) rel[slots[s].first * n + slots[s].second] = 1;
    bool transitive = true;
    for (Elem a = 1; a <= k && transitive; ++a)
      for (Elem b = a + 1; b <= k && transitive; ++b)
        if (rel[a * n + b])
          for (Elem c = b + 1; c <= k && transitive; ++c)
            if (rel[b * n + c] && !rel[a * n + c]) transitive = false;
    if (!transitive) continue;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem i = 1; i <= k; ++i) {
      pairs.emplace_back(0, i);
      pairs.emplace_back(i, n - 1);
    }
    pairs.emplace_back(0, n - 1);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (std::uint64_t{1} << s)) pairs.push_back(slots[s]);
    auto candidate = FiniteLattice::from_pairs("", labels, pairs);
    if (!candidate.is_lattice()) continue;
    if (!seen.insert(canonical_key(candidate)).second) continue;
    const std::string name = "L" + std::to_string(n) + "_" + std::to_string(seen.size());
    out.push_back(std::make_shared<const FiniteLattice>(FiniteLattice::from_pairs(name, labels, pairs)));
  }
  return out;
}

/// All lattices with 1..max_size elements up to isomorphism, by size.
inline std::vector<LatticePtr> lattices_up_to(std::size_t max_size) {
  std::vector<LatticePtr> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto batch = lattices_of_size(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace galois
