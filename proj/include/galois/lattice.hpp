#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galois/error.hpp"

namespace galois {

// Elements of a finite poset are dense indices 0..size-1.
using Elem = std::size_t;

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A finite poset together with its (partial) meet and join tables and the
/// structural flags every law evaluator branches on. Despite the name the
/// order need not be a lattice: absent meets and joins are stored as
/// std::nullopt, never as a sentinel element.
class FiniteLattice {
 public:
  /// Builds the order generated by `pairs` (each pair reads first <= second)
  /// under reflexive-transitive closure. Throws on empty label lists,
  /// duplicate labels and cycles.
  static FiniteLattice from_pairs(std::string name, std::vector<std::string> labels,
                                  const std::vector<std::pair<Elem, Elem>>& pairs) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(Errc::empty_poset, "poset '" + name + "' has no elements");
    {
      std::unordered_map<std::string, Elem> seen;
      for (Elem i = 0; i < n; ++i) {
        if (!seen.emplace(labels[i], i).second)
          throw Error(Errc::duplicate_label, "label '" + labels[i] + "' in poset '" + name + "'");
      }
    }
    std::vector<std::uint8_t> leq(n * n, 0);
    for (Elem i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw Error(Errc::index_out_of_range, "order pair in poset '" + name + "'");
      leq[a * n + b] = 1;
    }
    for (Elem k = 0; k < n; ++k)
      for (Elem i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (Elem j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;
    for (Elem i = 0; i < n; ++i)
      for (Elem j = i + 1; j < n; ++j)
        if (leq[i * n + j] && leq[j * n + i])
          throw Error(Errc::cycle_detected, "'" + labels[i] + "' and '" + labels[j] +
                                                "' lie on a cycle in poset '" + name + "'");
    return FiniteLattice(std::move(name), std::move(labels), std::move(leq));
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Elem a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Elem> index_of(std::string_view label) const {
    for (Elem i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  void check_index(Elem a) const {
    if (a >= size())
      throw Error(Errc::index_out_of_range,
                  "element " + std::to_string(a) + " in poset '" + name_ + "' of size " + std::to_string(size()));
  }

  bool leq(Elem a, Elem b) const noexcept { return leq_[a * size() + b] != 0; }
  bool geq(Elem a, Elem b) const noexcept { return leq(b, a); }
  std::optional<Elem> meet(Elem a, Elem b) const noexcept { return meet_[a * size() + b]; }
  std::optional<Elem> join(Elem a, Elem b) const noexcept { return join_[a * size() + b]; }
  std::optional<Elem> bottom() const noexcept { return bottom_; }
  std::optional<Elem> top() const noexcept { return top_; }

  bool has_binary_meets() const noexcept { return all_meets_; }
  bool has_binary_joins() const noexcept { return all_joins_; }
  bool is_lattice() const noexcept { return all_meets_ && all_joins_; }
  bool is_bounded() const noexcept { return bottom_.has_value() && top_.has_value(); }
  bool is_modular() const noexcept { return modular_; }
  bool is_distributive() const noexcept { return distributive_; }

  const std::vector<std::uint8_t>& order_table() const noexcept { return leq_; }

  /// Same carrier and order; names and labels may differ.
  bool same_order(const FiniteLattice& other) const noexcept {
    return size() == other.size() && leq_ == other.leq_;
  }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  FiniteLattice(std::string name, std::vector<std::string> labels, std::vector<std::uint8_t> order)
      : name_(std::move(name)), labels_(std::move(labels)), leq_(std::move(order)) {
    const std::size_t n = size();
    meet_.assign(n * n, std::nullopt);
    join_.assign(n * n, std::nullopt);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        meet_[a * n + b] = extremal_bound(a, b, /*lower=*/true);
        join_[a * n + b] = extremal_bound(a, b, /*lower=*/false);
      }
    for (Elem c = 0; c < n; ++c) {
      bool below_all = true, above_all = true;
      for (Elem x = 0; x < n; ++x) {
        below_all = below_all && leq(c, x);
        above_all = above_all && leq(x, c);
      }
      if (below_all) bottom_ = c;
      if (above_all) top_ = c;
    }
    all_meets_ = all_joins_ = true;
    for (Elem i = 0; i < n * n; ++i) {
      all_meets_ = all_meets_ && meet_[i].has_value();
      all_joins_ = all_joins_ && join_[i].has_value();
    }
    compute_identities();
  }

  // Greatest common lower bound (lower) or least common upper bound.
  std::optional<Elem> extremal_bound(Elem a, Elem b, bool lower) const {
    const std::size_t n = size();
    auto is_bound = [&](Elem c) { return lower ? (leq(c, a) && leq(c, b)) : (leq(a, c) && leq(b, c)); };
    for (Elem m = 0; m < n; ++m) {
      if (!is_bound(m)) continue;
      bool extremal = true;
      for (Elem c = 0; c < n && extremal; ++c)
        if (is_bound(c)) extremal = lower ? leq(c, m) : leq(m, c);
      if (extremal) return m;
    }
    return std::nullopt;
  }

  void compute_identities() {
    modular_ = distributive_ = false;
    if (!is_lattice()) return;
    const std::size_t n = size();
    auto m = [&](Elem a, Elem b) { return *meet(a, b); };
    auto j = [&](Elem a, Elem b) { return *join(a, b); };
    modular_ = true;
    distributive_ = true;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (leq(a, c) && j(a, m(b, c)) != m(j(a, b), c)) modular_ = false;
          if (m(a, j(b, c)) != j(m(a, b), m(a, c))) distributive_ = false;
        }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::optional<Elem>> meet_;
  std::vector<std::optional<Elem>> join_;
  std::optional<Elem> bottom_;
  std::optional<Elem> top_;
  bool all_meets_ = false;
  bool all_joins_ = false;
  bool modular_ = false;
  bool distributive_ = false;
};

/// Builds a poset from labels and cover (or any order) pairs given by label.
inline LatticePtr build_poset(std::string name, std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(Errc::unknown_label, "'" + lo + "' in poset '" + name + "'");
    if (b == index.end()) throw Error(Errc::unknown_label, "'" + hi + "' in poset '" + name + "'");
    pairs.emplace_back(a->second, b->second);
  }
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_pairs(std::move(name), std::move(labels), pairs));
}

inline std::string dual_name(const std::string& name) {
  constexpr std::string_view suffix = "^op";
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return name.substr(0, name.size() - suffix.size());
  return name + std::string(suffix);
}

/// The opposite order. Applying it twice reproduces the input exactly.
inline LatticePtr dual(const FiniteLattice& lattice) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < lattice.size(); ++a)
    for (Elem b = 0; b < lattice.size(); ++b)
      if (a != b && lattice.leq(a, b)) pairs.emplace_back(b, a);
  return std::make_shared<const FiniteLattice>(
      FiniteLattice::from_pairs(dual_name(lattice.name()), lattice.labels(), pairs));
}

enum class Direction { down, up };

/// The principal down-set a↓ or up-set a↑ of a host poset, presented as a
/// poset in its own right. Local index i corresponds to host element members[i].
struct PrincipalView {
  LatticePtr host;
  Elem anchor = 0;
  Direction direction = Direction::down;
  std::vector<Elem> members;
  LatticePtr lattice;

  Elem to_host(Elem local) const { return members.at(local); }

  std::optional<Elem> to_local(Elem host_elem) const {
    for (Elem i = 0; i < members.size(); ++i)
      if (members[i] == host_elem) return i;
    return std::nullopt;
  }
};

using DownSet = PrincipalView;
using UpSet = PrincipalView;

namespace detail {

inline PrincipalView principal_view(const LatticePtr& host, Elem anchor, Direction direction) {
  host->check_index(anchor);
  PrincipalView view{host, anchor, direction, {}, nullptr};
  for (Elem b = 0; b < host->size(); ++b) {
    const bool in = direction == Direction::down ? host->leq(b, anchor) : host->leq(anchor, b);
    if (in) view.members.push_back(b);
  }
  std::vector<std::string> labels;
  for (Elem b : view.members) labels.push_back(host->label(b));
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < view.members.size(); ++i)
    for (Elem j = 0; j < view.members.size(); ++j)
      if (i != j && host->leq(view.members[i], view.members[j])) pairs.emplace_back(i, j);
  const std::string name = host->name() + (direction == Direction::down ? "/down(" : "/up(") +
                           host->label(anchor) + ")";
  view.lattice = std::make_shared<const FiniteLattice>(
      FiniteLattice::from_pairs(name, std::move(labels), pairs));
  return view;
}

}  // namespace detail

inline DownSet down_set(const LatticePtr& host, Elem anchor) {
  return detail::principal_view(host, anchor, Direction::down);
}

inline UpSet up_set(const LatticePtr& host, Elem anchor) {
  return detail::principal_view(host, anchor, Direction::up);
}

/// An order-preserving map between two finite posets, stored as a value table.
class MonotoneMap {
 public:
  MonotoneMap(LatticePtr source, LatticePtr target, std::vector<Elem> values)
      : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if (values_.size() != source_->size())
      throw Error(Errc::dimension_mismatch, "map table has " + std::to_string(values_.size()) +
                                                " entries, source '" + source_->name() + "' has " +
                                                std::to_string(source_->size()));
    for (Elem v : values_) target_->check_index(v);
    for (Elem a = 0; a < values_.size(); ++a)
      for (Elem b = 0; b < values_.size(); ++b)
        if (source_->leq(a, b) && !target_->leq(values_[a], values_[b]))
          throw Error(Errc::not_monotone, source_->label(a) + " <= " + source_->label(b) + " but " +
                                              target_->label(values_[a]) + " !<= " +
                                              target_->label(values_[b]));
  }

  const LatticePtr& source() const noexcept { return source_; }
  const LatticePtr& target() const noexcept { return target_; }
  const std::vector<Elem>& values() const noexcept { return values_; }
  Elem operator()(Elem a) const { return values_.at(a); }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.values_ == b.values_ && a.source_->same_order(*b.source_) && a.target_->same_order(*b.target_);
  }

 private:
  LatticePtr source_;
  LatticePtr target_;
  std::vector<Elem> values_;
};

inline MonotoneMap identity_map(const LatticePtr& lattice) {
  std::vector<Elem> values(lattice->size());
  for (Elem i = 0; i < values.size(); ++i) values[i] = i;
  return MonotoneMap(lattice, lattice, std::move(values));
}

inline MonotoneMap constant_map(const LatticePtr& source, const LatticePtr& target, Elem value) {
  return MonotoneMap(source, target, std::vector<Elem>(source->size(), value));
}

/// Calls `visit` with the value table of every monotone map source -> target,
/// in lexicographic order of the tables.
inline void for_each_monotone_table(const FiniteLattice& source, const FiniteLattice& target,
                                    const std::function<void(const std::vector<Elem>&)>& visit) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  std::vector<Elem> values(n, 0);
  std::function<void(Elem)> extend = [&](Elem x) {
    if (x == n) {
      visit(values);
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      bool ok = true;
      for (Elem i = 0; i < x && ok; ++i) {
        if (source.leq(i, x) && !target.leq(values[i], v)) ok = false;
        if (source.leq(x, i) && !target.leq(v, values[i])) ok = false;
      }
      if (!ok) continue;
      values[x] = v;
      extend(x + 1);
    }
  };
  extend(0);
}

inline std::vector<MonotoneMap> monotone_maps(const LatticePtr& source, const LatticePtr& target) {
  std::vector<MonotoneMap> maps;
  for_each_monotone_table(*source, *target,
                          [&](const std::vector<Elem>& values) { maps.emplace_back(source, target, values); });
  return maps;
}

}  // namespace galois
