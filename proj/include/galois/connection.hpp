#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois/lattice.hpp"

namespace galois {

/// Row-major P.size() x Q.size() boolean table; entry x*|Q|+y is "x R y".
using RelationTable = std::vector<std::uint8_t>;

/// A quadruple (a, b, c, d) with a <= b R c <= d but not a R d.
using WeakeningViolation = std::array<Elem, 4>;

inline void check_dimensions(const FiniteLattice& source, const FiniteLattice& target, const RelationTable& rel) {
  if (rel.size() != source.size() * target.size())
    throw Error(Errc::dimension_mismatch, "relation has " + std::to_string(rel.size()) + " cells, expected " +
                                              std::to_string(source.size()) + "x" + std::to_string(target.size()));
}

inline std::optional<WeakeningViolation> find_weakening_violation(const FiniteLattice& source,
                                                                  const FiniteLattice& target,
                                                                  const RelationTable& rel) {
  check_dimensions(source, target, rel);
  const std::size_t m = target.size();
  for (Elem b = 0; b < source.size(); ++b)
    for (Elem c = 0; c < m; ++c) {
      if (!rel[b * m + c]) continue;
      for (Elem a = 0; a < source.size(); ++a) {
        if (!source.leq(a, b)) continue;
        for (Elem d = 0; d < m; ++d)
          if (target.leq(c, d) && !rel[a * m + d]) return WeakeningViolation{a, b, c, d};
      }
    }
  return std::nullopt;
}

/// True iff a <= b R c <= d implies a R d for all quadruples.
inline bool is_connection(const FiniteLattice& source, const FiniteLattice& target, const RelationTable& rel) {
  return !find_weakening_violation(source, target, rel).has_value();
}

/// A relation between two posets closed under weakening.
class Connection {
 public:
  Connection(LatticePtr source, LatticePtr target, RelationTable rel)
      : source_(std::move(source)), target_(std::move(target)), rel_(std::move(rel)) {
    if (auto v = find_weakening_violation(*source_, *target_, rel_)) {
      const auto [a, b, c, d] = *v;
      throw Error(Errc::not_a_connection, source_->label(a) + " <= " + source_->label(b) + " R " +
                                              target_->label(c) + " <= " + target_->label(d) + " but not " +
                                              source_->label(a) + " R " + target_->label(d));
    }
  }

  const LatticePtr& source() const noexcept { return source_; }
  const LatticePtr& target() const noexcept { return target_; }
  const RelationTable& table() const noexcept { return rel_; }
  bool related(Elem x, Elem y) const noexcept { return rel_[x * target_->size() + y] != 0; }

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.rel_ == b.rel_ && a.source_->same_order(*b.source_) && a.target_->same_order(*b.target_);
  }

 private:
  LatticePtr source_;
  LatticePtr target_;
  RelationTable rel_;
};

inline Connection identity_connection(const LatticePtr& lattice) {
  return Connection(lattice, lattice, lattice->order_table());
}

inline Connection full_connection(const LatticePtr& source, const LatticePtr& target) {
  return Connection(source, target, RelationTable(source->size() * target->size(), 1));
}

/// R^op : Q^op -> P^op, with y R^op x iff x R y.
inline Connection opposite(const Connection& c) {
  const std::size_t n = c.source()->size(), m = c.target()->size();
  RelationTable rel(m * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < m; ++y) rel[y * n + x] = c.related(x, y);
  return Connection(dual(*c.target()), dual(*c.source()), std::move(rel));
}

/// The unique f with f(x) <= y <=> x R y, if one exists. f(x) is taken as
/// the least y related to x and the biconditional is then checked globally.
inline std::optional<MonotoneMap> find_left_adjoint(const Connection& c) {
  const auto& P = *c.source();
  const auto& Q = *c.target();
  std::vector<Elem> values(P.size());
  for (Elem x = 0; x < P.size(); ++x) {
    std::optional<Elem> least;
    for (Elem y = 0; y < Q.size() && !least; ++y) {
      if (!c.related(x, y)) continue;
      bool below_all = true;
      for (Elem z = 0; z < Q.size() && below_all; ++z)
        if (c.related(x, z)) below_all = Q.leq(y, z);
      if (below_all) least = y;
    }
    if (!least) return std::nullopt;
    values[x] = *least;
  }
  for (Elem x = 0; x < P.size(); ++x)
    for (Elem y = 0; y < Q.size(); ++y)
      if (Q.leq(values[x], y) != c.related(x, y)) return std::nullopt;
  return MonotoneMap(c.source(), c.target(), std::move(values));
}

/// The unique g with x R y <=> x <= g(y), if one exists.
inline std::optional<MonotoneMap> find_right_adjoint(const Connection& c) {
  const auto& P = *c.source();
  const auto& Q = *c.target();
  std::vector<Elem> values(Q.size());
  for (Elem y = 0; y < Q.size(); ++y) {
    std::optional<Elem> greatest;
    for (Elem x = 0; x < P.size() && !greatest; ++x) {
      if (!c.related(x, y)) continue;
      bool above_all = true;
      for (Elem z = 0; z < P.size() && above_all; ++z)
        if (c.related(z, y)) above_all = P.leq(z, x);
      if (above_all) greatest = x;
    }
    if (!greatest) return std::nullopt;
    values[y] = *greatest;
  }
  for (Elem x = 0; x < P.size(); ++x)
    for (Elem y = 0; y < Q.size(); ++y)
      if (P.leq(x, values[y]) != c.related(x, y)) return std::nullopt;
  return MonotoneMap(c.target(), c.source(), std::move(values));
}

/// x R y <=> f(x) <= y.
inline Connection connection_of_monotone_left(const MonotoneMap& f) {
  const auto& Q = *f.target();
  const std::size_t n = f.source()->size(), m = Q.size();
  RelationTable rel(n * m, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < m; ++y) rel[x * m + y] = Q.leq(f(x), y);
  return Connection(f.source(), f.target(), std::move(rel));
}

/// For g : Q -> P, the connection P -> Q with x R y <=> x <= g(y).
inline Connection connection_of_monotone_right(const MonotoneMap& g) {
  const auto& P = *g.target();
  const std::size_t n = P.size(), m = g.source()->size();
  RelationTable rel(n * m, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < m; ++y) rel[x * m + y] = P.leq(x, g(y));
  return Connection(g.target(), g.source(), std::move(rel));
}

/// A connection together with its left adjoint f_R.
struct LeftAdjointConnection {
  Connection conn;
  MonotoneMap left;

  const LatticePtr& source() const noexcept { return conn.source(); }
  const LatticePtr& target() const noexcept { return conn.target(); }
};

/// A connection together with its right adjoint f^R : Q -> P.
struct RightAdjointConnection {
  Connection conn;
  MonotoneMap right;

  const LatticePtr& source() const noexcept { return conn.source(); }
  const LatticePtr& target() const noexcept { return conn.target(); }
};

/// A connection with both adjoints, f_R(x) <= y <=> x R y <=> x <= f^R(y).
struct AdjointConnection {
  Connection conn;
  MonotoneMap left;
  MonotoneMap right;

  const LatticePtr& source() const noexcept { return conn.source(); }
  const LatticePtr& target() const noexcept { return conn.target(); }
  LeftAdjointConnection left_part() const { return {conn, left}; }
  RightAdjointConnection right_part() const { return {conn, right}; }
};

inline LeftAdjointConnection left_adjoint_connection(const MonotoneMap& f) {
  return {connection_of_monotone_left(f), f};
}

inline RightAdjointConnection right_adjoint_connection(const MonotoneMap& g) {
  return {connection_of_monotone_right(g), g};
}

inline std::optional<LeftAdjointConnection> make_left_adjoint(const Connection& c) {
  auto f = find_left_adjoint(c);
  if (!f) return std::nullopt;
  return LeftAdjointConnection{c, std::move(*f)};
}

inline std::optional<RightAdjointConnection> make_right_adjoint(const Connection& c) {
  auto g = find_right_adjoint(c);
  if (!g) return std::nullopt;
  return RightAdjointConnection{c, std::move(*g)};
}

inline std::optional<AdjointConnection> make_adjoint(const Connection& c) {
  auto f = find_left_adjoint(c);
  if (!f) return std::nullopt;
  auto g = find_right_adjoint(c);
  if (!g) return std::nullopt;
  const auto& P = *c.source();
  const auto& Q = *c.target();
  for (Elem x = 0; x < P.size(); ++x)
    for (Elem y = 0; y < Q.size(); ++y) {
      const bool rel = c.related(x, y);
      if (Q.leq((*f)(x), y) != rel || P.leq(x, (*g)(y)) != rel)
        throw std::logic_error("adjoint maps disagree with their connection");
    }
  return AdjointConnection{c, std::move(*f), std::move(*g)};
}

/// The adjoint connection whose left adjoint is f, if f has a right adjoint.
inline std::optional<AdjointConnection> adjoint_from_left(const MonotoneMap& f) {
  return make_adjoint(connection_of_monotone_left(f));
}

inline AdjointConnection identity_adjoint(const LatticePtr& lattice) {
  return *make_adjoint(identity_connection(lattice));
}

/// x (S.R) z <=> x R y and y S z for some y.
inline Connection compose(const Connection& r, const Connection& s) {
  if (!r.target()->same_order(*s.source()))
    throw Error(Errc::source_target_mismatch,
                "cannot compose through '" + r.target()->name() + "' and '" + s.source()->name() + "'");
  const std::size_t n = r.source()->size(), k = r.target()->size(), m = s.target()->size();
  RelationTable rel(n * m, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < m; ++z)
      for (Elem y = 0; y < k && !rel[x * m + z]; ++y) rel[x * m + z] = r.related(x, y) && s.related(y, z);
  return Connection(r.source(), s.target(), std::move(rel));
}

inline AdjointConnection compose(const AdjointConnection& r, const AdjointConnection& s) {
  auto composite = make_adjoint(compose(r.conn, s.conn));
  if (!composite) throw std::logic_error("composite of adjoint connections lost an adjoint");
  return std::move(*composite);
}

/// The restriction a↓ -> f_R(a)↓ of a left adjoint connection.
struct LeftRestriction {
  DownSet domain;
  DownSet codomain;
  LeftAdjointConnection restricted;
  std::optional<MonotoneMap> right;
};

inline LeftRestriction restrict_left(const LeftAdjointConnection& a, Elem anchor) {
  a.source()->check_index(anchor);
  DownSet domain = down_set(a.source(), anchor);
  DownSet codomain = down_set(a.target(), a.left(anchor));
  std::vector<Elem> values;
  for (Elem host : domain.members) values.push_back(*codomain.to_local(a.left(host)));
  MonotoneMap f(domain.lattice, codomain.lattice, std::move(values));
  auto restricted = left_adjoint_connection(f);
  auto right = find_right_adjoint(restricted.conn);
  return {std::move(domain), std::move(codomain), std::move(restricted), std::move(right)};
}

/// The restriction c↑ -> f^R(c)↑ of a right adjoint connection, as a right
/// adjoint connection from f^R(c)↑ (in P) to c↑ (in Q).
struct RightRestriction {
  UpSet domain;    // c↑ in Q, the source of the restricted right adjoint
  UpSet codomain;  // f^R(c)↑ in P
  RightAdjointConnection restricted;
  std::optional<MonotoneMap> left;
};

inline RightRestriction restrict_right(const RightAdjointConnection& a, Elem anchor) {
  a.target()->check_index(anchor);
  UpSet domain = up_set(a.target(), anchor);
  UpSet codomain = up_set(a.source(), a.right(anchor));
  std::vector<Elem> values;
  for (Elem host : domain.members) values.push_back(*codomain.to_local(a.right(host)));
  MonotoneMap g(domain.lattice, codomain.lattice, std::move(values));
  auto restricted = right_adjoint_connection(g);
  auto left = find_left_adjoint(restricted.conn);
  return {std::move(domain), std::move(codomain), std::move(restricted), std::move(left)};
}

/// One entry per monotone P -> Q that has a right adjoint, ordered
/// lexicographically by the left adjoint's value table.
inline std::vector<AdjointConnection> enumerate_adjoint_connections(const LatticePtr& P, const LatticePtr& Q) {
  std::vector<AdjointConnection> out;
  for_each_monotone_table(*P, *Q, [&](const std::vector<Elem>& values) {
    if (auto a = adjoint_from_left(MonotoneMap(P, Q, values))) out.push_back(std::move(*a));
  });
  return out;
}

/// Every left adjoint connection P -> Q, one per monotone map, lexicographic.
inline std::vector<LeftAdjointConnection> enumerate_left_adjoint_connections(const LatticePtr& P,
                                                                             const LatticePtr& Q) {
  std::vector<LeftAdjointConnection> out;
  for_each_monotone_table(*P, *Q, [&](const std::vector<Elem>& values) {
    out.push_back(left_adjoint_connection(MonotoneMap(P, Q, values)));
  });
  return out;
}

/// Every right adjoint connection P -> Q, one per monotone map Q -> P.
inline std::vector<RightAdjointConnection> enumerate_right_adjoint_connections(const LatticePtr& P,
                                                                               const LatticePtr& Q) {
  std::vector<RightAdjointConnection> out;
  for_each_monotone_table(*Q, *P, [&](const std::vector<Elem>& values) {
    out.push_back(right_adjoint_connection(MonotoneMap(Q, P, values)));
  });
  return out;
}

}  // namespace galois
