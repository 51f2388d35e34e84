#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "galois/catalog.hpp"
#include "galois/generate.hpp"
#include "galois/laws.hpp"

namespace galois {

/// A boolean combination of law identifiers, e.g. "LM0 & RM0 & !(LF0 & RF0)".
/// Grammar: expr := term ('|' term)* ; term := factor ('&' factor)* ;
/// factor := '!' factor | '(' expr ')' | LAW.
class Predicate {
 public:
  static Predicate parse(std::string_view text) {
    Parser p{text, 0};
    auto root = p.expr();
    p.skip_space();
    if (p.pos != text.size()) p.fail("unexpected '" + std::string(1, text[p.pos]) + "'");
    return Predicate(std::string(text), std::move(root));
  }

  const std::string& text() const noexcept { return text_; }

  std::set<Law> laws() const {
    std::set<Law> out;
    collect(*root_, out);
    return out;
  }

  /// Evaluates with the given law verdicts; nullopt if any referenced law was
  /// skipped (the predicate is then undefined for that case).
  std::optional<bool> evaluate(const std::map<Law, Verdict>& verdicts) const {
    for (Law law : laws()) {
      auto it = verdicts.find(law);
      if (it == verdicts.end() || it->second == Verdict::skipped) return std::nullopt;
    }
    return eval(*root_, verdicts);
  }

 private:
  struct Node {
    enum class Kind { law, negation, conjunction, disjunction } kind;
    Law law = Law::LM0;
    std::vector<std::shared_ptr<const Node>> children;
  };
  using NodePtr = std::shared_ptr<const Node>;

  struct Parser {
    std::string_view text;
    std::size_t pos;

    [[noreturn]] void fail(const std::string& message) const {
      throw Error(Errc::parse_error, "predicate '" + std::string(text) + "' at column " + std::to_string(pos + 1) +
                                         ": " + message);
    }
    void skip_space() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool accept(char c) {
      skip_space();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        if (pos < text.size() && (c == '&' || c == '|') && text[pos] == c) ++pos;  // && and ||
        return true;
      }
      return false;
    }
    NodePtr expr() {
      auto node = term();
      while (accept('|')) node = std::make_shared<const Node>(Node{Node::Kind::disjunction, Law::LM0, {node, term()}});
      return node;
    }
    NodePtr term() {
      auto node = factor();
      while (accept('&')) node = std::make_shared<const Node>(Node{Node::Kind::conjunction, Law::LM0, {node, factor()}});
      return node;
    }
    NodePtr factor() {
      if (accept('!')) return std::make_shared<const Node>(Node{Node::Kind::negation, Law::LM0, {factor()}});
      if (accept('(')) {
        auto node = expr();
        if (!accept(')')) fail("expected ')'");
        return node;
      }
      skip_space();
      const std::size_t start = pos;
      while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
      const auto word = text.substr(start, pos - start);
      if (word.empty()) fail("expected a law name");
      const auto law = parse_law(word);
      if (!law) {
        pos = start;
        fail("unknown law '" + std::string(word) + "'");
      }
      return std::make_shared<const Node>(Node{Node::Kind::law, *law, {}});
    }
  };

  Predicate(std::string text, NodePtr root) : text_(std::move(text)), root_(std::move(root)) {}

  static void collect(const Node& n, std::set<Law>& out) {
    if (n.kind == Node::Kind::law) out.insert(n.law);
    for (const auto& c : n.children) collect(*c, out);
  }

  static bool eval(const Node& n, const std::map<Law, Verdict>& v) {
    switch (n.kind) {
      case Node::Kind::law: return v.at(n.law) == Verdict::holds;
      case Node::Kind::negation: return !eval(*n.children[0], v);
      case Node::Kind::conjunction: return eval(*n.children[0], v) && eval(*n.children[1], v);
      case Node::Kind::disjunction: return eval(*n.children[0], v) || eval(*n.children[1], v);
    }
    return false;
  }

  std::string text_;
  NodePtr root_;
};

struct SearchOptions {
  bool include_generated = true;  // add every lattice up to max_size, not just the catalog
  bool modular_only = false;      // only pairs with P and Q both modular
};

inline constexpr std::size_t max_search_size = 8;

struct SearchResult {
  bool found = false;
  std::size_t cases = 0;      // adjoint connections examined
  std::size_t undefined = 0;  // cases where a referenced law was skipped
  std::optional<AdjointConnection> witness;
  std::map<Law, Verdict> verdicts;
};

/// The lattices a search ranges over: the catalog's bounded lattices of size
/// <= max_size, then (optionally) every other lattice up to max_size, with
/// isomorphic duplicates dropped.
inline std::vector<LatticePtr> search_lattices(std::size_t max_size, bool include_generated) {
  std::vector<LatticePtr> out;
  std::set<std::vector<std::uint8_t>> seen;
  auto add = [&](const LatticePtr& L) {
    if (L->size() > max_size || !L->is_lattice() || !L->is_bounded()) return;
    if (seen.insert(canonical_key(*L)).second) out.push_back(L);
  };
  for (const auto& L : catalog()) add(L);
  if (include_generated)
    for (const auto& L : lattices_up_to(max_size)) add(L);
  return out;
}

/// Runs through every adjoint connection between every ordered pair of search
/// lattices, in order, and stops at the first one satisfying the predicate.
inline SearchResult search_counterexample(const Predicate& predicate, std::size_t max_size,
                                          const SearchOptions& options = {}) {
  if (max_size > max_search_size)
    throw Error(Errc::size_bound_exceeded,
                "max size " + std::to_string(max_size) + " exceeds " + std::to_string(max_search_size));
  SearchResult result;
  const auto lattices = search_lattices(max_size, options.include_generated);
  const auto laws = predicate.laws();
  for (const auto& P : lattices)
    for (const auto& Q : lattices) {
      if (options.modular_only && !(P->is_modular() && Q->is_modular())) continue;
      for (auto& a : enumerate_adjoint_connections(P, Q)) {
        ++result.cases;
        std::map<Law, Verdict> verdicts;
        for (Law law : laws) verdicts[law] = eval_law(law, a).verdict;
        const auto value = predicate.evaluate(verdicts);
        if (!value) {
          ++result.undefined;
          continue;
        }
        if (*value) {
          result.found = true;
          result.witness = std::move(a);
          result.verdicts = std::move(verdicts);
          return result;
        }
      }
    }
  return result;
}

}  // namespace galois
