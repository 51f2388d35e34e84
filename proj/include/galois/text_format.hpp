#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois/catalog.hpp"
#include "galois/connection.hpp"
#include "galois/quantale.hpp"

// Line-oriented text formats. '#' starts a comment; tokens are separated by
// whitespace; labels are case-sensitive.
//
//   poset <name>                      map <name> <source> <target>
//   elem <label> [<label> ...]        send <sourceLabel> <targetLabel>
//   le <labelA> <labelB>
//                                     conn <name> <source> <target>
//   quantale <name> over <poset>      rel <sourceLabel> <targetLabel>
//   mul <a> <b> <c>
//
// A block runs from its header line to the next header. Maps, connections and
// quantales may name posets declared earlier in the file or catalog lattices.

namespace galois {

class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& message)
      : Error(Errc::parse_error, file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

struct NamedMap {
  std::string name;
  MonotoneMap map;
};

struct NamedConnection {
  std::string name;
  Connection conn;
};

/// Everything declared in one input file, in declaration order.
struct Document {
  std::vector<LatticePtr> posets;
  std::vector<NamedMap> maps;
  std::vector<NamedConnection> connections;
  std::vector<Quantale> quantales;

  /// A poset declared in the document, else a catalog lattice, else null.
  LatticePtr find_poset(std::string_view name) const {
    for (const auto& p : posets)
      if (p->name() == name) return p;
    return catalog_lattice(name);
  }
};

namespace detail {

class DocumentParser {
 public:
  explicit DocumentParser(std::string file) : file_(std::move(file)) {}

  Document parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      ++line_no;
      handle_line(line_no, line);
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    finish_block();
    return std::move(doc_);
  }

 private:
  enum class Block { none, poset, map, conn, quantale };

  [[noreturn]] void fail(std::size_t line, const std::string& message) const { throw ParseError(file_, line, message); }

  static std::vector<std::string> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; is >> t;) tokens.push_back(t);
    return tokens;
  }

  void expect_args(std::size_t line, const std::vector<std::string>& t, std::size_t n, const char* usage) const {
    if (t.size() != n) fail(line, std::string("expected '") + usage + "'");
  }

  LatticePtr poset_named(std::size_t line, const std::string& name) const {
    auto p = doc_.find_poset(name);
    if (!p) fail(line, "unknown poset '" + name + "'");
    return p;
  }

  Elem element(std::size_t line, const FiniteLattice& L, const std::string& label) const {
    auto e = L.index_of(label);
    if (!e) fail(line, "unknown label '" + label + "' in poset '" + L.name() + "'");
    return *e;
  }

  void require_new_name(std::size_t line, const std::string& name) const {
    if (std::find(names_.begin(), names_.end(), name) != names_.end()) fail(line, "name '" + name + "' already declared");
  }

  void handle_line(std::size_t line, std::string_view raw) {
    const auto t = tokenize(raw);
    if (t.empty()) return;
    const auto& d = t[0];
    if (d == "poset") {
      finish_block();
      expect_args(line, t, 2, "poset <name>");
      require_new_name(line, t[1]);
      start(Block::poset, line, t[1]);
    } else if (d == "map" || d == "conn") {
      finish_block();
      expect_args(line, t, 4, d == "map" ? "map <name> <source> <target>" : "conn <name> <source> <target>");
      require_new_name(line, t[1]);
      start(d == "map" ? Block::map : Block::conn, line, t[1]);
      source_ = poset_named(line, t[2]);
      target_ = poset_named(line, t[3]);
      sent_.assign(source_->size(), std::nullopt);
      rel_.assign(source_->size() * target_->size(), 0);
    } else if (d == "quantale") {
      finish_block();
      if (t.size() != 4 || t[2] != "over") fail(line, "expected 'quantale <name> over <poset>'");
      require_new_name(line, t[1]);
      start(Block::quantale, line, t[1]);
      source_ = poset_named(line, t[3]);
      mul_.assign(source_->size() * source_->size(), std::nullopt);
    } else if (d == "elem") {
      if (block_ != Block::poset) fail(line, "'elem' outside a poset block");
      if (t.size() < 2) fail(line, "expected 'elem <label> [<label> ...]'");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (std::find(labels_.begin(), labels_.end(), t[i]) != labels_.end())
          fail(line, "DuplicateLabel: '" + t[i] + "'");
        labels_.push_back(t[i]);
      }
    } else if (d == "le") {
      if (block_ != Block::poset) fail(line, "'le' outside a poset block");
      expect_args(line, t, 3, "le <labelA> <labelB>");
      for (int i : {1, 2})
        if (std::find(labels_.begin(), labels_.end(), t[i]) == labels_.end())
          fail(line, "UnknownLabel: '" + t[i] + "'");
      les_.emplace_back(t[1], t[2]);
    } else if (d == "send") {
      if (block_ != Block::map) fail(line, "'send' outside a map block");
      expect_args(line, t, 3, "send <sourceLabel> <targetLabel>");
      const Elem x = element(line, *source_, t[1]);
      const Elem y = element(line, *target_, t[2]);
      if (sent_[x] && *sent_[x] != y) fail(line, "'" + t[1] + "' already sent to '" + target_->label(*sent_[x]) + "'");
      sent_[x] = y;
    } else if (d == "rel") {
      if (block_ != Block::conn) fail(line, "'rel' outside a conn block");
      expect_args(line, t, 3, "rel <sourceLabel> <targetLabel>");
      rel_[element(line, *source_, t[1]) * target_->size() + element(line, *target_, t[2])] = 1;
    } else if (d == "mul") {
      if (block_ != Block::quantale) fail(line, "'mul' outside a quantale block");
      expect_args(line, t, 4, "mul <a> <b> <c>");
      const std::size_t n = source_->size();
      const Elem a = element(line, *source_, t[1]), b = element(line, *source_, t[2]), c = element(line, *source_, t[3]);
      for (Elem cell : {a * n + b, b * n + a}) {
        if (mul_[cell] && *mul_[cell] != c)
          fail(line, "conflicting products for '" + t[1] + "' and '" + t[2] + "'");
        mul_[cell] = c;
      }
    } else {
      fail(line, "unknown directive '" + d + "'");
    }
  }

  void start(Block b, std::size_t line, const std::string& name) {
    block_ = b;
    block_line_ = line;
    name_ = name;
    names_.push_back(name);
    labels_.clear();
    les_.clear();
  }

  void finish_block() {
    const std::size_t line = block_line_;
    try {
      switch (block_) {
        case Block::none: break;
        case Block::poset: doc_.posets.push_back(build_poset(name_, labels_, les_)); break;
        case Block::map: {
          std::vector<Elem> values;
          for (Elem x = 0; x < source_->size(); ++x) {
            if (!sent_[x]) fail(line, "map '" + name_ + "' does not send '" + source_->label(x) + "'");
            values.push_back(*sent_[x]);
          }
          doc_.maps.push_back({name_, MonotoneMap(source_, target_, std::move(values))});
          break;
        }
        case Block::conn: doc_.connections.push_back({name_, Connection(source_, target_, rel_)}); break;
        case Block::quantale: {
          MultTable table;
          for (Elem cell = 0; cell < mul_.size(); ++cell) {
            if (!mul_[cell]) {
              const std::size_t n = source_->size();
              fail(line, "quantale '" + name_ + "' is missing " + source_->label(cell / n) + "·" +
                             source_->label(cell % n));
            }
            table.push_back(*mul_[cell]);
          }
          doc_.quantales.push_back(build_quantale(name_, source_, std::move(table)));
          break;
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(line, e.what());
    }
    block_ = Block::none;
  }

  std::string file_;
  Document doc_;
  Block block_ = Block::none;
  std::size_t block_line_ = 0;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::string>> les_;
  LatticePtr source_;
  LatticePtr target_;
  std::vector<std::optional<Elem>> sent_;
  RelationTable rel_;
  std::vector<std::optional<Elem>> mul_;
};

}  // namespace detail

inline Document parse_document(std::string_view text, std::string file = "<input>") {
  return detail::DocumentParser(std::move(file)).parse(text);
}

inline Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path);
}

}  // namespace galois
