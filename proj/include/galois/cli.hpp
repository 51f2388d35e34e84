#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galois/quantale.hpp"
#include "galois/report.hpp"
#include "galois/search.hpp"
#include "galois/suites.hpp"
#include "galois/text_format.hpp"

namespace galois::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

// Maps are read as the left adjoint connection x R y <=> f(x) <= y.
inline std::vector<NamedConnection> connections_of(const Document& doc) {
  std::vector<NamedConnection> out = doc.connections;
  for (const auto& m : doc.maps) out.push_back({m.name, connection_of_monotone_left(m.map)});
  return out;
}

inline void print_header(std::ostream& out, const NamedConnection& c) {
  out << "conn " << c.name << ": " << c.conn.source()->name() << " -> " << c.conn.target()->name() << "\n";
}

inline int check(const std::string& file, std::ostream& out) {
  const auto doc = load_document(file);
  for (const auto& p : doc.posets) out << "poset " << p->name() << ": " << format_flags(*p) << "\n";
  for (const auto& m : doc.maps)
    out << "map " << m.name << ": " << m.map.source()->name() << " -> " << m.map.target()->name()
        << " monotone [" << format_map(m.map) << "]\n";
  for (const auto& c : doc.connections)
    out << "conn " << c.name << ": " << c.conn.source()->name() << " -> " << c.conn.target()->name()
        << " connection\n";
  for (const auto& q : doc.quantales) {
    out << "quantale " << q.name() << " over " << q.lattice()->name() << ": "
        << "unit=" << (q.unit() ? q.lattice()->label(*q.unit()) : "none")
        << " integral=" << (q.is_integral() ? "yes" : "no") << "\n";
  }
  return exit_ok;
}

inline int adjoints(const std::string& file, std::ostream& out) {
  const auto doc = load_document(file);
  for (const auto& c : connections_of(doc)) {
    print_header(out, c);
    const auto f = find_left_adjoint(c.conn);
    const auto g = find_right_adjoint(c.conn);
    out << "  f_R: " << (f ? format_map(*f) : "absent") << "\n";
    out << "  f^R: " << (g ? format_map(*g) : "absent") << "\n";
  }
  return exit_ok;
}

inline int laws(const std::string& file, const std::vector<std::string>& requested, std::ostream& out,
                std::ostream& err) {
  std::vector<Law> selected;
  for (const auto& name : requested) {
    auto law = parse_law(name);
    if (!law) {
      err << "unknown law '" << name << "'\n";
      return exit_usage;
    }
    selected.push_back(*law);
  }
  const bool explicit_laws = !selected.empty();
  if (!explicit_laws) selected.assign(all_laws.begin(), all_laws.end());

  const auto doc = load_document(file);
  int status = exit_ok;
  for (const auto& c : connections_of(doc)) {
    print_header(out, c);
    LawContext ctx{c.conn.source(), c.conn.target(), find_left_adjoint(c.conn), find_right_adjoint(c.conn)};
    for (Law law : selected) {
      LawReport report;
      if ((galois::detail::needs_left(law) && !ctx.left) || (galois::detail::needs_right(law) && !ctx.right)) {
        report = {std::string(to_string(law)), law, Verdict::skipped, std::nullopt,
                  !ctx.left ? "no left adjoint" : "no right adjoint"};
      } else {
        report = eval_law(law, ctx);
      }
      out << format_law_report(report) << "\n";
      if (explicit_laws && report.fails()) status = exit_failure;
    }
  }
  return status;
}

inline int verify(const std::string& suite_name, std::optional<std::size_t> up_to, std::ostream& out) {
  std::vector<Suite> suites;
  if (suite_name == "all") suites.assign(all_suites.begin(), all_suites.end());
  else suites.push_back(*parse_suite(suite_name));

  std::vector<LatticePtr> family, small_family;
  if (up_to) {
    family = lattices_up_to(*up_to);
    for (const auto& L : family)
      if (L->size() <= 4) small_family.push_back(L);
  } else {
    family = theorem_family();
    small_family = composition_family();
  }
  int status = exit_ok;
  for (Suite s : suites) {
    const auto result = run_suite(s, s == Suite::composition ? small_family : family);
    out << format_suite_result(result);
    if (!result.ok()) status = exit_failure;
  }
  out << (status == exit_ok ? "verify: ok\n" : "verify: FAILED\n");
  return status;
}

inline int quantale(std::optional<unsigned> zn, const std::string& file, bool principal, std::ostream& out) {
  std::vector<Quantale> quantales;
  if (zn) quantales.push_back(zn_ideal_quantale(*zn));
  else quantales = load_document(file).quantales;

  int status = exit_ok;
  for (const auto& q : quantales) {
    const auto& L = *q.lattice();
    out << "quantale " << q.name() << " over " << L.name() << ": unit="
        << (q.unit() ? L.label(*q.unit()) : "none") << " integral=" << (q.is_integral() ? "yes" : "no") << "\n";
    if (!principal) continue;
    for (Elem e = 0; e < q.size(); ++e) {
      const auto p = is_principal(q, e);
      const auto w = is_weak_principal(q, e);
      out << L.label(e) << ": " << (p.principal() ? "principal" : "not principal") << ", "
          << (w.weak_principal() ? "weak principal" : "not weak principal") << "\n";
      for (const auto* r : {&p.meet_law, &p.join_law, &w.lm0, &w.rm0})
        if (!r->holds()) out << "  " << format_law_report(*r) << "\n";
      if (!p.routes_agree()) {
        out << "  DISAGREE: Dilworth laws say " << (p.principal() ? "principal" : "not principal")
            << ", LF0/RF0 say " << (p.frobenius() ? "principal" : "not principal") << "\n";
        status = exit_failure;
      }
    }
  }
  return status;
}

inline int search(const std::string& text, std::size_t max_size, bool modular, bool catalog_only,
                  std::ostream& out) {
  const auto predicate = Predicate::parse(text);
  const auto result = search_counterexample(predicate, max_size, {!catalog_only, modular});
  if (!result.found) {
    out << "not found (" << result.cases << " cases)\n";
    return exit_ok;
  }
  const auto& a = *result.witness;
  out << "found after " << result.cases << " cases: " << a.source()->name() << " -> " << a.target()->name() << "\n";
  out << "  f_R: " << format_map(a.left) << "\n";
  out << "  f^R: " << format_map(a.right) << "\n";
  for (const auto& [law, verdict] : result.verdicts) out << "  " << to_string(law) << " " << to_string(verdict) << "\n";
  return exit_ok;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 success, 1 verification failure, 2 usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Finite connections, Galois adjunctions and their laws", "galois"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> law_names;
  std::string suite = "all";
  bool catalog_flag = false;
  std::optional<std::size_t> up_to;
  std::optional<unsigned> zn;
  bool principal = false;
  std::string predicate;
  std::size_t max_size = 0;
  bool modular = false;
  bool catalog_only = false;

  auto* check = app.add_subcommand("check", "Parse and validate a file; print structural flags");
  check->add_option("file", file, "Input file")->required();

  auto* adjoints = app.add_subcommand("adjoints", "Print the left and right adjoints of each connection");
  adjoints->add_option("file", file, "Connection file")->required();

  auto* laws = app.add_subcommand("laws", "Evaluate laws on each connection");
  laws->add_option("file", file, "Connection file")->required();
  laws->add_option("--law", law_names, "Law identifier (repeatable; default all)");

  std::vector<std::string> suite_names{"all"};
  for (Suite s : all_suites) suite_names.emplace_back(to_string(s));
  auto* verify = app.add_subcommand("verify", "Run theorem suites exhaustively");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
  verify->add_flag("--catalog", catalog_flag, "Range over the catalog lattices (default)");
  verify->add_option("--lattices-up-to", up_to, "Range over every lattice up to this size instead")
      ->check(CLI::Range(1, 6));

  auto* quantale = app.add_subcommand("quantale", "Principal and weak-principal verdicts per element");
  auto* zn_opt = quantale->add_option("--zn", zn, "Use the ideal quantale of Z_n")->check(CLI::Range(2u, 100000u));
  quantale->add_option("file", file, "Quantale file")->excludes(zn_opt);
  quantale->add_flag("--principal", principal, "Print per-element verdicts");

  auto* search = app.add_subcommand("search", "Search adjoint connections for a predicate");
  search->add_option("--predicate", predicate, "Boolean combination of laws, e.g. \"LM0 & !LM1\"")->required();
  search->add_option("--max-size", max_size, "Largest lattice size")->required();
  search->add_flag("--modular", modular, "Only pairs of modular lattices");
  search->add_flag("--catalog-only", catalog_only, "Skip the exhaustive lattice generator");

  std::vector<std::string> argv_storage{"galois"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (check->parsed()) return detail::check(file, out);
    if (adjoints->parsed()) return detail::adjoints(file, out);
    if (laws->parsed()) return detail::laws(file, law_names, out, err);
    if (verify->parsed()) return detail::verify(suite, up_to, out);
    if (quantale->parsed()) {
      if (!zn && file.empty()) {
        err << "quantale: give --zn <n> or a file\n";
        return exit_usage;
      }
      return detail::quantale(zn, file, principal, out);
    }
    if (search->parsed()) return detail::search(predicate, max_size, modular, catalog_only, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace galois::cli
