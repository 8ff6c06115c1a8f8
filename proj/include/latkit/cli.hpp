#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "dot.hpp"
#include "extension.hpp"
#include "free_builder.hpp"
#include "free_lattice.hpp"
#include "harness.hpp"
#include "report.hpp"
#include "text_format.hpp"

namespace latkit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

/// Published element counts that disagree with the computed ones.
inline constexpr std::uint64_t published_fd2 = 42;
inline constexpr std::string_view published_fd6 = "7,828 532";

namespace detail {

inline std::string join_ids(const FiniteLattice& l, const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + l.id(xs[i]);
  return s;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

inline bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Lattice text format, or DOT when the path ends in ".dot".
inline void save_lattice(const FiniteLattice& l, const std::string& path, const std::string& name) {
  write_text(path, ends_with(path, ".dot") ? to_dot(l, name) : write_lattice(l, name));
}

inline NamedLattice load(const std::string& path) {
  try {
    return parse_lattice_file(path);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

inline std::string verdict_line(const FiniteLattice& l, const std::string& key, const Verdict& v) {
  std::string s = key + ": " + (v ? "yes" : "no");
  if (!v && !v.witness.empty()) s += " (witness: " + join_ids(l, v.witness) + ")";
  return s;
}

inline int check(const std::string& property, const std::string& path, std::ostream& out) {
  const auto in = load(path);
  const auto& l = in.lattice;
  if (property == "modular" || property == "semimodular") {
    const auto v = property == "modular" ? is_modular(l) : is_semimodular(l);
    out << verdict_line(l, property, v) << "\n";
    return v ? exit_ok : exit_negative;
  }
  if (property == "distributive") {
    const auto v = is_distributive(l);
    out << verdict_line(l, property, v) << "\n";
    if (!v) {
      const auto& w = v.witness;
      out << "  " << l.id(w[0]) << " ^ (" << l.id(w[1]) << " v " << l.id(w[2])
          << ") = " << l.id(l.meet(w[0], l.join(w[1], w[2]))) << " but (" << l.id(w[0]) << " ^ " << l.id(w[1])
          << ") v (" << l.id(w[0]) << " ^ " << l.id(w[2])
          << ") = " << l.id(l.join(l.meet(w[0], w[1]), l.meet(w[0], w[2]))) << "\n";
    }
    return v ? exit_ok : exit_negative;
  }
  const auto r = classify(l);
  if (property == "no-forbidden-sublattice") {
    out << property << ": " << (r.forbidden ? "no" : "yes");
    if (r.forbidden)
      out << " (" << to_string(r.forbidden->kind) << ": "
          << join_ids(l, {r.forbidden->embedding.begin(), r.forbidden->embedding.end()}) << ")";
    out << "\n";
    return r.forbidden ? exit_negative : exit_ok;
  }
  for (const auto& [key, v] : r.verdicts())
    if (key == property) {
      out << verdict_line(l, key, *v) << "\n";
      return *v ? exit_ok : exit_negative;
    }
  const bool holds = r.flag(property);
  out << property << ": " << (holds ? "yes" : "no") << "\n";
  return holds ? exit_ok : exit_negative;
}

inline int complements(const std::string& path, const std::string& element, std::ostream& out) {
  const auto in = load(path);
  const auto& l = in.lattice;
  if (!element.empty()) {
    out << "complements of " << element << ": {" << join_ids(l, complements_of(l, element)) << "}\n";
    return exit_ok;
  }
  for (std::size_t x = 0; x < l.size(); ++x)
    out << l.id(x) << ": {" << join_ids(l, complements_of(l, x)) << "}\n";
  return exit_ok;
}

inline int free_leq_verb(const std::string& s, const std::string& t, std::ostream& out) {
  const auto a = parse_term(s), b = parse_term(t);
  FreeLattice f;
  const bool ab = f.leq(a, b), ba = f.leq(b, a);
  out << "s = " << a.to_string() << "\nt = " << b.to_string() << "\n";
  out << "s <= t: " << (ab ? "yes" : "no") << "\n";
  out << "t <= s: " << (ba ? "yes" : "no") << "\n";
  out << "relation: " << (ab && ba ? "s = t" : ab ? "s < t" : ba ? "s > t" : "incomparable") << "\n";
  return ab ? exit_ok : exit_negative;
}

inline int gen_fd(std::size_t n, bool flag_n6, std::uint64_t budget, const std::string& path, std::ostream& out) {
  if (n == 0) throw Error("gen-fd needs at least one generator");
  if (n == 6) {
    if (!flag_n6)
      throw BudgetExceeded("FD(6) is not materialized; pass --flag-n6 to count its elements instead");
    out << free_distributive_size(6) << " elements (counted, not materialized)\n";
    out << "note: the published table value reads " << published_fd6
        << "; the count of monotone Boolean functions on 6 variables minus the constants is 7,828,352\n";
    return exit_ok;
  }
  if (n > 6) throw BudgetExceeded("FD(" + std::to_string(n) + ") is beyond the supported range (n <= 6)");
  const auto ec = free_distributive(n, budget);
  out << ec.lattice.size() << " elements\n";
  if (n == 2)
    out << "note: the published table value for n = 2 is " << published_fd2
        << "; FD(2) is x1 ^ x2 < x1, x2 < x1 v x2, which has 4 elements\n";
  if (!path.empty()) save_lattice(ec.lattice, path, "FD" + std::to_string(n));
  return exit_ok;
}

inline int gen_fm3(const std::string& path, std::ostream& out) {
  const auto ec = free_modular_3();
  const auto& l = ec.lattice;
  out << l.size() << " elements\n";
  auto term_line = [&](const std::string& key, const Verdict& v) {
    out << key << ": " << (v ? "yes" : "no");
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      out << (i ? ", " : " (witness: ") << ec.terms[v.witness[i]].to_string();
    out << (v.witness.empty() ? "" : ")") << "\n";
  };
  term_line("modular", is_modular(l));
  term_line("distributive", is_distributive(l));
  const auto u_term = parse_term("(x1 ^ x2) v (x2 ^ x3) v (x1 ^ x3)");
  const auto v_term = parse_term("(x1 v x2) ^ (x2 v x3) ^ (x1 v x3)");
  const auto u = ec.element_of(u_term), v = ec.element_of(v_term);
  const auto iv = interval(l, u, v);
  out << "interval [u, v]: " << iv.size() << " elements, "
      << (isomorphic(iv, fixtures::m3()) ? "isomorphic to M3" : "not isomorphic to M3") << "\n";
  out << "  u = " << u_term.to_string() << "\n  v = " << v_term.to_string() << "\n";
  const auto p = project_onto_members(ec, {0});
  out << "collapse to 2-chain evaluations: " << p.image.size() << " elements, "
      << (isomorphic(p.image, free_distributive(3).lattice) ? "isomorphic to FD(3)" : "not isomorphic to FD(3)")
      << "\n";
  if (!path.empty()) save_lattice(l, path, "FM3");
  return exit_ok;
}

inline int extend(const std::string& path, const std::string& element, const std::string& name, std::size_t depth,
                  std::size_t budget, const std::string& dot_path, std::ostream& out) {
  const auto in = load(path);
  const auto ext = adjoin_unique_complement({in.lattice, element, name});
  const auto audit = audit_extension(ext, depth, budget);
  out << audit_text(ext, audit);
  if (!dot_path.empty()) write_text(dot_path, to_dot(audit.order, "FQ_depth" + std::to_string(depth)));
  return exit_ok;
}

inline int insert(const std::string& host_path, const std::string& x, const std::string& y,
                  const std::string& k_path, const std::string& path, std::ostream& out) {
  const auto host = load(host_path), k = load(k_path);
  const auto l = insert_into_interval(host.lattice, x, y, k.lattice);
  const std::string name = (host.name.empty() ? "host" : host.name) + "_" + (k.name.empty() ? "K" : k.name);
  if (path.empty()) {
    out << write_lattice(l, name);
  } else {
    save_lattice(l, path, name);
    out << l.size() << " elements written to " << path << "\n";
  }
  return exit_ok;
}

inline int enumerate(std::size_t n, bool allow_large, const std::string& path, std::ostream& out) {
  const auto c = enumerate_lattices(n, allow_large);
  const auto counts = c.counts();
  std::size_t total = 0;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    out << "size " << m + 1 << ": " << counts[m] << "\n";
    total += counts[m];
  }
  out << "total: " << total << " (strategy " << c.strategy << ")\n";
  if (!path.empty()) save_corpus(c, path);
  return exit_ok;
}

inline int harness(const std::string& corpus_path, std::size_t bound, const std::vector<std::string>& ids,
                   std::ostream& out) {
  const auto c = corpus_path.empty() ? enumerate_lattices(bound) : load_corpus(corpus_path);
  out << harness_text(run_harness(c, ids));
  return exit_ok;
}

inline int dot(const std::string& path, const std::string& out_path, std::ostream& out) {
  const auto in = load(path);
  const auto text = to_dot(in.lattice, in.name.empty() ? "L" : in.name);
  if (out_path.empty()) out << text;
  else write_text(out_path, text);
  return exit_ok;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"latkit: finite lattice workbench"};
  app.name("latkit");
  app.require_subcommand(1);

  std::string file, file2, property, element, name = "u", s, t, x, y, out_path, corpus_path;
  std::size_t n = 0, depth = 3, bound = 7;
  std::uint64_t budget = 0;
  bool flag_n6 = false, kv = false, allow_large = false;
  std::vector<std::string> ids;

  auto* check = app.add_subcommand("check", "decide one property; exit 1 when it fails");
  check->add_option("property", property, "property key (e.g. distributive, modular)")->required();
  check->add_option("file", file, "lattice file")->required();

  auto* comp = app.add_subcommand("complements", "complements of every element, or of one");
  comp->add_option("file", file, "lattice file")->required();
  comp->add_option("element", element, "element id");

  auto* cls = app.add_subcommand("classify", "full property report");
  cls->add_option("file", file, "lattice file")->required();
  cls->add_flag("--kv", kv, "key=value output");

  auto* fleq = app.add_subcommand("free-leq", "decide s <= t in the free lattice; exit 1 when it fails");
  fleq->add_option("s", s)->required();
  fleq->add_option("t", t)->required();

  auto* fcanon = app.add_subcommand("free-canon", "canonical form of a free-lattice term");
  fcanon->add_option("term", s)->required();

  auto* gfd = app.add_subcommand("gen-fd", "build the free distributive lattice on n generators");
  gfd->add_option("n", n)->required();
  gfd->add_flag("--flag-n6", flag_n6, "count FD(6) instead of building it");
  gfd->add_option("--budget", budget, "closure work budget");
  gfd->add_option("--out", out_path, "write the lattice (.dot for DOT)");

  auto* gfm = app.add_subcommand("gen-fm3", "build the free modular lattice on 3 generators");
  gfm->add_option("--out", out_path, "write the lattice (.dot for DOT)");

  auto* ext = app.add_subcommand("extend", "adjoin a complement and audit F(Q) to a depth cap");
  ext->add_option("file", file, "lattice file")->required();
  ext->add_option("--element", element, "element receiving the new complement")->required();
  ext->add_option("--name", name, "id of the adjoined element");
  ext->add_option("--depth", depth, "round cap");
  ext->add_option("--budget", budget, "class budget");
  ext->add_option("--out", out_path, "write the DOT diagram of the classes found");

  auto* ins = app.add_subcommand("insert", "insert a lattice K into a prime interval [x, y] of a host");
  ins->add_option("host", file, "host lattice file")->required();
  ins->add_option("x", x)->required();
  ins->add_option("y", y)->required();
  ins->add_option("k", file2, "lattice file for K")->required();
  ins->add_option("--out", out_path, "write the result (.dot for DOT)");

  auto* en = app.add_subcommand("enum", "enumerate lattices up to isomorphism");
  en->add_option("n", n, "largest size")->required();
  en->add_option("--out", out_path, "save the corpus");
  en->add_flag("--allow-large", allow_large, "permit n = 9");

  auto* har = app.add_subcommand("harness", "evaluate claims over a corpus");
  har->add_option("claims", ids, "claim ids (default: all)");
  har->add_option("--corpus", corpus_path, "corpus file (default: enumerate)");
  har->add_option("--bound", bound, "largest size when enumerating");

  auto* dt = app.add_subcommand("dot", "Hasse diagram in DOT");
  dt->add_option("file", file, "lattice file")->required();
  dt->add_option("--out", out_path, "output path");

  if (!args.empty() && !args[0].starts_with("-")) {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    if (std::none_of(subs.begin(), subs.end(), [&](const CLI::App* a) { return a->get_name() == args[0]; })) {
      err << "error: unknown verb '" << args[0] << "'\n";
      return exit_error;
    }
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }

  try {
    if (*check) return detail::check(property, file, out);
    if (*comp) return detail::complements(file, element, out);
    if (*cls) {
      const auto in = detail::load(file);
      const auto r = classify(in.lattice);
      out << (kv ? report_key_values(in.lattice, r) : report_text(in.lattice, r, in.name));
      return exit_ok;
    }
    if (*fleq) return detail::free_leq_verb(s, t, out);
    if (*fcanon) {
      out << canonical_form(parse_term(s)).to_string() << "\n";
      return exit_ok;
    }
    if (*gfd) return detail::gen_fd(n, flag_n6, budget ? budget : 100'000'000, out_path, out);
    if (*gfm) return detail::gen_fm3(out_path, out);
    if (*ext) return detail::extend(file, element, name, depth, budget ? budget : 20000, out_path, out);
    if (*ins) return detail::insert(file, x, y, file2, out_path, out);
    if (*en) return detail::enumerate(n, allow_large, out_path, out);
    if (*har) return detail::harness(corpus_path, bound, ids, out);
    if (*dt) return detail::dot(file, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  err << "error: no command\n";
  return exit_error;
}

}  // namespace latkit::cli
