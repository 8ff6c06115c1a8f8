#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "error.hpp"
#include "lattice.hpp"

namespace latkit {

inline constexpr std::size_t dot_max_elements = 500;

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Hasse diagram of the cover relation, bottom up, one rank per height.
inline std::string to_dot(const FinitePoset& p, const std::string& name = "L") {
  if (p.size() > dot_max_elements)
    throw Error("diagram has " + std::to_string(p.size()) + " elements; at most " +
                std::to_string(dot_max_elements) + " supported");
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < p.size(); ++i) ranks[p.height(i)].push_back(i);
  for (const auto& [h, members] : ranks) {
    out << "  { rank=same;";
    for (auto i : members) out << ' ' << detail::dot_quote(p.id(i)) << ';';
    out << " }\n";
  }
  for (const auto& [lo, hi] : p.covers())
    out << "  " << detail::dot_quote(p.id(lo)) << " -> " << detail::dot_quote(p.id(hi)) << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const FiniteLattice& l, const std::string& name = "L") { return to_dot(l.poset(), name); }

inline void emit_dot(const FiniteLattice& l, const std::string& path, const std::string& name = "L") {
  const auto text = to_dot(l, name);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("write failed: " + path);
}

}  // namespace latkit
