#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"

namespace latkit {

/// Lattice text format:
///
///   lattice <name>
///   elements: id id ...
///   covers: lo<hi lo<hi ...
///
/// `elements:` and `covers:` lines may repeat and accumulate. A new `lattice`
/// line starts a new entry. Blank lines and `#` comments are ignored. Covers
/// may be any generating relation; the order is its reflexive-transitive
/// closure.
struct NamedLattice {
  std::string name;
  FiniteLattice lattice;
};

namespace detail {

struct LatticeBlock {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> elements;
  std::vector<std::size_t> element_line;
  std::vector<IdPair> covers;
  std::vector<std::size_t> cover_line;
};

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool valid_id(std::string_view s) {
  return !s.empty() && s.find_first_of("<#:") == std::string_view::npos;
}

// Cover whose addition, in input order, first closes a cycle.
inline std::size_t cycle_line(const LatticeBlock& b) {
  std::map<std::string, std::vector<std::string>> succ;
  for (std::size_t k = 0; k < b.covers.size(); ++k) {
    const auto& [lo, hi] = b.covers[k];
    std::vector<std::string> stack{hi};
    std::set<std::string> seen{hi};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (x == lo) return b.cover_line[k];
      for (const auto& y : succ[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    succ[lo].push_back(hi);
  }
  return b.line;
}

inline std::size_t element_line(const LatticeBlock& b, const std::string& id) {
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    if (b.elements[i] == id) return b.element_line[i];
  for (std::size_t k = 0; k < b.covers.size(); ++k)
    if (b.covers[k].first == id || b.covers[k].second == id) return b.cover_line[k];
  return b.line;
}

inline NamedLattice build_block(const LatticeBlock& b) {
  try {
    if (b.elements.empty()) throw LatticeCheckFailure(CheckKind::empty, {});
    return {b.name, lattice_from_poset(FinitePoset::from_covers(b.elements, b.covers))};
  } catch (const LatticeCheckFailure& e) {
    std::size_t line = b.line;
    const auto& w = e.witness();
    switch (e.kind()) {
      case CheckKind::not_antisymmetric: line = cycle_line(b); break;
      case CheckKind::duplicate_id: {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < b.elements.size(); ++i)
          if (b.elements[i] == w[0] && ++seen == 2) line = b.element_line[i];
        break;
      }
      default:
        if (!w.empty()) line = element_line(b, w[0]);
    }
    throw LatticeCheckFailure(e.kind(), w, line);
  }
}

}  // namespace detail

inline std::vector<NamedLattice> parse_lattices(std::string_view text) {
  std::vector<detail::LatticeBlock> blocks;
  std::size_t line_no = 0;
  auto current = [&](std::size_t line) -> detail::LatticeBlock& {
    if (blocks.empty()) {
      blocks.emplace_back();
      blocks.back().line = line;
    }
    return blocks.back();
  };
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto words = detail::split_ws(line);
    if (words[0] == "lattice") {
      if (words.size() > 2) throw ParseError("lattice name must be a single word", line_no);
      blocks.emplace_back();
      blocks.back().line = line_no;
      if (words.size() == 2) blocks.back().name = words[1];
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'lattice', 'elements:' or 'covers:', got '" + words[0] + "'", line_no, 1);
    const auto key = detail::trim(line.substr(0, colon));
    const auto items = detail::split_ws(line.substr(colon + 1));
    auto& b = current(line_no);
    if (key == "elements") {
      for (const auto& id : items) {
        if (!detail::valid_id(id)) throw ParseError("bad element id '" + id + "'", line_no);
        b.elements.push_back(id);
        b.element_line.push_back(line_no);
      }
    } else if (key == "covers") {
      for (const auto& item : items) {
        const auto lt = item.find('<');
        if (lt == std::string::npos || item.find('<', lt + 1) != std::string::npos)
          throw ParseError("cover '" + item + "' is not of the form lo<hi", line_no);
        auto lo = item.substr(0, lt), hi = item.substr(lt + 1);
        if (!detail::valid_id(lo) || !detail::valid_id(hi))
          throw ParseError("cover '" + item + "' has an empty or bad id", line_no);
        b.covers.emplace_back(lo, hi);
        b.cover_line.push_back(line_no);
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, 1);
    }
  }
  if (blocks.empty()) throw ParseError("no lattice found", line_no ? line_no : 1);
  std::vector<NamedLattice> out;
  for (const auto& b : blocks) out.push_back(detail::build_block(b));
  return out;
}

/// Exactly one lattice.
inline NamedLattice parse_lattice(std::string_view text) {
  auto all = parse_lattices(text);
  if (all.size() != 1)
    throw ParseError("expected one lattice, found " + std::to_string(all.size()), 1);
  return std::move(all.front());
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline NamedLattice parse_lattice_file(const std::string& path) { return parse_lattice(read_file(path)); }

inline std::string write_lattice(const FiniteLattice& l, const std::string& name = "") {
  std::string out = "lattice";
  if (!name.empty()) out += " " + name;
  out += "\nelements:";
  for (const auto& id : l.ids()) out += " " + id;
  out += "\ncovers:";
  for (const auto& [lo, hi] : l.poset().covers()) out += " " + l.id(lo) + "<" + l.id(hi);
  return out + "\n";
}

}  // namespace latkit
