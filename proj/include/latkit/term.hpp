#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"

namespace latkit {

/// Immutable lattice term. Meet and join nodes are kept flattened, with their
/// children sorted under a fixed total order and deduplicated, so terms that
/// differ only by associativity, commutativity or idempotence are identical.
class LatticeTerm {
 public:
  enum class Kind : std::uint8_t { gen, meet, join };

  LatticeTerm() : LatticeTerm(var("x1")) {}

  static LatticeTerm var(std::string symbol) {
    if (symbol.empty()) throw Error("empty generator symbol");
    auto n = std::make_shared<Node>();
    n->kind = Kind::gen;
    n->hash = std::hash<std::string>{}(symbol) * 0x9e3779b97f4a7c15ULL;
    n->symbol = std::move(symbol);
    n->size = 1;
    return LatticeTerm(std::move(n));
  }

  static LatticeTerm meet(std::vector<LatticeTerm> parts) { return combine(Kind::meet, std::move(parts)); }
  static LatticeTerm join(std::vector<LatticeTerm> parts) { return combine(Kind::join, std::move(parts)); }
  static LatticeTerm meet(const LatticeTerm& a, const LatticeTerm& b) { return meet(std::vector{a, b}); }
  static LatticeTerm join(const LatticeTerm& a, const LatticeTerm& b) { return join(std::vector{a, b}); }

  Kind kind() const noexcept { return node_->kind; }
  bool is_gen() const noexcept { return node_->kind == Kind::gen; }
  bool is_meet() const noexcept { return node_->kind == Kind::meet; }
  bool is_join() const noexcept { return node_->kind == Kind::join; }
  const std::string& symbol() const noexcept { return node_->symbol; }
  const std::vector<LatticeTerm>& children() const noexcept { return node_->children; }

  /// Node count.
  std::size_t size() const noexcept { return node_->size; }
  /// Operator alternations on the longest root-to-leaf path; generators are 0.
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }
  const void* identity() const noexcept { return node_.get(); }

  std::set<std::string> symbols() const {
    std::set<std::string> out;
    collect(out);
    return out;
  }

  std::string to_string() const {
    if (is_gen()) return symbol();
    std::string out;
    const char* op = is_meet() ? " ^ " : " v ";
    for (std::size_t i = 0; i < children().size(); ++i) {
      if (i) out += op;
      const auto& c = children()[i];
      out += c.is_gen() ? c.to_string() : "(" + c.to_string() + ")";
    }
    return out;
  }

  friend bool operator==(const LatticeTerm& a, const LatticeTerm& b) {
    return a.node_ == b.node_ || (a.hash() == b.hash() && compare(a, b) == 0);
  }
  friend std::strong_ordering operator<=>(const LatticeTerm& a, const LatticeTerm& b) {
    return compare(a, b) <=> 0;
  }

  /// x<digits> names a free generator; anything else is a constant of some
  /// partial lattice.
  static bool is_free_symbol(std::string_view s) {
    return s.size() > 1 && s[0] == 'x' &&
           std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); });
  }

 private:
  struct Node {
    Kind kind = Kind::gen;
    std::string symbol;
    std::vector<LatticeTerm> children;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
  };

  explicit LatticeTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static LatticeTerm combine(Kind kind, std::vector<LatticeTerm> parts) {
    if (parts.empty()) throw Error("meet or join of no terms");
    std::vector<LatticeTerm> flat;
    for (auto& p : parts) {
      if (p.kind() == kind)
        flat.insert(flat.end(), p.children().begin(), p.children().end());
      else
        flat.push_back(std::move(p));
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->hash = kind == Kind::meet ? 0x51ed27ULL : 0xa3b195ULL;
    for (const auto& c : flat) {
      n->size += c.size();
      n->depth = std::max(n->depth, c.depth() + 1);
      n->hash = (n->hash ^ c.hash()) * 0x100000001b3ULL + 0x7f4a7c15ULL;
    }
    n->children = std::move(flat);
    return LatticeTerm(std::move(n));
  }

  static int compare_symbols(const std::string& a, const std::string& b) {
    const bool fa = is_free_symbol(a), fb = is_free_symbol(b);
    if (fa != fb) return fa ? -1 : 1;
    if (fa && a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
  }

  static int compare(const LatticeTerm& a, const LatticeTerm& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (a.is_gen()) return compare_symbols(a.symbol(), b.symbol());
    const auto& x = a.children();
    const auto& y = b.children();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
      if (int c = compare(x[i], y[i]); c != 0) return c;
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  }

  void collect(std::set<std::string>& out) const {
    if (is_gen()) {
      out.insert(symbol());
      return;
    }
    for (const auto& c : children()) c.collect(out);
  }

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const LatticeTerm& t) const noexcept { return t.hash(); }
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  LatticeTerm parse() {
    auto t = parse_join();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  LatticeTerm parse_join() {
    std::vector<LatticeTerm> parts{parse_meet()};
    while (peek_join()) {
      ++pos_;
      parts.push_back(parse_meet());
    }
    return parts.size() == 1 ? parts.front() : LatticeTerm::join(std::move(parts));
  }

  LatticeTerm parse_meet() {
    std::vector<LatticeTerm> parts{parse_atom()};
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        parts.push_back(parse_atom());
      } else {
        break;
      }
    }
    return parts.size() == 1 ? parts.front() : LatticeTerm::meet(std::move(parts));
  }

  LatticeTerm parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    if (text_[pos_] == '(') {
      ++pos_;
      auto t = parse_join();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    const std::size_t start = pos_;
    if (text_[pos_] == 'x' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    } else {
      while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word.empty()) fail("expected a generator, constant or '('");
    if (word == "v") {
      pos_ = start;
      fail("'v' is the join operator and cannot name a generator");
    }
    return LatticeTerm::var(std::move(word));
  }

  // 'v' is the join operator when it stands alone or runs straight into a
  // free generator ("x1vx2").
  bool peek_join() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'v') return false;
    const std::size_t k = pos_ + 1;
    if (k >= text_.size() || !is_ident(text_[k])) return true;
    return text_[k] == 'x' && k + 1 < text_.size() && is_digit(text_[k + 1]);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
  static bool is_ident(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("term: " + what, 1, pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: term := atom | term '^' term | term 'v' term | '(' term ')', with
/// '^' binding tighter than 'v'.
inline LatticeTerm parse_term(std::string_view text) { return detail::TermParser(text).parse(); }

inline LatticeTerm operator&(const LatticeTerm& a, const LatticeTerm& b) { return LatticeTerm::meet(a, b); }
inline LatticeTerm operator|(const LatticeTerm& a, const LatticeTerm& b) { return LatticeTerm::join(a, b); }

/// Evaluates `t` in `l`; `leaf` maps a symbol to an element index.
template <class Leaf>
  requires std::invocable<Leaf&, const std::string&>
std::size_t evaluate(const LatticeTerm& t, const FiniteLattice& l, Leaf&& leaf) {
  if (t.is_gen()) return leaf(t.symbol());
  std::size_t acc = evaluate(t.children().front(), l, leaf);
  for (std::size_t i = 1; i < t.children().size(); ++i) {
    const std::size_t v = evaluate(t.children()[i], l, leaf);
    acc = t.is_meet() ? l.meet(acc, v) : l.join(acc, v);
  }
  return acc;
}

/// Evaluates with generator xk bound to assignment[k-1].
inline std::size_t evaluate(const LatticeTerm& t, const FiniteLattice& l,
                            const std::vector<std::size_t>& assignment) {
  return evaluate(t, l, [&](const std::string& s) -> std::size_t {
    if (!LatticeTerm::is_free_symbol(s)) throw Error("cannot evaluate constant '" + s + "'");
    const std::size_t k = std::stoul(s.substr(1));
    if (k == 0 || k > assignment.size()) throw Error("no value for generator " + s);
    return assignment[k - 1];
  });
}

/// Highest generator number used in a free term (x3 ^ x1 -> 3).
inline std::size_t generator_count(const LatticeTerm& t) {
  std::size_t k = 0;
  for (const auto& s : t.symbols()) {
    if (!LatticeTerm::is_free_symbol(s)) throw Error("'" + s + "' is not a free generator");
    k = std::max<std::size_t>(k, std::stoul(s.substr(1)));
  }
  return k;
}

}  // namespace latkit
