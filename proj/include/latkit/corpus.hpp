#pragma once

#include <ctime>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "canonical.hpp"
#include "fixtures.hpp"
#include "text_format.hpp"

namespace latkit {

class CorruptCorpus : public Error {
 public:
  explicit CorruptCorpus(const std::string& m) : Error("corrupt corpus file: " + m) {}
};

class CorpusVersionMismatch : public Error {
 public:
  using Error::Error;
};

inline constexpr int corpus_version = 1;
inline constexpr std::string_view corpus_magic = "latkit-corpus";

struct CorpusEntry {
  std::string code;
  FiniteLattice lattice;
};

/// All lattices up to isomorphism with at most `bound` elements, ordered by
/// size and then by canonical code.
struct Corpus {
  std::size_t bound = 0;
  std::string strategy;
  std::string timestamp;
  std::vector<CorpusEntry> entries;

  /// counts()[k] is the number of entries with k + 1 elements.
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> c(bound, 0);
    for (const auto& e : entries) ++c[e.lattice.size() - 1];
    return c;
  }
};

namespace detail {

// Bottom "0", top "1", the rest named a, b, ... in canonical order.
inline FiniteLattice canonical_copy(const FiniteLattice& l) {
  const auto order = canonical_order(l.poset());
  std::vector<std::string> ids(l.size());
  std::size_t next = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto x = order[k];
    if (x == l.bottom()) ids[k] = "0";
    else if (x == l.top()) ids[k] = "1";
    else if (next < 26) ids[k] = std::string(1, static_cast<char>('a' + next++));
    else ids[k] = "e" + std::to_string(next++);
  }
  return relabel(l, order, ids);
}

inline std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Every lattice M of size n + 1 has a join-irreducible j other than 0, and
// M - {j} is again a lattice (meets that hit j drop to its lower cover). So
// M arises from a smaller lattice L by adding j with a lower cover l in L and
// a set U of strict upper bounds, U an up-set of L inside the strict up-set
// of l.
inline void join_irreducible_extensions(const FiniteLattice& l, std::unordered_set<std::string>& seen,
                                        std::vector<CorpusEntry>& out) {
  const std::size_t m = l.size();
  const auto& p = l.poset();
  for (std::size_t low = 0; low < m; ++low) {
    std::vector<std::size_t> above;
    for (std::size_t y = 0; y < m; ++y)
      if (p.lt(low, y)) above.push_back(y);
    // Antichains of `above`, each generating the up-set U.
    std::vector<std::size_t> chosen;
    auto emit = [&]() {
      if (chosen.empty() && low != l.top()) return;
      BitMatrix rel(m + 1);
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
          if (p.leq(x, y)) rel.set(x, y);
      rel.set(m, m);
      for (std::size_t x = 0; x < m; ++x)
        if (p.leq(x, low)) rel.set(x, m);
      for (auto a : chosen)
        for (std::size_t y = 0; y < m; ++y)
          if (p.leq(a, y)) rel.set(m, y);
      auto ids = l.ids();
      ids.push_back("new");
      FiniteLattice cand;
      try {
        cand = lattice_from_poset(FinitePoset::from_relation_unchecked(std::move(ids), std::move(rel)));
      } catch (const LatticeCheckFailure&) {
        return;
      }
      auto code = canonical_code(cand);
      if (seen.insert(code).second) out.push_back({std::move(code), canonical_copy(cand)});
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
      emit();
      for (std::size_t k = from; k < above.size(); ++k) {
        const auto y = above[k];
        if (std::any_of(chosen.begin(), chosen.end(), [&](auto c) { return p.comparable(c, y); })) continue;
        chosen.push_back(y);
        self(self, k + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }
}

inline void sort_entries(std::vector<CorpusEntry>& v) {
  std::sort(v.begin(), v.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return std::pair(a.lattice.size(), std::string_view(a.code)) < std::pair(b.lattice.size(), std::string_view(b.code));
  });
}

}  // namespace detail

inline constexpr std::size_t corpus_default_max = 8;
inline constexpr std::size_t corpus_hard_max = 9;

/// Lattices up to isomorphism with at most n elements, grown one
/// join-irreducible element at a time with canonical-code dedup. Sizes above
/// 8 need `allow_large`.
inline Corpus enumerate_lattices(std::size_t n, bool allow_large = false) {
  if (n < 1) throw Error("corpus bound must be at least 1");
  if (n > corpus_hard_max) throw BudgetExceeded("corpus bound " + std::to_string(n) + " is over 9");
  if (n > corpus_default_max && !allow_large)
    throw BudgetExceeded("corpus bound " + std::to_string(n) + " needs the large-corpus flag");
  Corpus c;
  c.bound = n;
  c.strategy = "join-irreducible-extension";
  c.timestamp = detail::utc_now();
  auto one = fixtures::chain(1);
  std::vector<CorpusEntry> layer{{canonical_code(one), one}};
  c.entries = layer;
  for (std::size_t size = 2; size <= n; ++size) {
    std::unordered_set<std::string> seen;
    std::vector<CorpusEntry> next;
    for (const auto& e : layer) detail::join_irreducible_extensions(e.lattice, seen, next);
    detail::sort_entries(next);
    c.entries.insert(c.entries.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return c;
}

/// Second strategy: every bounded poset can be labelled with 0 first, 1 last
/// and the order contained in the index order, so it suffices to try each
/// transitive relation on the interior that respects the index order.
/// Returns the canonical codes per size 1..n.
inline std::vector<std::set<std::string>> lattice_codes_by_poset_filter(std::size_t n) {
  if (n < 1 || n > 8) throw BudgetExceeded("poset filter supports 1 <= n <= 8");
  std::vector<std::set<std::string>> out(n);
  out[0].insert(canonical_code(fixtures::chain(1)));
  for (std::size_t m = 2; m <= n; ++m) {
    const std::size_t k = m - 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < m; ++i) ids.push_back("p" + std::to_string(i));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::vector<char>> r(k, std::vector<char>(k, 0));
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1u) r[pairs[b].first][pairs[b].second] = 1;
      bool transitive = true;
      for (std::size_t a = 0; a < k && transitive; ++a)
        for (std::size_t b = a + 1; b < k && transitive; ++b)
          if (r[a][b])
            for (std::size_t d = b + 1; d < k; ++d)
              if (r[b][d] && !r[a][d]) {
                transitive = false;
                break;
              }
      if (!transitive) continue;
      BitMatrix rel(m);
      for (std::size_t x = 0; x < m; ++x) {
        rel.set(0, x);
        rel.set(x, m - 1);
        rel.set(x, x);
      }
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if (r[a][b]) rel.set(a + 1, b + 1);
      try {
        out[m - 1].insert(canonical_code(lattice_from_poset(FinitePoset::from_relation(ids, std::move(rel)))));
      } catch (const LatticeCheckFailure&) {
      }
    }
  }
  return out;
}

inline std::string corpus_text(const Corpus& c) {
  std::ostringstream out;
  out << corpus_magic << ' ' << corpus_version << "\n";
  out << "strategy " << c.strategy << "\n";
  out << "timestamp " << c.timestamp << "\n";
  out << "bound " << c.bound << "\n";
  out << "counts";
  for (auto k : c.counts()) out << ' ' << k;
  out << "\nentries " << c.entries.size() << "\n";
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    out << "code " << c.entries[i].code << "\n";
    out << write_lattice(c.entries[i].lattice, "L" + std::to_string(i + 1));
  }
  out << "end " << c.entries.size() << "\n";
  return out.str();
}

inline void save_corpus(const Corpus& c, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << corpus_text(c);
  if (!f) throw Error("write failed: " + path);
}

/// Parses and re-validates: every entry must be a lattice whose recomputed
/// code matches the stored one, codes must be distinct and the header counts
/// must agree with the entries.
inline Corpus parse_corpus(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  for (std::string s; std::getline(in, s);) lines.push_back(s);
  std::size_t at = 0;
  auto header = [&](std::string_view key) -> std::string {
    if (at >= lines.size()) throw CorruptCorpus("missing '" + std::string(key) + "' line");
    const auto& s = lines[at++];
    if (s.rfind(std::string(key) + " ", 0) != 0 && s != key)
      throw CorruptCorpus("line " + std::to_string(at) + ": expected '" + std::string(key) + "'");
    return s.size() > key.size() ? s.substr(key.size() + 1) : "";
  };
  auto number = [&](const std::string& s) -> std::size_t {
    try {
      std::size_t pos = 0;
      auto v = std::stoull(s, &pos);
      if (pos != s.size()) throw CorruptCorpus("bad number '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      throw CorruptCorpus("bad number '" + s + "'");
    }
  };

  if (lines.empty()) throw CorruptCorpus("empty file");
  {
    std::istringstream first(lines[0]);
    std::string magic, version;
    first >> magic >> version;
    if (magic != corpus_magic) throw CorruptCorpus("not a corpus file");
    if (version != std::to_string(corpus_version))
      throw CorpusVersionMismatch("corpus version " + version + " is not supported (expected " +
                                  std::to_string(corpus_version) + ")");
    at = 1;
  }
  Corpus c;
  c.strategy = header("strategy");
  c.timestamp = header("timestamp");
  c.bound = number(header("bound"));
  std::vector<std::size_t> counts;
  for (const auto& w : detail::split_ws(header("counts"))) counts.push_back(number(w));
  const auto total = number(header("entries"));
  std::set<std::string> codes;
  while (c.entries.size() < total) {
    const auto code = header("code");
    std::string block;
    while (at < lines.size() && lines[at].rfind("code ", 0) != 0 && lines[at].rfind("end ", 0) != 0)
      block += lines[at++] + "\n";
    FiniteLattice l;
    try {
      l = parse_lattice(block).lattice;
    } catch (const Error& e) {
      throw CorruptCorpus("entry " + std::to_string(c.entries.size() + 1) + ": " + e.what());
    }
    if (canonical_code(l) != code)
      throw CorruptCorpus("entry " + std::to_string(c.entries.size() + 1) + ": stored code does not match");
    if (!codes.insert(code).second) throw CorruptCorpus("duplicate code " + code);
    if (l.size() > c.bound) throw CorruptCorpus("entry larger than the bound");
    c.entries.push_back({code, std::move(l)});
  }
  if (number(header("end")) != total) throw CorruptCorpus("trailer count mismatch");
  if (c.counts() != counts) throw CorruptCorpus("header counts do not match the entries");
  return c;
}

inline Corpus load_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

}  // namespace latkit
