#pragma once

#include <sstream>

#include "corpus.hpp"
#include "report.hpp"

namespace latkit {

/// A per-lattice implication between report flags:
///   all(hypotheses) and any(any_hypotheses) => all(conclusions)
/// or, when `equivalent` is set,
///   all(hypotheses) => (equivalent <=> conclusions[0]).
struct Claim {
  std::string id;
  std::string statement;
  std::vector<std::string> hypotheses;
  std::vector<std::string> any_hypotheses;
  std::vector<std::string> conclusions;
  std::string equivalent;
  bool vacuous = false;
  std::string note;
};

enum class ClaimStatus { confirmed, counterexample, vacuous };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::confirmed: return "confirmed";
    case ClaimStatus::counterexample: return "counterexample";
    case ClaimStatus::vacuous: return "vacuous";
  }
  return "?";
}

struct ClaimWitness {
  std::string code;
  std::string detail;
};

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::confirmed;
  std::size_t lattices = 0;
  /// Lattices on which the hypotheses hold.
  std::size_t applicable = 0;
  std::vector<ClaimWitness> witnesses;
  std::string note;
};

namespace detail {

inline Claim claim(std::string id, std::string statement, std::vector<std::string> hypotheses,
                   std::vector<std::string> any_hypotheses, std::vector<std::string> conclusions,
                   std::string equivalent = "", bool vacuous = false, std::string note = "") {
  return {std::move(id), std::move(statement), std::move(hypotheses), std::move(any_hypotheses),
          std::move(conclusions), std::move(equivalent), vacuous, std::move(note)};
}

}  // namespace detail

inline const std::vector<Claim>& claims() {
  using detail::claim;
  static const std::vector<Claim> table = {
      claim("T4.1", "any distributive lattice is modular", {"distributive"}, {}, {"modular"}),
      claim("T4.2", "in a bounded distributive lattice an element has at most one complement",
       {"distributive"}, {}, {"at-most-one-complement"}),
      claim("T4.3", "in a bounded distributive lattice a complemented element has a relative complement in every interval containing it",
       {"distributive"}, {}, {"complements-extend-to-intervals"}),
      claim("T4.4", "in a distributive lattice all complements and relative complements that exist are unique",
       {"distributive"}, {}, {"unique-relative-complements"}),
      claim("T4.5", "every uniquely complemented atomic lattice is distributive",
       {"uniquely-complemented", "atomic"}, {}, {"distributive"}),
      claim("T4.6", "distributive iff no sublattice isomorphic to M3 or N5", {}, {}, {"no-forbidden-sublattice"},
       "distributive"),
      claim("S6.1", "a Boolean algebra is a Heyting algebra and orthocomplemented", {"boolean"}, {},
       {"heyting", "orthocomplementable"}),
      claim("S6.2", "a distributive orthocomplemented lattice is orthomodular", {"distributive", "orthocomplementable"}, {},
       {"every-orthocomplementation-orthomodular"}),
      claim("S6.3", "an orthocomplemented lattice is complemented", {"orthocomplementable"}, {}, {"complemented"}),
      claim("S6.4", "a complemented lattice is bounded", {"complemented"}, {}, {"bounded"}),
      claim("S6.5", "a Heyting algebra is bounded and residuated", {"heyting"}, {}, {"bounded", "residuated"}),
      claim("S6.6", "a distributive lattice is modular", {"distributive"}, {}, {"modular"}),
      claim("S6.7", "a modular complemented lattice is relatively complemented", {"modular", "complemented"}, {},
       {"relatively-complemented"}),
      claim("S6.8", "a Heyting algebra is distributive", {"heyting"}, {}, {"distributive"}),
      claim("S6.9", "a chain is distributive", {"chain"}, {}, {"distributive"}),
      claim("S6.10", "a modular lattice is semimodular", {"modular"}, {}, {"semimodular"}),
      claim("S6.11", "a semimodular lattice is atomic", {"semimodular"}, {}, {"atomic"}, "", true,
       "every finite lattice is atomic"),
      claim("S6.12", "an atomic lattice is a lattice", {"atomic"}, {}, {"lattice"}, "", true,
       "holds by construction of the corpus"),
      claim("S6.13", "a lattice is a semilattice", {}, {}, {"lattice"}, "", true, "holds by construction of the corpus"),
      claim("S6.14", "a semilattice is a partially ordered set", {}, {}, {"lattice"}, "", true,
       "holds by construction of the corpus"),
      claim("T7.11", "a uniquely complemented lattice with DCC or ACC is distributive", {"uniquely-complemented"},
       {"acc", "dcc"}, {"distributive"}),
      claim("T7.12", "a uniquely complemented lattice whose top is the join of its atoms is distributive",
       {"uniquely-complemented", "top-is-join-of-atoms"}, {}, {"distributive"}),
      claim("T7.13", "a uniquely complemented lattice with prime ideals separating nonzero elements is distributive",
       {"uniquely-complemented", "prime-ideals-separate"}, {}, {"distributive"}),
      claim("T7.14", "a uniquely complemented lattice is distributive iff homomorphisms onto 2 separate nonzero elements",
       {"uniquely-complemented"}, {}, {"homomorphisms-separate"}, "distributive"),
      claim("T7.15", "a sectionally complemented uniquely complemented lattice is distributive",
       {"uniquely-complemented", "sectionally-complemented"}, {}, {"distributive"}),
      claim("T7.16", "a uniquely complemented lattice is distributive iff (x v ((x v y) ^ x')) ^ y < 0 for all x, y > 0",
       {"uniquely-complemented"}, {}, {"inequality-as-printed"}, "distributive", true,
       "the strict '< 0' cannot hold in a lattice with more than one element; evaluated, not asserted"),
      claim("T7.17", "in a uniquely complemented lattice an antitone complement implies distributivity",
       {"uniquely-complemented", "antitone-complement"}, {}, {"distributive"}),
      claim("T7.18", "a uniquely complemented 0-semimodular lattice is distributive", {"uniquely-complemented"}, {},
       {"lattice"}, "", true, "0-semimodularity is not decided"),
      claim("T7.19", "a uniquely complemented 0-modular lattice is distributive", {"uniquely-complemented"}, {},
       {"lattice"}, "", true, "0-modularity is not decided"),
      claim("T7.20", "a uniquely complemented ortholattice is distributive",
       {"uniquely-complemented", "orthocomplementable"}, {}, {"distributive"}),
      claim("T7.21", "a uniquely complemented orthomodular lattice is distributive",
       {"uniquely-complemented", "orthomodular"}, {}, {"distributive"}),
      claim("T7.22", "in a uniquely complemented lattice either De Morgan condition implies distributivity",
       {"uniquely-complemented"}, {"de-morgan-comparable", "de-morgan-incomparable"}, {"distributive"}),
      claim("T7.23", "a uniquely complemented lattice is distributive iff every nonzero element is above a nonzero regular element",
       {"uniquely-complemented"}, {}, {"regular-below-every-nonzero"}, "distributive"),
      claim("T7.24", "in a UCC lattice a < b implies b ^ a > 0", {}, {}, {"lattice"}, "", true,
       "trivial as printed (b ^ a = a > 0 needs a > 0); not asserted"),
      claim("T7.25", "in a UCC lattice, if b covers a then b ^ a' is an atom and a relative complement of a in [0, b]", {},
       {}, {"lattice"}, "", true, "comparable-complement hypothesis not decided; not asserted"),
      claim("T7.27", "lattices satisfying the identity (x ^ (y v z)) v (y ^ (x v t)) = ((x ^ (y v z)) v y) ^ (x v (y ^ (x v t))) include every distributive lattice",
       {"distributive"}, {}, {"salii-identity"}),
  };
  return table;
}

inline const Claim& find_claim(std::string_view id) {
  for (const auto& c : claims())
    if (c.id == id) return c;
  throw Error("unknown claim id '" + std::string(id) + "'");
}

namespace detail {

inline std::string verdict_detail(const FiniteLattice& l, const PropertyReport& r, const std::string& key) {
  std::string s = key + "=" + (r.flag(key) ? "true" : "false");
  for (const auto& [k, v] : r.verdicts())
    if (k == key && !v->witness.empty()) {
      s += " (";
      const auto ids = witness_ids(l, *v);
      for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + ids[i];
      s += ")";
    }
  return s;
}

}  // namespace detail

/// Evaluates one claim on one lattice. Returns a failure detail, or an empty
/// string when the claim holds or does not apply. `applies` reports whether
/// the hypotheses held.
inline std::string evaluate_claim(const Claim& c, const FiniteLattice& l, const PropertyReport& r, bool& applies) {
  applies = std::all_of(c.hypotheses.begin(), c.hypotheses.end(), [&](const auto& k) { return r.flag(k); }) &&
            (c.any_hypotheses.empty() ||
             std::any_of(c.any_hypotheses.begin(), c.any_hypotheses.end(), [&](const auto& k) { return r.flag(k); }));
  if (!applies) return "";
  if (!c.equivalent.empty()) {
    if (r.flag(c.equivalent) == r.flag(c.conclusions.front())) return "";
    return detail::verdict_detail(l, r, c.equivalent) + "; " + detail::verdict_detail(l, r, c.conclusions.front());
  }
  for (const auto& k : c.conclusions)
    if (!r.flag(k)) return detail::verdict_detail(l, r, k);
  return "";
}

/// Evaluates claims (all of them when `ids` is empty) over the corpus in
/// entry order.
inline std::vector<ClaimResult> run_harness(const Corpus& corpus, const std::vector<std::string>& ids = {}) {
  std::vector<const Claim*> selected;
  if (ids.empty())
    for (const auto& c : claims()) selected.push_back(&c);
  else
    for (const auto& id : ids) selected.push_back(&find_claim(id));

  std::vector<ClaimResult> out;
  for (const auto* c : selected) {
    ClaimResult r;
    r.id = c->id;
    r.note = c->note;
    out.push_back(r);
  }
  for (const auto& e : corpus.entries) {
    const auto report = classify(e.lattice);
    for (std::size_t k = 0; k < selected.size(); ++k) {
      bool applies = false;
      auto fail = evaluate_claim(*selected[k], e.lattice, report, applies);
      ++out[k].lattices;
      out[k].applicable += applies;
      if (!fail.empty()) out[k].witnesses.push_back({e.code, fail});
    }
  }
  for (std::size_t k = 0; k < selected.size(); ++k) {
    auto& r = out[k];
    if (!r.witnesses.empty()) r.status = ClaimStatus::counterexample;
    else if (selected[k]->vacuous || r.applicable == 0) r.status = ClaimStatus::vacuous;
    else r.status = ClaimStatus::confirmed;
  }
  return out;
}

/// One line per claim: id, status, counterexample count, first witness code.
inline std::string harness_text(const std::vector<ClaimResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << r.id << ' ' << to_string(r.status) << " counterexamples=" << r.witnesses.size()
        << " applicable=" << r.applicable << '/' << r.lattices;
    if (!r.witnesses.empty()) out << " first=" << r.witnesses.front().code << " [" << r.witnesses.front().detail << "]";
    if (!r.note.empty()) out << " # " << r.note;
    out << '\n';
  }
  return out.str();
}

}  // namespace latkit
