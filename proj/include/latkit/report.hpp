#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "identity.hpp"
#include "properties.hpp"

namespace latkit {

/// Every decided property of one lattice, each with a witness when it fails.
struct PropertyReport {
  std::size_t size = 0;
  std::string bottom, top;

  Verdict modular, distributive, semimodular;
  ComplementationProfile profile;
  std::optional<ForbiddenSublattice> forbidden;
  Verdict at_most_one_complement;
  Verdict unique_relative_complements;
  Verdict complements_extend_to_intervals;
  std::vector<std::vector<std::size_t>> complements;

  std::vector<Orthocomplementation> orthocomplementations;
  std::vector<Verdict> orthomodular_each;
  Verdict orthocomplementable, orthomodular, every_orthocomplementation_orthomodular;

  Verdict boolean, heyting, chain;
  std::vector<std::size_t> regular;
  std::vector<std::vector<bool>> homomorphisms;
  Verdict homomorphisms_separate, prime_ideals_separate, top_is_join_of_atoms;
  Verdict regular_below_every_nonzero;

  // Conditions phrased with the complement map x'; they fail (witness: an
  // element without exactly one complement) unless complements are unique.
  Verdict antitone_complement, de_morgan_comparable, de_morgan_incomparable;
  Verdict inequality_as_printed;

  std::optional<IdentityVerdict> salii_identity;

  /// (key, verdict) in report order; keys double as claim vocabulary.
  std::vector<std::pair<std::string, const Verdict*>> verdicts() const {
    return {{"modular", &modular},
            {"distributive", &distributive},
            {"semimodular", &semimodular},
            {"complemented", &profile.complemented},
            {"uniquely-complemented", &profile.uniquely_complemented},
            {"at-most-one-complement", &at_most_one_complement},
            {"relatively-complemented", &profile.relatively_complemented},
            {"sectionally-complemented", &profile.sectionally_complemented},
            {"unique-relative-complements", &unique_relative_complements},
            {"complements-extend-to-intervals", &complements_extend_to_intervals},
            {"atomic", &profile.atomic},
            {"dually-atomic", &profile.dually_atomic},
            {"orthocomplementable", &orthocomplementable},
            {"orthomodular", &orthomodular},
            {"every-orthocomplementation-orthomodular", &every_orthocomplementation_orthomodular},
            {"boolean", &boolean},
            {"heyting", &heyting},
            {"chain", &chain},
            {"homomorphisms-separate", &homomorphisms_separate},
            {"prime-ideals-separate", &prime_ideals_separate},
            {"top-is-join-of-atoms", &top_is_join_of_atoms},
            {"regular-below-every-nonzero", &regular_below_every_nonzero},
            {"antitone-complement", &antitone_complement},
            {"de-morgan-comparable", &de_morgan_comparable},
            {"de-morgan-incomparable", &de_morgan_incomparable},
            {"inequality-as-printed", &inequality_as_printed}};
  }

  /// Boolean value of a property key, including the structural ones every
  /// finite lattice has. Throws on unknown keys.
  bool flag(std::string_view key) const {
    if (key == "lattice" || key == "bounded" || key == "acc" || key == "dcc") return true;
    if (key == "no-forbidden-sublattice") return !forbidden.has_value();
    // A lattice is residuated with meet as the product exactly when it is
    // Heyting.
    if (key == "residuated") return bool(heyting);
    if (key == "salii-identity") return salii_identity && salii_identity->holds;
    for (const auto& [k, v] : verdicts())
      if (k == key) return bool(*v);
    throw Error("unknown property '" + std::string(key) + "'");
  }
};

namespace detail {

inline std::string id_list(const FiniteLattice& l, const std::vector<std::size_t>& xs,
                           const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += l.id(xs[i]);
  }
  return out;
}

// The unique complement of each element, or a witness that one is missing.
inline std::optional<std::vector<std::size_t>> unique_complements(
    const std::vector<std::vector<std::size_t>>& comps, Verdict& failure) {
  std::vector<std::size_t> c(comps.size());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    if (comps[x].size() != 1) {
      failure = Verdict::no({x});
      return std::nullopt;
    }
    c[x] = comps[x][0];
  }
  return c;
}

}  // namespace detail

inline PropertyReport classify(const FiniteLattice& l) {
  const std::size_t n = l.size(), zero = l.bottom(), one = l.top();
  PropertyReport r;
  r.size = n;
  r.bottom = l.id(zero);
  r.top = l.id(one);
  r.modular = is_modular(l);
  r.distributive = is_distributive(l);
  r.semimodular = is_semimodular(l);
  r.profile = complementation_profile(l);
  r.forbidden = forbidden_sublattice(l);
  r.unique_relative_complements = has_unique_relative_complements(l);

  for (std::size_t x = 0; x < n; ++x) r.complements.push_back(complements_of(l, x));
  for (std::size_t x = 0; x < n && r.at_most_one_complement; ++x)
    if (r.complements[x].size() > 1) r.at_most_one_complement = Verdict::no({x});

  for (std::size_t a = 0; a < n && r.complements_extend_to_intervals; ++a) {
    if (r.complements[a].empty()) continue;
    for (std::size_t lo = 0; lo < n && r.complements_extend_to_intervals; ++lo)
      for (std::size_t hi = 0; hi < n && r.complements_extend_to_intervals; ++hi)
        if (l.leq(lo, a) && l.leq(a, hi) && relative_complements(l, lo, hi, a).empty())
          r.complements_extend_to_intervals = Verdict::no({lo, a, hi});
  }

  r.orthocomplementations = orthocomplementations(l);
  for (const auto& o : r.orthocomplementations) r.orthomodular_each.push_back(is_orthomodular(l, o));
  if (r.orthocomplementations.empty()) {
    r.orthocomplementable =
        r.profile.complemented ? Verdict::no({}) : Verdict::no(r.profile.complemented.witness);
    r.orthomodular = r.orthocomplementable;
  } else {
    r.orthomodular = r.orthomodular_each.front();
    for (const auto& v : r.orthomodular_each)
      if (v) r.orthomodular = v;
  }
  for (const auto& v : r.orthomodular_each)
    if (!v && r.every_orthocomplementation_orthomodular) r.every_orthocomplementation_orthomodular = v;

  r.boolean = !r.distributive ? r.distributive : r.profile.complemented;
  r.heyting = is_heyting(l);
  if (r.profile.width > 1) {
    const auto& a = r.profile.max_antichain;
    r.chain = Verdict::no({a[0], a[1]});
  }

  r.regular = regular_elements(l);
  std::vector<bool> is_regular(n);
  for (auto a : r.regular) is_regular[a] = true;
  for (std::size_t x = 0; x < n && r.regular_below_every_nonzero; ++x) {
    if (x == zero) continue;
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a) found = a != zero && is_regular[a] && l.leq(a, x);
    if (!found) r.regular_below_every_nonzero = Verdict::no({x});
  }

  r.homomorphisms = two_valued_homomorphisms(l);
  for (std::size_t x = 0; x < n && r.homomorphisms_separate; ++x) {
    if (x == zero) continue;
    bool found = false;
    for (const auto& h : r.homomorphisms) found = found || h[x];
    if (!found) r.homomorphisms_separate = Verdict::no({x});
  }

  // Prime ideals of a finite lattice are the principal ideals of meet-prime
  // elements below the top; decided here without the homomorphism list.
  std::vector<std::size_t> meet_primes;
  for (std::size_t p = 0; p < n; ++p) {
    if (p == one) continue;
    bool prime = true;
    for (std::size_t x = 0; x < n && prime; ++x)
      for (std::size_t y = x; y < n && prime; ++y)
        if (l.leq(l.meet(x, y), p) && !l.leq(x, p) && !l.leq(y, p)) prime = false;
    if (prime) meet_primes.push_back(p);
  }
  for (std::size_t x = 0; x < n && r.prime_ideals_separate; ++x) {
    if (x == zero) continue;
    bool found = false;
    for (auto p : meet_primes) found = found || !l.leq(x, p);
    if (!found) r.prime_ideals_separate = Verdict::no({x});
  }

  const auto atoms = l.atoms();
  if (std::size_t j = l.join_all(atoms.empty() ? std::vector<std::size_t>{zero} : atoms); j != one)
    r.top_is_join_of_atoms = Verdict::no({j});

  Verdict not_unique;
  if (auto c = detail::unique_complements(r.complements, not_unique)) {
    const auto& co = *c;
    for (std::size_t x = 0; x < n && r.antitone_complement; ++x)
      for (std::size_t y = 0; y < n && r.antitone_complement; ++y)
        if (l.leq(x, y) && !l.leq(co[y], co[x])) r.antitone_complement = Verdict::no({x, y});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Verdict& target = l.poset().comparable(x, y) ? r.de_morgan_comparable : r.de_morgan_incomparable;
        if (target && co[l.meet(x, y)] != l.join(co[x], co[y])) target = Verdict::no({x, y});
      }
    // (x v ((x v y) ^ x')) ^ y < 0 for every x and every y > 0: nothing lies
    // strictly below 0, so any y > 0 fails.
    for (std::size_t y = 0; y < n && r.inequality_as_printed; ++y)
      if (y != zero) r.inequality_as_printed = Verdict::no({zero, y});
  } else {
    r.antitone_complement = r.de_morgan_comparable = r.de_morgan_incomparable =
        r.inequality_as_printed = not_unique;
  }

  double assignments = static_cast<double>(n) * n * n * n;
  if (assignments <= 1e8)
    r.salii_identity = satisfies_identity(l, identities::salii_lhs, identities::salii_rhs);
  return r;
}

/// Line-oriented human report.
inline std::string report_text(const FiniteLattice& l, const PropertyReport& r,
                               const std::string& name = "") {
  std::ostringstream os;
  if (!name.empty()) os << "lattice " << name << "\n";
  os << "size: " << r.size << "\n";
  os << "bottom: " << r.bottom << "\ntop: " << r.top << "\n";
  for (const auto& [key, v] : r.verdicts()) {
    os << key << ": " << (*v ? "yes" : "no");
    if (!*v && !v->witness.empty()) os << " (" << detail::id_list(l, v->witness) << ")";
    os << "\n";
  }
  os << "width: " << r.profile.width << " {" << detail::id_list(l, r.profile.max_antichain) << "}\n";
  os << "forbidden-sublattice: ";
  if (r.forbidden)
    os << to_string(r.forbidden->kind) << " {"
       << detail::id_list(l, {r.forbidden->embedding.begin(), r.forbidden->embedding.end()}) << "}\n";
  else
    os << "none\n";
  os << "complements:";
  for (std::size_t x = 0; x < r.size; ++x)
    os << (x ? "; " : " ") << l.id(x) << " -> {" << detail::id_list(l, r.complements[x]) << "}";
  os << "\nregular: {" << detail::id_list(l, r.regular) << "}\n";
  os << "orthocomplementations: " << r.orthocomplementations.size() << "\n";
  for (std::size_t k = 0; k < r.orthocomplementations.size(); ++k) {
    os << "  #" << k + 1 << ":";
    const auto& m = r.orthocomplementations[k].map;
    for (std::size_t x = 0; x < m.size(); ++x) os << " " << l.id(x) << "->" << l.id(m[x]);
    os << (r.orthomodular_each[k] ? "  orthomodular" : "  not orthomodular");
    if (!r.orthomodular_each[k]) os << " (" << detail::id_list(l, r.orthomodular_each[k].witness) << ")";
    os << "\n";
  }
  os << "two-valued-homomorphisms: " << r.homomorphisms.size() << "\n";
  for (const auto& h : r.homomorphisms) {
    std::vector<std::size_t> ones;
    for (std::size_t x = 0; x < h.size(); ++x)
      if (h[x]) ones.push_back(x);
    os << "  1 on {" << detail::id_list(l, ones) << "}\n";
  }
  os << "acc: yes (finite)\ndcc: yes (finite)\n";
  os << "salii-identity: ";
  if (!r.salii_identity)
    os << "skipped (more than 10^8 assignments)\n";
  else if (r.salii_identity->holds)
    os << "yes\n";
  else
    os << "no (" << detail::id_list(l, r.salii_identity->witness) << ")\n";
  return os.str();
}

/// Machine-readable key=value block.
inline std::string report_key_values(const FiniteLattice& l, const PropertyReport& r) {
  std::ostringstream os;
  os << "size=" << r.size << "\n";
  for (const auto& [key, v] : r.verdicts()) {
    os << key << "=" << (*v ? "true" : "false") << "\n";
    if (!*v && !v->witness.empty()) os << key << ".witness=" << detail::id_list(l, v->witness, ",") << "\n";
  }
  os << "width=" << r.profile.width << "\n";
  os << "forbidden-sublattice=" << (r.forbidden ? to_string(r.forbidden->kind) : "none") << "\n";
  for (std::size_t x = 0; x < r.size; ++x)
    os << "complements." << l.id(x) << "=" << detail::id_list(l, r.complements[x], ",") << "\n";
  os << "regular=" << detail::id_list(l, r.regular, ",") << "\n";
  os << "orthocomplementations=" << r.orthocomplementations.size() << "\n";
  os << "two-valued-homomorphisms=" << r.homomorphisms.size() << "\n";
  os << "acc=true\ndcc=true\n";
  os << "salii-identity=" << (!r.salii_identity ? "skipped" : r.salii_identity->holds ? "true" : "false")
     << "\n";
  return os.str();
}

}  // namespace latkit
