#ifndef LINCHOICE_TESTS_SUPPORT_HPP_
#define LINCHOICE_TESTS_SUPPORT_HPP_

// Fixtures and brute-force oracles shared by the unit tests and the
// acceptance binary. The oracles only use the data types of the library,
// never its algorithms.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "linchoice/alternative_set.hpp"
#include "linchoice/relation.hpp"
#include "linchoice/structure.hpp"

namespace linchoice::testing {

inline constexpr std::uint64_t kSeed = 20240917;

// The running snack example.
struct Snacks {
  Universe u{{"chocolate", "nachos", "pretzels", "dips", "chillies"}};
  StructurePtr structure;
  AltSet k;
  std::vector<AltSet> chain;  // least first
  LinearSetOrder order = LinearSetOrder::from_chain({AltSet()});

  AltSet set(std::initializer_list<const char*> names) const {
    std::vector<std::string> v(names.begin(), names.end());
    return u.parse(v);
  }

  Snacks() {
    std::vector<AltSet> domain;
    const auto nachos = set({"nachos"});
    const auto dips = set({"dips"});
    for (auto s : powerset(u.size())) {
      if (!nachos.subset_of(s) || dips.subset_of(s)) domain.push_back(s);
    }
    k = set({"pretzels", "nachos", "dips", "chillies"});
    chain = {k,
             set({"nachos", "dips", "chillies"}),
             set({"pretzels", "chocolate"}),
             set({"pretzels"}),
             set({"chocolate"}),
             set({"chocolate", "nachos", "dips", "chillies"}),
             u.all()};
    structure = make_structure(u, domain, chain);
    order = LinearSetOrder::from_chain(chain);
  }

  ChoiceFunctionTable table() const {
    return table_from_order(order, k, structure);
  }
};

// <{0..n-1}, P(A) \ {{}}, same> as in the exhaustive sweeps.
inline StructurePtr full_nonempty_powerset(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  std::vector<AltSet> sets;
  for (auto s : powerset(n)) {
    if (!s.empty()) sets.push_back(s);
  }
  return make_structure(Universe(names), sets, sets);
}

inline Universe letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return Universe(names);
}

// Direct table evaluation of a chain, written out separately from the
// library's evaluate.
inline AltSet hand_evaluate(const std::vector<AltSet>& chain, AltSet k,
                            AltSet s) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if ((chain[i].bits() & ~s.bits()) == 0) return chain[i];
  }
  return k;
}

// Representable iff some permutation of the realizable sets with k first
// reproduces every value.
inline bool brute_representable(const ChoiceFunctionTable& t) {
  const auto& st = t.structure();
  std::vector<AltSet> rest;
  for (auto e : st.realizable()) {
    if (e != t.fallback()) rest.push_back(e);
  }
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<AltSet> chain{t.fallback()};
    chain.insert(chain.end(), rest.begin(), rest.end());
    bool ok = true;
    for (std::size_t i = 0; ok && i < st.domain().size(); ++i) {
      ok = hand_evaluate(chain, t.fallback(), st.domain()[i]) == t.at(i);
    }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Every total preorder on n elements as a rank vector (ties share a rank).
inline void for_each_total_preorder(
    std::size_t n, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> rank(n, 0);
  while (true) {
    // Only keep rank vectors whose values form a prefix 0..m.
    std::vector<bool> used(n, false);
    for (auto r : rank) used[r] = true;
    bool prefix = true;
    bool seen_gap = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i]) seen_gap = true;
      else if (seen_gap) prefix = false;
    }
    if (prefix && !visit(rank)) return;
    std::size_t i = 0;
    while (i < n && rank[i] == static_cast<int>(n) - 1) rank[i++] = 0;
    if (i == n) return;
    ++rank[i];
  }
}

// Suzumura's theorem read as a search: some total preorder contains r and
// keeps every strict pair strict.
inline bool brute_extension_exists(const Relation& r) {
  bool found = false;
  for_each_total_preorder(r.size(), [&](const std::vector<int>& rank) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (!r.contains(i, j)) continue;
        if (rank[i] > rank[j]) return true;
        if (!r.contains(j, i) && rank[i] == rank[j]) return true;
      }
    }
    found = true;
    return false;
  });
  return found;
}

// Chain reading of the consistency property: no path x0 -> ... -> xn in r
// (all steps weak) with xn strictly below x0. Paths are enumerated.
inline bool brute_consistent(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<bool> on_path(n, false);
  std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t start,
                                                          std::size_t cur) {
    if (r.contains(cur, start) && !r.contains(start, cur)) return false;
    for (std::size_t nxt = 0; nxt < n; ++nxt) {
      if (on_path[nxt] || !r.contains(cur, nxt)) continue;
      on_path[nxt] = true;
      const bool ok = walk(start, nxt);
      on_path[nxt] = false;
      if (!ok) return false;
    }
    return true;
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    const bool ok = walk(s, s);
    on_path[s] = false;
    if (!ok) return false;
  }
  return true;
}

// Literal chain reading of SS5 / SS5E: enumerate sequences of distinct sets
// S0 .. Sn along `beats` and report a violation when Sn beats S0.
inline bool brute_no_beat_cycle(
    const std::vector<AltSet>& vertices,
    const std::function<bool(AltSet, AltSet)>& beats) {
  const std::size_t n = vertices.size();
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t, std::size_t, std::size_t)> walk =
      [&](std::size_t start, std::size_t cur, std::size_t len) {
        if (len >= 1 && beats(vertices[cur], vertices[start])) return false;
        for (std::size_t nxt = 0; nxt < n; ++nxt) {
          if (used[nxt] || !beats(vertices[cur], vertices[nxt])) continue;
          used[nxt] = true;
          const bool ok = walk(start, nxt, len + 1);
          used[nxt] = false;
          if (!ok) return false;
        }
        return true;
      };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = true;
    const bool ok = walk(s, s, 0);
    used[s] = false;
    if (!ok) return false;
  }
  return true;
}

inline std::vector<AltSet> values_of(const ChoiceFunctionTable& t) {
  return {t.values().begin(), t.values().end()};
}

inline std::vector<AltSet> image_of(const ChoiceFunctionTable& t) {
  auto v = values_of(t);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// SS5 by chain enumeration, for union-closed or general domains.
inline bool brute_ss5(const ChoiceFunctionTable& t) {
  const auto& st = t.structure();
  return brute_no_beat_cycle(image_of(t), [&](AltSet x, AltSet y) {
    return x != y && st.in_domain(x | y) && t(x | y) == x;
  });
}

inline bool brute_ss5e(const ChoiceFunctionTable& t) {
  const auto& st = t.structure();
  return brute_no_beat_cycle(image_of(t), [&](AltSet x, AltSet y) {
    if (x == y) return false;
    for (std::size_t w = 0; w < st.domain().size(); ++w) {
      if ((x | y).subset_of(st.domain()[w]) && t.at(w) == x) return true;
    }
    return false;
  });
}

// Random relation on `n` distinct sets over a universe of `alts` names.
inline Relation random_relation(std::mt19937_64& rng, std::size_t n,
                                double density, std::size_t alts = 6) {
  std::vector<AltSet> sets;
  std::uniform_int_distribution<std::uint64_t> pick(
      0, (std::uint64_t{1} << alts) - 1);
  while (sets.size() < n) {
    AltSet s(pick(rng));
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
  }
  Relation r{Carrier(sets)};
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (coin(rng)) r.add(i, j);
    }
  }
  return r;
}

// Random structure: a random domain over `alts` alternatives and a random
// non-empty realizable subset of it.
inline StructurePtr random_structure(std::mt19937_64& rng, std::size_t alts,
                                     double domain_density = 0.5,
                                     double realizable_density = 0.4) {
  auto all = powerset(alts);
  std::bernoulli_distribution in_domain(domain_density);
  std::bernoulli_distribution in_real(realizable_density);
  std::vector<AltSet> domain, real;
  for (auto s : all) {
    if (in_domain(rng)) domain.push_back(s);
  }
  if (domain.empty()) domain.push_back(all[rng() % all.size()]);
  for (auto s : domain) {
    if (in_real(rng)) real.push_back(s);
  }
  if (real.empty()) real.push_back(domain[rng() % domain.size()]);
  return make_structure(letters(alts), domain, real);
}

inline StructurePtr union_closure_structure(const Universe& u,
                                            std::vector<AltSet> domain,
                                            std::vector<AltSet> real) {
  bool grown = true;
  while (grown) {
    grown = false;
    const auto n = domain.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto s = domain[i] | domain[j];
        if (std::find(domain.begin(), domain.end(), s) == domain.end()) {
          domain.push_back(s);
          grown = true;
        }
      }
    }
  }
  return make_structure(u, domain, real);
}

}  // namespace linchoice::testing

#endif  // LINCHOICE_TESTS_SUPPORT_HPP_
