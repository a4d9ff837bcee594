#include "linchoice/relation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "linchoice/error.hpp"

namespace linchoice {

Carrier::Carrier(std::vector<AltSet> elements) : elements_(std::move(elements)) {
  std::unordered_set<AltSet, AltSetHash> seen;
  for (auto e : elements_) {
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::kInvalidRelation,
                  "carrier lists the same set twice (bits " +
                      std::to_string(e.bits()) + ")");
    }
  }
}

std::optional<std::size_t> Carrier::index_of(AltSet s) const {
  auto it = std::find(elements_.begin(), elements_.end(), s);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Relation::Relation(Carrier carrier)
    : carrier_(std::move(carrier)),
      words_((carrier_.size() + 63) / 64),
      rows_(carrier_.size() * words_, 0) {}

Relation::Relation(Carrier carrier, std::span<const IndexPair> pairs)
    : Relation(std::move(carrier)) {
  for (auto [i, j] : pairs) {
    if (i >= size() || j >= size()) {
      throw Error(ErrorKind::kInvalidRelation,
                  "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") outside a carrier of size " + std::to_string(size()));
    }
    add(i, j);
  }
}

std::vector<IndexPair> Relation::pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (auto w : rows_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Relation::subset_of(const Relation& other) const {
  if (carrier_ != other.carrier_) return false;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] & ~other.rows_[k]) return false;
  }
  return true;
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::kReflexive: return "reflexive";
    case Property::kTotal: return "total";
    case Property::kAntisymmetric: return "antisymmetric";
    case Property::kTransitive: return "transitive";
    case Property::kConsistent: return "consistent";
  }
  return "unknown";
}

Relation strict_part(const Relation& r) {
  Relation out(r.carrier());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.strictly_below(i, j)) out.add(i, j);
    }
  }
  return out;
}

Relation equivalent_part(const Relation& r) {
  Relation out(r.carrier());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.contains(i, j) && r.contains(j, i)) out.add(i, j);
    }
  }
  return out;
}

Relation transitive_closure(const Relation& r) {
  Relation t = r;
  const std::size_t n = t.size();
  for (std::size_t k = 0; k < n; ++k) {
    auto via = t.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.contains(i, k)) continue;
      auto target = t.row(i);
      for (std::size_t w = 0; w < t.words_per_row(); ++w) target[w] |= via[w];
    }
  }
  return t;
}

namespace {

bool is_reflexive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r.contains(i, i)) return false;
  }
  return true;
}

bool is_total(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i; j < r.size(); ++j) {
      if (!r.contains(i, j) && !r.contains(j, i)) return false;
    }
  }
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (r.contains(i, j) && r.contains(j, i)) return false;
    }
  }
  return true;
}

bool is_transitive(const Relation& r) {
  return transitive_closure(r) == r;
}

bool is_consistent_closed(const Relation& r, const Relation& closure) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (closure.contains(x, y) && r.strictly_below(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

bool has_property(const Relation& r, Property p) {
  switch (p) {
    case Property::kReflexive: return is_reflexive(r);
    case Property::kTotal: return is_total(r);
    case Property::kAntisymmetric: return is_antisymmetric(r);
    case Property::kTransitive: return is_transitive(r);
    case Property::kConsistent:
      return is_consistent_closed(r, transitive_closure(r));
  }
  return false;
}

bool is_total_preorder(const Relation& r) {
  return is_total(r) && is_transitive(r);
}

bool is_linear_order(const Relation& r) {
  return is_total(r) && is_antisymmetric(r) && is_transitive(r);
}

std::vector<std::size_t> min_elements(const Relation& r,
                                      std::span<const std::size_t> m) {
  std::vector<std::size_t> members(m.begin(), m.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<std::size_t> out;
  for (auto x : members) {
    bool minimal = true;
    for (auto y : members) {
      if (r.contains(y, x) && !r.contains(x, y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> min_elements(const Relation& r) {
  std::vector<std::size_t> all(r.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return min_elements(r, all);
}

std::optional<std::size_t> unique_min(const Relation& r,
                                      std::span<const std::size_t> m) {
  auto mins = min_elements(r, m);
  if (mins.size() != 1) return std::nullopt;
  return mins.front();
}

Relation suzumura_extension(const Relation& r) {
  Relation t = transitive_closure(r);
  if (!is_consistent_closed(r, t)) {
    throw Error(ErrorKind::kInconsistent,
                "relation closes a strict pair with a weak chain; no total "
                "preorder extension exists");
  }
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) t.add(i, i);

  // Merging two incomparable elements of a transitive relation: every u below
  // i or j now reaches everything above i or j. Strict pairs survive because a
  // reversed strict pair would already have made i and j comparable.
  std::vector<std::size_t> below;
  std::vector<std::uint64_t> above(t.words_per_row());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.contains(i, j) || t.contains(j, i)) continue;
      below.clear();
      for (std::size_t u = 0; u < n; ++u) {
        if (t.contains(u, i) || t.contains(u, j)) below.push_back(u);
      }
      auto ri = t.row(i);
      auto rj = t.row(j);
      for (std::size_t w = 0; w < above.size(); ++w) above[w] = ri[w] | rj[w];
      for (auto u : below) {
        auto ru = t.row(u);
        for (std::size_t w = 0; w < above.size(); ++w) ru[w] |= above[w];
      }
    }
  }

  if (!r.subset_of(t)) {
    throw Error(ErrorKind::kInternalIncompatibility,
                "consistent extension lost a pair of its input");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (r.strictly_below(x, y) && !t.strictly_below(x, y)) {
        throw Error(ErrorKind::kInternalIncompatibility,
                    "consistent extension lost a strict pair of its input");
      }
    }
  }
  return t;
}

Relation linearize(const Relation& tp) {
  if (!is_total_preorder(tp)) {
    throw Error(ErrorKind::kNotTotalPreorder,
                "linearize needs a total and transitive relation");
  }
  Relation out(tp.carrier());
  for (std::size_t x = 0; x < tp.size(); ++x) {
    for (std::size_t y = 0; y < tp.size(); ++y) {
      if (tp.contains(x, y) && (!tp.contains(y, x) || x <= y)) out.add(x, y);
    }
  }
  return out;
}

std::vector<std::size_t> chain_of(const Relation& r) {
  if (!is_linear_order(r)) {
    throw Error(ErrorKind::kInvalidOrder, "relation is not a linear order");
  }
  std::vector<std::size_t> chain(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::size_t below = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.contains(j, i)) ++below;
    }
    chain[below - 1] = i;
  }
  return chain;
}

}  // namespace linchoice
