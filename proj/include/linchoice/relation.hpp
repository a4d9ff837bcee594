#ifndef LINCHOICE_RELATION_HPP_
#define LINCHOICE_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "linchoice/alternative_set.hpp"

namespace linchoice {

/// Indexed ground set of a relation. Elements are pairwise distinct; their
/// order is fixed at construction and is the canonical tie-break sequence used
/// by suzumura_extension and linearize.
class Carrier {
 public:
  Carrier() = default;
  /// Throws Error(kInvalidRelation) on duplicate elements.
  explicit Carrier(std::vector<AltSet> elements);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<AltSet>& elements() const { return elements_; }
  AltSet operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(AltSet s) const;

  bool operator==(const Carrier&) const = default;

 private:
  std::vector<AltSet> elements_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Finite binary relation over a Carrier; (i, j) means element i is weakly
/// below element j. Stored as a dense bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(Carrier carrier);
  /// Throws Error(kInvalidRelation) if a pair names an index out of range.
  Relation(Carrier carrier, std::span<const IndexPair> pairs);

  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  bool contains(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  bool strictly_below(std::size_t i, std::size_t j) const {
    return contains(i, j) && !contains(j, i);
  }
  void add(std::size_t i, std::size_t j) {
    rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }
  void remove(std::size_t i, std::size_t j) {
    rows_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }

  /// All pairs, lexicographically sorted.
  std::vector<IndexPair> pairs() const;
  std::size_t pair_count() const;

  /// Same carrier and same pairs.
  bool operator==(const Relation&) const = default;
  /// Same carrier and every pair of *this is in other.
  bool subset_of(const Relation& other) const;

  // Row access for word-parallel algorithms.
  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(std::size_t i) const {
    return {rows_.data() + i * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t i) {
    return {rows_.data() + i * words_, words_};
  }

 private:
  Carrier carrier_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

enum class Property { kReflexive, kTotal, kAntisymmetric, kTransitive, kConsistent };

std::string_view to_string(Property p);

/// {(x, y) in r | (y, x) not in r}.
Relation strict_part(const Relation& r);
/// r minus its strict part.
Relation equivalent_part(const Relation& r);

/// `kConsistent` is decided as: no pair of tc(r) is the reverse of a strict
/// pair of r. On finite carriers this is the chain formulation.
bool has_property(const Relation& r, Property p);

bool is_total_preorder(const Relation& r);
bool is_linear_order(const Relation& r);

/// Smallest transitive superset of r.
Relation transitive_closure(const Relation& r);

/// {x in m | for all x' in m: x' r x implies x r x'}, ascending.
/// With m the whole carrier this is min(r).
std::vector<std::size_t> min_elements(const Relation& r,
                                      std::span<const std::size_t> m);
std::vector<std::size_t> min_elements(const Relation& r);

/// The unique minimal element of m, or nullopt when min_elements(r, m) is
/// not a singleton (empty or ambiguous).
std::optional<std::size_t> unique_min(const Relation& r,
                                      std::span<const std::size_t> m);

/// Total preorder e with r in e and strict_part(r) in strict_part(e).
/// Built from tc(r) by merging incomparable pairs in carrier order.
/// Throws Error(kInconsistent) if r is not consistent.
Relation suzumura_extension(const Relation& r);

/// Linear order whose strict part contains strict_part(tp); ties of tp are
/// broken by carrier index. Throws Error(kNotTotalPreorder).
Relation linearize(const Relation& tp);

/// Carrier indices of a linear order from least to greatest.
/// Throws Error(kInvalidOrder) if r is not a linear order.
std::vector<std::size_t> chain_of(const Relation& r);

}  // namespace linchoice

#endif  // LINCHOICE_RELATION_HPP_
