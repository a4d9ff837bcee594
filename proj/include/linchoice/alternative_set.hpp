#ifndef LINCHOICE_ALTERNATIVE_SET_HPP_
#define LINCHOICE_ALTERNATIVE_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linchoice {

/// A subset of the alternative universe, stored as a membership word.
/// Bit i stands for the i-th declared alternative. Universes are capped at
/// 63 alternatives.
///
/// The canonical order on sets (used for every deterministic tie-break in the
/// library) is ascending by the membership word.
class AltSet {
 public:
  static constexpr std::size_t kMaxUniverse = 63;

  constexpr AltSet() = default;
  constexpr explicit AltSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr AltSet of(std::initializer_list<std::size_t> members) {
    std::uint64_t bits = 0;
    for (auto i : members) bits |= std::uint64_t{1} << i;
    return AltSet(bits);
  }
  /// All of {0, ..., n-1}.
  static constexpr AltSet full(std::size_t n) {
    return AltSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const {
    return (bits_ >> i) & std::uint64_t{1};
  }
  constexpr bool subset_of(AltSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr AltSet operator|(AltSet o) const { return AltSet(bits_ | o.bits_); }
  constexpr AltSet operator&(AltSet o) const { return AltSet(bits_ & o.bits_); }
  constexpr AltSet without(AltSet o) const { return AltSet(bits_ & ~o.bits_); }

  constexpr bool operator==(const AltSet&) const = default;
  constexpr std::strong_ordering operator<=>(const AltSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

struct AltSetHash {
  std::size_t operator()(AltSet s) const noexcept {
    // splitmix64 finalizer
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Sorts ascending in canonical order and removes duplicates.
void canonicalize(std::vector<AltSet>& sets);

/// True iff `sets` is strictly ascending (hence duplicate free).
bool is_canonical(std::span<const AltSet> sets);

/// Binary search in a canonical vector.
bool canonical_contains(std::span<const AltSet> sets, AltSet s);

/// All subsets of {0..n-1} in canonical order; n must be small enough to
/// materialize.
std::vector<AltSet> powerset(std::size_t n);

/// The named alternatives a set ranges over. Names are distinct and the
/// declaration order fixes the bit positions.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Throws Error(kUnknownAlternative) for names that are not declared.
  std::size_t index_of(std::string_view name) const;
  bool has(std::string_view name) const;

  /// Duplicate names in a literal are rejected.
  AltSet parse(std::span<const std::string> names) const;
  /// Comma separated, e.g. "nachos,pretzels,dips"; the empty string is the
  /// empty set.
  AltSet parse_list(std::string_view text) const;

  /// Member names sorted alphabetically.
  std::vector<std::string> names_of(AltSet s) const;
  /// "{a, b}" for messages.
  std::string format(AltSet s) const;

  AltSet all() const { return AltSet::full(names_.size()); }

  bool operator==(const Universe&) const = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace linchoice

#endif  // LINCHOICE_ALTERNATIVE_SET_HPP_
