#include "linchoice/alternative_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "linchoice/error.hpp"

namespace linchoice {

void canonicalize(std::vector<AltSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool is_canonical(std::span<const AltSet> sets) {
  return std::adjacent_find(sets.begin(), sets.end(),
                            [](AltSet a, AltSet b) { return !(a < b); }) ==
         sets.end();
}

bool canonical_contains(std::span<const AltSet> sets, AltSet s) {
  return std::binary_search(sets.begin(), sets.end(), s);
}

std::vector<AltSet> powerset(std::size_t n) {
  if (n > 24) {
    throw Error(ErrorKind::kTooLarge,
                "powerset of " + std::to_string(n) + " alternatives");
  }
  std::vector<AltSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    out.emplace_back(b);
  }
  return out;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > AltSet::kMaxUniverse) {
    throw Error(ErrorKind::kTooLarge,
                "universe has " + std::to_string(names_.size()) +
                    " alternatives; at most 63 are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw Error(ErrorKind::kFormat, "empty alternative name");
    }
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::kFormat, "duplicate alternative name '" + n + "'");
    }
  }
}

std::size_t Universe::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorKind::kUnknownAlternative,
                "unknown alternative '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - names_.begin());
}

bool Universe::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

AltSet Universe::parse(std::span<const std::string> names) const {
  AltSet out;
  for (const auto& n : names) {
    auto bit = AltSet::of({index_of(n)});
    if (!(out & bit).empty()) {
      throw Error(ErrorKind::kFormat,
                  "alternative '" + n + "' listed twice in a set literal");
    }
    out = out | bit;
  }
  return out;
}

AltSet Universe::parse_list(std::string_view text) const {
  std::vector<std::string> names;
  std::size_t start = 0;
  if (text.empty()) return AltSet{};
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
    auto b = piece.find_first_not_of(" \t");
    auto e = piece.find_last_not_of(" \t");
    if (b == std::string_view::npos) {
      throw Error(ErrorKind::kFormat,
                  "empty element in set literal '" + std::string(text) + "'");
    }
    names.emplace_back(piece.substr(b, e - b + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parse(names);
}

std::vector<std::string> Universe::names_of(AltSet s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (s.contains(i)) out.push_back(names_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Universe::format(AltSet s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names_of(s)) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace linchoice
