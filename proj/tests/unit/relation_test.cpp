#include "linchoice/relation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "linchoice/error.hpp"
#include "test_support.hpp"

namespace linchoice {
namespace {

using testing::brute_consistent;
using testing::brute_extension_exists;

// Carrier {a}, {b}, {c}, ... in that order.
Carrier singletons(std::size_t n) {
  std::vector<AltSet> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(AltSet::of({i}));
  return Carrier(v);
}

Relation rel(std::size_t n, std::initializer_list<IndexPair> pairs) {
  std::vector<IndexPair> v(pairs);
  return Relation(singletons(n), v);
}

Relation with_reflexive(Relation r) {
  for (std::size_t i = 0; i < r.size(); ++i) r.add(i, i);
  return r;
}

// Every relation on a carrier of size n, one per bit pattern.
Relation from_bits(std::size_t n, std::uint64_t bits) {
  Relation r(singletons(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((bits >> (i * n + j)) & 1u) r.add(i, j);
    }
  }
  return r;
}

constexpr std::size_t a = 0, b = 1, c = 2, d = 3, e = 4;

TEST(CarrierTest, RejectsDuplicates) {
  EXPECT_THROW(Carrier({AltSet::of({0}), AltSet::of({0})}), Error);
  Carrier ok({AltSet::of({1}), AltSet::of({0})});
  EXPECT_EQ(ok.index_of(AltSet::of({0})), 1u);
  EXPECT_FALSE(ok.index_of(AltSet()).has_value());
}

TEST(RelationTest, RejectsOutOfRangePairs) {
  std::vector<IndexPair> bad{{0, 3}};
  EXPECT_THROW(Relation(singletons(2), bad), Error);
}

TEST(RelationTest, StrictPart) {
  EXPECT_EQ(strict_part(rel(3, {{a, b}, {b, a}, {a, c}})), rel(3, {{a, c}}));
  EXPECT_EQ(strict_part(rel(3, {})), rel(3, {}));
  // a ~ b < c
  auto tp = with_reflexive(rel(3, {{a, b}, {b, a}, {a, c}, {b, c}}));
  EXPECT_EQ(strict_part(tp), rel(3, {{a, c}, {b, c}}));
}

TEST(RelationTest, StrictAndEquivalentPartsPartition) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = testing::random_relation(rng, 1 + trial % 6, 0.4);
    auto s = strict_part(r);
    auto q = equivalent_part(r);
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        EXPECT_FALSE(s.contains(i, j) && q.contains(i, j));
        EXPECT_EQ(r.contains(i, j), s.contains(i, j) || q.contains(i, j));
      }
    }
  }
}

TEST(RelationTest, Properties) {
  EXPECT_FALSE(has_property(rel(3, {{a, b}, {b, c}, {c, a}}),
                            Property::kConsistent));
  auto lin = with_reflexive(rel(3, {{a, b}, {b, c}, {a, c}}));
  for (auto p : {Property::kReflexive, Property::kTotal,
                 Property::kAntisymmetric, Property::kTransitive,
                 Property::kConsistent}) {
    EXPECT_TRUE(has_property(lin, p)) << to_string(p);
  }
  EXPECT_TRUE(is_linear_order(lin));
  EXPECT_TRUE(is_total_preorder(lin));
  // a ~ b, b ~ c, a < c: the weak chain c, b, a closes on a strict pair.
  auto odd = rel(3, {{a, b}, {b, a}, {b, c}, {c, b}, {a, c}});
  EXPECT_FALSE(has_property(odd, Property::kConsistent));
  auto path = rel(3, {{a, b}, {b, c}});
  EXPECT_TRUE(has_property(path, Property::kConsistent));
  EXPECT_FALSE(has_property(path, Property::kTransitive));
}

TEST(RelationTest, PropertyImplicationsExhaustive) {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      auto r = from_bits(n, bits);
      if (has_property(r, Property::kTransitive)) {
        EXPECT_TRUE(has_property(r, Property::kConsistent));
      }
      if (has_property(r, Property::kTotal)) {
        EXPECT_TRUE(has_property(r, Property::kReflexive));
      }
      EXPECT_EQ(has_property(r, Property::kConsistent), brute_consistent(r));
    }
  }
}

TEST(RelationTest, TransitiveClosure) {
  EXPECT_EQ(transitive_closure(rel(3, {{a, b}, {b, c}})),
            rel(3, {{a, b}, {b, c}, {a, c}}));
  auto t = rel(3, {{a, b}, {b, c}, {a, c}});
  EXPECT_EQ(transitive_closure(t), t);
  auto chain = transitive_closure(rel(5, {{a, b}, {b, c}, {c, d}, {d, e}}));
  EXPECT_EQ(chain.pair_count(), 10u);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) EXPECT_TRUE(chain.contains(i, j));
  }
}

TEST(RelationTest, TransitiveClosureIdempotentMonotoneMinimal) {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto r = testing::random_relation(rng, 1 + trial % 7, 0.25);
    auto t = transitive_closure(r);
    EXPECT_TRUE(r.subset_of(t));
    EXPECT_TRUE(has_property(t, Property::kTransitive));
    EXPECT_EQ(transitive_closure(t), t);
    auto bigger = r;
    bigger.add(0, r.size() - 1);
    EXPECT_TRUE(t.subset_of(transitive_closure(bigger)));
    // Minimal: every pair of t is witnessed by a path in r.
    for (auto [i, j] : t.pairs()) {
      std::vector<bool> seen(r.size(), false);
      std::vector<std::size_t> todo;
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (r.contains(i, k) && !seen[k]) { seen[k] = true; todo.push_back(k); }
      }
      while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (std::size_t k = 0; k < r.size(); ++k) {
          if (r.contains(x, k) && !seen[k]) { seen[k] = true; todo.push_back(k); }
        }
      }
      EXPECT_TRUE(seen[j]);
    }
  }
}

TEST(RelationTest, MinElements) {
  auto lin = with_reflexive(rel(3, {{a, b}, {b, c}, {a, c}}));
  std::vector<std::size_t> bc{b, c};
  EXPECT_EQ(min_elements(lin, bc), (std::vector<std::size_t>{b}));
  std::vector<std::size_t> ab{a, b};
  EXPECT_EQ(min_elements(rel(2, {}), ab), (std::vector<std::size_t>{a, b}));
  EXPECT_EQ(min_elements(rel(2, {{a, b}}), ab), (std::vector<std::size_t>{a}));
  EXPECT_EQ(min_elements(lin), (std::vector<std::size_t>{a}));
  EXPECT_EQ(unique_min(lin, bc), std::optional<std::size_t>(b));
  EXPECT_FALSE(unique_min(rel(2, {}), ab).has_value());
  std::vector<std::size_t> none;
  EXPECT_FALSE(unique_min(lin, none).has_value());
}

TEST(RelationTest, LinearOrderMinimaAreSingletons) {
  // All 24 linear orders on 4 elements, all non-empty subsets.
  std::vector<std::size_t> perm{0, 1, 2, 3};
  do {
    Relation r(singletons(4));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) r.add(perm[i], perm[j]);
    }
    ASSERT_TRUE(is_linear_order(r));
    for (std::uint32_t m = 1; m < 16; ++m) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < 4; ++i) {
        if ((m >> i) & 1u) sub.push_back(i);
      }
      EXPECT_EQ(min_elements(r, sub).size(), 1u);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void expect_extension_contract(const Relation& r, const Relation& ext) {
  EXPECT_TRUE(is_total_preorder(ext));
  EXPECT_TRUE(r.subset_of(ext));
  EXPECT_TRUE(strict_part(r).subset_of(strict_part(ext)));
}

TEST(SuzumuraTest, Examples) {
  auto tp = with_reflexive(rel(3, {{a, b}, {b, a}, {a, c}, {b, c}}));
  EXPECT_EQ(suzumura_extension(tp), tp);
  try {
    suzumura_extension(rel(3, {{a, b}, {b, c}, {c, a}}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kInconsistent);
  }
  auto one = rel(3, {{a, b}});
  expect_extension_contract(one, suzumura_extension(one));
}

TEST(SuzumuraTest, ExhaustiveSmallCarriers) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      auto r = from_bits(n, bits);
      const bool consistent = has_property(r, Property::kConsistent);
      ASSERT_EQ(consistent, brute_extension_exists(r)) << "bits " << bits;
      if (consistent) {
        expect_extension_contract(r, suzumura_extension(r));
      } else {
        EXPECT_THROW(suzumura_extension(r), Error);
      }
    }
  }
}

TEST(LinearizeTest, Examples) {
  auto lin = with_reflexive(rel(3, {{a, b}, {b, c}, {a, c}}));
  EXPECT_EQ(linearize(lin), lin);

  Relation all(singletons(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) all.add(i, j);
  EXPECT_EQ(chain_of(linearize(all)), (std::vector<std::size_t>{a, b, c}));

  // Carrier order b, a, c with a ~ b < c.
  Carrier bac({AltSet::of({1}), AltSet::of({0}), AltSet::of({2})});
  std::vector<IndexPair> pairs{{0, 0}, {1, 1}, {2, 2}, {0, 1},
                               {1, 0}, {0, 2}, {1, 2}};
  Relation tp(bac, pairs);
  auto out = linearize(tp);
  std::vector<AltSet> chain;
  for (auto i : chain_of(out)) chain.push_back(bac[i]);
  EXPECT_EQ(chain, (std::vector<AltSet>{AltSet::of({1}), AltSet::of({0}),
                                        AltSet::of({2})}));

  try {
    linearize(rel(3, {{a, b}}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kNotTotalPreorder);
  }
}

TEST(LinearizeTest, PreservesStrictPartOfRandomPreorders) {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 300; ++trial) {
    auto r = testing::random_relation(rng, 1 + trial % 6, 0.3);
    if (!has_property(r, Property::kConsistent)) continue;
    auto tp = suzumura_extension(r);
    auto lin = linearize(tp);
    EXPECT_TRUE(is_linear_order(lin));
    EXPECT_TRUE(strict_part(tp).subset_of(strict_part(lin)));
    EXPECT_TRUE(strict_part(r).subset_of(strict_part(lin)));
  }
}

TEST(ChainOfTest, RejectsNonLinear) {
  EXPECT_THROW(chain_of(rel(2, {{a, b}})), Error);
}

}  // namespace
}  // namespace linchoice
