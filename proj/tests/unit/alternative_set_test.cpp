#include "linchoice/alternative_set.hpp"

#include <gtest/gtest.h>

#include "linchoice/error.hpp"

namespace linchoice {
namespace {

TEST(AltSetTest, BasicAlgebra) {
  const AltSet a = AltSet::of({0, 2});
  const AltSet b = AltSet::of({2, 3});
  EXPECT_EQ(a.size(), 2u);
  EXPECT_TRUE(a.contains(0));
  EXPECT_FALSE(a.contains(1));
  EXPECT_EQ(a | b, AltSet::of({0, 2, 3}));
  EXPECT_EQ(a & b, AltSet::of({2}));
  EXPECT_EQ(a.without(b), AltSet::of({0}));
  EXPECT_TRUE(AltSet().subset_of(a));
  EXPECT_TRUE(AltSet().empty());
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ(AltSet::full(3), AltSet::of({0, 1, 2}));
  EXPECT_EQ(AltSet::full(0), AltSet());
  EXPECT_EQ(AltSet::full(63).size(), 63u);
}

TEST(AltSetTest, CanonicalOrderIsByMembershipWord) {
  std::vector<AltSet> v{AltSet::of({1}), AltSet::of({0}), AltSet::of({0, 1}),
                        AltSet::of({0})};
  canonicalize(v);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], AltSet::of({0}));
  EXPECT_EQ(v[1], AltSet::of({1}));
  EXPECT_EQ(v[2], AltSet::of({0, 1}));
  EXPECT_TRUE(is_canonical(v));
  EXPECT_TRUE(canonical_contains(v, AltSet::of({1})));
  EXPECT_FALSE(canonical_contains(v, AltSet()));
}

TEST(AltSetTest, Powerset) {
  auto p = powerset(3);
  ASSERT_EQ(p.size(), 8u);
  EXPECT_TRUE(is_canonical(p));
  EXPECT_EQ(p.front(), AltSet());
  EXPECT_EQ(p.back(), AltSet::full(3));
  EXPECT_THROW(powerset(40), Error);
}

TEST(UniverseTest, ParseAndFormat) {
  Universe u({"chocolate", "nachos", "pretzels"});
  EXPECT_EQ(u.parse_list("nachos,chocolate"), AltSet::of({0, 1}));
  EXPECT_EQ(u.parse_list(""), AltSet());
  EXPECT_EQ(u.format(AltSet::of({2, 0})), "{chocolate, pretzels}");
  auto names = u.names_of(AltSet::of({2, 1}));
  EXPECT_EQ(names, (std::vector<std::string>{"nachos", "pretzels"}));
  try {
    u.parse_list("nachos,crisps");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownAlternative);
  }
  std::vector<std::string> dup{"nachos", "nachos"};
  EXPECT_THROW(u.parse(dup), Error);
}

TEST(UniverseTest, RejectsBadDeclarations) {
  EXPECT_THROW(Universe({"a", "a"}), Error);
  EXPECT_THROW(Universe({""}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < 64; ++i) many.push_back("x" + std::to_string(i));
  EXPECT_THROW(Universe{many}, Error);
}

}  // namespace
}  // namespace linchoice
