#include "linchoice/change.hpp"

#include <gtest/gtest.h>

#include <random>

#include "linchoice/error.hpp"
#include "linchoice/json_io.hpp"
#include "linchoice/synthesis.hpp"
#include "test_support.hpp"

namespace linchoice {
namespace {

using testing::Snacks;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kIo;
}

// Family E u {K} for every K, with the running example's order at its K.
ChangeOperator snack_operator(const Snacks& s) {
  std::vector<FamilySpec> family;
  for (auto k : s.structure->domain()) {
    std::vector<AltSet> real = s.chain;
    if (std::find(real.begin(), real.end(), k) == real.end()) real.push_back(k);
    std::optional<std::vector<AltSet>> chain;
    if (k == s.k) chain = s.chain;
    family.push_back({k, real, chain});
  }
  return ChangeOperator::create(
      s.u, {s.structure->domain().begin(), s.structure->domain().end()}, family);
}

std::vector<AltSet> random_union_closed_domain(std::mt19937_64& rng,
                                               std::size_t alts) {
  auto st = testing::random_structure(rng, alts, 0.4, 1.0);
  auto closed = testing::union_closure_structure(
      st->universe(), {st->domain().begin(), st->domain().end()},
      {st->domain().front()});
  return {closed->domain().begin(), closed->domain().end()};
}

TEST(ChangeTest, SnackRevisionValues) {
  Snacks s;
  auto op = snack_operator(s);
  EXPECT_EQ(revise(op, s.k, s.set({"nachos", "pretzels", "dips"})),
            s.set({"pretzels"}));
  EXPECT_EQ(revise(op, s.k, s.set({"nachos", "dips"})), s.k);
  EXPECT_EQ(op.entry(s.k).order.chain().front(), s.k);
}

TEST(ChangeTest, SnackOperatorFileMatches) {
  Snacks s;
  auto op = operator_from_json(
      read_json_file(std::string(LINCHOICE_DATA_DIR) + "/snacks_operator.json"));
  EXPECT_EQ(ChangeTable::tabulate(op), ChangeTable::tabulate(snack_operator(s)));
  EXPECT_EQ(revise(op, s.k, s.set({"nachos", "pretzels", "dips"})),
            s.set({"pretzels"}));
  EXPECT_TRUE(all_hold(lcr_certify(op)));
}

TEST(ChangeTest, SuccessWhenInputContainsK) {
  Snacks s;
  auto t = ChangeTable::tabulate(snack_operator(s));
  for (auto k : t.domain()) {
    for (auto x : t.domain()) {
      if (k.subset_of(x)) EXPECT_EQ(t(k, x), k);
      const AltSet r = t(k, x);
      EXPECT_TRUE(r.subset_of(x) || r == k);
    }
  }
  auto reports = lcr_certify(t);
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) EXPECT_TRUE(r.holds) << to_string(r.axiom);
}

TEST(ChangeTest, FittedOperatorsPassAndReconstruct) {
  std::mt19937_64 rng(testing::kSeed + 40);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t alts = 2 + trial % 3;
    auto domain = random_union_closed_domain(rng, alts);
    std::vector<std::pair<AltSet, std::vector<AltSet>>> family;
    std::bernoulli_distribution coin(0.5);
    for (auto k : domain) {
      std::vector<AltSet> real{k};
      for (auto e : domain)
        if (e != k && coin(rng)) real.push_back(e);
      family.emplace_back(k, real);
    }
    auto op = fit_family(testing::letters(alts), domain, family);
    auto reports = lcr_certify(op);
    for (const auto& r : reports) ASSERT_TRUE(r.holds) << to_string(r.axiom);
    auto table = ChangeTable::tabulate(op);
    EXPECT_EQ(ChangeTable::tabulate(reconstruct(table)), table);
  }
}

TEST(ChangeTest, MutatedOperatorFailsWithReplayableWitness) {
  Snacks s;
  auto t = ChangeTable::tabulate(snack_operator(s));
  // K is inside the whole universe, so revising by it must return K.
  t.set(s.k, s.u.all(), s.set({"pretzels"}));
  auto reports = lcr_certify(t);
  auto bad = first_violation(reports);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->witness.front(), s.k);
  EXPECT_TRUE(replay_lcr(t, *bad));
  auto lcr2 = check_lcr(t, Axiom::kLCR2);
  EXPECT_FALSE(lcr2.holds);
  EXPECT_EQ(lcr2.witness, (std::vector<AltSet>{s.k, s.u.all()}));
  EXPECT_TRUE(replay_lcr(t, lcr2));
  EXPECT_THROW(reconstruct(t), AxiomViolationError);
}

TEST(ChangeTest, RandomMutationsAreCaught) {
  std::mt19937_64 rng(testing::kSeed + 41);
  int caught = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto domain = random_union_closed_domain(rng, 3);
    std::vector<std::pair<AltSet, std::vector<AltSet>>> family;
    for (auto k : domain) family.emplace_back(k, domain);
    auto t = ChangeTable::tabulate(fit_family(testing::letters(3), domain, family));
    const AltSet k = domain[rng() % domain.size()];
    const AltSet x = domain[rng() % domain.size()];
    t.set(k, x, domain[rng() % domain.size()]);
    auto bad = first_violation(lcr_certify(t));
    if (!bad) continue;
    ++caught;
    EXPECT_TRUE(replay_lcr(t, *bad));
  }
  EXPECT_GT(caught, 10);
}

TEST(ChangeTest, Errors) {
  Snacks s;
  auto u = testing::letters(2);
  const AltSet a = AltSet::of({0}), b = AltSet::of({1});
  EXPECT_EQ(kind_of([&] { fit_family(u, {a, b}, {{a, {a}}, {b, {b}}}); }),
            ErrorKind::kNotUnionClosed);
  const std::vector<AltSet> dom{a, b, a | b};
  EXPECT_EQ(kind_of([&] { fit_family(u, dom, {{a, {a}}, {b, {b}}}); }),
            ErrorKind::kFamilyInvalid);
  EXPECT_EQ(kind_of([&] {
              fit_family(u, dom, {{a, {b}}, {b, {b}}, {a | b, {a | b}}});
            }),
            ErrorKind::kFamilyInvalid);
  EXPECT_EQ(kind_of([&] {
              ChangeOperator::create(u, dom,
                                     {{a, {a, b}, std::vector<AltSet>{b, a}},
                                      {b, {b}, std::nullopt},
                                      {a | b, {a | b}, std::nullopt}});
            }),
            ErrorKind::kFamilyInvalid);
  auto op = snack_operator(s);
  EXPECT_EQ(kind_of([&] { revise(op, s.set({"nachos"}), s.k); }),
            ErrorKind::kOutOfDomain);
  EXPECT_EQ(kind_of([&] { revise(op, s.k, s.set({"nachos"})); }),
            ErrorKind::kOutOfDomain);
  EXPECT_EQ(kind_of([&] { ChangeTable::create(u, dom, {{a}}); }),
            ErrorKind::kInvalidTable);
}

TEST(ChangeTest, TrivialFamilyIsConstant) {
  auto u = testing::letters(2);
  const AltSet a = AltSet::of({0}), b = AltSet::of({1});
  const std::vector<AltSet> dom{AltSet(), a, b, a | b};
  std::vector<std::pair<AltSet, std::vector<AltSet>>> family;
  for (auto k : dom) family.emplace_back(k, std::vector<AltSet>{k});
  auto t = ChangeTable::tabulate(fit_family(u, dom, family));
  for (auto k : dom)
    for (auto x : dom) EXPECT_EQ(t(k, x), k);
  EXPECT_TRUE(all_hold(lcr_certify(t)));
}

TEST(ChangeTest, RevisingByItselfKeepsK) {
  Snacks s;
  auto op = snack_operator(s);
  const AltSet nd = s.set({"nachos", "dips"});
  EXPECT_EQ(revise(op, nd, nd), nd);
  // At the example K the operator is the example function.
  auto ex = s.table();
  for (auto x : s.structure->domain()) {
    if (s.k.subset_of(x)) EXPECT_EQ(revise(op, s.k, x), s.k);
    EXPECT_EQ(revise(op, s.k, x), ex(x));
  }
}

}  // namespace
}  // namespace linchoice
