// Copyright 2026 The lcgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures/parallel_examples.hpp"
#include "lc/church.hpp"
#include "lc/reduce.hpp"
#include "lc/syntax.hpp"
#include "oracle/debruijn.hpp"
#include "test_util.hpp"

namespace lc {
namespace {

std::string nf(const char* src, Lang lang, Strategy s, Renaming r, std::size_t* steps = nullptr) {
  const auto res = reduce(parse(src, lang), s, r);
  if (steps) *steps = res.steps;
  return print(res.normal_form, lang);
}

TEST(Whnf, IdentityApplied) {
  std::size_t steps = 0;
  EXPECT_EQ(nf("(\\x0 -> x0) (\\x1 -> x1)", Lang::LC1, Strategy::WHNF, Renaming::NVR, &steps), "\\x1 -> x1");
  EXPECT_EQ(steps, 1u);
  EXPECT_EQ(nf("(\\x0 -> x0) (\\x1 -> x1)", Lang::LC1, Strategy::WHNF, Renaming::VR), "\\x0 -> x0");
}

TEST(Whnf, LambdaIsAlreadyWeakHead) {
  std::size_t steps = 99;
  EXPECT_EQ(nf("\\x1 -> (\\x0 -> x0) x1", Lang::LC1, Strategy::WHNF, Renaming::NVR, &steps),
            "\\x1 -> (\\x0 -> x0) x1");
  EXPECT_EQ(steps, 0u);
  std::size_t dnf_steps = 0;
  EXPECT_EQ(nf("\\x1 -> (\\x0 -> x0) x1", Lang::LC1, Strategy::DNF, Renaming::VR, &dnf_steps), "\\x0 -> x0");
  EXPECT_EQ(dnf_steps, 1u);
  EXPECT_EQ(nf("(\\x0 -> x0) (\\x1 -> x1)", Lang::LC1, Strategy::DNF, Renaming::VR), "\\x0 -> x0");
}

TEST(Whnf, DoesNotTouchArguments) {
  std::size_t steps = 0;
  EXPECT_EQ(nf("x0 ((\\x1 -> x1) x2)", Lang::LC1, Strategy::WHNF, Renaming::NVR, &steps), "x0 ((\\x1 -> x1) x2)");
  EXPECT_EQ(steps, 0u);
  EXPECT_EQ(nf("x0 ((\\x1 -> x1) x2)", Lang::LC1, Strategy::DNF, Renaming::NVR, &steps), "x0 x2");
  EXPECT_EQ(steps, 1u);
}

TEST(Sugared, IteAndFoldrRules) {
  std::size_t steps = 0;
  EXPECT_EQ(nf("ite True () x0", Lang::LC2, Strategy::WHNF, Renaming::NVR, &steps), "()");
  EXPECT_EQ(steps, 1u);
  EXPECT_EQ(nf("ite False () x0", Lang::LC2, Strategy::WHNF, Renaming::NVR), "x0");
  // condition first reduced to a constructor
  EXPECT_EQ(nf("ite ((\\x0 -> x0) False) () x1", Lang::LC2, Strategy::WHNF, Renaming::NVR, &steps), "x1");
  EXPECT_EQ(steps, 2u);
  EXPECT_EQ(nf("foldr x0 x1 []", Lang::LC2, Strategy::WHNF, Renaming::NVR, &steps), "x1");
  EXPECT_EQ(steps, 1u);
  // one rule application exposes f h (foldr f e t)
  EXPECT_EQ(nf("foldr x0 x1 [(), ()]", Lang::LC2, Strategy::WHNF, Renaming::NVR, &steps),
            "x0 () (foldr x0 x1 [()])");
  EXPECT_EQ(steps, 1u);
  EXPECT_EQ(nf("foldr x0 x1 [(), ()]", Lang::LC2, Strategy::DNF, Renaming::NVR, &steps), "x0 () (x0 () x1)");
  EXPECT_EQ(steps, 3u);
  EXPECT_EQ(nf("foldr (\\x0 -> \\x1 -> (:) x0 x1) [] [True, False]", Lang::LC2, Strategy::DNF, Renaming::VR),
            "[True, False]");
  // stuck eliminations are normal forms
  EXPECT_EQ(nf("ite x0 () ()", Lang::LC2, Strategy::DNF, Renaming::NVR, &steps), "ite x0 () ()");
  EXPECT_EQ(steps, 0u);
}

TEST(Golden, DeepNormalFormsWithRenumbering) {
  for (const auto& row : fixtures::kParallelExamples) {
    EXPECT_EQ(print1(reduce(parse1(row.lc1), Strategy::DNF, Renaming::VR).normal_form), row.lc1_dnf);
    EXPECT_EQ(print2(reduce(parse2(row.lc2), Strategy::DNF, Renaming::VR).normal_form), row.lc2_dnf);
  }
}

TEST(Fuel, DivergentTermExhausts) {
  const Term omega = parse1("(\\x0 -> x0 x0) (\\x0 -> x0 x0)");
  EXPECT_THROW(reduce(omega, Strategy::WHNF, Renaming::NVR, 500), FuelExhausted);
  EXPECT_THROW(reduce(omega, Strategy::DNF, Renaming::NVR, 500), FuelExhausted);
}

TEST(RenameVr, PreorderAndIdempotent) {
  EXPECT_EQ(print1(rename_vr(parse1("\\x5 -> (\\x2 -> x2 x5) (\\x9 -> x9)"))),
            "\\x0 -> (\\x1 -> x1 x0) (\\x2 -> x2)");
  // free variables keep their names
  EXPECT_EQ(print1(rename_vr(parse1("\\x5 -> x7 x5"))), "\\x0 -> x7 x0");
  for (const auto& [t, ty] : testing::generated_programs(2000, 3)) {
    const Term once = rename_vr(t);
    ASSERT_EQ(rename_vr(once), once);
    ASSERT_TRUE(alpha_eq(once, t));
  }
}

// Every closed term of up to seven nodes, against the leftmost-outermost
// de Bruijn normalizer: same normal form up to alpha, same number of steps.
TEST(Oracle, ExhaustiveSmallTerms) {
  const auto terms = oracle::enumerate_closed(7);
  // counted by size with k binders in scope: t(1,k)=k, t(n,k)=t(n-1,k+1)+sum t(i,k)t(n-1-i,k)
  ASSERT_EQ(terms.size(), 201u);
  for (const auto& db : terms) {
    const Term t = oracle::to_named(db);
    const auto want = oracle::normalize(db);
    const auto got = reduce(t, Strategy::DNF, Renaming::NVR);
    ASSERT_TRUE(oracle::equal(oracle::from_named(got.normal_form), want.term)) << print1(t);
    ASSERT_EQ(got.steps, want.steps) << print1(t);
    const auto want_whnf = oracle::head_normalize(db);
    const auto got_whnf = reduce(t, Strategy::WHNF, Renaming::NVR);
    ASSERT_TRUE(oracle::equal(oracle::from_named(got_whnf.normal_form), want_whnf.term)) << print1(t);
    ASSERT_EQ(got_whnf.steps, want_whnf.steps) << print1(t);
  }
}

TEST(Property, NormalFormsAreFixedPointsAndWhnfIsCheaper) {
  for (const auto& [t, ty] : testing::generated_programs(2000, 5)) {
    for (const Term& src : {t, church_encode(t)}) {
      const auto w = reduce(src, Strategy::WHNF, Renaming::NVR);
      const auto d = reduce(src, Strategy::DNF, Renaming::NVR);
      ASSERT_LE(w.steps, d.steps);
      ASSERT_EQ(reduce(w.normal_form, Strategy::WHNF, Renaming::NVR).steps, 0u);
      ASSERT_EQ(reduce(d.normal_form, Strategy::DNF, Renaming::NVR).steps, 0u);
      // deep reduction of the weak head form finishes the job
      ASSERT_TRUE(alpha_eq(reduce(w.normal_form, Strategy::DNF, Renaming::NVR).normal_form, d.normal_form));
      ASSERT_TRUE(alpha_eq(reduce(src, Strategy::DNF, Renaming::VR).normal_form, d.normal_form));
    }
  }
}

}  // namespace
}  // namespace lc
