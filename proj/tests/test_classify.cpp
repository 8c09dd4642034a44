#include <gtest/gtest.h>

#include "monodraw/classify.hpp"
#include "oracle.hpp"

using namespace monodraw;

namespace {
SignatureFunction sig(int n, const std::string& s) { return SignatureFunction::from_string(n, s); }
}  // namespace

TEST(FormTables, MatchStringLists) {
  for (unsigned c = 0; c < 16; ++c) {
    const std::string f = QuadForm::from_code(c).str();
    EXPECT_EQ(kSemisimpleForms[c], oracle::semisimple_forms().contains(f)) << f;
    EXPECT_EQ(kPseudolinearForms[c], oracle::pseudolinear_forms().contains(f)) << f;
    EXPECT_EQ(kConvexForms[c], oracle::convex_forms().contains(f)) << f;
    if (kPseudolinearForms[c]) {
      EXPECT_TRUE(kSemisimpleForms[c]) << f;
    }
    if (kConvexForms[c]) {
      EXPECT_TRUE(kSemisimpleForms[c]) << f;
    }
  }
}

TEST(FormTables, PseudolinearIsAtMostOneSignChange) {
  for (unsigned c = 0; c < 16; ++c) {
    const std::string f = QuadForm::from_code(c).str();
    int changes = 0;
    for (int i = 0; i < 3; ++i) changes += f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i) + 1];
    EXPECT_EQ(kPseudolinearForms[c], changes <= 1) << f;
  }
}

TEST(Semisimple, Examples) {
  const Verdict bad = check_semisimple(sig(4, "+-+-"));
  ASSERT_FALSE(bad.valid);
  EXPECT_EQ(bad.witness->str(), "(1,2,3,4) form +-+-");
  EXPECT_TRUE(check_semisimple(sig(4, "+++-")).valid);
  EXPECT_TRUE(check_semisimple(sig(3, "-")).valid);
  EXPECT_TRUE(check_semisimple(SignatureFunction(2)).valid);
}

TEST(Simple, Examples) {
  EXPECT_TRUE(check_simple(SignatureFunction(5)).valid);
  for (const char* s : {"++++", "+++-", "-++-", "--++"}) EXPECT_TRUE(check_simple(sig(4, s)).valid);
  EXPECT_FALSE(check_simple(sig(4, "+-+-")).valid);
}

TEST(Simple, SmallestFiveTupleViolation) {
  // First string in lexicographic order ('+' < '-') that is semisimple but not simple.
  std::string first;
  oracle::all_strings(5, [&](const std::string& s) {
    const oracle::Sig o(5, s);
    if (oracle::semisimple(o) && !oracle::simple(o) && (first.empty() || s < first)) first = s;
  });
  ASSERT_FALSE(first.empty());
  const Verdict v = check_simple(sig(5, first));
  ASSERT_FALSE(v.valid);
  ASSERT_EQ(v.witness->tuple, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(forbidden_five(sig(5, first), 1, 2, 3, 4, 5));
}

TEST(Pseudolinear, Examples) {
  EXPECT_TRUE(check_pseudolinear(sig(4, "+++-")).valid);
  EXPECT_FALSE(check_pseudolinear(sig(4, "-++-")).valid);
  EXPECT_TRUE(check_pseudolinear(SignatureFunction(4)).valid);
}

TEST(Classify, ExhaustiveAgainstOracle) {
  for (int n = 3; n <= 5; ++n) {
    oracle::all_strings(n, [&](const std::string& str) {
      const oracle::Sig o(n, str);
      const SignatureFunction s = sig(n, str);
      const Verdict ss = check_semisimple(s), sp = check_simple(s), pl = check_pseudolinear(s);
      ASSERT_EQ(ss.valid, oracle::semisimple(o)) << str;
      ASSERT_EQ(sp.valid, oracle::simple(o)) << str;
      ASSERT_EQ(pl.valid, oracle::pseudolinear(o)) << str;
      ASSERT_EQ(ss.valid, !ss.witness.has_value());
      if (pl.valid) {
        EXPECT_TRUE(sp.valid) << str;
      }
      if (sp.valid) {
        EXPECT_TRUE(ss.valid) << str;
      }
      if (!ss.valid) {
        const auto& t = ss.witness->tuple;
        EXPECT_FALSE(kSemisimpleForms[quad_code(s, t[0], t[1], t[2], t[3])]);
      }
    });
  }
}

TEST(Classify, WitnessIsLexicographicallyFirst) {
  oracle::all_strings(5, [&](const std::string& str) {
    const oracle::Sig o(5, str);
    std::vector<int> first;
    for (int a = 1; a <= 5 && first.empty(); ++a)
      for (int b = a + 1; b <= 5 && first.empty(); ++b)
        for (int c = b + 1; c <= 5 && first.empty(); ++c)
          for (int d = c + 1; d <= 5 && first.empty(); ++d)
            if (!oracle::semisimple_forms().contains(o.form(a, b, c, d))) first = {a, b, c, d};
    const Verdict v = check_semisimple(sig(5, str));
    if (first.empty()) {
      EXPECT_TRUE(v.valid);
    } else {
      ASSERT_FALSE(v.valid);
      EXPECT_EQ(v.witness->tuple, first) << str;
    }
  });
}

TEST(Classify, PseudolinearImpliesSimpleAtSix) {
  // Walk pseudolinear signatures on 6 vertices by extending those on 5.
  std::vector<std::string> five;
  oracle::all_strings(5, [&](const std::string& s) {
    if (oracle::pseudolinear(oracle::Sig(5, s))) five.push_back(s);
  });
  int checked = 0;
  for (const auto& base : five) {
    const oracle::Sig b(5, base);
    for (unsigned mask = 0; mask < (1U << 10); ++mask) {
      std::string s(20, '+');
      oracle::Sig o(6, s);
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
          for (int k = j + 1; k <= 5; ++k) o.put(i, j, k, b.at(i, j, k));
      int bit = 0;
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) o.put(i, j, 6, (mask >> bit++) & 1U ? '-' : '+');
      if (!oracle::pseudolinear(o)) continue;
      ++checked;
      ASSERT_TRUE(check_simple(sig(6, o.s)).valid) << o.s;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(TwoPage, Examples) {
  EXPECT_TRUE(is_two_page(SignatureFunction(4)));
  EXPECT_TRUE(is_two_page(sig(4, "+++-")));
  SignatureFunction s(5);
  s.set(1, 3, 4, Sign::Minus);
  EXPECT_FALSE(is_two_page(s));
}

TEST(Level, Strings) {
  for (Level l : {Level::Semisimple, Level::Simple, Level::Pseudolinear}) EXPECT_EQ(level_from_string(to_string(l)), l);
  EXPECT_THROW(level_from_string("weak"), InputError);
}
