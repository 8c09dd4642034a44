#include <gtest/gtest.h>

#include <random>

#include "monodraw/signature.hpp"
#include "oracle.hpp"

using namespace monodraw;

TEST(TripleRank, MatchesExplicitLexicographicWalk) {
  for (int n = 3; n <= 12; ++n) {
    std::size_t expected = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) EXPECT_EQ(triple_rank(n, i, j, k), expected++) << n << i << j << k;
    EXPECT_EQ(expected, static_cast<std::size_t>(binom(n, 3)));
  }
}

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(10, 4), 210);
  EXPECT_EQ(binom(3, 4), 0);
  EXPECT_EQ(binom(4, -1), 0);
}

TEST(Parse, DecodesPositions) {
  const auto s = parse_signature("sig v1\nn 4\n+++-\n");
  EXPECT_EQ(s.n(), 4);
  EXPECT_EQ(s(1, 2, 3), Sign::Plus);
  EXPECT_EQ(s(1, 2, 4), Sign::Plus);
  EXPECT_EQ(s(1, 3, 4), Sign::Plus);
  EXPECT_EQ(s(2, 3, 4), Sign::Minus);
  EXPECT_EQ(parse_signature("sig v1\nn 3\n+")(1, 2, 3), Sign::Plus);
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_signature("sig v1\nn 4\n+++\n"), InputError);
  EXPECT_THROW(parse_signature("sig v2\nn 3\n+\n"), InputError);
  EXPECT_THROW(parse_signature("sig v1\nn x\n+\n"), InputError);
  EXPECT_THROW(parse_signature("sig v1\nn 0\n\n"), InputError);
  EXPECT_THROW(parse_signature("sig v1\nn 3\n*\n"), InputError);
  EXPECT_THROW(parse_signature("sig v1\nn 3\n+\n\n"), InputError);
  EXPECT_THROW(parse_signature("sig v1\nn 3\n"), InputError);
}

TEST(Emit, Format) {
  EXPECT_EQ(emit_signature(SignatureFunction(3)), "sig v1\nn 3\n+\n");
  EXPECT_EQ(emit_signature(SignatureFunction(4)), "sig v1\nn 4\n++++\n");
  EXPECT_EQ(emit_signature(SignatureFunction(1)), "sig v1\nn 1\n\n");
}

TEST(Emit, RoundTripRandom) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 9; ++n)
    for (int t = 0; t < 20; ++t) {
      SignatureFunction s(n);
      for (std::size_t r = 0; r < s.size(); ++r) s.set_rank(r, rng() & 1 ? Sign::Minus : Sign::Plus);
      EXPECT_EQ(parse_signature(emit_signature(s)), s);
    }
}

TEST(QuadForm, Examples) {
  EXPECT_EQ(quad_form(SignatureFunction(4), 1, 2, 3, 4).str(), "++++");
  EXPECT_EQ(quad_form(SignatureFunction::from_string(4, "+++-"), 1, 2, 3, 4).str(), "+++-");
  SignatureFunction s(5);
  s.set(1, 2, 4, Sign::Minus);
  EXPECT_EQ(quad_form(s, 1, 2, 4, 5).str(), "-+++");
  EXPECT_THROW(quad_form(s, 1, 3, 2, 4), PreconditionError);
}

TEST(QuadForm, CodeRoundTrip) {
  for (unsigned c = 0; c < 16; ++c) EXPECT_EQ(QuadForm::from_code(c).code(), c);
  EXPECT_EQ(QuadForm::from_code(0b1000).str(), "-+++");
}

TEST(Orient, AgreesWithInversionParity) {
  std::mt19937 rng(3);
  const int n = 6;
  SignatureFunction s(n);
  for (std::size_t r = 0; r < s.size(); ++r) s.set_rank(r, rng() & 1 ? Sign::Minus : Sign::Plus);
  const oracle::Sig o(n, s.sign_string());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        if (a != b && b != c && a != c) {
          EXPECT_EQ(to_char(s.orient(a, b, c)), o.orient(a, b, c));
        }
}

TEST(Relabel, Examples) {
  const SignatureFunction s(3);
  const std::vector<int> id{1, 2, 3}, sw{2, 1, 3};
  EXPECT_EQ(relabel(s, id), s);
  EXPECT_EQ(relabel(s, sw)(1, 2, 3), Sign::Minus);
  EXPECT_THROW(relabel(s, std::vector<int>{1, 1, 3}), InputError);
  EXPECT_THROW(relabel(s, std::vector<int>{1, 2}), InputError);
}

TEST(Relabel, ActionLaw) {
  std::mt19937 rng(11);
  for (int n = 3; n <= 8; ++n)
    for (int t = 0; t < 20; ++t) {
      SignatureFunction s(n);
      for (std::size_t r = 0; r < s.size(); ++r) s.set_rank(r, rng() & 1 ? Sign::Minus : Sign::Plus);
      std::vector<int> p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 1);
      std::iota(q.begin(), q.end(), 1);
      std::shuffle(p.begin(), p.end(), rng);
      std::shuffle(q.begin(), q.end(), rng);
      // (p o q)(a) = p(q(a))
      std::vector<int> pq(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) pq[static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(a)] - 1)];
      EXPECT_EQ(relabel(relabel(s, p), q), relabel(s, pq));
      EXPECT_EQ(relabel(relabel(s, p), inverse_permutation(p)), s);
    }
}
