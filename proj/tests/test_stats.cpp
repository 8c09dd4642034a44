#include <gtest/gtest.h>

#include "monodraw/search.hpp"
#include "monodraw/stats.hpp"
#include "oracle.hpp"

using namespace monodraw;

namespace {
SignatureFunction sig(int n, const std::string& s) { return SignatureFunction::from_string(n, s); }

std::int64_t zeta_ref(std::int64_t n) {
  // 1/4 * prod_{t=0..3} floor((n-t)/2), evaluated with an explicit loop
  std::int64_t p = 1;
  for (int t = 0; t < 4; ++t) p *= (n - t) / 2;
  return n < 4 ? 0 : p / 4;
}
}  // namespace

TEST(Zeta, Values) {
  EXPECT_EQ(zeta(3), 0);
  EXPECT_EQ(zeta(5), 1);
  EXPECT_EQ(zeta(6), 3);
  EXPECT_EQ(zeta(7), 9);
  EXPECT_EQ(zeta(8), 18);
  EXPECT_EQ(zeta(9), 36);
  EXPECT_EQ(zeta(10), 60);
  for (int n = 0; n < 40; ++n) EXPECT_EQ(zeta(n), zeta_ref(n));
}

TEST(SideCount, Examples) {
  EXPECT_EQ(side_count(SignatureFunction(3), 1, 3), (SideCount{0, 1}));
  EXPECT_EQ(side_count(SignatureFunction(4), 1, 3), (SideCount{1, 1}));
  EXPECT_EQ(side_count(sig(4, "+++-"), 2, 3), (SideCount{1, 1}));
  EXPECT_THROW(side_count(SignatureFunction(4), 3, 2), PreconditionError);
  EXPECT_THROW(side_count(sig(4, "+-+-"), 1, 2), PreconditionError);
}

TEST(SideCount, AllFourVertexFormsAgainstOracle) {
  oracle::all_strings(4, [&](const std::string& str) {
    const oracle::Sig o(4, str);
    if (!oracle::semisimple(o)) return;
    for (int i = 1; i <= 4; ++i)
      for (int k = i + 1; k <= 4; ++k) {
        const SideCount c = side_count(sig(4, str), i, k);
        EXPECT_EQ(c.left, oracle::left_count(o, i, k)) << str;
        EXPECT_EQ(c.left + c.right, 2);
      }
  });
}

TEST(KEdges, Examples) {
  const EdgeStats planar = k_edge_vector(sig(4, "+++-"));
  EXPECT_EQ(planar.e_k, (std::vector<std::int64_t>{3, 3}));
  EXPECT_EQ(planar.convex_quads, 0);
  const EdgeStats convex = k_edge_vector(SignatureFunction(4));
  EXPECT_EQ(convex.e_k, (std::vector<std::int64_t>{4, 2}));
  EXPECT_EQ(convex.convex_quads, 1);
  EXPECT_EQ(k_edge_vector(sig(3, "-")).e_k, (std::vector<std::int64_t>{3}));
  const EdgeStats five = k_edge_vector(SignatureFunction(5));
  EXPECT_EQ(five.e_k, (std::vector<std::int64_t>{5, 5}));
  EXPECT_EQ(five.convex_quads, 5);
}

TEST(KEdges, CumulativeArraysByDirectSummation) {
  const EdgeStats st = k_edge_vector(SignatureFunction(9));
  for (std::size_t k = 0; k < st.e_k.size(); ++k) {
    std::int64_t le = 0, lele = 0, lelele = 0;
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = 0; b <= a; ++b)
        for (std::size_t c = 0; c <= b; ++c) lelele += st.e_k[c];
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = 0; b <= a; ++b) lele += st.e_k[b];
    for (std::size_t a = 0; a <= k; ++a) le += st.e_k[a];
    EXPECT_EQ(st.le[k], le);
    EXPECT_EQ(st.lele[k], lele);
    EXPECT_EQ(st.lelele[k], lelele);
    // weighted form: E_{<=<=<=k} = sum_i C(k+2-i, 2) E_i
    std::int64_t w = 0;
    for (std::size_t i = 0; i <= k; ++i) w += oracle::binom(static_cast<std::int64_t>(k + 2 - i), 2) * st.e_k[i];
    EXPECT_EQ(st.lelele[k], w);
  }
  EXPECT_EQ(EdgeStats::get(st.lele, -1), 0);
}

TEST(ConvexCount, AllPlusIsBinomial) {
  for (int n = 1; n <= 11; ++n) EXPECT_EQ(convex_quad_count(SignatureFunction(n)), binom(n, 4));
}

TEST(Identities, Examples) {
  const IdentityReport r4 = verify_identities(SignatureFunction(4));
  EXPECT_EQ(r4.cr_from_quads, 1);
  EXPECT_EQ(r4.cr_from_ek, 1);
  EXPECT_TRUE(r4.all_equal);
  const IdentityReport r5 = verify_identities(SignatureFunction(5));
  EXPECT_EQ(r5.cr_from_ek, 5);
  EXPECT_TRUE(r5.all_equal);
  EXPECT_THROW(verify_identities(SignatureFunction(2)), PreconditionError);
}

TEST(Identities, ExhaustiveUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    SearchConfig cfg;
    cfg.n = n;
    cfg.level = Level::Semisimple;
    std::uint64_t count = 0;
    enumerate_valid(cfg, [&](const SignatureFunction& s) {
      ++count;
      const EdgeStats st = k_edge_vector(s);
      const oracle::Sig o(n, s.sign_string());
      ASSERT_EQ(st.e_k, oracle::ek(o));
      ASSERT_EQ(st.convex_quads, oracle::convex(o));
      std::int64_t sum = 0;
      for (auto e : st.e_k) sum += e;
      ASSERT_EQ(sum, binom(n, 2));
      const IdentityReport r = identities_from_stats(st);
      ASSERT_TRUE(r.all_equal) << s.sign_string() << " " << r.cr_from_quads << " " << r.cr_from_ek << " "
                               << r.cr_from_lele << " " << r.lelele_compact;
    });
    EXPECT_GT(count, 0U);
  }
}
