#pragma once
// k-edge statistics and crossing-number identities.  Integer arithmetic only.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monodraw/classify.hpp"
#include "monodraw/signature.hpp"

namespace monodraw {

/// Z(n) = 1/4 floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2).
constexpr std::int64_t zeta(std::int64_t n) noexcept {
  if (n < 4) return 0;
  return (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4;
}

/// Which side of the directed edge v_i -> v_k the vertex w is on: true for
/// left, i.e. the triangle (i,k,w) traced in that order is counter-clockwise.
///
/// The three position cases, relative to the sorted triple:
///   w < i      : (i,k,w) -> (w,i,k) is a 3-cycle (even), orientation = sigma(w,i,k)
///   i < w < k  : (i,k,w) -> (i,w,k) is a transposition (odd), orientation = -sigma(i,w,k)
///   k < w      : already sorted, orientation = sigma(i,k,w)
/// lambda_matrix and signature_from_lambda use the same rule through
/// SignatureFunction::orient.
inline bool is_left_of(const SignatureFunction& s, int i, int k, int w) noexcept {
  Sign o;
  if (w < i) {
    o = s(w, i, k);
  } else if (w < k) {
    o = negate(s(i, w, k));
  } else {
    o = s(i, k, w);
  }
  return o == Sign::Plus;
}

struct SideCount {
  int left = 0;
  int right = 0;
  bool operator==(const SideCount&) const = default;
};

/// Left/right vertex counts of the edge v_i -> v_k (i < k).
inline SideCount side_count(const SignatureFunction& s, int i, int k) {
  if (!(1 <= i && i < k && k <= s.n())) throw PreconditionError("side_count needs 1 <= i < k <= n");
  require_semisimple(s, "side_count");
  SideCount c;
  for (int w = 1; w <= s.n(); ++w) {
    if (w == i || w == k) continue;
    (is_left_of(s, i, k, w) ? c.left : c.right)++;
  }
  return c;
}

struct EdgeStats {
  int n = 0;
  std::vector<std::int64_t> e_k;     // E_k
  std::vector<std::int64_t> le;      // E_{<=k}
  std::vector<std::int64_t> lele;    // E_{<=<=k}
  std::vector<std::int64_t> lelele;  // E_{<=<=<=k}
  std::int64_t convex_quads = 0;

  /// Cumulative arrays read as zero for negative k and saturate at the top.
  static std::int64_t get(const std::vector<std::int64_t>& v, long k) {
    if (k < 0 || v.empty()) return 0;
    if (k >= static_cast<long>(v.size())) return v.back();
    return v[static_cast<std::size_t>(k)];
  }
};

/// Number of 4-tuples whose form is convex.
inline std::int64_t convex_quad_count(const SignatureFunction& s) {
  require_semisimple(s, "convex_quad_count");
  const int n = s.n();
  std::int64_t count = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) count += kConvexForms[quad_code(s, a, b, c, d)];
  return count;
}

namespace detail {
inline std::vector<std::int64_t> prefix_sums(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(v.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = acc += v[i];
  return out;
}
}  // namespace detail

/// E_k for k = 0..floor(n/2)-1.  Each edge is counted once at
/// k = min(left, right); for even n an edge with left = right = n/2 - 1
/// therefore lands in the last bucket exactly once.
inline EdgeStats k_edge_vector(const SignatureFunction& s) {
  require_semisimple(s, "k_edge_vector");
  const int n = s.n();
  EdgeStats st;
  st.n = n;
  st.e_k.assign(static_cast<std::size_t>(n / 2), 0);
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      int left = 0;
      for (int w = 1; w <= n; ++w)
        if (w != i && w != k && is_left_of(s, i, k, w)) ++left;
      const int right = n - 2 - left;
      st.e_k[static_cast<std::size_t>(std::min(left, right))]++;
    }
  st.le = detail::prefix_sums(st.e_k);
  st.lele = detail::prefix_sums(st.le);
  st.lelele = detail::prefix_sums(st.lele);
  st.convex_quads = convex_quad_count(s);
  return st;
}

struct IdentityReport {
  std::int64_t cr_from_quads = 0;
  std::int64_t cr_from_ek = 0;
  std::int64_t cr_from_lele = 0;
  std::int64_t lelele_compact = 0;
  bool all_equal = false;
};

/// Evaluates the crossing count four ways: convex 4-tuples, the weighted
/// k-edge sum, the <=<=k form and the compact <=<=<=k form.
inline IdentityReport identities_from_stats(const EdgeStats& st) {
  const std::int64_t n = st.n;
  const long h = static_cast<long>(n / 2);
  IdentityReport r;
  r.cr_from_quads = st.convex_quads;

  std::int64_t weighted = 0;
  for (std::size_t k = 0; k < st.e_k.size(); ++k) {
    const std::int64_t kk = static_cast<std::int64_t>(k);
    weighted += kk * (n - 2 - kk) * st.e_k[k];
  }
  r.cr_from_ek = 3 * binom(n, 4) - weighted;

  // 2*cr = 4*sum_{k<=h-2} lele[k] - C(n,2)*floor((n-2)/2) - (1+(-1)^n)*lele[h-2]
  std::int64_t sum = 0;
  for (long k = 0; k <= h - 2; ++k) sum += EdgeStats::get(st.lele, k);
  const std::int64_t parity = (n % 2 == 0) ? 2 : 0;
  const std::int64_t twice = 4 * sum - binom(n, 2) * ((n - 2) / 2) - parity * EdgeStats::get(st.lele, h - 2);
  // An odd value cannot equal an integer crossing count; keep it distinguishable.
  r.cr_from_lele = (twice % 2 == 0) ? twice / 2 : -1;

  if (n % 2 == 1) {
    const std::int64_t num = n * (n - 1) * (n - 3);
    r.lelele_compact = (num % 8 == 0) ? 2 * EdgeStats::get(st.lelele, h - 2) - num / 8 : -1;
  } else {
    const std::int64_t num = n * (n - 1) * (n - 2);
    r.lelele_compact = (num % 8 == 0)
                           ? EdgeStats::get(st.lelele, h - 3) + EdgeStats::get(st.lelele, h - 2) - num / 8
                           : -1;
  }
  r.all_equal = r.cr_from_ek == r.cr_from_quads && r.cr_from_lele == r.cr_from_quads &&
                r.lelele_compact == r.cr_from_quads;
  return r;
}

inline IdentityReport verify_identities(const SignatureFunction& s) {
  if (s.n() < 3) throw PreconditionError("verify_identities needs n >= 3");
  return identities_from_stats(k_edge_vector(s));
}

}  // namespace monodraw
