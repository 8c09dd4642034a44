#pragma once
// Signature functions of x-monotone drawings of K_n.
//
// A signature function assigns a sign to every increasing vertex triple
// (i,j,k), 1 <= i < j < k <= n.  sigma(i,j,k) = '-' iff v_j lies above the
// edge v_i v_k; for semisimple drawings '+' also means the triangle
// v_i v_j v_k is oriented counter-clockwise.  All indices are 1-based.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monodraw {

/// Base exception for malformed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation is called outside its domain (e.g. a signature
/// that is not semisimple-valid).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Sign negate(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

inline Sign sign_from_char(char c) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  throw InputError(std::string("invalid sign character '") + c + "'");
}

/// Exact binomial coefficient; zero when k < 0 or k > n.
constexpr std::int64_t binom(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Position of the triple (i,j,k), 1 <= i < j < k <= n, in lexicographic
/// order.  With zero-based a=i-1, b=j-1, c=k-1:
///   rank = [C(n,3) - C(n-a,3)]          triples whose first index is < a
///        + [C(n-a-1,2) - C(n-b,2)]      same first index, second < b
///        + (c - b - 1)                  same first two, third < c
constexpr std::size_t triple_rank(int n, int i, int j, int k) noexcept {
  const std::int64_t a = i - 1, b = j - 1, c = k - 1;
  return static_cast<std::size_t>(binom(n, 3) - binom(n - a, 3) + binom(n - a - 1, 2) -
                                  binom(n - b, 2) + (c - b - 1));
}

class SignatureFunction {
 public:
  SignatureFunction() = default;

  explicit SignatureFunction(int n, Sign fill = Sign::Plus) : n_(n) {
    if (n < 1) throw InputError("vertex count must be >= 1");
    signs_.assign(static_cast<std::size_t>(binom(n, 3)), fill);
  }

  /// Builds from a sign string in lexicographic triple order.
  static SignatureFunction from_string(int n, std::string_view signs) {
    SignatureFunction s(n);
    if (static_cast<std::int64_t>(signs.size()) != binom(n, 3)) {
      throw InputError("sign string length " + std::to_string(signs.size()) + " != C(" +
                       std::to_string(n) + ",3) = " + std::to_string(binom(n, 3)));
    }
    for (std::size_t r = 0; r < signs.size(); ++r) s.signs_[r] = sign_from_char(signs[r]);
    return s;
  }

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return signs_.size(); }

  /// sigma(i,j,k) for i < j < k.
  Sign operator()(int i, int j, int k) const noexcept { return signs_[triple_rank(n_, i, j, k)]; }

  void set(int i, int j, int k, Sign s) noexcept { signs_[triple_rank(n_, i, j, k)] = s; }

  Sign at_rank(std::size_t r) const noexcept { return signs_[r]; }
  void set_rank(std::size_t r, Sign s) noexcept { signs_[r] = s; }

  /// Orientation of the ordered triple (a,b,c) of distinct indices: the sign
  /// of the sorted triple, negated when the sorting permutation is odd.
  Sign orient(int a, int b, int c) const noexcept {
    bool odd = false;
    if (a > b) { std::swap(a, b); odd = !odd; }
    if (b > c) { std::swap(b, c); odd = !odd; }
    if (a > b) { std::swap(a, b); odd = !odd; }
    const Sign s = (*this)(a, b, c);
    return odd ? negate(s) : s;
  }

  std::string sign_string() const {
    std::string out(signs_.size(), '+');
    for (std::size_t r = 0; r < signs_.size(); ++r) out[r] = to_char(signs_[r]);
    return out;
  }

  bool operator==(const SignatureFunction&) const = default;
  auto operator<=>(const SignatureFunction& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return signs_ <=> o.signs_;
  }

 private:
  int n_ = 0;
  std::vector<Sign> signs_;
};

/// The signs (sigma(a,b,c), sigma(a,b,d), sigma(a,c,d), sigma(b,c,d)).
struct QuadForm {
  std::array<Sign, 4> signs{};

  /// 4-bit key, first sign in the most significant bit, '-' = 1.
  unsigned code() const noexcept {
    return (static_cast<unsigned>(signs[0]) << 3) | (static_cast<unsigned>(signs[1]) << 2) |
           (static_cast<unsigned>(signs[2]) << 1) | static_cast<unsigned>(signs[3]);
  }
  static QuadForm from_code(unsigned code) noexcept {
    QuadForm q;
    for (int t = 0; t < 4; ++t) q.signs[t] = static_cast<Sign>((code >> (3 - t)) & 1U);
    return q;
  }
  std::string str() const {
    std::string s;
    for (Sign x : signs) s += to_char(x);
    return s;
  }
  bool operator==(const QuadForm&) const = default;
};

/// Form code from the four signs without building a QuadForm.
inline unsigned quad_code(const SignatureFunction& s, int a, int b, int c, int d) noexcept {
  return (static_cast<unsigned>(s(a, b, c)) << 3) | (static_cast<unsigned>(s(a, b, d)) << 2) |
         (static_cast<unsigned>(s(a, c, d)) << 1) | static_cast<unsigned>(s(b, c, d));
}

inline QuadForm quad_form(const SignatureFunction& s, int a, int b, int c, int d) {
  if (!(1 <= a && a < b && b < c && c < d && d <= s.n())) {
    throw PreconditionError("quad_form needs 1 <= a < b < c < d <= n");
  }
  return QuadForm{{s(a, b, c), s(a, b, d), s(a, c, d), s(b, c, d)}};
}

/// Checks that perm (values 1..n) is a bijection.
inline void require_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation of [n]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

/// relabel(sigma, pi): new vertex a plays the role of old vertex pi(a).
/// sigma'(a,b,c) = orientation of the old ordered triple (pi(a),pi(b),pi(c)).
/// perm[a-1] = pi(a).  Composition: relabel(relabel(s, p), q) = relabel(s, p o q).
inline SignatureFunction relabel(const SignatureFunction& s, std::span<const int> perm) {
  const int n = s.n();
  require_permutation(perm, n);
  SignatureFunction out(n);
  std::size_t r = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        out.set_rank(r++, s.orient(perm[a - 1], perm[b - 1], perm[c - 1]));
  return out;
}

inline std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) inv[static_cast<std::size_t>(perm[a] - 1)] = static_cast<int>(a) + 1;
  return inv;
}

// ---------------------------------------------------------------------------
// SIG text format
//
//   sig v1\n
//   n <n>\n
//   <C(n,3) characters from {+,-}>\n
//
// A trailing line feed is optional on input and always written on output.

inline std::string emit_signature(const SignatureFunction& s) {
  return "sig v1\nn " + std::to_string(s.n()) + "\n" + s.sign_string() + "\n";
}

inline SignatureFunction parse_signature(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  // "a\nb\nc\n" splits into four pieces, the last one empty.
  if (lines.size() == 4 && lines[3].empty()) lines.pop_back();
  if (lines.size() != 3) throw InputError("SIG: expected exactly three lines");
  if (lines[0] != "sig v1") throw InputError("SIG: bad header line");
  if (lines[1].substr(0, 2) != "n ") throw InputError("SIG: expected 'n <count>'");
  const std::string_view num = lines[1].substr(2);
  if (num.empty() || num.size() > 4 ||
      !std::all_of(num.begin(), num.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("SIG: bad vertex count");
  }
  const int n = std::stoi(std::string(num));
  if (n < 1) throw InputError("SIG: vertex count must be >= 1");
  return SignatureFunction::from_string(n, lines[2]);
}

}  // namespace monodraw
