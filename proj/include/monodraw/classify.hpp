#pragma once
// Forbidden-configuration checks for signature functions.
//
// Each drawing class is described by a 16-entry table keyed by the 4-bit
// QuadForm code (first sign in the high bit, '-' = 1).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "monodraw/signature.hpp"

namespace monodraw {

namespace detail {
constexpr std::array<bool, 16> make_table(std::initializer_list<const char*> forms) {
  std::array<bool, 16> t{};
  for (const char* f : forms) {
    unsigned code = 0;
    for (int i = 0; i < 4; ++i) code = (code << 1) | (f[i] == '-' ? 1U : 0U);
    t[code] = true;
  }
  return t;
}
}  // namespace detail

/// Forms realizable by semisimple x-monotone drawings of K_4.
inline constexpr std::array<bool, 16> kSemisimpleForms = detail::make_table(
    {"++++", "----", "++--", "--++", "-++-", "+--+", "---+", "+++-", "+---", "-+++"});

/// Forms realizable by pseudolinear x-monotone drawings of K_4 (at most one
/// sign change along the sequence).
inline constexpr std::array<bool, 16> kPseudolinearForms = detail::make_table(
    {"++++", "+++-", "++--", "+---", "----", "---+", "--++", "-+++"});

/// Forms whose K_4 has exactly one crossing (odd pair) in a realization.
inline constexpr std::array<bool, 16> kConvexForms =
    detail::make_table({"++++", "----", "++--", "--++", "-++-", "+--+"});

enum class Level { Semisimple, Simple, Pseudolinear };

inline std::string to_string(Level l) {
  switch (l) {
    case Level::Semisimple: return "semisimple";
    case Level::Simple: return "simple";
    case Level::Pseudolinear: return "pseudolinear";
  }
  return "?";
}

inline Level level_from_string(const std::string& s) {
  if (s == "semisimple") return Level::Semisimple;
  if (s == "simple") return Level::Simple;
  if (s == "pseudolinear") return Level::Pseudolinear;
  throw InputError("unknown level '" + s + "'");
}

struct Witness {
  std::vector<int> tuple;   // 4 or 5 increasing indices
  std::vector<Sign> signs;  // quad form, or (s(a,b,e), s(a,d,e), s(b,c,d), s(a,c,e))

  std::string str() const {
    std::string out = "(";
    for (std::size_t t = 0; t < tuple.size(); ++t) {
      if (t) out += ',';
      out += std::to_string(tuple[t]);
    }
    out += tuple.size() == 4 ? ") form " : ") signs ";
    for (Sign s : signs) out += to_char(s);
    return out;
  }
};

struct Verdict {
  bool valid = true;
  std::optional<Witness> witness;
};

/// The 5-tuple obstruction to simplicity: s(a,b,e) = s(a,d,e) = s(b,c,d) != s(a,c,e).
inline bool forbidden_five(const SignatureFunction& s, int a, int b, int c, int d, int e) noexcept {
  const Sign x = s(a, b, e);
  return s(a, d, e) == x && s(b, c, d) == x && s(a, c, e) != x;
}

namespace detail {
inline Verdict check_quads(const SignatureFunction& s, const std::array<bool, 16>& allowed) {
  const int n = s.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const unsigned code = quad_code(s, a, b, c, d);
          if (!allowed[code]) {
            const QuadForm q = QuadForm::from_code(code);
            return {false, Witness{{a, b, c, d}, {q.signs.begin(), q.signs.end()}}};
          }
        }
  return {};
}
}  // namespace detail

/// Valid iff every 4-tuple has one of the ten semisimple forms.  The witness
/// is the lexicographically first forbidden 4-tuple.
inline Verdict check_semisimple(const SignatureFunction& s) {
  return detail::check_quads(s, kSemisimpleForms);
}

/// Semisimple check, then the 5-tuple scan in lexicographic order.
inline Verdict check_simple(const SignatureFunction& s) {
  if (Verdict v = check_semisimple(s); !v.valid) return v;
  const int n = s.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          for (int e = d + 1; e <= n; ++e)
            if (forbidden_five(s, a, b, c, d, e)) {
              return {false, Witness{{a, b, c, d, e}, {s(a, b, e), s(a, d, e), s(b, c, d), s(a, c, e)}}};
            }
  return {};
}

inline Verdict check_pseudolinear(const SignatureFunction& s) {
  return detail::check_quads(s, kPseudolinearForms);
}

inline Verdict check_level(const SignatureFunction& s, Level level) {
  switch (level) {
    case Level::Semisimple: return check_semisimple(s);
    case Level::Simple: return check_simple(s);
    case Level::Pseudolinear: return check_pseudolinear(s);
  }
  return {};
}

/// 2-page book drawability with vertices in their x-order on the spine.
///
/// In a 2-page drawing each edge v_i v_k is a curve in one half-plane, so
/// every v_j with i < j < k lies on the same side of it; conversely, when
/// sigma(i,.,k) is constant for every edge, drawing each edge as a half-circle
/// on the side opposite to its middle vertices reproduces sigma.
inline bool is_two_page(const SignatureFunction& s) {
  const int n = s.n();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 2; k <= n; ++k) {
      const Sign first = s(i, i + 1, k);
      for (int j = i + 2; j < k; ++j)
        if (s(i, j, k) != first) return false;
    }
  return true;
}

inline void require_semisimple(const SignatureFunction& s, const char* op) {
  if (!check_semisimple(s).valid) {
    throw PreconditionError(std::string(op) + " requires a semisimple-valid signature");
  }
}

inline void require_simple(const SignatureFunction& s, const char* op) {
  if (!check_simple(s).valid) {
    throw PreconditionError(std::string(op) + " requires a simple-valid signature");
  }
}

}  // namespace monodraw
