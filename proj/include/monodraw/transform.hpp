#pragma once
// Switching operations on signatures of simple monotone drawings and the
// equivalence classes they generate.

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "monodraw/classify.hpp"
#include "monodraw/signature.hpp"

namespace monodraw {

struct SwitchOp {
  enum class Kind { VerticalReflect, HorizontalReflect, ShiftV1, SwitchConsecutive, FlipV1Vn };
  Kind kind = Kind::VerticalReflect;
  int j = 0;  // only for SwitchConsecutive, 1 <= j <= n-1

  static SwitchOp vertical_reflect() { return {Kind::VerticalReflect, 0}; }
  static SwitchOp horizontal_reflect() { return {Kind::HorizontalReflect, 0}; }
  static SwitchOp shift_v1() { return {Kind::ShiftV1, 0}; }
  static SwitchOp switch_consecutive(int j) { return {Kind::SwitchConsecutive, j}; }
  static SwitchOp flip_v1vn() { return {Kind::FlipV1Vn, 0}; }
};

namespace detail {

inline bool applicable_unchecked(const SignatureFunction& s, const SwitchOp& op) {
  const int n = s.n();
  switch (op.kind) {
    case SwitchOp::Kind::VerticalReflect:
    case SwitchOp::Kind::HorizontalReflect:
      return true;
    case SwitchOp::Kind::ShiftV1:
      // every edge v_1 v_k has all of v_2..v_{k-1} on one side
      for (int k = 3; k <= n; ++k)
        for (int i = 3; i < k; ++i)
          if (s(1, i, k) != s(1, 2, k)) return false;
      return true;
    case SwitchOp::Kind::SwitchConsecutive: {
      const int j = op.j;
      if (j < 1 || j >= n) return false;
      // some xi with s(j,j+1,k) = xi for k > j+1 and s(i,j,j+1) = -xi for i < j
      for (Sign xi : {Sign::Plus, Sign::Minus}) {
        bool ok = true;
        for (int k = j + 2; k <= n && ok; ++k) ok = s(j, j + 1, k) == xi;
        for (int i = 1; i < j && ok; ++i) ok = s(i, j, j + 1) == negate(xi);
        if (ok) return true;
      }
      return false;
    }
    case SwitchOp::Kind::FlipV1Vn:
      for (int i = 3; i < n; ++i)
        if (s(1, i, n) != s(1, 2, n)) return false;
      return true;
  }
  return false;
}

inline SignatureFunction apply_unchecked(const SignatureFunction& s, const SwitchOp& op) {
  const int n = s.n();
  switch (op.kind) {
    case SwitchOp::Kind::VerticalReflect: {
      SignatureFunction out(n);
      for (std::size_t r = 0; r < s.size(); ++r) out.set_rank(r, negate(s.at_rank(r)));
      return out;
    }
    case SwitchOp::Kind::HorizontalReflect: {
      SignatureFunction out(n);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) out.set(i, j, k, s(n + 1 - k, n + 1 - j, n + 1 - i));
      return out;
    }
    case SwitchOp::Kind::ShiftV1: {
      // v_1 travels along the x-axis through the outer face and reappears
      // right of v_n, so old v_{a+1} becomes v_a and old v_1 becomes v_n.
      // Each edge v_1 v_k keeps its side of the axis: afterwards it passes
      // above (or below) every vertex right of v_k, so
      // sigma'(a,b,n) = side of the old edge v_1 v_{a+1}.  The edge v_1 v_2
      // has no vertex under it; it is drawn on the side of v_1 v_3.
      if (n < 3) return s;
      SignatureFunction out(n);
      auto side = [&](int k) { return s(1, k == 2 ? 2 : k - 1, k == 2 ? 3 : k); };
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c)
            out.set(a, b, c, c == n ? side(a + 1) : s(a + 1, b + 1, c + 1));
      return out;
    }
    case SwitchOp::Kind::SwitchConsecutive: {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int a = 1; a <= n; ++a) perm[static_cast<std::size_t>(a - 1)] = a;
      std::swap(perm[static_cast<std::size_t>(op.j - 1)], perm[static_cast<std::size_t>(op.j)]);
      return relabel(s, perm);
    }
    case SwitchOp::Kind::FlipV1Vn: {
      SignatureFunction out = s;
      for (int i = 2; i < n; ++i) out.set(1, i, n, negate(s(1, i, n)));
      return out;
    }
  }
  return s;
}

}  // namespace detail

inline bool applicable(const SignatureFunction& s, const SwitchOp& op) {
  require_simple(s, "applicable");
  return detail::applicable_unchecked(s, op);
}

inline SignatureFunction apply_op(const SignatureFunction& s, const SwitchOp& op) {
  if (!applicable(s, op)) throw PreconditionError("switch operation is not applicable");
  return detail::apply_unchecked(s, op);
}

/// All operations applicable to s.
inline std::vector<SwitchOp> applicable_ops(const SignatureFunction& s) {
  std::vector<SwitchOp> ops{SwitchOp::vertical_reflect(), SwitchOp::horizontal_reflect()};
  if (detail::applicable_unchecked(s, SwitchOp::shift_v1())) ops.push_back(SwitchOp::shift_v1());
  for (int j = 1; j < s.n(); ++j)
    if (detail::applicable_unchecked(s, SwitchOp::switch_consecutive(j))) ops.push_back(SwitchOp::switch_consecutive(j));
  if (detail::applicable_unchecked(s, SwitchOp::flip_v1vn())) ops.push_back(SwitchOp::flip_v1vn());
  return ops;
}

struct EquivClass {
  int n = 0;
  std::vector<std::string> members;  // sorted sign strings
  std::string representative;        // lexicographically smallest, '+' < '-'
  std::size_t dropped_non_simple = 0;  // operation results that failed check_simple
};

/// Breadth-first closure under all applicable operations.  Results that are
/// not simple-valid are dropped and counted.
inline EquivClass equivalence_class(const SignatureFunction& s) {
  require_simple(s, "equivalence_class");
  EquivClass cls;
  cls.n = s.n();
  std::unordered_set<std::string> seen{s.sign_string()};
  std::deque<SignatureFunction> queue{s};
  while (!queue.empty()) {
    const SignatureFunction cur = std::move(queue.front());
    queue.pop_front();
    for (const SwitchOp& op : applicable_ops(cur)) {
      SignatureFunction next = detail::apply_unchecked(cur, op);
      std::string key = next.sign_string();
      if (seen.contains(key)) continue;
      if (!check_simple(next).valid) {
        ++cls.dropped_non_simple;
        continue;
      }
      seen.insert(key);
      queue.push_back(std::move(next));
    }
  }
  cls.members.assign(seen.begin(), seen.end());
  std::sort(cls.members.begin(), cls.members.end());  // '+' (0x2B) sorts before '-' (0x2D)
  cls.representative = cls.members.front();
  return cls;
}

inline SignatureFunction canonical(const SignatureFunction& s) {
  return SignatureFunction::from_string(s.n(), equivalence_class(s).representative);
}

}  // namespace monodraw
