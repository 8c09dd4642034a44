#pragma once
// Order-type-level shellability and lambda matrices.
//
// A vertex order is a sequence (w_1, ..., w_n) of the vertices; the
// relabeled signature puts old vertex w_a at position a.  Shellability is
// decided at the order-type level only: the relabeled signature must avoid
// the forms +-+x, -+-x, x+-+, x-+- on every 4-tuple, which is exactly the
// semisimple form table.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monodraw/classify.hpp"
#include "monodraw/signature.hpp"

namespace monodraw {

/// True iff listing the vertices in `order` (order[a-1] = old vertex at new
/// position a) gives a semisimple-valid signature.  For relabel(sigma, p)
/// the order inverse_permutation(p) always succeeds.
inline bool is_shellable_order(const SignatureFunction& s, std::span<const int> order) {
  require_semisimple(s, "is_shellable_order");
  return check_semisimple(relabel(s, order)).valid;
}

/// Lexicographically first shellable order, by backtracking over vertex
/// placements.  A partial order is abandoned as soon as the newest vertex
/// closes a forbidden 4-tuple.
inline std::optional<std::vector<int>> find_shelling_order(const SignatureFunction& s) {
  require_semisimple(s, "find_shelling_order");
  const int n = s.n();
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto last_ok = [&] {
    const int t = static_cast<int>(order.size());
    const int d = order[static_cast<std::size_t>(t - 1)];
    for (int a = 0; a < t - 1; ++a)
      for (int b = a + 1; b < t - 1; ++b)
        for (int c = b + 1; c < t - 1; ++c) {
          const int va = order[static_cast<std::size_t>(a)], vb = order[static_cast<std::size_t>(b)],
                    vc = order[static_cast<std::size_t>(c)];
          const QuadForm q{{s.orient(va, vb, vc), s.orient(va, vb, d), s.orient(va, vc, d), s.orient(vb, vc, d)}};
          if (!kSemisimpleForms[q.code()]) return false;
        }
    return true;
  };
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(order.size()) == n) return true;
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      order.push_back(v);
      used[static_cast<std::size_t>(v)] = true;
      if (last_ok() && self(self)) return true;
      used[static_cast<std::size_t>(v)] = false;
      order.pop_back();
    }
    return false;
  };
  if (rec(rec)) return order;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lambda matrices

struct LambdaMatrix {
  int n = 0;
  std::vector<std::vector<int>> lam;  // 0-based storage, lam[i-1][j-1]

  int operator()(int i, int j) const { return lam[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  bool operator==(const LambdaMatrix&) const = default;
};

/// lam(i,j) = number of l with the ordered triangle (i,j,l) counter-clockwise.
inline LambdaMatrix lambda_matrix(const SignatureFunction& s) {
  require_semisimple(s, "lambda_matrix");
  const int n = s.n();
  LambdaMatrix m{n, std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0))};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int c = 0;
      for (int l = 1; l <= n; ++l)
        if (l != i && l != j && s.orient(i, j, l) == Sign::Plus) ++c;
      m.lam[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = c;
    }
  return m;
}

/// Shape checks: square, zero diagonal, 0 <= lam <= n-2, lam(i,j)+lam(j,i) = n-2.
inline void validate_lambda_shape(const LambdaMatrix& m) {
  if (m.n < 1) throw InputError("lambda: n must be >= 1");
  if (static_cast<int>(m.lam.size()) != m.n) throw InputError("lambda: wrong number of rows");
  for (int i = 1; i <= m.n; ++i) {
    if (static_cast<int>(m.lam[static_cast<std::size_t>(i - 1)].size()) != m.n) throw InputError("lambda: ragged row");
    for (int j = 1; j <= m.n; ++j) {
      const int v = m(i, j);
      if (i == j) {
        if (v != 0) throw InputError("lambda: nonzero diagonal");
        continue;
      }
      if (v < 0 || v > m.n - 2) throw InputError("lambda: entry out of range");
      if (v + m(j, i) != m.n - 2) throw InputError("lambda: lam(i,j) + lam(j,i) != n-2");
    }
  }
}

namespace detail {
/// Sets the sorted triple so that the ordered triple (a,b,c) has orientation o.
/// Relative to the sorted triple (x<y<z) the ordered triple is an even or odd
/// permutation; the three placements of c are
///   c greatest        : (a,b,c) sorted iff a<b, odd iff a>b
///   c between a and b : one transposition away from sorted order
///   c least           : (c,a,b) is a 3-cycle of (a,b,c) -- even iff a<b
/// and the general rule is the same one SignatureFunction::orient uses.
inline void set_orientation(SignatureFunction& s, int a, int b, int c, Sign o) {
  bool odd = false;
  if (a > b) { std::swap(a, b); odd = !odd; }
  if (b > c) { std::swap(b, c); odd = !odd; }
  if (a > b) { std::swap(a, b); odd = !odd; }
  s.set(a, b, c, odd ? negate(o) : o);
}
}  // namespace detail

/// Rebuilds the signature from its lambda matrix by peeling 0-edges.
///
/// If lam(i,j) = 0 on the remaining triangles, every remaining triangle
/// (i,j,l) is clockwise in that order, i.e. (j,i,l) is counter-clockwise.
/// Removing it lowers by one each lambda entry it was counted in: the
/// counter-clockwise rotations (j,i,l), (i,l,j), (l,j,i), i.e. lam(j,i),
/// lam(i,l) and lam(l,j).  Throws InputError when no 0-edge with a remaining
/// triangle exists, or when the result does not reproduce the matrix.
inline SignatureFunction signature_from_lambda(const LambdaMatrix& m) {
  validate_lambda_shape(m);
  const int n = m.n;
  SignatureFunction s(n);
  if (n < 3) return s;
  auto lam = m.lam;
  auto L = [&](int i, int j) -> int& { return lam[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
  std::vector<bool> fixed(s.size(), false);
  // remaining[i][j]: unfixed triangles on the edge {i,j}
  std::vector<std::vector<int>> remaining(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, n - 2));
  std::size_t left = s.size();
  while (left > 0) {
    int pi = 0, pj = 0;
    for (int i = 1; i <= n && !pi; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && L(i, j) == 0 && remaining[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0) {
          pi = i;
          pj = j;
          break;
        }
    if (!pi) throw InputError("lambda: no 0-edge left; not the matrix of a semisimple signature");
    for (int l = 1; l <= n; ++l) {
      if (l == pi || l == pj) continue;
      int x = pi, y = pj, z = l;
      if (x > y) std::swap(x, y);
      if (y > z) std::swap(y, z);
      if (x > y) std::swap(x, y);
      const std::size_t r = triple_rank(n, x, y, z);
      if (fixed[r]) continue;
      fixed[r] = true;
      --left;
      detail::set_orientation(s, pj, pi, l, Sign::Plus);
      for (auto [a, b] : {std::pair{pj, pi}, std::pair{pi, l}, std::pair{l, pj}}) {
        if (--L(a, b) < 0) throw InputError("lambda: inconsistent matrix");
      }
      for (auto [a, b] : {std::pair{pi, pj}, std::pair{pi, l}, std::pair{pj, l}}) {
        --remaining[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        --remaining[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      }
    }
  }
  if (!check_semisimple(s).valid || !(lambda_matrix(s) == m)) {
    throw InputError("lambda: matrix is not realized by a semisimple signature");
  }
  return s;
}

// ---------------------------------------------------------------------------
// LAM text format
//
//   lam v1\n
//   n <n>\n
//   n rows of n space-separated integers\n

inline std::string emit_lambda(const LambdaMatrix& m) {
  std::ostringstream o;
  o << "lam v1\nn " << m.n << '\n';
  for (const auto& row : m.lam) {
    for (std::size_t j = 0; j < row.size(); ++j) o << (j ? " " : "") << row[j];
    o << '\n';
  }
  return o.str();
}

inline LambdaMatrix parse_lambda(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "lam v1") throw InputError("LAM: bad header line");
  if (!std::getline(in, line) || line.rfind("n ", 0) != 0) throw InputError("LAM: expected 'n <count>'");
  LambdaMatrix m;
  {
    std::istringstream h(line.substr(2));
    std::string rest;
    if (!(h >> m.n) || (h >> rest) || m.n < 1 || m.n > 1000) throw InputError("LAM: bad vertex count");
  }
  for (int i = 0; i < m.n; ++i) {
    if (!std::getline(in, line)) throw InputError("LAM: missing rows");
    std::istringstream r(line);
    std::vector<int> row;
    std::string tok;
    while (r >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InputError("LAM: bad entry '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("LAM: bad entry '" + tok + "'");
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != m.n) throw InputError("LAM: row has wrong length");
    m.lam.push_back(std::move(row));
  }
  while (std::getline(in, line))
    if (!line.empty()) throw InputError("LAM: trailing content");
  validate_lambda_shape(m);
  return m;
}

}  // namespace monodraw
