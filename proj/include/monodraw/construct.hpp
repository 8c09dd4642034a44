#pragma once
// Explicit x-monotone polyline drawings realizing a semisimple signature.
//
// Vertices sit at (m, 0).  For each m, L_m is the vertical line x = m.  The
// sweep builds the bottom-to-top order prec_m of the edges alive between
// L_{m-1} and L_m from prec_{m-1} and the order of right edges at v_{m-1}.
// Every edge is then drawn as a polyline with one bend on each L_m it
// passes: edges passing below v_m get y = -1, -2, ... (topmost first),
// edges passing above get y = 1, 2, ... (bottommost first).  Between two
// consecutive lines each edge is a straight segment, so two edges cross in a
// slab exactly when their relative order flips; edges sharing an endpoint
// on the slab boundary only touch there.
//
// Crossing counts are computed from the polylines alone (drawing_crossings),
// which makes them an independent check of the sweep.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "monodraw/classify.hpp"
#include "monodraw/signature.hpp"

namespace monodraw {

/// Edge {u,v} with u < v.
using Edge = std::pair<int, int>;

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

struct EdgePolyline {
  Edge edge;
  std::vector<Point> points;  // strictly increasing x
};

struct Drawing {
  int n = 0;
  std::vector<Point> vertices;                  // vertices[m-1] = v_m
  std::vector<std::vector<Edge>> slab_orders;   // [m] = prec_m, bottom to top (m >= 2)
  std::vector<std::vector<Edge>> below_vertex;  // [m] = edges passing below v_m, bottom to top
  std::vector<std::vector<Edge>> above_vertex;  // [m] = edges passing above v_m, bottom to top
  std::vector<EdgePolyline> polylines;          // lexicographic edge order

  const EdgePolyline& polyline(int u, int v) const {
    for (const auto& p : polylines)
      if (p.edge == Edge{u, v}) return p;
    throw InputError("drawing has no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
};

struct CrossingReport {
  std::int64_t total_crossings = 0;
  std::vector<std::pair<Edge, Edge>> adjacent_pairs_crossing;
  /// Crossing count of every pair of independent edges (parity = count % 2).
  std::map<std::pair<Edge, Edge>, int> independent_pair_crossings;
  std::vector<Point> crossing_points;

  bool pair_parity_odd(Edge e, Edge f) const {
    if (f < e) std::swap(e, f);
    auto it = independent_pair_crossings.find({e, f});
    return it != independent_pair_crossings.end() && it->second % 2 == 1;
  }
};

namespace detail {

/// Right edges at v_i, bottom to top: (i,j) below (i,k) iff
/// (j < k and sigma(i,j,k) = +) or (k < j and sigma(i,k,j) = -).
inline std::vector<Edge> right_edge_order(const SignatureFunction& s, int i) {
  const int n = s.n();
  std::vector<Edge> out(static_cast<std::size_t>(n - i));
  std::vector<bool> used(out.size(), false);
  for (int j = i + 1; j <= n; ++j) {
    std::size_t rank = 0;
    for (int k = i + 1; k <= n; ++k) {
      if (k == j) continue;
      const bool k_below_j = (k < j) ? s(i, k, j) == Sign::Plus : s(i, j, k) == Sign::Minus;
      rank += k_below_j;
    }
    if (used[rank]) throw PreconditionError("right-edge order is not transitive");
    used[rank] = true;
    out[rank] = {i, j};
  }
  return out;
}

inline double y_at(const std::vector<Point>& pts, double x) {
  for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
    const Point& a = pts[t];
    const Point& b = pts[t + 1];
    if (x >= a.x && x <= b.x) {
      if (x == a.x) return a.y;
      if (x == b.x) return b.y;
      return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    }
  }
  throw InputError("x outside polyline domain");
}

inline void validate_polylines(const Drawing& d) {
  for (const auto& pl : d.polylines) {
    const auto [u, v] = pl.edge;
    if (!(1 <= u && u < v && v <= d.n)) throw InputError("edge endpoints out of range");
    if (pl.points.size() < 2) throw InputError("polyline needs at least two points");
    for (std::size_t t = 0; t + 1 < pl.points.size(); ++t)
      if (!(pl.points[t].x < pl.points[t + 1].x)) throw InputError("polyline is not x-monotone");
    if (!(pl.points.front() == d.vertices[static_cast<std::size_t>(u - 1)]) ||
        !(pl.points.back() == d.vertices[static_cast<std::size_t>(v - 1)])) {
      throw InputError("polyline does not join its endpoints");
    }
  }
}

}  // namespace detail

/// Builds the sweep orders and polylines for a semisimple-valid signature.
inline Drawing realize(const SignatureFunction& s) {
  require_semisimple(s, "realize");
  const int n = s.n();
  Drawing d;
  d.n = n;
  for (int m = 1; m <= n; ++m) d.vertices.push_back({static_cast<double>(m), 0.0});
  d.slab_orders.assign(static_cast<std::size_t>(n) + 1, {});
  d.below_vertex.assign(static_cast<std::size_t>(n) + 1, {});
  d.above_vertex.assign(static_cast<std::size_t>(n) + 1, {});

  if (n >= 2) d.slab_orders[2] = detail::right_edge_order(s, 1);
  for (int m = 3; m <= n; ++m) {
    std::array<std::vector<Edge>, 6> sets;
    for (const Edge& e : d.slab_orders[static_cast<std::size_t>(m - 1)]) {
      const auto [i, j] = e;
      if (j == m - 1) continue;  // ends at v_{m-1}
      const bool above_prev = s(i, m - 1, j) == Sign::Plus;
      const bool above_cur = j > m && s(i, m, j) == Sign::Plus;
      if (j == m) {
        sets[above_prev ? 2 : 3].push_back(e);
      } else if (!above_prev) {
        sets[above_cur ? 3 : 0].push_back(e);
      } else {
        sets[above_cur ? 5 : 2].push_back(e);
      }
    }
    std::vector<Edge> starters;
    for (const Edge& e : detail::right_edge_order(s, m - 1)) {
      if (e.second == m) {
        starters.push_back(e);  // (m-1, m): runs along the axis
      } else {
        sets[s(m - 1, m, e.second) == Sign::Plus ? 4 : 1].push_back(e);
      }
    }
    auto& order = d.slab_orders[static_cast<std::size_t>(m)];
    for (int t = 0; t < 6; ++t) {
      order.insert(order.end(), sets[static_cast<std::size_t>(t)].begin(), sets[static_cast<std::size_t>(t)].end());
      if (t == 2) order.insert(order.end(), starters.begin(), starters.end());
    }
  }

  // Split prec_m at v_m into the passing groups.
  for (int m = 2; m < n; ++m) {
    bool seen_above = false;
    for (const Edge& e : d.slab_orders[static_cast<std::size_t>(m)]) {
      if (e.second == m) continue;
      if (s(e.first, m, e.second) == Sign::Plus) {
        seen_above = true;
        d.above_vertex[static_cast<std::size_t>(m)].push_back(e);
      } else {
        if (seen_above) throw std::logic_error("realize: passing groups interleave at a vertex");
        d.below_vertex[static_cast<std::size_t>(m)].push_back(e);
      }
    }
  }

  std::map<Edge, std::vector<Point>> pts;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pts[{u, v}].push_back({static_cast<double>(u), 0.0});
  for (int m = 2; m < n; ++m) {
    const auto& below = d.below_vertex[static_cast<std::size_t>(m)];
    const auto& above = d.above_vertex[static_cast<std::size_t>(m)];
    for (std::size_t t = 0; t < below.size(); ++t)
      pts[below[t]].push_back({static_cast<double>(m), -static_cast<double>(below.size() - t)});
    for (std::size_t t = 0; t < above.size(); ++t)
      pts[above[t]].push_back({static_cast<double>(m), static_cast<double>(t + 1)});
  }
  for (auto& [e, p] : pts) {
    p.push_back({static_cast<double>(e.second), 0.0});
    d.polylines.push_back({e, std::move(p)});
  }
  return d;
}

/// Counts crossings from the polylines only.  For every pair of edges the
/// sign of their vertical distance is sampled at every bend abscissa in
/// their common x-range; each sign change between nonzero samples is one
/// crossing (a zero sample is a touch at a shared vertex or a crossing
/// exactly on the sample line).
inline CrossingReport drawing_crossings(const Drawing& d) {
  detail::validate_polylines(d);
  std::vector<double> xs;
  for (const auto& pl : d.polylines)
    for (const Point& p : pl.points) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Sampled y per edge per global abscissa.
  const std::size_t E = d.polylines.size();
  std::vector<std::vector<std::optional<double>>> ys(E, std::vector<std::optional<double>>(xs.size()));
  for (std::size_t e = 0; e < E; ++e) {
    const auto& p = d.polylines[e].points;
    for (std::size_t t = 0; t < xs.size(); ++t)
      if (xs[t] >= p.front().x && xs[t] <= p.back().x) ys[e][t] = detail::y_at(p, xs[t]);
  }

  CrossingReport rep;
  for (std::size_t a = 0; a < E; ++a)
    for (std::size_t b = a + 1; b < E; ++b) {
      const Edge ea = d.polylines[a].edge;
      const Edge eb = d.polylines[b].edge;
      int count = 0;
      int last_sign = 0;
      std::size_t last_t = 0;
      std::optional<std::size_t> zero_t;
      for (std::size_t t = 0; t < xs.size(); ++t) {
        if (!ys[a][t] || !ys[b][t]) continue;
        const double diff = *ys[a][t] - *ys[b][t];
        if (diff == 0) {
          zero_t = t;
          continue;
        }
        const int sg = diff > 0 ? 1 : -1;
        if (last_sign != 0 && sg != last_sign) {
          ++count;
          if (zero_t && *zero_t > last_t) {
            rep.crossing_points.push_back({xs[*zero_t], *ys[a][*zero_t]});
          } else {
            const double d0 = *ys[a][last_t] - *ys[b][last_t];
            const double f = d0 / (d0 - diff);
            const double x = xs[last_t] + f * (xs[t] - xs[last_t]);
            const double y = *ys[a][last_t] + f * (*ys[a][t] - *ys[a][last_t]);
            rep.crossing_points.push_back({x, y});
          }
        }
        last_sign = sg;
        last_t = t;
        zero_t.reset();
      }
      if (count == 0) continue;
      rep.total_crossings += count;
      const bool adjacent = ea.first == eb.first || ea.first == eb.second || ea.second == eb.first ||
                            ea.second == eb.second;
      if (adjacent) {
        rep.adjacent_pairs_crossing.push_back({ea, eb});
      } else {
        rep.independent_pair_crossings[{std::min(ea, eb), std::max(ea, eb)}] = count;
      }
    }
  return rep;
}

/// Reads sigma back off the drawing: sigma(i,j,k) = '-' iff v_j lies above
/// the polyline of (i,k) at x(v_j).
inline SignatureFunction read_signature(const Drawing& d) {
  SignatureFunction s(d.n);
  for (int i = 1; i <= d.n; ++i)
    for (int k = i + 2; k <= d.n; ++k) {
      const auto& pl = d.polyline(i, k).points;
      for (int j = i + 1; j < k; ++j) {
        const Point& v = d.vertices[static_cast<std::size_t>(j - 1)];
        const double y = detail::y_at(pl, v.x);
        if (y == v.y) throw InputError("edge passes through a vertex");
        s.set(i, j, k, y < v.y ? Sign::Minus : Sign::Plus);
      }
    }
  return s;
}

// ---------------------------------------------------------------------------
// Geometric queries

namespace detail {

inline bool on_segment(Point p, Point a, Point b, double eps) {
  const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  if (std::abs(cross) > eps * len) return false;
  return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
         p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

inline bool on_any_polyline(const Drawing& d, Point p, double eps) {
  for (const auto& pl : d.polylines)
    for (std::size_t t = 0; t + 1 < pl.points.size(); ++t)
      if (on_segment(p, pl.points[t], pl.points[t + 1], eps)) return true;
  return false;
}

/// Even-odd test against a closed polygon.
inline bool inside_polygon(const std::vector<Point>& poly, Point p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

inline std::vector<Point> triangle_boundary(const Drawing& d, int a, int b, int c) {
  std::vector<Point> poly;
  const auto& ab = d.polyline(a, b).points;
  const auto& bc = d.polyline(b, c).points;
  const auto& ac = d.polyline(a, c).points;
  poly.insert(poly.end(), ab.begin(), ab.end() - 1);
  poly.insert(poly.end(), bc.begin(), bc.end() - 1);
  poly.insert(poly.end(), ac.rbegin(), ac.rend() - 1);
  return poly;
}

}  // namespace detail

inline constexpr double kGeomEps = 1e-9;
inline constexpr double kPerturb = 1e-6;

/// Some vertex triple whose triangle contains p, or nothing when p is in the
/// outer face.  Brute force over all triangles.  A query point lying on a
/// polyline is moved up by kPerturb once before giving up.
inline std::optional<std::array<int, 3>> containing_triangle(const Drawing& d, Point p) {
  if (detail::on_any_polyline(d, p, kGeomEps)) {
    p.y += kPerturb;
    if (detail::on_any_polyline(d, p, kGeomEps)) throw InputError("query point lies on an edge");
  }
  for (int a = 1; a <= d.n; ++a)
    for (int b = a + 1; b <= d.n; ++b)
      for (int c = b + 1; c <= d.n; ++c)
        if (detail::inside_polygon(detail::triangle_boundary(d, a, b, c), p)) {
          return std::array<int, 3>{a, b, c};
        }
  return std::nullopt;
}

/// Outer-face test by vertical ray casting: p is outside iff the upward or
/// the downward ray from p meets no edge.
inline bool in_outer_face(const Drawing& d, Point p) {
  int up = 0;
  int down = 0;
  for (const auto& pl : d.polylines) {
    const auto& pts = pl.points;
    if (p.x < pts.front().x || p.x > pts.back().x) continue;
    const double y = detail::y_at(pts, p.x);
    (y > p.y ? up : down)++;
  }
  return up == 0 || down == 0;
}

// ---------------------------------------------------------------------------
// Export

namespace detail {
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}
}  // namespace detail

struct SvgOptions {
  double x_scale = 80.0;
  double y_scale = 24.0;
  double margin = 30.0;
  bool mark_crossings = true;
};

/// Standalone SVG: vertices are labeled circles, edges are polylines and each
/// crossing is an X-shaped path of class "crossing".
inline std::string to_svg(const Drawing& d, const SvgOptions& opt = {}) {
  double ymin = 0, ymax = 0;
  for (const auto& pl : d.polylines)
    for (const Point& p : pl.points) {
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  const double width = (std::max(d.n, 1) - 1) * opt.x_scale + 2 * opt.margin;
  const double height = (ymax - ymin) * opt.y_scale + 2 * opt.margin;
  auto X = [&](double x) { return opt.margin + (x - 1) * opt.x_scale; };
  auto Y = [&](double y) { return opt.margin + (ymax - y) * opt.y_scale; };
  using detail::fmt;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<g fill=\"none\" stroke=\"#336\" stroke-width=\"1.2\">\n";
  for (const auto& pl : d.polylines) {
    out += "<polyline data-edge=\"" + std::to_string(pl.edge.first) + "-" + std::to_string(pl.edge.second) +
           "\" points=\"";
    for (std::size_t t = 0; t < pl.points.size(); ++t) {
      if (t) out += ' ';
      out += fmt(X(pl.points[t].x)) + "," + fmt(Y(pl.points[t].y));
    }
    out += "\"/>\n";
  }
  out += "</g>\n";
  if (opt.mark_crossings) {
    const CrossingReport rep = drawing_crossings(d);
    out += "<g stroke=\"#c00\" stroke-width=\"1.5\">\n";
    for (const Point& c : rep.crossing_points) {
      const double cx = X(c.x), cy = Y(c.y);
      out += "<path class=\"crossing\" d=\"M" + fmt(cx - 3) + " " + fmt(cy - 3) + " L" + fmt(cx + 3) + " " +
             fmt(cy + 3) + " M" + fmt(cx - 3) + " " + fmt(cy + 3) + " L" + fmt(cx + 3) + " " + fmt(cy - 3) +
             "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n";
  for (int m = 1; m <= d.n; ++m) {
    const Point& v = d.vertices[static_cast<std::size_t>(m - 1)];
    out += "<circle cx=\"" + fmt(X(v.x)) + "\" cy=\"" + fmt(Y(v.y)) + "\" r=\"7\" fill=\"#fff\" stroke=\"#000\"/>\n";
    out += "<text x=\"" + fmt(X(v.x)) + "\" y=\"" + fmt(Y(v.y) + 4) + "\">" + std::to_string(m) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

/// Drawing JSON: {"n", "vertices": [[x,y],...], "edges": [{"u","v","polyline"}], "crossings"}.
inline nlohmann::json to_json(const Drawing& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["vertices"] = nlohmann::json::array();
  for (const Point& p : d.vertices) j["vertices"].push_back({p.x, p.y});
  j["edges"] = nlohmann::json::array();
  for (const auto& pl : d.polylines) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Point& p : pl.points) pts.push_back({p.x, p.y});
    j["edges"].push_back({{"u", pl.edge.first}, {"v", pl.edge.second}, {"polyline", pts}});
  }
  j["crossings"] = drawing_crossings(d).total_crossings;
  return j;
}

/// Loads the geometry of a drawing (orders are left empty).
inline Drawing drawing_from_json(const nlohmann::json& j) {
  try {
    Drawing d;
    d.n = j.at("n").get<int>();
    if (d.n < 1) throw InputError("drawing: n must be >= 1");
    for (const auto& v : j.at("vertices")) d.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    if (static_cast<int>(d.vertices.size()) != d.n) throw InputError("drawing: vertex count mismatch");
    for (const auto& e : j.at("edges")) {
      EdgePolyline pl;
      pl.edge = {e.at("u").get<int>(), e.at("v").get<int>()};
      for (const auto& p : e.at("polyline")) pl.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      d.polylines.push_back(std::move(pl));
    }
    std::sort(d.polylines.begin(), d.polylines.end(),
              [](const EdgePolyline& a, const EdgePolyline& b) { return a.edge < b.edge; });
    if (static_cast<std::int64_t>(d.polylines.size()) != binom(d.n, 2)) throw InputError("drawing: edge count mismatch");
    for (std::size_t t = 0; t + 1 < d.polylines.size(); ++t)
      if (d.polylines[t].edge == d.polylines[t + 1].edge) throw InputError("drawing: duplicate edge");
    detail::validate_polylines(d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("drawing JSON: ") + e.what());
  }
}

}  // namespace monodraw
