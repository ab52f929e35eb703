#pragma once

/// Polytope constructions: simplex, pyramids, product, direct sum, polar
/// dual and face truncation.
///
/// Coordinates: T(d) is conv{0, e_1, ..., e_d}; a pyramid puts the base in
/// the hyperplane x_{d+1} = 0 and the apex at e_{d+1}. Direct sums and polars
/// first translate by the vertex centroid (always interior) and finally
/// rescale to primitive integer coordinates; scaling is a homothety, so the
/// combinatorial type is unchanged.

#include "facecount/face_lattice.hpp"
#include "facecount/polytope.hpp"

#include <vector>

namespace facecount {

namespace detail {

inline Point centroid(const std::vector<Point>& pts) {
  Point c = Point::zero(pts.front().dim());
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < c.dim(); ++i) c[i] += p[i];
  }
  const Rational n(static_cast<long long>(pts.size()));
  for (auto& x : c.coords) x /= n;
  return c;
}

inline std::vector<Point> translated(const std::vector<Point>& pts, const Point& by) {
  std::vector<Point> out = pts;
  for (auto& p : out) {
    for (std::size_t i = 0; i < p.dim(); ++i) p[i] -= by[i];
  }
  return out;
}

/// Uniform positive scaling to the smallest integer coordinates.
inline std::vector<Point> primitive_integer(std::vector<Point> pts) {
  Integer l = 1;
  for (const auto& p : pts) {
    for (const auto& x : p.coords) l = lcm(l, denominator_of(x));
  }
  Integer g = 0;
  for (const auto& p : pts) {
    for (const auto& x : p.coords) g = gcd(g, abs(numerator_of(x) * (l / denominator_of(x))));
  }
  if (g == 0) g = 1;
  const Rational factor(l, g);
  for (auto& p : pts) {
    for (auto& x : p.coords) x *= factor;
  }
  return pts;
}

}  // namespace detail

/// T(d) = conv{0, e_1, ..., e_d}. T(0) is a single point in R^0.
inline VPolytope simplex(std::size_t d) {
  std::vector<Point> vs;
  vs.push_back(Point::zero(d));
  for (std::size_t i = 0; i < d; ++i) {
    auto p = Point::zero(d);
    p[i] = 1;
    vs.push_back(std::move(p));
  }
  return VPolytope(d, std::move(vs));
}

/// Pyramid with apex e_{d+1}; base vertices keep their indices, apex is last.
inline VPolytope pyramid(const VPolytope& p) {
  std::vector<Point> vs;
  for (const auto& v : p.vertices()) {
    auto q = v;
    q.coords.emplace_back(0);
    vs.push_back(std::move(q));
  }
  auto apex = Point::zero(p.dim() + 1);
  apex[p.dim()] = 1;
  vs.push_back(std::move(apex));
  return VPolytope(p.dim() + 1, std::move(vs));
}

inline VPolytope k_fold_pyramid(const VPolytope& p, std::size_t t) {
  VPolytope out = p;
  for (std::size_t i = 0; i < t; ++i) out = pyramid(out);
  return out;
}

/// Cartesian product; vertex (i, j) has index i * f_0(Q) + j.
inline VPolytope product(const VPolytope& p, const VPolytope& q) {
  std::vector<Point> vs;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      auto c = a;
      c.coords.insert(c.coords.end(), b.coords.begin(), b.coords.end());
      vs.push_back(std::move(c));
    }
  }
  return VPolytope(p.dim() + q.dim(), std::move(vs));
}

/// Direct sum P (+) Q; P's vertices come first.
inline VPolytope direct_sum(const VPolytope& p, const VPolytope& q) {
  if (p.dim() == 0 || q.dim() == 0) throw GeometryError("direct_sum: summands must have positive dimension");
  const auto ps = detail::translated(p.vertices(), detail::centroid(p.vertices()));
  const auto qs = detail::translated(q.vertices(), detail::centroid(q.vertices()));
  const auto dim = p.dim() + q.dim();
  std::vector<Point> vs;
  for (const auto& a : ps) {
    auto c = a;
    c.coords.resize(dim, Rational(0));
    vs.push_back(std::move(c));
  }
  for (const auto& b : qs) {
    auto c = Point::zero(p.dim());
    c.coords.insert(c.coords.end(), b.coords.begin(), b.coords.end());
    vs.push_back(std::move(c));
  }
  return VPolytope(dim, detail::primitive_integer(std::move(vs)));
}

/// Polar dual about the vertex centroid; vertex i of the result is dual to facet i of P.
inline VPolytope polar_dual(const VPolytope& p) {
  if (p.dim() == 0) throw GeometryError("polar_dual: 0-dimensional polytope");
  const auto c = detail::centroid(p.vertices());
  std::vector<Point> vs;
  for (const auto& f : p.facets()) {
    // n . (y + c) <= b  <=>  n . y <= b - n . c
    Rational shifted(f.hyperplane.offset);
    for (std::size_t i = 0; i < p.dim(); ++i) shifted -= Rational(f.hyperplane.normal[i]) * c[i];
    check_invariant(shifted > 0, "polar_dual: centroid not interior");
    Point q;
    for (const auto& x : f.hyperplane.normal) q.coords.push_back(Rational(x) / shifted);
    vs.push_back(std::move(q));
  }
  return VPolytope(p.dim(), detail::primitive_integer(std::move(vs)));
}

/// Cuts the face F off P: P intersected with {c . x <= t}, where c is the sum
/// of the outward normals of the facets containing F and t lies strictly
/// between max_{v not in F} c.v and c.F. `position` in (0, 1) places t on that
/// interval (1/2 = midpoint). Surviving vertices keep their relative order
/// and come first; new vertices follow in edge order.
inline VPolytope truncate_face(const VPolytope& p, const FaceLattice& lattice, const VertexSet& face,
                               const Rational& position = Rational(1, 2)) {
  if (face.universe() != p.n_vertices()) throw GeometryError("truncate_face: vertex set of wrong size");
  if (face.empty()) throw GeometryError("truncate_face: empty set is not a truncatable face");
  if (face == VertexSet::full(p.n_vertices())) throw GeometryError("truncate_face: cannot truncate the whole polytope");
  if (lattice.grade_of(face) < 0) throw GeometryError("truncate_face: vertex set is not a face");
  if (position <= 0 || position >= 1) throw DomainError("truncate_face: position must lie in (0, 1)");

  const auto d = p.dim();
  std::vector<Integer> c(d, Integer(0));
  for (const auto& f : p.facets()) {
    if (face.is_subset_of(f.vertices)) {
      for (std::size_t i = 0; i < d; ++i) c[i] += f.hyperplane.normal[i];
    }
  }
  auto value = [&](const Point& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) s += Rational(c[i]) * x[i];
    return s;
  };
  const auto members = face.indices();
  const Rational top = value(p.vertex(members.front()));
  bool have_rest = false;
  Rational rest_max;
  for (std::size_t v = 0; v < p.n_vertices(); ++v) {
    const auto cv = value(p.vertex(v));
    if (face.contains(v)) {
      check_invariant(cv == top, "truncate_face: functional not constant on the face");
    } else if (!have_rest || cv > rest_max) {
      rest_max = cv;
      have_rest = true;
    }
  }
  check_invariant(have_rest && rest_max < top, "truncate_face: functional does not expose the face");
  const Rational t = rest_max + position * (top - rest_max);

  std::vector<Point> vs;
  for (std::size_t v = 0; v < p.n_vertices(); ++v) {
    if (!face.contains(v)) vs.push_back(p.vertex(v));
  }
  for (const auto& edge : lattice.faces(1)) {
    const auto ends = edge.indices();
    const bool a_in = face.contains(ends[0]);
    const bool b_in = face.contains(ends[1]);
    if (a_in == b_in) continue;
    const auto& inside = p.vertex(a_in ? ends[0] : ends[1]);
    const auto& outside = p.vertex(a_in ? ends[1] : ends[0]);
    // x(lambda) = outside + lambda (inside - outside), c.x(lambda) = t.
    const auto co = value(outside);
    const Rational lambda = (t - co) / (top - co);
    Point x = outside;
    for (std::size_t i = 0; i < d; ++i) x[i] += lambda * (inside[i] - outside[i]);
    vs.push_back(std::move(x));
  }
  return VPolytope(d, std::move(vs));
}

inline VPolytope truncate_face(const VPolytope& p, const VertexSet& face,
                               const Rational& position = Rational(1, 2)) {
  return truncate_face(p, face_lattice(p), face, position);
}

}  // namespace facecount
