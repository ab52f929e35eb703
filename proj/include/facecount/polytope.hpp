#pragma once

/// V-representation polytopes with exact rational vertices and brute-force
/// facet enumeration.
///
/// Facets are found by scanning every d-subset of vertices: if the subset
/// spans a hyperplane and all vertices lie weakly on one side, that
/// hyperplane supports a facet. Hyperplanes are canonicalized (primitive
/// integer normal, outward orientation) and deduplicated. Irredundancy of the
/// input is certified afterwards: each vertex must be the only point on all
/// facets containing it.

#include "facecount/linalg.hpp"
#include "facecount/numeric.hpp"
#include "facecount/vertex_set.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace facecount {

struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  static Point from_ints(std::initializer_list<long long> c) {
    Point p;
    for (auto x : c) p.coords.emplace_back(x);
    return p;
  }
  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim, Rational(0))); }

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// Oriented hyperplane normal . x <= offset with a primitive integer vector
/// (gcd of all entries of (normal, offset) is 1).
struct Hyperplane {
  std::vector<Integer> normal;
  Integer offset;

  Rational evaluate(const Point& p) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) sum += Rational(normal[i]) * p[i];
    return sum - Rational(offset);
  }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

struct Facet {
  Hyperplane hyperplane;
  VertexSet vertices;
};

/// Vertex x facet incidence matrix, the combinatorial type of a polytope.
class IncidenceStructure {
public:
  IncidenceStructure() = default;
  IncidenceStructure(std::size_t n_vertices, std::vector<VertexSet> facet_columns)
      : n_vertices_(n_vertices), columns_(std::move(facet_columns)) {}

  std::size_t n_vertices() const { return n_vertices_; }
  std::size_t n_facets() const { return columns_.size(); }
  bool incident(std::size_t vertex, std::size_t facet) const {
    return columns_[facet].contains(vertex);
  }
  const std::vector<VertexSet>& columns() const { return columns_; }

  /// Row-major bit strings, one per vertex, one character per facet.
  std::vector<std::string> row_strings() const {
    std::vector<std::string> rows(n_vertices_, std::string(columns_.size(), '0'));
    for (std::size_t f = 0; f < columns_.size(); ++f) {
      for (auto v : columns_[f].indices()) rows[v][f] = '1';
    }
    return rows;
  }

  std::size_t facets_at(std::size_t vertex) const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.contains(vertex) ? 1 : 0;
    return n;
  }

  /// Checks the structural invariants for a d-polytope; returns an error
  /// message or the empty string.
  std::string validate(std::size_t dim) const {
    for (std::size_t f = 0; f < columns_.size(); ++f) {
      if (columns_[f].count() < dim) return "facet " + std::to_string(f) + " has fewer than d vertices";
      for (std::size_t g = f + 1; g < columns_.size(); ++g) {
        if (columns_[f] == columns_[g]) return "duplicate facet columns";
      }
    }
    auto rows = row_strings();
    for (std::size_t v = 0; v < n_vertices_; ++v) {
      if (facets_at(v) < dim) return "vertex " + std::to_string(v) + " lies on fewer than d facets";
    }
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) return "duplicate vertex rows";
    return {};
  }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

private:
  std::size_t n_vertices_ = 0;
  std::vector<VertexSet> columns_;
};

namespace detail {

template <typename T>
Hyperplane canonical_hyperplane(const std::vector<T>& kernel, const Integer& scale) {
  // kernel = (n_0..n_{d-1}, c) with n . (scale x) + c = 0 on the hyperplane.
  Hyperplane h;
  const auto d = kernel.size() - 1;
  h.normal.reserve(d);
  for (std::size_t i = 0; i < d; ++i) h.normal.push_back(linalg::to_integer(kernel[i]) * scale);
  h.offset = -linalg::to_integer(kernel[d]);
  Integer g = abs(h.offset);
  for (const auto& x : h.normal) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& x : h.normal) x /= g;
    h.offset /= g;
  }
  return h;
}

struct FacetScan {
  std::vector<Facet> facets;
};

template <typename T, typename W>
FacetScan scan_facets(const std::vector<std::vector<T>>& rows, std::size_t dim, const Integer& scale) {
  const auto n = rows.size();
  FacetScan out;
  std::map<Hyperplane, std::size_t> seen;
  std::vector<std::size_t> pick(dim);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::vector<T>> selected(dim);
  std::vector<W> values(n);

  auto covered = [&](const std::vector<std::size_t>& subset) {
    for (const auto& f : out.facets) {
      bool inside = true;
      for (auto i : subset) {
        if (!f.vertices.contains(i)) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
    return false;
  };

  while (true) {
    if (!covered(pick)) {
      for (std::size_t i = 0; i < dim; ++i) selected[i] = rows[pick[i]];
      auto kernel = linalg::cofactor_kernel<T, W>(selected);
      bool nonzero = false;
      for (std::size_t i = 0; i < dim; ++i) nonzero = nonzero || !linalg::is_zero(kernel[i]);
      if (nonzero) {
        bool pos = false;
        bool neg = false;
        for (std::size_t v = 0; v < n && !(pos && neg); ++v) {
          W acc = 0;
          for (std::size_t j = 0; j <= dim; ++j) acc += W(kernel[j]) * W(rows[v][j]);
          values[v] = acc;
          if (acc > 0) pos = true;
          if (acc < 0) neg = true;
        }
        if (!(pos && neg)) {
          // Outward orientation: all vertices must satisfy normal . x <= offset.
          if (pos) {
            for (auto& x : kernel) x = -x;
            for (auto& x : values) x = -x;
          }
          auto h = canonical_hyperplane(kernel, scale);
          if (!seen.count(h)) {
            VertexSet on(n);
            for (std::size_t v = 0; v < n; ++v) {
              if (values[v] == 0) on.insert(v);
            }
            seen.emplace(h, out.facets.size());
            out.facets.push_back({std::move(h), std::move(on)});
          }
        }
      }
    }
    // next combination
    std::size_t i = dim;
    while (i > 0 && pick[i - 1] == n - dim + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace detail

/// A full-dimensional polytope given by exact rational vertex coordinates.
///
/// Immutable; copies share the lazily computed facet list, which is safe to
/// read from several threads.
class VPolytope {
public:
  VPolytope(std::size_t ambient_dim, std::vector<Point> vertices)
      : ambient_dim_(ambient_dim), vertices_(std::move(vertices)), cache_(std::make_shared<Cache>()) {
    if (vertices_.size() < ambient_dim_ + 1) {
      throw GeometryError("VPolytope: a " + std::to_string(ambient_dim_) +
                          "-polytope needs at least d+1 vertices, got " +
                          std::to_string(vertices_.size()));
    }
    std::vector<std::vector<Rational>> raw;
    raw.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].dim() != ambient_dim_) {
        throw GeometryError("VPolytope: vertex " + std::to_string(i) + " has dimension " +
                            std::to_string(vertices_[i].dim()) + ", expected " +
                            std::to_string(ambient_dim_));
      }
      raw.push_back(vertices_[i].coords);
    }
    frame_ = std::make_shared<IntegerFrame>(raw, ambient_dim_);
    std::vector<std::size_t> all(vertices_.size());
    std::iota(all.begin(), all.end(), 0);
    const int rank = frame_->affine_rank(all);
    if (rank != static_cast<int>(ambient_dim_)) {
      throw GeometryError("VPolytope: vertices span an affine subspace of dimension " +
                          std::to_string(rank) + " in R^" + std::to_string(ambient_dim_));
    }
  }

  std::size_t dim() const { return ambient_dim_; }
  std::size_t n_vertices() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }
  const IntegerFrame& frame() const { return *frame_; }

  /// All facets, ordered by their sorted vertex index lists. Throws
  /// GeometryError if some input point is not a vertex.
  const std::vector<Facet>& facets() const {
    std::call_once(cache_->once, [this] { compute_facets(); });
    if (!cache_->error.empty()) throw GeometryError(cache_->error);
    return cache_->facets;
  }

  IncidenceStructure incidence() const {
    std::vector<VertexSet> cols;
    for (const auto& f : facets()) cols.push_back(f.vertices);
    return IncidenceStructure(vertices_.size(), std::move(cols));
  }

  /// Intersection of all facets containing `s`; the full vertex set when no
  /// facet contains `s`.
  VertexSet closure(const VertexSet& s) const {
    VertexSet acc = VertexSet::full(vertices_.size());
    bool any = false;
    for (const auto& f : facets()) {
      if (s.is_subset_of(f.vertices)) {
        acc &= f.vertices;
        any = true;
      }
    }
    return any ? acc : VertexSet::full(vertices_.size());
  }

  /// Number of d-subsets the facet scan visits.
  Integer scan_cost() const;

private:
  struct Cache {
    std::once_flag once;
    std::vector<Facet> facets;
    std::string error;
  };

  void compute_facets() const {
    const auto& fr = *frame_;
    const auto n = vertices_.size();
    detail::FacetScan scan;
    if (ambient_dim_ == 0) {
      cache_->facets = {};
      return;
    }
    if (fr.fast()) {
      scan = detail::scan_facets<std::int64_t, Wide>(fr.small_rows(), ambient_dim_, fr.scale());
    } else {
      scan = detail::scan_facets<Integer, Integer>(fr.rows(), ambient_dim_, fr.scale());
    }
    std::sort(scan.facets.begin(), scan.facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    // Each vertex must be cut out by the facets through it.
    for (std::size_t v = 0; v < n; ++v) {
      VertexSet acc = VertexSet::full(n);
      bool any = false;
      for (const auto& f : scan.facets) {
        if (f.vertices.contains(v)) {
          acc &= f.vertices;
          any = true;
        }
      }
      if (!any || acc.count() != 1) {
        cache_->error = "VPolytope: point " + std::to_string(v) +
                        " is not a vertex (redundant input is rejected)";
        return;
      }
    }
    cache_->facets = std::move(scan.facets);
  }

  std::size_t ambient_dim_;
  std::vector<Point> vertices_;
  std::shared_ptr<const IntegerFrame> frame_;
  std::shared_ptr<Cache> cache_;
};

/// Dimension of the affine hull of a nonempty point set.
inline int affine_rank(const std::vector<Point>& points) {
  if (points.empty()) throw DomainError("affine_rank: empty point set");
  const auto dim = points.front().dim();
  std::vector<std::vector<Rational>> raw;
  for (const auto& p : points) {
    if (p.dim() != dim) throw DomainError("affine_rank: mixed dimensions");
    raw.push_back(p.coords);
  }
  IntegerFrame frame(raw, dim);
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return frame.affine_rank(all);
}

inline const std::vector<Facet>& enumerate_facets(const VPolytope& p) { return p.facets(); }

}  // namespace facecount

#include "facecount/binomial.hpp"

namespace facecount {
inline Integer VPolytope::scan_cost() const {
  return binomial(static_cast<std::int64_t>(vertices_.size()), static_cast<std::int64_t>(ambient_dim_));
}
}  // namespace facecount
