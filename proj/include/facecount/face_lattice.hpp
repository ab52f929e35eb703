#pragma once

#include "facecount/fvector.hpp"
#include "facecount/polytope.hpp"

#include <deque>
#include <unordered_set>
#include <vector>

namespace facecount {

/// All proper nonempty faces of a d-polytope, graded by dimension 0..d-1.
class FaceLattice {
public:
  FaceLattice(std::size_t dim, std::size_t n_vertices, std::vector<std::vector<VertexSet>> grades)
      : dim_(dim), n_vertices_(n_vertices), grades_(std::move(grades)),
        fvector_(make_fvector(dim_, grades_)) {}

  std::size_t dim() const { return dim_; }
  std::size_t n_vertices() const { return n_vertices_; }
  const std::vector<VertexSet>& faces(std::size_t grade) const { return grades_.at(grade); }
  const FaceCountVector& f_vector() const { return fvector_; }

  std::size_t total_faces() const {
    std::size_t n = 0;
    for (const auto& g : grades_) n += g.size();
    return n;
  }

  /// Number of grade-k faces containing every vertex of `s`.
  std::size_t count_containing(std::size_t grade, const VertexSet& s) const {
    std::size_t n = 0;
    for (const auto& f : grades_.at(grade)) n += s.is_subset_of(f) ? 1 : 0;
    return n;
  }

  /// Number of grade-k faces contained in `s`.
  std::size_t count_within(std::size_t grade, const VertexSet& s) const {
    std::size_t n = 0;
    for (const auto& f : grades_.at(grade)) n += f.is_subset_of(s) ? 1 : 0;
    return n;
  }

  /// Grade of a proper face, or -1 if `s` is not one.
  int grade_of(const VertexSet& s) const {
    for (std::size_t g = 0; g < grades_.size(); ++g) {
      for (const auto& f : grades_[g]) {
        if (f == s) return static_cast<int>(g);
      }
    }
    return -1;
  }

private:
  static FaceCountVector make_fvector(std::size_t dim, const std::vector<std::vector<VertexSet>>& g) {
    std::vector<Integer> counts;
    for (const auto& grade : g) counts.emplace_back(grade.size());
    return FaceCountVector(static_cast<int>(dim), std::move(counts), true);
  }

  std::size_t dim_;
  std::size_t n_vertices_;
  std::vector<std::vector<VertexSet>> grades_;
  FaceCountVector fvector_;
};

/// Face lattice by closure search upward from the vertices: every proper face
/// is reached by repeatedly taking closure(G + v). Faces are graded by the
/// affine rank of their vertex sets and sorted within each grade.
inline FaceLattice face_lattice(const VPolytope& p) {
  const auto n = p.n_vertices();
  const auto d = p.dim();
  if (d == 0) throw GeometryError("face_lattice: 0-dimensional polytope has no proper faces");
  const auto& facets = p.facets();
  const auto full = VertexSet::full(n);

  auto closure = [&](const VertexSet& s) {
    VertexSet acc = full;
    bool any = false;
    for (const auto& f : facets) {
      if (s.is_subset_of(f.vertices)) {
        acc &= f.vertices;
        any = true;
      }
    }
    return any ? acc : full;
  };

  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::deque<VertexSet> queue;
  for (std::size_t v = 0; v < n; ++v) {
    auto s = VertexSet::of(n, {v});
    seen.insert(s);
    queue.push_back(std::move(s));
  }
  while (!queue.empty()) {
    auto face = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (face.contains(v)) continue;
      auto grown = face;
      grown.insert(v);
      auto c = closure(grown);
      if (c == full || seen.count(c)) continue;
      seen.insert(c);
      queue.push_back(std::move(c));
    }
  }

  std::vector<std::vector<VertexSet>> grades(d);
  for (const auto& face : seen) {
    const auto members = face.indices();
    const int g = p.frame().affine_rank(members);
    check_invariant(g >= 0 && g < static_cast<int>(d), "face_lattice: face of invalid dimension");
    grades[static_cast<std::size_t>(g)].push_back(face);
  }
  for (auto& g : grades) std::sort(g.begin(), g.end());

  check_invariant(grades[d - 1].size() == facets.size(), "face_lattice: facet grade mismatch");
  // Completeness certificate: in a polytope every ridge lies in exactly two facets.
  if (d >= 2) {
    for (const auto& ridge : grades[d - 2]) {
      std::size_t on = 0;
      for (const auto& f : facets) on += ridge.is_subset_of(f.vertices) ? 1 : 0;
      check_invariant(on == 2, "face_lattice: ridge not in exactly two facets (incomplete facet scan)");
    }
  }
  return FaceLattice(d, n, std::move(grades));
}

inline void check_vertex_index(const VPolytope& p, std::size_t v, const char* fn) {
  if (v >= p.n_vertices()) {
    throw GeometryError(std::string(fn) + ": vertex index " + std::to_string(v) +
                        " out of range (polytope has " + std::to_string(p.n_vertices()) + " vertices)");
  }
}

/// Number of edges at v.
inline std::size_t vertex_degree(const VPolytope& p, const FaceLattice& lattice, std::size_t v) {
  check_vertex_index(p, v, "vertex_degree");
  const auto s = VertexSet::of(p.n_vertices(), {v});
  const auto degree = lattice.count_containing(1, s);
  const auto facets_at = lattice.count_containing(p.dim() - 1, s);
  check_invariant((degree == p.dim()) == (facets_at == p.dim()),
                  "vertex_degree: simple-vertex characterisations disagree");
  return degree;
}

inline std::size_t vertex_degree(const VPolytope& p, std::size_t v) {
  return vertex_degree(p, face_lattice(p), v);
}

/// True iff v lies on exactly d facets.
inline bool is_simple_vertex(const VPolytope& p, std::size_t v) {
  check_vertex_index(p, v, "is_simple_vertex");
  std::size_t on = 0;
  for (const auto& f : p.facets()) on += f.vertices.contains(v) ? 1 : 0;
  return on == p.dim();
}

/// f-vector of the vertex figure P/v: entry k-1 counts the k-faces of P containing v.
inline FaceCountVector vertex_figure_counts(const VPolytope& p, const FaceLattice& lattice,
                                            std::size_t v) {
  check_vertex_index(p, v, "vertex_figure_counts");
  if (p.dim() < 2) throw DomainError("vertex_figure_counts: needs d >= 2");
  const auto s = VertexSet::of(p.n_vertices(), {v});
  std::vector<Integer> counts;
  for (std::size_t k = 1; k < p.dim(); ++k) counts.emplace_back(lattice.count_containing(k, s));
  return FaceCountVector(static_cast<int>(p.dim()) - 1, std::move(counts), true);
}

inline FaceCountVector vertex_figure_counts(const VPolytope& p, std::size_t v) {
  return vertex_figure_counts(p, face_lattice(p), v);
}

/// f-vector of a face, read off the lattice (faces of P inside it).
inline FaceCountVector face_fvector(const FaceLattice& lattice, const VertexSet& face, std::size_t face_dim) {
  std::vector<Integer> counts;
  for (std::size_t k = 0; k < face_dim; ++k) counts.emplace_back(lattice.count_within(k, face));
  return FaceCountVector(static_cast<int>(face_dim), std::move(counts), true);
}

}  // namespace facecount
