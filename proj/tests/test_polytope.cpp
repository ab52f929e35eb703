#include "facecount/face_lattice.hpp"
#include "facecount/polytope.hpp"

#include <gtest/gtest.h>

using namespace facecount;

namespace {

FaceCountVector fv(std::initializer_list<long long> c) {
  return FaceCountVector::from(static_cast<int>(c.size()), std::vector<long long>(c), true);
}

VPolytope cube(std::size_t d) {
  std::vector<Point> vs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    auto p = Point::zero(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i) & 1;
    vs.push_back(p);
  }
  return VPolytope(d, vs);
}

VPolytope cross_polytope(std::size_t d) {
  std::vector<Point> vs;
  for (std::size_t i = 0; i < d; ++i) {
    for (int sign : {1, -1}) {
      auto p = Point::zero(d);
      p[i] = sign;
      vs.push_back(p);
    }
  }
  return VPolytope(d, vs);
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  auto a = VertexSet::of(70, {1, 5, 69});
  auto b = VertexSet::of(70, {5, 69});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ((a & b), b);
  EXPECT_EQ(a.indices(), (std::vector<std::size_t>{1, 5, 69}));
  EXPECT_TRUE(b < a == (b.indices() < a.indices()));
  EXPECT_EQ(VertexSet::full(70).count(), 70u);
}

TEST(VPolytope, RejectsBadInput) {
  EXPECT_THROW(VPolytope(3, {Point::from_ints({0, 0, 0}), Point::from_ints({1, 0, 0})}), GeometryError);
  EXPECT_THROW(VPolytope(2, {Point::from_ints({0, 0}), Point::from_ints({1, 0}), Point::from_ints({2, 0})}),
               GeometryError);
  EXPECT_THROW(VPolytope(2, {Point::from_ints({0, 0}), Point::from_ints({1, 0}), Point::from_ints({0})}),
               GeometryError);
}

TEST(VPolytope, RedundantPointRejectedAtFacetTime) {
  VPolytope p(2, {Point::from_ints({0, 0}), Point::from_ints({2, 0}), Point::from_ints({0, 2}),
                  Point::from_ints({1, 0})});
  EXPECT_THROW(p.facets(), GeometryError);
  VPolytope q(2, {Point::from_ints({0, 0}), Point::from_ints({2, 0}), Point::from_ints({0, 2}),
                  Point::from_ints({1, 1}) /* on an edge */});
  EXPECT_THROW(q.facets(), GeometryError);
  VPolytope r(2, {Point::from_ints({0, 0}), Point::from_ints({4, 0}), Point::from_ints({0, 4}),
                  Point::from_ints({1, 1}) /* interior */});
  EXPECT_THROW(r.facets(), GeometryError);
}

TEST(VPolytope, SquareFacetsAndHyperplanes) {
  auto sq = cube(2);
  const auto& fs = sq.facets();
  ASSERT_EQ(fs.size(), 4u);
  for (const auto& f : fs) {
    EXPECT_EQ(f.vertices.count(), 2u);
    for (const auto& v : sq.vertices()) EXPECT_LE(f.hyperplane.evaluate(v), 0);
  }
}

TEST(VPolytope, RationalCoordinates) {
  VPolytope p(2, {Point(std::vector<Rational>{Rational(0), Rational(0)}),
                  Point(std::vector<Rational>{Rational(1, 3), Rational(0)}),
                  Point(std::vector<Rational>{Rational(0), Rational(2, 7)}),
                  Point(std::vector<Rational>{Rational(1, 5), Rational(1, 5)})});
  EXPECT_EQ(p.facets().size(), 4u);
}

TEST(VPolytope, LargeCoordinatesUseExactPath) {
  const long long big = 1LL << 40;
  VPolytope p(3, {Point::from_ints({0, 0, 0}), Point::from_ints({big, 0, 0}), Point::from_ints({0, big, 0}),
                  Point::from_ints({0, 0, big}), Point::from_ints({big, big, big})});
  EXPECT_FALSE(p.frame().fast());
  EXPECT_EQ(face_lattice(p).f_vector(), fv({5, 9, 6}));
}

TEST(FaceLattice, Cubes) {
  EXPECT_EQ(face_lattice(cube(2)).f_vector(), fv({4, 4}));
  EXPECT_EQ(face_lattice(cube(3)).f_vector(), fv({8, 12, 6}));
  EXPECT_EQ(face_lattice(cube(4)).f_vector(), fv({16, 32, 24, 8}));
}

TEST(FaceLattice, CrossPolytopes) {
  EXPECT_EQ(face_lattice(cross_polytope(3)).f_vector(), fv({6, 12, 8}));
  EXPECT_EQ(face_lattice(cross_polytope(4)).f_vector(), fv({8, 24, 32, 16}));
}

TEST(FaceLattice, SquarePyramidDegrees) {
  VPolytope p(3, {Point::from_ints({0, 0, 0}), Point::from_ints({1, 0, 0}), Point::from_ints({0, 1, 0}),
                  Point::from_ints({1, 1, 0}), Point::from_ints({0, 0, 1})});
  const auto lat = face_lattice(p);
  EXPECT_EQ(lat.f_vector(), fv({5, 8, 5}));
  EXPECT_EQ(vertex_degree(p, lat, 4), 4u);
  EXPECT_FALSE(is_simple_vertex(p, 4));
  for (std::size_t v = 0; v < 4; ++v) {
    EXPECT_EQ(vertex_degree(p, lat, v), 3u);
    EXPECT_TRUE(is_simple_vertex(p, v));
  }
  EXPECT_EQ(vertex_figure_counts(p, lat, 4), fv({4, 4}));
  EXPECT_THROW(vertex_degree(p, lat, 5), GeometryError);
}

TEST(FaceLattice, FaceFvectorOfCubeFacet) {
  auto c = cube(4);
  const auto lat = face_lattice(c);
  for (const auto& f : lat.faces(3)) EXPECT_EQ(face_fvector(lat, f, 3), fv({8, 12, 6}));
  for (const auto& f : lat.faces(2)) EXPECT_EQ(face_fvector(lat, f, 2), fv({4, 4}));
}

TEST(FaceLattice, GradeOf) {
  auto c = cube(3);
  const auto lat = face_lattice(c);
  EXPECT_EQ(lat.grade_of(VertexSet::of(8, {0})), 0);
  EXPECT_EQ(lat.grade_of(VertexSet::of(8, {0, 1})), 1);
  EXPECT_EQ(lat.grade_of(VertexSet::of(8, {0, 3})), -1);
  EXPECT_EQ(lat.grade_of(VertexSet::of(8, {0, 1, 2, 3})), 2);
}

TEST(IncidenceStructure, ValidateAndRows) {
  auto sq = cube(2).incidence();
  EXPECT_EQ(sq.validate(2), "");
  EXPECT_EQ(sq.n_vertices(), 4u);
  EXPECT_EQ(sq.n_facets(), 4u);
  for (const auto& row : sq.row_strings()) EXPECT_EQ(std::count(row.begin(), row.end(), '1'), 2);
  IncidenceStructure bad(3, {VertexSet::of(3, {0, 1}), VertexSet::of(3, {0, 1})});
  EXPECT_NE(bad.validate(2), "");
}

TEST(FvectorType, Validation) {
  EXPECT_THROW(FaceCountVector::from(3, std::vector<int>{8, 12}, true), DomainError);
  EXPECT_THROW(FaceCountVector::from(3, std::vector<int>{8, 11, 6}, true), DomainError);
  EXPECT_THROW(FaceCountVector::from(3, std::vector<int>{3, 3, 3}, true), DomainError);
  EXPECT_NO_THROW(FaceCountVector::from(3, std::vector<int>{8, 11, 6}, false));
  auto c = fv({8, 12, 6});
  EXPECT_EQ(c.f(-1), 1);
  EXPECT_EQ(c.f(3), 1);
  EXPECT_EQ(c.reversed(), fv({6, 12, 8}));
  EXPECT_EQ(c.str(), "(8, 12, 6)");
}

TEST(AffineRank, Basics) {
  EXPECT_EQ(affine_rank({Point::from_ints({1, 1})}), 0);
  EXPECT_EQ(affine_rank({Point::from_ints({0, 0}), Point::from_ints({1, 1}), Point::from_ints({2, 2})}), 1);
  EXPECT_THROW(affine_rank({}), DomainError);
}
