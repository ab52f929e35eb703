#include "facecount/constructions.hpp"
#include "facecount/isomorphism.hpp"

#include <gtest/gtest.h>

using namespace facecount;

namespace {

FaceCountVector fv(std::initializer_list<long long> c) {
  return FaceCountVector::from(static_cast<int>(c.size()), std::vector<long long>(c), true);
}

FaceCountVector fvec(const VPolytope& p) { return face_lattice(p).f_vector(); }

VPolytope cube3() { return product(product(simplex(1), simplex(1)), simplex(1)); }

}  // namespace

TEST(Constructions, Simplices) {
  EXPECT_EQ(fvec(simplex(1)), fv({2}));
  EXPECT_EQ(fvec(simplex(3)), fv({4, 6, 4}));
  EXPECT_EQ(fvec(simplex(5)), fv({6, 15, 20, 15, 6}));
  EXPECT_EQ(simplex(0).n_vertices(), 1u);
}

TEST(Constructions, Products) {
  EXPECT_EQ(fvec(product(simplex(2), simplex(2))), fv({9, 18, 15, 6}));
  EXPECT_EQ(fvec(product(simplex(2), simplex(3))), fv({12, 30, 34, 21, 7}));
  EXPECT_EQ(fvec(cube3()), fv({8, 12, 6}));
}

TEST(Constructions, PyramidAddsConeFaces) {
  auto sq = product(simplex(1), simplex(1));
  auto p = pyramid(sq);
  EXPECT_EQ(fvec(p), fv({5, 8, 5}));
  EXPECT_EQ(p.n_vertices() - 1, 4u);
  EXPECT_EQ(fvec(k_fold_pyramid(sq, 2)), fv({6, 13, 13, 6}));
}

TEST(Constructions, DirectSumIsDualToProduct) {
  auto s = direct_sum(simplex(1), simplex(1));
  EXPECT_EQ(fvec(s), fv({4, 4}));
  auto oct = direct_sum(direct_sum(simplex(1), simplex(1)), simplex(1));
  EXPECT_EQ(fvec(oct), fv({6, 12, 8}));
  auto t = direct_sum(simplex(2), simplex(3));
  EXPECT_EQ(fvec(t), fvec(product(simplex(2), simplex(3))).reversed());
  EXPECT_THROW(direct_sum(simplex(0), simplex(2)), GeometryError);
}

TEST(Constructions, PolarDualReversesAndInvolutes) {
  auto c = cube3();
  auto dual = polar_dual(c);
  EXPECT_EQ(fvec(dual), fv({6, 12, 8}));
  EXPECT_TRUE(isomorphic(polar_dual(dual).incidence(), c.incidence()));
  auto pp = pyramid(product(simplex(1), simplex(2)));
  EXPECT_EQ(fvec(polar_dual(pp)), fvec(pp).reversed());
}

TEST(Truncation, VertexOfTetrahedron) {
  auto t = simplex(3);
  auto cut = truncate_face(t, VertexSet::of(4, {0}));
  EXPECT_EQ(fvec(cut), fv({6, 9, 5}));
  for (std::size_t v = 0; v < cut.n_vertices(); ++v) EXPECT_TRUE(is_simple_vertex(cut, v));
}

TEST(Truncation, ApexOfSquarePyramidGivesCube) {
  auto p = pyramid(product(simplex(1), simplex(1)));
  auto cut = truncate_face(p, VertexSet::of(5, {4}));
  EXPECT_TRUE(isomorphic(cut.incidence(), cube3().incidence()));
}

TEST(Truncation, EdgeOfCube) {
  auto c = cube3();
  const auto lat = face_lattice(c);
  auto cut = truncate_face(c, lat, lat.faces(1).front());
  EXPECT_EQ(fvec(cut), fv({10, 15, 7}));
}

TEST(Truncation, RejectsNonFaces) {
  auto c = cube3();
  const auto lat = face_lattice(c);
  EXPECT_THROW(truncate_face(c, lat, VertexSet(8)), GeometryError);
  EXPECT_THROW(truncate_face(c, lat, VertexSet::full(8)), GeometryError);
  EXPECT_THROW(truncate_face(c, lat, VertexSet::of(8, {0, 7})), GeometryError);
  EXPECT_THROW(truncate_face(c, lat, VertexSet::of(8, {0}), Rational(0)), DomainError);
  EXPECT_THROW(truncate_face(c, lat, VertexSet::of(8, {0}), Rational(1)), DomainError);
}

TEST(Truncation, ThresholdIndependent) {
  auto c = cube3();
  const auto lat = face_lattice(c);
  const auto face = lat.faces(2).front();
  const auto ref = truncate_face(c, lat, face).incidence();
  for (auto pos : {Rational(1, 7), Rational(1, 3), Rational(9, 10)}) {
    EXPECT_TRUE(isomorphic(truncate_face(c, lat, face, pos).incidence(), ref));
  }
}
