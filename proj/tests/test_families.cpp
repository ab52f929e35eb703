#include "facecount/families.hpp"
#include "facecount/isomorphism.hpp"

#include <gtest/gtest.h>

using namespace facecount;

namespace {

FaceCountVector fv(std::initializer_list<long long> c) {
  return FaceCountVector::from(static_cast<int>(c.size()), std::vector<long long>(c), true);
}

FaceCountVector oracle(const FamilySpec& f) { return face_lattice(build(f)).f_vector(); }
FaceCountVector oracle(const char* spec) { return oracle(parse_family(spec)); }

}  // namespace

TEST(FamilyGrammar, RoundTrip) {
  for (const char* text : {"simplex:d=4", "prism:s=3", "triplex:s=2,d=5", "J:s=3,d=6", "A:d=4", "C:d=5",
                           "sigma:d=4", "tmsum:d=5,a=4,m=2", "tmprod:d=5,a=5,m=2", "trunc:d=4,n=2"}) {
    EXPECT_EQ(to_string(parse_family(text)), text);
  }
}

TEST(FamilyGrammar, CaseAndOrderInsensitive) {
  EXPECT_EQ(parse_family("j:d=6,s=3"), FamilySpec::j(3, 6));
  EXPECT_EQ(parse_family("TMPROD:m=2,a=5,d=5"), FamilySpec::tmprod(5, 5, 2));
}

TEST(FamilyGrammar, Rejections) {
  for (const char* bad : {"", "simplex", "simplex:", "simplex:d=x", "simplex:d=4,d=5", "simplex:d=4,s=2",
                          "cube:d=3", "J:s=1,d=4", "J:s=5,d=4", "triplex:s=0,d=3", "sigma:d=2", "A:d=1",
                          "tmprod:d=5,a=6,m=1", "tmprod:d=5,a=5,m=3", "trunc:d=3,n=-1", "J:s=3"}) {
    EXPECT_THROW(parse_family(bad), DomainError) << bad;
  }
}

TEST(Families, SmallCases) {
  EXPECT_EQ(oracle("triplex:s=2,d=3"), fv({5, 8, 5}));
  EXPECT_EQ(oracle("J:s=3,d=5"), fv({12, 32, 39, 25, 8}));
  EXPECT_EQ(oracle("J:s=2,d=3"), fv({7, 11, 6}));
  EXPECT_EQ(oracle("sigma:d=3"), fv({7, 11, 6}));
  EXPECT_EQ(oracle("A:d=4"), fv({10, 21, 18, 7}));
  EXPECT_EQ(oracle("J:s=3,d=4"), fv({10, 21, 18, 7}));
  EXPECT_EQ(oracle("C:d=4"), fv({10, 21, 18, 7}));
  EXPECT_EQ(oracle("sigma:d=4"), fv({10, 21, 18, 7}));
  EXPECT_EQ(oracle("tmprod:d=5,a=5,m=2"), fv({12, 30, 34, 21, 7}));
  EXPECT_EQ(oracle("A:d=5"), fv({12, 32, 39, 25, 8}));
}

TEST(Families, AThreeIsCube) {
  auto cube = product(product(simplex(1), simplex(1)), simplex(1));
  EXPECT_TRUE(isomorphic(build(FamilySpec::a_family(3)).incidence(), cube.incidence()));
}

TEST(Families, ATwoHasNoTarget) {
  try {
    build(FamilySpec::a_family(2));
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("degree d+1"), std::string::npos);
  }
}

TEST(Families, ExpectedMatchesOracleUpToFive) {
  for (const auto& f : corpus(5)) {
    const auto e = expected_fvector(f);
    if (!e) continue;
    EXPECT_EQ(oracle(f), *e) << to_string(f);
  }
}

TEST(Families, ExpectedNoneWhereNoFormula) {
  EXPECT_FALSE(expected_fvector(FamilySpec::sigma(4)).has_value());
  EXPECT_FALSE(expected_fvector(FamilySpec::c_family(4)).has_value());
  EXPECT_FALSE(expected_fvector(FamilySpec::truncations(4, 1)).has_value());
  EXPECT_FALSE(expected_fvector(FamilySpec::a_family(2)).has_value());
}

TEST(Families, StatedCounts) {
  for (int d = 3; d <= 5; ++d) {
    for (auto f : {FamilySpec::c_family(d), FamilySpec::sigma(d), FamilySpec::truncations(d, 0),
                   FamilySpec::truncations(d, 1), FamilySpec::truncations(d, 2), FamilySpec::truncations(d, 3)}) {
      const auto got = oracle(f);
      const auto st = stated_counts(f);
      ASSERT_TRUE(st.vertices.has_value());
      EXPECT_EQ(got.counts().front(), *st.vertices) << to_string(f);
      if (st.facets) EXPECT_EQ(got.counts().back(), *st.facets) << to_string(f);
    }
  }
  EXPECT_EQ(*stated_counts(FamilySpec::truncations(4, 3)).vertices, 14);
}

TEST(Families, JHasDPlusThreeFacets) {
  for (int d = 2; d <= 5; ++d) {
    for (int s = 2; s <= d; ++s) {
      const auto got = oracle(FamilySpec::j(s, d));
      EXPECT_EQ(got.counts().front(), 2 * d + s - 1);
      EXPECT_EQ(got.counts().back(), d + 3);
    }
  }
}

TEST(Families, TriplexFacetEntry) {
  for (int d = 2; d <= 5; ++d) {
    for (int s = 1; s <= d; ++s) {
      const auto got = oracle(FamilySpec::triplex(s, d));
      EXPECT_EQ(got.counts().back(), s == 1 ? d + 1 : d + 2);
    }
  }
}

TEST(Families, TruncationChoiceIndependence) {
  for (auto f : {FamilySpec::j(2, 3), FamilySpec::j(3, 4), FamilySpec::j(2, 4), FamilySpec::a_family(4),
                 FamilySpec::c_family(4)}) {
    const auto choices = all_truncation_choices(f);
    ASSERT_GT(choices.size(), 1u) << to_string(f);
    const auto ref = canonical_form(choices.front().incidence());
    for (const auto& p : choices) EXPECT_EQ(canonical_form(p.incidence()), ref) << to_string(f);
  }
}

TEST(FacetCensus, MatchesOracle) {
  auto census = facet_census_tmprod(5, 5, 2);
  ASSERT_EQ(census.size(), 3u);
  EXPECT_EQ(census[0].multiplicity, 3);
  EXPECT_EQ(census[0].vertex_count, 8);
  EXPECT_EQ(census[1].multiplicity, 4);
  EXPECT_EQ(census[1].vertex_count, 9);
  EXPECT_EQ(census[2].multiplicity, 0);

  auto small = facet_census_tmprod(4, 2, 1);
  EXPECT_EQ(small[0].vertex_count, 4);
  EXPECT_EQ(small[0].multiplicity, 2);
  EXPECT_EQ(small[1].vertex_count, 4);
  EXPECT_EQ(small[1].multiplicity, 2);
  EXPECT_EQ(small[2].vertex_count, 5);
  EXPECT_EQ(small[2].multiplicity, 2);

  for (int d = 2; d <= 5; ++d) {
    for (int a = 2; a <= d; ++a) {
      for (int m = 1; m <= a / 2; ++m) {
        std::map<std::int64_t, std::int64_t> predicted, seen;
        std::int64_t total = 0;
        for (const auto& c : facet_census_tmprod(d, a, m)) {
          if (c.multiplicity) predicted[c.vertex_count] += c.multiplicity;
          total += c.multiplicity;
        }
        EXPECT_EQ(total, d + 2);
        const auto poly = build(FamilySpec::tmprod(d, a, m));
        for (const auto& f : poly.facets()) {
          ++seen[static_cast<std::int64_t>(f.vertices.count())];
        }
        EXPECT_EQ(predicted, seen) << d << " " << a << " " << m;
      }
    }
  }
}
