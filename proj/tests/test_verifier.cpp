#include "facecount/verifier.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace facecount;

namespace {

std::string failure_text(const CheckReport& r) {
  std::string out;
  for (const auto& f : r.failures) out += f.params + " [" + f.kind + "] expected " + f.expected + " got " + f.actual + "\n";
  return out;
}

bool same(const CheckReport& a, const CheckReport& b) { return to_json(a).dump() == to_json(b).dump(); }

int d_of(const std::string& params) {
  const auto at = params.find("d=");
  return std::stoi(params.substr(at + 2));
}

}  // namespace

TEST(Verifier, SmallGridSuitesPass) {
  for (const auto& r : {check_formula_vs_oracle(4), check_monotonicity(12), check_dichotomy(15), check_existence(50),
                        check_barnette_truncations(4), check_tightness(3, 5), check_reproductions(),
                        check_small_cases(), check_corpus_2d2(5), check_properties(3)}) {
    EXPECT_TRUE(r.passed()) << r.claim_id << "\n" << failure_text(r);
    EXPECT_GT(r.points_checked, 0U) << r.claim_id;
  }
}

TEST(Verifier, IdentitiesPassAndReportOffConditionWitnesses) {
  const auto r = check_identities();
  EXPECT_TRUE(r.passed()) << failure_text(r);
  EXPECT_FALSE(r.findings.empty());
}

TEST(Verifier, ReportsIndependentOfWorkerCount) {
  EXPECT_TRUE(same(check_tau_minimality(20, std::nullopt, 1), check_tau_minimality(20, std::nullopt, 4)));
  EXPECT_TRUE(same(check_monotonicity(15, 1), check_monotonicity(15, 3)));
  EXPECT_TRUE(same(check_formula_vs_oracle(4, 1), check_formula_vs_oracle(4, 4)));
  EXPECT_TRUE(same(check_properties(3, 1), check_properties(3, 2)));
}

TEST(Verifier, SubGridIsRestriction) {
  const auto small = check_tau_minimality(12);
  const auto large = check_tau_minimality(20);
  std::vector<std::string> restricted, direct;
  for (const auto& f : large.failures) {
    if (d_of(f.params) <= 12) restricted.push_back(f.params + f.kind + f.actual);
  }
  for (const auto& f : small.failures) direct.push_back(f.params + f.kind + f.actual);
  EXPECT_EQ(restricted, direct);
  std::vector<std::string> witnesses;
  for (const auto& w : large.equality_witnesses) {
    if (d_of(w) <= 12) witnesses.push_back(w);
  }
  EXPECT_EQ(witnesses, small.equality_witnesses);
}

TEST(Verifier, GridGuards) {
  EXPECT_THROW(check_formula_vs_oracle(8), DomainError);
  EXPECT_THROW(check_formula_vs_oracle(1), DomainError);
  EXPECT_THROW(check_tau_minimality(61), DomainError);
  EXPECT_THROW(check_tau_minimality(10, std::vector<int>{1}), DomainError);
  EXPECT_THROW(check_dichotomy(8), DomainError);
  EXPECT_THROW(check_existence(201), DomainError);
  EXPECT_THROW(check_barnette_truncations(7), DomainError);
  EXPECT_THROW(check_properties(7), DomainError);
  EXPECT_THROW(check_tightness(2, 5), DomainError);
}

TEST(Verifier, TauMinimalityFailsExactlyAtOddDPlusS) {
  // s = 3: d+s is odd for even d, where the split point has 2d+1 < 2d+2 vertices.
  const auto r = check_tau_minimality(10, std::vector<int>{3});
  std::vector<int> failing;
  for (const auto& f : r.failures) {
    EXPECT_NE(f.kind, "below-tau") << f.params;
    EXPECT_TRUE(f.kind == "split-outside-class" || f.kind == "minimum-exceeds-tau-split-outside-class") << f.kind;
    failing.push_back(d_of(f.params));
  }
  EXPECT_EQ(failing.size(), 5U + 7U + 9U);
  for (int d : failing) EXPECT_EQ(d % 2, 0);
  EXPECT_EQ(r.equality_witnesses.size(), 4U + 6U + 8U);
}

TEST(Verifier, TauLowerBoundHoldsEverywhere) {
  const auto r = check_tau_minimality(30);
  EXPECT_TRUE(std::none_of(r.failures.begin(), r.failures.end(), [](const Failure& f) { return f.kind == "below-tau"; }));
  EXPECT_TRUE(std::none_of(r.failures.begin(), r.failures.end(),
                           [](const Failure& f) { return f.kind == "not-strictly-more"; }));
}

TEST(Verifier, ExistenceExamples) {
  const auto r = check_existence(10);
  const auto& w = r.equality_witnesses;
  auto has = [&](const std::string& prefix) {
    return std::any_of(w.begin(), w.end(), [&](const std::string& s) { return s.rfind(prefix, 0) == 0; });
  };
  EXPECT_FALSE(has("d=3:"));
  EXPECT_FALSE(has("d=4:"));
  EXPECT_TRUE(has("d=5:"));
  EXPECT_TRUE(has("d=7:"));
  EXPECT_FALSE(has("d=6:"));
}

TEST(Verifier, DichotomyAnchor) {
  EXPECT_EQ(Integer(tau(1, 9, 3) - eta(1, 20, 9)), 4);
  EXPECT_TRUE(check_dichotomy(9).passed());
}

TEST(Verifier, BarnetteExample) {
  const auto p = build(FamilySpec::truncations(3, 2));
  const auto f = face_lattice(p).f_vector();
  EXPECT_EQ(f.f(0), 8);
  EXPECT_EQ(f.f(2), 6);
  EXPECT_EQ(f.f(0), barnette_bound(0, 3, 6));
}

TEST(Verifier, RegistryCoversEverySuiteOnce) {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  for (const char* n : {"formula_vs_oracle", "monotonicity", "tau_minimality", "dichotomy", "small_cases", "tightness",
                        "existence", "barnette_truncations", "identities", "properties", "corpus_2d2"}) {
    EXPECT_NE(find_suite(n), nullptr) << n;
  }
  EXPECT_EQ(find_suite("nope"), nullptr);
}

TEST(Verifier, MarkdownAndJsonShapes) {
  const auto r = check_tau_minimality(8, std::vector<int>{3});
  const auto j = to_json(r);
  EXPECT_EQ(j.at("claim_id"), "tau_minimality");
  EXPECT_EQ(j.at("passed"), false);
  EXPECT_EQ(j.at("failures").size(), r.failures.size());
  const auto md = to_markdown(r, 2);
  EXPECT_NE(md.find("tau_minimality"), std::string::npos);
  EXPECT_NE(md.find("FAIL"), std::string::npos);
}
