#pragma once

/// Check suites. Each suite walks a parameter grid and returns a CheckReport;
/// an empty failure list means the claim held at every grid point. Grid points
/// run through parallel_map and are merged in index order, so reports do not
/// depend on the worker count.

#include "facecount/families.hpp"
#include "facecount/formulas.hpp"
#include "facecount/isomorphism.hpp"
#include "facecount/parallel.hpp"
#include "facecount/serialize.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace facecount {

struct Failure {
  std::string params;
  std::string expected;
  std::string actual;
  std::string kind;
};

struct CheckReport {
  std::string claim_id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> grid;
  std::vector<Failure> failures;
  std::vector<std::string> equality_witnesses;
  std::vector<std::string> findings;
  std::uint64_t points_checked = 0;

  bool passed() const { return failures.empty(); }

  void fail(std::string params, std::string expected, std::string actual, std::string kind) {
    failures.push_back({std::move(params), std::move(expected), std::move(actual), std::move(kind)});
  }

  void absorb(CheckReport&& part) {
    points_checked += part.points_checked;
    for (auto& f : part.failures) failures.push_back(std::move(f));
    for (auto& w : part.equality_witnesses) equality_witnesses.push_back(std::move(w));
    for (auto& f : part.findings) findings.push_back(std::move(f));
  }
};

namespace detail {

inline std::string label(std::initializer_list<std::pair<const char*, std::int64_t>> named) {
  std::string out;
  for (const auto& [name, value] : named) {
    if (!out.empty()) out += ",";
    out += name;
    out += "=";
    out += std::to_string(value);
  }
  return out;
}

inline std::string range(std::int64_t lo, std::int64_t hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

inline void require_grid(bool ok, const std::string& suite, const std::string& rule) {
  if (!ok) throw DomainError(suite + ": grid out of range, requires " + rule);
}

template <typename Fn>
void merge_parallel(CheckReport& report, std::size_t n, Fn fn, unsigned workers) {
  auto parts = parallel_map(n, fn, workers);
  for (auto& p : parts) report.absorb(std::move(p));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Formula against oracle

inline CheckReport check_formula_vs_oracle(int d_max, unsigned workers = 0) {
  detail::require_grid(d_max >= 2 && d_max <= 7, "formula_vs_oracle", "2 <= d_max <= 7");
  CheckReport report;
  report.claim_id = "formula_vs_oracle";
  report.statement = "closed-form f-vectors of tmprod, tmsum, triplex, J and A equal the oracle lattice counts";
  report.grid = {{"d", detail::range(2, d_max)}, {"a", "2..d"}, {"m", "1..floor(a/2)"}, {"s", "family range"}};

  std::vector<FamilySpec> specs;
  for (int d = 2; d <= d_max; ++d) {
    for (int a = 2; a <= d; ++a) {
      for (int m = 1; m <= a / 2; ++m) {
        specs.push_back(FamilySpec::tmprod(d, a, m));
        specs.push_back(FamilySpec::tmsum(d, a, m));
      }
    }
    for (int s = 1; s <= d; ++s) specs.push_back(FamilySpec::triplex(s, d));
    for (int s = 2; s <= d; ++s) specs.push_back(FamilySpec::j(s, d));
    if (d >= 3) specs.push_back(FamilySpec::a_family(d));
  }

  detail::merge_parallel(report, specs.size(), [&](std::size_t i) {
    CheckReport part;
    const auto& spec = specs[i];
    const auto name = to_string(spec);
    const auto p = build(spec);
    const auto got = face_lattice(p).f_vector();
    const auto want = expected_fvector(spec);
    ++part.points_checked;
    if (!want) {
      part.fail(name, "a formula f-vector", "none", "missing-formula");
    } else if (got != *want) {
      part.fail(name, want->str(), got.str(), "fvector-mismatch");
    }
    if (spec.family == Family::TmProd) {
      std::map<std::int64_t, std::int64_t> predicted, seen;
      for (const auto& c : facet_census_tmprod(spec.d, spec.a, spec.m)) {
        if (c.multiplicity > 0) predicted[c.vertex_count] += c.multiplicity;
      }
      for (const auto& f : p.facets()) ++seen[static_cast<std::int64_t>(f.vertices.count())];
      auto show = [](const std::map<std::int64_t, std::int64_t>& m) {
        std::string out;
        for (const auto& [size, mult] : m) out += (out.empty() ? "" : " ") + std::to_string(mult) + "x" + std::to_string(size);
        return out;
      };
      ++part.points_checked;
      if (predicted != seen) part.fail(name, show(predicted), show(seen), "facet-census-mismatch");
    }
    return part;
  }, workers);
  return report;
}

// ---------------------------------------------------------------------------
// Monotonicity along the d+2-vertex family

inline CheckReport check_monotonicity(int d_max, unsigned workers = 0) {
  detail::require_grid(d_max >= 4, "monotonicity", "d_max >= 4");
  CheckReport report;
  report.claim_id = "monotonicity";
  report.statement =
      "(i) f_k(T_m^{d,d-a}) <= f_k(T_{m+1}^{d,d-a}), strict iff m <= k; "
      "(ii) f_k(T_m^{d,d-a}) <= f_k(T_m^{d,d-a-1}), strict iff a-m <= k";
  report.grid = {{"d", detail::range(2, d_max)}, {"k", "0..d-1"}, {"a", "2..d"}, {"m", "1..floor(a/2)"}};

  auto compare = [](CheckReport& part, const std::string& where, const Integer& lo, const Integer& hi, bool strict_claimed) {
    ++part.points_checked;
    if (lo > hi) {
      part.fail(where, "<= " + hi.str(), lo.str(), "inequality-reversed");
    } else if (lo == hi) {
      part.equality_witnesses.push_back(where);
      if (strict_claimed) part.fail(where, "strict", "equal at " + lo.str(), "equal-where-strict-claimed");
    } else if (!strict_claimed) {
      part.fail(where, "equal", lo.str() + " < " + hi.str(), "strict-where-equality-claimed");
    }
  };

  const auto n = static_cast<std::size_t>(d_max - 1);
  detail::merge_parallel(report, n, [&](std::size_t i) {
    CheckReport part;
    const std::int64_t d = static_cast<std::int64_t>(i) + 2;
    for (std::int64_t a = 2; a <= d; ++a) {
      for (std::int64_t m = 1; m <= a / 2; ++m) {
        for (std::int64_t k = 0; k < d; ++k) {
          const auto here = pyr_sum_count(k, a, m, d);
          if (m + 1 <= a / 2) {
            compare(part, "(i) " + detail::label({{"d", d}, {"a", a}, {"m", m}, {"k", k}}), here,
                    pyr_sum_count(k, a, m + 1, d), m <= k);
          }
          if (a + 1 <= d) {
            compare(part, "(ii) " + detail::label({{"d", d}, {"a", a}, {"m", m}, {"k", k}}), here,
                    pyr_sum_count(k, a + 1, m, d), a - m <= k);
          }
        }
      }
    }
    return part;
  }, workers);
  return report;
}

// ---------------------------------------------------------------------------
// tau as the minimum over all d-polytopes with d+2 facets

inline CheckReport check_tau_minimality(int d_max, std::optional<std::vector<int>> s_set = std::nullopt,
                                        unsigned workers = 0) {
  detail::require_grid(d_max >= 4 && d_max <= 60, "tau_minimality", "4 <= d_max <= 60");
  if (s_set) {
    for (int s : *s_set) detail::require_grid(s >= 2, "tau_minimality", "every s >= 2");
  }
  CheckReport report;
  report.claim_id = "tau_minimality";
  report.statement =
      "min of f_k over (d-b)-fold pyramids over T(m) x T(b-m) with f_0 >= 2d+s-1 equals tau(k,d,s), "
      "attained at (b,m) = (floor((d+s)/2)+1, 2); and for d >= 6, s = 3, b >= a, m >= 3 the count exceeds tau "
      "for k <= d-3";
  report.grid = {{"d", detail::range(4, d_max)},
                 {"s", s_set ? "given set within 2..d-2" : "2..d-2"},
                 {"k", "1..d-1"},
                 {"(b,m)", "2 <= b <= d, 1 <= m <= floor(b/2)"}};

  struct Cell {
    std::uint64_t even_attained = 0, even_points = 0, odd_outside = 0, odd_points = 0, below = 0;
  };
  const auto n = static_cast<std::size_t>(d_max - 3);
  std::vector<Cell> cells(n);
  detail::merge_parallel(report, n, [&](std::size_t i) {
    CheckReport part;
    Cell& cell = cells[i];
    const std::int64_t d = static_cast<std::int64_t>(i) + 4;
    struct Candidate {
      std::int64_t f0, b, m;
      Integer value;
    };
    for (std::int64_t k = 1; k <= d - 1; ++k) {
      std::vector<Candidate> cand;
      for (std::int64_t b = 2; b <= d; ++b) {
        for (std::int64_t m = 1; m <= b / 2; ++m) cand.push_back({d + 1 + m * (b - m), b, m, pyr_prod_count(k, b, m, d)});
      }
      // Descending f_0; best[j] = index of the minimum value over cand[0..j].
      std::stable_sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) { return x.f0 > y.f0; });
      std::vector<std::size_t> best(cand.size());
      for (std::size_t j = 0; j < cand.size(); ++j) {
        best[j] = (j == 0 || cand[j].value < cand[best[j - 1]].value) ? j : best[j - 1];
      }
      for (std::int64_t s = 2; s <= d - 2; ++s) {
        if (s_set && std::find(s_set->begin(), s_set->end(), static_cast<int>(s)) == s_set->end()) continue;
        const auto where = detail::label({{"d", d}, {"s", s}, {"k", k}});
        const auto threshold = 2 * d + s - 1;
        const auto t = tau(k, d, s);
        const auto a = (d + s) / 2 + 1;
        const auto split_f0 = d + 1 + 2 * (a - 2);
        // last candidate still inside the class
        std::size_t last = 0;
        bool any = false;
        for (std::size_t j = 0; j < cand.size() && cand[j].f0 >= threshold; ++j) {
          last = j;
          any = true;
        }
        ++part.points_checked;
        const bool odd = (d + s) % 2 != 0;
        (odd ? cell.odd_points : cell.even_points)++;
        if (!any) {
          part.fail(where, "tau=" + t.str(), "no polytope with d+2 facets and f_0 >= " + std::to_string(threshold),
                    "empty-class");
          continue;
        }
        const auto& mn = cand[best[last]];
        const bool split_inside = split_f0 >= threshold;
        const auto split_value = pyr_prod_count(k, a, 2, d);
        const std::string actual = "min=" + mn.value.str() + " at " + detail::label({{"b", mn.b}, {"m", mn.m}}) +
                                   "; split (" + detail::label({{"b", a}, {"m", 2}}) +
                                   ") has f_0=" + std::to_string(split_f0);
        const std::string expected = "min=tau=" + t.str() + " at " + detail::label({{"b", a}, {"m", 2}});
        if (mn.value < t) {
          ++cell.below;
          part.fail(where, expected, actual, "below-tau");
        } else if (mn.value != t) {
          part.fail(where, expected, actual, split_inside ? "minimum-exceeds-tau" : "minimum-exceeds-tau-split-outside-class");
        } else if (!split_inside) {
          part.fail(where, expected, actual, "split-outside-class");
        } else if (split_value != mn.value) {
          part.fail(where, expected, actual, "not-attained-at-split");
        } else {
          part.equality_witnesses.push_back(where + " attained at " + detail::label({{"b", a}, {"m", 2}}));
        }
        if (!odd && split_inside && mn.value == t && split_value == t) ++cell.even_attained;
        if (odd && !split_inside) ++cell.odd_outside;
      }
    }
    // Strict comparison against the split point for s = 3, m >= 3.
    if (d >= 6 && (!s_set || std::find(s_set->begin(), s_set->end(), 3) != s_set->end())) {
      const auto a = (d + 3) / 2 + 1;
      for (std::int64_t b = a; b <= d; ++b) {
        for (std::int64_t m = 3; m <= b / 2; ++m) {
          for (std::int64_t k = 0; k <= d - 3; ++k) {
            ++part.points_checked;
            const auto lhs = pyr_prod_count(k, b, m, d);
            const auto rhs = pyr_prod_count(k, a, 2, d);
            if (!(lhs > rhs)) {
              part.fail("strict " + detail::label({{"d", d}, {"b", b}, {"m", m}, {"k", k}}), "> " + rhs.str(),
                        lhs.str(), "not-strictly-more");
            }
          }
        }
      }
    }
    return part;
  }, workers);

  Cell total;
  for (const auto& c : cells) {
    total.even_attained += c.even_attained;
    total.even_points += c.even_points;
    total.odd_outside += c.odd_outside;
    total.odd_points += c.odd_points;
    total.below += c.below;
  }
  report.findings.push_back("lower bound min >= tau: violated at " + std::to_string(total.below) + " of " +
                            std::to_string(total.even_points + total.odd_points) + " points");
  report.findings.push_back("d+s even: minimum equals tau and is attained at the split at " +
                            std::to_string(total.even_attained) + " of " + std::to_string(total.even_points) +
                            " points");
  report.findings.push_back("d+s odd: the split point has 2d+s-2 vertices, outside the class f_0 >= 2d+s-1, at " +
                            std::to_string(total.odd_outside) + " of " + std::to_string(total.odd_points) + " points");
  return report;
}

// ---------------------------------------------------------------------------
// eta against tau at 2d+2 vertices, and the auxiliary inequalities

inline CheckReport check_dichotomy(int d_max, unsigned workers = 0) {
  detail::require_grid(d_max >= 9 && d_max <= 60, "dichotomy", "9 <= d_max <= 60");
  CheckReport report;
  report.claim_id = "dichotomy";
  report.statement =
      "(i) eta_k(2d+2,d) < tau_k(2d+2,d) for 1 <= k <= ceil(d/3)-2; (ii) eta > tau for floor(0.4d) <= k <= d-1; "
      "(iii) C(d-2,k+1)-C(ceil(d/2)-1,k+1)-C(ceil(d/2)-2,k+1)-C(d-4,k)-C(d-5,k) > 0 for 1 <= k <= d-3, = 0 for "
      "k = d-2, d-1; (iv), (v) strict upper bounds on eta_k(2d+2,d) by counts one dimension down";
  report.grid = {{"d (i),(ii)", detail::range(9, d_max)},
                 {"d (iii)", detail::range(6, d_max)},
                 {"d (iv)", detail::range(4, d_max)},
                 {"d (v)", detail::range(5, d_max)},
                 {"k", "stated ranges"}};

  {
    ++report.points_checked;
    const auto gap = tau(1, 9, 3) - eta(1, 20, 9);
    if (gap != 4) {
      report.fail("anchor d=9,k=1", "tau-eta=4", gap.str(), "anchor-mismatch");
    } else {
      report.equality_witnesses.push_back("anchor d=9,k=1: tau-eta=4");
    }
  }

  const auto n = static_cast<std::size_t>(d_max - 3);
  std::vector<Integer> min_iv(n, Integer(-1)), min_v(n, Integer(-1));
  detail::merge_parallel(report, n, [&](std::size_t i) {
    CheckReport part;
    const std::int64_t d = static_cast<std::int64_t>(i) + 4;
    if (d >= 9) {
      const auto lo_end = (d + 2) / 3 - 2;  // ceil(d/3) - 2
      const auto hi_start = (2 * d) / 5;                           // floor(0.4 d)
      for (std::int64_t k = 1; k <= d - 1; ++k) {
        const auto e = eta(k, 2 * d + 2, d);
        const auto t = tau(k, d, 3);
        const auto where = detail::label({{"d", d}, {"k", k}});
        if (k <= lo_end) {
          ++part.points_checked;
          if (!(e < t)) part.fail("(i) " + where, "eta < tau=" + t.str(), "eta=" + e.str(), "eta-not-below-tau");
        }
        if (k >= hi_start) {
          ++part.points_checked;
          if (!(e > t)) part.fail("(ii) " + where, "eta > tau=" + t.str(), "eta=" + e.str(), "eta-not-above-tau");
        }
      }
    }
    if (d >= 6) {
      const auto c = detail::ceil_half(d);
      for (std::int64_t k = 1; k <= d - 1; ++k) {
        ++part.points_checked;
        const Integer v = binomial(d - 2, k + 1) - binomial(c - 1, k + 1) - binomial(c - 2, k + 1) -
                          binomial(d - 4, k) - binomial(d - 5, k);
        const auto where = "(iii) " + detail::label({{"d", d}, {"k", k}});
        if (k <= d - 3) {
          if (!(v > 0)) part.fail(where, "> 0", v.str(), "not-positive");
        } else if (v != 0) {
          part.fail(where, "0", v.str(), "not-zero");
        } else {
          part.equality_witnesses.push_back(where + " expression = 0");
        }
      }
    }
    // One dimension down: d' = d-1 with 2d'+1 vertices (s = 2). The counts on
    // the right are evaluated from the closed forms, also where d' is below
    // the range those forms are stated for.
    const std::int64_t dp = d - 1;
    for (std::int64_t k = 1; k <= d - 2; ++k) {
      const auto lhs = eta(k, 2 * d + 2, d);
      const Integer tail = binomial(d - 1, k) + binomial(d - 2, k);
      const Integer rhs_iv = formula_body::tau(k, dp, 2) + formula_body::eta(k - 1, dp, 2) + tail;
      ++part.points_checked;
      if (!(lhs < rhs_iv)) {
        part.fail("(iv) " + detail::label({{"d", d}, {"k", k}}), "< " + rhs_iv.str(), lhs.str(), "not-strict");
      }
      if (min_iv[i] < 0 || rhs_iv - lhs < min_iv[i]) min_iv[i] = rhs_iv - lhs;
      if (d >= 5) {
        const Integer rhs_v = formula_body::tau(k, dp, 2) + formula_body::tau(k - 1, dp, 2) + tail;
        ++part.points_checked;
        if (!(lhs < rhs_v)) {
          part.fail("(v) " + detail::label({{"d", d}, {"k", k}}), "< " + rhs_v.str(), lhs.str(), "not-strict");
        }
        if (min_v[i] < 0 || rhs_v - lhs < min_v[i]) min_v[i] = rhs_v - lhs;
      }
    }
    return part;
  }, workers);

  auto smallest = [](const std::vector<Integer>& v) {
    Integer out = -1;
    for (const auto& x : v) {
      if (x >= 0 && (out < 0 || x < out)) out = x;
    }
    return out;
  };
  report.findings.push_back("(iv) smallest margin rhs-lhs: " + smallest(min_iv).str());
  report.findings.push_back("(v) smallest margin rhs-lhs: " + smallest(min_v).str());
  return report;
}

// ---------------------------------------------------------------------------
// Small cases

struct FvectorCase {
  FamilySpec spec;
  std::vector<long long> counts;
};

inline const std::vector<FvectorCase>& reproduction_table() {
  static const std::vector<FvectorCase> table{
      {FamilySpec::sigma(3), {7, 11, 6}},
      {FamilySpec::j(2, 3), {7, 11, 6}},
      {FamilySpec::a_family(4), {10, 21, 18, 7}},
      {FamilySpec::j(3, 4), {10, 21, 18, 7}},
      {FamilySpec::c_family(4), {10, 21, 18, 7}},
      {FamilySpec::sigma(4), {10, 21, 18, 7}},
      {FamilySpec::tmprod(5, 5, 2), {12, 30, 34, 21, 7}},
      {FamilySpec::a_family(5), {12, 32, 39, 25, 8}},
      {FamilySpec::j(3, 5), {12, 32, 39, 25, 8}},
  };
  return table;
}

inline CheckReport check_reproductions(unsigned workers = 0) {
  CheckReport report;
  report.claim_id = "reproductions";
  report.statement = "oracle f-vectors of the small named polytopes";
  report.grid = {{"cases", std::to_string(reproduction_table().size())}};
  const auto& table = reproduction_table();
  detail::merge_parallel(report, table.size(), [&](std::size_t i) {
    CheckReport part;
    const auto& c = table[i];
    const auto want = FaceCountVector::from(c.spec.d, c.counts, true);
    const auto got = face_lattice(build(c.spec)).f_vector();
    ++part.points_checked;
    if (got != want) part.fail(to_string(c.spec), want.str(), got.str(), "fvector-mismatch");
    return part;
  }, workers);
  return report;
}

inline CheckReport check_small_cases(unsigned workers = 0) {
  CheckReport report = check_reproductions(workers);
  report.claim_id = "small_cases";
  report.statement = "small named polytopes: f-vectors, A(3) is the cube, vertex and facet counts of C(d) and Sigma(d)";
  report.grid.push_back({"C, Sigma d", "3..6"});

  {
    ++report.points_checked;
    const auto cube = product(product(simplex(1), simplex(1)), simplex(1));
    if (!isomorphic(build(FamilySpec::a_family(3)).incidence(), cube.incidence())) {
      report.fail("A:d=3", "combinatorial cube", "different type", "not-cube");
    }
  }
  std::vector<FamilySpec> counted;
  for (int d = 3; d <= 6; ++d) {
    counted.push_back(FamilySpec::c_family(d));
    counted.push_back(FamilySpec::sigma(d));
  }
  detail::merge_parallel(report, counted.size(), [&](std::size_t i) {
    CheckReport part;
    const auto& spec = counted[i];
    const auto p = build(spec);
    const auto stated = stated_counts(spec);
    ++part.points_checked;
    if (Integer(p.n_vertices()) != *stated.vertices) {
      part.fail(to_string(spec), "f_0=" + stated.vertices->str(), "f_0=" + std::to_string(p.n_vertices()),
                "vertex-count");
    }
    if (stated.facets) {
      ++part.points_checked;
      if (Integer(p.facets().size()) != *stated.facets) {
        part.fail(to_string(spec), "f_{d-1}=" + stated.facets->str(), "f_{d-1}=" + std::to_string(p.facets().size()),
                  "facet-count");
      }
    }
    return part;
  }, workers);
  report.findings.push_back(
      "not built: a stated f-vector (12,33,40,25,8) for a pyramid over a J with parameters outside its range");
  return report;
}

// ---------------------------------------------------------------------------
// Tightness at 2d+2 vertices

inline CheckReport check_tightness(int d_lo = 3, int d_hi = 7, unsigned workers = 0) {
  detail::require_grid(d_lo >= 3 && d_hi <= 7 && d_lo <= d_hi, "tightness", "3 <= d_lo <= d_hi <= 7");
  CheckReport report;
  report.claim_id = "tightness";
  report.statement =
      "f_k(J(3,d)) = f_k(A(d)) = eta_k(2d+2,d); for odd d >= 5 the (d-a)-fold pyramid over T(2) x T(a-2), "
      "a = floor((d+3)/2)+1, has 2d+2 vertices and f_k = tau_k(2d+2,d)";
  report.grid = {{"d", detail::range(d_lo, d_hi)}, {"k", "1..d-1"}};

  struct Job {
    FamilySpec spec;
    bool uses_tau;
  };
  std::vector<Job> jobs;
  for (int d = d_lo; d <= d_hi; ++d) {
    jobs.push_back({FamilySpec::j(3, d), false});
    jobs.push_back({FamilySpec::a_family(d), false});
    if (d % 2 == 1 && d >= 5) jobs.push_back({FamilySpec::tmprod(d, (d + 3) / 2 + 1, 2), true});
  }
  detail::merge_parallel(report, jobs.size(), [&](std::size_t i) {
    CheckReport part;
    const auto& job = jobs[i];
    const std::int64_t d = job.spec.d;
    const auto name = to_string(job.spec);
    const auto got = face_lattice(build(job.spec)).f_vector();
    ++part.points_checked;
    if (got.counts().front() != 2 * d + 2) {
      part.fail(name, "f_0=" + std::to_string(2 * d + 2), "f_0=" + got.counts().front().str(), "vertex-count");
    }
    for (std::int64_t k = 1; k <= d - 1; ++k) {
      ++part.points_checked;
      const auto want = job.uses_tau ? tau(k, d, 3) : eta(k, 2 * d + 2, d);
      const auto& have = got.counts()[static_cast<std::size_t>(k)];
      const auto where = name + " k=" + std::to_string(k);
      if (have != want) {
        part.fail(where, (job.uses_tau ? "tau=" : "eta=") + want.str(), have.str(), "not-tight");
      } else {
        part.equality_witnesses.push_back(where + (job.uses_tau ? " attains tau" : " attains eta"));
      }
    }
    return part;
  }, workers);
  return report;
}

// ---------------------------------------------------------------------------
// Existence of d+2-facet polytopes with 2d+2 vertices

inline CheckReport check_existence(int d_max) {
  detail::require_grid(d_max >= 2 && d_max <= 200, "existence", "2 <= d_max <= 200");
  CheckReport report;
  report.claim_id = "existence";
  report.statement = "m(a-m) = d+1 has a solution with 2 <= a <= d, 1 <= m <= floor(a/2) iff d+1 is composite and d != 3";
  report.grid = {{"d", detail::range(2, d_max)}};
  for (std::int64_t d = 2; d <= d_max; ++d) {
    ++report.points_checked;
    std::optional<std::pair<std::int64_t, std::int64_t>> solution;
    for (std::int64_t a = 2; a <= d && !solution; ++a) {
      for (std::int64_t m = 1; m <= a / 2; ++m) {
        if (m * (a - m) == d + 1) {
          solution = std::pair{a, m};
          break;
        }
      }
    }
    bool composite = false;
    for (std::int64_t q = 2; q * q <= d + 1; ++q) composite = composite || (d + 1) % q == 0;
    const bool condition = composite && d != 3;
    const auto where = detail::label({{"d", d}});
    if (solution && !condition) {
      report.fail(where, "no solution", detail::label({{"a", solution->first}, {"m", solution->second}}),
                  "solution-without-condition");
    } else if (!solution && condition) {
      report.fail(where, "a solution", "none", "condition-without-solution");
    } else if (solution) {
      report.equality_witnesses.push_back(where + ": " + detail::label({{"a", solution->first}, {"m", solution->second}}));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Barnette's bound on truncation polytopes

inline CheckReport check_barnette_truncations(int d_max, unsigned workers = 0) {
  detail::require_grid(d_max >= 2 && d_max <= 6, "barnette_truncations", "2 <= d_max <= 6");
  CheckReport report;
  report.claim_id = "barnette_truncations";
  report.statement =
      "T(d) truncated at n = 0..3 simple vertices is simple, has d+1+n facets and d+1, 2d, 3d-1, 4d-2 vertices, "
      "and meets the bound C(d,k+1) n_facets - C(d+1,k+1)(d-1-k) (k >= 1), (d-1) n_facets - (d+1)(d-2) (k = 0) "
      "with equality";
  report.grid = {{"d", detail::range(2, d_max)}, {"n", "0..3"}, {"k", "0..d-2"}};
  std::vector<FamilySpec> specs;
  for (int d = 2; d <= d_max; ++d) {
    for (int n = 0; n <= 3; ++n) specs.push_back(FamilySpec::truncations(d, n));
  }
  detail::merge_parallel(report, specs.size(), [&](std::size_t i) {
    CheckReport part;
    const auto& spec = specs[i];
    const std::int64_t d = spec.d;
    const auto name = to_string(spec);
    const auto p = build(spec);
    const auto lat = face_lattice(p);
    const auto& f = lat.f_vector();
    const std::int64_t stated_f0[4] = {d + 1, 2 * d, 3 * d - 1, 4 * d - 2};
    ++part.points_checked;
    if (f.counts().front() != stated_f0[spec.n]) {
      part.fail(name, "f_0=" + std::to_string(stated_f0[spec.n]), "f_0=" + f.counts().front().str(), "vertex-count");
    }
    ++part.points_checked;
    if (f.counts().back() != d + 1 + spec.n) {
      part.fail(name, "f_{d-1}=" + std::to_string(d + 1 + spec.n), "f_{d-1}=" + f.counts().back().str(),
                "facet-count");
    }
    for (std::size_t v = 0; v < p.n_vertices(); ++v) {
      ++part.points_checked;
      const auto deg = vertex_degree(p, lat, v);
      if (deg != p.dim()) {
        part.fail(name + " v=" + std::to_string(v), "degree d", "degree " + std::to_string(deg), "not-simple");
      }
    }
    const auto facets = static_cast<std::int64_t>(p.facets().size());
    for (std::int64_t k = 0; k <= d - 2; ++k) {
      ++part.points_checked;
      const auto bound = barnette_bound(k, d, facets);
      const auto& have = f.counts()[static_cast<std::size_t>(k)];
      const auto where = name + " k=" + std::to_string(k);
      if (have != bound) {
        part.fail(where, "= " + bound.str(), have.str(), have < bound ? "below-bound" : "strict");
      } else {
        part.equality_witnesses.push_back(where);
      }
    }
    return part;
  }, workers);
  return report;
}

// ---------------------------------------------------------------------------
// Binomial identities and the theta inequality

inline CheckReport check_identities(unsigned workers = 0) {
  CheckReport report;
  report.claim_id = "identities";
  report.statement =
      "Pascal rule; C(n,c)-C(n-a,c) = sum_{i=1..a} C(n-i,c-1); C(n,c) = sum_{i=1..n} C(n-i,c-1); "
      "theta_k(d+s-r,d-1) + sum_{i=1..r} C(d+1-i,k) >= theta_k(d+s,d), equality only if r = 2 or r = s; "
      "tau's two forms agree for s = 3; the d+2 vertex and facet counts are reflections";
  report.grid = {{"Pascal", "1 <= c <= n <= 200"},
                 {"difference", "1 <= a <= n <= 100, 1 <= c <= n"},
                 {"column", "1 <= c, n <= 100"},
                 {"theta", "2 <= r <= s <= d <= 40, 1 <= k <= d-1"},
                 {"tau forms", "d in 4..100, s = 3, 1 <= k <= d-1"},
                 {"reflection", "d <= 40"}};

  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t c = 1; c <= n; ++c) {
      ++report.points_checked;
      if (binomial(n, c) != binomial(n - 1, c - 1) + binomial(n - 1, c)) {
        report.fail("pascal " + detail::label({{"n", n}, {"c", c}}), "equal", "differs", "pascal");
      }
    }
  }
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (std::int64_t c = 1; c <= n; ++c) {
      Integer run = 0;
      for (std::int64_t a = 1; a <= n; ++a) {
        run += binomial(n - a, c - 1);
        ++report.points_checked;
        if (binomial(n, c) - binomial(n - a, c) != run) {
          report.fail("difference " + detail::label({{"n", n}, {"c", c}, {"a", a}}), run.str(),
                      Integer(binomial(n, c) - binomial(n - a, c)).str(), "difference");
        }
      }
    }
  }
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (std::int64_t c = 1; c <= 100; ++c) {
      Integer sum = 0;
      for (std::int64_t i = 1; i <= n; ++i) sum += binomial(n - i, c - 1);
      ++report.points_checked;
      if (sum != binomial(n, c)) {
        report.fail("column " + detail::label({{"n", n}, {"c", c}}), binomial(n, c).str(), sum.str(), "column-sum");
      }
    }
  }

  // theta inequality, parallel over d. At k = d-1 the (d-1)-dimensional term
  // is evaluated from the closed form outside its stated k-range.
  std::vector<std::vector<std::string>> off_condition(41);
  std::vector<std::uint64_t> off_below_top(41, 0);
  detail::merge_parallel(report, 39, [&](std::size_t i) {
    CheckReport part;
    const std::int64_t d = static_cast<std::int64_t>(i) + 2;
    for (std::int64_t s = 2; s <= d; ++s) {
      for (std::int64_t r = 2; r <= s; ++r) {
        for (std::int64_t k = 1; k <= d - 1; ++k) {
          ++part.points_checked;
          Integer lhs = formula_body::theta(k, d - 1, s - r + 1);
          for (std::int64_t j = 1; j <= r; ++j) lhs += binomial(d + 1 - j, k);
          const auto rhs = theta(k, d + s, d);
          const auto where = detail::label({{"d", d}, {"s", s}, {"r", r}, {"k", k}});
          if (lhs < rhs) {
            part.fail("theta " + where, ">= " + rhs.str(), lhs.str(), "theta-inequality");
          } else if (lhs == rhs) {
            part.equality_witnesses.push_back("theta " + where);
            if (r != 2 && r != s) {
              off_condition[static_cast<std::size_t>(d)].push_back(where);
              if (k != d - 1) ++off_below_top[static_cast<std::size_t>(d)];
            }
          }
        }
      }
    }
    return part;
  }, workers);
  std::uint64_t off = 0, below_top = 0;
  std::string examples;
  for (std::size_t d = 0; d < off_condition.size(); ++d) {
    off += off_condition[d].size();
    below_top += off_below_top[d];
    for (const auto& w : off_condition[d]) {
      if (std::count(examples.begin(), examples.end(), ';') < 2) examples += (examples.empty() ? "" : "; ") + w;
    }
  }
  if (off > 0) {
    report.findings.push_back("theta inequality: " + std::to_string(off) +
                              " equality points with 2 < r < s, where only r = 2 or r = s was expected; " +
                              std::to_string(below_top) + " of them have k < d-1; e.g. " + examples);
  } else {
    report.findings.push_back("theta inequality: equality occurs only at r = 2 or r = s on this grid");
  }

  for (std::int64_t d = 4; d <= 100; ++d) {
    for (std::int64_t k = 1; k <= d - 1; ++k) {
      ++report.points_checked;
      if (d - 2 >= 3) {
        try {
          (void)tau(k, d, 3);
        } catch (const InvariantViolation& e) {
          report.fail("tau forms " + detail::label({{"d", d}, {"k", k}}), "equal", e.what(), "tau-forms");
        }
      } else if (formula_body::tau(k, d, 3) != formula_body::tau_2d2_ceil_form(k, d)) {
        report.fail("tau forms " + detail::label({{"d", d}, {"k", k}}), "equal", "differs", "tau-forms");
      }
    }
  }
  for (std::int64_t d = 2; d <= 40; ++d) {
    for (std::int64_t a = 2; a <= d; ++a) {
      for (std::int64_t m = 1; m <= a / 2; ++m) {
        for (std::int64_t k = 0; k < d; ++k) {
          ++report.points_checked;
          try {
            (void)pyr_sum_count(k, a, m, d);
          } catch (const InvariantViolation& e) {
            report.fail("reflection " + detail::label({{"d", d}, {"a", a}, {"m", m}, {"k", k}}), "equal", e.what(),
                        "reflection");
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Corpus properties

namespace detail {

inline std::vector<VertexSet> faces_with_ends(const FaceLattice& lat, int grade) {
  const auto d = static_cast<int>(lat.dim());
  if (grade == -1) return {VertexSet(lat.n_vertices())};
  if (grade == d) return {VertexSet::full(lat.n_vertices())};
  return lat.faces(static_cast<std::size_t>(grade));
}

}  // namespace detail

inline CheckReport check_properties(int d_max, unsigned workers = 0) {
  detail::require_grid(d_max >= 2 && d_max <= 6, "properties", "2 <= d_max <= 6");
  CheckReport report;
  report.claim_id = "properties";
  report.statement =
      "on every corpus polytope: Euler relation, polar f-vector reversal, f_k(P) >= f_k(F) + f_{k-1}(F) for facets F, "
      "truncation threshold independence, truncation choice independence, diamond property, theta lower bounds, "
      "vertex figure Euler relation";
  report.grid = {{"corpus d", detail::range(2, d_max)}};
  const auto specs = corpus(d_max);
  report.grid.push_back({"corpus size", std::to_string(specs.size())});

  detail::merge_parallel(report, specs.size(), [&](std::size_t idx) {
    CheckReport part;
    const auto& spec = specs[idx];
    const auto name = to_string(spec);
    const auto p = build(spec);
    const auto lat = face_lattice(p);
    const auto& f = lat.f_vector();
    const int d = static_cast<int>(p.dim());

    ++part.points_checked;
    if (f.euler_characteristic() != FaceCountVector::expected_euler(d)) {
      part.fail(name, "Euler " + FaceCountVector::expected_euler(d).str(), f.euler_characteristic().str(), "euler");
    }
    ++part.points_checked;
    if (auto msg = p.incidence().validate(p.dim()); !msg.empty()) part.fail(name, "valid incidence", msg, "incidence");

    ++part.points_checked;
    const auto dual_f = face_lattice(polar_dual(p)).f_vector();
    if (dual_f != f.reversed()) part.fail(name, f.reversed().str(), dual_f.str(), "duality-reversal");

    for (std::size_t fi = 0; fi < lat.faces(p.dim() - 1).size(); ++fi) {
      const auto& facet = lat.faces(p.dim() - 1)[fi];
      const auto ff = face_fvector(lat, facet, p.dim() - 1);
      for (int k = 0; k < d; ++k) {
        ++part.points_checked;
        const Integer rhs = ff.f(k) + ff.f(k - 1);
        const auto where = name + " facet=" + std::to_string(fi) + " k=" + std::to_string(k);
        if (f.f(k) < rhs) {
          part.fail(where, ">= " + rhs.str(), f.f(k).str(), "facet-inequality");
        } else if (f.f(k) == rhs) {
          part.equality_witnesses.push_back("facet inequality " + where);
        }
      }
    }

    // threshold independence on the first vertex, edge and (d >= 3) 2-face
    for (std::size_t g = 0; g + 1 < p.dim() && g < 3; ++g) {
      const auto& face = lat.faces(g).front();
      const auto ref = truncate_face(p, lat, face).incidence();
      for (const auto& pos : {Rational(1, 5), Rational(7, 8)}) {
        ++part.points_checked;
        const auto other = truncate_face(p, lat, face, pos).incidence();
        if (!(other == ref)) {
          part.fail(name + " grade=" + std::to_string(g) + " position=" + pos.str(),
                    "identical incidence", "differs", "threshold-dependence");
        }
      }
    }

    if (spec.family == Family::J || spec.family == Family::A || spec.family == Family::C) {
      const auto choices = all_truncation_choices(spec);
      const auto ref = canonical_form(choices.front().incidence());
      for (std::size_t c = 1; c < choices.size(); ++c) {
        ++part.points_checked;
        if (!(canonical_form(choices[c].incidence()) == ref)) {
          part.fail(name + " choice=" + std::to_string(c), "isomorphic to choice 0", "different type",
                    "choice-dependence");
        }
      }
    }

    if (lat.total_faces() <= 10000) {
      std::mt19937_64 rng(0x5eed0000ULL + idx);
      for (int trial = 0; trial < 24; ++trial) {
        const int g = static_cast<int>(rng() % static_cast<std::uint64_t>(d)) - 1;  // -1..d-2
        const auto lower = detail::faces_with_ends(lat, g);
        const auto& low = lower[rng() % lower.size()];
        std::vector<VertexSet> above;
        for (const auto& h : detail::faces_with_ends(lat, g + 2)) {
          if (low.is_subset_of(h)) above.push_back(h);
        }
        if (above.empty()) continue;
        const auto& high = above[rng() % above.size()];
        std::size_t between = 0;
        for (const auto& m : detail::faces_with_ends(lat, g + 1)) between += (low.is_subset_of(m) && m.is_subset_of(high)) ? 1 : 0;
        ++part.points_checked;
        if (between != 2) {
          part.fail(name + " diamond grade=" + std::to_string(g), "2 faces between", std::to_string(between), "diamond");
        }
      }
    }

    const std::int64_t f0 = static_cast<std::int64_t>(p.n_vertices());
    for (std::int64_t s = 1; s <= std::min<std::int64_t>(d, f0 - d); ++s) {
      for (std::int64_t k = 1; k <= d - 1; ++k) {
        ++part.points_checked;
        const auto bound = theta(k, d + s, d);
        const auto& have = f.counts()[static_cast<std::size_t>(k)];
        const auto where = name + " s=" + std::to_string(s) + " k=" + std::to_string(k);
        if (have < bound) {
          part.fail(where, ">= theta=" + bound.str(), have.str(), f0 == d + s ? "theta-exact-count" : "theta-at-least");
        } else if (have == bound) {
          part.equality_witnesses.push_back("theta " + where);
        }
      }
    }

    if (d >= 2) {
      for (std::size_t v = 0; v < p.n_vertices(); ++v) {
        ++part.points_checked;
        try {
          (void)vertex_figure_counts(p, lat, v);
        } catch (const DomainError& e) {
          part.fail(name + " v=" + std::to_string(v), "Euler relation", e.what(), "vertex-figure");
        }
      }
    }
    return part;
  }, workers);
  return report;
}

// ---------------------------------------------------------------------------
// Lower bounds at 2d+2 vertices over the corpus

inline CheckReport check_corpus_2d2(int d_max, unsigned workers = 0) {
  detail::require_grid(d_max >= 3 && d_max <= 7, "corpus_2d2", "3 <= d_max <= 7");
  CheckReport report;
  report.claim_id = "corpus_2d2";
  report.statement =
      "corpus polytopes with 2d+2 vertices: f_k >= eta_k(2d+2,d) when they have >= d+3 facets, "
      "f_k >= tau_k(2d+2,d) when they have d+2 facets";
  report.grid = {{"corpus d", detail::range(3, d_max)}, {"k", "1..d-1"}};
  const auto specs = corpus(d_max, 3);
  std::vector<std::string> in_class(specs.size());
  detail::merge_parallel(report, specs.size(), [&](std::size_t i) {
    CheckReport part;
    const auto& spec = specs[i];
    const std::int64_t d = spec.d;
    const auto p = build(spec);
    if (static_cast<std::int64_t>(p.n_vertices()) != 2 * d + 2) return part;
    const auto f = face_lattice(p).f_vector();
    const auto facets = f.counts().back();
    const bool many = facets >= d + 3;
    if (!many && d < 5) return part;  // no stated bound at d+2 facets in this range
    in_class[i] = to_string(spec) + (many ? " (>= d+3 facets)" : " (d+2 facets)");
    for (std::int64_t k = 1; k <= d - 1; ++k) {
      ++part.points_checked;
      const auto bound = many ? eta(k, 2 * d + 2, d) : tau(k, d, 3);
      const auto& have = f.counts()[static_cast<std::size_t>(k)];
      const auto where = to_string(spec) + " k=" + std::to_string(k);
      if (have < bound) {
        part.fail(where, std::string(many ? ">= eta=" : ">= tau=") + bound.str(), have.str(), "below-bound");
      } else if (have == bound) {
        part.equality_witnesses.push_back(where);
      }
    }
    return part;
  }, workers);
  std::string members;
  for (const auto& s : in_class) {
    if (!s.empty()) members += (members.empty() ? "" : ", ") + s;
  }
  report.findings.push_back("polytopes in the class: " + (members.empty() ? std::string("none") : members));
  return report;
}

// ---------------------------------------------------------------------------
// Registry

struct SuiteOptions {
  std::optional<int> d_max;
  unsigned workers = 0;
};

struct Suite {
  std::string name;
  int default_d_max;  // 0 when the suite takes no grid bound
  std::function<CheckReport(const SuiteOptions&)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"formula_vs_oracle", 7, [](const SuiteOptions& o) { return check_formula_vs_oracle(o.d_max.value_or(7), o.workers); }},
      {"monotonicity", 30, [](const SuiteOptions& o) { return check_monotonicity(o.d_max.value_or(30), o.workers); }},
      {"tau_minimality", 60,
       [](const SuiteOptions& o) { return check_tau_minimality(o.d_max.value_or(60), std::nullopt, o.workers); }},
      {"dichotomy", 60, [](const SuiteOptions& o) { return check_dichotomy(o.d_max.value_or(60), o.workers); }},
      {"small_cases", 0, [](const SuiteOptions& o) { return check_small_cases(o.workers); }},
      {"tightness", 7, [](const SuiteOptions& o) { return check_tightness(3, o.d_max.value_or(7), o.workers); }},
      {"existence", 200, [](const SuiteOptions& o) { return check_existence(o.d_max.value_or(200)); }},
      {"barnette_truncations", 6,
       [](const SuiteOptions& o) { return check_barnette_truncations(o.d_max.value_or(6), o.workers); }},
      {"identities", 0, [](const SuiteOptions& o) { return check_identities(o.workers); }},
      {"properties", 6, [](const SuiteOptions& o) { return check_properties(o.d_max.value_or(6), o.workers); }},
      {"corpus_2d2", 7,
       [](const SuiteOptions& o) { return check_corpus_2d2(o.d_max.value_or(7), o.workers); }},
  };
  return all;
}

inline const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Output

inline Json to_json(const CheckReport& r) {
  Json grid = Json::object();
  for (const auto& [k, v] : r.grid) grid[k] = v;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"params", f.params}, {"expected", f.expected}, {"actual", f.actual}, {"class", f.kind}});
  }
  return Json{{"claim_id", r.claim_id},
              {"statement", r.statement},
              {"passed", r.passed()},
              {"grid", grid},
              {"points_checked", std::to_string(r.points_checked)},
              {"failure_count", std::to_string(r.failures.size())},
              {"failures", failures},
              {"equality_witness_count", std::to_string(r.equality_witnesses.size())},
              {"equality_witnesses", r.equality_witnesses},
              {"findings", r.findings}};
}

inline std::string to_markdown(const CheckReport& r, std::size_t max_rows = 20) {
  std::ostringstream out;
  out << "## " << r.claim_id << ": " << (r.passed() ? "PASS" : "FAIL") << "\n\n";
  out << r.statement << "\n\n";
  out << "| grid | range |\n|---|---|\n";
  for (const auto& [k, v] : r.grid) out << "| " << k << " | " << v << " |\n";
  out << "\npoints checked: " << r.points_checked << ", failures: " << r.failures.size()
      << ", equality witnesses: " << r.equality_witnesses.size() << "\n";
  if (!r.failures.empty()) {
    std::map<std::string, std::size_t> by_kind;
    for (const auto& f : r.failures) ++by_kind[f.kind];
    out << "\n| failure class | count |\n|---|---|\n";
    for (const auto& [k, n] : by_kind) out << "| " << k << " | " << n << " |\n";
    out << "\n| params | expected | actual | class |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < r.failures.size() && i < max_rows; ++i) {
      const auto& f = r.failures[i];
      out << "| " << f.params << " | " << f.expected << " | " << f.actual << " | " << f.kind << " |\n";
    }
    if (r.failures.size() > max_rows) out << "\n(" << r.failures.size() - max_rows << " more failures)\n";
  }
  if (!r.findings.empty()) {
    out << "\nfindings:\n";
    for (const auto& f : r.findings) out << "- " << f << "\n";
  }
  return out.str();
}

}  // namespace facecount
