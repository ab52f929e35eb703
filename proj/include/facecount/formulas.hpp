#pragma once

/// Closed-form face counts.
///
/// Functions that take a total vertex count `v` derive the surplus
/// parameter internally (theta: v = d+s, eta: v = 2d+s-1), so call sites can
/// be written as theta(k, d + s, d) or eta(k, 2 * d + 2, d). All public
/// functions validate their domain and throw DomainError outside it; the
/// `formula_body` namespace holds the same expressions without the guards
/// for the few inequalities that evaluate them at boundary parameters.

#include "facecount/binomial.hpp"
#include "facecount/numeric.hpp"

#include <cstdint>
#include <string>

namespace facecount {

namespace detail {

inline std::string args(std::initializer_list<std::pair<const char*, std::int64_t>> named) {
  std::string out;
  for (const auto& [name, value] : named) {
    if (!out.empty()) out += ", ";
    out += name;
    out += "=";
    out += std::to_string(value);
  }
  return out;
}

inline void require(bool ok, const char* fn, const std::string& args, const char* rule) {
  if (!ok) throw DomainError(std::string(fn) + "(" + args + "): requires " + rule);
}

inline std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

}  // namespace detail

namespace formula_body {

inline Integer theta(std::int64_t k, std::int64_t d, std::int64_t s) {
  return binomial(d + 1, k + 1) + binomial(d, k + 1) - binomial(d + 1 - s, k + 1);
}

inline Integer eta(std::int64_t k, std::int64_t d, std::int64_t s) {
  return binomial(d + 1, k + 1) + 2 * binomial(d, k + 1) - binomial(d + 1 - s, k + 1);
}

inline std::int64_t tau_split(std::int64_t d, std::int64_t s) { return (d + s) / 2 + 1; }

inline Integer tau(std::int64_t k, std::int64_t d, std::int64_t s) {
  const auto a = tau_split(d, s);
  return binomial(d + 1, k + 1) + binomial(d, k + 1) + binomial(d - 1, k + 1) -
         binomial(d - a + 2, k + 1) - binomial(d - a + 1, k + 1);
}

/// tau for s = 3, written with ceil((d+1)/2) in the lower upper indices.
inline Integer tau_2d2_ceil_form(std::int64_t k, std::int64_t d) {
  const auto c = detail::ceil_half(d + 1);
  return binomial(d + 1, k + 1) + binomial(d, k + 1) + binomial(d - 1, k + 1) -
         binomial(c - 1, k + 1) - binomial(c - 2, k + 1);
}

inline Integer pyr_prod(std::int64_t k, std::int64_t a, std::int64_t m, std::int64_t d) {
  return binomial(d + 2, k + 2) - binomial(d - a + m + 1, k + 2) - binomial(d - m + 1, k + 2) +
         binomial(d - a + 1, k + 2);
}

inline Integer pyr_sum(std::int64_t k, std::int64_t a, std::int64_t m, std::int64_t d) {
  const auto c = d - k + 1;
  return binomial(d + 2, c) - binomial(d - a + m + 1, c) - binomial(d - m + 1, c) +
         binomial(d - a + 1, c);
}

}  // namespace formula_body

/// Minimum number of k-faces of a d-polytope with v = d+s vertices, 1 <= s <= d.
inline Integer theta(std::int64_t k, std::int64_t v, std::int64_t d) {
  const auto s = v - d;
  const auto a = detail::args({{"k", k}, {"v", v}, {"d", d}});
  detail::require(s >= 1 && s <= d, "theta", a, "1 <= v-d <= d");
  detail::require(k >= 1 && k <= d - 1, "theta", a, "1 <= k <= d-1");
  return formula_body::theta(k, d, s);
}

/// k-face count of J(s,d), which has v = 2d+s-1 vertices, 2 <= s <= d.
inline Integer eta(std::int64_t k, std::int64_t v, std::int64_t d) {
  const auto s = v - 2 * d + 1;
  const auto a = detail::args({{"k", k}, {"v", v}, {"d", d}});
  detail::require(s >= 2 && s <= d, "eta", a, "2 <= v-2d+1 <= d");
  detail::require(k >= 1 && k <= d - 1, "eta", a, "1 <= k <= d-1");
  return formula_body::eta(k, d, s);
}

/// Number of k-faces of (d-a)-fold pyramid over T(m) x T(a-m).
/// 2 <= a <= d, 1 <= m <= floor(a/2), 0 <= k <= d-1.
inline Integer pyr_prod_count(std::int64_t k, std::int64_t a, std::int64_t m, std::int64_t d) {
  const auto args = detail::args({{"k", k}, {"a", a}, {"m", m}, {"d", d}});
  detail::require(a >= 2 && a <= d, "pyr_prod_count", args, "2 <= a <= d");
  detail::require(m >= 1 && m <= a / 2, "pyr_prod_count", args, "1 <= m <= floor(a/2)");
  detail::require(k >= 0 && k <= d - 1, "pyr_prod_count", args, "0 <= k <= d-1");
  auto value = formula_body::pyr_prod(k, a, m, d);
  if (k == 0) {
    check_invariant(value == d + 1 + m * (a - m), "pyr_prod_count(0, " + args + ") != d+1+m(a-m)");
  }
  return value;
}

/// Number of k-faces of T_m^{d,d-a}, the (d-a)-fold pyramid over T(m) (+) T(a-m).
/// Same domain as pyr_prod_count; the two are polar-dual reflections.
inline Integer pyr_sum_count(std::int64_t k, std::int64_t a, std::int64_t m, std::int64_t d) {
  const auto args = detail::args({{"k", k}, {"a", a}, {"m", m}, {"d", d}});
  detail::require(a >= 2 && a <= d, "pyr_sum_count", args, "2 <= a <= d");
  detail::require(m >= 1 && m <= a / 2, "pyr_sum_count", args, "1 <= m <= floor(a/2)");
  detail::require(k >= 0 && k <= d - 1, "pyr_sum_count", args, "0 <= k <= d-1");
  auto value = formula_body::pyr_sum(k, a, m, d);
  check_invariant(value == formula_body::pyr_prod(d - 1 - k, a, m, d),
                  "pyr_sum_count(" + args + ") is not the reflection of pyr_prod_count");
  return value;
}

/// Lower bound for the k-faces of d-polytopes with d+2 facets and at least
/// 2d+s-1 vertices; it counts the k-faces of the (d-a)-fold pyramid over
/// T(2) x T(a-2), a = floor((d+s)/2)+1. d >= 4, 2 <= s <= d-2, 1 <= k <= d-1.
inline Integer tau(std::int64_t k, std::int64_t d, std::int64_t s) {
  const auto args = detail::args({{"k", k}, {"d", d}, {"s", s}});
  detail::require(d >= 4, "tau", args, "d >= 4");
  detail::require(s >= 2 && s <= d - 2, "tau", args, "2 <= s <= d-2");
  detail::require(k >= 1 && k <= d - 1, "tau", args, "1 <= k <= d-1");
  auto value = formula_body::tau(k, d, s);
  const auto a = formula_body::tau_split(d, s);
  check_invariant(value == formula_body::pyr_prod(k, a, 2, d),
                  "tau(" + args + ") disagrees with its product-pyramid form");
  if (s == 3) {
    check_invariant(value == formula_body::tau_2d2_ceil_form(k, d),
                    "tau(" + args + ") disagrees with its ceil((d+1)/2) form");
  }
  return value;
}

/// Barnette's lower bound for the k-faces of a simple d-polytope with n_facets facets.
/// d >= 2, n_facets >= d+1, 0 <= k <= d-2.
inline Integer barnette_bound(std::int64_t k, std::int64_t d, std::int64_t n_facets) {
  const auto args = detail::args({{"k", k}, {"d", d}, {"n_facets", n_facets}});
  detail::require(d >= 2, "barnette_bound", args, "d >= 2");
  detail::require(n_facets >= d + 1, "barnette_bound", args, "n_facets >= d+1");
  detail::require(k >= 0 && k <= d - 2, "barnette_bound", args, "0 <= k <= d-2");
  if (k == 0) return Integer(d - 1) * n_facets - Integer(d + 1) * (d - 2);
  return binomial(d, k + 1) * n_facets - binomial(d + 1, k + 1) * (d - 1 - k);
}

}  // namespace facecount
