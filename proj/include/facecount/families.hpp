#pragma once

/// Named polytope families and their predicted face counts.
///
/// Construction recipes (all coordinates small integers or exact rationals
/// from truncation; no claim is made that they match any published
/// realization, only the combinatorial type matters):
///   simplex:d=D          T(D)
///   prism:s=S            T(S-1) x T(1)
///   triplex:s=S,d=D      M(S, D-S), the (D-S)-fold pyramid over prism:s=S
///   J:s=S,d=D            truncate the first simple vertex of triplex:s=S,d=D
///   A:d=D                truncate the first vertex of degree D+1 of triplex:s=2,d=D
///   C:d=D                truncate the first edge with two simple endpoints of triplex:s=2,d=D
///   sigma:d=D            conv{0, e1, e2, e1+e2, e1+ek, e2+ek, e1+e2+2ek : 3 <= k <= D}
///   tmsum:d=D,a=A,m=M    (D-A)-fold pyramid over T(M) (+) T(A-M)
///   tmprod:d=D,a=A,m=M   (D-A)-fold pyramid over T(M) x T(A-M)
///   trunc:d=D,n=N        T(D) with its first vertex truncated N times

#include "facecount/constructions.hpp"
#include "facecount/face_lattice.hpp"
#include "facecount/formulas.hpp"
#include "facecount/fvector.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace facecount {

enum class Family { Simplex, SimplicialPrism, Triplex, J, A, C, Sigma, TmSum, TmProd, TruncationSequence };

struct FamilySpec {
  Family family = Family::Simplex;
  int d = 0;  // dimension (SimplicialPrism: equals s)
  int s = 0;
  int a = 0;
  int m = 0;
  int n = 0;  // number of truncations

  static FamilySpec simplex(int d) { return {Family::Simplex, d}; }
  static FamilySpec prism(int s) { return {Family::SimplicialPrism, s, s}; }
  static FamilySpec triplex(int s, int d) { return {Family::Triplex, d, s}; }
  static FamilySpec j(int s, int d) { return {Family::J, d, s}; }
  static FamilySpec a_family(int d) { return {Family::A, d}; }
  static FamilySpec c_family(int d) { return {Family::C, d}; }
  static FamilySpec sigma(int d) { return {Family::Sigma, d}; }
  static FamilySpec tmsum(int d, int a, int m) { return {Family::TmSum, d, 0, a, m}; }
  static FamilySpec tmprod(int d, int a, int m) { return {Family::TmProd, d, 0, a, m}; }
  static FamilySpec truncations(int d, int n) { return {Family::TruncationSequence, d, 0, 0, 0, n}; }

  int dim() const { return d; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Canonical grammar form, e.g. "J:s=3,d=6".
inline std::string to_string(const FamilySpec& f) {
  auto kv = [](const char* k, int v) { return std::string(k) + "=" + std::to_string(v); };
  switch (f.family) {
    case Family::Simplex: return "simplex:" + kv("d", f.d);
    case Family::SimplicialPrism: return "prism:" + kv("s", f.s);
    case Family::Triplex: return "triplex:" + kv("s", f.s) + "," + kv("d", f.d);
    case Family::J: return "J:" + kv("s", f.s) + "," + kv("d", f.d);
    case Family::A: return "A:" + kv("d", f.d);
    case Family::C: return "C:" + kv("d", f.d);
    case Family::Sigma: return "sigma:" + kv("d", f.d);
    case Family::TmSum: return "tmsum:" + kv("d", f.d) + "," + kv("a", f.a) + "," + kv("m", f.m);
    case Family::TmProd: return "tmprod:" + kv("d", f.d) + "," + kv("a", f.a) + "," + kv("m", f.m);
    case Family::TruncationSequence: return "trunc:" + kv("d", f.d) + "," + kv("n", f.n);
  }
  return "?";
}

/// Throws DomainError describing the first violated parameter constraint.
inline void validate(const FamilySpec& f) {
  const auto where = to_string(f);
  auto need = [&](bool ok, const char* rule) {
    if (!ok) throw DomainError(where + ": requires " + rule);
  };
  switch (f.family) {
    case Family::Simplex: need(f.d >= 1, "d >= 1"); break;
    case Family::SimplicialPrism: need(f.s >= 1 && f.d == f.s, "s >= 1"); break;
    case Family::Triplex: need(f.s >= 1 && f.s <= f.d, "1 <= s <= d"); break;
    case Family::J: need(f.d >= 2 && f.s >= 2 && f.s <= f.d, "d >= 2 and 2 <= s <= d"); break;
    case Family::A:
    case Family::C: need(f.d >= 2, "d >= 2"); break;
    case Family::Sigma: need(f.d >= 3, "d >= 3"); break;
    case Family::TmSum:
    case Family::TmProd:
      need(f.a >= 2 && f.a <= f.d, "2 <= a <= d");
      need(f.m >= 1 && f.m <= f.a / 2, "1 <= m <= floor(a/2)");
      break;
    case Family::TruncationSequence: need(f.d >= 2 && f.n >= 0, "d >= 2 and n >= 0"); break;
  }
}

/// Parses the grammar `name:key=value,...`. Names are case-insensitive.
inline FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("family spec '" + std::string(text) + "': expected name:key=value,...");
  std::string name(text.substr(0, colon));
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) { return std::tolower(ch); });

  std::map<std::string, int> params;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("family spec '" + std::string(text) + "': bad parameter '" + std::string(item) + "'");
    std::string key(item.substr(0, eq));
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
    const auto val = item.substr(eq + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw DomainError("family spec '" + std::string(text) + "': parameter " + key + " is not an integer");
    }
    if (!params.emplace(key, v).second) throw DomainError("family spec '" + std::string(text) + "': duplicate parameter " + key);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  auto take = [&](std::initializer_list<const char*> keys) {
    std::vector<int> out;
    for (auto k : keys) {
      auto it = params.find(k);
      if (it == params.end()) throw DomainError("family spec '" + std::string(text) + "': missing parameter " + k);
      out.push_back(it->second);
      params.erase(it);
    }
    if (!params.empty()) throw DomainError("family spec '" + std::string(text) + "': unknown parameter " + params.begin()->first);
    return out;
  };

  FamilySpec f;
  if (name == "simplex") {
    f = FamilySpec::simplex(take({"d"})[0]);
  } else if (name == "prism") {
    f = FamilySpec::prism(take({"s"})[0]);
  } else if (name == "triplex") {
    auto v = take({"s", "d"});
    f = FamilySpec::triplex(v[0], v[1]);
  } else if (name == "j") {
    auto v = take({"s", "d"});
    f = FamilySpec::j(v[0], v[1]);
  } else if (name == "a") {
    f = FamilySpec::a_family(take({"d"})[0]);
  } else if (name == "c") {
    f = FamilySpec::c_family(take({"d"})[0]);
  } else if (name == "sigma") {
    f = FamilySpec::sigma(take({"d"})[0]);
  } else if (name == "tmsum" || name == "tmprod") {
    auto v = take({"d", "a", "m"});
    f = name == "tmsum" ? FamilySpec::tmsum(v[0], v[1], v[2]) : FamilySpec::tmprod(v[0], v[1], v[2]);
  } else if (name == "trunc") {
    auto v = take({"d", "n"});
    f = FamilySpec::truncations(v[0], v[1]);
  } else {
    throw DomainError("family spec '" + std::string(text) + "': unknown family '" + name + "'");
  }
  validate(f);
  return f;
}

namespace detail {

inline VPolytope simplicial_prism(int s) { return product(simplex(static_cast<std::size_t>(s - 1)), simplex(1)); }

inline VPolytope triplex(int s, int d) {
  return k_fold_pyramid(simplicial_prism(s), static_cast<std::size_t>(d - s));
}

inline VPolytope sigma(int d) {
  const auto dim = static_cast<std::size_t>(d);
  auto e = [&](std::initializer_list<std::pair<std::size_t, int>> entries) {
    auto p = Point::zero(dim);
    for (auto [i, v] : entries) p[i - 1] = v;
    return p;
  };
  std::vector<Point> vs{e({}), e({{1, 1}}), e({{2, 1}}), e({{1, 1}, {2, 1}})};
  for (std::size_t k = 3; k <= dim; ++k) {
    vs.push_back(e({{1, 1}, {k, 1}}));
    vs.push_back(e({{2, 1}, {k, 1}}));
    vs.push_back(e({{1, 1}, {2, 1}, {k, 2}}));
  }
  return VPolytope(dim, std::move(vs));
}

/// Faces of `p` targeted by the J / A / C recipes, in canonical order.
inline std::vector<VertexSet> truncation_targets(Family family, const VPolytope& p, const FaceLattice& lattice) {
  const auto n = p.n_vertices();
  const auto d = p.dim();
  std::vector<VertexSet> out;
  switch (family) {
    case Family::J:
    case Family::TruncationSequence:
      for (std::size_t v = 0; v < n; ++v) {
        if (is_simple_vertex(p, v)) out.push_back(VertexSet::of(n, {v}));
      }
      break;
    case Family::A:
      for (std::size_t v = 0; v < n; ++v) {
        if (vertex_degree(p, lattice, v) == d + 1) out.push_back(VertexSet::of(n, {v}));
      }
      break;
    case Family::C:
      for (const auto& edge : lattice.faces(1)) {
        const auto ends = edge.indices();
        if (is_simple_vertex(p, ends[0]) && is_simple_vertex(p, ends[1])) out.push_back(edge);
      }
      break;
    default: break;
  }
  return out;
}

inline const char* target_name(Family family) {
  switch (family) {
    case Family::A: return "vertex of degree d+1";
    case Family::C: return "edge with two simple vertices";
    default: return "simple vertex";
  }
}

}  // namespace detail

/// Triplex a J / A / C polytope is cut from.
inline VPolytope truncation_base(const FamilySpec& f) {
  if (f.family == Family::J) return detail::triplex(f.s, f.d);
  if (f.family == Family::A || f.family == Family::C) return detail::triplex(2, f.d);
  throw DomainError(to_string(f) + ": not a truncated family");
}

/// Every admissible truncation for J / A / C (the builder uses the first).
inline std::vector<VPolytope> all_truncation_choices(const FamilySpec& f) {
  validate(f);
  const auto base = truncation_base(f);
  const auto lattice = face_lattice(base);
  std::vector<VPolytope> out;
  for (const auto& target : detail::truncation_targets(f.family, base, lattice)) {
    out.push_back(truncate_face(base, lattice, target));
  }
  return out;
}

inline VPolytope build(const FamilySpec& f) {
  validate(f);
  switch (f.family) {
    case Family::Simplex: return simplex(static_cast<std::size_t>(f.d));
    case Family::SimplicialPrism: return detail::simplicial_prism(f.s);
    case Family::Triplex: return detail::triplex(f.s, f.d);
    case Family::J:
    case Family::A:
    case Family::C: {
      const auto base = truncation_base(f);
      const auto lattice = face_lattice(base);
      const auto targets = detail::truncation_targets(f.family, base, lattice);
      if (targets.empty()) {
        throw DomainError(to_string(f) + ": base triplex has no " + detail::target_name(f.family));
      }
      return truncate_face(base, lattice, targets.front());
    }
    case Family::Sigma: return detail::sigma(f.d);
    case Family::TmSum:
      return k_fold_pyramid(direct_sum(simplex(static_cast<std::size_t>(f.m)), simplex(static_cast<std::size_t>(f.a - f.m))),
                            static_cast<std::size_t>(f.d - f.a));
    case Family::TmProd:
      return k_fold_pyramid(product(simplex(static_cast<std::size_t>(f.m)), simplex(static_cast<std::size_t>(f.a - f.m))),
                            static_cast<std::size_t>(f.d - f.a));
    case Family::TruncationSequence: {
      auto p = simplex(static_cast<std::size_t>(f.d));
      for (int i = 0; i < f.n; ++i) {
        const auto lattice = face_lattice(p);
        check_invariant(is_simple_vertex(p, 0), "trunc: truncation polytope with a nonsimple vertex");
        p = truncate_face(p, lattice, VertexSet::of(p.n_vertices(), {0}));
      }
      return p;
    }
  }
  throw DomainError("build: unknown family");
}

/// Formula-predicted f-vector, where one is known for the family.
inline std::optional<FaceCountVector> expected_fvector(const FamilySpec& f) {
  validate(f);
  const std::int64_t d = f.d;
  std::vector<Integer> counts;
  switch (f.family) {
    case Family::Simplex:
      for (std::int64_t k = 0; k < d; ++k) counts.push_back(binomial(d + 1, k + 1));
      break;
    case Family::SimplicialPrism:
    case Family::Triplex:
      counts.emplace_back(d + f.s);
      for (std::int64_t k = 1; k < d; ++k) counts.push_back(theta(k, d + f.s, d));
      break;
    case Family::J:
      counts.emplace_back(2 * d + f.s - 1);
      for (std::int64_t k = 1; k < d; ++k) counts.push_back(eta(k, 2 * d + f.s - 1, d));
      break;
    case Family::A:
      if (d < 3) return std::nullopt;
      counts.emplace_back(2 * d + 2);
      for (std::int64_t k = 1; k < d; ++k) counts.push_back(eta(k, 2 * d + 2, d));
      break;
    case Family::TmProd:
      for (std::int64_t k = 0; k < d; ++k) counts.push_back(pyr_prod_count(k, f.a, f.m, d));
      break;
    case Family::TmSum:
      for (std::int64_t k = 0; k < d; ++k) counts.push_back(pyr_sum_count(k, f.a, f.m, d));
      break;
    case Family::C:
    case Family::Sigma:
    case Family::TruncationSequence: return std::nullopt;
  }
  return FaceCountVector(static_cast<int>(d), std::move(counts), true);
}

/// Vertex and facet counts stated for families without a full formula.
struct StatedCounts {
  std::optional<Integer> vertices;
  std::optional<Integer> facets;
};

inline StatedCounts stated_counts(const FamilySpec& f) {
  validate(f);
  const Integer d = f.d;
  switch (f.family) {
    case Family::Sigma: return {Integer(3 * d - 2), std::nullopt};
    case Family::C:
      if (f.d < 3) return {Integer(4), Integer(4)};
      return {Integer(3 * d - 2), Integer(d + 3)};
    case Family::TruncationSequence: return {Integer(d + 1 + f.n * (d - 1)), Integer(d + 1 + f.n)};
    default: {
      auto e = expected_fvector(f);
      if (!e) return {};
      return {e->counts().front(), e->counts().back()};
    }
  }
}

struct FacetClass {
  std::string description;
  std::int64_t vertex_count;
  std::int64_t multiplicity;
};

/// The three facet classes of the (d-a)-fold pyramid over T(m) x T(a-m).
inline std::vector<FacetClass> facet_census_tmprod(int d, int a, int m) {
  validate(FamilySpec::tmprod(d, a, m));
  const std::int64_t f0 = d + 1 + static_cast<std::int64_t>(m) * (a - m);
  auto pyr = [](int t, int x, int y) {
    return std::to_string(t) + "-fold pyramid over T(" + std::to_string(x) + ") x T(" + std::to_string(y) + ")";
  };
  return {
      {pyr(d - a, m - 1, a - m), f0 - (a - m + 1), m + 1},
      {pyr(d - a, m, a - m - 1), f0 - (m + 1), a - m + 1},
      {pyr(d - a - 1, m, a - m), f0 - 1, d - a},
  };
}

/// All valid family members with 2 <= d <= d_max (truncation sequences n <= 3).
/// Members whose recipe has no target (A:d=2) are omitted.
inline std::vector<FamilySpec> corpus(int d_max, int d_min = 2) {
  std::vector<FamilySpec> out;
  for (int d = d_min; d <= d_max; ++d) {
    out.push_back(FamilySpec::simplex(d));
    out.push_back(FamilySpec::prism(d));
    for (int s = 1; s <= d; ++s) out.push_back(FamilySpec::triplex(s, d));
    for (int s = 2; s <= d; ++s) out.push_back(FamilySpec::j(s, d));
    if (d >= 3) out.push_back(FamilySpec::a_family(d));
    out.push_back(FamilySpec::c_family(d));
    if (d >= 3) out.push_back(FamilySpec::sigma(d));
    for (int a = 2; a <= d; ++a) {
      for (int m = 1; m <= a / 2; ++m) {
        out.push_back(FamilySpec::tmsum(d, a, m));
        out.push_back(FamilySpec::tmprod(d, a, m));
      }
    }
    for (int n = 0; n <= 3; ++n) out.push_back(FamilySpec::truncations(d, n));
  }
  return out;
}

}  // namespace facecount
