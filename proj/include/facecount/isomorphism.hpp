#pragma once

/// Canonical form of an incidence structure up to row and column permutation.
///
/// The structure is a bipartite graph (vertices | facets). Colours are refined
/// by neighbour-colour multisets until stable; while some cell is not a
/// singleton, each of its members is individualised in turn and the search
/// recurses. Every discrete leaf yields a matrix (rows sorted by vertex colour,
/// columns by facet colour); the lexicographically smallest leaf is the
/// canonical form. Colour names depend only on sorted signatures, never on
/// input order, so isomorphic inputs produce identical forms.

#include "facecount/polytope.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace facecount {

struct CanonicalForm {
  std::size_t n_vertices = 0;
  std::size_t n_facets = 0;
  std::vector<std::string> rows;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n_vertices != b.n_vertices) return a.n_vertices < b.n_vertices;
    if (a.n_facets != b.n_facets) return a.n_facets < b.n_facets;
    return a.rows < b.rows;
  }
};

namespace detail {

class Canonizer {
public:
  explicit Canonizer(const IncidenceStructure& s) : nv_(s.n_vertices()), nf_(s.n_facets()) {
    adj_.resize(nv_ + nf_);
    for (std::size_t f = 0; f < nf_; ++f) {
      for (auto v : s.columns()[f].indices()) {
        adj_[v].push_back(nv_ + f);
        adj_[nv_ + f].push_back(v);
      }
    }
  }

  CanonicalForm run() {
    std::vector<int> colour(nv_ + nf_);
    for (std::size_t i = 0; i < colour.size(); ++i) colour[i] = i < nv_ ? 0 : 1;
    refine(colour);
    search(colour);
    return best_;
  }

private:
  void refine(std::vector<int>& colour) const {
    const auto n = colour.size();
    std::size_t classes = count_classes(colour);
    while (true) {
      std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> s;
        s.reserve(adj_[i].size() + 1);
        for (auto j : adj_[i]) s.push_back(colour[j]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), colour[i]);
        sig[i] = {std::move(s), i};
      }
      std::map<std::vector<int>, int> names;
      for (const auto& [s, i] : sig) names.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : names) id = next++;
      for (std::size_t i = 0; i < n; ++i) colour[i] = names[sig[i].first];
      const auto now = count_classes(colour);
      if (now == classes) return;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<int>& colour) {
    std::vector<int> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(const std::vector<int>& colour) {
    // first non-singleton cell, by colour
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < colour.size(); ++i) cells[colour[i]].push_back(i);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (!target) {
      leaf(colour);
      return;
    }
    for (auto member : *target) {
      auto next = colour;
      // Individualise: shift every colour up and give `member` its cell's old slot.
      for (auto& c : next) c = 2 * c + 1;
      next[member] -= 1;
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& colour) {
    std::vector<std::size_t> vorder(nv_), forder(nf_);
    for (std::size_t i = 0; i < nv_; ++i) vorder[i] = i;
    for (std::size_t i = 0; i < nf_; ++i) forder[i] = nv_ + i;
    auto by_colour = [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; };
    std::sort(vorder.begin(), vorder.end(), by_colour);
    std::sort(forder.begin(), forder.end(), by_colour);
    std::vector<std::size_t> fpos(nv_ + nf_);
    for (std::size_t j = 0; j < nf_; ++j) fpos[forder[j]] = j;
    CanonicalForm form{nv_, nf_, {}};
    form.rows.reserve(nv_);
    for (auto v : vorder) {
      std::string row(nf_, '0');
      for (auto f : adj_[v]) row[fpos[f]] = '1';
      form.rows.push_back(std::move(row));
    }
    if (!have_best_ || form < best_) {
      best_ = std::move(form);
      have_best_ = true;
    }
  }

  std::size_t nv_;
  std::size_t nf_;
  std::vector<std::vector<std::size_t>> adj_;
  CanonicalForm best_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const IncidenceStructure& s) {
  if (s.n_vertices() + s.n_facets() == 0) return {};
  return detail::Canonizer(s).run();
}

/// Same combinatorial type, up to relabelling vertices and facets.
inline bool isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
  if (a.n_vertices() != b.n_vertices() || a.n_facets() != b.n_facets()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace facecount
