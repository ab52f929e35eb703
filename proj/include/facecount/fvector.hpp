#pragma once

#include "facecount/numeric.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace facecount {

/// Face counts (f_0, ..., f_{d-1}) of a d-polytope.
///
/// A vector flagged `realized` claims to be the f-vector of an actual
/// polytope; construction then enforces f_0 >= d+1, f_{d-1} >= d+1 and the
/// Euler relation sum (-1)^i f_i = 1 - (-1)^d.
class FaceCountVector {
public:
  FaceCountVector(int dim, std::vector<Integer> counts, bool realized)
      : dim_(dim), counts_(std::move(counts)), realized_(realized) {
    if (dim_ < 1) throw DomainError("FaceCountVector: dimension must be positive");
    if (static_cast<int>(counts_.size()) != dim_) {
      throw DomainError("FaceCountVector: expected " + std::to_string(dim_) + " counts, got " +
                        std::to_string(counts_.size()));
    }
    for (const auto& c : counts_) {
      if (c < 0) throw DomainError("FaceCountVector: negative count");
    }
    if (realized_) {
      if (counts_.front() < dim_ + 1 || counts_.back() < dim_ + 1) {
        throw DomainError("FaceCountVector: realized vector needs f_0, f_{d-1} >= d+1, got " +
                          str());
      }
      if (euler_characteristic() != expected_euler(dim_)) {
        throw DomainError("FaceCountVector: Euler relation fails for " + str());
      }
    }
  }

  template <typename Int>
  static FaceCountVector from(int dim, const std::vector<Int>& counts, bool realized) {
    std::vector<Integer> big(counts.begin(), counts.end());
    return FaceCountVector(dim, std::move(big), realized);
  }

  int dim() const { return dim_; }
  bool realized() const { return realized_; }
  const std::vector<Integer>& counts() const { return counts_; }

  /// f_k for k in [-1, d]; f_{-1} = f_d = 1 (empty face and the polytope itself).
  Integer f(int k) const {
    if (k == -1 || k == dim_) return 1;
    if (k < -1 || k > dim_) return 0;
    return counts_[static_cast<std::size_t>(k)];
  }

  Integer euler_characteristic() const {
    Integer sum = 0;
    for (int i = 0; i < dim_; ++i) sum += (i % 2 == 0) ? counts_[i] : Integer(-counts_[i]);
    return sum;
  }

  static Integer expected_euler(int dim) { return dim % 2 == 0 ? 0 : 2; }

  FaceCountVector reversed() const {
    return FaceCountVector(dim_, {counts_.rbegin(), counts_.rend()}, realized_);
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) out += ", ";
      out += counts_[i].str();
    }
    return out + ")";
  }

  /// Entry-wise equality of dimension and counts; the realized flag is ignored.
  friend bool operator==(const FaceCountVector& a, const FaceCountVector& b) {
    return a.dim_ == b.dim_ && a.counts_ == b.counts_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FaceCountVector& v) {
    return os << v.str();
  }

private:
  int dim_;
  std::vector<Integer> counts_;
  bool realized_;
};

}  // namespace facecount
