#pragma once

#include <cstdint>
#include <vector>

#include "maxmin/matrix.hpp"

namespace maxmin {

/// The set { offset ⊕ G⊗z : z ∈ [0,1]^k } for an n-vector offset and an
/// n x k generator matrix G. Every solution set in the library is one of
/// these, or a finite union of them.
class ParametricSet {
 public:
  ParametricSet() = default;
  /// Throws ShapeError unless offset is n x 1 and generators is n x k.
  ParametricSet(Vector offset, Matrix generators);

  std::size_t dim() const { return offset_.rows(); }
  std::size_t parameters() const { return generators_.cols(); }
  const Vector& offset() const { return offset_; }
  const Matrix& generators() const { return generators_; }

  /// offset ⊕ G⊗z. Throws ShapeError if z has the wrong length.
  Vector evaluate(const Vector& z) const;

  /// Componentwise bounds of the set: lower = offset, upper = offset ⊕
  /// (row maxima of G). Both are attained (z = 0 and z = 1).
  Vector lower_bound() const { return offset_; }
  Vector upper_bound() const;

  friend bool operator==(const ParametricSet&, const ParametricSet&) = default;

 private:
  Vector offset_;
  Matrix generators_;
};

/// Greatest z with G⊗z <= x: z_j = min { x_i : g_ij > x_i } (1 if none).
Vector principal_solution(const Matrix& g, const Vector& x);

/// True iff x = offset ⊕ G⊗z for some z, decided with the principal
/// solution. Throws ShapeError on dimension mismatch.
bool membership(const ParametricSet& set, const Vector& x);

/// `count` reproducible members of the set. Parameters are drawn from the
/// set's own breakpoint values (its entries, 0, 1 and their midpoints).
std::vector<Vector> sample(const ParametricSet& set, std::size_t count, std::uint64_t seed);

}  // namespace maxmin
