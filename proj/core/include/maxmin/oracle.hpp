#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "maxmin/eigenspace.hpp"
#include "maxmin/matrix.hpp"

namespace maxmin {

/// Brute-force ground truth over a finite set of coordinate values.
///
/// Max-min products only ever produce values already present in their
/// operands, so solution regions are unions of boxes with faces at the
/// breakpoints; adding midpoints puts a witness inside every open face.

inline constexpr std::uint64_t kDefaultGridCap = 1'000'000;

/// Sorted breakpoints with midpoints between consecutive values.
struct ValueGrid {
  std::vector<Scalar> values;
};

/// Entries of A plus {0, λ, 1}, refined with midpoints.
ValueGrid breakpoints(const Matrix& a, Scalar lambda);
/// As above with additional breakpoints (e.g. the entries of b).
ValueGrid breakpoints(const Matrix& a, Scalar lambda, const Vector& extra);

/// A⊗x = λ⊗x, exactly. Throws ShapeError on mismatched shapes.
bool check_eigen(const Matrix& a, Scalar lambda, const Vector& x);

/// Calls `visit` for every x in grid^n in lexicographic order. Throws
/// SizeCapError when |grid|^n exceeds `cap`.
void for_each_grid_vector(const ValueGrid& grid, std::size_t n, std::uint64_t cap,
                          const std::function<void(const Vector&)>& visit);

/// All x in grid^n satisfying `pred`, lexicographically ordered.
std::vector<Vector> grid_solutions(const ValueGrid& grid, std::size_t n, std::uint64_t cap,
                                   const std::function<bool(const Vector&)>& pred);

/// All grid vectors with A⊗x = λ⊗x.
std::vector<Vector> grid_eigenvectors(const Matrix& a, Scalar lambda, const ValueGrid& grid,
                                      std::uint64_t cap = kDefaultGridCap);

struct CrossValidationReport {
  std::size_t grid_points = 0;
  std::size_t grid_eigenvectors = 0;
  std::size_t samples_checked = 0;
  /// Grid eigenvectors that no piece contains.
  std::vector<Vector> uncovered;
  /// (piece index, sampled member) pairs that are not eigenvectors.
  std::vector<std::pair<std::size_t, Vector>> failing_samples;

  bool passed() const { return uncovered.empty() && failing_samples.empty(); }
  /// Human-readable summary, one fact per line.
  std::string to_string() const;
};

/// Checks soundness (sampled members of every piece are eigenvectors) and
/// completeness relative to the grid (every grid eigenvector is covered).
CrossValidationReport cross_validate(const Matrix& a, Scalar lambda, const EigenspaceDescription& desc,
                                     const ValueGrid& grid, std::size_t samples_per_piece = 50,
                                     std::uint64_t seed = 1, std::uint64_t cap = kDefaultGridCap);

}  // namespace maxmin
