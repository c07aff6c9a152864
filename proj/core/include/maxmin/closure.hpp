#pragma once

#include <utility>
#include <vector>

#include "maxmin/matrix.hpp"

namespace maxmin {

/// Metric matrix A⁺ = A ⊕ A² ⊕ ... ⊕ Aⁿ. Entry (i,j) is the greatest
/// bottleneck weight over all walks i -> j of length >= 1.
Matrix metric_matrix(const Matrix& a);

/// Kleene star A* = I ⊕ A⁺.
Matrix kleene_star(const Matrix& a);

/// Columns a⁺_ii ⊗ (A*)_{·i}; each one is a principal eigenvector (A⊗v = v)
/// and together they generate all of them.
std::vector<Vector> principal_generators(const Matrix& a);

/// The generators above as the columns of one n x n matrix.
Matrix principal_generator_matrix(const Matrix& a);

/// Edges (i,j) with a_ij ⊗ x_j = x_i for a principal eigenvector x.
struct SaturationGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted
  IndexSet nodes;

  bool has_edge(std::size_t i, std::size_t j) const;
};

/// Throws ContractError unless A⊗x = x.
SaturationGraph saturation_graph(const Matrix& a, const Vector& x);

/// Strongly connected components that carry at least one cycle (a
/// singleton counts only with a self-loop), each sorted, ordered by their
/// smallest member.
std::vector<IndexSet> cyclic_components(const SaturationGraph& g);

/// Smallest node of every cyclic component of g.
IndexSet cycle_representatives(const SaturationGraph& g);

/// ⊕ over i in C(A,x) of x_i ⊗ a⁺_ii ⊗ (A*)_{·i}, with C(A,x) from
/// cycle_representatives. Equals x for every principal eigenvector.
Vector reconstruct_principal(const Matrix& a, const Vector& x);

/// Same, with an explicit representative set.
Vector reconstruct_principal(const Matrix& a, const Vector& x, const IndexSet& representatives);

}  // namespace maxmin
