#pragma once

#include <vector>

#include "maxmin/matrix.hpp"
#include "maxmin/parametric_set.hpp"

namespace maxmin {

/// Covering data for A⊗z ⊕ b = λ1 with all a_ij <= λ and b_i <= λ.
///
/// i0 holds the rows with b_i < λ; column j can serve row i exactly when
/// a_ij = λ, so cj[j] = { i ∈ i0 : a_ij = λ }.
struct CoveringProblem {
  std::size_t m = 0;
  std::size_t n = 0;
  Scalar lambda;
  IndexSet i0;
  std::vector<IndexSet> cj;
};

/// A column set W whose C_j cover i0.
struct Covering {
  IndexSet w;
  bool minimal = false;

  friend bool operator==(const Covering&, const Covering&) = default;
};

/// Throws ContractError naming the first entry above λ, ShapeError if b
/// does not match A.
CoveringProblem build_cover_problem(const Matrix& a, const Vector& b, Scalar lambda);

/// True iff the C_j for j in w cover i0.
bool covers(const CoveringProblem& p, const IndexSet& w);

/// Every irredundant covering of i0, ordered lexicographically by W.
/// Returns {∅} when i0 is empty and nothing when no covering exists.
std::vector<Covering> minimal_coverings(const CoveringProblem& p);

/// z^W: λ on W, 0 elsewhere.
Vector minimal_solution(const Covering& w, Scalar lambda, std::size_t n);

/// { z : z^W <= z <= 1 } as offset z^W with generators Λ^W.
ParametricSet solution_set_for_covering(const Covering& w, Scalar lambda, std::size_t n);

/// The full solution set of A⊗z ⊕ b = λ1, one set per minimal covering;
/// empty when the system is unsolvable.
std::vector<ParametricSet> solve_special(const Matrix& a, const Vector& b, Scalar lambda);

}  // namespace maxmin
