#pragma once

#include "maxmin/matrix.hpp"
#include "maxmin/parametric_set.hpp"

namespace maxmin {

/// Least solution A*⊗b of x = A⊗x ⊕ b.
Vector least_solution(const Matrix& a, const Vector& b);

/// All solutions of x = A⊗x ⊕ b: offset A*⊗b, generators a⁺_ii ⊗ (A*)_{·i}.
ParametricSet bellman_solution_set(const Matrix& a, const Vector& b);

/// x = A⊗x ⊕ b, exactly.
bool is_bellman_solution(const Matrix& a, const Vector& b, const Vector& x);

}  // namespace maxmin
