#include "maxmin/bellman.hpp"

#include "maxmin/closure.hpp"
#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

void check_shapes(const Matrix& a, const Vector& b, const char* what) {
  if (!a.is_square()) throw ShapeError(std::string(what) + ": matrix is not square");
  if (b.rows() != a.rows() || (!b.is_vector() && b.rows() != 0)) {
    throw ShapeError(std::string(what) + ": right-hand side has length " +
                     std::to_string(b.rows()) + ", expected " + std::to_string(a.rows()));
  }
}

}  // namespace

Vector least_solution(const Matrix& a, const Vector& b) {
  check_shapes(a, b, "least_solution");
  return mat_mul(kleene_star(a), b);
}

ParametricSet bellman_solution_set(const Matrix& a, const Vector& b) {
  check_shapes(a, b, "bellman_solution_set");
  return ParametricSet(mat_mul(kleene_star(a), b), principal_generator_matrix(a));
}

bool is_bellman_solution(const Matrix& a, const Vector& b, const Vector& x) {
  check_shapes(a, b, "is_bellman_solution");
  if (x.rows() != a.rows()) throw ShapeError("is_bellman_solution: solution length mismatch");
  return mat_oplus(mat_mul(a, x), b) == x;
}

}  // namespace maxmin
