#include "maxmin/parametric_set.hpp"

#include <random>

#include "maxmin/errors.hpp"

namespace maxmin {

ParametricSet::ParametricSet(Vector offset, Matrix generators)
    : offset_(std::move(offset)), generators_(std::move(generators)) {
  if (!offset_.is_vector() && offset_.rows() != 0) throw ShapeError("offset is not a column vector");
  if (offset_.cols() == 0) offset_ = Matrix(offset_.rows(), 1);
  if (generators_.rows() != offset_.rows()) {
    throw ShapeError("generator matrix has " + std::to_string(generators_.rows()) +
                     " rows, offset has " + std::to_string(offset_.rows()));
  }
}

Vector ParametricSet::evaluate(const Vector& z) const {
  if (z.rows() != parameters() || (z.cols() != 1 && parameters() != 0)) {
    throw ShapeError("parameter vector has length " + std::to_string(z.rows()) + ", expected " +
                     std::to_string(parameters()));
  }
  Vector x = offset_;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < parameters(); ++j) x[i] = oplus(x[i], otimes(generators_(i, j), z[j]));
  }
  return x;
}

Vector ParametricSet::upper_bound() const {
  Vector hi = offset_;
  for (std::size_t i = 0; i < dim(); ++i) hi[i] = oplus(hi[i], generators_.row_max(i));
  return hi;
}

Vector principal_solution(const Matrix& g, const Vector& x) {
  if (g.rows() != x.rows()) throw ShapeError("principal_solution: shape mismatch");
  Vector z(g.cols(), 1, Scalar::one());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (x[i] < g(i, j)) z[j] = otimes(z[j], x[i]);
    }
  }
  return z;
}

bool membership(const ParametricSet& set, const Vector& x) {
  if (x.rows() != set.dim() || (x.cols() != 1 && set.dim() != 0)) {
    throw ShapeError("membership: vector of length " + std::to_string(x.rows()) +
                     " against a set of dimension " + std::to_string(set.dim()));
  }
  const Vector& c = set.offset();
  const Matrix& g = set.generators();
  for (std::size_t i = 0; i < set.dim(); ++i) {
    if (x[i] < c[i]) return false;
  }
  const Vector z = principal_solution(g, x);
  for (std::size_t i = 0; i < set.dim(); ++i) {
    Scalar v = c[i];
    for (std::size_t j = 0; j < g.cols(); ++j) v = oplus(v, otimes(g(i, j), z[j]));
    if (v != x[i]) return false;
  }
  return true;
}

std::vector<Vector> sample(const ParametricSet& set, std::size_t count, std::uint64_t seed) {
  std::vector<Scalar> values{Scalar::zero(), Scalar::one()};
  for (const auto& s : set.offset().entries()) values.push_back(s);
  for (const auto& s : set.generators().entries()) values.push_back(s);
  values = with_midpoints(std::move(values));

  std::mt19937_64 rng(seed);
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Vector z(set.parameters(), 1);
    for (std::size_t j = 0; j < set.parameters(); ++j) z[j] = values[rng() % values.size()];
    out.push_back(set.evaluate(z));
  }
  return out;
}

}  // namespace maxmin
