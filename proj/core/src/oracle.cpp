#include "maxmin/oracle.hpp"

#include <sstream>

#include "maxmin/errors.hpp"

namespace maxmin {

ValueGrid breakpoints(const Matrix& a, Scalar lambda) { return breakpoints(a, lambda, Vector()); }

ValueGrid breakpoints(const Matrix& a, Scalar lambda, const Vector& extra) {
  std::vector<Scalar> values{Scalar::zero(), lambda, Scalar::one()};
  values.insert(values.end(), a.entries().begin(), a.entries().end());
  values.insert(values.end(), extra.entries().begin(), extra.entries().end());
  return ValueGrid{with_midpoints(std::move(values))};
}

bool check_eigen(const Matrix& a, Scalar lambda, const Vector& x) {
  if (!a.is_square() || x.rows() != a.rows()) throw ShapeError("check_eigen: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar lhs;
    for (std::size_t j = 0; j < a.cols(); ++j) lhs = oplus(lhs, otimes(a(i, j), x[j]));
    if (lhs != otimes(lambda, x[i])) return false;
  }
  return true;
}

void for_each_grid_vector(const ValueGrid& grid, std::size_t n, std::uint64_t cap,
                          const std::function<void(const Vector&)>& visit) {
  const std::uint64_t g = grid.values.size();
  if (g == 0) throw ContractError("grid is empty");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / g) {
      throw SizeCapError("grid enumeration: " + std::to_string(g) + "^" + std::to_string(n) +
                         " points exceeds cap " + std::to_string(cap));
    }
    total *= g;
  }
  std::vector<std::size_t> digits(n, 0);
  Vector x(n, 1, grid.values.front());
  while (true) {
    visit(x);
    // Odometer with the last coordinate fastest: lexicographic order.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < g) {
        x[pos] = grid.values[digits[pos]];
        break;
      }
      digits[pos] = 0;
      x[pos] = grid.values.front();
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<Vector> grid_solutions(const ValueGrid& grid, std::size_t n, std::uint64_t cap,
                                   const std::function<bool(const Vector&)>& pred) {
  std::vector<Vector> out;
  for_each_grid_vector(grid, n, cap, [&](const Vector& x) {
    if (pred(x)) out.push_back(x);
  });
  return out;
}

std::vector<Vector> grid_eigenvectors(const Matrix& a, Scalar lambda, const ValueGrid& grid,
                                      std::uint64_t cap) {
  if (!a.is_square()) throw ShapeError("grid_eigenvectors: matrix is not square");
  return grid_solutions(grid, a.rows(), cap, [&](const Vector& x) { return check_eigen(a, lambda, x); });
}

CrossValidationReport cross_validate(const Matrix& a, Scalar lambda, const EigenspaceDescription& desc,
                                     const ValueGrid& grid, std::size_t samples_per_piece,
                                     std::uint64_t seed, std::uint64_t cap) {
  CrossValidationReport report;
  for (std::size_t p = 0; p < desc.pieces.size(); ++p) {
    if (desc.pieces[p].set.dim() != a.rows()) {
      throw ShapeError("cross_validate: piece " + std::to_string(p + 1) + " has wrong dimension");
    }
    for (auto& x : sample(desc.pieces[p].set, samples_per_piece, seed + p)) {
      ++report.samples_checked;
      if (!check_eigen(a, lambda, x)) report.failing_samples.emplace_back(p, std::move(x));
    }
  }
  for_each_grid_vector(grid, a.rows(), cap, [&](const Vector& x) {
    ++report.grid_points;
    if (!check_eigen(a, lambda, x)) return;
    ++report.grid_eigenvectors;
    if (!desc.contains(x)) report.uncovered.push_back(x);
  });
  return report;
}

namespace {

std::string row_string(const Vector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (i) s += ", ";
    s += x[i].to_string();
  }
  return s + ")";
}

}  // namespace

std::string CrossValidationReport::to_string() const {
  std::ostringstream os;
  os << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  os << "grid points: " << grid_points << '\n';
  os << "grid eigenvectors: " << grid_eigenvectors << '\n';
  os << "sampled members checked: " << samples_checked << '\n';
  os << "uncovered grid eigenvectors: " << uncovered.size() << '\n';
  for (const auto& x : uncovered) os << "  missing " << row_string(x) << '\n';
  os << "failing samples: " << failing_samples.size() << '\n';
  for (const auto& [p, x] : failing_samples) os << "  piece " << p + 1 << " " << row_string(x) << '\n';
  os << "note: agreement is relative to the breakpoint-and-midpoint grid; it is evidence, not a proof\n";
  return os.str();
}

}  // namespace maxmin
