#include "maxmin/cover.hpp"

#include <algorithm>
#include <set>

#include "maxmin/errors.hpp"

namespace maxmin {

CoveringProblem build_cover_problem(const Matrix& a, const Vector& b, Scalar lambda) {
  if (b.rows() != a.rows() || (!b.is_vector() && b.rows() != 0)) {
    throw ShapeError("build_cover_problem: right-hand side has length " + std::to_string(b.rows()) +
                     ", expected " + std::to_string(a.rows()));
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (lambda < a(i, j)) {
        throw ContractError("entry a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") = " + a(i, j).to_string() + " exceeds lambda = " + lambda.to_string());
      }
    }
    if (lambda < b[i]) {
      throw ContractError("entry b(" + std::to_string(i + 1) + ") = " + b[i].to_string() +
                          " exceeds lambda = " + lambda.to_string());
    }
  }

  CoveringProblem p;
  p.m = a.rows();
  p.n = a.cols();
  p.lambda = lambda;
  std::vector<std::size_t> i0;
  for (std::size_t i = 0; i < p.m; ++i) {
    if (b[i] < lambda) i0.push_back(i);
  }
  p.i0 = IndexSet(i0);
  p.cj.reserve(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::vector<std::size_t> rows;
    for (auto i : i0) {
      if (a(i, j) == lambda) rows.push_back(i);
    }
    p.cj.emplace_back(std::move(rows));
  }
  return p;
}

bool covers(const CoveringProblem& p, const IndexSet& w) {
  w.check_within(p.n, "covering");
  for (auto i : p.i0) {
    const bool hit = std::any_of(w.begin(), w.end(), [&](std::size_t j) { return p.cj[j].contains(i); });
    if (!hit) return false;
  }
  return true;
}

namespace {

// Depth-first search over uncovered rows. `hits[i]` counts how many chosen
// columns cover row i; a chosen column without a row of its own (hits == 1)
// is redundant, and stays redundant as more columns are added.
class CoverSearch {
 public:
  explicit CoverSearch(const CoveringProblem& p) : p_(p), hits_(p.m, 0) {}

  std::vector<Covering> run() {
    descend();
    std::vector<Covering> out;
    out.reserve(found_.size());
    for (const auto& w : found_) out.push_back(Covering{IndexSet(w), true});
    return out;
  }

 private:
  bool irredundant() const {
    return std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t j) {
      return std::any_of(p_.cj[j].begin(), p_.cj[j].end(), [&](std::size_t i) { return hits_[i] == 1; });
    });
  }

  void descend() {
    const auto uncovered =
        std::find_if(p_.i0.begin(), p_.i0.end(), [&](std::size_t i) { return hits_[i] == 0; });
    if (uncovered == p_.i0.end()) {
      std::vector<std::size_t> w = chosen_;
      std::sort(w.begin(), w.end());
      found_.insert(std::move(w));
      return;
    }
    const std::size_t row = *uncovered;
    for (std::size_t j = 0; j < p_.n; ++j) {
      if (!p_.cj[j].contains(row)) continue;
      for (auto i : p_.cj[j]) ++hits_[i];
      chosen_.push_back(j);
      if (irredundant()) descend();
      chosen_.pop_back();
      for (auto i : p_.cj[j]) --hits_[i];
    }
  }

  const CoveringProblem& p_;
  std::vector<int> hits_;
  std::vector<std::size_t> chosen_;
  std::set<std::vector<std::size_t>> found_;
};

}  // namespace

std::vector<Covering> minimal_coverings(const CoveringProblem& p) { return CoverSearch(p).run(); }

Vector minimal_solution(const Covering& w, Scalar lambda, std::size_t n) {
  w.w.check_within(n, "minimal_solution");
  Vector z(n, 1);
  for (auto j : w.w) z[j] = lambda;
  return z;
}

ParametricSet solution_set_for_covering(const Covering& w, Scalar lambda, std::size_t n) {
  Vector z = minimal_solution(w, lambda, n);
  Matrix gens = lambda_w_matrix(z);
  return ParametricSet(std::move(z), std::move(gens));
}

std::vector<ParametricSet> solve_special(const Matrix& a, const Vector& b, Scalar lambda) {
  const CoveringProblem p = build_cover_problem(a, b, lambda);
  std::vector<ParametricSet> out;
  for (const auto& w : minimal_coverings(p)) out.push_back(solution_set_for_covering(w, lambda, p.n));
  return out;
}

}  // namespace maxmin
