#include "maxmin/closure.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "maxmin/errors.hpp"

namespace maxmin {

Matrix metric_matrix(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("metric_matrix: matrix is not square");
  const std::size_t n = a.rows();
  // Bottleneck Floyd-Warshall; a* = 1 for every scalar so no diagonal
  // correction is needed.
  Matrix d = a;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar dik = d(i, k);
      if (dik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) d(i, j) = oplus(d(i, j), otimes(dik, d(k, j)));
    }
  }
  return d;
}

Matrix kleene_star(const Matrix& a) {
  Matrix s = metric_matrix(a);
  for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) = Scalar::one();
  return s;
}

Matrix principal_generator_matrix(const Matrix& a) {
  const Matrix plus = metric_matrix(a);
  Matrix g = kleene_star(a);
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, j) = otimes(plus(j, j), g(i, j));
  }
  return g;
}

std::vector<Vector> principal_generators(const Matrix& a) {
  return principal_generator_matrix(a).columns();
}

bool SaturationGraph::has_edge(std::size_t i, std::size_t j) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

SaturationGraph saturation_graph(const Matrix& a, const Vector& x) {
  if (!a.is_square() || x.rows() != a.rows() || !x.is_vector()) {
    throw ShapeError("saturation_graph: shape mismatch");
  }
  if (mat_mul(a, x) != x) throw ContractError("saturation_graph: x is not a principal eigenvector");
  SaturationGraph g;
  g.n = a.rows();
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (otimes(a(i, j), x[j]) == x[i]) {
        g.edges.emplace_back(i, j);
        nodes.push_back(i);
        nodes.push_back(j);
      }
    }
  }
  g.nodes = IndexSet(std::move(nodes));
  return g;
}

std::vector<IndexSet> cyclic_components(const SaturationGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph graph(g.n);
  for (const auto& [i, j] : g.edges) boost::add_edge(i, j, graph);

  std::vector<int> component(g.n);
  const int count = g.n ? boost::strong_components(graph, component.data()) : 0;

  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < g.n; ++v) members[static_cast<std::size_t>(component[v])].push_back(v);

  std::vector<IndexSet> out;
  for (auto& m : members) {
    const bool cyclic = m.size() > 1 || g.has_edge(m.front(), m.front());
    if (cyclic) out.emplace_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& x, const IndexSet& y) { return x[0] < y[0]; });
  return out;
}

IndexSet cycle_representatives(const SaturationGraph& g) {
  std::vector<std::size_t> reps;
  for (const auto& c : cyclic_components(g)) reps.push_back(c[0]);
  return IndexSet(std::move(reps));
}

Vector reconstruct_principal(const Matrix& a, const Vector& x, const IndexSet& representatives) {
  if (!a.is_square() || x.rows() != a.rows() || !x.is_vector()) {
    throw ShapeError("reconstruct_principal: shape mismatch");
  }
  if (mat_mul(a, x) != x) {
    throw ContractError("reconstruct_principal: x is not a principal eigenvector");
  }
  representatives.check_within(a.rows(), "reconstruct_principal");
  const Matrix gens = principal_generator_matrix(a);
  Vector out(a.rows(), 1);
  for (auto i : representatives) {
    for (std::size_t r = 0; r < a.rows(); ++r) out[r] = oplus(out[r], otimes(x[i], gens(r, i)));
  }
  return out;
}

Vector reconstruct_principal(const Matrix& a, const Vector& x) {
  return reconstruct_principal(a, x, cycle_representatives(saturation_graph(a, x)));
}

}  // namespace maxmin
