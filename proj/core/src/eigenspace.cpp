#include "maxmin/eigenspace.hpp"

#include <algorithm>
#include <tuple>

#include "maxmin/closure.hpp"
#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

// 2^n partitions are enumerated; beyond this the loop is not desk-scale.
constexpr std::size_t kMaxPartitionDimension = 24;

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw ShapeError(std::string(what) + ": matrix is not square");
}

IndexSet positions_in(const IndexSet& subset, const IndexSet& ambient) {
  std::vector<std::size_t> pos;
  pos.reserve(subset.size());
  for (auto i : subset) pos.push_back(ambient.position(i));
  return IndexSet(std::move(pos));
}

void require_at_most(const Matrix& m, Scalar lambda, const char* what) {
  for (const auto& s : m.entries()) {
    if (lambda < s) {
      throw ContractError(std::string(what) + " has entry " + s.to_string() + " above lambda " +
                          lambda.to_string());
    }
  }
}

}  // namespace

Partition::Partition(IndexSet k, std::size_t n) : k_(std::move(k)), n_(n) {
  k_.check_within(n, "partition");
  l_ = complement(k_, n);
}

const char* to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::pure:
      return "pure";
    case PieceKind::background:
      return "background";
    case PieceKind::kl:
      return "kl";
  }
  return "kl";
}

PieceKind piece_kind_from_string(std::string_view name) {
  if (name == "pure") return PieceKind::pure;
  if (name == "background") return PieceKind::background;
  if (name == "kl") return PieceKind::kl;
  throw ParseError("unknown piece kind '" + std::string(name) + "'");
}

bool EigenspaceDescription::contains(const Vector& x) const {
  return std::any_of(pieces.begin(), pieces.end(),
                     [&](const EigenspacePiece& p) { return membership(p.set, x); });
}

std::pair<IndexSet, IndexSet> n_split(const Matrix& a, Scalar lambda) {
  require_square(a, "n_split");
  std::vector<std::size_t> above;
  std::vector<std::size_t> at_most;
  for (std::size_t j = 0; j < a.cols(); ++j) (lambda < a.col_max(j) ? above : at_most).push_back(j);
  return {IndexSet(std::move(above)), IndexSet(std::move(at_most))};
}

std::optional<ParametricSet> background_eigenvectors(const Matrix& a, Scalar lambda) {
  require_square(a, "background_eigenvectors");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.row_max(i) < lambda) return std::nullopt;
  }
  const auto [above, at_most] = n_split(a, lambda);
  return ParametricSet(constant_vector(a.rows(), lambda), lambda_matrix(lambda, a.rows(), at_most));
}

Matrix pure_generator_matrix(const Matrix& a, Scalar lambda) {
  require_square(a, "pure_generator_matrix");
  return scale(lambda, principal_generator_matrix(a));
}

ParametricSet pure_eigenvectors(const Matrix& a, Scalar lambda) {
  return ParametricSet(Vector(a.rows(), 1), pure_generator_matrix(a, lambda));
}

KLContext kl_context(const Matrix& a, const Partition& partition, Scalar lambda) {
  require_square(a, "kl_context");
  if (partition.n() != a.rows()) {
    throw ShapeError("kl_context: partition of " + std::to_string(partition.n()) +
                     " indices for a matrix of order " + std::to_string(a.rows()));
  }
  const IndexSet& kset = partition.k();
  const IndexSet& lset = partition.l();
  const std::size_t p = kset.size();
  const std::size_t q = lset.size();

  KLContext ctx;
  ctx.partition = partition;
  ctx.lambda = lambda;

  const Matrix a_kk = a.submatrix(kset, kset);
  const Matrix a_kl = a.submatrix(kset, lset);
  const Matrix a_ll = a.submatrix(lset, lset);
  ctx.star_kk = kleene_star(a_kk);
  ctx.pure_kk = pure_generator_matrix(a_kk, lambda);
  ctx.kk_kl = mat_mul(ctx.star_kk, a_kl);

  std::vector<std::size_t> l1;
  std::vector<std::size_t> l2;
  for (std::size_t r = 0; r < q; ++r) (a_ll.row_max(r) < lambda ? l2 : l1).push_back(lset[r]);
  ctx.l1 = IndexSet(std::move(l1));
  ctx.l2 = IndexSet(std::move(l2));

  std::vector<std::size_t> gt_l1;
  std::vector<std::size_t> gt_k;
  for (std::size_t c = 0; c < q; ++c) {
    const std::size_t ell = lset[c];
    if (std::any_of(ctx.l1.begin(), ctx.l1.end(), [&](std::size_t i) { return lambda < a(i, ell); })) {
      gt_l1.push_back(ell);
    }
    if (lambda < ctx.kk_kl.col_max(c)) gt_k.push_back(ell);
  }
  ctx.l_gt_l1 = IndexSet(std::move(gt_l1));
  ctx.l_gt_k = IndexSet(std::move(gt_k));
  ctx.l_prime = set_union(ctx.l_gt_l1, ctx.l_gt_k);
  ctx.l_tilde = set_difference(lset, ctx.l_prime);
  ctx.n_tilde = set_union(ctx.l_tilde, kset);

  ctx.x_k_base = Vector(p, 1);
  for (std::size_t r = 0; r < p; ++r) ctx.x_k_base[r] = otimes(lambda, ctx.kk_kl.row_max(r));

  // (A_KK)* ⊗ A_{K,L̃} ⊗ Λ_{L̃,L̃}
  const IndexSet tilde_pos = positions_in(ctx.l_tilde, lset);
  const Matrix free_l = mat_mul(ctx.kk_kl.submatrix(IndexSet::range(p), tilde_pos),
                                lambda_matrix(lambda, tilde_pos.size(), IndexSet::range(tilde_pos.size())));

  const std::size_t r = ctx.n_tilde.size();
  ctx.t_l = Matrix(q, r);
  ctx.t_k = Matrix(p, r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t idx = ctx.n_tilde[j];
    if (ctx.l_tilde.contains(idx)) {
      const std::size_t col = ctx.l_tilde.position(idx);
      for (std::size_t row = 0; row < q; ++row) ctx.t_l(row, j) = lset[row] == idx ? Scalar::one() : lambda;
      for (std::size_t row = 0; row < p; ++row) ctx.t_k(row, j) = free_l(row, col);
    } else {
      const std::size_t col = kset.position(idx);
      for (std::size_t row = 0; row < p; ++row) ctx.t_k(row, j) = ctx.pure_kk(row, col);
    }
  }

  const Matrix a_l2k = a.submatrix(ctx.l2, kset);
  ctx.a_prime = mat_mul(a_l2k, ctx.t_k);
  ctx.b_prime = mat_mul(a_l2k, ctx.x_k_base);
  require_at_most(ctx.a_prime, lambda, "reduced matrix A'");
  require_at_most(ctx.b_prime, lambda, "reduced vector b'");
  return ctx;
}

ParametricSet sl_set(const KLContext& ctx) {
  const IndexSet& lset = ctx.partition.l();
  return ParametricSet(constant_vector(lset.size(), ctx.lambda),
                       lambda_matrix(ctx.lambda, lset.size(), positions_in(ctx.l_tilde, lset)));
}

std::optional<ParametricSet> sk_set(const KLContext& ctx, const Vector& x_l) {
  if (x_l.rows() != ctx.partition.l().size()) {
    throw ShapeError("sk_set: x_L has length " + std::to_string(x_l.rows()) + ", expected " +
                     std::to_string(ctx.partition.l().size()));
  }
  const std::size_t p = ctx.partition.k().size();
  Vector base = x_l.rows() ? mat_mul(ctx.kk_kl, x_l) : Vector(p, 1);
  if (!leq(base, constant_vector(p, ctx.lambda))) return std::nullopt;
  return ParametricSet(std::move(base), ctx.pure_kk);
}

std::vector<EigenspacePiece> kl_eigenvectors(const Matrix& a, const Partition& partition, Scalar lambda) {
  const KLContext ctx = kl_context(a, partition, lambda);
  const IndexSet& kset = partition.k();
  const IndexSet& lset = partition.l();
  const std::size_t n = a.rows();
  const std::size_t r = ctx.n_tilde.size();

  const CoveringProblem problem = build_cover_problem(ctx.a_prime, ctx.b_prime, lambda);
  std::vector<EigenspacePiece> pieces;
  for (const auto& w : minimal_coverings(problem)) {
    const Vector z = minimal_solution(w, lambda, r);
    const Matrix lam_w = lambda_w_matrix(z);

    const Vector off_l = mat_oplus(constant_vector(lset.size(), lambda), mat_mul(ctx.t_l, z));
    const Vector off_k = mat_oplus(ctx.x_k_base, mat_mul(ctx.t_k, z));
    const Matrix gen_l = mat_mul(ctx.t_l, lam_w);
    const Matrix gen_k = mat_mul(ctx.t_k, lam_w);

    Vector offset(n, 1);
    Matrix gens(n, r);
    for (std::size_t a_pos = 0; a_pos < lset.size(); ++a_pos) {
      offset[lset[a_pos]] = off_l[a_pos];
      for (std::size_t j = 0; j < r; ++j) gens(lset[a_pos], j) = gen_l(a_pos, j);
    }
    for (std::size_t k_pos = 0; k_pos < kset.size(); ++k_pos) {
      offset[kset[k_pos]] = off_k[k_pos];
      for (std::size_t j = 0; j < r; ++j) gens(kset[k_pos], j) = gen_k(k_pos, j);
    }

    EigenspacePiece piece;
    piece.kind = PieceKind::kl;
    piece.partition = partition;
    if (!ctx.l2.empty()) {
      std::vector<std::size_t> original;
      for (auto j : w.w) original.push_back(ctx.n_tilde[j]);
      piece.covering = Covering{IndexSet(std::move(original)), true};
    }
    piece.set = ParametricSet(std::move(offset), std::move(gens));
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

EigenspaceDescription full_eigenspace(const Matrix& a, Scalar lambda) {
  require_square(a, "full_eigenspace");
  const std::size_t n = a.rows();
  if (n > kMaxPartitionDimension) {
    throw SizeCapError("full_eigenspace: order " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxPartitionDimension));
  }
  EigenspaceDescription desc;
  desc.matrix = a;
  desc.lambda = lambda;

  // λ = 0 makes every K-constraint vacuous; the background set is then the
  // whole eigenspace.
  if (!lambda.is_zero()) {
    desc.pieces.push_back(
        EigenspacePiece{PieceKind::pure, Partition(IndexSet::range(n), n), std::nullopt, pure_eigenvectors(a, lambda)});
  }
  if (auto bg = background_eigenvectors(a, lambda)) {
    desc.pieces.push_back(EigenspacePiece{PieceKind::background, Partition(IndexSet(), n), std::nullopt, std::move(*bg)});
  }
  // With λ = 1 every eigenvector is already pure.
  if (!lambda.is_zero() && !lambda.is_one()) {
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
      std::vector<std::size_t> k;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) k.push_back(i);
      }
      auto pieces = kl_eigenvectors(a, Partition(IndexSet(std::move(k)), n), lambda);
      std::move(pieces.begin(), pieces.end(), std::back_inserter(desc.pieces));
    }
  }

  std::stable_sort(desc.pieces.begin(), desc.pieces.end(), [](const EigenspacePiece& x, const EigenspacePiece& y) {
    const IndexSet none;
    const IndexSet& wx = x.covering ? x.covering->w : none;
    const IndexSet& wy = y.covering ? y.covering->w : none;
    return std::tie(x.kind, x.partition.k(), wx) < std::tie(y.kind, y.partition.k(), wy);
  });
  return desc;
}

}  // namespace maxmin
