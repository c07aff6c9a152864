#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxmin/cover.hpp"
#include "maxmin/matrix.hpp"
#include "maxmin/parametric_set.hpp"

namespace maxmin {

/// Split of {0..n-1} into K (components <= λ) and L (components >= λ).
class Partition {
 public:
  Partition() = default;
  /// L is the complement of K. Throws ContractError if K has an index >= n.
  Partition(IndexSet k, std::size_t n);

  const IndexSet& k() const { return k_; }
  const IndexSet& l() const { return l_; }
  std::size_t n() const { return n_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  IndexSet k_;
  IndexSet l_;
  std::size_t n_ = 0;
};

/// Everything derived from (A, K, L, λ) that the (K,L) construction needs.
/// Matrices indexed by K or L use positions within those sets; the other
/// index sets hold original (0-based) indices.
struct KLContext {
  Partition partition;
  Scalar lambda;

  IndexSet l1;        // rows of L whose L-part reaches λ
  IndexSet l2;        // the remaining rows of L
  IndexSet l_gt_l1;   // columns ℓ ∈ L with max_{i∈L1} a_iℓ > λ
  IndexSet l_gt_k;    // columns ℓ ∈ L with max_k ((A_KK)*A_KL)_kℓ > λ
  IndexSet l_prime;   // forced to λ
  IndexSet l_tilde;   // free in [λ,1]
  IndexSet n_tilde;   // L̃ ∪ K: the parameters of the reduced system

  Matrix star_kk;     // (A_KK)*
  Matrix pure_kk;     // (A_KK)*_λ
  Matrix kk_kl;       // (A_KK)* ⊗ A_KL
  Vector x_k_base;    // λ ⊗ (A_KK)* ⊗ A_KL ⊗ 1_L

  /// x_L = λ1_L ⊕ t_l ⊗ z' and x_K = x_k_base ⊕ t_k ⊗ z' with z' over Ñ.
  Matrix t_l;
  Matrix t_k;

  Matrix a_prime;     // |L2| x |Ñ|
  Vector b_prime;     // length |L2|
};

enum class PieceKind { pure, background, kl };

const char* to_string(PieceKind kind);
/// Throws ParseError for unknown names.
PieceKind piece_kind_from_string(std::string_view name);

/// One parametric piece of a λ-eigenspace.
struct EigenspacePiece {
  PieceKind kind = PieceKind::kl;
  Partition partition;
  std::optional<Covering> covering;  // only for kl pieces with L2 nonempty
  ParametricSet set;

  friend bool operator==(const EigenspacePiece&, const EigenspacePiece&) = default;
};

/// A redundant union of pieces that together make up the λ-eigenspace.
struct EigenspaceDescription {
  Matrix matrix;
  Scalar lambda;
  std::vector<EigenspacePiece> pieces;

  /// x lies in at least one piece.
  bool contains(const Vector& x) const;
};

/// (N^{>λ}, N^{<=λ}) by column maxima.
std::pair<IndexSet, IndexSet> n_split(const Matrix& a, Scalar lambda);

/// Solutions of A⊗x = λ1 with x >= λ1; nullopt when some row max is < λ.
std::optional<ParametricSet> background_eigenvectors(const Matrix& a, Scalar lambda);

/// Columns λ ⊗ a⁺_ii ⊗ (A*)_{·i} as one matrix.
Matrix pure_generator_matrix(const Matrix& a, Scalar lambda);

/// Solutions of A⊗x = x with x <= λ1.
ParametricSet pure_eigenvectors(const Matrix& a, Scalar lambda);

/// Throws ShapeError for non-square A or mismatched partition, and
/// ContractError if the reduced system violates the <= λ bound.
KLContext kl_context(const Matrix& a, const Partition& partition, Scalar lambda);

/// x_L = λ1_L ⊕ Λ_{L,L̃} z over L (dimension |L|).
ParametricSet sl_set(const KLContext& ctx);

/// Solutions x_K of the K-block equation for a fixed x_L (dimension |K|);
/// nullopt when (A_KK)*⊗A_KL⊗x_L exceeds λ somewhere.
std::optional<ParametricSet> sk_set(const KLContext& ctx, const Vector& x_l);

/// All (K,L)-eigenvectors as one piece per minimal covering of the reduced
/// system; empty iff there are none.
std::vector<EigenspacePiece> kl_eigenvectors(const Matrix& a, const Partition& partition, Scalar lambda);

/// Pure, background and every proper (K,L) piece, ordered by kind, then
/// partition, then covering.
EigenspaceDescription full_eigenspace(const Matrix& a, Scalar lambda);

}  // namespace maxmin
