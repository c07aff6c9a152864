#include <gtest/gtest.h>

#include <algorithm>

#include "maxmin/closure.hpp"
#include "maxmin/eigenspace.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/oracle.hpp"
#include "test_support.hpp"

namespace maxmin {
namespace {

using test::InstanceGen;
using test::mat;
using test::s;
using test::vec;

Partition part(std::initializer_list<std::size_t> k, std::size_t n) { return Partition(IndexSet(k), n); }

TEST(Partition, ComplementAndBounds) {
  const Partition p = part({0, 2}, 3);
  EXPECT_EQ(p.l(), (IndexSet{1}));
  EXPECT_THROW(part({3}, 3), ContractError);
}

TEST(NSplit, Examples) {
  const auto [above, at_most] = n_split(test::three_dim(), s(".5"));
  EXPECT_EQ(above, (IndexSet{2}));
  EXPECT_EQ(at_most, (IndexSet{0, 1}));
  EXPECT_TRUE(n_split(test::three_dim(), Scalar::one()).first.empty());
  EXPECT_EQ(n_split(mat({{".1", ".2"}, {".3", ".4"}}), Scalar::zero()).first, IndexSet::range(2));
}

TEST(Background, ThreeDimExample) {
  const auto bg = background_eigenvectors(test::three_dim(), s(".5"));
  ASSERT_TRUE(bg.has_value());
  EXPECT_EQ(bg->lower_bound(), vec({".5", ".5", ".5"}));
  EXPECT_EQ(bg->upper_bound(), vec({"1", "1", ".5"}));
}

TEST(Background, AbsentWithZeroRow) {
  EXPECT_FALSE(background_eigenvectors(mat({{".7", ".3"}, {"0", "0"}}), s(".5")).has_value());
}

TEST(Background, LambdaZeroPinsColumnsAboveZero) {
  const Matrix a = mat({{"0", ".3", "0"}, {"0", ".2", "0"}, {"0", "0", "0"}});
  const auto bg = background_eigenvectors(a, Scalar::zero());
  ASSERT_TRUE(bg.has_value());
  EXPECT_EQ(bg->lower_bound(), Matrix(3, 1));
  EXPECT_EQ(bg->upper_bound(), vec({"1", "0", "1"}));
}

TEST(Background, AgreesWithGrid) {
  InstanceGen gen(97);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + gen.index(3);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    const auto bg = background_eigenvectors(a, lambda);
    const Vector target = constant_vector(n, lambda);
    for_each_grid_vector(breakpoints(a, lambda), n, kDefaultGridCap, [&](const Vector& x) {
      const bool expected = mat_mul(a, x) == target && leq(target, x);
      EXPECT_EQ(bg && membership(*bg, x), expected) << test::str(a) << " lambda=" << lambda << " x=" << test::str(x);
    });
  }
}

TEST(Pure, ThreeDimExample) {
  const ParametricSet pure = pure_eigenvectors(test::three_dim(), s(".5"));
  EXPECT_EQ(pure.offset(), Matrix(3, 1));
  EXPECT_EQ(pure.generators(), mat({{".1", ".4", ".5"}, {".1", ".4", ".5"}, {".1", ".1", ".5"}}));
  EXPECT_TRUE(membership(pure, vec({".4", ".4", ".1"})));
  EXPECT_FALSE(membership(pure, vec({".4", ".1", ".1"})));
}

TEST(Pure, KBlockOfThreeDimExample) {
  EXPECT_EQ(pure_generator_matrix(mat({{".1", ".7"}, {".1", ".5"}}), s(".5")), mat({{".1", ".5"}, {".1", ".5"}}));
}

TEST(Pure, LambdaZero) {
  EXPECT_EQ(pure_generator_matrix(test::three_dim(), Scalar::zero()), Matrix(3, 3));
}

TEST(Pure, GeneratorsAreBoundedFixedPoints) {
  InstanceGen gen(101);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + gen.index(5);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    const Matrix g = pure_generator_matrix(a, lambda);
    for (const auto& col : g.columns()) {
      EXPECT_EQ(mat_mul(a, col), col);
      EXPECT_TRUE(leq(col, constant_vector(n, lambda)));
    }
  }
}

TEST(Pure, CoversGridPureEigenvectors) {
  InstanceGen gen(103, InstanceGen::five_grid());
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + gen.index(3);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    const ParametricSet pure = pure_eigenvectors(a, lambda);
    const Vector cap = constant_vector(n, lambda);
    for_each_grid_vector(breakpoints(a, lambda), n, kDefaultGridCap, [&](const Vector& x) {
      const bool expected = mat_mul(a, x) == x && leq(x, cap);
      EXPECT_EQ(membership(pure, x), expected) << test::str(a) << " lambda=" << lambda << " x=" << test::str(x);
    });
  }
}

TEST(KLContext, ThreeDimKOneThree) {
  const KLContext ctx = kl_context(test::three_dim(), part({0, 2}, 3), s(".5"));
  EXPECT_TRUE(ctx.l1.empty());
  EXPECT_EQ(ctx.l2, (IndexSet{1}));
  EXPECT_TRUE(ctx.l_prime.empty());
  EXPECT_EQ(ctx.l_tilde, (IndexSet{1}));
  EXPECT_EQ(ctx.n_tilde, (IndexSet{0, 1, 2}));
  EXPECT_EQ(ctx.star_kk, mat({{"1", ".7"}, {".1", "1"}}));
  EXPECT_EQ(ctx.pure_kk, mat({{".1", ".5"}, {".1", ".5"}}));
  EXPECT_EQ(ctx.a_prime, mat({{".1", ".1", ".5"}}));
  EXPECT_EQ(ctx.b_prime, vec({".1"}));
}

TEST(KLContext, EmptyK) {
  const KLContext ctx = kl_context(test::three_dim(), part({}, 3), s(".5"));
  EXPECT_EQ(ctx.l1.size() + ctx.l2.size(), 3u);
  EXPECT_EQ(ctx.t_k.rows(), 0u);
  EXPECT_EQ(ctx.a_prime.cols(), ctx.n_tilde.size());
  for (const auto& v : ctx.a_prime.entries()) EXPECT_TRUE(v.is_zero());
}

TEST(KLContext, SetIdentities) {
  InstanceGen gen(107);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + gen.index(3);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < n; ++i) {
      if (gen.index(2)) k.push_back(i);
    }
    const Partition p(IndexSet(k), n);
    const KLContext ctx = kl_context(a, p, lambda);
    EXPECT_EQ(set_union(ctx.l1, ctx.l2), p.l());
    EXPECT_TRUE(set_difference(ctx.l1, ctx.l2) == ctx.l1);
    EXPECT_EQ(ctx.l_prime, set_union(ctx.l_gt_l1, ctx.l_gt_k));
    EXPECT_EQ(ctx.l_tilde, set_difference(p.l(), ctx.l_prime));
    EXPECT_EQ(ctx.n_tilde, set_union(ctx.l_tilde, p.k()));
    for (const auto& v : ctx.a_prime.entries()) EXPECT_LE(v, lambda);
    for (const auto& v : ctx.b_prime.entries()) EXPECT_LE(v, lambda);
  }
}

TEST(KLContext, ShapeChecks) {
  EXPECT_THROW(kl_context(Matrix(2, 3), part({0}, 2), s(".5")), ShapeError);
  EXPECT_THROW(kl_context(test::three_dim(), part({0}, 2), s(".5")), ShapeError);
}

TEST(SLSet, Examples) {
  const ParametricSet sl = sl_set(kl_context(test::three_dim(), part({0, 2}, 3), s(".5")));
  EXPECT_EQ(sl.lower_bound(), vec({".5"}));
  EXPECT_EQ(sl.upper_bound(), vec({"1"}));

  // L = {1,2,3} of a matrix whose column 1 exceeds λ in an L1 row: x_1 is pinned.
  const Matrix a = mat({{".7", ".5"}, {".2", ".5"}});
  const KLContext ctx = kl_context(a, part({}, 2), s(".5"));
  EXPECT_EQ(ctx.l_prime, (IndexSet{0}));
  const ParametricSet pinned = sl_set(ctx);
  EXPECT_EQ(pinned.lower_bound(), vec({".5", ".5"}));
  EXPECT_EQ(pinned.upper_bound(), vec({".5", "1"}));

  const ParametricSet none = sl_set(kl_context(test::three_dim(), part({0, 1, 2}, 3), s(".5")));
  EXPECT_EQ(none.dim(), 0u);
}

TEST(SKSet, Examples) {
  const KLContext ctx = kl_context(test::three_dim(), part({0, 2}, 3), s(".5"));
  for (const char* x2 : {".5", ".7", "1"}) EXPECT_TRUE(sk_set(ctx, vec({x2})).has_value()) << x2;

  const KLContext empty_k = kl_context(test::three_dim(), part({}, 3), s(".5"));
  const auto sk = sk_set(empty_k, vec({".5", ".5", ".5"}));
  ASSERT_TRUE(sk.has_value());
  EXPECT_EQ(sk->dim(), 0u);

  // A_KL = 1 passes x_L = 1 straight into x_K, exceeding λ.
  const KLContext witness = kl_context(mat({{".2", "1"}, {".1", ".6"}}), part({0}, 2), s(".5"));
  EXPECT_FALSE(sk_set(witness, vec({"1"})).has_value());
  EXPECT_TRUE(sk_set(witness, vec({".5"})).has_value());
  EXPECT_THROW(sk_set(witness, vec({".5", ".5"})), ShapeError);
}

std::vector<Vector> members_on_grid(const EigenspacePiece& piece, const ValueGrid& grid) {
  return grid_solutions(grid, piece.set.dim(), kDefaultGridCap, [&](const Vector& x) { return membership(piece.set, x); });
}

std::vector<Vector> box_on_grid(const ValueGrid& grid, const Vector& lo, const Vector& hi) {
  return grid_solutions(grid, lo.rows(), kDefaultGridCap, [&](const Vector& x) { return leq(lo, x) && leq(x, hi); });
}

TEST(KLEigenvectors, ThreeDimKOneThree) {
  const auto pieces = kl_eigenvectors(test::three_dim(), part({0, 2}, 3), s(".5"));
  ASSERT_EQ(pieces.size(), 1u);
  ASSERT_TRUE(pieces[0].covering.has_value());
  EXPECT_EQ(pieces[0].covering->w, (IndexSet{2}));
  EXPECT_EQ(pieces[0].set.lower_bound(), vec({".5", ".5", ".5"}));
  EXPECT_EQ(pieces[0].set.upper_bound(), vec({".5", "1", ".5"}));
  const ValueGrid grid = breakpoints(test::three_dim(), s(".5"));
  EXPECT_EQ(members_on_grid(pieces[0], grid), box_on_grid(grid, vec({".5", ".5", ".5"}), vec({".5", "1", ".5"})));
}

TEST(KLEigenvectors, ThreeDimKTwoThree) {
  const auto pieces = kl_eigenvectors(test::three_dim(), part({1, 2}, 3), s(".5"));
  ASSERT_EQ(pieces.size(), 1u);
  const ValueGrid grid = breakpoints(test::three_dim(), s(".5"));
  EXPECT_EQ(members_on_grid(pieces[0], grid), box_on_grid(grid, vec({".5", ".5", ".5"}), vec({"1", ".5", ".5"})));
}

TEST(KLEigenvectors, ThreeDimRemainingPartitionsOnlyReachTheCentre) {
  // Every other proper partition still admits (.5,.5,.5); their pieces lie
  // in the union of the other parts.
  const Matrix a = test::three_dim();
  const Scalar lambda = s(".5");
  const EigenspaceDescription desc = full_eigenspace(a, lambda);
  for (const auto& k : {IndexSet{0}, IndexSet{1}, IndexSet{2}, IndexSet{0, 1}}) {
    const auto pieces = kl_eigenvectors(a, Partition(k, 3), lambda);
    ASSERT_FALSE(pieces.empty()) << k.to_string();
    for (const auto& p : pieces) {
      EXPECT_TRUE(membership(p.set, vec({".5", ".5", ".5"})));
      for (const auto& x : sample(p.set, 40, 3)) EXPECT_TRUE(check_eigen(a, lambda, x));
    }
  }
}

TEST(FullEigenspace, Ex1GenuinePoint) {
  const EigenspaceDescription desc = full_eigenspace(test::ex1(), s(".5"));
  const Vector x = vec({".35", ".8"});
  EXPECT_TRUE(check_eigen(test::ex1(), s(".5"), x));
  const bool in_kl = std::any_of(desc.pieces.begin(), desc.pieces.end(), [&](const EigenspacePiece& p) {
    return p.kind == PieceKind::kl && p.partition.k() == IndexSet{0} && membership(p.set, x);
  });
  EXPECT_TRUE(in_kl);
}

TEST(FullEigenspace, Ex2HasNoGenuinePoints) {
  const Matrix b = test::ex2();
  const Scalar lambda = s(".5");
  const EigenspaceDescription desc = full_eigenspace(b, lambda);
  std::vector<EigenspacePiece> base;
  for (const auto& p : desc.pieces) {
    if (p.kind != PieceKind::kl) base.push_back(p);
  }
  const EigenspaceDescription pure_bg{b, lambda, base};
  for (const auto& x : grid_eigenvectors(b, lambda, breakpoints(b, lambda))) {
    const bool genuine = (x[0] < lambda && lambda < x[1]) || (x[1] < lambda && lambda < x[0]);
    if (genuine) EXPECT_TRUE(pure_bg.contains(x)) << test::str(x);
  }
}

TEST(FullEigenspace, ThreeDimMatchesGrid) {
  const EigenspaceDescription desc = full_eigenspace(test::three_dim(), s(".5"));
  EXPECT_TRUE(cross_validate(test::three_dim(), s(".5"), desc, breakpoints(test::three_dim(), s(".5"))).passed());
  EXPECT_EQ(desc.pieces.front().kind, PieceKind::pure);
  EXPECT_EQ(desc.pieces[1].kind, PieceKind::background);
}

TEST(FullEigenspace, LambdaEdges) {
  const EigenspaceDescription zero = full_eigenspace(test::three_dim(), Scalar::zero());
  ASSERT_EQ(zero.pieces.size(), 1u);
  EXPECT_EQ(zero.pieces[0].kind, PieceKind::background);
  const EigenspaceDescription one = full_eigenspace(test::three_dim(), Scalar::one());
  for (const auto& p : one.pieces) EXPECT_NE(p.kind, PieceKind::kl);
  const EigenspaceDescription zm = full_eigenspace(Matrix(2, 2), Scalar::zero());
  EXPECT_TRUE(cross_validate(Matrix(2, 2), Scalar::zero(), zm, breakpoints(Matrix(2, 2), Scalar::zero())).passed());
}

TEST(FullEigenspace, SizeCap) {
  EXPECT_THROW(full_eigenspace(Matrix(25, 25), s(".5")), SizeCapError);
  EXPECT_THROW(full_eigenspace(Matrix(2, 3), s(".5")), ShapeError);
}

TEST(FullEigenspace, SampledMembersSatisfyEverything) {
  InstanceGen gen(109);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + gen.index(3);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    const Matrix star = kleene_star(a);
    const EigenspaceDescription desc = full_eigenspace(a, lambda);
    for (std::size_t k = 0; k < desc.pieces.size(); ++k) {
      const auto& piece = desc.pieces[k];
      for (const auto& x : sample(piece.set, 30, t * 31 + k)) {
        EXPECT_TRUE(check_eigen(a, lambda, x)) << test::str(a) << " lambda=" << lambda << " x=" << test::str(x);
        EXPECT_EQ(mat_mul(star, x), x);
        for (auto i : piece.partition.k()) EXPECT_LE(x[i], lambda);
        for (auto i : piece.partition.l()) EXPECT_GE(x[i], lambda);
      }
    }
  }
}

TEST(FullEigenspace, LRowsSplitIntoL1AndL2Equations) {
  // For a (K,L)-eigenvector the L rows of A⊗x = λ⊗x hold iff both the
  // L1 rows (some entry reaches λ) and the L2 rows hold separately.
  InstanceGen gen(113);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + gen.index(2);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    for (const auto& piece : full_eigenspace(a, lambda).pieces) {
      if (piece.kind != PieceKind::kl) continue;
      const KLContext ctx = kl_context(a, piece.partition, lambda);
      for (const auto& x : sample(piece.set, 10, t)) {
        const Vector ax = mat_mul(a, x);
        auto rows_hold = [&](const IndexSet& rows) {
          return std::all_of(rows.begin(), rows.end(), [&](std::size_t i) { return ax[i] == lambda; });
        };
        EXPECT_EQ(rows_hold(piece.partition.l()), rows_hold(ctx.l1) && rows_hold(ctx.l2));
        EXPECT_TRUE(rows_hold(ctx.l1));
        EXPECT_TRUE(rows_hold(ctx.l2));
      }
    }
  }
}

TEST(FullEigenspace, CompleteOnGrid) {
  InstanceGen gen(127);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + gen.index(2);
    const Matrix a = gen.matrix(n, n);
    const Scalar lambda = gen.scalar();
    const auto report = cross_validate(a, lambda, full_eigenspace(a, lambda), breakpoints(a, lambda), 10, t);
    EXPECT_TRUE(report.passed()) << test::str(a) << " lambda=" << lambda << '\n' << report.to_string();
  }
}

}  // namespace
}  // namespace maxmin
