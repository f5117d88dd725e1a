#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "screwsr/compact_groups.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/random.hpp"

using namespace screwsr;

namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const CMat& c)
{
  EMat e(c.rows, c.cols);
  for (std::size_t i = 0; i < c.rows; ++i)
    for (std::size_t j = 0; j < c.cols; ++j) e(i, j) = c(i, j);
  return e;
}

Mat random_matrix(std::size_t n, Field f, std::uint64_t seed, double target_norm)
{
  Rng rng(seed);
  Mat m(n, n, f);
  for (auto& q : m.data()) {
    q.w = rng.uniform(-1, 1);
    if (f != Field::Real) q.x = rng.uniform(-1, 1);
    if (f == Field::Quaternion) {
      q.y = rng.uniform(-1, 1);
      q.z = rng.uniform(-1, 1);
    }
  }
  return (target_norm / frobenius_norm(m)) * m;
}

Mat random_anti_hermitian(std::size_t n, Field f, std::uint64_t seed, double target_norm)
{
  Mat m = random_matrix(n, f, seed, 1.0);
  Mat a = m - m.adjoint();
  return (target_norm / frobenius_norm(a)) * a;
}

const Mat kRot = Mat::real({{0, -1}, {1, 0}});

}  // namespace

TEST(MatExp, ZeroIsExactIdentity)
{
  const Mat e = mat_exp(Mat::zeros(3, 3));
  EXPECT_EQ(distance(e, Mat::identity(3)), 0.0);
}

TEST(MatExp, PlanarRotation)
{
  const Mat e = mat_exp((std::numbers::pi / 2) * kRot);
  EXPECT_LE(distance(e, kRot), 1e-14);
}

TEST(MatExp, NonSquareThrows) { EXPECT_THROW(mat_exp(Mat(2, 3)), DimensionError); }

TEST(MatExp, InverseIdentity)
{
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Mat a = random_matrix(5, Field::Complex, seed, 5.0);
    const Mat p = mat_exp(a) * mat_exp(-a);
    EXPECT_LE(distance(p, Mat::identity(5, Field::Complex)), 1e-12) << "seed " << seed;
  }
}

TEST(MatExp, AgreesWithEigenOracle)
{
  for (double nrm : {0.1, 1.0, 5.0, 20.0})
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Mat a = random_anti_hermitian(4, f, seed, nrm);
        const EMat ref = to_eigen(embed_complex(a)).exp();
        const EMat got = to_eigen(embed_complex(mat_exp(a)));
        EXPECT_LE((got - ref).norm() / ref.norm(), 1e-12) << "norm " << nrm << " seed " << seed;
      }
  // Non-normal input of moderate norm.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Mat a = random_matrix(6, Field::Complex, 100 + seed, 3.0);
    const EMat ref = to_eigen(embed_complex(a)).exp();
    const EMat got = to_eigen(embed_complex(mat_exp(a)));
    EXPECT_LE((got - ref).norm() / ref.norm(), 1e-12);
  }
}

TEST(MatExp, AdditiveOnCommutingArguments)
{
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Mat a = random_anti_hermitian(4, Field::Complex, seed, 2.0);
    const Mat b = 0.7 * a + 0.3 * a * a * a;  // polynomial in a, so [a, b] = 0
    ASSERT_LE(frobenius_norm(bracket(a, b)), 1e-14 * 100);
    EXPECT_LE(distance(mat_exp(a + b), mat_exp(a) * mat_exp(b)), 1e-10);
  }
}

TEST(MatExp, AntiHermitianGivesUnitary)
{
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      EXPECT_LE(unitarity_residual(mat_exp(random_anti_hermitian(5, f, seed, 6.0))), 1e-10);
}

TEST(MatCosSin, MatchesExponentialOfIz)
{
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Mat z = random_anti_hermitian(3, Field::Real, seed, 3.0);
    const auto [c, s] = mat_cos_sin(z);
    const Mat iz = z.promoted(Field::Complex).scaled_left(kI, Field::Complex);
    const Mat e = mat_exp(iz);
    const Mat cs = c.promoted(Field::Complex) + s.promoted(Field::Complex).scaled_left(kI, Field::Complex);
    EXPECT_LE(distance(e, cs), 1e-11);
    // cos^2 + sin^2 = I for a single matrix argument.
    EXPECT_LE(distance(c * c + s * s, Mat::identity(3)), 1e-11);
  }
}

TEST(Bracket, Basics)
{
  const Mat a = random_matrix(3, Field::Real, 3, 1.0);
  EXPECT_EQ(frobenius_norm(bracket(a, a)), 0.0);

  const Mat e12 = Mat::real({{0, 1}, {0, 0}});
  const Mat e21 = Mat::real({{0, 0}, {1, 0}});
  EXPECT_EQ(distance(bracket(e12, e21), Mat::real({{1, 0}, {0, -1}})), 0.0);

  EXPECT_THROW(bracket(Mat(2, 2), Mat(3, 3)), DimensionError);
  EXPECT_THROW(bracket(Mat(2, 2, Field::Real), Mat(2, 2, Field::Complex)), DimensionError);
}

TEST(Bracket, JacobiIdentity)
{
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Mat a = random_matrix(4, f, seed, 1.0);
      const Mat b = random_matrix(4, f, seed + 100, 1.0);
      const Mat c = random_matrix(4, f, seed + 200, 1.0);
      const Mat j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      EXPECT_LE(frobenius_norm(j), 1e-12);
    }
}

TEST(ReTraceInner, Examples)
{
  EXPECT_DOUBLE_EQ(re_trace_inner(kRot, kRot), 2.0);
  Mat a(3, 3), b(3, 3);
  a(0, 1) = 1;
  a(1, 0) = -1;
  b(1, 2) = 1;
  b(2, 1) = -1;
  EXPECT_EQ(re_trace_inner(a, b), 0.0);
  EXPECT_THROW(re_trace_inner(Mat(2, 2), Mat(2, 3)), DimensionError);
}

TEST(ReTraceInner, AgreesWithNegativeTraceOnAntiHermitian)
{
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    const Mat x = random_anti_hermitian(3, f, 5, 1.3);
    const Mat y = random_anti_hermitian(3, f, 6, 0.7);
    const Mat xy = x * y;
    double tr = 0.0;
    for (std::size_t i = 0; i < 3; ++i) tr += xy(i, i).w;
    EXPECT_NEAR(re_trace_inner(x, y), -tr, 1e-14);
    EXPECT_GT(re_trace_inner(x, x), 0.0);
  }
}

TEST(ReTraceInner, AdInvariance)
{
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Mat w = random_anti_hermitian(4, f, seed, 1.0);
      const Mat u = random_anti_hermitian(4, f, seed + 50, 1.0);
      const Mat v = random_anti_hermitian(4, f, seed + 90, 1.0);
      EXPECT_LE(std::abs(re_trace_inner(bracket(w, u), v) + re_trace_inner(u, bracket(w, v))), 1e-12);
    }
}

TEST(NumericRank, Examples)
{
  const Mat v = random_matrix(3, Field::Real, 1, 1.0);
  EXPECT_EQ(numeric_rank(std::vector<Mat>{v, 2.0 * v}), 1);
  EXPECT_EQ(numeric_rank(algebra_basis({Family::SO, 3}).elements), 3);
  EXPECT_EQ(numeric_rank(std::vector<Mat>{}), 0);
  EXPECT_EQ(numeric_rank(std::vector<Mat>{Mat(2, 2), Mat(2, 2)}), 0);
}

TEST(NumericRank, InvariantUnderOrthonormalChangeOfSpanningSet)
{
  // Rotate a spanning set of a 4-dim subspace by a random orthogonal 6x6
  // mixing matrix; the span, hence the rank, must not change.
  std::vector<Mat> vs;
  for (std::uint64_t s = 0; s < 4; ++s) vs.push_back(random_matrix(3, Field::Complex, 10 + s, 1.0));
  vs.push_back(vs[0] + vs[1]);
  vs.push_back(vs[2] - 3.0 * vs[3]);
  const Mat q = mat_exp(random_anti_hermitian(6, Field::Real, 77, 2.0));
  std::vector<Mat> mixed;
  for (std::size_t i = 0; i < 6; ++i) {
    Mat m(3, 3, Field::Complex);
    for (std::size_t j = 0; j < 6; ++j) m += q(i, j).w * vs[j];
    mixed.push_back(m);
  }
  EXPECT_EQ(numeric_rank(vs), 4);
  EXPECT_EQ(numeric_rank(mixed), 4);
}

TEST(EigRealParts, Examples)
{
  EXPECT_EQ(eig_real_parts(Mat::identity(3)), (std::vector<double>{1, 1, 1}));

  const double th = 2 * std::numbers::pi / 3;
  const Mat r = Mat::real({{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}});
  for (double re : eig_real_parts(r)) EXPECT_NEAR(re, -0.5, 1e-12);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Mat g = random_group_element({Family::SO, 4}, seed, 2.0);
    for (double re : eig_real_parts(g)) {
      EXPECT_GE(re, -1.0 - 1e-12);
      EXPECT_LE(re, 1.0 + 1e-12);
    }
  }
}

TEST(EigRealParts, AgreesWithEigenOracle)
{
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const std::size_t n = f == Field::Quaternion ? 8 : 16;
      const Mat a = random_matrix(n, f, seed, 4.0);
      Eigen::ComplexEigenSolver<EMat> solver(to_eigen(embed_complex(a)), false);
      std::vector<double> ref;
      for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) ref.push_back(solver.eigenvalues()(i).real());
      std::sort(ref.begin(), ref.end());
      const auto got = eig_real_parts(a);
      ASSERT_EQ(got.size(), ref.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], ref[i], 1e-9);
    }
}

TEST(EigRealParts, CapacityLimit)
{
  EXPECT_THROW(eig_real_parts(Mat::identity(17)), CapacityError);
  EXPECT_THROW(eig_real_parts(Mat::identity(9, Field::Quaternion)), CapacityError);
  EXPECT_NO_THROW(eig_real_parts(Mat::identity(8, Field::Quaternion)));
}

TEST(QuaternionEmbedding, IsHomomorphism)
{
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Quaternion p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Quaternion q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Mat mp(1, 1, Field::Quaternion), mq(1, 1, Field::Quaternion), mpq(1, 1, Field::Quaternion);
    mp(0, 0) = p;
    mq(0, 0) = q;
    mpq(0, 0) = p * q;
    const EMat lhs = to_eigen(embed_complex(mpq));
    const EMat rhs = to_eigen(embed_complex(mp)) * to_eigen(embed_complex(mq));
    EXPECT_LE((lhs - rhs).norm(), 1e-15);
    // (pq)* = q* p*, |q|^2 = q q* real.
    const Quaternion c = (p * q).conj() - q.conj() * p.conj();
    EXPECT_LE(c.abs(), 1e-15);
    const Quaternion n = q * q.conj();
    EXPECT_NEAR(n.w, q.norm2(), 1e-15);
    EXPECT_EQ(n.x, 0.0);
  }
  // Matrix level, including the adjoint.
  const Mat a = random_matrix(3, Field::Quaternion, 1, 1.0);
  const Mat b = random_matrix(3, Field::Quaternion, 2, 1.0);
  EXPECT_LE((to_eigen(embed_complex(a * b)) - to_eigen(embed_complex(a)) * to_eigen(embed_complex(b))).norm(), 1e-14);
  EXPECT_LE((to_eigen(embed_complex(a.adjoint())) - to_eigen(embed_complex(a)).adjoint()).norm(), 0.0);
  EXPECT_LE(distance(unembed_complex(embed_complex(a), Field::Quaternion), a), 0.0);
}

TEST(Inverse, RoundTripAndSingular)
{
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion}) {
    const Mat a = Mat::identity(4, f) + random_matrix(4, f, 3, 0.5);
    EXPECT_LE(distance(a * inverse(a), Mat::identity(4, f)), 1e-13);
  }
  EXPECT_THROW(inverse(Mat::real({{1, 2}, {2, 4}})), NumericError);
}

TEST(MinSingularValue, Diagonal)
{
  EXPECT_NEAR(min_singular_value(Mat::real({{3, 0}, {0, -0.5}})), 0.5, 1e-12);
  Mat q(2, 2, Field::Quaternion);
  q(0, 0) = Quaternion(0, 0, 2, 0);
  q(1, 1) = Quaternion(0, 0, 0, 0.25);
  EXPECT_NEAR(min_singular_value(q), 0.25, 1e-12);
}
