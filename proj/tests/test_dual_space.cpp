#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "screwsr/dual_space.hpp"

using namespace screwsr;

namespace {

const Field kFields[] = {Field::Real, Field::Complex, Field::Quaternion};

double cdist(const CMat& a, const CMat& b) { return (a - b).norm(); }

Mat random_vector(std::size_t m, Field f, Rng& rng)
{
  Mat v(m, 1, f);
  const Mat r = random_f_matrix(m, f, rng);
  for (std::size_t i = 0; i < m; ++i) v(i, 0) = r(i, 0);
  return v;
}

}  // namespace

TEST(SplitSpace, FormAndComplexStructure)
{
  Rng rng(1);
  for (Field f : kFields)
    for (int n = 1; n <= 3; ++n) {
      const SplitSpace sp{n, f};
      const Mat j = sp.complex_structure();
      const auto m = static_cast<std::size_t>(2 * n);
      EXPECT_EQ(distance(j * j, -1.0 * Mat::identity(m, f)), 0.0);
      for (int trial = 0; trial < 10; ++trial) {
        const Mat u = random_vector(m, f, rng), v = random_vector(m, f, rng);
        EXPECT_LE(distance(sp.g(j * u, j * v), -1.0 * sp.g(u, v)), 1e-12);
        // Hermitian: g(v, u) = conj g(u, v).
        EXPECT_LE(distance(sp.g(v, u), sp.g(u, v).adjoint()), 1e-14);
      }
    }
  EXPECT_THROW((SplitSpace{0, Field::Real}).form(), DomainError);
}

TEST(GraphSubspace, Examples)
{
  const Mat id = Mat::identity(2);
  const auto v0 = graph_subspace(id);
  EXPECT_EQ(v0.isotropy_residual, 0.0);
  // V_o = {(x, x)}.
  const Mat diag = Mat::real({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  EXPECT_LE(subspace_distance(v0.frame, diag), 1e-15);

  const auto vm = graph_subspace(-1.0 * id);
  EXPECT_TRUE(vm.isotropic());
  EXPECT_LE(subspace_distance(vm.frame, Mat::real({{-1, 0}, {0, -1}, {1, 0}, {0, 1}})), 1e-15);

  // A non-unitary map has a non-isotropic graph.
  EXPECT_FALSE(graph_subspace(2.0 * id).isotropic());
}

TEST(GraphSubspace, RandomUnitaryIsIsotropic)
{
  Rng rng(2);
  for (Field f : kFields)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        const auto g = graph_subspace(random_unitary(n, f, rng));
        EXPECT_LE(g.isotropy_residual, 1e-10);
      }
}

TEST(Mobius, Examples)
{
  Rng rng(3);
  for (Field f : kFields) {
    const Mat a = random_unitary(2, f, rng);
    EXPECT_LE(distance(mobius_act(Mat::identity(4, f), a), a), 1e-15);

    const Mat u = random_unitary(2, f, rng), v = random_unitary(2, f, rng);
    const Mat x = block2x2(u, Mat(2, 2, f), Mat(2, 2, f), v);
    EXPECT_LE(distance(mobius_act(x, a), u * a * v.adjoint()), 1e-13);
  }
  EXPECT_THROW(mobius_act(Mat::identity(4), 2.0 * Mat::identity(2)), DomainError);
  EXPECT_THROW(mobius_act(2.0 * Mat::identity(4), Mat::identity(2)), DomainError);
  EXPECT_THROW(mobius_act(Mat::identity(6), Mat::identity(2)), DimensionError);
}

TEST(Mobius, AgreesWithActionOnGraphs)
{
  // Independent route: X maps the graph of A onto the graph of X.A.
  Rng rng(4);
  for (Field f : kFields)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const Mat x = random_split_unitary(n, f, rng);
        const Mat a = random_unitary(n, f, rng);
        const Mat image = x * graph_subspace(a).frame;
        EXPECT_LE(subspace_distance(image, graph_subspace(mobius_act(x, a)).frame), 1e-10);
      }
}

TEST(Mobius, ClosureAndActionLaw)
{
  Rng rng(5);
  for (Field f : kFields)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 30; ++trial) {
        const Mat x = random_split_unitary(n, f, rng), y = random_split_unitary(n, f, rng);
        const Mat a = random_unitary(n, f, rng);
        const Mat ya = mobius_act(y, a);
        EXPECT_LE(unitarity_residual(ya), 1e-9);
        EXPECT_LE(distance(mobius_act(x * y, a), mobius_act(x, ya)), 1e-9);
      }
}

TEST(UJ, Membership)
{
  const auto id = uj_membership(Mat::identity(4));
  ASSERT_TRUE(id.member);
  EXPECT_EQ(distance(id.a, Mat::identity(2)), 0.0);
  EXPECT_EQ(frobenius_norm(id.b), 0.0);

  const double t = 0.8;
  const Mat x = uj_from_cartan(Mat::identity(2), Mat::real({{0, -t}, {t, 0}}));
  const auto m = uj_membership(x);
  EXPECT_TRUE(m.member);
  EXPECT_LE(m.block_identity_residual, 1e-14);

  Rng rng(7);
  for (Field f : kFields) {
    const Mat g = random_split_unitary(2, f, rng);
    const auto r = uj_membership(g);
    EXPECT_LE(r.split_residual, 1e-12);
    EXPECT_FALSE(r.member);
    EXPECT_GT(r.commutation_residual, 1e-3);

    const auto u = uj_membership(random_uj(2, f, rng));
    EXPECT_TRUE(u.member);
    EXPECT_LE(u.block_identity_residual, 1e-12);
  }
}

TEST(UJ, CartanParametrizationMatchesSeries)
{
  // cos z and sin z of z = [[0, -t], [t, 0]] are cosh t I and (sinh t / t) z.
  const double t = 1.3;
  const Mat x = uj_from_cartan(Mat::identity(2), Mat::real({{0, -t}, {t, 0}}));
  const Mat expected = Mat::real({{std::cosh(t), 0, 0, std::sinh(t)},
                                  {0, std::cosh(t), -std::sinh(t), 0},
                                  {0, -std::sinh(t), std::cosh(t), 0},
                                  {std::sinh(t), 0, 0, std::cosh(t)}});
  EXPECT_LE(distance(x, expected), 1e-13);
}

TEST(Psi, Examples)
{
  const CMat id = psi_map(Mat::identity(4));
  EXPECT_LE(cdist(id, CMat::identity(2)), 0.0);

  // psi(X(u, z)) = u exp(i z).
  Rng rng(8);
  const Mat u = random_unitary(3, Field::Real, rng), z = random_skew(3, Field::Real, rng, 0.7);
  const CMat got = psi_map(uj_from_cartan(u, z));
  CMat iz = embed_complex(z);
  for (auto& c : iz.a) c *= cplx(0.0, 1.0);
  EXPECT_LE(cdist(got, embed_complex(u) * detail::cexp(iz)), 1e-12);

  EXPECT_THROW(psi_map(random_split_unitary(2, Field::Real, rng)), DomainError);
}

TEST(Psi, HomomorphismAndInjectivity)
{
  Rng rng(9);
  for (Field f : kFields)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const Mat x = random_uj(n, f, rng), y = random_uj(n, f, rng);
        const CMat px = psi_map(x), py = psi_map(y);
        EXPECT_LE(cdist(psi_map(x * y), px * py), 1e-9);
        // U^J(1,1,R) is the finite group {I, -I}; random draws coincide.
        if (f != Field::Real || n > 1) {
          EXPECT_GT(cdist(px, py), 1e-6);
        }
      }
}

TEST(UPlus, Examples)
{
  auto r = u_plus_membership(Mat::identity(3));
  EXPECT_EQ(r.verdict, UPlusVerdict::Inside);
  EXPECT_TRUE(r.in_u_prime);

  r = u_plus_membership(rotation2(std::numbers::pi));
  EXPECT_EQ(r.verdict, UPlusVerdict::Outside);
  EXPECT_TRUE(r.in_u_prime);

  r = u_plus_membership(rotation2(std::numbers::pi / 2));
  EXPECT_EQ(r.verdict, UPlusVerdict::Boundary);
  EXPECT_FALSE(r.in_u_prime);

  r = u_plus_membership(rotation2(1.0));
  EXPECT_EQ(r.verdict, UPlusVerdict::Inside);

  EXPECT_THROW(u_plus_membership(2.0 * Mat::identity(2)), DomainError);
}

TEST(UPlus, ConsistentWithTransversality)
{
  Rng rng(10);
  for (Field f : kFields)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        const Mat a = random_unitary(n, f, rng, 2.0);
        const auto r = u_plus_membership(a);
        EXPECT_TRUE(r.consistent);
        // A in U' iff J F(A) meets F(A) only in 0.
        EXPECT_EQ(r.in_u_prime, j_transversality(graph_subspace(a).frame) > 1e-9);
      }
  EXPECT_LE(j_transversality(graph_subspace(rotation2(std::numbers::pi / 2)).frame), 1e-12);
}

TEST(UPlus, UJActionPreservesUPrime)
{
  Rng rng(11);
  for (Field f : kFields)
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const Mat a = random_unitary(n, f, rng, 0.5);
        ASSERT_TRUE(u_plus_membership(a).in_u_prime);
        const Mat b = mobius_act(random_uj(n, f, rng), a);
        EXPECT_TRUE(u_plus_membership(b).in_u_prime);
      }
}

TEST(UJ, StabilizerOfBasePoint)
{
  Rng rng(12);
  const Mat vo = graph_subspace(Mat::identity(2, Field::Complex)).frame;
  // b = 0, a unitary: fixes V_o.
  const Mat a = random_unitary(2, Field::Complex, rng);
  const Mat fix = block2x2(a, Mat(2, 2, Field::Complex), Mat(2, 2, Field::Complex), a);
  EXPECT_LE(subspace_distance(fix * vo, vo), 1e-12);
  // b != 0 moves it.
  const Mat moved = random_uj(2, Field::Complex, rng);
  ASSERT_GT(frobenius_norm(uj_membership(moved).b), 1e-3);
  EXPECT_GT(subspace_distance(moved * vo, vo), 1e-3);
}

TEST(SO2Orbit, Examples)
{
  for (int eps : {1, -1}) {
    const auto p = so2_orbit(0.7, 0.0, eps);
    EXPECT_LE(std::abs(p.closed_form - cplx(eps, 0)), 1e-15);
    EXPECT_LE(p.discrepancy(), 1e-12);
  }
  const auto p = so2_orbit(0.0, 0.5, 1);
  EXPECT_LE(std::abs(p.closed_form - std::exp(cplx(0, -std::asin(std::tanh(1.0))))), 1e-15);
  EXPECT_LE(p.discrepancy(), 1e-9);
  // w = [[eps sech 2t, tanh 2t], [-tanh 2t, eps sech 2t]].
  EXPECT_NEAR(p.w(0, 0).w, 1.0 / std::cosh(1.0), 1e-12);
  EXPECT_NEAR(p.w(0, 1).w, std::tanh(1.0), 1e-12);
  EXPECT_THROW(so2_orbit_closed_form(0.1, 0), DomainError);
}

TEST(SO2Orbit, GridAgreementAndLimits)
{
  for (int eps : {1, -1})
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        const double s = -std::numbers::pi + 2 * std::numbers::pi * i / 20.0, t = -2.0 + 4.0 * j / 20.0;
        const auto p = so2_orbit(s, t, eps);
        EXPECT_LE(p.discrepancy(), 1e-9);
        EXPECT_LE(p.psi_residual, 1e-9);
      }
  // The argument tends to -eps pi/2 monotonically and the real part stays nonzero.
  for (int eps : {1, -1}) {
    double prev = 0.0;
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      const cplx w = so2_orbit_closed_form(t, eps) / static_cast<double>(eps);
      const double arg = std::arg(w);
      EXPECT_LT(eps * arg, eps * prev);
      EXPECT_GT(eps * arg, -std::numbers::pi / 2);
      EXPECT_NE(so2_orbit_closed_form(t, eps).real(), 0.0);
      prev = arg;
    }
  }
}
