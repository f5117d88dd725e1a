#include <gtest/gtest.h>

#include <cmath>

#include "screwsr/octonion.hpp"

using namespace screwsr;

namespace {

Vec7 random_vec(Rng& rng)
{
  Vec7 v;
  for (auto& c : v) c = rng.uniform(-1, 1);
  return v;
}

Vec7 e(int i) { return unit7(static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST(CrossProduct, TableExamples)
{
  EXPECT_EQ(distance(cross(e(1), e(2)), e(4)), 0.0);
  EXPECT_EQ(distance(cross(e(5), e(6)), e(1)), 0.0);
  EXPECT_EQ(norm(cross(e(3), e(3))), 0.0);
  for (const auto& [s, i, j] : stated_products()) EXPECT_EQ(distance(cross(e(i), e(j)), e(s)), 0.0) << s << i << j;
  EXPECT_EQ(stated_products().size(), 21u);
  EXPECT_TRUE(check_table(standard_table()).ok());
}

TEST(CrossProduct, AlgebraicProperties)
{
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec7 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
    const Vec7 uv = cross(u, v);
    EXPECT_LE(distance(uv, -1.0 * cross(v, u)), 1e-15);
    EXPECT_NEAR(dot(uv, u), 0.0, 1e-14);
    EXPECT_NEAR(dot(uv, v), 0.0, 1e-14);
    EXPECT_NEAR(dot(uv, uv), dot(u, u) * dot(v, v) - dot(u, v) * dot(u, v), 1e-13);
    EXPECT_LE(distance(cross(u + w, v), uv + cross(w, v)), 1e-14);
  }
}

TEST(CrossProduct, MutationIsDetected)
{
  CrossProductTable t = CrossProductTable::standard();
  t.set_product(0, 1, 5);  // e1 x e2 = e5 instead of e4
  const auto c = check_table(t);
  EXPECT_FALSE(c.ok());
  EXPECT_GT(c.stated_mismatches, 0);
  EXPECT_THROW(build_g2_basis(t), NumericError);
}

TEST(LOp, Examples)
{
  EXPECT_EQ(frobenius_norm(L_op(Vec7{})), 0.0);
  EXPECT_EQ(distance(mat_vec(L_op(e(1)), e(2)), e(4)), 0.0);
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec7 u = random_vec(rng), v = random_vec(rng);
    EXPECT_LE(norm(mat_vec(L_op(u), u)), 1e-15);
    EXPECT_LE(anti_hermitian_residual(L_op(u)), 0.0);
    EXPECT_LE(distance(L_op(u + v), L_op(u) + L_op(v)), 1e-15);
  }
  std::vector<Mat> ls;
  for (int s = 1; s <= 7; ++s) ls.push_back(L_op(e(s)));
  EXPECT_EQ(numeric_rank(ls), 7);
}

TEST(Wedge, Examples)
{
  EXPECT_EQ(frobenius_norm(wedge(e(2), e(2))), 0.0);
  EXPECT_EQ(distance(mat_vec(wedge(e(1), e(2)), e(1)), e(2)), 0.0);
  EXPECT_EQ(norm(mat_vec(wedge(e(1), e(2)), e(3))), 0.0);
  Rng rng(3);
  const Vec7 u = random_vec(rng), v = random_vec(rng), w = random_vec(rng);
  EXPECT_LE(distance(mat_vec(wedge(u, v), w), dot(w, u) * v - dot(w, v) * u), 1e-15);
}

TEST(ZOp, Examples)
{
  EXPECT_EQ(distance(mat_vec(Z_op(e(1), e(2)), e(1)), 2.0 * e(2)), 0.0);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Vec7 x = random_vec(rng), y = random_vec(rng);
    x = (1.0 / norm(x)) * x;
    y = y - dot(x, y) * x;
    y = (1.0 / norm(y)) * y;
    const Mat z = Z_op(x, y);
    EXPECT_LE(distance(mat_vec(z, x), 2.0 * y), 1e-14);
    EXPECT_LE(norm(mat_vec(z, cross(x, y))), 1e-14);
    EXPECT_LE(derivation_residual(z), 1e-12);
  }
}

TEST(BracketLL, Identities)
{
  const auto r0 = bracket_LL(e(3), e(3));
  EXPECT_EQ(frobenius_norm(r0.bracket), 0.0);
  EXPECT_EQ(frobenius_norm(r0.g2_component), 0.0);

  const auto r12 = bracket_LL(e(1), e(2));
  EXPECT_LE(r12.commutator_residual, 1e-15);
  EXPECT_LE(distance(r12.l_component, -1.0 * e(4)), 0.0);

  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto r = bracket_LL(random_vec(rng), random_vec(rng));
    ASSERT_LE(r.commutator_residual, 1e-12);
    ASSERT_LE(r.decomposition_residual, 1e-12);
  }
}

TEST(G2Basis, StructureOfSplitting)
{
  const G2Basis& g2 = standard_g2_basis();
  ASSERT_EQ(g2.elements.size(), 14u);
  EXPECT_LE(g2.derivation_residual, 1e-12);
  EXPECT_EQ(numeric_rank(g2.elements), 14);

  std::vector<Mat> all = g2.elements;
  for (int s = 1; s <= 7; ++s) {
    const Mat l = L_op(e(s));
    all.push_back(l);
    for (const auto& b : g2.elements) {
      // g2 is orthogonal to L and acts on it by [Z, L_u] = L_{Z(u)}.
      EXPECT_NEAR(re_trace_inner(b, l), 0.0, 1e-14);
      EXPECT_LE(distance(bracket(b, l), L_op(mat_vec(b, e(s)))), 1e-12);
    }
  }
  EXPECT_EQ(numeric_rank(all), 21);

  // Closed under brackets.
  for (std::size_t i = 0; i < g2.elements.size(); ++i)
    for (std::size_t j = i + 1; j < g2.elements.size(); ++j)
      EXPECT_LE(derivation_residual(bracket(g2.elements[i], g2.elements[j])), 1e-12);
}

TEST(SplitO7, Examples)
{
  auto s = split_o7(L_op(e(3)));
  EXPECT_LE(distance(s.y, e(3)), 1e-14);
  EXPECT_LE(frobenius_norm(s.g2_part), 1e-14);

  s = split_o7(standard_g2_basis().elements[4]);
  EXPECT_LE(norm(s.y), 1e-14);

  s = split_o7(bracket(L_op(e(1)), L_op(e(2))));
  EXPECT_LE(distance(s.y, -1.0 * e(4)), 1e-14);
  EXPECT_LE(distance(s.g2_part, Z_op(e(1), e(2))), 1e-14);

  Rng rng(6);
  Mat w(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      w(i, j) = rng.uniform(-1, 1);
      w(j, i) = -w(i, j).w;
    }
  s = split_o7(w);
  EXPECT_LE(s.derivation_residual, 1e-12);
  EXPECT_LE(distance(L_op(s.y) + s.g2_part, w), 1e-14);
  EXPECT_THROW(split_o7(Mat::identity(7)), DomainError);
}

TEST(OctoControllability, RankByPitch)
{
  for (double l : default_lambda_grid()) {
    const auto r = octo_controllability(l);
    if (l == 0.0) {
      EXPECT_EQ(r.report.dim_span, 7);
      EXPECT_EQ(r.bracket_rank, 7);
      EXPECT_FALSE(r.report.observed);
    } else {
      EXPECT_EQ(r.report.dim_span, 28) << l;
      EXPECT_EQ(r.bracket_rank, 28) << l;
      EXPECT_TRUE(r.report.observed);
    }
    EXPECT_TRUE(r.report.consistent());
  }
}

TEST(MotionAlgebra, BracketMatchesAffineCommutator)
{
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const MotionElement p{random_vec(rng), split_o7(L_op(random_vec(rng))).g2_part + L_op(random_vec(rng))};
    const MotionElement q{random_vec(rng), L_op(random_vec(rng))};
    EXPECT_LE(distance(to_affine(motion_bracket(p, q)), bracket(to_affine(p), to_affine(q))), 1e-14);
  }
}

TEST(OctoGeodesic, Basics)
{
  const auto spec = random_octo_spec(1, 0.5);
  EXPECT_LE(distance(octo_geodesic(spec, 0.0), Mat::identity(8)), 0.0);

  OctoGeodesicSpec flat = spec;
  flat.y = Vec7{};
  for (double t : {0.5, 2.5})
    EXPECT_LE(distance(octo_geodesic(flat, t), mat_exp(t * to_affine(octo_lift(flat.x, flat.lambda)))), 1e-12);

  EXPECT_THROW(octo_geodesic({e(1), e(1), 1.0}, 1.0), DomainError);
  EXPECT_THROW(octo_geodesic({e(1), e(2), 0.0}, 1.0), DomainError);
}

TEST(OctoGeodesic, HorizontalUnitSpeedAndInGroup)
{
  for (double l : {1.0, -1.0, 0.5, -0.5})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto spec = random_octo_spec(seed, l);
      const MotionElement v0 = octo_left_log_derivative(spec, 0.0);
      EXPECT_LE(norm(v0 - octo_lift(spec.x, l)), 1e-10);
      for (double t : {0.7, 2.9}) {
        const MotionElement v = octo_left_log_derivative(spec, t);
        EXPECT_LE(octo_horizontality_residual(v, l), 1e-10);
        EXPECT_NEAR(norm(v.a), 1.0, 1e-10);
        EXPECT_LE(octo_group_residual(octo_geodesic(spec, t)), 1e-10);
      }
    }
}

TEST(OctoGeodesic, DerivativeMatchesCentralDifference)
{
  const auto spec = random_octo_spec(3, 0.5);
  const double t = 1.1, h = 1e-5;
  const Mat d = (1.0 / (2 * h)) * (octo_geodesic(spec, t + h) - octo_geodesic(spec, t - h));
  const MotionElement fd = from_affine(inverse(octo_geodesic(spec, t)) * d);
  EXPECT_LE(norm(fd - octo_left_log_derivative(spec, t)), 1e-8);
}

TEST(OctoGeodesic, PositiveVerticalSignHasWrongVelocity)
{
  // exp(tX) exp(+tZ) starts with velocity X + Z = (x, lambda L_x + 2 Z),
  // which leaves the distribution.
  const auto spec = random_octo_spec(4, 1.0);
  const Mat a = to_affine(spec.generator()), b = to_affine(spec.vertical());
  const double h = 1e-6;
  const Mat v = (1.0 / h) * (mat_exp(h * a) * mat_exp(h * b) - Mat::identity(8));
  EXPECT_GT(octo_horizontality_residual(from_affine(v), spec.lambda), 0.5);
}

TEST(OctoGeodesic, ScalingOnlyTheHorizontalVector)
{
  const auto spec = random_octo_spec(5, -0.5);
  const auto times = uniform_times(5.0, 11);
  EXPECT_LE(octo_scaling_residual(spec, 1.7, 1.0, 1.7, times), 1e-9);
  // Scaling both vectors multiplies Z by c^2, so it is not a reparametrization.
  EXPECT_GT(octo_scaling_residual(spec, 1.7, 1.7, 1.7, times), 1e-3);
}

TEST(OctoMomentum, Examples)
{
  const auto m = certify_octo_momentum(e(1), e(2), 1.0);
  EXPECT_DOUBLE_EQ(m.c, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.d, -2.0 / 3.0);
  EXPECT_LE(m.max_residual(), 1e-9);

  const auto m0 = certify_octo_momentum(e(3), Vec7{}, 0.5);
  EXPECT_EQ(m0.c, 0.0);
  EXPECT_LE(m0.max_residual(), 1e-9);

  EXPECT_THROW(certify_octo_momentum(2.0 * e(1), e(2), 1.0), DomainError);
  EXPECT_THROW(certify_octo_momentum(e(1), e(1), 1.0), DomainError);
}

TEST(OctoMomentum, RandomPairs)
{
  for (double l : {1.0, -1.0, 0.5, -0.5})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto spec = random_octo_spec(seed, l);
      const auto m = certify_octo_momentum(spec.x, spec.y, l);
      EXPECT_LE(m.cometric_residual, 1e-9);
      EXPECT_LE(m.ad_x_residual, 1e-9);
      EXPECT_LE(m.ad_z_residual, 1e-9);
      EXPECT_LE(m.g2_annihilation, 1e-9);
      EXPECT_LE(m.hamiltonian_residual, 1e-12);
      EXPECT_LE(m.frame_residual, 1e-14);
    }
}

TEST(OctoMomentum, WrongCoefficientsFail)
{
  const auto spec = random_octo_spec(2, 0.5);
  const double c = 2.0 / (3.0 * 0.5), d = -2.0 * norm(spec.y) / (3.0 * 0.25);
  EXPECT_LE(certify_octo_momentum_with(spec.x, spec.y, 0.5, c, d).ad_x_residual, 1e-9);
  EXPECT_GT(certify_octo_momentum_with(spec.x, spec.y, 0.5, 1.1 * c, d).ad_x_residual, 1e-3);
  EXPECT_GT(certify_octo_momentum_with(spec.x, spec.y, 0.5, c, 0.9 * d).ad_x_residual, 1e-3);
}
