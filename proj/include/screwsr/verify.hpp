#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "screwsr/compact_groups.hpp"
#include "screwsr/controllability.hpp"
#include "screwsr/dual_space.hpp"
#include "screwsr/geodesics.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/octonion.hpp"
#include "screwsr/screw_core.hpp"
#include "screwsr/space_form.hpp"

namespace screwsr {

/// Outcome of one named identity.
struct CheckResult
{
  std::string module;
  std::string name;
  /// Measured residual, or mismatch count for exact checks.
  double value = 0.0;
  double bound = 0.0;
  bool passed = false;
  /// Failed only because the tolerance override is tighter than the default.
  bool tolerance_bound = false;
  std::string detail;
};

struct VerifyOptions
{
  /// Replaces every residual bound when set.
  std::optional<double> tol;
  /// Runs the octonion checks against a table with e_1 x e_2 = e_5.
  bool inject_table_typo = false;
  /// Seeded (X, Y) pairs per admissible (K, k, lambda).
  int geodesic_specs = 100;
  /// Seeded orthogonal (x, y) pairs per lambda for the octonionic checks.
  int octo_specs = 50;
  std::uint64_t seed = 1;
};

struct VerifySummary
{
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  int passed() const
  {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
  }
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool ok() const { return failed() == 0; }
};

/// The six compact groups of the test matrix.
inline const std::vector<CompactGroupId>& test_groups()
{
  static const std::vector<CompactGroupId> g{{Family::SO, 3}, {Family::SO, 4}, {Family::SU, 2},
                                             {Family::SU, 3}, {Family::Sp, 1}, {Family::Sp, 2}};
  return g;
}

/// Table with a single wrong product, for mutation testing.
inline CrossProductTable table_with_typo()
{
  CrossProductTable t = CrossProductTable::standard();
  t.set_product(0, 1, 5);
  return t;
}

namespace detail {

class Recorder
{
public:
  Recorder(VerifySummary& s, const VerifyOptions& o) : summary_(s), opts_(o) {}

  void residual(const std::string& module, const std::string& name, double value, double default_bound,
                std::string detail = {})
  {
    CheckResult c{module, name, value, opts_.tol.value_or(default_bound), false, false, std::move(detail)};
    c.passed = std::isfinite(value) && value <= c.bound;
    c.tolerance_bound = !c.passed && std::isfinite(value) && value <= default_bound;
    summary_.checks.push_back(std::move(c));
  }

  /// Exact check: passes iff `mismatches` is zero.
  void exact(const std::string& module, const std::string& name, int mismatches, std::string detail = {})
  {
    summary_.checks.push_back(
        {module, name, static_cast<double>(mismatches), 0.0, mismatches == 0, false, std::move(detail)});
  }

  /// Runs `fn`; an exception becomes a failed check named after the group.
  void guarded(const std::string& module, const std::string& name, const std::function<void()>& fn)
  {
    try {
      fn();
    } catch (const std::exception& e) {
      summary_.checks.push_back({module, name, NAN, 0.0, false, false, std::string("exception: ") + e.what()});
    }
  }

  const VerifyOptions& options() const { return opts_; }

private:
  VerifySummary& summary_;
  const VerifyOptions& opts_;
};

inline void verify_algebra(Recorder& r)
{
  const std::string m = "algebra";
  r.guarded(m, "kernel", [&] {
    double additivity = 0.0, unitarity = 0.0, embedding = 0.0;
    int rank_mismatch = 0;
    std::uint64_t seed = 100;
    for (const auto& id : test_groups()) {
      const Mat a = random_algebra_element(id, ++seed, 2.0);
      const Mat c = 0.5 * a;
      if (frobenius_norm(bracket(a, c)) <= 1e-14)
        additivity = std::max(additivity, distance(mat_exp(a + c), mat_exp(a) * mat_exp(c)));
      unitarity = std::max(unitarity, unitarity_residual(mat_exp(random_algebra_element(id, ++seed, 3.0))));

      // Same span under an orthogonal change of spanning set.
      const AlgebraBasis basis = algebra_basis(id);
      const std::size_t d = basis.size();
      const Mat q = mat_exp(random_algebra_element({Family::SO, static_cast<int>(d)}, ++seed, 1.0));
      std::vector<Mat> rotated, sub, sub_rotated;
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> coeffs(d);
        for (std::size_t j = 0; j < d; ++j) coeffs[j] = q(i, j).w;
        rotated.push_back(combine(basis, coeffs));
      }
      for (std::size_t i = 0; i < std::min<std::size_t>(d, 3); ++i) {
        sub.push_back(basis.elements[i]);
        sub.push_back(basis.elements[i] + basis.elements[(i + 1) % std::min<std::size_t>(d, 3)]);
      }
      for (std::size_t i = 0; i < sub.size(); ++i) sub_rotated.push_back(sub[i] + sub[(i + 1) % sub.size()]);
      if (numeric_rank(rotated) != numeric_rank(basis.elements)) ++rank_mismatch;
      if (numeric_rank(sub) != numeric_rank(sub_rotated)) ++rank_mismatch;
    }
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Mat p = random_f_matrix(3, Field::Quaternion, rng), q = random_f_matrix(3, Field::Quaternion, rng);
      embedding = std::max(embedding, (embed_complex(p * q) - embed_complex(p) * embed_complex(q)).norm());
    }
    r.residual(m, "exp additivity on commuting arguments", additivity, 1e-10);
    r.residual(m, "exp of anti-Hermitian is unitary", unitarity, 1e-10);
    r.exact(m, "numeric_rank invariant under change of spanning set", rank_mismatch);
    r.residual(m, "quaternion embedding is multiplicative", embedding, 1e-13);
  });
}

inline void verify_compact_groups(Recorder& r)
{
  const std::string m = "compactgroups";
  r.guarded(m, "structure", [&] {
    double invariance = 0.0;
    int derived_mismatch = 0;
    for (const auto& id : test_groups()) {
      const auto& e = algebra_basis(id).elements;
      std::vector<Mat> brackets;
      for (const auto& x : e)
        for (const auto& y : e) {
          const Mat xy = bracket(x, y);
          brackets.push_back(xy);
          for (const auto& z : e)
            invariance = std::max(invariance, std::abs(re_trace_inner(xy, z) - re_trace_inner(x, bracket(y, z))));
        }
      if (numeric_rank(brackets) != id.dim()) ++derived_mismatch;
    }
    r.residual(m, "ad-invariance <[x,y],z> = <x,[y,z]>", invariance, 1e-10);
    r.exact(m, "[k,k] = k", derived_mismatch);
  });
}

inline void verify_screw_core(Recorder& r)
{
  const std::string m = "screwcore";
  r.guarded(m, "brackets", [&] {
    double jacobi = 0.0, self = 0.0, block = 0.0, hom = 0.0, lcomm = 0.0, lequi = 0.0;
    std::uint64_t seed = 200;
    for (const auto& id : test_groups())
      for (int k : {1, -1, 0}) {
        auto rnd = [&] {
          return KkElement{random_algebra_element(id, ++seed), random_algebra_element(id, ++seed), k};
        };
        for (int trial = 0; trial < 3; ++trial) {
          const KkElement a = rnd(), b = rnd(), c = rnd();
          jacobi = std::max(jacobi, frobenius_norm(kk_bracket(a, kk_bracket(b, c)) + kk_bracket(b, kk_bracket(c, a)) +
                                                   kk_bracket(c, kk_bracket(a, b))));
          block = std::max(block, distance(bracket(to_block(a), to_block(b)), to_block(kk_bracket(a, b))));
          hom = std::max(hom, t_k_homomorphism_residual(a, b));
          const Mat zero(a.x.rows(), a.x.cols(), a.x.field());
          self = std::max(self, frobenius_norm(kk_bracket({a.x, zero, k}, {zero, a.x, k})));
        }
        const auto li = verify_L_identities({id, k, 0.5}, 5, seed);
        lcomm = std::max(lcomm, li.commutator_residual);
        lequi = std::max(lequi, li.equivariance_residual);
      }
    r.residual(m, "Jacobi identity", jacobi, 1e-10);
    r.residual(m, "[L_X, X] = 0", self, 0.0);
    r.residual(m, "block commutator equals k_k bracket", block, 1e-14);
    r.residual(m, "T_k is a Lie algebra isomorphism", hom, 1e-12);
    r.residual(m, "k [L x, L y] = [x, y]", lcomm, 1e-10);
    r.residual(m, "L is K-equivariant", lequi, 1e-10);
  });
  r.guarded(m, "g spectrum", [&] {
    int wrong = 0;
    std::string bad;
    for (const auto& id : test_groups())
      for (int k : {1, -1, 0})
        for (double l : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
          const ScrewSystem sys{id, k, l};
          const bool nondegenerate = g_degeneracy_ratio(sys) > 1e-6;
          if (nondegenerate != (l * l != k)) {
            ++wrong;
            bad += sys.describe() + "; ";
          }
        }
    r.exact(m, "g nondegenerate exactly off lambda^2 = k", wrong, bad);
  });
}

inline void verify_controllability(Recorder& r)
{
  const std::string m = "controllability";
  r.guarded(m, "matrix", [&] {
    int mismatches = 0, locus_rank = 0, rescale = 0, degeneracy = 0, cases = 0;
    std::string bad;
    for (const auto& id : test_groups())
      for (int k : {1, -1, 0})
        for (double l : default_lambda_grid()) {
          ++cases;
          const ScrewSystem sys{id, k, l};
          const auto rep = bracket_generating_rank(sys);
          const bool expected = !((k == 1 && std::abs(l) == 1.0) || (k == 0 && l == 0.0));
          if (rep.observed != expected || !rep.consistent()) {
            ++mismatches;
            bad += sys.describe() + "; ";
          }
          if (!expected && rep.dim_span != id.dim()) ++locus_rank;
          const double ratio = g_degeneracy_ratio(sys);
          if ((ratio < 1e-9) != (l * l == k)) ++degeneracy;
          auto gens = bracket_generating_set(sys);
          for (auto& g : gens) g *= 3.7;
          if (numeric_rank(gens) != rep.dim_span) ++rescale;
        }
    r.exact(m, "rank(E + [E,E]) = dim g exactly off the locus (" + std::to_string(cases) + " cases)", mismatches,
            bad);
    r.exact(m, "rank = dim k on the locus", locus_rank);
    r.exact(m, "g Gram degenerate iff lambda^2 = k", degeneracy);
    r.exact(m, "rank invariant under rescaling", rescale);
  });
  r.guarded(m, "space forms", [&] {
    int model_mismatch = 0;
    for (int kappa : {1, -1, 0})
      for (double l : default_lambda_grid()) {
        const auto s = space_form_report(kappa, l);
        if (s.report.dim_span != s.kk_model_dim_span || s.report.observed != s.general_predicate) ++model_mismatch;
      }
    r.exact(m, "4x4 space-form rank agrees with the k_k model", model_mismatch);
  });
}

inline void verify_geodesics(Recorder& r)
{
  const std::string m = "geodesics";
  const int specs = r.options().geodesic_specs;
  r.guarded(m, "certification", [&] {
    double horizontal = 0.0, speed = 0.0, closed = 0.0, group = 0.0, commuting_dev = 0.0, criterion = 0.0;
    double reparam = 0.0;
    int triples = 0, missed_noncommuting = 0;
    for (const auto& id : test_groups())
      for (int k : {1, -1, 0})
        for (double l : default_lambda_grid()) {
          const ScrewSystem sys{id, k, l};
          if (sys.on_degenerate_locus()) continue;
          ++triples;
          for (int s = 0; s < specs; ++s) {
            const auto spec = random_geodesic_spec(sys, r.options().seed + static_cast<std::uint64_t>(s));
            const auto c = certify_geodesic(spec);
            horizontal = std::max(horizontal, c.horizontality);
            speed = std::max(speed, c.speed_deviation);
            closed = std::max(closed, c.closed_form_residual);
            group = std::max(group, c.group_residual);
            // Non-commuting pairs must leave the one-parameter subgroup.
            if (c.bracket_norm > 1e-12 && c.subgroup_deviation <= 1e-10) ++missed_noncommuting;
          }
          auto spec = random_geodesic_spec(sys, r.options().seed + 7919);
          spec.Y = -1.7 * spec.X;
          const auto c = certify_geodesic(spec);
          commuting_dev = std::max(commuting_dev, c.bracket_norm <= 1e-12 ? c.subgroup_deviation : INFINITY);
          const auto h = verify_geodesic_criterion(random_geodesic_spec(sys, r.options().seed));
          criterion = std::max(criterion, h.precondition_ok ? std::max({h.orthogonality_residual, h.u_residual,
                                                                        h.z_residual})
                                                            : INFINITY);
          const auto base = random_geodesic_spec(sys, r.options().seed + 31);
          const GeodesicSpec scaled{sys, 1.5 * base.X, 1.5 * base.Y};
          for (double t : {0.7, 2.9})
            reparam = std::max(reparam, distance(geodesic_point(scaled, t), geodesic_point(base, 1.5 * t)));
        }
    const std::string n = std::to_string(specs) + " pairs x " + std::to_string(triples) + " triples";
    r.residual(m, "horizontality", horizontal, 1e-9, n);
    r.residual(m, "constant speed", speed, 1e-9, n);
    r.residual(m, "left log derivative equals Ad(exp tB)(A - B)", closed, 1e-9);
    r.residual(m, "points lie in the model group", group, 1e-9);
    r.residual(m, "commuting pair gives a one-parameter subgroup", commuting_dev, 1e-10);
    r.exact(m, "non-commuting pair leaves the one-parameter subgroup", missed_noncommuting);
    r.residual(m, "normal-geodesic hypotheses (h-orthogonality, splitting)", criterion, 1e-10);
    r.residual(m, "reparametrization gamma_{cX,cY}(t) = gamma(ct)", reparam, 1e-9);
  });
  r.guarded(m, "space forms", [&] {
    double velocity = 0.0, adjoint = 0.0, group = 0.0;
    Rng rng(r.options().seed + 11);
    for (int kappa : {1, -1, 0})
      for (double l : default_lambda_grid()) {
        if (!space_form_condition(kappa, l)) continue;
        Vec3 x, y;
        for (auto& v : x) v = rng.uniform(-1, 1);
        for (auto& v : y) v = rng.uniform(-1, 1);
        const auto c = space_form_cross_model(kappa, l, x, y, 5.0, 51);
        velocity = std::max(velocity, c.velocity);
        adjoint = std::max(adjoint, c.adjoint_relative);
        for (double t : {1.0, 4.0})
          group = std::max(group, space_form_group_residual(kappa, space_form_geodesic(kappa, l, x, y, t)));
      }
    r.residual(m, "4x4 space-form velocity matches the k_k construction", velocity, 1e-8);
    r.residual(m, "4x4 space-form Ad action matches the k_k construction (relative)", adjoint, 1e-8);
    r.residual(m, "space-form geodesics lie in the isometry group", group, 1e-9);
  });
}

inline void verify_octonion(Recorder& r)
{
  const std::string m = "octonion";
  const CrossProductTable tab = r.options().inject_table_typo ? table_with_typo() : standard_table();
  r.guarded(m, "table", [&] {
    const auto c = check_table(tab);
    r.exact(m, "cross product antisymmetry", c.antisymmetry_violations);
    r.exact(m, "cross product cyclicity", c.cyclicity_violations);
    r.exact(m, "stated products", c.stated_mismatches);
  });
  r.guarded(m, "L brackets", [&] {
    Rng rng(r.options().seed + 13);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      Vec7 u, v;
      for (auto& x : u) x = rng.uniform(-1, 1);
      for (auto& x : v) x = rng.uniform(-1, 1);
      worst = std::max(worst, bracket_LL(u, v, tab).commutator_residual);
    }
    r.residual(m, "[L_u, L_v] = 3 u^v - 2 L_{u x v}", worst, 1e-12, "1000 random pairs");
  });
  r.guarded(m, "g2", [&] {
    const G2Basis g2 = build_g2_basis(tab);
    r.exact(m, "dim g2 = 14", static_cast<int>(g2.elements.size()) - 14);
    r.residual(m, "derivation identity on g2", g2.derivation_residual, 1e-12);
    double ad = 0.0;
    for (const auto& b : g2.elements)
      for (std::size_t i = 0; i < 7; ++i) {
        const Vec7 u = unit7(i);
        ad = std::max(ad, distance(bracket(b, L_op(u, tab)), L_op(mat_vec(b, u), tab)));
      }
    r.residual(m, "[b, L_u] = L_{b(u)}", ad, 1e-12);
    std::vector<Mat> all;
    double cross_gram = 0.0;
    for (std::size_t i = 0; i < 7; ++i) all.push_back(L_op(unit7(i), tab));
    for (const auto& b : g2.elements) {
      all.push_back(b);
      for (std::size_t i = 0; i < 7; ++i) cross_gram = std::max(cross_gram, std::abs(re_trace_inner(b, all[i])));
    }
    r.exact(m, "o(7) = L + g2 has rank 21", numeric_rank(all) - 21);
    r.residual(m, "g2 orthogonal to L", cross_gram, 1e-12);
  });
  r.guarded(m, "controllability", [&] {
    int wrong = 0;
    for (double l : default_lambda_grid()) {
      const auto c = octo_controllability(l, tab);
      if (c.report.dim_span != (l == 0.0 ? 7 : 28)) ++wrong;
    }
    r.exact(m, "spanning set rank 28 for lambda != 0, 7 at lambda = 0", wrong);
  });
  r.guarded(m, "geodesics", [&] {
    const G2Basis g2 = build_g2_basis(tab);
    double momentum = 0.0, velocity = 0.0, horizontal = 0.0, scaling = 0.0;
    const auto times = uniform_times(3.0, 7);
    for (double l : {1.0, -1.0, 0.5, -0.5})
      for (int s = 0; s < r.options().octo_specs; ++s) {
        const auto spec = random_octo_spec(r.options().seed + static_cast<std::uint64_t>(s), l);
        momentum = std::max(momentum, certify_octo_momentum(spec.x, spec.y, l, tab, g2).max_residual());
        const MotionElement v0 = octo_left_log_derivative(spec, 0.0, tab);
        velocity = std::max(velocity, norm(v0 - octo_lift(spec.x, l, tab)));
        for (double t : {1.3, 4.1})
          horizontal = std::max(horizontal, octo_horizontality_residual(octo_left_log_derivative(spec, t, tab), l, tab));
        if (s < 5) scaling = std::max(scaling, octo_scaling_residual(spec, 1.7, 1.0, 1.7, times, tab));
      }
    r.residual(m, "momentum conditions with c = 2/(3 lambda), d = -2n/(3 lambda^2)", momentum, 1e-9);
    r.residual(m, "initial velocity (x, lambda L_x)", velocity, 1e-10);
    r.residual(m, "geodesic stays horizontal", horizontal, 1e-9);
    r.residual(m, "reparametrization gamma_{cx,y}(t) = gamma_{x,y}(ct)", scaling, 1e-9);
  });
}

inline void verify_dual_space(Recorder& r)
{
  const std::string m = "dualspace";
  r.guarded(m, "split space", [&] {
    Rng rng(r.options().seed + 17);
    double anti = 0.0, isotropy = 0.0, closure = 0.0, law = 0.0, graph = 0.0, psi = 0.0, stabilizer = 0.0;
    int lost_u_prime = 0, stab_wrong = 0;
    for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
      for (std::size_t n = 1; n <= 3; ++n) {
        const SplitSpace sp{static_cast<int>(n), f};
        const Mat j = sp.complex_structure();
        for (int trial = 0; trial < 100; ++trial) {
          Mat u(2 * n, 1, f), v(2 * n, 1, f);
          const Mat ru = random_f_matrix(2 * n, f, rng), rv = random_f_matrix(2 * n, f, rng);
          for (std::size_t i = 0; i < 2 * n; ++i) {
            u(i, 0) = ru(i, 0);
            v(i, 0) = rv(i, 0);
          }
          anti = std::max(anti, distance(sp.g(j * u, j * v), -1.0 * sp.g(u, v)));

          const Mat x = random_split_unitary(n, f, rng), y = random_split_unitary(n, f, rng);
          const Mat a = random_unitary(n, f, rng);
          isotropy = std::max(isotropy, graph_subspace(a).isotropy_residual);
          const Mat ya = mobius_act(y, a);
          closure = std::max(closure, unitarity_residual(ya));
          law = std::max(law, distance(mobius_act(x * y, a), mobius_act(x, ya)));
          graph = std::max(graph, subspace_distance(x * graph_subspace(a).frame, graph_subspace(mobius_act(x, a)).frame));

          const Mat p = random_uj(n, f, rng), q = random_uj(n, f, rng);
          psi = std::max(psi, (psi_map(p * q) - psi_map(p) * psi_map(q)).norm());

          const Mat small = random_unitary(n, f, rng, 0.4);
          if (u_plus_membership(small).in_u_prime && !u_plus_membership(mobius_act(p, small)).in_u_prime)
            ++lost_u_prime;
        }
        // Stabilizer of V_o: b = 0 with a unitary fixes it; b != 0 moves it.
        const Mat vo = graph_subspace(Mat::identity(n, f)).frame;
        const Mat a = random_unitary(n, f, rng);
        const Mat zero(n, n, f);
        stabilizer = std::max(stabilizer, subspace_distance(block2x2(a, zero, zero, a) * vo, vo));
        const Mat moved = random_uj(n, f, rng);
        if (frobenius_norm(uj_membership(moved).b) > 1e-3 && subspace_distance(moved * vo, vo) < 1e-6) ++stab_wrong;
      }
    r.residual(m, "g(J u, J v) = -g(u, v)", anti, 1e-12);
    r.residual(m, "graphs of unitary maps are isotropic", isotropy, 1e-10);
    r.residual(m, "Moebius action closes on U(n,F)", closure, 1e-9);
    r.residual(m, "Moebius action law (XY).A = X.(Y.A)", law, 1e-9);
    r.residual(m, "Moebius action matches the action on graphs", graph, 1e-9);
    r.residual(m, "psi is a homomorphism", psi, 1e-9);
    r.exact(m, "U^J action preserves U'", lost_u_prime);
    r.residual(m, "b = 0 fixes V_o", stabilizer, 1e-12);
    r.exact(m, "b != 0 moves V_o", stab_wrong);
  });
  r.guarded(m, "SO(2) orbit", [&] {
    double worst = 0.0, psi = 0.0;
    for (int eps : {1, -1})
      for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
          const double s = -std::numbers::pi + 2.0 * std::numbers::pi * i / 20.0;
          const double t = -2.0 + 4.0 * j / 20.0;
          const auto p = so2_orbit(s, t, eps);
          worst = std::max(worst, p.discrepancy());
          psi = std::max(psi, p.psi_residual);
        }
    r.residual(m, "SO(2,C) orbit closed form vs Moebius route", worst, 1e-9, "21 x 21 (s, t) grid, eps = +-1");
    r.residual(m, "psi of the Cartan factors is the complex rotation", psi, 1e-9);
  });
}

}  // namespace detail

/// Runs every module's identity suite.
inline VerifySummary run_verify_all(const VerifyOptions& opts = {})
{
  VerifySummary s;
  const auto t0 = std::chrono::steady_clock::now();
  detail::Recorder r(s, opts);
  detail::verify_algebra(r);
  detail::verify_compact_groups(r);
  detail::verify_screw_core(r);
  detail::verify_controllability(r);
  detail::verify_geodesics(r);
  detail::verify_octonion(r);
  detail::verify_dual_space(r);
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

}  // namespace screwsr
