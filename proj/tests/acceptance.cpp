// Acceptance criteria 1-9: one PASS/FAIL line each, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <string>

#include "screwsr/screwsr.hpp"

using namespace screwsr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool pass, const std::string& detail)
{
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool expected_controllable(int k, double l) { return !((k == 1 && std::abs(l) == 1.0) || (k == 0 && l == 0.0)); }

void criterion_1()
{
  const auto t0 = Clock::now();
  int cases = 0, mismatches = 0;
  for (const auto& id : test_groups())
    for (int k : {1, -1, 0})
      for (double l : default_lambda_grid()) {
        ++cases;
        const auto r = bracket_generating_rank(ScrewSystem{id, k, l});
        const bool full = r.dim_span == r.dim_g;
        if (full != expected_controllable(k, l)) ++mismatches;
      }
  const double s = seconds_since(t0);
  report(1, cases == 162 && mismatches == 0 && s < 10.0,
         std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches, " + fmt("%.2f s", s));
}

void criterion_2()
{
  int cases = 0, mismatches = 0;
  for (const auto& id : test_groups())
    for (int k : {1, -1, 0})
      for (double l : default_lambda_grid()) {
        ++cases;
        if ((g_degeneracy_ratio(ScrewSystem{id, k, l}) < 1e-9) != (l * l == k)) ++mismatches;
      }
  report(2, mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches");
}

void criterion_3()
{
  double horizontal = 0.0, speed = 0.0;
  int triples = 0, commuting_missed = 0, noncommuting_missed = 0;
  for (const auto& id : test_groups())
    for (int k : {1, -1, 0})
      for (double l : default_lambda_grid()) {
        const ScrewSystem sys{id, k, l};
        if (sys.on_degenerate_locus()) continue;
        ++triples;
        for (std::uint64_t s = 1; s <= 100; ++s) {
          const auto c = certify_geodesic(random_geodesic_spec(sys, s), 5.0, 101);
          horizontal = std::max(horizontal, c.horizontality);
          speed = std::max(speed, c.speed_deviation);
          if (c.bracket_norm > 1e-12 && c.subgroup_deviation <= 1e-10) ++noncommuting_missed;
        }
        auto spec = random_geodesic_spec(sys, 4242);
        spec.Y = 0.6 * spec.X;
        const auto c = certify_geodesic(spec, 5.0, 101);
        if (!(c.bracket_norm <= 1e-12 && c.subgroup_deviation <= 1e-10)) ++commuting_missed;
      }
  report(3, horizontal <= 1e-9 && speed <= 1e-9 && commuting_missed == 0 && noncommuting_missed == 0,
         std::to_string(triples) + " triples x 100 pairs; horizontality " + fmt("%.2e", horizontal) + ", speed " +
             fmt("%.2e", speed) + "; degeneration missed " + std::to_string(commuting_missed) + " (commuting) / " +
             std::to_string(noncommuting_missed) + " (non-commuting)");
}

void criterion_4()
{
  const auto tab = standard_table();
  const auto table = check_table(tab);
  Rng rng(4);
  double ll = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Vec7 u, v;
    for (auto& x : u) x = rng.uniform(-1, 1);
    for (auto& x : v) x = rng.uniform(-1, 1);
    ll = std::max(ll, bracket_LL(u, v, tab).commutator_residual);
  }
  const G2Basis g2 = build_g2_basis(tab);
  std::vector<Mat> o7;
  for (std::size_t i = 0; i < 7; ++i) o7.push_back(L_op(unit7(i), tab));
  o7.insert(o7.end(), g2.elements.begin(), g2.elements.end());
  const int rank = numeric_rank(o7);
  const bool products_exact = table.ok() && stated_products().size() == 21;
  report(4, products_exact && ll <= 1e-12 && g2.elements.size() == 14 && rank == 21,
         std::to_string(stated_products().size()) + " products, " + std::to_string(table.stated_mismatches) +
             " wrong; [L,L] residual " + fmt("%.2e", ll) + "; dim g2 = " + std::to_string(g2.elements.size()) +
             "; rank L + g2 = " + std::to_string(rank));
}

void criterion_5()
{
  std::string ranks;
  bool ok = true;
  for (double l : default_lambda_grid()) {
    const int r = octo_controllability(l).report.dim_span;
    ok = ok && r == (l == 0.0 ? 7 : 28);
    ranks += (ranks.empty() ? "" : " ") + std::to_string(r);
  }
  report(5, ok, "ranks over the grid: " + ranks);
}

void criterion_6()
{
  double momentum = 0.0, velocity = 0.0, scaling_xy = 0.0, scaling_x = 0.0;
  const auto times = uniform_times(3.0, 31);
  const double c = 1.7;
  for (double l : {1.0, -1.0, 0.5, -0.5})
    for (std::uint64_t s = 1; s <= 50; ++s) {
      const auto spec = random_octo_spec(s, l);
      momentum = std::max(momentum, certify_octo_momentum(spec.x, spec.y, l).max_residual());
      velocity = std::max(velocity, norm(octo_left_log_derivative(spec, 0.0) - octo_lift(spec.x, l)));
      scaling_xy = std::max(scaling_xy, octo_scaling_residual(spec, c, c, c, times));
      scaling_x = std::max(scaling_x, octo_scaling_residual(spec, c, 1.0, c, times));
    }
  report(6, momentum <= 1e-9 && velocity <= 1e-10 && scaling_xy <= 1e-9,
         "momentum " + fmt("%.2e", momentum) + ", initial velocity " + fmt("%.2e", velocity) +
             ", gamma_{cx,cy}(t) vs gamma(ct) " + fmt("%.2e", scaling_xy) + " (gamma_{cx,y}(t) vs gamma(ct) " +
             fmt("%.2e", scaling_x) + ")");
}

void criterion_7()
{
  Rng rng(7);
  double isotropy = 0.0, closure = 0.0, law = 0.0, psi = 0.0, orbit = 0.0;
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (std::size_t n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 100; ++trial) {
        const Mat x = random_split_unitary(n, f, rng), y = random_split_unitary(n, f, rng);
        const Mat a = random_unitary(n, f, rng);
        isotropy = std::max(isotropy, graph_subspace(a).isotropy_residual);
        const Mat ya = mobius_act(y, a);
        closure = std::max(closure, unitarity_residual(ya));
        law = std::max(law, distance(mobius_act(x * y, a), mobius_act(x, ya)));
        const Mat p = random_uj(n, f, rng), q = random_uj(n, f, rng);
        psi = std::max(psi, (psi_map(p * q) - psi_map(p) * psi_map(q)).norm());
      }
  for (int eps : {1, -1})
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j)
        orbit = std::max(orbit, so2_orbit(-std::numbers::pi + 2.0 * std::numbers::pi * i / 20.0,
                                          -2.0 + 4.0 * j / 20.0, eps)
                                    .discrepancy());
  report(7, isotropy <= 1e-10 && closure <= 1e-9 && law <= 1e-9 && psi <= 1e-9 && orbit <= 1e-9,
         "isotropy " + fmt("%.2e", isotropy) + ", closure " + fmt("%.2e", closure) + ", action law " +
             fmt("%.2e", law) + ", psi " + fmt("%.2e", psi) + ", SO(2) grid " + fmt("%.2e", orbit));
}

void criterion_8()
{
  Rng rng(8);
  double velocity = 0.0, relative = 0.0, absolute = 0.0;
  int runs = 0;
  for (int kappa : {1, -1, 0})
    for (double l : default_lambda_grid()) {
      if (!space_form_condition(kappa, l)) continue;
      for (int trial = 0; trial < 5; ++trial) {
        Vec3 x, y;
        for (auto& v : x) v = rng.uniform(-1, 1);
        for (auto& v : y) v = rng.uniform(-1, 1);
        const auto c = space_form_cross_model(kappa, l, x, y, 5.0, 101);
        velocity = std::max(velocity, c.velocity);
        relative = std::max(relative, c.adjoint_relative);
        absolute = std::max(absolute, c.adjoint_absolute);
        ++runs;
      }
    }
  report(8, velocity <= 1e-8 && relative <= 1e-8,
         std::to_string(runs) + " curves on [0,5]; velocity " + fmt("%.2e", velocity) + ", Ad relative " +
             fmt("%.2e", relative) + " (Ad absolute " + fmt("%.2e", absolute) + ")");
}

void criterion_9()
{
  const auto s = run_verify_all();
  report(9, s.ok() && s.seconds < 60.0,
         std::to_string(s.passed()) + " passed, " + std::to_string(s.failed()) + " failed, " + fmt("%.1f s", s.seconds));
}

}  // namespace

int main()
{
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
