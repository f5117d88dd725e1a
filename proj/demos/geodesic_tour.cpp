// Samples a few geodesics and prints how far they travel together with the
// certification residuals.

#include <cstdio>

#include "screwsr/screwsr.hpp"

int main()
{
  using namespace screwsr;

  std::printf("Screw-motion geodesics gamma(t) = exp(tA) exp(-tB)\n\n");
  for (const char* name : {"SU2", "SO3", "Sp1"})
    for (int k : {1, -1, 0}) {
      const ScrewSystem sys{parse_group(name), k, 0.5};
      const auto spec = random_geodesic_spec(sys, 3);
      const auto curve = sample_geodesic(spec, 4.0, 5);
      const auto cert = certify_geodesic(spec, 4.0, 41);
      std::printf("%-22s |gamma(t) - I| at t = 0..4:", sys.describe().c_str());
      for (const auto& g : curve.points) std::printf(" %6.3f", distance(g, Mat::identity(g.rows(), g.field())));
      std::printf("   horizontality %.1e, speed %.1e\n", cert.horizontality, cert.speed_deviation);
    }

  std::printf("\nOctonionic system on R^7 x| SO(7)\n\n");
  for (double lambda : {1.0, -0.5}) {
    const auto spec = random_octo_spec(5, lambda);
    const auto m = certify_octo_momentum(spec.x, spec.y, lambda);
    std::printf("lambda = %4.1f  c = %8.5f  d = %8.5f  max momentum residual %.1e\n", lambda, m.c, m.d,
                m.max_residual());
    for (double t : {0.0, 1.0, 2.0, 3.0}) {
      const auto v = octo_left_log_derivative(spec, t);
      std::printf("   t = %.1f  |translation speed| = %.12f  horizontality %.1e\n", t, norm(v.a),
                  octo_horizontality_residual(v, lambda));
    }
  }
}
