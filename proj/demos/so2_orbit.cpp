// Tabulates the SO(2, C) orbit of eps I through the Moebius action as CSV:
// closed form, matrix route and their difference on an (s, t) grid.

#include <cstdio>
#include <numbers>

#include "screwsr/screwsr.hpp"

int main()
{
  using namespace screwsr;
  std::printf("eps,s,t,closed_re,closed_im,matrix_re,matrix_im,discrepancy\n");
  for (int eps : {1, -1})
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        const double s = -std::numbers::pi + 2.0 * std::numbers::pi * i / 8.0;
        const double t = -2.0 + 4.0 * j / 8.0;
        const auto p = so2_orbit(s, t, eps);
        std::printf("%d,%.6f,%.6f,%.12f,%.12f,%.12f,%.12f,%.3e\n", eps, s, t, p.closed_form.real(),
                    p.closed_form.imag(), p.matrix_route.real(), p.matrix_route.imag(), p.discrepancy());
      }
}
