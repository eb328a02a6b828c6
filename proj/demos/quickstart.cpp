// Frame and x-y partner of the example cone curve at a few parameter values.

#include <cstdio>

#include "conecurve/conecurve.hpp"

using namespace conecurve;

int main() {
  const CurveSource curve = CurveSource::example1();
  const SmarandacheSpec spec{Kind::XY, 1.0, 2.0, 1.0};
  std::printf("%6s %12s %12s %12s %12s\n", "s", "kappa", "<x,x>", "kappa_g", "sigma");
  for (double s : uniform_grid(-2.0, 2.0, 9)) {
    const FrameJet fj = frame_jet_at(curve.jet(s));
    std::printf("%6.2f %12.8f %12.3e", s, fj.frame.kappa, quadrance(fj.frame.x));
    if (admissible(spec, fj)) {
      const PartnerSample p = partner_frame_oracle(spec, fj);
      std::printf(" %12.8f %12.8f\n", p.kappa_g, p.sigma);
    } else {
      std::printf(" %12s %12s\n", "-", "-");
    }
  }
  const auto table = arclength_table(spec, curve, 0.0, 1.0, 51);
  std::printf("x-y partner arc length on [0, 1]: %.12f\n", table.total());
}
