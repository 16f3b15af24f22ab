// Hexagon leaves of the B2 families for a few mu, printed as CSV on stdout:
// family,mu,start,t,x1,x2

#include <cstdio>

#include "bianchi/dynamics.hpp"

using namespace bianchi;

int main() {
  std::vector<double> ts;
  for (int k = 0; k <= 60; ++k) ts.push_back(k * 0.05);
  const auto starts = hexagon_starts();
  std::printf("family,mu,start,t,x1,x2\n");
  for (const Family f : {Family::B2plus, Family::B2minus})
    for (const double mu : {1.0, 0.25, 1e-6})
      for (std::size_t k = 0; k < starts.size(); ++k) {
        if (f == Family::B2plus && starts[k][0] == 0) continue;
        const Trajectory tr = closed_form_trajectory(f, mu, starts[k], ts);
        for (const auto& s : tr.samples)
          std::printf("%s,%g,%zu,%.12g,%.12g,%.12g\n", to_string(f).c_str(), mu, k, s.t, s.x1, s.x2);
      }
}
