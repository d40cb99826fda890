#include "qlat/tolerances.hpp"

#include <stdexcept>

namespace qlat {

namespace {
double g_geo_eps = 1e-6;
}

double geo_eps() { return g_geo_eps; }

void set_geo_eps(double eps) {
  if (!(eps > 0.0) || eps > 1e-2)
    throw std::invalid_argument("geo_eps must be in (0, 1e-2]");
  g_geo_eps = eps;
}

}  // namespace qlat
