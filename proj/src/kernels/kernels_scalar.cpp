#include <limits>

#include "geomob/kernels/kernels.hpp"

// Reference kernels. Loops are written in the exact evaluation order the
// AVX2 variants use: chord terms associate as (dx*dx + dy*dy) + dz*dz, and
// reductions run four interleaved accumulators combined as
// (acc0 + acc1) + (acc2 + acc3) before a serial tail.

namespace geomob::kernels::scalar {

void assign_nearest(const double* px, const double* py, const double* pz,
                    std::size_t n_points, const double* cx, const double* cy,
                    const double* cz, std::size_t n_centroids,
                    double chord_sq_limit, std::int32_t* out) {
  for (std::size_t i = 0; i < n_points; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::int32_t best_index = -1;
    for (std::size_t j = 0; j < n_centroids; ++j) {
      const double dx = px[i] - cx[j];
      const double dy = py[i] - cy[j];
      const double dz = pz[i] - cz[j];
      const double d2 = (dx * dx + dy * dy) + dz * dz;
      if (d2 < best) {
        best = d2;
        best_index = static_cast<std::int32_t>(j);
      }
    }
    out[i] = (best_index >= 0 && best <= chord_sq_limit) ? best_index : -1;
  }
}

double sum(const double* x, std::size_t n) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 += x[i];
    acc1 += x[i + 1];
    acc2 += x[i + 2];
    acc3 += x[i + 3];
  }
  double total = (acc0 + acc1) + (acc2 + acc3);
  for (; i < n; ++i) total += x[i];
  return total;
}

PairMoments pair_moments(const double* x, const double* y, std::size_t n) {
  double sx[4] = {0, 0, 0, 0};
  double sy[4] = {0, 0, 0, 0};
  double sxx[4] = {0, 0, 0, 0};
  double syy[4] = {0, 0, 0, 0};
  double sxy[4] = {0, 0, 0, 0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int k = 0; k < 4; ++k) {
      const double xv = x[i + k];
      const double yv = y[i + k];
      sx[k] += xv;
      sy[k] += yv;
      sxx[k] += xv * xv;
      syy[k] += yv * yv;
      sxy[k] += xv * yv;
    }
  }
  PairMoments m;
  m.sum_x = (sx[0] + sx[1]) + (sx[2] + sx[3]);
  m.sum_y = (sy[0] + sy[1]) + (sy[2] + sy[3]);
  m.sum_xx = (sxx[0] + sxx[1]) + (sxx[2] + sxx[3]);
  m.sum_yy = (syy[0] + syy[1]) + (syy[2] + syy[3]);
  m.sum_xy = (sxy[0] + sxy[1]) + (sxy[2] + sxy[3]);
  for (; i < n; ++i) {
    const double xv = x[i];
    const double yv = y[i];
    m.sum_x += xv;
    m.sum_y += yv;
    m.sum_xx += xv * xv;
    m.sum_yy += yv * yv;
    m.sum_xy += xv * yv;
  }
  return m;
}

}  // namespace geomob::kernels::scalar
