#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the pipeline: nearest-centroid
// assignment over unit-sphere chords and streaming sum/moment reductions.
//
// Every kernel exists as a scalar reference and, on x86-64, an AVX2 variant.
// The scalar reference accumulates in four independent lanes and combines
// them in the same fixed order as the vector code, so the two variants are
// bit-identical for all inputs (FMA contraction is disabled project-wide).
// Dispatch picks a variant once per process; GEOMOB_KERNELS=scalar|avx2|auto
// overrides the choice.

namespace geomob::kernels {

struct PairMoments {
  double sum_x = 0.0;
  double sum_y = 0.0;
  double sum_xx = 0.0;
  double sum_yy = 0.0;
  double sum_xy = 0.0;
};

namespace scalar {

/// For each point i, writes the index of the centroid with the smallest
/// squared chord distance among those with distance <= chord_sq_limit,
/// or -1 if none qualifies. Ties keep the lowest centroid index.
void assign_nearest(const double* px, const double* py, const double* pz,
                    std::size_t n_points, const double* cx, const double* cy,
                    const double* cz, std::size_t n_centroids,
                    double chord_sq_limit, std::int32_t* out);

double sum(const double* x, std::size_t n);

PairMoments pair_moments(const double* x, const double* y, std::size_t n);

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GEOMOB_HAVE_AVX2_KERNELS 1
namespace avx2 {

void assign_nearest(const double* px, const double* py, const double* pz,
                    std::size_t n_points, const double* cx, const double* cy,
                    const double* cz, std::size_t n_centroids,
                    double chord_sq_limit, std::int32_t* out);

double sum(const double* x, std::size_t n);

PairMoments pair_moments(const double* x, const double* y, std::size_t n);

}  // namespace avx2
#endif

enum class Variant { scalar, avx2 };

/// Variant selected for this process (CPU features + GEOMOB_KERNELS).
Variant active_variant();

const char* variant_name(Variant v);

// Dispatched frontends.
void assign_nearest(const double* px, const double* py, const double* pz,
                    std::size_t n_points, const double* cx, const double* cy,
                    const double* cz, std::size_t n_centroids,
                    double chord_sq_limit, std::int32_t* out);

double sum(const double* x, std::size_t n);

PairMoments pair_moments(const double* x, const double* y, std::size_t n);

}  // namespace geomob::kernels
