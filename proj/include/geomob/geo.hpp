#pragma once

#include <cmath>

namespace geomob {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegToRad = kPi / 180.0;

/// Geographic coordinate in degrees.
struct Coordinate {
  double lat = 0.0;  // [-90, 90]
  double lon = 0.0;  // [-180, 180]

  [[nodiscard]] bool valid() const {
    return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 &&
           lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
  }
};

/// Axis-aligned lon/lat window, closed on all edges. Does not handle boxes
/// spanning the antimeridian.
struct BoundingBox {
  double lon_min = -180.0;
  double lon_max = 180.0;
  double lat_min = -90.0;
  double lat_max = 90.0;

  [[nodiscard]] bool valid() const {
    return std::isfinite(lon_min) && std::isfinite(lon_max) &&
           std::isfinite(lat_min) && std::isfinite(lat_max) &&
           lon_min <= lon_max && lat_min <= lat_max;
  }
};

/// Great-circle distance in km on a sphere of radius 6371 km.
/// Throws InvalidCoordinateError on non-finite or out-of-range input.
double haversine_km(Coordinate a, Coordinate b);

/// True iff p lies within the closed intervals of the box.
bool in_bbox(Coordinate p, const BoundingBox& box);

/// Point on the unit sphere. Squared chord length between two unit vectors
/// is strictly increasing in great-circle distance, so chord comparisons
/// decide nearest-neighbour and radius questions without per-pair trig.
struct UnitVec {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

UnitVec to_unit_vector(Coordinate c);

/// Squared chord length subtended by a great-circle arc of the given length.
double chord_sq_for_km(double distance_km);

}  // namespace geomob
