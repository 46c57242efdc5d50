#include "geomob/geo.hpp"

#include <algorithm>

#include "geomob/error.hpp"

namespace geomob {

double haversine_km(Coordinate a, Coordinate b) {
  if (!a.valid() || !b.valid()) {
    throw InvalidCoordinateError("haversine_km: coordinate out of range");
  }
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlam = (b.lon - a.lon) * kDegToRad;

  const double sp = std::sin(dphi * 0.5);
  const double sl = std::sin(dlam * 0.5);
  double h = sp * sp + std::cos(phi1) * std::cos(phi2) * (sl * sl);
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

bool in_bbox(Coordinate p, const BoundingBox& box) {
  return p.lon >= box.lon_min && p.lon <= box.lon_max &&
         p.lat >= box.lat_min && p.lat <= box.lat_max;
}

UnitVec to_unit_vector(Coordinate c) {
  const double phi = c.lat * kDegToRad;
  const double lam = c.lon * kDegToRad;
  const double cp = std::cos(phi);
  return UnitVec{cp * std::cos(lam), cp * std::sin(lam), std::sin(phi)};
}

double chord_sq_for_km(double distance_km) {
  const double half_angle = distance_km / (2.0 * kEarthRadiusKm);
  const double s = std::sin(half_angle);
  return 4.0 * (s * s);
}

}  // namespace geomob
