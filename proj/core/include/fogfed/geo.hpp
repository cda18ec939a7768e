// Copyright 2026 The fogfedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>

namespace fogfed {

struct GeoPoint {
  double lat = 0.0;  // degrees in [-90, 90]
  double lon = 0.0;  // degrees in [-180, 180]
};

// Fixed affine maps onto [0, 1]; independent of any dataset so shards agree.
inline double mapped_lat(double lat_deg) { return (lat_deg + 90.0) / 180.0; }
inline double mapped_lon(double lon_deg) { return (lon_deg + 180.0) / 360.0; }

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }

// Central angle between two points on the unit sphere, radians in [0, pi].
inline double central_angle(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = deg2rad(a.lat);
  const double phi2 = deg2rad(b.lat);
  const double dphi = deg2rad(b.lat - a.lat);
  const double dlam = deg2rad(b.lon - a.lon);
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * std::asin(std::min(1.0, std::sqrt(h)));
}

// Squared Euclidean distance in the mapped unit square; used for clustering.
inline double mapped_sq_dist(const GeoPoint& a, const GeoPoint& b) {
  const double dx = mapped_lat(a.lat) - mapped_lat(b.lat);
  const double dy = mapped_lon(a.lon) - mapped_lon(b.lon);
  return dx * dx + dy * dy;
}

}  // namespace fogfed
