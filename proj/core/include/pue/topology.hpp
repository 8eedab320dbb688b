#pragma once

#include <cstddef>
#include <vector>

#include "pue/random.hpp"

namespace pue {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Euclidean distance in meters.
double distance(Point2D a, Point2D b) noexcept;

/// The geometric world of one sensing round.
///
/// The fusion center sits at the center of a disc of radius `r_crn` that
/// holds every CR and the attacker. The PU and the FC live in a square field
/// `[0, field_side]^2`.
struct Topology {
  Point2D fc;
  Point2D pu;
  Point2D attacker;
  std::vector<Point2D> crs;
  double r_crn = 0.0;
  double field_side = 0.0;

  std::size_t n_crs() const noexcept { return crs.size(); }
};

/// Draws a uniform point on the disc of `radius` around `center`
/// (inverse-CDF radius, so density is uniform over area).
Point2D sample_disc(Point2D center, double radius, Rng& rng);

/// Samples FC and PU uniformly on the field, then CRs and attacker uniformly
/// on the disc around the FC. Throws DimensionError unless
/// n_crs >= 1, r_crn > 0 and field_side >= 2 * r_crn.
Topology sample_topology(std::size_t n_crs, double r_crn, double field_side, Rng& rng);

/// Returns a copy with the PU displaced by a uniform offset of magnitude at
/// most `displacement_scale`, clamped to the field.
Topology move_pu(const Topology& topology, double displacement_scale, Rng& rng);

}  // namespace pue
