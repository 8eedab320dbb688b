#include "pue/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pue/error.hpp"

namespace pue {

double distance(Point2D a, Point2D b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

Point2D sample_disc(Point2D center, double radius, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double theta = 2.0 * std::numbers::pi * unit(rng);
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

Topology sample_topology(std::size_t n_crs, double r_crn, double field_side, Rng& rng) {
  if (n_crs < 1) throw DimensionError("sample_topology: need at least one CR");
  if (!(r_crn > 0.0) || !std::isfinite(r_crn))
    throw DimensionError("sample_topology: r_crn must be positive, got " + std::to_string(r_crn));
  if (!(field_side >= 2.0 * r_crn) || !std::isfinite(field_side))
    throw DimensionError("sample_topology: field_side must be at least 2 * r_crn");

  std::uniform_real_distribution<double> along(0.0, field_side);
  Topology t;
  t.r_crn = r_crn;
  t.field_side = field_side;
  t.fc = {along(rng), along(rng)};
  t.pu = {along(rng), along(rng)};
  t.attacker = sample_disc(t.fc, r_crn, rng);
  t.crs.reserve(n_crs);
  for (std::size_t i = 0; i < n_crs; ++i) t.crs.push_back(sample_disc(t.fc, r_crn, rng));
  return t;
}

Topology move_pu(const Topology& topology, double displacement_scale, Rng& rng) {
  if (!(displacement_scale >= 0.0))
    throw DimensionError("move_pu: displacement_scale must be non-negative");
  Topology moved = topology;
  if (displacement_scale == 0.0) return moved;
  const Point2D p = sample_disc(topology.pu, displacement_scale, rng);
  moved.pu = {std::clamp(p.x, 0.0, topology.field_side), std::clamp(p.y, 0.0, topology.field_side)};
  return moved;
}

}  // namespace pue
