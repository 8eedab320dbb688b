#include "pue/sensing.hpp"

#include <string>

#include "pue/error.hpp"

namespace pue {

NeighborMatrix::NeighborMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {
  for (std::size_t i = 0; i < n_; ++i) cells_[i * n_ + i] = 1;
}

NeighborMatrix NeighborMatrix::from_reports(std::span<const SensingReport> reports) {
  NeighborMatrix m(reports.size());
  for (const auto& r : reports) {
    if (r.cr_index >= m.n_) throw DimensionError("neighbor report index out of range");
    for (std::size_t j : r.neighbor_indices) {
      if (j >= m.n_) throw DimensionError("neighbor index out of range");
      m.link(r.cr_index, j);
    }
  }
  return m;
}

void NeighborMatrix::link(std::size_t i, std::size_t j) {
  cells_[i * n_ + j] = 1;
  cells_[j * n_ + i] = 1;
}

std::size_t NeighborMatrix::row_count(std::size_t i) const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n_; ++j) count += cells_[i * n_ + j];
  return count;
}

std::vector<double> measure_all(const Topology& topology, Point2D transmitter, double p_t_dbm,
                                const LogShadowModel& model, Rng& rng) {
  std::vector<double> rss;
  rss.reserve(topology.crs.size());
  for (std::size_t i = 0; i < topology.crs.size(); ++i) {
    const double d = distance(topology.crs[i], transmitter);
    if (!(d > 0.0))
      throw DomainError("measure_all: CR " + std::to_string(i) + " coincides with the transmitter");
    rss.push_back(p_t_dbm - lognormal_path_loss(d, model, rng));
  }
  return rss;
}

NeighborMatrix build_neighbor_matrix(const Topology& topology, double r_neighbor) {
  if (!(r_neighbor >= 0.0)) throw DimensionError("r_neighbor must be non-negative");
  const std::size_t n = topology.crs.size();
  NeighborMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (distance(topology.crs[i], topology.crs[j]) <= r_neighbor) m.link(i, j);
  return m;
}

std::vector<SensingReport> make_reports(const NeighborMatrix& matrix,
                                        std::span<const double> measurements_dbm) {
  if (matrix.size() != measurements_dbm.size())
    throw DimensionError("make_reports: matrix and measurement sizes differ");
  std::vector<SensingReport> reports(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    reports[i].cr_index = i;
    reports[i].received_power_dbm = measurements_dbm[i];
    for (std::size_t j = 0; j < matrix.size(); ++j)
      if (matrix.at(i, j)) reports[i].neighbor_indices.push_back(j);
  }
  return reports;
}

std::vector<GroupLoss> group_average_loss(const NeighborMatrix& matrix,
                                          std::span<const double> measurements_dbm,
                                          double assumed_p_t_dbm) {
  const std::size_t n = matrix.size();
  if (n != measurements_dbm.size())
    throw DimensionError("group_average_loss: matrix is " + std::to_string(n) + "x" +
                         std::to_string(n) + " but got " +
                         std::to_string(measurements_dbm.size()) + " measurements");
  std::vector<GroupLoss> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!matrix.at(i, k)) continue;
      sum += measurements_dbm[k];
      ++count;
    }
    out.push_back({i, assumed_p_t_dbm - sum / static_cast<double>(count)});
  }
  return out;
}

std::vector<GroupEstimate> estimate_group_distances(std::span<const GroupLoss> losses,
                                                    const LogShadowModel& model_est) {
  if (!(model_est.gamma_coeff > 0.0))
    throw DomainError("estimate_group_distances: gamma_coeff must be positive");
  std::vector<GroupEstimate> out;
  out.reserve(losses.size());
  for (const auto& g : losses)
    out.push_back({g.leader, g.avg_loss_db,
                   estimated_distance_under_error(g.avg_loss_db, model_est), 1});
  return out;
}

std::vector<GroupEstimate> estimate_group_distances(std::span<const GroupLoss> losses,
                                                    const LogShadowModel& model_est,
                                                    const NeighborMatrix& matrix) {
  auto out = estimate_group_distances(losses, model_est);
  for (auto& e : out) {
    if (e.leader >= matrix.size()) throw DimensionError("group leader outside neighbor matrix");
    e.member_count = matrix.row_count(e.leader);
  }
  return out;
}

}  // namespace pue
