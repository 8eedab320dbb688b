#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pue/propagation.hpp"
#include "pue/topology.hpp"

namespace pue {

/// What one CR sends to the FC: its RSS and who it can hear.
struct SensingReport {
  std::size_t cr_index = 0;
  double received_power_dbm = 0.0;
  std::vector<std::size_t> neighbor_indices;  // sorted, includes cr_index
};

/// Symmetric binary N x N adjacency with ones on the diagonal.
class NeighborMatrix {
 public:
  explicit NeighborMatrix(std::size_t n);

  static NeighborMatrix from_reports(std::span<const SensingReport> reports);

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  /// Sets a_ij and a_ji together.
  void link(std::size_t i, std::size_t j);
  std::size_t row_count(std::size_t i) const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

struct GroupLoss {
  std::size_t leader = 0;
  double avg_loss_db = 0.0;
};

struct GroupEstimate {
  std::size_t leader = 0;
  double avg_loss_db = 0.0;
  double est_distance_m = 0.0;
  std::size_t member_count = 1;
};

/// RSS at every CR for a transmitter at `transmitter` radiating `p_t_dbm`.
/// One independent shadowing draw per CR, in CR order.
/// Throws DomainError if a CR sits on the transmitter.
std::vector<double> measure_all(const Topology& topology, Point2D transmitter, double p_t_dbm,
                                const LogShadowModel& model, Rng& rng);

/// a_ij = 1 iff |cr_i - cr_j| <= r_neighbor (and always on the diagonal).
NeighborMatrix build_neighbor_matrix(const Topology& topology, double r_neighbor);

std::vector<SensingReport> make_reports(const NeighborMatrix& matrix,
                                        std::span<const double> measurements_dbm);

/// L_i* = assumed_p_t - mean{P_r,k : a_ik = 1}, mean taken over dBm values.
/// Throws DimensionError on a size mismatch.
std::vector<GroupLoss> group_average_loss(const NeighborMatrix& matrix,
                                          std::span<const double> measurements_dbm,
                                          double assumed_p_t_dbm);

/// Inverts each group loss through the FC's model. Member counts are left
/// at 1; use the matrix overload to fill them.
std::vector<GroupEstimate> estimate_group_distances(std::span<const GroupLoss> losses,
                                                    const LogShadowModel& model_est);
std::vector<GroupEstimate> estimate_group_distances(std::span<const GroupLoss> losses,
                                                    const LogShadowModel& model_est,
                                                    const NeighborMatrix& matrix);

}  // namespace pue
