#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "fwis/errors.hpp"

namespace fwis {

// Discrete time grid on [0, T].  times[0] == 0 and times are strictly
// increasing; `uniform` grids additionally carry their step.
struct TimeGrid {
  std::vector<double> times;
  bool uniform = false;
  double dt = 0.0;

  static TimeGrid regular(double horizon, int n_steps);
  static TimeGrid from_times(std::vector<double> ts);

  int size() const { return static_cast<int>(times.size()); }
  double horizon() const { return times.back(); }
  int index_of(double t) const;  // exact match required
};

// One trajectory of matrices on a grid: one value per grid point,
// constant shape along the path.
struct MatrixPath {
  TimeGrid grid;
  int rows = 0;
  int cols = 0;
  bool symmetric = false;
  std::vector<Eigen::MatrixXd> values;
  std::uint64_t path_id = 0;
  std::uint64_t seed = 0;  // master seed the path's stream descends from

  const Eigen::MatrixXd& at_time(double t) const {
    return values[static_cast<std::size_t>(grid.index_of(t))];
  }
};

}  // namespace fwis
