#include "fwis/time_grid.hpp"

#include <cmath>
#include <sstream>

namespace fwis {

TimeGrid TimeGrid::regular(double horizon, int n_steps) {
  if (!(horizon > 0.0) || n_steps < 1)
    throw GridError("TimeGrid: horizon must be > 0 and n_steps >= 1");
  TimeGrid g;
  g.uniform = true;
  g.dt = horizon / n_steps;
  g.times.resize(static_cast<std::size_t>(n_steps) + 1);
  for (int k = 0; k <= n_steps; ++k) g.times[k] = k * g.dt;
  g.times.back() = horizon;
  return g;
}

TimeGrid TimeGrid::from_times(std::vector<double> ts) {
  if (ts.empty() || ts.front() != 0.0)
    throw GridError("TimeGrid: times must start at 0");
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(ts[i] > ts[i - 1]))
      throw GridError("TimeGrid: times must be strictly increasing");
  }
  if (!std::isfinite(ts.back()))
    throw GridError("TimeGrid: horizon must be finite");
  TimeGrid g;
  g.times = std::move(ts);
  g.uniform = false;
  if (g.times.size() >= 2) {
    double d0 = g.times[1] - g.times[0];
    bool uni = true;
    for (std::size_t i = 1; i + 1 < g.times.size(); ++i) {
      if (std::abs((g.times[i + 1] - g.times[i]) - d0) > 1e-12 * (1.0 + d0))
        uni = false;
    }
    g.uniform = uni;
    g.dt = uni ? d0 : 0.0;
  }
  return g;
}

int TimeGrid::index_of(double t) const {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] == t) return static_cast<int>(i);
  }
  std::ostringstream os;
  os << "TimeGrid: time " << t << " is not a grid point";
  throw GridError(os.str());
}

}  // namespace fwis
