#include "rpde/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rpde {

TimeGrid::TimeGrid(std::vector<double> times) : t_(std::move(times)) {
    if (t_.size() < 2) throw std::invalid_argument("TimeGrid: need at least 2 points");
    if (t_.front() != 0.0) throw std::invalid_argument("TimeGrid: t[0] must be 0");
    for (std::size_t i = 1; i < t_.size(); ++i)
        if (!(t_[i] > t_[i - 1])) throw std::invalid_argument("TimeGrid: times must be strictly increasing");
    if (!(t_.back() > 0.0)) throw std::invalid_argument("TimeGrid: T must be positive");
}

TimeGrid TimeGrid::uniform(double T, std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("TimeGrid::uniform: need at least 2 points");
    std::vector<double> t(n_points);
    for (std::size_t i = 0; i < n_points; ++i) t[i] = T * double(i) / double(n_points - 1);
    t.back() = T;
    return TimeGrid(std::move(t));
}

TimeGrid TimeGrid::dyadic(double T, int level) {
    if (level < 0) throw std::invalid_argument("TimeGrid::dyadic: level must be >= 0");
    return uniform(T, (std::size_t(1) << level) + 1);
}

std::size_t TimeGrid::index_of(double t, double tol) const {
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (std::abs(t_[i] - t) <= tol * std::max(1.0, T())) return i;
    throw std::invalid_argument("TimeGrid::index_of: time not on grid");
}

}  // namespace rpde
