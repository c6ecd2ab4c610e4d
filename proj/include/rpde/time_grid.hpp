#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rpde {

/// Strictly increasing time grid on [0, T] with t[0] = 0.
class TimeGrid {
public:
    TimeGrid() = default;
    explicit TimeGrid(std::vector<double> times);

    /// Uniform grid with n_points points on [0, T].
    static TimeGrid uniform(double T, std::size_t n_points);
    /// Dyadic grid with 2^level + 1 points on [0, T].
    static TimeGrid dyadic(double T, int level);

    std::size_t size() const { return t_.size(); }
    double operator[](std::size_t i) const { return t_[i]; }
    double T() const { return t_.back(); }
    std::span<const double> times() const { return t_; }

    bool operator==(const TimeGrid& other) const { return t_ == other.t_; }

    /// Index of a grid time equal to t (within tol), or throws.
    std::size_t index_of(double t, double tol = 1e-12) const;

private:
    std::vector<double> t_;
};

}  // namespace rpde
