#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rpde/time_grid.hpp"

namespace rpde {

/// Path on a time grid with values in R^K (one K-vector per grid time).
class Path1 {
public:
    Path1() = default;
    Path1(TimeGrid grid, std::size_t K);
    Path1(TimeGrid grid, std::size_t K, std::vector<double> data);

    const TimeGrid& grid() const { return grid_; }
    std::size_t K() const { return K_; }

    std::span<double> value(std::size_t i) { return {data_.data() + i * K_, K_}; }
    std::span<const double> value(std::size_t i) const { return {data_.data() + i * K_, K_}; }
    double& at(std::size_t i, std::size_t k) { return data_[i * K_ + k]; }
    double at(std::size_t i, std::size_t k) const { return data_[i * K_ + k]; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

private:
    TimeGrid grid_;
    std::size_t K_ = 0;
    std::vector<double> data_;
};

}  // namespace rpde
