#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rpde/path.hpp"
#include "rpde/time_grid.hpp"

namespace rpde {

/// 2-index map g_{st} on the simplex of a time grid, with values in R^dim
/// (dim = 1 for scalars, K for vectors, K*K for row-major tensors).
/// Diagonal entries g_tt are identically zero.
class TwoIndexMap {
public:
    TwoIndexMap() = default;
    TwoIndexMap(TimeGrid grid, std::size_t dim);

    const TimeGrid& grid() const { return grid_; }
    std::size_t dim() const { return dim_; }
    std::size_t n() const { return grid_.size(); }

    std::span<double> at(std::size_t i, std::size_t j) {
        return {data_.data() + pair_index(i, j) * dim_, dim_};
    }
    std::span<const double> at(std::size_t i, std::size_t j) const {
        return {data_.data() + pair_index(i, j) * dim_, dim_};
    }

    /// Linear index of the ordered pair (i <= j).
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * n() - i * (i - 1) / 2 + (j - i);
    }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

private:
    TimeGrid grid_;
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// Increments of a path: out_{st} = p_t - p_s.
TwoIndexMap delta1(const Path1& p);

/// delta of a 2-index map evaluated at one triple s <= theta <= t:
/// (delta g)_{s theta t} = g_{st} - g_{s theta} - g_{theta t}.
std::vector<double> delta2(const TwoIndexMap& g, std::size_t i, std::size_t th, std::size_t j);

/// Max over all grid triples of the max-norm of (delta g)_{s theta t}.
double delta2_max(const TwoIndexMap& g);

}  // namespace rpde
