#include "rpde/path.hpp"

#include <stdexcept>

namespace rpde {

Path1::Path1(TimeGrid grid, std::size_t K)
    : grid_(std::move(grid)), K_(K), data_(grid_.size() * K, 0.0) {
    if (K_ == 0) throw std::invalid_argument("Path1: K must be >= 1");
}

Path1::Path1(TimeGrid grid, std::size_t K, std::vector<double> data)
    : grid_(std::move(grid)), K_(K), data_(std::move(data)) {
    if (K_ == 0) throw std::invalid_argument("Path1: K must be >= 1");
    if (data_.size() != grid_.size() * K_)
        throw std::invalid_argument("Path1: data size must equal n_points * K");
}

}  // namespace rpde
