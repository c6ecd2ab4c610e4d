#pragma once

#include <cstddef>

#include "rpde/two_index.hpp"

namespace rpde {

/// Superadditive nonnegative function on the grid simplex:
/// omega(t,t) = 0 and omega(s,th) + omega(th,t) <= omega(s,t).
class ControlGrid {
public:
    ControlGrid() = default;
    explicit ControlGrid(TimeGrid grid) : values_(std::move(grid), 1) {}

    const TimeGrid& grid() const { return values_.grid(); }
    std::size_t n() const { return values_.n(); }

    double operator()(std::size_t i, std::size_t j) const { return values_.at(i, j)[0]; }
    double& ref(std::size_t i, std::size_t j) { return values_.at(i, j)[0]; }

    /// Largest violation of superadditivity over all grid triples
    /// (positive value = violation); also flags negative entries.
    double superadditivity_defect() const;
    bool is_valid(double tol = 0.0) const { return superadditivity_defect() <= tol; }

    /// Pointwise sum and positive scaling preserve superadditivity.
    ControlGrid& operator+=(const ControlGrid& other);
    ControlGrid& operator*=(double c);

    /// omega^a entrywise; superadditive for a >= 1.
    ControlGrid pow(double a) const;

private:
    TwoIndexMap values_;
};

}  // namespace rpde
