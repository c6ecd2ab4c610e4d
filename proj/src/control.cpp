#include "rpde/control.hpp"

#include <cmath>
#include <stdexcept>

namespace rpde {

double ControlGrid::superadditivity_defect() const {
    double worst = 0.0;
    const std::size_t m = n();
    for (std::size_t i = 0; i < m; ++i) {
        if ((*this)(i, i) != 0.0) worst = std::max(worst, std::abs((*this)(i, i)));
        for (std::size_t th = i; th < m; ++th) {
            const double left = (*this)(i, th);
            if (left < 0.0) worst = std::max(worst, -left);
            for (std::size_t j = th; j < m; ++j) {
                const double v = left + (*this)(th, j) - (*this)(i, j);
                if (v > worst) worst = v;
            }
        }
    }
    return worst;
}

ControlGrid& ControlGrid::operator+=(const ControlGrid& other) {
    if (!(grid() == other.grid())) throw std::invalid_argument("ControlGrid: grid mismatch");
    auto a = values_.data();
    auto b = other.values_.data();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return *this;
}

ControlGrid& ControlGrid::operator*=(double c) {
    if (c < 0.0) throw std::invalid_argument("ControlGrid: scale must be nonnegative");
    for (auto& v : values_.data()) v *= c;
    return *this;
}

ControlGrid ControlGrid::pow(double a) const {
    if (a < 1.0) throw std::invalid_argument("ControlGrid::pow: exponent must be >= 1");
    ControlGrid out(grid());
    const std::size_t m = n();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) out.ref(i, j) = std::pow((*this)(i, j), a);
    return out;
}

}  // namespace rpde
