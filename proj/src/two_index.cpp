#include "rpde/two_index.hpp"

#include <cmath>
#include <stdexcept>

namespace rpde {

TwoIndexMap::TwoIndexMap(TimeGrid grid, std::size_t dim)
    : grid_(std::move(grid)), dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("TwoIndexMap: dim must be >= 1");
    const std::size_t np = grid_.size() * (grid_.size() + 1) / 2;
    data_.assign(np * dim_, 0.0);
}

TwoIndexMap delta1(const Path1& p) {
    if (p.grid().size() < 2) throw std::invalid_argument("delta1: need at least 2 grid points");
    TwoIndexMap out(p.grid(), p.K());
    const std::size_t n = p.grid().size();
    for (std::size_t i = 0; i < n; ++i) {
        auto pi = p.value(i);
        for (std::size_t j = i; j < n; ++j) {
            auto pj = p.value(j);
            auto o = out.at(i, j);
            for (std::size_t k = 0; k < p.K(); ++k) o[k] = pj[k] - pi[k];
        }
    }
    return out;
}

std::vector<double> delta2(const TwoIndexMap& g, std::size_t i, std::size_t th, std::size_t j) {
    if (!(i <= th && th <= j && j < g.n()))
        throw std::invalid_argument("delta2: indices must satisfy i <= th <= j < n");
    auto gst = g.at(i, j);
    auto gsth = g.at(i, th);
    auto gtht = g.at(th, j);
    std::vector<double> out(g.dim());
    for (std::size_t c = 0; c < g.dim(); ++c) out[c] = gst[c] - gsth[c] - gtht[c];
    return out;
}

double delta2_max(const TwoIndexMap& g) {
    double m = 0.0;
    const std::size_t n = g.n();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t th = i; th < n; ++th) {
            auto gsth = g.at(i, th);
            for (std::size_t j = th; j < n; ++j) {
                auto gst = g.at(i, j);
                auto gtht = g.at(th, j);
                for (std::size_t c = 0; c < g.dim(); ++c) {
                    const double v = std::abs(gst[c] - gsth[c] - gtht[c]);
                    if (v > m) m = v;
                }
            }
        }
    }
    return m;
}

}  // namespace rpde
