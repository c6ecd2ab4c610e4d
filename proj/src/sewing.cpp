#include "rpde/sewing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rpde {

namespace {

// Level-L sum of the germ over [a, b] split into 2^L equal parts.
void level_sum(const Germ& germ, double a, double b, int level, std::span<double> acc,
               std::span<double> tmp) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const std::size_t parts = std::size_t(1) << level;
    for (std::size_t j = 0; j < parts; ++j) {
        const double s = a + (b - a) * double(j) / double(parts);
        const double t = a + (b - a) * double(j + 1) / double(parts);
        germ(s, t, tmp);
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += tmp[c];
    }
}

Path1 accumulate_path(const TimeGrid& grid, std::size_t dim, const std::vector<double>& sums) {
    Path1 I(grid, dim);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        for (std::size_t c = 0; c < dim; ++c) I.at(i + 1, c) = I.at(i, c) + sums[i * dim + c];
    return I;
}

// Max over grid pairs of the max-norm of the increment-map difference
// between two per-interval sum vectors: per component, max minus min of the
// prefix sums of the interval differences.
double map_difference(const std::vector<double>& a, const std::vector<double>& b,
                      std::size_t n_intervals, std::size_t dim) {
    double worst = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        double prefix = 0.0, lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < n_intervals; ++i) {
            prefix += a[i * dim + c] - b[i * dim + c];
            lo = std::min(lo, prefix);
            hi = std::max(hi, prefix);
        }
        worst = std::max(worst, hi - lo);
    }
    return worst;
}

}  // namespace

SewingResult rough_integral(const Germ& germ, std::size_t dim, const TimeGrid& grid, double tol,
                            int max_level) {
    if (dim == 0) throw std::invalid_argument("rough_integral: dim must be >= 1");
    if (max_level < 1) throw std::invalid_argument("rough_integral: max_level must be >= 1");
    const std::size_t n_int = grid.size() - 1;

    std::vector<double> tmp(dim), acc(dim);
    std::vector<double> prev(n_int * dim), cur(n_int * dim);

    for (std::size_t i = 0; i < n_int; ++i) {
        germ(grid[i], grid[i + 1], tmp);
        for (std::size_t c = 0; c < dim; ++c) prev[i * dim + c] = tmp[c];
    }
    if (tol <= 0.0) {
        double scale = 0.0;
        for (double v : prev) scale = std::max(scale, std::abs(v));
        tol = 1e-9 * std::max(scale, 1e-300);
    }

    SewingResult res;
    for (int level = 1; level <= max_level; ++level) {
        for (std::size_t i = 0; i < n_int; ++i)
            level_sum(germ, grid[i], grid[i + 1], level, {cur.data() + i * dim, dim}, tmp);
        const double d = map_difference(cur, prev, n_int, dim);
        res.level_differences.push_back(d);
        res.levels_used = level;
        if (d < tol) {
            res.integral = accumulate_path(grid, dim, cur);
            return res;
        }
        std::swap(prev, cur);
    }
    throw NonConvergentGerm(accumulate_path(grid, dim, cur), accumulate_path(grid, dim, prev),
                            res.level_differences.back());
}

TwoIndexMap increments_of(const Path1& p) { return delta1(p); }

TwoIndexMap lambda_map(const Germ& germ, std::size_t dim, const TimeGrid& grid, double tol,
                       int max_level) {
    SewingResult res = rough_integral(germ, dim, grid, tol, max_level);
    TwoIndexMap out(grid, dim);
    std::vector<double> tmp(dim);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto Ii = res.integral.value(i);
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            auto Ij = res.integral.value(j);
            germ(grid[i], grid[j], tmp);
            auto o = out.at(i, j);
            for (std::size_t c = 0; c < dim; ++c) o[c] = tmp[c] - (Ij[c] - Ii[c]);
        }
    }
    return out;
}

Path1 gronwall_bound(double G0, const ControlGrid& omega, const TwoIndexMap* phi, double kappa,
                     double L) {
    if (!(kappa > 0.0)) throw std::invalid_argument("gronwall_bound: kappa must be positive");
    if (!(L > 0.0)) throw std::invalid_argument("gronwall_bound: L must be positive");
    if (phi && phi->dim() != 1)
        throw std::invalid_argument("gronwall_bound: phi must be scalar");
    if (phi && !(phi->grid() == omega.grid()))
        throw std::invalid_argument("gronwall_bound: phi/omega grid mismatch");

    // tau = L /\ (2 e^2)^{-kappa}, taken verbatim from the lemma's proof.
    const double tau = std::min(L, std::pow(2.0 * std::exp(2.0), -kappa));
    const std::size_t n = omega.n();
    const double factor = 2.0 * std::exp(omega(0, n - 1) / tau);

    Path1 out(omega.grid(), 1);
    double running = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (phi) {
            const double v = std::abs(phi->at(0, i)[0]) * std::exp(-omega(0, i) / tau);
            running = std::max(running, v);
        }
        out.at(i, 0) = factor * (G0 + running);
    }
    return out;
}

}  // namespace rpde
