#include "rpde/variation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rpde {

namespace {

double entry_norm(const TwoIndexMap& g, std::size_t i, std::size_t j) {
    auto v = g.at(i, j);
    if (v.size() == 1) return std::abs(v[0]);
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

double p_variation(const TwoIndexMap& g, double p, std::size_t lo, std::size_t hi) {
    if (p < 1.0) throw std::invalid_argument("p_variation: exponent must be >= 1");
    if (!(lo <= hi && hi < g.n())) throw std::invalid_argument("p_variation: window out of range");
    if (lo == hi) return 0.0;
    // best[j] = sup over partitions of [t_lo, t_j] of sum |g|^p
    std::vector<double> best(hi - lo + 1, 0.0);
    for (std::size_t j = lo + 1; j <= hi; ++j) {
        double b = 0.0;
        for (std::size_t i = lo; i < j; ++i) {
            const double cand = best[i - lo] + std::pow(entry_norm(g, i, j), p);
            if (cand > b) b = cand;
        }
        best[j - lo] = b;
    }
    return std::pow(best[hi - lo], 1.0 / p);
}

double p_variation(const TwoIndexMap& g, double p) { return p_variation(g, p, 0, g.n() - 1); }

ControlGrid p_variation_control(const TwoIndexMap& g, double p) {
    if (p < 1.0) throw std::invalid_argument("p_variation_control: exponent must be >= 1");
    const std::size_t n = g.n();
    // |g_{ij}|^p for all pairs (dense for fast column access), then interval
    // DP over the last block: V[i][j] = max_{i <= k < j} V[i][k] + |g_{kj}|^p.
    std::vector<double> pw(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pw[i * n + j] = std::pow(entry_norm(g, i, j), p);

    ControlGrid out(g.grid());
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        row[i] = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double b = 0.0;
            const double* pj = pw.data() + j;  // pw[k*n + j]
            for (std::size_t k = i; k < j; ++k) {
                const double cand = row[k] + pj[k * n];
                if (cand > b) b = cand;
            }
            row[j] = b;
            out.ref(i, j) = b;
        }
    }
    return out;
}

}  // namespace rpde
