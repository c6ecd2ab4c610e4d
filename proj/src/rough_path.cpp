#include "rpde/rough_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rpde/rng.hpp"

namespace rpde {

RoughPath::RoughPath(double alpha_, std::size_t K_, TwoIndexMap Z_, TwoIndexMap ZZ_)
    : alpha(alpha_), K(K_), Z(std::move(Z_)), ZZ(std::move(ZZ_)) {
    if (!(alpha > 1.0 / 3.0 && alpha <= 0.5))
        throw std::invalid_argument("RoughPath: alpha must lie in (1/3, 1/2]");
    if (K == 0) throw std::invalid_argument("RoughPath: K must be >= 1");
    if (Z.dim() != K || ZZ.dim() != K * K)
        throw std::invalid_argument("RoughPath: dimension mismatch");
    if (!(Z.grid() == ZZ.grid())) throw std::invalid_argument("RoughPath: grid mismatch");
}

RoughPath canonical_lift(const Path1& z, double alpha) {
    if (z.grid().size() < 2) throw std::invalid_argument("canonical_lift: need at least 2 grid points");
    const std::size_t n = z.grid().size();
    const std::size_t K = z.K();

    TwoIndexMap Z = delta1(z);
    TwoIndexMap ZZ(z.grid(), K * K);

    // ZZ_{s,t_{j+1}} = ZZ_{s,t_j} + 1/2 dz (x) dz + Z_{s,t_j} (x) dz
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j + 1 < n; ++j) {
            auto cur = ZZ.at(i, j);
            auto next = ZZ.at(i, j + 1);
            auto Zsj = Z.at(i, j);
            auto dz = Z.at(j, j + 1);
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t l = 0; l < K; ++l)
                    next[k * K + l] = cur[k * K + l] + 0.5 * dz[k] * dz[l] + Zsj[k] * dz[l];
        }
    }
    return RoughPath(alpha, K, std::move(Z), std::move(ZZ));
}

double chen_residual(const RoughPath& R) {
    const std::size_t n = R.grid().size();
    const std::size_t K = R.K;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t th = i; th < n; ++th) {
            auto Zsth = R.Z.at(i, th);
            auto ZZsth = R.ZZ.at(i, th);
            for (std::size_t j = th; j < n; ++j) {
                auto Ztht = R.Z.at(th, j);
                auto ZZst = R.ZZ.at(i, j);
                auto ZZtht = R.ZZ.at(th, j);
                for (std::size_t k = 0; k < K; ++k)
                    for (std::size_t l = 0; l < K; ++l) {
                        const double d = ZZst[k * K + l] - ZZsth[k * K + l] - ZZtht[k * K + l] -
                                         Zsth[k] * Ztht[l];
                        worst = std::max(worst, std::abs(d));
                    }
            }
        }
    }
    return worst;
}

double geometricity_defect(const RoughPath& R) {
    const std::size_t n = R.grid().size();
    const std::size_t K = R.K;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto Zs = R.Z.at(i, j);
            auto ZZs = R.ZZ.at(i, j);
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t l = 0; l < K; ++l) {
                    const double sym = 0.5 * (ZZs[k * K + l] + ZZs[l * K + k]);
                    worst = std::max(worst, std::abs(sym - 0.5 * Zs[k] * Zs[l]));
                }
        }
    return worst;
}

Path1 bracket(const RoughPath& R) {
    const std::size_t n = R.grid().size();
    const std::size_t K = R.K;
    Path1 out(R.grid(), K * K);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        auto cur = out.value(j);
        auto next = out.value(j + 1);
        auto dz = R.Z.at(j, j + 1);
        auto zz = R.ZZ.at(j, j + 1);
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t l = 0; l < K; ++l) {
                const double sym = 0.5 * (zz[k * K + l] + zz[l * K + k]);
                next[k * K + l] = cur[k * K + l] + dz[k] * dz[l] - 2.0 * sym;
            }
    }
    return out;
}

RoughPath ito_from_geometric(const RoughPath& R, const Path1& bracket_path) {
    if (!(bracket_path.grid() == R.grid()))
        throw std::invalid_argument("ito_from_geometric: grid mismatch");
    if (bracket_path.K() != R.K * R.K)
        throw std::invalid_argument("ito_from_geometric: bracket must have K*K components");
    for (std::size_t c = 0; c < bracket_path.K(); ++c)
        if (bracket_path.at(0, c) != 0.0)
            throw std::invalid_argument("ito_from_geometric: bracket must vanish at time 0");

    const std::size_t n = R.grid().size();
    TwoIndexMap ZZ = R.ZZ;
    for (std::size_t i = 0; i < n; ++i) {
        auto bi = bracket_path.value(i);
        for (std::size_t j = i; j < n; ++j) {
            auto bj = bracket_path.value(j);
            auto zz = ZZ.at(i, j);
            for (std::size_t c = 0; c < R.K * R.K; ++c) zz[c] -= 0.5 * (bj[c] - bi[c]);
        }
    }
    return RoughPath(R.alpha, R.K, R.Z, std::move(ZZ));
}

double rough_metric(const RoughPath& R1, const RoughPath& R2) {
    if (!(R1.grid() == R2.grid()) || R1.K != R2.K || R1.alpha != R2.alpha)
        throw std::invalid_argument("rough_metric: incompatible rough paths");
    const std::size_t n = R1.grid().size();
    const std::size_t K = R1.K;

    double sup0 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        auto a = R1.Z.at(0, j);
        auto b = R2.Z.at(0, j);
        double s = 0.0;
        for (std::size_t k = 0; k < K; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
        sup0 = std::max(sup0, std::sqrt(s));
    }

    TwoIndexMap dZ(R1.grid(), K), dZZ(R1.grid(), K * K);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto a = R1.Z.at(i, j);
            auto b = R2.Z.at(i, j);
            auto o = dZ.at(i, j);
            for (std::size_t k = 0; k < K; ++k) o[k] = a[k] - b[k];
            auto aa = R1.ZZ.at(i, j);
            auto bb = R2.ZZ.at(i, j);
            auto oo = dZZ.at(i, j);
            for (std::size_t c = 0; c < K * K; ++c) oo[c] = aa[c] - bb[c];
        }
    return sup0 + p_variation(dZ, 1.0 / R1.alpha) + p_variation(dZZ, 1.0 / (2.0 * R1.alpha));
}

ControlGrid omega_Z(const RoughPath& R) {
    ControlGrid a = p_variation_control(R.Z, 1.0 / R.alpha);
    ControlGrid b = p_variation_control(R.ZZ, 1.0 / (2.0 * R.alpha));
    a += b;
    return a;
}

Path1 sample_bm_path(std::uint64_t seed, int level, std::size_t K, double T) {
    if (level < 1) throw std::invalid_argument("sample_bm_path: level must be >= 1");
    const std::size_t n = (std::size_t(1) << level) + 1;
    const double sd = std::sqrt(T / double(n - 1));
    GaussianRng rng(seed);
    Path1 z(TimeGrid::dyadic(T, level), K);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < K; ++k) z.at(i, k) = z.at(i - 1, k) + sd * rng.gaussian();
    return z;
}

RoughPath sample_bm_lift(std::uint64_t seed, int level, std::size_t K, double T, double alpha) {
    return canonical_lift(sample_bm_path(seed, level, K, T), alpha);
}

Path1 dyadic_interpolant(const Path1& p, int level) {
    if (level < 0) throw std::invalid_argument("dyadic_interpolant: level must be >= 0");
    const double T = p.grid().T();
    TimeGrid g = TimeGrid::dyadic(T, level);
    Path1 out(g, p.K());
    const auto& src = p.grid();
    std::size_t seg = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double t = g[i];
        while (seg + 2 < src.size() && src[seg + 1] <= t) ++seg;
        const double t0 = src[seg], t1 = src[seg + 1];
        const double w = std::clamp((t - t0) / (t1 - t0), 0.0, 1.0);
        for (std::size_t k = 0; k < p.K(); ++k)
            out.at(i, k) = (1.0 - w) * p.at(seg, k) + w * p.at(seg + 1, k);
    }
    return out;
}

}  // namespace rpde
