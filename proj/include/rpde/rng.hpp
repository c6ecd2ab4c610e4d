#pragma once

#include <cstdint>
#include <random>

namespace rpde {

/// Deterministic gaussian stream: mt19937_64 raw output mapped to (0,1)
/// uniforms and Box-Muller, so the same seed gives the same doubles on
/// every platform (std::normal_distribution is implementation-defined).
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {
        // 53-bit mantissa uniform in (0,1); never exactly 0
        return (double(eng_() >> 11) + 0.5) * 0x1p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace rpde
