#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rpde/control.hpp"
#include "rpde/path.hpp"
#include "rpde/two_index.hpp"

namespace rpde {

/// Germ callback: writes the dim components of B_{st} into out.
using Germ = std::function<void(double s, double t, std::span<double> out)>;

/// Raised when dyadic refinement has not converged by max_level; carries the
/// last two iterates of the reconstructed path.
class NonConvergentGerm : public std::runtime_error {
public:
    NonConvergentGerm(Path1 prev, Path1 last, double diff)
        : std::runtime_error("rough_integral: no convergence by max_level"),
          previous_iterate(std::move(prev)),
          last_iterate(std::move(last)),
          last_difference(diff) {}

    Path1 previous_iterate;
    Path1 last_iterate;
    double last_difference;
};

struct SewingResult {
    Path1 integral;                        // I_t with I_0 = 0; I(B)_{st} = I_t - I_s
    int levels_used = 0;                   // finest dyadic level evaluated
    std::vector<double> level_differences; // max-norm map difference per level
};

/// Rough integral of a germ by dyadic refinement: the limit over partition
/// refinements of sum B_{t_i t_{i+1}}, per base-grid interval. Refinement
/// stops when two successive levels differ by < tol in max-norm over grid
/// pairs; tol <= 0 selects 1e-9 x (level-0 scale of B).
SewingResult rough_integral(const Germ& germ, std::size_t dim, const TimeGrid& grid, double tol,
                            int max_level);

/// Exactly additive 2-index map built from the integral path.
TwoIndexMap increments_of(const Path1& p);

/// Lambda_{st} = B_{st} - I(B)_{st} on base grid pairs; satisfies
/// delta Lambda = delta B up to the integration tolerance.
TwoIndexMap lambda_map(const Germ& germ, std::size_t dim, const TimeGrid& grid, double tol,
                       int max_level);

/// Rough Gronwall bound evaluated at grid times with tau = min(L, (2 e^2)^(-kappa)):
///   t -> 2 exp(omega(0,T)/tau) [G0 + sup_{r<=t} |phi(0,r)| exp(-omega(0,r)/tau)].
/// phi may be null (treated as 0). Values may saturate to +inf for large
/// omega(0,T)/tau; comparisons against the bound remain valid.
Path1 gronwall_bound(double G0, const ControlGrid& omega, const TwoIndexMap* phi, double kappa,
                     double L);

}  // namespace rpde
