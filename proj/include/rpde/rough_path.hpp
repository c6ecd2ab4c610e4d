#pragma once

#include <cstddef>
#include <cstdint>

#include "rpde/control.hpp"
#include "rpde/path.hpp"
#include "rpde/two_index.hpp"
#include "rpde/variation.hpp"

namespace rpde {

/// Level-1 increments Z (K-vector entries) and level-2 tensor ZZ
/// (K x K row-major entries, first index = earlier integration time)
/// on a shared time grid, with regularity exponent alpha in (1/3, 1/2].
///
/// Chen's relations: delta Z = 0 exactly, and
/// (delta ZZ)^{kl}_{s th t} = Z^k_{s th} Z^l_{th t}.
struct RoughPath {
    double alpha = 0.0;
    std::size_t K = 0;
    TwoIndexMap Z;   // dim K
    TwoIndexMap ZZ;  // dim K*K

    const TimeGrid& grid() const { return Z.grid(); }

    RoughPath() = default;
    RoughPath(double alpha, std::size_t K, TwoIndexMap Z, TwoIndexMap ZZ);
};

/// Canonical (Stratonovich-type) lift of a piecewise-linear path:
/// Z = delta z, segment tensors 1/2 dz (x) dz, composed across segments by
/// Chen's relation. Closed-form per segment, no quadrature.
RoughPath canonical_lift(const Path1& z, double alpha = 0.5);

/// Max over grid triples of |delta ZZ_{s th t} - Z_{s th} (x) Z_{th t}| (max norm).
double chen_residual(const RoughPath& R);

/// Max over grid pairs of |sym ZZ_{st} - 1/2 Z_{st} (x) Z_{st}| (max norm).
double geometricity_defect(const RoughPath& R);

/// Bracket path [Z] with [Z]_0 = 0 and
/// delta [Z]_{st} = Z_{st} (x) Z_{st} - 2 sym ZZ_{st}, accumulated along the
/// grid; returned with K*K components per time (row-major).
Path1 bracket(const RoughPath& R);

/// Non-geometric enhancement ZZ' = ZZ - 1/2 delta(bracket); Chen relations
/// are preserved because the correction is a delta of a 1-index path.
/// bracket_path must have K*K components and vanish at time 0.
RoughPath ito_from_geometric(const RoughPath& R, const Path1& bracket_path);

/// Rough-path metric
/// |Z1_{0.} - Z2_{0.}|_inf + |Z1-Z2|_{1/alpha-var} + |ZZ1-ZZ2|_{1/(2 alpha)-var}.
double rough_metric(const RoughPath& R1, const RoughPath& R2);

/// omega_Z(s,t) = |Z|^{1/alpha}_{1/alpha-var;[s,t]} + |ZZ|^{1/(2 alpha)}_{1/(2 alpha)-var;[s,t]}
/// on every grid pair; superadditive by construction.
ControlGrid omega_Z(const RoughPath& R);

/// Canonical lift of a piecewise-linear Brownian sample on the dyadic grid
/// with 2^level + 1 points; increments are N(0, T 2^{-level}) per component,
/// deterministic given the seed.
RoughPath sample_bm_lift(std::uint64_t seed, int level, std::size_t K, double T,
                         double alpha = 0.45);

/// The Brownian sample path itself (for building coarser interpolants).
Path1 sample_bm_path(std::uint64_t seed, int level, std::size_t K, double T);

/// Piecewise-linear interpolant of p evaluated on the dyadic grid at
/// `level` (values at 2^level + 1 uniform times; p need not be dyadic).
Path1 dyadic_interpolant(const Path1& p, int level);

}  // namespace rpde
