#ifndef LACUNA_MAXIMAL_HPP
#define LACUNA_MAXIMAL_HPP

#include "lacuna/direction.hpp"
#include "lacuna/grid.hpp"

namespace lacuna {

// Discrete maximal operators. All of them share one sampling rule: line
// samples at step h by multilinear interpolation with zero extension, window
// sums accumulated ring by ring (ring k contributes the sample at -k h then
// at +k h), radii in increasing order, directions in the given order, max
// accumulated over (direction, radius). Parallelism is over output points
// only, so results are independent of the thread count.

/// Centered 1D window maxima along one axis (Hardy-Littlewood style).
/// Identical sampling to directional_maximal with the single direction
/// e_axis, and bit-identical to it.
GridFunction hl_1d(const GridFunction& f, int axis, const RadiusSet& radii);
GridFunction hl_1d(const GridFunction& f, int axis);

/// Iterated hl_1d over axes 0..n-1 in that fixed order; dominates the strong
/// maximal function.
GridFunction strong_maximal(const GridFunction& f);
GridFunction strong_maximal(const GridFunction& f, const RadiusSet& radii);

/// sup over directions and radii of centered line averages.
GridFunction directional_maximal(const GridFunction& f, const DirectionSet& omega,
                                 const RadiusSet& radii);

/// Reference implementation: same contract, naive loops, no reuse between
/// radii; bit-identical accumulation order. Guarded to <= 10^6 cells.
GridFunction brute_oracle(const GridFunction& f, const DirectionSet& omega,
                          const RadiusSet& radii);

/// sup over tubes (rasterized averages over rotated boxes with centers on the
/// grid lattice and the evaluation point inside).
GridFunction tube_maximal(const GridFunction& f, const DirectionSet& omega,
                          const std::vector<double>& lengths,
                          const std::vector<double>& widths);

/// (sum |result|^p h^n)^(1/p) / (sum |f|^p h^n)^(1/p).
double norm_ratio(const GridFunction& f, const GridFunction& result, double p);

double lp_norm(const GridFunction& f, double p);

} // namespace lacuna

#endif
