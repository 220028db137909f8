#ifndef LACUNA_LIFT_EVAL_HPP
#define LACUNA_LIFT_EVAL_HPP

#include "lacuna/generators.hpp"
#include "lacuna/grid.hpp"
#include "lacuna/maximal.hpp"

namespace lacuna {

// The lifted sets E_N = union R x [0, alpha]^{n-2} can be astronomically
// anisotropic: alpha = 10 max diam(R)/|w_12| blows up as the shading
// directions approach the plane's normal. A uniform grid cannot hold that
// box, so evaluation happens in a rescaled frame: x' = (x_1, x_2, kappa x_3)
// with kappa chosen to fit the grid, directions mapped to S w / |S w|. For
// the continuum operator this reparametrization is exact:
// M_{S omega} [chi_{S E}](S x) = M_omega [chi_E](x), because a centered line
// average is invariant under affine reparametrization of the line.

/// Scaled lift bound to a concrete grid, n = 3.
struct ScaledLift {
    // plane factor: chi of union R sampled at grid points
    int nx = 0, ny = 0;
    double h = 1.0;
    double ox = 0.0, oy = 0.0;
    std::vector<double> chi2d;

    // transverse factor
    int nt = 0;
    double ot = 0.0;             // transverse origin
    double depth = 0.0;          // scaled alpha (transverse support [0, depth])
    std::vector<double> profile; // 0/1 at grid points

    double kappa = 0.0;
    DirectionSet dirs;           // scaled unit directions, order of the input omega
    KakeyaLift lift;             // original descriptor (true alpha, betas)
};

struct LiftGridSpec {
    int plane_res = 512;
    int trans_cells = 16;
    double plane_margin = 0.15;  // fraction of the bbox extent
    int trans_margin_cells = 3;
};

/// Bind a lift and the direction set that will drive the maximal operator to
/// a grid. The plane window covers union 3R plus margin.
ScaledLift build_scaled_lift(const KakeyaLift& lift, const DirectionSet& omega,
                             const LiftGridSpec& spec = {});

/// Product-structure fast path for M_omega chi_{E'} on the scaled grid;
/// agrees with directional_maximal on the materialized grid up to floating
/// reassociation (the trilinear weights factor exactly).
GridFunction lift_maximal(const ScaledLift& sl);
GridFunction lift_maximal(const ScaledLift& sl, const RadiusSet& radii);

/// chi as an ordinary 3D grid function (for tests and export; 512^2 x 16
/// doubles is affordable, larger plane resolutions are not).
GridFunction materialize_chi(const ScaledLift& sl);

double lift_chi_lp_norm(const ScaledLift& sl, double p);

/// |M chi|_p / |chi|_p on the scaled grid.
double lift_norm_ratio(const ScaledLift& sl, const GridFunction& m, double p);

/// Min of m over the dilated region union 3R x [3 beta', depth - 3 beta']
/// (beta' = kappa beta(R), per rectangle), grid points strictly inside with
/// the given cell inset. Returns the minimum and the number of points seen.
std::pair<double, size_t> lift_region_min(const ScaledLift& sl, const GridFunction& m,
                                          double inset_cells = 1.0);

} // namespace lacuna

#endif
