#ifndef LACUNA_GENERATORS_HPP
#define LACUNA_GENERATORS_HPP

#include <array>
#include <optional>
#include <vector>

#include "lacuna/certificate.hpp"

namespace lacuna {

// ---------------------------------------------------------------------------
// Direction families
// ---------------------------------------------------------------------------

/// Direction set together with the dissection that certifies it.
struct GeneratedFamily {
    DirectionSet directions;
    LacunaryCertificate certificate;
};

/// Directions (v_i^{a_1}, ..., v_i^{a_n}) for i = 1..count, v the given
/// lacunary sequence, 0 < a_1 < ... < a_n, normalized to unit length.
/// The certificate dissects with theta_{sigma,i} = ratio of the stored
/// coordinates, which is the canonical v_i^{a_k - a_j} evaluated with the
/// exact same floating expressions the partition sees.
GeneratedFamily nsw_directions(const std::vector<double>& exponents,
                               const LacunarySequence& vartheta, int count);

/// All tuples (2^{k_1}, ..., 2^{k_n}) for k_j in [k_min, k_max], exact
/// rational mode, projectively normalized. Certificate of order
/// dim span - 1 via iterated dyadic dissections with span-adapted bases.
GeneratedFamily carbery_directions(int n, int k_min, int k_max);

/// Enumeration of Q in [1/2, 2/3] by increasing denominator, then numerator
/// (reduced fractions).
std::vector<Rational> slope_rationals(int count);

/// First construction of the concluding remarks: w_1 = q_l * w_2,
/// w_j = 2^{-j l} for 1 < j < n, unit norm, positive last coordinate.
DirectionSet rational_slope_set(int n, int count);

/// Second construction: directions accumulating at e_n' = (-delta e_2 + e_n)/|.|
/// whose projections onto span(e_1, e_2') have the enumerated rational slopes.
/// Consecutive members satisfy, by construction: the angle to e_n' at least
/// halves; (w.e_n')/(w.e_2') at least doubles; and every coordinate-pair ratio
/// |w.e_k|/|w.e_j|, (j,k) != (2,n), changes by at least a factor 2 in a fixed
/// per-pair sense, so all those segments land in distinct dyadic bands.
struct RotatedFamily {
    DirectionSet directions;
    std::vector<double> e2_prime;
    std::vector<double> en_prime;
};
RotatedFamily rotated_accumulating_set(int n, int count, double delta = 0.1);

// ---------------------------------------------------------------------------
// Rectangle families and Kakeya lifts
// ---------------------------------------------------------------------------

struct Rectangle2D {
    double cx = 0, cy = 0;        // center, plane coordinates
    double dir_x = 0, dir_y = 1;  // unit long-axis direction
    double length = 1;
    double width = 1;

    double diam() const;
    /// Corners of the (scale * length) x width rectangle, counterclockwise.
    std::array<std::array<double, 2>, 4> corners(double length_scale = 1.0) const;
};

struct RectangleFamily {
    std::vector<Rectangle2D> rectangles;
    std::vector<std::vector<double>> plane_basis;  // two orthonormal rows in R^n
    int levels = 0;                                // N
};

struct KakeyaLift {
    RectangleFamily family;
    double alpha = 0;                       // transverse cross-section side
    std::vector<double> betas;              // per rectangle
    std::vector<int> shading;               // index into omega, per rectangle
    std::vector<std::vector<double>> basis; // n orthonormal rows, first two = plane
};

struct BesicovitchOptions {
    /// Kept fraction per merge; the translation of the right half of a node of
    /// base width B is -(1 - alpha) * B. Tuned so the measured union decays
    /// like 1/N over the sweep range.
    double alpha = 0.0;   // <= 0 means use the default rule for the given N
    double anchor_width = 1.0 / 6.0;
};

double besicovitch_default_alpha(int levels);

/// Perron-tree family: 2^N unit-length rectangles of width 2^{-N}, long axes
/// along the given slopes (dx per unit dy; defaults to a uniform spread of
/// [1/2, 2/3]), base anchors translated by the standard bisection-and-overlap
/// scheme.
RectangleFamily besicovitch_family(int levels,
                                   std::vector<std::vector<double>> plane_basis,
                                   const std::optional<std::vector<double>>& slopes = {},
                                   const BesicovitchOptions& opts = {});

/// Product lift E_N = union of R x [0, alpha]^{n-2}: matches each rectangle
/// with a direction of omega whose 2-shadow points along it (within
/// angle_tol), sets beta(R) = diam(R) / |(w_1, w_2)| and alpha = 10 max beta.
KakeyaLift kakeya_lift(const RectangleFamily& family, const DirectionSet& omega,
                       std::vector<std::vector<double>> ambient_basis,
                       double angle_tol = 1e-6);

/// Certificate for a one-direction set.
LacunaryCertificate singleton_certificate();

} // namespace lacuna

#endif
