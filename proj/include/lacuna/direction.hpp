#ifndef LACUNA_DIRECTION_HPP
#define LACUNA_DIRECTION_HPP

#include <map>
#include <string>
#include <vector>

#include "lacuna/rational.hpp"

namespace lacuna {

/// A nonzero vector in R^n. Float coordinates are always present; exact
/// rational coordinates are carried alongside in rational mode (the float
/// mirror is then derived from them).
struct Direction {
    std::vector<double> x;
    std::vector<Rational> rx;   // empty in float mode

    Direction() = default;
    explicit Direction(std::vector<double> coords) : x(std::move(coords)) {}
    explicit Direction(std::vector<Rational> coords) : rx(std::move(coords)) {
        x.resize(rx.size());
        for (size_t i = 0; i < rx.size(); ++i) x[i] = rx[i].to_double();
    }

    int dim() const { return static_cast<int>(x.size()); }
    bool is_rational() const { return !rx.empty(); }

    double norm() const;
    /// Scale to unit Euclidean norm (drops exact coordinates).
    Direction normalized_unit() const;
    /// Divide by the coordinate of largest magnitude; exact in rational mode.
    Direction normalized_projective() const;
};

struct DirectionSet {
    int n = 0;
    bool rational_mode = false;
    std::vector<Direction> dirs;

    size_t size() const { return dirs.size(); }
    bool empty() const { return dirs.empty(); }
    const Direction& operator[](size_t i) const { return dirs[i]; }
};

/// Index pair sigma = (j,k), 0-based with j < k.
struct SigmaPair {
    int j = 0;
    int k = 1;
    auto operator<=>(const SigmaPair&) const = default;
};

/// All pairs (j,k), 0 <= j < k < d, lexicographic.
std::vector<SigmaPair> all_sigma_pairs(int d);

double dot(const Direction& w, const std::vector<double>& v);

/// Two directions equal as points of the sphere-of-rays representation used
/// throughout: exact coordinate equality in rational mode (after projective
/// normalization), chordal distance <= tol on unit representatives in float
/// mode.
bool same_direction(const Direction& a, const Direction& b, double tol = 1e-12);

/// Number of pairwise-distinct directions in the set.
size_t distinct_count(const DirectionSet& ds, double tol = 1e-12);

/// Split by the sign pattern of the coordinates; zeros count as '+'.
/// Keys are strings over {'+','-'} of length n.
std::map<std::string, DirectionSet> octant_split(const DirectionSet& omega);

/// Shadow of omega on the subspace spanned by the orthonormal rows of
/// plane_basis (m rows of length n). The result lives in the coordinates of
/// that basis (dimension m). Directions perpendicular to the subspace are
/// dropped; duplicates are coalesced (exactly in the rational path, which is
/// taken when the basis rows are signed standard unit vectors; within 1e-10
/// chordal tolerance otherwise).
DirectionSet shadow(const DirectionSet& omega,
                    const std::vector<std::vector<double>>& plane_basis);

} // namespace lacuna

#endif
