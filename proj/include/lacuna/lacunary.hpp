#ifndef LACUNA_LACUNARY_HPP
#define LACUNA_LACUNARY_HPP

#include <map>
#include <optional>
#include <vector>

#include "lacuna/direction.hpp"

namespace lacuna {

/// Segment index i in Z union {infinity}.
struct SegmentIndex {
    long long i = 0;
    bool infinite = false;

    static SegmentIndex inf() { return {0, true}; }
    static SegmentIndex at(long long v) { return {v, false}; }
    auto operator<=>(const SegmentIndex&) const = default;
    std::string to_string() const { return infinite ? "inf" : std::to_string(i); }
};

/// A positive decreasing sequence theta_i, i in Z, with theta_{i+1} <= lambda * theta_i,
/// 0 < lambda < 1. Stored either in closed form (geometric scale*ratio^i) or as a
/// finite table extended geometrically with ratio lambda on both sides, so theta()
/// and index lookups are total on Z.
class LacunarySequence {
public:
    enum class Kind { Geometric, Table };

    static LacunarySequence geometric(double scale, double ratio);
    static LacunarySequence table(long long first_index, std::vector<double> values,
                                  double lambda);

    Kind kind() const { return kind_; }
    double lambda() const { return lambda_; }
    double scale() const { return scale_; }
    double ratio() const { return ratio_; }
    long long first_index() const { return first_; }
    const std::vector<double>& values() const { return values_; }

    double theta(long long i) const;

    /// Unique finite i with theta_{i+1} < t <= theta_i, raw double comparisons.
    long long index_of(double t) const;
    /// Same bands, but every comparison against theta_i is exact.
    long long index_of_exact(const Rational& t) const;

    /// Smallest ratio theta_{i+1}/theta_i over the represented range (and the
    /// extrapolation ratio).
    double min_ratio() const;

    /// Interleave geometric means until consecutive ratios are >= 2/3. The
    /// input values survive as a subsequence; the output lambda is the largest
    /// ratio actually achieved (capped below 1).
    LacunarySequence refined() const;

private:
    LacunarySequence() = default;
    void validate() const;

    Kind kind_ = Kind::Geometric;
    double lambda_ = 0.5;
    double scale_ = 1.0;    // geometric
    double ratio_ = 0.5;    // geometric
    long long first_ = 0;   // table
    std::vector<double> values_;
};

/// Orthonormal basis (rows) of R^n plus one lacunary sequence per sigma in
/// Sigma(d); d is the number of basis rows the sequences refer to.
struct Dissection {
    std::vector<std::vector<double>> basis;   // n rows of length n
    std::vector<SigmaPair> sigmas;
    std::vector<LacunarySequence> sequences;  // parallel to sigmas

    int n() const { return static_cast<int>(basis.size()); }
    const LacunarySequence& sequence_for(const SigmaPair& s) const;

    /// Identity basis, the same sequence for every pair of Sigma(d).
    static Dissection uniform(int n, int d, const LacunarySequence& seq);
};

struct Segment {
    SigmaPair sigma;
    SegmentIndex index;
    DirectionSet members;
};

/// Index of omega in the sigma-partition: infinity when a basis component
/// vanishes, else the unique dyadic-band index of |w_k / w_j|. Components are
/// taken against the basis rows; the exact path is used for rational
/// directions against signed-unit bases.
SegmentIndex segment_index(const Direction& omega, const SigmaPair& sigma,
                           const LacunarySequence& seq,
                           const std::vector<std::vector<double>>& basis);

/// Partition of omega into segments for one sigma; empty segments omitted.
/// Asserts the partition property (disjoint cover) by construction.
std::map<SegmentIndex, Segment> partition(const DirectionSet& omega,
                                          const SigmaPair& sigma,
                                          const LacunarySequence& seq,
                                          const std::vector<std::vector<double>>& basis);

using CellIndex = std::vector<SegmentIndex>;  // one entry per sigma of the dissection

/// Cells: intersections over all sigma of the dissection's segments.
/// Only nonempty cells are returned.
std::map<CellIndex, DirectionSet> cells(const DirectionSet& omega, const Dissection& d);

/// refine_sequence of the spec.
LacunarySequence refine_sequence(const LacunarySequence& seq);

} // namespace lacuna

#endif
