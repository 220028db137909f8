#ifndef LACUNA_GRID_HPP
#define LACUNA_GRID_HPP

#include <string>
#include <vector>

namespace lacuna {

/// Sampled function on a regular n-dimensional grid. Data is row-major with
/// the last axis fastest. Everything outside the grid counts as zero.
struct GridFunction {
    int n = 0;
    std::vector<int> dims;
    double h = 1.0;
    std::vector<double> origin;
    std::vector<double> data;

    static GridFunction zeros(std::vector<int> dims, double h,
                              std::vector<double> origin = {});

    size_t total() const;
    size_t flat(const std::vector<int>& idx) const;
    std::vector<int> unflat(size_t f) const;
    std::vector<double> point(const std::vector<int>& idx) const;

    double& at(const std::vector<int>& idx) { return data[flat(idx)]; }
    double at(const std::vector<int>& idx) const { return data[flat(idx)]; }

    /// Multilinear interpolation at an arbitrary point, zero outside.
    double interpolate(const double* pos) const;

    /// Euclidean diameter of the index box.
    double diameter() const;

    void validate() const;
};

/// Finite increasing radii; the default discretizes sup_{r>0} dyadically.
struct RadiusSet {
    std::vector<double> radii;

    /// h * 2^m for m = 0,1,... up to half the domain diameter (at least one).
    static RadiusSet dyadic(const GridFunction& f);
    static RadiusSet explicit_list(std::vector<double> rs);
};

/// Binary format: magic "LACGRID1", u32 n, u32 dims[n], f64 spacing,
/// f64 origin[n], f64 data row-major, all little-endian.
void write_grid(const GridFunction& f, const std::string& path);
GridFunction read_grid(const std::string& path);

} // namespace lacuna

#endif
